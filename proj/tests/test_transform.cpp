#include <doctest.h>

#include <cmath>
#include <dunkl/error.hpp>
#include <dunkl/special_functions.hpp>
#include <dunkl/transform.hpp>
#include <numbers>

using namespace dunkl;

namespace {
double gauss(double x) { return std::exp(-0.5 * x * x); }
}  // namespace

TEST_CASE("Gaussian is a fixed point") {
  for (double k : {0.0, 0.3, 1.0, 2.5}) {
    const MultiplicityParam m(k);
    auto g = gauss_grid(512, 14.0, k);
    TransformPlan plan(g, m);
    auto f = SampledFunction::sample(g, m, gauss);
    auto ff = forward(f, plan);
    for (std::size_t i = 0; i < g->size(); ++i) CHECK(std::abs(ff[i] - gauss(g->node(i))) < 1e-12);
  }
}

TEST_CASE("derivative rule on x e^{-x^2/2}") {
  const MultiplicityParam m(0.75);
  auto g = gauss_grid(512, 14.0, 0.75);
  TransformPlan plan(g, m);
  auto ff = forward(SampledFunction::sample(g, m, [](double x) { return x * gauss(x); }), plan);
  for (std::size_t i = 0; i < g->size(); ++i) {
    const double xi = g->node(i);
    CHECK(std::abs(ff[i] - cplx(0.0, -xi * gauss(xi))) < 1e-12);
  }
}

TEST_CASE("dilated Gaussian") {
  const double k = 1.3, a = 0.5;
  const MultiplicityParam m(k);
  auto g = gauss_grid(768, 20.0, k);
  TransformPlan plan(g, m);
  auto ff = forward(SampledFunction::sample(g, m, [a](double x) { return std::exp(-a * x * x / 2); }), plan);
  for (std::size_t i = 0; i < g->size(); i += 7) {
    const double xi = g->node(i);
    CHECK(std::abs(ff[i] - std::pow(a, -(k + 0.5)) * std::exp(-xi * xi / (2 * a))) < 1e-10);
  }
}

TEST_CASE("Plancherel and inversion") {
  const MultiplicityParam m(0.9);
  auto g = gauss_grid(640, 16.0, 0.9);
  TransformPlan plan(g, m);
  auto f = SampledFunction::sample(g, m, [](double x) { return cplx(1 + x - x * x * x / 3, 0.5 * x * x) * std::exp(-x * x / 3); });
  auto ff = forward(f, plan);
  CHECK(dunkl_norm(ff, 2.0) == doctest::Approx(dunkl_norm(f, 2.0)).epsilon(1e-10));
  auto back = inverse(ff, plan);
  CHECK(back.max_difference(f) < 1e-10);
}

TEST_CASE("separate source and target grids") {
  const MultiplicityParam m(0.5);
  auto src = gauss_grid(512, 14.0, 0.5);
  auto dst = share(QuadratureGrid::uniform(6.0, 50));
  TransformPlan plan(src, dst, m);
  auto ff = forward(SampledFunction::sample(src, m, gauss), plan);
  for (std::size_t i = 0; i < dst->size(); ++i) CHECK(std::abs(ff[i] - gauss(dst->node(i))) < 1e-12);
  // the inverse maps target-grid data back to the source grid
  auto f2 = SampledFunction::sample(dst, m, gauss);
  CHECK_THROWS_AS(forward(f2, plan), std::invalid_argument);
}

TEST_CASE("truncation is reported") {
  const MultiplicityParam m(0.5);
  auto g = gauss_grid(128, 6.0, 0.5);
  TransformPlan plan(g, m);
  auto slow = SampledFunction::sample(g, m, [](double x) { return 1.0 / (1 + x * x); });
  CHECK_THROWS_AS(forward(slow, plan), TruncationError);
  CHECK_THROWS_AS(forward(SampledFunction::sample(g, MultiplicityParam(0.4), gauss), plan), std::invalid_argument);
}

TEST_CASE("radial transform agrees with the dense transform") {
  const double k = 1.7;
  const MultiplicityParam m(k);
  auto profile = [](double s) { return (1 + s * s) * std::exp(-s * s); };
  auto g = gauss_grid(512, 14.0, k);
  TransformPlan plan(g, m);
  auto ff = forward(SampledFunction::sample(g, m, profile), plan);
  for (std::size_t i = g->size() / 2; i < g->size(); i += 9)
    CHECK(std::abs(ff[i] - radial_transform(profile, m, g->node(i))) < 1e-11);
  CHECK(radial_transform(gauss, m, 0.0) == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(radial_transform(gauss, m, 2.0) == doctest::Approx(gauss(2.0)).epsilon(1e-12));
}

TEST_CASE("radial transform in the product setting") {
  // gamma = 1.2, d = 2: the Gaussian is still fixed
  const MultiplicityParam m(std::vector<double>{0.5, 0.7});
  CHECK(radial_transform(gauss, m, 1.3) == doctest::Approx(gauss(1.3)).epsilon(1e-12));
  CHECK_THROWS_AS(radial_transform([](double) { return 1.0; }, m, 1.0), TruncationError);
  CHECK_THROWS_AS(radial_transform(gauss, m, -1.0), std::invalid_argument);
}

TEST_CASE("translation at k=0 is a shift") {
  const MultiplicityParam m(0.0);
  auto g = gauss_grid(768, 20.0);
  TransformPlan plan(g, m);
  auto t = translate(SampledFunction::sample(g, m, gauss), 1.5, plan);
  for (std::size_t i = 0; i < g->size(); i += 11) CHECK(std::abs(t[i] - gauss(g->node(i) + 1.5)) < 1e-10);
}

TEST_CASE("translation of radial functions matches the integral form") {
  for (double k : {0.4, 1.0, 2.2}) {
    const MultiplicityParam m(k);
    auto g = gauss_grid(768, 20.0, k);
    TransformPlan plan(g, m);
    const double x0 = -1.1;
    auto t = translate(SampledFunction::sample(g, m, gauss), x0, plan);
    for (std::size_t i = 0; i < g->size(); i += 13) {
      if (std::abs(g->node(i)) > 8) continue;
      CHECK(std::abs(t[i] - translate_radial(gauss, x0, g->node(i), k)) < 1e-10);
    }
  }
}

TEST_CASE("translation commutes with the kernel") {
  // tau_x E_k(., -i xi)(y) = E_k(x, -i xi) E_k(y, -i xi), checked on a Gaussian via forward
  const double k = 0.6, x0 = 0.8;
  const MultiplicityParam m(k);
  auto g = gauss_grid(640, 16.0, k);
  TransformPlan plan(g, m);
  auto f = SampledFunction::sample(g, m, [](double x) { return (1 + x) * gauss(x); });
  auto ft = forward(translate(f, x0, plan), plan);
  auto ff = forward(f, plan);
  for (std::size_t i = 0; i < g->size(); i += 5) {
    cplx expect = std::conj(fourier_kernel(k, x0, g->node(i))) * ff[i];
    CHECK(std::abs(ft[i] - expect) < 1e-10);
  }
}

TEST_CASE("translated ball indicator") {
  CHECK(translate_ball_indicator(1.0, 0.3, 0.5, 0.0) == 1.0);
  CHECK(translate_ball_indicator(1.0, 0.3, 2.5, 0.0) == 0.0);
  CHECK(translate_ball_indicator(1.0, 0.0, 0.5, 1.0) == 1.0);
  CHECK(translate_ball_indicator(1.0, 0.0, 1.5, 1.0) == 0.0);
  // far outside the annulus | |x| - |y| | < r < |x| + |y| it is 0 or 1
  CHECK(translate_ball_indicator(0.5, 3.0, 1.0, 1.2) == 0.0);
  CHECK(translate_ball_indicator(5.0, 3.0, -1.0, 1.2) == 1.0);
  // against direct integration of the translation density
  const double k = 1.5;
  for (double x : {0.7, -1.3}) {
    for (double y : {0.9, -0.4, 2.0}) {
      for (double r : {0.5, 1.0, 2.2}) {
        auto density = [k](double t) { return std::pow(1 - t, k - 1) * std::pow(1 + t, k); };
        auto inside = [&](double t) { return x * x + y * y - 2 * x * y * t < r * r ? density(t) : 0.0; };
        std::vector<double> br{-1.0, 1.0};
        const double t0 = (x * x + y * y - r * r) / (2 * x * y);
        if (t0 > -1 && t0 < 1) br = {-1.0, t0, 1.0};
        double expect = integrate(inside, br, 0.05, 20) / integrate(density, std::vector<double>{-1.0, 1.0}, 0.05, 20);
        CHECK(translate_ball_indicator(r, x, y, k) == doctest::Approx(expect).epsilon(1e-6));
      }
    }
  }
  CHECK_THROWS_AS(translate_ball_indicator(0.0, 1.0, 1.0, 1.0), std::invalid_argument);
}

TEST_CASE("convolution of Gaussians") {
  const double k = 0.8;
  const MultiplicityParam m(k);
  auto g = gauss_grid(768, 20.0, k);
  TransformPlan plan(g, m);
  auto f = SampledFunction::sample(g, m, gauss);
  auto c = convolve(f, f, plan);
  for (std::size_t i = 0; i < g->size(); i += 7) {
    double x = g->node(i);
    CHECK(std::abs(c[i] - std::pow(2.0, -(k + 0.5)) * std::exp(-x * x / 4)) < 1e-10);
  }
  auto odd = SampledFunction::sample(g, m, [](double x) { return x * gauss(x); });
  CHECK_NOTHROW(convolve(odd, f, plan));
  CHECK_THROWS_AS(convolve(odd, odd, plan), std::invalid_argument);
}
