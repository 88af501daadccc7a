#include <doctest.h>

#include <cmath>
#include <dunkl/error.hpp>
#include <dunkl/heat.hpp>
#include <dunkl/schrodinger.hpp>

using namespace dunkl;

namespace {
struct Setup {
  MultiplicityParam m;
  GridPtr g;
  TransformPlan plan;
  explicit Setup(double k, std::size_t n = 512, double r = 14.0)
      : m(k), g(gauss_grid(n, r, k)), plan(g, m) {}
};
double bump(double x) { return (1 + x) * std::exp(-x * x / 2); }
}  // namespace

TEST_CASE("potentials") {
  CHECK(Potential::quartic()(2.0) == 16.0);
  CHECK(Potential::well(3.0, 1.0)(0.5) == 0.0);
  CHECK(Potential::well(3.0, 1.0)(-1.5) == 3.0);
  CHECK(Potential::from_label("x2")(3.0) == 9.0);
  CHECK_THROWS_AS(Potential::from_label("cubic"), std::invalid_argument);
  auto g = gauss_grid(64, 4.0);
  CHECK(Potential::harmonic().nonnegative_on(*g));
  CHECK_FALSE(Potential([](double x) { return x; }, "x").nonnegative_on(*g));
}

TEST_CASE("Trotter with V=0 is the heat semigroup") {
  Setup s(0.7);
  auto f = SampledFunction::sample(s.g, s.m, bump);
  auto tr = trotter_evolve(f, Potential::zero(), 0.6, 5, s.plan);
  CHECK(tr.max_difference(heat_apply(f, 0.6, s.plan)) < 1e-11);
}

TEST_CASE("free reference converges slowly but does converge") {
  // continuous spectrum: the Hermite section behaves like a soft box
  const MultiplicityParam m(1.0);
  double prev = 1.0;
  for (std::size_t n : {64, 128, 256}) {
    double e = std::abs(SchrodingerPropagator(m, Potential::zero(), n).kernel(1.0, 0.0, 0.0) - heat_kernel_K(1.0, 0.0, 0.0, m));
    CHECK(e < prev);
    prev = e;
  }
}

TEST_CASE("quartic reference is converged") {
  const MultiplicityParam m(0.8);
  SchrodingerPropagator a(m, Potential::quartic(), 128), b(m, Potential::quartic(), 256);
  for (Eigen::Index i = 0; i < 10; ++i) CHECK(a.eigenvalues()[i] == doctest::Approx(b.eigenvalues()[i]).epsilon(1e-11));
  CHECK(a.kernel(0.5, 0.3, -1.2) == doctest::Approx(b.kernel(0.5, 0.3, -1.2)).epsilon(1e-11));
  CHECK(schrodinger_kernel(b, 0.5, 0.3, -1.2) > 0.0);
}

TEST_CASE("sandwich 0 <= W_t <= K_t") {
  const MultiplicityParam m(0.5);
  std::vector<double> pts;
  for (int i = -24; i <= 24; ++i) pts.push_back(0.25 * i);
  for (const auto& v : {Potential::harmonic(), Potential::quartic()}) {
    SchrodingerPropagator p(m, v);
    auto r = sandwich_check(p, 1.0, pts);
    CHECK(r.min_w >= -1e-10);
    CHECK(r.max_excess <= 1e-10);
  }
  // the discontinuous well converges only algebraically in the Hermite basis
  auto r = sandwich_check(SchrodingerPropagator(m, Potential::well()), 1.0, pts);
  CHECK(r.min_w >= -1e-6);
  CHECK(r.max_excess <= 1e-6);
}

TEST_CASE("harmonic potential matches the oscillator ground state decay") {
  // lowest eigenvalue of -Delta_k + x^2 is 2k + 1
  SchrodingerPropagator p(MultiplicityParam(1.2), Potential::harmonic());
  CHECK(p.eigenvalues()[0] == doctest::Approx(2 * 1.2 + 1).epsilon(1e-10));
  CHECK(p.eigenvalues()[1] == doctest::Approx(2 * 1.2 + 3).epsilon(1e-10));
}

TEST_CASE("Trotter converges at first order") {
  Setup s(0.5);
  SchrodingerPropagator p(s.m, Potential::quartic());
  auto f = SampledFunction::sample(s.g, s.m, bump);
  auto st = trotter_convergence(f, p, 1.0, {4, 8, 16, 32, 64}, s.plan);
  CHECK(st.slope >= 0.8);
  CHECK(st.slope <= 1.2);
  for (std::size_t i = 1; i < st.errors.size(); ++i) CHECK(st.errors[i] < st.errors[i - 1]);
}

TEST_CASE("domination, positivity, contraction") {
  Setup s(1.0);
  SchrodingerPropagator p(s.m, Potential::quartic());
  auto f = SampledFunction::sample(s.g, s.m, [](double x) { return std::cos(3 * x) * std::exp(-x * x / 3); });
  auto r = domination_check(f, p, 0.5, s.plan);
  CHECK(r.max_excess <= 1e-8);
  CHECK(r.min_positive >= -1e-10);
  CHECK(r.l2_ratio <= 1.0);
  CHECK(std::isfinite(r.linfty_ratio));
  // a nonnegative input with the harmonic potential stays below the heat flow
  auto pos = SampledFunction::sample(s.g, s.m, [](double x) { return std::exp(-x * x); });
  CHECK(domination_check(pos, SchrodingerPropagator(s.m, Potential::harmonic()), 0.5, s.plan).max_excess <= 1e-12);
}

TEST_CASE("argument validation") {
  Setup s(0.5, 128, 8.0);
  auto f = SampledFunction::sample(s.g, s.m, bump);
  CHECK_THROWS_AS(trotter_evolve(f, Potential::quartic(), 1.0, 0, s.plan), std::invalid_argument);
  CHECK_THROWS_AS(trotter_evolve(f, Potential([](double x) { return -x * x; }, "neg"), 1.0, 4, s.plan),
                  std::invalid_argument);
  CHECK_THROWS_AS(SchrodingerPropagator(s.m, Potential([](double) { return -1.0; }, "neg")), std::invalid_argument);
  CHECK_THROWS_AS(SchrodingerPropagator(s.m, Potential::zero(), 31), std::invalid_argument);
}
