#include <doctest.h>

#include <cmath>
#include <dunkl/calculus.hpp>
#include <dunkl/error.hpp>
#include <dunkl/oscillator.hpp>
#include <numbers>

using namespace dunkl;

namespace {
const double kMu = std::numbers::pi / 4;

Eigen::MatrixXd rotated_section(const MultiplicityParam& m, std::size_t n, unsigned seed) {
  Eigen::MatrixXd d = hermite_section(m, n);
  std::srand(seed);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(Eigen::MatrixXd::Random(static_cast<Eigen::Index>(n),
                                                                   static_cast<Eigen::Index>(n)));
  Eigen::MatrixXd q = qr.householderQ();
  Eigen::MatrixXd t = q * d * q.transpose();
  return 0.5 * (t + t.transpose());
}
}  // namespace

TEST_CASE("sector validation") {
  CHECK(Sector(1.0).theta() == 0.5);
  CHECK_THROWS_AS(Sector(0.0), std::invalid_argument);
  CHECK_THROWS_AS(Sector(4.0), std::invalid_argument);
  CHECK_THROWS_AS(Sector(1.0, 1.2), std::invalid_argument);
  CHECK(Sector(1.0).contains(cplx(1.0, 1.0)));
  CHECK_FALSE(Sector(0.5).contains(cplx(1.0, 1.0)));
}

TEST_CASE("symbols") {
  auto ip = imaginary_power_symbol(2.0, kMu);
  CHECK(ip.sup_norm == doctest::Approx(std::exp(2.0 * kMu)));
  CHECK(std::abs(ip(std::polar(3.0, 0.3))) == doctest::Approx(std::exp(-0.6)));
  CHECK(std::abs(imaginary_power_symbol(0.0, kMu)(cplx(2.0, 1.0)) - 1.0) < 1e-15);
  CHECK(estimate_sup(ip.eval, kMu) == doctest::Approx(ip.sup_norm).epsilon(1e-12));
  CHECK(psi_symbol(kMu).sup_norm == doctest::Approx(1.0 / (2.0 + std::sqrt(2.0))).epsilon(1e-6));
  CHECK(symbol_from_name("impower:3", kMu).sup_norm == doctest::Approx(std::exp(3 * kMu)));
  CHECK_THROWS_AS(symbol_from_name("impower:x", kMu), std::invalid_argument);
  CHECK_THROWS_AS(symbol_from_name("sin", kMu), std::invalid_argument);
  CHECK_THROWS_AS(exp_symbol(2.0), std::invalid_argument);
}

TEST_CASE("resolvent") {
  Eigen::MatrixXd t = hermite_section(MultiplicityParam(1.0), 10);
  Eigen::VectorXcd e = Eigen::VectorXcd::Zero(10);
  e[3] = 1.0;
  cplx z(-2.0, 1.0);
  auto u = resolvent_apply(t, z, e);
  CHECK(std::abs(u[3] - 1.0 / (t(3, 3) - z)) < 1e-15);
  // negative axis: ||(T - z)^{-1}|| = 1 / (lambda_0 + |z|)
  Eigen::MatrixXd r = rotated_section(MultiplicityParam(1.0), 10, 3);
  Eigen::MatrixXcd inv(10, 10);
  for (int j = 0; j < 10; ++j) inv.col(j) = resolvent_apply(r, -5.0, Eigen::VectorXcd::Unit(10, j));
  CHECK(operator_norm(inv) == doctest::Approx(1.0 / (3.0 + 5.0)).epsilon(1e-12));
  // |z| ||(T - z)^{-1}|| stays bounded on the rays arg z = +-mu
  double c = 0.0;
  for (double s = 0.1; s < 1e3; s *= 1.3)
    for (double sgn : {-1.0, 1.0}) {
      cplx z2 = std::polar(s, sgn * kMu);
      double worst = 0.0;
      for (int i = 0; i < 10; ++i) worst = std::max(worst, 1.0 / std::abs(t(i, i) - z2));
      c = std::max(c, std::abs(z2) * worst);
    }
  CHECK(c <= 1.0 / std::sin(kMu) + 1e-12);
  CHECK_THROWS_AS(resolvent_apply(t, t(2, 2), e), NumericalError);
  CHECK_THROWS_AS(resolvent_apply(r, 3.0, e), NumericalError);
}

TEST_CASE("contour calculus against the spectral oracle") {
  for (double k : {0.0, 1.0}) {
    MultiplicityParam m(k);
    for (const auto& t : {hermite_section(m, 40), rotated_section(m, 24, 7)}) {
      Sector sec(kMu);
      for (const auto& xi : {psi_symbol(kMu), exp_symbol(kMu),
                             product(psi_symbol(kMu), imaginary_power_symbol(1.0, kMu), kMu)}) {
        auto c = psi_contour_calculus(t, xi, sec);
        CHECK(c.cauchy_difference < 1e-6);
        CHECK(operator_norm(c.value - spectral_calculus(t, xi)) < 1e-8);
      }
    }
  }
}

TEST_CASE("contour calculus is linear and multiplicative") {
  auto t = hermite_section(MultiplicityParam(0.5), 30);
  Sector sec(kMu);
  auto p = psi_symbol(kMu), e = exp_symbol(kMu);
  SectorSymbol comb = p;
  comb.eval = [p, e](cplx z) { return 2.0 * p(z) - cplx(0.0, 3.0) * e(z); };
  auto lhs = psi_contour_calculus(t, comb, sec).value;
  auto rhs = 2.0 * psi_contour_calculus(t, p, sec).value - cplx(0.0, 3.0) * psi_contour_calculus(t, e, sec).value;
  CHECK(operator_norm(lhs - rhs) < 1e-8);
  auto prod = psi_contour_calculus(t, product(p, e, kMu), sec).value;
  CHECK(operator_norm(prod - psi_contour_calculus(t, p, sec).value * psi_contour_calculus(t, e, sec).value) < 1e-4);
}

TEST_CASE("contour calculus rejects non-Psi symbols and non-convergence") {
  auto t = hermite_section(MultiplicityParam(1.0), 10);
  CHECK_THROWS_AS(psi_contour_calculus(t, imaginary_power_symbol(1.0, kMu), Sector(kMu)), std::invalid_argument);
  ContourOptions o;
  o.max_levels = 1;
  o.tol = 1e-14;
  CHECK_THROWS_AS(psi_contour_calculus(t, psi_symbol(kMu), Sector(kMu), o), ConvergenceError);
  Eigen::MatrixXd bad = t;
  bad(0, 1) = 1.0;
  CHECK_THROWS_AS(psi_contour_calculus(bad, psi_symbol(kMu), Sector(kMu)), std::invalid_argument);
}

TEST_CASE("extended calculus") {
  auto t = hermite_section(MultiplicityParam(1.0), 40);
  Sector sec(kMu);
  auto one = hinfty_extend(t, constant_symbol(1.0), sec).value;
  CHECK(operator_norm(one - Eigen::MatrixXcd::Identity(40, 40)) < 1e-4);
  auto ip = imaginary_power_symbol(1.0, kMu);
  auto v = hinfty_extend(t, ip, sec).value;
  CHECK(operator_norm(v - spectral_calculus(t, ip)) < 1e-4);
  CHECK(operator_norm(v) == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("norm bound for random bounded symbols") {
  auto t = hermite_section(MultiplicityParam(2.5), 40);
  Sector sec(kMu);
  std::mt19937_64 rng(42);
  ContourOptions o;
  o.tol = 1e-10;
  for (int i = 0; i < 20; ++i) {
    auto xi = random_rational_symbol(rng, kMu);
    CHECK(operator_norm(hinfty_extend(t, xi, sec, o).value) <= xi.sup_norm + 1e-6);
  }
}

TEST_CASE("convergence theorem probe") {
  auto t = hermite_section(MultiplicityParam(1.0), 40);
  Sector sec(kMu);
  std::mt19937_64 rng(42);
  ContourOptions o;
  o.tol = 1e-10;
  std::vector<double> s{1e2, 1e4, 1e6, 1e8};
  auto st = convergence_theorem_check(
      t, [](double sv) { return approximating_imaginary_power(1.0, sv, kMu); }, imaginary_power_symbol(1.0, kMu), s,
      sec, rng, 4, o);
  for (std::size_t i = 1; i < s.size(); ++i) CHECK(st.errors[i] < st.errors[i - 1]);
  CHECK(st.final_error() < 1e-3);
  CHECK(st.limit_norm <= st.sup_norm() + 1e-6);
  // constant sequence
  auto p = psi_symbol(kMu);
  auto same = convergence_theorem_check(t, [p](double) { return p; }, p, {1.0, 2.0}, sec, rng, 4, o);
  CHECK(same.errors[0] == same.errors[1]);
  CHECK(same.final_error() < 1e-6);
}

TEST_CASE("spectral calculus on the Hermite basis") {
  MultiplicityParam m(1.0);
  auto g = gauss_grid(512, 14.0, 1.0);
  HermiteBasis b(m, 80);
  auto f = SampledFunction::sample(g, m, [](double x) { return std::exp(-x * x) * (1.0 + x); });
  auto id = spectral_calculus(b, constant_symbol(1.0), f);
  CHECK(id.tail < 1e-10);
  CHECK(id.value.max_difference(f) < 1e-10);
  // e^{-t lambda} agrees with the semigroup
  SectorSymbol heat{[](cplx z) { return std::exp(-0.5 * z); }, "heat", 1.0, std::nullopt};
  auto a = spectral_calculus(b, heat, f).value;
  auto h = hermite_semigroup_apply(f, SectorPoint(0.5), b);
  CHECK(a.max_difference(h) < 1e-14);
  // and with the Mehler kernel integral
  const auto q = f.masses();
  double worst = 0.0;
  for (std::size_t i = 0; i < g->size(); i += 37) {
    cplx s = 0.0;
    for (std::size_t j = 0; j < g->size(); ++j) s += mehler_kernel(0.5, g->node(i), g->node(j), m) * f[j] * q[j];
    worst = std::max(worst, std::abs(s - a[i]));
  }
  CHECK(worst < 1e-10);
}

TEST_CASE("CZ decomposition") {
  for (double k : {0.0, 1.0, 2.5}) {
    MultiplicityParam m(k);
    auto g = share(QuadratureGrid::uniform(16.0, 2048));
    auto f = SampledFunction::sample(g, m, [](double x) { return std::exp(-std::pow((x - 0.5) / 0.05, 2)); });
    const auto q = f.masses();
    double l1 = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) l1 += f[i].real() * interval_measure(g->node(i) - g->spacing() / 2,
                                                                                     g->node(i) + g->spacing() / 2, k);
    auto unit = f.with_values([&] {
      std::vector<cplx> v(f.values());
      for (auto& x : v) x /= l1;
      return v;
    }());
    for (double lam : {0.1, 1.0, 10.0}) {
      auto cz = cz_decompose(unit, lam);
      auto p = cz_properties(cz);
      CHECK(p.holds());
      CHECK(p.overlap <= 1);
      CHECK(p.total_measure <= 1.0);
      if (lam == 1.0) CHECK_FALSE(cz.bad.empty());
    }
    // lambda above the sup: nothing is bad
    auto cz = cz_decompose(unit, 1e6);
    CHECK(cz.bad.empty());
    CHECK(cz.good == cz.f);
  }
}

TEST_CASE("CZ validation") {
  MultiplicityParam m(1.0);
  auto g = share(QuadratureGrid::uniform(16.0, 2048));
  auto ones = SampledFunction::sample(g, m, [](double) { return 1.0; });
  CHECK_THROWS_AS(cz_decompose(ones, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(cz_decompose(ones, -1.0), std::invalid_argument);
  auto neg = SampledFunction::sample(g, m, [](double x) { return -std::exp(-x * x); });
  CHECK_THROWS_AS(cz_decompose(neg, 1.0), std::invalid_argument);
  auto odd = SampledFunction::sample(share(QuadratureGrid::uniform(16.0, 96)), m, [](double) { return 0.0; });
  CHECK_THROWS_AS(cz_decompose(odd, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(cz_decompose(SampledFunction::sample(gauss_grid(64, 4.0), m, [](double) { return 0.0; }), 1.0),
                  std::invalid_argument);
}

TEST_CASE("weak-type ratio") {
  MultiplicityParam m(1.0);
  WeakTypeOptions o;
  o.basis_n = 128;
  o.radius = 20.0;
  o.grid_n = 1024;
  // identity: Chebyshev
  auto w = weak_type_harness(constant_symbol(1.0), m, spike_family(3, 0.5, 1.0, 0.8), o);
  for (double r : w.coarse) CHECK(r <= 1.0 + 1e-9);
  CHECK(w.refinement_change < 0.1);
  CHECK(w.max_tail < 1e-8);
}

TEST_CASE("sections from the operator module") {
  MultiplicityParam m(1.0);
  auto h = discretize_operator(OperatorKind::oscillator(), HermiteSection{30}, m);
  auto d = discretize_operator(OperatorKind::schrodinger([](double x) { return std::pow(x, 4); }, "x4"), DvrBasis{30}, m);
  Sector sec(kMu);
  auto p = psi_symbol(kMu);
  CHECK(operator_norm(psi_contour_calculus(h, p, sec).value - spectral_calculus(hermite_section(m, 30), p)) < 1e-8);
  auto t = self_adjoint_form(d);
  CHECK(operator_norm(psi_contour_calculus(d, p, sec).value - spectral_calculus(t, p)) < 1e-8);
  Eigen::VectorXcd v = Eigen::VectorXcd::Ones(30);
  CHECK(((t.cast<cplx>() + 2.0 * Eigen::MatrixXcd::Identity(30, 30)) * resolvent_apply(d, -2.0, v) - v).norm() < 1e-10);
}
