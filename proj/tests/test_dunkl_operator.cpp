#include <doctest.h>

#include <cmath>
#include <dunkl/dunkl_operator.hpp>
#include <dunkl/error.hpp>
#include <stdexcept>

using namespace dunkl;

namespace {
SmoothFunction poly2() {
  return [](double x) { return Jet{x * x, 2 * x, 2.0}; };
}
SmoothFunction linear() {
  return [](double x) { return Jet{x, 1.0, 0.0}; };
}
}  // namespace

TEST_CASE("T on monomials") {
  for (double k : {0.0, 0.5, 1.3}) {
    for (double x : {-1.5, 0.0, 0.7, 2.0}) {
      CHECK(apply_T(poly2(), k, x) == doctest::Approx(2 * x));
      CHECK(apply_T(linear(), k, x) == doctest::Approx(1 + 2 * k));
      CHECK(apply_laplacian(poly2(), k, x) == doctest::Approx(2 * (1 + 2 * k)));
    }
  }
}

TEST_CASE("T^2 equals the Dunkl Laplacian") {
  const double k = 0.8;
  // f = (x + x^3) e^{-x}, smooth and neither even nor odd
  auto f = [](double x) {
    double e = std::exp(-x), p = x + x * x * x, dp = 1 + 3 * x * x, d2p = 6 * x;
    return Jet{p * e, (dp - p) * e, (d2p - 2 * dp + p) * e};
  };
  // T f as a SmoothFunction via central differences of the pointwise formula
  auto tf = [&](double x) {
    const double h = 1e-4;
    double v = apply_T(f, k, x);
    double d = (apply_T(f, k, x + h) - apply_T(f, k, x - h)) / (2 * h);
    return Jet{v, d, 0.0};
  };
  for (double x : {-1.2, 0.4, 1.9}) CHECK(apply_T(tf, k, x) == doctest::Approx(apply_laplacian(f, k, x)).epsilon(1e-6));
}

TEST_CASE("stencil derivatives on a uniform grid") {
  const MultiplicityParam m(0.6);
  auto g = share(QuadratureGrid::uniform(8.0, 800));
  auto f = SampledFunction::sample(g, m, [](double x) { return std::exp(-x * x) * (1 + x); });
  const std::size_t i = 500;
  const double x = g->node(i), k = 0.6;
  auto jet = [](double y) {
    double e = std::exp(-y * y), p = 1 + y;
    return Jet{p * e, (1 - 2 * y * p) * e, (-2 * y - 2 * p - 2 * y * (1 - 2 * y * p)) * e};
  };
  CHECK(std::abs(apply_T(f, i) - apply_T(jet, k, x)) < 1e-6);
  CHECK(std::abs(apply_laplacian(f, i) - apply_laplacian(jet, k, x)) < 1e-5);
  CHECK_THROWS_AS(apply_T(f, 0), std::out_of_range);
  CHECK_THROWS_AS(apply_laplacian(f, g->size() - 2), std::out_of_range);
  auto gl = SampledFunction::sample(gauss_grid(64, 8.0), m, [](double x) { return x; });
  CHECK_THROWS_AS(apply_T(gl, 10), std::invalid_argument);
}

TEST_CASE("spectral T and Laplacian") {
  const MultiplicityParam m(1.1);
  auto g = gauss_grid(512, 12.0, 1.1);
  const auto b = build_hermite_basis(m, 60);
  auto f = SampledFunction::sample(g, m, [](double x) { return (x + x * x) * std::exp(-x * x / 2); });
  auto jet = [](double x) {
    double e = std::exp(-x * x / 2), p = x + x * x, dp = 1 + 2 * x, d2p = 2.0;
    return Jet{p * e, (dp - x * p) * e, (d2p - 2 * x * dp - p + x * x * p) * e};
  };
  auto t = apply_T_spectral(f, b);
  auto l = apply_laplacian_spectral(f, b);
  for (std::size_t i = 0; i < g->size(); i += 17) {
    CHECK(std::abs(t[i] - apply_T(jet, 1.1, g->node(i))) < 1e-11);
    CHECK(std::abs(l[i] - apply_laplacian(jet, 1.1, g->node(i))) < 1e-10);
  }
}

TEST_CASE("oscillator Hermite section is the eigenvalue ladder") {
  const MultiplicityParam m(0.7);
  auto op = discretize_operator(OperatorKind::oscillator(), HermiteSection{12}, m);
  CHECK(op.is_diagonal());
  for (Eigen::Index n = 0; n < 12; ++n) CHECK(op.entries(n, n).real() == doctest::Approx(2.0 * n + 2 * 0.7 + 1));
}

TEST_CASE("grid Laplacian at k=0 is the second difference") {
  const MultiplicityParam m(0.0);
  auto op = discretize_operator(OperatorKind::laplacian(), GridBasis{10, 5.0}, m);
  const double h = 1.0;
  for (Eigen::Index i = 0; i < 10; ++i) {
    CHECK(op.entries(i, i).real() == doctest::Approx(2 / (h * h)));
    if (i + 1 < 10) CHECK(op.entries(i, i + 1).real() == doctest::Approx(-1 / (h * h)));
    if (i + 2 < 10) CHECK(op.entries(i, i + 2).real() == 0.0);
  }
}

TEST_CASE("Schrodinger with zero potential equals the Laplacian") {
  const MultiplicityParam m(0.4);
  auto zero = OperatorKind::schrodinger([](double) { return 0.0; }, "zero");
  for (BasisSpec s : {BasisSpec{GridBasis{40, 6.0}}, BasisSpec{HermiteSection{30}}, BasisSpec{DvrBasis{30}}}) {
    auto a = discretize_operator(OperatorKind::laplacian(), s, m);
    auto b = discretize_operator(zero, s, m);
    CHECK((a.entries - b.entries).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("discretizations are symmetric and positive") {
  const MultiplicityParam m(1.5);
  auto quartic = OperatorKind::schrodinger([](double x) { return x * x * x * x; }, "x4");
  for (BasisSpec s : {BasisSpec{GridBasis{80, 8.0}}, BasisSpec{HermiteSection{40}}, BasisSpec{DvrBasis{40}}}) {
    auto op = discretize_operator(quartic, s, m);
    CHECK(op.symmetry_defect() < 1e-12);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(op.symmetric_form());
    CHECK(es.eigenvalues().minCoeff() > 0.0);
  }
}

TEST_CASE("DVR and Hermite sections agree on low eigenvalues") {
  const MultiplicityParam m(0.5);
  auto v = OperatorKind::schrodinger([](double x) { return x * x + 0.1 * x * x * x * x; }, "anh");
  auto a = discretize_operator(v, HermiteSection{80}, m);
  auto b = discretize_operator(v, DvrBasis{80}, m);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> ea(a.entries), eb(b.entries);
  for (Eigen::Index i = 0; i < 5; ++i) CHECK(ea.eigenvalues()[i] == doctest::Approx(eb.eigenvalues()[i]).epsilon(1e-8));
}

TEST_CASE("argument validation") {
  const MultiplicityParam m(0.5);
  CHECK_THROWS_AS(discretize_operator(OperatorKind::laplacian(), DvrBasis{31}, m), std::invalid_argument);
  CHECK_THROWS_AS(OperatorKind::schrodinger(nullptr), std::invalid_argument);
  CHECK(std::string(to_string(BasisTag::dvr)) == "dvr");
}
