#include "dunkl/hermite.hpp"

#include <algorithm>
#include <cmath>

#include "dunkl/error.hpp"

namespace dunkl {

using detail::require;

namespace {
constexpr double kBig = 1e150;

// mantissa * e^shift without spurious underflow of e^shift alone
double scaled(double mantissa, double shift) {
  if (shift > -700.0 || mantissa == 0.0) return mantissa * std::exp(shift);
  return std::copysign(std::exp(shift + std::log(std::abs(mantissa))), mantissa);
}
}  // namespace

HermiteBasis::HermiteBasis(MultiplicityParam m, std::size_t n) : m_(std::move(m)), n_(n) {
  require(m_.rank() == 1, "hermite basis: rank one only");
  require(n >= 1, "hermite basis: need at least one function");
}

double HermiteBasis::eigenvalue(std::size_t n) const {
  return 2.0 * static_cast<double>(n) + 2.0 * m_.gamma() + 1.0;
}

Eigen::VectorXd HermiteBasis::eigenvalues() const {
  Eigen::VectorXd l(static_cast<Eigen::Index>(n_));
  for (std::size_t i = 0; i < n_; ++i) l[static_cast<Eigen::Index>(i)] = eigenvalue(i);
  return l;
}

double HermiteBasis::recurrence(std::size_t n) const {
  double nn = static_cast<double>(n);
  double b = 0.5 * (nn + ((n % 2 == 1) ? 2.0 * m_.k() : 0.0));
  return std::sqrt(b);
}

void HermiteBasis::evaluate(double x, std::span<double> out) const {
  if (out.empty()) return;
  // scaled recurrence: value = mantissa * exp(shift)
  double shift = -0.5 * x * x - 0.5 * std::lgamma(m_.k() + 0.5);
  double prev = 0.0, cur = 1.0;
  out[0] = scaled(1.0, shift);
  for (std::size_t n = 0; n + 1 < out.size(); ++n) {
    double next = (x * cur - recurrence(n) * prev) / recurrence(n + 1);
    prev = cur;
    cur = next;
    if (std::abs(cur) > kBig) {
      cur /= kBig;
      prev /= kBig;
      shift += std::log(kBig);
    }
    out[n + 1] = scaled(cur, shift);
  }
}

void HermiteBasis::evaluate_jets(double x, std::span<double> h, std::span<double> dh,
                                 std::span<double> d2h) const {
  const std::size_t len = h.size();
  require(dh.size() == len && d2h.size() == len, "evaluate_jets: span size mismatch");
  if (len == 0) return;
  double shift = -0.5 * x * x - 0.5 * std::lgamma(m_.k() + 0.5);
  double p0 = 0.0, p1 = 1.0;
  double d0 = 0.0, d1 = -x;
  double s0 = 0.0, s1 = x * x - 1.0;
  h[0] = scaled(1.0, shift);
  dh[0] = scaled(d1, shift);
  d2h[0] = scaled(s1, shift);
  for (std::size_t n = 0; n + 1 < len; ++n) {
    const double an = recurrence(n), an1 = recurrence(n + 1);
    double p2 = (x * p1 - an * p0) / an1;
    double d2 = (p1 + x * d1 - an * d0) / an1;
    double s2 = (2.0 * d1 + x * s1 - an * s0) / an1;
    p0 = p1, p1 = p2;
    d0 = d1, d1 = d2;
    s0 = s1, s1 = s2;
    double mag = std::max({std::abs(p1), std::abs(d1), std::abs(s1)});
    if (mag > kBig) {
      p0 /= kBig, p1 /= kBig, d0 /= kBig, d1 /= kBig, s0 /= kBig, s1 /= kBig;
      shift += std::log(kBig);
    }
    h[n + 1] = scaled(p1, shift);
    dh[n + 1] = scaled(d1, shift);
    d2h[n + 1] = scaled(s1, shift);
  }
}

double HermiteBasis::value(std::size_t n, double x) const {
  std::vector<double> v(n + 1);
  evaluate(x, v);
  return v[n];
}

Eigen::MatrixXd HermiteBasis::sample(const QuadratureGrid& g) const {
  Eigen::MatrixXd b(static_cast<Eigen::Index>(g.size()), static_cast<Eigen::Index>(n_));
  std::vector<double> row(n_);
  for (std::size_t i = 0; i < g.size(); ++i) {
    evaluate(g.node(i), row);
    for (std::size_t n = 0; n < n_; ++n)
      b(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(n)) = row[n];
  }
  return b;
}

Eigen::VectorXcd HermiteBasis::coefficients(const SampledFunction& f) const {
  require(f.multiplicity() == m_, "coefficients: multiplicity mismatch");
  const Eigen::MatrixXd b = sample(f.grid());
  const auto q = f.masses();
  Eigen::VectorXcd v(static_cast<Eigen::Index>(f.size()));
  for (std::size_t i = 0; i < f.size(); ++i) v[static_cast<Eigen::Index>(i)] = q[i] * f[i];
  return b.transpose().cast<cplx>() * v;
}

SampledFunction HermiteBasis::synthesize(const Eigen::VectorXcd& c, const GridPtr& grid) const {
  require(static_cast<std::size_t>(c.size()) <= n_, "synthesize: too many coefficients");
  std::vector<double> row(static_cast<std::size_t>(c.size()));
  std::vector<cplx> out(grid->size());
  for (std::size_t i = 0; i < grid->size(); ++i) {
    evaluate(grid->node(i), row);
    cplx s = 0.0;
    for (std::size_t n = 0; n < row.size(); ++n) s += c[static_cast<Eigen::Index>(n)] * row[n];
    out[i] = s;
  }
  return SampledFunction(grid, m_, std::move(out));
}

GaussRule HermiteBasis::gauss_rule(std::size_t m) const {
  require(m >= 1, "gauss_rule: need at least one node");
  const Eigen::Index n = static_cast<Eigen::Index>(m);
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(n), sub(std::max<Eigen::Index>(n - 1, 0));
  for (Eigen::Index i = 0; i + 1 < n; ++i) sub[i] = recurrence(static_cast<std::size_t>(i) + 1);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  GaussRule r;
  r.nodes.resize(m);
  r.weights.resize(m);
  for (std::size_t j = 0; j < m; ++j) r.nodes[j] = es.eigenvalues()[static_cast<Eigen::Index>(j)];
  // exact symmetry, and an exact zero node for odd m
  for (std::size_t j = 0; j < m / 2; ++j) {
    double x = 0.5 * (r.nodes[m - 1 - j] - r.nodes[j]);
    r.nodes[j] = -x;
    r.nodes[m - 1 - j] = x;
  }
  if (m % 2 == 1) r.nodes[m / 2] = 0.0;
  std::vector<double> h(m);
  for (std::size_t j = 0; j < m; ++j) {
    // sum of squares in the scaled domain is robust for large |x|
    evaluate(r.nodes[j], h);
    double s = 0.0;
    for (double v : h) s += v * v;
    r.weights[j] = 1.0 / s;
  }
  return r;
}

double HermiteBasis::gram_deviation(const GaussRule& rule, std::size_t rows) const {
  rows = std::min(rows, n_);
  const std::size_t m = rule.nodes.size();
  Eigen::MatrixXd u(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(rows));
  std::vector<double> h(rows);
  for (std::size_t j = 0; j < m; ++j) {
    evaluate(rule.nodes[j], h);
    double sw = std::sqrt(rule.weights[j]);
    for (std::size_t n = 0; n < rows; ++n)
      u(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(n)) = sw * h[n];
  }
  Eigen::MatrixXd g = u.transpose() * u;
  g -= Eigen::MatrixXd::Identity(g.rows(), g.cols());
  return g.cwiseAbs().maxCoeff();
}

HermiteBasis build_hermite_basis(const MultiplicityParam& m, std::size_t n) {
  HermiteBasis b(m, n);
  // n+1 Gauss nodes integrate every product h_a h_b, a, b < n, exactly
  const std::size_t rows = std::min<std::size_t>(n, 400);
  double dev = b.gram_deviation(b.gauss_rule(n + 1), rows);
  if (!(dev <= 1e-6)) throw ConvergenceError("hermite basis: loss of orthogonality");
  return b;
}

}  // namespace dunkl
