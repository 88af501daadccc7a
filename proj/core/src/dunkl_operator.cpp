#include "dunkl/dunkl_operator.hpp"

#include <cmath>
#include <stdexcept>

#include "dunkl/error.hpp"

namespace dunkl {

using detail::require;

double apply_T(const SmoothFunction& f, double k, double x) {
  require(k >= 0.0, "apply_T: k must be >= 0");
  Jet j = f(x);
  if (x == 0.0) return (1.0 + 2.0 * k) * j.d1;
  return j.d1 + k * (j.value - f(-x).value) / x;
}

double apply_laplacian(const SmoothFunction& f, double k, double x) {
  require(k >= 0.0, "apply_laplacian: k must be >= 0");
  Jet j = f(x);
  if (x == 0.0) return (1.0 + 2.0 * k) * j.d2;
  return j.d2 + 2.0 * k * j.d1 / x - k * (j.value - f(-x).value) / (x * x);
}

namespace {

void require_stencil(const SampledFunction& f, std::size_t i) {
  const auto& g = f.grid();
  require(g.kind() == GridKind::uniform, "stencil derivative needs a uniform grid");
  if (i < 2 || i + 2 >= g.size()) throw std::out_of_range("stencil leaves the grid at node " + std::to_string(i));
}

cplx stencil_d1(const SampledFunction& f, std::size_t i) {
  double h = f.grid().spacing();
  return (f[i - 2] - 8.0 * f[i - 1] + 8.0 * f[i + 1] - f[i + 2]) / (12.0 * h);
}

cplx stencil_d2(const SampledFunction& f, std::size_t i) {
  double h = f.grid().spacing();
  return (-f[i - 2] + 16.0 * f[i - 1] - 30.0 * f[i] + 16.0 * f[i + 1] - f[i + 2]) / (12.0 * h * h);
}

}  // namespace

cplx apply_T(const SampledFunction& f, std::size_t i) {
  require_stencil(f, i);
  const double k = f.multiplicity().k();
  const double x = f.grid().node(i);
  return stencil_d1(f, i) + k * (f[i] - f[f.grid().mirror(i)]) / x;
}

cplx apply_laplacian(const SampledFunction& f, std::size_t i) {
  require_stencil(f, i);
  const double k = f.multiplicity().k();
  const double x = f.grid().node(i);
  return stencil_d2(f, i) + 2.0 * k * stencil_d1(f, i) / x - k * (f[i] - f[f.grid().mirror(i)]) / (x * x);
}

namespace {

template <class Rule>
SampledFunction spectral_apply(const SampledFunction& f, const HermiteBasis& basis, Rule rule) {
  const Eigen::VectorXcd c = basis.coefficients(f);
  const std::size_t n = basis.size();
  const double k = basis.multiplicity().k();
  std::vector<double> h(n), dh(n), d2(n);
  std::vector<cplx> out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double x = f.grid().node(i);
    basis.evaluate_jets(x, h, dh, d2);
    cplx s = 0.0;
    for (std::size_t m = 0; m < n; ++m) s += c[static_cast<Eigen::Index>(m)] * rule(k, x, m, h[m], dh[m], d2[m]);
    out[i] = s;
  }
  return f.with_values(std::move(out));
}

}  // namespace

SampledFunction apply_T_spectral(const SampledFunction& f, const HermiteBasis& basis) {
  return spectral_apply(f, basis, [](double k, double x, std::size_t n, double v, double d1, double) {
    if (x == 0.0) return (1.0 + 2.0 * k) * d1;
    return d1 + ((n % 2 == 1) ? 2.0 * k * v / x : 0.0);
  });
}

SampledFunction apply_laplacian_spectral(const SampledFunction& f, const HermiteBasis& basis) {
  return spectral_apply(f, basis, [](double k, double x, std::size_t n, double v, double d1, double d2) {
    if (x == 0.0) return (1.0 + 2.0 * k) * d2;
    return d2 + 2.0 * k * d1 / x - ((n % 2 == 1) ? 2.0 * k * v / (x * x) : 0.0);
  });
}

OperatorKind OperatorKind::laplacian() { return {Type::laplacian, {}, "laplacian"}; }

OperatorKind OperatorKind::oscillator() {
  return {Type::oscillator, [](double x) { return x * x; }, "oscillator"};
}

OperatorKind OperatorKind::schrodinger(PotentialFn v, std::string label) {
  require(static_cast<bool>(v), "schrodinger: empty potential");
  return {Type::schrodinger, std::move(v), std::move(label)};
}

const char* to_string(BasisTag t) {
  switch (t) {
    case BasisTag::grid: return "grid";
    case BasisTag::hermite: return "hermite";
    case BasisTag::dvr: return "dvr";
  }
  return "?";
}

Eigen::MatrixXcd OperatorMatrix::symmetric_form() const {
  if (masses.empty()) return entries;
  Eigen::VectorXd s(dim());
  for (Eigen::Index i = 0; i < dim(); ++i) s[i] = std::sqrt(masses[static_cast<std::size_t>(i)]);
  Eigen::VectorXd inv = s.cwiseInverse();
  return s.asDiagonal() * entries * inv.asDiagonal();
}

double OperatorMatrix::symmetry_defect() const {
  Eigen::MatrixXcd s = symmetric_form();
  double scale = s.cwiseAbs().maxCoeff();
  if (scale == 0.0) return 0.0;
  return (s - s.adjoint()).cwiseAbs().maxCoeff() / scale;
}

bool OperatorMatrix::is_diagonal(double tol) const {
  for (Eigen::Index i = 0; i < dim(); ++i)
    for (Eigen::Index j = 0; j < dim(); ++j)
      if (i != j && std::abs(entries(i, j)) > tol) return false;
  return true;
}

OperatorMatrix make_diagonal_operator(const Eigen::VectorXd& diag, const MultiplicityParam& m) {
  OperatorMatrix op;
  op.entries = diag.cast<cplx>().asDiagonal();
  op.basis = BasisTag::hermite;
  op.masses.assign(static_cast<std::size_t>(diag.size()), 1.0);
  op.multiplicity = m;
  return op;
}

namespace {

bool has_potential(const OperatorKind& kind) { return kind.type == OperatorKind::Type::schrodinger; }

OperatorMatrix grid_operator(const OperatorKind& kind, const GridBasis& spec, const MultiplicityParam& m) {
  const auto grid = QuadratureGrid::uniform(spec.radius, spec.n);
  const std::size_t n = grid.size();
  const double h = grid.spacing();
  const double k = m.k();
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  std::vector<double> mu(n);
  for (std::size_t j = 0; j < n; ++j) mu[j] = interval_measure(grid.node(j) - 0.5 * h, grid.node(j) + 0.5 * h, k);
  // flux weights at cell faces, Dirichlet ghost values beyond +-R
  auto face = [&](double x) { return weight(x, k) / h; };
  for (std::size_t j = 0; j < n; ++j) {
    const auto J = static_cast<Eigen::Index>(j);
    const double x = grid.node(j);
    const double wl = face(x - 0.5 * h), wr = face(x + 0.5 * h);
    a(J, J) += (wl + wr) / mu[j];
    if (j > 0) a(J, J - 1) -= wl / mu[j];
    if (j + 1 < n) a(J, J + 1) -= wr / mu[j];
    const auto M = static_cast<Eigen::Index>(grid.mirror(j));
    a(J, J) += k / (x * x);
    a(J, M) -= k / (x * x);
    if (kind.type == OperatorKind::Type::oscillator) a(J, J) += x * x;
    if (has_potential(kind)) a(J, J) += kind.potential(x);
  }
  OperatorMatrix op;
  op.entries = a.cast<cplx>();
  op.basis = BasisTag::grid;
  op.nodes.assign(grid.nodes().begin(), grid.nodes().end());
  op.masses = std::move(mu);
  op.multiplicity = m;
  return op;
}

// (J_{N+1}^2) restricted to the first N rows/columns: matrix of x^2 in the basis.
Eigen::MatrixXd x_squared_section(const HermiteBasis& b, std::size_t n) {
  Eigen::MatrixXd x2 = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const auto I = static_cast<Eigen::Index>(i);
    double ai = i > 0 ? b.recurrence(i) : 0.0;
    double ai1 = b.recurrence(i + 1);
    x2(I, I) = ai * ai + ai1 * ai1;
    if (i + 2 < n) {
      x2(I, I + 2) = ai1 * b.recurrence(i + 2);
      x2(I + 2, I) = x2(I, I + 2);
    }
  }
  return x2;
}

OperatorMatrix hermite_operator(const OperatorKind& kind, const HermiteSection& spec, const MultiplicityParam& m) {
  require(spec.n >= 1, "hermite section: N >= 1");
  const HermiteBasis b(m, spec.n);
  const auto N = static_cast<Eigen::Index>(spec.n);
  Eigen::MatrixXd a = b.eigenvalues().asDiagonal();
  if (kind.type != OperatorKind::Type::oscillator) a -= x_squared_section(b, spec.n);
  if (has_potential(kind)) {
    const auto rule = b.gauss_rule(spec.n + 64);
    const auto M = static_cast<Eigen::Index>(rule.nodes.size());
    Eigen::MatrixXd u(M, N);
    Eigen::VectorXd v(M);
    std::vector<double> h(spec.n);
    for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
      b.evaluate(rule.nodes[j], h);
      double s = std::sqrt(rule.weights[j]);
      v[static_cast<Eigen::Index>(j)] = kind.potential(rule.nodes[j]);
      for (std::size_t i = 0; i < spec.n; ++i) u(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = s * h[i];
    }
    a += u.transpose() * v.asDiagonal() * u;
  }
  OperatorMatrix op;
  op.entries = a.cast<cplx>();
  op.basis = BasisTag::hermite;
  op.masses.assign(spec.n, 1.0);
  op.multiplicity = m;
  return op;
}

OperatorMatrix dvr_operator(const OperatorKind& kind, const DvrBasis& spec, const MultiplicityParam& m) {
  require(spec.n >= 2, "dvr: N >= 2");
  require(m.k() == 0.0 || spec.n % 2 == 0, "dvr: N must be even for k > 0 (no node at 0)");
  const HermiteBasis b(m, spec.n);
  const auto rule = b.gauss_rule(spec.n);
  const auto N = static_cast<Eigen::Index>(spec.n);
  Eigen::MatrixXd u(N, N);
  std::vector<double> h(spec.n);
  for (std::size_t j = 0; j < spec.n; ++j) {
    b.evaluate(rule.nodes[j], h);
    double s = std::sqrt(rule.weights[j]);
    for (std::size_t i = 0; i < spec.n; ++i) u(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = s * h[i];
  }
  Eigen::MatrixXd a = u * b.eigenvalues().asDiagonal() * u.transpose();
  for (std::size_t j = 0; j < spec.n; ++j) {
    const auto J = static_cast<Eigen::Index>(j);
    const double x = rule.nodes[j];
    if (kind.type != OperatorKind::Type::oscillator) a(J, J) -= x * x;
    if (has_potential(kind)) a(J, J) += kind.potential(x);
  }
  a = 0.5 * (a + a.transpose());
  OperatorMatrix op;
  op.entries = a.cast<cplx>();
  op.basis = BasisTag::dvr;
  op.nodes = rule.nodes;
  op.masses.assign(spec.n, 1.0);
  op.node_scale.resize(spec.n);
  for (std::size_t j = 0; j < spec.n; ++j) op.node_scale[j] = std::sqrt(rule.weights[j]);
  op.multiplicity = m;
  return op;
}

}  // namespace

OperatorMatrix discretize_operator(const OperatorKind& kind, const BasisSpec& basis, const MultiplicityParam& m) {
  require(m.rank() == 1, "discretize_operator: rank one only");
  OperatorMatrix op = std::visit(
      [&](const auto& spec) -> OperatorMatrix {
        using S = std::decay_t<decltype(spec)>;
        if constexpr (std::is_same_v<S, GridBasis>) return grid_operator(kind, spec, m);
        else if constexpr (std::is_same_v<S, HermiteSection>) return hermite_operator(kind, spec, m);
        else return dvr_operator(kind, spec, m);
      },
      basis);
  if (op.symmetry_defect() > 1e-10)
    throw NumericalError("discretize_operator: assembled matrix is not symmetric");
  return op;
}

}  // namespace dunkl
