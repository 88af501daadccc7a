#include "dunkl/schrodinger.hpp"

#include <cmath>

#include "dunkl/dunkl_operator.hpp"
#include "dunkl/error.hpp"
#include "dunkl/heat.hpp"

namespace dunkl {

using detail::require;

Potential::Potential(std::function<double(double)> v, std::string label) : v_(std::move(v)), label_(std::move(label)) {
  require(static_cast<bool>(v_), "Potential: empty evaluator");
}

Potential Potential::zero() { return {[](double) { return 0.0; }, "zero"}; }
Potential Potential::harmonic() { return {[](double x) { return x * x; }, "x2"}; }
Potential Potential::quartic() { return {[](double x) { return x * x * x * x; }, "x4"}; }

Potential Potential::well(double height, double width) {
  require(height >= 0.0 && width > 0.0, "well: height >= 0 and width > 0");
  return {[height, width](double x) { return std::abs(x) < width ? 0.0 : height; }, "well"};
}

Potential Potential::from_label(const std::string& label) {
  if (label == "zero") return zero();
  if (label == "x2") return harmonic();
  if (label == "x4") return quartic();
  if (label == "well") return well();
  throw std::invalid_argument("unknown potential '" + label + "' (expected zero, x2, x4 or well)");
}

bool Potential::nonnegative_on(const QuadratureGrid& g) const {
  for (double x : g.nodes())
    if (!(v_(x) >= 0.0)) return false;
  return true;
}

SchrodingerPropagator::SchrodingerPropagator(const MultiplicityParam& m, Potential v, std::size_t n)
    : v_(std::move(v)), basis_(m, n) {
  const OperatorMatrix op = discretize_operator(OperatorKind::schrodinger([this](double x) { return v_(x); }, v_.label()),
                                                DvrBasis{n}, m);
  nodes_ = op.nodes;
  for (double x : nodes_)
    require(v_(x) >= 0.0, "SchrodingerPropagator: potential must be nonnegative at every node");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(op.entries.real());
  if (es.info() != Eigen::Success) throw ConvergenceError("SchrodingerPropagator: eigensolver failed");
  lambda_ = es.eigenvalues();
  // DVR coordinates a_j = sqrt(w_j) f(x_j) relate to Hermite coefficients by a = U c
  const auto N = static_cast<Eigen::Index>(n);
  Eigen::MatrixXd u(N, N);
  std::vector<double> h(n);
  for (std::size_t j = 0; j < n; ++j) {
    basis_.evaluate(nodes_[j], h);
    for (std::size_t i = 0; i < n; ++i)
      u(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = op.node_scale[j] * h[i];
  }
  vectors_ = u.transpose() * es.eigenvectors();
}

SampledFunction SchrodingerPropagator::apply(const SampledFunction& f, double t) const {
  require(t >= 0.0, "propagator: t must be >= 0");
  Eigen::VectorXcd c = basis_.coefficients(f);
  Eigen::VectorXd decay = (-t * lambda_).array().exp();
  Eigen::VectorXcd e = vectors_.transpose().cast<cplx>() * c;
  e = decay.cast<cplx>().asDiagonal() * e;
  return basis_.synthesize(vectors_.cast<cplx>() * e, f.grid_ptr());
}

Eigen::MatrixXd SchrodingerPropagator::kernel_matrix(double t, std::span<const double> xs,
                                                     std::span<const double> ys) const {
  require(t > 0.0, "kernel: t must be positive");
  const auto n = static_cast<Eigen::Index>(basis_.size());
  auto sample = [&](std::span<const double> pts) {
    Eigen::MatrixXd hm(n, static_cast<Eigen::Index>(pts.size()));
    std::vector<double> h(basis_.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
      basis_.evaluate(pts[i], h);
      for (Eigen::Index j = 0; j < n; ++j) hm(j, static_cast<Eigen::Index>(i)) = h[static_cast<std::size_t>(j)];
    }
    return hm;
  };
  Eigen::VectorXd decay = (-t * lambda_).array().exp();
  Eigen::MatrixXd a = vectors_.transpose() * sample(xs);
  Eigen::MatrixXd b = vectors_.transpose() * sample(ys);
  return a.transpose() * decay.asDiagonal() * b;
}

double SchrodingerPropagator::kernel(double t, double x, double y) const {
  const double xs[1] = {x}, ys[1] = {y};
  return kernel_matrix(t, xs, ys)(0, 0);
}

double schrodinger_kernel(const SchrodingerPropagator& p, double t, double x, double y) {
  double w = p.kernel(t, x, y);
  if (w < -1e-10) throw NumericalError("schrodinger_kernel: negative kernel value, the basis is too small");
  return w;
}

SampledFunction trotter_evolve(const SampledFunction& f, const Potential& v, double t, int n, const TransformPlan& plan) {
  require(n >= 1 && t > 0.0, "trotter_evolve: n >= 1 and t > 0");
  require(v.nonnegative_on(f.grid()), "trotter_evolve: potential must be nonnegative");
  std::vector<cplx> damp(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) damp[i] = std::exp(-t * v(f.grid().node(i)) / n);
  SampledFunction g = f;
  double norm = dunkl_norm(f, 2.0, 1.0);
  for (int s = 0; s < n; ++s) {
    std::vector<cplx> w(g.values());
    for (std::size_t i = 0; i < w.size(); ++i) w[i] *= damp[i];
    g = heat_apply(g.with_values(std::move(w)), t / n, plan);
    double next = dunkl_norm(g, 2.0, 1.0);
    if (next > norm * (1.0 + 1e-9)) throw NumericalError("trotter_evolve: L2 norm grew, the splitting is unstable");
    norm = next;
  }
  return g;
}

namespace {
double rel_l2(const SampledFunction& a, const SampledFunction& b) {
  auto q = a.masses();
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    num += q[i] * std::norm(a[i] - b[i]);
    den += q[i] * std::norm(b[i]);
  }
  return std::sqrt(num / den);
}
}  // namespace

TrotterStudy trotter_convergence(const SampledFunction& f, const SchrodingerPropagator& ref, double t,
                                 const std::vector<int>& steps, const TransformPlan& plan) {
  require(steps.size() >= 2, "trotter_convergence: need at least two step counts");
  TrotterStudy s;
  const SampledFunction exact = ref.apply(f, t);
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (int n : steps) {
    double e = rel_l2(trotter_evolve(f, ref.potential(), t, n, plan), exact);
    s.steps.push_back(n);
    s.errors.push_back(e);
    double lx = std::log(static_cast<double>(n)), ly = std::log(e);
    sx += lx, sy += ly, sxx += lx * lx, sxy += lx * ly;
  }
  const double m = static_cast<double>(steps.size());
  s.slope = -(m * sxy - sx * sy) / (m * sxx - sx * sx);
  return s;
}

DominationResult domination_check(const SampledFunction& f, const SchrodingerPropagator& p, double t,
                                  const TransformPlan& plan) {
  DominationResult r;
  auto lf = p.apply(f, t);
  std::vector<cplx> av(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) av[i] = std::abs(f[i]);
  auto absf = f.with_values(av);
  auto af = heat_apply(absf, t, plan);
  auto lpos = p.apply(absf, t);
  r.max_excess = -std::numeric_limits<double>::infinity();
  r.min_positive = std::numeric_limits<double>::infinity();
  double sup = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    r.max_excess = std::max(r.max_excess, std::abs(lf[i]) - af[i].real());
    r.min_positive = std::min(r.min_positive, lpos[i].real());
    sup = std::max(sup, std::abs(lf[i]));
  }
  const double n2 = dunkl_norm(f, 2.0, 1.0);
  r.linfty_ratio = sup / n2;
  r.l2_ratio = dunkl_norm(lf, 2.0, 1.0) / n2;
  return r;
}

SandwichResult sandwich_check(const SchrodingerPropagator& p, double t, std::span<const double> points) {
  const auto w = p.kernel_matrix(t, points, points);
  SandwichResult r;
  r.min_w = std::numeric_limits<double>::infinity();
  r.max_excess = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = 0; j < points.size(); ++j) {
      const double wij = w(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      r.min_w = std::min(r.min_w, wij);
      r.max_excess = std::max(r.max_excess, wij - heat_kernel_K(t, points[i], points[j], p.multiplicity()));
    }
  return r;
}

}  // namespace dunkl
