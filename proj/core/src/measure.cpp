#include "dunkl/measure.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "dunkl/error.hpp"

namespace dunkl {

using detail::require;

MultiplicityParam::MultiplicityParam(double k) : MultiplicityParam(std::vector<double>{k}) {}

MultiplicityParam::MultiplicityParam(std::vector<double> k) : k_(std::move(k)) {
  require(!k_.empty(), "multiplicity: need at least one coordinate");
  for (double v : k_) require(std::isfinite(v) && v >= 0.0, "multiplicity: k must be >= 0");
  gamma_ = std::accumulate(k_.begin(), k_.end(), 0.0);
}

double weight(double x, double k) {
  if (k == 0.0) return 1.0;
  return std::pow(std::abs(x), 2.0 * k);
}

double weight(std::span<const double> x, const MultiplicityParam& m) {
  require(x.size() == m.rank(), "weight: dimension mismatch");
  double w = 1.0;
  for (std::size_t j = 0; j < x.size(); ++j) w *= weight(x[j], m.k(j));
  return w;
}

double gaussian_constant(const MultiplicityParam& m) {
  double c = 1.0;
  for (double k : m.values()) c *= std::pow(2.0, k + 0.5) * std::tgamma(k + 0.5);
  return c;
}

namespace {
// int_0^x |s|^{2k} ds with sign
double signed_power_antiderivative(double x, double k) {
  double p = 2.0 * k + 1.0;
  return std::copysign(std::pow(std::abs(x), p) / p, x);
}
}  // namespace

double interval_measure(double a, double b, double k) {
  require(a <= b, "interval_measure: a > b");
  return signed_power_antiderivative(b, k) - signed_power_antiderivative(a, k);
}

double ball_measure(double center, double r, const MultiplicityParam& m) {
  require(m.rank() == 1, "ball_measure: rank one only");
  require(r > 0.0, "ball_measure: r must be positive");
  return interval_measure(center - r, center + r, m.k());
}

double unit_ball_measure(const MultiplicityParam& m) { return ball_measure(0.0, 1.0, m); }

GaussRule gauss_from_recurrence(std::span<const double> a, std::span<const double> b, double mu0) {
  const auto n = static_cast<Eigen::Index>(a.size());
  require(n > 0 && b.size() + 1 >= a.size(), "gauss_from_recurrence: size mismatch");
  Eigen::VectorXd diag(n), sub(std::max<Eigen::Index>(n - 1, 0));
  for (Eigen::Index i = 0; i < n; ++i) diag[i] = a[i];
  for (Eigen::Index i = 0; i + 1 < n; ++i) sub[i] = std::sqrt(b[i + 1]);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  GaussRule r;
  r.nodes.resize(n);
  r.weights.resize(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    r.nodes[i] = es.eigenvalues()[i];
    double v = es.eigenvectors()(0, i);
    r.weights[i] = mu0 * v * v;
  }
  return r;
}

double doubling_scan(const MultiplicityParam& m, std::size_t centers, std::size_t radii, double x_max, double r_min,
                     double r_max) {
  require(centers >= 2 && radii >= 2 && x_max > 0.0 && r_min > 0.0 && r_max > r_min, "doubling_scan: bad scan");
  double sup = 0.0;
  for (std::size_t i = 0; i < centers; ++i) {
    const double x = -x_max + 2.0 * x_max * static_cast<double>(i) / static_cast<double>(centers - 1);
    for (std::size_t j = 0; j < radii; ++j) {
      const double r = r_min * std::pow(r_max / r_min, static_cast<double>(j) / static_cast<double>(radii - 1));
      sup = std::max(sup, ball_measure(x, 2.0 * r, m) / ball_measure(x, r, m));
    }
  }
  return sup;
}

GaussRule gauss_legendre(std::size_t n) {
  require(n >= 1, "gauss_legendre: n >= 1");
  std::vector<double> a(n, 0.0), b(n, 0.0);
  for (std::size_t j = 1; j < n; ++j) {
    double jj = static_cast<double>(j);
    b[j] = jj * jj / (4.0 * jj * jj - 1.0);
  }
  GaussRule r = gauss_from_recurrence(a, b, 2.0);
  // Polish nodes by Newton on P_n and use the derivative formula for weights;
  // eigenvector weights lose a few digits for large n.
  for (std::size_t i = 0; i < n; ++i) {
    double x = r.nodes[i];
    double dp = 1.0;
    for (int it = 0; it < 3; ++it) {
      double p0 = 1.0, p1 = x;
      for (std::size_t j = 2; j <= n; ++j) {
        double jj = static_cast<double>(j);
        double p2 = ((2.0 * jj - 1.0) * x * p1 - (jj - 1.0) * p0) / jj;
        p0 = p1;
        p1 = p2;
      }
      dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
      x -= p1 / dp;
    }
    r.nodes[i] = x;
    r.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  // enforce exact symmetry
  for (std::size_t i = 0; i < n / 2; ++i) {
    double x = 0.5 * (r.nodes[n - 1 - i] - r.nodes[i]);
    double w = 0.5 * (r.weights[i] + r.weights[n - 1 - i]);
    r.nodes[i] = -x;
    r.nodes[n - 1 - i] = x;
    r.weights[i] = r.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) r.nodes[n / 2] = 0.0;
  return r;
}

GaussRule gauss_jacobi(std::size_t n, double alpha, double beta) {
  require(n >= 1 && alpha > -1.0 && beta > -1.0, "gauss_jacobi: bad parameters");
  std::vector<double> a(n), b(n, 0.0);
  const double ab = alpha + beta;
  a[0] = (beta - alpha) / (ab + 2.0);
  for (std::size_t j = 1; j < n; ++j) {
    double jj = static_cast<double>(j);
    double s = 2.0 * jj + ab;
    a[j] = (beta * beta - alpha * alpha) / (s * (s + 2.0));
    if (j == 1) {
      b[j] = 4.0 * (1.0 + alpha) * (1.0 + beta) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
    } else {
      b[j] = 4.0 * jj * (jj + alpha) * (jj + beta) * (jj + ab) / (s * s * (s + 1.0) * (s - 1.0));
    }
  }
  double mu0 = std::exp((ab + 1.0) * std::log(2.0) + std::lgamma(alpha + 1.0) +
                        std::lgamma(beta + 1.0) - std::lgamma(ab + 2.0));
  return gauss_from_recurrence(a, b, mu0);
}

double integrate(const std::function<double(double)>& f, std::span<const double> breakpoints,
                 double max_panel, std::size_t order) {
  require(breakpoints.size() >= 2 && max_panel > 0.0, "integrate: bad breakpoints");
  static thread_local std::size_t cached_order = 0;
  static thread_local GaussRule rule;
  if (cached_order != order) {
    rule = gauss_legendre(order);
    cached_order = order;
  }
  double total = 0.0;
  for (std::size_t s = 0; s + 1 < breakpoints.size(); ++s) {
    double a = breakpoints[s], b = breakpoints[s + 1];
    if (!(b > a)) continue;
    auto panels = static_cast<std::size_t>(std::ceil((b - a) / max_panel));
    double h = (b - a) / static_cast<double>(panels);
    for (std::size_t p = 0; p < panels; ++p) {
      double mid = a + (static_cast<double>(p) + 0.5) * h;
      for (std::size_t i = 0; i < order; ++i)
        total += 0.5 * h * rule.weights[i] * f(mid + 0.5 * h * rule.nodes[i]);
    }
  }
  return total;
}

QuadratureGrid::QuadratureGrid(std::vector<double> nodes, std::vector<double> weights,
                               double radius, GridKind kind, double spacing)
    : nodes_(std::move(nodes)),
      weights_(std::move(weights)),
      radius_(radius),
      kind_(kind),
      spacing_(spacing) {}

QuadratureGrid QuadratureGrid::composite_gauss_legendre(double radius, std::size_t panels,
                                                        std::size_t order, double origin_exponent) {
  require(radius > 0.0, "grid: radius must be positive");
  require(panels >= 2 && panels % 2 == 0, "grid: panel count must be even");
  require(order >= 2, "grid: order >= 2");
  require(origin_exponent >= 0.0, "grid: origin exponent must be >= 0");
  GaussRule g = gauss_legendre(order);
  const bool adapt = origin_exponent > 0.0;
  GaussRule gj = adapt ? gauss_jacobi(order, 0.0, origin_exponent) : GaussRule{};
  std::vector<double> x, w;
  x.reserve(panels * order);
  w.reserve(panels * order);
  double h = 2.0 * radius / static_cast<double>(panels);
  for (std::size_t p = 0; p < panels; ++p) {
    double mid = -radius + (static_cast<double>(p) + 0.5) * h;
    if (adapt && p == panels / 2) {
      // [0, h]: weight (1+u)^b on [-1, 1] maps to (2x/h)^b
      const double scale = std::pow(0.5 * h, origin_exponent + 1.0);
      for (std::size_t i = 0; i < order; ++i) {
        double xi = 0.5 * h * (1.0 + gj.nodes[i]);
        x.push_back(xi);
        w.push_back(scale * gj.weights[i] / std::pow(xi, origin_exponent));
      }
      continue;
    }
    for (std::size_t i = 0; i < order; ++i) {
      x.push_back(mid + 0.5 * h * g.nodes[i]);
      w.push_back(0.5 * h * g.weights[i]);
    }
  }
  // mirror the positive half so that x_{n-1-i} = -x_i bit for bit
  const std::size_t n = x.size();
  for (std::size_t i = 0; i < n / 2; ++i) {
    x[i] = -x[n - 1 - i];
    w[i] = w[n - 1 - i];
  }
  return QuadratureGrid(std::move(x), std::move(w), radius, GridKind::gauss_legendre, 0.0);
}

QuadratureGrid QuadratureGrid::uniform(double radius, std::size_t n) {
  require(radius > 0.0, "grid: radius must be positive");
  require(n >= 4 && n % 2 == 0, "grid: uniform grid needs an even number of cells");
  double h = 2.0 * radius / static_cast<double>(n);
  std::vector<double> x(n), w(n, h);
  for (std::size_t i = 0; i < n / 2; ++i) {
    x[n / 2 + i] = (static_cast<double>(i) + 0.5) * h;
    x[n / 2 - 1 - i] = -x[n / 2 + i];
  }
  return QuadratureGrid(std::move(x), std::move(w), radius, GridKind::uniform, h);
}

QuadratureGrid QuadratureGrid::from_nodes(std::vector<double> nodes, std::vector<double> weights) {
  require(!nodes.empty() && nodes.size() == weights.size(), "grid: nodes/weights size mismatch");
  const std::size_t n = nodes.size();
  for (std::size_t i = 0; i < n; ++i) {
    require(weights[i] > 0.0, "grid: weights must be positive");
    if (i > 0) require(nodes[i] > nodes[i - 1], "grid: nodes must be strictly increasing");
    double scale = std::max(1.0, std::abs(nodes[i]));
    require(std::abs(nodes[i] + nodes[n - 1 - i]) <= 1e-12 * scale, "grid: nodes must be symmetric");
  }
  double radius = std::max(std::abs(nodes.front()), std::abs(nodes.back()));
  return QuadratureGrid(std::move(nodes), std::move(weights), radius, GridKind::custom, 0.0);
}

double QuadratureGrid::integrate(std::span<const double> values) const {
  require(values.size() == size(), "integrate: size mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) s += weights_[i] * values[i];
  return s;
}

bool QuadratureGrid::same_nodes(const QuadratureGrid& other) const {
  return this == &other || (nodes_ == other.nodes_ && weights_ == other.weights_);
}

GridPtr share(QuadratureGrid g) { return std::make_shared<const QuadratureGrid>(std::move(g)); }

GridPtr gauss_grid(std::size_t n, double radius, double k) {
  require(n % 32 == 0 && n >= 64, "gauss_grid: n must be a multiple of 32 and >= 64");
  return share(QuadratureGrid::composite_gauss_legendre(radius, n / 16, 16, 2.0 * k));
}

SampledFunction::SampledFunction(GridPtr grid, MultiplicityParam m, std::vector<cplx> values)
    : grid_(std::move(grid)), m_(std::move(m)), values_(std::move(values)) {
  require(grid_ != nullptr, "sampled function: null grid");
  require(values_.size() == grid_->size(), "sampled function: value count != node count");
  require(m_.rank() == 1, "sampled function: grids are one-dimensional");
}

SampledFunction SampledFunction::with_values(std::vector<cplx> values) const {
  return SampledFunction(grid_, m_, std::move(values));
}

std::vector<double> SampledFunction::masses() const {
  std::vector<double> q(size());
  for (std::size_t i = 0; i < q.size(); ++i)
    q[i] = grid_->weight(i) * dunkl::weight(grid_->node(i), m_.k());
  return q;
}

std::vector<double> SampledFunction::abs() const {
  std::vector<double> a(size());
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = std::abs(values_[i]);
  return a;
}

double SampledFunction::max_difference(const SampledFunction& other) const {
  require(other.size() == size(), "max_difference: size mismatch");
  double d = 0.0;
  for (std::size_t i = 0; i < size(); ++i) d = std::max(d, std::abs(values_[i] - other.values_[i]));
  return d;
}

double dunkl_norm(const SampledFunction& f, double p, double truncation_tol) {
  require(p >= 1.0, "dunkl_norm: p must be >= 1");
  if (std::isinf(p)) {
    double m = 0.0;
    for (auto v : f.values()) m = std::max(m, std::abs(v));
    return m;
  }
  const auto q = f.masses();
  double s = 0.0;
  for (std::size_t i = 0; i < q.size(); ++i) s += q[i] * std::pow(std::abs(f[i]), p);
  if (s == 0.0) return 0.0;
  // density at the outermost nodes stands in for the mass beyond R
  const auto& g = f.grid();
  double edge = 0.0;
  for (std::size_t i : {std::size_t{0}, f.size() - 1})
    edge = std::max(edge, std::pow(std::abs(f[i]), p) * weight(g.node(i), f.multiplicity().k()));
  if (edge > truncation_tol * s)
    throw TruncationError("dunkl_norm: integrand has not decayed at the grid edge");
  return std::pow(s, 1.0 / p);
}

cplx dunkl_inner(const SampledFunction& f, const SampledFunction& g) {
  require(f.size() == g.size(), "dunkl_inner: size mismatch");
  const auto q = f.masses();
  cplx s = 0.0;
  for (std::size_t i = 0; i < q.size(); ++i) s += q[i] * f[i] * std::conj(g[i]);
  return s;
}

}  // namespace dunkl
