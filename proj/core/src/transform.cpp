#include "dunkl/transform.hpp"

#include <boost/math/special_functions/beta.hpp>
#include <cmath>
#include <numbers>

#include "dunkl/error.hpp"
#include "dunkl/special_functions.hpp"

namespace dunkl {

using detail::require;

TransformPlan::TransformPlan(GridPtr source, GridPtr target, MultiplicityParam m, double truncation_tol)
    : source_(std::move(source)), target_(std::move(target)), m_(std::move(m)), tol_(truncation_tol) {
  require(source_ && target_, "TransformPlan: null grid");
  require(m_.rank() == 1, "TransformPlan: rank one grids only");
  require(truncation_tol > 0.0, "TransformPlan: tolerance must be positive");
  ck_ = gaussian_constant(m_);
  const auto n = static_cast<Eigen::Index>(source_->size());
  const auto t = static_cast<Eigen::Index>(target_->size());
  kernel_.resize(t, n);
  const double k = m_.k();
  // E(x, -i xi) at -xi is the conjugate, so fill the upper half of the target and mirror
  for (Eigen::Index i = t / 2; i < t; ++i) {
    const double xi = target_->node(static_cast<std::size_t>(i));
    for (Eigen::Index j = 0; j < n; ++j) kernel_(i, j) = fourier_kernel(k, source_->node(static_cast<std::size_t>(j)), xi);
  }
  for (Eigen::Index i = 0; i < t / 2; ++i) kernel_.row(i) = kernel_.row(t - 1 - i).conjugate();
  if (t % 2 == 1) {
    // odd target grids have a node at 0 (kernel row of ones), already filled above
  }
}

TransformPlan::TransformPlan(GridPtr grid, MultiplicityParam m, double truncation_tol)
    : TransformPlan(grid, grid, std::move(m), truncation_tol) {}

namespace {

void check_decay(const SampledFunction& f, double tol, const char* where) {
  const auto& g = f.grid();
  const double k = f.multiplicity().k();
  double peak = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) peak = std::max(peak, std::abs(f[i]) * weight(g.node(i), k));
  if (peak == 0.0) return;
  double edge = 0.0;
  for (std::size_t i : {std::size_t{0}, f.size() - 1}) edge = std::max(edge, std::abs(f[i]) * weight(g.node(i), k));
  if (edge > tol * peak) throw TruncationError(std::string(where) + ": input has not decayed at the grid edge");
}

Eigen::VectorXcd weighted(const SampledFunction& f) {
  const auto q = f.masses();
  Eigen::VectorXcd v(static_cast<Eigen::Index>(f.size()));
  for (std::size_t i = 0; i < f.size(); ++i) v[static_cast<Eigen::Index>(i)] = q[i] * f[i];
  return v;
}

std::vector<cplx> to_vector(const Eigen::VectorXcd& v) { return std::vector<cplx>(v.data(), v.data() + v.size()); }

}  // namespace

SampledFunction forward(const SampledFunction& f, const TransformPlan& plan) {
  require(f.multiplicity() == plan.multiplicity(), "forward: multiplicity mismatch");
  require(f.grid().same_nodes(*plan.source()), "forward: function is not on the plan's source grid");
  check_decay(f, plan.truncation_tolerance(), "forward");
  Eigen::VectorXcd out = plan.kernel() * weighted(f) / plan.normalization();
  return SampledFunction(plan.target(), plan.multiplicity(), to_vector(out));
}

SampledFunction inverse(const SampledFunction& g, const TransformPlan& plan) {
  require(g.multiplicity() == plan.multiplicity(), "inverse: multiplicity mismatch");
  require(g.grid().same_nodes(*plan.target()), "inverse: function is not on the plan's target grid");
  check_decay(g, plan.truncation_tolerance(), "inverse");
  Eigen::VectorXcd out = plan.kernel().adjoint() * weighted(g) / plan.normalization();
  return SampledFunction(plan.source(), plan.multiplicity(), to_vector(out));
}

SampledFunction apply_multiplier(const SampledFunction& f, const TransformPlan& plan,
                                 const std::function<cplx(double)>& mult) {
  SampledFunction g = forward(f, plan);
  std::vector<cplx> v(g.values());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] *= mult(g.grid().node(i));
  return inverse(g.with_values(std::move(v)), plan);
}

double radial_transform(const std::function<double(double)>& profile, const MultiplicityParam& m, double r,
                        const RadialQuadrature& q) {
  require(r >= 0.0, "radial_transform: |x| must be >= 0");
  require(q.upper > 0.0 && q.panels >= 1 && q.order >= 2, "radial_transform: bad quadrature");
  const double d = m.dimension();
  const double nu = m.gamma() + 0.5 * d - 1.0;
  const double power = 2.0 * m.gamma() + d - 1.0;
  const double b = std::exp(-nu * std::log(2.0) - std::lgamma(nu + 1.0));
  const BesselOrder order(nu);
  double peak = 0.0;
  auto integrand = [&](double s) {
    double v = profile(s) * std::pow(s, power);
    peak = std::max(peak, std::abs(v));
    return v * normalized_bessel(order, s * r);
  };
  std::vector<double> br{0.0, q.upper};
  double val = integrate(integrand, br, q.upper / static_cast<double>(q.panels), q.order);
  double tail = std::abs(profile(q.upper) * std::pow(q.upper, power));
  if (!std::isfinite(val) || tail > q.truncation_tol * std::max(peak, 1e-300))
    throw TruncationError("radial_transform: profile is not integrable on the truncated half-line");
  return b * val;
}

SampledFunction translate(const SampledFunction& f, double x0, const TransformPlan& plan) {
  const double k = plan.multiplicity().k();
  return apply_multiplier(f, plan, [k, x0](double xi) { return std::conj(fourier_kernel(k, x0, xi)); });
}

double translate_radial(const std::function<double(double)>& profile, double x0, double y, double k,
                        std::size_t nodes) {
  require(k >= 0.0, "translate_radial: k must be >= 0");
  if (k == 0.0 || x0 == 0.0 || y == 0.0) {
    if (k == 0.0) return profile(std::abs(x0 + y));
    return profile(std::sqrt(x0 * x0 + y * y));
  }
  const GaussRule rule = gauss_jacobi(nodes, k - 1.0, k);
  double s = 0.0, mass = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    double rho2 = x0 * x0 + y * y + 2.0 * x0 * y * rule.nodes[i];
    s += rule.weights[i] * profile(std::sqrt(std::max(rho2, 0.0)));
    mass += rule.weights[i];
  }
  return s / mass;
}

double translate_ball_indicator(double r, double x, double y, double k) {
  require(r > 0.0 && k >= 0.0, "translate_ball_indicator: bad arguments");
  if (k == 0.0) return std::abs(x - y) < r ? 1.0 : 0.0;
  const double xy = x * y;
  if (xy == 0.0) return x * x + y * y < r * r ? 1.0 : 0.0;
  // |.|^2 = x^2 + y^2 - 2xy t; the condition is t > t0 (xy > 0) or t < t0 (xy < 0)
  const double t0 = (x * x + y * y - r * r) / (2.0 * xy);
  const double u0 = std::clamp(0.5 * (1.0 - t0), 0.0, 1.0);
  const double upper = u0 <= 0.0 ? 0.0 : (u0 >= 1.0 ? 1.0 : boost::math::ibeta(k, k + 1.0, u0));
  return xy > 0.0 ? upper : 1.0 - upper;
}

namespace {
bool is_even(const SampledFunction& f) {
  double scale = 0.0, defect = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    scale = std::max(scale, std::abs(f[i]));
    defect = std::max(defect, std::abs(f[i] - f[f.grid().mirror(i)]));
  }
  return defect <= 1e-12 * scale;
}
}  // namespace

SampledFunction convolve(const SampledFunction& f, const SampledFunction& g, const TransformPlan& plan) {
  require(is_even(f) || is_even(g), "convolve: one factor must be radial (even)");
  SampledFunction ff = forward(f, plan), fg = forward(g, plan);
  std::vector<cplx> v(ff.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = ff[i] * fg[i];
  return inverse(ff.with_values(std::move(v)), plan);
}

}  // namespace dunkl
