#include "dunkl/heat.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "dunkl/error.hpp"
#include "dunkl/special_functions.hpp"

namespace dunkl {

using detail::require;

double log_heat_kernel(double t, double x, double y, const MultiplicityParam& m) {
  require(t > 0.0, "heat kernel: t must be positive");
  require(m.rank() == 1, "heat kernel: rank one arguments");
  const double g = m.gamma() + 0.5;
  return -g * std::log(2.0 * t) - std::log(gaussian_constant(m)) - (x * x + y * y) / (4.0 * t) +
         log_dunkl_kernel(m.k(), x * y / (2.0 * t));
}

double heat_kernel_K(double t, double x, double y, const MultiplicityParam& m) {
  return std::exp(log_heat_kernel(t, x, y, m));
}

double heat_kernel_K(double t, std::span<const double> x, std::span<const double> y, const MultiplicityParam& m) {
  require(t > 0.0, "heat kernel: t must be positive");
  require(x.size() == m.rank() && y.size() == m.rank(), "heat kernel: dimension mismatch");
  // the weight, c_k and E_k all factor over the coordinates
  double l = 0.0;
  for (std::size_t j = 0; j < x.size(); ++j) l += log_heat_kernel(t, x[j], y[j], MultiplicityParam(m.k(j)));
  return std::exp(l);
}

SampledFunction heat_apply(const SampledFunction& f, double t, const TransformPlan& plan) {
  require(t > 0.0, "heat_apply: t must be positive");
  return apply_multiplier(f, plan, [t](double xi) { return cplx(std::exp(-t * xi * xi)); });
}

SampledFunction heat_apply_kernel(const SampledFunction& f, double t) {
  require(t > 0.0, "heat_apply_kernel: t must be positive");
  const auto q = f.masses();
  const auto& g = f.grid();
  std::vector<cplx> out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    cplx s = 0.0;
    for (std::size_t j = 0; j < f.size(); ++j) {
      if (q[j] == 0.0 || f[j] == 0.0) continue;
      s += heat_kernel_K(t, g.node(i), g.node(j), f.multiplicity()) * q[j] * f[j];
    }
    out[i] = s;
  }
  return f.with_values(std::move(out));
}

double ball_average(const SampledFunction& f, double x, double r) {
  require(r > 0.0, "ball_average: r must be positive");
  const double k = f.multiplicity().k();
  const auto q = f.masses();
  cplx s = 0.0;
  for (std::size_t j = 0; j < f.size(); ++j) {
    if (f[j] == 0.0) continue;
    double tau = translate_ball_indicator(r, x, f.grid().node(j), k);
    if (tau != 0.0) s += tau * q[j] * f[j];
  }
  const double dk = 2.0 / (2.0 * k + 1.0);
  return std::abs(s) / (dk * std::pow(r, 2.0 * k + 1.0));
}

double maximal_function(const SampledFunction& f, double x, const MaximalOptions& opt) {
  require(opt.j_min <= opt.j_max, "maximal_function: empty radius range");
  double best = 0.0;
  for (int j = opt.j_min; j <= opt.j_max; ++j) best = std::max(best, ball_average(f, x, std::ldexp(1.0, j)));
  return best;
}

double tail_mass(double t, double x, double r, const MultiplicityParam& m) {
  require(t > 0.0 && r > 0.0, "tail_mass: t and r must be positive");
  const double k = m.k();
  const double reach = std::abs(x) + r + 40.0 * std::sqrt(t);
  std::vector<double> br{-reach, reach, 0.0, x - r, x + r, -x - r, -x + r};
  std::sort(br.begin(), br.end());
  br.erase(std::remove_if(br.begin(), br.end(), [&](double b) { return std::abs(b) > reach; }), br.end());
  br.erase(std::unique(br.begin(), br.end()), br.end());
  auto integrand = [&](double y) {
    if (std::min(std::abs(y - x), std::abs(y + x)) <= r) return 0.0;
    return heat_kernel_K(t, x, y, m) * weight(y, k);
  };
  return integrate(integrand, br, 0.25 * std::sqrt(t), 16);
}

BallComparison ball_comparison_check(double t, double z, double x, const MultiplicityParam& m, std::size_t samples) {
  require(t > 0.0 && samples >= 2, "ball_comparison_check: bad arguments");
  const double s = std::sqrt(t);
  BallComparison b{0.0, 0.0, std::numeric_limits<double>::infinity()};
  for (std::size_t i = 0; i < samples; ++i) {
    double y = z - s + 2.0 * s * static_cast<double>(i) / static_cast<double>(samples - 1);
    b.sup_kt = std::max(b.sup_kt, heat_kernel_K(t, x, y, m));
    b.inf_k2t = std::min(b.inf_k2t, heat_kernel_K(2.0 * t, x, y, m));
  }
  b.ratio = b.sup_kt / b.inf_k2t;
  return b;
}

namespace {

template <class Bound>
ScanSummary domination(const MultiplicityParam& m, std::span<const double> ts, std::span<const double> xs,
                       Bound bound) {
  ScanSummary s;
  for (double t : ts)
    for (double x : xs)
      for (double y : xs) {
        double dist = std::min(std::abs(y - x), std::abs(y + x));
        double r = std::exp(log_heat_kernel(t, x, y, m) - log_heat_kernel(2.0 * t, x, y, m) - bound(t, dist));
        ++s.points;
        if (r > s.max_ratio) s = {r, x, y, t, s.points};
      }
  return s;
}

void note(ScanSummary& s, double r, double x, double y, double t) {
  ++s.points;
  if (r > s.max_ratio || std::isnan(r)) {
    s.max_ratio = r;
    s.x = x;
    s.y = y;
    s.t = t;
  }
}

}  // namespace

ScanSummary heat_domination_scan(const MultiplicityParam& m, std::span<const double> ts, std::span<const double> xs) {
  const double lc = (m.gamma() + 0.5) * std::log(2.0);
  return domination(m, ts, xs, [lc](double t, double d) { return lc - d * d / (8.0 * t); });
}

ScanSummary heat_domination_scan_literal(const MultiplicityParam& m, std::span<const double> ts,
                                         std::span<const double> xs) {
  return domination(m, ts, xs, [](double t, double d) { return -d * d / (2.0 * t); });
}

double tail_polynomial_bound(double t, double r, double delta) { return std::pow(1.0 + r * r / t, -delta); }
double tail_gaussian_bound(double t, double r, double) { return std::exp(-r * r / t); }

ScanSummary tail_mass_scan(const MultiplicityParam& m, std::span<const double> ts, std::span<const double> rs,
                           std::span<const double> xs, double (*bound)(double, double, double), double delta) {
  ScanSummary s;
  for (double t : ts)
    for (double r : rs)
      for (double x : xs) note(s, tail_mass(t, x, r, m) / bound(t, r, delta), x, r, t);
  return s;
}

ScanSummary ball_comparison_scan(const MultiplicityParam& m, std::span<const double> ts,
                                 std::span<const double> points) {
  ScanSummary s;
  for (double t : ts)
    for (double z : points)
      for (double x : points) note(s, ball_comparison_check(t, z, x, m).ratio, x, z, t);
  return s;
}

ScanSummary maximal_domination_scan(const SampledFunction& f, const TransformPlan& plan, std::span<const double> ts,
                                    std::size_t stride, double x_max) {
  require(stride >= 1, "maximal_domination_scan: stride >= 1");
  std::vector<double> sup(f.size(), 0.0);
  for (double t : ts) {
    auto h = heat_apply(f, t, plan);
    for (std::size_t i = 0; i < f.size(); ++i) sup[i] = std::max(sup[i], std::abs(h[i]));
  }
  ScanSummary s;
  for (std::size_t i = 0; i < f.size(); i += stride) {
    const double x = f.grid().node(i);
    if (std::abs(x) > x_max) continue;
    double mf = maximal_function(f, x);
    note(s, sup[i] / mf, x, mf, 0.0);
  }
  return s;
}

}  // namespace dunkl
