#include "dunkl/oscillator.hpp"

#include <cmath>
#include <numbers>

#include "dunkl/error.hpp"
#include "dunkl/heat.hpp"
#include "dunkl/special_functions.hpp"

namespace dunkl {

using detail::require;

SectorPoint::SectorPoint(cplx z, double omega) : z_(z), omega_(omega) {
  require(z.real() > 0.0, "SectorPoint: Re z must be positive");
  require(omega >= 0.0 && omega < std::numbers::pi / 2, "SectorPoint: omega must lie in [0, pi/2)");
  require(std::abs(std::arg(z)) <= omega + 1e-12, "SectorPoint: |arg z| exceeds omega");
}

SampledFunction hermite_semigroup_apply(const SampledFunction& f, const SectorPoint& zp, const HermiteBasis& basis,
                                        double tail_tol) {
  const cplx z = zp.z();
  const double a = z.real();
  const double tail = std::exp(-a * basis.eigenvalue(basis.size())) / (1.0 - std::exp(-2.0 * a));
  if (!(tail <= tail_tol))
    throw ConvergenceError("hermite_semigroup_apply: Re z too small for the basis size");
  Eigen::VectorXcd c = basis.coefficients(f);
  for (Eigen::Index n = 0; n < c.size(); ++n) c[n] *= std::exp(-z * basis.eigenvalue(static_cast<std::size_t>(n)));
  return basis.synthesize(c, f.grid_ptr());
}

cplx mehler_kernel(cplx z, double x, double y, const MultiplicityParam& m, double eps) {
  require(m.rank() == 1, "mehler_kernel: rank one");
  if (!(z.real() > eps)) throw NumericalError("mehler_kernel: Re z too close to the sinh singularity");
  const cplx s = std::sinh(2.0 * z);
  const cplx coth = std::cosh(2.0 * z) / s;
  const double g = m.gamma() + 0.5;
  cplx l = -std::log(gaussian_constant(m)) - g * std::log(s) - 0.5 * coth * (x * x + y * y) +
           log_dunkl_kernel(m.k(), x * y / s);
  return std::exp(l);
}

cplx mehler_series(cplx z, double x, double y, const HermiteBasis& basis) {
  std::vector<double> hx(basis.size()), hy(basis.size());
  basis.evaluate(x, hx);
  basis.evaluate(y, hy);
  cplx s = 0.0;
  for (std::size_t n = 0; n < basis.size(); ++n) s += std::exp(-z * basis.eigenvalue(n)) * hx[n] * hy[n];
  return s;
}

namespace {
double coth_ratio(cplx z) {
  const cplx c = std::cosh(z) / std::sinh(z);
  return c.real() * std::tanh(z.real());
}
}  // namespace

CothSandwich coth_sandwich_scan(double omega, double t_min, double t_max, std::size_t nt, std::size_t nu) {
  require(omega >= 0.0 && omega < std::numbers::pi / 2, "coth_sandwich_scan: omega in [0, pi/2)");
  require(t_min > 0.0 && t_max > t_min && nt >= 2 && nu >= 1, "coth_sandwich_scan: bad scan");
  CothSandwich r;
  r.omega = omega;
  r.inf_ratio = std::numeric_limits<double>::infinity();
  r.sup_ratio = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < nt; ++i) {
    double t = t_min * std::pow(t_max / t_min, static_cast<double>(i) / static_cast<double>(nt - 1));
    for (std::size_t j = 0; j < nu; ++j) {
      double u = nu == 1 ? omega : omega * (2.0 * static_cast<double>(j) / static_cast<double>(nu - 1) - 1.0);
      double q = coth_ratio(std::polar(t, u));
      r.inf_ratio = std::min(r.inf_ratio, q);
      r.sup_ratio = std::max(r.sup_ratio, q);
      ++r.points;
    }
  }
  r.limit_ratio = coth_ratio(std::polar(t_min, omega));
  return r;
}

KernelDomination kernel_domination_scan(double omega, const MultiplicityParam& m, std::span<const double> cs,
                                        std::span<const double> ts, std::size_t n_angles, std::size_t n_points,
                                        double x_max) {
  require(omega > 0.0 && omega < std::numbers::pi / 2, "kernel_domination_scan: omega in (0, pi/2)");
  static const double default_cs[] = {0.3, 0.5, 0.7, 0.9, 1.0};
  static const double default_ts[] = {0.05, 0.1, 0.25, 0.5, 1.0, 2.0};
  if (cs.empty()) cs = default_cs;
  if (ts.empty()) ts = default_ts;
  require(n_angles >= 1 && n_points >= 2, "kernel_domination_scan: bad scan");
  std::vector<double> pts(n_points);
  for (std::size_t i = 0; i < n_points; ++i)
    pts[i] = -x_max + 2.0 * x_max * static_cast<double>(i) / static_cast<double>(n_points - 1);
  KernelDomination r;
  r.omega = omega;
  for (double c : cs) {
    DominationCandidate d{c, 0.0, 0.0};
    for (double t : ts)
      for (std::size_t a = 0; a < n_angles; ++a) {
        double u = n_angles == 1 ? omega
                                 : omega * (2.0 * static_cast<double>(a) / static_cast<double>(n_angles - 1) - 1.0);
        const cplx z = std::polar(t, u);
        const double re = z.real();
        for (double x : pts)
          for (double y : pts) {
            const double lh = std::log(std::abs(mehler_kernel(z, x, y, m)));
            d.max_ratio_h = std::max(d.max_ratio_h, std::exp(lh - std::log(mehler_kernel(re, c * x, c * y, m).real())));
            d.max_ratio_k = std::max(d.max_ratio_k, std::exp(lh - log_heat_kernel(re, c * x, c * y, m)));
          }
      }
    r.candidates.push_back(d);
    if (r.c_found == 0.0 && d.max_ratio_h <= 1.0 && d.max_ratio_k <= 1.0) r.c_found = c;
  }
  return r;
}

HeatSandwich oscillator_heat_sandwich(double t, const MultiplicityParam& m, std::span<const double> points) {
  require(t > 1e-3, "oscillator_heat_sandwich: t too small");
  HeatSandwich r;
  r.min_h = std::numeric_limits<double>::infinity();
  r.max_excess = -std::numeric_limits<double>::infinity();
  for (double x : points)
    for (double y : points) {
      double h = mehler_kernel(t, x, y, m).real();
      r.min_h = std::min(r.min_h, h);
      r.max_excess = std::max(r.max_excess, h - heat_kernel_K(t, x, y, m));
    }
  return r;
}

}  // namespace dunkl
