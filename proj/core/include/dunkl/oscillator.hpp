#pragma once

#include <span>
#include <vector>

#include "dunkl/hermite.hpp"
#include "dunkl/measure.hpp"

namespace dunkl {

// z with Re z > 0 and |arg z| <= omega < pi/2
class SectorPoint {
 public:
  SectorPoint(cplx z, double omega);
  explicit SectorPoint(cplx z) : SectorPoint(z, std::abs(std::arg(z))) {}

  cplx z() const { return z_; }
  double omega() const { return omega_; }

 private:
  cplx z_;
  double omega_;
};

// sum_n e^{-z lambda_n} <f, h_n> h_n. Throws ConvergenceError when the bound
// ||f||_2 e^{-Re z lambda_N} / (1 - e^{-2 Re z}) on the dropped tail exceeds tail_tol ||f||_2.
SampledFunction hermite_semigroup_apply(const SampledFunction& f, const SectorPoint& z, const HermiteBasis& basis,
                                        double tail_tol = 1e-10);

// H_z(x,y) = c_k^{-1} (sinh 2z)^{-gamma-1/2} E_k(x y / sinh 2z) e^{-coth(2z)(x^2+y^2)/2},
// principal branch. Re z <= eps is rejected.
cplx mehler_kernel(cplx z, double x, double y, const MultiplicityParam& m, double eps = 1e-3);
// sum_{n<N} e^{-z lambda_n} h_n(x) h_n(y)
cplx mehler_series(cplx z, double x, double y, const HermiteBasis& basis);

struct CothSandwich {
  double omega = 0.0;
  double inf_ratio = 0.0;    // over the scan
  double sup_ratio = 0.0;
  double limit_ratio = 0.0;  // at the smallest t along arg z = omega
  std::size_t points = 0;
};
// Re coth(z) / coth(Re z) over z = t e^{iu}, t log-spaced in [t_min, t_max], |u| <= omega
CothSandwich coth_sandwich_scan(double omega, double t_min = 1e-3, double t_max = 10.0, std::size_t nt = 81,
                                std::size_t nu = 21);

struct DominationCandidate {
  double c = 0.0;
  double max_ratio_h = 0.0;  // max |H_z(x,y)| / H_{Re z}(cx, cy)
  double max_ratio_k = 0.0;  // max |H_z(x,y)| / K_{Re z}(cx, cy)
};
struct KernelDomination {
  double omega = 0.0;
  std::vector<DominationCandidate> candidates;
  // first candidate with both ratios <= 1 (0 when none: inconclusive)
  double c_found = 0.0;
};
KernelDomination kernel_domination_scan(double omega, const MultiplicityParam& m,
                                        std::span<const double> cs = {},
                                        std::span<const double> ts = {}, std::size_t n_angles = 5,
                                        std::size_t n_points = 17, double x_max = 4.0);

struct HeatSandwich {
  double min_h = 0.0;       // min H_t
  double max_excess = 0.0;  // max H_t - K_t
};
HeatSandwich oscillator_heat_sandwich(double t, const MultiplicityParam& m, std::span<const double> points);

}  // namespace dunkl
