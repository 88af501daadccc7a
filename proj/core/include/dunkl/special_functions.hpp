#pragma once

#include <complex>
#include <span>

#include "dunkl/measure.hpp"

namespace dunkl {

class BesselOrder {
 public:
  explicit BesselOrder(double nu);
  double value() const { return nu_; }

 private:
  double nu_;
};

// Normalized Bessel function
//   J_nu(z) = Gamma(nu+1) sum_n (-1)^n (z/2)^{2n} / (n! Gamma(nu+n+1)),
// so J_{-1/2}(z) = cos z and J_{1/2}(z) = sin z / z. Even in z.
cplx normalized_bessel(BesselOrder nu, cplx z);
double normalized_bessel(BesselOrder nu, double x);

// Exponential-type companion I_nu(w) := J_nu(i w) (all-positive series).
cplx normalized_bessel_i(BesselOrder nu, cplx w);
double normalized_bessel_i(BesselOrder nu, double x);
// log I_nu(x) for real x; does not overflow.
double log_normalized_bessel_i(BesselOrder nu, double x);

// Rank-one kernel E_k(x, y) = E(xy) with
//   E(w) = I_{k-1/2}(w) + w/(2k+1) I_{k+1/2}(w),  E_0(w) = e^w.
double dunkl_kernel(double k, double x, double y);
// Product over coordinates.
double dunkl_kernel(const MultiplicityParam& m, std::span<const double> x, std::span<const double> y);
// log E(w) for real w (E > 0) and principal log for complex w.
double log_dunkl_kernel(double k, double w);
cplx log_dunkl_kernel(double k, cplx w);

// E(w) and its first two derivatives in w (real w, moderate |w|).
struct KernelJet {
  double value;
  double d1;
  double d2;
};
KernelJet dunkl_kernel_jet(double k, double w);

// E_k(x, -i xi) = J_{k-1/2}(x xi) - i (x xi)/(2k+1) J_{k+1/2}(x xi); e^{-i x xi} at k = 0.
cplx fourier_kernel(double k, double x, double xi);
cplx fourier_kernel(const MultiplicityParam& m, std::span<const double> x, std::span<const double> xi);

}  // namespace dunkl
