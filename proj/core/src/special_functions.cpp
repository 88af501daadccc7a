#include "dunkl/special_functions.hpp"

#include <boost/math/special_functions/bessel.hpp>
#include <cmath>
#include <limits>
#include <numbers>

#include "dunkl/error.hpp"

namespace dunkl {

using detail::require;

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kLn10 = 2.302585092994046;

// sum_n (+-q)^n / (n! (nu+1)_n), q = z^2/4.
template <class T>
T hyp0f1_series(double nu, T q) {
  T term = 1.0, sum = 1.0;
  for (int n = 1; n < 2000; ++n) {
    term *= q / (static_cast<double>(n) * (nu + n));
    sum += term;
    if (std::abs(term) <= 0.25 * kEps * std::abs(sum) && static_cast<double>(n) > std::abs(q)) break;
  }
  return sum;
}

// log of sum_n q^n/(n!(nu+1)_n) for q >= 0, rescaling to stay in range.
double log_hyp0f1_positive(double nu, double q) {
  double term = 1.0, sum = 1.0, shift = 0.0;
  for (int n = 1; n < 100000; ++n) {
    term *= q / (static_cast<double>(n) * (nu + n));
    sum += term;
    if (sum > 1e200) {
      sum *= 1e-200;
      term *= 1e-200;
      shift += 200.0 * kLn10;
    }
    if (term <= 0.25 * kEps * sum && static_cast<double>(n) > q) break;
  }
  return std::log(sum) + shift;
}

// log 1F1(a; b; z) for z >= 0, a, b > 0 (positive terms, rescaled).
double log_hyp1f1_positive(double a, double b, double z) {
  double term = 1.0, sum = 1.0, shift = 0.0;
  for (int n = 0; n < 100000; ++n) {
    term *= (a + n) / (b + n) * z / (n + 1.0);
    sum += term;
    if (sum > 1e200) {
      sum *= 1e-200;
      term *= 1e-200;
      shift += 200.0 * kLn10;
    }
    if (term <= 0.25 * kEps * sum && static_cast<double>(n) > z) break;
  }
  return std::log(sum) + shift;
}

// Hankel sum  sum_m sigma^m [a_m(nu) + s a_m(nu+1)] x^{-m}. With sigma = -1 this is
// e^{-x} sqrt(2 pi x) (I_nu(x) + s I_{nu+1}(x)); sigma = +1 gives the recessive part.
template <class T>
T hankel_sum(double nu, double s, T x, double sigma = -1.0) {
  const double mu0 = 4.0 * nu * nu;
  const double mu1 = 4.0 * (nu + 1.0) * (nu + 1.0);
  double a0 = 1.0, a1 = 1.0;
  T xm = 1.0;
  T sum = 1.0 + s;
  double prev = std::numeric_limits<double>::infinity();
  double sign = 1.0;
  for (int m = 1; m < 400; ++m) {
    double odd = (2.0 * m - 1.0) * (2.0 * m - 1.0);
    a0 *= (mu0 - odd) / (8.0 * m);
    a1 *= (mu1 - odd) / (8.0 * m);
    xm /= x;
    sign *= sigma;
    T term = sign * (a0 + s * a1) * xm;
    double mag = std::abs(term);
    if (mag > prev && m > 2) break;
    sum += term;
    if (mag <= 0.25 * kEps * std::abs(sum) && mag != 0.0) break;
    if (a0 == 0.0 && a1 == 0.0) break;
    prev = mag;
  }
  return sum;
}

double asymptotic_threshold(double nu) { return std::max(40.0, 2.0 * (nu + 1.0) * (nu + 1.0)); }

// log of Gamma(nu+1) (x/2)^{-nu} e^x / sqrt(2 pi x)
template <class T>
T log_asymptotic_prefactor(double nu, T x) {
  return std::lgamma(nu + 1.0) - nu * std::log(x / 2.0) + x -
         0.5 * std::log(2.0 * std::numbers::pi * x);
}

// log of Gamma(nu+1) (u/2)^{-nu} (I_nu(u) + s I_{nu+1}(u)) for Re u > 0, large |u|,
// keeping the recessive e^{-u} contribution that matters near the imaginary axis.
cplx log_asymptotic_combo(double nu, double s, cplx u) {
  cplx dominant = hankel_sum(nu, s, u);
  // I_mu(u) ~ ... + i e^{i mu pi} e^{-u} (2 pi u)^{-1/2} sum a_m(mu) u^{-m} for Im u > 0,
  // conjugate phases for Im u < 0; I_{nu+1} picks up an extra e^{i pi} = -1.
  const double pm = u.imag() >= 0.0 ? 1.0 : -1.0;
  cplx phase = cplx(0.0, pm) * std::exp(cplx(0.0, pm * nu * std::numbers::pi));
  cplx recessive = phase * std::exp(-2.0 * u) * hankel_sum(nu, -s, u, 1.0);
  return log_asymptotic_prefactor(nu, u) + std::log(dominant + recessive);
}

bool use_complex_series(double nu, cplx u) {
  const double r = std::abs(u);
  if (r < asymptotic_threshold(nu + 1.0) - 20.0) return true;
  return r <= 12.0 || (r <= 20.0 && u.real() >= 0.5 * r);
}

}  // namespace

BesselOrder::BesselOrder(double nu) : nu_(nu) {
  require(std::isfinite(nu) && nu > -1.0, "BesselOrder: nu must be > -1");
}

double log_normalized_bessel_i(BesselOrder order, double x) {
  const double nu = order.value();
  x = std::abs(x);
  if (x < asymptotic_threshold(nu)) return log_hyp0f1_positive(nu, 0.25 * x * x);
  // single-order Hankel sum: hankel_sum with s = 0
  return log_asymptotic_prefactor(nu, x) + std::log(hankel_sum(nu, 0.0, x));
}

double normalized_bessel_i(BesselOrder nu, double x) {
  double l = log_normalized_bessel_i(nu, x);
  if (l > 709.0) throw OverflowError("normalized_bessel_i: result overflows");
  return std::exp(l);
}

cplx normalized_bessel_i(BesselOrder order, cplx w) {
  const double nu = order.value();
  if (w.imag() == 0.0) return normalized_bessel_i(order, w.real());
  cplx u = w.real() >= 0.0 ? w : -w;
  if (u.real() > 700.0 || std::abs(u) > 1e6) throw OverflowError("normalized_bessel_i: argument too large");
  if (use_complex_series(nu, u)) return hyp0f1_series(nu, 0.25 * u * u);
  return std::exp(log_asymptotic_combo(nu, 0.0, u));
}

double normalized_bessel(BesselOrder order, double x) {
  const double nu = order.value();
  x = std::abs(x);
  if (x <= 2.0) return hyp0f1_series(nu, -0.25 * x * x);
  double pref = std::exp(std::lgamma(nu + 1.0) - nu * std::log(0.5 * x));
  return pref * boost::math::cyl_bessel_j(nu, x);
}

cplx normalized_bessel(BesselOrder nu, cplx z) {
  if (z.imag() == 0.0) return normalized_bessel(nu, z.real());
  return normalized_bessel_i(nu, cplx(-z.imag(), z.real()));
}

double log_dunkl_kernel(double k, double w) {
  require(k >= 0.0, "dunkl_kernel: k must be >= 0");
  if (k == 0.0) return w;
  const double x = std::abs(w);
  const double nu = k - 0.5;
  const double sgn = w >= 0.0 ? 1.0 : -1.0;
  if (x < asymptotic_threshold(nu + 1.0)) {
    // Kummer form E(+-x) = e^{-x} 1F1(k + [w > 0]; 2k+1; 2x): no cancellation for w < 0
    return -x + log_hyp1f1_positive(k + (sgn > 0 ? 1.0 : 0.0), 2.0 * k + 1.0, 2.0 * x);
  }
  // E(+-x) = Gamma(k+1/2) (x/2)^{1/2-k} (I_{k-1/2}(x) +- I_{k+1/2}(x))
  return log_asymptotic_prefactor(nu, x) + std::log(hankel_sum(nu, sgn, x));
}

cplx log_dunkl_kernel(double k, cplx w) {
  require(k >= 0.0, "dunkl_kernel: k must be >= 0");
  if (k == 0.0) return w;
  if (w.imag() == 0.0) return log_dunkl_kernel(k, w.real());
  const double nu = k - 0.5;
  const double s = w.real() >= 0.0 ? 1.0 : -1.0;
  const cplx u = s * w;
  if (std::abs(u) > 1e6) throw OverflowError("dunkl_kernel: argument too large");
  if (use_complex_series(nu + 1.0, u)) {
    if (std::abs(u) > 700.0) throw OverflowError("dunkl_kernel: argument too large for the series");
    cplx q = 0.25 * u * u;
    cplx e = hyp0f1_series(nu, q) + s * u / (2.0 * k + 1.0) * hyp0f1_series(nu + 1.0, q);
    return std::log(e);
  }
  return log_asymptotic_combo(nu, s, u);
}

double dunkl_kernel(double k, double x, double y) {
  double l = log_dunkl_kernel(k, x * y);
  if (l > 709.0) throw OverflowError("dunkl_kernel: <x,y> too large");
  return std::exp(l);
}

double dunkl_kernel(const MultiplicityParam& m, std::span<const double> x, std::span<const double> y) {
  require(x.size() == m.rank() && y.size() == m.rank(), "dunkl_kernel: dimension mismatch");
  double l = 0.0;
  for (std::size_t j = 0; j < x.size(); ++j) l += log_dunkl_kernel(m.k(j), x[j] * y[j]);
  if (l > 709.0) throw OverflowError("dunkl_kernel: <x,y> too large");
  return std::exp(l);
}

KernelJet dunkl_kernel_jet(double k, double w) {
  require(k >= 0.0, "dunkl_kernel_jet: k must be >= 0");
  const double e = std::exp(log_dunkl_kernel(k, w));
  if (k == 0.0) return {e, e, e};
  const double ja = normalized_bessel_i(BesselOrder(k + 0.5), w);
  const double jb = normalized_bessel_i(BesselOrder(k + 1.5), w);
  const double jc = normalized_bessel_i(BesselOrder(k + 2.5), w);
  const double p1 = 2.0 * k + 1.0, p3 = 2.0 * k + 3.0, p5 = 2.0 * k + 5.0;
  KernelJet j{};
  j.value = e;
  j.d1 = (1.0 + w) / p1 * ja + w * w / (p1 * p3) * jb;
  j.d2 = ja / p1 + (w * w + 3.0 * w) / (p1 * p3) * jb + w * w * w / (p1 * p3 * p5) * jc;
  return j;
}

cplx fourier_kernel(double k, double x, double xi) {
  require(k >= 0.0, "fourier_kernel: k must be >= 0");
  const double s = x * xi;
  if (k == 0.0) return {std::cos(s), -std::sin(s)};
  const double a = std::abs(s);
  if (a <= 2.0) {
    double even = hyp0f1_series(k - 0.5, -0.25 * a * a);
    double odd = s / (2.0 * k + 1.0) * hyp0f1_series(k + 0.5, -0.25 * a * a);
    return {even, -odd};
  }
  // both parts share Gamma(k+1/2) (a/2)^{1/2-k}
  const double pref = std::exp(std::lgamma(k + 0.5) + (0.5 - k) * std::log(0.5 * a));
  const double even = pref * boost::math::cyl_bessel_j(k - 0.5, a);
  const double odd = (s < 0.0 ? -pref : pref) * boost::math::cyl_bessel_j(k + 0.5, a);
  return {even, -odd};
}

cplx fourier_kernel(const MultiplicityParam& m, std::span<const double> x, std::span<const double> xi) {
  require(x.size() == m.rank() && xi.size() == m.rank(), "fourier_kernel: dimension mismatch");
  cplx v = 1.0;
  for (std::size_t j = 0; j < x.size(); ++j) v *= fourier_kernel(m.k(j), x[j], xi[j]);
  return v;
}

}  // namespace dunkl
