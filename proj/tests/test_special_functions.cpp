#include <doctest.h>

#include <boost/math/special_functions/bessel.hpp>
#include <cmath>
#include <dunkl/error.hpp>
#include <dunkl/special_functions.hpp>
#include <random>

using namespace dunkl;

namespace {

// E_1(w) = (w e^w - sinh w) / w^2, from the half-integer closed forms
cplx e1_closed(cplx w) { return (w * std::exp(w) - std::sinh(w)) / (w * w); }

// log E_1 for real w, stable for large |w|
double log_e1_closed(double w) {
  if (w > 0) return w + std::log(w - 0.5 + 0.5 * std::exp(-2 * w)) - 2 * std::log(w);
  double x = -w;
  return x + std::log(0.5 - 0.5 * std::exp(-2 * x) - x * std::exp(-2 * x)) - 2 * std::log(x);
}

// Gamma(k+1/2) (w/2)^{1/2-k} (I_{k-1/2}(w) +- I_{k+1/2}(w))
double e_boost(double k, double w) {
  double x = std::abs(w);
  double pref = std::tgamma(k + 0.5) * std::pow(0.5 * x, 0.5 - k);
  double s = w >= 0 ? 1.0 : -1.0;
  return pref * (boost::math::cyl_bessel_i(k - 0.5, x) + s * boost::math::cyl_bessel_i(k + 0.5, x));
}

}  // namespace

TEST_CASE("BesselOrder validation") {
  CHECK_THROWS_AS(BesselOrder(-1.0), std::invalid_argument);
  CHECK_THROWS_AS(BesselOrder(-3.5), std::invalid_argument);
  CHECK_NOTHROW(BesselOrder(-0.5));
}

TEST_CASE("normalized bessel at zero and half-integer closed forms") {
  for (double nu : {-0.5, 0.0, 0.5, 1.7, 4.0}) CHECK(normalized_bessel(BesselOrder(nu), 0.0) == 1.0);
  for (double z : {0.1, 1.0, 5.0, 17.3, 45.0}) {
    CHECK(normalized_bessel(BesselOrder(-0.5), z) == doctest::Approx(std::cos(z)).epsilon(1e-13).scale(1.0));
    CHECK(normalized_bessel(BesselOrder(0.5), z) == doctest::Approx(std::sin(z) / z).epsilon(1e-13).scale(1.0));
    CHECK(normalized_bessel(BesselOrder(0.5), -z) == doctest::Approx(std::sin(z) / z).epsilon(1e-13).scale(1.0));
  }
  // complex argument: J_{-1/2}(z) = cos z
  for (cplx z : {cplx(1.0, 0.5), cplx(3.0, -2.0), cplx(-0.2, 4.0), cplx(0.0, 30.0)}) {
    cplx v = normalized_bessel(BesselOrder(-0.5), z);
    CHECK(std::abs(v - std::cos(z)) <= 1e-12 * std::abs(std::cos(z)));
    cplx s = normalized_bessel(BesselOrder(0.5), z);
    CHECK(std::abs(s - std::sin(z) / z) <= 1e-12 * std::abs(std::sin(z) / z));
  }
  CHECK_THROWS_AS(normalized_bessel(BesselOrder(0.0), cplx(0.0, 800.0)), OverflowError);
}

TEST_CASE("modified normalized bessel against closed forms") {
  for (double x : {0.0, 0.3, 2.0, 20.0, 39.0, 41.0, 120.0, 600.0}) {
    double expect = x == 0.0 ? 0.0 : std::log(std::sinh(x) / x);
    if (x > 30) expect = x - std::log(2 * x) + std::log1p(-std::exp(-2 * x));
    CHECK(log_normalized_bessel_i(BesselOrder(0.5), x) == doctest::Approx(expect).epsilon(1e-13).scale(1.0));
    CHECK(log_normalized_bessel_i(BesselOrder(-0.5), x) ==
          doctest::Approx(x - std::log(2.0) + std::log1p(std::exp(-2 * x))).epsilon(1e-13).scale(1.0));
  }
  CHECK_THROWS_AS(normalized_bessel_i(BesselOrder(0.0), 800.0), OverflowError);
}

TEST_CASE("dunkl kernel basic identities") {
  for (double k : {0.0, 0.5, 1.0, 2.5}) {
    CHECK(dunkl_kernel(k, 0.0, 3.7) == 1.0);
    CHECK(dunkl_kernel(k, -2.0, 0.0) == 1.0);
  }
  CHECK(dunkl_kernel(0.0, 1.0, 1.0) == doctest::Approx(std::exp(1.0)).epsilon(1e-15));
  CHECK(dunkl_kernel(0.0, 2.0, -0.5) == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
  CHECK_THROWS_AS(dunkl_kernel(-1.0, 1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(dunkl_kernel(1.0, 30.0, 30.0), OverflowError);
}

TEST_CASE("dunkl kernel k=1 closed form across the asymptotic switch") {
  for (double w : {-300.0, -100.0, -45.0, -40.5, -39.5, -20.0, -3.0, -0.1, 0.1, 3.0, 20.0, 39.5, 40.5, 45.0, 100.0, 300.0})
    CHECK(log_dunkl_kernel(1.0, w) == doctest::Approx(log_e1_closed(w)).epsilon(1e-13).scale(1.0));
}

TEST_CASE("dunkl kernel against boost modified bessel") {
  for (double k : {0.25, 0.5, 1.7, 2.5, 4.0}) {
    for (double w : {-60.0, -35.0, -10.0, -1.0, 0.5, 7.0, 33.0, 60.0, 200.0}) {
      double ref = e_boost(k, w);
      CHECK(std::exp(log_dunkl_kernel(k, w)) == doctest::Approx(ref).epsilon(1e-11));
    }
  }
}

TEST_CASE("complex dunkl kernel against k=1 closed form") {
  for (cplx w : {cplx(0.5, 0.5), cplx(-3.0, 2.0), cplx(15.0, -15.0), cplx(-30.0, 20.0), cplx(60.0, 45.0),
                 cplx(-80.0, -60.0), cplx(2.0, 25.0)}) {
    cplx ref = e1_closed(w);
    cplx got = std::exp(log_dunkl_kernel(1.0, w));
    CHECK(std::abs(got - ref) <= 1e-11 * std::abs(ref));
  }
  CHECK(log_dunkl_kernel(0.0, cplx(1.0, 2.0)) == cplx(1.0, 2.0));
}

TEST_CASE("dunkl kernel symmetry, scaling, reflection, positivity") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(-4.0, 4.0);
  for (double k : {0.5, 1.0, 2.5}) {
    for (int i = 0; i < 50; ++i) {
      double x = u(rng), y = u(rng);
      double e = dunkl_kernel(k, x, y);
      CHECK(e > 0.0);
      CHECK(dunkl_kernel(k, y, x) == doctest::Approx(e).epsilon(1e-14));
      CHECK(dunkl_kernel(k, -x, -y) == doctest::Approx(e).epsilon(1e-14));
      for (double lam : {-2.0, 0.5, 3.0})
        CHECK(dunkl_kernel(k, lam * x, y) == doctest::Approx(dunkl_kernel(k, x, lam * y)).epsilon(1e-13));
    }
  }
}

TEST_CASE("product kernel factorizes") {
  MultiplicityParam m({0.5, 2.0});
  std::vector<double> x{1.2, -0.7}, y{0.4, 2.2};
  CHECK(dunkl_kernel(m, x, y) ==
        doctest::Approx(dunkl_kernel(0.5, 1.2, 0.4) * dunkl_kernel(2.0, -0.7, 2.2)).epsilon(1e-14));
  cplx f = fourier_kernel(m, x, y);
  cplx g = fourier_kernel(0.5, 1.2, 0.4) * fourier_kernel(2.0, -0.7, 2.2);
  CHECK(std::abs(f - g) < 1e-15);
}

TEST_CASE("kernel jets match finite differences") {
  for (double k : {0.0, 0.5, 1.0, 2.5}) {
    for (double w : {-6.0, -1.3, 0.0, 0.7, 4.0, 12.0}) {
      auto j = dunkl_kernel_jet(k, w);
      const double h = 1e-5;
      auto p = dunkl_kernel_jet(k, w + h), m = dunkl_kernel_jet(k, w - h);
      CHECK(j.d1 == doctest::Approx((p.value - m.value) / (2 * h)).epsilon(1e-8));
      CHECK(j.d2 == doctest::Approx((p.d1 - m.d1) / (2 * h)).epsilon(1e-8));
    }
  }
  // k = 1 closed form derivative: E' = (w^2 e^w + ... ) checked by complex step
  for (double w : {-3.0, 0.5, 2.0}) {
    const double h = 1e-20;
    cplx step = e1_closed(cplx(w, h));
    CHECK(dunkl_kernel_jet(1.0, w).d1 == doctest::Approx(step.imag() / h).epsilon(1e-12));
  }
}

TEST_CASE("fourier kernel") {
  for (double x : {-3.0, 0.2, 5.0})
    for (double xi : {-1.1, 0.0, 2.0, 9.0}) {
      cplx v = fourier_kernel(0.0, x, xi);
      CHECK(v.real() == doctest::Approx(std::cos(x * xi)).epsilon(1e-15));
      CHECK(v.imag() == doctest::Approx(-std::sin(x * xi)).epsilon(1e-15));
    }
  for (double k : {0.5, 1.0, 2.5}) CHECK(fourier_kernel(k, 0.0, 4.0) == cplx(1.0, 0.0));
  // k = 1: E_1(-i s) = i (s e^{-is} - sin s) / s^2
  for (double s : {-30.0, -2.5, -0.4, 0.3, 1.9, 2.1, 7.0, 60.0}) {
    cplx ref = cplx(0.0, 1.0) * (s * std::exp(cplx(0.0, -s)) - std::sin(s)) / (s * s);
    CHECK(std::abs(fourier_kernel(1.0, s, 1.0) - ref) < 1e-13);
    CHECK(std::abs(fourier_kernel(1.0, s, 1.0) - e1_closed(cplx(0.0, -s))) < 1e-13);
  }
  // modulus bounded by one on a scan
  for (double k : {0.25, 0.5, 1.0, 2.5})
    for (int i = -200; i <= 200; ++i) CHECK(std::abs(fourier_kernel(k, 0.37 * i, 1.0)) <= 1.0 + 1e-14);
}
