#include "dunkl/verify.hpp"

#include <chrono>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include "dunkl/calculus.hpp"
#include "dunkl/dunkl_operator.hpp"
#include "dunkl/heat.hpp"
#include "dunkl/hermite.hpp"
#include "dunkl/oscillator.hpp"
#include "dunkl/schrodinger.hpp"
#include "dunkl/special_functions.hpp"
#include "dunkl/transform.hpp"

namespace dunkl {

namespace {

using Clock = std::chrono::steady_clock;

std::vector<double> ks(std::vector<double> list, const VerifyConfig& cfg) {
  if (cfg.k) return {*cfg.k};
  return list;
}

std::string fmt(double v) {
  std::ostringstream o;
  o << v;
  return o.str();
}

std::string tag(const std::string& name, double k) { return name + " k=" + fmt(k); }

std::vector<double> linspace(double a, double b, std::size_t n) {
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1);
  return v;
}

double l2(const SampledFunction& f) {
  const auto q = f.masses();
  double s = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) s += q[i] * std::norm(f[i]);
  return std::sqrt(s);
}

double rel_l2(const SampledFunction& a, const SampledFunction& b) {
  const auto q = b.masses();
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < b.size(); ++i) {
    num += q[i] * std::norm(a[i] - b[i]);
    den += q[i] * std::norm(b[i]);
  }
  return std::sqrt(num / den);
}

CheckResult check_finite(std::string name, std::string anchor, double measured) {
  CheckResult c{std::move(name), std::move(anchor), Status::fail, measured, INFINITY, "finite", {}};
  if (std::isfinite(measured)) c.status = Status::pass;
  return c;
}

double elapsed(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// ---------------------------------------------------------------------------

VerificationReport plancherel(const VerifyConfig& cfg) {
  VerificationReport r("plancherel");
  const auto t0 = Clock::now();
  const std::vector<std::function<cplx(double)>> fs{
      [](double x) { return cplx(std::exp(-x * x / 2)); },
      [](double x) { return cplx(x * std::exp(-x * x)); },
      [](double x) { return cplx((1 - x + 2 * x * x) * std::exp(-x * x / 2)); },
      [](double x) { return cplx(std::exp(-(x - 1) * (x - 1))); },
      [](double x) { return cplx(std::cos(2 * x) * std::exp(-x * x / 2), x * std::exp(-x * x / 3)); }};
  for (double k : ks({0.0, 0.5, 1.0, 2.5}, cfg)) {
    MultiplicityParam m(k);
    auto g = gauss_grid(512, 14.0, k);
    TransformPlan plan(g, m);
    double norm_dev = 0.0, round_trip = 0.0;
    for (const auto& f : fs) {
      auto s = SampledFunction::sample(g, m, f);
      auto ff = forward(s, plan);
      norm_dev = std::max(norm_dev, std::abs(l2(ff) / l2(s) - 1.0));
      round_trip = std::max(round_trip, rel_l2(inverse(ff, plan), s));
    }
    r.add(check_le(tag("norm ratio deviation", k), "plancherel-isometry", norm_dev, 1e-6));
    r.add(check_le(tag("round trip rel L2", k), "transform-inversion", round_trip, 1e-6));
  }
  auto& c = r.add(check_le("total runtime [s]", "plancherel-isometry", elapsed(t0), 10.0));
  c.timing = true;
  r.set_provenance("plancherel.grid", "gauss_grid(512, R=14, k-adapted)");
  return r;
}

VerificationReport classical(const VerifyConfig&) {
  VerificationReport r("classical");
  const MultiplicityParam m(0.0);
  // transform
  {
    auto g = gauss_grid(512, 14.0);
    TransformPlan plan(g, m);
    double err = 0.0;
    auto f1 = forward(SampledFunction::sample(g, m, [](double x) { return std::exp(-(x - 1) * (x - 1) / 2); }), plan);
    auto e1 = SampledFunction::sample(g, m, [](double xi) { return std::exp(cplx(-xi * xi / 2, -xi)); });
    err = std::max(err, rel_l2(f1, e1));
    auto f2 = forward(SampledFunction::sample(g, m, [](double x) { return x * std::exp(-x * x / 2); }), plan);
    auto e2 = SampledFunction::sample(g, m, [](double xi) { return cplx(0.0, -xi * std::exp(-xi * xi / 2)); });
    err = std::max(err, rel_l2(f2, e2));
    r.add(check_le("transform vs Fourier", "classical-reduction", err, 1e-8));
  }
  // heat kernel
  {
    double err = 0.0;
    for (double t : {0.1, 1.0, 5.0})
      for (double x : linspace(-3, 3, 13))
        for (double y : linspace(-3, 3, 13)) {
          double ref = std::exp(-(x - y) * (x - y) / (4 * t)) / std::sqrt(4 * std::numbers::pi * t);
          err = std::max(err, std::abs(heat_kernel_K(t, x, y, m) - ref) / ref);
        }
    r.add(check_le("heat kernel vs Gauss-Weierstrass", "classical-reduction", err, 1e-8));
  }
  // Hermite functions
  {
    const std::size_t n = 21;
    HermiteBasis b(m, n);
    std::vector<double> h(n);
    double err = 0.0;
    for (double x : linspace(-4, 4, 33)) {
      b.evaluate(x, h);
      double hm = 0.0, hn = 1.0;
      for (std::size_t j = 0; j < n; ++j) {
        const double norm = std::sqrt(std::pow(2.0, j) * std::tgamma(j + 1.0) * std::sqrt(std::numbers::pi));
        const double ref = hn * std::exp(-x * x / 2) / norm;
        err = std::max(err, std::abs(h[j] - ref) / std::max(std::abs(ref), 1e-3));
        const double next = 2 * x * hn - 2 * static_cast<double>(j) * hm;
        hm = hn;
        hn = next;
      }
    }
    r.add(check_le("Hermite functions", "classical-reduction", err, 1e-8));
  }
  // Mehler
  {
    double err = 0.0;
    for (cplx z : {cplx(0.3), cplx(1.0), cplx(0.5, 0.3), std::polar(0.5, std::numbers::pi / 4)}) {
      const cplx s = std::sinh(2.0 * z), c = std::cosh(2.0 * z) / s;
      for (double x : linspace(-3, 3, 13))
        for (double y : linspace(-3, 3, 13)) {
          cplx ref = std::exp(-c * (x * x + y * y) / 2.0 + x * y / s) / std::sqrt(2.0 * std::numbers::pi * s);
          err = std::max(err, std::abs(mehler_kernel(z, x, y, m) - ref) / std::abs(ref));
        }
    }
    r.add(check_le("Mehler kernel", "classical-reduction", err, 1e-8));
  }
  return r;
}

VerificationReport eigen_relation(const VerifyConfig& cfg) {
  VerificationReport r("eigen-relation");
  for (double k : ks({0.5, 1.0, 2.5}, cfg)) {
    double err = 0.0;
    std::size_t points = 0;
    for (double x : linspace(-2.7, 2.7, 10))
      for (double y : linspace(-1.8, 1.8, 10)) {
        SmoothFunction f = [k, y](double s) {
          KernelJet j = dunkl_kernel_jet(k, s * y);
          return Jet{j.value, y * j.d1, y * y * j.d2};
        };
        const double e = dunkl_kernel(k, x, y);
        err = std::max(err, std::abs(apply_T(f, k, x) - y * e) / (std::abs(y) * e));
        ++points;
      }
    auto& c = r.add(check_le(tag("max rel |T E - y E|", k), "kernel-eigenfunction", err, 1e-8));
    c.constants["points"] = static_cast<double>(points);
  }
  return r;
}

VerificationReport heat_semigroup(const VerifyConfig& cfg) {
  VerificationReport r("heat-semigroup");
  for (double k : ks({0.0, 0.5, 1.0, 2.5}, cfg)) {
    MultiplicityParam m(k);
    auto wide = gauss_grid(1024, 20.0, k);
    const auto nodes = wide->nodes();
    std::vector<double> q(wide->size());
    for (std::size_t i = 0; i < q.size(); ++i) q[i] = wide->weight(i) * weight(nodes[i], k);
    // Chapman-Kolmogorov
    double ck = 0.0;
    const double s = 0.3, t = 0.5;
    const std::vector<double> pts{-1.5, -0.5, 0.4, 1.2};
    for (double x : pts)
      for (double y : pts) {
        double acc = 0.0;
        for (std::size_t i = 0; i < q.size(); ++i) acc += heat_kernel_K(s, x, nodes[i], m) * heat_kernel_K(t, nodes[i], y, m) * q[i];
        const double ref = heat_kernel_K(s + t, x, y, m);
        ck = std::max(ck, std::abs(acc - ref) / ref);
      }
    r.add(check_le(tag("composition K_s * K_t = K_{s+t}", k), "heat-semigroup-law", ck, 1e-8));
    // mass
    double mass = 0.0;
    for (double tt : {0.1, 1.0, 4.0})
      for (double x : {0.0, 0.7, -2.0}) {
        double acc = 0.0;
        for (std::size_t i = 0; i < q.size(); ++i) acc += heat_kernel_K(tt, x, nodes[i], m) * q[i];
        mass = std::max(mass, std::abs(acc - 1.0));
      }
    r.add(check_le(tag("|kernel mass - 1|", k), "heat-kernel-mass", mass, 1e-6));
    // kernel path vs multiplier path
    auto g = gauss_grid(512, 14.0, k);
    TransformPlan plan(g, m);
    auto f = SampledFunction::sample(g, m, [](double x) { return (1 + x) * std::exp(-x * x / 2); });
    double paths = 0.0;
    for (double tt : {0.1, 0.5, 1.0}) paths = std::max(paths, rel_l2(heat_apply_kernel(f, tt), heat_apply(f, tt, plan)));
    r.add(check_le(tag("kernel vs multiplier rel L2", k), "heat-semigroup-multiplier", paths, 1e-6));
  }
  return r;
}

VerificationReport hermite(const VerifyConfig& cfg) {
  VerificationReport r("hermite");
  for (double k : ks({0.0, 1.0, 2.5}, cfg)) {
    MultiplicityParam m(k);
    auto g = gauss_grid(512, 14.0, k);
    HermiteBasis b(m, 40);
    Eigen::MatrixXd s = b.sample(*g);
    Eigen::VectorXd q(s.rows());
    for (Eigen::Index i = 0; i < s.rows(); ++i) q[i] = g->weight(i) * weight(g->node(i), k);
    Eigen::MatrixXd gram = s.transpose() * q.asDiagonal() * s;
    r.add(check_le(tag("Gram deviation N=40", k), "hermite-orthonormality",
                   (gram - Eigen::MatrixXd::Identity(40, 40)).cwiseAbs().maxCoeff(), 1e-8));

    const double gamma = m.gamma();
    double literal = 0.0, ladder = 0.0;
    std::vector<double> h(21), dh(21), d2(21);
    std::vector<double> res_lit(21, 0.0), res_lad(21, 0.0);
    for (std::size_t i = 0; i < g->size(); ++i) {
      const double x = g->node(i);
      b.evaluate_jets(x, h, dh, d2);
      for (std::size_t n = 0; n <= 20; ++n) {
        const double sign = n % 2 ? -1.0 : 1.0;
        const double lap = d2[n] + 2 * k * dh[n] / x - k * (1 - sign) * h[n] / (x * x);
        const double hh = -lap + x * x * h[n];
        const double lit = 2.0 * n + gamma + 1.0, lad = 2.0 * n + 2.0 * gamma + 1.0;
        res_lit[n] += q[static_cast<Eigen::Index>(i)] * std::pow(hh - lit * h[n], 2);
        res_lad[n] += q[static_cast<Eigen::Index>(i)] * std::pow(hh - lad * h[n], 2);
      }
    }
    for (std::size_t n = 0; n <= 20; ++n) {
      literal = std::max(literal, std::sqrt(res_lit[n]) / (2.0 * n + gamma + 1.0));
      ladder = std::max(ladder, std::sqrt(res_lad[n]) / (2.0 * n + 2.0 * gamma + 1.0));
    }
    auto& c = r.add(check_le(tag("eigen residual (2n+gamma+1), n<=20", k), "hermite-eigenvalues", literal, 1e-6,
                             "eigenvalue ladder 2n+gamma+1"));
    c.constants["residual_2n+2gamma+1"] = ladder;
  }
  return r;
}

VerificationReport mehler(const VerifyConfig& cfg) {
  VerificationReport r("mehler");
  const auto xs = linspace(-3, 3, 13);
  for (double k : ks({0.0, 0.5, 1.0, 2.5}, cfg)) {
    MultiplicityParam m(k);
    HermiteBasis b(m, 80);
    double worst = 0.0;
    for (cplx z : {cplx(0.3), cplx(1.0), cplx(0.5, 0.3), std::polar(0.5, std::numbers::pi / 4)}) {
      double num = 0.0, den = 0.0;
      for (double x : xs)
        for (double y : xs) {
          const cplx s = mehler_series(z, x, y, b);
          num += std::norm(mehler_kernel(z, x, y, m) - s);
          den += std::norm(s);
        }
      worst = std::max(worst, std::sqrt(num / den));
    }
    r.add(check_le(tag("closed form vs N=80 series", k), "mehler-formula", worst, 1e-6));
  }
  return r;
}

VerificationReport sector_lemmas(const VerifyConfig& cfg) {
  VerificationReport r("sector-lemmas");
  for (double w : {std::numbers::pi / 6, std::numbers::pi / 4, std::numbers::pi / 3}) {
    const auto s = coth_sandwich_scan(w);
    const std::string wn = " omega=" + fmt(w);
    auto& up = r.add(check_le("coth ratio upper" + wn, "coth-sandwich", s.sup_ratio, 1.0 + 1e-12));
    up.constants["inf_ratio"] = s.inf_ratio;
    const double c2 = std::pow(std::cos(w), 2);
    auto& lo = r.add(check_ge("coth ratio lower, t->0" + wn, "coth-sandwich", s.limit_ratio, 0.9 * 2.0 * c2,
                              "threshold 0.9 * 2 cos^2(omega)"));
    lo.constants["cos2_omega"] = c2;
    lo.constants["inf_ratio"] = s.inf_ratio;
  }
  for (double k : ks({0.0, 1.0}, cfg)) {
    const auto d = kernel_domination_scan(std::numbers::pi / 4, MultiplicityParam(k));
    CheckResult c{tag("kernel domination constant c, omega=pi/4", k), "sector-kernel-domination",
                  d.c_found > 0.0 ? Status::pass : Status::fail, d.c_found, 0.0, "some c on the scan grid", {}};
    for (const auto& cand : d.candidates) {
      c.constants["ratio_H c=" + fmt(cand.c)] = cand.max_ratio_h;
      c.constants["ratio_K c=" + fmt(cand.c)] = cand.max_ratio_k;
    }
    r.add(std::move(c));
  }
  return r;
}

VerificationReport calculus(const VerifyConfig& cfg) {
  VerificationReport r("calculus");
  const double mu = std::numbers::pi / 4;
  const Sector sec(mu);
  std::mt19937_64 rng(cfg.seed);
  ContourOptions tight;
  tight.tol = 1e-10;
  const auto klist = ks({0.0, 1.0, 2.5}, cfg);
  for (double k : klist) {
    const auto t = hermite_section(MultiplicityParam(k), 40);
    for (const auto& xi : {psi_symbol(mu), exp_symbol(mu), product(psi_symbol(mu), imaginary_power_symbol(1.0, mu), mu)}) {
      auto c = psi_contour_calculus(t, xi, sec);
      auto& row = r.add(check_le(tag("contour vs spectral " + xi.name, k), "psi-contour-calculus",
                                 operator_norm(c.value - spectral_calculus(t, xi)), 1e-4));
      row.constants["nodes_per_ray"] = static_cast<double>(c.nodes);
      row.constants["cauchy_difference"] = c.cauchy_difference;
    }
  }
  const double k = klist.front();
  const auto t = hermite_section(MultiplicityParam(k), 40);
  double excess = -INFINITY;
  for (int i = 0; i < 20; ++i) {
    auto xi = random_rational_symbol(rng, mu);
    excess = std::max(excess, operator_norm(hinfty_extend(t, xi, sec, tight).value) - xi.sup_norm);
  }
  r.add(check_le(tag("max ||xi(T)|| - ||xi||_inf, 20 random symbols", k), "bounded-calculus", excess, 1e-6));

  const std::vector<double> s{1e1, 1e2, 1e3, 1e4, 1e5, 1e6, 1e7, 1e8};
  auto st = convergence_theorem_check(
      t, [mu](double sv) { return approximating_imaginary_power(1.0, sv, mu); }, imaginary_power_symbol(1.0, mu), s,
      sec, rng, 8, tight);
  auto& c = r.add(check_le(tag("convergence probe error, s=1e8", k), "convergence-theorem", st.final_error(), 1e-3));
  for (std::size_t i = 0; i < s.size(); ++i) c.constants["error s=" + fmt(s[i])] = st.errors[i];
  auto& n = r.add(check_le(tag("||xi(T)|| - sup_s ||xi_s(T)||", k), "convergence-theorem",
                           st.limit_norm - st.sup_norm(), 1e-6));
  n.constants["limit_norm"] = st.limit_norm;
  n.constants["sup_norm"] = st.sup_norm();
  r.set_provenance("calculus.section", "diag(2n+2gamma+1), N=40, mu=pi/4, theta=pi/8");
  return r;
}

VerificationReport schrodinger(const VerifyConfig& cfg) {
  VerificationReport r("schrodinger");
  for (double k : ks({1.0}, cfg)) {
    MultiplicityParam m(k);
    auto g = gauss_grid(512, 14.0, k);
    TransformPlan plan(g, m);
    auto bump = SampledFunction::sample(g, m, [](double x) { return (1 + x) * std::exp(-x * x / 2); });
    SchrodingerPropagator quartic(m, Potential::quartic());
    SchrodingerPropagator harmonic(m, Potential::harmonic());
    auto st = trotter_convergence(bump, quartic, 1.0, {4, 8, 16, 32, 64, 128, 256}, plan);
    auto& c = r.add(check_ge(tag("Trotter slope >= 0.8, V=x^4", k), "trotter-product", st.slope, 0.8));
    for (std::size_t i = 0; i < st.steps.size(); ++i) c.constants["error n=" + std::to_string(st.steps[i])] = st.errors[i];
    r.add(check_le(tag("Trotter slope <= 1.2, V=x^4", k), "trotter-product", st.slope, 1.2));

    auto f = SampledFunction::sample(g, m, [](double x) { return std::cos(3 * x) * std::exp(-x * x / 3); });
    double excess = -INFINITY;
    for (const auto* p : {&harmonic, &quartic})
      for (double t : {0.5, 1.0}) excess = std::max(excess, domination_check(f, *p, t, plan).max_excess);
    r.add(check_le(tag("max |e^{-tL}f| - e^{-tA}|f|", k), "semigroup-domination", excess, 1e-8));

    std::vector<double> pts;
    for (int i = -24; i <= 24; ++i) pts.push_back(0.25 * i);
    double low = INFINITY, high = -INFINITY;
    for (const auto* p : {&harmonic, &quartic})
      for (double t : {0.25, 1.0}) {
        auto s = sandwich_check(*p, t, pts);
        low = std::min(low, s.min_w);
        high = std::max(high, s.max_excess);
      }
    r.add(check_ge(tag("min W_t", k), "kernel-sandwich", low, -1e-10));
    r.add(check_le(tag("max W_t - K_t", k), "kernel-sandwich", high, 1e-10));
  }
  return r;
}

VerificationReport weak_type(const VerifyConfig& cfg) {
  VerificationReport r("weak-type");
  const double mu = std::numbers::pi / 4;
  for (double k : ks({0.0, 1.0}, cfg)) {
    MultiplicityParam m(k);
    for (double a : {1.0, 3.0}) {
      auto w = weak_type_harness(imaginary_power_symbol(a, mu), m, spike_family());
      const std::string name = "impower a=" + fmt(a);
      auto& c = r.add(check_finite(tag("sup lambda mu{|xi(H)f|>lambda}/||f||_1 " + name, k), "weak-type-1-1",
                                   std::max(w.sup_coarse, w.sup_fine)));
      c.constants["sup_coarse"] = w.sup_coarse;
      c.constants["sup_fine"] = w.sup_fine;
      c.constants["basis_tail"] = w.max_tail;
      r.add(check_le(tag("refinement change " + name, k), "weak-type-1-1", w.refinement_change, 0.1));
    }
    // CZ invariants on the spike family at unit L1 mass
    auto g = share(QuadratureGrid::uniform(16.0, 2048));
    std::size_t failed = 0, instances = 0;
    double doubling = 0.0, good = 0.0, bad = 0.0, total = 0.0;
    for (const auto& prof : spike_family()) {
      auto f = SampledFunction::sample(g, m, prof);
      double l1 = 0.0;
      for (std::size_t i = 0; i < f.size(); ++i)
        l1 += f[i].real() * interval_measure(g->node(i) - g->spacing() / 2, g->node(i) + g->spacing() / 2, k);
      std::vector<cplx> v(f.values());
      for (auto& x : v) x /= l1;
      auto unit = f.with_values(std::move(v));
      for (double lam : {0.1, 1.0, 10.0}) {
        auto p = cz_properties(cz_decompose(unit, lam));
        ++instances;
        failed += !p.holds();
        doubling = std::max(doubling, p.doubling);
        good = std::max(good, p.good_sup);
        bad = std::max(bad, p.bad_l1);
        total = std::max(total, p.total_measure);
      }
    }
    auto& c = r.add(check_le(tag("CZ instances violating (i)-(vi)", k), "calderon-zygmund",
                             static_cast<double>(failed), 0.0));
    c.constants["instances"] = static_cast<double>(instances);
    c.constants["doubling_constant"] = doubling;
    c.constants["max_good_over_lambda"] = good;
    c.constants["max_bad_l1_over_lambda_mu"] = bad;
    c.constants["max_lambda_sum_mu_over_l1"] = total;
  }
  r.set_provenance("weak-type.basis", "Hermite N=1024, gauss_grid(4096 -> 8192, R=50)");
  return r;
}

VerificationReport measure_geometry(const VerifyConfig& cfg) {
  VerificationReport r("measure-geometry");
  for (double k : ks({0.0, 1.0, 2.5}, cfg)) {
    MultiplicityParam m(k);
    const double coarse = doubling_scan(m, 65, 81), fine = doubling_scan(m, 129, 161);
    auto& d = r.add(check_finite(tag("doubling ratio sup", k), "doubling-measure", fine));
    d.constants["coarse"] = coarse;
    d.constants["fine"] = fine;
    r.add(check_le(tag("doubling refinement change", k), "doubling-measure", std::abs(fine - coarse) / coarse, 0.05));

    auto g = gauss_grid(256, 12.0, k);
    TransformPlan plan(g, m);
    const std::vector<double> ts{0.01, 0.1, 1.0, 10.0};
    double c = 0.0;
    for (const auto& f : {std::function<double(double)>([](double x) { return (1 + x) * std::exp(-x * x); }),
                          std::function<double(double)>([](double x) { return std::exp(-(x - 2) * (x - 2)); })})
      c = std::max(c, maximal_domination_scan(SampledFunction::sample(g, m, f), plan, ts, 16).max_ratio);
    r.add(check_finite(tag("sup_t |k_t * f| / M f", k), "maximal-domination", c));

    const std::vector<double> tt{0.1, 1, 10}, rs{0.5, 1, 2, 4}, xs{0.0, 1.0, 3.0};
    for (double delta : {1.0, 2.0}) {
      auto s = tail_mass_scan(m, tt, rs, xs, tail_polynomial_bound, delta);
      auto& row = r.add(check_finite(tag("tail mass / (1+r^2/t)^-" + fmt(delta), k), "heat-tail", s.max_ratio));
      row.constants["gaussian_rate_ratio"] = tail_mass_scan(m, tt, rs, xs, tail_gaussian_bound, delta).max_ratio;
    }
  }
  return r;
}

}  // namespace

const char* criterion_title(int n) {
  static const char* titles[] = {"Plancherel/inversion",   "classical degeneracy", "eigen-relation",
                                 "heat semigroup",         "Hermite basis",        "Mehler agreement",
                                 "sector lemmas",          "functional calculus",  "Schrodinger",
                                 "weak-type harness",      "measure geometry"};
  if (n < 1 || n > criterion_count) throw std::out_of_range("criterion_title: no such criterion");
  return titles[n - 1];
}

VerificationReport verify_criterion(int n, const VerifyConfig& cfg) {
  const auto t0 = Clock::now();
  VerificationReport r;
  switch (n) {
    case 1: r = plancherel(cfg); break;
    case 2: r = classical(cfg); break;
    case 3: r = eigen_relation(cfg); break;
    case 4: r = heat_semigroup(cfg); break;
    case 5: r = hermite(cfg); break;
    case 6: r = mehler(cfg); break;
    case 7: r = sector_lemmas(cfg); break;
    case 8: r = calculus(cfg); break;
    case 9: r = schrodinger(cfg); break;
    case 10: r = weak_type(cfg); break;
    case 11: r = measure_geometry(cfg); break;
    default: throw std::out_of_range("verify_criterion: no such criterion");
  }
  r.set_wall_time(elapsed(t0));
  return r;
}

VerificationReport verify_all(const VerifyConfig& cfg) {
  VerificationReport all("verify");
  all.set_provenance("seed", std::to_string(cfg.seed));
  if (cfg.k) all.set_provenance("k", fmt(*cfg.k));
  for (int n = 1; n <= criterion_count; ++n) all.append(verify_criterion(n, cfg));
  return all;
}

}  // namespace dunkl
