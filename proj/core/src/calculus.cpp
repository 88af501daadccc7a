#include "dunkl/calculus.hpp"

#include <cmath>
#include <numbers>

#include "dunkl/error.hpp"

namespace dunkl {

using detail::require;

Sector::Sector(double mu, std::optional<double> theta) : mu_(mu), theta_(theta.value_or(0.5 * mu)) {
  require(mu > 0.0 && mu < std::numbers::pi, "Sector: mu must lie in (0, pi)");
  require(theta_ > 0.0 && theta_ < mu_, "Sector: theta must lie in (0, mu)");
}

double estimate_sup(const std::function<cplx(cplx)>& xi, double mu, std::size_t samples) {
  require(samples >= 2, "estimate_sup: need at least two samples");
  double sup = 0.0;
  for (std::size_t i = 0; i < samples; ++i) {
    double t = std::pow(10.0, -8.0 + 16.0 * static_cast<double>(i) / static_cast<double>(samples - 1));
    for (double phi : {-mu, 0.0, mu}) sup = std::max(sup, std::abs(xi(std::polar(t, phi))));
  }
  return sup;
}

SectorSymbol constant_symbol(cplx c) { return {[c](cplx) { return c; }, "constant", std::abs(c), std::nullopt}; }

SectorSymbol psi_symbol(double mu) {
  auto f = [](cplx z) { return z / ((1.0 + z) * (1.0 + z)); };
  return {f, "psi", estimate_sup(f, mu), 1.0};
}

SectorSymbol exp_symbol(double mu) {
  require(mu < std::numbers::pi / 2, "exp_symbol: z e^{-z} is bounded only on sectors with mu < pi/2");
  auto f = [](cplx z) { return z * std::exp(-z); };
  return {f, "exp", estimate_sup(f, mu), 1.0};
}

SectorSymbol imaginary_power_symbol(double a, double mu) {
  auto f = [a](cplx z) { return std::exp(cplx(0.0, a) * std::log(z)); };
  return {f, "impower:" + std::to_string(a), std::exp(std::abs(a) * mu), std::nullopt};
}

SectorSymbol product(const SectorSymbol& a, const SectorSymbol& b, double mu) {
  auto fa = a.eval, fb = b.eval;
  auto f = [fa, fb](cplx z) { return fa(z) * fb(z); };
  std::optional<double> s;
  if (a.psi_exponent || b.psi_exponent) s = std::max(a.psi_exponent.value_or(0.0), b.psi_exponent.value_or(0.0));
  return {f, a.name + "*" + b.name, estimate_sup(f, mu), s};
}

SectorSymbol random_rational_symbol(std::mt19937_64& rng, double mu, int terms) {
  require(terms >= 1, "random_rational_symbol: need a term");
  std::uniform_real_distribution<double> unit(-1.0, 1.0), pole(0.2, 5.0);
  cplx c0(unit(rng), unit(rng));
  std::vector<cplx> a;
  std::vector<double> b;
  for (int j = 0; j < terms; ++j) {
    a.emplace_back(unit(rng), unit(rng));
    b.push_back(pole(rng));
  }
  auto f = [c0, a, b](cplx z) {
    cplx s = c0;
    for (std::size_t j = 0; j < a.size(); ++j) s += a[j] / (z + b[j]);
    return s;
  };
  return {f, "rational", estimate_sup(f, mu), std::nullopt};
}

SectorSymbol approximating_imaginary_power(double a, double s, double mu) {
  require(s > 0.0, "approximating_imaginary_power: s must be positive");
  auto f = [a, s](cplx z) { return std::exp(cplx(0.0, a) * std::log(z)) * (s * z / (1.0 + s * z)) / (1.0 + z / s); };
  return {f, "impower-approx", estimate_sup(f, mu), 1.0};
}

SectorSymbol symbol_from_name(const std::string& name, double mu) {
  if (name == "psi") return psi_symbol(mu);
  if (name == "exp") return exp_symbol(mu);
  const std::string prefix = "impower:";
  if (name.rfind(prefix, 0) == 0) {
    std::size_t used = 0;
    double a = 0.0;
    try {
      a = std::stod(name.substr(prefix.size()), &used);
    } catch (const std::exception&) {
      used = 0;
    }
    require(used > 0 && used == name.size() - prefix.size(), "symbol_from_name: bad exponent in " + name);
    return imaginary_power_symbol(a, mu);
  }
  throw std::invalid_argument("symbol_from_name: unknown symbol " + name);
}

Eigen::MatrixXd hermite_section(const MultiplicityParam& m, std::size_t n) {
  HermiteBasis b(m, n);
  return b.eigenvalues().asDiagonal();
}

namespace {

bool is_diagonal(const Eigen::MatrixXd& t) {
  for (Eigen::Index j = 0; j < t.cols(); ++j)
    for (Eigen::Index i = 0; i < t.rows(); ++i)
      if (i != j && t(i, j) != 0.0) return false;
  return true;
}

void require_symmetric(const Eigen::MatrixXd& t, const char* where) {
  require(t.rows() == t.cols() && t.rows() > 0, std::string(where) + ": operator must be square");
  require((t - t.transpose()).cwiseAbs().maxCoeff() <= 1e-12 * std::max(1.0, t.cwiseAbs().maxCoeff()),
          std::string(where) + ": operator must be symmetric");
}

// (z I - T)^{-1}
Eigen::MatrixXcd resolvent(const Eigen::MatrixXd& t, cplx z, bool diagonal) {
  const Eigen::Index n = t.rows();
  if (diagonal) {
    Eigen::VectorXcd d(n);
    for (Eigen::Index i = 0; i < n; ++i) d[i] = 1.0 / (z - t(i, i));
    return d.asDiagonal();
  }
  Eigen::MatrixXcd a = -t.cast<cplx>();
  a.diagonal().array() += z;
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(a);
  if (!(lu.rcond() > 1e-14)) throw NumericalError("resolvent: z is numerically on the spectrum");
  return lu.inverse();
}

}  // namespace

Eigen::VectorXcd resolvent_apply(const Eigen::MatrixXd& t, cplx z, const Eigen::VectorXcd& v) {
  require(t.rows() == t.cols() && t.rows() == v.size(), "resolvent_apply: dimension mismatch");
  if (is_diagonal(t)) {
    Eigen::VectorXcd u(v.size());
    double scale = std::max(1.0, t.diagonal().cwiseAbs().maxCoeff());
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      cplx d = t(i, i) - z;
      if (std::abs(d) <= 1e-14 * scale) throw NumericalError("resolvent_apply: z is numerically on the spectrum");
      u[i] = v[i] / d;
    }
    return u;
  }
  Eigen::MatrixXcd a = t.cast<cplx>();
  a.diagonal().array() -= z;
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(a);
  if (!(lu.rcond() > 1e-14)) throw NumericalError("resolvent_apply: z is numerically on the spectrum");
  return lu.solve(v);
}

ContourResult psi_contour_calculus(const Eigen::MatrixXd& t, const SectorSymbol& xi, const Sector& sector,
                                   const ContourOptions& opts) {
  require_symmetric(t, "psi_contour_calculus");
  require(xi.psi_exponent.has_value(), "psi_contour_calculus: symbol is not in the Psi class");
  require(opts.tol > 0.0 && opts.h0 > 0.0 && opts.eps_factor > 0.0 && opts.r_factor > 0.0,
          "psi_contour_calculus: bad options");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t, Eigen::EigenvaluesOnly);
  const double l0 = es.eigenvalues()[0], lmax = es.eigenvalues()[t.rows() - 1];
  require(l0 > 0.0, "psi_contour_calculus: operator must be positive definite");

  const bool diagonal = is_diagonal(t);
  const double th = sector.theta();
  const cplx ep = std::polar(1.0, th), em = std::conj(ep);
  const cplx pref = 1.0 / cplx(0.0, 2.0 * std::numbers::pi);
  auto g = [&](double s) -> Eigen::MatrixXcd {
    const double r = std::exp(s);
    const cplx zp = r * ep, zm = r * em;
    return pref * r * (xi(zm) * em * resolvent(t, zm, diagonal) - xi(zp) * ep * resolvent(t, zp, diagonal));
  };

  double a = std::log(opts.eps_factor * l0), b = std::log(opts.r_factor * lmax);
  const double grow = std::log(1e3);
  // widen the window until the integrand is negligible at both ends
  for (;;) {
    require(b - a <= opts.max_log_span, "psi_contour_calculus: max_log_span too small");
    double scale = 0.0;
    const std::size_t probes = 64;
    for (std::size_t j = 0; j <= probes; ++j)
      scale = std::max(scale, g(a + (b - a) * static_cast<double>(j) / probes).norm());
    const double cut = 1e-2 * opts.tol * std::max(scale, 1e-300);
    const bool lo = g(a).norm() > cut, hi = g(b).norm() > cut;
    if (!lo && !hi) break;
    if (b - a + grow > opts.max_log_span)
      throw ConvergenceError("psi_contour_calculus: integrand does not decay inside the window");
    if (lo) a -= grow;
    if (hi) b += grow;
  }

  std::size_t n = static_cast<std::size_t>(std::ceil((b - a) / opts.h0));
  double h = (b - a) / static_cast<double>(n);
  Eigen::MatrixXcd sum = 0.5 * (g(a) + g(b));
  for (std::size_t j = 1; j < n; ++j) sum += g(a + h * static_cast<double>(j));
  Eigen::MatrixXcd est = h * sum;
  ContourResult res;
  res.t_min = std::exp(a);
  res.t_max = std::exp(b);
  for (std::size_t level = 1; level <= opts.max_levels; ++level) {
    h *= 0.5;
    for (std::size_t j = 0; j < n; ++j) sum += g(a + h * static_cast<double>(2 * j + 1));
    n *= 2;
    Eigen::MatrixXcd next = h * sum;
    const double denom = next.norm();
    res.cauchy_difference = (next - est).norm() / (denom > 0.0 ? denom : 1.0);
    est = std::move(next);
    if (res.cauchy_difference < opts.tol) {
      res.value = std::move(est);
      res.nodes = n + 1;
      return res;
    }
  }
  throw ConvergenceError("psi_contour_calculus: node doubling did not converge");
}

ContourResult hinfty_extend(const Eigen::MatrixXd& t, const SectorSymbol& xi, const Sector& sector,
                            const ContourOptions& opts) {
  require_symmetric(t, "hinfty_extend");
  SectorSymbol fpsi = xi;
  auto f = xi.eval;
  fpsi.eval = [f](cplx z) { return f(z) * z / ((1.0 + z) * (1.0 + z)); };
  fpsi.psi_exponent = 1.0;
  ContourResult r = psi_contour_calculus(t, fpsi, sector, opts);
  const Eigen::Index n = t.rows();
  Eigen::MatrixXd ip = Eigen::MatrixXd::Identity(n, n) + t;
  Eigen::LLT<Eigen::MatrixXd> llt(t);
  if (llt.info() != Eigen::Success) throw NumericalError("hinfty_extend: operator is not invertible");
  Eigen::MatrixXd m = llt.solve(ip * ip);
  r.value = m.cast<cplx>() * r.value;
  return r;
}

Eigen::MatrixXcd spectral_calculus(const Eigen::MatrixXd& t, const SectorSymbol& xi) {
  require_symmetric(t, "spectral_calculus");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t);
  Eigen::VectorXcd d(t.rows());
  for (Eigen::Index i = 0; i < d.size(); ++i) d[i] = xi(cplx(es.eigenvalues()[i], 0.0));
  Eigen::MatrixXcd u = es.eigenvectors().cast<cplx>();
  return u * d.asDiagonal() * u.adjoint();
}

SpectralResult spectral_calculus(const HermiteBasis& basis, const SectorSymbol& xi, const SampledFunction& f) {
  require(basis.multiplicity() == f.multiplicity(), "spectral_calculus: multiplicity mismatch");
  Eigen::VectorXcd c = basis.coefficients(f);
  const double peak = c.cwiseAbs().maxCoeff();
  double tail = 0.0;
  for (Eigen::Index n = std::max<Eigen::Index>(0, c.size() - 4); n < c.size(); ++n)
    tail = std::max(tail, std::abs(c[n]));
  for (Eigen::Index n = 0; n < c.size(); ++n) c[n] *= xi(cplx(basis.eigenvalue(static_cast<std::size_t>(n)), 0.0));
  return {basis.synthesize(c, f.grid_ptr()), peak > 0.0 ? tail / peak : 0.0};
}

double operator_norm(const Eigen::MatrixXcd& a) {
  if (a.size() == 0) return 0.0;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a);
  return svd.singularValues()[0];
}

Eigen::MatrixXd self_adjoint_form(const OperatorMatrix& a) {
  Eigen::MatrixXcd s = a.symmetric_form();
  const double scale = std::max(1.0, s.cwiseAbs().maxCoeff());
  require(s.imag().cwiseAbs().maxCoeff() <= 1e-10 * scale, "self_adjoint_form: section is not real");
  Eigen::MatrixXd r = s.real();
  require((r - r.transpose()).cwiseAbs().maxCoeff() <= 1e-10 * scale, "self_adjoint_form: section is not symmetric");
  return 0.5 * (r + r.transpose());
}

Eigen::VectorXcd resolvent_apply(const OperatorMatrix& t, cplx z, const Eigen::VectorXcd& v) {
  return resolvent_apply(self_adjoint_form(t), z, v);
}

ContourResult psi_contour_calculus(const OperatorMatrix& t, const SectorSymbol& xi, const Sector& sector,
                                   const ContourOptions& opts) {
  return psi_contour_calculus(self_adjoint_form(t), xi, sector, opts);
}

ContourResult hinfty_extend(const OperatorMatrix& t, const SectorSymbol& xi, const Sector& sector,
                            const ContourOptions& opts) {
  return hinfty_extend(self_adjoint_form(t), xi, sector, opts);
}

double ConvergenceStudy::sup_norm() const {
  double s = 0.0;
  for (double v : norms) s = std::max(s, v);
  return s;
}

ConvergenceStudy convergence_theorem_check(const Eigen::MatrixXd& t,
                                           const std::function<SectorSymbol(double)>& family,
                                           const SectorSymbol& limit, const std::vector<double>& s,
                                           const Sector& sector, std::mt19937_64& rng, std::size_t probes,
                                           const ContourOptions& opts) {
  require(!s.empty() && probes >= 1, "convergence_theorem_check: empty sequence or no probes");
  const Eigen::Index n = t.rows();
  std::normal_distribution<double> normal;
  Eigen::MatrixXcd u(n, static_cast<Eigen::Index>(probes));
  for (Eigen::Index j = 0; j < u.cols(); ++j)
    for (Eigen::Index i = 0; i < n; ++i) u(i, j) = cplx(normal(rng), normal(rng));

  ConvergenceStudy st;
  st.s = s;
  const Eigen::MatrixXcd lim = hinfty_extend(t, limit, sector, opts).value;
  st.limit_norm = operator_norm(lim);
  for (double sv : s) {
    SectorSymbol xs = family(sv);
    Eigen::MatrixXcd a = xs.psi_exponent ? psi_contour_calculus(t, xs, sector, opts).value
                                         : hinfty_extend(t, xs, sector, opts).value;
    Eigen::MatrixXcd d = (a - lim) * u;
    double e = 0.0;
    for (Eigen::Index j = 0; j < u.cols(); ++j) e = std::max(e, d.col(j).norm() / u.col(j).norm());
    st.errors.push_back(e);
    st.norms.push_back(operator_norm(a));
  }
  return st;
}

std::vector<double> CZDecomposition::bad_part(std::size_t j) const {
  std::vector<double> out(f.size(), 0.0);
  const CZPiece& p = bad.at(j);
  for (std::size_t i = p.first; i < p.last; ++i) out[i] = f[i] - p.mean;
  return out;
}

CZDecomposition cz_decompose(const SampledFunction& fs, double lambda) {
  require(lambda > 0.0, "cz_decompose: lambda must be positive");
  const QuadratureGrid& g = fs.grid();
  require(g.kind() == GridKind::uniform, "cz_decompose: needs a uniform grid");
  const std::size_t n = g.size(), half = n / 2;
  require(n >= 2 && (half & (half - 1)) == 0, "cz_decompose: half-grid size must be a power of two");
  require(fs.multiplicity().rank() == 1, "cz_decompose: rank one");
  CZDecomposition cz;
  cz.lambda = lambda;
  cz.grid = fs.grid_ptr();
  cz.m = fs.multiplicity();
  const double k = cz.m.k(), h = g.spacing();
  cz.f.resize(n);
  cz.cell_measure.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    require(std::abs(fs[i].imag()) == 0.0 && fs[i].real() >= 0.0, "cz_decompose: f must be real and nonnegative");
    cz.f[i] = fs[i].real();
    cz.cell_measure[i] = interval_measure(g.node(i) - 0.5 * h, g.node(i) + 0.5 * h, k);
  }
  cz.good = cz.f;

  auto average = [&](std::size_t a, std::size_t b) {
    double s = 0.0, mu = 0.0;
    for (std::size_t i = a; i < b; ++i) {
      s += cz.f[i] * cz.cell_measure[i];
      mu += cz.cell_measure[i];
    }
    return s / mu;
  };
  for (std::size_t top : {std::size_t{0}, half})
    require(average(top, top + half) <= lambda, "cz_decompose: lambda is below the average over a half-line");

  std::vector<std::pair<std::size_t, std::size_t>> stack{{0, half}, {half, n}};
  while (!stack.empty()) {
    auto [a, b] = stack.back();
    stack.pop_back();
    const double avg = average(a, b);
    if (avg > lambda) {
      const double lo = g.node(a) - 0.5 * h, hi = g.node(b - 1) + 0.5 * h;
      cz.bad.push_back({a, b, 0.5 * (lo + hi), 0.5 * (hi - lo), avg});
      for (std::size_t i = a; i < b; ++i) cz.good[i] = avg;
    } else if (b - a > 1) {
      const std::size_t mid = a + (b - a) / 2;
      stack.push_back({mid, b});
      stack.push_back({a, mid});
    }
  }
  return cz;
}

bool CZProperties::holds() const {
  return reassembly_error <= 1e-12 && good_sup <= doubling * (1.0 + 1e-12) && supports &&
         bad_l1 <= 2.0 * doubling * (1.0 + 1e-12) && mean_zero <= 1e-10 && total_measure <= 1.0 + 1e-12 &&
         overlap <= 1;
}

CZProperties cz_properties(const CZDecomposition& cz) {
  CZProperties p;
  const std::size_t n = cz.f.size();
  const double h = cz.grid->spacing();
  double fmax = 0.0, l1 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    fmax = std::max(fmax, cz.f[i]);
    l1 += cz.f[i] * cz.cell_measure[i];
  }
  std::vector<double> sum = cz.good;
  std::vector<std::size_t> count(n, 0);
  double bad_measure = 0.0;
  for (std::size_t j = 0; j < cz.bad.size(); ++j) {
    const CZPiece& b = cz.bad[j];
    std::vector<double> fj = cz.bad_part(j);
    double mu = 0.0, norm = 0.0, integral = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      sum[i] += fj[i];
      if (fj[i] != 0.0) {
        const double x = cz.grid->node(i);
        if (x - 0.5 * h < b.center - b.radius - 1e-12 || x + 0.5 * h > b.center + b.radius + 1e-12)
          p.supports = false;
      }
      norm += std::abs(fj[i]) * cz.cell_measure[i];
      integral += fj[i] * cz.cell_measure[i];
    }
    for (std::size_t i = b.first; i < b.last; ++i) {
      mu += cz.cell_measure[i];
      ++count[i];
    }
    bad_measure += mu;
    p.bad_l1 = std::max(p.bad_l1, norm / (cz.lambda * mu));
    if (norm > 0.0) p.mean_zero = std::max(p.mean_zero, std::abs(integral) / norm);
  }
  for (std::size_t i = 0; i < n; ++i) {
    p.reassembly_error = std::max(p.reassembly_error, std::abs(sum[i] - cz.f[i]));
    p.good_sup = std::max(p.good_sup, std::abs(cz.good[i]) / cz.lambda);
    p.overlap = std::max(p.overlap, count[i]);
  }
  if (fmax > 0.0) p.reassembly_error /= fmax;
  p.total_measure = l1 > 0.0 ? cz.lambda * bad_measure / l1 : 0.0;

  // doubling constant of the dyadic tree
  std::vector<double> level = cz.cell_measure;
  while (level.size() > 2) {
    std::vector<double> up(level.size() / 2);
    for (std::size_t i = 0; i < up.size(); ++i) {
      up[i] = level[2 * i] + level[2 * i + 1];
      p.doubling = std::max({p.doubling, up[i] / level[2 * i], up[i] / level[2 * i + 1]});
    }
    level = std::move(up);
  }
  return p;
}

std::vector<std::function<double(double)>> spike_family(std::size_t n, double center, double width0, double ratio) {
  require(n >= 1 && width0 > 0.0 && ratio > 0.0, "spike_family: bad parameters");
  std::vector<std::function<double(double)>> out;
  double w = width0;
  for (std::size_t j = 0; j < n; ++j, w *= ratio)
    out.push_back([center, w](double x) { return std::exp(-std::pow((x - center) / w, 2)); });
  return out;
}

double weak_type_ratio(const SampledFunction& u, double f_l1, const WeakTypeOptions& opts) {
  require(f_l1 > 0.0, "weak_type_ratio: ||f||_1 must be positive");
  require(opts.lambda_points >= 2 && opts.lambda_min > 0.0 && opts.lambda_max > opts.lambda_min,
          "weak_type_ratio: bad lambda grid");
  const auto q = u.masses();
  double sup = 0.0;
  for (std::size_t j = 0; j < opts.lambda_points; ++j) {
    const double lam = opts.lambda_min * std::pow(opts.lambda_max / opts.lambda_min,
                                                  static_cast<double>(j) / static_cast<double>(opts.lambda_points - 1));
    double mu = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i)
      if (std::abs(u[i]) > lam) mu += q[i];
    sup = std::max(sup, lam * mu / f_l1);
  }
  return sup;
}

WeakTypeResult weak_type_harness(const SectorSymbol& xi, const MultiplicityParam& m,
                                 const std::vector<std::function<double(double)>>& family,
                                 const WeakTypeOptions& opts) {
  require(!family.empty(), "weak_type_harness: empty family");
  HermiteBasis basis(m, opts.basis_n);
  WeakTypeResult r;
  for (int pass = 0; pass < 2; ++pass) {
    auto grid = gauss_grid(opts.grid_n * (pass ? 2 : 1), opts.radius, m.k());
    auto& out = pass ? r.fine : r.coarse;
    for (const auto& prof : family) {
      auto f = SampledFunction::sample(grid, m, prof);
      double l1 = 0.0;
      const auto q = f.masses();
      for (std::size_t i = 0; i < f.size(); ++i) l1 += q[i] * std::abs(f[i]);
      SpectralResult u = spectral_calculus(basis, xi, f);
      r.max_tail = std::max(r.max_tail, u.tail);
      out.push_back(weak_type_ratio(u.value, l1, opts));
    }
  }
  for (double v : r.coarse) r.sup_coarse = std::max(r.sup_coarse, v);
  for (double v : r.fine) r.sup_fine = std::max(r.sup_fine, v);
  r.refinement_change = r.sup_coarse > 0.0 ? std::abs(r.sup_fine - r.sup_coarse) / r.sup_coarse : 0.0;
  return r;
}

}  // namespace dunkl
