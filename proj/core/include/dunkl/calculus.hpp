#pragma once

#include <Eigen/Dense>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "dunkl/dunkl_operator.hpp"
#include "dunkl/hermite.hpp"
#include "dunkl/measure.hpp"

namespace dunkl {

// Open sector S_mu = {|arg z| < mu}; contours run along arg z = +-theta.
class Sector {
 public:
  explicit Sector(double mu, std::optional<double> theta = std::nullopt);
  double mu() const { return mu_; }
  double theta() const { return theta_; }
  bool contains(cplx z) const { return z != 0.0 && std::abs(std::arg(z)) < mu_; }

 private:
  double mu_, theta_;
};

struct SectorSymbol {
  std::function<cplx(cplx)> eval;
  std::string name;
  double sup_norm = 0.0;                 // on S_mu, sampled on the boundary rays
  std::optional<double> psi_exponent;    // s with |xi| <= C |z|^s / (1+|z|)^{2s}

  cplx operator()(cplx z) const { return eval(z); }
};

// sup of |xi| over the rays arg z = +-mu and the positive axis, t log-spaced in [1e-8, 1e8]
double estimate_sup(const std::function<cplx(cplx)>& xi, double mu, std::size_t samples = 4001);

SectorSymbol constant_symbol(cplx c);
SectorSymbol psi_symbol(double mu);                       // z / (1+z)^2
SectorSymbol exp_symbol(double mu);                       // z e^{-z}, needs mu < pi/2
SectorSymbol imaginary_power_symbol(double a, double mu);  // z^{ia}, principal branch
SectorSymbol product(const SectorSymbol& a, const SectorSymbol& b, double mu);
// c_0 + sum_j a_j / (z + b_j), b_j > 0, |a_j| <= 1: bounded and holomorphic on S_mu
SectorSymbol random_rational_symbol(std::mt19937_64& rng, double mu, int terms = 3);
// z^{ia} (s z / (1 + s z)) / (1 + z / s)
SectorSymbol approximating_imaginary_power(double a, double s, double mu);
// parse "psi", "exp", "impower:a"
SectorSymbol symbol_from_name(const std::string& name, double mu);

// diag(lambda_0..lambda_{N-1}) of -Delta_k + x^2
Eigen::MatrixXd hermite_section(const MultiplicityParam& m, std::size_t n);

// Real symmetric form M^{1/2} A M^{-1/2} of a self-adjoint section; throws
// std::invalid_argument when it is not real symmetric to 1e-10.
Eigen::MatrixXd self_adjoint_form(const OperatorMatrix& a);

// (T - z I)^{-1} v. Diagonal T is solved componentwise; throws NumericalError when
// z is numerically on the spectrum.
Eigen::VectorXcd resolvent_apply(const Eigen::MatrixXd& t, cplx z, const Eigen::VectorXcd& v);

struct ContourOptions {
  double eps_factor = 1e-6;  // window starts at [eps_factor lambda_0, r_factor lambda_max]
  double r_factor = 1e6;
  double h0 = 0.5;           // initial trapezoid step in log t
  double tol = 1e-6;         // relative Cauchy difference between doublings
  std::size_t max_levels = 14;
  double max_log_span = 200.0;
};

struct ContourResult {
  Eigen::MatrixXcd value;
  double cauchy_difference = 0.0;
  std::size_t nodes = 0;  // per ray
  double t_min = 0.0, t_max = 0.0;
};

// xi(T) = (1/2 pi i) int over the boundary of S_theta of xi(z) (z - T)^{-1} dz for self-adjoint T > 0.
// Trapezoid in log t with nested doubling; the window grows until the integrand is
// negligible at both ends. Throws ConvergenceError when doubling does not settle.
ContourResult psi_contour_calculus(const Eigen::MatrixXd& t, const SectorSymbol& xi, const Sector& sector,
                                   const ContourOptions& opts = {});
// (I + T)^2 T^{-1} (xi psi)(T)
ContourResult hinfty_extend(const Eigen::MatrixXd& t, const SectorSymbol& xi, const Sector& sector,
                            const ContourOptions& opts = {});

// U diag(xi(lambda)) U^T from the eigendecomposition of symmetric T
Eigen::MatrixXcd spectral_calculus(const Eigen::MatrixXd& t, const SectorSymbol& xi);

struct SpectralResult {
  SampledFunction value;
  double tail = 0.0;  // max |c_n| over the last 4 coefficients, relative to max |c_n|
};
// sum_n xi(lambda_n) <f, h_n> h_n
SpectralResult spectral_calculus(const HermiteBasis& basis, const SectorSymbol& xi, const SampledFunction& f);

double operator_norm(const Eigen::MatrixXcd& a);

// The same operations on a discretized section, in its symmetric frame.
Eigen::VectorXcd resolvent_apply(const OperatorMatrix& t, cplx z, const Eigen::VectorXcd& v);
ContourResult psi_contour_calculus(const OperatorMatrix& t, const SectorSymbol& xi, const Sector& sector,
                                   const ContourOptions& opts = {});
ContourResult hinfty_extend(const OperatorMatrix& t, const SectorSymbol& xi, const Sector& sector,
                            const ContourOptions& opts = {});

struct ConvergenceStudy {
  std::vector<double> s;
  std::vector<double> errors;  // max over probes ||xi_s(T)u - xi(T)u|| / ||u||
  std::vector<double> norms;   // ||xi_s(T)||
  double limit_norm = 0.0;     // ||xi(T)||
  double final_error() const { return errors.empty() ? 0.0 : errors.back(); }
  double sup_norm() const;
};
ConvergenceStudy convergence_theorem_check(const Eigen::MatrixXd& t,
                                           const std::function<SectorSymbol(double)>& family,
                                           const SectorSymbol& limit, const std::vector<double>& s,
                                           const Sector& sector, std::mt19937_64& rng,
                                           std::size_t probes = 8, const ContourOptions& opts = {});

// Calderon-Zygmund decomposition of a nonnegative piecewise-constant function on a
// uniform grid over [-R, R] whose half-grid size is a power of two. Cells carry their
// exact mu_k measure.
struct CZPiece {
  std::size_t first = 0, last = 0;  // cell range [first, last)
  double center = 0.0, radius = 0.0;
  double mean = 0.0;                // mu_k-average of f over the interval
};
struct CZDecomposition {
  double lambda = 0.0;
  GridPtr grid;
  MultiplicityParam m;
  std::vector<double> cell_measure;
  std::vector<double> f, good;
  std::vector<CZPiece> bad;
  // f_j on the grid (zero outside its cell range)
  std::vector<double> bad_part(std::size_t j) const;
};
CZDecomposition cz_decompose(const SampledFunction& f, double lambda);

struct CZProperties {
  double reassembly_error = 0.0;  // (i)   max |f - g - sum f_j|
  double good_sup = 0.0;          // (ii)  ||g||_inf / lambda, bounded by the doubling constant
  double doubling = 0.0;          //       max mu(parent) / mu(child) over dyadic pairs
  bool supports = true;           // (iii) supp f_j inside B_j
  double bad_l1 = 0.0;            // (iv)  max ||f_j||_1 / (lambda mu(B_j)), bounded by 2 doubling
  double mean_zero = 0.0;         //       max |int f_j dmu| / ||f_j||_1
  double total_measure = 0.0;     // (v)   lambda sum mu(B_j) / ||f||_1 <= 1
  std::size_t overlap = 0;        // (vi)  max number of B_j containing a cell
  bool holds() const;
};
CZProperties cz_properties(const CZDecomposition& cz);

struct WeakTypeOptions {
  std::size_t basis_n = 1024;
  double radius = 50.0;
  std::size_t grid_n = 4096;  // refined grid has twice as many nodes
  std::size_t lambda_points = 61;
  double lambda_min = 1e-2, lambda_max = 1e3;
};
struct WeakTypeResult {
  std::vector<double> coarse, fine;  // sup_lambda lambda mu{|xi(H)f| > lambda} / ||f||_1, per f
  double sup_coarse = 0.0, sup_fine = 0.0;
  double refinement_change = 0.0;    // |sup_fine - sup_coarse| / sup_coarse
  double max_tail = 0.0;
};
// Gaussian bumps of unit height, width width0 ratio^j, centred at `center`
std::vector<std::function<double(double)>> spike_family(std::size_t n = 5, double center = 0.5,
                                                         double width0 = 0.5, double ratio = 0.75);
WeakTypeResult weak_type_harness(const SectorSymbol& xi, const MultiplicityParam& m,
                                 const std::vector<std::function<double(double)>>& family,
                                 const WeakTypeOptions& opts = {});
// sup over the lambda grid of lambda mu_k{|u| > lambda} / ||f||_1 on u's grid
double weak_type_ratio(const SampledFunction& u, double f_l1, const WeakTypeOptions& opts = {});

}  // namespace dunkl
