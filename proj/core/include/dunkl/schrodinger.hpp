#pragma once

#include <Eigen/Dense>
#include <functional>
#include <string>
#include <vector>

#include "dunkl/hermite.hpp"
#include "dunkl/transform.hpp"

namespace dunkl {

class Potential {
 public:
  Potential(std::function<double(double)> v, std::string label);

  static Potential zero();
  static Potential harmonic();  // x^2
  static Potential quartic();   // x^4
  // height outside |x| < width, zero inside
  static Potential well(double height = 4.0, double width = 1.0);
  // "zero", "x2", "x4", "well"
  static Potential from_label(const std::string& label);

  double operator()(double x) const { return v_(x); }
  const std::string& label() const { return label_; }
  // V(x_j) >= 0 at every node
  bool nonnegative_on(const QuadratureGrid& g) const;

 private:
  std::function<double(double)> v_;
  std::string label_;
};

// Dense reference for e^{-tL}, L = -Delta_k + V, in the Hermite DVR on n generalized
// Gauss-Hermite nodes (n even for k > 0). Functions on other grids are projected onto
// h_0..h_{n-1} and synthesized back, so the kernel is available at any (x, y).
// Converges spectrally for confining V (x^2, x^4); for V = 0 only algebraically, so
// free evolution should go through heat_apply or heat_kernel_K instead.
class SchrodingerPropagator {
 public:
  SchrodingerPropagator(const MultiplicityParam& m, Potential v, std::size_t n = 256);

  const Potential& potential() const { return v_; }
  const MultiplicityParam& multiplicity() const { return basis_.multiplicity(); }
  const HermiteBasis& basis() const { return basis_; }
  const std::vector<double>& nodes() const { return nodes_; }
  const Eigen::VectorXd& eigenvalues() const { return lambda_; }

  SampledFunction apply(const SampledFunction& f, double t) const;
  // W_t(x, y) against w_k(y) dy
  double kernel(double t, double x, double y) const;
  // W_t(x_i, y_j) for all pairs
  Eigen::MatrixXd kernel_matrix(double t, std::span<const double> xs, std::span<const double> ys) const;

 private:
  Potential v_;
  HermiteBasis basis_;
  std::vector<double> nodes_;
  Eigen::VectorXd lambda_;
  // eigenvectors in Hermite coordinates
  Eigen::MatrixXd vectors_;
};

// (e^{-tA/n} e^{-tV/n})^n f. Throws NumericalError if an intermediate L2 norm grows.
SampledFunction trotter_evolve(const SampledFunction& f, const Potential& v, double t, int n,
                               const TransformPlan& plan);

// W_t(x, y); throws NumericalError for values below -1e-10.
double schrodinger_kernel(const SchrodingerPropagator& p, double t, double x, double y);

struct TrotterStudy {
  std::vector<int> steps;
  std::vector<double> errors;  // relative L2 error against the reference
  double slope = 0.0;          // least-squares slope of log error vs log n (negated)
};
TrotterStudy trotter_convergence(const SampledFunction& f, const SchrodingerPropagator& ref, double t,
                                 const std::vector<int>& steps, const TransformPlan& plan);

struct DominationResult {
  double max_excess = 0.0;     // max_x |e^{-tL} f| - e^{-tA}|f|
  double linfty_ratio = 0.0;   // ||e^{-tL} f||_inf / ||f||_{2,k}
  double min_positive = 0.0;   // min of e^{-tL}|f| (positivity)
  double l2_ratio = 0.0;       // ||e^{-tL} f||_2 / ||f||_2
};
// e^{-tA}|f| via the transform plan, e^{-tL} f via the reference
DominationResult domination_check(const SampledFunction& f, const SchrodingerPropagator& p, double t,
                                  const TransformPlan& plan);

struct SandwichResult {
  double min_w = 0.0;       // min W_t
  double max_excess = 0.0;  // max W_t - K_t (closed form)
};
// over all pairs of scan points
SandwichResult sandwich_check(const SchrodingerPropagator& p, double t, std::span<const double> points);

}  // namespace dunkl
