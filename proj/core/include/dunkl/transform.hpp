#pragma once

#include <Eigen/Dense>
#include <functional>

#include "dunkl/measure.hpp"

namespace dunkl {

// Dense Dunkl transform between two symmetric grids:
//   F f(xi) = c_k^{-1} int f(x) E_k(x, -i xi) |x|^{2k} dx,   F^{-1} g(x) = (F g)(-x).
class TransformPlan {
 public:
  TransformPlan(GridPtr source, GridPtr target, MultiplicityParam m, double truncation_tol = 1e-6);
  TransformPlan(GridPtr grid, MultiplicityParam m, double truncation_tol = 1e-6);

  const GridPtr& source() const { return source_; }
  const GridPtr& target() const { return target_; }
  const MultiplicityParam& multiplicity() const { return m_; }
  // c_k
  double normalization() const { return ck_; }
  // rows: target nodes xi_i, columns: source nodes x_j
  const Eigen::MatrixXcd& kernel() const { return kernel_; }
  double truncation_tolerance() const { return tol_; }

 private:
  GridPtr source_, target_;
  MultiplicityParam m_;
  double ck_;
  double tol_;
  Eigen::MatrixXcd kernel_;
};

// Both throw TruncationError when the input has not decayed at the grid edge.
SampledFunction forward(const SampledFunction& f, const TransformPlan& plan);
SampledFunction inverse(const SampledFunction& g, const TransformPlan& plan);
// F^{-1}(mult(xi) F f)
SampledFunction apply_multiplier(const SampledFunction& f, const TransformPlan& plan,
                                 const std::function<cplx(double)>& mult);

struct RadialQuadrature {
  double upper = 40.0;
  std::size_t panels = 80;
  std::size_t order = 16;
  double truncation_tol = 1e-12;
};

// b_k int_0^inf f(s) J_{gamma+d/2-1}(s r) s^{2 gamma + d - 1} ds,
// b_k = 2^{-(gamma+d/2-1)} / Gamma(gamma + d/2).
double radial_transform(const std::function<double(double)>& profile, const MultiplicityParam& m, double r,
                        const RadialQuadrature& q = {});

// tau_{x0} f via the multiplier E_k(x0, i xi). At k = 0 this is f(y + x0).
SampledFunction translate(const SampledFunction& f, double x0, const TransformPlan& plan);
// tau_{x0} f(y) for radial f(y) = profile(|y|):
//   int_{-1}^{1} profile(sqrt(x0^2 + y^2 + 2 x0 y t)) dnu(t),  dnu ~ (1-t)^{k-1} (1+t)^k dt.
double translate_radial(const std::function<double(double)>& profile, double x0, double y, double k,
                        std::size_t nodes = 64);
// tau_x(chi_{B(0,r)})(-y) in closed form (regularized incomplete beta).
double translate_ball_indicator(double r, double x, double y, double k);

// f *_k g = F^{-1}(F f . F g); one of the two must be even (radial).
SampledFunction convolve(const SampledFunction& f, const SampledFunction& g, const TransformPlan& plan);

}  // namespace dunkl
