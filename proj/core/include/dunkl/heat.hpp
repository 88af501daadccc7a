#pragma once

#include <span>
#include <vector>

#include "dunkl/measure.hpp"
#include "dunkl/transform.hpp"

namespace dunkl {

// K_t(x,y) = (2t)^{-gamma-d/2} c_k^{-1} e^{-(|x|^2+|y|^2)/4t} E_k(x, y/2t)
double log_heat_kernel(double t, double x, double y, const MultiplicityParam& m);
double heat_kernel_K(double t, double x, double y, const MultiplicityParam& m);
double heat_kernel_K(double t, std::span<const double> x, std::span<const double> y, const MultiplicityParam& m);

// e^{-tA} f = F^{-1}(e^{-t|xi|^2} F f)
SampledFunction heat_apply(const SampledFunction& f, double t, const TransformPlan& plan);
// sum_j K_t(x_i, x_j) f_j q_j w(x_j)
SampledFunction heat_apply_kernel(const SampledFunction& f, double t);

// (1 / (d_k r^{2 gamma + 1})) |f *_k chi_{B_r}|(x), d_k = mu_k(B(0,1))
double ball_average(const SampledFunction& f, double x, double r);

struct MaximalOptions {
  int j_min = -8;
  int j_max = 6;
};
// sup over r = 2^j of ball_average
double maximal_function(const SampledFunction& f, double x, const MaximalOptions& opt = {});

// mass of K_t(x, .) w_k outside {y : min(|y-x|, |y+x|) <= r}
double tail_mass(double t, double x, double r, const MultiplicityParam& m);

struct BallComparison {
  double ratio;
  double sup_kt;
  double inf_k2t;
};
// sup_{y in B(z, sqrt t)} K_t(x,y) / inf_{y in B(z, sqrt t)} K_{2t}(x,y), sampled
BallComparison ball_comparison_check(double t, double z, double x, const MultiplicityParam& m,
                                     std::size_t samples = 201);

struct ScanSummary {
  double max_ratio = 0.0;
  double x = 0.0;
  double y = 0.0;
  double t = 0.0;
  std::size_t points = 0;
};

// K_t(x,y) / (2^{gamma+1/2} e^{-m^2/8t} K_{2t}(x,y)), m = min(|y-x|, |y+x|); bounded by one
ScanSummary heat_domination_scan(const MultiplicityParam& m, std::span<const double> ts,
                                 std::span<const double> xs);
// as above against the bare e^{-m^2/2t} K_{2t}(x,y)
ScanSummary heat_domination_scan_literal(const MultiplicityParam& m, std::span<const double> ts,
                                         std::span<const double> xs);
// tail_mass / bound(t, r)
ScanSummary tail_mass_scan(const MultiplicityParam& m, std::span<const double> ts, std::span<const double> rs,
                           std::span<const double> xs, double (*bound)(double t, double r, double delta),
                           double delta);
double tail_polynomial_bound(double t, double r, double delta);
double tail_gaussian_bound(double t, double r, double delta);
ScanSummary ball_comparison_scan(const MultiplicityParam& m, std::span<const double> ts,
                                 std::span<const double> points);
// sup_t |e^{-tA} f(x)| / M f(x) over grid nodes (every stride-th one)
ScanSummary maximal_domination_scan(const SampledFunction& f, const TransformPlan& plan,
                                    std::span<const double> ts, std::size_t stride = 8,
                                    double x_max = 8.0);

}  // namespace dunkl
