#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <vector>

namespace dunkl {

using cplx = std::complex<double>;

// Multiplicity k >= 0, one entry per coordinate. Rank one is the common case;
// several entries describe the product group Z_2^d acting coordinatewise.
class MultiplicityParam {
 public:
  explicit MultiplicityParam(double k = 0.0);
  explicit MultiplicityParam(std::vector<double> k);

  std::size_t rank() const { return k_.size(); }
  double k(std::size_t j = 0) const { return k_.at(j); }
  const std::vector<double>& values() const { return k_; }
  // gamma_k, the sum of the multiplicities.
  double gamma() const { return gamma_; }
  double dimension() const { return static_cast<double>(k_.size()); }

  bool operator==(const MultiplicityParam&) const = default;

 private:
  std::vector<double> k_;
  double gamma_ = 0.0;
};

// w_k(x) = prod |x_j|^{2 k_j}
double weight(double x, double k);
double weight(std::span<const double> x, const MultiplicityParam& m);

// c_k = int exp(-|x|^2/2) w_k(x) dx (closed form, product over coordinates).
double gaussian_constant(const MultiplicityParam& m);

// Closed-form mu_k(B(center, r)) in rank one.
double ball_measure(double center, double r, const MultiplicityParam& m);
// mu_k([a, b]) in rank one, a <= b.
double interval_measure(double a, double b, double k);
// d_k = mu_k(B(0,1)).
double unit_ball_measure(const MultiplicityParam& m);
// sup of mu_k(B(x, 2r)) / mu_k(B(x, r)) over `centers` points in [-x_max, x_max] and
// `radii` log-spaced radii in [r_min, r_max]
double doubling_scan(const MultiplicityParam& m, std::size_t centers, std::size_t radii, double x_max = 8.0,
                     double r_min = 1e-3, double r_max = 1e2);

struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Golub-Welsch from monic recurrence p_{n+1} = (x - a_n) p_n - b_n p_{n-1};
// mu0 is the total mass of the measure.
GaussRule gauss_from_recurrence(std::span<const double> a, std::span<const double> b, double mu0);
GaussRule gauss_legendre(std::size_t n);
// weight (1-t)^alpha (1+t)^beta on [-1, 1]
GaussRule gauss_jacobi(std::size_t n, double alpha, double beta);

// Composite Gauss-Legendre integral of f over consecutive breakpoints,
// splitting every piece into panels no wider than max_panel.
double integrate(const std::function<double(double)>& f, std::span<const double> breakpoints,
                 double max_panel, std::size_t order = 16);

enum class GridKind { gauss_legendre, uniform, custom };

// Nodes sorted ascending and symmetric about 0, so mirror(i) = size-1-i.
class QuadratureGrid {
 public:
  // origin_exponent = b > 0 swaps the two panels touching 0 for Gauss-Jacobi rules
  // exact for |x|^b times a polynomial; the stored weights are divided by |x|^b.
  static QuadratureGrid composite_gauss_legendre(double radius, std::size_t panels,
                                                 std::size_t order = 16, double origin_exponent = 0.0);
  // Cell-centred midpoint grid with n cells of width 2R/n; n even so 0 is a cell edge.
  static QuadratureGrid uniform(double radius, std::size_t n);
  static QuadratureGrid from_nodes(std::vector<double> nodes, std::vector<double> weights);

  std::span<const double> nodes() const { return nodes_; }
  std::span<const double> weights() const { return weights_; }
  double node(std::size_t i) const { return nodes_[i]; }
  double weight(std::size_t i) const { return weights_[i]; }
  double radius() const { return radius_; }
  std::size_t size() const { return nodes_.size(); }
  GridKind kind() const { return kind_; }
  // Cell width of a uniform grid (0 otherwise).
  double spacing() const { return spacing_; }
  std::size_t mirror(std::size_t i) const { return nodes_.size() - 1 - i; }

  double integrate(std::span<const double> values) const;
  bool same_nodes(const QuadratureGrid& other) const;

 private:
  QuadratureGrid(std::vector<double> nodes, std::vector<double> weights, double radius,
                 GridKind kind, double spacing);

  std::vector<double> nodes_;
  std::vector<double> weights_;
  double radius_ = 0.0;
  GridKind kind_ = GridKind::custom;
  double spacing_ = 0.0;
};

using GridPtr = std::shared_ptr<const QuadratureGrid>;

GridPtr share(QuadratureGrid g);
// Composite Gauss-Legendre with 16-point panels; n must be a multiple of 32.
// Passing k adapts the panels at 0 to the weight |x|^{2k}.
GridPtr gauss_grid(std::size_t n = 512, double radius = 14.0, double k = 0.0);

class SampledFunction {
 public:
  SampledFunction(GridPtr grid, MultiplicityParam m, std::vector<cplx> values);

  template <class F>
  static SampledFunction sample(GridPtr grid, const MultiplicityParam& m, F&& f) {
    std::vector<cplx> v(grid->size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = cplx(f(grid->node(i)));
    return SampledFunction(std::move(grid), m, std::move(v));
  }

  const QuadratureGrid& grid() const { return *grid_; }
  const GridPtr& grid_ptr() const { return grid_; }
  const MultiplicityParam& multiplicity() const { return m_; }
  const std::vector<cplx>& values() const { return values_; }
  cplx operator[](std::size_t i) const { return values_[i]; }
  std::size_t size() const { return values_.size(); }

  SampledFunction with_values(std::vector<cplx> values) const;
  // q_j w_k(x_j): quadrature weights for the Dunkl measure.
  std::vector<double> masses() const;
  std::vector<double> abs() const;
  // Largest |f(x_j) - f_other(x_j)|.
  double max_difference(const SampledFunction& other) const;

 private:
  GridPtr grid_;
  MultiplicityParam m_;
  std::vector<cplx> values_;
};

// (int |f|^p w_k dx)^{1/p}; p = infinity gives max |f|. Throws TruncationError when
// the integrand at the grid edge exceeds truncation_tol relative to the total.
double dunkl_norm(const SampledFunction& f, double p, double truncation_tol = 1e-8);
// Discrete inner product <f, g>_k = sum f conj(g) q w.
cplx dunkl_inner(const SampledFunction& f, const SampledFunction& g);

}  // namespace dunkl
