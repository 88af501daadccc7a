#pragma once

#include <Eigen/Dense>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "dunkl/hermite.hpp"
#include "dunkl/measure.hpp"

namespace dunkl {

struct Jet {
  double value;
  double d1;
  double d2;
};
using SmoothFunction = std::function<Jet(double)>;
using PotentialFn = std::function<double(double)>;

// T f(x) = f'(x) + k (f(x) - f(-x)) / x; at x = 0 the value (1 + 2k) f'(0).
double apply_T(const SmoothFunction& f, double k, double x);
// Delta_k f = f'' + (2k/x) f' - k (f(x) - f(-x)) / x^2; at 0, (1 + 2k) f''(0).
double apply_laplacian(const SmoothFunction& f, double k, double x);

// Fourth-order centred stencils on a uniform grid. Throws std::out_of_range when
// the stencil leaves the grid.
cplx apply_T(const SampledFunction& f, std::size_t node);
cplx apply_laplacian(const SampledFunction& f, std::size_t node);

// Spectral route: project onto the Hermite basis and differentiate exactly.
SampledFunction apply_T_spectral(const SampledFunction& f, const HermiteBasis& basis);
SampledFunction apply_laplacian_spectral(const SampledFunction& f, const HermiteBasis& basis);

struct OperatorKind {
  enum class Type { laplacian, oscillator, schrodinger };
  Type type = Type::laplacian;
  PotentialFn potential;
  std::string label;

  // -Delta_k
  static OperatorKind laplacian();
  // -Delta_k + x^2
  static OperatorKind oscillator();
  // -Delta_k + V
  static OperatorKind schrodinger(PotentialFn v, std::string label = "V");
};

// Conservative finite differences on QuadratureGrid::uniform(radius, n), Dirichlet ends.
struct GridBasis {
  std::size_t n;
  double radius;
};
// Galerkin section on h_0..h_{N-1}.
struct HermiteSection {
  std::size_t n;
};
// Discrete variable representation on the N generalized Gauss-Hermite nodes.
struct DvrBasis {
  std::size_t n;
};
using BasisSpec = std::variant<GridBasis, HermiteSection, DvrBasis>;

enum class BasisTag { grid, hermite, dvr };
const char* to_string(BasisTag t);

// A finite section of an operator.
//  grid:    acts on nodal values, symmetric for sum_j masses_j f_j conj(g_j).
//  hermite: acts on coefficients in h_0..h_{N-1}; masses are one.
//  dvr:     acts on a_j = node_scale_j f(x_j) (an orthonormal nodal basis); masses are
//           one and node_scale_j^2 is the Gauss weight for |x|^{2k} dx at x_j.
struct OperatorMatrix {
  Eigen::MatrixXcd entries;
  BasisTag basis = BasisTag::hermite;
  std::vector<double> nodes;
  std::vector<double> masses;
  std::vector<double> node_scale;
  MultiplicityParam multiplicity;

  Eigen::Index dim() const { return entries.rows(); }
  // M^{1/2} A M^{-1/2}
  Eigen::MatrixXcd symmetric_form() const;
  // max |S - S^*| / max |S|
  double symmetry_defect() const;
  bool is_diagonal(double tol = 0.0) const;
};

OperatorMatrix make_diagonal_operator(const Eigen::VectorXd& diag, const MultiplicityParam& m);

// Throws NumericalError when the assembled matrix fails the symmetry check.
OperatorMatrix discretize_operator(const OperatorKind& kind, const BasisSpec& basis,
                                   const MultiplicityParam& m);

}  // namespace dunkl
