#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <span>
#include <vector>

#include "dunkl/measure.hpp"

namespace dunkl {

// Generalized Hermite functions h_n(x) = p_n(x) e^{-x^2/2}, with p_n orthonormal
// for |x|^{2k} e^{-x^2} dx. Built from the three-term recurrence
//   x h_n = a_{n+1} h_{n+1} + a_n h_{n-1},  a_n^2 = (n + 2k [n odd]) / 2.
// Eigenfunctions of -Delta_k + x^2 with eigenvalue 2n + 2k + 1.
class HermiteBasis {
 public:
  HermiteBasis(MultiplicityParam m, std::size_t n);

  const MultiplicityParam& multiplicity() const { return m_; }
  std::size_t size() const { return n_; }
  double eigenvalue(std::size_t n) const;
  Eigen::VectorXd eigenvalues() const;
  // a_n for n >= 1.
  double recurrence(std::size_t n) const;

  // h_0..h_{out.size()-1} at x (out may be longer than size()).
  void evaluate(double x, std::span<double> out) const;
  void evaluate_jets(double x, std::span<double> h, std::span<double> dh, std::span<double> d2h) const;
  double value(std::size_t n, double x) const;

  // rows = grid nodes, columns = h_0..h_{N-1}
  Eigen::MatrixXd sample(const QuadratureGrid& g) const;
  // <f, h_n>_k with the grid's Dunkl masses
  Eigen::VectorXcd coefficients(const SampledFunction& f) const;
  SampledFunction synthesize(const Eigen::VectorXcd& c, const GridPtr& grid) const;

  // Gauss rule with m nodes for |x|^{2k} e^{-x^2}. weights[j] = 1 / sum_{n<m} h_n(x_j)^2,
  // so sum_j weights[j] g(x_j) integrates g |x|^{2k} dx exactly for g = h_a h_b, a + b < 2m.
  GaussRule gauss_rule(std::size_t m) const;

  // max |<h_a, h_b> - delta_ab| over the first `rows` functions.
  double gram_deviation(const GaussRule& rule, std::size_t rows) const;

 private:
  MultiplicityParam m_;
  std::size_t n_;
};

// Builds the basis and aborts with ConvergenceError if the Gram deviation exceeds 1e-6.
HermiteBasis build_hermite_basis(const MultiplicityParam& m, std::size_t n);

}  // namespace dunkl
