#pragma once

#include "fusion/combinatorics.hpp"
#include "fusion/subspace.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace fusion {

using Exponent = std::vector<int>;

/// All exponent vectors of length d summing to `degree`, in descending lexicographic order.
std::vector<Exponent> enumerate_monomials(int d, int degree);

/// Sparse homogeneous polynomial in d variables. Terms with coefficient
/// exactly zero are dropped, so an empty map is the zero polynomial.
class HomogeneousPoly {
 public:
  HomogeneousPoly(int ambient_dim, int degree);

  /// x^T Q x for a symmetric d x d matrix Q.
  static HomogeneousPoly quadratic_form(const Matrix& q);

  /// (x_1^2 + ... + x_d^2)^p.
  static HomogeneousPoly sphere_power(int d, int p);

  int ambient_dim() const noexcept { return d_; }
  int degree() const noexcept { return degree_; }
  const std::map<Exponent, double>& coeffs() const noexcept { return coeffs_; }

  double coeff(const Exponent& e) const;
  void add_term(const Exponent& e, double c);

  HomogeneousPoly& operator+=(const HomogeneousPoly& other);
  HomogeneousPoly& operator-=(const HomogeneousPoly& other);
  HomogeneousPoly& operator*=(double s);
  friend HomogeneousPoly operator*(const HomogeneousPoly& a, const HomogeneousPoly& b);

  HomogeneousPoly pow(int p) const;

  double evaluate(const Vector& x) const;
  double max_abs_coeff() const;

 private:
  void check_exponent(const Exponent& e) const;

  int d_;
  int degree_;
  std::map<Exponent, double> coeffs_;
};

}  // namespace fusion
