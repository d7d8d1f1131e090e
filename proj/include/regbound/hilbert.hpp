#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "regbound/rational_poly.hpp"

namespace regbound {

Integer factorial(int j);

/// Polynomial binomial coefficient x(x-1)...(x-j+1)/j!, defined for every
/// integer x; zero when j < 0. Negative x is not clamped, so
/// gen_binom(s + m, m) is the Euler characteristic of O(s) on P^m for all s.
Integer gen_binom(const Integer& x, int j);

/// Hilbert polynomial of an n-dimensional variety in the basis
///
///   chi(O_X(z)) = sum_{j=0..n} c_j * binom(z + j - 1, j).
///
/// c_n is the degree and c_j is the Euler characteristic of a general
/// codimension-j linear section. Integrality at every integer follows from
/// the coefficients being integers.
class HilbertPoly {
 public:
  /// The coefficient list must be nonempty and end in c_n >= 1
  /// (degree_non_positive otherwise).
  explicit HilbertPoly(std::vector<Integer> coeffs);

  int dim() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }
  const Integer& degree() const { return coeffs_.back(); }

  /// chi(O_X(z)).
  Integer operator()(const Integer& z) const;

  /// The same polynomial in the monomial basis.
  RationalPoly to_monomial() const;

  friend bool operator==(const HilbertPoly&, const HilbertPoly&) = default;

 private:
  std::vector<Integer> coeffs_;
};

Integer hp_eval(const HilbertPoly& h, const Integer& z);

/// Interpolate the dimension-n Hilbert polynomial through n + 1 points
/// (z_i, chi_i) with distinct abscissae.
HilbertPoly hp_from_values(int n, std::span<const std::pair<Integer, Integer>> points);

/// Hilbert polynomial of a general hyperplane section: drops c_0, which is
/// the backward difference chi(z) - chi(z - 1) re-expressed in the basis.
HilbertPoly hp_hyperplane_section(const HilbertPoly& h);

std::string to_string(const HilbertPoly& h);

}  // namespace regbound
