#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace regbound {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Univariate polynomial with exact rational coefficients in the monomial
/// basis, lowest degree first. Trailing zeros are always stripped, so the
/// zero polynomial is the empty coefficient vector and degree() is -1.
class RationalPoly {
 public:
  RationalPoly() = default;
  explicit RationalPoly(std::vector<Rational> coeffs);
  RationalPoly(std::initializer_list<Rational> coeffs);

  static RationalPoly constant(const Rational& c);
  /// The monic linear polynomial t + shift.
  static RationalPoly linear(const Rational& shift);

  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  Rational coeff(int power) const;
  Rational leading() const;

  Rational operator()(const Rational& t) const;
  /// Evaluate at an integer and require an integral result.
  Integer eval_integer(const Integer& t) const;
  bool integral_at(const Integer& t) const;

  RationalPoly& operator+=(const RationalPoly& rhs);
  RationalPoly& operator-=(const RationalPoly& rhs);
  RationalPoly& operator*=(const RationalPoly& rhs);
  RationalPoly& operator*=(const Rational& scalar);

  friend RationalPoly operator+(RationalPoly lhs, const RationalPoly& rhs) { return lhs += rhs; }
  friend RationalPoly operator-(RationalPoly lhs, const RationalPoly& rhs) { return lhs -= rhs; }
  friend RationalPoly operator*(RationalPoly lhs, const RationalPoly& rhs) { return lhs *= rhs; }
  friend RationalPoly operator*(RationalPoly lhs, const Rational& s) { return lhs *= s; }
  friend RationalPoly operator*(const Rational& s, RationalPoly rhs) { return rhs *= s; }
  friend bool operator==(const RationalPoly&, const RationalPoly&) = default;

  /// p(t + shift).
  RationalPoly shifted(const Integer& shift) const;

  std::string to_string(const std::string& var = "t") const;

 private:
  void normalize();

  std::vector<Rational> coeffs_;
};

/// The polynomial t -> gen_binom(t + shift, j) of degree j (zero for j < 0).
RationalPoly binomial_poly(const Integer& shift, int j);

}  // namespace regbound
