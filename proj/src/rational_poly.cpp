#include "regbound/rational_poly.hpp"

#include <sstream>
#include <utility>

#include "regbound/error.hpp"
#include "regbound/hilbert.hpp"

namespace regbound {

RationalPoly::RationalPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

RationalPoly::RationalPoly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { normalize(); }

RationalPoly RationalPoly::constant(const Rational& c) { return RationalPoly({c}); }

RationalPoly RationalPoly::linear(const Rational& shift) { return RationalPoly({shift, Rational(1)}); }

void RationalPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational RationalPoly::coeff(int power) const {
  if (power < 0 || power > degree()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(power)];
}

Rational RationalPoly::leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }

Rational RationalPoly::operator()(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

bool RationalPoly::integral_at(const Integer& t) const {
  return denominator((*this)(Rational(t))) == 1;
}

Integer RationalPoly::eval_integer(const Integer& t) const {
  const Rational v = (*this)(Rational(t));
  if (denominator(v) != 1) {
    throw Error(Errc::invalid_profile,
                "polynomial " + to_string() + " is not integral at t=" + t.str());
  }
  return numerator(v);
}

RationalPoly& RationalPoly::operator+=(const RationalPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

RationalPoly& RationalPoly::operator-=(const RationalPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  normalize();
  return *this;
}

RationalPoly& RationalPoly::operator*=(const RationalPoly& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

RationalPoly& RationalPoly::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  normalize();
  return *this;
}

RationalPoly RationalPoly::shifted(const Integer& shift) const {
  // Horner in the polynomial ring: p(t + s) = (...(c_d (t+s) + c_{d-1})(t+s) + ...).
  const RationalPoly x = linear(Rational(shift));
  RationalPoly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += constant(*it);
  }
  return acc;
}

std::string RationalPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int p = degree(); p >= 0; --p) {
    const Rational& c = coeffs_[static_cast<std::size_t>(p)];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == 1;
    if (!unit || p == 0) os << mag.str();
    if (p >= 1) {
      if (!unit) os << "*";
      os << var;
      if (p >= 2) os << "^" << p;
    }
  }
  return os.str();
}

RationalPoly binomial_poly(const Integer& shift, int j) {
  if (j < 0) return {};
  RationalPoly acc = RationalPoly::constant(Rational(1));
  for (int i = 0; i < j; ++i) acc *= RationalPoly::linear(Rational(shift - i));
  acc *= Rational(Integer(1), factorial(j));
  return acc;
}

}  // namespace regbound
