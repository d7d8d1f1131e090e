#include "regbound/hilbert.hpp"

#include <set>
#include <sstream>

#include "regbound/error.hpp"

namespace regbound {

Integer factorial(int j) {
  Integer f = 1;
  for (int i = 2; i <= j; ++i) f *= i;
  return f;
}

Integer gen_binom(const Integer& x, int j) {
  if (j < 0) return 0;
  // The running product x(x-1)...(x-i+1)/i! is an integer at every step.
  Integer acc = 1;
  for (int i = 0; i < j; ++i) {
    acc *= x - i;
    acc /= i + 1;
  }
  return acc;
}

HilbertPoly::HilbertPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw Error(Errc::validation_error, "Hilbert polynomial needs at least one coefficient");
  if (coeffs_.back() <= 0) {
    throw Error(Errc::degree_non_positive,
                "leading coefficient (degree) must be positive, got " + coeffs_.back().str());
  }
}

Integer HilbertPoly::operator()(const Integer& z) const {
  Integer acc = 0;
  for (int j = 0; j <= dim(); ++j) acc += coeffs_[static_cast<std::size_t>(j)] * gen_binom(z + j - 1, j);
  return acc;
}

RationalPoly HilbertPoly::to_monomial() const {
  RationalPoly acc;
  for (int j = 0; j <= dim(); ++j) {
    acc += binomial_poly(Integer(j - 1), j) * Rational(coeffs_[static_cast<std::size_t>(j)]);
  }
  return acc;
}

Integer hp_eval(const HilbertPoly& h, const Integer& z) { return h(z); }

HilbertPoly hp_from_values(int n, std::span<const std::pair<Integer, Integer>> points) {
  if (n < 0) throw Error(Errc::validation_error, "dimension must be nonnegative");
  if (points.size() != static_cast<std::size_t>(n) + 1) {
    throw Error(Errc::validation_error, "need exactly " + std::to_string(n + 1) + " points, got " +
                                            std::to_string(points.size()));
  }
  std::set<Integer> seen;
  for (const auto& [z, v] : points) {
    if (!seen.insert(z).second) throw Error(Errc::duplicate_abscissa, "duplicate abscissa z=" + z.str());
  }

  // Newton divided differences give the interpolant at arbitrary nodes.
  const std::size_t count = points.size();
  std::vector<Rational> dd(count);
  for (std::size_t i = 0; i < count; ++i) dd[i] = Rational(points[i].second);
  for (std::size_t level = 1; level < count; ++level) {
    for (std::size_t i = count - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / Rational(points[i].first - points[i - level].first);
    }
  }
  auto interpolant = [&](const Integer& z) {
    Rational acc = dd[count - 1];
    for (std::size_t i = count - 1; i-- > 0;) acc = acc * Rational(z - points[i].first) + dd[i];
    return acc;
  };

  // With B_j(z) = binom(z + j - 1, j) the backward difference maps B_j to
  // B_{j-1} and B_j(0) = [j == 0], so c_j is the j-th backward difference
  // at zero. Sample at 0, -1, ..., -n and difference in place.
  std::vector<Rational> diff(count);
  for (std::size_t i = 0; i < count; ++i) diff[i] = interpolant(-Integer(i));
  std::vector<Integer> coeffs(count);
  for (std::size_t j = 0; j < count; ++j) {
    if (denominator(diff[0]) != 1) {
      throw Error(Errc::non_integral_coefficients,
                  "interpolant has non-integral coefficient c_" + std::to_string(j) + " = " + diff[0].str());
    }
    coeffs[j] = numerator(diff[0]);
    for (std::size_t i = 0; i + 1 < count - j; ++i) diff[i] = diff[i] - diff[i + 1];
  }
  return HilbertPoly(std::move(coeffs));
}

HilbertPoly hp_hyperplane_section(const HilbertPoly& h) {
  if (h.dim() == 0) throw Error(Errc::dimension_zero, "cannot cut a zero-dimensional scheme by a hyperplane");
  return HilbertPoly(std::vector<Integer>(h.coeffs().begin() + 1, h.coeffs().end()));
}

std::string to_string(const HilbertPoly& h) {
  std::ostringstream os;
  os << "[";
  for (std::size_t j = 0; j < h.coeffs().size(); ++j) os << (j ? "," : "") << h.coeffs()[j].str();
  os << "]";
  return os.str();
}

}  // namespace regbound
