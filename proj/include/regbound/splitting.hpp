#pragma once

#include <string>
#include <vector>

#include "regbound/rational_poly.hpp"

namespace regbound {

/// Splitting type of E restricted to a line: E_L = sum_i O_L(s_i), stored
/// nonincreasing. Every s_i <= 0 since E sits inside a trivial bundle, and
/// the s_i add up to c1(E).
struct SplittingType {
  std::vector<Integer> components;

  Integer sum() const;
  bool is_valid(const Integer& rk_e, const Integer& c1_e) const;
  std::string to_string() const;

  friend bool operator==(const SplittingType&, const SplittingType&) = default;
  friend auto operator<=>(const SplittingType& a, const SplittingType& b) {
    return a.components <=> b.components;
  }
};

struct ComponentRange {
  Integer low;
  Integer high;
};

/// (r - n + 1) - d <= s_i <= 0 for the bundle of a degree-d n-fold in P^r.
ComponentRange component_range(const Integer& d, int r, int n);

/// On an l-secant line (l >= 2, not contained in X) the splitting is forced:
///   E_L = O(2-l) + n1 O(-1) + n2 O,  n1 = 2 - l - c1, n2 = rk - 1 - n1.
/// Throws Error(incompatible) when n1 or n2 is negative, i.e. no such
/// secant line can exist.
SplittingType secant_splitting(const Integer& rk_e, const Integer& c1_e, int l);

/// All nonincreasing integer sequences of length rk_e with entries in
/// [low, 0] summing to c1_e, in ascending lexicographic order.
std::vector<SplittingType> enumerate_splittings(const Integer& rk_e, const Integer& c1_e, const Integer& low);

/// Longest possible secant line: min(2 - low, 2 - c1_e).
Integer max_secant_length(const Integer& rk_e, const Integer& c1_e, const Integer& low);

}  // namespace regbound
