#include "regbound/splitting.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "regbound/error.hpp"

namespace regbound {

Integer SplittingType::sum() const {
  Integer acc = 0;
  for (const auto& s : components) acc += s;
  return acc;
}

bool SplittingType::is_valid(const Integer& rk_e, const Integer& c1_e) const {
  if (Integer(components.size()) != rk_e || sum() != c1_e) return false;
  if (!std::is_sorted(components.begin(), components.end(), std::greater<>())) return false;
  return std::all_of(components.begin(), components.end(), [](const Integer& s) { return s <= 0; });
}

std::string SplittingType::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < components.size(); ++i) os << (i ? "," : "") << components[i].str();
  os << ")";
  return os.str();
}

ComponentRange component_range(const Integer& d, int r, int n) { return {(r - n + 1) - d, 0}; }

SplittingType secant_splitting(const Integer& rk_e, const Integer& c1_e, int l) {
  if (l < 2) throw Error(Errc::validation_error, "secant length must be at least 2");
  const Integer forced = 2 - l;
  const Integer n1 = forced - c1_e;
  const Integer n2 = rk_e - 1 - n1;
  if (n1 < 0 || n2 < 0) {
    throw Error(Errc::incompatible, "no " + std::to_string(l) + "-secant line: would need " + n1.str() +
                                        " copies of O(-1) and " + n2.str() + " copies of O");
  }
  SplittingType out;
  out.components.assign(static_cast<std::size_t>(n2), Integer(0));
  out.components.insert(out.components.end(), static_cast<std::size_t>(n1), Integer(-1));
  out.components.push_back(forced);
  std::sort(out.components.begin(), out.components.end(), std::greater<>());
  return out;
}

std::vector<SplittingType> enumerate_splittings(const Integer& rk_e, const Integer& c1_e, const Integer& low) {
  if (low > 0) throw Error(Errc::validation_error, "lower bound for splitting components must be <= 0");
  if (rk_e < 0) throw Error(Errc::validation_error, "rank must be nonnegative");
  std::vector<SplittingType> out;
  const int rank = static_cast<int>(rk_e);
  if (c1_e > 0 || c1_e < rk_e * low) return out;

  std::vector<Integer> current;
  current.reserve(static_cast<std::size_t>(rank));
  // Fill position `pos` with values in [low, cap], smallest first, so the
  // output comes out in ascending lexicographic order.
  std::function<void(int, const Integer&, const Integer&)> fill = [&](int pos, const Integer& cap,
                                                                      const Integer& remaining) {
    if (pos == rank) {
      if (remaining == 0) out.push_back(SplittingType{current});
      return;
    }
    const int left = rank - pos - 1;
    for (Integer v = low; v <= cap; ++v) {
      const Integer rest = remaining - v;
      if (rest < left * low || rest > left * v) continue;
      current.push_back(v);
      fill(pos + 1, v, rest);
      current.pop_back();
    }
  };
  fill(0, Integer(0), c1_e);
  return out;
}

Integer max_secant_length(const Integer&, const Integer& c1_e, const Integer& low) {
  return std::min(Integer(2 - low), Integer(2 - c1_e));
}

}  // namespace regbound
