#pragma once

#include <optional>
#include <string>
#include <vector>

#include "regbound/rational_poly.hpp"

namespace regbound {

/// Numerical shadow of a coherent sheaf F on P^R with the vanishing
/// property (C_k): H^i F(-i-1) = 0 for i < k and H^i F(-i) = 0 for i > k.
/// The property itself is a hypothesis of the caller; only t -> chi(F(t))
/// is stored, because under (C_k) every dimension the Beilinson complex
/// needs is a signed Euler characteristic.
struct CkProfile {
  int ambient = 0;  // R
  int k = 0;
  RationalPoly chi;

  /// Checks 1 <= k <= R and integrality of chi on [-R-k-2, R+2];
  /// throws Error(invalid_profile) otherwise.
  void validate() const;
};

CkProfile make_profile(int ambient, int k, RationalPoly chi);

/// Add `delta` to chi at the single twist `point` while leaving it unchanged
/// at every other twist in the window [-k, R-k] that the rank table reads.
/// The correction is the integer-valued Lagrange basis polynomial on that
/// window, so the result is still a degree <= R integer-valued profile.
CkProfile perturbed(const CkProfile& p, int point, const Integer& delta);

struct ResolutionTerm {
  std::string sheaf;  // "O", "E", "G" or "F"
  int twist = 0;
  Integer multiplicity = 1;

  std::string to_string() const;
};

/// Term lists of the three exact sequences attached to the complex, each
/// ordered left to right and implicitly bracketed by zeros:
///   kernel:     0 -> E(-k) -> a_k O(-k) -> ... -> a_0 O -> 0
///   extension:  0 -> G(-k-1) -> E(-k) -> F(-k) -> 0
///   resolution: 0 -> a_R O(-R) -> ... -> a_{k+1} O(-k-1) -> E(-k) -> F(-k) -> 0
struct ResolutionShape {
  std::vector<ResolutionTerm> kernel;
  std::vector<ResolutionTerm> extension;
  std::vector<ResolutionTerm> resolution;

  static std::string render(const std::vector<ResolutionTerm>& terms);
};

struct RankTable {
  int ambient = 0;
  int k = 0;
  std::vector<Integer> ranks;  // a_0 .. a_R
  Integer rk_e;
  Integer c1_e;
  Integer bound;  // -c1(E), a bound for reg(F)
  Integer rk_g;
  ResolutionShape resolution;
};

/// a_i = (-1)^k sum_{j=0..i} (-1)^j binom(R+1, i-j) chi(F(j-k)), possibly
/// negative; rank_table() is the validating entry point.
Integer rank_entry(const CkProfile& p, int i);

/// Full rank table. Throws negative_rank (index set) or negative_rank_e when
/// the profile cannot come from a (C_k) sheaf, and inconsistent_profile if
/// the two expressions for c1(E) ever disagree.
RankTable rank_table(const CkProfile& p);

/// -c1(E) through the b-values b_i = (-1)^k chi(F(i)) only:
///   sum_{j=0..k-1} (-1)^j binom(R-1, k-1-j) b_{j-k}.
Integer bound_from_b_values(const CkProfile& p);

/// Euler characteristic of the Beilinson complex twisted by t,
/// sum_i (-1)^i a_i chi(O_{P^R}(t-i)).
Integer complex_euler_characteristic(const RankTable& table, int t);

/// Whether the complex's Euler characteristic matches (-1)^k chi(F(t-k)) for
/// every t in [t_lo, t_hi].
bool euler_consistent(const CkProfile& p, const RankTable& table, int t_lo, int t_hi);

struct CoeffIdentityCounterexample {
  int r = 0;
  int l = 0;
  Integer series_lhs;
  Integer series_rhs;
  Integer closed_form;
};

struct CoeffIdentityReport {
  bool passed = true;
  int checked = 0;
  std::optional<CoeffIdentityCounterexample> first_failure;
};

/// Brute-force check, for 1 <= r <= r_max and 1 <= l <= l_max, that
///   sum_{i=1..l} (-1)^i i binom(r+1, l-i) = -binom(r-1, l-1)
/// by multiplying truncated power series: the left side is [t^l] of
/// f(t) * (1+t)^{r+1} with f(t) = sum (-1)^i i t^i, the right side is
/// [t^l] of -t (1+t)^{r-1}. Both are also compared to the closed form.
CoeffIdentityReport verify_coeff_identity(int r_max, int l_max);

}  // namespace regbound
