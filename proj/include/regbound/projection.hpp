#pragma once

#include <string>
#include <variant>
#include <vector>

#include "regbound/ck.hpp"
#include "regbound/hilbert.hpp"

namespace regbound {

struct CurveParams {
  Integer d;
  Integer g;
};

struct SurfaceParams {
  Integer d;
  Integer pi;  // sectional genus
  Integer chi;  // chi(O_X)
};

struct ScrollParams {
  int n = 1;
  Integer d;
  Integer g;  // genus of the base curve
};

struct GenericFamily {};

using Family = std::variant<GenericFamily, CurveParams, SurfaceParams, ScrollParams>;

std::string family_name(const Family& f);

/// Binomial-basis coefficients implied by a family's numerical invariants.
/// Throws unknown_family for GenericFamily.
HilbertPoly family_hilbert(const Family& f);

/// A smooth nondegenerate n-dimensional X in P^r, known through its Hilbert
/// polynomial.
struct VarietySpec {
  std::string name;
  int n = 0;
  int r = 0;
  HilbertPoly hilbert{{1}};
  Family family;

  /// r >= n + 1, hilbert.dim() == n, and family parameters (if any)
  /// regenerate hilbert exactly. Throws validation_error.
  void validate() const;
};

VarietySpec make_curve(std::string name, const Integer& d, const Integer& g, int r);
VarietySpec make_surface(std::string name, const Integer& d, const Integer& pi, const Integer& chi, int r);
VarietySpec make_scroll(std::string name, int n, const Integer& d, const Integer& g, int r);
VarietySpec make_generic(std::string name, int r, HilbertPoly hilbert);

/// chi-profile of q_* p^* I_X(2) on P^m for the linear projection from a
/// center of dimension r - m - 1, using
///   q_* p^* O_{P^r}(2) = O(2) + (r-m) O(1) + binom(r+1-m, 2) O.
/// The result has ambient m and k = n + 1. For m = r it is chi(I_X(2 + s)).
CkProfile pushforward_chi(const VarietySpec& spec, int m);

struct TableRelationRow {
  int j = 0;
  Integer lhs;  // chi of the projected ideal at twist j-2, plus chi(O_X(j))
  Integer expected;
  bool passed = false;
};

struct TableRelationReport {
  int m = 0;
  std::vector<TableRelationRow> rows;
  bool passed() const;
};

/// Rows j = 1, 0 and max(2-m, 1-n) <= j <= -1 of the relation between the
/// projected profile and chi(O_X): lhs must be r+1, 1 and 0 respectively.
TableRelationReport table_relation_check(const VarietySpec& spec, int m);

/// Smallest projection target with an unconditional guarantee:
/// 2 for curves, min(r, 2n - 1) otherwise.
int m_zero(int n, int r);

enum class GuaranteeLevel { identity, theorem_a, ran_extended, assumed, unsupported };

const char* level_name(GuaranteeLevel level) noexcept;

/// True for identity, theorem_a and ran_extended.
bool is_guaranteed(GuaranteeLevel level) noexcept;

struct GuaranteeStatus {
  GuaranteeLevel level = GuaranteeLevel::unsupported;  // strongest applicable
  std::vector<GuaranteeLevel> applicable;  // strongest first; at least `level`
  std::string detail;

  /// Applicable levels joined by '+', e.g. "theorem_a+ran_extended".
  std::string label() const;
};

/// Whether a general projection of an n-fold in P^r to P^m has no fibers of
/// length >= 4: m > 4n/3 together with m = r-1, m = r-2 or
/// m > 2n - r + max(n/3 - 2, 0). All comparisons are exact.
bool ran_condition(int n, int r, int m);

/// Classify m. `assume_fibers` lets the caller vouch for the vanishing of
/// R^1 q_* p^* I_X(2) at any m >= n + 1 that has no stronger guarantee.
GuaranteeStatus projection_status(int n, int r, int m, bool assume_fibers = false);

}  // namespace regbound
