#pragma once

#include <optional>
#include <string>
#include <vector>

#include "regbound/error.hpp"
#include "regbound/projection.hpp"

namespace regbound {

/// reg(X) <= -(r-m) + sum_{k=0..n} (-1)^{n+k} binom(m-1, n-k) chi(O_X(k+1-n)),
/// evaluated for any n+1 <= m <= r (the guarantee is reported separately by
/// projection_status). Throws m_out_of_range.
Integer theorem_a_bound(const VarietySpec& spec, int m);

/// The same bound through the Beilinson machinery: -c1(E) of the rank table
/// of the projected ideal sheaf twisted by 2, plus 2 to undo the twist.
/// Negative ranks surface as Error(inconsistent_profile).
Integer machinery_bound(const VarietySpec& spec, int m);

/// Closed forms for curves, surfaces and scrolls. The surface form is
///   d + m(m-3)/2 (pi-1) + (m-2)(m-3)/2 chi - (r-m),
/// which is what the general bound expands to. Throws unknown_family.
Integer closed_form_bound(const Family& family, int r, int m);

/// The surface closed form with the opposite sign on the chi term, kept only
/// to demonstrate that it disagrees with the general bound.
Integer surface_bound_negated_chi(const SurfaceParams& s, int r, int m);

struct ComparisonBounds {
  Integer eisenbud_goto;  // d + 1 - codim
  Integer mumford;  // (n+1)(d-2) + 2
  Integer bel;  // min(n+1, r-n)(d-1) + 1
};

ComparisonBounds comparison_bounds(const VarietySpec& spec);

struct BoundRow {
  int m = 0;
  GuaranteeStatus status;
  std::optional<Integer> bound;  // theorem_a_bound
  std::optional<Integer> machinery;  // machinery_bound
  std::optional<Integer> closed_form;  // family closed form, when the spec has one
  std::optional<Integer> rk_e;
  std::optional<Integer> c1_e;
  bool routes_agree = false;
  bool degree_coefficient_one = false;
  std::optional<Errc> error;
  std::string diagnostic;

  bool ok() const { return !error.has_value(); }
};

struct BoundReport {
  VarietySpec spec;
  std::vector<BoundRow> rows;
  ComparisonBounds comparisons;
  std::optional<Integer> best;  // min over guaranteed rows

  bool ok() const;
};

/// Evaluate every m in `m_list` (default n+1..r). Row failures are recorded
/// in the row's diagnostic rather than thrown.
BoundReport bound_table(const VarietySpec& spec, const std::vector<int>& m_list = {},
                        bool assume_fibers = false);

/// Change of the bound when working with I_X(3) instead of I_X(2):
///   -rk(E) + h0(I_X(2)) + binom(m-1,1) h1(I_X(1)) + binom(m-1,2) h1(O_X).
/// The cohomology dimensions must come from the caller.
Integer cubic_adjustment(int m, const Integer& rk_e, const Integer& h0_i2, const Integer& h1_i1,
                         const Integer& h1_o);

}  // namespace regbound
