#include "regbound/bounds.hpp"

#include <algorithm>

#include "regbound/error.hpp"

namespace regbound {

namespace {

Integer sign(int e) { return (e % 2 == 0) ? Integer(1) : Integer(-1); }

void require_m_in_range(const VarietySpec& spec, int m) {
  if (m < spec.n + 1 || m > spec.r) {
    throw Error(Errc::m_out_of_range, "m=" + std::to_string(m) + " outside [" + std::to_string(spec.n + 1) +
                                          ", " + std::to_string(spec.r) + "]");
  }
}

}  // namespace

Integer theorem_a_bound(const VarietySpec& spec, int m) {
  require_m_in_range(spec, m);
  const int n = spec.n;
  Integer acc = -(spec.r - m);
  for (int k = 0; k <= n; ++k) acc += sign(n + k) * gen_binom(m - 1, n - k) * spec.hilbert(k + 1 - n);
  return acc;
}

Integer machinery_bound(const VarietySpec& spec, int m) {
  require_m_in_range(spec, m);
  try {
    return rank_table(pushforward_chi(spec, m)).bound + 2;
  } catch (const Error& e) {
    if (e.code() == Errc::negative_rank || e.code() == Errc::negative_rank_e) {
      throw Error(Errc::inconsistent_profile, spec.name + " at m=" + std::to_string(m) + ": " + e.what(),
                  e.index());
    }
    throw;
  }
}

Integer closed_form_bound(const Family& family, int r, int m) {
  if (const auto* c = std::get_if<CurveParams>(&family)) {
    return c->d + 2 + (m - 2) * c->g - r;
  }
  if (const auto* s = std::get_if<SurfaceParams>(&family)) {
    return s->d + Integer(m * (m - 3) / 2) * (s->pi - 1) + Integer((m - 2) * (m - 3) / 2) * s->chi - (r - m);
  }
  if (const auto* s = std::get_if<ScrollParams>(&family)) {
    return s->d + (m - 1 - s->n) * s->g + s->n - r + 1;
  }
  throw Error(Errc::unknown_family, "no closed form for a generic spec");
}

Integer surface_bound_negated_chi(const SurfaceParams& s, int r, int m) {
  return s.d + Integer(m * (m - 3) / 2) * (s.pi - 1) - Integer((m - 2) * (m - 3) / 2) * s.chi - (r - m);
}

ComparisonBounds comparison_bounds(const VarietySpec& spec) {
  const Integer& d = spec.hilbert.degree();
  const int n = spec.n;
  const int r = spec.r;
  return {d + 1 - (r - n), (n + 1) * (d - 2) + 2, std::min(n + 1, r - n) * (d - 1) + 1};
}

bool BoundReport::ok() const {
  return std::all_of(rows.begin(), rows.end(), [](const BoundRow& row) { return row.ok(); });
}

namespace {

VarietySpec with_degree_bumped(const VarietySpec& spec) {
  std::vector<Integer> c = spec.hilbert.coeffs();
  c.back() += 1;
  VarietySpec bumped = spec;
  bumped.hilbert = HilbertPoly(std::move(c));
  bumped.family = GenericFamily{};
  return bumped;
}

BoundRow evaluate_row(const VarietySpec& spec, const VarietySpec& bumped, int m, bool assume_fibers) {
  BoundRow row;
  row.m = m;
  row.status = projection_status(spec.n, spec.r, m, assume_fibers);
  try {
    row.bound = theorem_a_bound(spec, m);
    row.degree_coefficient_one = theorem_a_bound(bumped, m) - *row.bound == 1;
    if (!std::holds_alternative<GenericFamily>(spec.family)) row.closed_form = closed_form_bound(spec.family, spec.r, m);

    const RankTable table = rank_table(pushforward_chi(spec, m));
    row.rk_e = table.rk_e;
    row.c1_e = table.c1_e;
    row.machinery = table.bound + 2;
    row.routes_agree = *row.machinery == *row.bound;

    if (!row.routes_agree) {
      row.error = Errc::route_mismatch;
      row.diagnostic = std::string(errc_name(Errc::route_mismatch)) + ": general sum " + row.bound->str() +
                       " vs Chern class route " + row.machinery->str();
    } else if (row.closed_form && *row.closed_form != *row.bound) {
      row.error = Errc::route_mismatch;
      row.diagnostic = std::string(errc_name(Errc::route_mismatch)) + ": closed form " + row.closed_form->str() +
                       " vs general sum " + row.bound->str();
    } else if (!row.degree_coefficient_one) {
      row.error = Errc::route_mismatch;
      row.diagnostic = std::string(errc_name(Errc::route_mismatch)) + ": degree coefficient is not 1";
    }
  } catch (const Error& e) {
    const Errc code = (e.code() == Errc::negative_rank || e.code() == Errc::negative_rank_e)
                          ? Errc::inconsistent_profile
                          : e.code();
    row.error = code;
    row.diagnostic = std::string(errc_name(code)) + ": " + e.what();
  }
  return row;
}

}  // namespace

BoundReport bound_table(const VarietySpec& spec, const std::vector<int>& m_list, bool assume_fibers) {
  BoundReport report{spec, {}, comparison_bounds(spec), std::nullopt};
  std::vector<int> ms = m_list;
  if (ms.empty()) {
    for (int m = spec.n + 1; m <= spec.r; ++m) ms.push_back(m);
  }
  const VarietySpec bumped = with_degree_bumped(spec);
  for (int m : ms) report.rows.push_back(evaluate_row(spec, bumped, m, assume_fibers));

  for (const auto& row : report.rows) {
    if (!row.ok() || !row.bound || !is_guaranteed(row.status.level)) continue;
    if (!report.best || *row.bound < *report.best) report.best = *row.bound;
  }
  return report;
}

Integer cubic_adjustment(int m, const Integer& rk_e, const Integer& h0_i2, const Integer& h1_i1,
                         const Integer& h1_o) {
  return -rk_e + h0_i2 + gen_binom(m - 1, 1) * h1_i1 + gen_binom(m - 1, 2) * h1_o;
}

}  // namespace regbound
