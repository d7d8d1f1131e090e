#include "regbound/projection.hpp"

#include <algorithm>

#include "regbound/error.hpp"

namespace regbound {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

}  // namespace

std::string family_name(const Family& f) {
  return std::visit(overloaded{
                        [](const GenericFamily&) { return std::string("generic"); },
                        [](const CurveParams&) { return std::string("curve"); },
                        [](const SurfaceParams&) { return std::string("surface"); },
                        [](const ScrollParams&) { return std::string("scroll"); },
                    },
                    f);
}

HilbertPoly family_hilbert(const Family& f) {
  return std::visit(overloaded{
                        [](const GenericFamily&) -> HilbertPoly {
                          throw Error(Errc::unknown_family, "generic spec has no family dictionary");
                        },
                        [](const CurveParams& c) { return HilbertPoly({1 - c.g, c.d}); },
                        [](const SurfaceParams& s) { return HilbertPoly({s.chi, 1 - s.pi, s.d}); },
                        [](const ScrollParams& s) {
                          std::vector<Integer> c(static_cast<std::size_t>(s.n), 1 - s.g);
                          c.push_back(s.d);
                          return HilbertPoly(std::move(c));
                        },
                    },
                    f);
}

void VarietySpec::validate() const {
  if (n < 1) throw Error(Errc::validation_error, name + ": dim must be at least 1");
  if (r < n + 1) {
    throw Error(Errc::validation_error, name + ": ambient r=" + std::to_string(r) + " must be at least dim+1=" +
                                            std::to_string(n + 1));
  }
  if (hilbert.dim() != n) {
    throw Error(Errc::validation_error, name + ": Hilbert polynomial has dimension " +
                                            std::to_string(hilbert.dim()) + ", expected " + std::to_string(n));
  }
  if (std::holds_alternative<GenericFamily>(family)) return;
  if (const auto* s = std::get_if<ScrollParams>(&family); s && s->n != n) {
    throw Error(Errc::validation_error, name + ": scroll dimension disagrees with dim");
  }
  if ((std::holds_alternative<CurveParams>(family) && n != 1) ||
      (std::holds_alternative<SurfaceParams>(family) && n != 2)) {
    throw Error(Errc::validation_error, name + ": family does not match dim=" + std::to_string(n));
  }
  if (family_hilbert(family) != hilbert) {
    throw Error(Errc::validation_error, name + ": family parameters do not regenerate coefficients " +
                                            to_string(hilbert));
  }
}

namespace {

VarietySpec make_family_spec(std::string name, int n, int r, Family family) {
  VarietySpec spec{std::move(name), n, r, family_hilbert(family), std::move(family)};
  spec.validate();
  return spec;
}

}  // namespace

VarietySpec make_curve(std::string name, const Integer& d, const Integer& g, int r) {
  return make_family_spec(std::move(name), 1, r, CurveParams{d, g});
}

VarietySpec make_surface(std::string name, const Integer& d, const Integer& pi, const Integer& chi, int r) {
  return make_family_spec(std::move(name), 2, r, SurfaceParams{d, pi, chi});
}

VarietySpec make_scroll(std::string name, int n, const Integer& d, const Integer& g, int r) {
  if (n < 1) throw Error(Errc::validation_error, "scroll dimension must be at least 1");
  return make_family_spec(std::move(name), n, r, ScrollParams{n, d, g});
}

VarietySpec make_generic(std::string name, int r, HilbertPoly hilbert) {
  const int n = hilbert.dim();
  VarietySpec spec{std::move(name), n, r, std::move(hilbert), GenericFamily{}};
  spec.validate();
  return spec;
}

CkProfile pushforward_chi(const VarietySpec& spec, int m) {
  if (m <= spec.n) {
    throw Error(Errc::m_too_small, "m=" + std::to_string(m) + " <= dim=" + std::to_string(spec.n) +
                                       ": the projection cannot be finite");
  }
  if (m > spec.r) {
    throw Error(Errc::m_too_large, "m=" + std::to_string(m) + " exceeds ambient r=" + std::to_string(spec.r));
  }
  // chi(O_{P^m}(s + e)) = binom(s + e + m, m).
  RationalPoly chi = binomial_poly(Integer(2 + m), m);
  chi += binomial_poly(Integer(1 + m), m) * Rational(spec.r - m);
  chi += binomial_poly(Integer(m), m) * Rational(gen_binom(spec.r + 1 - m, 2));
  chi -= spec.hilbert.to_monomial().shifted(2);
  return make_profile(m, spec.n + 1, std::move(chi));
}

bool TableRelationReport::passed() const {
  return std::all_of(rows.begin(), rows.end(), [](const TableRelationRow& row) { return row.passed; });
}

TableRelationReport table_relation_check(const VarietySpec& spec, int m) {
  const CkProfile profile = pushforward_chi(spec, m);
  TableRelationReport report;
  report.m = m;
  auto add_row = [&](int j, const Integer& expected) {
    const Integer lhs = profile.chi.eval_integer(Integer(j - 2)) + spec.hilbert(j);
    report.rows.push_back({j, lhs, expected, lhs == expected});
  };
  add_row(1, spec.r + 1);
  add_row(0, 1);
  for (int j = -1; j >= std::max(2 - m, 1 - spec.n); --j) add_row(j, 0);
  return report;
}

int m_zero(int n, int r) { return n == 1 ? 2 : std::min(r, 2 * n - 1); }

const char* level_name(GuaranteeLevel level) noexcept {
  switch (level) {
    case GuaranteeLevel::identity: return "identity";
    case GuaranteeLevel::theorem_a: return "theorem_a";
    case GuaranteeLevel::ran_extended: return "ran_extended";
    case GuaranteeLevel::assumed: return "assumed";
    case GuaranteeLevel::unsupported: return "unsupported";
  }
  return "unsupported";
}

bool is_guaranteed(GuaranteeLevel level) noexcept {
  return level == GuaranteeLevel::identity || level == GuaranteeLevel::theorem_a ||
         level == GuaranteeLevel::ran_extended;
}

std::string GuaranteeStatus::label() const {
  std::string out;
  for (auto l : applicable) {
    if (!out.empty()) out += "+";
    out += level_name(l);
  }
  return out.empty() ? level_name(level) : out;
}

bool ran_condition(int n, int r, int m) {
  if (3 * m <= 4 * n) return false;
  if (m == r - 1 || m == r - 2) return true;
  // m > 2n - r + max(n/3 - 2, 0), scaled by 3.
  return 3 * m > 6 * n - 3 * r + std::max(n - 6, 0);
}

GuaranteeStatus projection_status(int n, int r, int m, bool assume_fibers) {
  GuaranteeStatus status;
  if (m <= n || m > r) {
    status.applicable = {GuaranteeLevel::unsupported};
    status.detail = m <= n ? "m <= dim: projection is not finite" : "m exceeds the ambient dimension";
    return status;
  }
  const int m0 = m_zero(n, r);
  std::vector<std::string> notes;
  if (m == r) {
    status.applicable.push_back(GuaranteeLevel::identity);
    notes.push_back("no projection");
  }
  if (m >= m0) {
    status.applicable.push_back(GuaranteeLevel::theorem_a);
    notes.push_back("m >= m0=" + std::to_string(m0));
  }
  if (ran_condition(n, r, m)) {
    status.applicable.push_back(GuaranteeLevel::ran_extended);
    notes.push_back("general projection has no fibers of length >= 4");
  }
  if (status.applicable.empty() && assume_fibers) {
    status.applicable.push_back(GuaranteeLevel::assumed);
    notes.push_back("fiber condition asserted by the caller");
  }
  if (status.applicable.empty()) {
    status.applicable.push_back(GuaranteeLevel::unsupported);
    notes.push_back("m < m0=" + std::to_string(m0) + " and no fiber-length condition applies");
  }
  status.level = status.applicable.front();
  for (std::size_t i = 0; i < notes.size(); ++i) status.detail += (i ? "; " : "") + notes[i];
  return status;
}

}  // namespace regbound
