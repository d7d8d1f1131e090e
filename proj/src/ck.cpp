#include "regbound/ck.hpp"

#include <sstream>

#include "regbound/error.hpp"
#include "regbound/hilbert.hpp"

namespace regbound {

namespace {

Integer sign(int e) { return (e % 2 == 0) ? Integer(1) : Integer(-1); }

Integer chi_at(const CkProfile& p, int t) { return p.chi.eval_integer(Integer(t)); }

// Truncated power series with integer coefficients.
using Series = std::vector<Integer>;

Series series_mul(const Series& a, const Series& b, std::size_t len) {
  Series out(len, 0);
  for (std::size_t i = 0; i < a.size() && i < len; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j < len; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

Series one_plus_t_power(int e, std::size_t len) {
  Series acc(len, 0);
  acc[0] = 1;
  const Series one_plus_t{1, 1};
  for (int i = 0; i < e; ++i) acc = series_mul(acc, one_plus_t, len);
  return acc;
}

}  // namespace

void CkProfile::validate() const {
  if (ambient < 1) throw Error(Errc::invalid_profile, "ambient dimension must be at least 1");
  if (k < 1 || k > ambient) {
    throw Error(Errc::invalid_profile,
                "k=" + std::to_string(k) + " outside [1, " + std::to_string(ambient) + "]");
  }
  for (int t = -ambient - k - 2; t <= ambient + 2; ++t) {
    if (!chi.integral_at(Integer(t))) {
      throw Error(Errc::invalid_profile, "profile is not integral at t=" + std::to_string(t));
    }
  }
}

CkProfile make_profile(int ambient, int k, RationalPoly chi) {
  CkProfile p{ambient, k, std::move(chi)};
  p.validate();
  return p;
}

CkProfile perturbed(const CkProfile& p, int point, const Integer& delta) {
  const int lo = -p.k;
  const int hi = p.ambient - p.k;
  if (point < lo || point > hi) {
    throw Error(Errc::index_out_of_range, "perturbation point " + std::to_string(point) + " outside [" +
                                              std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  RationalPoly basis = RationalPoly::constant(Rational(1));
  for (int q = lo; q <= hi; ++q) {
    if (q == point) continue;
    basis *= RationalPoly::linear(Rational(-q));
    basis *= Rational(1) / Rational(point - q);
  }
  CkProfile out = p;
  out.chi += basis * Rational(delta);
  return out;
}

std::string ResolutionTerm::to_string() const {
  std::ostringstream os;
  if (multiplicity != 1) os << multiplicity.str() << " ";
  os << sheaf;
  if (twist != 0) os << "(" << twist << ")";
  return os.str();
}

std::string ResolutionShape::render(const std::vector<ResolutionTerm>& terms) {
  std::ostringstream os;
  os << "0";
  for (const auto& t : terms) os << " -> " << t.to_string();
  os << " -> 0";
  return os.str();
}

Integer rank_entry(const CkProfile& p, int i) {
  if (i < 0 || i > p.ambient) {
    throw Error(Errc::index_out_of_range,
                "rank index " + std::to_string(i) + " outside [0, " + std::to_string(p.ambient) + "]");
  }
  Integer acc = 0;
  for (int j = 0; j <= i; ++j) acc += sign(j) * gen_binom(p.ambient + 1, i - j) * chi_at(p, j - p.k);
  return sign(p.k) * acc;
}

Integer bound_from_b_values(const CkProfile& p) {
  const auto b = [&](int i) { return sign(p.k) * chi_at(p, i); };
  Integer acc = 0;
  for (int j = 0; j <= p.k - 1; ++j) acc += sign(j) * gen_binom(p.ambient - 1, p.k - 1 - j) * b(j - p.k);
  return acc;
}

RankTable rank_table(const CkProfile& p) {
  p.validate();
  RankTable t;
  t.ambient = p.ambient;
  t.k = p.k;
  t.ranks.reserve(static_cast<std::size_t>(p.ambient) + 1);
  for (int i = 0; i <= p.ambient; ++i) {
    Integer a = rank_entry(p, i);
    if (a < 0) {
      throw Error(Errc::negative_rank, "a_" + std::to_string(i) + " = " + a.str() + " < 0", i);
    }
    t.ranks.push_back(std::move(a));
  }
  const auto a = [&](int i) -> const Integer& { return t.ranks[static_cast<std::size_t>(i)]; };

  for (int i = 0; i <= p.k; ++i) t.rk_e += sign(p.k - i) * a(i);
  if (t.rk_e < 0) throw Error(Errc::negative_rank_e, "rk(E) = " + t.rk_e.str() + " < 0");
  for (int i = 1; i <= p.k; ++i) t.c1_e += sign(i) * i * a(p.k - i);
  t.bound = -t.c1_e;

  const Integer via_b = bound_from_b_values(p);
  if (via_b != t.bound) {
    throw Error(Errc::inconsistent_profile,
                "-c1(E) from ranks is " + t.bound.str() + " but from b-values is " + via_b.str());
  }

  for (int i = p.k + 1; i <= p.ambient; ++i) t.rk_g += sign(i - p.k - 1) * a(i);

  auto& shape = t.resolution;
  shape.kernel.push_back({"E", -p.k, 1});
  for (int i = p.k; i >= 0; --i) shape.kernel.push_back({"O", -i, a(i)});
  shape.extension = {{"G", -p.k - 1, 1}, {"E", -p.k, 1}, {"F", -p.k, 1}};
  for (int i = p.ambient; i > p.k; --i) shape.resolution.push_back({"O", -i, a(i)});
  shape.resolution.push_back({"E", -p.k, 1});
  shape.resolution.push_back({"F", -p.k, 1});
  return t;
}

Integer complex_euler_characteristic(const RankTable& table, int t) {
  Integer acc = 0;
  for (int i = 0; i <= table.ambient; ++i) {
    acc += sign(i) * table.ranks[static_cast<std::size_t>(i)] * gen_binom(t - i + table.ambient, table.ambient);
  }
  return acc;
}

bool euler_consistent(const CkProfile& p, const RankTable& table, int t_lo, int t_hi) {
  for (int t = t_lo; t <= t_hi; ++t) {
    if (complex_euler_characteristic(table, t) != sign(p.k) * chi_at(p, t - p.k)) return false;
  }
  return true;
}

CoeffIdentityReport verify_coeff_identity(int r_max, int l_max) {
  CoeffIdentityReport report;
  if (r_max < 1 || l_max < 1) return report;
  const auto len = static_cast<std::size_t>(l_max) + 2;
  Series f(len, 0);
  for (std::size_t i = 0; i < len; ++i) f[i] = (i % 2 == 0 ? 1 : -1) * Integer(i);
  const Series minus_t = [&] {
    Series s(len, 0);
    s[1] = -1;
    return s;
  }();

  for (int r = 1; r <= r_max; ++r) {
    const Series lhs = series_mul(f, one_plus_t_power(r + 1, len), len);
    const Series rhs = series_mul(minus_t, one_plus_t_power(r - 1, len), len);
    for (int l = 1; l <= l_max; ++l) {
      ++report.checked;
      const auto idx = static_cast<std::size_t>(l);
      const Integer closed = -gen_binom(r - 1, l - 1);
      if (lhs[idx] != rhs[idx] || lhs[idx] != closed) {
        if (report.passed) report.first_failure = CoeffIdentityCounterexample{r, l, lhs[idx], rhs[idx], closed};
        report.passed = false;
      }
    }
  }
  return report;
}

}  // namespace regbound
