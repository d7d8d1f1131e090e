#include "regbound/catalog.hpp"

#include <map>
#include <set>

#include "regbound/error.hpp"

namespace regbound {

namespace {

constexpr const char* kScrollNote = "rational scrolls attain d+1-codim";

CatalogEntry rational_normal_curve(int r) {
  const std::string name = "rational-normal-curve:r=" + std::to_string(r);
  return {name, "rational normal curve of degree " + std::to_string(r) + " in P^" + std::to_string(r),
          make_curve(name, r, 0, r), ExpectedRegularity{2, "rational normal curves are 2-regular"}};
}

CatalogEntry rational_normal_scroll(int n, int r) {
  const std::string name = "rational-normal-scroll:n=" + std::to_string(n) + ",r=" + std::to_string(r);
  const int d = r - n + 1;
  VarietySpec spec = make_scroll(name, n, d, 0, r);
  return {name, "rational normal scroll of dimension " + std::to_string(n) + " and degree " + std::to_string(d),
          spec, ExpectedRegularity{d + 1 - (r - n), kScrollNote}};
}

// key=value list after the colon of a parametric name.
std::map<std::string, Integer> parse_params(std::string_view name, std::string_view body) {
  std::map<std::string, Integer> out;
  std::size_t pos = 0;
  while (pos <= body.size()) {
    const std::size_t comma = std::min(body.find(',', pos), body.size());
    const std::string_view item = body.substr(pos, comma - pos);
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0) {
      throw Error(Errc::parse_error, std::string(name) + ": expected key=value, got '" + std::string(item) + "'");
    }
    const std::string key(item.substr(0, eq));
    const std::string value(item.substr(eq + 1));
    try {
      std::size_t used = 0;
      (void)std::stoll(value, &used);
      if (used != value.size()) throw std::invalid_argument(value);
      out[key] = Integer(value);
    } catch (const std::exception&) {
      throw Error(Errc::parse_error, std::string(name) + ": '" + value + "' is not an integer");
    }
    pos = comma + 1;
  }
  return out;
}

Integer take(const std::map<std::string, Integer>& params, const std::string& key, std::string_view name) {
  const auto it = params.find(key);
  if (it == params.end()) throw Error(Errc::validation_error, std::string(name) + ": missing parameter '" + key + "'");
  return it->second;
}

void require_only(const std::map<std::string, Integer>& params, std::set<std::string> allowed,
                  std::string_view name) {
  for (const auto& [key, value] : params) {
    if (!allowed.count(key)) {
      throw Error(Errc::validation_error, std::string(name) + ": unknown parameter '" + key + "'");
    }
  }
}

int small(const Integer& v, std::string_view what) {
  if (v < 0 || v > 10000) throw Error(Errc::validation_error, std::string(what) + " out of range: " + v.str());
  return static_cast<int>(v);
}

}  // namespace

std::vector<CatalogEntry> default_catalog() {
  std::vector<CatalogEntry> out;
  out.push_back({"twisted-cubic", "rational normal curve of degree 3 in P^3", make_curve("twisted-cubic", 3, 0, 3),
                 ExpectedRegularity{2, "rational normal curves are 2-regular"}});
  out.push_back({"elliptic-quartic", "complete intersection of two quadrics in P^3",
                 make_curve("elliptic-quartic", 4, 1, 3),
                 ExpectedRegularity{3, "cut out by quadrics, H^1 O_X != 0 forces reg = 3"}});
  out.push_back({"veronese-surface", "quadratic Veronese embedding of P^2 in P^5",
                 make_surface("veronese-surface", 4, 0, 1, 5),
                 ExpectedRegularity{2, "projectively normal, ideal generated by quadrics with linear resolution"}});
  for (int r : {4, 5, 6}) out.push_back(rational_normal_curve(r));
  for (auto [n, r] : {std::pair{2, 4}, {2, 5}, {3, 5}, {2, 6}, {3, 7}, {4, 9}}) {
    out.push_back(rational_normal_scroll(n, r));
  }
  out.push_back({"canonical-genus-4", "canonical curve of genus 4, a (2,3) complete intersection in P^3",
                 make_curve("canonical-genus-4", 6, 4, 3), std::nullopt});
  out.push_back({"del-pezzo-quartic", "quartic del Pezzo surface in P^4",
                 make_surface("del-pezzo-quartic", 4, 1, 1, 4), std::nullopt});
  out.push_back({"elliptic-scroll-p4", "elliptic quintic scroll in P^4",
                 make_scroll("elliptic-scroll-p4", 2, 5, 1, 4), std::nullopt});
  return out;
}

std::optional<CatalogEntry> lookup_catalog(std::string_view name) {
  const std::size_t colon = name.find(':');
  if (colon == std::string_view::npos) {
    for (auto& entry : default_catalog()) {
      if (entry.name == name) return entry;
    }
    return std::nullopt;
  }
  const std::string_view kind = name.substr(0, colon);
  const std::string label(name);
  static const std::set<std::string_view> kinds{"rational-normal-curve", "rational-normal-scroll", "curve",
                                                "surface", "scroll"};
  if (!kinds.count(kind)) return std::nullopt;
  const auto params = parse_params(name, name.substr(colon + 1));

  if (kind == "rational-normal-curve") {
    require_only(params, {"r"}, name);
    const int r = small(take(params, "r", name), "r");
    if (r < 2) throw Error(Errc::validation_error, label + ": r must be at least 2");
    return rational_normal_curve(r);
  }
  if (kind == "rational-normal-scroll") {
    require_only(params, {"n", "r"}, name);
    const int n = small(take(params, "n", name), "n");
    const int r = small(take(params, "r", name), "r");
    if (n < 1 || r < n + 1) throw Error(Errc::validation_error, label + ": need n >= 1 and r >= n+1");
    return rational_normal_scroll(n, r);
  }
  if (kind == "curve") {
    require_only(params, {"d", "g", "r"}, name);
    return CatalogEntry{label, "curve", make_curve(label, take(params, "d", name), take(params, "g", name),
                                                   small(take(params, "r", name), "r")),
                        std::nullopt};
  }
  if (kind == "surface") {
    require_only(params, {"d", "pi", "chi", "r"}, name);
    return CatalogEntry{label, "surface",
                        make_surface(label, take(params, "d", name), take(params, "pi", name),
                                     take(params, "chi", name), small(take(params, "r", name), "r")),
                        std::nullopt};
  }
  require_only(params, {"n", "d", "g", "r"}, name);
  return CatalogEntry{label, "scroll",
                      make_scroll(label, small(take(params, "n", name), "n"), take(params, "d", name),
                                  take(params, "g", name), small(take(params, "r", name), "r")),
                      std::nullopt};
}

Integer castelnuovo_bound(const Integer& d, int r) {
  if (r < 2 || d < 1) return 0;
  const Integer m = (d - 1) / (r - 1);
  const Integer e = d - 1 - m * (r - 1);
  return m * (m - 1) / 2 * (r - 1) + m * e;
}

namespace {

bool curve_admissible(const Integer& d, const Integer& g, int r) {
  return d >= r && g >= 0 && g <= castelnuovo_bound(d, r);
}

}  // namespace

bool numerically_admissible(const VarietySpec& spec) {
  if (const auto* c = std::get_if<CurveParams>(&spec.family)) return curve_admissible(c->d, c->g, spec.r);
  if (const auto* s = std::get_if<SurfaceParams>(&spec.family)) {
    return curve_admissible(s->d, s->pi, spec.r - 1) && s->chi + s->pi - 1 >= 0;
  }
  if (const auto* s = std::get_if<ScrollParams>(&spec.family)) {
    return curve_admissible(s->d, s->g, spec.r - s->n + 1);
  }
  return true;
}

std::vector<VarietySpec> admissible_sweep() {
  std::vector<VarietySpec> out;
  auto keep = [&](VarietySpec spec) {
    if (numerically_admissible(spec)) out.push_back(std::move(spec));
  };
  for (int r = 2; r <= 8; ++r) {
    for (int d = 1; d <= 10; ++d) {
      for (int g = 0; g <= 4; ++g) {
        keep(make_curve("curve:d=" + std::to_string(d) + ",g=" + std::to_string(g) + ",r=" + std::to_string(r), d,
                        g, r));
      }
    }
  }
  for (int r = 3; r <= 8; ++r) {
    for (int d = 1; d <= 10; ++d) {
      for (int pi = 0; pi <= 4; ++pi) {
        for (int chi = -3; chi <= 3; ++chi) {
          keep(make_surface("surface:d=" + std::to_string(d) + ",pi=" + std::to_string(pi) +
                                ",chi=" + std::to_string(chi) + ",r=" + std::to_string(r),
                            d, pi, chi, r));
        }
      }
    }
  }
  for (int n = 1; n <= 4; ++n) {
    for (int r = n + 1; r <= 10; ++r) {
      for (int d = 1; d <= 12; ++d) {
        for (int g = 0; g <= 4; ++g) {
          keep(make_scroll("scroll:n=" + std::to_string(n) + ",d=" + std::to_string(d) + ",g=" + std::to_string(g) +
                               ",r=" + std::to_string(r),
                           n, d, g, r));
        }
      }
    }
  }
  return out;
}

}  // namespace regbound
