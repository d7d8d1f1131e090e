#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "regbound/projection.hpp"

namespace regbound {

struct ExpectedRegularity {
  Integer value;
  std::string note;  // where the sharp value comes from
};

struct CatalogEntry {
  std::string name;
  std::string description;
  VarietySpec spec;
  std::optional<ExpectedRegularity> expected;
};

/// Named entries shipped with the tool, in a fixed order.
std::vector<CatalogEntry> default_catalog();

/// Look up a fixed name ("twisted-cubic") or a parametric one:
///   rational-normal-curve:r=5
///   rational-normal-scroll:n=2,r=5
///   curve:d=4,g=1,r=3
///   surface:d=4,pi=0,chi=1,r=5
///   scroll:n=2,d=5,g=1,r=4
/// Returns nullopt for names that are not catalog syntax; malformed
/// parameters throw Error(parse_error) or Error(validation_error).
std::optional<CatalogEntry> lookup_catalog(std::string_view name);

/// Maximal genus of a nondegenerate irreducible curve of degree d in P^r.
Integer castelnuovo_bound(const Integer& d, int r);

/// Necessary numerical conditions for a smooth nondegenerate variety with
/// the spec's family invariants to exist: curves need d >= r and genus at
/// most the Castelnuovo bound; surfaces need d >= r-1, a sectional genus
/// allowed for a curve in P^{r-1}, and chi(O_X(-1)) = chi + pi - 1 >= 0;
/// scrolls need their curve sections to be admissible curves in P^{r-n+1}.
/// Generic specs are always accepted.
bool numerically_admissible(const VarietySpec& spec);

/// Family parameter grid used by the verification suites, filtered through
/// numerically_admissible:
///   curves    d <= 10, g <= 4, r <= 8
///   surfaces  d <= 10, pi <= 4, |chi| <= 3, r <= 8
///   scrolls   n <= 4, d <= 12, g <= 4, r <= 10
std::vector<VarietySpec> admissible_sweep();

}  // namespace regbound
