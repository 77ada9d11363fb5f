#pragma once

#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "sphsmooth/spherical_data.hpp"

namespace sphsmooth {

class CatalogError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct CatalogInstance {
  SphericalSystem system;
  std::set<std::size_t> marked;  // indices into system.sigma
};

using Params = std::vector<int>;

struct CatalogEntry {
  int id = 0;
  std::string description;
  std::vector<std::string> param_names;
  std::string domain;  // human-readable parameter domain
  std::function<bool(const Params&)> in_domain;
  std::function<int(const Params&)> rank;  // semisimple rank of the instance
  std::function<CatalogInstance(const Params&)> build;

  /// The `count` smallest parameter tuples in the domain, ordered by parameter sum
  /// and then lexicographically.
  std::vector<Params> smallest(std::size_t count) const;
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry& catalog_entry(int id);
CatalogInstance instantiate(int id, const Params& params);
std::string format_params(const CatalogEntry& e, const Params& p);

struct SystemIsomorphism {
  std::vector<std::size_t> vertex_map;  // vertex of the first system -> vertex of the second
  std::vector<std::size_t> sigma_map;
  std::vector<std::size_t> color_map;
};

/// Calls `f` for every isomorphism; `f` returns false to stop.
void for_each_system_isomorphism(const SphericalSystem& a, const SphericalSystem& b,
                                 const std::function<bool(const SystemIsomorphism&)>& f);
std::optional<SystemIsomorphism> systems_isomorphic(const SphericalSystem& a, const SphericalSystem& b);

struct MatchResult {
  int entry_id = 0;
  Params params;
  SystemIsomorphism isomorphism;
  std::set<std::size_t> marked_pullback;  // indices into the component's sigma, first isomorphism
  /// Every distinct pullback over all isomorphisms, sorted; more than one when a symmetry
  /// of the system moves the marked roots.
  std::vector<std::set<std::size_t>> marking_alternatives;
  bool ambiguous() const { return marking_alternatives.size() > 1; }
};

class AmbiguousMarking : public CatalogError {
 public:
  using CatalogError::CatalogError;
};

/// Throws AmbiguousMarking when the pulled-back marking depends on the isomorphism.
void require_unambiguous_marking(const MatchResult& m);

/// First catalog entry (by id, then parameters) isomorphic to `c`.
std::optional<MatchResult> match_component(const SphericalSystem& c);
/// Every (entry, parameters) isomorphic to `c`.
std::vector<MatchResult> all_matches(const SphericalSystem& c);

}  // namespace sphsmooth
