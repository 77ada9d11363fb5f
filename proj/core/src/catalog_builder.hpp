#pragma once

#include <map>
#include <string>
#include <vector>

#include "sphsmooth/catalog.hpp"

namespace sphsmooth::detail {

/// Assembles a catalog system from the features of its Luna diagram: decorated
/// spherical roots, undecorated vertices (S^p), circle pairs on simple spherical
/// roots with optional arrows, and explicitly tabulated colors.
class SystemBuilder {
 public:
  explicit SystemBuilder(std::vector<Component> components);

  std::size_t v(int component, int position) const;
  /// Adds a spherical root with coefficient `c[k]` on position `first + k` of `component`.
  std::size_t root(int component, int first, const std::vector<int>& c);
  std::size_t root(const std::map<std::size_t, int>& coeffs);
  std::size_t simple(int component, int position) { return root(component, position, {1}); }
  /// α_first + … + α_last in one component.
  std::size_t chain(int component, int first, int last);
  void sp(int component, int first, int last);

  /// Circles above (D⁺) and below (D⁻) the simple spherical root `alpha`.
  void circles(std::size_t alpha, const std::string& plus, const std::string& minus);
  /// Arrow from D⁺ of `alpha` to the spherical root `gamma`.
  void arrow(std::size_t alpha, std::size_t gamma);
  /// Color with explicitly given pairings (sigma index -> value), zero elsewhere.
  void color(const std::string& label, const std::map<std::size_t, int>& values);
  void mark(std::size_t gamma) { marked_.insert(gamma); }

  CatalogInstance build() const;

 private:
  struct Circle {
    std::size_t alpha;
    std::string plus, minus;
  };
  RootSystem rs_;
  std::vector<IntVector> sigma_;
  std::set<std::size_t> s_p_;
  std::vector<Circle> circles_;
  std::set<std::pair<std::size_t, std::size_t>> arrows_;
  std::vector<std::pair<std::string, std::map<std::size_t, int>>> explicit_;
  std::vector<std::string> order_;
  std::set<std::size_t> marked_;
};

using EntryList = std::vector<CatalogEntry>;
void add_single_group_entries(EntryList& out);  // (1)-(20)
void add_multi_module_entries(EntryList& out);  // (21)-(42)

}  // namespace sphsmooth::detail
