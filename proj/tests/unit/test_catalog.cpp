#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "../lift.hpp"
#include "../support.hpp"
#include "sphsmooth/catalog.hpp"

using namespace sphsmooth;

namespace {

// Entries whose systems coincide with an earlier entry for some parameters.
bool documented_duplicate(int id, const Params& p, const MatchResult& m) {
  if (id == 25 && m.entry_id == 24 && p[0] % 2 == 0 && m.params == p) return true;
  if (id == 33 && m.entry_id == 29 && m.params == p) return true;
  if (id == 34 && m.entry_id == 30 && m.params == p) return true;
  // (42) is symmetric in its two parameters
  if (id == 42 && m.entry_id == 42 && m.params == Params{p[1], p[0]}) return true;
  return false;
}

// Entries with a symmetry of the system moving the marked roots.
const std::set<int> kMovingMarks = {5, 7, 8, 13, 19, 24, 25, 28, 29, 33, 35, 36, 40};

}  // namespace

TEST_CASE("catalog has entries 1..42 in order") {
  const auto& c = catalog();
  REQUIRE(c.size() == 42);
  for (std::size_t i = 0; i < c.size(); ++i) CHECK(c[i].id == static_cast<int>(i + 1));
  CHECK_THROWS_AS(catalog_entry(43), CatalogError);
  CHECK_THROWS_AS(catalog_entry(0), CatalogError);
}

TEST_CASE("smallest parameters are ordered by sum and lie in the domain") {
  for (const auto& e : catalog()) {
    const auto ps = e.smallest(3);
    CHECK(ps.size() >= 1);
    for (std::size_t i = 0; i < ps.size(); ++i) {
      CHECK(e.in_domain(ps[i]));
      if (i > 0) {
        const auto sum = [](const Params& p) { return std::accumulate(p.begin(), p.end(), 0); };
        CHECK(std::make_pair(sum(ps[i - 1]), ps[i - 1]) < std::make_pair(sum(ps[i]), ps[i]));
      }
    }
  }
  CHECK_THROWS_AS(instantiate(1, {1}), CatalogError);
  CHECK_THROWS_AS(instantiate(1, {}), CatalogError);
}

TEST_CASE("every instance is valid, closed, indecomposable and of the stated rank") {
  for (const auto& e : catalog()) {
    for (const auto& p : e.smallest(3)) {
      CAPTURE(e.id);
      CAPTURE(format_params(e, p));
      const auto inst = e.build(p);
      CHECK(validate(inst.system).ok());
      CHECK(is_spherically_closed(inst.system));
      CHECK(decompose(inst.system).size() == 1);
      CHECK(static_cast<int>(inst.system.root_system.rank()) == e.rank(p));
      for (auto m : inst.marked) CHECK(m < inst.system.sigma.size());
    }
  }
}

TEST_CASE("each instance matches itself or a documented duplicate") {
  for (const auto& e : catalog()) {
    for (const auto& p : e.smallest(3)) {
      CAPTURE(e.id);
      CAPTURE(format_params(e, p));
      const auto inst = e.build(p);
      const auto m = match_component(inst.system);
      REQUIRE(m);
      const bool self = m->entry_id == e.id && m->params == p;
      CHECK((self || documented_duplicate(e.id, p, *m)));
      // the instance itself is among all matches, with its own marking as an alternative
      const auto all = all_matches(inst.system);
      const auto it = std::find_if(all.begin(), all.end(),
                                   [&](const MatchResult& r) { return r.entry_id == e.id && r.params == p; });
      REQUIRE(it != all.end());
      CHECK(std::count(it->marking_alternatives.begin(), it->marking_alternatives.end(), inst.marked) == 1);
    }
  }
}

TEST_CASE("markings are unambiguous except for the documented entries") {
  for (const auto& e : catalog()) {
    bool moved = false;
    for (const auto& p : e.smallest(3)) {
      const auto inst = e.build(p);
      for (const auto& r : all_matches(inst.system))
        if (r.entry_id == e.id && r.params == p) moved = moved || r.ambiguous();
    }
    CAPTURE(e.id);
    CHECK(moved == (kMovingMarks.count(e.id) > 0));
  }
}

TEST_CASE("the worked example is entry 13 with the third root marked") {
  const auto inst = instantiate(13, {});
  CHECK(inst.system.root_system.name() == "A3xC2");
  CHECK(inst.marked == std::set<std::size_t>{2});
  const auto m = match_component(inst.system);
  REQUIRE(m);
  CHECK(m->ambiguous());
  CHECK_THROWS_AS(require_unambiguous_marking(*m), AmbiguousMarking);
}

TEST_CASE("matching is invariant under relabeling the diagram") {
  std::mt19937 rng(61);
  for (int trial = 0; trial < 20; ++trial) {
    const auto inst = testing_support::random_catalog_product(rng);
    auto parts = decompose(inst.system);
    if (parts.size() < 2) continue;
    std::reverse(parts.begin(), parts.end());
    const auto swapped = product(parts);
    REQUIRE(systems_isomorphic(swapped, inst.system));
    for (const auto& p : parts) {
      const auto m = match_component(p);
      CHECK(m);
    }
  }
}

TEST_CASE("non-catalog systems do not match") {
  SphericalSystem s;
  s.root_system = RootSystem({{'G', 2}});
  s.sigma = {testing_support::iv({1, 1})};
  CHECK(validate(s).ok());
  CHECK_FALSE(match_component(s));
}
