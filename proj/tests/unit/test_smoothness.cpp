#include <doctest.h>

#include "../lift.hpp"
#include "../oracles.hpp"
#include "../support.hpp"
#include "sphsmooth/smoothness.hpp"

using namespace sphsmooth;
using testing_support::iv;
using testing_support::load_fixture;

namespace {

HomogeneousSphericalDatum toric(std::size_t n) {
  HomogeneousSphericalDatum d;
  d.root_system = RootSystem({}, static_cast<int>(n));
  for (std::size_t k = 0; k < n; ++k) d.m_basis.push_back({{}, testing_support::unit(n, k)});
  return d;
}

std::vector<std::filesystem::path> mfs_fixtures() {
  std::vector<std::filesystem::path> out;
  for (const auto& p : testing_support::all_fixtures())
    if (p.parent_path().filename() == "mfs") out.push_back(p);
  return out;
}

}  // namespace

TEST_CASE("worked example is smooth with the third root assigned to the invariant divisor") {
  const auto doc = load_fixture("example_a3c2.json");
  const auto r = is_smooth(doc.datum, *doc.cone);
  CHECK(r.verdict);
  CHECK(r.cond1.pass);
  CHECK(r.cond1.rays.size() == 6);
  REQUIRE(r.cond2.components.size() == 1);
  REQUIRE(r.cond2.components[0].match);
  CHECK(r.cond2.components[0].match->entry_id == 13);
  CHECK(r.cond3.u_set == std::vector<IntVector>{iv({0, 0, 0, 0, 0, 1})});
  REQUIRE(r.cond3.assignment.size() == 1);
  CHECK(r.cond3.assignment[0].gamma_m == iv({-1, -1, 0, 1, 1, -1}));
  CHECK(r.cond3.u_set[r.cond3.assignment[0].u] == iv({0, 0, 0, 0, 0, 1}));
}

TEST_CASE("worked example for n = 6 matches the n >= 5 family") {
  const auto doc = load_fixture("example_a5c2.json");
  const auto r = is_smooth(doc.datum, *doc.cone);
  CHECK(r.verdict);
  REQUIRE(r.cond2.components.size() == 1);
  REQUIRE(r.cond2.components[0].match);
  CHECK(r.cond2.components[0].match->entry_id == 14);
  CHECK(r.cond3.u_set.empty());
}

TEST_CASE("toric fixtures") {
  const auto singular = load_fixture("toric_singular.json");
  const auto r = is_smooth(singular.datum, *singular.cone);
  CHECK_FALSE(r.verdict);
  CHECK_FALSE(r.cond1.pass);
  CHECK(r.cond1.witness.find("elementary divisor 2") != std::string::npos);
  const auto smooth = load_fixture("toric_smooth.json");
  CHECK(is_smooth(smooth.datum, *smooth.cone).verdict);
}

TEST_CASE("toric smoothness agrees with the minor oracle on simplicial cones") {
  std::mt19937 rng(71);
  int smooth_seen = 0, singular_seen = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 1 + trial % 4;
    const std::size_t k = 1 + (trial / 4) % n;
    std::vector<IntVector> gens;
    while (gens.size() < k) {
      auto v = testing_support::random_vector(rng, n, -5, 5);
      auto trial_set = gens;
      trial_set.push_back(v);
      if (matrix_rank(trial_set, n) == trial_set.size()) gens.push_back(v);
    }
    // a redundant positive combination must not change anything
    auto with_extra = gens;
    if (k >= 2) {
      IntVector s(n, Int(0));
      for (std::size_t i = 0; i < n; ++i) s[i] = gens[0][i] + 2 * gens[1][i];
      with_extra.push_back(s);
    }
    const auto d = toric(n);
    const bool oracle = testing_support::oracles::toric_simplicial_smooth(gens, n);
    (oracle ? smooth_seen : singular_seen)++;
    CHECK(is_smooth(d, ColoredCone{with_extra, {}}).verdict == oracle);
  }
  CHECK(smooth_seen > 10);
  CHECK(singular_seen > 10);
}

TEST_CASE("toric smoothness agrees with the subset oracle on arbitrary pointed cones") {
  std::mt19937 rng(79);
  int checked = 0, smooth_seen = 0;
  while (checked < 120) {
    const std::size_t n = 2 + checked % 3;
    std::vector<IntVector> gens;
    for (int i = 0; i < 2 + checked % 4; ++i) gens.push_back(testing_support::random_vector(rng, n, -2, 2));
    if (!is_strictly_convex(RationalCone(n, gens))) continue;
    ++checked;
    const bool oracle = testing_support::oracles::toric_smooth_oracle(gens, n);
    smooth_seen += oracle;
    CHECK(is_smooth(toric(n), ColoredCone{gens, {}}).verdict == oracle);
  }
  CHECK(smooth_seen > 10);
}

TEST_CASE("non-simplicial toric cones are singular") {
  const auto d = toric(3);
  const ColoredCone square{{iv({1, 0, 1}), iv({0, 1, 1}), iv({-1, 0, 1}), iv({0, -1, 1})}, {}};
  const auto r = is_smooth(d, square);
  CHECK_FALSE(r.verdict);
  CHECK(r.cond1.rays.size() == 4);
}

TEST_CASE("lifted multiplicity-free spaces are smooth and their mutations are not") {
  const auto files = mfs_fixtures();
  CHECK(files.size() >= 10);
  for (const auto& f : files) {
    CAPTURE(f.filename().string());
    const auto doc = sphsmooth::parse_document(testing_support::read_file(f));
    const auto& d = doc.datum;
    const auto& c = *doc.cone;
    REQUIRE(is_smooth(d, c).verdict);

    auto dup = c;
    dup.f_labels.push_back(c.f_labels.front());
    const auto r1 = is_smooth(d, dup);
    CHECK_FALSE(r1.verdict);
    CHECK_FALSE(r1.cond1.pass);

    if (!c.valuation_generators.empty()) {
      // the invariant divisor's column of the pairing table, negated
      auto neg = c;
      for (auto& x : neg.valuation_generators.front()) x = -x;
      const auto r3 = is_smooth(d, neg);
      CHECK_FALSE(r3.verdict);
      CHECK_FALSE(r3.cond3.pass);

      // primitive generators make scaling invisible
      auto scaled = c;
      for (auto& x : scaled.valuation_generators.front()) x *= 2;
      CHECK(is_smooth(d, scaled).verdict);
    }
  }
}

TEST_CASE("a component outside the list fails condition 2") {
  SphericalSystem g2;
  g2.root_system = RootSystem({{'G', 2}});
  g2.sigma = {iv({1, 1})};
  const auto l = testing_support::lift({g2, {}});
  REQUIRE(validate(l.datum).ok());
  REQUIRE(validate_colored_cone(l.datum, l.cone).ok());
  const auto r = is_smooth(l.datum, l.cone);
  CHECK(r.cond1.pass);
  CHECK_FALSE(r.cond2.pass);
  CHECK_FALSE(r.verdict);
}

TEST_CASE("verdict is invariant under a unimodular change of basis") {
  std::mt19937 rng(73);
  for (int trial = 0; trial < 25; ++trial) {
    const auto inst = testing_support::random_catalog_product(rng, 4);
    const auto l = testing_support::lift(inst);
    const auto moved = testing_support::change_basis(l, testing_support::random_unimodular_pair(rng, l.datum.lattice_rank()));
    const auto a = is_smooth(l.datum, l.cone), b = is_smooth(moved.datum, moved.cone);
    CHECK(a.verdict);
    CHECK(a.verdict == b.verdict);
    CHECK(a.cond1.pass == b.cond1.pass);
    CHECK(a.cond2.pass == b.cond2.pass);
    CHECK(a.cond3.pass == b.cond3.pass);
  }
}

TEST_CASE("invalid data throw and invalid cones are reported") {
  const auto bad = load_fixture("invalid_nonprimitive_root.json").datum;
  CHECK_THROWS_AS(is_smooth(bad, ColoredCone{}), ValidationError);
  const auto doc = load_fixture("product_sl2_t_squared.json");
  auto cone = *doc.cone;
  cone.f_labels = {"D1+"};
  const auto r = is_smooth(doc.datum, cone);
  CHECK_FALSE(r.cone_findings.ok());
  CHECK_FALSE(r.verdict);
}

TEST_CASE("condition 1 detects non-injective color maps and non-primitive colors") {
  const auto doc = load_fixture("example_a3c2.json");
  auto c = *doc.cone;
  c.f_labels.push_back("D1");
  const auto r = check_condition1(doc.datum, c);
  CHECK_FALSE(r.pass);
  CHECK_FALSE(r.witness.empty());
}
