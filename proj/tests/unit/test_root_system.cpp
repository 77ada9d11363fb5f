#include <doctest.h>

#include "../support.hpp"
#include "sphsmooth/root_system.hpp"

using namespace sphsmooth;
using testing_support::iv;

namespace {

// Classical determinants of Cartan matrices, independent of any elimination in the library.
long expected_det(char t, int n) {
  switch (t) {
    case 'A': return n + 1;
    case 'B':
    case 'C': return 2;
    case 'D': return 4;
    case 'E': return 9 - n;
    default: return 1;  // F4, G2
  }
}

std::size_t automorphism_count(std::vector<Component> cs) { return diagram_automorphisms(RootSystem(cs)).size(); }

}  // namespace

TEST_CASE("Cartan matrices: diagonal, sign pattern, symmetrizability and determinant") {
  const std::vector<Component> types = {{'A', 1}, {'A', 4}, {'B', 2}, {'B', 5}, {'C', 3}, {'C', 4}, {'D', 4},
                                        {'D', 6}, {'E', 6}, {'E', 7}, {'E', 8}, {'F', 4}, {'G', 2}};
  for (const auto& c : types) {
    CAPTURE(c.type);
    CAPTURE(c.rank);
    const auto a = simple_cartan(c.type, c.rank);
    for (int i = 0; i < c.rank; ++i)
      for (int j = 0; j < c.rank; ++j) {
        if (i == j) CHECK(a(i, j) == 2);
        else {
          CHECK(a(i, j) <= 0);
          CHECK((a(i, j) == 0) == (a(j, i) == 0));
        }
      }
    CHECK(determinant(a) == expected_det(c.type, c.rank));
  }
}

TEST_CASE("non-simply-laced conventions put the long-to-short entry where expected") {
  const auto b3 = simple_cartan('B', 3);
  CHECK(b3(2, 1) == -2);
  CHECK(b3(1, 2) == -1);
  const auto c2 = simple_cartan('C', 2);
  CHECK(c2(0, 1) == -2);
  CHECK(c2(1, 0) == -1);
  const auto g2 = simple_cartan('G', 2);
  CHECK(g2(0, 1) == -3);
  // α′₂ = −2ω′₁ + 2ω′₂ in C₂
  RootSystem r({{'C', 2}});
  CHECK(root_as_weight(r, iv({0, 1})).fw == iv({-2, 2}));
}

TEST_CASE("low-rank names are normalized") {
  CHECK(RootSystem({{'B', 1}}).name() == "A1");
  CHECK(RootSystem({{'C', 1}}).name() == "A1");
  CHECK(RootSystem({{'D', 3}}).name() == "A3");
  CHECK(RootSystem({{'D', 2}}).name() == "A1xA1");
  CHECK(RootSystem({{'A', 2}}, 1).name() == "A2xT1");
  CHECK_THROWS_AS(RootSystem({{'E', 9}}), RootSystemError);
  CHECK_THROWS_AS(RootSystem({{'G', 3}}), RootSystemError);
}

TEST_CASE("simple root ids round-trip") {
  const RootSystem r({{'A', 3}, {'C', 2}});
  for (std::size_t v = 0; v < r.rank(); ++v) {
    const auto id = r.id(v);
    CHECK(r.flat(id) == v);
    CHECK(parse_root_id(to_string(id)) == id);
  }
  CHECK(to_string(r.id(3)) == "1.1");
  CHECK_THROWS_AS(parse_root_id("1"), RootSystemError);
  CHECK_THROWS_AS(parse_root_id("a.b"), RootSystemError);
  CHECK_THROWS_AS(r.flat({1, 3}), RootSystemError);
}

TEST_CASE("diagram automorphism counts") {
  CHECK(automorphism_count({{'A', 1}}) == 1);
  CHECK(automorphism_count({{'A', 5}}) == 2);
  CHECK(automorphism_count({{'B', 4}}) == 1);
  CHECK(automorphism_count({{'D', 4}}) == 6);
  CHECK(automorphism_count({{'D', 5}}) == 2);
  CHECK(automorphism_count({{'E', 6}}) == 2);
  CHECK(automorphism_count({{'E', 7}}) == 1);
  CHECK(automorphism_count({{'F', 4}}) == 1);
  CHECK(automorphism_count({{'A', 1}, {'A', 1}}) == 2);
  CHECK(automorphism_count({{'A', 2}, {'A', 2}}) == 8);
  CHECK(automorphism_count({{'A', 3}, {'C', 2}}) == 2);
}

TEST_CASE("every automorphism preserves the Cartan matrix") {
  const RootSystem r({{'D', 4}, {'A', 2}, {'A', 2}});
  const auto& a = r.cartan();
  for (const auto& aut : diagram_automorphisms(r))
    for (std::size_t i = 0; i < r.rank(); ++i)
      for (std::size_t j = 0; j < r.rank(); ++j) CHECK(a(aut.vertex_map[i], aut.vertex_map[j]) == a(i, j));
}

TEST_CASE("B2 and C2 are isomorphic through the vertex swap") {
  int n = 0;
  for_each_cartan_isomorphism(simple_cartan('B', 2), simple_cartan('C', 2), [&](const std::vector<std::size_t>& m) {
    CHECK(m == std::vector<std::size_t>{1, 0});
    ++n;
    return true;
  });
  CHECK(n == 1);
  n = 0;
  for_each_cartan_isomorphism(simple_cartan('B', 3), simple_cartan('C', 3), [&](const std::vector<std::size_t>&) {
    ++n;
    return true;
  });
  CHECK(n == 0);
}

TEST_CASE("spherical root shapes") {
  const RootSystem a3({{'A', 3}});
  CHECK(admissible_spherical_root(a3, iv({1, 0, 0})).tag == ShapeTag::Alpha);
  CHECK(admissible_spherical_root(a3, iv({2, 0, 0})).tag == ShapeTag::TwoAlpha);
  CHECK(admissible_spherical_root(a3, iv({1, 1, 1})).tag == ShapeTag::AChain);
  CHECK(admissible_spherical_root(a3, iv({1, 2, 1})).tag == ShapeTag::DThree);
  CHECK(admissible_spherical_root(a3, iv({1, 0, 1})).tag == ShapeTag::AlphaPlusAlpha);
  CHECK_FALSE(admissible_spherical_root(a3, iv({2, 1, 0})).tag);
  CHECK_FALSE(admissible_spherical_root(a3, iv({0, 0, 0})).tag);

  const RootSystem b3({{'B', 3}});
  CHECK(admissible_spherical_root(b3, iv({1, 1, 1})).tag == ShapeTag::BChain);
  CHECK(admissible_spherical_root(b3, iv({2, 2, 2})).tag == ShapeTag::BChainDoubled);
  CHECK(admissible_spherical_root(b3, iv({1, 2, 3})).tag == ShapeTag::BThree);
  const RootSystem c3({{'C', 3}});
  CHECK(admissible_spherical_root(c3, iv({1, 2, 1})).tag == ShapeTag::CChain);
  const RootSystem d4({{'D', 4}});
  CHECK(admissible_spherical_root(d4, iv({2, 2, 1, 1})).tag == ShapeTag::DChain);
  const RootSystem f4({{'F', 4}});
  CHECK(admissible_spherical_root(f4, iv({1, 2, 3, 2})).tag == ShapeTag::FFour);
  const RootSystem g2({{'G', 2}});
  CHECK(admissible_spherical_root(g2, iv({1, 1})).tag == ShapeTag::GShort);
  CHECK(admissible_spherical_root(g2, iv({2, 1})).tag == ShapeTag::GMiddle);
  CHECK(admissible_spherical_root(g2, iv({4, 2})).tag == ShapeTag::GDoubled);
  // support spanning two components is only allowed for the orthogonal pair
  const RootSystem a1a1({{'A', 1}, {'A', 1}});
  CHECK(admissible_spherical_root(a1a1, iv({1, 1})).tag == ShapeTag::AlphaPlusAlpha);
  CHECK_FALSE(admissible_spherical_root(RootSystem({{'A', 2}, {'A', 1}}), iv({1, 1, 1})).tag);
}

TEST_CASE("S^p compatibility of shapes") {
  const RootSystem a3({{'A', 3}});
  const auto chain = iv({1, 1, 1});
  const auto shape = admissible_spherical_root(a3, chain);
  CHECK(shape.spp == std::set<std::size_t>{1});
  CHECK(shape_compatible(a3, chain, shape, {1}));
  CHECK_FALSE(shape_compatible(a3, chain, shape, {}));
  CHECK_FALSE(shape_compatible(a3, chain, shape, {0, 1}));
}

TEST_CASE("sub root systems reclassify connected pieces") {
  const RootSystem d5({{'D', 5}});
  const auto sub = sub_root_system(d5, std::set<std::size_t>{2, 3, 4});
  CHECK(sub.system.name() == "A3");
  CHECK(sub.old_index.size() == 3);
  const auto sub2 = sub_root_system(d5, std::set<std::size_t>{0, 4});
  CHECK(sub2.system.name() == "A1xA1");
  const RootSystem b3({{'B', 3}});
  CHECK(sub_root_system(b3, std::set<std::size_t>{1, 2}).system.name() == "B2");
}
