#include <doctest.h>

#include "../oracles.hpp"
#include "../support.hpp"
#include "sphsmooth/lattice.hpp"

using namespace sphsmooth;
using testing_support::iv;
using namespace testing_support::oracles;

namespace {

Int cross(const IntVector& a, const IntVector& b) { return a[0] * b[1] - a[1] * b[0]; }

}  // namespace

TEST_CASE("smith normal form satisfies left*A*right = D with a divisibility chain") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t r = 1 + trial % 4, c = 1 + (trial / 4) % 4;
    std::vector<IntVector> rows;
    for (std::size_t i = 0; i < r; ++i) rows.push_back(testing_support::random_vector(rng, c, -6, 6));
    const auto a = IntMatrix::from_rows(rows, c);
    const auto snf = smith_normal_form(a);
    const auto d = snf.left * a * snf.right;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        CHECK(d(i, j) == ((i == j) ? snf.diag[i] : Int(0)));
    CHECK(abs(determinant(snf.left)) == 1);
    CHECK(abs(determinant(snf.right)) == 1);
    for (std::size_t k = 0; k + 1 < snf.diag.size(); ++k) {
      CHECK(snf.diag[k] >= 0);
      if (snf.diag[k] == 0) CHECK(snf.diag[k + 1] == 0);
      else CHECK(snf.diag[k + 1] % snf.diag[k] == 0);
    }
    // determinantal divisors: d_1 ⋯ d_k = gcd of the k×k minors
    Int prod = 1;
    for (std::size_t k = 0; k < snf.diag.size(); ++k) {
      prod *= snf.diag[k];
      CHECK(prod == minor_gcd(rows, c, k + 1));
    }
  }
}

TEST_CASE("determinant agrees with cofactor expansion") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 5;
    std::vector<IntVector> rows;
    for (std::size_t i = 0; i < n; ++i) rows.push_back(testing_support::random_vector(rng, n, -4, 4));
    CHECK(determinant(IntMatrix::from_rows(rows, n)) == cofactor_det(rows));
  }
}

TEST_CASE("is_part_of_basis matches the gcd-of-maximal-minors oracle") {
  std::mt19937 rng(7);
  int positives = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 4;
    const std::size_t k = 1 + (trial / 4) % n;
    std::vector<IntVector> vs;
    for (std::size_t i = 0; i < k; ++i) vs.push_back(testing_support::random_vector(rng, n, -3, 3));
    const bool oracle = basis_oracle(vs, n);
    positives += oracle;
    CHECK(is_part_of_basis(vs, n) == oracle);
  }
  CHECK(positives > 30);
  CHECK(is_part_of_basis({iv({1, 0}), iv({1, 1})}, 2));
  CHECK_FALSE(is_part_of_basis({iv({1, 0}), iv({1, 2})}, 2));
  CHECK_FALSE(is_part_of_basis({iv({2, 0, 0})}, 3));
  CHECK(is_part_of_basis({}, 3));
}

TEST_CASE("basis property is invariant under unimodular change of coordinates") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + trial % 3;
    const auto u = testing_support::random_unimodular(rng, n);
    std::vector<IntVector> vs, moved;
    for (std::size_t i = 0; i + 1 < n; ++i) vs.push_back(testing_support::random_vector(rng, n, -3, 3));
    for (const auto& v : vs) {
      IntVector w(n, Int(0));
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) w[j] += v[i] * u(i, j);
      moved.push_back(w);
    }
    CHECK(is_part_of_basis(vs, n) == is_part_of_basis(moved, n));
  }
}

TEST_CASE("primitive generators and content") {
  CHECK(primitive_generator(iv({4, -6, 0})) == iv({2, -3, 0}));
  CHECK(content(iv({4, -6, 0})) == 2);
  CHECK(content(iv({0, 0})) == 0);
  CHECK(primitive_generator(iv({0, -5})) == iv({0, -1}));
}

TEST_CASE("integer kernel is saturated and annihilated by the rows") {
  std::mt19937 rng(19);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t cols = 2 + trial % 4, nrows = 1 + trial % 3;
    std::vector<IntVector> rows;
    for (std::size_t i = 0; i < nrows; ++i) rows.push_back(testing_support::random_vector(rng, cols, -4, 4));
    const auto ker = integer_kernel(rows, cols);
    CHECK(ker.size() == cols - matrix_rank(rows, cols));
    for (const auto& k : ker)
      for (const auto& r : rows) CHECK(dot(r, k) == 0);
    CHECK(is_part_of_basis(ker, cols));
  }
  CHECK(integer_kernel({}, 2).size() == 2);
}

TEST_CASE("solve_in_basis") {
  const auto x = solve_in_basis({iv({2, 0}), iv({0, 3})}, iv({4, 1}));
  REQUIRE(x);
  CHECK((*x)[0] == 2);
  CHECK((*x)[1] == Rat(1, 3));
  CHECK_FALSE(solve_in_basis({iv({1, 0, 0})}, iv({0, 1, 0})));
  CHECK_THROWS_AS(solve_in_basis({iv({1, 1}), iv({2, 2})}, iv({1, 1})), LatticeError);
}

TEST_CASE("planar extremal rays agree with angular ordering") {
  std::mt19937 rng(23);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<IntVector> gens;
    for (int i = 0; i < 2 + trial % 4; ++i) {
      auto v = testing_support::random_vector(rng, 2, -4, 4);
      if (!is_zero(v)) gens.push_back(v);
    }
    const RationalCone cone(2, gens);
    if (gens.empty() || !is_strictly_convex(cone)) continue;
    ++checked;
    std::vector<IntVector> prims;
    for (const auto& g : gens) prims.push_back(primitive_generator(g));
    // in a pointed planar cone, the rays are the generators with every other one on one side
    std::vector<IntVector> oracle;
    for (const auto& p : prims) {
      bool left = true, right = true;
      for (const auto& q : prims) {
        const Int c = cross(p, q);
        if (c < 0) left = false;
        if (c > 0) right = false;
      }
      if (left || right) oracle.push_back(p);
    }
    std::sort(oracle.begin(), oracle.end());
    oracle.erase(std::unique(oracle.begin(), oracle.end()), oracle.end());
    auto rays = extremal_rays(cone);
    std::sort(rays.begin(), rays.end());
    CHECK(rays == oracle);
    for (const auto& g : gens) CHECK(cone_contains(RationalCone(2, rays), to_rational(g), false));
  }
  CHECK(checked > 100);
}

TEST_CASE("cone membership, interiors and convexity") {
  const RationalCone quadrant(2, {iv({1, 0}), iv({0, 1})});
  CHECK(cone_contains(quadrant, to_rational(iv({2, 3})), true));
  CHECK(cone_contains(quadrant, to_rational(iv({2, 0})), false));
  CHECK_FALSE(cone_contains(quadrant, to_rational(iv({2, 0})), true));
  CHECK_FALSE(cone_contains(quadrant, to_rational(iv({-1, 1})), false));
  CHECK(is_strictly_convex(quadrant));
  CHECK_FALSE(is_strictly_convex(RationalCone(2, {iv({1, 0}), iv({-1, 0})})));
  CHECK(cone_dimension(RationalCone(3, {iv({1, 0, 0}), iv({2, 0, 0})})) == 1);
  // interior meets {x ≤ 0} only when some interior point has nonpositive first coordinate
  CHECK(cones_meet_interior(RationalCone(2, {iv({-1, 0}), iv({1, 1})}), {iv({1, 0})}));
  CHECK_FALSE(cones_meet_interior(RationalCone(2, {iv({1, 0}), iv({1, 1})}), {iv({1, 0})}));
  CHECK(cones_meet_interior(RationalCone(2, {}), {iv({1, 0})}));
}
