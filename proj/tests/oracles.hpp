#pragma once

// Brute-force reference computations used to cross-check the library.

#include <boost/integer/common_factor.hpp>
#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

#include "sphsmooth/lattice.hpp"

namespace testing_support::oracles {

// Cofactor expansion; exponential but independent of any elimination code.
inline sphsmooth::Int cofactor_det(const std::vector<sphsmooth::IntVector>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  sphsmooth::Int acc = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j] == 0) continue;
    std::vector<sphsmooth::IntVector> minor;
    for (std::size_t i = 1; i < n; ++i) {
      sphsmooth::IntVector row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(m[i][c]);
      minor.push_back(row);
    }
    const sphsmooth::Int term = m[0][j] * cofactor_det(minor);
    acc += (j % 2 == 0) ? term : sphsmooth::Int(-term);
  }
  return acc;
}

inline void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  if (k > n) return;
  while (true) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// gcd of the k×k minors of a rows×cols matrix.
inline sphsmooth::Int minor_gcd(const std::vector<sphsmooth::IntVector>& rows, std::size_t cols, std::size_t k) {
  sphsmooth::Int g = 0;
  for_each_subset(rows.size(), k, [&](const std::vector<std::size_t>& ri) {
    for_each_subset(cols, k, [&](const std::vector<std::size_t>& ci) {
      std::vector<sphsmooth::IntVector> sub;
      for (auto r : ri) {
        sphsmooth::IntVector row;
        for (auto c : ci) row.push_back(rows[r][c]);
        sub.push_back(row);
      }
      g = boost::integer::gcd(g, abs(cofactor_det(sub)));
    });
  });
  return g;
}

// Vectors form part of a basis iff they are independent and the maximal minors are coprime.
inline bool basis_oracle(const std::vector<sphsmooth::IntVector>& vs, std::size_t n) {
  if (vs.size() > n) return false;
  if (vs.empty()) return true;
  return minor_gcd(vs, n, vs.size()) == 1;
}

/// Toric smoothness of a simplicial cone given by independent generators: the primitive
/// generators must have coprime maximal minors.
inline bool toric_simplicial_smooth(const std::vector<sphsmooth::IntVector>& independent, std::size_t n) {
  std::vector<sphsmooth::IntVector> prims;
  for (const auto& g : independent) prims.push_back(sphsmooth::primitive_generator(g));
  return basis_oracle(prims, n);
}

/// g ∈ cone(b) for independent b, by Cramer's rule on a nonsingular maximal minor.
inline bool in_simplicial_cone(const std::vector<sphsmooth::IntVector>& b, const sphsmooth::IntVector& g) {
  using sphsmooth::Int;
  const std::size_t k = b.size(), n = g.size();
  bool inside = false, found = false;
  for_each_subset(n, k, [&](const std::vector<std::size_t>& rows) {
    if (found) return;
    auto square = [&](std::size_t replace) {
      std::vector<sphsmooth::IntVector> m;
      for (auto r : rows) {
        sphsmooth::IntVector row;
        for (std::size_t j = 0; j < k; ++j) row.push_back(j == replace ? g[r] : b[j][r]);
        m.push_back(row);
      }
      return cofactor_det(m);
    };
    const Int det = square(k);
    if (det == 0) return;
    found = true;
    sphsmooth::IntVector num;
    for (std::size_t j = 0; j < k; ++j) num.push_back(square(j));
    for (std::size_t i = 0; i < n; ++i) {  // the solution must reproduce every coordinate
      Int lhs = 0;
      for (std::size_t j = 0; j < k; ++j) lhs += num[j] * b[j][i];
      if (lhs != det * g[i]) return;
    }
    inside = std::all_of(num.begin(), num.end(), [&](const Int& x) { return x * det >= 0; });
  });
  return found && inside;
}

/// A strictly convex cone is smooth iff some independent set of its primitive generators
/// is part of a basis and already spans the cone.
inline bool toric_smooth_oracle(const std::vector<sphsmooth::IntVector>& gens, std::size_t n) {
  std::vector<sphsmooth::IntVector> prims;
  for (const auto& g : gens)
    if (sphsmooth::content(g) != 0) prims.push_back(sphsmooth::primitive_generator(g));
  if (prims.empty()) return true;
  bool smooth = false;
  for (std::size_t k = 1; k <= std::min(n, prims.size()) && !smooth; ++k)
    for_each_subset(prims.size(), k, [&](const std::vector<std::size_t>& idx) {
      if (smooth) return;
      std::vector<sphsmooth::IntVector> b;
      for (auto i : idx) b.push_back(prims[i]);
      if (minor_gcd(b, n, k) != 1) return;  // also rules out dependent sets
      for (const auto& g : prims)
        if (!in_simplicial_cone(b, g)) return;
      smooth = true;
    });
  return smooth;
}

}  // namespace testing_support::oracles
