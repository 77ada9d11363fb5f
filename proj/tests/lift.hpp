#pragma once

// Lifting spherical systems with marked roots to homogeneous data with a free lattice.
//
// The dual basis of M is made of the colors of the system followed by one G-invariant
// divisor per marked root, which pairs -1 with that root and 0 with the others. Basis
// weights come from the coroot restrictions of the colors; a central torus vanishing
// on Σ keeps them independent. The accompanying cone is the dual-basis cone with
// F = all colors.

#include <random>
#include <utility>

#include "sphsmooth/catalog.hpp"
#include "sphsmooth/spherical_data.hpp"

namespace testing_support {

struct Lift {
  sphsmooth::HomogeneousSphericalDatum datum;
  sphsmooth::ColoredCone cone;
};

inline sphsmooth::IntVector unit(std::size_t n, std::size_t k) {
  sphsmooth::IntVector e(n, sphsmooth::Int(0));
  e[k] = 1;
  return e;
}

inline Lift lift(const sphsmooth::CatalogInstance& inst) {
  using namespace sphsmooth;
  const auto& s = inst.system;
  const auto base = to_datum(s);
  const auto colors = full_colors(base);
  const std::size_t nc = colors.size();
  const std::size_t n = nc + inst.marked.size();

  Lift out;
  auto& d = out.datum;
  std::vector<IntVector> m(s.sigma.size(), IntVector(n, Int(0)));
  for (std::size_t j = 0; j < s.sigma.size(); ++j)
    for (std::size_t k = 0; k < nc; ++k) m[j][k] = dot(colors[k].rho, base.sigma[j].m);
  std::size_t u = nc;
  for (auto j : inst.marked) m[j][u++] = -1;

  const auto central = integer_kernel(m, n);
  d.root_system = RootSystem(s.root_system.components(), static_cast<int>(central.size()));
  for (std::size_t k = 0; k < n; ++k) {
    Weight w{IntVector(s.root_system.rank(), Int(0)), IntVector(central.size(), Int(0))};
    if (k < nc)
      for (auto a : colors[k].sigma_set) w.fw[a] += colors[k].kind == ColorKind::TwoA ? 2 : 1;
    for (std::size_t t = 0; t < central.size(); ++t) w.torus[t] = central[t][k];
    d.m_basis.push_back(w);
  }
  for (std::size_t j = 0; j < s.sigma.size(); ++j) d.sigma.push_back({s.sigma[j], m[j]});
  d.s_p = s.s_p;
  for (std::size_t k = 0; k < nc; ++k)
    if (colors[k].kind == ColorKind::A) d.d_a.push_back({colors[k].label, unit(n, k)});
  // b and 2a labels are derived from the datum, so read them back
  for (const auto& c : full_colors(d)) out.cone.f_labels.push_back(c.label);
  for (std::size_t k = nc; k < n; ++k) out.cone.valuation_generators.push_back(unit(n, k));
  return out;
}

/// A unimodular matrix and its inverse, built from the same elementary operations.
struct Unimodular {
  sphsmooth::IntMatrix u, inv;
};

inline Unimodular random_unimodular_pair(std::mt19937& rng, std::size_t n, int steps = 10) {
  using sphsmooth::IntMatrix;
  Unimodular out{IntMatrix::identity(n), IntMatrix::identity(n)};
  if (n < 2) return out;
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<int> coef(-2, 2);
  for (int s = 0; s < steps; ++s) {
    const auto i = pick(rng), j = pick(rng);
    const int k = coef(rng);
    if (i == j || k == 0) continue;
    // u ← E·u with E = I + k e_ij; inv ← inv·E⁻¹
    for (std::size_t c = 0; c < n; ++c) out.u(i, c) += k * out.u(j, c);
    for (std::size_t r = 0; r < n; ++r) out.inv(r, j) -= k * out.inv(r, i);
  }
  return out;
}

inline sphsmooth::IntVector times(const sphsmooth::IntMatrix& a, const sphsmooth::IntVector& v) {
  sphsmooth::IntVector out(a.rows(), sphsmooth::Int(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * v[j];
  return out;
}

/// Replaces the basis χ of M by U·χ. Coordinates of M transform by U⁻ᵀ and those of N by U.
inline Lift change_basis(const Lift& in, const Unimodular& um) {
  using namespace sphsmooth;
  Lift out = in;
  auto& d = out.datum;
  const std::size_t n = d.m_basis.size();
  for (std::size_t i = 0; i < n; ++i) {
    Weight w = zero_weight(d.root_system);
    for (std::size_t j = 0; j < n; ++j) w = w + um.u(i, j) * in.datum.m_basis[j];
    d.m_basis[i] = w;
  }
  const auto inv_t = um.inv.transpose();
  for (auto& g : d.sigma) g.m = times(inv_t, g.m);
  for (auto& c : d.d_a) c.rho = times(um.u, c.rho);
  for (auto& v : out.cone.valuation_generators) v = times(um.u, v);
  return out;
}

/// Product of one or two small catalog instances, with markings carried along.
inline sphsmooth::CatalogInstance random_catalog_product(std::mt19937& rng, int max_rank = 5) {
  using namespace sphsmooth;
  std::vector<std::pair<int, Params>> small;
  for (const auto& e : catalog())
    for (const auto& p : e.smallest(2))
      if (e.rank(p) <= max_rank) small.emplace_back(e.id, p);
  std::uniform_int_distribution<std::size_t> pick(0, small.size() - 1);
  std::uniform_int_distribution<int> parts(1, 2);
  const int k = parts(rng);
  std::vector<SphericalSystem> systems;
  std::set<std::size_t> marked;
  std::size_t offset = 0;
  for (int i = 0; i < k; ++i) {
    const auto& [id, p] = small[pick(rng)];
    auto inst = instantiate(id, p);
    for (auto m : inst.marked) marked.insert(m + offset);
    offset += inst.system.sigma.size();
    systems.push_back(std::move(inst.system));
  }
  return {product(systems), marked};
}

}  // namespace testing_support
