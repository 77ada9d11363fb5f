#include <algorithm>
#include <functional>
#include <numeric>

#include "sphsmooth/spherical_data.hpp"

namespace sphsmooth {

HomogeneousSphericalDatum localize(const HomogeneousSphericalDatum& d, const std::set<std::size_t>& s_star) {
  const auto sub = sub_root_system(d.root_system, s_star);
  std::map<std::size_t, std::size_t> new_index;
  for (std::size_t k = 0; k < sub.old_index.size(); ++k) new_index[sub.old_index[k]] = k;

  HomogeneousSphericalDatum out;
  out.root_system = sub.system;
  for (const auto& w : d.m_basis) {
    Weight nw{IntVector(sub.old_index.size()), w.torus};
    for (std::size_t k = 0; k < sub.old_index.size(); ++k) nw.fw[k] = w.fw.at(sub.old_index[k]);
    out.m_basis.push_back(nw);
  }
  for (const auto& g : d.sigma) {
    const auto supp = support(g.coeffs);
    if (!std::all_of(supp.begin(), supp.end(), [&](std::size_t v) { return s_star.count(v) > 0; })) continue;
    IntVector c(sub.old_index.size());
    for (std::size_t k = 0; k < sub.old_index.size(); ++k) c[k] = g.coeffs[sub.old_index[k]];
    out.sigma.push_back({c, g.m});
  }
  // Restricting the weights can collapse M. Central characters of the Levi vanishing on
  // the remaining roots then keep the basis faithful without touching any coroot pairing.
  std::vector<IntVector> flat;
  for (const auto& w : out.m_basis) {
    IntVector v = w.fw;
    v.insert(v.end(), w.torus.begin(), w.torus.end());
    flat.push_back(v);
  }
  const std::size_t s = d.m_basis.size();
  const std::size_t width = sub.old_index.size() + static_cast<std::size_t>(d.root_system.torus_rank());
  if (s > 0 && matrix_rank(flat, width) < s) {
    std::vector<IntVector> roots;
    for (const auto& g : out.sigma) roots.push_back(g.m);
    const auto extra = integer_kernel(roots, s);
    for (std::size_t k = 0; k < s; ++k)
      for (const auto& f : extra) out.m_basis[k].torus.push_back(f[k]);
    out.root_system = RootSystem(sub.system.components(),
                                 sub.system.torus_rank() + static_cast<int>(extra.size()));
  }
  for (auto a : d.s_p)
    if (s_star.count(a)) out.s_p.insert(new_index.at(a));
  for (const auto& c : d.d_a) {
    const auto sig = sigma_set_of(d, c);
    if (std::any_of(sig.begin(), sig.end(), [&](std::size_t a) { return s_star.count(a) > 0; }))
      out.d_a.push_back(c);
  }
  return out;
}

HomogeneousSphericalDatum to_datum(const SphericalSystem& s) {
  HomogeneousSphericalDatum d;
  d.root_system = s.root_system;
  const std::size_t n = s.sigma.size();
  for (std::size_t i = 0; i < n; ++i) {
    d.m_basis.push_back(root_as_weight(s.root_system, s.sigma[i]));
    IntVector e(n, Int(0));
    e[i] = 1;
    d.sigma.push_back({s.sigma[i], e});
  }
  d.s_p = s.s_p;
  d.d_a = s.d_a;
  return d;
}

ValidationReport validate(const SphericalSystem& s) {
  for (const auto& c : s.d_a)
    if (c.rho.size() != s.sigma.size()) {
      ValidationReport rep;
      rep.findings.push_back({"color-shape", "color " + c.label + " has wrong pairing count"});
      return rep;
    }
  for (const auto& g : s.sigma)
    if (g.size() != s.root_system.rank()) {
      ValidationReport rep;
      rep.findings.push_back({"root-shape", "spherical root " + to_string(g) + " has wrong length"});
      return rep;
    }
  return validate(to_datum(s));
}

namespace {

ClosureResult build_closure(const HomogeneousSphericalDatum& d, const std::vector<int>& factor) {
  ClosureResult res;
  res.factor = factor;
  res.system.root_system = d.root_system;
  res.system.s_p = d.s_p;
  for (std::size_t i = 0; i < d.sigma.size(); ++i) {
    IntVector c = d.sigma[i].coeffs, m = d.sigma[i].m;
    for (auto& x : c) x *= factor[i];
    for (auto& x : m) x *= factor[i];
    res.system.sigma.push_back(c);
    res.m_coords.push_back(m);
  }
  for (const auto& col : d.d_a) {
    IntVector rho;
    for (const auto& m : res.m_coords) rho.push_back(dot(col.rho, m));
    res.system.d_a.push_back({col.label, rho});
  }
  return res;
}

}  // namespace

// Simple spherical roots are never doubled: their colors are of type a and the
// closure keeps the set of colors.
ClosureResult closure_with_lattice(const HomogeneousSphericalDatum& d) {
  require_valid(d);
  std::vector<int> factor(d.sigma.size(), 1);
  const auto simple = simple_spherical_roots(d);
  for (std::size_t i = 0; i < d.sigma.size(); ++i) {
    if (simple.count(i)) continue;
    IntVector doubled = d.sigma[i].coeffs;
    for (auto& x : doubled) x *= 2;
    const auto shape = admissible_spherical_root(d.root_system, doubled);
    if (!shape_compatible(d.root_system, doubled, shape, d.s_p)) continue;
    factor[i] = 2;
    if (!validate(build_closure(d, factor).system).ok()) factor[i] = 1;
  }
  return build_closure(d, factor);
}

SphericalSystem spherical_closure(const HomogeneousSphericalDatum& d) { return closure_with_lattice(d).system; }

bool is_spherically_closed(const SphericalSystem& s) {
  if (!validate(s).ok()) return false;
  return spherical_closure(to_datum(s)) == s;
}

std::vector<SystemPart> decompose_parts(const SphericalSystem& s) {
  const RootSystem& r = s.root_system;
  const std::size_t nc = r.components().size();
  std::vector<std::size_t> parent(nc);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  auto unite = [&](std::size_t a, std::size_t b) { parent[find(a)] = find(b); };

  const auto d = to_datum(s);
  const auto colors = full_colors(d);
  for (const auto& g : s.sigma) {
    const auto supp = support(g);
    for (auto v : supp) unite(r.component_of(v), r.component_of(supp.front()));
  }
  for (std::size_t k = 0; k < colors.size(); ++k) {
    const auto& sig = colors[k].sigma_set;
    if (sig.empty()) continue;
    const std::size_t anchor = r.component_of(*sig.begin());
    for (auto v : sig) unite(r.component_of(v), anchor);
    if (k >= s.d_a.size()) continue;
    for (std::size_t i = 0; i < s.sigma.size(); ++i)
      if (s.d_a[k].rho[i] != 0) unite(r.component_of(support(s.sigma[i]).front()), anchor);
  }

  std::map<std::size_t, std::vector<std::size_t>> groups;  // root -> components, ordered
  for (std::size_t c = 0; c < nc; ++c) groups[find(c)].push_back(c);
  std::vector<std::vector<std::size_t>> ordered;
  for (auto& [root, comps] : groups) ordered.push_back(comps);
  std::sort(ordered.begin(), ordered.end());

  std::vector<SystemPart> parts;
  for (const auto& comps : ordered) {
    std::set<std::size_t> verts;
    for (auto c : comps)
      for (int k = 0; k < r.components()[c].rank; ++k) verts.insert(r.offset(c) + static_cast<std::size_t>(k));
    const auto sub = sub_root_system(r, verts);
    SystemPart part;
    part.system.root_system = RootSystem(sub.system.components(), 0);
    part.vertex_index = sub.old_index;
    std::map<std::size_t, std::size_t> new_index;
    for (std::size_t k = 0; k < sub.old_index.size(); ++k) new_index[sub.old_index[k]] = k;
    for (std::size_t i = 0; i < s.sigma.size(); ++i) {
      if (!verts.count(support(s.sigma[i]).front())) continue;
      IntVector c(sub.old_index.size());
      for (std::size_t k = 0; k < c.size(); ++k) c[k] = s.sigma[i][sub.old_index[k]];
      part.system.sigma.push_back(c);
      part.sigma_index.push_back(i);
    }
    for (auto a : s.s_p)
      if (verts.count(a)) part.system.s_p.insert(new_index.at(a));
    for (std::size_t k = 0; k < s.d_a.size(); ++k) {
      const auto& sig = colors[k].sigma_set;
      if (sig.empty() || !verts.count(*sig.begin())) continue;
      IntVector rho;
      for (auto i : part.sigma_index) rho.push_back(s.d_a[k].rho[i]);
      part.system.d_a.push_back({s.d_a[k].label, rho});
      part.color_index.push_back(k);
    }
    parts.push_back(std::move(part));
  }
  return parts;
}

std::vector<SphericalSystem> decompose(const SphericalSystem& s) {
  std::vector<SphericalSystem> out;
  for (auto& p : decompose_parts(s)) out.push_back(std::move(p.system));
  return out;
}

SphericalSystem product(const std::vector<SphericalSystem>& parts) {
  std::vector<Component> comps;
  std::size_t total_rank = 0, total_sigma = 0;
  for (const auto& p : parts) {
    comps.insert(comps.end(), p.root_system.components().begin(), p.root_system.components().end());
    total_rank += p.root_system.rank();
    total_sigma += p.sigma.size();
  }
  SphericalSystem out;
  out.root_system = RootSystem(comps, 0);
  std::size_t vo = 0, so = 0;
  std::set<std::string> labels;
  for (std::size_t pi = 0; pi < parts.size(); ++pi) {
    const auto& p = parts[pi];
    for (const auto& g : p.sigma) {
      IntVector c(total_rank, Int(0));
      std::copy(g.begin(), g.end(), c.begin() + static_cast<std::ptrdiff_t>(vo));
      out.sigma.push_back(c);
    }
    for (auto a : p.s_p) out.s_p.insert(a + vo);
    for (const auto& col : p.d_a) {
      IntVector rho(total_sigma, Int(0));
      std::copy(col.rho.begin(), col.rho.end(), rho.begin() + static_cast<std::ptrdiff_t>(so));
      std::string label = col.label;
      if (labels.count(label)) label += "#" + std::to_string(pi + 1);
      labels.insert(label);
      out.d_a.push_back({label, rho});
    }
    vo += p.root_system.rank();
    so += p.sigma.size();
  }
  return out;
}

}  // namespace sphsmooth
