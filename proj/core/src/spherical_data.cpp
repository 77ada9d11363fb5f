#include "sphsmooth/spherical_data.hpp"

#include <algorithm>
#include <sstream>

namespace sphsmooth {

std::string to_string(ColorKind k) {
  switch (k) {
    case ColorKind::A: return "a";
    case ColorKind::TwoA: return "2a";
    case ColorKind::B: return "b";
  }
  return "?";
}

std::string ValidationReport::summary() const {
  std::ostringstream os;
  for (const auto& f : findings) os << f.code << ": " << f.message << '\n';
  return os.str();
}

ValidationError::ValidationError(ValidationReport r)
    : std::runtime_error("validation failed:\n" + r.summary()), report_(std::move(r)) {}

IntVector coroot_restriction(const HomogeneousSphericalDatum& d, std::size_t alpha) {
  IntVector v;
  for (const auto& w : d.m_basis) v.push_back(w.fw.at(alpha));
  return v;
}

namespace {

IntVector flatten(const Weight& w) {
  IntVector v = w.fw;
  v.insert(v.end(), w.torus.begin(), w.torus.end());
  return v;
}

bool is_unit(const IntVector& v, Int value, std::size_t& where) {
  const auto s = support(v);
  if (s.size() != 1 || v[s[0]] != value) return false;
  where = s[0];
  return true;
}

std::string root_name(const RootSystem& r, std::size_t flat) { return to_string(r.id(flat)); }

}  // namespace

std::optional<IntVector> m_coordinates(const std::vector<Weight>& basis, const Weight& w) {
  std::vector<IntVector> rows;
  for (const auto& b : basis) rows.push_back(flatten(b));
  const auto x = solve_in_basis(rows, flatten(w));
  if (!x) return std::nullopt;
  IntVector out;
  for (const auto& q : *x) {
    if (boost::multiprecision::denominator(q) != 1) return std::nullopt;
    out.push_back(boost::multiprecision::numerator(q));
  }
  return out;
}

std::set<std::size_t> compute_s_p(const RootSystem& r, const std::vector<Weight>& m_basis) {
  std::set<std::size_t> out;
  for (std::size_t a = 0; a < r.rank(); ++a)
    if (std::all_of(m_basis.begin(), m_basis.end(), [a](const Weight& w) { return w.fw.at(a) == 0; }))
      out.insert(a);
  return out;
}

std::map<std::size_t, std::size_t> simple_spherical_roots(const HomogeneousSphericalDatum& d) {
  std::map<std::size_t, std::size_t> out;
  for (std::size_t i = 0; i < d.sigma.size(); ++i) {
    std::size_t a = 0;
    if (is_unit(d.sigma[i].coeffs, 1, a)) out[i] = a;
  }
  return out;
}

std::set<std::size_t> sigma_set_of(const HomogeneousSphericalDatum& d, const ColorA& c) {
  std::set<std::size_t> out;
  for (const auto& [i, a] : simple_spherical_roots(d))
    if (c.rho.size() == d.sigma[i].m.size() && dot(c.rho, d.sigma[i].m) == 1) out.insert(a);
  return out;
}

ValidationReport validate(const HomogeneousSphericalDatum& d) {
  ValidationReport rep;
  auto add = [&](std::string code, std::string msg) { rep.findings.push_back({std::move(code), std::move(msg)}); };
  const RootSystem& r = d.root_system;
  const std::size_t s = d.lattice_rank();
  const auto torus = static_cast<std::size_t>(r.torus_rank());

  for (std::size_t i = 0; i < s; ++i)
    if (d.m_basis[i].fw.size() != r.rank() || d.m_basis[i].torus.size() != torus) {
      add("basis-shape", "basis weight " + std::to_string(i + 1) + " has wrong coordinate count");
      return rep;
    }
  {
    std::vector<IntVector> rows;
    for (const auto& w : d.m_basis) rows.push_back(flatten(w));
    if (matrix_rank(rows, r.rank() + torus) != s) add("basis-dependent", "basis weights are linearly dependent");
  }
  bool shapes_ok = true;
  for (std::size_t i = 0; i < d.sigma.size(); ++i) {
    const auto& g = d.sigma[i];
    const std::string name = "spherical root " + std::to_string(i + 1);
    if (g.coeffs.size() != r.rank() || g.m.size() != s) {
      add("root-shape", name + " has wrong coordinate count");
      shapes_ok = false;
      continue;
    }
    Weight w = zero_weight(r);
    for (std::size_t k = 0; k < s; ++k) w = w + g.m[k] * d.m_basis[k];
    if (!(w == root_as_weight(r, g.coeffs)))
      add("root-weight", name + " " + to_string(g.coeffs) + ": M-coordinates do not reproduce its weight");
    if (content(g.m) != 1)
      add("root-not-primitive", name + " " + to_string(g.coeffs) + " is not primitive in M");
    const auto shape = admissible_spherical_root(r, g.coeffs);
    if (!shape.tag) {
      for (const auto& why : shape.reasons) add("root-inadmissible", name + ": " + why);
    } else if (!shape_compatible(r, g.coeffs, shape, d.s_p)) {
      add("root-sp-incompatible", name + " " + to_string(g.coeffs) + " (" + to_string(*shape.tag) +
                                      ") is not compatible with S^p");
    }
  }
  if (!shapes_ok) return rep;
  {
    std::vector<IntVector> rows;
    for (const auto& g : d.sigma) rows.push_back(g.m);
    if (matrix_rank(rows, s) != d.sigma.size()) add("roots-dependent", "spherical roots are linearly dependent");
  }
  for (auto a : d.s_p) {
    if (a >= r.rank()) {
      add("sp-range", "S^p contains an unknown simple root");
      return rep;
    }
    if (!is_zero(coroot_restriction(d, a)))
      add("sp-not-orthogonal", "simple root " + root_name(r, a) + " in S^p pairs nonzero with M");
  }
  std::set<std::string> labels;
  for (const auto& c : d.d_a) {
    if (c.label.empty() || !labels.insert(c.label).second) add("color-label", "color labels must be unique and nonempty");
    if (c.rho.size() != s) {
      add("color-shape", "color " + c.label + " has wrong coordinate count");
      return rep;
    }
    if (sigma_set_of(d, c).empty())
      add("color-unclaimed", "color " + c.label + " does not pair to 1 with any simple spherical root");
    for (std::size_t i = 0; i < d.sigma.size(); ++i) {
      const Int v = dot(c.rho, d.sigma[i].m);
      std::size_t a = 0;
      if (v > 1 || (v == 1 && !is_unit(d.sigma[i].coeffs, 1, a)))
        add("color-pairing", "color " + c.label + " pairs " + v.str() + " with spherical root " +
                                 to_string(d.sigma[i].coeffs));
    }
  }
  for (const auto& [i, a] : simple_spherical_roots(d)) {
    std::vector<const ColorA*> moved;
    for (const auto& c : d.d_a)
      if (dot(c.rho, d.sigma[i].m) == 1) moved.push_back(&c);
    if (moved.size() != 2) {
      add("color-count", "simple spherical root " + root_name(r, a) + " has " + std::to_string(moved.size()) +
                             " colors pairing 1, expected 2");
      continue;
    }
    IntVector sum = moved[0]->rho;
    for (std::size_t k = 0; k < s; ++k) sum[k] += moved[1]->rho[k];
    if (sum != coroot_restriction(d, a))
      add("color-sum", "colors of " + root_name(r, a) + " do not sum to the coroot restricted to M");
  }
  for (const auto& g : d.sigma) {
    std::size_t a = 0;
    if (!is_unit(g.coeffs, 2, a)) continue;
    for (const auto& x : coroot_restriction(d, a))
      if (x % 2 != 0) {
        add("half-coroot", "half coroot of " + root_name(r, a) + " is not integral on M");
        break;
      }
  }
  return rep;
}

void require_valid(const HomogeneousSphericalDatum& d) {
  auto rep = validate(d);
  if (!rep.ok()) throw ValidationError(std::move(rep));
}

std::vector<Color> full_colors(const HomogeneousSphericalDatum& d) {
  const RootSystem& r = d.root_system;
  std::vector<Color> out;
  for (const auto& c : d.d_a) out.push_back({c.label, ColorKind::A, c.rho, {}});

  std::map<std::size_t, std::size_t> simple_root;   // α -> sigma index, α ∈ Σ
  std::map<std::size_t, std::size_t> doubled_root;  // α -> sigma index, 2α ∈ Σ
  for (std::size_t i = 0; i < d.sigma.size(); ++i) {
    std::size_t a = 0;
    if (is_unit(d.sigma[i].coeffs, 1, a)) simple_root[a] = i;
    if (is_unit(d.sigma[i].coeffs, 2, a)) doubled_root[a] = i;
  }
  std::map<std::size_t, std::size_t> b_color;  // α -> index in out
  for (std::size_t a = 0; a < r.rank(); ++a) {
    if (d.s_p.count(a)) continue;
    if (auto it = simple_root.find(a); it != simple_root.end()) {
      std::size_t n = 0;
      for (std::size_t k = 0; k < d.d_a.size(); ++k)
        if (dot(d.d_a[k].rho, d.sigma[it->second].m) == 1) out[k].sigma_set.insert(a), ++n;
      if (n != 2) {
        ValidationReport rep;
        rep.findings.push_back({"color-count", "simple spherical root " + root_name(r, a) + " has " +
                                                   std::to_string(n) + " colors, expected 2"});
        throw ValidationError(rep);
      }
      continue;
    }
    IntVector rho = coroot_restriction(d, a);
    if (doubled_root.count(a)) {
      for (auto& x : rho) {
        if (x % 2 != 0) {
          ValidationReport rep;
          rep.findings.push_back({"half-coroot", "half coroot of " + root_name(r, a) + " is not integral on M"});
          throw ValidationError(rep);
        }
        x /= 2;
      }
      out.push_back({"2a:" + root_name(r, a), ColorKind::TwoA, rho, {a}});
      continue;
    }
    // D_α = D_β for orthogonal α, β with α + β ∈ Σ
    std::optional<std::size_t> partner;
    for (const auto& [b, idx] : b_color) {
      if (r.cartan()(a, b) != 0) continue;
      IntVector sum(r.rank(), Int(0));
      sum[a] = 1;
      sum[b] = 1;
      for (const auto& g : d.sigma)
        if (g.coeffs == sum) partner = idx;
    }
    if (partner) {
      out[*partner].sigma_set.insert(a);
      b_color[a] = *partner;
      continue;
    }
    b_color[a] = out.size();
    out.push_back({"b:" + root_name(r, a), ColorKind::B, rho, {a}});
  }
  return out;
}

std::vector<IntVector> valuation_halfspaces(const HomogeneousSphericalDatum& d) {
  std::vector<IntVector> out;
  for (const auto& g : d.sigma) out.push_back(g.m);
  return out;
}

std::vector<IntVector> cone_generators(const HomogeneousSphericalDatum& d, const ColoredCone& c) {
  const auto colors = full_colors(d);
  std::vector<IntVector> gens = c.valuation_generators;
  for (const auto& label : c.f_labels) {
    auto it = std::find_if(colors.begin(), colors.end(), [&](const Color& col) { return col.label == label; });
    if (it == colors.end()) {
      ValidationReport rep;
      rep.findings.push_back({"unknown-color", "F contains unknown color '" + label + "'"});
      throw ValidationError(rep);
    }
    gens.push_back(it->rho);
  }
  return gens;
}

ValidationReport validate_colored_cone(const HomogeneousSphericalDatum& d, const ColoredCone& c) {
  ValidationReport rep;
  const std::size_t s = d.lattice_rank();
  for (const auto& u : c.valuation_generators)
    if (u.size() != s) {
      rep.findings.push_back({"generator-shape", "cone generator " + to_string(u) + " has wrong length"});
      return rep;
    }
  std::vector<IntVector> gens;
  try {
    gens = cone_generators(d, c);
  } catch (const ValidationError& e) {
    return e.report();
  }
  const auto half = valuation_halfspaces(d);
  for (const auto& u : c.valuation_generators)
    for (const auto& g : half)
      if (dot(u, g) > 0) {
        rep.findings.push_back({"generator-outside-V", "valuation generator " + to_string(u) +
                                                           " pairs positively with spherical root " + to_string(g)});
        break;
      }
  const RationalCone cone(s, gens);
  if (!cones_meet_interior(cone, half))
    rep.findings.push_back({"interior-misses-V", "relative interior of C does not meet the valuation cone"});
  if (!is_strictly_convex(cone))
    rep.findings.push_back({"not-strictly-convex", "C contains a line"});
  for (std::size_t k = c.valuation_generators.size(); k < gens.size(); ++k)
    if (is_zero(gens[k]))
      rep.findings.push_back({"zero-color", "color " + c.f_labels[k - c.valuation_generators.size()] +
                                                " in F has rho = 0"});
  return rep;
}

std::set<std::size_t> s_f(const HomogeneousSphericalDatum& d, const std::vector<std::string>& f_labels) {
  const std::set<std::string> f(f_labels.begin(), f_labels.end());
  std::set<std::size_t> out;
  for (std::size_t a = 0; a < d.root_system.rank(); ++a) out.insert(a);
  for (const auto& c : full_colors(d))
    if (!f.count(c.label))
      for (auto a : c.sigma_set) out.erase(a);
  return out;
}

}  // namespace sphsmooth
