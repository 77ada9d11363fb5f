#include "sphsmooth/smoothness.hpp"

#include <algorithm>
#include <map>

namespace sphsmooth {

namespace {

std::vector<IntVector> rays_of(const HomogeneousSphericalDatum& d, const ColoredCone& c) {
  return extremal_rays(RationalCone(d.lattice_rank(), cone_generators(d, c)));
}

std::string first_bad_divisor(const std::vector<IntVector>& rows, std::size_t cols) {
  const auto snf = smith_normal_form(IntMatrix::from_rows(rows, cols));
  for (const auto& x : snf.diag)
    if (x != 1) return x.str();
  return "";
}

std::string describe(const SphericalSystem& s) {
  std::string out = s.root_system.name() + ", sigma {";
  for (std::size_t i = 0; i < s.sigma.size(); ++i) out += (i ? ", " : "") + to_string(s.sigma[i]);
  return out + "}";
}

// Forced assignment for one marked set; empty string on success.
std::string try_marking(const std::vector<IntVector>& u_set, const ClosureResult& closure,
                        const std::set<std::size_t>& marked, std::vector<MarkedAssignment>& out) {
  out.clear();
  std::set<std::size_t> used;
  for (std::size_t i = 0; i < closure.m_coords.size(); ++i) {
    const auto& g = closure.m_coords[i];
    std::vector<std::size_t> support;
    for (std::size_t k = 0; k < u_set.size(); ++k)
      if (dot(u_set[k], g) != 0) support.push_back(k);
    if (!marked.count(i)) {
      if (!support.empty())
        return "unmarked spherical root " + to_string(closure.system.sigma[i]) + " pairs " +
               dot(u_set[support[0]], g).str() + " with u = " + to_string(u_set[support[0]]);
      continue;
    }
    if (support.empty()) return "no u pairs with marked root " + to_string(closure.system.sigma[i]);
    if (support.size() > 1)
      return "marked root " + to_string(closure.system.sigma[i]) + " pairs nonzero with " +
             std::to_string(support.size()) + " elements of U";
    const auto k = support[0];
    if (dot(u_set[k], g) != -1)
      return "marked root " + to_string(closure.system.sigma[i]) + " pairs " + dot(u_set[k], g).str() +
             " with u = " + to_string(u_set[k]) + ", expected -1";
    if (!used.insert(k).second) return "u = " + to_string(u_set[k]) + " is shared by two marked roots";
    out.push_back({i, g, k});
  }
  return "";
}

constexpr std::size_t kMaxMarkings = 4096;

}  // namespace

FactorialityReport check_condition1(const HomogeneousSphericalDatum& d, const ColoredCone& c) {
  FactorialityReport rep;
  const std::size_t s = d.lattice_rank();
  const auto gens = cone_generators(d, c);
  const RationalCone cone(s, gens);
  rep.rays = extremal_rays(cone);
  const std::size_t dim = cone_dimension(cone);

  std::vector<std::string> fails;
  if (rep.rays.size() != dim)
    fails.push_back("C has " + std::to_string(rep.rays.size()) + " extremal rays but dimension " +
                    std::to_string(dim));
  else if (!is_part_of_basis(rep.rays, s))
    fails.push_back("ray generators are not part of a basis of N (elementary divisor " +
                    first_bad_divisor(rep.rays, s) + ")");

  const std::size_t nv = c.valuation_generators.size();
  std::map<IntVector, std::string> seen;
  for (std::size_t k = nv; k < gens.size(); ++k) {
    const auto& label = c.f_labels[k - nv];
    const auto& rho = gens[k];
    if (is_zero(rho) || content(rho) != 1 || std::find(rep.rays.begin(), rep.rays.end(), rho) == rep.rays.end())
      fails.push_back("rho(" + label + ") = " + to_string(rho) + " is not a primitive ray generator of C");
    auto [it, fresh] = seen.emplace(rho, label);
    if (!fresh) fails.push_back("rho is not injective on F: " + it->second + " and " + label + " both map to " +
                                to_string(rho));
  }
  rep.pass = fails.empty();
  for (std::size_t i = 0; i < fails.size(); ++i) rep.witness += (i ? "; " : "") + fails[i];
  return rep;
}

Condition2Report check_condition2(const HomogeneousSphericalDatum& d, const ColoredCone& c) {
  Condition2Report rep;
  rep.s_f = s_f(d, c.f_labels);
  rep.localized = localize(d, rep.s_f);
  rep.closure = closure_with_lattice(rep.localized);
  rep.parts = decompose_parts(rep.closure.system);
  rep.pass = true;
  for (const auto& part : rep.parts) {
    ComponentOutcome out;
    out.summary = describe(part.system);
    out.has_color = part.system.s_p.size() < part.system.root_system.rank();
    if (out.has_color) {
      const auto matches = all_matches(part.system);
      if (matches.empty()) {
        rep.pass = false;
      } else {
        out.match = matches.front();
        std::set<std::set<std::size_t>> cands;
        for (const auto& m : matches)
          for (const auto& alt : m.marking_alternatives) {
            std::set<std::size_t> lifted;
            for (auto i : alt) lifted.insert(part.sigma_index[i]);
            cands.insert(lifted);
          }
        out.markings.assign(cands.begin(), cands.end());
      }
    }
    rep.components.push_back(std::move(out));
  }
  return rep;
}

Condition3Report check_condition3(const HomogeneousSphericalDatum& d, const ColoredCone& c,
                                  const Condition2Report& cond2) {
  Condition3Report rep;
  std::vector<IntVector> color_rays;
  for (const auto& col : full_colors(cond2.localized))
    if (!is_zero(col.rho)) color_rays.push_back(primitive_generator(col.rho));
  for (const auto& r : rays_of(d, c))
    if (std::find(color_rays.begin(), color_rays.end(), r) == color_rays.end()) rep.u_set.push_back(r);

  // Candidate markings: one choice per matched component.
  std::vector<std::set<std::size_t>> combos{{}};
  for (const auto& comp : cond2.components) {
    if (comp.markings.empty()) continue;
    std::vector<std::set<std::size_t>> next;
    for (const auto& base : combos)
      for (const auto& m : comp.markings) {
        if (next.size() == kMaxMarkings) break;
        auto merged = base;
        merged.insert(m.begin(), m.end());
        next.push_back(std::move(merged));
      }
    combos = std::move(next);
  }

  std::string first_failure;
  std::vector<MarkedAssignment> assignment;
  for (const auto& marked : combos) {
    ++rep.markings_tried;
    const auto why = try_marking(rep.u_set, cond2.closure, marked, assignment);
    if (why.empty()) {
      rep.pass = true;
      rep.marked = marked;
      rep.assignment = assignment;
      rep.witness.clear();
      return rep;
    }
    if (rep.markings_tried == 1) {
      rep.marked = marked;
      first_failure = why;
    }
  }
  rep.witness = first_failure;
  if (combos.size() > 1) rep.witness += " (no alternative marking works either)";
  return rep;
}

SmoothnessReport is_smooth(const HomogeneousSphericalDatum& d, const ColoredCone& c) {
  require_valid(d);
  SmoothnessReport rep;
  rep.cone_findings = validate_colored_cone(d, c);
  if (!rep.cone_findings.ok()) {
    rep.cond1.witness = "(C, F) is not a colored cone";
    rep.cond3.witness = rep.cond1.witness;
    return rep;
  }
  rep.cond1 = check_condition1(d, c);
  rep.cond2 = check_condition2(d, c);
  rep.cond3 = check_condition3(d, c, rep.cond2);
  rep.verdict = rep.cond1.pass && rep.cond2.pass && rep.cond3.pass;
  return rep;
}

}  // namespace sphsmooth
