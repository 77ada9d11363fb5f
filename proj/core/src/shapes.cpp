#include <algorithm>
#include <sstream>

#include "sphsmooth/root_system.hpp"

namespace sphsmooth {

std::string to_string(ShapeTag t) {
  switch (t) {
    case ShapeTag::Alpha: return "alpha";
    case ShapeTag::TwoAlpha: return "2alpha";
    case ShapeTag::AlphaPlusAlpha: return "alpha+alpha'";
    case ShapeTag::AChain: return "a-chain";
    case ShapeTag::DThree: return "d3";
    case ShapeTag::BChain: return "b-chain";
    case ShapeTag::BChainDoubled: return "2b-chain";
    case ShapeTag::BThree: return "b3";
    case ShapeTag::CChain: return "c-chain";
    case ShapeTag::DChain: return "d-chain";
    case ShapeTag::FFour: return "f4";
    case ShapeTag::GShort: return "g2-short";
    case ShapeTag::GMiddle: return "g2-middle";
    case ShapeTag::GDoubled: return "g2-doubled";
  }
  return "?";
}

namespace {

using Pattern = std::vector<int>;

// 1-based positions lo..hi as 0-based indices
std::set<std::size_t> range(int lo, int hi) {
  std::set<std::size_t> s;
  for (int k = lo; k <= hi; ++k) s.insert(static_cast<std::size_t>(k - 1));
  return s;
}

struct Match {
  ShapeTag tag;
  std::set<std::size_t> spp;  // positions in the Bourbaki labelling of the support
};

// Shapes on a connected support of the given type, coefficients in Bourbaki order.
std::optional<Match> classify_pattern(const Component& c, const Pattern& p) {
  const int m = c.rank;
  auto all = [&](int v) { return std::all_of(p.begin(), p.end(), [v](int x) { return x == v; }); };
  switch (c.type) {
    case 'A':
      if (m == 1 && p[0] == 1) return Match{ShapeTag::Alpha, {}};
      if (m == 1 && p[0] == 2) return Match{ShapeTag::TwoAlpha, {}};
      if (m >= 2 && all(1)) return Match{ShapeTag::AChain, range(2, m - 1)};
      if (m == 3 && p == Pattern{1, 2, 1}) return Match{ShapeTag::DThree, {0, 2}};
      break;
    case 'B':
      if (all(1)) return Match{ShapeTag::BChain, range(2, m - 1)};
      if (all(2)) return Match{ShapeTag::BChainDoubled, range(2, m)};
      if (m == 3 && p == Pattern{1, 2, 3}) return Match{ShapeTag::BThree, {0, 1}};
      break;
    case 'C':
      if (m == 2 && all(1)) return Match{ShapeTag::BChain, {}};
      if (m == 2 && all(2)) return Match{ShapeTag::BChainDoubled, {0}};
      if (m >= 3) {
        Pattern want(static_cast<std::size_t>(m), 2);
        want.front() = 1;
        want.back() = 1;
        if (p == want) return Match{ShapeTag::CChain, range(3, m)};
      }
      break;
    case 'D': {
      Pattern want(static_cast<std::size_t>(m), 2);
      want[static_cast<std::size_t>(m - 2)] = 1;
      want[static_cast<std::size_t>(m - 1)] = 1;
      if (p == want) return Match{ShapeTag::DChain, range(2, m)};
      break;
    }
    case 'F':
      if (p == Pattern{1, 2, 3, 2}) return Match{ShapeTag::FFour, {0, 1, 2}};
      break;
    case 'G':
      if (p == Pattern{1, 1}) return Match{ShapeTag::GShort, {}};
      if (p == Pattern{2, 1}) return Match{ShapeTag::GMiddle, {1}};
      if (p == Pattern{4, 2}) return Match{ShapeTag::GDoubled, {1}};
      break;
    default:
      break;
  }
  return std::nullopt;
}

std::string describe(const IntVector& coeffs) {
  std::ostringstream os;
  os << to_string(coeffs);
  return os.str();
}

}  // namespace

// D₃ patterns are handled through the A₃ presentation: α₁+2α₂+α₃ with the branch
// vertex in the middle is accepted as the DThree shape on any A₃-shaped support.
ShapeResult admissible_spherical_root(const RootSystem& r, const IntVector& coeffs) {
  ShapeResult res;
  if (coeffs.size() != r.rank()) {
    res.reasons.push_back("coefficient vector has length " + std::to_string(coeffs.size()) +
                          ", expected " + std::to_string(r.rank()));
    return res;
  }
  for (const auto& c : coeffs)
    if (c < 0) {
      res.reasons.push_back("negative coefficient in " + describe(coeffs));
      return res;
    }
  const auto supp = support(coeffs);
  if (supp.empty()) {
    res.reasons.push_back("zero vector is not a spherical root");
    return res;
  }
  if (supp.size() == 2 && r.cartan()(supp[0], supp[1]) == 0) {
    if (coeffs[supp[0]] == 1 && coeffs[supp[1]] == 1) {
      res.tag = ShapeTag::AlphaPlusAlpha;
      return res;
    }
    res.reasons.push_back("orthogonal pair with coefficients other than 1 in " + describe(coeffs));
    return res;
  }
  const auto sub = sub_root_system(r, std::set<std::size_t>(supp.begin(), supp.end()));
  if (sub.system.components().size() != 1) {
    res.reasons.push_back("support of " + describe(coeffs) + " is not connected");
    return res;
  }
  const Component comp = sub.system.components().front();
  const auto autos = diagram_automorphisms(sub.system);
  for (const auto& a : autos) {
    Pattern p;
    for (std::size_t k = 0; k < sub.old_index.size(); ++k)
      p.push_back(coeffs[sub.old_index[a.vertex_map[k]]].convert_to<int>());
    if (auto m = classify_pattern(comp, p)) {
      res.tag = m->tag;
      for (auto k : m->spp) res.spp.insert(sub.old_index[a.vertex_map[k]]);
      return res;
    }
  }
  res.reasons.push_back("coefficients " + describe(coeffs) + " on a support of type " +
                        std::string(1, comp.type) + std::to_string(comp.rank) +
                        " match no admissible shape");
  return res;
}

bool shape_compatible(const RootSystem& r, const IntVector& coeffs, const ShapeResult& shape,
                      const std::set<std::size_t>& s_p) {
  if (!shape.tag) return false;
  for (auto v : shape.spp)
    if (!s_p.count(v)) return false;
  for (auto b : s_p)
    if (coroot_on_root(r, b, coeffs) != 0) return false;
  return true;
}

}  // namespace sphsmooth
