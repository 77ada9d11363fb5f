#include "sphsmooth/root_system.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

namespace sphsmooth {

std::string to_string(const SimpleRootId& id) {
  return std::to_string(id.component) + "." + std::to_string(id.position);
}

SimpleRootId parse_root_id(const std::string& text) {
  const auto dot = text.find('.');
  if (dot == std::string::npos || dot == 0 || dot + 1 == text.size())
    throw RootSystemError("malformed simple root id '" + text + "', expected component.position");
  try {
    std::size_t used = 0;
    const int c = std::stoi(text.substr(0, dot), &used);
    if (used != dot) throw std::invalid_argument("");
    const std::string rest = text.substr(dot + 1);
    const int p = std::stoi(rest, &used);
    if (used != rest.size()) throw std::invalid_argument("");
    return {c, p};
  } catch (const std::exception&) {
    throw RootSystemError("malformed simple root id '" + text + "'");
  }
}

IntMatrix simple_cartan(char type, int n) {
  const auto N = static_cast<std::size_t>(n);
  IntMatrix m(N, N);
  for (std::size_t i = 0; i < N; ++i) m(i, i) = 2;
  auto bond = [&](std::size_t i, std::size_t j) { m(i, j) = -1, m(j, i) = -1; };
  switch (type) {
    case 'A':
    case 'B':
    case 'C':
      for (std::size_t i = 0; i + 1 < N; ++i) bond(i, i + 1);
      if (type == 'B') m(N - 1, N - 2) = -2;
      if (type == 'C') m(N - 2, N - 1) = -2;
      break;
    case 'D':
      for (std::size_t i = 0; i + 2 < N; ++i) bond(i, i + 1);
      bond(N - 3, N - 1);
      break;
    case 'E':
      bond(0, 2);
      bond(1, 3);
      for (std::size_t i = 2; i + 1 < N; ++i) bond(i, i + 1);
      break;
    case 'F':
      bond(0, 1), bond(1, 2), bond(2, 3);
      m(2, 1) = -2;
      break;
    case 'G':
      m(0, 1) = -3;
      m(1, 0) = -1;
      break;
    default:
      throw RootSystemError(std::string("unknown root system type '") + type + "'");
  }
  return m;
}

namespace {

void check_component(const Component& c) {
  const bool ok = (c.type == 'A' && c.rank >= 1) || ((c.type == 'B' || c.type == 'C') && c.rank >= 2) ||
                  (c.type == 'D' && c.rank >= 4) || (c.type == 'E' && c.rank >= 6 && c.rank <= 8) ||
                  (c.type == 'F' && c.rank == 4) || (c.type == 'G' && c.rank == 2);
  if (!ok)
    throw RootSystemError(std::string("invalid simple component ") + c.type + std::to_string(c.rank));
}

std::vector<Component> normalized(const std::vector<Component>& in) {
  std::vector<Component> out;
  for (auto c : in) {
    if ((c.type == 'B' || c.type == 'C') && c.rank == 1) c.type = 'A';
    if (c.type == 'D' && c.rank == 3) c.type = 'A';
    if (c.type == 'D' && c.rank == 2) {
      out.push_back({'A', 1});
      c = {'A', 1};
    }
    check_component(c);
    out.push_back(c);
  }
  return out;
}

}  // namespace

RootSystem::RootSystem(std::vector<Component> components, int torus_rank)
    : components_(normalized(components)), torus_rank_(torus_rank) {
  if (torus_rank < 0) throw RootSystemError("negative torus rank");
  std::size_t total = 0;
  for (std::size_t c = 0; c < components_.size(); ++c) {
    offsets_.push_back(total);
    for (int k = 0; k < components_[c].rank; ++k) component_of_.push_back(c);
    total += static_cast<std::size_t>(components_[c].rank);
  }
  cartan_ = IntMatrix(total, total);
  for (std::size_t c = 0; c < components_.size(); ++c) {
    const auto block = simple_cartan(components_[c].type, components_[c].rank);
    for (std::size_t i = 0; i < block.rows(); ++i)
      for (std::size_t j = 0; j < block.cols(); ++j) cartan_(offsets_[c] + i, offsets_[c] + j) = block(i, j);
  }
}

bool RootSystem::contains(const SimpleRootId& id) const {
  return id.component >= 0 && static_cast<std::size_t>(id.component) < components_.size() &&
         id.position >= 1 && id.position <= components_[static_cast<std::size_t>(id.component)].rank;
}

std::size_t RootSystem::flat(const SimpleRootId& id) const {
  if (!contains(id)) throw RootSystemError("simple root " + to_string(id) + " not in " + name());
  return offsets_[static_cast<std::size_t>(id.component)] + static_cast<std::size_t>(id.position - 1);
}

SimpleRootId RootSystem::id(std::size_t flat_index) const {
  const std::size_t c = component_of_.at(flat_index);
  return {static_cast<int>(c), static_cast<int>(flat_index - offsets_[c]) + 1};
}

std::string RootSystem::name() const {
  std::ostringstream os;
  for (std::size_t c = 0; c < components_.size(); ++c)
    os << (c ? "x" : "") << components_[c].type << components_[c].rank;
  if (torus_rank_ > 0) os << (components_.empty() ? "" : "x") << "T" << torus_rank_;
  if (components_.empty() && torus_rank_ == 0) os << "trivial";
  return os.str();
}

Weight operator+(const Weight& a, const Weight& b) {
  Weight w = a;
  for (std::size_t i = 0; i < w.fw.size(); ++i) w.fw[i] += b.fw.at(i);
  for (std::size_t i = 0; i < w.torus.size(); ++i) w.torus[i] += b.torus.at(i);
  return w;
}

Weight operator*(const Int& k, const Weight& w) {
  Weight out = w;
  for (auto& x : out.fw) x *= k;
  for (auto& x : out.torus) x *= k;
  return out;
}

Weight zero_weight(const RootSystem& r) {
  return {IntVector(r.rank(), Int(0)), IntVector(static_cast<std::size_t>(r.torus_rank()), Int(0))};
}

IntMatrix cartan_matrix(const RootSystem& r) { return r.cartan(); }

Int coroot_pairing(const RootSystem& r, const SimpleRootId& a, const Weight& w) {
  return w.fw.at(r.flat(a));
}

Int coroot_on_root(const RootSystem& r, std::size_t i, const IntVector& coeffs) {
  Int s = 0;
  for (std::size_t j = 0; j < coeffs.size(); ++j)
    if (coeffs[j] != 0) s += coeffs[j] * r.cartan()(i, j);
  return s;
}

Weight root_as_weight(const RootSystem& r, const IntVector& coeffs) {
  if (coeffs.size() != r.rank()) throw RootSystemError("root coefficient vector has wrong length");
  Weight w = zero_weight(r);
  for (std::size_t i = 0; i < r.rank(); ++i) w.fw[i] = coroot_on_root(r, i, coeffs);
  return w;
}

std::vector<std::size_t> support(const IntVector& coeffs) {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 0) s.push_back(i);
  return s;
}

void for_each_cartan_isomorphism(const IntMatrix& a, const IntMatrix& b,
                                 const std::function<bool(const std::vector<std::size_t>&)>& f) {
  const std::size_t n = a.rows();
  if (b.rows() != n) return;
  auto signature = [](const IntMatrix& m, std::size_t i) {
    std::vector<Int> s;
    for (std::size_t j = 0; j < m.cols(); ++j) s.push_back(m(i, j));
    std::vector<Int> t;
    for (std::size_t j = 0; j < m.rows(); ++j) t.push_back(m(j, i));
    std::sort(s.begin(), s.end());
    std::sort(t.begin(), t.end());
    s.insert(s.end(), t.begin(), t.end());
    return s;
  };
  std::vector<std::vector<Int>> sa(n), sb(n);
  for (std::size_t i = 0; i < n; ++i) sa[i] = signature(a, i), sb[i] = signature(b, i);

  // Visit source vertices so that each (after the first of a component) has a mapped neighbour.
  std::vector<std::size_t> order;
  std::vector<bool> seen(n, false);
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::queue<std::size_t> q;
    q.push(s);
    seen[s] = true;
    while (!q.empty()) {
      const std::size_t v = q.front();
      q.pop();
      order.push_back(v);
      for (std::size_t w = 0; w < n; ++w)
        if (!seen[w] && a(v, w) != 0) seen[w] = true, q.push(w);
    }
  }

  std::vector<std::size_t> map(n, n);
  std::vector<bool> used(n, false);
  bool stop = false;
  std::function<void(std::size_t)> rec = [&](std::size_t depth) {
    if (stop) return;
    if (depth == n) {
      if (!f(map)) stop = true;
      return;
    }
    const std::size_t s = order[depth];
    for (std::size_t t = 0; t < n && !stop; ++t) {
      if (used[t] || sa[s] != sb[t]) continue;
      bool ok = true;
      for (std::size_t d = 0; d < depth && ok; ++d) {
        const std::size_t s2 = order[d];
        ok = a(s, s2) == b(t, map[s2]) && a(s2, s) == b(map[s2], t);
      }
      if (!ok) continue;
      map[s] = t;
      used[t] = true;
      rec(depth + 1);
      used[t] = false;
      map[s] = n;
    }
  };
  rec(0);
}

std::vector<DiagramAutomorphism> diagram_automorphisms(const RootSystem& r) {
  std::vector<DiagramAutomorphism> out;
  for_each_cartan_isomorphism(r.cartan(), r.cartan(), [&](const std::vector<std::size_t>& m) {
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = 0; j < m.size(); ++j)
        if (r.cartan()(m[i], m[j]) != r.cartan()(i, j))
          throw RootSystemError("internal: automorphism does not preserve the Cartan matrix");
    DiagramAutomorphism a{m, {}};
    for (std::size_t c = 0; c < r.components().size(); ++c)
      a.component_permutation.push_back(r.component_of(m[r.offset(c)]));
    out.push_back(std::move(a));
    return true;
  });
  return out;
}

SubRootSystem sub_root_system(const RootSystem& r, const std::set<SimpleRootId>& subset) {
  std::set<std::size_t> flat;
  for (const auto& id : subset) flat.insert(r.flat(id));
  return sub_root_system(r, flat);
}

SubRootSystem sub_root_system(const RootSystem& r, const std::set<std::size_t>& subset) {
  std::vector<std::size_t> verts(subset.begin(), subset.end());
  for (auto v : verts)
    if (v >= r.rank()) throw RootSystemError("vertex index out of range");
  // connected components of the induced sub-diagram, ordered by smallest vertex
  std::vector<std::vector<std::size_t>> parts;
  std::set<std::size_t> left(verts.begin(), verts.end());
  while (!left.empty()) {
    std::vector<std::size_t> part{*left.begin()};
    left.erase(left.begin());
    for (std::size_t k = 0; k < part.size(); ++k)
      for (auto it = left.begin(); it != left.end();) {
        if (r.cartan()(part[k], *it) != 0) {
          part.push_back(*it);
          it = left.erase(it);
        } else {
          ++it;
        }
      }
    std::sort(part.begin(), part.end());
    parts.push_back(part);
  }

  std::vector<Component> comps;
  std::vector<std::size_t> old_index;
  for (const auto& part : parts) {
    const int m = static_cast<int>(part.size());
    IntMatrix sub(part.size(), part.size());
    for (std::size_t i = 0; i < part.size(); ++i)
      for (std::size_t j = 0; j < part.size(); ++j) sub(i, j) = r.cartan()(part[i], part[j]);
    std::string candidates = "ABCDEFG";
    const char parent = r.components()[r.component_of(part.front())].type;
    candidates.insert(candidates.begin(), parent);
    bool found = false;
    for (char t : candidates) {
      const Component c{t, m};
      try {
        check_component(c);
      } catch (const RootSystemError&) {
        continue;
      }
      const auto std_cartan = simple_cartan(t, m);
      std::vector<std::size_t> image;
      for_each_cartan_isomorphism(std_cartan, sub, [&](const std::vector<std::size_t>& map) {
        image = map;
        return false;
      });
      if (image.empty()) continue;
      comps.push_back(c);
      for (auto k : image) old_index.push_back(part[k]);
      found = true;
      break;
    }
    if (!found) throw RootSystemError("internal: sub-diagram matches no simple type");
  }
  return {RootSystem(comps, r.torus_rank()), old_index};
}

}  // namespace sphsmooth
