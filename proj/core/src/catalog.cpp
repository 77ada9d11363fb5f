#include "sphsmooth/catalog.hpp"

#include <algorithm>
#include <map>

#include "catalog_builder.hpp"

namespace sphsmooth {

namespace {

constexpr int kMaxParam = 64;

// All tuples of `k` positive integers with the given sum, in lexicographic order.
void tuples_with_sum(std::size_t k, int sum, Params& cur, std::vector<Params>& out) {
  if (k == 0) {
    if (sum == 0) out.push_back(cur);
    return;
  }
  for (int x = 1; x <= std::min(sum - static_cast<int>(k) + 1, kMaxParam); ++x) {
    cur.push_back(x);
    tuples_with_sum(k - 1, sum - x, cur, out);
    cur.pop_back();
  }
}

void tuples_up_to(std::size_t k, int bound, Params& cur, const std::function<void(const Params&)>& f) {
  if (cur.size() == k) {
    f(cur);
    return;
  }
  for (int x = 1; x <= bound; ++x) {
    cur.push_back(x);
    tuples_up_to(k, bound, cur, f);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Params> CatalogEntry::smallest(std::size_t count) const {
  std::vector<Params> out;
  const std::size_t k = param_names.size();
  if (k == 0) {
    if (count > 0 && in_domain({})) out.push_back({});
    return out;
  }
  for (int sum = static_cast<int>(k); sum <= kMaxParam * static_cast<int>(k) && out.size() < count; ++sum) {
    std::vector<Params> level;
    Params cur;
    tuples_with_sum(k, sum, cur, level);
    for (const auto& p : level) {
      if (out.size() == count) break;
      if (in_domain(p)) out.push_back(p);
    }
  }
  return out;
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    detail::EntryList list;
    detail::add_single_group_entries(list);
    detail::add_multi_module_entries(list);
    std::sort(list.begin(), list.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
    return list;
  }();
  return entries;
}

const CatalogEntry& catalog_entry(int id) {
  for (const auto& e : catalog())
    if (e.id == id) return e;
  throw CatalogError("no catalog entry with id " + std::to_string(id));
}

CatalogInstance instantiate(int id, const Params& params) {
  const auto& e = catalog_entry(id);
  if (params.size() != e.param_names.size())
    throw CatalogError("entry " + std::to_string(id) + " takes " + std::to_string(e.param_names.size()) +
                       " parameter(s), got " + std::to_string(params.size()));
  if (!e.in_domain(params))
    throw CatalogError("parameters " + format_params(e, params) + " outside the domain " + e.domain + " of entry " +
                       std::to_string(id));
  return e.build(params);
}

std::string format_params(const CatalogEntry& e, const Params& p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ", ";
    s += (i < e.param_names.size() ? e.param_names[i] : "p" + std::to_string(i)) + "=" + std::to_string(p[i]);
  }
  return s;
}

void for_each_system_isomorphism(const SphericalSystem& a, const SphericalSystem& b,
                                 const std::function<bool(const SystemIsomorphism&)>& f) {
  const auto& ra = a.root_system;
  const auto& rb = b.root_system;
  if (ra.rank() != rb.rank() || a.sigma.size() != b.sigma.size() || a.s_p.size() != b.s_p.size() ||
      a.d_a.size() != b.d_a.size())
    return;
  for_each_cartan_isomorphism(ra.cartan(), rb.cartan(), [&](const std::vector<std::size_t>& phi) {
    SystemIsomorphism iso;
    iso.vertex_map = phi;
    for (auto v : a.s_p)
      if (!b.s_p.count(phi[v])) return true;
    for (const auto& g : a.sigma) {
      IntVector moved(rb.rank(), Int(0));
      for (std::size_t v = 0; v < g.size(); ++v) moved[phi[v]] = g[v];
      const auto it = std::find(b.sigma.begin(), b.sigma.end(), moved);
      if (it == b.sigma.end()) return true;
      iso.sigma_map.push_back(static_cast<std::size_t>(it - b.sigma.begin()));
    }
    std::vector<bool> used(b.d_a.size(), false);
    for (const auto& c : a.d_a) {
      IntVector moved(b.sigma.size(), Int(0));
      for (std::size_t i = 0; i < c.rho.size(); ++i) moved[iso.sigma_map[i]] = c.rho[i];
      std::size_t hit = b.d_a.size();
      for (std::size_t k = 0; k < b.d_a.size(); ++k)
        if (!used[k] && b.d_a[k].rho == moved) {
          hit = k;
          break;
        }
      if (hit == b.d_a.size()) return true;
      used[hit] = true;
      iso.color_map.push_back(hit);
    }
    return f(iso);
  });
}

std::optional<SystemIsomorphism> systems_isomorphic(const SphericalSystem& a, const SphericalSystem& b) {
  std::optional<SystemIsomorphism> out;
  for_each_system_isomorphism(a, b, [&](const SystemIsomorphism& iso) {
    out = iso;
    return false;
  });
  return out;
}

namespace {

// Match of `c` against one instance, collecting the marking seen through every isomorphism.
std::optional<MatchResult> match_instance(const SphericalSystem& c, const CatalogEntry& e, const Params& p,
                                          const CatalogInstance& inst) {
  std::optional<MatchResult> out;
  std::set<std::set<std::size_t>> seen;
  for_each_system_isomorphism(c, inst.system, [&](const SystemIsomorphism& iso) {
    std::set<std::size_t> pull;
    for (std::size_t i = 0; i < iso.sigma_map.size(); ++i)
      if (inst.marked.count(iso.sigma_map[i])) pull.insert(i);
    if (!out) out = MatchResult{e.id, p, iso, pull, {}};
    seen.insert(std::move(pull));
    return true;
  });
  if (out) out->marking_alternatives.assign(seen.begin(), seen.end());
  return out;
}

void scan(const SphericalSystem& c, const std::function<bool(MatchResult)>& f) {
  const int r = static_cast<int>(c.root_system.rank());
  for (const auto& e : catalog()) {
    bool stop = false;
    Params cur;
    std::vector<Params> candidates;
    tuples_up_to(e.param_names.size(), r + 1, cur, [&](const Params& p) {
      if (e.in_domain(p) && e.rank(p) == r) candidates.push_back(p);
    });
    for (const auto& p : candidates) {
      const auto inst = e.build(p);
      const auto& s = inst.system;
      if (s.sigma.size() != c.sigma.size() || s.s_p.size() != c.s_p.size() || s.d_a.size() != c.d_a.size())
        continue;
      if (auto m = match_instance(c, e, p, inst); m && !f(std::move(*m))) {
        stop = true;
        break;
      }
    }
    if (stop) return;
  }
}

}  // namespace

void require_unambiguous_marking(const MatchResult& m) {
  if (!m.ambiguous()) return;
  const auto& e = catalog_entry(m.entry_id);
  throw AmbiguousMarking("marked spherical roots of entry " + std::to_string(e.id) + " (" + format_params(e, m.params) +
                         ") depend on the chosen isomorphism: " + std::to_string(m.marking_alternatives.size()) +
                         " distinct pullbacks");
}

std::optional<MatchResult> match_component(const SphericalSystem& c) {
  std::optional<MatchResult> out;
  scan(c, [&](MatchResult m) {
    out = std::move(m);
    return false;
  });
  return out;
}

std::vector<MatchResult> all_matches(const SphericalSystem& c) {
  std::vector<MatchResult> out;
  scan(c, [&](MatchResult m) {
    out.push_back(std::move(m));
    return true;
  });
  return out;
}

}  // namespace sphsmooth
