#include "catalog_builder.hpp"

#include <algorithm>
#include <optional>

namespace sphsmooth::detail {

SystemBuilder::SystemBuilder(std::vector<Component> components) : rs_(std::move(components), 0) {}

std::size_t SystemBuilder::v(int component, int position) const { return rs_.flat({component, position}); }

std::size_t SystemBuilder::root(int component, int first, const std::vector<int>& c) {
  std::map<std::size_t, int> m;
  for (std::size_t k = 0; k < c.size(); ++k)
    if (c[k] != 0) m[v(component, first + static_cast<int>(k))] = c[k];
  return root(m);
}

std::size_t SystemBuilder::root(const std::map<std::size_t, int>& coeffs) {
  IntVector g(rs_.rank(), Int(0));
  for (const auto& [vtx, c] : coeffs) g.at(vtx) = c;
  sigma_.push_back(g);
  return sigma_.size() - 1;
}

std::size_t SystemBuilder::chain(int component, int first, int last) {
  return root(component, first, std::vector<int>(static_cast<std::size_t>(last - first + 1), 1));
}

void SystemBuilder::sp(int component, int first, int last) {
  for (int p = first; p <= last; ++p) s_p_.insert(v(component, p));
}

void SystemBuilder::circles(std::size_t alpha, const std::string& plus, const std::string& minus) {
  circles_.push_back({alpha, plus, minus});
  for (const auto& l : {plus, minus})
    if (std::find(order_.begin(), order_.end(), l) == order_.end()) order_.push_back(l);
}

void SystemBuilder::arrow(std::size_t alpha, std::size_t gamma) { arrows_.insert({alpha, gamma}); }

void SystemBuilder::color(const std::string& label, const std::map<std::size_t, int>& values) {
  explicit_.push_back({label, values});
  order_.push_back(label);
}

CatalogInstance SystemBuilder::build() const {
  const std::size_t n = sigma_.size();
  std::map<std::string, std::vector<std::optional<Int>>> values;
  auto assign = [&](const std::string& label, std::size_t g, const Int& x) {
    auto& row = values.try_emplace(label, std::vector<std::optional<Int>>(n)).first->second;
    if (row[g] && *row[g] != x)
      throw CatalogError("internal: inconsistent pairing for color " + label + " on root " + std::to_string(g));
    row[g] = x;
  };
  auto on_circle = [&](const std::string& label, std::size_t g) {
    return std::any_of(circles_.begin(), circles_.end(), [&](const Circle& c) {
      return c.alpha == g && (c.plus == label || c.minus == label);
    });
  };
  for (const auto& c : circles_) {
    const std::size_t a = support(sigma_[c.alpha]).at(0);
    for (std::size_t g = 0; g < n; ++g) {
      const Int pairing = coroot_on_root(rs_, a, sigma_[g]);
      Int plus;
      if (on_circle(c.plus, g))
        plus = 1;
      else if (on_circle(c.minus, g))
        plus = pairing - 1;
      else if (arrows_.count({c.alpha, g}))
        plus = -1;
      else
        plus = 0;
      assign(c.plus, g, plus);
      assign(c.minus, g, pairing - plus);
    }
  }
  for (const auto& [label, vals] : explicit_) {
    for (std::size_t g = 0; g < n; ++g) {
      auto it = vals.find(g);
      assign(label, g, it == vals.end() ? 0 : it->second);
    }
  }
  CatalogInstance out;
  out.system.root_system = rs_;
  out.system.sigma = sigma_;
  out.system.s_p = s_p_;
  for (const auto& label : order_) {
    IntVector rho;
    for (const auto& x : values.at(label)) rho.push_back(x.value_or(0));
    out.system.d_a.push_back({label, rho});
  }
  out.marked = marked_;
  return out;
}

}  // namespace sphsmooth::detail
