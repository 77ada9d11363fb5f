#include "sphsmooth/diagram.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace sphsmooth {

namespace {

bool in_colors_of(const std::vector<DiagramCircle>& circles, const std::vector<std::size_t>& circle_of_sigma_above,
                  const std::vector<std::size_t>& circle_of_sigma_below, std::size_t sigma, const std::string& label) {
  const auto none = circles.size();
  const auto up = circle_of_sigma_above[sigma], down = circle_of_sigma_below[sigma];
  return (up != none && circles[up].color == label) || (down != none && circles[down].color == label);
}

std::string vertex_name(const RootSystem& r, std::size_t v) { return to_string(r.id(v)); }

}  // namespace

DiagramDocument build_diagram(const SphericalSystem& s, const std::set<std::size_t>& marked) {
  const auto rep = validate(s);
  if (!rep.ok()) throw DiagramError("cannot draw an invalid system: " + rep.summary());
  const auto& r = s.root_system;
  DiagramDocument d;
  d.root_system = r;
  d.s_p = s.s_p;

  for (std::size_t a = 0; a < r.rank(); ++a)
    for (std::size_t b = a + 1; b < r.rank(); ++b) {
      const int ab = std::abs(r.cartan(a, b)), ba = std::abs(r.cartan(b, a));
      if (ab == 0) continue;
      d.edges.push_back({a, b, std::max(ab, ba), ab < ba});
    }

  std::set<std::size_t> covered;
  for (std::size_t i = 0; i < s.sigma.size(); ++i) {
    RootDecoration dec;
    dec.sigma = i;
    const auto shape = admissible_spherical_root(r, s.sigma[i]);
    if (!shape.tag) throw DiagramError("spherical root " + to_string(s.sigma[i]) + " has no drawable shape");
    dec.tag = *shape.tag;
    dec.support = support(s.sigma[i]);
    for (auto v : dec.support) dec.coefficients.push_back(s.sigma[i][v]), covered.insert(v);
    dec.marked = marked.count(i) > 0;
    d.roots.push_back(std::move(dec));
  }
  for (std::size_t v = 0; v < r.rank(); ++v)
    if (!s.s_p.count(v) && !covered.count(v)) d.ringed.insert(v);

  const std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> above(s.sigma.size(), none), below(s.sigma.size(), none);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // (plus color, minus color) per simple root
  std::vector<std::size_t> simple_sigma;
  for (std::size_t i = 0; i < s.sigma.size(); ++i) {
    const auto supp = support(s.sigma[i]);
    if (supp.size() != 1 || s.sigma[i][supp[0]] != 1) continue;
    std::vector<std::size_t> own;
    for (std::size_t k = 0; k < s.d_a.size(); ++k)
      if (s.d_a[k].rho[i] == 1) own.push_back(k);
    if (own.size() != 2) throw DiagramError("simple spherical root without two colors");
    auto small = [&](std::size_t k) {
      return std::all_of(s.d_a[k].rho.begin(), s.d_a[k].rho.end(), [](const Int& x) { return x >= -1 && x <= 1; });
    };
    if (!small(own[0]) && small(own[1])) std::swap(own[0], own[1]);
    if (!small(own[0])) throw DiagramError("no color over " + vertex_name(r, supp[0]) + " has pairings in {-1,0,1}");
    above[i] = d.circles.size();
    d.circles.push_back({supp[0], CirclePlace::Above, s.d_a[own[0]].label});
    below[i] = d.circles.size();
    d.circles.push_back({supp[0], CirclePlace::Below, s.d_a[own[1]].label});
    pairs.emplace_back(own[0], own[1]);
    simple_sigma.push_back(i);
  }

  std::map<std::string, std::vector<std::size_t>> by_label;
  std::vector<std::string> order;
  for (std::size_t c = 0; c < d.circles.size(); ++c) {
    auto& group = by_label[d.circles[c].color];
    if (group.empty()) order.push_back(d.circles[c].color);
    group.push_back(c);
  }
  for (const auto& l : order)
    if (by_label[l].size() > 1) d.lines.push_back(by_label[l]);

  std::vector<std::size_t> above_n(above), below_n(below);
  for (auto& x : above_n) x = x == none ? d.circles.size() : x;
  for (auto& x : below_n) x = x == none ? d.circles.size() : x;
  for (std::size_t p = 0; p < simple_sigma.size(); ++p) {
    const auto i = simple_sigma[p];
    const auto& plus = s.d_a[pairs[p].first];
    const auto& minus = s.d_a[pairs[p].second];
    const auto alpha = support(s.sigma[i])[0];
    for (std::size_t j = 0; j < s.sigma.size(); ++j) {
      const Int actual = plus.rho[j];
      Int read;
      if (in_colors_of(d.circles, above_n, below_n, j, plus.label)) {
        read = 1;
      } else if (in_colors_of(d.circles, above_n, below_n, j, minus.label)) {
        read = coroot_on_root(r, alpha, s.sigma[j]) - 1;
      } else if (actual == -1) {
        d.arrows.push_back({above[i], j});
        read = -1;
      } else {
        read = 0;
      }
      if (read != actual)
        throw DiagramError("pairing of " + plus.label + " with spherical root " + std::to_string(j) +
                           " is not expressible by circles and arrows");
    }
  }
  return d;
}

std::string render_text(const DiagramDocument& d) {
  const auto& r = d.root_system;
  std::ostringstream out;
  out << "Luna diagram of " << r.name() << "\n";
  out << "edges:";
  if (d.edges.empty()) out << " (none)";
  for (const auto& e : d.edges) {
    const char* bond = e.multiplicity == 1 ? " - " : e.multiplicity == 2 ? (e.towards_b ? " => " : " <= ")
                                                                          : (e.towards_b ? " =>> " : " <<= ");
    out << " " << vertex_name(r, e.a) << bond << vertex_name(r, e.b) << ";";
  }
  out << "\nundecorated (S^p):";
  if (d.s_p.empty()) out << " (none)";
  for (auto v : d.s_p) out << " " << vertex_name(r, v);
  out << "\nringed:";
  if (d.ringed.empty()) out << " (none)";
  for (auto v : d.ringed) out << " " << vertex_name(r, v);
  out << "\nspherical roots:\n";
  for (const auto& dec : d.roots) {
    out << "  g" << dec.sigma << " = ";
    for (std::size_t k = 0; k < dec.support.size(); ++k) {
      if (k) out << " + ";
      if (dec.coefficients[k] != 1) out << dec.coefficients[k] << "*";
      out << "a" << vertex_name(r, dec.support[k]);
    }
    out << "  [" << to_string(dec.tag) << "]" << (dec.marked ? "  gamma" : "") << "\n";
  }
  if (!d.circles.empty()) {
    out << "circles:\n";
    for (std::size_t c = 0; c < d.circles.size(); ++c)
      out << "  c" << c << " " << (d.circles[c].place == CirclePlace::Above ? "above " : "below ")
          << vertex_name(r, d.circles[c].vertex) << ": " << d.circles[c].color << "\n";
  }
  for (const auto& line : d.lines) {
    out << "line:";
    for (auto c : line) out << " c" << c;
    out << "\n";
  }
  for (const auto& a : d.arrows) out << "arrow: c" << a.circle << " -> g" << a.sigma << "\n";
  return out.str();
}

namespace {

constexpr int kStep = 60, kGap = 40, kLeft = 40, kBaseY = 150;

struct Layout {
  std::vector<int> x;
  int width = 0;
};

Layout layout(const RootSystem& r) {
  Layout l;
  int x = kLeft;
  for (std::size_t v = 0; v < r.rank(); ++v) {
    if (v > 0 && r.component_of(v) != r.component_of(v - 1)) x += kGap;
    l.x.push_back(x);
    x += kStep;
  }
  l.width = x - kStep + kLeft + 40;
  return l;
}

std::string esc(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '<') out += "&lt;";
    else if (ch == '>') out += "&gt;";
    else if (ch == '&') out += "&amp;";
    else out += ch;
  }
  return out;
}

}  // namespace

std::string render_svg(const DiagramDocument& d) {
  const auto& r = d.root_system;
  const auto l = layout(r);
  std::vector<std::size_t> big_roots;
  for (const auto& dec : d.roots)
    if (dec.tag != ShapeTag::Alpha) big_roots.push_back(dec.sigma);
  const int height = kBaseY + 70 + 22 * static_cast<int>(big_roots.size()) + 10 * static_cast<int>(d.lines.size());
  const int width = std::max(l.width, 120);

  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
    << "\" viewBox=\"0 0 " << width << " " << height << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
  o << "<defs><marker id=\"head\" markerWidth=\"8\" markerHeight=\"8\" refX=\"7\" refY=\"4\" orient=\"auto\">"
       "<path d=\"M0,0 L8,4 L0,8 z\" fill=\"black\"/></marker></defs>\n";
  o << "<title>" << esc(r.name()) << "</title>\n";

  for (const auto& e : d.edges) {
    const int xa = l.x[e.a], xb = l.x[e.b];
    if (e.b != e.a + 1) {
      o << "<path d=\"M" << xa << "," << kBaseY << " Q" << (xa + xb) / 2 << "," << kBaseY + 40 << " " << xb << ","
        << kBaseY << "\" fill=\"none\" stroke=\"black\"/>\n";
      continue;
    }
    for (int k = 0; k < e.multiplicity; ++k) {
      const int dy = (2 * k - (e.multiplicity - 1)) * 2;
      o << "<line x1=\"" << xa << "\" y1=\"" << kBaseY + dy << "\" x2=\"" << xb << "\" y2=\"" << kBaseY + dy
        << "\" stroke=\"black\"/>\n";
    }
    if (e.multiplicity > 1) {
      const int mx = (xa + xb) / 2, sgn = e.towards_b ? 1 : -1;
      o << "<path d=\"M" << mx - 5 * sgn << "," << kBaseY - 7 << " L" << mx + 5 * sgn << "," << kBaseY << " L"
        << mx - 5 * sgn << "," << kBaseY + 7 << "\" fill=\"none\" stroke=\"black\"/>\n";
    }
  }
  for (std::size_t v = 0; v < r.rank(); ++v) {
    o << "<circle cx=\"" << l.x[v] << "\" cy=\"" << kBaseY << "\" r=\"3\" fill=\"black\"/>\n";
    o << "<text x=\"" << l.x[v] - 8 << "\" y=\"" << kBaseY + 58 << "\" fill=\"gray\">" << vertex_name(r, v)
      << "</text>\n";
  }
  for (auto v : d.ringed)
    o << "<circle cx=\"" << l.x[v] << "\" cy=\"" << kBaseY << "\" r=\"9\" fill=\"none\" stroke=\"black\"/>\n";

  auto circle_y = [&](const DiagramCircle& c) { return c.place == CirclePlace::Above ? kBaseY - 16 : kBaseY + 16; };
  for (const auto& c : d.circles)
    o << "<circle cx=\"" << l.x[c.vertex] << "\" cy=\"" << circle_y(c) << "\" r=\"6\" fill=\"white\" stroke=\"black\"/>\n";

  std::map<std::size_t, std::pair<int, int>> anchor;  // sigma -> point used by arrows and marks
  int row = 0;
  for (const auto& dec : d.roots) {
    if (dec.tag == ShapeTag::Alpha) {
      anchor[dec.sigma] = {l.x[dec.support[0]], kBaseY + 30};
      continue;
    }
    const int x0 = l.x[dec.support.front()] - 12, x1 = l.x[dec.support.back()] + 12;
    const int y = kBaseY + 66 + 22 * row++;
    o << "<rect x=\"" << x0 << "\" y=\"" << y - 12 << "\" width=\"" << x1 - x0 << "\" height=\"16\" rx=\"6\" "
      << "fill=\"#eeeeee\" stroke=\"black\"/>\n";
    std::string coeffs;
    for (std::size_t k = 0; k < dec.coefficients.size(); ++k) coeffs += (k ? "," : "") + dec.coefficients[k].str();
    o << "<text x=\"" << x0 + 4 << "\" y=\"" << y << "\">" << esc(to_string(dec.tag)) << " [" << coeffs
      << "]</text>\n";
    for (auto v : dec.support)
      o << "<line x1=\"" << l.x[v] << "\" y1=\"" << kBaseY + 4 << "\" x2=\"" << l.x[v] << "\" y2=\"" << y - 12
        << "\" stroke=\"#999999\" stroke-dasharray=\"2,2\"/>\n";
    anchor[dec.sigma] = {x1 + 4, y - 4};
  }

  for (std::size_t k = 0; k < d.lines.size(); ++k) {
    const auto& line = d.lines[k];
    std::ostringstream path;
    const int level_up = kBaseY - 34 - 8 * static_cast<int>(k), level_down = kBaseY + 34 + 8 * static_cast<int>(k);
    bool first = true;
    for (auto c : line) {
      const auto& ci = d.circles[c];
      const int cy = circle_y(ci), x = l.x[ci.vertex];
      const bool up = ci.place == CirclePlace::Above;
      const int level = up ? level_up : level_down;
      path << (first ? "M" : " L") << x << "," << level << " L" << x << "," << (up ? cy - 6 : cy + 6) << " M" << x
           << "," << level;
      first = false;
    }
    o << "<path d=\"" << path.str() << "\" fill=\"none\" stroke=\"black\"/>\n";
  }
  for (const auto& a : d.arrows) {
    const auto& c = d.circles[a.circle];
    const auto [tx, ty] = anchor.at(a.sigma);
    const int target_y = d.roots[a.sigma].tag == ShapeTag::Alpha ? kBaseY - 22 : ty;
    o << "<line x1=\"" << l.x[c.vertex] << "\" y1=\"" << circle_y(c) - 6 << "\" x2=\"" << tx << "\" y2=\""
      << target_y << "\" stroke=\"black\" marker-end=\"url(#head)\"/>\n";
  }
  for (const auto& dec : d.roots)
    if (dec.marked) {
      const auto [x, y] = anchor.at(dec.sigma);
      o << "<text x=\"" << x + 6 << "\" y=\"" << y + 4 << "\" font-style=\"italic\">&#947;</text>\n";
    }
  o << "</svg>\n";
  return o.str();
}

}  // namespace sphsmooth
