#include "sphsmooth/document.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "json.hpp"

namespace sphsmooth {

using nlohmann::json;

namespace {

// ---- reading ---------------------------------------------------------------

class Reader {
 public:
  Reader(const json& j, std::string path) : j_(j), path_(std::move(path)) {}

  const json& raw() const { return j_; }
  const std::string& path() const { return path_; }
  [[noreturn]] void fail(const std::string& what) const { throw DocumentError(path_.empty() ? "/" : path_, what); }

  bool has(const char* key) const { return j_.is_object() && j_.contains(key); }
  Reader at(const char* key) const {
    if (!j_.is_object()) fail("expected an object");
    if (!j_.contains(key)) fail(std::string("missing field '") + key + "'");
    return {j_.at(key), path_ + "/" + key};
  }
  Reader at(std::size_t i) const { return {j_.at(i), path_ + "/" + std::to_string(i)}; }

  std::vector<Reader> items() const {
    if (!j_.is_array()) fail("expected an array");
    std::vector<Reader> out;
    for (std::size_t i = 0; i < j_.size(); ++i) out.push_back(at(i));
    return out;
  }
  std::string str() const {
    if (!j_.is_string()) fail("expected a string");
    return j_.get<std::string>();
  }
  long long integer() const {
    if (!j_.is_number_integer()) fail("expected an integer");
    return j_.get<long long>();
  }
  Int big() const {
    if (j_.is_number_integer()) return Int(j_.get<long long>());
    if (j_.is_string()) {
      const auto s = j_.get<std::string>();
      const std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
      if (s.size() > start && std::all_of(s.begin() + static_cast<std::ptrdiff_t>(start), s.end(),
                                          [](unsigned char ch) { return std::isdigit(ch); }))
        return Int(s);
    }
    fail("expected an integer");
  }
  IntVector vec(std::size_t expected) const {
    IntVector out;
    for (const auto& x : items()) out.push_back(x.big());
    if (out.size() != expected)
      fail("expected " + std::to_string(expected) + " entries, got " + std::to_string(out.size()));
    return out;
  }

 private:
  const json& j_;
  std::string path_;
};

// Maps simple-root positions as written in the document to flat indices of the
// normalized root system.
struct Layout {
  RootSystem system;
  std::vector<std::vector<std::size_t>> position_to_flat;  // [written component][position-1]

  std::size_t flat(const SimpleRootId& id, const Reader& where) const {
    if (id.component < 0 || static_cast<std::size_t>(id.component) >= position_to_flat.size())
      where.fail("unknown component in root id " + to_string(id));
    const auto& row = position_to_flat[static_cast<std::size_t>(id.component)];
    if (id.position < 1 || static_cast<std::size_t>(id.position) > row.size())
      where.fail("unknown position in root id " + to_string(id));
    return row[static_cast<std::size_t>(id.position - 1)];
  }
  IntVector permute(const IntVector& written) const {
    IntVector out(written.size());
    std::size_t k = 0;
    for (const auto& row : position_to_flat)
      for (auto f : row) out[f] = written[k++];
    return out;
  }
};

Component parse_component(const Reader& r) {
  const auto s = r.str();
  if (s.size() < 2 || !std::isupper(static_cast<unsigned char>(s[0])) ||
      !std::all_of(s.begin() + 1, s.end(), [](unsigned char ch) { return std::isdigit(ch); }))
    r.fail("component '" + s + "' is not of the form <letter><rank>");
  return {s[0], std::stoi(s.substr(1))};
}

Layout parse_layout(const Reader& r) {
  std::vector<Component> written;
  for (const auto& c : r.at("components").items()) written.push_back(parse_component(c));
  int torus = 0;
  if (r.has("torus_rank")) torus = static_cast<int>(r.at("torus_rank").integer());
  Layout out;
  try {
    out.system = RootSystem(written, torus);
  } catch (const std::exception& e) {
    r.fail(e.what());
  }
  std::size_t offset = 0;
  for (const auto& c : written) {
    std::vector<std::size_t> row;
    for (int p = 0; p < c.rank; ++p) row.push_back(offset + static_cast<std::size_t>(p));
    if (c.type == 'D' && c.rank == 3) row = {offset + 1, offset, offset + 2};  // D3 is A3 with α1 in the middle
    out.position_to_flat.push_back(row);
    offset += static_cast<std::size_t>(c.rank);
  }
  return out;
}

std::set<std::size_t> parse_s_p(const Reader& r, const Layout& l) {
  std::set<std::size_t> out;
  for (const auto& id : r.items()) {
    SimpleRootId sid;
    try {
      sid = parse_root_id(id.str());
    } catch (const std::exception& e) {
      id.fail(e.what());
    }
    out.insert(l.flat(sid, id));
  }
  return out;
}

std::vector<ColorA> parse_d_a(const Reader& r, std::size_t n) {
  std::vector<ColorA> out;
  for (const auto& c : r.items()) out.push_back({c.at("label").str(), c.at("rho").vec(n)});
  return out;
}

std::optional<CatalogSource> parse_source(const Reader& root) {
  if (!root.has("catalog")) return std::nullopt;
  const auto r = root.at("catalog");
  CatalogSource s;
  s.id = static_cast<int>(r.at("id").integer());
  for (const auto& p : r.at("params").items()) s.params.push_back(static_cast<int>(p.integer()));
  return s;
}

Document parse_datum(const Reader& root) {
  Document doc;
  doc.kind = DocumentKind::Datum;
  const auto layout = parse_layout(root.at("root_system"));
  auto& d = doc.datum;
  d.root_system = layout.system;
  const std::size_t ss = layout.system.rank(), tr = static_cast<std::size_t>(layout.system.torus_rank());
  for (const auto& w : root.at("m_basis").items())
    d.m_basis.push_back({layout.permute(w.at("fw").vec(ss)), w.has("torus") ? w.at("torus").vec(tr) : IntVector(tr)});
  const std::size_t s = d.m_basis.size();
  for (const auto& g : root.at("sigma").items())
    d.sigma.push_back({layout.permute(g.at("root").vec(ss)), g.at("m").vec(s)});
  if (root.has("s_p")) d.s_p = parse_s_p(root.at("s_p"), layout);
  if (root.has("d_a")) d.d_a = parse_d_a(root.at("d_a"), s);
  if (root.has("cone")) {
    const auto c = root.at("cone");
    ColoredCone cone;
    for (const auto& u : c.at("generators").items()) cone.valuation_generators.push_back(u.vec(s));
    if (c.has("F"))
      for (const auto& l : c.at("F").items()) cone.f_labels.push_back(l.str());
    doc.cone = cone;
  }
  doc.source = parse_source(root);
  return doc;
}

Document parse_system(const Reader& root) {
  Document doc;
  doc.kind = DocumentKind::System;
  const auto layout = parse_layout(root.at("root_system"));
  auto& s = doc.system;
  s.root_system = layout.system;
  for (const auto& g : root.at("sigma").items()) s.sigma.push_back(layout.permute(g.vec(layout.system.rank())));
  if (root.has("s_p")) s.s_p = parse_s_p(root.at("s_p"), layout);
  if (root.has("d_a")) s.d_a = parse_d_a(root.at("d_a"), s.sigma.size());
  if (root.has("marked"))
    for (const auto& m : root.at("marked").items()) {
      const auto i = m.integer();
      if (i < 0 || static_cast<std::size_t>(i) >= s.sigma.size()) m.fail("marked index out of range");
      doc.marked.insert(static_cast<std::size_t>(i));
    }
  doc.source = parse_source(root);
  return doc;
}

// ---- writing ---------------------------------------------------------------

// Indented output with arrays of scalars kept on one line.
std::string pretty(const json& j) {
  const std::string raw = j.dump(2);
  std::string out;
  out.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i] != '[') {
      out += raw[i];
      continue;
    }
    std::size_t k = i + 1;
    bool flat = true, in_string = false;
    for (; k < raw.size(); ++k) {
      const char ch = raw[k];
      if (in_string) {
        if (ch == '\\') ++k;
        else if (ch == '"') in_string = false;
      } else if (ch == '"') {
        in_string = true;
      } else if (ch == '[' || ch == '{') {
        flat = false;
        break;
      } else if (ch == ']') {
        break;
      }
    }
    if (!flat || k >= raw.size()) {
      out += raw[i];
      continue;
    }
    std::string item;
    bool first = true, quoted = false;
    out += '[';
    for (std::size_t m = i + 1; m < k; ++m) {
      const char ch = raw[m];
      if (quoted) {
        item += ch;
        if (ch == '\\') item += raw[++m];
        else if (ch == '"') quoted = false;
      } else if (ch == '"') {
        item += ch, quoted = true;
      } else if (ch == ',') {
        out += (first ? "" : ", ") + item, item.clear(), first = false;
      } else if (!std::isspace(static_cast<unsigned char>(ch))) {
        item += ch;
      }
    }
    if (!item.empty()) out += (first ? "" : ", ") + item;
    out += ']';
    i = k;
  }
  return out + "\n";
}

json big(const Int& x) {
  if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
    return x.convert_to<long long>();
  return x.str();
}

json vec(const IntVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(big(x));
  return out;
}

json ids(const RootSystem& r, const std::set<std::size_t>& flat) {
  json out = json::array();
  for (auto f : flat) out.push_back(to_string(r.id(f)));
  return out;
}

json root_system_json(const RootSystem& r) {
  json comps = json::array();
  for (const auto& c : r.components()) comps.push_back(std::string(1, c.type) + std::to_string(c.rank));
  return {{"components", comps}, {"torus_rank", r.torus_rank()}};
}

json d_a_json(const std::vector<ColorA>& d_a) {
  json out = json::array();
  for (const auto& c : d_a) out.push_back({{"label", c.label}, {"rho", vec(c.rho)}});
  return out;
}

json source_json(const CatalogSource& s) {
  return {{"id", s.id}, {"params", s.params}};
}

json findings_json(const ValidationReport& r) {
  json out = json::array();
  for (const auto& f : r.findings) out.push_back({{"code", f.code}, {"message", f.message}});
  return out;
}

}  // namespace

Document parse_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DocumentError("byte " + std::to_string(e.byte), "malformed JSON");
  }
  const Reader root(j, "");
  if (!j.is_object()) root.fail("expected an object");
  if (root.has("schema") && root.at("schema").str() != kSchema)
    root.at("schema").fail("unsupported schema '" + root.at("schema").str() + "', expected '" + kSchema + "'");
  const auto kind = root.has("kind") ? root.at("kind").str() : std::string("datum");
  try {
    if (kind == "datum") return parse_datum(root);
    if (kind == "system") return parse_system(root);
  } catch (const json::exception& e) {
    throw DocumentError("", e.what());
  }
  root.at("kind").fail("unknown document kind '" + kind + "'");
}

std::string emit_document(const Document& doc) {
  json j;
  j["schema"] = kSchema;
  if (doc.kind == DocumentKind::Datum) {
    const auto& d = doc.datum;
    j["kind"] = "datum";
    j["root_system"] = root_system_json(d.root_system);
    json basis = json::array();
    for (const auto& w : d.m_basis) basis.push_back({{"fw", vec(w.fw)}, {"torus", vec(w.torus)}});
    j["m_basis"] = basis;
    json sigma = json::array();
    for (const auto& g : d.sigma) sigma.push_back({{"root", vec(g.coeffs)}, {"m", vec(g.m)}});
    j["sigma"] = sigma;
    j["s_p"] = ids(d.root_system, d.s_p);
    j["d_a"] = d_a_json(d.d_a);
    if (doc.cone) {
      json gens = json::array();
      for (const auto& u : doc.cone->valuation_generators) gens.push_back(vec(u));
      j["cone"] = {{"generators", gens}, {"F", doc.cone->f_labels}};
    }
  } else {
    const auto& s = doc.system;
    j["kind"] = "system";
    j["root_system"] = root_system_json(s.root_system);
    json sigma = json::array();
    for (const auto& g : s.sigma) sigma.push_back(vec(g));
    j["sigma"] = sigma;
    j["s_p"] = ids(s.root_system, s.s_p);
    j["d_a"] = d_a_json(s.d_a);
    j["marked"] = doc.marked;
  }
  if (doc.source) j["catalog"] = source_json(*doc.source);
  return pretty(j);
}

Document datum_document(HomogeneousSphericalDatum d, std::optional<ColoredCone> cone) {
  Document doc;
  doc.kind = DocumentKind::Datum;
  doc.datum = std::move(d);
  doc.cone = std::move(cone);
  return doc;
}

Document system_document(SphericalSystem s, std::set<std::size_t> marked, std::optional<CatalogSource> source) {
  Document doc;
  doc.kind = DocumentKind::System;
  doc.system = std::move(s);
  doc.marked = std::move(marked);
  doc.source = std::move(source);
  return doc;
}

std::string validation_to_json(const ValidationReport& r) {
  return pretty(json{{"valid", r.ok()}, {"findings", findings_json(r)}});
}

namespace {

json factoriality_json(const FactorialityReport& r) {
  json rays = json::array();
  for (const auto& v : r.rays) rays.push_back(vec(v));
  return {{"pass", r.pass}, {"rays", rays}, {"witness", r.witness}};
}

}  // namespace

std::string factoriality_to_json(const FactorialityReport& r) { return pretty(factoriality_json(r)); }

std::string report_to_json(const HomogeneousSphericalDatum& d, const SmoothnessReport& r) {
  json j;
  j["schema"] = kSchema;
  j["verdict"] = r.verdict;
  j["cone_findings"] = findings_json(r.cone_findings);
  j["cond1"] = factoriality_json(r.cond1);

  json comps = json::array();
  for (const auto& c : r.cond2.components) {
    json m = nullptr;
    if (c.match) {
      const auto& e = catalog_entry(c.match->entry_id);
      m = {{"entry", e.id}, {"params", c.match->params}, {"description", e.description}};
    }
    json markings = json::array();
    for (const auto& s : c.markings) markings.push_back(s);
    comps.push_back({{"summary", c.summary}, {"has_color", c.has_color}, {"match", m}, {"markings", markings}});
  }
  json closure_sigma = json::array(), closure_m = json::array();
  for (const auto& g : r.cond2.closure.system.sigma) closure_sigma.push_back(vec(g));
  for (const auto& m : r.cond2.closure.m_coords) closure_m.push_back(vec(m));
  j["cond2"] = {{"pass", r.cond2.pass},
                {"s_f", ids(d.root_system, r.cond2.s_f)},
                {"closure", {{"sigma", closure_sigma}, {"m_coords", closure_m}, {"factor", r.cond2.closure.factor}}},
                {"components", comps}};

  json u_set = json::array();
  for (const auto& u : r.cond3.u_set) u_set.push_back(vec(u));
  json assignment = json::array();
  for (const auto& a : r.cond3.assignment)
    assignment.push_back({{"gamma", a.gamma}, {"gamma_m", vec(a.gamma_m)}, {"u", vec(r.cond3.u_set[a.u])}});
  j["cond3"] = {{"pass", r.cond3.pass},
                {"u_set", u_set},
                {"marked", r.cond3.marked},
                {"assignment", assignment},
                {"markings_tried", r.cond3.markings_tried},
                {"witness", r.cond3.witness}};
  return pretty(j);
}

}  // namespace sphsmooth
