// Command-line front end. Exit codes: 0 ok/smooth, 1 I/O or parse error,
// 2 invalid input, 3 valid but not smooth.
#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "sphsmooth/catalog.hpp"
#include "sphsmooth/diagram.hpp"
#include "sphsmooth/document.hpp"
#include "sphsmooth/smoothness.hpp"

using namespace sphsmooth;

namespace {

enum Exit { kOk = 0, kIo = 1, kInvalid = 2, kNotSmooth = 3 };

struct Failure {
  int code;
  std::string message;
};

Document load(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw Failure{kIo, "cannot read " + path};
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return parse_document(text);
  } catch (const DocumentError& e) {
    throw Failure{kIo, path + ": " + e.what()};
  }
}

void print_findings(const ValidationReport& r) {
  for (const auto& f : r.findings) std::cerr << "  [" << f.code << "] " << f.message << "\n";
}

HomogeneousSphericalDatum as_datum(const Document& doc) {
  const auto d = doc.kind == DocumentKind::Datum ? doc.datum : to_datum(doc.system);
  const auto rep = validate(d);
  if (!rep.ok()) {
    print_findings(rep);
    throw Failure{kInvalid, "invalid homogeneous spherical datum"};
  }
  return d;
}

SphericalSystem as_closed_system(const Document& doc) {
  if (doc.kind == DocumentKind::System) {
    const auto rep = validate(doc.system);
    if (!rep.ok()) {
      print_findings(rep);
      throw Failure{kInvalid, "invalid spherical system"};
    }
    return doc.system;
  }
  return spherical_closure(as_datum(doc));
}

const ColoredCone& require_cone(const Document& doc) {
  if (doc.kind != DocumentKind::Datum || !doc.cone) throw Failure{kInvalid, "document has no colored cone"};
  return *doc.cone;
}

std::string yes_no(bool b) { return b ? "pass" : "FAIL"; }

void explain(const HomogeneousSphericalDatum& d, const SmoothnessReport& r, std::ostream& out) {
  const auto& rs = d.root_system;
  out << "verdict: " << (r.verdict ? "smooth" : "not smooth") << "\n";
  if (!r.cone_findings.ok()) {
    out << "(C, F) is not a colored cone:\n";
    for (const auto& f : r.cone_findings.findings) out << "  [" << f.code << "] " << f.message << "\n";
    return;
  }
  out << "condition 1 (locally factorial): " << yes_no(r.cond1.pass) << "\n";
  out << "  extremal rays:";
  for (const auto& v : r.cond1.rays) out << " " << to_string(v);
  out << "\n";
  if (!r.cond1.pass) out << "  witness: " << r.cond1.witness << "\n";

  out << "condition 2 (components in the list): " << yes_no(r.cond2.pass) << "\n";
  out << "  S_F:";
  if (r.cond2.s_f.empty()) out << " (empty)";
  for (auto a : r.cond2.s_f) out << " " << to_string(rs.id(a));
  out << "\n";
  if (r.cond2.components.empty()) out << "  no components (vacuous)\n";
  for (const auto& c : r.cond2.components) {
    out << "  " << c.summary << ": ";
    if (!c.has_color)
      out << "no colors, exempt\n";
    else if (!c.match)
      out << "unmatched\n";
    else {
      const auto& e = catalog_entry(c.match->entry_id);
      out << "entry " << e.id;
      if (!c.match->params.empty()) out << " (" << format_params(e, c.match->params) << ")";
      out << ", " << e.description;
      if (c.markings.size() > 1) out << "; " << c.markings.size() << " candidate markings";
      out << "\n";
    }
  }

  out << "condition 3 (marked roots): " << yes_no(r.cond3.pass) << "\n";
  out << "  U:";
  if (r.cond3.u_set.empty()) out << " (empty)";
  for (const auto& u : r.cond3.u_set) out << " " << to_string(u);
  out << "\n";
  if (r.cond3.marked.empty()) out << "  no marked roots\n";
  for (const auto& a : r.cond3.assignment)
    out << "  gamma " << to_string(r.cond2.closure.system.sigma[a.gamma]) << " <-> u = " << to_string(r.cond3.u_set[a.u])
        << " (pairing -1)\n";
  if (!r.cond3.pass) out << "  witness: " << r.cond3.witness << "\n";
}

std::set<std::size_t> parse_roots(const RootSystem& r, const std::vector<std::string>& ids) {
  std::set<std::size_t> out;
  for (const auto& s : ids) {
    try {
      out.insert(r.flat(parse_root_id(s)));
    } catch (const std::exception& e) {
      throw Failure{kInvalid, "unknown simple root '" + s + "': " + e.what()};
    }
  }
  return out;
}

Params parse_params(const CatalogEntry& e, const std::vector<std::string>& kv) {
  Params p(e.param_names.size(), 0);
  std::vector<bool> set(p.size(), false);
  for (const auto& item : kv) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw Failure{kInvalid, "parameter '" + item + "' is not of the form name=value"};
    const auto name = item.substr(0, eq);
    const auto it = std::find(e.param_names.begin(), e.param_names.end(), name);
    if (it == e.param_names.end()) throw Failure{kInvalid, "entry " + std::to_string(e.id) + " has no parameter " + name};
    const auto k = static_cast<std::size_t>(it - e.param_names.begin());
    try {
      p[k] = std::stoi(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw Failure{kInvalid, "parameter " + name + " needs an integer value"};
    }
    set[k] = true;
  }
  for (std::size_t k = 0; k < p.size(); ++k)
    if (!set[k]) throw Failure{kInvalid, "missing parameter " + e.param_names[k] + " (domain: " + e.domain + ")"};
  return p;
}

std::string json_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Smoothness of simple spherical embeddings"};
  app.require_subcommand(1);
  bool json = false, explain_flag = false;
  std::string path, format;
  std::vector<std::string> at, params;
  int entry_id = 0;

  auto* validate_cmd = app.add_subcommand("validate", "Validate a datum (and its colored cone) or a system");
  validate_cmd->add_option("file", path, "Input document, - for standard input")->required();
  validate_cmd->add_flag("--json", json, "Machine-readable findings");

  auto* smooth_cmd = app.add_subcommand("smooth", "Decide smoothness of the simple embedding");
  smooth_cmd->add_option("file", path)->required();
  smooth_cmd->add_flag("--json", json, "Machine-readable report");
  smooth_cmd->add_flag("--explain", explain_flag, "Name the witnesses of each condition");

  auto* factorial_cmd = app.add_subcommand("factorial", "Local factoriality only");
  factorial_cmd->add_option("file", path)->required();
  factorial_cmd->add_flag("--json", json);

  auto* localize_cmd = app.add_subcommand("localize", "Localize a datum at a set of simple roots");
  localize_cmd->add_option("file", path)->required();
  localize_cmd->add_option("--at", at, "Simple roots as c.p, comma separated")->delimiter(',');

  auto* closure_cmd = app.add_subcommand("closure", "Spherical closure as a spherical system");
  closure_cmd->add_option("file", path)->required();

  auto* decompose_cmd = app.add_subcommand("decompose", "Indecomposable components of the spherical closure");
  decompose_cmd->add_option("file", path)->required();

  auto* catalog_cmd = app.add_subcommand("catalog", "The list of multiplicity-free spherical systems");
  catalog_cmd->require_subcommand(1);
  auto* list_cmd = catalog_cmd->add_subcommand("list", "All entries with their parameter domains");
  list_cmd->add_flag("--json", json);
  auto* show_cmd = catalog_cmd->add_subcommand("show", "Instantiate one entry");
  show_cmd->add_option("id", entry_id)->required();
  show_cmd->add_option("--param", params, "name=value")->delimiter(',');
  show_cmd->add_option("--format", format, "json (document), text or svg (diagram)")
      ->check(CLI::IsMember({"json", "text", "svg"}));

  auto* diagram_cmd = app.add_subcommand("diagram", "Luna diagram of a system, or of a datum's closure");
  diagram_cmd->add_option("file", path)->required();
  diagram_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "svg"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kInvalid;
  }
  if (format.empty()) format = show_cmd->parsed() ? "json" : "text";

  try {
    if (validate_cmd->parsed()) {
      const auto doc = load(path);
      ValidationReport rep;
      if (doc.kind == DocumentKind::Datum) {
        rep = validate(doc.datum);
        if (rep.ok() && doc.cone) rep = validate_colored_cone(doc.datum, *doc.cone);
      } else {
        rep = validate(doc.system);
      }
      if (json) std::cout << validation_to_json(rep);
      if (!rep.ok()) {
        if (!json) print_findings(rep);
        return kInvalid;
      }
      if (!json) std::cerr << "valid\n";
      return kOk;
    }
    if (smooth_cmd->parsed()) {
      const auto doc = load(path);
      const auto d = as_datum(doc);
      const auto& cone = require_cone(doc);
      const auto rep = is_smooth(d, cone);
      if (json) std::cout << report_to_json(d, rep);
      if (explain_flag) explain(d, rep, json ? std::cerr : std::cout);
      if (!json && !explain_flag) std::cout << (rep.verdict ? "smooth" : "not smooth") << "\n";
      if (!rep.cone_findings.ok()) {
        if (!explain_flag) print_findings(rep.cone_findings);
        return kInvalid;
      }
      return rep.verdict ? kOk : kNotSmooth;
    }
    if (factorial_cmd->parsed()) {
      const auto doc = load(path);
      const auto d = as_datum(doc);
      const auto& cone = require_cone(doc);
      const auto findings = validate_colored_cone(d, cone);
      if (!findings.ok()) {
        print_findings(findings);
        return kInvalid;
      }
      const auto rep = check_condition1(d, cone);
      if (json)
        std::cout << factoriality_to_json(rep);
      else
        std::cout << (rep.pass ? "locally factorial" : "not locally factorial: " + rep.witness) << "\n";
      return rep.pass ? kOk : kNotSmooth;
    }
    if (localize_cmd->parsed()) {
      const auto doc = load(path);
      const auto d = as_datum(doc);
      std::cout << emit_document(datum_document(localize(d, parse_roots(d.root_system, at))));
      return kOk;
    }
    if (closure_cmd->parsed()) {
      const auto doc = load(path);
      std::cout << emit_document(system_document(as_closed_system(doc)));
      return kOk;
    }
    if (decompose_cmd->parsed()) {
      const auto doc = load(path);
      for (const auto& part : decompose(as_closed_system(doc))) std::cout << emit_document(system_document(part));
      return kOk;
    }
    if (list_cmd->parsed()) {
      if (json) std::cout << "[\n";
      bool first = true;
      for (const auto& e : catalog()) {
        std::string names;
        for (const auto& n : e.param_names) names += (names.empty() ? "" : ",") + n;
        if (json) {
          std::cout << (first ? "" : ",\n") << "  {\"id\": " << e.id << ", \"description\": \""
                    << json_escape(e.description) << "\", \"params\": \"" << json_escape(names)
                    << "\", \"domain\": \"" << json_escape(e.domain) << "\"}";
        } else {
          std::cout << e.id << "\t" << e.description << "\t" << (names.empty() ? "-" : names) << "\t" << e.domain
                    << "\n";
        }
        first = false;
      }
      if (json) std::cout << "\n]\n";
      return kOk;
    }
    if (show_cmd->parsed()) {
      const CatalogEntry* entry = nullptr;
      try {
        entry = &catalog_entry(entry_id);
      } catch (const CatalogError& e) {
        throw Failure{kInvalid, e.what()};
      }
      const auto p = parse_params(*entry, params);
      CatalogInstance inst;
      try {
        inst = instantiate(entry_id, p);
      } catch (const CatalogError& e) {
        throw Failure{kInvalid, e.what()};
      }
      if (format == "json")
        std::cout << emit_document(system_document(inst.system, inst.marked, CatalogSource{entry_id, p}));
      else if (format == "svg")
        std::cout << render_svg(build_diagram(inst.system, inst.marked));
      else
        std::cout << "entry " << entry_id << ": " << entry->description << "\n"
                  << render_text(build_diagram(inst.system, inst.marked));
      return kOk;
    }
    if (diagram_cmd->parsed()) {
      const auto doc = load(path);
      const auto s = as_closed_system(doc);
      const auto marked = doc.kind == DocumentKind::System ? doc.marked : std::set<std::size_t>{};
      const auto d = build_diagram(s, marked);
      std::cout << (format == "svg" ? render_svg(d) : render_text(d));
      return kOk;
    }
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.code;
  } catch (const ValidationError& e) {
    print_findings(e.report());
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }
  return kOk;
}
