#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "sphsmooth/lattice.hpp"
#include "sphsmooth/root_system.hpp"

namespace sphsmooth {

struct SphericalRoot {
  IntVector coeffs;  // over simple roots
  IntVector m;       // coordinates in the basis of M
  bool operator==(const SphericalRoot&) const = default;
};

struct ColorA {
  std::string label;
  IntVector rho;
  bool operator==(const ColorA&) const = default;
};

struct HomogeneousSphericalDatum {
  RootSystem root_system;
  std::vector<Weight> m_basis;
  std::vector<SphericalRoot> sigma;
  std::set<std::size_t> s_p;  // flat vertex indices
  std::vector<ColorA> d_a;    // rho in coordinates dual to m_basis

  std::size_t lattice_rank() const { return m_basis.size(); }
  bool operator==(const HomogeneousSphericalDatum&) const = default;
};

enum class ColorKind { A, TwoA, B };
std::string to_string(ColorKind k);

struct Color {
  std::string label;
  ColorKind kind = ColorKind::B;
  IntVector rho;
  std::set<std::size_t> sigma_set;  // ς(D), flat vertex indices
};

struct ColoredCone {
  std::vector<IntVector> valuation_generators;
  std::vector<std::string> f_labels;
  bool operator==(const ColoredCone&) const = default;
};

/// Spherically closed datum with M = span Σ; d_a rho are pairings against sigma.
struct SphericalSystem {
  RootSystem root_system;
  std::vector<IntVector> sigma;
  std::set<std::size_t> s_p;
  std::vector<ColorA> d_a;
  bool operator==(const SphericalSystem&) const = default;
};

struct Finding {
  std::string code;
  std::string message;
};

struct ValidationReport {
  std::vector<Finding> findings;
  bool ok() const { return findings.empty(); }
  std::string summary() const;
};

class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(ValidationReport r);
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

// Basic helpers.
IntVector coroot_restriction(const HomogeneousSphericalDatum& d, std::size_t alpha);
std::optional<IntVector> m_coordinates(const std::vector<Weight>& basis, const Weight& w);
std::set<std::size_t> compute_s_p(const RootSystem& r, const std::vector<Weight>& m_basis);
/// Flat index α for each sigma element equal to a simple root, keyed by sigma index.
std::map<std::size_t, std::size_t> simple_spherical_roots(const HomogeneousSphericalDatum& d);
/// ς(D) for a type-a color: simple spherical roots α with ⟨ρ(D), α⟩ = 1.
std::set<std::size_t> sigma_set_of(const HomogeneousSphericalDatum& d, const ColorA& c);

ValidationReport validate(const HomogeneousSphericalDatum& d);
void require_valid(const HomogeneousSphericalDatum& d);

std::vector<Color> full_colors(const HomogeneousSphericalDatum& d);
std::vector<IntVector> valuation_halfspaces(const HomogeneousSphericalDatum& d);
/// Generators of C: valuation generators followed by ρ(F) in F order.
std::vector<IntVector> cone_generators(const HomogeneousSphericalDatum& d, const ColoredCone& c);
ValidationReport validate_colored_cone(const HomogeneousSphericalDatum& d, const ColoredCone& c);
std::set<std::size_t> s_f(const HomogeneousSphericalDatum& d, const std::vector<std::string>& f_labels);

HomogeneousSphericalDatum localize(const HomogeneousSphericalDatum& d, const std::set<std::size_t>& s_star);

struct ClosureResult {
  SphericalSystem system;
  std::vector<int> factor;          // 1 or 2 per spherical root
  std::vector<IntVector> m_coords;  // closure roots in the coordinates of the input M
};
ClosureResult closure_with_lattice(const HomogeneousSphericalDatum& d);
SphericalSystem spherical_closure(const HomogeneousSphericalDatum& d);

HomogeneousSphericalDatum to_datum(const SphericalSystem& s);
ValidationReport validate(const SphericalSystem& s);
bool is_spherically_closed(const SphericalSystem& s);

struct SystemPart {
  SphericalSystem system;
  std::vector<std::size_t> sigma_index;   // index in the parent system
  std::vector<std::size_t> vertex_index;  // parent flat index of each new vertex
  std::vector<std::size_t> color_index;   // parent d_a index of each color
};
std::vector<SystemPart> decompose_parts(const SphericalSystem& s);
std::vector<SphericalSystem> decompose(const SphericalSystem& s);
SphericalSystem product(const std::vector<SphericalSystem>& parts);

}  // namespace sphsmooth
