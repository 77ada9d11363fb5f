#pragma once

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sphsmooth/lattice.hpp"

namespace sphsmooth {

struct Component {
  char type = 'A';
  int rank = 1;
  bool operator==(const Component&) const = default;
};

struct SimpleRootId {
  int component = 0;  // 0-based
  int position = 1;   // 1-based Bourbaki position
  auto operator<=>(const SimpleRootId&) const = default;
};

std::string to_string(const SimpleRootId& id);
SimpleRootId parse_root_id(const std::string& text);

class RootSystemError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Product of simple root systems and a torus. Vertices are indexed flat, component by
/// component, in Bourbaki order.
class RootSystem {
 public:
  RootSystem() = default;
  RootSystem(std::vector<Component> components, int torus_rank = 0);

  const std::vector<Component>& components() const { return components_; }
  int torus_rank() const { return torus_rank_; }
  std::size_t rank() const { return component_of_.size(); }

  std::size_t flat(const SimpleRootId& id) const;
  SimpleRootId id(std::size_t flat_index) const;
  std::size_t component_of(std::size_t flat_index) const { return component_of_[flat_index]; }
  std::size_t offset(std::size_t component) const { return offsets_[component]; }
  bool contains(const SimpleRootId& id) const;

  const IntMatrix& cartan() const { return cartan_; }
  int cartan(std::size_t i, std::size_t j) const { return cartan_(i, j).convert_to<int>(); }

  std::string name() const;
  bool operator==(const RootSystem& o) const {
    return components_ == o.components_ && torus_rank_ == o.torus_rank_;
  }

 private:
  std::vector<Component> components_;
  int torus_rank_ = 0;
  std::vector<std::size_t> offsets_;
  std::vector<std::size_t> component_of_;
  IntMatrix cartan_;
};

/// Cartan matrix of one simple type, entries ⟨αᵢ∨, αⱼ⟩ with 0-based indices.
IntMatrix simple_cartan(char type, int rank);

struct Weight {
  IntVector fw;     // one entry per simple root
  IntVector torus;  // one entry per torus character
  bool operator==(const Weight&) const = default;
};

Weight operator+(const Weight& a, const Weight& b);
Weight operator*(const Int& k, const Weight& w);
Weight zero_weight(const RootSystem& r);

IntMatrix cartan_matrix(const RootSystem& r);
Int coroot_pairing(const RootSystem& r, const SimpleRootId& a, const Weight& w);
/// Coefficients over simple roots to fundamental-weight coordinates.
Weight root_as_weight(const RootSystem& r, const IntVector& coeffs);
/// ⟨α_i∨, Σ cⱼ αⱼ⟩.
Int coroot_on_root(const RootSystem& r, std::size_t i, const IntVector& coeffs);
std::vector<std::size_t> support(const IntVector& coeffs);

enum class ShapeTag {
  Alpha,           // α
  TwoAlpha,        // 2α
  AlphaPlusAlpha,  // α + α′, orthogonal
  AChain,          // α₁+…+αₙ in Aₙ
  DThree,          // α₁+2α₂+α₃ on a diagram of type D₃ = A₃
  BChain,          // α₁+…+αₙ in Bₙ, also α₁+α₂ on C₂
  BChainDoubled,   // 2α₁+…+2αₙ in Bₙ
  BThree,          // α₁+2α₂+3α₃ in B₃
  CChain,          // α₁+2α₂+…+2αₙ₋₁+αₙ in Cₙ, n ≥ 3
  DChain,          // 2α₁+…+2αₙ₋₂+αₙ₋₁+αₙ in Dₙ
  FFour,           // α₁+2α₂+3α₃+2α₄ in F₄
  GShort,          // α₁+α₂ in G₂
  GMiddle,         // 2α₁+α₂ in G₂
  GDoubled,        // 4α₁+2α₂ in G₂
};

std::string to_string(ShapeTag t);

struct ShapeResult {
  std::optional<ShapeTag> tag;
  /// Simple roots (flat indices) that must lie in S^p for this shape.
  std::set<std::size_t> spp;
  std::vector<std::string> reasons;  // filled on rejection
};

ShapeResult admissible_spherical_root(const RootSystem& r, const IntVector& coeffs);
/// The shape is compatible with S^p: S^pp ⊆ S^p and ⟨β∨, γ⟩ = 0 for β ∈ S^p.
bool shape_compatible(const RootSystem& r, const IntVector& coeffs, const ShapeResult& shape,
                      const std::set<std::size_t>& s_p);

struct SubRootSystem {
  RootSystem system;
  /// old flat index of each new vertex
  std::vector<std::size_t> old_index;
};

SubRootSystem sub_root_system(const RootSystem& r, const std::set<std::size_t>& subset);
SubRootSystem sub_root_system(const RootSystem& r, const std::set<SimpleRootId>& subset);

/// Vertex permutation preserving the Cartan matrix: vertex i maps to vertex_map[i].
struct DiagramAutomorphism {
  std::vector<std::size_t> vertex_map;
  /// component c maps to component_permutation[c]
  std::vector<std::size_t> component_permutation;
};

/// Enumerates bijections φ from the vertices of `a` to those of `b` with
/// B(φi, φj) = A(i, j). The callback returns false to stop early.
void for_each_cartan_isomorphism(const IntMatrix& a, const IntMatrix& b,
                                 const std::function<bool(const std::vector<std::size_t>&)>& f);

std::vector<DiagramAutomorphism> diagram_automorphisms(const RootSystem& r);

}  // namespace sphsmooth
