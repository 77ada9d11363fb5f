#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "sphsmooth/spherical_data.hpp"

namespace sphsmooth {

class DiagramError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct DiagramEdge {
  std::size_t a, b;     // flat vertices
  int multiplicity;     // 1, 2 or 3
  bool towards_b;       // for multiple bonds: arrow points to the shorter root b
};

struct RootDecoration {
  std::size_t sigma;                  // index into the system's sigma
  ShapeTag tag;
  std::vector<std::size_t> support;   // flat vertices, increasing
  std::vector<Int> coefficients;      // multiplicity at each support vertex
  bool marked = false;
};

enum class CirclePlace { Above, Below };

struct DiagramCircle {
  std::size_t vertex;   // the simple spherical root's vertex
  CirclePlace place;
  std::string color;    // label of the color in D^a
};

struct DiagramArrow {
  std::size_t circle;   // index into circles (always an Above circle)
  std::size_t sigma;    // target spherical root
};

struct DiagramDocument {
  RootSystem root_system;
  std::set<std::size_t> s_p;            // undecorated vertices
  std::set<std::size_t> ringed;         // outside S^p and outside every support
  std::vector<DiagramEdge> edges;
  std::vector<RootDecoration> roots;
  std::vector<DiagramCircle> circles;
  std::vector<std::vector<std::size_t>> lines;  // circles joined because they are the same color
  std::vector<DiagramArrow> arrows;
};

/// The upper circle of each simple spherical root is a color whose pairings all lie
/// in {-1, 0, 1}; arrows record the remaining -1 values.
DiagramDocument build_diagram(const SphericalSystem& s, const std::set<std::size_t>& marked = {});
std::string render_text(const DiagramDocument& d);
std::string render_svg(const DiagramDocument& d);

}  // namespace sphsmooth
