#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sphsmooth {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using IntVector = std::vector<Int>;
using RatVector = std::vector<Rat>;

class LatticeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dense row-major matrix of big integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVector row(std::size_t i) const;
  std::vector<IntVector> to_rows() const;
  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix& other) const;
  bool operator==(const IntMatrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

struct SmithDecomposition {
  IntMatrix left;
  std::vector<Int> diag;  // min(rows, cols) entries, each dividing the next
  IntMatrix right;
};

class RationalCone {
 public:
  RationalCone(std::size_t ambient_rank, std::vector<IntVector> generators);
  std::size_t ambient_rank() const { return rank_; }
  const std::vector<IntVector>& generators() const { return gens_; }

 private:
  std::size_t rank_;
  std::vector<IntVector> gens_;
};

Int dot(const IntVector& a, const IntVector& b);
Rat dot(const RatVector& a, const IntVector& b);
RatVector to_rational(const IntVector& v);
bool is_zero(const IntVector& v);
Int content(const IntVector& v);  // gcd of entries, 0 for the zero vector

SmithDecomposition smith_normal_form(const IntMatrix& a);
std::size_t matrix_rank(const std::vector<IntVector>& rows, std::size_t cols);
Int determinant(const IntMatrix& a);
/// Lattice basis of {x ∈ ℤ^cols : r·x = 0 for every row r}.
std::vector<IntVector> integer_kernel(const std::vector<IntVector>& rows, std::size_t cols);

bool is_part_of_basis(const std::vector<IntVector>& vs, std::size_t ambient_rank);
IntVector primitive_generator(const IntVector& v);

/// Solves x·B = target for x, where B is given as rows. Returns nullopt when no
/// rational solution exists; throws if the rows are dependent.
std::optional<RatVector> solve_in_basis(const std::vector<IntVector>& basis,
                                        const IntVector& target);

std::vector<IntVector> extremal_rays(const RationalCone& c);
bool cone_contains(const RationalCone& c, const RatVector& v, bool strict);
bool cones_meet_interior(const RationalCone& c, const std::vector<IntVector>& halfspaces);
/// C ∩ −C = {0}.
bool is_strictly_convex(const RationalCone& c);
std::size_t cone_dimension(const RationalCone& c);

std::string to_string(const IntVector& v);

}  // namespace sphsmooth
