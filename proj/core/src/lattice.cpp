#include "sphsmooth/lattice.hpp"

#include <algorithm>
#include <sstream>

#include "simplex.hpp"

namespace sphsmooth {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Int(0)) {}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw LatticeError("matrix rows have unequal length");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntVector IntMatrix::row(std::size_t i) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

std::vector<IntVector> IntMatrix::to_rows() const {
  std::vector<IntVector> out;
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw LatticeError("matrix product dimension mismatch");
  IntMatrix p(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) p(i, j) += a * o(k, j);
    }
  return p;
}

RationalCone::RationalCone(std::size_t ambient_rank, std::vector<IntVector> generators)
    : rank_(ambient_rank), gens_(std::move(generators)) {
  for (const auto& g : gens_)
    if (g.size() != rank_) throw LatticeError("cone generator has wrong length");
}

Int dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw LatticeError("pairing of vectors of different length");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat dot(const RatVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw LatticeError("pairing of vectors of different length");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RatVector to_rational(const IntVector& v) { return RatVector(v.begin(), v.end()); }

bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

Int content(const IntVector& v) {
  Int g = 0;
  for (const auto& x : v) g = boost::multiprecision::gcd(g, abs(x));
  return g;
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}
void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}
// row_dst += f * row_src
void add_row(IntMatrix& m, std::size_t dst, std::size_t src, const Int& f) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) += f * m(src, j);
}
void add_col(IntMatrix& m, std::size_t dst, std::size_t src, const Int& f) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) += f * m(i, src);
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  IntMatrix d = a, left = IntMatrix::identity(m), right = IntMatrix::identity(n);
  const std::size_t r = std::min(m, n);
  for (std::size_t k = 0; k < r; ++k) {
    for (;;) {
      std::size_t pi = m, pj = n;
      for (std::size_t i = k; i < m; ++i)
        for (std::size_t j = k; j < n; ++j)
          if (d(i, j) != 0 && (pi == m || abs(d(i, j)) < abs(d(pi, pj)))) pi = i, pj = j;
      if (pi == m) goto finished;
      swap_rows(d, k, pi);
      swap_rows(left, k, pi);
      swap_cols(d, k, pj);
      swap_cols(right, k, pj);
      bool clean = true;
      for (std::size_t i = k + 1; i < m; ++i) {
        if (d(i, k) == 0) continue;
        const Int q = d(i, k) / d(k, k);
        add_row(d, i, k, -q);
        add_row(left, i, k, -q);
        if (d(i, k) != 0) clean = false;
      }
      for (std::size_t j = k + 1; j < n; ++j) {
        if (d(k, j) == 0) continue;
        const Int q = d(k, j) / d(k, k);
        add_col(d, j, k, -q);
        add_col(right, j, k, -q);
        if (d(k, j) != 0) clean = false;
      }
      if (!clean) continue;
      for (std::size_t i = k + 1; i < m && clean; ++i)
        for (std::size_t j = k + 1; j < n; ++j)
          if (d(i, j) % d(k, k) != 0) {
            add_row(d, k, i, 1);
            add_row(left, k, i, 1);
            clean = false;
            break;
          }
      if (clean) break;
    }
    if (d(k, k) < 0) {
      add_row(left, k, k, -2);
      add_row(d, k, k, -2);
    }
  }
finished:
  SmithDecomposition out{left, {}, right};
  for (std::size_t k = 0; k < r; ++k) out.diag.push_back(d(k, k));
  return out;
}

namespace {

// Row echelon form over Q; returns the rank.
std::size_t echelon(std::vector<RatVector>& rows, std::size_t cols) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][c] == 0) continue;
      const Rat f = rows[i][c] / rows[rank][c];
      for (std::size_t j = 0; j < rows[i].size(); ++j) rows[i][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t matrix_rank(const std::vector<IntVector>& rows, std::size_t cols) {
  std::vector<RatVector> r;
  for (const auto& v : rows) {
    if (v.size() != cols) throw LatticeError("dimension mismatch in rank computation");
    r.push_back(to_rational(v));
  }
  return echelon(r, cols);
}

std::vector<IntVector> integer_kernel(const std::vector<IntVector>& rows, std::size_t cols) {
  std::vector<IntVector> out;
  if (rows.empty()) {
    for (std::size_t j = 0; j < cols; ++j) {
      IntVector e(cols, Int(0));
      e[j] = 1;
      out.push_back(e);
    }
    return out;
  }
  for (const auto& v : rows)
    if (v.size() != cols) throw LatticeError("dimension mismatch in kernel computation");
  // left·A·right = D, so the columns of `right` past the rank span the kernel
  const auto snf = smith_normal_form(IntMatrix::from_rows(rows, cols));
  std::size_t r = 0;
  while (r < snf.diag.size() && snf.diag[r] != 0) ++r;
  for (std::size_t j = r; j < cols; ++j) {
    IntVector v(cols);
    for (std::size_t i = 0; i < cols; ++i) v[i] = snf.right(i, j);
    out.push_back(v);
  }
  return out;
}

Int determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw LatticeError("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  std::vector<RatVector> m;
  for (std::size_t i = 0; i < n; ++i) m.push_back(to_rational(a.row(i)));
  Rat det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      const Rat f = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return boost::multiprecision::numerator(det);
}

bool is_part_of_basis(const std::vector<IntVector>& vs, std::size_t ambient_rank) {
  for (const auto& v : vs)
    if (v.size() != ambient_rank) throw LatticeError("vector length differs from ambient rank");
  if (vs.empty()) return true;
  if (vs.size() > ambient_rank) return false;
  const auto snf = smith_normal_form(IntMatrix::from_rows(vs, ambient_rank));
  return std::all_of(snf.diag.begin(), snf.diag.end(), [](const Int& d) { return d == 1; });
}

IntVector primitive_generator(const IntVector& v) {
  const Int g = content(v);
  if (g == 0) throw LatticeError("primitive generator of the zero vector");
  IntVector out;
  for (const auto& x : v) out.push_back(x / g);
  return out;
}

std::optional<RatVector> solve_in_basis(const std::vector<IntVector>& basis,
                                        const IntVector& target) {
  const std::size_t r = basis.size(), n = target.size();
  // Columns of the system are the basis vectors: rows indexed by coordinates.
  std::vector<RatVector> aug(n, RatVector(r + 1));
  for (std::size_t j = 0; j < r; ++j) {
    if (basis[j].size() != n) throw LatticeError("basis vector has wrong length");
    for (std::size_t i = 0; i < n; ++i) aug[i][j] = basis[j][i];
  }
  for (std::size_t i = 0; i < n; ++i) aug[i][r] = target[i];
  const std::size_t rank = echelon(aug, r);
  if (rank < r) throw LatticeError("basis vectors are linearly dependent");
  for (std::size_t i = rank; i < n; ++i)
    if (aug[i][r] != 0) return std::nullopt;
  RatVector x(r);
  for (std::size_t i = 0; i < rank; ++i) {
    std::size_t c = 0;
    while (aug[i][c] == 0) ++c;
    x[c] = aug[i][r] / aug[i][c];
  }
  return x;
}

namespace {

std::vector<IntVector> nonzero(const std::vector<IntVector>& gens) {
  std::vector<IntVector> out;
  for (const auto& g : gens)
    if (!is_zero(g)) out.push_back(g);
  return out;
}

// Columns are generators.
std::vector<RatVector> generator_columns(const std::vector<IntVector>& gens, std::size_t rank) {
  std::vector<RatVector> a(rank, RatVector(gens.size()));
  for (std::size_t j = 0; j < gens.size(); ++j)
    for (std::size_t i = 0; i < rank; ++i) a[i][j] = gens[j][i];
  return a;
}

void check_dim(const RationalCone& c, std::size_t len) {
  if (len != c.ambient_rank()) throw LatticeError("vector length differs from cone ambient rank");
}

}  // namespace

bool cone_contains(const RationalCone& c, const RatVector& v, bool strict) {
  check_dim(c, v.size());
  const auto gens = nonzero(c.generators());
  const bool v_zero = std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
  if (gens.empty()) return v_zero;
  const std::size_t n = c.ambient_rank(), k = gens.size();
  auto a = generator_columns(gens, n);
  if (!strict) return detail::feasible(a, v);
  // G mu + (G 1) s = v, s + t = 1; relint iff max s > 0.
  for (std::size_t i = 0; i < n; ++i) {
    Rat rowsum = 0;
    for (std::size_t j = 0; j < k; ++j) rowsum += a[i][j];
    a[i].push_back(rowsum);
    a[i].push_back(0);
  }
  RatVector last(k + 2, Rat(0));
  last[k] = 1;
  last[k + 1] = 1;
  a.push_back(last);
  RatVector b = v;
  b.push_back(1);
  RatVector obj(k + 2, Rat(0));
  obj[k] = 1;
  const auto res = detail::maximize(a, b, obj);
  return res.status == detail::LpStatus::Optimal && res.value > 0;
}

bool cones_meet_interior(const RationalCone& c, const std::vector<IntVector>& halfspaces) {
  for (const auto& h : halfspaces) check_dim(c, h.size());
  const auto gens = nonzero(c.generators());
  if (gens.empty() || halfspaces.empty()) return true;
  // lambda = 1 + mu with mu >= 0; one slack per half-space.
  const std::size_t k = gens.size(), h = halfspaces.size();
  std::vector<RatVector> a(h, RatVector(k + h, Rat(0)));
  RatVector b(h);
  for (std::size_t r = 0; r < h; ++r) {
    Rat total = 0;
    for (std::size_t j = 0; j < k; ++j) {
      const Int p = dot(gens[j], halfspaces[r]);
      a[r][j] = p;
      total += p;
    }
    a[r][k + r] = 1;
    b[r] = -total;
  }
  return detail::feasible(a, b);
}

bool is_strictly_convex(const RationalCone& c) {
  const auto gens = nonzero(c.generators());
  if (gens.empty()) return true;
  auto a = generator_columns(gens, c.ambient_rank());
  a.push_back(RatVector(gens.size(), Rat(1)));
  RatVector b(c.ambient_rank(), Rat(0));
  b.push_back(1);
  return !detail::feasible(a, b);
}

std::size_t cone_dimension(const RationalCone& c) {
  return matrix_rank(c.generators(), c.ambient_rank());
}

std::vector<IntVector> extremal_rays(const RationalCone& c) {
  std::vector<IntVector> prims;
  for (const auto& g : nonzero(c.generators())) prims.push_back(primitive_generator(g));
  std::sort(prims.begin(), prims.end());
  prims.erase(std::unique(prims.begin(), prims.end()), prims.end());
  std::vector<IntVector> rays;
  for (std::size_t i = 0; i < prims.size(); ++i) {
    std::vector<IntVector> others;
    for (std::size_t j = 0; j < prims.size(); ++j)
      if (j != i) others.push_back(prims[j]);
    if (!cone_contains(RationalCone(c.ambient_rank(), others), to_rational(prims[i]), false))
      rays.push_back(prims[i]);
  }
  return rays;
}

std::string to_string(const IntVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

}  // namespace sphsmooth
