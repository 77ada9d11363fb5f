#include "simplex.hpp"

namespace sphsmooth::detail {
namespace {

class Tableau {
 public:
  Tableau(const std::vector<RatVector>& a, const RatVector& b, std::size_t n)
      : m_(a.size()), n_(n), width_(n + a.size() + 1), t_(a.size() + 1, RatVector(width_)) {
    for (std::size_t i = 0; i < m_; ++i) {
      const bool flip = b[i] < 0;
      for (std::size_t j = 0; j < n_; ++j) t_[i][j] = flip ? Rat(-a[i][j]) : a[i][j];
      t_[i][n_ + i] = 1;
      t_[i][width_ - 1] = flip ? Rat(-b[i]) : b[i];
      basis_.push_back(n_ + i);
    }
  }

  // Loads objective "maximize c·x" over the first `cols` columns into the z row.
  void set_objective(const RatVector& c) {
    RatVector& z = t_[m_];
    for (std::size_t j = 0; j < width_; ++j) z[j] = j < c.size() ? Rat(-c[j]) : Rat(0);
    for (std::size_t i = 0; i < m_; ++i) {
      const std::size_t bj = basis_[i];
      const Rat cb = bj < c.size() ? c[bj] : Rat(0);
      if (cb == 0) continue;
      for (std::size_t j = 0; j < width_; ++j) z[j] += cb * t_[i][j];
    }
  }

  // Returns false when unbounded.
  bool optimize(std::size_t allowed_cols) {
    for (;;) {
      std::size_t enter = width_;
      for (std::size_t j = 0; j < allowed_cols; ++j) {
        if (t_[m_][j] < 0) {
          enter = j;
          break;
        }
      }
      if (enter == width_) return true;
      std::size_t leave = m_;
      Rat best;
      for (std::size_t i = 0; i < m_; ++i) {
        if (t_[i][enter] <= 0) continue;
        Rat ratio = t_[i][width_ - 1] / t_[i][enter];
        if (leave == m_ || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == m_) return false;
      pivot(leave, enter);
    }
  }

  void drive_out_artificials() {
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        if (t_[i][j] != 0) {
          pivot(i, j);
          break;
        }
      }
    }
  }

  Rat value() const { return t_[m_][width_ - 1]; }

  RatVector solution() const {
    RatVector x(n_);
    for (std::size_t i = 0; i < m_; ++i)
      if (basis_[i] < n_) x[basis_[i]] = t_[i][width_ - 1];
    return x;
  }

 private:
  void pivot(std::size_t r, std::size_t c) {
    const Rat p = t_[r][c];
    for (auto& v : t_[r]) v /= p;
    for (std::size_t i = 0; i <= m_; ++i) {
      if (i == r || t_[i][c] == 0) continue;
      const Rat f = t_[i][c];
      for (std::size_t j = 0; j < width_; ++j) t_[i][j] -= f * t_[r][j];
    }
    basis_[r] = c;
  }

  std::size_t m_, n_, width_;
  std::vector<RatVector> t_;
  std::vector<std::size_t> basis_;
};

}  // namespace

LpResult maximize(const std::vector<RatVector>& a, const RatVector& b, const RatVector& c) {
  const std::size_t n = c.size();
  Tableau tab(a, b, n);
  RatVector phase1(n + a.size(), Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i) phase1[n + i] = -1;
  tab.set_objective(phase1);
  tab.optimize(n + a.size());
  LpResult res;
  if (tab.value() != 0) return res;
  tab.drive_out_artificials();
  tab.set_objective(c);
  if (!tab.optimize(n)) {
    res.status = LpStatus::Unbounded;
    return res;
  }
  res.status = LpStatus::Optimal;
  res.value = tab.value();
  res.x = tab.solution();
  return res;
}

bool feasible(const std::vector<RatVector>& a, const RatVector& b) {
  const std::size_t n = a.empty() ? 0 : a.front().size();
  return maximize(a, b, RatVector(n, Rat(0))).status == LpStatus::Optimal;
}

}  // namespace sphsmooth::detail
