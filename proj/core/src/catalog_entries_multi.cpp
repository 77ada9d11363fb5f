// Families (21)-(42): sums of two simple modules, with (C*)^2 acting by scalars.
#include "catalog_builder.hpp"

namespace sphsmooth::detail {
namespace {

std::vector<int> c_chain(int m) {
  std::vector<int> c(static_cast<std::size_t>(m), 2);
  c.front() = 1;
  c.back() = 1;
  return c;
}

CatalogEntry entry(int id, std::string desc, std::vector<std::string> names, std::string domain,
                   std::function<bool(const Params&)> ok, std::function<int(const Params&)> rank,
                   std::function<CatalogInstance(const Params&)> build) {
  return {id, std::move(desc), std::move(names), std::move(domain), std::move(ok), std::move(rank), std::move(build)};
}

// Colors given as signed sums: root index -> list of (label, coefficient).
class Expansion {
 public:
  void add(std::size_t root, const std::string& label, int c) {
    if (!order_.count(label)) order_[label] = labels_.size(), labels_.push_back(label);
    values_[label][root] += c;
  }
  void emit(SystemBuilder& b) const {
    for (const auto& l : labels_) b.color(l, values_.at(l));
  }

 private:
  std::vector<std::string> labels_;
  std::map<std::string, std::size_t> order_;
  std::map<std::string, std::map<std::size_t, int>> values_;
};

std::string chi(int k) { return "chi" + std::to_string(k); }
std::string psi(int k) { return "psi" + std::to_string(k); }

// Families (27)-(30). In basic-weight coordinates
//   α_j  = χ_j − χ_{j+1} + ψ_j − ψ_{j−1},   α′_j = χ_j − χ_{j−1} + ψ_{j−1} − ψ_j,
// where χ_k (k ≤ top) and ψ_k (k ≤ psi_top) are colors; other indices are dropped
// (they are type-b colors or the invariant divisor).
CatalogInstance tensor_plus_vector(int rank_a, int rank_b, int sigma_a, int sigma_b, int top, int psi_top,
                                   int sp_comp, int sp_first, int sp_last, int marked_comp) {
  SystemBuilder b({{'A', rank_a}, {'A', rank_b}});
  std::vector<std::size_t> a(static_cast<std::size_t>(sigma_a) + 1), ap(static_cast<std::size_t>(sigma_b) + 1);
  for (int j = 1; j <= sigma_a; ++j) a[static_cast<std::size_t>(j)] = b.simple(0, j);
  for (int j = 1; j <= sigma_b; ++j) ap[static_cast<std::size_t>(j)] = b.simple(1, j);
  b.sp(sp_comp, sp_first, sp_last);
  Expansion e;
  auto term = [&](std::size_t root, bool is_chi, int k, int c) {
    if (k < (is_chi ? 1 : 0) || k > (is_chi ? top : psi_top)) return;
    e.add(root, is_chi ? chi(k) : psi(k), c);
  };
  for (int k = 1; k <= top; ++k) e.add(a.size() > 1 ? a[1] : ap[1], chi(k), 0);
  for (int k = 0; k <= psi_top; ++k) e.add(ap[1], psi(k), 0);
  for (int j = 1; j <= sigma_a; ++j) {
    const auto r = a[static_cast<std::size_t>(j)];
    term(r, true, j, 1), term(r, true, j + 1, -1), term(r, false, j, 1), term(r, false, j - 1, -1);
  }
  for (int j = 1; j <= sigma_b; ++j) {
    const auto r = ap[static_cast<std::size_t>(j)];
    term(r, true, j, 1), term(r, true, j - 1, -1), term(r, false, j - 1, 1), term(r, false, j, -1);
  }
  e.emit(b);
  if (marked_comp == 0) b.mark(a[static_cast<std::size_t>(sigma_a)]);
  if (marked_comp == 1) b.mark(ap[static_cast<std::size_t>(sigma_b)]);
  return b.build();
}

// Families (31)-(34). In basic-weight coordinates
//   α_j = ψ_j − χ_{j−1} − ψ_{j+1} + χ_j,   α′_j = χ_j − ψ_j − χ_{j+1} + ψ_{j+1},
// keeping χ_k for k ≤ chi_top and ψ_k for k ≤ psi_top. With `phi` set, ψ_{psi_top+1}
// is the extra color φ.
struct DualFamily {
  int rank_a, rank_b;
  int sigma_count;  // α_1..α_s and α′_1..α′_s
  int chi_top, psi_top;
  bool phi;
  int chain_first = 0, chain_last = 0;  // extra root α′_first+…+α′_last, pairing −1 with ψ_first
  int sp_comp = 0, sp_first = 1, sp_last = 0;
  bool mark_last_alpha = false;
};

CatalogInstance tensor_plus_dual(const DualFamily& f) {
  SystemBuilder b({{'A', f.rank_a}, {'A', f.rank_b}});
  std::vector<std::size_t> a(static_cast<std::size_t>(f.sigma_count) + 1), ap(a.size());
  for (int j = 1; j <= f.sigma_count; ++j) a[static_cast<std::size_t>(j)] = b.simple(0, j);
  for (int j = 1; j <= f.sigma_count; ++j) ap[static_cast<std::size_t>(j)] = b.simple(1, j);
  b.sp(f.sp_comp, f.sp_first, f.sp_last);
  Expansion e;
  for (int k = 1; k <= f.chi_top; ++k) e.add(a[1], chi(k), 0);
  for (int k = 1; k <= f.psi_top; ++k) e.add(a[1], psi(k), 0);
  if (f.phi) e.add(a[1], "phi", 0);
  auto term = [&](std::size_t root, bool is_chi, int k, int c) {
    if (k < 1) return;
    if (is_chi) {
      if (k <= f.chi_top) e.add(root, chi(k), c);
    } else if (k <= f.psi_top) {
      e.add(root, psi(k), c);
    } else if (f.phi && k == f.psi_top + 1) {
      e.add(root, "phi", c);
    }
  };
  for (int j = 1; j <= f.sigma_count; ++j) {
    const auto r = a[static_cast<std::size_t>(j)];
    term(r, false, j, 1), term(r, true, j - 1, -1), term(r, false, j + 1, -1), term(r, true, j, 1);
    const auto rp = ap[static_cast<std::size_t>(j)];
    term(rp, true, j, 1), term(rp, false, j, -1), term(rp, true, j + 1, -1), term(rp, false, j + 1, 1);
  }
  if (f.chain_first > 0) term(b.chain(1, f.chain_first, f.chain_last), false, f.chain_first, -1);
  e.emit(b);
  if (f.mark_last_alpha) b.mark(a[static_cast<std::size_t>(f.sigma_count)]);
  return b.build();
}

// Families (35)-(42): colors P, Q, R with pairings given per spherical root.
void pqr(SystemBuilder& b, const std::vector<std::size_t>& roots, const std::vector<std::vector<int>>& rows) {
  const char* names[] = {"P", "Q", "R"};
  for (std::size_t k = 0; k < rows.size(); ++k) {
    std::map<std::size_t, int> vals;
    for (std::size_t i = 0; i < roots.size(); ++i) vals[roots[i]] = rows[k][i];
    b.color(names[k], vals);
  }
}

const std::vector<std::vector<int>> kPqr3 = {{1, 1, -1}, {1, -1, 1}, {-1, 1, 1}};
const std::vector<std::vector<int>> kPqr4 = {{1, 0, 1, -1}, {1, 0, -1, 1}, {-1, 0, 1, 1}};

}  // namespace

void add_multi_module_entries(EntryList& out) {
  // (21) α₁ circled above and below, marked
  out.push_back(entry(21, "SL_2 x (C*)^2 on C^2 (+) C^2", {}, "none", [](const Params& p) { return p.empty(); },
                      [](const Params&) { return 1; },
                      [](const Params&) {
                        SystemBuilder b({{'A', 1}});
                        const auto a = b.simple(0, 1);
                        b.circles(a, "D+", "D-");
                        b.mark(a);
                        return b.build();
                      }));
  // (22) α₁ circled above and below, α₂ circled, tail undecorated
  out.push_back(entry(22, "SL_n x (C*)^2 on C^n (+) C^n", {"n"}, "n >= 3", [](const Params& p) { return p[0] >= 3; },
                      [](const Params& p) { return p[0] - 1; },
                      [](const Params& p) {
                        SystemBuilder b({{'A', p[0] - 1}});
                        b.circles(b.simple(0, 1), "D+", "D-");
                        b.sp(0, 3, p[0] - 1);
                        return b.build();
                      }));
  // (23) A-chain over the whole diagram, marked
  out.push_back(entry(23, "SL_n x (C*)^2 on C^n (+) (C^n)*", {"n"}, "n >= 3", [](const Params& p) { return p[0] >= 3; },
                      [](const Params& p) { return p[0] - 1; },
                      [](const Params& p) {
                        SystemBuilder b({{'A', p[0] - 1}});
                        b.mark(b.chain(0, 1, p[0] - 1));
                        b.sp(0, 2, p[0] - 2);
                        return b.build();
                      }));
  // (24) overlapping α_i+α_{i+1} decorations, the last one marked
  out.push_back(entry(24, "SL_n x (C*)^2 on C^n (+) Lambda^2 C^n", {"n"}, "n >= 4",
                      [](const Params& p) { return p[0] >= 4; }, [](const Params& p) { return p[0] - 1; },
                      [](const Params& p) {
                        SystemBuilder b({{'A', p[0] - 1}});
                        std::size_t last = 0;
                        for (int i = 1; i <= p[0] - 2; ++i) last = b.chain(0, i, i + 1);
                        b.mark(last);
                        return b.build();
                      }));
  // (25) same decorations, the second to last marked
  out.push_back(entry(25, "SL_n x (C*)^2 on (C^n)* (+) Lambda^2 C^n (n even)", {"n"}, "n >= 4 even",
                      [](const Params& p) { return p[0] >= 4 && p[0] % 2 == 0; },
                      [](const Params& p) { return p[0] - 1; },
                      [](const Params& p) {
                        SystemBuilder b({{'A', p[0] - 1}});
                        std::vector<std::size_t> roots;
                        for (int i = 1; i <= p[0] - 2; ++i) roots.push_back(b.chain(0, i, i + 1));
                        b.mark(roots[static_cast<std::size_t>(p[0] - 4)]);
                        return b.build();
                      }));
  // (26) α_i+α_{i+1} for i ≤ n−3 and α_{n−1} circled above and below
  out.push_back(entry(26, "SL_n x (C*)^2 on (C^n)* (+) Lambda^2 C^n (n odd)", {"n"}, "n >= 5 odd",
                      [](const Params& p) { return p[0] >= 5 && p[0] % 2 == 1; },
                      [](const Params& p) { return p[0] - 1; },
                      [](const Params& p) {
                        SystemBuilder b({{'A', p[0] - 1}});
                        for (int i = 1; i <= p[0] - 3; ++i) b.chain(0, i, i + 1);
                        b.circles(b.simple(0, p[0] - 1), "Da", "Db");
                        return b.build();
                      }));
  // (27) all of α₁..α_{n−1}, α′₁..α′_n circled; α′_{n+1} outside S^p; tail undecorated
  out.push_back(entry(27, "SL_n x SL_n' x (C*)^2 on (C^n (x) C^n') (+) C^n'", {"n", "n'"}, "2 <= n < n'-1",
                      [](const Params& p) { return p[0] >= 2 && p[0] < p[1] - 1; },
                      [](const Params& p) { return p[0] + p[1] - 2; },
                      [](const Params& p) {
                        const int n = p[0], m = p[1];
                        return tensor_plus_vector(n - 1, m - 1, n - 1, n, n, n - 1, 1, n + 2, m - 1, -1);
                      }));
  // (28) as (27) without tail; ψ_n is the invariant, so α′_n is marked
  out.push_back(entry(28, "SL_n x SL_n+1 x (C*)^2 on (C^n (x) C^n+1) (+) C^n+1", {"n"}, "2 <= n = n'-1",
                      [](const Params& p) { return p[0] >= 2; }, [](const Params& p) { return 2 * p[0] - 1; },
                      [](const Params& p) {
                        const int n = p[0];
                        return tensor_plus_vector(n - 1, n, n - 1, n, n, n - 1, 1, 1, 0, 1);
                      }));
  // (29) n = n': χ_n is the invariant, so α_{n−1} is marked
  out.push_back(entry(29, "SL_n x SL_n x (C*)^2 on (C^n (x) C^n) (+) C^n", {"n"}, "2 <= n = n'",
                      [](const Params& p) { return p[0] >= 2; }, [](const Params& p) { return 2 * (p[0] - 1); },
                      [](const Params& p) {
                        const int n = p[0];
                        return tensor_plus_vector(n - 1, n - 1, n - 1, n - 1, n - 1, n - 1, 1, 1, 0, 0);
                      }));
  // (30) n > n': α_{n'} outside S^p, tail undecorated
  out.push_back(entry(30, "SL_n x SL_n' x (C*)^2 on (C^n (x) C^n') (+) C^n'", {"n", "n'"}, "n > n' >= 2",
                      [](const Params& p) { return p[1] >= 2 && p[0] > p[1]; },
                      [](const Params& p) { return p[0] + p[1] - 2; },
                      [](const Params& p) {
                        const int n = p[0], m = p[1];
                        return tensor_plus_vector(n - 1, m - 1, m - 1, m - 1, m - 1, m - 1, 0, m + 1, n - 1, -1);
                      }));
  // (31) paired columns up to n−1, then an A-chain on α′_n..α′_{n'−1}
  out.push_back(entry(31, "SL_n x SL_n' x (C*)^2 on (C^n (x) C^n') (+) (C^n')*", {"n", "n'"}, "2 <= n < n'-1",
                      [](const Params& p) { return p[0] >= 2 && p[0] < p[1] - 1; },
                      [](const Params& p) { return p[0] + p[1] - 2; },
                      [](const Params& p) {
                        const int n = p[0], m = p[1];
                        DualFamily f{n - 1, m - 1, n - 1, n - 1, n, false};
                        f.chain_first = n, f.chain_last = m - 1;
                        f.sp_comp = 1, f.sp_first = n + 1, f.sp_last = m - 2;
                        return tensor_plus_dual(f);
                      }));
  // (32) α′_n circled as well
  out.push_back(entry(32, "SL_n x SL_n+1 x (C*)^2 on (C^n (x) C^n+1) (+) (C^n+1)*", {"n"}, "2 <= n = n'-1",
                      [](const Params& p) { return p[0] >= 2; }, [](const Params& p) { return 2 * p[0] - 1; },
                      [](const Params& p) {
                        const int n = p[0];
                        SystemBuilder b({{'A', n - 1}, {'A', n}});
                        Expansion e;
                        std::vector<std::size_t> a(static_cast<std::size_t>(n) + 1), ap(a.size());
                        for (int j = 1; j <= n - 1; ++j) a[static_cast<std::size_t>(j)] = b.simple(0, j);
                        for (int j = 1; j <= n; ++j) ap[static_cast<std::size_t>(j)] = b.simple(1, j);
                        for (int k = 1; k <= n; ++k) e.add(a[1], chi(k), 0);
                        for (int k = 1; k <= n; ++k) e.add(a[1], psi(k), 0);
                        e.add(a[1], "phi", 0);
                        for (int j = 1; j <= n - 1; ++j) {
                          const auto r = a[static_cast<std::size_t>(j)];
                          e.add(r, psi(j), 1), e.add(r, chi(j), 1), e.add(r, psi(j + 1), -1);
                          if (j > 1) e.add(r, chi(j - 1), -1);
                          const auto rp = ap[static_cast<std::size_t>(j)];
                          e.add(rp, chi(j), 1), e.add(rp, psi(j), -1), e.add(rp, chi(j + 1), -1),
                              e.add(rp, psi(j + 1), 1);
                        }
                        const auto last = ap[static_cast<std::size_t>(n)];
                        e.add(last, chi(n), 1), e.add(last, psi(n), -1), e.add(last, "phi", 1);
                        e.emit(b);
                        return b.build();
                      }));
  // (33) n = n': α_{n−1} marked
  out.push_back(entry(33, "SL_n x SL_n x (C*)^2 on (C^n (x) C^n) (+) (C^n)*", {"n"}, "2 <= n = n'",
                      [](const Params& p) { return p[0] >= 2; }, [](const Params& p) { return 2 * (p[0] - 1); },
                      [](const Params& p) {
                        const int n = p[0];
                        DualFamily f{n - 1, n - 1, n - 1, n - 1, n - 1, true};
                        f.mark_last_alpha = true;
                        return tensor_plus_dual(f);
                      }));
  // (34) n > n': α_{n'} outside S^p, tail undecorated
  out.push_back(entry(34, "SL_n x SL_n' x (C*)^2 on (C^n (x) C^n') (+) (C^n')*", {"n", "n'"}, "n > n' >= 2",
                      [](const Params& p) { return p[1] >= 2 && p[0] > p[1]; },
                      [](const Params& p) { return p[0] + p[1] - 2; },
                      [](const Params& p) {
                        const int n = p[0], m = p[1];
                        DualFamily f{n - 1, m - 1, m - 1, m - 1, m - 1, true};
                        f.sp_comp = 0, f.sp_first = m + 1, f.sp_last = n - 1;
                        return tensor_plus_dual(f);
                      }));
  // (35) three A1 vertices joined pairwise; outer two marked
  out.push_back(entry(35, "SL_2 x SL_2 x SL_2 x (C*)^2 on (C^2 (x) C^2) (+) (C^2 (x) C^2)", {}, "none",
                      [](const Params& p) { return p.empty(); }, [](const Params&) { return 3; },
                      [](const Params&) {
                        SystemBuilder b({{'A', 1}, {'A', 1}, {'A', 1}});
                        const std::vector<std::size_t> r{b.simple(0, 1), b.simple(1, 1), b.simple(2, 1)};
                        pqr(b, r, kPqr3);
                        b.mark(r[0]);
                        b.mark(r[2]);
                        return b.build();
                      }));
  out.push_back(entry(36, "SL_n x SL_2 x SL_2 x (C*)^2 on (C^n (x) C^2) (+) (C^2 (x) C^2)", {"n"}, "n >= 3",
                      [](const Params& p) { return p[0] >= 3; }, [](const Params& p) { return p[0] + 1; },
                      [](const Params& p) {
                        SystemBuilder b({{'A', p[0] - 1}, {'A', 1}, {'A', 1}});
                        const std::vector<std::size_t> r{b.simple(0, 1), b.simple(1, 1), b.simple(2, 1)};
                        b.sp(0, 3, p[0] - 1);
                        pqr(b, r, kPqr3);
                        b.mark(r[2]);
                        return b.build();
                      }));
  out.push_back(entry(37, "SL_n x SL_2 x SL_n'' x (C*)^2 on (C^n (x) C^2) (+) (C^2 (x) C^n'')", {"n", "n''"},
                      "n >= n'' >= 3", [](const Params& p) { return p[1] >= 3 && p[0] >= p[1]; },
                      [](const Params& p) { return p[0] + p[1] - 1; },
                      [](const Params& p) {
                        SystemBuilder b({{'A', p[0] - 1}, {'A', 1}, {'A', p[1] - 1}});
                        const std::vector<std::size_t> r{b.simple(0, 1), b.simple(1, 1), b.simple(2, 1)};
                        b.sp(0, 3, p[0] - 1);
                        b.sp(2, 3, p[1] - 1);
                        pqr(b, r, kPqr3);
                        return b.build();
                      }));
  // (38)-(42): α₁ of C_n together with the chain α₁+2α₂+…+2α_{n−1}+α_n, which is marked
  out.push_back(entry(38, "Sp_2n x (C*)^2 on C^2n (+) C^2n", {"n"}, "n >= 2", [](const Params& p) { return p[0] >= 2; },
                      [](const Params& p) { return p[0]; },
                      [](const Params& p) {
                        SystemBuilder b({{'C', p[0]}});
                        const auto a = b.simple(0, 1);
                        b.mark(b.root(0, 1, c_chain(p[0])));
                        b.sp(0, 3, p[0]);
                        b.circles(a, "P", "Q");
                        return b.build();
                      }));
  out.push_back(entry(39, "Sp_2n x SL_2 x (C*)^2 on (C^2n (x) C^2) (+) C^2", {"n"}, "n >= 2",
                      [](const Params& p) { return p[0] >= 2; }, [](const Params& p) { return p[0] + 1; },
                      [](const Params& p) {
                        SystemBuilder b({{'C', p[0]}, {'A', 1}});
                        const std::vector<std::size_t> r{b.simple(0, 1), b.root(0, 1, c_chain(p[0])), b.simple(1, 1)};
                        b.sp(0, 3, p[0]);
                        pqr(b, r, {{1, 0, 1}, {1, 0, -1}, {-1, 0, 1}});
                        b.mark(r[1]);
                        return b.build();
                      }));
  out.push_back(entry(40, "Sp_2n x SL_2 x SL_2 x (C*)^2 on (C^2n (x) C^2) (+) (C^2 (x) C^2)", {"n"}, "n >= 2",
                      [](const Params& p) { return p[0] >= 2; }, [](const Params& p) { return p[0] + 2; },
                      [](const Params& p) {
                        SystemBuilder b({{'C', p[0]}, {'A', 1}, {'A', 1}});
                        const std::vector<std::size_t> r{b.simple(0, 1), b.root(0, 1, c_chain(p[0])), b.simple(1, 1),
                                                         b.simple(2, 1)};
                        b.sp(0, 3, p[0]);
                        pqr(b, r, kPqr4);
                        b.mark(r[1]);
                        b.mark(r[3]);
                        return b.build();
                      }));
  out.push_back(entry(41, "Sp_2n x SL_2 x SL_n'' x (C*)^2 on (C^2n (x) C^2) (+) (C^2 (x) C^n'')", {"n", "n''"},
                      "n >= 2, n'' >= 3", [](const Params& p) { return p[0] >= 2 && p[1] >= 3; },
                      [](const Params& p) { return p[0] + p[1]; },
                      [](const Params& p) {
                        SystemBuilder b({{'C', p[0]}, {'A', 1}, {'A', p[1] - 1}});
                        const std::vector<std::size_t> r{b.simple(0, 1), b.root(0, 1, c_chain(p[0])), b.simple(1, 1),
                                                         b.simple(2, 1)};
                        b.sp(0, 3, p[0]);
                        b.sp(2, 3, p[1] - 1);
                        pqr(b, r, kPqr4);
                        b.mark(r[1]);
                        return b.build();
                      }));
  out.push_back(entry(42, "Sp_2n x SL_2 x Sp_2n'' x (C*)^2 on (C^2n (x) C^2) (+) (C^2 (x) C^2n'')", {"n", "n''"},
                      "n, n'' >= 2", [](const Params& p) { return p[0] >= 2 && p[1] >= 2; },
                      [](const Params& p) { return p[0] + 1 + p[1]; },
                      [](const Params& p) {
                        SystemBuilder b({{'C', p[0]}, {'A', 1}, {'C', p[1]}});
                        const std::vector<std::size_t> r{b.simple(0, 1), b.root(0, 1, c_chain(p[0])), b.simple(1, 1),
                                                         b.simple(2, 1)};
                        const auto chain2 = b.root(2, 1, c_chain(p[1]));
                        b.sp(0, 3, p[0]);
                        b.sp(2, 3, p[1]);
                        pqr(b, r, kPqr4);
                        b.mark(r[1]);
                        b.mark(chain2);
                        return b.build();
                      }));
}

}  // namespace sphsmooth::detail
