// Families (1)-(20): one simple group times C*, plus (8)-(14) with two simple factors.
// Each builder lists the diagram features it transcribes: decorated roots, the
// undecorated vertices forming S^p, circles/colors and the γ marks.
#include "catalog_builder.hpp"

namespace sphsmooth::detail {
namespace {

std::vector<int> c_chain(int m) {  // α₁+2α₂+…+2αₘ₋₁+αₘ, or α₁+α₂ when m = 2
  std::vector<int> c(static_cast<std::size_t>(m), 2);
  c.front() = 1;
  c.back() = 1;
  return c;
}

std::vector<int> d_chain(int m) {  // 2α₁+…+2αₘ₋₂+αₘ₋₁+αₘ
  std::vector<int> c(static_cast<std::size_t>(m), 2);
  c[static_cast<std::size_t>(m - 2)] = 1;
  c[static_cast<std::size_t>(m - 1)] = 1;
  return c;
}

// Colors of the Example 2.1 diagram: ρ(D_j) is the χ_j column of the printed
// expansion of γ₁..γ₅ (γ₁, γ₂, γ₃ = α₁, α₂, α₃; γ₄, γ₅ = α′₁, α′₂).
void example_colors(SystemBuilder& b) {
  b.color("D1", {{0, 1}, {1, 0}, {2, -1}, {3, 1}, {4, -1}});
  b.color("D2", {{0, -1}, {1, 1}, {2, -1}, {3, 0}, {4, 1}});
  b.color("D3", {{0, 0}, {1, 1}, {2, 0}, {3, 0}, {4, -1}});
  b.color("D4", {{0, -1}, {1, 0}, {2, 1}, {3, 1}, {4, -1}});
  b.color("D5", {{0, 1}, {1, -1}, {2, 1}, {3, -1}, {4, 1}});
}

// Colors A..E of the SL₃ × Sp diagrams, listed over (α₁, α₂, α′₁, α′₂[, γ₅]).
void sl3_sp_colors(SystemBuilder& b, bool chain) {
  b.color("A", {{0, 1}, {2, 1}, {3, -1}});
  b.color("B", {{0, 1}, {1, -1}, {2, -1}, {3, 1}});
  b.color("C", {{0, -1}, {1, 1}, {3, 1}});
  b.color("Dd", {{1, 1}, {3, -1}});
  if (chain)
    b.color("E", {{0, -1}, {2, 1}, {4, -1}});
  else
    b.color("E", {{0, -1}, {2, 1}, {3, -1}});
}

CatalogEntry entry(int id, std::string desc, std::vector<std::string> names, std::string domain,
                   std::function<bool(const Params&)> ok, std::function<int(const Params&)> rank,
                   std::function<CatalogInstance(const Params&)> build) {
  return {id, std::move(desc), std::move(names), std::move(domain), std::move(ok), std::move(rank), std::move(build)};
}

const auto no_params = [](const Params& p) { return p.empty(); };

}  // namespace

void add_single_group_entries(EntryList& out) {
  // (1) one circled vertex α₁, the rest undecorated
  out.push_back(entry(1, "SL_n x C* on C^n", {"n"}, "n >= 2", [](const Params& p) { return p[0] >= 2; },
                      [](const Params& p) { return p[0] - 1; },
                      [](const Params& p) {
                        SystemBuilder b({{'A', p[0] - 1}});
                        b.sp(0, 2, p[0] - 1);
                        return b.build();
                      }));
  // (2) circled α₁ on C_n
  out.push_back(entry(2, "Sp_2n x C* on C^2n", {"n"}, "n >= 2", [](const Params& p) { return p[0] >= 2; },
                      [](const Params& p) { return p[0]; },
                      [](const Params& p) {
                        SystemBuilder b({{'C', p[0]}});
                        b.sp(0, 2, p[0]);
                        return b.build();
                      }));
  // (3) doubled B-chain over the whole diagram, marked
  out.push_back(entry(3, "Spin_2n+1 x C* on C^2n+1", {"n"}, "n >= 2", [](const Params& p) { return p[0] >= 2; },
                      [](const Params& p) { return p[0]; },
                      [](const Params& p) {
                        SystemBuilder b({{'B', p[0]}});
                        b.mark(b.root(0, 1, std::vector<int>(static_cast<std::size_t>(p[0]), 2)));
                        b.sp(0, 2, p[0]);
                        return b.build();
                      }));
  // (4) D-chain over the whole diagram, marked; for n = 3 drawn on A₃ as α₁+2α₂+α₃
  out.push_back(entry(4, "Spin_2n x C* on C^2n", {"n"}, "n >= 3", [](const Params& p) { return p[0] >= 3; },
                      [](const Params& p) { return p[0]; },
                      [](const Params& p) {
                        if (p[0] == 3) {
                          SystemBuilder b({{'A', 3}});
                          b.mark(b.root(0, 1, {1, 2, 1}));
                          b.sp(0, 1, 1);
                          b.sp(0, 3, 3);
                          return b.build();
                        }
                        SystemBuilder b({{'D', p[0]}});
                        b.mark(b.root(0, 1, d_chain(p[0])));
                        b.sp(0, 2, p[0]);
                        return b.build();
                      }));
  // (5) every vertex carries 2α; the last one marked
  out.push_back(entry(5, "SL_n x C* on S^2 C^n", {"n"}, "n >= 2", [](const Params& p) { return p[0] >= 2; },
                      [](const Params& p) { return p[0] - 1; },
                      [](const Params& p) {
                        SystemBuilder b({{'A', p[0] - 1}});
                        std::size_t last = 0;
                        for (int k = 1; k <= p[0] - 1; ++k) last = b.root(0, k, {2});
                        b.mark(last);
                        return b.build();
                      }));
  // (6) α₂ᵢ₋₁+2α₂ᵢ+α₂ᵢ₊₁ decorations, odd vertices undecorated, last vertex circled
  out.push_back(entry(6, "SL_n x C* on Lambda^2 C^n (n odd)", {"n"}, "n >= 5 odd",
                      [](const Params& p) { return p[0] >= 5 && p[0] % 2 == 1; },
                      [](const Params& p) { return p[0] - 1; },
                      [](const Params& p) {
                        SystemBuilder b({{'A', p[0] - 1}});
                        for (int i = 1; i <= (p[0] - 3) / 2; ++i) b.root(0, 2 * i - 1, {1, 2, 1});
                        for (int k = 1; k <= p[0] - 2; k += 2) b.sp(0, k, k);
                        return b.build();
                      }));
  // (7) as (6) ending with a decoration on the last three vertices, marked
  out.push_back(entry(7, "SL_n x C* on Lambda^2 C^n (n even)", {"n"}, "n >= 6 even",
                      [](const Params& p) { return p[0] >= 6 && p[0] % 2 == 0; },
                      [](const Params& p) { return p[0] - 1; },
                      [](const Params& p) {
                        SystemBuilder b({{'A', p[0] - 1}});
                        std::size_t last = 0;
                        for (int i = 1; i <= (p[0] - 2) / 2; ++i) last = b.root(0, 2 * i - 1, {1, 2, 1});
                        for (int k = 1; k <= p[0] - 1; k += 2) b.sp(0, k, k);
                        b.mark(last);
                        return b.build();
                      }));
  // (8) α_k+α′_k joined pairs, last pair marked
  out.push_back(entry(8, "SL_n x SL_n x C* on C^n (x) C^n", {"n"}, "n = n' >= 2",
                      [](const Params& p) { return p[0] >= 2; }, [](const Params& p) { return 2 * (p[0] - 1); },
                      [](const Params& p) {
                        const int n = p[0];
                        SystemBuilder b({{'A', n - 1}, {'A', n - 1}});
                        std::size_t last = 0;
                        for (int k = 1; k <= n - 1; ++k) last = b.root({{b.v(0, k), 1}, {b.v(1, k), 1}});
                        b.mark(last);
                        return b.build();
                      }));
  // (9) α_k+α′_k for k < n, then a circled α′_n and undecorated tail
  out.push_back(entry(9, "SL_n x SL_n' x C* on C^n (x) C^n'", {"n", "n'"}, "n' > n >= 2",
                      [](const Params& p) { return p[0] >= 2 && p[1] > p[0]; },
                      [](const Params& p) { return p[0] + p[1] - 2; },
                      [](const Params& p) {
                        const int n = p[0], m = p[1];
                        SystemBuilder b({{'A', n - 1}, {'A', m - 1}});
                        for (int k = 1; k <= n - 1; ++k) b.root({{b.v(0, k), 1}, {b.v(1, k), 1}});
                        b.sp(1, n + 1, m - 1);
                        return b.build();
                      }));
  // (10) α₁+α′₁ and a marked C-chain over the Sp factor
  out.push_back(entry(10, "SL_2 x Sp_2n' x C* on C^2 (x) C^2n'", {"n'"}, "n' >= 2",
                      [](const Params& p) { return p[0] >= 2; }, [](const Params& p) { return 1 + p[0]; },
                      [](const Params& p) {
                        SystemBuilder b({{'A', 1}, {'C', p[0]}});
                        b.root({{b.v(0, 1), 1}, {b.v(1, 1), 1}});
                        b.mark(b.root(1, 1, c_chain(p[0])));
                        b.sp(1, 3, p[0]);
                        return b.build();
                      }));
  // (11) all four vertices circled; colors A..E with the joining lines of the diagram
  out.push_back(entry(11, "SL_3 x Sp_4 x C* on C^3 (x) C^4", {}, "none", no_params, [](const Params&) { return 4; },
                      [](const Params&) {
                        SystemBuilder b({{'A', 2}, {'C', 2}});
                        b.simple(0, 1), b.simple(0, 2), b.simple(1, 1), b.simple(1, 2);
                        sl3_sp_colors(b, false);
                        return b.build();
                      }));
  // (12) as (11) with a C-chain γ₅ on α′₂..α′_n'
  out.push_back(entry(12, "SL_3 x Sp_2n' x C* on C^3 (x) C^2n'", {"n'"}, "n' >= 3",
                      [](const Params& p) { return p[0] >= 3; }, [](const Params& p) { return 2 + p[0]; },
                      [](const Params& p) {
                        SystemBuilder b({{'A', 2}, {'C', p[0]}});
                        b.simple(0, 1), b.simple(0, 2), b.simple(1, 1), b.simple(1, 2);
                        b.root(1, 2, c_chain(p[0] - 1));
                        b.sp(1, 4, p[0]);
                        sl3_sp_colors(b, true);
                        return b.build();
                      }));
  // (13) the worked example: γ₃ = α₃ marked
  out.push_back(entry(13, "SL_4 x Sp_4 x C* on C^4 (x) C^4", {}, "none", no_params, [](const Params&) { return 5; },
                      [](const Params&) {
                        SystemBuilder b({{'A', 3}, {'C', 2}});
                        b.simple(0, 1), b.simple(0, 2);
                        b.mark(b.simple(0, 3));
                        b.simple(1, 1), b.simple(1, 2);
                        example_colors(b);
                        return b.build();
                      }));
  // (14) as (13) with α₄ circled and an undecorated tail; no mark
  out.push_back(entry(14, "SL_n x Sp_4 x C* on C^n (x) C^4", {"n"}, "n >= 5",
                      [](const Params& p) { return p[0] >= 5; }, [](const Params& p) { return p[0] + 1; },
                      [](const Params& p) {
                        SystemBuilder b({{'A', p[0] - 1}, {'C', 2}});
                        b.simple(0, 1), b.simple(0, 2), b.simple(0, 3), b.simple(1, 1), b.simple(1, 2);
                        b.sp(0, 5, p[0] - 1);
                        example_colors(b);
                        return b.build();
                      }));
  // (15) α₁+2α₂+3α₃ marked
  out.push_back(entry(15, "Spin_7 x C* on C^8", {}, "none", no_params, [](const Params&) { return 3; },
                      [](const Params&) {
                        SystemBuilder b({{'B', 3}});
                        b.mark(b.root(0, 1, {1, 2, 3}));
                        b.sp(0, 1, 2);
                        return b.build();
                      }));
  // (16) B-chain (marked) and α₂+2α₃+3α₄
  out.push_back(entry(16, "Spin_9 x C* on C^16", {}, "none", no_params, [](const Params&) { return 4; },
                      [](const Params&) {
                        SystemBuilder b({{'B', 4}});
                        b.mark(b.root(0, 1, {1, 1, 1, 1}));
                        b.root(0, 2, {1, 2, 3});
                        b.sp(0, 2, 3);
                        return b.build();
                      }));
  // (17) D-chain on α₂..α₅ with α₁ circled
  out.push_back(entry(17, "Spin_10 x C* on C^16", {}, "none", no_params, [](const Params&) { return 5; },
                      [](const Params&) {
                        SystemBuilder b({{'D', 5}});
                        b.root(0, 2, {1, 2, 1, 2});
                        b.sp(0, 2, 4);
                        return b.build();
                      }));
  // (18) 4α₁+2α₂ marked
  out.push_back(entry(18, "G_2 x C* on C^7", {}, "none", no_params, [](const Params&) { return 2; },
                      [](const Params&) {
                        SystemBuilder b({{'G', 2}});
                        b.mark(b.root(0, 1, {4, 2}));
                        b.sp(0, 2, 2);
                        return b.build();
                      }));
  // (19) two D₅-chains, the second marked
  out.push_back(entry(19, "E_6 x C* on C^27", {}, "none", no_params, [](const Params&) { return 6; },
                      [](const Params&) {
                        SystemBuilder b({{'E', 6}});
                        b.root(0, 1, {2, 1, 2, 2, 1});
                        b.mark(b.root(0, 2, {1, 1, 2, 2, 2}));
                        b.sp(0, 2, 5);
                        return b.build();
                      }));
  // (20) two A₃-chains through the branch vertex, both marked
  out.push_back(entry(20, "Spin_8 x (C*)^2 on C^8 (+) C^8", {}, "none", no_params, [](const Params&) { return 4; },
                      [](const Params&) {
                        SystemBuilder b({{'D', 4}});
                        b.mark(b.root(0, 1, {1, 1, 1}));
                        b.mark(b.root({{b.v(0, 1), 1}, {b.v(0, 2), 1}, {b.v(0, 4), 1}}));
                        b.sp(0, 2, 2);
                        return b.build();
                      }));
}

}  // namespace sphsmooth::detail
