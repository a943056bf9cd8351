#include <gtest/gtest.h>

#include <random>

#include "bergepath/berge.hpp"
#include "bergepath/extremal.hpp"
#include "bergepath/karamata.hpp"
#include "support/brute.hpp"

using namespace bergepath;

namespace {

errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return errc::invalid_input;
}

std::vector<Count> pair_table(int size) {
  std::vector<Count> f;
  for (int t = 0; t < size; ++t) f.push_back(binom_s(t, 2));
  return f;
}

}  // namespace

TEST(TuranParams, Validation) {
  EXPECT_EQ(code_of([] { TuranParams(0, 3, 4); }), errc::invalid_parameter);
  EXPECT_EQ(code_of([] { TuranParams(5, 1, 4); }), errc::invalid_parameter);
  EXPECT_EQ(code_of([] { TuranParams(7, 3, 1); }), errc::invalid_parameter);
  TuranParams p(13, 3, 5);
  EXPECT_EQ(p.p(), 2);
  EXPECT_EQ(p.q(), 3);
}

TEST(TuranFormula, Examples) {
  EXPECT_EQ(turan_formula(TuranParams(7, 3, 4)), 5u);
  EXPECT_EQ(turan_formula(TuranParams(12, 3, 4)), 12u);
  EXPECT_EQ(turan_formula(TuranParams(7, 3, 3)), 3u);
  EXPECT_EQ(to_string(turan_regime(TuranParams(7, 3, 3))), "GLSZ");
  EXPECT_EQ(turan_formula(TuranParams(7, 3, 2)), 2u);
  EXPECT_EQ(turan_formula(TuranParams(10, 4, 6)), 16u);
  EXPECT_TRUE(outside_proven_range(TuranParams(6, 2, 3)));
  EXPECT_FALSE(outside_proven_range(TuranParams(6, 3, 4)));
}

TEST(TuranFormula, EqualsTheAveragingBoundWhenKDividesN) {
  for (int r = 3; r <= 6; ++r)
    for (int k = r + 1; k <= 9; ++k)
      for (int p = 1; p <= 5; ++p) {
        const int n = p * k;
        // n/k * C(k, r) with k | n.
        EXPECT_EQ(turan_formula(TuranParams(n, r, k)), static_cast<Count>(p) * binom_s(k, r));
      }
}

TEST(ConstructExtremal, Examples) {
  auto h = construct_extremal(TuranParams(7, 3, 4));
  EXPECT_EQ(h.edge_count(), 5u);
  EXPECT_TRUE(h.contains({0, 1, 2}));
  EXPECT_TRUE(h.contains({4, 5, 6}));
  EXPECT_EQ(components(h).size(), 2u);
  EXPECT_EQ(construct_extremal(TuranParams(4, 3, 4)), complete_hypergraph(4, 3));
  EXPECT_EQ(construct_extremal(TuranParams(3, 3, 4)).edges(), (std::vector<Hyperedge>{{0, 1, 2}}));
  EXPECT_EQ(code_of([] { construct_extremal(TuranParams(8, 3, 3)); }), errc::wrong_regime);
}

TEST(ConstructExtremal, EdgeCountMatchesFormula) {
  for (int r = 2; r <= 5; ++r)
    for (int k = r + 1; k <= 8; ++k)
      for (int n = 1; n <= 40; ++n) {
        TuranParams p(n, r, k);
        EXPECT_EQ(construct_extremal(p).edge_count(), turan_formula(p)) << n << " " << r << " " << k;
      }
}

TEST(ConstructExtremal, IsBergePathFree) {
  for (int k = 4; k <= 5; ++k)
    for (int n = 1; n <= 9; ++n) {
      auto h = construct_extremal(TuranParams(n, 3, k));
      EXPECT_FALSE(find_berge_path(h, k)) << n << " " << k;
      if (n <= 7) {
        EXPECT_FALSE(brute::has_berge_path(h, k));
      }
    }
}

TEST(ConstructSmallK, Examples) {
  auto h = construct_small_k(TuranParams(8, 3, 3));
  EXPECT_EQ(h.edge_count(), 4u);
  EXPECT_EQ(components(h).size(), 2u);
  EXPECT_EQ(construct_small_k(TuranParams(4, 3, 2)).edge_count(), 1u);
  EXPECT_EQ(construct_small_k(TuranParams(12, 5, 4)).edge_count(), 6u);
  EXPECT_EQ(code_of([] { construct_small_k(TuranParams(7, 3, 3)); }), errc::divisibility_violation);
  EXPECT_EQ(code_of([] { construct_small_k(TuranParams(8, 3, 4)); }), errc::wrong_regime);
}

TEST(ConstructSmallK, IsBergePathFree) {
  for (int r = 3; r <= 5; ++r)
    for (int k = 2; k <= r; ++k)
      for (int n = r + 1; n <= 12; n += r + 1) {
        TuranParams p(n, r, k);
        auto h = construct_small_k(p);
        EXPECT_EQ(h.edge_count(), static_cast<Count>((k - 1) * n / (r + 1)));
        EXPECT_FALSE(find_berge_path(h, k)) << n << " " << r << " " << k;
      }
}

TEST(GValue, Examples) {
  std::vector<GraphEdge> k4{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  EXPECT_EQ(g_value(RedBlueGraph(4, {}, k4), 3), 4u);
  EXPECT_EQ(g_value(RedBlueGraph(3, {{0, 1}, {0, 2}, {1, 2}}, {}), 3), 3u);
  EXPECT_EQ(g_value(RedBlueGraph(6, {{4, 5}}, k4), 3), 5u);
}

TEST(GUpperBound, Examples) {
  EXPECT_EQ(g_upper_bound(TuranParams(6, 3, 4)), 5u);
  EXPECT_EQ(g_upper_bound(TuranParams(13, 3, 5)), 23u);
  EXPECT_EQ(g_upper_bound(TuranParams(13, 3, 6)), 40u);
  EXPECT_FALSE(g_bound_in_proof_regime(TuranParams(6, 3, 4)));
  EXPECT_TRUE(g_bound_in_proof_regime(TuranParams(6, 3, 5)));
  EXPECT_EQ(code_of([] { g_upper_bound(TuranParams(6, 3, 3)); }), errc::wrong_regime);
}

TEST(GUpperBound, BranchesAgreeAtTheSeam) {
  for (int r = 3; r <= 10; ++r) EXPECT_EQ(binom_s(r + 2, r), binom_s(r + 2, 2));
}

TEST(GUpperBound, RedEdgesBeatTheBoundWhenKIsRPlusOne) {
  // A red K_{r+1} is P_{r+1}-free and has C(r+1, 2) > C(r+1, r) red edges.
  for (int r = 3; r <= 6; ++r) {
    std::vector<VertexId> vs;
    for (int i = 0; i <= r; ++i) vs.push_back(static_cast<VertexId>(i));
    auto red = complete_graph_on(r + 1, vs);
    RedBlueGraph g(r + 1, red.edges(), {});
    EXPECT_TRUE(is_pk_free(g.underlying(), r + 1));
    EXPECT_GT(g_value(g, r), g_upper_bound(TuranParams(r + 1, r, r + 1)));
  }
}

TEST(ConstructRedBlue, Examples) {
  auto g6 = construct_redblue_extremal(TuranParams(6, 3, 4));
  EXPECT_EQ(g6.blue().edge_count(), 6u);
  EXPECT_EQ(g6.red().edges(), (std::vector<GraphEdge>{{4, 5}}));
  EXPECT_EQ(g_value(g6, 3), 5u);
  EXPECT_EQ(g_value(construct_redblue_extremal(TuranParams(8, 3, 4)), 3), 8u);
  auto g9 = construct_redblue_extremal(TuranParams(9, 3, 4));
  EXPECT_EQ(g_value(g9, 3), 8u);
  EXPECT_TRUE(g9.underlying().neighbors(8).empty());
}

TEST(ConstructRedBlue, AttainsTheBoundAndIsPathFree) {
  for (int r = 2; r <= 6; ++r)
    for (int k = r + 1; k <= 8; ++k)
      for (int n = 1; n <= 24; ++n) {
        TuranParams p(n, r, k);
        auto g = construct_redblue_extremal(p);
        EXPECT_EQ(g_value(g, r), g_upper_bound(p)) << n << " " << r << " " << k;
        EXPECT_LT(longest_path(g.underlying()), k);
      }
}

TEST(KrCountBound, Examples) {
  EXPECT_EQ(kr_count_bound(TuranParams(7, 3, 4)), 5u);
  EXPECT_EQ(kr_count_bound(TuranParams(8, 3, 4)), 8u);
  EXPECT_EQ(kr_count_bound(TuranParams(9, 4, 5)), 6u);
  EXPECT_EQ(code_of([] { kr_count_bound(TuranParams(9, 2, 5)); }), errc::out_of_theorem_range);
  EXPECT_EQ(code_of([] { kr_count_bound(TuranParams(9, 6, 5)); }), errc::out_of_theorem_range);
}

TEST(BergeCycleFreeBound, Examples) {
  EXPECT_EQ(berge_cycle_free_bound(8, 3), 6u);
  EXPECT_EQ(berge_cycle_free_bound(4, 3), 2u);
  EXPECT_EQ(berge_cycle_free_bound(12, 3), 10u);
  EXPECT_EQ(code_of([] { berge_cycle_free_bound(2, 3); }), errc::out_of_theorem_range);
}

TEST(LemiCheck, Examples) {
  EXPECT_EQ(lemi_check(3, 5).part_i, InequalityVerdict::equality);
  EXPECT_EQ(lemi_check(3, 5).part_ii, InequalityVerdict::not_applicable);
  EXPECT_EQ(lemi_check(3, 6, 4).part_ii, InequalityVerdict::strict);
  EXPECT_EQ(lemi_check(4, 6).part_i, InequalityVerdict::equality);
  EXPECT_EQ(lemi_check(3, 4).part_i, InequalityVerdict::not_applicable);
}

TEST(LemiCheck, HoldsOnTheFullGrid) {
  for (int r = 3; r <= 8; ++r)
    for (int k = r + 2; k <= 16; ++k) {
      auto base = lemi_check(r, k);
      EXPECT_TRUE(LemiReport::passes(base.part_i));
      EXPECT_EQ(base.part_i == InequalityVerdict::equality, k == r + 2) << r << " " << k;
      for (int ell = r; ell <= k - 2; ++ell) {
        auto rep = lemi_check(r, k, ell);
        EXPECT_NE(rep.part_ii, InequalityVerdict::not_applicable);
        EXPECT_TRUE(LemiReport::passes(rep.part_ii)) << r << " " << k << " " << ell;
      }
    }
}

TEST(Karamata, Examples) {
  auto f = pair_table(8);
  auto res = karamata_check(f, {3, 1, 0}, {2, 1, 1});
  EXPECT_TRUE(res.majorizes);
  EXPECT_TRUE(res.inequality_holds);
  auto same = karamata_check(f, {2, 2, 1}, {1, 2, 2});
  EXPECT_TRUE(same.majorizes);
  EXPECT_TRUE(same.inequality_holds);
  auto not_major = karamata_check(f, {2, 1, 1}, {3, 1, 0});
  EXPECT_FALSE(not_major.majorizes);
  EXPECT_FALSE(not_major.inequality_holds);
}

TEST(Karamata, Errors) {
  auto f = pair_table(5);
  EXPECT_EQ(code_of([&] { karamata_check(f, {1, 2}, {1}); }), errc::invalid_input);
  EXPECT_EQ(code_of([&] { karamata_check(f, {9}, {9}); }), errc::invalid_input);
  std::vector<Count> concave{0, 5, 6, 6};
  EXPECT_EQ(code_of([&] { karamata_check(concave, {1}, {1}); }), errc::convexity_violation);
}

TEST(Karamata, RandomMajorizingPairs) {
  std::mt19937_64 rng(17);
  for (int r = 3; r <= 5; ++r) {
    std::vector<Count> f;
    for (int t = 0; t < 40; ++t) f.push_back(binom_s(t, r - 1));
    for (int trial = 0; trial < 1000; ++trial) {
      // y is obtained from x by Robin Hood transfers, so x majorizes y.
      const int len = 2 + static_cast<int>(rng() % 8);
      std::vector<std::int64_t> x(static_cast<std::size_t>(len));
      for (auto& v : x) v = static_cast<std::int64_t>(rng() % 30);
      auto y = x;
      for (int step = 0; step < 10; ++step) {
        auto i = rng() % y.size(), j = rng() % y.size();
        if (y[i] < y[j]) std::swap(i, j);
        if (y[i] - y[j] >= 2) {
          --y[i];
          ++y[j];
        }
      }
      auto res = karamata_check(f, x, y);
      EXPECT_TRUE(res.majorizes);
      EXPECT_TRUE(res.inequality_holds);
    }
  }
}
