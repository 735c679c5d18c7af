#include <gtest/gtest.h>

#include <random>

#include "mpramsey/mpramsey.hpp"
#include "oracles.hpp"

using namespace mpramsey;

namespace {

constexpr auto kYes = Certification::guaranteed;
constexpr auto kNo = Certification::unknown;

BalancedBipartite minus_perfect_matching(int m) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (i != j) edges.emplace_back(i, j);
    }
  }
  return BalancedBipartite(m, m, edges);
}

BalancedBipartite bipartite_c6() {
  const std::vector<std::pair<int, int>> edges{{0, 0}, {0, 1}, {1, 1}, {1, 2}, {2, 2}, {2, 0}};
  return BalancedBipartite(3, 3, edges);
}

BalancedBipartite random_bipartite(std::mt19937_64& rng, int m, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (coin(rng)) edges.emplace_back(i, j);
    }
  }
  return BalancedBipartite(m, m, edges);
}

}  // namespace

TEST(Bipartite, Construction) {
  const std::vector<std::pair<int, int>> none;
  EXPECT_THROW(BalancedBipartite(3, 2, none), InvalidArgument);
  EXPECT_THROW(BalancedBipartite(0, 0, none), InvalidArgument);
  const std::vector<std::pair<int, int>> bad{{0, 3}};
  EXPECT_THROW(BalancedBipartite(3, 3, bad), InvalidArgument);
  const auto c6 = bipartite_c6();
  EXPECT_EQ(c6.to_graph().edge_count(), 6u);
  for (int i = 0; i < 3; ++i) EXPECT_EQ(c6.degree_u(i), 2);
}

TEST(Chvatal, Examples) {
  for (int m = 2; m <= 6; ++m) EXPECT_EQ(chvatal_certifier(BalancedBipartite::complete(m)), kYes);
  EXPECT_EQ(chvatal_certifier(bipartite_c6()), kYes);
  EXPECT_TRUE(oracle::hamiltonian(oracle::matrix_of(bipartite_c6().to_graph())));

  // K_{4,4} with every edge at u_0 removed.
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) edges.emplace_back(i, j);
  }
  EXPECT_EQ(chvatal_certifier(BalancedBipartite(4, 4, edges)), kNo);
  EXPECT_THROW(chvatal_certifier(BalancedBipartite::complete(1)), InvalidArgument);
}

TEST(Berge, Examples) {
  const auto h = minus_perfect_matching(4);
  EXPECT_EQ(berge_certifier(h), kYes);
  EXPECT_TRUE(oracle::hamiltonian_biconnected(oracle::matrix_of(h.to_graph()), 4));

  const auto k22 = BalancedBipartite::complete(2);
  EXPECT_EQ(berge_certifier(k22), kYes);
  EXPECT_TRUE(oracle::hamiltonian_biconnected(oracle::matrix_of(k22.to_graph()), 2));

  EXPECT_EQ(berge_certifier(minus_perfect_matching(3)), kNo);
}

TEST(LasVergnas, Examples) {
  for (int m = 2; m <= 5; ++m) {
    for (int q = 0; q < m; ++q) EXPECT_EQ(las_vergnas_certifier(BalancedBipartite::complete(m), q), kYes);
  }
  EXPECT_EQ(las_vergnas_certifier(bipartite_c6(), 0), kYes);

  const auto h = minus_perfect_matching(4);
  EXPECT_EQ(las_vergnas_certifier(h, 1), kYes);
  EXPECT_TRUE(oracle::every_path_system_extends(oracle::matrix_of(h.to_graph()), 1));

  EXPECT_THROW(las_vergnas_certifier(h, 4), InvalidArgument);
  EXPECT_THROW(las_vergnas_certifier(h, -1), InvalidArgument);
}

TEST(HamiltonianCycleThrough, Examples) {
  const auto k33 = BalancedBipartite::complete(3).to_graph();
  const std::vector<Edge> one{{0, 4}};
  const auto hit = hamiltonian_cycle_through(k33, one);
  ASSERT_TRUE(hit);
  EXPECT_TRUE(validate_witness(k33, *hit));
  EXPECT_EQ(hit->size(), 6);

  const auto c6 = bipartite_c6().to_graph();
  // u_0 - v_0 - u_2 meet at v_0 (vertex 3).
  const std::vector<Edge> adjacent{{0, 3}, {2, 3}};
  EXPECT_TRUE(hamiltonian_cycle_through(c6, adjacent));

  const std::vector<Edge> triangle{{0, 1}, {1, 2}, {0, 2}};
  EXPECT_THROW(hamiltonian_cycle_through(SimpleGraph(3), triangle), InvalidArgument);
  const std::vector<Edge> missing{{0, 1}};
  EXPECT_FALSE(hamiltonian_cycle_through(k33, missing));
}

TEST(HamiltonianCycleThrough, AgreesWithOracle) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 7);
    const auto g = oracle::random_graph(rng, n, 0.6);
    const auto a = oracle::matrix_of(g);
    const int q = static_cast<int>(rng() % 3);
    oracle::for_each_path_system(a, q, [&](const std::vector<std::pair<int, int>>& paths) {
      std::vector<Edge> req;
      for (auto [u, v] : paths) req.push_back({u, v});
      const auto got = hamiltonian_cycle_through(g, req);
      EXPECT_EQ(got.has_value(), oracle::ham_cycle_through(a, paths)) << "trial " << trial;
      if (got) {
        EXPECT_TRUE(validate_witness(g, *got));
        EXPECT_EQ(got->size(), n);
      }
      return true;
    });
  }
}

TEST(HamiltonianPathBetween, AgreesWithOracle) {
  std::mt19937_64 rng(78);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 8);
    const auto g = oracle::random_graph(rng, n, 0.5);
    const auto a = oracle::matrix_of(g);
    for (int s = 0; s < n; ++s) {
      for (int t = 0; t < n; ++t) {
        if (s == t) continue;
        const auto got = hamiltonian_path_between(g, s, t);
        ASSERT_EQ(got.has_value(), oracle::ham_path_between(a, s, t));
        if (got) {
          EXPECT_EQ(got->vertices.front(), s);
          EXPECT_EQ(got->vertices.back(), t);
          EXPECT_TRUE(validate_witness(g, *got));
        }
      }
    }
  }
}

// Guaranteed verdicts are checked against exhaustive search; unknown
// verdicts are never read as non-Hamiltonian.
TEST(Soundness, RandomBipartiteGraphs) {
  std::mt19937_64 rng(4242);
  int certified = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int m = 2 + static_cast<int>(rng() % 5);
    const auto h = random_bipartite(rng, m, 0.45 + 0.1 * static_cast<double>(rng() % 6));
    const auto a = oracle::matrix_of(h.to_graph());
    if (chvatal_certifier(h) == kYes) {
      ++certified;
      ASSERT_TRUE(oracle::hamiltonian(a)) << "chvatal, trial " << trial;
    }
    if (berge_certifier(h) == kYes) {
      ++certified;
      ASSERT_TRUE(oracle::hamiltonian_biconnected(a, m)) << "berge, trial " << trial;
    }
    const int q = static_cast<int>(rng() % std::min(m, 3));
    if (las_vergnas_certifier(h, q) == kYes) {
      ++certified;
      ASSERT_TRUE(oracle::every_path_system_extends(a, q)) << "las vergnas q=" << q << ", trial " << trial;
    }
  }
  EXPECT_GT(certified, 300);
}

TEST(Monotonicity, AddingAnEdgeKeepsGuarantees) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 1000; ++trial) {
    const int m = 2 + static_cast<int>(rng() % 6);
    const auto h = random_bipartite(rng, m, 0.6);
    auto edges = h.edges();
    std::vector<std::pair<int, int>> missing;
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        if (!h.adjacent(i, j)) missing.emplace_back(i, j);
      }
    }
    if (missing.empty()) continue;
    edges.push_back(missing[rng() % missing.size()]);
    const BalancedBipartite bigger(m, m, edges);
    if (chvatal_certifier(h) == kYes) {
      EXPECT_EQ(chvatal_certifier(bigger), kYes);
    }
    if (berge_certifier(h) == kYes) {
      EXPECT_EQ(berge_certifier(bigger), kYes);
    }
    for (int q = 0; q < m; ++q) {
      if (las_vergnas_certifier(h, q) == kYes) {
        EXPECT_EQ(las_vergnas_certifier(bigger, q), kYes);
      }
    }
  }
}

// Relabelling vertices within a side never changes a verdict.
TEST(Determinism, LabellingIndependent) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 2000; ++trial) {
    const int m = 2 + static_cast<int>(rng() % 6);
    const auto h = random_bipartite(rng, m, 0.4 + 0.1 * static_cast<double>(rng() % 6));
    std::vector<int> pu(m), pv(m);
    std::iota(pu.begin(), pu.end(), 0);
    std::iota(pv.begin(), pv.end(), 0);
    std::shuffle(pu.begin(), pu.end(), rng);
    std::shuffle(pv.begin(), pv.end(), rng);
    std::vector<std::pair<int, int>> moved;
    for (auto [i, j] : h.edges()) moved.emplace_back(pu[i], pv[j]);
    const BalancedBipartite g(m, m, moved);
    ASSERT_EQ(chvatal_certifier(h), chvatal_certifier(g));
    ASSERT_EQ(berge_certifier(h), berge_certifier(g));
    for (int q = 0; q < m; ++q) ASSERT_EQ(las_vergnas_certifier(h, q), las_vergnas_certifier(g, q));
  }
}
