#include <gtest/gtest.h>

#include <random>

#include "mpramsey/mpramsey.hpp"
#include "oracles.hpp"

using namespace mpramsey;

TEST(MaxMatching, SmallGraphs) {
  const auto k33 = host_graph(*build_host({3, 3}));
  EXPECT_EQ(max_matching(k33).size, 3);

  SimpleGraph triangle(3);
  triangle.add_edge(0, 1);
  triangle.add_edge(1, 2);
  triangle.add_edge(0, 2);
  EXPECT_EQ(max_matching(triangle).size, 1);

  EXPECT_EQ(max_matching(SimpleGraph(4)).size, 0);
}

TEST(MaxMatching, OddCycleNeedsBlossom) {
  // C_5 with a pendant on every vertex has a perfect matching only through
  // the blossom.
  SimpleGraph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
  }
  EXPECT_EQ(max_matching(g).size, 5);
}

TEST(MaxMatching, Example1RedHasTwo) {
  const auto inst = gen_example1(3, {3, 3, 1});
  EXPECT_EQ(max_matching(color_subgraph(inst.coloring, Color::red)).size, 2);
  EXPECT_EQ(connected_matching_number(color_subgraph(inst.coloring, Color::red)).size, 2);
  EXPECT_EQ(connected_matching_number(color_subgraph(inst.coloring, Color::blue)).size, 2);
}

TEST(ConnectedMatching, TwoDisjointEdges) {
  SimpleGraph g(4);
  g.add_edge(0, 1);
  g.add_edge(2, 3);
  EXPECT_EQ(max_matching(g).size, 2);
  const auto cm = connected_matching_number(g);
  EXPECT_EQ(cm.size, 1);
  EXPECT_EQ(cm.witness.component, 0);
  EXPECT_TRUE(validate_witness(g, cm.witness));
}

TEST(ConnectedMatching, MatchesExhaustiveEnumeration) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const double p = 0.1 + 0.08 * static_cast<double>(rng() % 6);
    const auto g = oracle::random_graph(rng, n, p);
    const auto [best, best_connected] = oracle::matching_numbers(g);
    const auto mm = max_matching(g);
    const auto cm = connected_matching_number(g);
    ASSERT_EQ(mm.size, best) << "trial " << trial;
    ASSERT_EQ(cm.size, best_connected) << "trial " << trial;
    EXPECT_TRUE(validate_witness(g, mm.witness));
    EXPECT_TRUE(validate_witness(g, cm.witness));
  }
}

TEST(Witness, ValidatorRejectsBadWitnesses) {
  SimpleGraph g(4);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  StructureWitness path{WitnessKind::path, {0, 1, 2, 3}, {}, -1, std::nullopt};
  EXPECT_TRUE(validate_witness(g, path));
  path.vertices = {0, 2, 3};
  EXPECT_FALSE(validate_witness(g, path));
  path.vertices = {0, 1, 0};
  EXPECT_FALSE(validate_witness(g, path));

  StructureWitness cycle{WitnessKind::cycle, {0, 1, 2, 3}, {}, -1, std::nullopt};
  EXPECT_FALSE(validate_witness(g, cycle));
  g.add_edge(0, 3);
  EXPECT_TRUE(validate_witness(g, cycle));

  StructureWitness matching{WitnessKind::matching, {}, {{0, 1}, {1, 2}}, -1, std::nullopt};
  EXPECT_FALSE(validate_witness(g, matching));
  matching.edges = {{0, 1}, {2, 3}};
  EXPECT_TRUE(validate_witness(g, matching));

  SimpleGraph split(4);
  split.add_edge(0, 1);
  split.add_edge(2, 3);
  StructureWitness connected{WitnessKind::connected_matching, {}, {{0, 1}, {2, 3}}, 0, std::nullopt};
  EXPECT_FALSE(validate_witness(split, connected));
}
