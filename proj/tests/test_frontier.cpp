#include <gtest/gtest.h>

#include <random>

#include "mpramsey/mpramsey.hpp"
#include "oracles.hpp"

using namespace mpramsey;

TEST(Conditions, AgreeWithIndependentEvaluator) {
  std::mt19937_64 rng(1000);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12);
    std::vector<int> parts(2 + rng() % 5);
    for (auto& p : parts) p = 1 + static_cast<int>(rng() % (3 * n + 2));
    const auto report = conditions_report(n, parts);
    const auto expect = oracle::conditions(n, parts);
    for (int k = 1; k <= 7; ++k) {
      ASSERT_EQ(report.condition(k), expect[k - 1]) << "trial " << trial << " condition " << k;
    }
    EXPECT_EQ(report.applicable(Target::cycle_2n), expect[0] && expect[1] && expect[6]);
    EXPECT_EQ(report.applicable(Target::cycle_at_least_2n), expect[0] && expect[1] && expect[3] && expect[4]);
    EXPECT_EQ(report.applicable(Target::path_2n), expect[0] && expect[1]);
    EXPECT_EQ(report.applicable(Target::path_2n_plus_1), expect[1] && expect[2] && expect[5]);
  }
}

TEST(Conditions, BoundaryRows) {
  for (int n = 2; n <= 30; ++n) {
    EXPECT_TRUE(conditions_report(n, {2 * n, 2 * n - 1}).applicable(Target::cycle_2n)) << n;
    EXPECT_FALSE(conditions_report(n, {2 * n - 2, 2 * n - 2, 1, 1}).applicable(Target::cycle_2n)) << n;
    EXPECT_TRUE(conditions_report(n, {n, n, n}).applicable(Target::path_2n_plus_1)) << n;
    if (n < 3) continue;
    const auto lemma = conditions_report(n, {2 * n - 1, 2 * n - 3, 2});
    EXPECT_TRUE(lemma.applicable(Target::cycle_at_least_2n)) << n;
    EXPECT_FALSE(lemma.applicable(Target::cycle_2n)) << n;
  }
  EXPECT_TRUE(conditions_report(5, {10, 9}).applicable(Target::cycle_2n));
  EXPECT_THROW(conditions_report(0, {2, 2}), InvalidArgument);
  EXPECT_THROW(conditions_report(2, {2}), InvalidArgument);
}

// Every example witnesses a failing hypothesis of the theorem it is sharp
// for, and exact search confirms the structure is missing.
TEST(Tightness, ExamplesSitOnTheFailingSide) {
  struct Row {
    ExtremalInstance inst;
    Target target;
  };
  for (int n = 2; n <= 4; ++n) {
    std::vector<Row> rows{
        {gen_example1(n, {2 * n - 1, n - 1}), Target::path_2n},
        {gen_example1(n, {2 * n - 1, n - 1}), Target::cycle_at_least_2n},
        {gen_example2(n, n), Target::path_2n},
        {gen_example2(n, 2 * n), Target::cycle_2n},
        {gen_example3(n), Target::path_2n_plus_1},
        {gen_example4(n), Target::cycle_at_least_2n},
        {gen_example5(n), Target::cycle_at_least_2n},
        {gen_example6(n), Target::path_2n_plus_1},
        {gen_example7(n), Target::cycle_2n},
    };
    for (const auto& row : rows) {
      const auto& host = row.inst.host();
      const std::vector<int> parts(host.part_sizes().begin(), host.part_sizes().end());
      EXPECT_FALSE(conditions_report(n, parts).applicable(row.target))
          << "example " << row.inst.example << " n=" << n << " " << target_name(row.target);
      EXPECT_FALSE(mono_search(row.inst.coloring, target_query(row.target, n)))
          << "example " << row.inst.example << " n=" << n << " " << target_name(row.target);
    }
  }
}

TEST(Enumerate, K33Paths) {
  const auto host = build_host({3, 3});
  const auto p4 = enumerate_verify(host, {StructureKind::path, 4});
  EXPECT_EQ(p4.colorings, 512u);
  EXPECT_EQ(p4.failures, 0u);
  EXPECT_FALSE(p4.counterexample);

  const auto p5 = enumerate_verify(host, {StructureKind::path, 5});
  EXPECT_EQ(p5.colorings, 512u);
  EXPECT_GE(p5.failures, 1u);
  ASSERT_TRUE(p5.counterexample);
  EXPECT_FALSE(mono_search(*p5.counterexample, {StructureKind::path, 5}));
  EXPECT_EQ(p5.counterexample->to_bits(), *p5.counterexample_index);
}

TEST(Enumerate, MatchesDirectLoop) {
  const auto host = build_host({2, 2, 1});
  for (const StructureQuery q : {StructureQuery{StructureKind::path, 4}, StructureQuery{StructureKind::cycle, 4},
                                 StructureQuery{StructureKind::connected_matching, 2}}) {
    std::uint64_t failures = 0;
    for (std::uint64_t bits = 0; bits < (1u << host->edge_count()); ++bits) {
      failures += !mono_search(TwoColoring::from_bits(host, bits), q).has_value();
    }
    EXPECT_EQ(enumerate_verify(host, q).failures, failures) << q.label();
  }
}

TEST(Enumerate, SerialParallelAndRangesAgree) {
  const auto host = build_host({2, 2, 2});
  const StructureQuery q{StructureKind::path, 5};
  const auto serial = enumerate_verify(host, q);
  EXPECT_EQ(serial.colorings, 4096u);
  for (int threads : {2, 3, 4}) {
    EnumerationOptions opts;
    opts.threads = threads;
    const auto par = enumerate_verify(host, q, opts);
    EXPECT_EQ(par.colorings, serial.colorings);
    EXPECT_EQ(par.failures, serial.failures);
    EXPECT_EQ(par.counterexample_index, serial.counterexample_index);
  }
  // Disjoint ranges add up.
  std::uint64_t failures = 0;
  std::uint64_t colorings = 0;
  for (std::uint64_t lo = 0; lo < 4096; lo += 1000) {
    EnumerationOptions opts;
    opts.begin = lo;
    opts.end = lo + 1000;
    const auto part = enumerate_verify(host, q, opts);
    failures += part.failures;
    colorings += part.colorings;
  }
  EXPECT_EQ(colorings, 4096u);
  EXPECT_EQ(failures, serial.failures);

  EnumerationOptions reversed;
  reversed.begin = 10;
  reversed.end = 5;
  EXPECT_THROW(enumerate_verify(host, q, reversed), InvalidArgument);
}

TEST(Enumerate, ColorSwapMetamorphic) {
  const auto host = build_host({3, 2});
  const std::uint64_t all = (1u << host->edge_count()) - 1;
  for (const StructureQuery q : {StructureQuery{StructureKind::path, 4}, StructureQuery{StructureKind::cycle, 4}}) {
    const auto summary = enumerate_verify(host, q);
    std::uint64_t swapped_failures = 0;
    for (std::uint64_t bits = 0; bits <= all; ++bits) {
      swapped_failures += !mono_search(TwoColoring::from_bits(host, bits ^ all), q).has_value();
    }
    EXPECT_EQ(summary.failures, swapped_failures);
  }
}

TEST(Enumerate, SymmetryReductionMatchesUnreduced) {
  for (const auto& parts : {std::vector<int>{3, 3}, std::vector<int>{2, 2, 2}, std::vector<int>{3, 2, 1}}) {
    const auto host = build_host(parts);
    for (const StructureQuery q : {StructureQuery{StructureKind::path, 4}, StructureQuery{StructureKind::path, 5},
                                   StructureQuery{StructureKind::cycle_at_least, 4}}) {
      const auto plain = enumerate_verify(host, q);
      for (int mode = 1; mode <= 3; ++mode) {
        EnumerationOptions opts;
        opts.color_swap = mode & 1;
        opts.part_permutations = mode & 2;
        const auto reduced = enumerate_verify(host, q, opts);
        EXPECT_EQ(reduced.colorings, plain.colorings) << q.label() << " mode " << mode;
        EXPECT_EQ(reduced.failures, plain.failures) << q.label() << " mode " << mode;
        EXPECT_LE(reduced.searched, plain.searched);
        if (mode == 3) {
          EXPECT_LT(reduced.searched, plain.searched);
        }
      }
    }
  }
}

TEST(Enumerate, Caps) {
  EXPECT_THROW(enumerate_verify(build_host({6, 5}), {StructureKind::path, 4}), CapExceeded);
  EnumerationOptions opts;
  opts.search.cap = 4;
  EXPECT_THROW(enumerate_verify(build_host({2, 3}), {StructureKind::path, 4}, opts), CapExceeded);
}

TEST(LocalSearch, FindsK44PathCounterexample) {
  const auto host = build_host({4, 4});
  const StructureQuery q{StructureKind::path, 5};
  const auto found = counterexample_search(host, q, 200000);
  ASSERT_TRUE(found);
  EXPECT_FALSE(mono_search(*found, q));
  EXPECT_EQ(counterexample_search(host, q, 200000), found);
  for (std::uint64_t seed = 2; seed <= 6; ++seed) {
    LocalSearchOptions opts;
    opts.seed = seed;
    const auto other_seed = counterexample_search(host, q, 200000, opts);
    ASSERT_TRUE(other_seed) << seed;
    EXPECT_FALSE(mono_search(*other_seed, q));
  }
  LocalSearchOptions bad;
  bad.uphill_probability = 1.5;
  EXPECT_THROW(counterexample_search(host, q, 10, bad), InvalidArgument);
}

TEST(LocalSearch, BudgetZeroAndImpossibleTargets) {
  const auto host = build_host({3, 3});
  EXPECT_FALSE(counterexample_search(host, {StructureKind::path, 5}, 0));
  EXPECT_FALSE(counterexample_search(host, {StructureKind::path, 4}, 20000));
}
