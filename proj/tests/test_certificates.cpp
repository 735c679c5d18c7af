#include <gtest/gtest.h>

#include <random>

#include "mpramsey/mpramsey.hpp"

using namespace mpramsey;

namespace {

bool structure_present(const TwoColoring& c, const Absence& a) {
  return find_structure(color_subgraph(c, a.color), {a.kind, a.size}).has_value();
}

std::vector<ExtremalInstance> generator_suite() {
  std::vector<ExtremalInstance> out;
  for (int n = 2; n <= 4; ++n) {
    out.push_back(gen_example1(n, {2 * n - 1, n - 1}));
    out.push_back(gen_example1(n, std::vector<int>(3 * n - 2, 1)));
    out.push_back(gen_example2(n, n));
    out.push_back(gen_example2(n, 1));
    out.push_back(gen_example3(n));
    out.push_back(gen_example4(n));
    out.push_back(gen_example5(n));
    out.push_back(gen_example6(n));
    out.push_back(gen_example7(n));
  }
  return out;
}

}  // namespace

TEST(Validate, Examples) {
  for (int n = 2; n <= 5; ++n) {
    const auto ex2 = gen_example2(n, n + 1);
    EXPECT_TRUE(validate(ex2.coloring, VertexCover{Color::red, ex2.set("U_2"), n - 1}));
    EXPECT_TRUE(validate(ex2.coloring, VertexCover{Color::blue, ex2.set("U_3"), n - 1}));
    const auto ex6 = gen_example6(n);
    EXPECT_TRUE(validate(ex6.coloring, ComponentBound{Color::blue, 2 * n}));
    EXPECT_FALSE(validate(ex6.coloring, ComponentBound{Color::blue, 2 * n - 1}));
  }
  const auto red33 = TwoColoring::uniform(build_host({3, 3}), Color::red);
  EXPECT_FALSE(validate(red33, VertexCover{Color::red, {}, 0}));
  EXPECT_TRUE(validate(red33, VertexCover{Color::blue, {}, 0}));
  EXPECT_TRUE(validate(red33, VertexCover{Color::red, {0, 1, 2}, 3}));
  EXPECT_FALSE(validate(red33, VertexCover{Color::red, {0, 1, 2}, 2}));
  EXPECT_TRUE(validate(red33, BlockBound{Color::red, 6}));
  EXPECT_FALSE(validate(red33, BlockBound{Color::red, 5}));
}

TEST(Validate, MalformedCertificates) {
  const auto red33 = TwoColoring::uniform(build_host({3, 3}), Color::red);
  EXPECT_THROW(validate(red33, VertexCover{Color::red, {0, 6}, 2}), InvalidArgument);
  EXPECT_THROW(validate(red33, VertexCover{Color::red, {-1}, 2}), InvalidArgument);
  EXPECT_THROW(validate(red33, ComponentBound{Color::red, -1}), InvalidArgument);
}

TEST(Implied, Examples) {
  const int n = 4;
  const auto vc = implied_absences(VertexCover{Color::red, {}, n - 1});
  EXPECT_EQ(vc, (std::vector<Absence>{{Color::red, StructureKind::connected_matching, n},
                                      {Color::red, StructureKind::path, 2 * n},
                                      {Color::red, StructureKind::cycle_at_least, 2 * n}}));
  const auto cb = implied_absences(ComponentBound{Color::blue, 2 * n});
  EXPECT_TRUE(std::find(cb.begin(), cb.end(), Absence{Color::blue, StructureKind::path, 2 * n + 1}) != cb.end());
  const auto bb = implied_absences(BlockBound{Color::red, 2 * n - 1});
  EXPECT_EQ(bb, (std::vector<Absence>{{Color::red, StructureKind::cycle_at_least, 2 * n}}));
}

TEST(RulesOut, Monotonicity) {
  const Absence no_p6{Color::red, StructureKind::path, 6};
  EXPECT_TRUE(rules_out(no_p6, Color::red, StructureKind::path, 7));
  EXPECT_TRUE(rules_out(no_p6, Color::red, StructureKind::cycle, 6));
  EXPECT_FALSE(rules_out(no_p6, Color::red, StructureKind::path, 5));
  EXPECT_FALSE(rules_out(no_p6, Color::blue, StructureKind::path, 7));

  const Absence no_m3{Color::blue, StructureKind::connected_matching, 3};
  EXPECT_TRUE(rules_out(no_m3, Color::blue, StructureKind::path, 6));
  EXPECT_TRUE(rules_out(no_m3, Color::blue, StructureKind::path, 7));
  EXPECT_FALSE(rules_out(no_m3, Color::blue, StructureKind::path, 5));
  EXPECT_TRUE(rules_out(no_m3, Color::blue, StructureKind::cycle_at_least, 6));

  const Absence no_c6{Color::red, StructureKind::cycle, 6};
  EXPECT_TRUE(rules_out(no_c6, Color::red, StructureKind::cycle, 6));
  EXPECT_FALSE(rules_out(no_c6, Color::red, StructureKind::cycle, 7));
  EXPECT_FALSE(rules_out(no_c6, Color::red, StructureKind::cycle_at_least, 6));
}

TEST(Soundness, GeneratorSuite) {
  for (const auto& inst : generator_suite()) {
    for (const auto& cert : inst.certificates) {
      ASSERT_TRUE(validate(inst.coloring, cert)) << "example " << inst.example << " n=" << inst.n;
      for (const auto& a : implied_absences(cert)) {
        EXPECT_FALSE(structure_present(inst.coloring, a))
            << "example " << inst.example << " n=" << inst.n << " " << describe(cert);
      }
    }
  }
}

// Random colorings with a planted vertex cover in one color, plus the
// tightest component and block bounds read off the coloring itself.
TEST(Soundness, PlantedCertificates) {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> parts(2 + rng() % 3);
    int total = 0;
    for (auto& p : parts) {
      p = 1 + static_cast<int>(rng() % 4);
      total += p;
    }
    if (total > 14) parts.resize(2);
    const auto host = build_host(parts);
    const Color planted = (rng() & 1U) ? Color::red : Color::blue;
    const int k = static_cast<int>(rng() % 4);
    std::vector<Vertex> cover;
    std::vector<char> in_cover(host->vertex_count(), 0);
    while (static_cast<int>(cover.size()) < std::min(k, host->vertex_count())) {
      const Vertex v = static_cast<Vertex>(rng() % host->vertex_count());
      if (!in_cover[v]) {
        in_cover[v] = 1;
        cover.push_back(v);
      }
    }
    const auto coloring = TwoColoring::from_rule(host, [&](Vertex u, Vertex v) {
      if (!in_cover[u] && !in_cover[v]) return other(planted);
      return (rng() % 3 != 0) ? planted : other(planted);
    });

    std::vector<AbsenceCertificate> certs{VertexCover{planted, cover, static_cast<int>(cover.size())}};
    for (Color c : kColors) {
      const auto g = color_subgraph(coloring, c);
      certs.push_back(ComponentBound{c, static_cast<int>(largest_size(components(g)))});
      certs.push_back(BlockBound{c, static_cast<int>(largest_size(blocks(g)))});
    }
    for (const auto& cert : certs) {
      ASSERT_TRUE(validate(coloring, cert)) << describe(cert);
      for (const auto& a : implied_absences(cert)) {
        EXPECT_FALSE(structure_present(coloring, a)) << "trial " << trial << " " << describe(cert);
      }
    }
    // Weak duality.
    EXPECT_LE(max_matching(color_subgraph(coloring, planted)).size, static_cast<int>(cover.size()));

    // Anything rules_out derives from an implied absence is absent too.
    for (const auto& cert : certs) {
      for (const auto& a : implied_absences(cert)) {
        for (StructureKind kind : {StructureKind::path, StructureKind::cycle, StructureKind::cycle_at_least,
                                   StructureKind::connected_matching}) {
          const int lo = kind == StructureKind::connected_matching ? 1 : (kind == StructureKind::path ? 1 : 3);
          for (int size = lo; size <= host->vertex_count(); ++size) {
            if (!rules_out(a, a.color, kind, size)) continue;
            EXPECT_FALSE(structure_present(coloring, {a.color, kind, size}))
                << "trial " << trial << " " << structure_label(kind, size);
          }
        }
      }
    }
  }
}
