#pragma once

// Extremal 2-edge-colorings of complete multipartite graphs. Each generator
// returns the coloring, the named vertex sets of the construction, the
// absence certificates that justify it and the absences it claims.
//
// Named sets always take the first k vertices of a part (canonical layout),
// so identical arguments give identical colorings.

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "mpramsey/certificates.hpp"
#include "mpramsey/graph.hpp"

namespace mpramsey {

struct NamedSet {
  std::string name;
  std::vector<Vertex> members;
  friend bool operator==(const NamedSet&, const NamedSet&) = default;
};

struct ExtremalInstance {
  int example = 0;
  int n = 0;
  TwoColoring coloring;
  std::vector<NamedSet> named_sets;
  std::vector<AbsenceCertificate> certificates;
  std::vector<Absence> claims;

  const MultipartiteHost& host() const { return coloring.host(); }

  const std::vector<Vertex>& set(const std::string& name) const {
    for (const auto& s : named_sets) {
      if (s.name == name) return s.members;
    }
    throw InvalidArgument("no named set " + name);
  }
};

namespace detail {

inline std::vector<Vertex> range(Vertex begin, Vertex end) {
  std::vector<Vertex> out(static_cast<std::size_t>(std::max(0, end - begin)));
  std::iota(out.begin(), out.end(), begin);
  return out;
}

inline std::vector<char> membership(int vertex_count, const std::vector<Vertex>& members) {
  std::vector<char> in(vertex_count, 0);
  for (Vertex v : members) in[v] = 1;
  return in;
}

inline void require_n(int n, int minimum) {
  if (n < minimum) {
    throw InvalidArgument("n must be at least " + std::to_string(minimum));
  }
}

inline void add_both(std::vector<Absence>& claims, StructureKind kind, int size) {
  for (Color c : kColors) claims.push_back({c, kind, size});
}

inline void add_no_connected_matching(std::vector<Absence>& claims, Color c, int n) {
  claims.push_back({c, StructureKind::connected_matching, n});
  claims.push_back({c, StructureKind::path, 2 * n});
  claims.push_back({c, StructureKind::cycle_at_least, 2 * n});
}

}  // namespace detail

/// K_{3n-2} split into U_1 (2n-1 vertices) and U_2 (n-1), red on G[U_1,U_2],
/// restricted to the multipartite host with the given parts (sum 3n-2).
inline ExtremalInstance gen_example1(int n, std::vector<int> part_sizes) {
  detail::require_n(n, 2);
  const int sum = std::accumulate(part_sizes.begin(), part_sizes.end(), 0);
  if (sum != 3 * n - 2) {
    throw InvalidArgument("example 1 needs part sizes summing to 3n-2 = " +
                          std::to_string(3 * n - 2) + ", got " + std::to_string(sum));
  }
  auto host = build_host(std::move(part_sizes));
  const auto u1 = detail::range(0, 2 * n - 1);
  const auto u2 = detail::range(2 * n - 1, 3 * n - 2);
  const auto in_u2 = detail::membership(host->vertex_count(), u2);
  auto coloring = TwoColoring::from_rule(host, [&](Vertex u, Vertex v) {
    return in_u2[u] != in_u2[v] ? Color::red : Color::blue;
  });

  ExtremalInstance inst{1, n, std::move(coloring), {{"U_1", u1}, {"U_2", u2}}, {}, {}};
  inst.certificates.push_back(VertexCover{Color::red, u2, n - 1});
  inst.certificates.push_back(ComponentBound{Color::blue, 2 * n - 1});
  for (Color c : kColors) detail::add_no_connected_matching(inst.claims, c, n);
  return inst;
}

/// Host [n1] + rest (rest sums to 2n-2, default [n-1, n-1]). U_1 is the n1
/// part; the other vertices split into U_2 (first n-1) and U_3. Edges
/// incident with U_2 are red, the rest blue.
inline ExtremalInstance gen_example2(int n, int n1, std::optional<std::vector<int>> rest = std::nullopt) {
  detail::require_n(n, 2);
  if (n1 < 1) throw InvalidArgument("n1 must be positive");
  std::vector<int> others = rest ? *rest : std::vector<int>{n - 1, n - 1};
  const int sum = std::accumulate(others.begin(), others.end(), 0);
  if (sum != 2 * n - 2) {
    throw InvalidArgument("example 2 needs the remaining parts to sum to 2n-2 = " +
                          std::to_string(2 * n - 2) + ", got " + std::to_string(sum));
  }
  std::vector<int> parts{n1};
  parts.insert(parts.end(), others.begin(), others.end());
  auto host = build_host(parts);

  int u1_part = 0;
  while (host->part_size(u1_part) != n1) ++u1_part;
  const auto u1 = detail::range(host->part_begin(u1_part), host->part_end(u1_part));
  std::vector<Vertex> outside;
  for (Vertex v = 0; v < host->vertex_count(); ++v) {
    if (host->part_of(v) != u1_part) outside.push_back(v);
  }
  const std::vector<Vertex> u2(outside.begin(), outside.begin() + (n - 1));
  const std::vector<Vertex> u3(outside.begin() + (n - 1), outside.end());
  const auto in_u2 = detail::membership(host->vertex_count(), u2);
  auto coloring = TwoColoring::from_rule(host, [&](Vertex u, Vertex v) {
    return in_u2[u] || in_u2[v] ? Color::red : Color::blue;
  });

  ExtremalInstance inst{2, n, std::move(coloring), {{"U_1", u1}, {"U_2", u2}, {"U_3", u3}}, {}, {}};
  inst.certificates.push_back(VertexCover{Color::red, u2, n - 1});
  inst.certificates.push_back(VertexCover{Color::blue, u3, n - 1});
  for (Color c : kColors) detail::add_no_connected_matching(inst.claims, c, n);
  return inst;
}

/// K_{3n-1} (all parts singletons unless `part_sizes` is given, sum 3n-1),
/// U_1 = first 2n vertices, U_2 = last n-1; red on G[U_1,U_2], blue elsewhere.
inline ExtremalInstance gen_example3(int n, std::optional<std::vector<int>> part_sizes = std::nullopt) {
  detail::require_n(n, 2);
  std::vector<int> parts = part_sizes ? *part_sizes : std::vector<int>(3 * n - 1, 1);
  const int sum = std::accumulate(parts.begin(), parts.end(), 0);
  if (sum != 3 * n - 1) {
    throw InvalidArgument("example 3 needs part sizes summing to 3n-1 = " +
                          std::to_string(3 * n - 1) + ", got " + std::to_string(sum));
  }
  auto host = build_host(std::move(parts));
  const auto u1 = detail::range(0, 2 * n);
  const auto u2 = detail::range(2 * n, 3 * n - 1);
  const auto in_u2 = detail::membership(host->vertex_count(), u2);
  auto coloring = TwoColoring::from_rule(host, [&](Vertex u, Vertex v) {
    return in_u2[u] != in_u2[v] ? Color::red : Color::blue;
  });

  ExtremalInstance inst{3, n, std::move(coloring), {{"U_1", u1}, {"U_2", u2}}, {}, {}};
  inst.certificates.push_back(VertexCover{Color::red, u2, n - 1});
  inst.certificates.push_back(ComponentBound{Color::blue, 2 * n});
  detail::add_no_connected_matching(inst.claims, Color::red, n);
  inst.claims.push_back({Color::blue, StructureKind::path, 2 * n + 1});
  return inst;
}

/// K_{2n-2,2n-2,1,1}: V_1 = v_1..v_{2n-2}, V_2 = u_1..u_{2n-2}, x, y.
/// Red: G[V_1',V_2'], G[V_1'',V_2''] and every edge at x. Blue: the rest.
inline ExtremalInstance gen_example4(int n) {
  detail::require_n(n, 2);
  auto host = build_host({2 * n - 2, 2 * n - 2, 1, 1});
  const Vertex x = 4 * n - 4;
  const Vertex y = 4 * n - 3;
  const auto v1 = detail::range(0, n - 1);
  const auto v1b = detail::range(n - 1, 2 * n - 2);
  const auto v2 = detail::range(2 * n - 2, 3 * n - 3);
  const auto v2b = detail::range(3 * n - 3, 4 * n - 4);
  // side: 0 for V_1' and V_2', 1 for V_1'' and V_2''.
  auto side = [&](Vertex v) { return (v < 2 * n - 2 ? v : v - (2 * n - 2)) < n - 1 ? 0 : 1; };
  auto coloring = TwoColoring::from_rule(host, [&](Vertex a, Vertex b) {
    if (a == x || b == x) return Color::red;
    if (a == y || b == y) return Color::blue;
    return side(a) == side(b) ? Color::red : Color::blue;
  });

  ExtremalInstance inst{4, n, std::move(coloring),
                        {{"V1'", v1}, {"V1''", v1b}, {"V2'", v2}, {"V2''", v2b}, {"x", {x}}, {"y", {y}}},
                        {}, {}};
  inst.certificates.push_back(BlockBound{Color::red, 2 * n - 1});
  inst.certificates.push_back(BlockBound{Color::blue, 2 * n - 1});
  detail::add_both(inst.claims, StructureKind::cycle_at_least, 2 * n);
  return inst;
}

/// K_{2n-1,2n-2,1}: example 4 restricted to the sub-host obtained by moving y
/// into the first part (dropping the blue edges between y and V_1).
inline ExtremalInstance gen_example5(int n) {
  detail::require_n(n, 2);
  const auto big = gen_example4(n);
  auto host = build_host({2 * n - 1, 2 * n - 2, 1});
  // New layout: v_1..v_{2n-2}, y | u_1..u_{2n-2} | x.
  const Vertex old_x = 4 * n - 4;
  const Vertex old_y = 4 * n - 3;
  std::vector<Vertex> to_old(host->vertex_count());
  for (Vertex v = 0; v < 2 * n - 2; ++v) to_old[v] = v;
  to_old[2 * n - 2] = old_y;
  for (Vertex v = 2 * n - 1; v < 4 * n - 3; ++v) to_old[v] = v - 1;
  to_old[4 * n - 3] = old_x;
  auto coloring = TwoColoring::from_rule(host, [&](Vertex a, Vertex b) {
    return big.coloring.color_of(to_old[a], to_old[b]);
  });

  std::vector<NamedSet> sets;
  for (const auto& s : big.named_sets) {
    NamedSet mapped{s.name, {}};
    for (Vertex old : s.members) {
      mapped.members.push_back(static_cast<Vertex>(
          std::find(to_old.begin(), to_old.end(), old) - to_old.begin()));
    }
    std::sort(mapped.members.begin(), mapped.members.end());
    sets.push_back(std::move(mapped));
  }
  ExtremalInstance inst{5, n, std::move(coloring), std::move(sets), big.certificates, big.claims};
  return inst;
}

/// K_{2n,2n}: red on G[V_1',V_2'] and G[V_1'',V_2''] (primed halves of size
/// n), blue elsewhere. Every monochromatic component has 2n vertices.
inline ExtremalInstance gen_example6(int n) {
  detail::require_n(n, 1);
  auto host = build_host({2 * n, 2 * n});
  auto half = [&](Vertex v) { return (v % (2 * n)) < n ? 0 : 1; };
  auto coloring = TwoColoring::from_rule(host, [&](Vertex a, Vertex b) {
    return half(a) == half(b) ? Color::red : Color::blue;
  });
  ExtremalInstance inst{6, n, std::move(coloring),
                        {{"V1'", detail::range(0, n)},
                         {"V1''", detail::range(n, 2 * n)},
                         {"V2'", detail::range(2 * n, 3 * n)},
                         {"V2''", detail::range(3 * n, 4 * n)}},
                        {}, {}};
  inst.certificates.push_back(ComponentBound{Color::red, 2 * n});
  inst.certificates.push_back(ComponentBound{Color::blue, 2 * n});
  detail::add_both(inst.claims, StructureKind::path, 2 * n + 1);
  return inst;
}

/// K_{2n-1,2n-3,1,1}: V_1 = {v_1} + A + B, V_2 = C + D, x, y with
///   G[A,C], G[B,D] red; G[A,D], G[B,C] blue; v_1-V_2 blue;
///   x red to everything; y red to B, D, x and blue to A, C, v_1.
inline ExtremalInstance gen_example7(int n) {
  detail::require_n(n, 2);
  auto host = build_host({2 * n - 1, 2 * n - 3, 1, 1});
  const Vertex v_1 = 0;
  const auto a = detail::range(1, n);
  const auto b = detail::range(n, 2 * n - 1);
  const auto c = detail::range(2 * n - 1, 3 * n - 2);
  const auto d = detail::range(3 * n - 2, 4 * n - 4);
  const Vertex x = 4 * n - 4;
  const Vertex y = 4 * n - 3;

  enum Group { kV1, kA, kB, kC, kD, kX, kY };
  std::vector<Group> group(host->vertex_count());
  group[v_1] = kV1;
  for (Vertex v : a) group[v] = kA;
  for (Vertex v : b) group[v] = kB;
  for (Vertex v : c) group[v] = kC;
  for (Vertex v : d) group[v] = kD;
  group[x] = kX;
  group[y] = kY;

  auto rule = [&](Vertex p, Vertex q) {
    Group g1 = group[p];
    Group g2 = group[q];
    if (g1 > g2) std::swap(g1, g2);
    if (g1 == kX || g2 == kX) return Color::red;
    if (g2 == kY) return (g1 == kB || g1 == kD) ? Color::red : Color::blue;
    if (g1 == kV1) return Color::blue;
    if ((g1 == kA && g2 == kC) || (g1 == kB && g2 == kD)) return Color::red;
    return Color::blue;  // A-D and B-C
  };
  auto coloring = TwoColoring::from_rule(host, rule);

  ExtremalInstance inst{7, n, std::move(coloring),
                        {{"v_1", {v_1}}, {"A", a}, {"B", b}, {"C", c}, {"D", d}, {"x", {x}}, {"y", {y}}},
                        {}, {}};
  inst.certificates.push_back(BlockBound{Color::red, 2 * n - 1});
  detail::add_both(inst.claims, StructureKind::cycle, 2 * n);
  return inst;
}

/// Dispatch by example number. `parts` is required by example 1, optional
/// for examples 2 (full list, first entry n1) and 3, and ignored otherwise.
inline ExtremalInstance generate_example(int example, int n, std::optional<std::vector<int>> parts = std::nullopt) {
  switch (example) {
    case 1:
      if (!parts) throw InvalidArgument("example 1 needs explicit part sizes summing to 3n-2");
      return gen_example1(n, *parts);
    case 2:
      if (parts) {
        if (parts->empty()) throw InvalidArgument("example 2 needs n1");
        return gen_example2(n, parts->front(), std::vector<int>(parts->begin() + 1, parts->end()));
      }
      return gen_example2(n, n);
    case 3: return gen_example3(n, parts);
    case 4: return gen_example4(n);
    case 5: return gen_example5(n);
    case 6: return gen_example6(n);
    case 7: return gen_example7(n);
    default: throw InvalidArgument("example number must be in 1..7");
  }
}

}  // namespace mpramsey
