#pragma once

// Structure queries on plain graphs and their monochromatic wrappers.

#include <optional>
#include <string>

#include "mpramsey/graph.hpp"
#include "mpramsey/matching.hpp"
#include "mpramsey/search.hpp"
#include "mpramsey/witness.hpp"

namespace mpramsey {

struct StructureQuery {
  StructureKind kind = StructureKind::path;
  int size = 1;

  std::string label() const { return structure_label(kind, size); }
  friend bool operator==(const StructureQuery&, const StructureQuery&) = default;
};

struct MonoHit {
  Color color;
  StructureWitness witness;
};

namespace detail {

inline void check_query(const StructureQuery& q) {
  switch (q.kind) {
    case StructureKind::path:
      if (q.size < 1) throw InvalidArgument("path size must be at least 1");
      break;
    case StructureKind::cycle:
    case StructureKind::cycle_at_least:
      if (q.size < 3) throw InvalidArgument("cycle size must be at least 3");
      break;
    case StructureKind::connected_matching:
      if (q.size < 1) throw InvalidArgument("matching size must be at least 1");
      break;
  }
}

inline std::optional<StructureWitness> connected_matching_of_size(const SimpleGraph& g, int size) {
  auto best = connected_matching_number(g);
  if (best.size < size) return std::nullopt;
  best.witness.edges.resize(static_cast<std::size_t>(size));
  return best.witness;
}

inline SimpleGraph to_simple(const BitGraph& g) {
  SimpleGraph out(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    for (Mask m = g.neighbors(v) & ~(bit(v + 1) - 1); m; m &= m - 1) out.add_edge(v, lowest(m));
  }
  return out;
}

}  // namespace detail

/// Runs the finder matching `q` on a plain graph. Path and cycle kinds
/// respect the search cap; matchings have no cap.
inline std::optional<StructureWitness> find_structure(const SimpleGraph& g, const StructureQuery& q,
                                                      const SearchOptions& opts = {}) {
  detail::check_query(q);
  switch (q.kind) {
    case StructureKind::path: return find_path_exact(g, q.size, opts);
    case StructureKind::cycle: return find_cycle_exact(g, q.size, opts);
    case StructureKind::cycle_at_least: return find_cycle_at_least(g, q.size, opts);
    case StructureKind::connected_matching: return detail::connected_matching_of_size(g, q.size);
  }
  return std::nullopt;
}

inline std::optional<StructureWitness> find_structure(const BitGraph& g, const StructureQuery& q,
                                                      const SearchOptions& opts = {}) {
  detail::check_query(q);
  switch (q.kind) {
    case StructureKind::path: return find_path_exact(g, q.size, opts);
    case StructureKind::cycle: return find_cycle_exact(g, q.size, opts);
    case StructureKind::cycle_at_least: return find_cycle_at_least(g, q.size, opts);
    case StructureKind::connected_matching:
      return detail::connected_matching_of_size(detail::to_simple(g), q.size);
  }
  return std::nullopt;
}

/// Searches red, then blue; the first witness found wins. `nullopt` is an
/// authoritative "absent in both colors" within the cap.
inline std::optional<MonoHit> mono_search(const TwoColoring& coloring, const StructureQuery& q,
                                          const SearchOptions& opts = {}) {
  detail::check_query(q);
  if (q.kind != StructureKind::connected_matching) {
    detail::check_cap(coloring.host().vertex_count(), opts);
  }
  for (Color c : kColors) {
    auto found = find_structure(color_subgraph(coloring, c), q, opts);
    if (found) {
      found->color = c;
      return MonoHit{c, std::move(*found)};
    }
  }
  return std::nullopt;
}

}  // namespace mpramsey
