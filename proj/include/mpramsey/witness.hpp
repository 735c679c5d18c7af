#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "mpramsey/graph.hpp"

namespace mpramsey {

/// Structures a search can be asked for. `path` and `cycle` are exact vertex
/// counts, `cycle_at_least` is C_{>=k}, `connected_matching` is M_k.
enum class StructureKind { path, cycle, cycle_at_least, connected_matching };

inline const char* kind_name(StructureKind kind) noexcept {
  switch (kind) {
    case StructureKind::path: return "path";
    case StructureKind::cycle: return "cycle";
    case StructureKind::cycle_at_least: return "cycle-min";
    case StructureKind::connected_matching: return "cmatching";
  }
  return "?";
}

inline std::optional<StructureKind> parse_kind(const std::string& name) {
  if (name == "path") return StructureKind::path;
  if (name == "cycle") return StructureKind::cycle;
  if (name == "cycle-min" || name == "cycle_at_least") return StructureKind::cycle_at_least;
  if (name == "cmatching" || name == "connected_matching") return StructureKind::connected_matching;
  return std::nullopt;
}

/// Short label such as "P_5", "C_6", "C_{>=6}" or "M_3".
inline std::string structure_label(StructureKind kind, int size) {
  const auto k = std::to_string(size);
  switch (kind) {
    case StructureKind::path: return "P_" + k;
    case StructureKind::cycle: return "C_" + k;
    case StructureKind::cycle_at_least: return "C_{>=" + k + "}";
    case StructureKind::connected_matching: return "M_" + k;
  }
  return "?";
}

enum class WitnessKind { path, cycle, matching, connected_matching };

/// A concrete path, cycle or (connected) matching found by a search.
struct StructureWitness {
  WitnessKind kind = WitnessKind::path;
  std::vector<Vertex> vertices;  // path / cycle, in traversal order
  std::vector<Edge> edges;       // matching edges, u < v, sorted
  int component = -1;            // connected matching: component id
  std::optional<Color> color;

  /// Vertex count for paths/cycles, edge count for matchings.
  int size() const {
    if (kind == WitnessKind::path || kind == WitnessKind::cycle) {
      return static_cast<int>(vertices.size());
    }
    return static_cast<int>(edges.size());
  }

  friend bool operator==(const StructureWitness&, const StructureWitness&) = default;
};

/// Checks a witness against `g` from scratch: distinct vertices, edges present,
/// cycle closes, matching edges disjoint and (for connected matchings) all in
/// one component.
inline bool validate_witness(const SimpleGraph& g, const StructureWitness& w) {
  switch (w.kind) {
    case WitnessKind::path:
    case WitnessKind::cycle: {
      if (w.vertices.empty()) return false;
      std::vector<Vertex> sorted = w.vertices;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
      for (Vertex v : w.vertices) {
        if (!g.contains(v)) return false;
      }
      for (std::size_t i = 0; i + 1 < w.vertices.size(); ++i) {
        if (!g.has_edge(w.vertices[i], w.vertices[i + 1])) return false;
      }
      if (w.kind == WitnessKind::cycle) {
        return w.vertices.size() >= 3 && g.has_edge(w.vertices.back(), w.vertices.front());
      }
      return true;
    }
    case WitnessKind::matching:
    case WitnessKind::connected_matching: {
      std::vector<Vertex> ends;
      for (const Edge& e : w.edges) {
        if (!g.has_edge(e.u, e.v)) return false;
        ends.push_back(e.u);
        ends.push_back(e.v);
      }
      std::sort(ends.begin(), ends.end());
      if (std::adjacent_find(ends.begin(), ends.end()) != ends.end()) return false;
      if (w.kind == WitnessKind::connected_matching && !w.edges.empty()) {
        const auto ids = component_ids(g);
        const int c = ids[w.edges.front().u];
        for (const Edge& e : w.edges) {
          if (ids[e.u] != c) return false;
        }
      }
      return true;
    }
  }
  return false;
}

}  // namespace mpramsey
