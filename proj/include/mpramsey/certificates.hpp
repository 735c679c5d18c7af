#pragma once

// Absence certificates: small objects whose validity is checked in
// polynomial time and which rule out monochromatic structures.
//
//   VertexCover(c, S, k)   every c-edge meets S, |S| <= k
//                          => no M_{k+1}, no P_{2k+2}, no C_{>=2k+2}
//   ComponentBound(c, m)   every c-component has <= m vertices
//                          => no P_{m+1}, no C_{>=m+1}, no M_{floor(m/2)+1}
//   BlockBound(c, b)       every c-block has <= b vertices
//                          => no C_{>=b+1}

#include <string>
#include <variant>
#include <vector>

#include "mpramsey/graph.hpp"
#include "mpramsey/witness.hpp"

namespace mpramsey {

struct VertexCover {
  Color color = Color::red;
  std::vector<Vertex> cover;
  int bound = 0;
  friend bool operator==(const VertexCover&, const VertexCover&) = default;
};

struct ComponentBound {
  Color color = Color::red;
  int bound = 0;
  friend bool operator==(const ComponentBound&, const ComponentBound&) = default;
};

struct BlockBound {
  Color color = Color::red;
  int bound = 0;
  friend bool operator==(const BlockBound&, const BlockBound&) = default;
};

using AbsenceCertificate = std::variant<VertexCover, ComponentBound, BlockBound>;

/// "No `color` structure of kind `kind` and size `size`." Path, C_{>=k} and
/// matching absences extend to every larger size; an exact-cycle absence
/// covers that length only.
struct Absence {
  Color color = Color::red;
  StructureKind kind = StructureKind::path;
  int size = 0;
  friend bool operator==(const Absence&, const Absence&) = default;
};

inline Color certificate_color(const AbsenceCertificate& cert) {
  return std::visit([](const auto& c) { return c.color; }, cert);
}

inline std::string describe(const AbsenceCertificate& cert) {
  struct {
    std::string operator()(const VertexCover& c) const {
      return std::string("VertexCover(") + color_name(c.color) + ", |S|=" +
             std::to_string(c.cover.size()) + ", " + std::to_string(c.bound) + ")";
    }
    std::string operator()(const ComponentBound& c) const {
      return std::string("ComponentBound(") + color_name(c.color) + ", " + std::to_string(c.bound) + ")";
    }
    std::string operator()(const BlockBound& c) const {
      return std::string("BlockBound(") + color_name(c.color) + ", " + std::to_string(c.bound) + ")";
    }
  } visitor;
  return std::visit(visitor, cert);
}

/// Throws InvalidArgument when the certificate names vertices outside the
/// host or carries a negative bound.
inline void check_well_formed(const MultipartiteHost& host, const AbsenceCertificate& cert) {
  std::visit(
      [&](const auto& c) {
        if (c.color != Color::red && c.color != Color::blue) {
          throw InvalidArgument("certificate has an unknown color");
        }
        if (c.bound < 0) throw InvalidArgument("certificate bound must be nonnegative");
      },
      cert);
  if (const auto* vc = std::get_if<VertexCover>(&cert)) {
    for (Vertex v : vc->cover) {
      if (!host.contains(v)) {
        throw InvalidArgument("certificate references vertex " + std::to_string(v) +
                              " outside the host");
      }
    }
  }
}

/// True iff the certificate's invariant holds on the actual color class.
inline bool validate(const TwoColoring& coloring, const AbsenceCertificate& cert) {
  const auto& host = coloring.host();
  check_well_formed(host, cert);
  if (const auto* vc = std::get_if<VertexCover>(&cert)) {
    std::vector<char> in_cover(host.vertex_count(), 0);
    for (Vertex v : vc->cover) in_cover[v] = 1;
    int distinct = 0;
    for (char flag : in_cover) distinct += flag;
    if (distinct > vc->bound) return false;
    const auto& edges = host.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (coloring.edge_color(i) != vc->color) continue;
      if (!in_cover[edges[i].u] && !in_cover[edges[i].v]) return false;
    }
    return true;
  }
  if (const auto* cb = std::get_if<ComponentBound>(&cert)) {
    return largest_size(components(color_subgraph(coloring, cb->color))) <=
           static_cast<std::size_t>(cb->bound);
  }
  const auto& bb = std::get<BlockBound>(cert);
  return largest_size(blocks(color_subgraph(coloring, bb.color))) <= static_cast<std::size_t>(bb.bound);
}

/// Smallest forbidden size per structure kind implied by a valid certificate.
inline std::vector<Absence> implied_absences(const AbsenceCertificate& cert) {
  if (const auto* vc = std::get_if<VertexCover>(&cert)) {
    const int k = vc->bound;
    return {{vc->color, StructureKind::connected_matching, k + 1},
            {vc->color, StructureKind::path, 2 * k + 2},
            {vc->color, StructureKind::cycle_at_least, std::max(3, 2 * k + 2)}};
  }
  if (const auto* cb = std::get_if<ComponentBound>(&cert)) {
    const int m = cb->bound;
    return {{cb->color, StructureKind::connected_matching, m / 2 + 1},
            {cb->color, StructureKind::path, m + 1},
            {cb->color, StructureKind::cycle_at_least, std::max(3, m + 1)}};
  }
  const auto& bb = std::get<BlockBound>(cert);
  return {{bb.color, StructureKind::cycle_at_least, std::max(3, bb.bound + 1)}};
}

/// Does `absence` rule out a `color` structure matching (kind, size)?
/// Uses monotonicity in size and C_k ⊆ C_{>=k}, and that P_{2k}, C_{>=2k}
/// and C_{2k} each contain a connected M_k.
inline bool rules_out(const Absence& absence, Color color, StructureKind kind, int size) {
  if (absence.color != color) return false;
  auto matching_needed = [&]() {
    switch (kind) {
      case StructureKind::path: return size / 2;
      case StructureKind::cycle:
      case StructureKind::cycle_at_least: return size / 2;
      case StructureKind::connected_matching: return size;
    }
    return 0;
  };
  switch (absence.kind) {
    case StructureKind::path:
      // A cycle on L vertices contains P_L.
      return kind != StructureKind::connected_matching && size >= absence.size;
    case StructureKind::cycle:
      return kind == StructureKind::cycle && size == absence.size;
    case StructureKind::cycle_at_least:
      return (kind == StructureKind::cycle || kind == StructureKind::cycle_at_least) &&
             size >= absence.size;
    case StructureKind::connected_matching:
      return matching_needed() >= absence.size;
  }
  return false;
}

}  // namespace mpramsey
