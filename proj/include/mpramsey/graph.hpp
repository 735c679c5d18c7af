#pragma once

// Complete multipartite hosts, 2-edge-colorings and plain graph views.
//
// Vertex layout is canonical: parts are sorted by nonincreasing size and part
// i occupies a contiguous block of vertex ids directly after part i-1. Host
// edges are enumerated in lexicographic (u < v) order; that order fixes the
// edge index used by colorings, bitmask enumeration and the file format.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <memory>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mpramsey/errors.hpp"

namespace mpramsey {

using Vertex = int;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

enum class Color : std::uint8_t { red = 1, blue = 2 };

constexpr Color other(Color c) noexcept {
  return c == Color::red ? Color::blue : Color::red;
}

inline const char* color_name(Color c) noexcept {
  return c == Color::red ? "red" : "blue";
}

inline constexpr Color kColors[] = {Color::red, Color::blue};

/// Complete multipartite graph K_{n_1,...,n_s} with n_1 >= ... >= n_s.
class MultipartiteHost {
 public:
  /// Sorts `part_sizes` nonincreasing. Throws InvalidArgument for an empty
  /// list, a nonpositive entry, or fewer than two parts.
  explicit MultipartiteHost(std::vector<int> part_sizes)
      : part_sizes_(std::move(part_sizes)) {
    if (part_sizes_.empty()) throw InvalidArgument("part list is empty");
    for (int size : part_sizes_) {
      if (size < 1) throw InvalidArgument("part sizes must be positive");
    }
    if (part_sizes_.size() < 2) {
      throw InvalidArgument("a multipartite host needs at least two parts");
    }
    std::sort(part_sizes_.begin(), part_sizes_.end(), std::greater<>());

    vertex_count_ = std::accumulate(part_sizes_.begin(), part_sizes_.end(), 0);
    part_begin_.reserve(part_sizes_.size() + 1);
    part_of_.reserve(vertex_count_);
    int begin = 0;
    for (std::size_t p = 0; p < part_sizes_.size(); ++p) {
      part_begin_.push_back(begin);
      for (int k = 0; k < part_sizes_[p]; ++k) part_of_.push_back(static_cast<int>(p));
      begin += part_sizes_[p];
    }
    part_begin_.push_back(begin);

    const auto n = static_cast<std::size_t>(vertex_count_);
    edge_index_.assign(n * n, -1);
    for (Vertex u = 0; u < vertex_count_; ++u) {
      for (Vertex v = u + 1; v < vertex_count_; ++v) {
        if (part_of_[u] == part_of_[v]) continue;
        const auto idx = static_cast<std::int32_t>(edges_.size());
        edge_index_[u * n + v] = idx;
        edge_index_[v * n + u] = idx;
        edges_.push_back({u, v});
      }
    }
  }

  int vertex_count() const noexcept { return vertex_count_; }
  int part_count() const noexcept { return static_cast<int>(part_sizes_.size()); }
  std::span<const int> part_sizes() const noexcept { return part_sizes_; }
  int part_size(int part) const { return part_sizes_.at(part); }
  int part_of(Vertex v) const { return part_of_.at(check(v)); }
  Vertex part_begin(int part) const { return part_begin_.at(part); }
  Vertex part_end(int part) const { return part_begin_.at(part + 1); }

  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  bool contains(Vertex v) const noexcept { return v >= 0 && v < vertex_count_; }

  bool adjacent(Vertex u, Vertex v) const {
    return part_of(u) != part_of(v);
  }

  /// Position of {u,v} in the lexicographic cross-pair order.
  std::size_t edge_index(Vertex u, Vertex v) const {
    check(u);
    check(v);
    const auto idx = edge_index_[static_cast<std::size_t>(u) * vertex_count_ + v];
    if (idx < 0) {
      throw InvalidArgument("vertices " + std::to_string(u) + " and " +
                            std::to_string(v) + " lie in the same part");
    }
    return static_cast<std::size_t>(idx);
  }

  /// Host degree N - n_i of a vertex in part i.
  int degree(Vertex v) const { return vertex_count_ - part_sizes_[part_of(v)]; }

  friend bool operator==(const MultipartiteHost& a, const MultipartiteHost& b) {
    return a.part_sizes_ == b.part_sizes_;
  }

 private:
  Vertex check(Vertex v) const {
    if (!contains(v)) {
      throw InvalidArgument("vertex " + std::to_string(v) + " out of range");
    }
    return v;
  }

  std::vector<int> part_sizes_;
  int vertex_count_ = 0;
  std::vector<int> part_of_;
  std::vector<Vertex> part_begin_;
  std::vector<Edge> edges_;
  std::vector<std::int32_t> edge_index_;
};

using HostPtr = std::shared_ptr<const MultipartiteHost>;

inline HostPtr build_host(std::vector<int> part_sizes) {
  return std::make_shared<const MultipartiteHost>(std::move(part_sizes));
}

/// Total assignment of red/blue to every host edge, stored in edge-index
/// order. Immutable once built.
class TwoColoring {
 public:
  TwoColoring(HostPtr host, std::vector<Color> colors)
      : host_(std::move(host)), colors_(std::move(colors)) {
    if (!host_) throw InvalidArgument("coloring needs a host");
    if (colors_.size() != host_->edge_count()) {
      throw InvalidArgument("coloring has " + std::to_string(colors_.size()) +
                            " entries, host has " +
                            std::to_string(host_->edge_count()) + " edges");
    }
    for (Color c : colors_) {
      if (c != Color::red && c != Color::blue) throw InvalidArgument("unknown color value");
    }
  }

  static TwoColoring uniform(HostPtr host, Color c) {
    const auto m = host->edge_count();
    return TwoColoring(std::move(host), std::vector<Color>(m, c));
  }

  /// Edge i is blue iff bit i of `bits` is set. Needs at most 64 edges.
  static TwoColoring from_bits(HostPtr host, std::uint64_t bits) {
    if (host->edge_count() > 64) throw InvalidArgument("bit encoding limited to 64 edges");
    std::vector<Color> colors(host->edge_count());
    for (std::size_t i = 0; i < colors.size(); ++i) {
      colors[i] = (bits >> i) & 1U ? Color::blue : Color::red;
    }
    return TwoColoring(std::move(host), std::move(colors));
  }

  /// Colors every edge {u,v} (u < v) by `rule(u, v)`.
  static TwoColoring from_rule(HostPtr host, const std::function<Color(Vertex, Vertex)>& rule) {
    std::vector<Color> colors;
    colors.reserve(host->edge_count());
    for (const Edge& e : host->edges()) colors.push_back(rule(e.u, e.v));
    return TwoColoring(std::move(host), std::move(colors));
  }

  const MultipartiteHost& host() const noexcept { return *host_; }
  const HostPtr& host_ptr() const noexcept { return host_; }
  std::span<const Color> colors() const noexcept { return colors_; }
  Color edge_color(std::size_t edge_index) const { return colors_.at(edge_index); }

  /// Throws InvalidArgument for an out-of-range vertex or a same-part pair.
  Color color_of(Vertex u, Vertex v) const { return colors_[host_->edge_index(u, v)]; }

  std::uint64_t to_bits() const {
    if (colors_.size() > 64) throw InvalidArgument("bit encoding limited to 64 edges");
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < colors_.size(); ++i) {
      if (colors_[i] == Color::blue) bits |= std::uint64_t{1} << i;
    }
    return bits;
  }

  TwoColoring swapped() const {
    std::vector<Color> flipped(colors_.size());
    std::transform(colors_.begin(), colors_.end(), flipped.begin(), other);
    return TwoColoring(host_, std::move(flipped));
  }

  friend bool operator==(const TwoColoring& a, const TwoColoring& b) {
    return *a.host_ == *b.host_ && a.colors_ == b.colors_;
  }

 private:
  HostPtr host_;
  std::vector<Color> colors_;
};

/// Undirected simple graph on vertices 0..n-1 with sorted adjacency lists.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(int vertex_count) : adj_(static_cast<std::size_t>(vertex_count)) {}

  SimpleGraph(int vertex_count, std::span<const Edge> edges) : SimpleGraph(vertex_count) {
    for (const Edge& e : edges) add_edge(e.u, e.v);
  }

  int vertex_count() const noexcept { return static_cast<int>(adj_.size()); }

  void add_edge(Vertex u, Vertex v) {
    if (u == v) throw InvalidArgument("self-loops are not allowed");
    check(u);
    check(v);
    insert_sorted(adj_[u], v);
    insert_sorted(adj_[v], u);
  }

  bool has_edge(Vertex u, Vertex v) const {
    if (!contains(u) || !contains(v)) return false;
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
  }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(v); }
  int degree(Vertex v) const { return static_cast<int>(adj_.at(v).size()); }

  std::size_t edge_count() const noexcept {
    std::size_t total = 0;
    for (const auto& list : adj_) total += list.size();
    return total / 2;
  }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < vertex_count(); ++u) {
      for (Vertex v : adj_[u]) {
        if (u < v) out.push_back({u, v});
      }
    }
    return out;
  }

  bool contains(Vertex v) const noexcept { return v >= 0 && v < vertex_count(); }

  /// Subgraph induced by `keep` (relabelled 0..k-1 in the given order).
  SimpleGraph induced(std::span<const Vertex> keep) const {
    std::vector<int> position(adj_.size(), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) position.at(keep[i]) = static_cast<int>(i);
    SimpleGraph out(static_cast<int>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i) {
      for (Vertex w : adj_[keep[i]]) {
        const int j = position[w];
        if (j > static_cast<int>(i)) out.add_edge(static_cast<Vertex>(i), j);
      }
    }
    return out;
  }

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  void check(Vertex v) const {
    if (!contains(v)) throw InvalidArgument("vertex " + std::to_string(v) + " out of range");
  }

  static void insert_sorted(std::vector<Vertex>& list, Vertex v) {
    auto it = std::lower_bound(list.begin(), list.end(), v);
    if (it == list.end() || *it != v) list.insert(it, v);
  }

  std::vector<std::vector<Vertex>> adj_;
};

/// The color class of `color` as an ordinary graph on all host vertices.
inline SimpleGraph color_subgraph(const TwoColoring& coloring, Color color) {
  const auto& host = coloring.host();
  SimpleGraph g(host.vertex_count());
  const auto& edges = host.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (coloring.edge_color(i) == color) g.add_edge(edges[i].u, edges[i].v);
  }
  return g;
}

/// The host itself (all cross-part edges) as a plain graph.
inline SimpleGraph host_graph(const MultipartiteHost& host) {
  return SimpleGraph(host.vertex_count(), host.edges());
}

using VertexSets = std::vector<std::vector<Vertex>>;

/// Connected components, each sorted, ordered by smallest vertex.
inline VertexSets components(const SimpleGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> seen(n, 0);
  VertexSets out;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp;
    stack.push_back(s);
    seen[s] = 1;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

/// Per-vertex component id matching the order returned by components().
inline std::vector<int> component_ids(const SimpleGraph& g) {
  std::vector<int> id(g.vertex_count(), -1);
  const auto comps = components(g);
  for (std::size_t c = 0; c < comps.size(); ++c) {
    for (Vertex v : comps[c]) id[v] = static_cast<int>(c);
  }
  return id;
}

/// Block decomposition (maximal 2-connected subgraphs and bridges). Isolated
/// vertices are reported as singleton blocks. Each block is sorted; the list
/// is sorted lexicographically.
inline VertexSets blocks(const SimpleGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> disc(n, -1);
  std::vector<int> low(n, 0);
  std::vector<Edge> edge_stack;
  VertexSets out;
  int timer = 0;

  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next;
  };
  std::vector<Frame> frames;

  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    if (g.degree(root) == 0) {
      disc[root] = timer++;
      out.push_back({root});
      continue;
    }
    disc[root] = low[root] = timer++;
    frames.push_back({root, -1, 0});
    while (!frames.empty()) {
      Frame& f = frames.back();
      const auto nbrs = g.neighbors(f.v);
      if (f.next < nbrs.size()) {
        const Vertex w = nbrs[f.next++];
        if (disc[w] == -1) {
          edge_stack.push_back({f.v, w});
          disc[w] = low[w] = timer++;
          frames.push_back({w, f.v, 0});
        } else if (w != f.parent && disc[w] < disc[f.v]) {
          edge_stack.push_back({f.v, w});
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      const Vertex child = f.v;
      const Vertex parent = f.parent;
      frames.pop_back();
      if (parent < 0) continue;
      low[parent] = std::min(low[parent], low[child]);
      if (low[child] >= disc[parent]) {
        std::vector<Vertex> block;
        while (true) {
          const Edge e = edge_stack.back();
          edge_stack.pop_back();
          block.push_back(e.u);
          block.push_back(e.v);
          if (e.u == parent && e.v == child) break;
        }
        std::sort(block.begin(), block.end());
        block.erase(std::unique(block.begin(), block.end()), block.end());
        out.push_back(std::move(block));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::size_t largest_size(const VertexSets& sets) {
  std::size_t best = 0;
  for (const auto& s : sets) best = std::max(best, s.size());
  return best;
}

/// Number of `color` edges from v into `restrict_to` (all vertices if absent).
inline int degree_in_color(const TwoColoring& coloring, Color color, Vertex v,
                           std::optional<std::span<const Vertex>> restrict_to = std::nullopt) {
  const auto& host = coloring.host();
  if (!host.contains(v)) throw InvalidArgument("vertex " + std::to_string(v) + " out of range");
  int count = 0;
  auto visit = [&](Vertex w) {
    if (!host.contains(w)) throw InvalidArgument("vertex " + std::to_string(w) + " out of range");
    if (w != v && host.adjacent(v, w) && coloring.color_of(v, w) == color) ++count;
  };
  if (restrict_to) {
    std::vector<Vertex> unique(restrict_to->begin(), restrict_to->end());
    std::sort(unique.begin(), unique.end());
    unique.erase(std::unique(unique.begin(), unique.end()), unique.end());
    for (Vertex w : unique) visit(w);
  } else {
    for (Vertex w = 0; w < host.vertex_count(); ++w) visit(w);
  }
  return count;
}

}  // namespace mpramsey
