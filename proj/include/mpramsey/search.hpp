#pragma once

// Exact path and cycle search at desk scale.
//
// Graphs with at most `SearchOptions::dp_limit` vertices are searched by
// subset dynamic programming over vertex bitmasks; larger graphs (up to
// `SearchOptions::cap`, hard limit 64) fall back to backtracking with
// reachability pruning. Both routes return the lexicographically smallest
// vertex sequence among all witnesses of the requested size.

#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mpramsey/graph.hpp"
#include "mpramsey/witness.hpp"

namespace mpramsey {

struct SearchOptions {
  /// Largest vertex count accepted; above it searches throw CapExceeded.
  int cap = 20;
  /// Largest vertex count searched by subset DP; above it, backtracking.
  int dp_limit = 20;
};

inline constexpr int kMaxSearchVertices = 64;
/// Subset DP tables are never built above this many vertices.
inline constexpr int kMaxDpVertices = 24;

using Mask = std::uint64_t;

inline constexpr Mask bit(int v) noexcept { return Mask{1} << v; }

inline int lowest(Mask m) noexcept { return std::countr_zero(m); }

/// Adjacency bitmasks for graphs with at most 64 vertices.
class BitGraph {
 public:
  BitGraph() = default;
  explicit BitGraph(int vertex_count) : adj_(static_cast<std::size_t>(vertex_count), 0) {
    if (vertex_count > kMaxSearchVertices) {
      throw CapExceeded("bit graphs hold at most 64 vertices");
    }
  }

  explicit BitGraph(const SimpleGraph& g) : BitGraph(g.vertex_count()) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      for (Vertex w : g.neighbors(v)) adj_[v] |= bit(w);
    }
  }

  int vertex_count() const noexcept { return static_cast<int>(adj_.size()); }
  Mask neighbors(Vertex v) const noexcept { return adj_[v]; }
  bool has_edge(Vertex u, Vertex v) const noexcept { return (adj_[u] >> v) & 1U; }
  void add_edge(Vertex u, Vertex v) noexcept {
    adj_[u] |= bit(v);
    adj_[v] |= bit(u);
  }
  Mask all() const noexcept {
    const int n = vertex_count();
    return n == 64 ? ~Mask{0} : bit(n) - 1;
  }

 private:
  std::vector<Mask> adj_;
};

namespace detail {

inline bool use_dp(int vertex_count, const SearchOptions& opts) {
  return vertex_count <= std::min(opts.dp_limit, kMaxDpVertices);
}

inline void check_cap(int vertex_count, const SearchOptions& opts) {
  const int cap = std::min(opts.cap, kMaxSearchVertices);
  if (vertex_count > cap) {
    throw CapExceeded("graph has " + std::to_string(vertex_count) +
                      " vertices, exact search cap is " + std::to_string(cap));
  }
}

inline StructureWitness make_witness(WitnessKind kind, std::vector<Vertex> seq) {
  StructureWitness w;
  w.kind = kind;
  w.vertices = std::move(seq);
  return w;
}

/// Vertices reachable from `from` inside `allowed` (from itself included).
inline Mask reach(const BitGraph& g, Vertex from, Mask allowed) {
  Mask seen = bit(from);
  Mask frontier = seen;
  while (frontier) {
    Mask next = 0;
    for (Mask f = frontier; f; f &= f - 1) next |= g.neighbors(lowest(f));
    next &= allowed & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

// ends[mask]: vertices w in mask such that G[mask] has a Hamiltonian path
// ending (equivalently starting) at w. Only masks with popcount <= k filled.
inline std::optional<std::vector<Vertex>> path_dp(const BitGraph& g, int k) {
  const int n = g.vertex_count();
  const std::size_t total = std::size_t{1} << n;
  std::vector<std::uint32_t> ends(total, 0);
  for (std::size_t mask = 1; mask < total; ++mask) {
    const int pc = std::popcount(mask);
    if (pc > k) continue;
    if (pc == 1) {
      ends[mask] = static_cast<std::uint32_t>(mask);
      continue;
    }
    std::uint32_t out = 0;
    for (Mask rest = mask; rest; rest &= rest - 1) {
      const int w = lowest(rest);
      if (ends[mask ^ bit(w)] & g.neighbors(w)) out |= static_cast<std::uint32_t>(bit(w));
    }
    ends[mask] = out;
  }

  auto starts_avoiding = [&](Mask used, int r) {
    Mask any = 0;
    for (std::size_t mask = 1; mask < total; ++mask) {
      if ((mask & used) == 0 && std::popcount(mask) == r) any |= ends[mask];
    }
    return any;
  };

  std::vector<Vertex> seq;
  Mask used = 0;
  Mask candidates = starts_avoiding(0, k);
  if (!candidates) return std::nullopt;
  seq.push_back(lowest(candidates));
  used |= bit(seq.back());
  for (int j = 1; j < k; ++j) {
    candidates = starts_avoiding(used, k - j) & g.neighbors(seq.back());
    seq.push_back(lowest(candidates));
    used |= bit(seq.back());
  }
  return seq;
}

inline std::optional<std::vector<Vertex>> path_backtrack(const BitGraph& g, int k) {
  std::vector<Vertex> seq;
  std::function<bool(Mask)> extend = [&](Mask used) -> bool {
    if (static_cast<int>(seq.size()) == k) return true;
    const Vertex last = seq.back();
    const int needed = k - static_cast<int>(seq.size());
    const Mask free = g.all() & ~used;
    if (std::popcount(reach(g, last, free | bit(last))) - 1 < needed) return false;
    for (Mask next = g.neighbors(last) & free; next; next &= next - 1) {
      const Vertex w = lowest(next);
      seq.push_back(w);
      if (extend(used | bit(w))) return true;
      seq.pop_back();
    }
    return false;
  };
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    seq.assign(1, s);
    if (extend(bit(s))) return seq;
  }
  return std::nullopt;
}

// For each candidate minimum vertex s, f[sub] holds the vertices w such that
// some path s -> ... -> w covers {s} plus the vertices encoded by `sub`
// (bit i of sub is vertex s + 1 + i).
inline std::optional<std::vector<Vertex>> cycle_dp(const BitGraph& g, int k) {
  const int n = g.vertex_count();
  for (Vertex s = 0; s + k <= n; ++s) {
    const int width = n - s - 1;
    const std::size_t total = std::size_t{1} << width;
    auto to_mask = [&](std::size_t sub) { return static_cast<Mask>(sub) << (s + 1); };
    auto to_sub = [&](Mask m) { return static_cast<std::size_t>(m >> (s + 1)); };
    const Mask s_adj = g.neighbors(s);

    std::vector<Mask> f(total, 0);
    bool closes = false;
    for (std::size_t sub = 1; sub < total; ++sub) {
      const int pc = std::popcount(sub);
      if (pc > k - 1) continue;
      const Mask mask = to_mask(sub);
      Mask out = 0;
      if (pc == 1) {
        out = mask & s_adj;
      } else {
        for (Mask rest = mask; rest; rest &= rest - 1) {
          const int w = lowest(rest);
          if (f[to_sub(mask ^ bit(w))] & g.neighbors(w)) out |= bit(w);
        }
      }
      f[sub] = out;
      if (pc == k - 1 && (out & s_adj)) closes = true;
    }
    if (!closes) continue;

    auto ends_avoiding = [&](Mask used, int r) {
      Mask any = 0;
      for (std::size_t sub = 1; sub < total; ++sub) {
        if ((to_mask(sub) & used) == 0 && std::popcount(sub) == r) any |= f[sub];
      }
      return any;
    };
    std::vector<Vertex> seq{s};
    Mask used = 0;
    for (int j = 0; j < k - 1; ++j) {
      const Mask candidates = ends_avoiding(used, k - 1 - j) & g.neighbors(seq.back());
      seq.push_back(lowest(candidates));
      used |= bit(seq.back());
    }
    return seq;
  }
  return std::nullopt;
}

inline std::optional<std::vector<Vertex>> cycle_backtrack(const BitGraph& g, int k) {
  const int n = g.vertex_count();
  std::vector<Vertex> seq;
  Vertex start = 0;
  Mask allowed = 0;
  std::function<bool(Mask)> extend = [&](Mask used) -> bool {
    const Vertex last = seq.back();
    if (static_cast<int>(seq.size()) == k) return g.has_edge(last, start);
    const int needed = k - static_cast<int>(seq.size());
    const Mask free = allowed & ~used;
    const Mask reachable = reach(g, last, free | bit(last) | bit(start));
    if (!(reachable & bit(start)) && seq.size() > 1) return false;
    if (std::popcount(reachable & free) < needed) return false;
    for (Mask next = g.neighbors(last) & free; next; next &= next - 1) {
      const Vertex w = lowest(next);
      seq.push_back(w);
      if (extend(used | bit(w))) return true;
      seq.pop_back();
    }
    return false;
  };
  for (start = 0; start + k <= n; ++start) {
    allowed = g.all() & ~(bit(start + 1) - 1);
    allowed &= ~bit(start);
    seq.assign(1, start);
    if (extend(bit(start))) return seq;
  }
  return std::nullopt;
}

}  // namespace detail

/// Path on exactly k vertices, or none. Exact for graphs within the cap.
inline std::optional<StructureWitness> find_path_exact(const BitGraph& g, int k,
                                                       const SearchOptions& opts = {}) {
  if (k < 1) throw InvalidArgument("path size must be at least 1");
  detail::check_cap(g.vertex_count(), opts);
  const int n = g.vertex_count();
  if (k > n) return std::nullopt;
  if (k == 1) return detail::make_witness(WitnessKind::path, {0});
  auto seq = detail::use_dp(n, opts) ? detail::path_dp(g, k) : detail::path_backtrack(g, k);
  if (!seq) return std::nullopt;
  return detail::make_witness(WitnessKind::path, std::move(*seq));
}

/// Cycle on exactly k vertices (k >= 3), or none.
inline std::optional<StructureWitness> find_cycle_exact(const BitGraph& g, int k,
                                                        const SearchOptions& opts = {}) {
  if (k < 3) throw InvalidArgument("cycle size must be at least 3");
  detail::check_cap(g.vertex_count(), opts);
  if (k > g.vertex_count()) return std::nullopt;
  auto seq = detail::use_dp(g.vertex_count(), opts) ? detail::cycle_dp(g, k)
                                               : detail::cycle_backtrack(g, k);
  if (!seq) return std::nullopt;
  return detail::make_witness(WitnessKind::cycle, std::move(*seq));
}

inline std::optional<StructureWitness> find_path_exact(const SimpleGraph& g, int k,
                                                       const SearchOptions& opts = {}) {
  detail::check_cap(g.vertex_count(), opts);
  return find_path_exact(BitGraph(g), k, opts);
}

inline std::optional<StructureWitness> find_cycle_exact(const SimpleGraph& g, int k,
                                                        const SearchOptions& opts = {}) {
  detail::check_cap(g.vertex_count(), opts);
  return find_cycle_exact(BitGraph(g), k, opts);
}

/// Some cycle on at least k vertices, or none. Lengths are tried in
/// increasing order and each length only inside blocks large enough to hold
/// it; the shortest qualifying length wins, ties by smallest sequence.
inline std::optional<StructureWitness> find_cycle_at_least(const SimpleGraph& g, int k,
                                                           const SearchOptions& opts = {}) {
  if (k < 3) throw InvalidArgument("cycle size must be at least 3");
  detail::check_cap(g.vertex_count(), opts);
  const auto parts = blocks(g);
  std::vector<std::pair<std::vector<Vertex>, BitGraph>> big;
  for (const auto& b : parts) {
    if (static_cast<int>(b.size()) >= k) big.emplace_back(b, BitGraph(g.induced(b)));
  }
  for (int len = k; len <= g.vertex_count(); ++len) {
    std::optional<std::vector<Vertex>> best;
    for (const auto& [members, sub] : big) {
      if (static_cast<int>(members.size()) < len) continue;
      auto found = find_cycle_exact(sub, len, opts);
      if (!found) continue;
      std::vector<Vertex> seq;
      for (Vertex local : found->vertices) seq.push_back(members[local]);
      if (!best || seq < *best) best = std::move(seq);
    }
    if (best) return detail::make_witness(WitnessKind::cycle, std::move(*best));
  }
  return std::nullopt;
}

inline std::optional<StructureWitness> find_cycle_at_least(const BitGraph& g, int k,
                                                           const SearchOptions& opts = {}) {
  detail::check_cap(g.vertex_count(), opts);
  SimpleGraph simple(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    for (Mask m = g.neighbors(v) & ~(bit(v + 1) - 1); m; m &= m - 1) simple.add_edge(v, lowest(m));
  }
  return find_cycle_at_least(simple, k, opts);
}

/// Visits every cycle of `g` exactly once (as the rotation starting at its
/// smallest vertex, oriented so the second vertex is below the last).
inline void for_each_cycle(const SimpleGraph& g,
                           const std::function<void(std::span<const Vertex>)>& visit,
                           const SearchOptions& opts = {}) {
  detail::check_cap(g.vertex_count(), opts);
  const BitGraph bg(g);
  std::vector<Vertex> seq;
  std::function<void(Vertex, Mask)> walk = [&](Vertex start, Mask used) {
    const Vertex last = seq.back();
    if (seq.size() >= 3 && bg.has_edge(last, start) && seq[1] < last) visit(seq);
    Mask next = bg.neighbors(last) & ~used & ~(bit(start + 1) - 1);
    for (; next; next &= next - 1) {
      const Vertex w = lowest(next);
      seq.push_back(w);
      walk(start, used | bit(w));
      seq.pop_back();
    }
  };
  for (Vertex s = 0; s < bg.vertex_count(); ++s) {
    seq.assign(1, s);
    walk(s, bit(s));
  }
}

}  // namespace mpramsey
