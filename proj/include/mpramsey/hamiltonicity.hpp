#pragma once

// Degree conditions for Hamiltonicity of balanced bipartite graphs and exact
// Hamiltonian cycle / path search used to cross-check them.
//
// The certifiers are one-sided: `guaranteed` means the degree condition
// holds and the structure is promised; `unknown` means only that the
// condition failed.

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mpramsey/graph.hpp"
#include "mpramsey/search.hpp"
#include "mpramsey/witness.hpp"

namespace mpramsey {

enum class Certification { guaranteed, unknown };

inline const char* certification_name(Certification c) noexcept {
  return c == Certification::guaranteed ? "guaranteed" : "unknown";
}

/// Bipartite graph with sides U = {u_0..u_{m-1}} and V = {v_0..v_{m-1}}.
/// As a plain graph, u_i is vertex i and v_j is vertex m + j.
class BalancedBipartite {
 public:
  /// `edges` are (u index, v index) pairs. Throws InvalidArgument when the
  /// sides differ in size or an index is out of range.
  BalancedBipartite(int u_count, int v_count, std::span<const std::pair<int, int>> edges)
      : m_(u_count) {
    if (u_count != v_count) {
      throw InvalidArgument("unbalanced sides: " + std::to_string(u_count) + " vs " +
                            std::to_string(v_count));
    }
    if (m_ < 1) throw InvalidArgument("sides must be nonempty");
    adj_.assign(static_cast<std::size_t>(m_) * m_, 0);
    for (auto [i, j] : edges) {
      if (i < 0 || i >= m_ || j < 0 || j >= m_) throw InvalidArgument("bipartite edge out of range");
      adj_[i * m_ + j] = 1;
    }
    finish();
  }

  /// Reads sides `left`, `right` (equal sizes, disjoint) out of `g`; edges
  /// inside a side are ignored.
  static BalancedBipartite from_graph(const SimpleGraph& g, std::span<const Vertex> left,
                                      std::span<const Vertex> right) {
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < left.size(); ++i) {
      for (std::size_t j = 0; j < right.size(); ++j) {
        if (g.has_edge(left[i], right[j])) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
      }
    }
    return BalancedBipartite(static_cast<int>(left.size()), static_cast<int>(right.size()), edges);
  }

  static BalancedBipartite complete(int m) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) edges.emplace_back(i, j);
    }
    return BalancedBipartite(m, m, edges);
  }

  int side_size() const noexcept { return m_; }
  bool adjacent(int i, int j) const { return adj_.at(static_cast<std::size_t>(i) * m_ + j) != 0; }
  int degree_u(int i) const { return deg_u_.at(i); }
  int degree_v(int j) const { return deg_v_.at(j); }

  /// U indices sorted by (degree, index): order_u()[k] is u_{k+1} of the
  /// theorems' labelling.
  const std::vector<int>& order_u() const noexcept { return order_u_; }
  const std::vector<int>& order_v() const noexcept { return order_v_; }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < m_; ++i) {
      for (int j = 0; j < m_; ++j) {
        if (adjacent(i, j)) out.emplace_back(i, j);
      }
    }
    return out;
  }

  SimpleGraph to_graph() const {
    SimpleGraph g(2 * m_);
    for (auto [i, j] : edges()) g.add_edge(i, m_ + j);
    return g;
  }

 private:
  void finish() {
    deg_u_.assign(m_, 0);
    deg_v_.assign(m_, 0);
    for (int i = 0; i < m_; ++i) {
      for (int j = 0; j < m_; ++j) {
        if (adjacent(i, j)) {
          ++deg_u_[i];
          ++deg_v_[j];
        }
      }
    }
    auto sorted = [](const std::vector<int>& deg) {
      std::vector<int> order(deg.size());
      std::iota(order.begin(), order.end(), 0);
      std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return deg[a] < deg[b]; });
      return order;
    };
    order_u_ = sorted(deg_u_);
    order_v_ = sorted(deg_v_);
  }

  int m_;
  std::vector<char> adj_;
  std::vector<int> deg_u_;
  std::vector<int> deg_v_;
  std::vector<int> order_u_;
  std::vector<int> order_v_;
};

namespace detail {

inline void require_certifiable(const BalancedBipartite& h) {
  if (h.side_size() < 2) throw InvalidArgument("certifiers need side size at least 2");
}

// Sorted degrees, 1-based: d[k] is the k-th smallest degree.
inline std::vector<int> sorted_degrees(const BalancedBipartite& h, bool u_side) {
  const int m = h.side_size();
  std::vector<int> d(m + 1, 0);
  const auto& order = u_side ? h.order_u() : h.order_v();
  for (int k = 0; k < m; ++k) d[k + 1] = u_side ? h.degree_u(order[k]) : h.degree_v(order[k]);
  return d;
}

}  // namespace detail

/// d(u_i) <= i < m  implies  d(v_{m-i}) >= m-i+1, for every i.
/// Guaranteed => H is Hamiltonian.
inline Certification chvatal_certifier(const BalancedBipartite& h) {
  detail::require_certifiable(h);
  const int m = h.side_size();
  const auto du = detail::sorted_degrees(h, true);
  const auto dv = detail::sorted_degrees(h, false);
  for (int i = 1; i < m; ++i) {
    if (du[i] <= i && dv[m - i] < m - i + 1) return Certification::unknown;
  }
  return Certification::guaranteed;
}

/// With i, j the smallest indices such that d(u_i) <= i+1 and d(v_j) <= j+1,
/// d(u_i) + d(v_j) >= m+2. Guaranteed => H is Hamiltonian bi-connected.
///
/// Such indices always exist (d(u_m) <= m < m+1); a side without one would
/// impose no constraint.
inline Certification berge_certifier(const BalancedBipartite& h) {
  detail::require_certifiable(h);
  const int m = h.side_size();
  const auto du = detail::sorted_degrees(h, true);
  const auto dv = detail::sorted_degrees(h, false);
  auto first_low = [m](const std::vector<int>& d) -> std::optional<int> {
    for (int k = 1; k <= m; ++k) {
      if (d[k] <= k + 1) return k;
    }
    return std::nullopt;
  };
  const auto i = first_low(du);
  const auto j = first_low(dv);
  if (!i || !j) return Certification::guaranteed;
  return du[*i] + dv[*j] >= m + 2 ? Certification::guaranteed : Certification::unknown;
}

/// For every nonadjacent u_i v_j with d(u_i) <= i+q and d(v_j) <= j+q,
/// d(u_i) + d(v_j) >= m+q+1. Guaranteed => every q edges forming vertex-
/// disjoint paths lie on a common Hamiltonian cycle. Requires 0 <= q <= m-1.
///
/// A vertex whose degree is tied takes the last index of its tie group, so
/// the pairs checked include those of every admissible labelling and the
/// verdict does not depend on vertex ids.
inline Certification las_vergnas_certifier(const BalancedBipartite& h, int q) {
  detail::require_certifiable(h);
  const int m = h.side_size();
  if (q < 0 || q > m - 1) {
    throw InvalidArgument("q must lie in [0, " + std::to_string(m - 1) + "]");
  }
  auto last_index = [m](const std::vector<int>& d, int degree) {
    int k = m;
    while (d[k] > degree) --k;
    return k;
  };
  const auto du = detail::sorted_degrees(h, true);
  const auto dv = detail::sorted_degrees(h, false);
  for (int u = 0; u < m; ++u) {
    const int deg_u = h.degree_u(u);
    if (deg_u > last_index(du, deg_u) + q) continue;
    for (int v = 0; v < m; ++v) {
      const int deg_v = h.degree_v(v);
      if (deg_v > last_index(dv, deg_v) + q || h.adjacent(u, v)) continue;
      if (deg_u + deg_v < m + q + 1) return Certification::unknown;
    }
  }
  return Certification::guaranteed;
}

/// True iff `edges` are distinct, present-or-not edges forming vertex-
/// disjoint paths (max degree 2, no cycle).
inline bool is_linear_forest(int vertex_count, std::span<const Edge> edges) {
  std::vector<int> deg(vertex_count, 0);
  std::vector<int> root(vertex_count);
  std::iota(root.begin(), root.end(), 0);
  std::function<int(int)> find = [&](int x) { return root[x] == x ? x : root[x] = find(root[x]); };
  std::vector<Edge> seen;
  for (Edge e : edges) {
    if (e.u == e.v || e.u < 0 || e.v < 0 || e.u >= vertex_count || e.v >= vertex_count) return false;
    if (e.u > e.v) std::swap(e.u, e.v);
    if (std::find(seen.begin(), seen.end(), e) != seen.end()) return false;
    seen.push_back(e);
    if (++deg[e.u] > 2 || ++deg[e.v] > 2) return false;
    const int a = find(e.u);
    const int b = find(e.v);
    if (a == b) return false;
    root[a] = b;
  }
  return true;
}

/// Hamiltonian cycle of `g` containing every edge of `required`, or none.
/// Exact within the search cap. Throws InvalidArgument if `required` is not
/// a set of vertex-disjoint paths.
inline std::optional<StructureWitness> hamiltonian_cycle_through(const SimpleGraph& g,
                                                                 std::span<const Edge> required,
                                                                 const SearchOptions& opts = {}) {
  detail::check_cap(g.vertex_count(), opts);
  const int n = g.vertex_count();
  if (!is_linear_forest(n, required)) {
    throw InvalidArgument("required edges must form vertex-disjoint paths");
  }
  if (n < 3) return std::nullopt;
  const BitGraph bg(g);
  std::vector<Mask> req(n, 0);
  for (const Edge& e : required) {
    if (!g.has_edge(e.u, e.v)) return std::nullopt;
    req[e.u] |= bit(e.v);
    req[e.v] |= bit(e.u);
  }

  const Vertex start = 0;
  std::vector<Vertex> seq{start};
  std::function<bool(Mask)> extend = [&](Mask used) -> bool {
    const Vertex last = seq.back();
    const Mask prev = seq.size() > 1 ? bit(seq[seq.size() - 2]) : 0;
    if (static_cast<int>(seq.size()) == n) {
      if (!bg.has_edge(last, start)) return false;
      if (req[last] & ~(prev | bit(start))) return false;
      return (req[start] & ~(bit(seq[1]) | bit(last))) == 0;
    }
    const Mask free = bg.all() & ~used;
    if ((detail::reach(bg, last, free | bit(last)) & free) != free) return false;
    Mask options = bg.neighbors(last) & free;
    const Mask pending = req[last] & ~prev;
    if (last != start && pending) {
      options &= pending;
    } else if (last == start && std::popcount(req[start]) == 2) {
      options &= req[start];
    }
    for (; options; options &= options - 1) {
      const Vertex w = lowest(options);
      if (std::popcount(req[w] & ~bit(last)) > 1) continue;
      seq.push_back(w);
      if (extend(used | bit(w))) return true;
      seq.pop_back();
    }
    return false;
  };
  if (!extend(bit(start))) return std::nullopt;
  return detail::make_witness(WitnessKind::cycle, seq);
}

/// Hamiltonian path of `g` with endpoints a and b (a != b), or none.
inline std::optional<StructureWitness> hamiltonian_path_between(const SimpleGraph& g, Vertex a, Vertex b,
                                                                const SearchOptions& opts = {}) {
  detail::check_cap(g.vertex_count(), opts);
  if (!g.contains(a) || !g.contains(b) || a == b) throw InvalidArgument("bad path endpoints");
  const int n = g.vertex_count();
  const BitGraph bg(g);
  std::vector<Vertex> seq{a};
  std::function<bool(Mask)> extend = [&](Mask used) -> bool {
    const Vertex last = seq.back();
    if (static_cast<int>(seq.size()) == n) return last == b;
    if (last == b) return false;
    const Mask free = bg.all() & ~used;
    if ((detail::reach(bg, last, free | bit(last)) & free) != free) return false;
    for (Mask next = bg.neighbors(last) & free; next; next &= next - 1) {
      const Vertex w = lowest(next);
      if (w == b && static_cast<int>(seq.size()) != n - 1) continue;
      seq.push_back(w);
      if (extend(used | bit(w))) return true;
      seq.pop_back();
    }
    return false;
  };
  if (!extend(bit(a))) return std::nullopt;
  return detail::make_witness(WitnessKind::path, seq);
}

}  // namespace mpramsey
