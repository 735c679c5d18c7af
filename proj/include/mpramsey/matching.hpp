#pragma once

// Maximum matchings in general graphs (Edmonds' blossom algorithm) and the
// connected matching number alpha'_*: the largest matching whose edges all
// lie in one component.

#include <algorithm>
#include <queue>
#include <vector>

#include "mpramsey/graph.hpp"
#include "mpramsey/witness.hpp"

namespace mpramsey {

struct MatchingResult {
  int size = 0;
  StructureWitness witness;
};

namespace detail {

class BlossomMatcher {
 public:
  explicit BlossomMatcher(const SimpleGraph& g)
      : g_(g), n_(g.vertex_count()), mate_(n_, -1), parent_(n_), base_(n_),
        used_(n_), blossom_(n_) {}

  std::vector<Vertex> run() {
    // Greedy warm start; augmentation makes it maximum regardless.
    for (Vertex v = 0; v < n_; ++v) {
      if (mate_[v] != -1) continue;
      for (Vertex w : g_.neighbors(v)) {
        if (mate_[w] == -1) {
          mate_[v] = w;
          mate_[w] = v;
          break;
        }
      }
    }
    for (Vertex root = 0; root < n_; ++root) {
      if (mate_[root] != -1) continue;
      Vertex v = find_augmenting_path(root);
      while (v != -1) {
        const Vertex pv = parent_[v];
        const Vertex next = mate_[pv];
        mate_[v] = pv;
        mate_[pv] = v;
        v = next;
      }
    }
    return mate_;
  }

 private:
  Vertex lowest_common_ancestor(Vertex a, Vertex b) {
    std::vector<char> seen(n_, 0);
    while (true) {
      a = base_[a];
      seen[a] = 1;
      if (mate_[a] == -1) break;
      a = parent_[mate_[a]];
    }
    while (true) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[mate_[b]];
    }
  }

  void mark_path(Vertex v, Vertex b, Vertex child) {
    while (base_[v] != b) {
      blossom_[base_[v]] = 1;
      blossom_[base_[mate_[v]]] = 1;
      parent_[v] = child;
      child = mate_[v];
      v = parent_[mate_[v]];
    }
  }

  Vertex find_augmenting_path(Vertex root) {
    std::fill(used_.begin(), used_.end(), 0);
    std::fill(parent_.begin(), parent_.end(), -1);
    for (Vertex i = 0; i < n_; ++i) base_[i] = i;
    used_[root] = 1;
    std::queue<Vertex> queue;
    queue.push(root);
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop();
      for (Vertex to : g_.neighbors(v)) {
        if (base_[v] == base_[to] || mate_[v] == to) continue;
        if (to == root || (mate_[to] != -1 && parent_[mate_[to]] != -1)) {
          const Vertex cur = lowest_common_ancestor(v, to);
          std::fill(blossom_.begin(), blossom_.end(), 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (Vertex i = 0; i < n_; ++i) {
            if (blossom_[base_[i]]) {
              base_[i] = cur;
              if (!used_[i]) {
                used_[i] = 1;
                queue.push(i);
              }
            }
          }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (mate_[to] == -1) return to;
          used_[mate_[to]] = 1;
          queue.push(mate_[to]);
        }
      }
    }
    return -1;
  }

  const SimpleGraph& g_;
  int n_;
  std::vector<Vertex> mate_;
  std::vector<Vertex> parent_;
  std::vector<Vertex> base_;
  std::vector<char> used_;
  std::vector<char> blossom_;
};

}  // namespace detail

/// Maximum matching of a general graph.
inline MatchingResult max_matching(const SimpleGraph& g) {
  const auto mate = detail::BlossomMatcher(g).run();
  MatchingResult result;
  result.witness.kind = WitnessKind::matching;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (mate[v] > v) result.witness.edges.push_back({v, mate[v]});
  }
  result.size = static_cast<int>(result.witness.edges.size());
  return result;
}

/// alpha'_*(g): a maximum matching restricted to its best component. Ties go
/// to the component with the smallest vertex.
inline MatchingResult connected_matching_number(const SimpleGraph& g) {
  const auto global = max_matching(g);
  const auto ids = component_ids(g);
  int component_count = 0;
  for (int id : ids) component_count = std::max(component_count, id + 1);
  std::vector<int> per_component(component_count, 0);
  for (const Edge& e : global.witness.edges) ++per_component[ids[e.u]];

  MatchingResult result;
  result.witness.kind = WitnessKind::connected_matching;
  if (component_count == 0) return result;
  const auto best = std::max_element(per_component.begin(), per_component.end());
  const int comp = static_cast<int>(best - per_component.begin());
  result.size = *best;
  result.witness.component = comp;
  for (const Edge& e : global.witness.edges) {
    if (ids[e.u] == comp) result.witness.edges.push_back(e);
  }
  return result;
}

}  // namespace mpramsey
