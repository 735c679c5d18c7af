#pragma once

// Host conditions c1-c7 on part-size tuples, exhaustive verification over
// all 2-edge-colorings of small hosts, and a local-search counterexample
// hunter.

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <exception>
#include <limits>
#include <mutex>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "mpramsey/finders.hpp"
#include "mpramsey/graph.hpp"
#include "mpramsey/matching.hpp"

namespace mpramsey {

/// The four structures whose Ramsey-type thresholds the conditions describe.
enum class Target { cycle_2n, cycle_at_least_2n, path_2n, path_2n_plus_1 };

inline constexpr Target kTargets[] = {Target::cycle_2n, Target::cycle_at_least_2n, Target::path_2n,
                                      Target::path_2n_plus_1};

inline const char* target_name(Target t) noexcept {
  switch (t) {
    case Target::cycle_2n: return "C_2n";
    case Target::cycle_at_least_2n: return "C_{>=2n}";
    case Target::path_2n: return "P_2n";
    case Target::path_2n_plus_1: return "P_{2n+1}";
  }
  return "?";
}

inline StructureQuery target_query(Target t, int n) {
  switch (t) {
    case Target::cycle_2n: return {StructureKind::cycle, 2 * n};
    case Target::cycle_at_least_2n: return {StructureKind::cycle_at_least, 2 * n};
    case Target::path_2n: return {StructureKind::path, 2 * n};
    case Target::path_2n_plus_1: return {StructureKind::path, 2 * n + 1};
  }
  return {};
}

/// Text of condition k (1-based); a guard before "=>" makes it vacuous when false.
inline const char* condition_text(int k) {
  static constexpr const char* kText[] = {
      "N >= 3n-1",
      "N-n_1 >= 2n-1",
      "N >= 3n",
      "N-n_1-n_2 <= 2 => n_1 >= 2n-1",
      "N-n_1-n_2 <= 1 => n_1+N >= 6n-2",
      "n_3 = 0 => n_1 >= 2n+1",
      "N-n_1-n_2 <= 2 => N >= 4n-1",
  };
  if (k < 1 || k > 7) throw InvalidArgument("condition index must be in 1..7");
  return kText[k - 1];
}

/// Conditions c1-c7 (see condition_text) for (n; n_1 >= ... >= n_s).
struct ConditionReport {
  int n = 0;
  std::vector<int> part_sizes;
  int total = 0;
  std::array<bool, 7> holds{};

  bool condition(int number) const { return holds.at(static_cast<std::size_t>(number - 1)); }

  /// C_2n: c1 c2 c7. C_{>=2n}: c1 c2 c4 c5. P_2n: c1 c2. P_{2n+1}: c2 c3 c6.
  bool applicable(Target t) const {
    switch (t) {
      case Target::cycle_2n: return condition(1) && condition(2) && condition(7);
      case Target::cycle_at_least_2n:
        return condition(1) && condition(2) && condition(4) && condition(5);
      case Target::path_2n: return condition(1) && condition(2);
      case Target::path_2n_plus_1: return condition(2) && condition(3) && condition(6);
    }
    return false;
  }
};

inline ConditionReport conditions_report(int n, std::vector<int> part_sizes) {
  if (n < 1) throw InvalidArgument("n must be at least 1");
  const MultipartiteHost host(std::move(part_sizes));  // validates and sorts
  ConditionReport r;
  r.n = n;
  r.part_sizes.assign(host.part_sizes().begin(), host.part_sizes().end());
  const auto& p = r.part_sizes;
  const int total = host.vertex_count();
  const int n1 = p[0];
  const int n2 = p[1];
  const int n3 = p.size() > 2 ? p[2] : 0;
  const int outside_two = total - n1 - n2;
  r.total = total;
  r.holds[0] = total >= 3 * n - 1;
  r.holds[1] = total - n1 >= 2 * n - 1;
  r.holds[2] = total >= 3 * n;
  r.holds[3] = outside_two > 2 || n1 >= 2 * n - 1;
  r.holds[4] = outside_two > 1 || n1 + total >= 6 * n - 2;
  r.holds[5] = n3 != 0 || n1 >= 2 * n + 1;
  r.holds[6] = outside_two > 2 || total >= 4 * n - 1;
  return r;
}

struct EnumerationOptions {
  int threads = 1;
  /// Half-open index range over coloring bitmasks; defaults to [0, 2^|E|).
  std::optional<std::uint64_t> begin;
  std::optional<std::uint64_t> end;
  /// Symmetry reduction: only canonical orbit representatives are searched
  /// and counts are weighted by orbit size.
  bool color_swap = false;
  bool part_permutations = false;
  /// Hosts with more edges are rejected (2^25 colorings by default).
  int max_edges = 25;
  std::size_t max_group_size = 100000;
  SearchOptions search;
};

struct VerdictSummary {
  std::vector<int> part_sizes;
  StructureQuery target;
  std::uint64_t range_begin = 0;
  std::uint64_t range_end = 0;
  /// Colorings covered (orbit-weighted when symmetry reduction is on).
  std::uint64_t colorings = 0;
  /// Colorings actually searched.
  std::uint64_t searched = 0;
  /// Covered colorings lacking the target in both colors.
  std::uint64_t failures = 0;
  /// Lowest failing bitmask (a canonical representative under reduction).
  std::optional<std::uint64_t> counterexample_index;
  std::optional<TwoColoring> counterexample;
  double wall_seconds = 0.0;

  std::uint64_t containing() const { return colorings - failures; }
};

namespace detail {

// Edge permutations induced by all within-part vertex permutations.
inline std::vector<std::vector<int>> part_permutation_group(const MultipartiteHost& host,
                                                            std::size_t max_size) {
  std::size_t size = 1;
  for (int p : host.part_sizes()) {
    for (int k = 2; k <= p; ++k) {
      size *= static_cast<std::size_t>(k);
      if (size > max_size) {
        throw CapExceeded("within-part permutation group exceeds " + std::to_string(max_size));
      }
    }
  }
  std::vector<std::vector<Vertex>> per_part;
  for (int i = 0; i < host.part_count(); ++i) {
    std::vector<Vertex> ids(host.part_size(i));
    std::iota(ids.begin(), ids.end(), host.part_begin(i));
    per_part.push_back(ids);
  }
  std::vector<std::vector<int>> group;
  const auto& edges = host.edges();
  std::vector<Vertex> image(host.vertex_count());
  while (true) {
    for (int i = 0; i < host.part_count(); ++i) {
      const auto& ids = per_part[static_cast<std::size_t>(i)];
      for (std::size_t k = 0; k < ids.size(); ++k) image[host.part_begin(i) + k] = ids[k];
    }
    std::vector<int> edge_perm(edges.size());
    for (std::size_t e = 0; e < edges.size(); ++e) {
      edge_perm[e] = static_cast<int>(host.edge_index(image[edges[e].u], image[edges[e].v]));
    }
    group.push_back(std::move(edge_perm));
    // Odometer over the parts' permutations.
    std::size_t part = 0;
    for (; part < per_part.size(); ++part) {
      if (std::next_permutation(per_part[part].begin(), per_part[part].end())) break;
    }
    if (part == per_part.size()) break;
  }
  return group;
}

// Orbit weight of `mask` if it is the smallest member of its orbit, else 0.
inline std::uint64_t orbit_weight(std::uint64_t mask, std::uint64_t all_edges,
                                  const std::vector<std::vector<int>>& group, bool color_swap) {
  std::uint64_t stabilizer = 0;
  for (const auto& perm : group) {
    std::uint64_t img = 0;
    for (std::uint64_t m = mask; m; m &= m - 1) img |= std::uint64_t{1} << perm[std::countr_zero(m)];
    if (img < mask) return 0;
    if (img == mask) ++stabilizer;
    if (color_swap) {
      const std::uint64_t flipped = img ^ all_edges;
      if (flipped < mask) return 0;
      if (flipped == mask) ++stabilizer;
    }
  }
  return group.size() * (color_swap ? 2 : 1) / stabilizer;
}

}  // namespace detail

/// Runs mono_search on every coloring of `host` in the configured index
/// range. Counts are exact; parallel and serial runs agree.
inline VerdictSummary enumerate_verify(const HostPtr& host, const StructureQuery& target,
                                       const EnumerationOptions& opts = {}) {
  detail::check_query(target);
  const auto edge_count = static_cast<int>(host->edge_count());
  if (edge_count > opts.max_edges || edge_count > 63) {
    throw CapExceeded("host has " + std::to_string(edge_count) + " edges; enumeration cap is " +
                      std::to_string(std::min(opts.max_edges, 63)));
  }
  if (target.kind != StructureKind::connected_matching) {
    detail::check_cap(host->vertex_count(), opts.search);
  }
  const std::uint64_t space = std::uint64_t{1} << edge_count;
  const std::uint64_t begin = opts.begin.value_or(0);
  const std::uint64_t end = std::min(opts.end.value_or(space), space);
  if (begin > end) throw InvalidArgument("enumeration range is empty or reversed");

  const bool reduce = opts.color_swap || opts.part_permutations;
  std::vector<std::vector<int>> group;
  if (opts.part_permutations) {
    group = detail::part_permutation_group(*host, opts.max_group_size);
  } else if (reduce) {
    std::vector<int> identity(static_cast<std::size_t>(edge_count));
    std::iota(identity.begin(), identity.end(), 0);
    group.push_back(std::move(identity));
  }
  const std::uint64_t all_edges = space - 1;
  const auto& edges = host->edges();
  const int vertices = host->vertex_count();

  struct Tally {
    std::uint64_t colorings = 0;
    std::uint64_t searched = 0;
    std::uint64_t failures = 0;
    std::uint64_t first_failure = std::numeric_limits<std::uint64_t>::max();
  };

  auto lacks_target = [&](std::uint64_t mask) {
    BitGraph red(vertices);
    BitGraph blue(vertices);
    for (int e = 0; e < edge_count; ++e) {
      if ((mask >> e) & 1U) {
        blue.add_edge(edges[e].u, edges[e].v);
      } else {
        red.add_edge(edges[e].u, edges[e].v);
      }
    }
    return !find_structure(red, target, opts.search) && !find_structure(blue, target, opts.search);
  };

  auto run_block = [&](std::uint64_t lo, std::uint64_t hi, Tally& t) {
    for (std::uint64_t mask = lo; mask < hi; ++mask) {
      std::uint64_t weight = 1;
      if (reduce) {
        weight = detail::orbit_weight(mask, all_edges, group, opts.color_swap);
        if (weight == 0) continue;
      }
      t.colorings += weight;
      ++t.searched;
      if (lacks_target(mask)) {
        t.failures += weight;
        t.first_failure = std::min(t.first_failure, mask);
      }
    }
  };

  const auto start = std::chrono::steady_clock::now();
  Tally total;
  const int threads = std::max(1, opts.threads);
  if (threads == 1) {
    run_block(begin, end, total);
  } else {
    constexpr std::uint64_t kBlock = 1024;
    std::atomic<std::uint64_t> next{begin};
    std::mutex merge;
    std::vector<std::thread> workers;
    std::exception_ptr failure;
    for (int w = 0; w < threads; ++w) {
      workers.emplace_back([&] {
        Tally local;
        try {
          while (true) {
            const std::uint64_t lo = next.fetch_add(kBlock);
            if (lo >= end) break;
            run_block(lo, std::min(end, lo + kBlock), local);
          }
        } catch (...) {
          std::lock_guard lock(merge);
          if (!failure) failure = std::current_exception();
        }
        std::lock_guard lock(merge);
        total.colorings += local.colorings;
        total.searched += local.searched;
        total.failures += local.failures;
        total.first_failure = std::min(total.first_failure, local.first_failure);
      });
    }
    for (auto& t : workers) t.join();
    if (failure) std::rethrow_exception(failure);
  }

  VerdictSummary summary;
  summary.part_sizes.assign(host->part_sizes().begin(), host->part_sizes().end());
  summary.target = target;
  summary.range_begin = begin;
  summary.range_end = end;
  summary.colorings = total.colorings;
  summary.searched = total.searched;
  summary.failures = total.failures;
  if (total.failures > 0) {
    summary.counterexample_index = total.first_failure;
    summary.counterexample = TwoColoring::from_bits(host, total.first_failure);
  }
  summary.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return summary;
}

struct LocalSearchOptions {
  std::uint64_t seed = 1;
  /// Evaluations without improvement before a random restart.
  std::uint64_t restart_after = 2000;
  /// Chance of keeping a flip that makes the score worse.
  double uphill_probability = 0.05;
  SearchOptions search;
};

/// Random-restart local search over single-edge color flips for a coloring
/// with no monochromatic `target`. `budget` bounds the number of coloring
/// evaluations. Any coloring returned has been re-verified by mono_search.
inline std::optional<TwoColoring> counterexample_search(const HostPtr& host, const StructureQuery& target,
                                                        std::uint64_t budget,
                                                        const LocalSearchOptions& opts = {}) {
  detail::check_query(target);
  if (budget == 0 || host->edge_count() == 0) return std::nullopt;
  if (!(opts.uphill_probability >= 0.0 && opts.uphill_probability <= 1.0)) {
    throw InvalidArgument("uphill probability must lie in [0, 1]");
  }
  std::mt19937_64 rng(opts.seed);
  std::bernoulli_distribution uphill(opts.uphill_probability);
  const std::size_t m = host->edge_count();
  std::vector<Color> colors(m);
  auto randomize = [&] {
    for (auto& c : colors) c = (rng() & 1U) ? Color::blue : Color::red;
  };

  // Presence of the target dominates; connected matchings and component
  // sizes steer toward colorings that split into small pieces.
  const auto weight = static_cast<std::int64_t>(4 * host->vertex_count() + 4);
  auto score = [&](const TwoColoring& c, bool& absent) {
    std::int64_t s = 0;
    absent = true;
    for (Color color : kColors) {
      const auto g = color_subgraph(c, color);
      if (find_structure(g, target, opts.search)) {
        s += weight * weight;
        absent = false;
      }
      s += weight * connected_matching_number(g).size;
      s += static_cast<std::int64_t>(largest_size(components(g)));
    }
    return s;
  };

  std::uint64_t used = 0;
  while (used < budget) {
    randomize();
    bool absent = false;
    std::int64_t current = score(TwoColoring(host, colors), absent);
    ++used;
    std::uint64_t stale = 0;
    while (true) {
      if (absent) {
        TwoColoring found(host, colors);
        if (!mono_search(found, target, opts.search)) return found;
      }
      if (used >= budget || stale >= opts.restart_after) break;
      const std::size_t e = static_cast<std::size_t>(rng() % m);
      colors[e] = other(colors[e]);
      bool flipped_absent = false;
      const std::int64_t candidate = score(TwoColoring(host, colors), flipped_absent);
      ++used;
      if (candidate <= current || uphill(rng)) {
        stale = candidate < current ? 0 : stale + 1;
        current = candidate;
        absent = flipped_absent;
      } else {
        colors[e] = other(colors[e]);
        ++stale;
      }
    }
  }
  return std::nullopt;
}

}  // namespace mpramsey
