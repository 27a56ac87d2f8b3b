#pragma once

// General digraph predicates: connectivity in four senses, roots, sources
// and sinks, acyclicity, circuits, bipartiteness of the underlying
// multigraph, Eulerian classification, and reachability splits.
//
// A loop is a directed circuit of length 1, so any digraph with a loop is
// cyclic. The bipartite test carries an explicit loop policy because the
// underlying-graph reading of a loop (an odd closed walk) can be either
// enforced or set aside.

#include <array>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "nggraph/digraph.hpp"
#include "nggraph/transformation.hpp"

namespace ngg {

// Row v = set of vertices reachable from v by a directed path (reflexive).
inline std::vector<std::uint64_t> transitive_closure(const Multidigraph& g) {
  const int n = g.order();
  std::vector<std::uint64_t> reach(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v) {
    std::uint64_t seen = std::uint64_t{1} << v;
    std::vector<int> stack{v};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w = 0; w < n; ++w) {
        if (g.count(u, w) > 0 && !((seen >> w) & 1)) {
          seen |= std::uint64_t{1} << w;
          stack.push_back(w);
        }
      }
    }
    reach[static_cast<std::size_t>(v)] = seen;
  }
  return reach;
}

// Vertices outside S with an arc from S into them.
inline PointSet out_neighborhood(const Multidigraph& g, const PointSet& s) {
  PointSet out(g.order());
  for (int w = 0; w < g.order(); ++w) {
    if (s.contains(w)) continue;
    for (int v : s.members()) {
      if (g.count(v, w) > 0) {
        out.insert(w);
        break;
      }
    }
  }
  return out;
}

// Vertices outside S with an arc into S.
inline PointSet in_neighborhood(const Multidigraph& g, const PointSet& s) {
  PointSet out(g.order());
  for (int w = 0; w < g.order(); ++w) {
    if (s.contains(w)) continue;
    for (int v : s.members()) {
      if (g.count(w, v) > 0) {
        out.insert(w);
        break;
      }
    }
  }
  return out;
}

struct StrongConnectivity {
  bool strongly_connected;
  // A nonempty proper vertex set with empty in-neighborhood, when one exists.
  std::optional<PointSet> witness;
};

// Decided two independent ways: mutual reachability over the transitive
// closure, and search for a witness set with empty in-neighborhood. The
// two must agree; disagreement is a bug and throws.
inline StrongConnectivity strong_connectivity(const Multidigraph& g) {
  const int n = g.order();
  const auto reach = transitive_closure(g);
  const std::uint64_t full = PointSet::full(n).bits();

  bool by_reachability = true;
  for (int v = 0; v < n && by_reachability; ++v) {
    by_reachability = reach[static_cast<std::size_t>(v)] == full;
  }

  std::optional<PointSet> witness;
  if (n <= 14) {
    // Exhaustive over nonempty proper subsets, in increasing mask order.
    for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << n); ++mask) {
      PointSet s(n, mask);
      if (in_neighborhood(g, s).empty()) {
        witness = s;
        break;
      }
    }
  } else {
    // Ancestor sets are absorbing: every arc into one starts inside it.
    for (int v = 0; v < n && !witness; ++v) {
      std::uint64_t ancestors = 0;
      for (int u = 0; u < n; ++u) {
        if ((reach[static_cast<std::size_t>(u)] >> v) & 1) ancestors |= std::uint64_t{1} << u;
      }
      if (ancestors != full) witness = PointSet(n, ancestors);
    }
  }

  if (by_reachability == witness.has_value()) {
    throw InvariantViolation("strong connectivity methods disagree");
  }
  return {by_reachability, witness};
}

// Four-condition pairwise definition: every pair of vertices has a common
// ancestor (a vertex reaching both; u itself or v itself qualifies).
inline bool is_quasi_strongly_connected(const Multidigraph& g) {
  const int n = g.order();
  const auto reach = transitive_closure(g);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      bool common = false;
      for (int w = 0; w < n && !common; ++w) {
        const std::uint64_t r = reach[static_cast<std::size_t>(w)];
        common = ((r >> u) & 1) && ((r >> v) & 1);
      }
      if (!common) return false;
    }
  }
  return true;
}

// Vertices with a directed path to every other vertex.
inline PointSet roots(const Multidigraph& g) {
  const auto reach = transitive_closure(g);
  const std::uint64_t full = PointSet::full(g.order()).bits();
  PointSet out(g.order());
  for (int v = 0; v < g.order(); ++v) {
    if (reach[static_cast<std::size_t>(v)] == full) out.insert(v);
  }
  return out;
}

inline bool is_weakly_connected(const Multidigraph& g) {
  const int n = g.order();
  std::vector<int> component(static_cast<std::size_t>(n), -1);
  std::vector<int> stack{0};
  component[0] = 0;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int w = 0; w < n; ++w) {
      if (component[static_cast<std::size_t>(w)] < 0 &&
          (g.count(u, w) > 0 || g.count(w, u) > 0)) {
        component[static_cast<std::size_t>(w)] = 0;
        stack.push_back(w);
      }
    }
  }
  for (int v = 0; v < n; ++v) {
    if (component[static_cast<std::size_t>(v)] < 0) return false;
  }
  return true;
}

inline PointSet sources(const Multidigraph& g) {
  PointSet out(g.order());
  for (int v = 0; v < g.order(); ++v) {
    if (g.in_degree(v) == 0) out.insert(v);
  }
  return out;
}

inline PointSet sinks(const Multidigraph& g) {
  PointSet out(g.order());
  for (int v = 0; v < g.order(); ++v) {
    if (g.out_degree(v) == 0) out.insert(v);
  }
  return out;
}

// No directed circuit; a loop is a circuit of length 1.
inline bool is_acyclic(const Multidigraph& g) {
  const int n = g.order();
  for (int v = 0; v < n; ++v) {
    if (g.count(v, v) > 0) return false;
  }
  // Kahn's algorithm on the loop-free arcs.
  std::vector<int> indeg(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j && g.count(i, j) > 0) ++indeg[static_cast<std::size_t>(j)];
    }
  }
  std::vector<int> queue;
  for (int v = 0; v < n; ++v) {
    if (indeg[static_cast<std::size_t>(v)] == 0) queue.push_back(v);
  }
  int removed = 0;
  while (!queue.empty()) {
    int u = queue.back();
    queue.pop_back();
    ++removed;
    for (int w = 0; w < n; ++w) {
      if (u != w && g.count(u, w) > 0 && --indeg[static_cast<std::size_t>(w)] == 0) {
        queue.push_back(w);
      }
    }
  }
  return removed == n;
}

// Some u != v inside `within` with arcs both ways, in lexicographic order.
inline std::optional<std::pair<int, int>> two_way_pair(const Multidigraph& g,
                                                       const PointSet& within) {
  const auto members = within.members();
  for (std::size_t a = 0; a < members.size(); ++a) {
    for (std::size_t b = a + 1; b < members.size(); ++b) {
      const int u = members[a];
      const int v = members[b];
      if (g.count(u, v) > 0 && g.count(v, u) > 0) return std::pair{u, v};
    }
  }
  return std::nullopt;
}

enum class LoopPolicy { CountAsOddCycle, Ignore };

struct BipartiteCheck {
  bool bipartite;
  // When not bipartite: an odd closed walk v0, v1, ..., vk = v0 in the
  // underlying multigraph ([v, v] for a loop).
  std::vector<int> odd_closed_walk;
};

inline BipartiteCheck bipartite_check(const Multidigraph& g, LoopPolicy policy) {
  const int n = g.order();
  if (policy == LoopPolicy::CountAsOddCycle) {
    for (int v = 0; v < n; ++v) {
      if (g.count(v, v) > 0) return {false, {v, v}};
    }
  }
  auto adjacent = [&](int u, int v) { return u != v && (g.count(u, v) > 0 || g.count(v, u) > 0); };

  std::vector<int> color(static_cast<std::size_t>(n), -1);
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  std::vector<int> depth(static_cast<std::size_t>(n), 0);
  for (int start = 0; start < n; ++start) {
    if (color[static_cast<std::size_t>(start)] >= 0) continue;
    color[static_cast<std::size_t>(start)] = 0;
    std::vector<int> queue{start};
    std::size_t head = 0;
    while (head < queue.size()) {
      int u = queue[head++];
      for (int v = 0; v < n; ++v) {
        if (!adjacent(u, v)) continue;
        if (color[static_cast<std::size_t>(v)] < 0) {
          color[static_cast<std::size_t>(v)] = 1 - color[static_cast<std::size_t>(u)];
          parent[static_cast<std::size_t>(v)] = u;
          depth[static_cast<std::size_t>(v)] = depth[static_cast<std::size_t>(u)] + 1;
          queue.push_back(v);
        } else if (color[static_cast<std::size_t>(v)] == color[static_cast<std::size_t>(u)]) {
          // Odd closed walk through the BFS tree paths and the edge (u, v).
          std::vector<int> up{u};
          std::vector<int> down{v};
          int a = u;
          int b = v;
          while (depth[static_cast<std::size_t>(a)] > depth[static_cast<std::size_t>(b)]) {
            a = parent[static_cast<std::size_t>(a)];
            up.push_back(a);
          }
          while (depth[static_cast<std::size_t>(b)] > depth[static_cast<std::size_t>(a)]) {
            b = parent[static_cast<std::size_t>(b)];
            down.push_back(b);
          }
          while (a != b) {
            a = parent[static_cast<std::size_t>(a)];
            up.push_back(a);
            b = parent[static_cast<std::size_t>(b)];
            down.push_back(b);
          }
          std::vector<int> walk(up);
          down.pop_back();  // shared ancestor already in `up`
          for (auto it = down.rbegin(); it != down.rend(); ++it) walk.push_back(*it);
          walk.push_back(u);
          return {false, walk};
        }
      }
    }
  }
  return {true, {}};
}

enum class EulerianClass { Eulerian, SemiEulerian, Neither, Disconnected };

// Degree-parity classification of the underlying multigraph; a loop adds 2
// to its vertex degree, so only non-loop arcs can produce odd vertices.
inline EulerianClass eulerian_class(const Multidigraph& g) {
  if (!is_weakly_connected(g)) return EulerianClass::Disconnected;
  int odd = 0;
  for (int v = 0; v < g.order(); ++v) {
    if (g.total_degree(v) % 2 != 0) ++odd;
  }
  if (odd == 0) return EulerianClass::Eulerian;
  if (odd == 2) return EulerianClass::SemiEulerian;
  return EulerianClass::Neither;
}

inline std::string to_string(EulerianClass c) {
  switch (c) {
    case EulerianClass::Eulerian: return "eulerian";
    case EulerianClass::SemiEulerian: return "semi-eulerian";
    case EulerianClass::Neither: return "neither";
    case EulerianClass::Disconnected: return "disconnected";
  }
  return "?";
}

struct ReachabilitySets {
  std::vector<PointSet> reachable;  // row v = vertices reachable from v
  PointSet s_fix;                   // reachable from some fixed point
  PointSet s_move;                  // the complement

  ReachabilitySets(std::vector<PointSet> r, PointSet fix, PointSet move)
      : reachable(std::move(r)), s_fix(fix), s_move(move) {}
};

// The fixed-point vertex set comes from the caller; for a group digraph it
// is the group's fixed-point set.
inline ReachabilitySets reachability(const Multidigraph& g, const PointSet& fixed) {
  const auto reach = transitive_closure(g);
  std::vector<PointSet> rows;
  rows.reserve(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) {
    rows.emplace_back(g.order(), reach[static_cast<std::size_t>(v)]);
  }
  PointSet s_fix(g.order());
  for (int f : fixed.members()) s_fix = s_fix.united(rows[static_cast<std::size_t>(f)]);
  return ReachabilitySets(std::move(rows), s_fix, s_fix.complement());
}

struct ConnectivityVerdict {
  bool weakly_connected;
  bool strongly_connected;
  bool quasi_strongly_connected;
  PointSet roots;
  std::optional<PointSet> witness;  // empty-in-neighborhood set when not strong
};

// Runs every connectivity check and cross-validates the implications
// strong => quasi-strong => weak and roots-nonempty <=> quasi-strong.
inline ConnectivityVerdict analyze_connectivity(const Multidigraph& g) {
  const auto strong = strong_connectivity(g);
  ConnectivityVerdict verdict{
      is_weakly_connected(g), strong.strongly_connected,
      is_quasi_strongly_connected(g), roots(g), strong.witness};
  if (verdict.strongly_connected && !verdict.quasi_strongly_connected) {
    throw InvariantViolation("strong but not quasi-strong connectivity");
  }
  if (verdict.quasi_strongly_connected && !verdict.weakly_connected) {
    throw InvariantViolation("quasi-strong but not weak connectivity");
  }
  if (verdict.roots.empty() == verdict.quasi_strongly_connected) {
    throw InvariantViolation("root existence disagrees with quasi-strong connectivity");
  }
  return verdict;
}

// Seeded random digraphs for property sweeps. Arcs are included
// independently with probability density_permille / 1000; loops allowed.
inline Multidigraph random_digraph(int n, int density_permille, std::mt19937_64& rng) {
  Multidigraph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (static_cast<int>(rng() % 1000) < density_permille) g.add_arc(i, j);
    }
  }
  return g;
}

// Random acyclic digraph: arcs oriented along a random vertex order.
inline Multidigraph random_acyclic_digraph(int n, int density_permille,
                                           std::mt19937_64& rng) {
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  for (int i = n - 1; i > 0; --i) {
    std::swap(order[static_cast<std::size_t>(i)],
              order[static_cast<std::size_t>(rng() % static_cast<std::uint64_t>(i + 1))]);
  }
  Multidigraph g(n);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (static_cast<int>(rng() % 1000) < density_permille) {
        g.add_arc(order[static_cast<std::size_t>(a)], order[static_cast<std::size_t>(b)]);
      }
    }
  }
  return g;
}

}  // namespace ngg
