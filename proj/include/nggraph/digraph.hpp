#pragma once

// Union functional digraphs: one arc x -> f(x) per transformation f per
// point x, loops included. Parallel arcs are counted, never collapsed. A
// loop contributes once to the out-degree and once to the in-degree of its
// vertex, so it adds 2 to the total degree.

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "nggraph/transformation.hpp"

namespace ngg {

// A finite multidigraph with loops, stored as an arc-count matrix.
// counts(i, j) = number of parallel arcs i -> j.
class Multidigraph {
 public:
  explicit Multidigraph(int n)
      : counts_(static_cast<std::size_t>(n),
                std::vector<int>(static_cast<std::size_t>(n), 0)) {
    if (n < 1) throw DomainError("digraph needs at least one vertex");
  }

  int order() const { return static_cast<int>(counts_.size()); }
  int count(int i, int j) const {
    return counts_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  void add_arc(int i, int j, int multiplicity = 1) {
    counts_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] += multiplicity;
  }
  const std::vector<std::vector<int>>& counts() const { return counts_; }

  long long arc_count() const {
    long long m = 0;
    for (const auto& row : counts_) {
      for (int c : row) m += c;
    }
    return m;
  }

  int out_degree(int v) const {
    int d = 0;
    for (int j = 0; j < order(); ++j) d += count(v, j);
    return d;
  }
  int in_degree(int v) const {
    int d = 0;
    for (int i = 0; i < order(); ++i) d += count(i, v);
    return d;
  }
  // Total degree: out + in, so a loop counts twice.
  int total_degree(int v) const { return out_degree(v) + in_degree(v); }

  friend bool operator==(const Multidigraph&, const Multidigraph&) = default;

 private:
  std::vector<std::vector<int>> counts_;
};

// The union digraph of a set of transformations. Every row of the arc
// matrix sums to the number of source transformations, and the diagonal
// entry (v, v) counts the elements fixing v.
class UnionDigraph {
 public:
  UnionDigraph(Multidigraph graph, int source_size)
      : graph_(std::move(graph)), source_size_(source_size) {
    for (int v = 0; v < graph_.order(); ++v) {
      if (graph_.out_degree(v) != source_size_) {
        throw InvariantViolation("union digraph row sum != source size");
      }
    }
  }

  const Multidigraph& graph() const { return graph_; }
  int vertex_count() const { return graph_.order(); }
  int source_size() const { return source_size_; }
  long long arc_count() const {
    return static_cast<long long>(vertex_count()) * source_size_;
  }

 private:
  Multidigraph graph_;
  int source_size_;
};

// Duplicate elements are collapsed; the input is a set.
inline UnionDigraph build_union_digraph(std::vector<Transformation> elements) {
  if (elements.empty()) throw DomainError("cannot build a digraph from an empty set");
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  const int n = elements.front().arity();
  for (const Transformation& f : elements) {
    if (f.arity() != n) throw DomainError("digraph elements must share one arity");
  }
  Multidigraph g(n);
  for (const Transformation& f : elements) {
    for (int x = 0; x < n; ++x) g.add_arc(x, f(x));
  }
  return UnionDigraph(std::move(g), static_cast<int>(elements.size()));
}

inline const std::vector<std::vector<int>>& adjacency_matrix(const UnionDigraph& d) {
  return d.graph().counts();
}

inline std::pair<int, long long> size_pair(const UnionDigraph& d) {
  return {d.vertex_count(), d.arc_count()};
}

struct DegreeProfile {
  std::vector<int> out_degree;  // row sums; equals source size everywhere
  std::vector<int> in_degree;   // column sums
  std::vector<int> total;       // out + in
  int delta_min = 0;
  int delta_max = 0;
  // Total degree of every loop vertex. For a group digraph the loop
  // vertices are exactly the group's fixed-point set.
  std::map<int, int> fix_degrees;

  // The single fixed-point degree, when all of them agree.
  std::optional<int> uniform_fix_degree() const {
    if (fix_degrees.empty()) return std::nullopt;
    int value = fix_degrees.begin()->second;
    for (const auto& [v, d] : fix_degrees) {
      if (d != value) return std::nullopt;
    }
    return value;
  }

  long long total_sum() const {
    long long s = 0;
    for (int d : total) s += d;
    return s;
  }
};

inline DegreeProfile degree_profile(const UnionDigraph& d) {
  const Multidigraph& g = d.graph();
  DegreeProfile profile;
  const int n = g.order();
  for (int v = 0; v < n; ++v) {
    profile.out_degree.push_back(g.out_degree(v));
    profile.in_degree.push_back(g.in_degree(v));
    profile.total.push_back(profile.out_degree.back() + profile.in_degree.back());
  }
  profile.delta_min = *std::min_element(profile.total.begin(), profile.total.end());
  profile.delta_max = *std::max_element(profile.total.begin(), profile.total.end());
  for (int v = 0; v < n; ++v) {
    if (g.count(v, v) > 0) profile.fix_degrees.emplace(v, profile.total[static_cast<std::size_t>(v)]);
  }
  return profile;
}

}  // namespace ngg
