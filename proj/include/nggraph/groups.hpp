#pragma once

// Detection and enumeration of NG-groups: composition-closed groups of
// non-permutation transformations. Every such group sits inside the
// H-class of its identity idempotent e — the transformations sharing e's
// kernel and image, which permute the image and form a group of order
// rank(e)!. Enumeration therefore walks idempotent -> H-class -> subgroup
// lattice; a naive closure oracle lives in the tests as a cross-check.

#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "nggraph/transformation.hpp"

namespace ngg {

// Smallest composition-closed superset of the seed, by iterated products.
inline std::vector<Transformation> closure(const std::vector<Transformation>& seed,
                                           std::size_t limit = kDefaultClosureLimit) {
  if (seed.empty()) throw DomainError("closure of an empty set");
  const int n = seed.front().arity();
  for (const Transformation& f : seed) {
    if (f.arity() != n) throw DomainError("closure seeds must share one arity");
  }
  std::set<Transformation> closed(seed.begin(), seed.end());
  std::vector<Transformation> frontier(closed.begin(), closed.end());
  while (!frontier.empty()) {
    std::vector<Transformation> next;
    for (const Transformation& f : frontier) {
      for (const Transformation& g : closed) {
        for (Transformation h : {compose(f, g), compose(g, f)}) {
          if (closed.insert(h).second) {
            next.push_back(std::move(h));
            if (closed.size() > limit) {
              throw ResourceLimitError("closure exceeds limit of " + std::to_string(limit));
            }
          }
        }
      }
    }
    frontier = std::move(next);
  }
  return {closed.begin(), closed.end()};
}

enum class SetTag { Group, UnionOfGroups, OtherSemigroup, NotClosed };

inline std::string to_string(SetTag t) {
  switch (t) {
    case SetTag::Group: return "group";
    case SetTag::UnionOfGroups: return "union-of-groups";
    case SetTag::OtherSemigroup: return "other-semigroup";
    case SetTag::NotClosed: return "not-closed";
  }
  return "?";
}

struct ClosedSetClass {
  SetTag tag;
  int idempotent_count;
  // A pair whose product escapes the set, when not closed.
  std::optional<std::pair<Transformation, Transformation>> witness;
};

// Classifies a finite transformation set under composition. A closed
// non-group where every element still lies inside some group (equivalently
// f^(k+1) = f for some k >= 1) is a union of groups — the structure of
// closed sets with several idempotents, one group per idempotent.
inline ClosedSetClass classify_set(std::vector<Transformation> elements) {
  if (elements.empty()) throw DomainError("cannot classify an empty set");
  const int n = elements.front().arity();
  for (const Transformation& f : elements) {
    if (f.arity() != n) throw DomainError("set elements must share one arity");
  }
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());

  int idempotent_count = 0;
  for (const Transformation& f : elements) {
    if (is_idempotent(f)) ++idempotent_count;
  }

  const std::set<Transformation> member_set(elements.begin(), elements.end());
  for (const Transformation& f : elements) {
    for (const Transformation& g : elements) {
      if (!member_set.count(compose(f, g))) {
        return {SetTag::NotClosed, idempotent_count, std::pair{f, g}};
      }
    }
  }

  // Two-sided identity and inverses.
  const Transformation* identity_elem = nullptr;
  for (const Transformation& e : elements) {
    bool ok = true;
    for (const Transformation& f : elements) {
      if (compose(e, f) != f || compose(f, e) != f) {
        ok = false;
        break;
      }
    }
    if (ok) {
      identity_elem = &e;
      break;
    }
  }
  if (identity_elem != nullptr) {
    bool all_invertible = true;
    for (const Transformation& f : elements) {
      bool has_inverse = false;
      for (const Transformation& g : elements) {
        if (compose(f, g) == *identity_elem && compose(g, f) == *identity_elem) {
          has_inverse = true;
          break;
        }
      }
      if (!has_inverse) {
        all_invertible = false;
        break;
      }
    }
    if (all_invertible) return {SetTag::Group, idempotent_count, std::nullopt};
  }

  // Group-bound test: the powers of f return to f.
  bool completely_regular = true;
  for (const Transformation& f : elements) {
    Transformation power = compose(f, f);
    bool returns = power == f;
    for (std::size_t i = 0; i < elements.size() && !returns; ++i) {
      power = compose(power, f);
      returns = power == f;
    }
    if (!returns) {
      completely_regular = false;
      break;
    }
  }
  return {completely_regular ? SetTag::UnionOfGroups : SetTag::OtherSemigroup,
          idempotent_count, std::nullopt};
}

// A verified group of non-permutation transformations. The identity is an
// idempotent other than the identity map; all elements share its kernel
// and image and permute the image.
class NGGroup {
 public:
  static NGGroup from_elements(std::vector<Transformation> elements) {
    if (elements.empty()) throw DomainError("a group needs at least one element");
    const int n = elements.front().arity();
    for (const Transformation& f : elements) {
      if (f.arity() != n) throw DomainError("group elements must share one arity");
    }
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());

    std::optional<std::size_t> identity_index;
    for (std::size_t i = 0; i < elements.size(); ++i) {
      if (!is_idempotent(elements[i])) continue;
      if (identity_index) throw DomainError("not a group: several idempotents");
      identity_index = i;
    }
    if (!identity_index) throw DomainError("not a group: no idempotent");
    const Transformation& e = elements[*identity_index];
    if (e == identity(n)) {
      throw DomainError("not an NG-group: contained in the symmetric group");
    }

    const std::set<Transformation> member_set(elements.begin(), elements.end());
    const PointSet shared_image = image(e);
    const KernelPartition shared_kernel = kernel(e);
    for (const Transformation& f : elements) {
      if (compose(e, f) != f || compose(f, e) != f) {
        throw DomainError("not a group: identity law fails");
      }
      if (image(f) != shared_image || kernel(f) != shared_kernel) {
        throw DomainError("not a group: kernel or image differs from the identity's");
      }
      bool has_inverse = false;
      for (const Transformation& g : elements) {
        if (compose(f, g) == e && compose(g, f) == e) {
          has_inverse = true;
          break;
        }
      }
      if (!has_inverse) throw DomainError("not a group: missing inverse");
      for (const Transformation& g : elements) {
        if (!member_set.count(compose(f, g))) throw DomainError("not a group: not closed");
      }
    }
    return NGGroup(std::move(elements), *identity_index, shared_image.size());
  }

  int arity() const { return elements_.front().arity(); }
  int order() const { return static_cast<int>(elements_.size()); }
  int rank() const { return rank_; }
  const std::vector<Transformation>& elements() const { return elements_; }
  const Transformation& identity_element() const { return elements_[identity_index_]; }

  friend bool operator==(const NGGroup& a, const NGGroup& b) {
    return a.elements_ == b.elements_;
  }
  friend bool operator<(const NGGroup& a, const NGGroup& b) {
    return a.elements_ < b.elements_;
  }

 private:
  NGGroup(std::vector<Transformation> elements, std::size_t identity_index, int rank)
      : elements_(std::move(elements)), identity_index_(identity_index), rank_(rank) {}

  std::vector<Transformation> elements_;  // sorted; the canonical order
  std::size_t identity_index_;
  int rank_;
};

// All idempotents on n points, optionally restricted to one rank.
inline std::vector<Transformation> idempotents(int n,
                                               std::optional<int> rank_filter = std::nullopt,
                                               int arity_cap = kDefaultArityCap) {
  std::vector<Transformation> out;
  for (const Transformation& f : enumerate_all(n, arity_cap)) {
    if (!is_idempotent(f)) continue;
    if (rank_filter && rank(f) != *rank_filter) continue;
    out.push_back(f);
  }
  return out;
}

// The maximal group with identity e: all transformations sharing e's
// kernel and image. They are exactly p ∘ e for the permutations p of
// image(e), so the order is rank(e)!.
inline NGGroup h_class_group(const Transformation& e) {
  if (!is_idempotent(e)) throw DomainError("h_class_group needs an idempotent");
  if (e == identity(e.arity())) {
    throw DomainError("h_class_group of the identity map is the symmetric group");
  }
  const std::vector<int> image_points = image(e).members();
  std::vector<int> position(static_cast<std::size_t>(e.arity()), -1);
  for (std::size_t k = 0; k < image_points.size(); ++k) {
    position[static_cast<std::size_t>(image_points[k])] = static_cast<int>(k);
  }

  std::vector<Transformation> elements;
  std::vector<int> permuted = image_points;
  do {
    std::vector<std::uint8_t> images(static_cast<std::size_t>(e.arity()));
    for (int x = 0; x < e.arity(); ++x) {
      images[static_cast<std::size_t>(x)] =
          static_cast<std::uint8_t>(permuted[static_cast<std::size_t>(position[static_cast<std::size_t>(e(x))])]);
    }
    elements.emplace_back(std::move(images));
  } while (std::next_permutation(permuted.begin(), permuted.end()));
  return NGGroup::from_elements(std::move(elements));
}

struct EnumerationOptions {
  std::optional<int> order_filter;
  bool include_trivial = false;
  // Subgroups are found by closing all generator subsets up to this size.
  // 2 suffices below rank 6 (every subgroup there is 2-generated).
  int generator_bound = 2;
  std::size_t closure_limit = kDefaultClosureLimit;
  int arity_cap = kDefaultArityCap;
};

namespace detail {

inline void subgroup_closures(const std::vector<Transformation>& h_elements,
                              const EnumerationOptions& options,
                              std::set<std::vector<Transformation>>& out) {
  const std::size_t h = h_elements.size();
  const std::size_t bound =
      std::min<std::size_t>(static_cast<std::size_t>(std::max(options.generator_bound, 1)), h);
  std::vector<std::size_t> combo;
  auto close_combo = [&] {
    std::vector<Transformation> seed;
    seed.reserve(combo.size());
    for (std::size_t index : combo) seed.push_back(h_elements[index]);
    out.insert(closure(seed, options.closure_limit));
  };
  // All index combinations of sizes 1..bound.
  for (std::size_t size = 1; size <= bound; ++size) {
    combo.assign(size, 0);
    for (std::size_t i = 0; i < size; ++i) combo[i] = i;
    while (true) {
      close_combo();
      std::size_t i = size;
      while (i > 0 && combo[i - 1] == h - size + i - 1) --i;
      if (i == 0) break;
      ++combo[i - 1];
      for (std::size_t j = i; j < size; ++j) combo[j] = combo[j - 1] + 1;
    }
  }
}

}  // namespace detail

// Every group of non-permutation transformations on n points, as subgroups
// of the H-classes over non-identity idempotents. Canonical order; trivial
// one-element groups excluded unless requested.
inline std::vector<NGGroup> enumerate_ng_groups(int n,
                                                const EnumerationOptions& options = {}) {
  const Transformation id = identity(n);
  std::set<std::vector<Transformation>> element_lists;
  for (const Transformation& e : idempotents(n, std::nullopt, options.arity_cap)) {
    if (e == id) continue;
    if (rank(e) == 1) {
      element_lists.insert({e});  // the H-class itself is trivial
      continue;
    }
    detail::subgroup_closures(h_class_group(e).elements(), options, element_lists);
  }

  std::vector<NGGroup> out;
  for (const std::vector<Transformation>& elements : element_lists) {
    if (!options.include_trivial && elements.size() == 1) continue;
    if (options.order_filter && elements.size() != static_cast<std::size_t>(*options.order_filter)) {
      continue;
    }
    out.push_back(NGGroup::from_elements(elements));
  }
  return out;
}

struct GroupCensus {
  // Parallel to the group's canonical element order.
  std::vector<int> fix_counts;
  PointSet ng_fix;
  long long moved_pair_count;

  GroupCensus(std::vector<int> counts, PointSet fix, long long moved)
      : fix_counts(std::move(counts)), ng_fix(fix), moved_pair_count(moved) {}
};

inline GroupCensus group_census(const NGGroup& g) {
  std::vector<int> counts;
  long long moved = 0;
  for (const Transformation& f : g.elements()) {
    counts.push_back(fixed_points(f).size());
    moved += moved_points(f).size();
  }
  return GroupCensus(std::move(counts), image(g.identity_element()), moved);
}

inline PointSet orbit(const NGGroup& g, int point) {
  if (point < 0 || point >= g.arity()) throw DomainError("orbit: point out of range");
  PointSet out(g.arity());
  for (const Transformation& f : g.elements()) out.insert(f(point));
  return out;
}

inline std::vector<Transformation> stabilizer(const NGGroup& g, int point) {
  if (point < 0 || point >= g.arity()) throw DomainError("stabilizer: point out of range");
  std::vector<Transformation> out;
  for (const Transformation& f : g.elements()) {
    if (f(point) == point) out.push_back(f);
  }
  return out;
}

}  // namespace ngg
