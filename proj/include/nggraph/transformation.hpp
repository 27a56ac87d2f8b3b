#pragma once

// Value types and pure operations for self-maps of a finite set {0..n-1}:
// composition, idempotence, rank, kernel, image, fixed points, text
// parsing/formatting, and exhaustive iteration over all n^n maps.
//
// Composition convention: compose(f, g)(x) = f(g(x)), i.e. g is applied
// first. Points are 0-based internally; letter ("(a,b,a)") and 1-based
// numeric ("(1,2,1)") tuples are presentation only.

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <iterator>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ngg {

inline constexpr int kDefaultArityCap = 8;
inline constexpr std::size_t kDefaultClosureLimit = 10000;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid argument for an operation (arity mismatch, bad point, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Request exceeds a configured cap (arity cap, closure size limit).
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

// Two independent computations of the same fact disagreed.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// A subset of {0..arity-1}, stored as a bit mask. Arities up to 64 are
// supported, far beyond anything the exhaustive sweeps can reach.
class PointSet {
 public:
  explicit PointSet(int arity, std::uint64_t bits = 0) : arity_(arity), bits_(bits) {
    if (arity < 1 || arity > 64) {
      throw DomainError("point set arity must be in [1, 64]");
    }
    if (arity < 64 && (bits >> arity) != 0) {
      throw DomainError("point set member out of range");
    }
  }

  static PointSet full(int arity) {
    return PointSet(arity, arity >= 64 ? ~std::uint64_t{0}
                                       : (std::uint64_t{1} << arity) - 1);
  }

  int arity() const { return arity_; }
  std::uint64_t bits() const { return bits_; }
  bool contains(int x) const { return x >= 0 && x < arity_ && (bits_ >> x) & 1; }
  bool empty() const { return bits_ == 0; }
  int size() const { return std::popcount(bits_); }

  void insert(int x) {
    if (x < 0 || x >= arity_) throw DomainError("point out of range");
    bits_ |= std::uint64_t{1} << x;
  }

  PointSet complement() const {
    return PointSet(arity_, full(arity_).bits_ & ~bits_);
  }
  PointSet united(const PointSet& o) const { return PointSet(arity_, bits_ | o.bits_); }
  PointSet intersected(const PointSet& o) const { return PointSet(arity_, bits_ & o.bits_); }
  bool is_subset_of(const PointSet& o) const { return (bits_ & ~o.bits_) == 0; }

  std::vector<int> members() const {
    std::vector<int> out;
    for (int x = 0; x < arity_; ++x) {
      if (contains(x)) out.push_back(x);
    }
    return out;
  }

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  int arity_;
  std::uint64_t bits_;
};

// Partition of {0..arity-1} into the preimage classes of a map. Blocks are
// kept sorted by their minimum element, so equal partitions compare equal.
class KernelPartition {
 public:
  KernelPartition(int arity, std::vector<std::uint64_t> blocks)
      : arity_(arity), blocks_(std::move(blocks)) {
    std::sort(blocks_.begin(), blocks_.end(),
              [](std::uint64_t a, std::uint64_t b) {
                return std::countr_zero(a) < std::countr_zero(b);
              });
  }

  int arity() const { return arity_; }
  std::size_t block_count() const { return blocks_.size(); }
  const std::vector<std::uint64_t>& blocks() const { return blocks_; }

  std::vector<std::vector<int>> block_members() const {
    std::vector<std::vector<int>> out;
    for (std::uint64_t b : blocks_) {
      std::vector<int> members;
      for (int x = 0; x < arity_; ++x) {
        if ((b >> x) & 1) members.push_back(x);
      }
      out.push_back(std::move(members));
    }
    return out;
  }

  friend bool operator==(const KernelPartition&, const KernelPartition&) = default;

 private:
  int arity_;
  std::vector<std::uint64_t> blocks_;  // sorted by min element
};

// A self-map of {0..n-1} given by its image table: images()[x] = f(x).
class Transformation {
 public:
  explicit Transformation(std::vector<std::uint8_t> images) : images_(std::move(images)) {
    if (images_.empty()) throw DomainError("transformation arity must be positive");
    for (std::uint8_t v : images_) {
      if (v >= images_.size()) throw DomainError("image table entry out of range");
    }
  }

  int arity() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[static_cast<std::size_t>(x)]; }
  const std::vector<std::uint8_t>& images() const { return images_; }

  auto operator<=>(const Transformation&) const = default;

 private:
  std::vector<std::uint8_t> images_;
};

inline Transformation identity(int n) {
  if (n < 1) throw DomainError("arity must be positive");
  std::vector<std::uint8_t> images(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) images[static_cast<std::size_t>(x)] = static_cast<std::uint8_t>(x);
  return Transformation(std::move(images));
}

// compose(f, g)(x) = f(g(x)); g is applied first.
inline Transformation compose(const Transformation& f, const Transformation& g) {
  if (f.arity() != g.arity()) throw DomainError("compose: arity mismatch");
  std::vector<std::uint8_t> images(static_cast<std::size_t>(f.arity()));
  for (int x = 0; x < f.arity(); ++x) {
    images[static_cast<std::size_t>(x)] = static_cast<std::uint8_t>(f(g(x)));
  }
  return Transformation(std::move(images));
}

inline bool is_idempotent(const Transformation& f) { return compose(f, f) == f; }

inline PointSet fixed_points(const Transformation& f) {
  PointSet out(f.arity());
  for (int x = 0; x < f.arity(); ++x) {
    if (f(x) == x) out.insert(x);
  }
  return out;
}

inline PointSet moved_points(const Transformation& f) {
  return fixed_points(f).complement();
}

inline PointSet image(const Transformation& f) {
  PointSet out(f.arity());
  for (int x = 0; x < f.arity(); ++x) out.insert(f(x));
  return out;
}

inline int rank(const Transformation& f) { return image(f).size(); }

inline bool is_permutation(const Transformation& f) { return rank(f) == f.arity(); }

inline KernelPartition kernel(const Transformation& f) {
  std::vector<std::uint64_t> blocks;
  for (int v : image(f).members()) {
    std::uint64_t block = 0;
    for (int x = 0; x < f.arity(); ++x) {
      if (f(x) == v) block |= std::uint64_t{1} << x;
    }
    blocks.push_back(block);
  }
  return KernelPartition(f.arity(), std::move(blocks));
}

// The n^n transformations on n points in lexicographic image-table order:
// (0,0,..,0), (0,0,..,1), ... This order is the canonical order everywhere.
class AllTransformations {
 public:
  explicit AllTransformations(int n, int arity_cap = kDefaultArityCap) : n_(n) {
    if (n < 1) throw DomainError("arity must be positive");
    if (n > arity_cap) {
      throw ResourceLimitError("arity " + std::to_string(n) + " exceeds cap " +
                               std::to_string(arity_cap));
    }
  }

  std::uint64_t size() const {
    std::uint64_t total = 1;
    for (int i = 0; i < n_; ++i) total *= static_cast<std::uint64_t>(n_);
    return total;
  }

  class iterator {
   public:
    using value_type = Transformation;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::input_iterator_tag;

    iterator() : done_(true) {}
    explicit iterator(int n)
        : images_(static_cast<std::size_t>(n), 0), done_(false) {}

    Transformation operator*() const { return Transformation(images_); }

    iterator& operator++() {
      const int n = static_cast<int>(images_.size());
      int pos = n - 1;
      while (pos >= 0) {
        if (++images_[static_cast<std::size_t>(pos)] < n) break;
        images_[static_cast<std::size_t>(pos)] = 0;
        --pos;
      }
      if (pos < 0) done_ = true;
      return *this;
    }
    iterator operator++(int) {
      iterator copy = *this;
      ++*this;
      return copy;
    }

    friend bool operator==(const iterator& a, const iterator& b) {
      if (a.done_ || b.done_) return a.done_ == b.done_;
      return a.images_ == b.images_;
    }

   private:
    std::vector<std::uint8_t> images_;
    bool done_;
  };

  iterator begin() const { return iterator(n_); }
  iterator end() const { return iterator(); }

 private:
  int n_;
};

inline AllTransformations enumerate_all(int n, int arity_cap = kDefaultArityCap) {
  return AllTransformations(n, arity_cap);
}

enum class TupleStyle { Letters, OneBased };

// Formats as "(a,b,a)" or "(1,2,1)". Letters require arity <= 26.
inline std::string format_transformation(const Transformation& f, TupleStyle style) {
  if (style == TupleStyle::Letters && f.arity() > 26) {
    throw DomainError("letter style supports arity <= 26");
  }
  std::string out = "(";
  for (int x = 0; x < f.arity(); ++x) {
    if (x > 0) out += ',';
    if (style == TupleStyle::Letters) {
      out += static_cast<char>('a' + f(x));
    } else {
      out += std::to_string(f(x) + 1);
    }
  }
  out += ')';
  return out;
}

// Parses a parenthesized tuple in either style; styles must not be mixed.
// Entries are letters a,b,... (a=0) or 1-based integers. If expected_arity
// is nonzero, a tuple of any other length is rejected.
inline Transformation parse_transformation(std::string_view text, int expected_arity = 0) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };

  skip_ws();
  if (pos >= text.size() || text[pos] != '(') {
    throw ParseError("expected '('", pos);
  }
  ++pos;

  enum class Style { Unknown, Letters, Numbers };
  Style style = Style::Unknown;
  std::vector<long> raw;          // letter index or 1-based number
  std::vector<std::size_t> at;    // token start positions

  while (true) {
    skip_ws();
    if (pos >= text.size()) throw ParseError("unterminated tuple", pos);
    const std::size_t token_start = pos;
    if (text[pos] >= 'a' && text[pos] <= 'z') {
      if (style == Style::Numbers) {
        throw ParseError("mixed letter and numeric entries", token_start);
      }
      style = Style::Letters;
      raw.push_back(text[pos] - 'a');
      ++pos;
    } else if (text[pos] >= '0' && text[pos] <= '9') {
      if (style == Style::Letters) {
        throw ParseError("mixed letter and numeric entries", token_start);
      }
      style = Style::Numbers;
      long value = 0;
      while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
        value = value * 10 + (text[pos] - '0');
        if (value > 1000000) throw ParseError("entry too large", token_start);
        ++pos;
      }
      raw.push_back(value);
    } else {
      throw ParseError("expected a letter or a 1-based integer", pos);
    }
    at.push_back(token_start);

    skip_ws();
    if (pos >= text.size()) throw ParseError("unterminated tuple", pos);
    if (text[pos] == ',') {
      ++pos;
      continue;
    }
    if (text[pos] == ')') {
      ++pos;
      break;
    }
    throw ParseError("expected ',' or ')'", pos);
  }
  skip_ws();
  if (pos != text.size()) throw ParseError("trailing characters after tuple", pos);

  const int n = static_cast<int>(raw.size());
  if (expected_arity != 0 && n != expected_arity) {
    throw ParseError("expected " + std::to_string(expected_arity) + " entries, got " +
                         std::to_string(n),
                     0);
  }
  std::vector<std::uint8_t> images(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    long value = raw[static_cast<std::size_t>(i)];
    if (style == Style::Numbers) value -= 1;  // to 0-based
    if (value < 0 || value >= n) {
      throw ParseError("entry out of range for arity " + std::to_string(n),
                       at[static_cast<std::size_t>(i)]);
    }
    images[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(value);
  }
  return Transformation(std::move(images));
}

// "{a,c}" / "{1,3}" rendering of point sets.
inline std::string format_points(const PointSet& s, TupleStyle style) {
  if (style == TupleStyle::Letters && s.arity() > 26) {
    throw DomainError("letter style supports arity <= 26");
  }
  std::string out = "{";
  bool first = true;
  for (int x : s.members()) {
    if (!first) out += ',';
    first = false;
    if (style == TupleStyle::Letters) {
      out += static_cast<char>('a' + x);
    } else {
      out += std::to_string(x + 1);
    }
  }
  out += '}';
  return out;
}

}  // namespace ngg
