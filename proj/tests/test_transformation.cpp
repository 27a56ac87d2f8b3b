#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>
#include <vector>

#include "nggraph/transformation.hpp"

using namespace ngg;

namespace {

Transformation t(const char* tuple) { return parse_transformation(tuple); }

}  // namespace

TEST_CASE("compose applies the right-hand map first") {
  CHECK(compose(t("(c,c,a)"), t("(c,c,a)")) == t("(a,a,c)"));
  CHECK(compose(identity(3), t("(a,b,a)")) == t("(a,b,a)"));
  CHECK(compose(t("(a,a,c)"), t("(c,c,a)")) == t("(c,c,a)"));
  CHECK_THROWS_AS(compose(identity(3), identity(4)), DomainError);
}

TEST_CASE("identity maps every point to itself") {
  CHECK(identity(3) == t("(a,b,c)"));
  CHECK(identity(4) == t("(1,2,3,4)"));
  for (const Transformation& f : enumerate_all(3)) {
    CHECK(compose(identity(3), f) == f);
    CHECK(compose(f, identity(3)) == f);
  }
}

TEST_CASE("idempotence") {
  CHECK(is_idempotent(t("(a,a,c)")));
  CHECK_FALSE(is_idempotent(t("(c,c,a)")));
  CHECK(is_idempotent(identity(5)));
}

TEST_CASE("fixed and moved points") {
  CHECK(fixed_points(t("(a,a,c)")).members() == std::vector<int>{0, 2});
  CHECK(fixed_points(t("(c,c,a)")).empty());
  CHECK(fixed_points(identity(4)) == PointSet::full(4));
  CHECK(moved_points(t("(a,a,c)")).members() == std::vector<int>{1});
  CHECK(moved_points(identity(3)).empty());
  CHECK(moved_points(t("(1,1,4,4)")).members() == std::vector<int>{1, 2});
}

TEST_CASE("image, kernel and rank") {
  const Transformation f = t("(1,1,4,4)");
  CHECK(image(f).members() == std::vector<int>{0, 3});
  CHECK(rank(f) == 2);
  CHECK(kernel(f).block_members() ==
        std::vector<std::vector<int>>{{0, 1}, {2, 3}});

  CHECK(image(identity(3)) == PointSet::full(3));
  CHECK(rank(identity(3)) == 3);

  const Transformation g = t("(1,1,3,4)");
  CHECK(image(g).members() == std::vector<int>{0, 2, 3});
  CHECK(kernel(g).block_members() ==
        std::vector<std::vector<int>>{{0, 1}, {2}, {3}});
}

TEST_CASE("permutation test") {
  CHECK_FALSE(is_permutation(t("(1,1,4,4)")));
  CHECK(is_permutation(identity(4)));
  CHECK_FALSE(is_permutation(t("(c,c,a)")));
}

TEST_CASE("enumerate_all yields n^n distinct maps in lexicographic order") {
  for (int n : {1, 2, 3, 4}) {
    std::set<Transformation> seen;
    std::optional<Transformation> previous;
    for (const Transformation& f : enumerate_all(n)) {
      if (previous) CHECK(*previous < f);
      previous = f;
      seen.insert(f);
    }
    std::uint64_t expected = 1;
    for (int i = 0; i < n; ++i) expected *= static_cast<std::uint64_t>(n);
    CHECK(seen.size() == expected);
  }
  CHECK(enumerate_all(3).size() == 27);
  CHECK(enumerate_all(4).size() == 256);
  CHECK(*enumerate_all(1).begin() == identity(1));
  CHECK_THROWS_AS(enumerate_all(9), ResourceLimitError);
  CHECK_NOTHROW(enumerate_all(9, 9));
}

TEST_CASE("parsing both tuple styles") {
  CHECK(t("(a,a,c)").images() == std::vector<std::uint8_t>{0, 0, 2});
  CHECK(t("(1,1,4,4)").images() == std::vector<std::uint8_t>{0, 0, 3, 3});
  CHECK(t("(a, a, c)") == t("(a,a,c)"));

  CHECK_THROWS_AS(parse_transformation("(a,1,c)"), ParseError);
  CHECK_THROWS_AS(parse_transformation("(a,b"), ParseError);
  CHECK_THROWS_AS(parse_transformation("(d,a,b)"), ParseError);  // out of range
  CHECK_THROWS_AS(parse_transformation("(0,1,2)"), ParseError);  // 1-based only
  CHECK_THROWS_AS(parse_transformation("(1,2,4)"), ParseError);
  CHECK_THROWS_AS(parse_transformation("(a,b,c) junk"), ParseError);
  CHECK_THROWS_AS(parse_transformation("(a,b,c)", 4), ParseError);
  CHECK_NOTHROW(parse_transformation("(a,b,c)", 3));

  try {
    parse_transformation("(a,1,c)");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 3);
  }
}

TEST_CASE("format round-trips exhaustively for n=3 in both styles") {
  for (const Transformation& f : enumerate_all(3)) {
    CHECK(parse_transformation(format_transformation(f, TupleStyle::Letters)) == f);
    CHECK(parse_transformation(format_transformation(f, TupleStyle::OneBased)) == f);
  }
  CHECK(format_transformation(t("(a,a,c)"), TupleStyle::Letters) == "(a,a,c)");
  CHECK(format_transformation(t("(a,a,c)"), TupleStyle::OneBased) == "(1,1,3)");
}

TEST_CASE("composition is associative and rank never grows") {
  std::vector<Transformation> all;
  for (const Transformation& f : enumerate_all(3)) all.push_back(f);
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const Transformation& f = all[rng() % all.size()];
    const Transformation& g = all[rng() % all.size()];
    const Transformation& h = all[rng() % all.size()];
    CHECK(compose(f, compose(g, h)) == compose(compose(f, g), h));
    CHECK(rank(compose(f, g)) <= std::min(rank(f), rank(g)));
  }
}

TEST_CASE("fixed points sit inside the image; idempotents fix exactly it") {
  for (int n : {1, 2, 3, 4}) {
    for (const Transformation& f : enumerate_all(n)) {
      CHECK(fixed_points(f).is_subset_of(image(f)));
      CHECK(is_idempotent(f) == (fixed_points(f) == image(f)));
    }
  }
}

TEST_CASE("point set formatting") {
  PointSet s(3);
  s.insert(0);
  s.insert(2);
  CHECK(format_points(s, TupleStyle::Letters) == "{a,c}");
  CHECK(format_points(s, TupleStyle::OneBased) == "{1,3}");
}
