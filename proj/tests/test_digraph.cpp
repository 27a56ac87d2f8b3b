#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <random>
#include <vector>

#include "nggraph/digraph.hpp"
#include "nggraph/groups.hpp"

using namespace ngg;

namespace {

std::vector<Transformation> set_of(std::initializer_list<const char*> tuples) {
  std::vector<Transformation> out;
  for (const char* s : tuples) out.push_back(parse_transformation(s));
  return out;
}

}  // namespace

TEST_CASE("union digraph of a 2-element group on 3 points") {
  const UnionDigraph d = build_union_digraph(set_of({"(a,a,c)", "(c,c,a)"}));
  CHECK(size_pair(d) == std::pair<int, long long>{3, 6});
  CHECK(adjacency_matrix(d) ==
        std::vector<std::vector<int>>{{1, 0, 1}, {1, 0, 1}, {1, 0, 1}});

  const DegreeProfile p = degree_profile(d);
  CHECK(p.out_degree == std::vector<int>{2, 2, 2});
  CHECK(p.in_degree == std::vector<int>{3, 0, 3});
  CHECK(p.total == std::vector<int>{5, 2, 5});
  CHECK(p.delta_min == 2);
  CHECK(p.delta_max == 5);
  CHECK(p.fix_degrees == std::map<int, int>{{0, 5}, {2, 5}});
  CHECK(p.uniform_fix_degree() == 5);
  CHECK(p.total_sum() == 12);
}

TEST_CASE("adjacency matrices of the other 3-point groups") {
  CHECK(adjacency_matrix(build_union_digraph(set_of({"(a,b,a)", "(b,a,b)"}))) ==
        std::vector<std::vector<int>>{{1, 1, 0}, {1, 1, 0}, {1, 1, 0}});
  CHECK(adjacency_matrix(build_union_digraph(set_of({"(b,b,c)", "(c,c,b)"}))) ==
        std::vector<std::vector<int>>{{0, 1, 1}, {0, 1, 1}, {0, 1, 1}});
}

TEST_CASE("4-point examples") {
  const UnionDigraph order2 = build_union_digraph(set_of({"(1,1,4,4)", "(4,4,1,1)"}));
  CHECK(size_pair(order2) == std::pair<int, long long>{4, 8});
  const DegreeProfile p2 = degree_profile(order2);
  CHECK(p2.total == std::vector<int>{6, 2, 2, 6});
  CHECK(p2.delta_min == 2);
  CHECK(p2.delta_max == 6);
  CHECK(p2.total_sum() == 16);
  CHECK(p2.uniform_fix_degree() == 6);

  const UnionDigraph order6 =
      build_union_digraph(h_class_group(parse_transformation("(1,1,3,4)")).elements());
  CHECK(size_pair(order6) == std::pair<int, long long>{4, 24});
  const DegreeProfile p6 = degree_profile(order6);
  CHECK(p6.total == std::vector<int>{14, 6, 14, 14});
  CHECK(p6.delta_min == 6);
  CHECK(p6.delta_max == 14);
  CHECK(p6.total_sum() == 48);
  CHECK(p6.uniform_fix_degree() == 14);

  const UnionDigraph order4 = build_union_digraph(
      set_of({"(1,1,4,4)", "(4,4,1,1)", "(1,4,1,4)", "(4,1,4,1)"}));
  CHECK(adjacency_matrix(order4) ==
        std::vector<std::vector<int>>{
            {2, 0, 0, 2}, {2, 0, 0, 2}, {2, 0, 0, 2}, {2, 0, 0, 2}});
  const DegreeProfile p4 = degree_profile(order4);
  CHECK(p4.total == std::vector<int>{12, 4, 4, 12});
  CHECK(p4.delta_min == 4);
  CHECK(p4.delta_max == 12);
}

TEST_CASE("single transformations") {
  const UnionDigraph d = build_union_digraph({identity(4)});
  CHECK(size_pair(d) == std::pair<int, long long>{4, 4});
  for (int v = 0; v < 4; ++v) CHECK(d.graph().count(v, v) == 1);

  const UnionDigraph e = build_union_digraph({parse_transformation("(b,c,a,d,d)")});
  CHECK(size_pair(e) == std::pair<int, long long>{5, 5});
}

TEST_CASE("duplicates collapse to set semantics") {
  const Transformation f = parse_transformation("(a,a,c)");
  const UnionDigraph d = build_union_digraph({f, f});
  CHECK(d.source_size() == 1);
}

TEST_CASE("mixed arities are rejected") {
  CHECK_THROWS_AS(build_union_digraph(set_of({"(a,a,c)", "(1,1,4,4)"})), DomainError);
  CHECK_THROWS_AS(build_union_digraph({}), DomainError);
}

TEST_CASE("degree laws hold for every group digraph on up to 4 points") {
  for (int n : {3, 4}) {
    for (const NGGroup& g : enumerate_ng_groups(n)) {
      const UnionDigraph d = build_union_digraph(g.elements());
      const DegreeProfile p = degree_profile(d);

      // Handshake and the group sum law.
      CHECK(p.total_sum() == 2 * d.arc_count());
      CHECK(p.total_sum() == 2LL * n * g.order());

      for (int v = 0; v < n; ++v) {
        CHECK(p.out_degree[static_cast<std::size_t>(v)] == g.order());
        CHECK(p.delta_min <= p.total[static_cast<std::size_t>(v)]);
        CHECK(p.total[static_cast<std::size_t>(v)] <= p.delta_max);
      }

      // Column sums vanish exactly off the common image; loops cover ng_fix.
      const PointSet fix = image(g.identity_element());
      for (int v = 0; v < n; ++v) {
        CHECK((p.in_degree[static_cast<std::size_t>(v)] == 0) == !fix.contains(v));
        CHECK((d.graph().count(v, v) > 0) == fix.contains(v));
      }
    }
  }
}

TEST_CASE("handshake holds for arbitrary transformation sets") {
  std::mt19937_64 rng(11);
  std::vector<Transformation> pool;
  for (const Transformation& f : enumerate_all(4)) pool.push_back(f);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Transformation> elements;
    const std::size_t size = 1 + rng() % 5;
    for (std::size_t i = 0; i < size; ++i) elements.push_back(pool[rng() % pool.size()]);
    const UnionDigraph d = build_union_digraph(elements);
    const DegreeProfile p = degree_profile(d);
    CHECK(p.total_sum() == 2 * d.arc_count());
    CHECK(d.arc_count() == 4LL * d.source_size());
  }
}
