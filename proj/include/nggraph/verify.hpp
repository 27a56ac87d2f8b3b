#pragma once

// Mechanical verification of the catalogued propositions about NG-group
// digraphs. Each proposition id maps to one explicit predicate; a sweep
// evaluates it on every enumerated group (or generated digraph) in range
// and reports per-n verdicts with counterexamples. Claimed truths are
// never hard-coded: the computed verdict is compared against a recorded
// expectation table, so known divergences surface as structured findings
// instead of tool failures.

#include <array>
#include <chrono>
#include <climits>
#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nggraph/analysis.hpp"
#include "nggraph/digraph.hpp"
#include "nggraph/groups.hpp"
#include "nggraph/transformation.hpp"

namespace ngg {

enum class PropositionId {
  P3_1,
  P3_2,
  P3_3,
  P3_4,
  P3_5,
  P3_6_EULER,
  P3_6_ROOT,
  P4_1,
  P4_3,
  P4_5,
  P4_6a,
  P4_6b,
  P4_7,
  P4_9,
  P4_11,
  P4_12,
};

inline const std::vector<PropositionId>& all_propositions() {
  static const std::vector<PropositionId> ids = {
      PropositionId::P3_1,  PropositionId::P3_2,       PropositionId::P3_3,
      PropositionId::P3_4,  PropositionId::P3_5,       PropositionId::P3_6_EULER,
      PropositionId::P3_6_ROOT, PropositionId::P4_1,   PropositionId::P4_3,
      PropositionId::P4_5,  PropositionId::P4_6a,      PropositionId::P4_6b,
      PropositionId::P4_7,  PropositionId::P4_9,       PropositionId::P4_11,
      PropositionId::P4_12,
  };
  return ids;
}

inline std::string to_string(PropositionId p) {
  switch (p) {
    case PropositionId::P3_1: return "P3_1";
    case PropositionId::P3_2: return "P3_2";
    case PropositionId::P3_3: return "P3_3";
    case PropositionId::P3_4: return "P3_4";
    case PropositionId::P3_5: return "P3_5";
    case PropositionId::P3_6_EULER: return "P3_6_EULER";
    case PropositionId::P3_6_ROOT: return "P3_6_ROOT";
    case PropositionId::P4_1: return "P4_1";
    case PropositionId::P4_3: return "P4_3";
    case PropositionId::P4_5: return "P4_5";
    case PropositionId::P4_6a: return "P4_6a";
    case PropositionId::P4_6b: return "P4_6b";
    case PropositionId::P4_7: return "P4_7";
    case PropositionId::P4_9: return "P4_9";
    case PropositionId::P4_11: return "P4_11";
    case PropositionId::P4_12: return "P4_12";
  }
  return "?";
}

inline std::optional<PropositionId> proposition_from_string(std::string_view name) {
  for (PropositionId p : all_propositions()) {
    if (to_string(p) == name) return p;
  }
  return std::nullopt;
}

inline std::string proposition_statement(PropositionId p) {
  switch (p) {
    case PropositionId::P3_1: return "handshake: sum of degrees = 2m";
    case PropositionId::P3_2: return "handshake on group digraphs: sum of degrees = 2m";
    case PropositionId::P3_3: return "two-way circuit between two fixed points";
    case PropositionId::P3_4: return "sum of degrees = 2n|NG|";
    case PropositionId::P3_5: return "underlying graph bipartite, circuits even";
    case PropositionId::P3_6_EULER: return "Euler parity criterion; n=3 digraphs semi-eulerian";
    case PropositionId::P3_6_ROOT: return "root exists iff quasi-strongly connected";
    case PropositionId::P4_1: return "sum of degrees = 2n|NG| (case analysis)";
    case PropositionId::P4_3: return "order-2 fixed-point counts differ by exactly 2";
    case PropositionId::P4_5: return "3-point groups: 2-fix element maps the third point into the fixed pair";
    case PropositionId::P4_6a: return "some element has exactly one fixed point";
    case PropositionId::P4_6b: return "some element has no fixed point";
    case PropositionId::P4_7: return "acyclic digraphs have a source and a sink";
    case PropositionId::P4_9: return "sum of degrees <= 2*n!";
    case PropositionId::P4_11: return "|stabilizer|*|orbit| = |NG| at every fixed point";
    case PropositionId::P4_12: return "no NG digraph is strongly connected";
  }
  return "?";
}

enum class Verdict { HoldsOnAll, Fails, NotApplicable };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::HoldsOnAll: return "holds-on-all";
    case Verdict::Fails: return "fails";
    case Verdict::NotApplicable: return "not-applicable";
  }
  return "?";
}

enum class PaperExpectation { Confirmed, Diverges };

inline std::string to_string(PaperExpectation e) {
  return e == PaperExpectation::Confirmed ? "confirmed" : "diverges";
}

struct NRange {
  int lo;
  int hi;

  NRange(int single) : lo(single), hi(single) {}
  NRange(int lo_, int hi_) : lo(lo_), hi(hi_) {
    if (lo < 1 || hi < lo) throw DomainError("bad n range");
  }
};

struct VerifyOptions {
  std::uint64_t seed = 42;
  std::size_t random_count = 1000;
  std::size_t counterexample_cap = 10;
  EnumerationOptions enumeration;
};

struct Violation {
  std::string condition;  // which clause failed
  std::string observed;   // the offending values
};

struct Counterexample {
  std::string domain;                    // "n=5" or "random digraph #17"
  std::vector<Transformation> group;     // group instances; empty otherwise
  std::optional<Multidigraph> digraph;   // digraph instances
  std::string condition;
  std::string observed;
};

struct SweepRow {
  std::string domain;  // "n=3" or "random(...)"
  int n;               // -1 for generated-digraph rows
  std::size_t instances;
  Verdict verdict;
  bool claim_applies;  // the paper asserts this proposition on this row
  bool diverges;       // claim applies and the computed verdict is Fails
};

struct VerificationReport {
  PropositionId prop;
  std::string sweep;  // one-line sweep description
  std::vector<SweepRow> rows;
  Verdict verdict;
  PaperExpectation expectation;
  std::vector<Counterexample> counterexamples;
  std::size_t counterexample_total = 0;
  std::chrono::duration<double> elapsed{0};
};

// Section-level order claims that are not numbered propositions: the
// catalogue of group orders expected on 3 and 4 points.
struct CensusFinding {
  std::string id;  // "ORDERS"
  int n;
  std::string claimed;
  std::map<int, std::size_t> computed;  // order -> group count
  bool diverges;
};

struct Divergence {
  std::string id;  // proposition name or census id
  int n;           // -1 for generated-digraph rows

  friend bool operator==(const Divergence&, const Divergence&) = default;
  friend auto operator<=>(const Divergence&, const Divergence&) = default;
};

struct VerifySummary {
  std::vector<VerificationReport> reports;
  std::vector<CensusFinding> census;

  std::vector<Divergence> divergences() const {
    std::vector<Divergence> out;
    for (const VerificationReport& report : reports) {
      for (const SweepRow& row : report.rows) {
        if (row.diverges) out.push_back({to_string(report.prop), row.n});
      }
    }
    for (const CensusFinding& finding : census) {
      if (finding.diverges) out.push_back({finding.id, finding.n});
    }
    return out;
  }
};

// Rows of the expected-divergence table: the verdicts already known to
// contradict the claimed statements. User-overridable in the CLI.
struct DivergenceRule {
  std::string id;
  int min_n = 1;
  int max_n = INT_MAX;
};

inline std::vector<DivergenceRule> default_expected_divergences() {
  return {
      {"P3_5", 1, INT_MAX},   // loops and fixed-point triangles are odd circuits
      {"P4_6a", 1, INT_MAX},  // order-2 groups with fix counts {k, k-2}, k != 1+1
      {"P4_6b", 4, INT_MAX},  // rank-3 order-2 groups have fix counts {3, 1}
      {"P4_3", 5, INT_MAX},   // double transpositions give a difference of 4
      {"ORDERS", 4, 4},       // computed orders on 4 points are {2, 3, 6}
  };
}

inline bool divergence_expected(const std::vector<DivergenceRule>& rules,
                                const Divergence& divergence) {
  for (const DivergenceRule& rule : rules) {
    if (rule.id == divergence.id && divergence.n >= rule.min_n && divergence.n <= rule.max_n) {
      return true;
    }
  }
  return false;
}

namespace detail {

inline long long factorial(int n) {
  long long out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

inline std::string group_label(const NGGroup& g) {
  std::string out;
  for (const Transformation& f : g.elements()) {
    if (!out.empty()) out += ' ';
    out += format_transformation(f, TupleStyle::OneBased);
  }
  return out;
}

// Independent Euler re-derivation used to cross-check eulerian_class:
// degree parity straight off the arc counts, connectivity by union-find.
inline EulerianClass eulerian_by_parity(const Multidigraph& g) {
  const int n = g.order();
  std::vector<int> parent(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) parent[static_cast<std::size_t>(v)] = v;
  auto find = [&](int v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      parent[static_cast<std::size_t>(v)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
      v = parent[static_cast<std::size_t>(v)];
    }
    return v;
  };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (g.count(i, j) > 0) parent[static_cast<std::size_t>(find(i))] = find(j);
    }
  }
  for (int v = 1; v < n; ++v) {
    if (find(v) != find(0)) return EulerianClass::Disconnected;
  }
  int odd = 0;
  for (int v = 0; v < n; ++v) {
    int degree = 0;
    for (int j = 0; j < n; ++j) degree += g.count(v, j) + g.count(j, v);
    if (degree % 2 != 0) ++odd;
  }
  if (odd == 0) return EulerianClass::Eulerian;
  if (odd == 2) return EulerianClass::SemiEulerian;
  return EulerianClass::Neither;
}

}  // namespace detail

// Evaluates one proposition on one enumerated group; empty when it holds.
inline std::optional<Violation> check_group_instance(PropositionId p, const NGGroup& g) {
  const int n = g.arity();
  const UnionDigraph d = build_union_digraph(g.elements());
  const DegreeProfile profile = degree_profile(d);
  const PointSet fix = image(g.identity_element());

  switch (p) {
    case PropositionId::P3_1:
    case PropositionId::P3_2: {
      if (profile.total_sum() != 2 * d.arc_count()) {
        return Violation{"sum of degrees != 2m",
                         "sum=" + std::to_string(profile.total_sum()) +
                             " m=" + std::to_string(d.arc_count())};
      }
      return std::nullopt;
    }
    case PropositionId::P3_3: {
      if (g.order() < 2) return std::nullopt;
      if (!two_way_pair(d.graph(), fix)) {
        return Violation{"no two-way arc pair inside the fixed-point set",
                         "ng_fix=" + format_points(fix, TupleStyle::OneBased)};
      }
      return std::nullopt;
    }
    case PropositionId::P3_4:
    case PropositionId::P4_1: {
      if (profile.total_sum() != 2LL * n * g.order()) {
        return Violation{"sum of degrees != 2n|NG|",
                         "sum=" + std::to_string(profile.total_sum()) + " 2n|NG|=" +
                             std::to_string(2LL * n * g.order())};
      }
      return std::nullopt;
    }
    case PropositionId::P3_5: {
      const BipartiteCheck ignoring = bipartite_check(d.graph(), LoopPolicy::Ignore);
      const BipartiteCheck counting = bipartite_check(d.graph(), LoopPolicy::CountAsOddCycle);
      if (ignoring.bipartite && counting.bipartite) return std::nullopt;
      std::string walk;
      for (int v : (ignoring.bipartite ? counting : ignoring).odd_closed_walk) {
        if (!walk.empty()) walk += "->";
        walk += std::to_string(v + 1);
      }
      return Violation{"underlying graph is not bipartite",
                       std::string("ignore-loops=") + (ignoring.bipartite ? "bipartite" : "odd") +
                           " count-loops=" + (counting.bipartite ? "bipartite" : "odd") +
                           " odd closed walk " + walk};
    }
    case PropositionId::P3_6_EULER: {
      const EulerianClass computed = eulerian_class(d.graph());
      const EulerianClass recomputed = detail::eulerian_by_parity(d.graph());
      if (computed != recomputed) {
        return Violation{"classifier disagrees with the parity criterion",
                         to_string(computed) + " vs " + to_string(recomputed)};
      }
      if (n == 3 && computed != EulerianClass::SemiEulerian) {
        return Violation{"3-point group digraph is not semi-eulerian", to_string(computed)};
      }
      return std::nullopt;
    }
    case PropositionId::P3_6_ROOT: {
      const bool has_root = !roots(d.graph()).empty();
      const bool qsc = is_quasi_strongly_connected(d.graph());
      if (has_root != qsc) {
        return Violation{"root existence and quasi-strong connectivity disagree",
                         std::string("root=") + (has_root ? "yes" : "no") + " qsc=" +
                             (qsc ? "yes" : "no")};
      }
      return std::nullopt;
    }
    case PropositionId::P4_3: {
      if (g.order() != 2) return std::nullopt;
      const GroupCensus census = group_census(g);
      const int diff = std::abs(census.fix_counts[0] - census.fix_counts[1]);
      if (diff != 2 || profile.total_sum() != 2LL * n * diff) {
        return Violation{"fixed-point difference is not 2",
                         "fix counts " + std::to_string(census.fix_counts[0]) + "," +
                             std::to_string(census.fix_counts[1]) + " diff=" +
                             std::to_string(diff) + " sum=" +
                             std::to_string(profile.total_sum())};
      }
      return std::nullopt;
    }
    case PropositionId::P4_5: {
      for (const Transformation& f : g.elements()) {
        const PointSet fixed = fixed_points(f);
        if (fixed.size() != 2) continue;
        bool maps_in = true;
        for (int x : moved_points(f).members()) maps_in = maps_in && fixed.contains(f(x));
        if (maps_in) return std::nullopt;
      }
      return Violation{"no 2-fix element mapping its moved point into the fixed pair", ""};
    }
    case PropositionId::P4_6a: {
      const GroupCensus census = group_census(g);
      for (int count : census.fix_counts) {
        if (count == 1) return std::nullopt;
      }
      std::string counts;
      for (int count : census.fix_counts) counts += (counts.empty() ? "" : ",") + std::to_string(count);
      return Violation{"no element with exactly one fixed point", "fix counts " + counts};
    }
    case PropositionId::P4_6b: {
      const GroupCensus census = group_census(g);
      for (int count : census.fix_counts) {
        if (count == 0) return std::nullopt;
      }
      std::string counts;
      for (int count : census.fix_counts) counts += (counts.empty() ? "" : ",") + std::to_string(count);
      return Violation{"no element without fixed points", "fix counts " + counts};
    }
    case PropositionId::P4_9: {
      if (profile.total_sum() > 2 * detail::factorial(n)) {
        return Violation{"sum of degrees exceeds 2*n!",
                         "sum=" + std::to_string(profile.total_sum()) + " 2n!=" +
                             std::to_string(2 * detail::factorial(n))};
      }
      return std::nullopt;
    }
    case PropositionId::P4_11: {
      for (int i : fix.members()) {
        const std::size_t product =
            stabilizer(g, i).size() * static_cast<std::size_t>(orbit(g, i).size());
        if (product != static_cast<std::size_t>(g.order())) {
          return Violation{"|stabilizer|*|orbit| != |NG|",
                           "point " + std::to_string(i + 1) + ": " + std::to_string(product) +
                               " != " + std::to_string(g.order())};
        }
      }
      return std::nullopt;
    }
    case PropositionId::P4_12: {
      const StrongConnectivity strong = strong_connectivity(d.graph());
      if (strong.strongly_connected) {
        return Violation{"digraph is strongly connected", ""};
      }
      const PointSet moved = fix.complement();
      if (moved.empty() || moved.size() == n || !in_neighborhood(d.graph(), moved).empty()) {
        return Violation{"moved-point set is not an empty-in-neighborhood witness",
                         "moved=" + format_points(moved, TupleStyle::OneBased)};
      }
      return std::nullopt;
    }
    case PropositionId::P4_7:
      return std::nullopt;  // swept over generated digraphs, not groups
  }
  return std::nullopt;
}

// Evaluates the digraph-level propositions on one generated digraph.
inline std::optional<Violation> check_digraph_instance(PropositionId p, const Multidigraph& g) {
  switch (p) {
    case PropositionId::P3_6_ROOT: {
      const bool has_root = !roots(g).empty();
      const bool qsc = is_quasi_strongly_connected(g);
      if (has_root != qsc) {
        return Violation{"root existence and quasi-strong connectivity disagree",
                         std::string("root=") + (has_root ? "yes" : "no") + " qsc=" +
                             (qsc ? "yes" : "no")};
      }
      return std::nullopt;
    }
    case PropositionId::P4_7: {
      if (!is_acyclic(g)) {
        return Violation{"generated digraph is not acyclic", ""};
      }
      if (sources(g).empty() || sinks(g).empty()) {
        return Violation{"acyclic digraph lacks a source or a sink",
                         "sources=" + std::to_string(sources(g).size()) +
                             " sinks=" + std::to_string(sinks(g).size())};
      }
      return std::nullopt;
    }
    default:
      throw DomainError(to_string(p) + " has no generated-digraph form");
  }
}

namespace detail {

// Group sweeps shared between verify calls; enumeration is the dominant
// cost, so verify_all reuses one context across all propositions.
class SweepContext {
 public:
  explicit SweepContext(const VerifyOptions& options) : options_(options) {}

  const std::vector<NGGroup>& groups(int n) {
    auto it = cache_.find(n);
    if (it == cache_.end()) {
      it = cache_.emplace(n, enumerate_ng_groups(n, options_.enumeration)).first;
    }
    return it->second;
  }

  const VerifyOptions& options() const { return options_; }

 private:
  VerifyOptions options_;
  std::map<int, std::vector<NGGroup>> cache_;
};

inline bool sweeps_groups(PropositionId p) { return p != PropositionId::P4_7; }
inline bool sweeps_random_digraphs(PropositionId p) {
  return p == PropositionId::P3_6_ROOT || p == PropositionId::P4_7;
}

// P4_5 is stated for the 3-point set only.
inline bool claim_applies_at(PropositionId p, int n) {
  return p != PropositionId::P4_5 || n == 3;
}

// P4_3 quantifies over order-2 groups only.
inline bool instance_in_domain(PropositionId p, const NGGroup& g) {
  return p != PropositionId::P4_3 || g.order() == 2;
}

inline VerificationReport run_verify(PropositionId p, NRange range, SweepContext& ctx) {
  const auto start = std::chrono::steady_clock::now();
  const VerifyOptions& options = ctx.options();

  VerificationReport report;
  report.prop = p;

  if (sweeps_groups(p)) {
    for (int n = range.lo; n <= range.hi; ++n) {
      SweepRow row;
      row.domain = "n=" + std::to_string(n);
      row.n = n;
      row.instances = 0;
      if (!claim_applies_at(p, n)) {
        row.verdict = Verdict::NotApplicable;
        row.claim_applies = false;
        row.diverges = false;
        report.rows.push_back(row);
        continue;
      }
      std::size_t violations = 0;
      for (const NGGroup& g : ctx.groups(n)) {
        if (!instance_in_domain(p, g)) continue;
        ++row.instances;
        const std::optional<Violation> violation = check_group_instance(p, g);
        if (!violation) continue;
        ++violations;
        ++report.counterexample_total;
        if (report.counterexamples.size() < options.counterexample_cap) {
          report.counterexamples.push_back(
              {row.domain, g.elements(), std::nullopt, violation->condition, violation->observed});
        }
      }
      row.verdict = row.instances == 0 ? Verdict::NotApplicable
                    : violations == 0  ? Verdict::HoldsOnAll
                                       : Verdict::Fails;
      row.claim_applies = row.verdict != Verdict::NotApplicable;
      row.diverges = row.claim_applies && row.verdict == Verdict::Fails;
      report.rows.push_back(row);
    }
  }

  if (sweeps_random_digraphs(p)) {
    SweepRow row;
    row.n = -1;
    row.domain = std::string(p == PropositionId::P4_7 ? "random acyclic digraphs" : "random digraphs") +
                 "(seed=" + std::to_string(options.seed) +
                 ",count=" + std::to_string(options.random_count) + ")";
    row.instances = options.random_count;
    std::mt19937_64 rng(options.seed);
    std::size_t violations = 0;
    for (std::size_t trial = 0; trial < options.random_count; ++trial) {
      const int n = 2 + static_cast<int>(rng() % 7);  // vertex counts 2..8
      const int density = std::array{100, 300, 500}[trial % 3];
      const Multidigraph g = p == PropositionId::P4_7
                                 ? random_acyclic_digraph(n, density, rng)
                                 : random_digraph(n, density, rng);
      const std::optional<Violation> violation = check_digraph_instance(p, g);
      if (!violation) continue;
      ++violations;
      ++report.counterexample_total;
      if (report.counterexamples.size() < options.counterexample_cap) {
        report.counterexamples.push_back({"random digraph #" + std::to_string(trial), {}, g,
                                          violation->condition, violation->observed});
      }
    }
    row.verdict = violations == 0 ? Verdict::HoldsOnAll : Verdict::Fails;
    row.claim_applies = true;
    row.diverges = row.verdict == Verdict::Fails;
    report.rows.push_back(row);
  }

  bool any_failed = false;
  bool any_evaluated = false;
  bool any_diverges = false;
  for (const SweepRow& row : report.rows) {
    any_failed = any_failed || row.verdict == Verdict::Fails;
    any_evaluated = any_evaluated || row.verdict != Verdict::NotApplicable;
    any_diverges = any_diverges || row.diverges;
    if (!report.sweep.empty()) report.sweep += ", ";
    report.sweep += row.domain + ":" + std::to_string(row.instances);
  }
  report.verdict = any_failed          ? Verdict::Fails
                   : any_evaluated     ? Verdict::HoldsOnAll
                                       : Verdict::NotApplicable;
  report.expectation = any_diverges ? PaperExpectation::Diverges : PaperExpectation::Confirmed;
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

inline std::vector<CensusFinding> run_census(NRange range, SweepContext& ctx) {
  std::vector<CensusFinding> findings;
  for (int n = range.lo; n <= range.hi; ++n) {
    if (n != 3 && n != 4) continue;  // claims recorded for 3 and 4 points only
    std::map<int, std::size_t> computed;
    for (const NGGroup& g : ctx.groups(n)) ++computed[g.order()];
    CensusFinding finding;
    finding.id = "ORDERS";
    finding.n = n;
    if (n == 3) {
      finding.claimed = "exactly six groups, all of order 2";
      finding.diverges = computed != std::map<int, std::size_t>{{2, 6}};
    } else {
      finding.claimed = "groups of order 2, 4 and 6";
      std::vector<int> orders;
      for (const auto& [order, count] : computed) orders.push_back(order);
      finding.diverges = orders != std::vector<int>{2, 4, 6};
    }
    finding.computed = std::move(computed);
    findings.push_back(std::move(finding));
  }
  return findings;
}

}  // namespace detail

inline VerificationReport verify(PropositionId p, NRange range,
                                 const VerifyOptions& options = {}) {
  detail::SweepContext ctx(options);
  return detail::run_verify(p, range, ctx);
}

// Every proposition once, in the fixed id order, plus the order-census
// findings for the swept n.
inline VerifySummary verify_all(NRange range, const VerifyOptions& options = {}) {
  detail::SweepContext ctx(options);
  VerifySummary summary;
  for (PropositionId p : all_propositions()) {
    summary.reports.push_back(detail::run_verify(p, range, ctx));
  }
  summary.census = detail::run_census(range, ctx);
  return summary;
}

}  // namespace ngg
