#pragma once

// The CLI commands behind the nggraph tool, kept as library functions so
// they can be driven directly by tests. Exit codes: 0 success (including
// expected divergences), 1 unexpected divergence in verify, 2 usage or
// parse error, 3 resource limit or unwritable output.

#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nggraph/catalog.hpp"

namespace ngg {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDivergence = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitResource = 3;

enum class OutputFormat { Text, Structured, Csv, Dot };

inline std::optional<OutputFormat> output_format_from_string(std::string_view name) {
  if (name == "text") return OutputFormat::Text;
  if (name == "structured") return OutputFormat::Structured;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "dot") return OutputFormat::Dot;
  return std::nullopt;
}

struct RunConfig {
  int n = 3;
  int n_hi = 0;  // verify sweeps lo..hi; 0 means single n
  std::optional<int> order_filter;
  bool include_trivial = false;
  LoopPolicy loop_policy = LoopPolicy::CountAsOddCycle;
  OutputFormat format = OutputFormat::Text;
  std::uint64_t seed = 42;
  int arity_cap = kDefaultArityCap;
  std::size_t closure_limit = kDefaultClosureLimit;
  int generator_bound = 2;
  std::size_t counterexample_cap = 10;
  std::size_t random_count = 1000;
  std::string out_path;  // empty writes to the given stream
  bool strict = false;
  std::string expectations_path;  // JSON override of the divergence table

  EnumerationOptions enumeration_options() const {
    EnumerationOptions options;
    options.order_filter = order_filter;
    options.include_trivial = include_trivial;
    options.generator_bound = generator_bound;
    options.closure_limit = closure_limit;
    options.arity_cap = arity_cap;
    return options;
  }

  VerifyOptions verify_options() const {
    VerifyOptions options;
    options.seed = seed;
    options.random_count = random_count;
    options.counterexample_cap = counterexample_cap;
    options.enumeration = enumeration_options();
    return options;
  }

  NRange range() const { return n_hi > 0 ? NRange(n, n_hi) : NRange(n); }
};

namespace detail {

// Resolves --out: either the fallback stream or a freshly opened file.
class OutputTarget {
 public:
  OutputTarget(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      stream_ = file_.get();
    }
  }
  bool ok() const { return file_ == nullptr || file_->good(); }
  std::ostream& stream() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

inline std::string display_tuple(const Transformation& f) {
  return format_transformation(f, f.arity() <= 26 ? TupleStyle::Letters : TupleStyle::OneBased);
}

inline std::string display_points(const PointSet& s) {
  return format_points(s, s.arity() <= 26 ? TupleStyle::Letters : TupleStyle::OneBased);
}

inline std::string record_line(const CatalogRecord& r) {
  std::string elements;
  for (const std::string& tuple : r.elements) {
    if (!elements.empty()) elements += ' ';
    elements += tuple;
  }
  return r.id + "  order=" + std::to_string(r.order) + " rank=" + std::to_string(r.rank) +
         " identity=" + r.identity + " ng_fix=" + detail::joined(r.ng_fix) + " size=(" +
         std::to_string(r.vertices) + "," + std::to_string(r.arcs) + ")  " + elements;
}

inline std::vector<Transformation> parse_tuple_args(const std::vector<std::string>& tuples) {
  std::vector<Transformation> elements;
  for (const std::string& text : tuples) elements.push_back(parse_transformation(text));
  return elements;
}

}  // namespace detail

inline int cmd_enumerate(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::vector<CatalogRecord> records;
  try {
    for (const NGGroup& g : enumerate_ng_groups(config.n, config.enumeration_options())) {
      records.push_back(make_record(g));
    }
  } catch (const ResourceLimitError& e) {
    err << "error: " << e.what() << '\n';
    return kExitResource;
  }

  detail::OutputTarget target(config.out_path, out);
  if (!target.ok()) {
    err << "error: cannot write " << config.out_path << '\n';
    return kExitResource;
  }
  std::ostream& os = target.stream();

  switch (config.format) {
    case OutputFormat::Structured:
      write_records_jsonl(os, records);
      break;
    case OutputFormat::Csv:
      write_records_csv(os, records);
      break;
    case OutputFormat::Dot:
      for (const CatalogRecord& r : records) {
        const NGGroup g = group_from_record(r);
        os << to_dot(build_union_digraph(g.elements()), r.id);
      }
      break;
    case OutputFormat::Text: {
      os << "n=" << config.n << ": " << records.size() << " group(s)\n";
      std::map<int, std::size_t> by_order;
      for (const CatalogRecord& r : records) {
        ++by_order[r.order];
        os << "  " << detail::record_line(r) << '\n';
      }
      os << "orders:";
      for (const auto& [order, count] : by_order) {
        os << " " << order << ":" << count;
      }
      os << '\n';
      break;
    }
  }
  return kExitOk;
}

namespace detail {

inline void inspect_text(const std::vector<Transformation>& elements, LoopPolicy policy,
                         std::ostream& os) {
  const ClosedSetClass classification = classify_set(elements);

  // NG sets are made of non-permutations; a permutation group is still
  // inspectable but flagged.
  bool has_permutation = false;
  for (const Transformation& f : elements) has_permutation = has_permutation || is_permutation(f);
  if (has_permutation) os << "not an NG set: contains a permutation\n";

  os << "elements:";
  for (const Transformation& f : elements) os << ' ' << display_tuple(f);
  os << '\n';
  os << "classification: " << to_string(classification.tag) << " ("
     << classification.idempotent_count << " idempotent"
     << (classification.idempotent_count == 1 ? "" : "s") << ")\n";
  if (classification.witness) {
    os << "closure witness: " << display_tuple(classification.witness->first) << " * "
       << display_tuple(classification.witness->second) << " escapes the set\n";
  }

  const UnionDigraph d = build_union_digraph(elements);
  os << "size: (" << d.vertex_count() << "," << d.arc_count() << ")\n";
  os << "adjacency:\n";
  for (const auto& row : adjacency_matrix(d)) {
    os << " ";
    for (int value : row) os << ' ' << value;
    os << '\n';
  }
  const DegreeProfile profile = degree_profile(d);
  auto degree_list = [](const std::vector<int>& degrees) {
    std::string out = "(";
    for (std::size_t i = 0; i < degrees.size(); ++i) {
      if (i > 0) out += ',';
      out += std::to_string(degrees[i]);
    }
    return out + ")";
  };
  os << "degrees: out " << degree_list(profile.out_degree) << " in "
     << degree_list(profile.in_degree) << " total " << degree_list(profile.total) << '\n';
  os << "degree bounds: min " << profile.delta_min << " max " << profile.delta_max << '\n';
  if (!profile.fix_degrees.empty()) {
    os << "fix degrees:";
    const int n = d.vertex_count();
    for (const auto& [v, degree] : profile.fix_degrees) {
      os << ' ' << (n <= 26 ? std::string(1, static_cast<char>('a' + v)) : std::to_string(v + 1))
         << ":" << degree;
    }
    if (const auto uniform = profile.uniform_fix_degree()) {
      os << "  (uniform " << *uniform << ")";
    }
    os << '\n';
  }

  // Per-element fixed-point counts; for groups also the group data.
  os << "fix counts:";
  long long moved_pairs = 0;
  for (const Transformation& f : elements) {
    os << ' ' << display_tuple(f) << ":" << fixed_points(f).size();
    moved_pairs += moved_points(f).size();
  }
  os << '\n';
  os << "moved pairs: " << moved_pairs << '\n';

  PointSet fixed_side(d.vertex_count());
  if (classification.tag == SetTag::Group && !has_permutation) {
    const NGGroup g = NGGroup::from_elements(elements);
    os << "order: " << g.order() << "  rank: " << g.rank()
       << "  identity: " << display_tuple(g.identity_element()) << '\n';
    fixed_side = image(g.identity_element());
    os << "ng_fix: " << display_points(fixed_side) << '\n';
  } else {
    // Loop vertices stand in for the fixed side of non-group sets.
    for (int v = 0; v < d.vertex_count(); ++v) {
      if (d.graph().count(v, v) > 0) fixed_side.insert(v);
    }
  }

  const ConnectivityVerdict verdict = analyze_connectivity(d.graph());
  os << "connectivity: weak " << (verdict.weakly_connected ? "yes" : "no") << ", quasi-strong "
     << (verdict.quasi_strongly_connected ? "yes" : "no") << ", strong "
     << (verdict.strongly_connected ? "yes" : "no") << '\n';
  os << "roots: " << display_points(verdict.roots) << '\n';
  if (verdict.witness) {
    os << "empty-in-neighborhood witness: " << display_points(*verdict.witness) << '\n';
  }
  os << "eulerian: " << to_string(eulerian_class(d.graph())) << '\n';
  const BipartiteCheck bipartite = bipartite_check(d.graph(), policy);
  os << "bipartite ("
     << (policy == LoopPolicy::CountAsOddCycle ? "loops count as odd circuits" : "loops ignored")
     << "): " << (bipartite.bipartite ? "yes" : "no") << '\n';
  if (!fixed_side.empty()) {
    const ReachabilitySets reach = reachability(d.graph(), fixed_side);
    os << "s_fix: " << display_points(reach.s_fix) << "  s_move: " << display_points(reach.s_move)
       << '\n';
  }
}

}  // namespace detail

inline int cmd_inspect(const RunConfig& config, const std::vector<std::string>& tuples,
                       const std::string& catalog_path, const std::string& record_id,
                       std::ostream& out, std::ostream& err) {
  std::vector<Transformation> elements;
  try {
    if (!tuples.empty()) {
      elements = detail::parse_tuple_args(tuples);
    } else if (!catalog_path.empty() && !record_id.empty()) {
      std::ifstream in(catalog_path);
      if (!in.good()) {
        err << "error: cannot read " << catalog_path << '\n';
        return kExitUsage;
      }
      bool found = false;
      for (const CatalogRecord& r : read_records_jsonl(in)) {
        if (r.id == record_id) {
          elements = group_from_record(r).elements();
          found = true;
          break;
        }
      }
      if (!found) {
        err << "error: no record with id " << record_id << '\n';
        return kExitUsage;
      }
    } else {
      err << "error: give element tuples or --catalog with --id\n";
      return kExitUsage;
    }

    detail::OutputTarget target(config.out_path, out);
    if (!target.ok()) {
      err << "error: cannot write " << config.out_path << '\n';
      return kExitResource;
    }
    if (config.format == OutputFormat::Structured) {
      const ClosedSetClass classification = classify_set(elements);
      bool has_permutation = false;
      for (const Transformation& f : elements) {
        has_permutation = has_permutation || is_permutation(f);
      }
      if (classification.tag == SetTag::Group && !has_permutation) {
        target.stream() << record_to_json(make_record(NGGroup::from_elements(elements))).dump()
                        << '\n';
      } else {
        nlohmann::ordered_json j;
        j["classification"] = to_string(classification.tag);
        j["idempotents"] = classification.idempotent_count;
        std::vector<std::string> element_tuples;
        for (const Transformation& f : elements) {
          element_tuples.push_back(format_transformation(f, TupleStyle::OneBased));
        }
        j["elements"] = element_tuples;
        target.stream() << j.dump() << '\n';
      }
    } else {
      detail::inspect_text(elements, config.loop_policy, target.stream());
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

namespace detail {

inline std::vector<DivergenceRule> load_expected_divergences(const std::string& path) {
  if (path.empty()) return default_expected_divergences();
  std::ifstream in(path);
  if (!in.good()) throw DomainError("cannot read expectations file " + path);
  nlohmann::json j = nlohmann::json::parse(in);
  std::vector<DivergenceRule> rules;
  for (const auto& entry : j) {
    DivergenceRule rule;
    rule.id = entry.at("id").get<std::string>();
    rule.min_n = entry.value("min_n", 1);
    rule.max_n = entry.value("max_n", INT_MAX);
    rules.push_back(rule);
  }
  return rules;
}

inline void verify_report_text(const VerificationReport& report, std::ostream& os) {
  for (const SweepRow& row : report.rows) {
    os << "  " << to_string(report.prop) << "  " << row.domain << "  instances="
       << row.instances << "  " << to_string(row.verdict)
       << (row.diverges ? "  [diverges from the claimed statement]" : "") << '\n';
  }
  for (const Counterexample& ce : report.counterexamples) {
    os << "    counterexample (" << ce.domain << "):";
    for (const Transformation& f : ce.group) os << ' ' << display_tuple(f);
    os << "  " << ce.condition;
    if (!ce.observed.empty()) os << "  [" << ce.observed << "]";
    os << '\n';
  }
  if (report.counterexample_total > report.counterexamples.size()) {
    os << "    (" << report.counterexample_total << " counterexamples in total)\n";
  }
}

}  // namespace detail

inline int cmd_verify(const RunConfig& config, const std::vector<std::string>& props, bool all,
                      std::ostream& out, std::ostream& err) {
  std::vector<PropositionId> selected;
  if (all) {
    selected = all_propositions();
  } else {
    for (const std::string& name : props) {
      const auto p = proposition_from_string(name);
      if (!p) {
        err << "error: unknown proposition " << name << '\n';
        return kExitUsage;
      }
      selected.push_back(*p);
    }
  }
  if (selected.empty()) {
    err << "error: select propositions with --prop or pass --all\n";
    return kExitUsage;
  }

  std::vector<DivergenceRule> rules;
  try {
    rules = detail::load_expected_divergences(config.expectations_path);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  VerifySummary summary;
  try {
    if (all) {
      summary = verify_all(config.range(), config.verify_options());
    } else {
      for (PropositionId p : selected) {
        summary.reports.push_back(verify(p, config.range(), config.verify_options()));
      }
    }
  } catch (const ResourceLimitError& e) {
    err << "error: " << e.what() << '\n';
    return kExitResource;
  }

  detail::OutputTarget target(config.out_path, out);
  if (!target.ok()) {
    err << "error: cannot write " << config.out_path << '\n';
    return kExitResource;
  }
  std::ostream& os = target.stream();

  const std::vector<Divergence> divergences = summary.divergences();
  std::size_t unexpected = 0;
  for (const Divergence& d : divergences) {
    if (!divergence_expected(rules, d)) ++unexpected;
  }

  if (config.format == OutputFormat::Structured) {
    for (const VerificationReport& report : summary.reports) {
      os << report_to_json(report).dump() << '\n';
    }
    for (const CensusFinding& finding : summary.census) {
      os << census_to_json(finding).dump() << '\n';
    }
  } else {
    for (const VerificationReport& report : summary.reports) {
      os << to_string(report.prop) << ": " << proposition_statement(report.prop) << '\n';
      detail::verify_report_text(report, os);
      os << "  verdict: " << to_string(report.verdict) << "  paper: "
         << to_string(report.expectation) << '\n';
    }
    for (const CensusFinding& finding : summary.census) {
      os << "ORDERS n=" << finding.n << ": claimed " << finding.claimed << "; computed";
      for (const auto& [order, count] : finding.computed) {
        os << " " << order << ":" << count;
      }
      os << (finding.diverges ? "  [diverges]" : "  [confirmed]") << '\n';
    }
    os << "divergences: " << divergences.size() << " (" << unexpected << " unexpected)\n";
  }

  if (config.strict && !divergences.empty()) return kExitDivergence;
  if (unexpected > 0) return kExitDivergence;
  return kExitOk;
}

inline int cmd_export(const RunConfig& config, const std::vector<std::string>& tuples,
                      std::ostream& out, std::ostream& err) {
  try {
    detail::OutputTarget target(config.out_path, out);
    if (!target.ok()) {
      err << "error: cannot write " << config.out_path << '\n';
      return kExitResource;
    }
    std::ostream& os = target.stream();

    if (!tuples.empty()) {
      const std::vector<Transformation> elements = detail::parse_tuple_args(tuples);
      switch (config.format) {
        case OutputFormat::Dot: {
          const UnionDigraph d = build_union_digraph(elements);
          std::vector<Transformation> sorted = elements;
          std::sort(sorted.begin(), sorted.end());
          os << to_dot(d, group_id(sorted));
          break;
        }
        case OutputFormat::Structured:
        case OutputFormat::Csv: {
          if (classify_set(elements).tag != SetTag::Group) {
            err << "error: structured and csv exports need a group; use dot for raw sets\n";
            return kExitUsage;
          }
          const CatalogRecord record = make_record(NGGroup::from_elements(elements));
          if (config.format == OutputFormat::Csv) {
            write_records_csv(os, {record});
          } else {
            write_records_jsonl(os, {record});
          }
          break;
        }
        case OutputFormat::Text:
          err << "error: export formats are structured, csv and dot\n";
          return kExitUsage;
      }
      return kExitOk;
    }

    // No tuples: export the whole catalog for n.
    std::vector<CatalogRecord> records;
    for (const NGGroup& g : enumerate_ng_groups(config.n, config.enumeration_options())) {
      records.push_back(make_record(g));
    }
    switch (config.format) {
      case OutputFormat::Structured:
        write_records_jsonl(os, records);
        break;
      case OutputFormat::Csv:
        write_records_csv(os, records);
        break;
      case OutputFormat::Dot:
        for (const CatalogRecord& r : records) {
          os << to_dot(build_union_digraph(group_from_record(r).elements()), r.id);
        }
        break;
      case OutputFormat::Text:
        err << "error: export formats are structured, csv and dot\n";
        return kExitUsage;
    }
    return kExitOk;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ResourceLimitError& e) {
    err << "error: " << e.what() << '\n';
    return kExitResource;
  }
}

}  // namespace ngg
