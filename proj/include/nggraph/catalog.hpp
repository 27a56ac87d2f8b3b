#pragma once

// Persisted catalog records and the machine-readable output formats:
// JSONL (one record per line), CSV with a fixed column set, and DOT.
// Records use 1-based numeric tuples; letters are display-only. A record
// carries everything needed to rebuild and re-validate its group.

#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include <json.hpp>

#include "nggraph/analysis.hpp"
#include "nggraph/digraph.hpp"
#include "nggraph/groups.hpp"
#include "nggraph/verify.hpp"

namespace ngg {

// Stable 64-bit FNV-1a over the canonical element list; the catalog key.
inline std::string group_id(const std::vector<Transformation>& elements) {
  std::string canonical = "n=" + std::to_string(elements.front().arity());
  for (const Transformation& f : elements) {
    canonical += ';';
    canonical += format_transformation(f, TupleStyle::OneBased);
  }
  std::uint64_t hash = 1469598103934665603ULL;
  for (unsigned char byte : canonical) {
    hash ^= byte;
    hash *= 1099511628211ULL;
  }
  std::ostringstream out;
  out << std::hex;
  out.width(16);
  out.fill('0');
  out << hash;
  return out.str();
}

struct CatalogRecord {
  int n = 0;
  std::string id;
  int order = 0;
  int rank = 0;
  std::vector<std::string> elements;  // 1-based tuples, canonical order
  std::string identity;
  std::vector<int> ng_fix;  // 1-based points
  std::vector<int> degree_out, degree_in, degree_total;
  int delta_min = 0;
  int delta_max = 0;
  std::vector<std::pair<int, int>> fix_degrees;  // (1-based vertex, degree)
  int vertices = 0;
  long long arcs = 0;
  std::vector<std::vector<int>> adjacency;
  bool weakly_connected = false;
  bool quasi_strongly_connected = false;
  bool strongly_connected = false;
  std::vector<int> roots;                  // 1-based
  std::optional<std::vector<int>> witness;  // 1-based, when not strong

  std::string eulerian;

  friend bool operator==(const CatalogRecord&, const CatalogRecord&) = default;
};

namespace detail {

inline std::vector<int> one_based(const PointSet& s) {
  std::vector<int> out;
  for (int x : s.members()) out.push_back(x + 1);
  return out;
}

}  // namespace detail

inline CatalogRecord make_record(const NGGroup& g) {
  CatalogRecord record;
  record.n = g.arity();
  record.id = group_id(g.elements());
  record.order = g.order();
  record.rank = g.rank();
  for (const Transformation& f : g.elements()) {
    record.elements.push_back(format_transformation(f, TupleStyle::OneBased));
  }
  record.identity = format_transformation(g.identity_element(), TupleStyle::OneBased);
  record.ng_fix = detail::one_based(image(g.identity_element()));

  const UnionDigraph d = build_union_digraph(g.elements());
  const DegreeProfile profile = degree_profile(d);
  record.degree_out = profile.out_degree;
  record.degree_in = profile.in_degree;
  record.degree_total = profile.total;
  record.delta_min = profile.delta_min;
  record.delta_max = profile.delta_max;
  for (const auto& [v, degree] : profile.fix_degrees) record.fix_degrees.emplace_back(v + 1, degree);
  record.vertices = d.vertex_count();
  record.arcs = d.arc_count();
  record.adjacency = adjacency_matrix(d);

  const ConnectivityVerdict verdict = analyze_connectivity(d.graph());
  record.weakly_connected = verdict.weakly_connected;
  record.quasi_strongly_connected = verdict.quasi_strongly_connected;
  record.strongly_connected = verdict.strongly_connected;
  record.roots = detail::one_based(verdict.roots);
  if (verdict.witness) record.witness = detail::one_based(*verdict.witness);
  record.eulerian = to_string(eulerian_class(d.graph()));
  return record;
}

inline nlohmann::ordered_json record_to_json(const CatalogRecord& r) {
  nlohmann::ordered_json j;
  j["id"] = r.id;
  j["n"] = r.n;
  j["order"] = r.order;
  j["rank"] = r.rank;
  j["identity"] = r.identity;
  j["elements"] = r.elements;
  j["ng_fix"] = r.ng_fix;
  nlohmann::ordered_json degrees;
  degrees["out"] = r.degree_out;
  degrees["in"] = r.degree_in;
  degrees["total"] = r.degree_total;
  degrees["min"] = r.delta_min;
  degrees["max"] = r.delta_max;
  nlohmann::ordered_json fix = nlohmann::ordered_json::object();
  for (const auto& [v, degree] : r.fix_degrees) fix[std::to_string(v)] = degree;
  degrees["fix"] = fix;
  j["degrees"] = degrees;
  j["size"] = {{"vertices", r.vertices}, {"arcs", r.arcs}};
  j["adjacency"] = r.adjacency;
  nlohmann::ordered_json connectivity;
  connectivity["weak"] = r.weakly_connected;
  connectivity["quasi_strong"] = r.quasi_strongly_connected;
  connectivity["strong"] = r.strongly_connected;
  connectivity["roots"] = r.roots;
  if (r.witness) {
    connectivity["witness"] = *r.witness;
  } else {
    connectivity["witness"] = nullptr;
  }
  j["connectivity"] = connectivity;
  j["eulerian_class"] = r.eulerian;
  return j;
}

inline CatalogRecord record_from_json(const nlohmann::json& j) {
  CatalogRecord r;
  r.id = j.at("id").get<std::string>();
  r.n = j.at("n").get<int>();
  r.order = j.at("order").get<int>();
  r.rank = j.at("rank").get<int>();
  r.identity = j.at("identity").get<std::string>();
  r.elements = j.at("elements").get<std::vector<std::string>>();
  r.ng_fix = j.at("ng_fix").get<std::vector<int>>();
  const auto& degrees = j.at("degrees");
  r.degree_out = degrees.at("out").get<std::vector<int>>();
  r.degree_in = degrees.at("in").get<std::vector<int>>();
  r.degree_total = degrees.at("total").get<std::vector<int>>();
  r.delta_min = degrees.at("min").get<int>();
  r.delta_max = degrees.at("max").get<int>();
  for (const auto& [key, value] : degrees.at("fix").items()) {
    r.fix_degrees.emplace_back(std::stoi(key), value.get<int>());
  }
  r.vertices = j.at("size").at("vertices").get<int>();
  r.arcs = j.at("size").at("arcs").get<long long>();
  r.adjacency = j.at("adjacency").get<std::vector<std::vector<int>>>();
  const auto& connectivity = j.at("connectivity");
  r.weakly_connected = connectivity.at("weak").get<bool>();
  r.quasi_strongly_connected = connectivity.at("quasi_strong").get<bool>();
  r.strongly_connected = connectivity.at("strong").get<bool>();
  r.roots = connectivity.at("roots").get<std::vector<int>>();
  if (!connectivity.at("witness").is_null()) {
    r.witness = connectivity.at("witness").get<std::vector<int>>();
  }
  r.eulerian = j.at("eulerian_class").get<std::string>();
  return r;
}

// Rebuilds the group from the stored tuples; the group invariants are
// re-validated on the way.
inline NGGroup group_from_record(const CatalogRecord& r) {
  std::vector<Transformation> elements;
  for (const std::string& tuple : r.elements) {
    elements.push_back(parse_transformation(tuple, r.n));
  }
  return NGGroup::from_elements(std::move(elements));
}

inline void write_records_jsonl(std::ostream& out, const std::vector<CatalogRecord>& records) {
  for (const CatalogRecord& r : records) out << record_to_json(r).dump() << '\n';
}

inline std::vector<CatalogRecord> read_records_jsonl(std::istream& in) {
  std::vector<CatalogRecord> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    out.push_back(record_from_json(nlohmann::json::parse(line)));
  }
  return out;
}

namespace detail {

inline std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string quoted = "\"";
  for (char c : field) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

template <typename T>
std::string joined(const std::vector<T>& values, char sep = ';') {
  std::string out;
  for (const T& v : values) {
    if (!out.empty()) out += sep;
    if constexpr (std::is_same_v<T, std::string>) {
      out += v;
    } else {
      out += std::to_string(v);
    }
  }
  return out;
}

}  // namespace detail

inline constexpr const char* kCsvHeader =
    "id,n,order,rank,identity,elements,ng_fix,vertices,arcs,delta_min,delta_max,"
    "degrees_total,weakly_connected,quasi_strongly_connected,strongly_connected,"
    "roots,eulerian_class";

inline void write_records_csv(std::ostream& out, const std::vector<CatalogRecord>& records) {
  out << kCsvHeader << '\n';
  for (const CatalogRecord& r : records) {
    out << r.id << ',' << r.n << ',' << r.order << ',' << r.rank << ','
        << detail::csv_quote(r.identity) << ',' << detail::csv_quote(detail::joined(r.elements))
        << ',' << detail::joined(r.ng_fix) << ',' << r.vertices << ',' << r.arcs << ','
        << r.delta_min << ',' << r.delta_max << ',' << detail::joined(r.degree_total) << ','
        << (r.weakly_connected ? "true" : "false") << ','
        << (r.quasi_strongly_connected ? "true" : "false") << ','
        << (r.strongly_connected ? "true" : "false") << ',' << detail::joined(r.roots) << ','
        << r.eulerian << '\n';
  }
}

// One node line per vertex and one edge line per distinct arc, parallel
// arcs collapsed into an integer multiplicity label.
inline std::string to_dot(const UnionDigraph& d, const std::string& name) {
  const int n = d.vertex_count();
  auto label = [&](int v) {
    return n <= 26 ? std::string(1, static_cast<char>('a' + v)) : std::to_string(v + 1);
  };
  std::string out = "digraph \"" + name + "\" {\n";
  for (int v = 0; v < n; ++v) out += "  \"" + label(v) + "\";\n";
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int count = d.graph().count(i, j);
      if (count == 0) continue;
      out += "  \"" + label(i) + "\" -> \"" + label(j) + "\" [label=\"" +
             std::to_string(count) + "\"];\n";
    }
  }
  out += "}\n";
  return out;
}

// Verification reports as JSON; the elapsed time is deliberately not
// serialized so identical runs stay byte-identical.
inline nlohmann::ordered_json report_to_json(const VerificationReport& report) {
  nlohmann::ordered_json j;
  j["id"] = to_string(report.prop);
  j["statement"] = proposition_statement(report.prop);
  j["sweep"] = report.sweep;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const SweepRow& row : report.rows) {
    nlohmann::ordered_json r;
    r["domain"] = row.domain;
    r["n"] = row.n;
    r["instances"] = row.instances;
    r["verdict"] = to_string(row.verdict);
    r["claim_applies"] = row.claim_applies;
    r["diverges"] = row.diverges;
    rows.push_back(r);
  }
  j["rows"] = rows;
  j["verdict"] = to_string(report.verdict);
  j["paper_expectation"] = to_string(report.expectation);
  nlohmann::ordered_json counterexamples = nlohmann::ordered_json::array();
  for (const Counterexample& ce : report.counterexamples) {
    nlohmann::ordered_json c;
    c["domain"] = ce.domain;
    std::vector<std::string> tuples;
    for (const Transformation& f : ce.group) {
      tuples.push_back(format_transformation(f, TupleStyle::OneBased));
    }
    c["elements"] = tuples;
    c["condition"] = ce.condition;
    c["observed"] = ce.observed;
    counterexamples.push_back(c);
  }
  j["counterexamples"] = counterexamples;
  j["counterexample_total"] = report.counterexample_total;
  return j;
}

inline nlohmann::ordered_json census_to_json(const CensusFinding& finding) {
  nlohmann::ordered_json j;
  j["id"] = finding.id;
  j["n"] = finding.n;
  j["claimed"] = finding.claimed;
  nlohmann::ordered_json computed = nlohmann::ordered_json::object();
  for (const auto& [order, count] : finding.computed) computed[std::to_string(order)] = count;
  j["computed"] = computed;
  j["diverges"] = finding.diverges;
  return j;
}

}  // namespace ngg
