#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "nggraph/catalog.hpp"
#include "nggraph/cli.hpp"

using namespace ngg;

namespace {

std::vector<Transformation> set_of(std::initializer_list<const char*> tuples) {
  std::vector<Transformation> out;
  for (const char* s : tuples) out.push_back(parse_transformation(s));
  return out;
}

NGGroup ng1() { return NGGroup::from_elements(set_of({"(a,a,c)", "(c,c,a)"})); }

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST_CASE("records round-trip through JSON and rebuild their group") {
  std::vector<NGGroup> groups = enumerate_ng_groups(3);
  groups.push_back(h_class_group(parse_transformation("(1,1,3,4)")));
  for (const NGGroup& g : groups) {
    const CatalogRecord record = make_record(g);
    const CatalogRecord reparsed = record_from_json(record_to_json(record));
    CHECK(reparsed == record);

    const NGGroup rebuilt = group_from_record(reparsed);
    CHECK(rebuilt.elements() == g.elements());
    CHECK(classify_set(rebuilt.elements()).tag == SetTag::Group);
    CHECK(make_record(rebuilt) == record);
  }
}

TEST_CASE("record fields for the first 3-point group") {
  const CatalogRecord r = make_record(ng1());
  CHECK(r.n == 3);
  CHECK(r.order == 2);
  CHECK(r.rank == 2);
  CHECK(r.elements == std::vector<std::string>{"(1,1,3)", "(3,3,1)"});
  CHECK(r.identity == "(1,1,3)");
  CHECK(r.ng_fix == std::vector<int>{1, 3});
  CHECK(r.degree_total == std::vector<int>{5, 2, 5});
  CHECK(r.delta_min == 2);
  CHECK(r.delta_max == 5);
  CHECK(r.vertices == 3);
  CHECK(r.arcs == 6);
  CHECK(r.adjacency == std::vector<std::vector<int>>{{1, 0, 1}, {1, 0, 1}, {1, 0, 1}});
  CHECK(r.quasi_strongly_connected);
  CHECK_FALSE(r.strongly_connected);
  CHECK(r.roots == std::vector<int>{2});
  CHECK(r.eulerian == "semi-eulerian");
}

TEST_CASE("group ids are canonical and stable") {
  const std::string id = group_id(ng1().elements());
  CHECK(id == group_id(ng1().elements()));
  CHECK(id == "42df99d9201c5e59");
  CHECK(id != group_id(set_of({"(a,b,a)", "(b,a,b)"})));
}

TEST_CASE("JSONL files round-trip") {
  std::vector<CatalogRecord> records;
  for (const NGGroup& g : enumerate_ng_groups(3)) records.push_back(make_record(g));

  std::stringstream file;
  write_records_jsonl(file, records);
  CHECK(read_records_jsonl(file) == records);
}

TEST_CASE("CSV output has the fixed header and one row per group") {
  std::vector<CatalogRecord> records;
  for (const NGGroup& g : enumerate_ng_groups(3)) records.push_back(make_record(g));
  std::stringstream out;
  write_records_csv(out, records);

  std::string line;
  REQUIRE(std::getline(out, line));
  CHECK(line == kCsvHeader);
  std::size_t rows = 0;
  while (std::getline(out, line)) {
    ++rows;
    CHECK(line.find(",\"(") != std::string::npos);  // quoted tuple fields
  }
  CHECK(rows == 6);
}

TEST_CASE("DOT output lists every arc with its multiplicity") {
  const std::string dot = to_dot(build_union_digraph(ng1().elements()), "ng1");
  CHECK(dot ==
        "digraph \"ng1\" {\n"
        "  \"a\";\n"
        "  \"b\";\n"
        "  \"c\";\n"
        "  \"a\" -> \"a\" [label=\"1\"];\n"
        "  \"a\" -> \"c\" [label=\"1\"];\n"
        "  \"b\" -> \"a\" [label=\"1\"];\n"
        "  \"b\" -> \"c\" [label=\"1\"];\n"
        "  \"c\" -> \"a\" [label=\"1\"];\n"
        "  \"c\" -> \"c\" [label=\"1\"];\n"
        "}\n");

  const std::string doubled = to_dot(
      build_union_digraph(set_of({"(1,1,4,4)", "(4,4,1,1)", "(1,4,1,4)", "(4,1,4,1)"})), "g");
  CHECK(doubled.find("\"a\" -> \"a\" [label=\"2\"]") != std::string::npos);
}

TEST_CASE("cmd_enumerate output modes") {
  RunConfig config;
  config.n = 3;
  std::ostringstream out, err;
  CHECK(cmd_enumerate(config, out, err) == kExitOk);
  CHECK(out.str().find("6 group(s)") != std::string::npos);
  CHECK(out.str().find("orders: 2:6") != std::string::npos);

  RunConfig empty = config;
  empty.order_filter = 5;
  std::ostringstream out2, err2;
  CHECK(cmd_enumerate(empty, out2, err2) == kExitOk);
  CHECK(out2.str().find("0 group(s)") != std::string::npos);

  RunConfig structured = config;
  structured.format = OutputFormat::Structured;
  std::ostringstream out3, err3;
  CHECK(cmd_enumerate(structured, out3, err3) == kExitOk);
  std::istringstream lines(out3.str());
  CHECK(read_records_jsonl(lines).size() == 6);

  RunConfig over_cap = config;
  over_cap.n = 9;
  std::ostringstream out4, err4;
  CHECK(cmd_enumerate(over_cap, out4, err4) == kExitResource);
}

TEST_CASE("consecutive runs are byte-identical") {
  RunConfig config;
  config.n = 4;
  config.format = OutputFormat::Structured;
  std::ostringstream a, b, err;
  CHECK(cmd_enumerate(config, a, err) == kExitOk);
  CHECK(cmd_enumerate(config, b, err) == kExitOk);
  CHECK(a.str() == b.str());

  RunConfig verify_config;
  verify_config.n = 3;
  verify_config.n_hi = 4;
  verify_config.format = OutputFormat::Structured;
  std::ostringstream va, vb, verr;
  CHECK(cmd_verify(verify_config, {}, true, va, verr) == kExitOk);
  CHECK(cmd_verify(verify_config, {}, true, vb, verr) == kExitOk);
  CHECK(va.str() == vb.str());
  CHECK_FALSE(va.str().empty());
}

TEST_CASE("cmd_inspect classifies sets and maps errors to exit codes") {
  RunConfig config;
  std::ostringstream out, err;
  CHECK(cmd_inspect(config, {"(a,a,c)", "(c,c,a)"}, "", "", out, err) == kExitOk);
  CHECK(out.str().find("classification: group") != std::string::npos);
  CHECK(out.str().find("roots: {b}") != std::string::npos);
  CHECK(out.str().find("eulerian: semi-eulerian") != std::string::npos);

  std::ostringstream out2, err2;
  CHECK(cmd_inspect(config, {"(a,b,c)"}, "", "", out2, err2) == kExitOk);
  CHECK(out2.str().find("not an NG set: contains a permutation") != std::string::npos);

  std::ostringstream out3, err3;
  CHECK(cmd_inspect(config, {"(1,1,4,4)", "(4,4,1,1)", "(1,4,1,4)", "(4,1,4,1)"}, "", "", out3,
                    err3) == kExitOk);
  CHECK(out3.str().find("union-of-groups (2 idempotents)") != std::string::npos);

  std::ostringstream out4, err4;
  CHECK(cmd_inspect(config, {"(a,1,c)"}, "", "", out4, err4) == kExitUsage);
  std::ostringstream out5, err5;
  CHECK(cmd_inspect(config, {}, "", "", out5, err5) == kExitUsage);
}

TEST_CASE("cmd_inspect can resolve catalog ids") {
  const std::string path = temp_path("nggraph_catalog_test.jsonl");
  {
    std::ofstream file(path);
    std::vector<CatalogRecord> records;
    for (const NGGroup& g : enumerate_ng_groups(3)) records.push_back(make_record(g));
    write_records_jsonl(file, records);
  }

  RunConfig config;
  std::ostringstream out, err;
  CHECK(cmd_inspect(config, {}, path, "42df99d9201c5e59", out, err) == kExitOk);
  CHECK(out.str().find("classification: group") != std::string::npos);

  std::ostringstream out2, err2;
  CHECK(cmd_inspect(config, {}, path, "ffffffffffffffff", out2, err2) == kExitUsage);
  std::filesystem::remove(path);
}

TEST_CASE("cmd_verify exit semantics") {
  RunConfig config;
  config.n = 3;
  config.n_hi = 4;

  std::ostringstream out, err;
  CHECK(cmd_verify(config, {}, true, out, err) == kExitOk);

  RunConfig strict = config;
  strict.strict = true;
  std::ostringstream out2, err2;
  CHECK(cmd_verify(strict, {}, true, out2, err2) == kExitDivergence);

  std::ostringstream out3, err3;
  CHECK(cmd_verify(config, {"P3_5"}, false, out3, err3) == kExitOk);  // expected divergence
  CHECK(out3.str().find("diverges") != std::string::npos);

  std::ostringstream out4, err4;
  CHECK(cmd_verify(config, {"P9_9"}, false, out4, err4) == kExitUsage);
  std::ostringstream out5, err5;
  CHECK(cmd_verify(config, {}, false, out5, err5) == kExitUsage);

  // With an emptied expectation table the same divergence turns unexpected.
  const std::string path = temp_path("nggraph_expectations_test.json");
  {
    std::ofstream file(path);
    file << "[]\n";
  }
  RunConfig overridden = config;
  overridden.expectations_path = path;
  std::ostringstream out6, err6;
  CHECK(cmd_verify(overridden, {"P3_5"}, false, out6, err6) == kExitDivergence);
  std::filesystem::remove(path);
}

TEST_CASE("cmd_export writes files and respects exit codes") {
  RunConfig config;
  config.n = 3;
  config.format = OutputFormat::Structured;

  const std::string path = temp_path("nggraph_export_test.jsonl");
  RunConfig to_file = config;
  to_file.out_path = path;
  std::ostringstream out, err;
  CHECK(cmd_export(to_file, {}, out, err) == kExitOk);
  {
    std::ifstream file(path);
    CHECK(read_records_jsonl(file).size() == 6);
  }
  std::filesystem::remove(path);

  RunConfig unwritable = config;
  unwritable.out_path = "/nonexistent-dir/records.jsonl";
  std::ostringstream out2, err2;
  CHECK(cmd_export(unwritable, {}, out2, err2) == kExitResource);

  RunConfig empty = config;
  empty.order_filter = 5;
  std::ostringstream out3, err3;
  CHECK(cmd_export(empty, {}, out3, err3) == kExitOk);
  CHECK(out3.str().empty());

  RunConfig dot = config;
  dot.format = OutputFormat::Dot;
  std::ostringstream out4, err4;
  CHECK(cmd_export(dot, {"(a,a,c)", "(c,c,a)"}, out4, err4) == kExitOk);
  CHECK(out4.str().find("digraph") != std::string::npos);
  CHECK(out4.str().find("\"b\" -> \"a\"") != std::string::npos);

  // Raw non-group sets only export as DOT.
  RunConfig bad = config;
  std::ostringstream out5, err5;
  CHECK(cmd_export(bad, {"(a,a,c)", "(b,c,a)"}, out5, err5) == kExitUsage);
}
