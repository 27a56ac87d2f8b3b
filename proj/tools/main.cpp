// nggraph: enumerate groups of non-permutation transformations, inspect
// their union digraphs, verify the catalogued propositions, and export
// records as JSONL, CSV or DOT.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nggraph/cli.hpp"

namespace {

// "--n 3" or "--n 3..5"
bool parse_n_range(const std::string& text, ngg::RunConfig& config) {
  const std::size_t dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      config.n = std::stoi(text);
      config.n_hi = 0;
    } else {
      config.n = std::stoi(text.substr(0, dots));
      config.n_hi = std::stoi(text.substr(dots + 2));
    }
  } catch (const std::exception&) {
    return false;
  }
  return config.n >= 1 && (config.n_hi == 0 || config.n_hi >= config.n);
}

void add_output_flags(CLI::App* cmd, ngg::RunConfig& config, std::string& format) {
  cmd->add_option("--format", format, "Output format: text, structured, csv or dot");
  cmd->add_option("--out", config.out_path, "Write output to this file instead of stdout");
}

void add_enumeration_flags(CLI::App* cmd, ngg::RunConfig& config) {
  cmd->add_option("--order", config.order_filter, "Keep only groups of this order");
  cmd->add_flag("--include-trivial", config.include_trivial, "Include one-element groups");
  cmd->add_option("--arity-cap", config.arity_cap, "Largest point count accepted");
  cmd->add_option("--closure-limit", config.closure_limit, "Closure size limit");
  cmd->add_option("--generator-bound", config.generator_bound,
                  "Generator subset size for subgroup search");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Groups of non-permutation transformations and their union digraphs"};
  app.require_subcommand(1);

  ngg::RunConfig config;
  std::string n_text = "3";
  std::string format_text = "text";
  std::string loop_policy_text = "count-as-odd-cycle";
  std::vector<std::string> tuples;
  std::vector<std::string> props;
  std::string catalog_path;
  std::string record_id;
  bool all_props = false;

  CLI::App* enumerate = app.add_subcommand("enumerate", "List all NG-groups on n points");
  enumerate->add_option("--n", n_text, "Point count");
  add_enumeration_flags(enumerate, config);
  add_output_flags(enumerate, config, format_text);

  CLI::App* inspect = app.add_subcommand("inspect", "Classify and profile a transformation set");
  inspect->add_option("tuples", tuples, "Element tuples, e.g. \"(a,a,c)\" \"(c,c,a)\"");
  inspect->add_option("--catalog", catalog_path, "Catalog file (JSONL) to look up --id in");
  inspect->add_option("--id", record_id, "Record id inside --catalog");
  inspect->add_option("--loop-policy", loop_policy_text,
                      "Bipartiteness loop policy: count-as-odd-cycle or ignore");
  add_output_flags(inspect, config, format_text);

  CLI::App* verify = app.add_subcommand("verify", "Check propositions against sweeps");
  verify->add_option("--n", n_text, "Point count or range, e.g. 3 or 3..5");
  verify->add_option("--prop", props, "Proposition ids, e.g. P3_4");
  verify->add_flag("--all", all_props, "Run every proposition");
  verify->add_flag("--strict", config.strict, "Any divergence fails the run");
  verify->add_option("--seed", config.seed, "Seed for generated digraphs");
  verify->add_option("--random-count", config.random_count, "Generated digraphs per sweep");
  verify->add_option("--counterexample-cap", config.counterexample_cap,
                     "Counterexamples kept per report");
  verify->add_option("--expectations", config.expectations_path,
                     "JSON file replacing the expected-divergence table");
  verify->add_flag("--include-trivial", config.include_trivial, "Include one-element groups");
  verify->add_option("--arity-cap", config.arity_cap, "Largest point count accepted");
  add_output_flags(verify, config, format_text);

  CLI::App* exp = app.add_subcommand("export", "Write records or DOT graphs");
  exp->add_option("tuples", tuples, "Element tuples of one set; omit to export the catalog");
  exp->add_option("--n", n_text, "Point count for catalog export");
  add_enumeration_flags(exp, config);
  add_output_flags(exp, config, format_text);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ngg::kExitOk : ngg::kExitUsage;
  }

  if (!parse_n_range(n_text, config)) {
    std::cerr << "error: bad --n value " << n_text << '\n';
    return ngg::kExitUsage;
  }
  const auto format = ngg::output_format_from_string(format_text);
  if (!format) {
    std::cerr << "error: unknown format " << format_text << '\n';
    return ngg::kExitUsage;
  }
  config.format = *format;
  if (loop_policy_text == "ignore") {
    config.loop_policy = ngg::LoopPolicy::Ignore;
  } else if (loop_policy_text != "count-as-odd-cycle") {
    std::cerr << "error: unknown loop policy " << loop_policy_text << '\n';
    return ngg::kExitUsage;
  }
  if (exp->parsed() && config.format == ngg::OutputFormat::Text) {
    config.format = ngg::OutputFormat::Structured;
  }

  try {
    if (enumerate->parsed()) return ngg::cmd_enumerate(config, std::cout, std::cerr);
    if (inspect->parsed()) {
      return ngg::cmd_inspect(config, tuples, catalog_path, record_id, std::cout, std::cerr);
    }
    if (verify->parsed()) return ngg::cmd_verify(config, props, all_props, std::cout, std::cerr);
    if (exp->parsed()) return ngg::cmd_export(config, tuples, std::cout, std::cerr);
  } catch (const ngg::ResourceLimitError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return ngg::kExitResource;
  } catch (const ngg::InvariantViolation& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 4;
  } catch (const ngg::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return ngg::kExitUsage;
  }
  return ngg::kExitUsage;
}
