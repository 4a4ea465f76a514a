// bnet: asynchronous Boolean network analysis from the command line.
//
// Exit codes: 0 success (all checks passed or skipped), 1 verification
// failure, 2 usage, format, or size errors.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bnet/asyncdyn.hpp"
#include "bnet/constructions.hpp"
#include "bnet/embedmono.hpp"
#include "bnet/io.hpp"
#include "bnet/netcore.hpp"
#include "bnet/theorems.hpp"

namespace {

struct GlobalOptions {
  bool force = false;
  std::uint64_t seed = 0;
  std::uint32_t count = 0;
  unsigned n = 0;
};

unsigned require_n(const GlobalOptions& global) {
  if (global.n == 0)
    throw bnet::FormatError("this command needs --n");
  return global.n;
}

void print_report_line(const bnet::VerificationReport& report) {
  if (report.skipped) {
    std::cout << "[skip] " << report.suite << " " << report.instance << ": "
              << report.skip_reason << "\n";
    return;
  }
  std::cout << (report.passed() ? "[pass] " : "[FAIL] ") << report.suite << " "
            << report.instance << " (" << report.checks.size() << " checks, "
            << report.millis << " ms)\n";
  for (const bnet::CheckRecord& check : report.checks)
    if (!check.pass)
      std::cout << "       " << check.id << ": "
                << check.counterexample.value_or("failed") << "\n";
}

int run_verify(const GlobalOptions& global, const std::string& suite_name,
               const std::string& network_path,
               const std::string& construction, const std::string& report_path,
               bool stable) {
  const bnet::Suite suite = bnet::parse_suite(suite_name);
  std::vector<bnet::VerificationReport> reports;

  const unsigned selected = (!network_path.empty() ? 1u : 0u) +
                            (!construction.empty() ? 1u : 0u) +
                            (global.count > 0 ? 1u : 0u);
  if (selected != 1)
    throw bnet::FormatError(
        "choose exactly one input: --network FILE, --construction graycode, "
        "or --count N for a seeded corpus");

  const auto run_single = [&](const bnet::BooleanNetwork& f,
                              const std::string& label) {
    if (suite == bnet::Suite::robert || suite == bnet::Suite::all)
      reports.push_back(bnet::check_robert(f, label));
    if (suite == bnet::Suite::monotone_reach || suite == bnet::Suite::all)
      reports.push_back(bnet::check_monotone_reach(f, label));
    if (suite == bnet::Suite::embedding || suite == bnet::Suite::all)
      reports.push_back(bnet::check_embedding_suite(f, label));
    if (suite == bnet::Suite::fixed_point_counts || suite == bnet::Suite::all)
      reports.push_back(bnet::check_fixed_point_counts(f, label));
  };

  if (!network_path.empty()) {
    run_single(bnet::read_network_file(network_path), network_path);
  } else if (!construction.empty()) {
    if (construction != "graycode")
      throw bnet::FormatError("unknown construction '" + construction +
                              "' (expected graycode)");
    const unsigned n = require_n(global);
    run_single(bnet::gray_code_network(n).network,
               "graycode(n=" + std::to_string(n) + ")");
  } else {
    reports = bnet::run_corpus(suite, global.count, require_n(global),
                               global.seed);
  }

  std::size_t passed = 0, failed = 0, skipped = 0;
  for (const bnet::VerificationReport& report : reports) {
    print_report_line(report);
    if (report.skipped)
      ++skipped;
    else if (report.passed())
      ++passed;
    else
      ++failed;
  }
  std::cout << reports.size() << " reports: " << passed << " passed, "
            << failed << " failed, " << skipped << " skipped\n";

  if (!report_path.empty())
    bnet::write_text_file_atomic(report_path,
                                 bnet::serialize_reports(reports, !stable));
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Asynchronous Boolean network toolkit"};
  app.require_subcommand(1);

  GlobalOptions global;
  app.add_flag("--force", global.force, "bypass size and hypothesis caps");
  app.add_option("--seed", global.seed, "base seed for generated corpora");
  app.add_option("--count", global.count, "number of corpus instances");
  app.add_option("--n", global.n, "component count for constructions");

  std::string network_path, literal, schedule_text, out_path, from_literal,
      to_literal, suite_name, construction, report_path;
  bool stable = false;

  CLI::App* eval = app.add_subcommand("eval", "evaluate f(x) or a trajectory");
  eval->add_option("network", network_path, "network JSON file")->required();
  eval->add_option("configuration", literal, "configuration literal")
      ->required();
  eval->add_option("--schedule", schedule_text,
                   "comma-separated component indices");

  CLI::App* graycode =
      app.add_subcommand("graycode", "write the Gray-code path network");
  graycode->add_option("output", out_path, "output JSON file")->required();

  CLI::App* embed_cmd = app.add_subcommand(
      "embed", "write the monotone 2n-component host network");
  embed_cmd->add_option("input", network_path, "network JSON file")->required();
  embed_cmd->add_option("output", out_path, "output JSON file")->required();

  CLI::App* igraph =
      app.add_subcommand("igraph", "write the signed interaction graph as DOT");
  igraph->add_option("input", network_path, "network JSON file")->required();
  igraph->add_option("output", out_path, "output DOT file")->required();

  CLI::App* asyncgraph =
      app.add_subcommand("asyncgraph", "write the asynchronous graph as DOT");
  asyncgraph->add_option("input", network_path, "network JSON file")
      ->required();
  asyncgraph->add_option("output", out_path, "output DOT file")->required();

  CLI::App* distance_cmd = app.add_subcommand(
      "distance", "shortest asynchronous path length between two states");
  distance_cmd->add_option("input", network_path, "network JSON file")
      ->required();
  distance_cmd->add_option("from", from_literal, "start literal")->required();
  distance_cmd->add_option("to", to_literal, "target literal")->required();

  CLI::App* diameter_cmd =
      app.add_subcommand("diameter", "largest finite asynchronous distance");
  diameter_cmd->add_option("input", network_path, "network JSON file")
      ->required();

  CLI::App* fixedpoints =
      app.add_subcommand("fixedpoints", "list all fixed points");
  fixedpoints->add_option("input", network_path, "network JSON file")
      ->required();

  CLI::App* verify =
      app.add_subcommand("verify", "run a verification suite, write a report");
  verify->add_option("--suite", suite_name,
                     "robert, monotone-reach, embedding, fixed-point-counts, "
                     "or all")
      ->required();
  verify->add_option("--network", network_path, "network JSON file");
  verify->add_option("--construction", construction,
                     "built-in instance (graycode, needs --n)");
  verify->add_option("--report", report_path, "write the JSON report here");
  verify->add_flag("--stable", stable,
                   "zero timing fields for byte-comparable reports");

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (eval->parsed()) {
      const bnet::BooleanNetwork f = bnet::read_network_file(network_path);
      const bnet::Config x = bnet::parse_literal(literal, f.n());
      if (schedule_text.empty()) {
        std::cout << f.evaluate(x).literal() << "\n";
      } else {
        const bnet::Schedule s = bnet::parse_schedule(schedule_text, f.n());
        for (const bnet::Config& state : bnet::simulate(f, x, s))
          std::cout << state.literal() << "\n";
      }
    } else if (graycode->parsed()) {
      bnet::write_network_file(
          out_path, bnet::gray_code_network(require_n(global)).network);
    } else if (embed_cmd->parsed()) {
      const bnet::BooleanNetwork f = bnet::read_network_file(network_path);
      bnet::write_network_file(out_path, bnet::embed(f, global.force));
    } else if (igraph->parsed()) {
      const bnet::BooleanNetwork f = bnet::read_network_file(network_path);
      bnet::write_text_file_atomic(
          out_path, bnet::dot_interaction_graph(bnet::interaction_graph(f)));
    } else if (asyncgraph->parsed()) {
      const bnet::BooleanNetwork f = bnet::read_network_file(network_path);
      bnet::write_text_file_atomic(
          out_path,
          bnet::dot_async_graph(bnet::async_graph(f, global.force)));
    } else if (distance_cmd->parsed()) {
      const bnet::BooleanNetwork f = bnet::read_network_file(network_path);
      const bnet::Distance d =
          bnet::distance(f, bnet::parse_literal(from_literal, f.n()),
                         bnet::parse_literal(to_literal, f.n()));
      if (d)
        std::cout << *d << "\n";
      else
        std::cout << "unreachable\n";
    } else if (diameter_cmd->parsed()) {
      const bnet::BooleanNetwork f = bnet::read_network_file(network_path);
      std::cout << bnet::diameter(f, global.force) << "\n";
    } else if (fixedpoints->parsed()) {
      const bnet::BooleanNetwork f = bnet::read_network_file(network_path);
      for (const bnet::Config& x : bnet::fixed_points(f))
        std::cout << x.literal() << "\n";
    } else if (verify->parsed()) {
      return run_verify(global, suite_name, network_path, construction,
                        report_path, stable);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
