// Command-line front end: reads a problem document from a path or stdin.

#include <iostream>
#include <iterator>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "toricmf/error.hpp"
#include "toricmf/oracle.hpp"
#include "toricmf/report.hpp"

namespace {

enum Exit { kOk = 0, kInternal = 1, kInvalid = 2, kVerifyFailed = 3, kResource = 4 };

struct Options {
  std::string input = "-";
  bool verify = false;
  bool json = false;
  long long max_degree = 12;
  std::vector<std::string> orders;
  std::size_t pair_limit = toricmf::kDefaultPairLimit;
};

void add_common(CLI::App* app, Options& o, bool verify_flag) {
  app->add_option("input", o.input, "problem file (JSON); '-' or omitted reads stdin");
  if (verify_flag) app->add_flag("--verify", o.verify, "run the independent verification oracle");
  app->add_option("--max-degree", o.max_degree, "bound on |s|, |p| for the bounded ideal checks")
      ->check(CLI::PositiveNumber);
  app->add_option("--order", o.orders, "term order for Groebner checks: revlex or lex (repeatable)")
      ->allow_extra_args(false);
  app->add_option("--pair-limit", o.pair_limit, "S-pair budget for each completion; exceeding it exits with 4")
      ->check(CLI::PositiveNumber);
  app->add_flag("--json", o.json, "emit the structured report");
}

int run(const Options& o, toricmf::Section section) {
  const toricmf::ProblemSpec spec = [&] {
    if (o.input == "-") {
      std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
      return toricmf::parse_input(text);
    }
    return toricmf::parse_input_file(o.input);
  }();

  toricmf::AnalyzeOptions opts;
  opts.verify = o.verify || section == toricmf::Section::Verify;
  opts.verify_options.bound = o.max_degree;
  opts.verify_options.pair_limit = o.pair_limit;
  if (!o.orders.empty()) {
    opts.verify_options.orders.clear();
    for (const auto& name : o.orders) opts.verify_options.orders.push_back(toricmf::parse_tie_break(name));
  }

  const auto report = toricmf::run_analyze(spec, opts);
  std::cout << (o.json ? toricmf::render_structured(report) : toricmf::render_text(report, section));
  if (report.verification && !report.verification->passed()) return kVerifyFailed;
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Defining binomials and Macaulayfication of simplicial codimension-two semigroup rings"};
  app.require_subcommand(0, 1);

  Options top, gen, mac, ver;
  add_common(&app, top, true);
  auto* analyze = app.add_subcommand("analyze", "full report (default)");
  Options ana;
  add_common(analyze, ana, true);
  auto* generators = app.add_subcommand("generators", "defining binomials only");
  add_common(generators, gen, true);
  auto* macaulayfy = app.add_subcommand("macaulayfy", "Macaulayfication data only");
  add_common(macaulayfy, mac, true);
  auto* verify = app.add_subcommand("verify", "run the oracle; exit 3 when a check fails");
  add_common(verify, ver, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInvalid;
  }

  try {
    if (*analyze) return run(ana, toricmf::Section::All);
    if (*generators) return run(gen, toricmf::Section::Generators);
    if (*macaulayfy) return run(mac, toricmf::Section::Macaulayfy);
    if (*verify) return run(ver, toricmf::Section::Verify);
    return run(top, toricmf::Section::All);
  } catch (const toricmf::InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const toricmf::ResourceLimit& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kResource;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}
