#include <iostream>

#include <CLI11.hpp>

#include "filt_cli/commands.hpp"
#include "filt_cli/documents.hpp"

int main(int argc, char** argv) {
  using namespace filt::cli;

  CLI::App app{"Filters of finite commutative monoids and their spaces"};
  app.require_subcommand(1);

  std::string file;
  std::string second;
  std::string format = "dot";
  std::string sob_format = "json";
  std::string laws = "all";
  bool        use_corpus = false;
  unsigned    jobs = 0;
  std::vector<std::string> files;

  auto* filters = app.add_subcommand("filters", "List every filter of a monoid or ring");
  filters->add_option("file", file, "Monoid or ring document")->required();

  auto* filtrum = app.add_subcommand("filtrum", "Render the filtrum as DOT or JSON");
  filtrum->add_option("file", file, "Monoid or ring document")->required();
  filtrum->add_option("--format", format, "dot or json")->check(CLI::IsMember({"dot", "json"}));

  auto* fix = app.add_subcommand("fixfilters", "Fixfilters on both sides of a homomorphism");
  fix->add_option("file", file, "monoid_hom document")->required();

  auto* characterize = app.add_subcommand("characterize", "Decide whether a space is a filtrum");
  characterize->add_option("file", file, "Space document")->required();

  auto* sobrify = app.add_subcommand("sobrify", "Sobrification of a space");
  sobrify->add_option("file", file, "Space document")->required();
  sobrify->add_option("--format", sob_format, "json (space document) or dot (unit map)")
      ->check(CLI::IsMember({"dot", "json"}));

  auto* special = app.add_subcommand("specialization", "Specialization order of a space as DOT");
  special->add_option("file", file, "Space document")->required();

  auto* product = app.add_subcommand("product", "Product of two monoids as a monoid document");
  product->add_option("first", file, "Monoid or ring document")->required();
  product->add_option("second", second, "Monoid or ring document")->required();

  auto* suite = app.add_subcommand("suite", "Check the law suites");
  suite->add_option("files", files, "Documents to check");
  suite->add_flag("--corpus", use_corpus, "Check the built-in corpus");
  suite->add_option("--laws", laws, "ch1, ch2, ch3 or all")->check(CLI::IsMember({"ch1", "ch2", "ch3", "all"}));
  suite->add_option("--jobs", jobs, "Worker threads");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    if (e.get_exit_code() == 0) {
      return app.exit(e);
    }
    filt::cli::json diag{{"error", "UsageError"}, {"message", e.what()}, {"witness", filt::cli::json::array()}};
    std::cerr << diag.dump() << '\n';
    return exit_invalid;
  }

  auto    limits = filt::Limits::from_environment();
  Outcome result;
  if (*filters) {
    result = cmd_filters(file, limits);
  } else if (*filtrum) {
    result = cmd_filtrum(file, format, limits);
  } else if (*fix) {
    result = cmd_fixfilters(file, limits);
  } else if (*characterize) {
    result = cmd_characterize(file, limits);
  } else if (*sobrify) {
    result = cmd_sobrify(file, sob_format, limits);
  } else if (*special) {
    result = cmd_specialization(file, limits);
  } else if (*product) {
    result = cmd_product(file, second, limits);
  } else if (*suite) {
    if (use_corpus == !files.empty()) {
      std::cerr << "{\"error\":\"ShapeError\",\"message\":\"give either documents or --corpus\",\"witness\":[]}\n";
      return exit_invalid;
    }
    if (jobs == 0) {
      jobs = limits.jobs;
    }
    limits.jobs = jobs;
    result      = cmd_suite(use_corpus ? std::vector<std::string>{} : files, laws, jobs, limits);
  }
  std::cout << result.out;
  std::cerr << result.err;
  return result.code;
}
