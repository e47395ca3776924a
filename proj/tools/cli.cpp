#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "planar/effective_action.hpp"
#include "planar/json_io.hpp"
#include "planar/moments.hpp"
#include "planar/sampler.hpp"
#include "planar/suites.hpp"
#include "planar/trees.hpp"

namespace planar::cli {

namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Streams {
  std::istream& in;
  std::ostream& out;
};

std::string read_input(const std::string& path, Streams& s) {
  if (path == "-") return {std::istreambuf_iterator<char>(s.in), {}};
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open '" + path + "' for reading");
  return {std::istreambuf_iterator<char>(f), {}};
}

void write_output(const std::string& path, const std::string& text, Streams& s) {
  if (path == "-") {
    s.out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  f << text;
  if (!f) throw IoError("failed writing '" + path + "'");
}

void expect_role(const SeriesMeta& meta, const std::string& role) {
  if (!meta.role.empty() && meta.role != role)
    throw PreconditionError("expected a " + role + " document, got role '" + meta.role + "'");
}

// Options of each subcommand, bound to CLI11 before parsing.
struct Options {
  std::string input = "-";
  std::string output = "-";
  std::string csv;
  std::string from;
  std::string suite;
  SuiteOptions suite_opts;
  int marks = 0;
  SampleSpec sample;
  std::uint64_t seed = 0;
};

int cmd_cumulants(Options& o, Streams& s) {
  const auto doc = parse_series_document(read_input(o.input, s));
  expect_role(doc.meta, "moments");
  std::visit(
      [&](const auto& m) {
        const auto k = cumulants_from_moments(Moments(m));
        write_output(o.output, series_to_json(k.series(), {"cumulants", ""}), s);
      },
      doc.series);
  return kOk;
}

int cmd_moments(Options& o, Streams& s) {
  const auto doc = parse_series_document(read_input(o.input, s));
  expect_role(doc.meta, "cumulants");
  std::visit(
      [&](const auto& k) {
        const auto m = moments_from_cumulants(Cumulants(k));
        write_output(o.output, series_to_json(m.series(), {"moments", ""}), s);
      },
      doc.series);
  return kOk;
}

int cmd_effective_action(Options& o, Streams& s) {
  const auto doc = parse_series_document(read_input(o.input, s));
  std::string kind = o.from.empty() ? doc.meta.role : o.from;
  if (kind != "moments" && kind != "cumulants")
    throw PreconditionError("effective-action: input must have role moments or cumulants (or pass --from)");
  std::visit(
      [&](const auto& f) {
        using series_t = std::decay_t<decltype(f)>;
        const auto k = kind == "moments" ? cumulants_from_moments(Moments(series_t(f))) : Cumulants(series_t(f));
        const auto l = effective_action(k);
        write_output(o.output, effective_action_to_json(l), s);
        if (!o.csv.empty()) write_output(o.csv, l_table_csv(l), s);
      },
      doc.series);
  return kOk;
}

int cmd_verify(Options& o, Streams& s) {
  const auto result = run_suite(o.suite, o.suite_opts);
  write_output(o.output, suite_to_json(result), s);
  return result.passed() ? kOk : kViolations;
}

int cmd_trees(Options& o, Streams& s) {
  write_output(o.output, tree_listing_to_json(o.marks, enumerate_admissible(o.marks)), s);
  return kOk;
}

int cmd_sample(Options& o, Streams& s) {
  const auto m = sample_moments(o.sample, o.seed);
  write_output(o.output, series_to_json(m, {"moments", "x"}), s);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Planar functional calculus: non-commutative series, free cumulants, effective actions and trees",
               "planar"};
  app.require_subcommand(1);
  app.footer(
      "Exit codes: 0 success, 1 identity violations (verify), 2 malformed JSON,\n"
      "3 precondition failure, 4 file I/O error.");
  Options o;

  auto* cum = app.add_subcommand("cumulants", "Free cumulants from a moment series document");
  auto* mom = app.add_subcommand("moments", "Moment series from a free cumulant series document");
  for (auto* sub : {cum, mom}) {
    sub->add_option("-i,--input", o.input, "Input series JSON ('-' for stdin)")->capture_default_str();
    sub->add_option("-o,--output", o.output, "Output series JSON ('-' for stdout)")->capture_default_str();
  }

  auto* ea = app.add_subcommand("effective-action", "Effective action L from moments or cumulants");
  ea->add_option("-i,--input", o.input, "Moments or cumulants JSON ('-' for stdin)")->capture_default_str();
  ea->add_option("-o,--output", o.output, "Effective action JSON ('-' for stdout)")->capture_default_str();
  ea->add_option("--csv", o.csv, "Also write the coefficient table (header word,value) to this path");
  ea->add_option("--from", o.from, "Treat the input as 'moments' or 'cumulants', overriding its role tag")
      ->check(CLI::IsMember({"moments", "cumulants"}));

  auto* ver = app.add_subcommand("verify", "Run a randomized exact property suite; exit 1 on any violation");
  ver->add_option("--suite", o.suite, "Suite to run")->required()->check(CLI::IsMember(suite_names()));
  ver->add_option("--seed", o.suite_opts.seed, "Random seed")->capture_default_str();
  ver->add_option("--degree", o.suite_opts.degree,
                  "Truncation degree (theorem: target y-degree); 0 picks the suite default")
      ->capture_default_str();
  ver->add_option("--alphabet", o.suite_opts.alphabet, "Number of letters; 0 picks the suite default")
      ->capture_default_str();
  ver->add_option("--instances", o.suite_opts.instances, "Random instances; 0 picks the suite default")
      ->capture_default_str();
  ver->add_option("--max-length", o.suite_opts.max_length,
                  "theorem suite: longest derivative word; 0 picks the default (4)")
      ->capture_default_str();
  ver->add_option("-o,--output", o.output, "Report JSON ('-' for stdout)")->capture_default_str();

  auto* tr = app.add_subcommand("trees", "List admissible trees with their Feynman terms");
  tr->add_option("--n", o.marks, "Number of marks (root plus leaves), at least 2")->required();
  tr->add_option("-o,--output", o.output, "Listing JSON ('-' for stdout)")->capture_default_str();

  auto* smp = app.add_subcommand("sample-moments", "Estimate moments of independent GUE matrices");
  smp->add_option("--model", o.sample.model, "Random matrix model")->capture_default_str()->check(
      CLI::IsMember({"gue"}));
  smp->add_option("--N", o.sample.matrix_size, "Matrix dimension (2..1024)")->capture_default_str();
  smp->add_option("--samples", o.sample.samples, "Number of independent draws")->capture_default_str();
  smp->add_option("--letters", o.sample.letters, "Independent matrices per draw")->capture_default_str();
  smp->add_option("--degree", o.sample.max_degree, "Largest word length (1..8)")->capture_default_str();
  smp->add_option("--seed", o.seed, "Random seed")->capture_default_str();
  smp->add_option("-o,--output", o.output, "Moment series JSON ('-' for stdout)")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  Streams s{in, out};
  try {
    if (cum->parsed()) return cmd_cumulants(o, s);
    if (mom->parsed()) return cmd_moments(o, s);
    if (ea->parsed()) return cmd_effective_action(o, s);
    if (ver->parsed()) return cmd_verify(o, s);
    if (tr->parsed()) return cmd_trees(o, s);
    return cmd_sample(o, s);
  } catch (const FormatError& e) {
    err << "error: " << e.what() << '\n';
    return kMalformedInput;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kPrecondition;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  }
}

}  // namespace planar::cli
