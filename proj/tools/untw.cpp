// untw: untwisting-number obstructions from correction terms of branched
// double covers, and tau/s bounds on p-untwisting numbers.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "untwist/commands.hpp"

namespace {

using untwist::json;

struct GlobalOptions {
  std::string input;
  std::string output = "stdout";
  std::string format = "json";
  std::optional<std::uint64_t> budget;
};

void emit(const GlobalOptions& opts, const std::string& text) {
  if (opts.output == "stdout" || opts.output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(opts.output);
  if (!out) throw untwist::Error(untwist::ErrorKind::Usage, "cannot write " + opts.output);
  out << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// Per-record failures go to stderr and make the run exit with status 1.
bool report_errors(const std::vector<untwist::RowError>& errors) {
  for (const auto& e : errors) std::cerr << e.name << ": " << e.message << '\n';
  return !errors.empty();
}

untwist::LoadedInput load(const GlobalOptions& opts, const std::string& inline_pd, const std::string& inline_matrix) {
  if (!inline_pd.empty()) return untwist::load_input_text(inline_pd, "pd");
  if (!inline_matrix.empty()) return untwist::load_input_text(inline_matrix, "matrix");
  if (opts.input.empty()) throw untwist::Error(untwist::ErrorKind::Usage, "--input is required");
  return untwist::load_input(opts.input);
}

const untwist::KnotRecord& single_record(const untwist::LoadedInput& in) {
  if (in.records.size() != 1)
    throw untwist::Error(untwist::ErrorKind::Usage, "expected exactly one knot record in the input");
  return in.records.front();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Untwisting-number obstructions for alternating knots"};
  app.set_version_flag("--version", std::string(untwist::kToolName) + " " + untwist::kToolVersion);
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions opts;
  std::uint64_t budget_flag = 0;
  app.add_option("--input", opts.input, "Input file: knot record JSON, matrix JSON, PD text, or CSV table ('-' for stdin)");
  app.add_option("--output", opts.output, "Output path, or 'stdout'");
  app.add_option("--format", opts.format, "Output format")->check(CLI::IsMember({"json", "table"}));
  auto* budget_opt = app.add_option("--budget", budget_flag, "Isomorphism enumeration cap (also UNTW_BUDGET)");

  std::string inline_pd;
  std::string inline_matrix;

  auto* goeritz = app.add_subcommand("goeritz", "Negative definite Goeritz matrix of an alternating diagram");
  bool use_mirror = false;
  std::string coloring = "auto";
  goeritz->add_flag("--mirror", use_mirror, "Use the mirror diagram");
  goeritz->add_option("--coloring", coloring, "auto, 0 or 1")->check(CLI::IsMember({"auto", "0", "1"}));
  goeritz->add_option("--pd", inline_pd, "PD code given inline instead of --input");

  auto* dinv = app.add_subcommand("dinv", "Correction-term table m_Q of a negative definite form");
  bool reduce_mod2 = false;
  bool dinv_mirror = false;
  dinv->add_flag("--mod2", reduce_mod2, "Reduce values to [0, 2)");
  dinv->add_flag("--mirror", dinv_mirror, "For knot records, use the mirror's Goeritz matrix");
  dinv->add_option("--matrix", inline_matrix, "Matrix JSON given inline instead of --input");

  auto* obstruct = app.add_subcommand("obstruct", "Test whether tu = +1 or tu = -1 is obstructed");
  std::string sign = "both";
  obstruct->add_option("--sign", sign, "+, - or both")->check(CLI::IsMember({"+", "-", "+1", "-1", "both"}));

  auto* bounds = app.add_subcommand("bounds", "Lower bounds on tu_q from tau and s");
  std::string q_text = "1";
  bounds->add_option("--q", q_text, "q or a range lo..hi");

  auto* ingest = app.add_subcommand("ingest", "Validate a knot table CSV and emit the records");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  if (*budget_opt) opts.budget = budget_flag;

  try {
    if (*goeritz) {
      const auto in = load(opts, inline_pd, "");
      const auto& record = single_record(in);
      const auto g = untwist::run_goeritz(record, use_mirror, untwist::parse_coloring_choice(coloring));
      emit(opts, opts.format == "table" ? untwist::format_goeritz_table(record.name, g) : dump(untwist::to_json(g)));
    } else if (*dinv) {
      const auto in = load(opts, "", inline_matrix);
      untwist::IntMatrix matrix;
      if (in.matrix) {
        matrix = *in.matrix;
      } else {
        matrix = untwist::goeritz_for_sign(single_record(in), dinv_mirror ? -1 : 1).matrix();
      }
      const auto table = untwist::run_dinv(matrix, reduce_mod2);
      emit(opts, opts.format == "table" ? untwist::format_table(table) : dump(untwist::to_json(table)));
    } else if (*obstruct) {
      const auto in = load(opts, "", "");
      const auto signs = untwist::parse_sign_choice(sign);
      const auto budget = untwist::resolve_budget(opts.budget);
      json reports = json::array();
      std::string text;
      auto errors = in.errors;
      for (std::size_t i = 0; i < in.records.size(); ++i) {
        const auto& record = in.records[i];
        try {
          const auto rs = untwist::run_obstruct(record, signs, budget);
          json entry{{"knot", record.name}, {"conclusion", untwist::conclusion(record, rs)}};
          json per_sign = json::array();
          for (const auto& r : rs) per_sign.push_back(untwist::to_json(r));
          entry["results"] = std::move(per_sign);
          reports.push_back(std::move(entry));
          text += untwist::format_obstruction_table(record, rs);
        } catch (const untwist::Error& e) {
          errors.push_back({i + 1, record.name, std::string(untwist::to_string(e.kind())), e.what()});
          text += "knot " + record.name + ": error: " + e.what() + "\n";
        }
      }
      const json options{{"sign", sign}, {"budget", budget}, {"format", opts.format}};
      emit(opts, opts.format == "table" ? text
                                        : dump(untwist::run_manifest("obstruct", opts.input, options,
                                                                     std::move(reports), errors)));
      if (report_errors(errors) || in.records.empty()) return 1;
    } else if (*bounds) {
      const auto in = load(opts, "", "");
      const auto qs = untwist::parse_q_range(q_text);
      json reports = json::array();
      std::string text;
      auto errors = in.errors;
      for (std::size_t i = 0; i < in.records.size(); ++i) {
        const auto& record = in.records[i];
        try {
          const auto r = untwist::run_bounds(record, qs);
          reports.push_back(untwist::to_json(r));
          text += untwist::format_bounds_table(r);
        } catch (const untwist::Error& e) {
          errors.push_back({i + 1, record.name, std::string(untwist::to_string(e.kind())), e.what()});
          text += "knot " + record.name + ": error: " + e.what() + "\n";
        }
      }
      const json options{{"q", q_text}, {"format", opts.format}};
      emit(opts, opts.format == "table"
                     ? text
                     : dump(untwist::run_manifest("bounds", opts.input, options, std::move(reports), errors)));
      if (report_errors(errors) || in.records.empty()) return 1;
    } else if (*ingest) {
      const auto in = load(opts, "", "");
      json records = json::array();
      std::ostringstream text;
      for (const auto& r : in.records) {
        records.push_back(untwist::to_json(r));
        text << r.name << ": ok\n";
      }
      for (const auto& e : in.errors) text << "row " << e.row << " (" << e.name << "): " << e.message << '\n';
      emit(opts, opts.format == "table"
                     ? text.str()
                     : dump(untwist::run_manifest("ingest", opts.input, json{{"format", opts.format}},
                                                  std::move(records), in.errors)));
      if (report_errors(in.errors) || in.records.empty()) return 1;
    }
  } catch (const untwist::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.kind() == untwist::ErrorKind::Usage ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
