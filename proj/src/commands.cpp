#include "untwist/commands.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace untwist {

namespace {

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

bool is_matrix_json(const json& j) {
  return j.is_array() && !j.empty() && j[0].is_array() && (j[0].empty() || !j[0][0].is_array());
}

std::string stem(const std::string& path) {
  auto base = path.substr(path.find_last_of('/') == std::string::npos ? 0 : path.find_last_of('/') + 1);
  return base.substr(0, base.find('.'));
}

}  // namespace

LoadedInput load_input_text(const std::string& text, const std::string& name) {
  LoadedInput in;
  json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) {
    KnotRecord r;
    r.name = name;
    r.pd = parse_pd(text).crossings();
    validate_record(r);
    in.records.push_back(std::move(r));
    return in;
  }
  if (is_matrix_json(j)) {
    in.matrix = matrix_from_json(j);
  } else if (j.is_array()) {
    for (const auto& item : j) in.records.push_back(knot_record_from_json(item));
  } else if (j.is_object() && !j.contains("signature") && j.contains("pd") && j.size() == 1) {
    // Bare {"pd": [...]} diagram input.
    json rec = j;
    rec["name"] = name;
    rec["signature"] = 0;
    in.records.push_back(knot_record_from_json(rec));
  } else {
    in.records.push_back(knot_record_from_json(j));
  }
  return in;
}

LoadedInput load_input(const std::string& path) {
  if (ends_with(path, ".csv")) {
    auto ingested = ingest_table_file(path);
    return LoadedInput{std::move(ingested.records), std::nullopt, std::move(ingested.errors)};
  }
  std::stringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream file(path);
    if (!file) throw Error(ErrorKind::Usage, "cannot open " + path);
    buffer << file.rdbuf();
  }
  return load_input_text(buffer.str(), path == "-" ? "stdin" : stem(path));
}

ColoringChoice parse_coloring_choice(const std::string& text) {
  if (text == "auto") return ColoringChoice::Auto;
  if (text == "0") return ColoringChoice::First;
  if (text == "1") return ColoringChoice::Second;
  throw Error(ErrorKind::Usage, "--coloring must be auto, 0 or 1");
}

GoeritzMatrix run_goeritz(const KnotRecord& record, bool use_mirror, ColoringChoice coloring) {
  if (!record.pd) throw Error(ErrorKind::Usage, "knot '" + record.name + "' has no PD code");
  auto d = KnotDiagram::from_crossings(*record.pd);
  if (use_mirror) d = mirror(d);
  switch (coloring) {
    case ColoringChoice::First: return goeritz_matrix(d, 0);
    case ColoringChoice::Second: return goeritz_matrix(d, 1);
    case ColoringChoice::Auto: break;
  }
  return goeritz_matrix(d);
}

CorrectionTable run_dinv(const IntMatrix& matrix, bool reduce_mod2) {
  auto table = m_table(certify_definiteness(matrix));
  return reduce_mod2 ? mod2_representatives(table) : table;
}

std::vector<int> parse_sign_choice(const std::string& text) {
  if (text == "+" || text == "+1") return {1};
  if (text == "-" || text == "-1") return {-1};
  if (text == "both") return {1, -1};
  throw Error(ErrorKind::Usage, "--sign must be +, - or both");
}

std::vector<ObstructionReport> run_obstruct(const KnotRecord& record, const std::vector<int>& signs,
                                            std::uint64_t budget) {
  if (record.signature != 0)
    throw Error(ErrorKind::SignatureNonzero,
                "knot '" + record.name + "' has signature " + std::to_string(record.signature));
  // A recorded determinant is checked before any Goeritz matrix is needed.
  if (record.determinant) (void)candidate_form(*record.determinant);
  std::vector<ObstructionReport> out;
  for (const int sign : signs) {
    ObstructionInput input{record.name, sign, record.signature, record.determinant, goeritz_for_sign(record, sign)};
    out.push_back(obstruct_tu_one(input, budget));
  }
  return out;
}

std::vector<std::int64_t> parse_q_range(const std::string& text) {
  auto number = [&](const std::string& s) {
    try {
      return to_int64(parse_integer(s));
    } catch (const Error&) {
      throw Error(ErrorKind::Usage, "bad --q value '" + text + "'");
    }
  };
  std::size_t sep = text.find("..");
  std::size_t width = 2;
  if (sep == std::string::npos) {
    sep = text.find('-', 1);
    width = 1;
  }
  if (sep == std::string::npos) return {number(text)};
  const auto lo = number(text.substr(0, sep));
  const auto hi = number(text.substr(sep + width));
  if (hi < lo || hi - lo > 1'000'000) throw Error(ErrorKind::Usage, "bad --q range '" + text + "'");
  std::vector<std::int64_t> qs;
  for (auto q = lo; q <= hi; ++q) qs.push_back(q);
  return qs;
}

BoundsReport run_bounds(const KnotRecord& record, const std::vector<std::int64_t>& qs) {
  if (!record.tau && !record.s)
    throw Error(ErrorKind::MissingInvariants, "knot '" + record.name + "' has neither tau nor s");
  BoundsReport r{record.name, {}};
  for (const auto q : qs) r.bounds.push_back(twist_bound(record.tau, record.s, q));
  return r;
}

std::string conclusion(const KnotRecord& record, const std::vector<ObstructionReport>& reports) {
  bool plus = false;
  bool minus = false;
  for (const auto& r : reports) {
    if (r.verdict != Verdict::Obstructed) continue;
    (r.sign > 0 ? plus : minus) = true;
  }
  if (plus && minus) {
    if (record.unknotting_number && *record.unknotting_number == 2)
      return "tu = 2 determined (tu != +1, tu != -1, and tu <= u = 2)";
    return "obstructed: tu != +1 and tu != -1 (tu not determined)";
  }
  if (plus) return "obstructed: tu != +1 (tu not determined)";
  if (minus) return "obstructed: tu != -1 (tu not determined)";
  return "not obstructed (no conclusion about tu)";
}

json run_manifest(const std::string& command, const std::string& input, const json& options, json reports,
                  const std::vector<RowError>& errors) {
  json errs = json::array();
  for (const auto& e : errors) errs.push_back(to_json(e));
  return {{"tool", kToolName},       {"version", kToolVersion}, {"command", command},
          {"input", input},          {"options", options},      {"reports", std::move(reports)},
          {"errors", std::move(errs)}};
}

namespace {

std::string format_matrix(const IntMatrix& m, const std::string& indent) {
  std::vector<std::string> cells;
  std::size_t width = 1;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      cells.push_back(m(i, j).get_str());
      width = std::max(width, cells.back().size());
    }
  std::ostringstream out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << indent << '[';
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const auto& c = cells[i * m.cols() + j];
      out << (j ? " " : "") << std::string(width - c.size(), ' ') << c;
    }
    out << "]\n";
  }
  return out.str();
}

std::string label_text(const CosetLabel& g) {
  std::string s = "(";
  for (std::size_t i = 0; i < g.residues.size(); ++i) s += (i ? "," : "") + std::to_string(g.residues[i]);
  return s + ")";
}

}  // namespace

std::string format_goeritz_table(const std::string& name, const GoeritzMatrix& g) {
  std::ostringstream out;
  out << "knot " << name << ": Goeritz matrix (coloring " << g.coloring << ", " << g.white_regions
      << " white regions, deleted region at edge " << g.deleted_edge << ")\n"
      << format_matrix(g.form.matrix(), "  ") << "  determinant " << determinant_from_goeritz(g).get_str() << ", "
      << to_string(g.form.definiteness()) << '\n';
  return out.str();
}

std::string format_table(const CorrectionTable& t) {
  std::ostringstream out;
  out << "group order " << t.group().order() << ", rank " << t.rank() << '\n';
  for (std::size_t i = 0; i < t.size(); ++i)
    out << "  " << label_text(t.group().label_at(i)) << "  " << to_string(t.at_index(i)) << '\n';
  return out.str();
}

std::string format_obstruction_table(const KnotRecord& record, const std::vector<ObstructionReport>& reports) {
  std::ostringstream out;
  out << "knot " << record.name << " (det " << (reports.empty() ? std::string("?") : reports[0].determinant.get_str())
      << ", signature " << record.signature << ")\n";
  for (const auto& r : reports) {
    out << "  tu = " << (r.sign > 0 ? "+1" : "-1") << ": " << to_string(r.verdict);
    if (r.witness) {
      out << "  witness";
      for (const auto& g : r.witness->generator_images) out << ' ' << label_text(g);
    } else {
      out << "  (" << r.refutation << ")";
    }
    out << '\n';
  }
  out << "  conclusion: " << conclusion(record, reports) << '\n';
  return out.str();
}

std::string format_bounds_table(const BoundsReport& r) {
  std::ostringstream out;
  out << "knot " << r.knot << '\n' << "  q  tau_bound  s_bound  best\n";
  for (const auto& b : r.bounds)
    out << "  " << b.q << "  " << (b.tau_bound ? std::to_string(*b.tau_bound) : "-") << "  "
        << (b.s_bound ? std::to_string(*b.s_bound) : "-") << "  " << b.best << '\n';
  return out.str();
}

std::uint64_t resolve_budget(std::optional<std::uint64_t> flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("UNTW_BUDGET"); env != nullptr && *env != '\0') {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw Error(ErrorKind::Usage, std::string("UNTW_BUDGET is not a number: ") + env);
    }
  }
  return kDefaultIsomorphismBudget;
}

}  // namespace untwist
