#include "untwist/io.hpp"

#include <boost/tokenizer.hpp>

#include <fstream>
#include <istream>
#include <map>

namespace untwist {

namespace {

[[noreturn]] void bad_json(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

template <typename T>
T get_as(const json& j, const char* key) {
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    bad_json(std::string("field '") + key + "': " + e.what());
  }
}

std::vector<std::int64_t> residues_from_json(const json& j) {
  if (!j.is_array()) bad_json("coset label must be an array");
  std::vector<std::int64_t> out;
  for (const auto& v : j) out.push_back(v.get<std::int64_t>());
  return out;
}

}  // namespace

json to_json(const BigInt& z) {
  if (mpz_fits_slong_p(z.get_mpz_t())) return json(static_cast<std::int64_t>(z.get_si()));
  return json(z.get_str());
}

BigInt bigint_from_json(const json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) return parse_integer(j.get<std::string>());
  bad_json("expected an integer, got " + j.dump());
}

json to_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

IntMatrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) bad_json("matrix must be a non-empty array of rows");
  const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
  IntMatrix m(j.size(), cols);
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array() || j[i].size() != cols) bad_json("matrix rows must be arrays of equal length");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = bigint_from_json(j[i][k]);
  }
  return m;
}

json to_json(const CorrectionTable& t) {
  json values = json::array();
  for (std::size_t i = 0; i < t.size(); ++i)
    values.push_back({{"coset", t.group().label_at(i).residues}, {"m", to_string(t.at_index(i))}});
  return {{"group", std::vector<std::int64_t>(t.group().factors().begin(), t.group().factors().end())},
          {"rank", t.rank()},
          {"values", std::move(values)}};
}

CorrectionTable correction_table_from_json(const json& j) {
  FiniteAbelianGroup group(get_as<std::vector<std::int64_t>>(j, "group"));
  const auto rank = get_as<std::size_t>(j, "rank");
  std::vector<std::optional<BigRational>> slots(static_cast<std::size_t>(group.order()));
  for (const auto& entry : j.at("values")) {
    CosetLabel g{residues_from_json(entry.at("coset"))};
    const auto idx = group.index_of(g);
    if (idx >= slots.size() || slots[idx]) bad_json("duplicate or out-of-range coset");
    slots[idx] = parse_rational(get_as<std::string>(entry, "m"));
  }
  std::vector<BigRational> values;
  for (auto& s : slots) {
    if (!s) bad_json("correction table is not total");
    values.push_back(std::move(*s));
  }
  return CorrectionTable(std::move(group), rank, std::move(values));
}

json to_json(const Isomorphism& phi) {
  json images = json::array();
  for (const auto& g : phi.generator_images) images.push_back(g.residues);
  json j{{"generator_images", std::move(images)}};
  if (phi.generator_images.size() == 1) j["multiplier"] = phi.generator_images[0].residues[0];
  return j;
}

Isomorphism isomorphism_from_json(const json& j) {
  Isomorphism phi;
  for (const auto& g : j.at("generator_images")) phi.generator_images.push_back(CosetLabel{residues_from_json(g)});
  return phi;
}

json to_json(const ObstructionReport& r) {
  json missing = json::array();
  for (const auto& v : r.missing_values) missing.push_back(to_string(v));
  json j{{"knot", r.knot},
         {"sign", r.sign > 0 ? "+1" : "-1"},
         {"determinant", to_json(r.determinant)},
         {"goeritz", to_json(r.goeritz)},
         {"candidate_form", to_json(r.candidate)},
         {"verdict", std::string(to_string(r.verdict))},
         {"refutation", r.refutation},
         {"missing_values", std::move(missing)},
         {"isomorphisms_checked", r.isomorphisms_checked},
         {"even_matchings", r.even_matchings},
         {"positive_matchings", r.positive_matchings},
         {"m_q", to_json(r.m_q)},
         {"m_g", to_json(r.m_g)}};
  j["witness"] = r.witness ? to_json(*r.witness) : json(nullptr);
  return j;
}

ObstructionReport obstruction_report_from_json(const json& j) {
  ObstructionReport r;
  r.knot = get_as<std::string>(j, "knot");
  const auto sign = get_as<std::string>(j, "sign");
  if (sign != "+1" && sign != "-1") bad_json("sign must be \"+1\" or \"-1\"");
  r.sign = sign == "+1" ? 1 : -1;
  r.determinant = bigint_from_json(j.at("determinant"));
  r.goeritz = matrix_from_json(j.at("goeritz"));
  r.candidate = matrix_from_json(j.at("candidate_form"));
  const auto verdict = get_as<std::string>(j, "verdict");
  if (verdict != "Obstructed" && verdict != "NotObstructed") bad_json("unknown verdict " + verdict);
  r.verdict = verdict == "Obstructed" ? Verdict::Obstructed : Verdict::NotObstructed;
  r.refutation = get_as<std::string>(j, "refutation");
  for (const auto& v : j.at("missing_values")) r.missing_values.push_back(parse_rational(v.get<std::string>()));
  r.isomorphisms_checked = get_as<std::uint64_t>(j, "isomorphisms_checked");
  r.even_matchings = get_as<std::uint64_t>(j, "even_matchings");
  r.positive_matchings = get_as<std::uint64_t>(j, "positive_matchings");
  r.m_q = correction_table_from_json(j.at("m_q"));
  r.m_g = correction_table_from_json(j.at("m_g"));
  if (!j.at("witness").is_null()) r.witness = isomorphism_from_json(j.at("witness"));
  return r;
}

json to_json(const GoeritzMatrix& g) {
  return {{"form", to_json(g.form.matrix())},
          {"rank", g.form.rank()},
          {"definiteness", std::string(to_string(g.form.definiteness()))},
          {"determinant", to_json(determinant_from_goeritz(g))},
          {"coloring", g.coloring},
          {"white_regions", g.white_regions},
          {"deleted_edge", g.deleted_edge}};
}

json to_json(const BoundsReport& r) {
  json rows = json::array();
  for (const auto& b : r.bounds) {
    json row{{"q", b.q}, {"best", b.best}};
    if (b.tau_bound) row["tau_bound"] = *b.tau_bound;
    if (b.s_bound) row["s_bound"] = *b.s_bound;
    rows.push_back(std::move(row));
  }
  return {{"knot", r.knot}, {"bounds", std::move(rows)}};
}

BoundsReport bounds_report_from_json(const json& j) {
  BoundsReport r;
  r.knot = get_as<std::string>(j, "knot");
  for (const auto& row : j.at("bounds")) {
    TwistBound b{get_as<std::int64_t>(row, "q"), std::nullopt, std::nullopt, get_as<std::int64_t>(row, "best")};
    if (row.contains("tau_bound")) b.tau_bound = row.at("tau_bound").get<std::int64_t>();
    if (row.contains("s_bound")) b.s_bound = row.at("s_bound").get<std::int64_t>();
    r.bounds.push_back(b);
  }
  return r;
}

json to_json(const KnotRecord& r) {
  json j{{"name", r.name}, {"signature", r.signature}};
  if (r.pd) {
    json pd = json::array();
    for (const auto& c : *r.pd) pd.push_back(c);
    j["pd"] = std::move(pd);
  }
  if (r.goeritz) j["goeritz"] = to_json(*r.goeritz);
  if (r.goeritz_mirror) j["goeritz_mirror"] = to_json(*r.goeritz_mirror);
  if (r.determinant) j["determinant"] = to_json(*r.determinant);
  if (r.tau) j["tau"] = *r.tau;
  if (r.s) j["s"] = *r.s;
  if (r.unknotting_number) j["unknotting_number"] = *r.unknotting_number;
  return j;
}

namespace {

std::vector<PdCrossing> pd_from_json(const json& j) {
  if (j.is_string()) return parse_pd(j.get<std::string>()).crossings();
  if (!j.is_array()) bad_json("pd must be a string or an array of 4-tuples");
  std::vector<PdCrossing> out;
  for (const auto& c : j) {
    if (!c.is_array() || c.size() != 4) bad_json("each PD crossing needs four edge labels");
    out.push_back({c[0].get<std::int64_t>(), c[1].get<std::int64_t>(), c[2].get<std::int64_t>(),
                   c[3].get<std::int64_t>()});
  }
  return out;
}

}  // namespace

void validate_record(const KnotRecord& r) {
  if (r.s && *r.s % 2 != 0) throw Error(ErrorKind::OddS, "Rasmussen invariant must be even");
  if (r.determinant && *r.determinant < 1) throw Error(ErrorKind::ValidationError, "determinant must be positive");
  if (r.pd) {
    const auto d = KnotDiagram::from_crossings(*r.pd);
    if (r.determinant && d.alternating()) {
      const auto det = determinant_from_goeritz(goeritz_matrix(d));
      if (det != *r.determinant)
        throw Error(ErrorKind::ValidationError, "diagram determinant " + det.get_str() +
                                                    " disagrees with recorded determinant " +
                                                    r.determinant->get_str());
    }
  }
  for (const auto* m : {&r.goeritz, &r.goeritz_mirror})
    if (*m && r.determinant && abs(determinant(**m)) != *r.determinant)
      throw Error(ErrorKind::ValidationError, "Goeritz matrix determinant disagrees with recorded determinant");
}

KnotRecord knot_record_from_json(const json& j) {
  if (!j.is_object()) bad_json("knot record must be a JSON object");
  KnotRecord r;
  r.name = j.value("name", std::string());
  if (!j.contains("signature")) bad_json("knot record needs a 'signature'");
  r.signature = get_as<std::int64_t>(j, "signature");
  if (j.contains("pd")) r.pd = pd_from_json(j.at("pd"));
  if (j.contains("goeritz")) r.goeritz = matrix_from_json(j.at("goeritz"));
  if (j.contains("goeritz_mirror")) r.goeritz_mirror = matrix_from_json(j.at("goeritz_mirror"));
  if (j.contains("determinant")) r.determinant = bigint_from_json(j.at("determinant"));
  if (j.contains("tau")) r.tau = get_as<std::int64_t>(j, "tau");
  if (j.contains("s")) r.s = get_as<std::int64_t>(j, "s");
  if (j.contains("unknotting_number")) r.unknotting_number = get_as<std::int64_t>(j, "unknotting_number");
  validate_record(r);
  return r;
}

SymmetricForm goeritz_for_sign(const KnotRecord& r, int sign) {
  const auto& stored = sign > 0 ? r.goeritz : r.goeritz_mirror;
  if (stored) return certify_definiteness(*stored);
  if (r.pd) {
    auto d = KnotDiagram::from_crossings(*r.pd);
    if (d.alternating()) return goeritz_matrix(sign > 0 ? d : mirror(d)).form;
  }
  throw Error(ErrorKind::NotAlternatingAndNoMatrix,
              "knot '" + r.name + "' has neither an alternating diagram nor a " +
                  (sign > 0 ? "goeritz" : "goeritz_mirror") + " matrix");
}

json to_json(const RowError& e) {
  return {{"row", e.row}, {"name", e.name}, {"kind", e.kind}, {"message", e.message}};
}

namespace {

std::optional<std::int64_t> optional_int(const std::string& cell) {
  if (cell.empty()) return std::nullopt;
  return to_int64(parse_integer(cell));
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

}  // namespace

IngestResult ingest_table(std::istream& in) {
  using Tokenizer = boost::tokenizer<boost::escaped_list_separator<char>>;
  IngestResult result;
  std::string line;
  std::map<std::string, std::size_t> column;
  bool header = true;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    std::vector<std::string> cells;
    try {
      Tokenizer tok(line);
      for (const auto& cell : tok) cells.push_back(trim(cell));
    } catch (const boost::escaped_list_error& e) {
      if (header) throw Error(ErrorKind::ParseError, std::string("CSV header: ") + e.what());
      result.errors.push_back({++row, "", std::string(to_string(ErrorKind::ParseError)), e.what()});
      continue;
    }
    if (header) {
      for (std::size_t i = 0; i < cells.size(); ++i) column[cells[i]] = i;
      if (!column.contains("name")) throw Error(ErrorKind::ParseError, "CSV header lacks a 'name' column");
      header = false;
      continue;
    }
    ++row;
    auto cell = [&](const char* key) -> std::string {
      const auto it = column.find(key);
      return it == column.end() || it->second >= cells.size() ? std::string() : cells[it->second];
    };
    KnotRecord r;
    r.name = cell("name");
    try {
      if (const auto pd = cell("pd_notation"); !pd.empty()) r.pd = parse_pd(pd).crossings();
      r.signature = optional_int(cell("signature")).value_or(0);
      if (cell("signature").empty()) throw Error(ErrorKind::ValidationError, "missing signature");
      if (const auto det = cell("determinant"); !det.empty()) r.determinant = parse_integer(det);
      r.tau = optional_int(cell("ozsvath_szabo_tau"));
      r.s = optional_int(cell("rasmussen_invariant"));
      r.unknotting_number = optional_int(cell("unknotting_number"));
      validate_record(r);
      result.records.push_back(std::move(r));
    } catch (const Error& e) {
      result.errors.push_back({row, r.name, std::string(to_string(e.kind())), e.what()});
    }
  }
  if (header) throw Error(ErrorKind::ParseError, "CSV input is empty");
  return result;
}

IngestResult ingest_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Usage, "cannot open " + path);
  return ingest_table(in);
}

}  // namespace untwist
