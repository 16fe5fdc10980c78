#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "untwist/correction_terms.hpp"
#include "untwist/diagram.hpp"
#include "untwist/obstruction.hpp"
#include "untwist/twist_bounds.hpp"

namespace untwist {

using json = nlohmann::json;

/// Integers are written as JSON numbers when they fit in 64 bits and as
/// decimal strings otherwise; both spellings are accepted on input.
json to_json(const BigInt& z);
BigInt bigint_from_json(const json& j);

json to_json(const IntMatrix& m);
/// Throws ParseError on ragged or non-integer input.
IntMatrix matrix_from_json(const json& j);

json to_json(const CorrectionTable& t);
CorrectionTable correction_table_from_json(const json& j);

json to_json(const Isomorphism& phi);
Isomorphism isomorphism_from_json(const json& j);

json to_json(const ObstructionReport& r);
ObstructionReport obstruction_report_from_json(const json& j);

json to_json(const GoeritzMatrix& g);

struct BoundsReport {
  std::string knot;
  std::vector<TwistBound> bounds;

  friend bool operator==(const BoundsReport&, const BoundsReport&) = default;
};
json to_json(const BoundsReport& r);
BoundsReport bounds_report_from_json(const json& j);

/// One knot with its diagram, optional Goeritz matrices and ingested invariants.
struct KnotRecord {
  std::string name;
  std::optional<std::vector<PdCrossing>> pd;
  std::optional<IntMatrix> goeritz;
  std::optional<IntMatrix> goeritz_mirror;
  std::int64_t signature = 0;
  std::optional<BigInt> determinant;
  std::optional<std::int64_t> tau;
  std::optional<std::int64_t> s;
  std::optional<std::int64_t> unknotting_number;

  friend bool operator==(const KnotRecord&, const KnotRecord&) = default;
};

json to_json(const KnotRecord& r);
/// Parses and validates: PD data must describe a valid diagram, s must be
/// even, and when both a PD code and a determinant are present the Goeritz
/// determinant of the diagram must match.
KnotRecord knot_record_from_json(const json& j);
void validate_record(const KnotRecord& r);

/// The negative definite Goeritz form used for the given sign: the recorded
/// matrix when present, else the one computed from the (mirrored) diagram.
/// Throws NotAlternatingAndNoMatrix.
SymmetricForm goeritz_for_sign(const KnotRecord& r, int sign);

struct RowError {
  std::size_t row = 0;  // 1-based data row
  std::string name;
  std::string kind;
  std::string message;

  friend bool operator==(const RowError&, const RowError&) = default;
};
json to_json(const RowError& e);

struct IngestResult {
  std::vector<KnotRecord> records;
  std::vector<RowError> errors;
};

/// KnotInfo-style CSV with a header row. Recognised columns: name,
/// pd_notation, signature, determinant, ozsvath_szabo_tau,
/// rasmussen_invariant (plus optional unknotting_number). Rows that fail
/// validation are reported in `errors`, never dropped silently.
IngestResult ingest_table(std::istream& in);
IngestResult ingest_table_file(const std::string& path);

}  // namespace untwist
