#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "untwist/io.hpp"

namespace untwist {

inline constexpr const char* kToolName = "untw";
inline constexpr const char* kToolVersion = "0.1.0";

/// What an --input path resolved to: knot records (from JSON, PD text or
/// CSV), or a bare matrix.
struct LoadedInput {
  std::vector<KnotRecord> records;
  std::optional<IntMatrix> matrix;
  std::vector<RowError> errors;  // CSV rows rejected during ingestion
};

/// `.csv` files are ingested as tables; other files are parsed as JSON (a
/// matrix, a record, or an array of records) and, failing that, as PD text.
/// "-" reads standard input.
LoadedInput load_input(const std::string& path);
LoadedInput load_input_text(const std::string& text, const std::string& name);

enum class ColoringChoice { Auto, First, Second };
ColoringChoice parse_coloring_choice(const std::string& text);

/// Goeritz matrix of a record's diagram (or of its mirror). Throws Usage when
/// the record has no PD code.
GoeritzMatrix run_goeritz(const KnotRecord& record, bool use_mirror, ColoringChoice coloring);

/// Correction-term table of a negative definite matrix.
CorrectionTable run_dinv(const IntMatrix& matrix, bool reduce_mod2);

/// Signs to test: +1, -1, or both (in that order).
std::vector<int> parse_sign_choice(const std::string& text);

std::vector<ObstructionReport> run_obstruct(const KnotRecord& record, const std::vector<int>& signs,
                                            std::uint64_t budget);

/// "3", "1..5" or "1-5". Throws Usage.
std::vector<std::int64_t> parse_q_range(const std::string& text);

BoundsReport run_bounds(const KnotRecord& record, const std::vector<std::int64_t>& qs);

/// One-line conclusion for a set of reports on the same knot, distinguishing
/// obstruction from a determined untwisting number.
std::string conclusion(const KnotRecord& record, const std::vector<ObstructionReport>& reports);

/// Reproducible batch envelope: tool/version, command, input, options and the
/// per-knot results and errors, in input order.
json run_manifest(const std::string& command, const std::string& input, const json& options, json reports,
                  const std::vector<RowError>& errors);

std::string format_goeritz_table(const std::string& name, const GoeritzMatrix& g);
std::string format_table(const CorrectionTable& t);
std::string format_obstruction_table(const KnotRecord& record, const std::vector<ObstructionReport>& reports);
std::string format_bounds_table(const BoundsReport& r);

/// Isomorphism budget: the explicit flag wins, then UNTW_BUDGET, then the default.
std::uint64_t resolve_budget(std::optional<std::uint64_t> flag);

}  // namespace untwist
