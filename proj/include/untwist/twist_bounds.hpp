#pragma once

#include <cstdint>
#include <optional>
#include <span>

namespace untwist {

/// A q-generalized crossing change twists 2q strands; it can be undone by
/// ordinary crossing changes between q^2 oppositely oriented pairs and
/// q^2 - q like-oriented pairs.
struct CrossingDecomposition {
  std::int64_t opposite_pairs;
  std::int64_t same_pairs;
  std::int64_t total;

  friend bool operator==(const CrossingDecomposition&, const CrossingDecomposition&) = default;
};

/// Throws NonPositive for q < 1.
CrossingDecomposition crossing_decomposition(std::int64_t q);

/// Slice genus bound sum q_i^2 for an unknotting sequence whose i-th move
/// twists 2 q_i strands. Throws NonPositive if any q_i < 1.
std::int64_t g4_upper_bound(std::span<const std::int64_t> strand_half_counts);

/// ceil(|tau| / q^2). Throws NonPositive.
std::int64_t tu_lower_bound_tau(std::int64_t tau, std::int64_t q);

/// ceil(|s| / (2 q^2)). Throws NonPositive, OddS.
std::int64_t tu_lower_bound_s(std::int64_t s, std::int64_t q);

/// p(2p - 1) * tu_p: the unknotting number bound obtained by expanding every move.
std::int64_t naive_unknotting_bound(std::int64_t p, std::int64_t tu_p);

/// For the (p^3, 1)-cable family with tau = p^3 and tu_{p^3} = 1: the lower
/// bound p on tu_p and the resulting gap tu_p - tu_{p^3} >= p - 1.
/// Throws InvalidArgument for p < 2.
struct CableGap {
  std::int64_t tu_p_lower;
  std::int64_t gap_lower;

  friend bool operator==(const CableGap&, const CableGap&) = default;
};
CableGap cable_gap(std::int64_t p);

struct TwistBound {
  std::int64_t q;
  std::optional<std::int64_t> tau_bound;
  std::optional<std::int64_t> s_bound;
  std::int64_t best;

  friend bool operator==(const TwistBound&, const TwistBound&) = default;
};

/// Combined bound for one q. Missing invariants give no bound rather than 0;
/// throws MissingInvariants when both are absent.
TwistBound twist_bound(std::optional<std::int64_t> tau, std::optional<std::int64_t> s, std::int64_t q);

}  // namespace untwist
