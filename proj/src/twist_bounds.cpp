#include "untwist/twist_bounds.hpp"

#include <algorithm>
#include <string>

#include "untwist/error.hpp"

namespace untwist {

namespace {

void require_positive(std::int64_t v, const char* what) {
  if (v < 1) throw Error(ErrorKind::NonPositive, std::string(what) + " must be >= 1, got " + std::to_string(v));
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorKind::InvalidArgument, "integer overflow");
  return r;
}

std::int64_t ceil_div(std::int64_t num, std::int64_t den) { return num == 0 ? 0 : (num - 1) / den + 1; }

std::int64_t magnitude(std::int64_t v) {
  if (v == INT64_MIN) throw Error(ErrorKind::InvalidArgument, "integer overflow");
  return v < 0 ? -v : v;
}

}  // namespace

CrossingDecomposition crossing_decomposition(std::int64_t q) {
  require_positive(q, "q");
  const std::int64_t sq = checked_mul(q, q);
  return {sq, sq - q, checked_mul(q, 2 * q - 1)};
}

std::int64_t g4_upper_bound(std::span<const std::int64_t> strand_half_counts) {
  std::int64_t sum = 0;
  for (const auto q : strand_half_counts) {
    require_positive(q, "q_i");
    if (__builtin_add_overflow(sum, checked_mul(q, q), &sum))
      throw Error(ErrorKind::InvalidArgument, "integer overflow");
  }
  return sum;
}

std::int64_t tu_lower_bound_tau(std::int64_t tau, std::int64_t q) {
  require_positive(q, "q");
  return ceil_div(magnitude(tau), checked_mul(q, q));
}

std::int64_t tu_lower_bound_s(std::int64_t s, std::int64_t q) {
  require_positive(q, "q");
  if (s % 2 != 0) throw Error(ErrorKind::OddS, "Rasmussen invariant must be even, got " + std::to_string(s));
  return ceil_div(magnitude(s), checked_mul(2, checked_mul(q, q)));
}

std::int64_t naive_unknotting_bound(std::int64_t p, std::int64_t tu_p) {
  require_positive(p, "p");
  if (tu_p < 0) throw Error(ErrorKind::InvalidArgument, "untwisting number must be nonnegative");
  return checked_mul(crossing_decomposition(p).total, tu_p);
}

CableGap cable_gap(std::int64_t p) {
  if (p < 2) throw Error(ErrorKind::InvalidArgument, "cable family needs p >= 2");
  const std::int64_t tau = checked_mul(checked_mul(p, p), p);
  const std::int64_t bound = tu_lower_bound_tau(tau, p);
  // tu_{p^3} = 1 for this family.
  return {bound, bound - 1};
}

TwistBound twist_bound(std::optional<std::int64_t> tau, std::optional<std::int64_t> s, std::int64_t q) {
  if (!tau && !s) throw Error(ErrorKind::MissingInvariants, "neither tau nor s is available");
  TwistBound b{q, std::nullopt, std::nullopt, 0};
  if (tau) b.tau_bound = tu_lower_bound_tau(*tau, q);
  if (s) b.s_bound = tu_lower_bound_s(*s, q);
  b.best = std::max(b.tau_bound.value_or(0), b.s_bound.value_or(0));
  return b;
}

}  // namespace untwist
