#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "untwist/correction_terms.hpp"
#include "untwist/lattice.hpp"

namespace untwist {

inline constexpr std::uint64_t kDefaultIsomorphismBudget = 1'000'000;

/// [[-(D+1)/2, 1], [1, -2]], the only shape a 2x2 negative definite form of
/// determinant D can take after the odd off-diagonal entry is normalised.
/// Throws EvenDeterminant, NonPositive.
SymmetricForm candidate_form(const BigInt& determinant);

/// A homomorphism A -> B given by the images of A's invariant-factor
/// generators. For cyclic groups the single image is the unit multiplier.
struct Isomorphism {
  std::vector<CosetLabel> generator_images;

  CosetLabel apply(const FiniteAbelianGroup& target, const CosetLabel& g) const;
  friend bool operator==(const Isomorphism&, const Isomorphism&) = default;
};

/// Number of automorphisms of g, computed from its primary decomposition.
BigInt automorphism_count(const FiniteAbelianGroup& g);

/// Lazily enumerates every isomorphism A -> B, ordered lexicographically by
/// generator images (ascending unit multipliers in the cyclic case). Empty
/// when A and B are not isomorphic. Construction throws GroupTooLarge when
/// the number of isomorphisms exceeds `budget`.
class IsomorphismEnumerator {
 public:
  IsomorphismEnumerator(FiniteAbelianGroup source, FiniteAbelianGroup target,
                        std::uint64_t budget = kDefaultIsomorphismBudget);

  /// Exact number of isomorphisms that will be produced.
  std::uint64_t count() const noexcept { return count_; }
  std::optional<Isomorphism> next();

 private:
  bool advance_candidate();
  bool is_bijective() const;

  FiniteAbelianGroup source_;
  FiniteAbelianGroup target_;
  std::uint64_t count_ = 0;
  // candidates_[i]: target elements whose order equals the i-th source factor.
  std::vector<std::vector<CosetLabel>> candidates_;
  std::vector<std::size_t> cursor_;
  bool started_ = false;
  bool exhausted_ = false;
};

std::vector<Isomorphism> enumerate_isomorphisms(const FiniteAbelianGroup& source, const FiniteAbelianGroup& target,
                                                std::uint64_t budget = kDefaultIsomorphismBudget);

struct MatchingSearch {
  std::optional<Isomorphism> witness;  // first positive, even matching in enumeration order
  std::uint64_t isomorphisms_checked = 0;
  std::uint64_t even_matchings = 0;      // isomorphisms passing the parity test alone
  std::uint64_t positive_matchings = 0;  // isomorphisms passing the inequality alone
};

/// True when m_Q(g) <= m_G(phi(g)) and the difference is an even integer for every g.
bool is_matching(const CorrectionTable& m_q, const CorrectionTable& m_g, const Isomorphism& phi);

/// Scans every isomorphism; propagates GroupTooLarge.
MatchingSearch search_matchings(const CorrectionTable& m_q, const CorrectionTable& m_g,
                                std::uint64_t budget = kDefaultIsomorphismBudget);

std::optional<Isomorphism> find_matching(const CorrectionTable& m_q, const CorrectionTable& m_g,
                                         std::uint64_t budget = kDefaultIsomorphismBudget);

enum class Verdict { Obstructed, NotObstructed };
std::string_view to_string(Verdict v);

struct ObstructionReport {
  std::string knot;
  int sign = 1;
  BigInt determinant;
  IntMatrix goeritz;
  IntMatrix candidate;
  Verdict verdict = Verdict::Obstructed;
  std::optional<Isomorphism> witness;
  std::string refutation;  // empty when NotObstructed
  std::vector<BigRational> missing_values;  // m_Q mod 2 values with no partner in m_G mod 2
  std::uint64_t isomorphisms_checked = 0;
  std::uint64_t even_matchings = 0;
  std::uint64_t positive_matchings = 0;
  CorrectionTable m_q;
  CorrectionTable m_g;

  friend bool operator==(const ObstructionReport&, const ObstructionReport&) = default;
};

/// Goeritz-side inputs for one sign: the negative definite Goeritz form of K
/// (sign +1) or of its mirror (sign -1).
struct ObstructionInput {
  std::string knot;
  int sign = 1;
  std::int64_t signature = 0;
  std::optional<BigInt> determinant;  // cross-checked against |det G| when present
  SymmetricForm goeritz;
};

/// Runs Goeritz -> candidate form -> both m-tables -> matching search.
/// Throws SignatureNonzero, EvenDeterminant, ValidationError (determinant
/// mismatch), GroupTooLarge.
ObstructionReport obstruct_tu_one(const ObstructionInput& input,
                                  std::uint64_t budget = kDefaultIsomorphismBudget);

/// Re-checks a NotObstructed report's witness against its own tables.
bool verify_report(const ObstructionReport& report);

struct ManifoldProfile {
  std::int64_t b2;
  std::int64_t signature;
  Definiteness definiteness;

  friend bool operator==(const ManifoldProfile&, const ManifoldProfile&) = default;
};

/// Second Betti number and signature of the 4-manifold built from p positive
/// and n negative generalized crossing changes on a knot of signature sigma.
/// Throws NonPositive for negative counts and InvalidArgument for odd sigma.
ManifoldProfile manifold_profile(std::int64_t p, std::int64_t n, std::int64_t sigma);

}  // namespace untwist
