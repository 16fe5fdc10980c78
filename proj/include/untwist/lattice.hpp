#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "untwist/arith.hpp"
#include "untwist/matrix.hpp"

namespace untwist {

/// Degenerate forms (det = 0) are reported as Indefinite; only strictly
/// definite forms get a definite classification.
enum class Definiteness { NegativeDefinite, PositiveDefinite, Indefinite };

std::string_view to_string(Definiteness d);

/// Square symmetric integer matrix together with its certified signature class.
/// Instances only come out of certify_definiteness, so the stored class always
/// agrees with the leading principal minors.
class SymmetricForm {
 public:
  const IntMatrix& matrix() const noexcept { return matrix_; }
  std::size_t rank() const noexcept { return matrix_.rows(); }
  Definiteness definiteness() const noexcept { return definiteness_; }
  bool negative_definite() const noexcept { return definiteness_ == Definiteness::NegativeDefinite; }
  const BigInt& determinant() const noexcept { return determinant_; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return matrix_(i, j); }

  friend bool operator==(const SymmetricForm& a, const SymmetricForm& b) {
    return a.matrix_ == b.matrix_;
  }

 private:
  friend SymmetricForm certify_definiteness(IntMatrix m);
  SymmetricForm(IntMatrix m, Definiteness d, BigInt det)
      : matrix_(std::move(m)), definiteness_(d), determinant_(std::move(det)) {}

  IntMatrix matrix_;
  Definiteness definiteness_;
  BigInt determinant_;
};

/// Classifies m by the signs of its leading principal minors.
/// Throws NotSymmetric (and DimensionMismatch for non-square or empty input).
SymmetricForm certify_definiteness(IntMatrix m);

/// U * M * V = D with U, V unimodular and D diagonal, nonnegative, with the
/// divisibility chain D(i,i) | D(i+1,i+1).
struct SmithDecomposition {
  IntMatrix U;
  IntMatrix V;
  IntMatrix D;
};

SmithDecomposition smith_normal_form(const IntMatrix& m);

/// Throws Singular when det = 0.
RationalMatrix rational_inverse(const SymmetricForm& q);

/// xi^T * qinv * xi, exactly.
BigRational evaluate_form(const RationalMatrix& qinv, std::span<const BigInt> xi);

/// A coset of Z^r / M(Z^r) written in invariant-factor coordinates.
struct CosetLabel {
  std::vector<std::int64_t> residues;

  friend auto operator<=>(const CosetLabel&, const CosetLabel&) = default;
};

/// Z/d_1 + ... + Z/d_m with d_1 | d_2 | ... | d_m and every d_i > 1.
/// The trivial group has no factors.
class FiniteAbelianGroup {
 public:
  FiniteAbelianGroup() = default;
  /// Throws InvalidArgument unless factors form a divisibility chain of values > 1.
  explicit FiniteAbelianGroup(std::vector<std::int64_t> factors);

  std::span<const std::int64_t> factors() const noexcept { return factors_; }
  std::size_t num_factors() const noexcept { return factors_.size(); }
  std::int64_t order() const noexcept { return order_; }
  bool cyclic() const noexcept { return factors_.size() <= 1; }

  /// Position of a label in lexicographic order (mixed radix, first residue most significant).
  std::size_t index_of(const CosetLabel& g) const;
  CosetLabel label_at(std::size_t index) const;

  CosetLabel zero() const { return CosetLabel{std::vector<std::int64_t>(factors_.size(), 0)}; }
  CosetLabel negate(const CosetLabel& g) const;
  CosetLabel add(const CosetLabel& a, const CosetLabel& b) const;
  CosetLabel scale(const CosetLabel& g, std::int64_t k) const;
  /// Smallest n > 0 with n*g = 0.
  std::int64_t element_order(const CosetLabel& g) const;

  friend bool operator==(const FiniteAbelianGroup&, const FiniteAbelianGroup&) = default;

 private:
  std::vector<std::int64_t> factors_;
  std::int64_t order_ = 1;
};

/// Z^r / M(Z^r) for nondegenerate M, with the projection recovered from the
/// Smith decomposition: label(xi)_k = (U xi)_k mod d_k over the nontrivial factors.
class QuotientGroup {
 public:
  const FiniteAbelianGroup& group() const noexcept { return group_; }
  std::size_t rank() const noexcept { return rank_; }

  /// Throws DimensionMismatch when xi has the wrong length.
  CosetLabel coset_of(std::span<const BigInt> xi) const;
  CosetLabel coset_of(std::span<const std::int64_t> xi) const;

 private:
  friend QuotientGroup quotient_group(const SymmetricForm& m);

  FiniteAbelianGroup group_;
  std::size_t rank_ = 0;
  // projection_[k][j] = U(row_k, j) mod d_k, for each nontrivial factor k.
  std::vector<std::vector<std::int64_t>> projection_;
};

/// Throws Singular when det = 0.
QuotientGroup quotient_group(const SymmetricForm& m);

}  // namespace untwist
