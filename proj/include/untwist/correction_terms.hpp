#pragma once

#include <cstdint>
#include <iterator>
#include <vector>

#include "untwist/arith.hpp"
#include "untwist/lattice.hpp"

namespace untwist {

/// Characteristic covectors of a negative definite form inside the box
/// Q_ii <= xi_i <= -Q_ii, visited in lexicographic order. Each coordinate runs
/// over Q_ii, Q_ii + 2, ..., -Q_ii.
class CharacteristicCovectors {
 public:
  /// Throws NotNegativeDefinite. `widen` multiplies the box half-width; 1 is
  /// the standard box, larger values are only useful for checking sufficiency.
  explicit CharacteristicCovectors(const SymmetricForm& q, std::int64_t widen = 1);

  class iterator {
   public:
    using value_type = std::vector<std::int64_t>;
    using difference_type = std::ptrdiff_t;

    const value_type& operator*() const { return current_; }
    iterator& operator++();
    void operator++(int) { ++*this; }
    bool operator==(std::default_sentinel_t) const { return done_; }

   private:
    friend class CharacteristicCovectors;
    iterator(const CharacteristicCovectors* owner, bool done);

    const CharacteristicCovectors* owner_;
    value_type current_;
    bool done_;
  };

  iterator begin() const { return iterator(this, false); }
  std::default_sentinel_t end() const { return {}; }

  /// Number of covectors in the box: prod_i (widen * |Q_ii| + 1) for widen = 1.
  BigInt size() const;

 private:
  std::vector<std::int64_t> lower_;
  std::vector<std::int64_t> upper_;
};

/// Total map from the quotient group Z^r / Q(Z^r) to exact rationals, stored
/// densely in lexicographic label order.
class CorrectionTable {
 public:
  /// The table of the unimodular rank-0 form: one coset, value 0.
  CorrectionTable() : values_{BigRational(0)} {}
  CorrectionTable(FiniteAbelianGroup group, std::size_t rank, std::vector<BigRational> values);

  const FiniteAbelianGroup& group() const noexcept { return group_; }
  std::size_t rank() const noexcept { return rank_; }
  std::size_t size() const noexcept { return values_.size(); }
  const std::vector<BigRational>& values() const noexcept { return values_; }

  const BigRational& at(const CosetLabel& g) const { return values_.at(group_.index_of(g)); }
  const BigRational& at_index(std::size_t i) const { return values_.at(i); }

  /// Values sorted ascending; the order-free view used for fixture comparisons.
  std::vector<BigRational> sorted_values() const;

  friend bool operator==(const CorrectionTable&, const CorrectionTable&) = default;

 private:
  FiniteAbelianGroup group_;
  std::size_t rank_ = 0;
  std::vector<BigRational> values_;
};

/// m_Q(g) = max over characteristic xi in class g of (xi^T Q^{-1} xi + r) / 4.
/// Classes are Char(Q) / 2Q(Z^r). For odd det Q the class of xi is labelled
/// by xi mod Q(Z^r); for even det Q by (xi - s) / 2 mod Q(Z^r), where s is a
/// characteristic covector in Q(Z^r). Either way m_Q(g) = m_Q(-g).
/// Throws NotNegativeDefinite.
CorrectionTable m_table(const SymmetricForm& q);

/// Same maximisation over a box widened by `widen`; used to confirm that the
/// standard box already attains every maximum.
CorrectionTable m_table_in_box(const SymmetricForm& q, std::int64_t widen);

/// Every value replaced by its representative in [0, 2).
CorrectionTable mod2_representatives(const CorrectionTable& t);

/// Pointwise negation: the table of the orientation-reversed manifold.
CorrectionTable negate_table(const CorrectionTable& t);

}  // namespace untwist
