#include "untwist/correction_terms.hpp"

#include <algorithm>
#include <optional>

namespace untwist {

namespace {

void require_negative_definite(const SymmetricForm& q) {
  if (!q.negative_definite())
    throw Error(ErrorKind::NotNegativeDefinite,
                "form is " + std::string(to_string(q.definiteness())) + ", expected NegativeDefinite");
}

/// Adjugate of q, i.e. det(q) * q^{-1}, as an integer matrix.
IntMatrix adjugate(const SymmetricForm& q) {
  const auto inv = rational_inverse(q);
  const std::size_t n = q.rank();
  IntMatrix adj(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      BigRational v = inv(i, j) * q.determinant();
      adj(i, j) = v.get_num();  // exact: det * Q^{-1} is integral
    }
  return adj;
}

}  // namespace

CharacteristicCovectors::CharacteristicCovectors(const SymmetricForm& q, std::int64_t widen) {
  require_negative_definite(q);
  if (widen < 1) throw Error(ErrorKind::InvalidArgument, "box widening factor must be >= 1");
  for (std::size_t i = 0; i < q.rank(); ++i) {
    const std::int64_t diag = to_int64(q(i, i));  // negative
    lower_.push_back(widen * diag);
    upper_.push_back(-widen * diag);
  }
}

BigInt CharacteristicCovectors::size() const {
  BigInt n = 1;
  for (std::size_t i = 0; i < lower_.size(); ++i) n *= BigInt((upper_[i] - lower_[i]) / 2 + 1);
  return n;
}

CharacteristicCovectors::iterator::iterator(const CharacteristicCovectors* owner, bool done)
    : owner_(owner), current_(owner->lower_), done_(done) {}

CharacteristicCovectors::iterator& CharacteristicCovectors::iterator::operator++() {
  for (std::size_t i = current_.size(); i-- > 0;) {
    if (current_[i] + 2 <= owner_->upper_[i]) {
      current_[i] += 2;
      return *this;
    }
    current_[i] = owner_->lower_[i];
  }
  done_ = true;
  return *this;
}

CorrectionTable::CorrectionTable(FiniteAbelianGroup group, std::size_t rank, std::vector<BigRational> values)
    : group_(std::move(group)), rank_(rank), values_(std::move(values)) {
  if (values_.size() != static_cast<std::size_t>(group_.order()))
    throw Error(ErrorKind::DimensionMismatch, "correction table must have one value per coset");
}

std::vector<BigRational> CorrectionTable::sorted_values() const {
  auto v = values_;
  std::sort(v.begin(), v.end());
  return v;
}

namespace {

// A characteristic covector of the form Q w: solve Q w = diag(Q) over GF(2).
// A solution always exists because the diagonal of a symmetric matrix lies
// in its column space mod 2.
std::vector<std::int64_t> spin_covector(const SymmetricForm& q) {
  const std::size_t r = q.rank();
  std::vector<std::vector<int>> a(r, std::vector<int>(r + 1));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) a[i][j] = mpz_odd_p(q(i, j).get_mpz_t()) ? 1 : 0;
    a[i][r] = a[i][i];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t c = 0; c < r && row < r; ++c) {
    std::size_t p = row;
    while (p < r && a[p][c] == 0) ++p;
    if (p == r) continue;
    std::swap(a[p], a[row]);
    for (std::size_t i = 0; i < r; ++i)
      if (i != row && a[i][c] != 0)
        for (std::size_t k = c; k <= r; ++k) a[i][k] ^= a[row][k];
    pivot_col.push_back(c);
    ++row;
  }
  std::vector<std::int64_t> w(r, 0);
  for (std::size_t i = 0; i < pivot_col.size(); ++i) w[pivot_col[i]] = a[i][r];
  std::vector<std::int64_t> s(r, 0);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) s[i] += to_int64(q(i, j)) * w[j];
  for (std::size_t i = 0; i < r; ++i)
    if ((s[i] - to_int64(q(i, i))) % 2 != 0) throw Error(ErrorKind::ValidationError, "no spin covector");
  return s;
}

}  // namespace

CorrectionTable m_table_in_box(const SymmetricForm& q, std::int64_t widen) {
  require_negative_definite(q);
  const std::size_t r = q.rank();
  const auto quotient = quotient_group(q);
  const auto& group = quotient.group();
  const IntMatrix adj = adjugate(q);
  // xi^T Q^{-1} xi = (xi^T adj xi) / det, so maximising it means maximising
  // sign(det) * (xi^T adj xi) over integers.
  const int det_sign = sgn(q.determinant());

  // Odd determinant: xi and xi' are in the same class iff xi - xi' lies in
  // Q(Z^r), and the spin structure sits at label 0. Even determinant: that
  // partition is too coarse, so label the class of xi in Char / 2Q(Z^r) by
  // (xi - s) / 2 mod Q(Z^r) for a characteristic s in Q(Z^r). Conjugation
  // is then negation in both cases.
  const bool halve = mpz_even_p(q.determinant().get_mpz_t()) != 0;
  std::vector<std::int64_t> base, half(r);
  if (halve) base = spin_covector(q);
  auto label = [&](const std::vector<std::int64_t>& xi) {
    if (!halve) return quotient.coset_of(std::span<const std::int64_t>(xi));
    for (std::size_t i = 0; i < r; ++i) half[i] = (xi[i] - base[i]) / 2;
    return quotient.coset_of(std::span<const std::int64_t>(half));
  };

  std::vector<std::optional<BigInt>> best(static_cast<std::size_t>(group.order()));
  BigInt quad;
  BigInt row;
  for (const auto& xi : CharacteristicCovectors(q, widen)) {
    quad = 0;
    for (std::size_t i = 0; i < r; ++i) {
      if (xi[i] == 0) continue;
      row = 0;
      for (std::size_t j = 0; j < r; ++j)
        if (xi[j] != 0) row += adj(i, j) * static_cast<long>(xi[j]);
      quad += row * static_cast<long>(xi[i]);
    }
    if (det_sign < 0) quad = -quad;
    auto& slot = best[group.index_of(label(xi))];
    if (!slot || quad > *slot) slot = quad;
  }

  const BigInt abs_det = abs(q.determinant());
  std::vector<BigRational> values;
  values.reserve(best.size());
  for (std::size_t i = 0; i < best.size(); ++i) {
    if (!best[i])
      throw Error(ErrorKind::ValidationError, "coset without a characteristic covector in the box");
    BigRational v(*best[i], abs_det);
    v.canonicalize();
    v = (v + static_cast<long>(r)) / 4;
    values.push_back(std::move(v));
  }
  return CorrectionTable(group, r, std::move(values));
}

CorrectionTable m_table(const SymmetricForm& q) { return m_table_in_box(q, 1); }

CorrectionTable mod2_representatives(const CorrectionTable& t) {
  std::vector<BigRational> v;
  v.reserve(t.size());
  for (const auto& x : t.values()) v.push_back(mod2(x));
  return CorrectionTable(t.group(), t.rank(), std::move(v));
}

CorrectionTable negate_table(const CorrectionTable& t) {
  std::vector<BigRational> v;
  v.reserve(t.size());
  for (const auto& x : t.values()) v.push_back(-x);
  return CorrectionTable(t.group(), t.rank(), std::move(v));
}

}  // namespace untwist
