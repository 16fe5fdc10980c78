#include "untwist/lattice.hpp"

#include <numeric>
#include <optional>
#include <utility>

namespace untwist {

std::string_view to_string(Definiteness d) {
  switch (d) {
    case Definiteness::NegativeDefinite: return "NegativeDefinite";
    case Definiteness::PositiveDefinite: return "PositiveDefinite";
    case Definiteness::Indefinite: return "Indefinite";
  }
  return "Indefinite";
}

BigInt determinant(const IntMatrix& m) {
  if (!m.square()) throw Error(ErrorKind::DimensionMismatch, "determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

namespace {

/// Leading principal minors via Bareiss without pivoting. Stops early (returns a
/// shorter list whose last entry is zero) when a leading minor vanishes.
std::vector<BigInt> leading_minors(const IntMatrix& m) {
  const std::size_t n = m.rows();
  IntMatrix a = m;
  std::vector<BigInt> minors{a(0, 0)};
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) break;
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a(k, k);
    minors.push_back(a(k + 1, k + 1));
  }
  return minors;
}

}  // namespace

SymmetricForm certify_definiteness(IntMatrix m) {
  if (!m.square() || m.rows() == 0)
    throw Error(ErrorKind::DimensionMismatch, "form must be a non-empty square matrix");
  const std::size_t n = m.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (m(i, j) != m(j, i))
        throw Error(ErrorKind::NotSymmetric,
                    "entry (" + std::to_string(i) + "," + std::to_string(j) + ") differs from its transpose");

  const auto minors = leading_minors(m);
  Definiteness d = Definiteness::Indefinite;
  if (minors.size() == n) {
    bool negative = true;
    bool positive = true;
    for (std::size_t k = 0; k < n; ++k) {
      const int s = sgn(minors[k]);
      positive = positive && s > 0;
      // (-1)^(k+1) * minor_(k+1) > 0
      negative = negative && (k % 2 == 0 ? s < 0 : s > 0);
    }
    if (negative) d = Definiteness::NegativeDefinite;
    if (positive) d = Definiteness::PositiveDefinite;
  }
  BigInt det = minors.size() == n ? minors.back() : determinant(m);
  return SymmetricForm(std::move(m), d, std::move(det));
}

SmithDecomposition smith_normal_form(const IntMatrix& m) {
  if (!m.square()) throw Error(ErrorKind::DimensionMismatch, "Smith normal form of non-square matrix");
  const std::size_t n = m.rows();
  SmithDecomposition s{IntMatrix::identity(n), IntMatrix::identity(n), m};
  IntMatrix& D = s.D;

  auto find_pivot = [&](std::size_t t) -> std::optional<std::pair<std::size_t, std::size_t>> {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    BigInt best_abs;
    for (std::size_t i = t; i < n; ++i)
      for (std::size_t j = t; j < n; ++j) {
        if (D(i, j) == 0) continue;
        BigInt v = abs(D(i, j));
        if (!best || v < best_abs) {
          best = {i, j};
          best_abs = std::move(v);
        }
      }
    return best;
  };

  for (std::size_t t = 0; t < n; ++t) {
    for (;;) {
      const auto pivot = find_pivot(t);
      if (!pivot) return s;  // remaining block is zero
      D.swap_rows(t, pivot->first);
      s.U.swap_rows(t, pivot->first);
      D.swap_cols(t, pivot->second);
      s.V.swap_cols(t, pivot->second);

      bool dirty = false;
      for (std::size_t i = t + 1; i < n; ++i) {
        if (D(i, t) == 0) continue;
        BigInt q;
        mpz_tdiv_q(q.get_mpz_t(), D(i, t).get_mpz_t(), D(t, t).get_mpz_t());
        D.add_row(i, t, -q);
        s.U.add_row(i, t, -q);
        dirty = dirty || D(i, t) != 0;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (D(t, j) == 0) continue;
        BigInt q;
        mpz_tdiv_q(q.get_mpz_t(), D(t, j).get_mpz_t(), D(t, t).get_mpz_t());
        D.add_col(j, t, -q);
        s.V.add_col(j, t, -q);
        dirty = dirty || D(t, j) != 0;
      }
      if (dirty) continue;

      // The pivot must divide the whole trailing block.
      std::optional<std::size_t> offending;
      for (std::size_t i = t + 1; i < n && !offending; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!mpz_divisible_p(D(i, j).get_mpz_t(), D(t, t).get_mpz_t())) {
            offending = i;
            break;
          }
      if (!offending) break;
      D.add_row(t, *offending, 1);
      s.U.add_row(t, *offending, 1);
    }
    if (D(t, t) < 0) {
      D.negate_row(t);
      s.U.negate_row(t);
    }
  }
  return s;
}

RationalMatrix rational_inverse(const SymmetricForm& q) {
  if (q.determinant() == 0) throw Error(ErrorKind::Singular, "form has determinant 0");
  const std::size_t n = q.rank();
  RationalMatrix a(n, n);
  RationalMatrix inv = RationalMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = q(i, j);

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (a(p, k) == 0) ++p;  // nonsingular, so a pivot exists
    a.swap_rows(k, p);
    inv.swap_rows(k, p);
    const BigRational scale = 1 / a(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      a(k, j) *= scale;
      inv(k, j) *= scale;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a(i, k) == 0) continue;
      const BigRational f = -a(i, k);
      a.add_row(i, k, f);
      inv.add_row(i, k, f);
    }
  }
  return inv;
}

BigRational evaluate_form(const RationalMatrix& qinv, std::span<const BigInt> xi) {
  if (!qinv.square() || qinv.rows() != xi.size())
    throw Error(ErrorKind::DimensionMismatch, "vector length does not match the form");
  BigRational total = 0;
  for (std::size_t i = 0; i < xi.size(); ++i) {
    if (xi[i] == 0) continue;
    BigRational row = 0;
    for (std::size_t j = 0; j < xi.size(); ++j) row += qinv(i, j) * xi[j];
    total += row * xi[i];
  }
  return total;
}

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<std::int64_t> factors) : factors_(std::move(factors)) {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i] <= 1) throw Error(ErrorKind::InvalidArgument, "invariant factors must exceed 1");
    if (i > 0 && factors_[i] % factors_[i - 1] != 0)
      throw Error(ErrorKind::InvalidArgument, "invariant factors must form a divisibility chain");
    if (__builtin_mul_overflow(order_, factors_[i], &order_))
      throw Error(ErrorKind::GroupTooLarge, "group order exceeds 64 bits");
  }
}

std::size_t FiniteAbelianGroup::index_of(const CosetLabel& g) const {
  if (g.residues.size() != factors_.size()) throw Error(ErrorKind::DimensionMismatch, "label length");
  std::size_t index = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i)
    index = index * static_cast<std::size_t>(factors_[i]) + static_cast<std::size_t>(g.residues[i]);
  return index;
}

CosetLabel FiniteAbelianGroup::label_at(std::size_t index) const {
  CosetLabel g{std::vector<std::int64_t>(factors_.size())};
  for (std::size_t i = factors_.size(); i-- > 0;) {
    const auto d = static_cast<std::size_t>(factors_[i]);
    g.residues[i] = static_cast<std::int64_t>(index % d);
    index /= d;
  }
  return g;
}

CosetLabel FiniteAbelianGroup::negate(const CosetLabel& g) const { return scale(g, -1); }

CosetLabel FiniteAbelianGroup::add(const CosetLabel& a, const CosetLabel& b) const {
  CosetLabel r{std::vector<std::int64_t>(factors_.size())};
  for (std::size_t i = 0; i < factors_.size(); ++i) r.residues[i] = (a.residues[i] + b.residues[i]) % factors_[i];
  return r;
}

CosetLabel FiniteAbelianGroup::scale(const CosetLabel& g, std::int64_t k) const {
  CosetLabel r{std::vector<std::int64_t>(factors_.size())};
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const auto d = static_cast<__int128>(factors_[i]);
    auto v = (static_cast<__int128>(g.residues[i]) * k) % d;
    if (v < 0) v += d;
    r.residues[i] = static_cast<std::int64_t>(v);
  }
  return r;
}

std::int64_t FiniteAbelianGroup::element_order(const CosetLabel& g) const {
  std::int64_t order = 1;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const std::int64_t d = factors_[i];
    order = std::lcm(order, d / std::gcd(d, g.residues[i]));
  }
  return order;
}

CosetLabel QuotientGroup::coset_of(std::span<const BigInt> xi) const {
  if (xi.size() != rank_) throw Error(ErrorKind::DimensionMismatch, "vector length does not match the form");
  const auto factors = group_.factors();
  CosetLabel g{std::vector<std::int64_t>(factors.size())};
  for (std::size_t k = 0; k < factors.size(); ++k) {
    BigInt acc = 0;
    for (std::size_t j = 0; j < rank_; ++j) acc += projection_[k][j] * xi[j];
    BigInt r;
    mpz_fdiv_r_ui(r.get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(factors[k]));
    g.residues[k] = r.get_si();
  }
  return g;
}

CosetLabel QuotientGroup::coset_of(std::span<const std::int64_t> xi) const {
  if (xi.size() != rank_) throw Error(ErrorKind::DimensionMismatch, "vector length does not match the form");
  const auto factors = group_.factors();
  CosetLabel g{std::vector<std::int64_t>(factors.size())};
  for (std::size_t k = 0; k < factors.size(); ++k) {
    const __int128 d = factors[k];
    __int128 acc = 0;
    for (std::size_t j = 0; j < rank_; ++j) acc = (acc + static_cast<__int128>(projection_[k][j]) * xi[j]) % d;
    if (acc < 0) acc += d;
    g.residues[k] = static_cast<std::int64_t>(acc);
  }
  return g;
}

QuotientGroup quotient_group(const SymmetricForm& m) {
  if (m.determinant() == 0) throw Error(ErrorKind::Singular, "form has determinant 0");
  const auto snf = smith_normal_form(m.matrix());
  QuotientGroup q;
  q.rank_ = m.rank();
  std::vector<std::int64_t> factors;
  for (std::size_t k = 0; k < m.rank(); ++k) {
    if (snf.D(k, k) == 1) continue;
    if (!mpz_fits_slong_p(snf.D(k, k).get_mpz_t()))
      throw Error(ErrorKind::GroupTooLarge, "invariant factor exceeds 64 bits");
    const std::int64_t d = snf.D(k, k).get_si();
    factors.push_back(d);
    std::vector<std::int64_t> row(m.rank());
    for (std::size_t j = 0; j < m.rank(); ++j) {
      BigInt r;
      mpz_fdiv_r_ui(r.get_mpz_t(), snf.U(k, j).get_mpz_t(), static_cast<unsigned long>(d));
      row[j] = r.get_si();
    }
    q.projection_.push_back(std::move(row));
  }
  q.group_ = FiniteAbelianGroup(std::move(factors));
  return q;
}

}  // namespace untwist
