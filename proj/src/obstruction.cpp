#include "untwist/obstruction.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace untwist {

std::string_view to_string(Verdict v) { return v == Verdict::Obstructed ? "Obstructed" : "NotObstructed"; }

SymmetricForm candidate_form(const BigInt& determinant) {
  if (determinant < 1) throw Error(ErrorKind::NonPositive, "determinant must be positive");
  if (mpz_even_p(determinant.get_mpz_t()))
    throw Error(ErrorKind::EvenDeterminant, "determinant " + determinant.get_str() + " is even");
  IntMatrix q{{BigInt(-(determinant + 1) / 2), BigInt(1)}, {BigInt(1), BigInt(-2)}};
  return certify_definiteness(std::move(q));
}

CosetLabel Isomorphism::apply(const FiniteAbelianGroup& target, const CosetLabel& g) const {
  CosetLabel image = target.zero();
  for (std::size_t i = 0; i < generator_images.size(); ++i)
    image = target.add(image, target.scale(generator_images[i], g.residues[i]));
  return image;
}

namespace {

std::map<std::int64_t, std::vector<int>> primary_exponents(const FiniteAbelianGroup& g) {
  std::map<std::int64_t, std::vector<int>> out;
  for (std::int64_t d : g.factors()) {
    for (std::int64_t p = 2; p * p <= d; ++p) {
      int e = 0;
      while (d % p == 0) {
        d /= p;
        ++e;
      }
      if (e > 0) out[p].push_back(e);
    }
    if (d > 1) out[d].push_back(1);
  }
  for (auto& [p, exps] : out) std::sort(exps.begin(), exps.end());
  return out;
}

BigInt ipow(std::int64_t p, long e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(e));
  return r;
}

}  // namespace

BigInt automorphism_count(const FiniteAbelianGroup& g) {
  // For a p-group Z/p^e_1 + ... + Z/p^e_k with e_1 <= ... <= e_k, let
  // d_j = max{l : e_l = e_j} and c_j = min{l : e_l = e_j}; then
  // |Aut| = prod (p^d_j - p^(j-1)) * prod p^(e_j (k - d_j)) * prod p^((e_j - 1)(k - c_j + 1)).
  BigInt total = 1;
  for (const auto& [p, e] : primary_exponents(g)) {
    const long k = static_cast<long>(e.size());
    for (long j = 1; j <= k; ++j) {
      const int ej = e[static_cast<std::size_t>(j - 1)];
      long dj = j;
      while (dj < k && e[static_cast<std::size_t>(dj)] == ej) ++dj;
      long cj = j;
      while (cj > 1 && e[static_cast<std::size_t>(cj - 2)] == ej) --cj;
      total *= ipow(p, dj) - ipow(p, j - 1);
      total *= ipow(p, ej * (k - dj));
      total *= ipow(p, (ej - 1) * (k - cj + 1));
    }
  }
  return total;
}

IsomorphismEnumerator::IsomorphismEnumerator(FiniteAbelianGroup source, FiniteAbelianGroup target,
                                             std::uint64_t budget)
    : source_(std::move(source)), target_(std::move(target)) {
  if (source_ != target_) {
    exhausted_ = true;
    return;
  }
  const BigInt count = automorphism_count(target_);
  if (count > BigInt(static_cast<unsigned long>(budget)))
    throw Error(ErrorKind::GroupTooLarge,
                count.get_str() + " isomorphisms exceed the budget of " + std::to_string(budget));
  count_ = count.get_ui();

  const auto factors = source_.factors();
  candidates_.resize(factors.size());
  if (target_.cyclic() && !factors.empty()) {
    const std::int64_t n = factors[0];
    for (std::int64_t u = 1; u < n; ++u)
      if (std::gcd(u, n) == 1) candidates_[0].push_back(CosetLabel{{u}});
  } else {
    for (std::size_t idx = 0; idx < static_cast<std::size_t>(target_.order()); ++idx) {
      const auto h = target_.label_at(idx);
      const auto order = target_.element_order(h);
      for (std::size_t i = 0; i < factors.size(); ++i)
        if (order == factors[i]) candidates_[i].push_back(h);
    }
  }
  cursor_.assign(factors.size(), 0);
}

bool IsomorphismEnumerator::advance_candidate() {
  for (std::size_t i = cursor_.size(); i-- > 0;) {
    if (cursor_[i] + 1 < candidates_[i].size()) {
      ++cursor_[i];
      return true;
    }
    cursor_[i] = 0;
  }
  return false;
}

bool IsomorphismEnumerator::is_bijective() const {
  if (cursor_.size() <= 1) return true;  // a generator image of full order
  Isomorphism phi;
  for (std::size_t i = 0; i < cursor_.size(); ++i) phi.generator_images.push_back(candidates_[i][cursor_[i]]);
  std::vector<bool> hit(static_cast<std::size_t>(target_.order()), false);
  for (std::size_t idx = 0; idx < hit.size(); ++idx) {
    const auto image = target_.index_of(phi.apply(target_, source_.label_at(idx)));
    if (hit[image]) return false;
    hit[image] = true;
  }
  return true;
}

std::optional<Isomorphism> IsomorphismEnumerator::next() {
  if (exhausted_) return std::nullopt;
  for (;;) {
    if (!started_) {
      started_ = true;
      if (std::any_of(candidates_.begin(), candidates_.end(), [](const auto& c) { return c.empty(); })) {
        exhausted_ = true;
        return std::nullopt;
      }
    } else if (!advance_candidate()) {
      exhausted_ = true;
      return std::nullopt;
    }
    if (is_bijective()) {
      Isomorphism phi;
      for (std::size_t i = 0; i < cursor_.size(); ++i) phi.generator_images.push_back(candidates_[i][cursor_[i]]);
      return phi;
    }
  }
}

std::vector<Isomorphism> enumerate_isomorphisms(const FiniteAbelianGroup& source, const FiniteAbelianGroup& target,
                                                std::uint64_t budget) {
  IsomorphismEnumerator e(source, target, budget);
  std::vector<Isomorphism> out;
  while (auto phi = e.next()) out.push_back(std::move(*phi));
  return out;
}

namespace {

struct MatchFlags {
  bool positive = true;
  bool even = true;
};

MatchFlags check(const CorrectionTable& m_q, const CorrectionTable& m_g, const Isomorphism& phi) {
  MatchFlags f;
  const auto& source = m_q.group();
  for (std::size_t idx = 0; idx < m_q.size() && (f.positive || f.even); ++idx) {
    const auto g = source.label_at(idx);
    const auto& lhs = m_q.at_index(idx);
    const auto& rhs = m_g.at(phi.apply(m_g.group(), g));
    if (f.positive && lhs > rhs) f.positive = false;
    if (f.even && !is_even_integer(lhs - rhs)) f.even = false;
  }
  return f;
}

}  // namespace

bool is_matching(const CorrectionTable& m_q, const CorrectionTable& m_g, const Isomorphism& phi) {
  const auto f = check(m_q, m_g, phi);
  return f.positive && f.even;
}

MatchingSearch search_matchings(const CorrectionTable& m_q, const CorrectionTable& m_g, std::uint64_t budget) {
  MatchingSearch result;
  IsomorphismEnumerator isos(m_q.group(), m_g.group(), budget);
  while (auto phi = isos.next()) {
    ++result.isomorphisms_checked;
    const auto f = check(m_q, m_g, *phi);
    result.positive_matchings += f.positive ? 1 : 0;
    result.even_matchings += f.even ? 1 : 0;
    if (f.positive && f.even && !result.witness) result.witness = std::move(*phi);
  }
  return result;
}

std::optional<Isomorphism> find_matching(const CorrectionTable& m_q, const CorrectionTable& m_g,
                                         std::uint64_t budget) {
  IsomorphismEnumerator isos(m_q.group(), m_g.group(), budget);
  while (auto phi = isos.next())
    if (is_matching(m_q, m_g, *phi)) return phi;
  return std::nullopt;
}

namespace {

std::string describe_group(const FiniteAbelianGroup& g) {
  if (g.num_factors() == 0) return "0";
  std::string s;
  for (const auto d : g.factors()) {
    if (!s.empty()) s += " + ";
    s += "Z/" + std::to_string(d);
  }
  return s;
}

/// Values whose multiplicity in a exceeds that in b.
std::vector<BigRational> multiset_excess(std::vector<BigRational> a, std::vector<BigRational> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::vector<BigRational> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

ObstructionReport obstruct_tu_one(const ObstructionInput& input, std::uint64_t budget) {
  if (input.sign != 1 && input.sign != -1) throw Error(ErrorKind::InvalidArgument, "sign must be +1 or -1");
  if (input.signature != 0)
    throw Error(ErrorKind::SignatureNonzero, "signature is " + std::to_string(input.signature) + ", expected 0");
  if (!input.goeritz.negative_definite())
    throw Error(ErrorKind::NotNegativeDefinite, "Goeritz form must be negative definite");
  const BigInt det = abs(input.goeritz.determinant());
  if (input.determinant && *input.determinant != det)
    throw Error(ErrorKind::ValidationError, "Goeritz determinant " + det.get_str() +
                                                " disagrees with the recorded determinant " +
                                                input.determinant->get_str());
  const auto q = candidate_form(det);

  ObstructionReport report;
  report.knot = input.knot;
  report.sign = input.sign;
  report.determinant = det;
  report.goeritz = input.goeritz.matrix();
  report.candidate = q.matrix();
  report.m_q = m_table(q);
  report.m_g = m_table(input.goeritz);

  if (report.m_q.group() != report.m_g.group()) {
    report.verdict = Verdict::Obstructed;
    report.refutation = "group mismatch: " + describe_group(report.m_q.group()) + " vs " +
                        describe_group(report.m_g.group());
    return report;
  }

  const auto search = search_matchings(report.m_q, report.m_g, budget);
  report.isomorphisms_checked = search.isomorphisms_checked;
  report.even_matchings = search.even_matchings;
  report.positive_matchings = search.positive_matchings;
  if (search.witness) {
    report.verdict = Verdict::NotObstructed;
    report.witness = search.witness;
    return report;
  }

  report.verdict = Verdict::Obstructed;
  report.missing_values = multiset_excess(mod2_representatives(report.m_q).values(),
                                          mod2_representatives(report.m_g).values());
  if (!report.missing_values.empty()) {
    std::string list;
    for (const auto& v : report.missing_values) list += (list.empty() ? "" : ", ") + to_string(v);
    report.refutation = "no even matching: m_Q mod 2 values " + list + " do not occur (as often) in m_G mod 2";
  } else {
    report.refutation = "no positive, even matching among " + std::to_string(search.isomorphisms_checked) +
                        " isomorphisms (" + std::to_string(search.even_matchings) + " even, " +
                        std::to_string(search.positive_matchings) + " positive)";
  }
  return report;
}

bool verify_report(const ObstructionReport& report) {
  if (report.verdict == Verdict::Obstructed) return !report.witness.has_value();
  if (!report.witness) return false;
  const auto& phi = *report.witness;
  if (phi.generator_images.size() != report.m_q.group().num_factors()) return false;
  // Bijective homomorphism, checked directly.
  std::set<CosetLabel> images;
  for (std::size_t idx = 0; idx < report.m_q.size(); ++idx)
    images.insert(phi.apply(report.m_g.group(), report.m_q.group().label_at(idx)));
  if (images.size() != report.m_g.size() || report.m_q.size() != report.m_g.size()) return false;
  for (std::size_t i = 0; i < phi.generator_images.size(); ++i)
    if (report.m_g.group().element_order(phi.generator_images[i]) != report.m_q.group().factors()[i]) return false;
  return is_matching(report.m_q, report.m_g, phi);
}

ManifoldProfile manifold_profile(std::int64_t p, std::int64_t n, std::int64_t sigma) {
  if (p < 0 || n < 0) throw Error(ErrorKind::NonPositive, "crossing change counts must be nonnegative");
  if (sigma % 2 != 0) throw Error(ErrorKind::InvalidArgument, "knot signature must be even");
  ManifoldProfile m{2 * n + 2 * p, 2 * n - 2 * p + sigma, Definiteness::Indefinite};
  // b2 = 0 satisfies both equalities vacuously; report it as Indefinite.
  if (m.b2 == 0) return m;
  if (m.signature == -m.b2) m.definiteness = Definiteness::NegativeDefinite;
  if (m.signature == m.b2) m.definiteness = Definiteness::PositiveDefinite;
  return m;
}

}  // namespace untwist
