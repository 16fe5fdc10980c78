#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "untwist/error.hpp"
#include "untwist/obstruction.hpp"

using namespace untwist;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an untwist::Error");
  return ErrorKind::Usage;
}

CorrectionTable table(const IntMatrix& m) { return m_table(certify_definiteness(m)); }

ObstructionInput input_10_68(int sign) {
  return ObstructionInput{"10_68", sign, 0, BigInt(57),
                          certify_definiteness(sign > 0 ? fixtures::goeritz_10_68() : fixtures::goeritz_mirror_10_68())};
}

}  // namespace

TEST_CASE("candidate_form") {
  auto q = candidate_form(57);
  CHECK(q.matrix() == fixtures::candidate_10_68());
  CHECK(q.negative_definite());
  CHECK(q.determinant() == 57);
  CHECK(candidate_form(5).matrix() == IntMatrix{{-3, 1}, {1, -2}});
  CHECK(candidate_form(1).matrix() == IntMatrix{{-1, 1}, {1, -2}});
  CHECK(kind_of([] { candidate_form(4); }) == ErrorKind::EvenDeterminant);
  CHECK(kind_of([] { candidate_form(-3); }) == ErrorKind::NonPositive);
  for (long d = 1; d < 200; d += 2) {
    auto c = candidate_form(d);
    CHECK(c.negative_definite());
    CHECK(c.determinant() == d);
  }
}

TEST_CASE("isomorphism enumeration examples") {
  FiniteAbelianGroup z57({57});
  auto isos = enumerate_isomorphisms(z57, z57);
  REQUIRE(isos.size() == 36);
  std::vector<std::int64_t> multipliers;
  for (const auto& phi : isos) multipliers.push_back(phi.generator_images.at(0).residues.at(0));
  CHECK(std::is_sorted(multipliers.begin(), multipliers.end()));
  CHECK(multipliers.front() == 1);
  CHECK(multipliers.back() == 56);
  for (auto u : multipliers) CHECK(std::gcd(u, std::int64_t{57}) == 1);

  auto trivial = enumerate_isomorphisms(FiniteAbelianGroup(), FiniteAbelianGroup());
  REQUIRE(trivial.size() == 1);
  CHECK(trivial[0].generator_images.empty());

  CHECK(enumerate_isomorphisms(FiniteAbelianGroup({3}), FiniteAbelianGroup({9})).empty());
  CHECK(enumerate_isomorphisms(FiniteAbelianGroup({2, 2}), FiniteAbelianGroup({4})).empty());
}

TEST_CASE("isomorphism counts agree with brute force") {
  const std::vector<std::vector<long>> groups = {{2}, {5}, {12}, {2, 2}, {2, 4}, {3, 3}, {2, 6}, {2, 2, 2}, {3, 9}, {2, 8}};
  for (const auto& f : groups) {
    CAPTURE(f.size());
    FiniteAbelianGroup g(std::vector<std::int64_t>(f.begin(), f.end()));
    long expected = oracle::brute_automorphisms(f);
    CHECK(automorphism_count(g) == expected);
    auto isos = enumerate_isomorphisms(g, g);
    CHECK(static_cast<long>(isos.size()) == expected);
    std::set<std::vector<CosetLabel>> distinct;
    for (const auto& phi : isos) {
      distinct.insert(phi.generator_images);
      // Bijective on elements.
      std::set<CosetLabel> image;
      for (std::size_t i = 0; i < static_cast<std::size_t>(g.order()); ++i) image.insert(phi.apply(g, g.label_at(i)));
      CHECK(static_cast<std::int64_t>(image.size()) == g.order());
    }
    CHECK(distinct.size() == isos.size());
  }
  for (long n = 1; n < 80; ++n) {
    if (n == 1) continue;
    CHECK(automorphism_count(FiniteAbelianGroup({n})) == oracle::euler_phi(n));
  }
}

TEST_CASE("isomorphism budget") {
  FiniteAbelianGroup g({57});
  CHECK(IsomorphismEnumerator(g, g, 36).count() == 36);
  CHECK(kind_of([&] { IsomorphismEnumerator(g, g, 35); }) == ErrorKind::GroupTooLarge);
  FiniteAbelianGroup big({2, 2, 2, 2, 2, 2});  // |GL_6(F_2)| = 20158709760
  CHECK(kind_of([&] { IsomorphismEnumerator(big, big); }) == ErrorKind::GroupTooLarge);
}

TEST_CASE("matching search on the 10_68 fixtures") {
  auto mq = table(fixtures::candidate_10_68());
  auto mg = table(fixtures::goeritz_10_68());
  auto mgp = table(fixtures::goeritz_mirror_10_68());

  CHECK_FALSE(find_matching(mq, mg).has_value());
  auto plus = search_matchings(mq, mg);
  CHECK(plus.isomorphisms_checked == 36);
  CHECK(plus.even_matchings == 0);

  CHECK_FALSE(find_matching(mq, mgp).has_value());
  auto minus = search_matchings(mq, mgp);
  CHECK(minus.isomorphisms_checked == 36);
  CHECK_FALSE(minus.witness.has_value());

  // Brute-force oracle over all unit multipliers, keyed by group labels.
  const auto& g = mq.group();
  long even = 0, positive = 0;
  for (std::int64_t u = 1; u < 57; ++u) {
    if (std::gcd(u, std::int64_t{57}) != 1) continue;
    bool is_even = true, is_positive = true;
    for (std::size_t i = 0; i < 57; ++i) {
      auto x = g.label_at(i);
      auto diff = mgp.at(g.scale(x, u)) - mq.at(x);
      is_even = is_even && is_even_integer(diff);
      is_positive = is_positive && diff >= 0;
    }
    even += is_even;
    positive += is_positive;
  }
  CHECK(static_cast<std::uint64_t>(even) == minus.even_matchings);
  CHECK(static_cast<std::uint64_t>(positive) == minus.positive_matchings);
}

TEST_CASE("any table matches itself via the identity") {
  for (const auto& m : {fixtures::goeritz_10_68(), fixtures::candidate_10_68(), IntMatrix{{-2, 0}, {0, -2}}}) {
    auto t = table(m);
    auto w = find_matching(t, t);
    REQUIRE(w.has_value());
    CHECK(is_matching(t, t, *w));
    auto identity = enumerate_isomorphisms(t.group(), t.group()).front();
    CHECK(*w == identity);
  }
}

TEST_CASE("obstruct_tu_one on 10_68") {
  auto plus = obstruct_tu_one(input_10_68(1));
  CHECK(plus.verdict == Verdict::Obstructed);
  CHECK_FALSE(plus.witness.has_value());
  CHECK(std::find(plus.missing_values.begin(), plus.missing_values.end(), BigRational(112, 57)) !=
        plus.missing_values.end());
  CHECK(plus.refutation.find("112/57") != std::string::npos);

  auto minus = obstruct_tu_one(input_10_68(-1));
  CHECK(minus.verdict == Verdict::Obstructed);
  CHECK(minus.isomorphisms_checked == 36);
  CHECK(minus.refutation.find("36") != std::string::npos);
  CHECK(minus.missing_values.empty());
}

TEST_CASE("obstruct_tu_one on the figure-eight") {
  for (int sign : {1, -1}) {
    auto g = certify_definiteness(sign > 0 ? IntMatrix{{-3, 1}, {1, -2}} : IntMatrix{{-3, 2}, {2, -3}});
    auto r = obstruct_tu_one(ObstructionInput{"4_1", sign, 0, BigInt(5), g});
    CHECK(r.verdict == Verdict::NotObstructed);
    REQUIRE(r.witness.has_value());
    CHECK(verify_report(r));
    CHECK(is_matching(r.m_q, r.m_g, *r.witness));
  }
}

TEST_CASE("obstruct_tu_one errors") {
  auto g = certify_definiteness(fixtures::goeritz_10_68());
  CHECK(kind_of([&] { obstruct_tu_one(ObstructionInput{"k", 1, 2, std::nullopt, g}); }) ==
        ErrorKind::SignatureNonzero);
  CHECK(kind_of([&] { obstruct_tu_one(ObstructionInput{"k", 1, 0, BigInt(59), g}); }) ==
        ErrorKind::ValidationError);
  auto even = certify_definiteness({{-2, 0}, {0, -2}});
  CHECK(kind_of([&] { obstruct_tu_one(ObstructionInput{"k", 1, 0, std::nullopt, even}); }) ==
        ErrorKind::EvenDeterminant);
  auto indefinite = certify_definiteness({{1, 0}, {0, -3}});
  CHECK(kind_of([&] { obstruct_tu_one(ObstructionInput{"k", 1, 0, std::nullopt, indefinite}); }) ==
        ErrorKind::NotNegativeDefinite);
}

TEST_CASE("verdicts are consistent with witnesses and mod-2 multisets") {
  std::mt19937_64 rng(21);
  int tried = 0;
  while (tried < 25) {
    auto q = oracle::random_negative_definite(rng, 2 + tried % 2, 5, 2);
    auto form = certify_definiteness(fixtures::to_matrix(q));
    if (mpz_even_p(form.determinant().get_mpz_t())) continue;
    ++tried;
    auto r = obstruct_tu_one(ObstructionInput{"random", 1, 0, std::nullopt, form});
    CHECK((r.verdict == Verdict::NotObstructed) == r.witness.has_value());
    if (r.witness) CHECK(verify_report(r));
    // For cyclic groups, unequal mod-2 multisets force an obstruction that names a value.
    if (r.m_q.group() == r.m_g.group() && r.m_q.group().cyclic()) {
      bool equal = mod2_representatives(r.m_q).sorted_values() == mod2_representatives(r.m_g).sorted_values();
      if (!equal) {
        CHECK(r.verdict == Verdict::Obstructed);
        CHECK_FALSE(r.missing_values.empty());
      }
    }
  }
}

TEST_CASE("manifold_profile") {
  CHECK(manifold_profile(1, 0, 0) == ManifoldProfile{2, -2, Definiteness::NegativeDefinite});
  CHECK(manifold_profile(0, 1, 0) == ManifoldProfile{2, 2, Definiteness::PositiveDefinite});
  CHECK(manifold_profile(1, 1, 0) == ManifoldProfile{4, 0, Definiteness::Indefinite});
  CHECK(manifold_profile(0, 0, 0).definiteness == Definiteness::Indefinite);
  CHECK(manifold_profile(2, 0, -2) == ManifoldProfile{4, -6, Definiteness::Indefinite});
  CHECK(kind_of([] { manifold_profile(-1, 0, 0); }) == ErrorKind::NonPositive);
}
