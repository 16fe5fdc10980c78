// Acceptance suite: one line per criterion, [PASS] or [FAIL], with timings.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "untwist/commands.hpp"
#include "untwist/error.hpp"
#include "untwist/twist_bounds.hpp"

using namespace untwist;
using fixtures::to_matrix;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

std::string data(const std::string& rel) { return std::string(UNTWIST_DATA_DIR) + "/" + rel; }

KnotRecord load_record(const std::string& rel) {
  auto in = load_input(data(rel));
  if (in.records.size() != 1) throw Error(ErrorKind::ValidationError, "expected one record in " + rel);
  return in.records.front();
}

std::vector<BigRational> sorted(std::vector<BigRational> v) {
  std::sort(v.begin(), v.end());
  return v;
}

bool contains(const std::vector<BigRational>& v, const BigRational& x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

Outcome fixture_list(const IntMatrix& m, bool mod2_flag, const char* expected_text) {
  auto table = run_dinv(m, mod2_flag);
  auto expected = sorted(fixtures::parse_list(expected_text));
  auto got = table.sorted_values();
  Outcome o;
  o.ok = got.size() == 57 && got == expected;
  o.detail = std::to_string(got.size()) + " values, multiset " + (got == expected ? "equal" : "differs");
  return o;
}

Outcome ac1() { return fixture_list(fixtures::goeritz_10_68(), true, fixtures::kMG); }

Outcome ac2() {
  Outcome o = fixture_list(fixtures::candidate_10_68(), true, fixtures::kMQ);
  auto mq = run_dinv(fixtures::candidate_10_68(), true).sorted_values();
  auto mg = run_dinv(fixtures::goeritz_10_68(), true).sorted_values();
  bool distinguishing = contains(mq, BigRational(112, 57)) && !contains(mg, BigRational(112, 57));
  o.ok = o.ok && distinguishing;
  o.detail += distinguishing ? "; 112/57 in m_Q only" : "; 112/57 check failed";
  return o;
}

Outcome ac3() { return fixture_list(fixtures::goeritz_mirror_10_68(), false, fixtures::kMGMirror); }

Outcome ac4() {
  Outcome o;
  for (const char* rel : {"knots/10_68.json", "knots/10_68_matrices.json"}) {
    auto record = load_record(rel);
    if (record.signature != 0 || !record.determinant || *record.determinant != 57) o.ok = false;
    auto reports = run_obstruct(record, {1, -1}, kDefaultIsomorphismBudget);
    const auto& plus = reports.at(0);
    const auto& minus = reports.at(1);
    bool plus_ok = plus.verdict == Verdict::Obstructed && plus.even_matchings == 0 && !plus.witness &&
                   contains(plus.missing_values, BigRational(112, 57));
    bool minus_ok = minus.verdict == Verdict::Obstructed && minus.isomorphisms_checked == 36 && !minus.witness;
    bool determined = conclusion(record, reports).starts_with("tu = 2");
    o.ok = o.ok && plus_ok && minus_ok && determined;
    o.detail += std::string(o.detail.empty() ? "" : "; ") + record.name + " from " + rel + ": +1 " +
                std::string(to_string(plus.verdict)) + ", -1 " + std::string(to_string(minus.verdict)) + " after " +
                std::to_string(minus.isomorphisms_checked) + " isomorphisms";
  }
  return o;
}

Outcome ac5() {
  Outcome o;
  auto record = load_record("knots/4_1.json");
  auto reports = run_obstruct(record, {1, -1}, kDefaultIsomorphismBudget);
  for (const auto& r : reports) {
    bool ok = r.verdict == Verdict::NotObstructed && r.witness && verify_report(r) && is_matching(r.m_q, r.m_g, *r.witness);
    o.ok = o.ok && ok;
  }
  o.detail = "4_1 NotObstructed with verified witness for both signs";
  if (!o.ok) o.detail = "4_1 negative control failed";
  return o;
}

// Property suite.
Outcome ac6() {
  Outcome o;
  std::mt19937_64 rng(20240611);
  int failures = 0;

  // (a) Smith normal form contract.
  std::uniform_int_distribution<long> entry(-9, 9);
  for (int t = 0; t < 1000; ++t) {
    std::size_t r = 1 + t % 7;
    oracle::IntGrid m(r, std::vector<long>(r));
    for (auto& row : m)
      for (auto& v : row) v = entry(rng);
    if (t % 25 == 0 && r > 1) m[r - 1] = m[0];
    IntMatrix mm = to_matrix(m);
    auto s = smith_normal_form(mm);
    bool ok = s.U * mm * s.V == s.D;
    ok = ok && abs(oracle::det(fixtures::to_rational_grid(s.U))) == 1 &&
              abs(oracle::det(fixtures::to_rational_grid(s.V))) == 1;
    BigInt prod = 1;
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < r; ++j)
        if (i != j && s.D(i, j) != 0) ok = false;
      if (s.D(i, i) < 0) ok = false;
      if (i + 1 < r && s.D(i, i) != 0 && s.D(i + 1, i + 1) % s.D(i, i) != 0) ok = false;
      if (i + 1 < r && s.D(i, i) == 0 && s.D(i + 1, i + 1) != 0) ok = false;
      prod *= s.D(i, i);
    }
    ok = ok && prod == abs(oracle::det(m));
    if (!ok) ++failures;
  }
  std::string a = "(a) " + std::to_string(1000 - failures) + "/1000";
  int before = failures;

  // (b) symmetry and table size.
  for (int t = 0; t < 200; ++t) {
    auto q = oracle::random_negative_definite(rng, 1 + t % 4, 6, 3);
    auto table = m_table(certify_definiteness(to_matrix(q)));
    bool ok = BigInt(static_cast<long>(table.size())) == abs(oracle::det(q));
    const auto& g = table.group();
    for (std::size_t i = 0; i < table.size(); ++i) {
      auto x = g.label_at(i);
      if (table.at(x) != table.at(g.negate(x))) ok = false;
    }
    if (!ok) ++failures;
  }
  std::string b = "(b) " + std::to_string(200 - (failures - before)) + "/200";
  before = failures;

  // (c) box sufficiency with a threefold box.
  for (int t = 0; t < 50; ++t) {
    auto q = oracle::random_negative_definite(rng, 1 + t % 4, 6, 3);
    auto form = certify_definiteness(to_matrix(q));
    if (!(m_table(form) == m_table_in_box(form, 3))) ++failures;
  }
  std::string c = "(c) " + std::to_string(50 - (failures - before)) + "/50";
  before = failures;

  // (d) congruence invariance.
  for (int t = 0; t < 50; ++t) {
    std::size_t r = 1 + t % 4;
    auto q = oracle::random_negative_definite(rng, r, 5, 2);
    auto p = oracle::random_unimodular(rng, r, 3);
    auto q2 = oracle::congruent(q, p);
    if (m_table(certify_definiteness(to_matrix(q))).sorted_values() !=
        m_table(certify_definiteness(to_matrix(q2))).sorted_values())
      ++failures;
  }
  std::string d = "(d) " + std::to_string(50 - (failures - before)) + "/50";
  before = failures;

  // (e) coset classification against the rational-solve oracle, all forms of
  // rank <= 2 with entries in [-5, 5].
  int forms = 0;
  auto check_form = [&](const oracle::IntGrid& m) {
    if (oracle::det(m) == 0) return;
    ++forms;
    auto qg = quotient_group(certify_definiteness(to_matrix(m)));
    bool ok = BigInt(qg.group().order()) == abs(oracle::det(m));
    const std::size_t r = m.size();
    std::vector<std::vector<long>> vecs;
    if (r == 1)
      for (long x = -6; x <= 6; ++x) vecs.push_back({x});
    else
      for (long x = -2; x <= 2; ++x)
        for (long y = -2; y <= 2; ++y) vecs.push_back({x, y});
    std::vector<CosetLabel> labels;
    for (const auto& v : vecs) {
      std::vector<std::int64_t> w(v.begin(), v.end());
      labels.push_back(qg.coset_of(w));
    }
    for (std::size_t i = 0; i < vecs.size() && ok; ++i)
      for (std::size_t j = i + 1; j < vecs.size() && ok; ++j) {
        std::vector<long> diff(r);
        for (std::size_t k = 0; k < r; ++k) diff[k] = vecs[i][k] - vecs[j][k];
        if ((labels[i] == labels[j]) != oracle::in_lattice(m, diff)) ok = false;
      }
    if (!ok) ++failures;
  };
  for (long a1 = -5; a1 <= 5; ++a1) check_form({{a1}});
  for (long a1 = -5; a1 <= 5; ++a1)
    for (long b1 = -5; b1 <= 5; ++b1)
      for (long c1 = -5; c1 <= 5; ++c1) check_form({{a1, b1}, {b1, c1}});
  std::string e = "(e) " + std::to_string(forms - (failures - before)) + "/" + std::to_string(forms) + " forms";

  o.ok = failures == 0;
  o.detail = a + " " + b + " " + c + " " + d + " " + e;
  return o;
}

Outcome ac7() {
  Outcome o;
  struct Case {
    const char* name;
    const char* pd;
    long det;
  };
  for (const Case& k : {Case{"3_1", fixtures::kTrefoil, 3}, Case{"4_1", fixtures::kFigureEight, 5},
                        Case{"10_68", fixtures::k10_68, 57}}) {
    auto d = parse_pd(k.pd);
    auto g = goeritz_matrix(d);
    auto c0 = goeritz_matrix(d, 0), c1 = goeritz_matrix(d, 1);
    bool ok = determinant_from_goeritz(g) == k.det && c0.form.negative_definite() && c1.form.negative_definite() &&
              determinant_from_goeritz(c0) == determinant_from_goeritz(c1);
    o.ok = o.ok && ok;
    o.detail += std::string(o.detail.empty() ? "" : ", ") + k.name + " |det| " +
                to_string(determinant_from_goeritz(g)) + (ok ? "" : " (mismatch)");
  }
  auto exact = goeritz_matrix(parse_pd(fixtures::k10_68)).form.matrix() == fixtures::goeritz_10_68() &&
               goeritz_matrix(mirror(parse_pd(fixtures::k10_68))).form.matrix() == fixtures::goeritz_mirror_10_68();
  o.ok = o.ok && exact;
  o.detail += exact ? "; 10_68 matrices exact" : "; 10_68 matrices differ";
  return o;
}

Outcome ac8() {
  Outcome o;
  for (std::int64_t p = 2; p <= 10; ++p) {
    if (tu_lower_bound_tau(p * p * p, p) != p) o.ok = false;
    if (!(cable_gap(p) == CableGap{p, p - 1})) o.ok = false;
  }
  for (std::int64_t q = 1; q <= 10000; ++q) {
    auto c = crossing_decomposition(q);
    if (c.opposite_pairs != q * q || c.same_pairs != q * q - q || c.total != q * (2 * q - 1) ||
        c.opposite_pairs + c.same_pairs != c.total)
      o.ok = false;
  }
  o.detail = "tau bounds p=2..10, cable gaps, decomposition identity q<=10^4";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* id;
    const char* title;
    double limit_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"AC1", "m_G mod 2 fixture", 1.0, ac1},
      {"AC2", "m_Q mod 2 fixture", 1.0, ac2},
      {"AC3", "m_G' raw fixture", 1.0, ac3},
      {"AC4", "10_68 obstruction", 5.0, ac4},
      {"AC5", "figure-eight negative control", 1.0, ac5},
      {"AC6", "property suite", 60.0, ac6},
      {"AC7", "Goeritz pipeline", 1.0, ac7},
      {"AC8", "twist bound fixtures", 1.0, ac8},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_time = secs < c.limit_seconds;
    bool pass = o.ok && in_time;
    if (!pass) ++failed;
    std::printf("[%s] %s %s: %s (%.3f s, limit %.0f s%s)\n", pass ? "PASS" : "FAIL", c.id, c.title, o.detail.c_str(),
                secs, c.limit_seconds, in_time ? "" : ", too slow");
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
