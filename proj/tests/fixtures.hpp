#pragma once

// Shared fixtures: the 10_68 data (Goeritz matrices of the knot and its
// mirror, the candidate form, and the three reference value lists) plus
// hand-encoded alternating diagrams.

#include <sstream>
#include <string>
#include <vector>

#include "untwist/arith.hpp"
#include "untwist/matrix.hpp"
#include "oracles.hpp"

namespace fixtures {

inline untwist::IntMatrix to_matrix(const oracle::IntGrid& g) {
  untwist::IntMatrix m(g.size(), g.empty() ? 0 : g[0].size());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = g[i][j];
  return m;
}

// Exact, for matrices whose entries may not fit in a long.
inline oracle::RatGrid to_rational_grid(const untwist::IntMatrix& m) {
  oracle::RatGrid g(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) g[i].emplace_back(m(i, j));
  return g;
}

inline oracle::IntGrid to_grid(const untwist::IntMatrix& m) {
  oracle::IntGrid g(m.rows(), std::vector<long>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) g[i][j] = m(i, j).get_si();
  return g;
}

inline untwist::IntMatrix goeritz_10_68() {
  return {{-4, 1, 1, 0, 0, 1, 0}, {1, -3, 0, 0, 1, 0, 0}, {1, 0, -2, 1, 0, 0, 0}, {0, 0, 1, -2, 1, 0, 0},
          {0, 1, 0, 1, -3, 0, 1},  {1, 0, 0, 0, 0, -2, 1},  {0, 0, 0, 0, 1, 1, -2}};
}
inline untwist::IntMatrix goeritz_mirror_10_68() { return {{-3, 1, 0}, {1, -5, 3}, {0, 3, -6}}; }
inline untwist::IntMatrix candidate_10_68() { return {{-29, 1}, {1, -2}}; }

// m_G mod 2 for the 7x7 Goeritz matrix.
inline const char* kMG =
    "0 98/57 50/57 28/19 86/57 56/57 36/19 14/57 2/57 24/19 110/57 2/57 30/19 32/57 56/57 16/19 8/57 50/57 "
    "20/19 2/3 98/57 4/19 8/57 86/57 6/19 32/57 14/57 26/19 110/57 110/57 26/19 14/57 32/57 6/19 86/57 8/57 "
    "4/19 98/57 2/3 20/19 50/57 8/57 16/19 56/57 32/57 30/19 2/57 110/57 24/19 2/57 14/57 36/19 56/57 86/57 "
    "28/19 50/57 98/57";
// m_Q mod 2 for [[-29,1],[1,-2]].
inline const char* kMQ =
    "0 112/57 106/57 32/19 82/57 64/57 14/19 16/57 100/57 22/19 28/57 100/57 18/19 4/57 64/57 2/19 58/57 "
    "106/57 12/19 4/3 112/57 10/19 58/57 82/57 34/19 4/57 16/57 8/19 28/57 28/57 8/19 16/57 4/57 34/19 82/57 "
    "58/57 10/19 112/57 4/3 12/19 106/57 58/57 2/19 64/57 4/57 18/19 100/57 28/57 22/19 100/57 16/57 14/19 "
    "64/57 82/57 32/19 106/57 112/57";
// Raw m values for the mirror's 3x3 Goeritz matrix.
inline const char* kMGMirror =
    "0 4/57 16/57 12/19 -50/57 -14/57 10/19 -32/57 28/57 -6/19 -56/57 28/57 2/19 -8/57 -14/57 -4/19 -2/57 "
    "16/57 -24/19 -2/3 4/57 -20/19 -2/57 -50/57 -30/19 -8/57 -32/57 -16/19 -56/57 -56/57 -16/19 -32/57 -8/57 "
    "-30/19 -50/57 -2/57 -20/19 4/57 -2/3 -24/19 16/57 -2/57 -4/19 -14/57 -8/57 2/19 28/57 -56/57 -6/19 "
    "28/57 -32/57 10/19 -14/57 -50/57 12/19 16/57 4/57";

inline std::vector<untwist::BigRational> parse_list(const char* text) {
  std::istringstream in(text);
  std::vector<untwist::BigRational> out;
  std::string token;
  while (in >> token) out.push_back(untwist::parse_rational(token));
  return out;
}

// Alternating diagrams. 3_1 is right-handed; 4_1 is the Knot Atlas code.
inline const char* kTrefoil = "[[1,5,2,4],[3,1,4,6],[5,3,6,2]]";
inline const char* kTrefoilLeft = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";
inline const char* kTrefoilKinked = "X(2,1,3,2) X(8,6,1,5) X(4,8,5,7) X(6,4,7,3)";
inline const char* kFigureEight = "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)";
inline const char* kFigureEightKinked = "X(10,6,1,5) X(4,2,5,1) X(2,9,3,10) X(6,3,7,4) X(8,7,9,8)";
// 10_68, with edge labels chosen so that the region ordering reproduces the
// 7x7 and 3x3 matrices above entry for entry.
inline const char* k10_68 =
    "X(4,1,7,2) X(1,15,5,7) X(3,18,2,5) X(18,6,10,13) X(13,12,17,4) X(15,20,9,3) X(14,10,6,8) X(8,9,11,14) X(16,11,20,19) X(19,17,12,16)";
// The same diagram with labels running consecutively along the knot.
inline const char* k10_68Sequential =
    "X(9,1,10,20) X(1,11,2,10) X(19,3,20,2) X(3,14,4,15) X(15,8,16,9) X(11,18,12,19) X(13,4,14,5) X(5,12,6,13) X(17,6,18,7) X(7,16,8,17)";
// A second alternating diagram of 10_68 (the white Tait graph re-embedded).
inline const char* k10_68Alt =
    "X(20,10,1,9) X(10,2,11,1) X(2,20,3,19) X(8,15,9,16) X(14,3,15,4) X(18,11,19,12) X(16,7,17,8) "
    "X(6,17,7,18) X(12,5,13,6) X(4,13,5,14)";
// 7 crossings: the (2,7) torus knot 7_1.
inline const char* kSevenOne =
    "X(1,9,2,8) X(3,11,4,10) X(5,13,6,12) X(7,1,8,14) X(9,3,10,2) X(11,5,12,4) X(13,7,14,6)";

}  // namespace fixtures
