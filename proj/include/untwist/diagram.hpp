#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "untwist/lattice.hpp"

namespace untwist {

/// One crossing in PD form: edge labels counterclockwise, starting from the
/// incoming under-strand. The under-strand runs from slot 0 to slot 2.
using PdCrossing = std::array<std::int64_t, 4>;

/// A validated PD-code knot diagram: every edge label occurs exactly twice,
/// the diagram is connected, traces a single component, and each under-strand
/// enters at slot 0 and leaves at slot 2.
class KnotDiagram {
 public:
  /// Throws ValidationError on inconsistent data.
  static KnotDiagram from_crossings(std::vector<PdCrossing> crossings);

  const std::vector<PdCrossing>& crossings() const noexcept { return crossings_; }
  std::size_t num_crossings() const noexcept { return crossings_.size(); }

  /// (crossing, slot) of the other end of the edge leaving `crossing` at `slot`.
  std::pair<std::size_t, int> opposite_end(std::size_t crossing, int slot) const {
    return partner_[crossing * 4 + static_cast<std::size_t>(slot)];
  }
  /// Slot (1 or 3) at which the knot enters each crossing along its over-strand.
  int over_entry(std::size_t crossing) const { return over_entry_[crossing]; }
  /// True when the knot alternates over, under, over, ... along its length.
  bool alternating() const noexcept { return alternating_; }

  friend bool operator==(const KnotDiagram& a, const KnotDiagram& b) { return a.crossings_ == b.crossings_; }

 private:
  std::vector<PdCrossing> crossings_;
  std::vector<std::pair<std::size_t, int>> partner_;
  std::vector<int> over_entry_;
  bool alternating_ = false;
};

/// Accepts "X(1,4,2,5) X(3,6,4,1)", Knot Atlas "PD[X[1,4,2,5], ...]" and
/// KnotInfo "[[1,4,2,5],[3,6,4,1]]" spellings.
/// Throws ParseError on bad syntax and ValidationError on bad data.
KnotDiagram parse_pd(std::string_view text);

std::string format_pd(const KnotDiagram& d);

/// A corner is the region between slot k and slot k+1 (mod 4) of a crossing.
struct Corner {
  std::size_t crossing;
  int slot;

  friend auto operator<=>(const Corner&, const Corner&) = default;
};

struct Face {
  std::vector<std::int64_t> edges;  // boundary edge labels in tracing order
  std::vector<Corner> corners;
  std::int64_t lowest_edge() const;
};

/// Complementary regions of the diagram traced from the planar rotation at
/// each crossing. Throws NonPlanar unless there are exactly crossings + 2.
std::vector<Face> faces(const KnotDiagram& d);

/// One of the two checkerboard colorings of the diagram's regions.
struct Coloring {
  std::vector<Face> faces;
  std::vector<bool> white;          // indexed like faces
  std::vector<std::size_t> white_faces;  // white face indices, sorted by lowest boundary edge
  std::size_t deleted_face = 0;     // index into faces; the first entry of white_faces

  std::size_t num_white() const noexcept { return white_faces.size(); }
  /// Face index containing corner `slot` of crossing c.
  std::size_t face_at(std::size_t crossing, int slot) const;

  std::vector<std::size_t> corner_face;  // crossing * 4 + slot -> face index
};

/// Both proper two-colorings. The first has the region at corner 0 of
/// crossing 0 white; the second is its complement.
std::pair<Coloring, Coloring> checkerboard(const KnotDiagram& d);

/// Index (0 or 1) of the coloring whose white regions sit in corners 1 and 3
/// of every crossing, i.e. the regions met by turning counterclockwise from
/// the over-strand onto the under-strand. For alternating diagrams this is the
/// coloring whose reduced incidence matrix is the negative definite Goeritz
/// matrix of the knot itself rather than of its mirror.
/// Throws NotAlternating.
int calibrated_coloring(const KnotDiagram& d);

struct GoeritzMatrix {
  SymmetricForm form;
  int coloring = 0;               // which of checkerboard()'s colorings
  std::int64_t deleted_edge = 0;  // lowest boundary edge of the deleted white region
  std::size_t white_regions = 0;  // n + 1 before deletion
};

/// Reduced white-region incidence matrix. Throws NotAlternating and
/// ConventionMismatch (result not negative definite), and ValidationError when
/// the coloring has a single white region (rank 0).
GoeritzMatrix goeritz_matrix(const KnotDiagram& d, int coloring);

/// Uses calibrated_coloring.
GoeritzMatrix goeritz_matrix(const KnotDiagram& d);

/// Swaps over and under at every crossing.
KnotDiagram mirror(const KnotDiagram& d);

BigInt determinant_from_goeritz(const GoeritzMatrix& g);

}  // namespace untwist
