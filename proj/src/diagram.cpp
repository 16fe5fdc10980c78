#include "untwist/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>

namespace untwist {

namespace {

class PdParser {
 public:
  explicit PdParser(std::string_view text) : text_(text) {}

  std::vector<PdCrossing> parse() {
    skip_space();
    if (at_end()) fail("empty PD code");
    char outer_close = 0;
    if (consume_word("PD")) {
      skip_space();
      outer_close = open_bracket();
    } else if (peek() == '[' && next_non_space_after_bracket() == '[') {
      outer_close = open_bracket();
    }
    std::vector<PdCrossing> crossings;
    for (;;) {
      skip_separators();
      if (at_end() || (outer_close != 0 && peek() == outer_close)) break;
      crossings.push_back(crossing());
    }
    if (outer_close != 0) {
      if (at_end()) fail("missing closing bracket");
      ++pos_;
      skip_space();
    }
    if (!at_end()) fail("trailing characters");
    if (crossings.empty()) fail("no crossings");
    return crossings;
  }

 private:
  PdCrossing crossing() {
    consume_word("X");
    skip_space();
    const char close = open_bracket();
    PdCrossing c{};
    for (std::size_t k = 0; k < 4; ++k) {
      skip_space();
      if (k > 0) {
        if (peek() != ',') fail("expected ',' between edge labels");
        ++pos_;
        skip_space();
      }
      c[k] = integer();
    }
    skip_space();
    if (peek() != close) fail("expected four edge labels per crossing");
    ++pos_;
    return c;
  }

  std::int64_t integer() {
    const std::size_t start = pos_;
    if (peek() == '-') ++pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const auto token = text_.substr(start, pos_ - start);
    if (token.empty() || token == "-") fail("expected an integer edge label");
    std::int64_t v = 0;
    try {
      v = std::stoll(std::string(token));
    } catch (const std::out_of_range&) {
      fail("edge label out of range");
    }
    return v;
  }

  char open_bracket() {
    if (peek() == '(') {
      ++pos_;
      return ')';
    }
    if (peek() == '[') {
      ++pos_;
      return ']';
    }
    fail("expected '(' or '['");
  }

  char next_non_space_after_bracket() const {
    std::size_t p = pos_ + 1;
    while (p < text_.size() && std::isspace(static_cast<unsigned char>(text_[p]))) ++p;
    return p < text_.size() ? text_[p] : '\0';
  }

  bool consume_word(std::string_view w) {
    if (text_.substr(pos_, w.size()) != w) return false;
    pos_ += w.size();
    return true;
  }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  void skip_separators() {
    while (!at_end() && (std::isspace(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == ',')) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::ParseError, what + " at offset " + std::to_string(pos_));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

int next_slot(int s) { return (s + 1) % 4; }

}  // namespace

KnotDiagram KnotDiagram::from_crossings(std::vector<PdCrossing> crossings) {
  if (crossings.empty()) throw Error(ErrorKind::ValidationError, "diagram has no crossings");
  const std::size_t n = crossings.size();

  std::map<std::int64_t, std::vector<std::pair<std::size_t, int>>> ends;
  for (std::size_t c = 0; c < n; ++c)
    for (int s = 0; s < 4; ++s) ends[crossings[c][static_cast<std::size_t>(s)]].emplace_back(c, s);

  KnotDiagram d;
  d.partner_.resize(4 * n);
  for (const auto& [label, where] : ends) {
    if (where.size() != 2)
      throw Error(ErrorKind::ValidationError, "edge " + std::to_string(label) + " occurs " +
                                                  std::to_string(where.size()) + " times, expected 2");
    d.partner_[where[0].first * 4 + static_cast<std::size_t>(where[0].second)] = where[1];
    d.partner_[where[1].first * 4 + static_cast<std::size_t>(where[1].second)] = where[0];
  }

  // Connectivity of the crossing graph.
  std::vector<bool> seen(n, false);
  std::deque<std::size_t> queue{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!queue.empty()) {
    const auto c = queue.front();
    queue.pop_front();
    for (std::size_t s = 0; s < 4; ++s) {
      const auto next = d.partner_[c * 4 + s].first;
      if (!seen[next]) {
        seen[next] = true;
        ++reached;
        queue.push_back(next);
      }
    }
  }
  if (reached != n) throw Error(ErrorKind::ValidationError, "diagram is disconnected");

  // Follow the knot from the under-strand of crossing 0.
  d.over_entry_.assign(n, -1);
  std::vector<bool> dart_used(4 * n, false);
  std::vector<bool> under_visit;
  std::size_t c = 0;
  int entry = 0;
  do {
    if (entry == 2)
      throw Error(ErrorKind::ValidationError,
                  "crossing " + std::to_string(c) + " is entered along its outgoing under-strand");
    const int exit = (entry + 2) % 4;
    if (dart_used[c * 4 + static_cast<std::size_t>(entry)])
      throw Error(ErrorKind::ValidationError, "inconsistent strand structure");
    dart_used[c * 4 + static_cast<std::size_t>(entry)] = true;
    dart_used[c * 4 + static_cast<std::size_t>(exit)] = true;
    under_visit.push_back(entry == 0);
    if (entry != 0) d.over_entry_[c] = entry;
    std::tie(c, entry) = d.partner_[c * 4 + static_cast<std::size_t>(exit)];
  } while (!(c == 0 && entry == 0));
  if (std::find(dart_used.begin(), dart_used.end(), false) != dart_used.end())
    throw Error(ErrorKind::ValidationError, "diagram has more than one component");

  d.alternating_ = true;
  for (std::size_t i = 0; i < under_visit.size(); ++i)
    if (under_visit[i] == under_visit[(i + 1) % under_visit.size()]) d.alternating_ = false;

  d.crossings_ = std::move(crossings);
  return d;
}

KnotDiagram parse_pd(std::string_view text) { return KnotDiagram::from_crossings(PdParser(text).parse()); }

std::string format_pd(const KnotDiagram& d) {
  std::string out;
  for (const auto& c : d.crossings()) {
    if (!out.empty()) out += ' ';
    out += "X(" + std::to_string(c[0]) + "," + std::to_string(c[1]) + "," + std::to_string(c[2]) + "," +
           std::to_string(c[3]) + ")";
  }
  return out;
}

std::int64_t Face::lowest_edge() const { return *std::min_element(edges.begin(), edges.end()); }

std::vector<Face> faces(const KnotDiagram& d) {
  const std::size_t n = d.num_crossings();
  std::vector<bool> used(4 * n, false);
  std::vector<Face> out;
  for (std::size_t start = 0; start < 4 * n; ++start) {
    if (used[start]) continue;
    Face f;
    std::size_t c = start / 4;
    int slot = static_cast<int>(start % 4);
    // (c, slot): arrived at crossing c along the edge in `slot`; the face
    // occupies the corner between `slot` and the next slot counterclockwise.
    while (!used[c * 4 + static_cast<std::size_t>(slot)]) {
      used[c * 4 + static_cast<std::size_t>(slot)] = true;
      f.corners.push_back({c, slot});
      const int leave = next_slot(slot);
      f.edges.push_back(d.crossings()[c][static_cast<std::size_t>(leave)]);
      std::tie(c, slot) = d.opposite_end(c, leave);
    }
    if (c * 4 + static_cast<std::size_t>(slot) != start)
      throw Error(ErrorKind::NonPlanar, "face tracing did not close up");
    out.push_back(std::move(f));
  }
  if (out.size() != n + 2)
    throw Error(ErrorKind::NonPlanar, "traced " + std::to_string(out.size()) + " regions, expected " +
                                          std::to_string(n + 2));
  return out;
}

std::size_t Coloring::face_at(std::size_t crossing, int slot) const {
  return corner_face.at(crossing * 4 + static_cast<std::size_t>(slot));
}

std::pair<Coloring, Coloring> checkerboard(const KnotDiagram& d) {
  const std::size_t n = d.num_crossings();
  auto fs = faces(d);
  std::vector<std::size_t> corner_face(4 * n);
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (const auto& corner : fs[i].corners) corner_face[corner.crossing * 4 + static_cast<std::size_t>(corner.slot)] = i;

  // Adjacent corners at a crossing lie in regions of opposite color.
  std::vector<std::vector<std::size_t>> adjacent(fs.size());
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t s = 0; s < 4; ++s) {
      const auto a = corner_face[c * 4 + s];
      const auto b = corner_face[c * 4 + (s + 1) % 4];
      adjacent[a].push_back(b);
      adjacent[b].push_back(a);
    }
  std::vector<int> color(fs.size(), -1);
  std::deque<std::size_t> queue{corner_face[0]};
  color[corner_face[0]] = 0;
  while (!queue.empty()) {
    const auto f = queue.front();
    queue.pop_front();
    for (const auto g : adjacent[f]) {
      if (color[g] == -1) {
        color[g] = 1 - color[f];
        queue.push_back(g);
      } else if (color[g] == color[f]) {
        throw Error(ErrorKind::NonPlanar, "regions admit no checkerboard coloring");
      }
    }
  }

  auto make = [&](int white_color) {
    Coloring col;
    col.faces = fs;
    col.corner_face = corner_face;
    col.white.resize(fs.size());
    for (std::size_t i = 0; i < fs.size(); ++i) {
      col.white[i] = color[i] == white_color;
      if (col.white[i]) col.white_faces.push_back(i);
    }
    std::sort(col.white_faces.begin(), col.white_faces.end(),
              [&](std::size_t a, std::size_t b) { return fs[a].lowest_edge() < fs[b].lowest_edge(); });
    col.deleted_face = col.white_faces.front();
    return col;
  };
  return {make(0), make(1)};
}

int calibrated_coloring(const KnotDiagram& d) {
  if (!d.alternating()) throw Error(ErrorKind::NotAlternating, "diagram is not alternating");
  // Coloring 0 has the region at corner 0 of crossing 0 white, so corner 1
  // of crossing 0 is white exactly in coloring 1.
  return 1;
}

GoeritzMatrix goeritz_matrix(const KnotDiagram& d, int coloring) {
  if (!d.alternating()) throw Error(ErrorKind::NotAlternating, "diagram is not alternating");
  if (coloring != 0 && coloring != 1) throw Error(ErrorKind::InvalidArgument, "coloring index must be 0 or 1");
  const auto both = checkerboard(d);
  const Coloring& col = coloring == 0 ? both.first : both.second;

  const std::size_t regions = col.num_white();
  if (regions < 2)
    throw Error(ErrorKind::ValidationError, "coloring has a single white region; the Goeritz form is empty");
  std::vector<std::size_t> position(col.faces.size(), 0);
  for (std::size_t i = 0; i < regions; ++i) position[col.white_faces[i]] = i;

  IntMatrix full(regions, regions);
  for (std::size_t c = 0; c < d.num_crossings(); ++c) {
    // White regions occupy one pair of opposite corners.
    const int first = col.white[col.face_at(c, 0)] ? 0 : 1;
    const auto i = position[col.face_at(c, first)];
    const auto j = position[col.face_at(c, first + 2)];
    if (i == j) continue;  // nugatory crossing
    full(i, j) += 1;
    full(j, i) += 1;
  }
  for (std::size_t i = 0; i < regions; ++i) {
    BigInt sum = 0;
    for (std::size_t k = 0; k < regions; ++k)
      if (k != i) sum += full(i, k);
    full(i, i) = -sum;
  }
  IntMatrix reduced(regions - 1, regions - 1);
  for (std::size_t i = 1; i < regions; ++i)
    for (std::size_t j = 1; j < regions; ++j) reduced(i - 1, j - 1) = full(i, j);

  auto form = certify_definiteness(std::move(reduced));
  if (!form.negative_definite())
    throw Error(ErrorKind::ConventionMismatch, "reduced Goeritz matrix is not negative definite");
  return GoeritzMatrix{std::move(form), coloring, col.faces[col.deleted_face].lowest_edge(), regions};
}

GoeritzMatrix goeritz_matrix(const KnotDiagram& d) { return goeritz_matrix(d, calibrated_coloring(d)); }

KnotDiagram mirror(const KnotDiagram& d) {
  std::vector<PdCrossing> out;
  out.reserve(d.num_crossings());
  for (std::size_t c = 0; c < d.num_crossings(); ++c) {
    const auto& x = d.crossings()[c];
    const auto e = static_cast<std::size_t>(d.over_entry(c));
    out.push_back({x[e], x[(e + 1) % 4], x[(e + 2) % 4], x[(e + 3) % 4]});
  }
  return KnotDiagram::from_crossings(std::move(out));
}

BigInt determinant_from_goeritz(const GoeritzMatrix& g) { return abs(g.form.determinant()); }

}  // namespace untwist
