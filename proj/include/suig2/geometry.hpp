#pragma once

#include <optional>
#include <string>
#include <vector>

#include "suig2/rational.hpp"
#include "suig2/tree.hpp"

namespace suig2 {

// Two horizontal stab lines: y = 1 (lower) and y = 2 + epsilon (upper).
// Every square must intersect exactly the stab line it is assigned to.
enum class Stab { Lower, Upper };

inline Stab flip(Stab s) { return s == Stab::Lower ? Stab::Upper : Stab::Lower; }
std::string stab_name(Stab s);

// Closed axes-parallel unit square with lower-left corner (x, y).
struct UnitSquare {
  Rat x;
  Rat y;
  Stab stab = Stab::Lower;
};

// Assignment of one unit square per vertex 0..n-1.
struct Representation {
  Rat epsilon{1, 2};
  std::vector<UnitSquare> squares;

  int n() const { return (int)squares.size(); }
  // y range keeping a square of the given stab on its line:
  // lower squares need y in [0, 1], upper squares y in [1+eps, 2+eps].
  Rat stab_y_min(Stab s) const;
  Rat stab_y_max(Stab s) const;
};

// Closed squares intersect iff both coordinate gaps are at most 1.
inline bool squares_adjacent(const UnitSquare& a, const UnitSquare& b) {
  return (a.x - b.x).abs() <= Rat(1) && (a.y - b.y).abs() <= Rat(1);
}

// Intersection graph of all squares, exact comparisons throughout.
Graph intersection_graph(const Representation& r);

enum class IssueKind { StabViolation, MissingEdge, ExtraEdge, EpsilonOutOfRange };

struct Issue {
  IssueKind kind;
  int u = -1;  // vertex for StabViolation, first endpoint otherwise
  int v = -1;
  std::string str() const;
};

struct VerifyReport {
  bool pass = false;
  std::vector<Issue> issues;
};

// PASS iff the representation invariants hold and the squares' intersection
// graph is edge-identical to the target graph.
VerifyReport verify_graph(const Representation& r, const Graph& g);

inline VerifyReport verify(const Representation& r, const Tree& t) {
  return verify_graph(r, t.g);
}

class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Length of the union of the x-projections [x_v, x_v+1] of the given
// vertices. Throws GeometryError if the union is not a single interval
// (cannot happen for connected subgraphs of a valid representation).
Rat span(const Representation& r, const std::vector<int>& vertices);

enum class PathKind { LowerRight, UpperRight, LowerLeft, UpperLeft, Folded, Mixed };

struct PathClassification {
  PathKind kind = PathKind::Mixed;
  bool stretched = false;  // span == k
  bool shrinked = false;   // span == ceil(k/2) + c
};

std::string path_kind_name(PathKind k);

// Classifies the squares of an ordered path: one of the four monotone kinds
// (same stab, x strictly monotone along the order), else Folded when some
// interior vertex is strictly leftmost or rightmost, else Mixed.
PathClassification classify_path(const Representation& r,
                                 const std::vector<int>& path,
                                 const Rat& c = Rat(1, 4));

}  // namespace suig2
