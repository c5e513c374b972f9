#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "suig2/tree.hpp"

namespace suig2 {

// An edge is red when both components left by its removal contain a claw
// (an induced K_{1,3}). Normalized (u < v), sorted.
using RedEdgeSet = std::vector<std::pair<int, int>>;

RedEdgeSet red_edges(const Tree& t);

struct RedPathOutcome {
  enum class Kind { NoRedEdges, Path, NotAPath };
  Kind kind = Kind::NoRedEdges;
  std::vector<int> path;  // Path: red vertices in path order
  int witness = -1;       // NotAPath: vertex with >= 3 red edges
};

RedPathOutcome red_path_or_fail(const Tree& t, const RedEdgeSet& r);

// The backbone the layout is organized around: the red path extended by one
// non-red edge at each endpoint of tree-degree 2, or (no red edges, several
// branch vertices) a vertex whose closed neighborhood holds every branch
// vertex, widened to the 3-path through its neighbors when it has degree 2.
struct ExtendedRedPath {
  enum class Origin { FromRedPath, NoRedEdgeSpecialVertex };
  std::vector<int> vertices;
  Origin origin = Origin::FromRedPath;
};

// Requires outcome.kind != NotAPath; for NoRedEdges the tree must have at
// least two branch vertices (fewer is handled before decomposition).
ExtendedRedPath extended_red_path(const Tree& t, const RedPathOutcome& outcome);

// Pendant paths hanging off an agent, listed from the agent outward.
struct Tails {
  std::vector<int> long_tail;
  std::vector<int> short_tail;
};

struct Decomposition {
  ExtendedRedPath path;
  // agents_by_pos[i] = agents of path.vertices[i], ascending ids
  std::vector<std::vector<int>> agents_by_pos;
  std::map<int, Tails> tails;  // keyed by agent
};

// Splits V(T) into backbone vertices, their agents (adjacent non-backbone
// vertices), and tails. Fails with a witness when some branch vertex is
// neither on the backbone nor adjacent to it, or an agent has more than two
// tails; either way the tree has no valid drawing.
struct DecomposeOutcome {
  std::optional<Decomposition> decomposition;
  int bad_vertex = -1;
};

DecomposeOutcome decompose(const Tree& t, const ExtendedRedPath& a);

std::string decomposition_to_json(const Decomposition& d);

}  // namespace suig2
