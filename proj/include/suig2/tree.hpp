#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace suig2 {

// Undirected simple graph over vertex ids 0..n-1.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;    // normalized u < v, sorted
  std::vector<std::vector<int>> adj;

  static Graph from_edges(int n, std::vector<std::pair<int, int>> es);
  bool has_edge(int u, int v) const;
};

// A tree is a connected acyclic Graph. Constructed through validation only.
struct Tree {
  Graph g;
  int n() const { return g.n; }
  const std::vector<std::pair<int, int>>& edges() const { return g.edges; }
  const std::vector<int>& adj(int v) const { return g.adj[v]; }
};

enum class TreeErrorKind { EmptyInput, ParseError, NotATree };

class TreeError : public std::runtime_error {
 public:
  TreeError(TreeErrorKind k, const std::string& msg)
      : std::runtime_error(msg), kind(k) {}
  TreeErrorKind kind;
};

// Builds a tree from an explicit edge list; throws TreeError on violations
// (duplicate edges, self loops, cycles, disconnected, id gaps).
Tree make_tree(int n, std::vector<std::pair<int, int>> es);

// Parses the edge-list format: one "u v" pair per line, '#' starts a comment
// line, blank lines ignored. Vertex ids must be contiguous 0..n-1.
Tree parse_tree(const std::string& text);

// Same format without the tree checks: any simple graph (cycles allowed, any
// edge count). Self loops and duplicate edges still fail.
Graph parse_graph(const std::string& text);

// Serializes back to the edge-list format (sorted edges, one per line).
std::string serialize_tree(const Tree& t);

int degree(const Tree& t, int v);

// Vertices of degree >= 3, ascending.
std::vector<int> branch_vertices(const Tree& t);

// Distance in edges between u and v.
int tree_distance(const Tree& t, int u, int v);

// Precomputed per-directed-edge data answering: does the component of
// T - {u,v} containing `side` contain a claw (K_{1,3})? A component has a
// claw iff it has a vertex of degree >= 3 within the component.
class ClawIndex {
 public:
  explicit ClawIndex(const Tree& t);
  // side must be one of the edge endpoints.
  bool component_has_claw(int u, int v, int side) const;

 private:
  const Tree* t_;
  std::vector<int> deg_;
  // subtree_b_[v] = number of vertices w in the subtree rooted at v (root 0)
  // with deg(w) >= 3.
  std::vector<int> subtree_b_;
  std::vector<int> parent_;
  int total_b_ = 0;
};

// One-off convenience wrapper over ClawIndex.
bool component_has_claw(const Tree& t, std::pair<int, int> removed_edge,
                        int side);

}  // namespace suig2
