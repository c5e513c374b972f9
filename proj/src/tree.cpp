#include "suig2/tree.hpp"

#include <cctype>
#include <queue>
#include <sstream>

namespace suig2 {

Graph Graph::from_edges(int n, std::vector<std::pair<int, int>> es) {
  Graph g;
  g.n = n;
  for (auto& [u, v] : es)
    if (u > v) std::swap(u, v);
  std::sort(es.begin(), es.end());
  g.edges = std::move(es);
  g.adj.assign(n, {});
  for (auto [u, v] : g.edges) {
    g.adj[u].push_back(v);
    g.adj[v].push_back(u);
  }
  for (auto& a : g.adj) std::sort(a.begin(), a.end());
  return g;
}

bool Graph::has_edge(int u, int v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
}

Tree make_tree(int n, std::vector<std::pair<int, int>> es) {
  if (n <= 0) throw TreeError(TreeErrorKind::EmptyInput, "no vertices");
  for (auto [u, v] : es) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw TreeError(TreeErrorKind::ParseError,
                      "vertex id out of range: " + std::to_string(std::max(u, v)));
    if (u == v)
      throw TreeError(TreeErrorKind::NotATree,
                      "self loop at vertex " + std::to_string(u));
  }
  if ((int)es.size() != n - 1)
    throw TreeError(TreeErrorKind::NotATree,
                    "a tree on " + std::to_string(n) + " vertices needs " +
                        std::to_string(n - 1) + " edges, got " +
                        std::to_string(es.size()));
  Graph g = Graph::from_edges(n, std::move(es));
  for (size_t i = 1; i < g.edges.size(); ++i)
    if (g.edges[i] == g.edges[i - 1])
      throw TreeError(TreeErrorKind::NotATree,
                      "duplicate edge " + std::to_string(g.edges[i].first) +
                          " " + std::to_string(g.edges[i].second));
  // connectivity (edge count already matches, so connected <=> acyclic)
  std::vector<char> seen(n, 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int cnt = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int w : g.adj[u])
      if (!seen[w]) {
        seen[w] = 1;
        ++cnt;
        q.push(w);
      }
  }
  if (cnt != n)
    throw TreeError(TreeErrorKind::NotATree, "graph is disconnected");
  return Tree{std::move(g)};
}

Graph parse_graph(const std::string& text) {
  std::vector<std::pair<int, int>> es;
  int max_id = -1;
  std::vector<char> present;
  bool any_line = false;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  auto note_vertex = [&](int v) {
    if (v > max_id) max_id = v;
    if ((int)present.size() <= v) present.resize(v + 1, 0);
    present[v] = 1;
  };
  while (std::getline(in, line)) {
    ++lineno;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    long long u, v;
    if (!(ls >> u)) continue;  // blank or comment-only line
    any_line = true;
    if (!(ls >> v))
      throw TreeError(TreeErrorKind::ParseError,
                      "line " + std::to_string(lineno) + ": expected two ids");
    std::string rest;
    if (ls >> rest)
      throw TreeError(TreeErrorKind::ParseError,
                      "line " + std::to_string(lineno) + ": trailing tokens");
    if (u < 0 || v < 0 || u > 1000000 || v > 1000000)
      throw TreeError(TreeErrorKind::ParseError,
                      "line " + std::to_string(lineno) + ": id out of range");
    note_vertex((int)u);
    note_vertex((int)v);
    es.emplace_back((int)u, (int)v);
  }
  if (!any_line) {
    // A single vertex tree has no edges; the format cannot express it other
    // than by an explicit "0" count of lines, so treat pure-empty as error.
    throw TreeError(TreeErrorKind::EmptyInput, "no edges in input");
  }
  int n = max_id + 1;
  for (int v = 0; v < n; ++v)
    if (!present[v])
      throw TreeError(TreeErrorKind::ParseError,
                      "vertex ids not contiguous: " + std::to_string(v) +
                          " missing");
  for (auto [u, v] : es)
    if (u == v)
      throw TreeError(TreeErrorKind::NotATree,
                      "self loop at vertex " + std::to_string(u));
  Graph g = Graph::from_edges(n, std::move(es));
  for (size_t i = 1; i < g.edges.size(); ++i)
    if (g.edges[i] == g.edges[i - 1])
      throw TreeError(TreeErrorKind::NotATree,
                      "duplicate edge " + std::to_string(g.edges[i].first) +
                          " " + std::to_string(g.edges[i].second));
  return g;
}

Tree parse_tree(const std::string& text) {
  Graph g = parse_graph(text);
  return make_tree(g.n, g.edges);
}

std::string serialize_tree(const Tree& t) {
  std::ostringstream out;
  for (auto [u, v] : t.edges()) out << u << " " << v << "\n";
  return out.str();
}

int degree(const Tree& t, int v) { return (int)t.adj(v).size(); }

std::vector<int> branch_vertices(const Tree& t) {
  std::vector<int> out;
  for (int v = 0; v < t.n(); ++v)
    if (degree(t, v) >= 3) out.push_back(v);
  return out;
}

int tree_distance(const Tree& t, int u, int v) {
  std::vector<int> dist(t.n(), -1);
  std::queue<int> q;
  q.push(u);
  dist[u] = 0;
  while (!q.empty()) {
    int w = q.front();
    q.pop();
    if (w == v) return dist[w];
    for (int x : t.adj(w))
      if (dist[x] < 0) {
        dist[x] = dist[w] + 1;
        q.push(x);
      }
  }
  return -1;
}

ClawIndex::ClawIndex(const Tree& t) : t_(&t) {
  int n = t.n();
  deg_.resize(n);
  for (int v = 0; v < n; ++v) deg_[v] = degree(t, v);
  subtree_b_.assign(n, 0);
  parent_.assign(n, -1);
  // iterative post-order from root 0
  std::vector<int> order;
  order.reserve(n);
  std::vector<int> stack{0};
  std::vector<char> seen(n, 0);
  seen[0] = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    order.push_back(u);
    for (int w : t.adj(u))
      if (!seen[w]) {
        seen[w] = 1;
        parent_[w] = u;
        stack.push_back(w);
      }
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int u = *it;
    if (deg_[u] >= 3) subtree_b_[u] += 1;
    if (parent_[u] >= 0) subtree_b_[parent_[u]] += subtree_b_[u];
  }
  total_b_ = subtree_b_[0];
}

bool ClawIndex::component_has_claw(int u, int v, int side) const {
  int other = (side == u) ? v : u;
  // Within the component of T - uv containing `side`, the degree of every
  // vertex except `side` is its tree degree; `side` loses one.
  int branches_in_comp;
  if (parent_[other] == side) {
    branches_in_comp = total_b_ - subtree_b_[other];
  } else {
    // then parent_[side] == other, side's component is side's subtree
    branches_in_comp = subtree_b_[side];
  }
  if (deg_[side] >= 3) {
    // side itself only counts if it still has >= 3 neighbors after removal
    if (deg_[side] - 1 >= 3) return branches_in_comp >= 1;
    return branches_in_comp - 1 >= 1;
  }
  return branches_in_comp >= 1;
}

bool component_has_claw(const Tree& t, std::pair<int, int> removed_edge,
                        int side) {
  return ClawIndex(t).component_has_claw(removed_edge.first,
                                         removed_edge.second, side);
}

}  // namespace suig2
