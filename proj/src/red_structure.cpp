#include "suig2/red_structure.hpp"

#include <algorithm>
#include <cassert>

#include <json.hpp>

namespace suig2 {

RedEdgeSet red_edges(const Tree& t) {
  ClawIndex idx(t);
  RedEdgeSet out;
  for (auto [u, v] : t.edges())
    if (idx.component_has_claw(u, v, u) && idx.component_has_claw(u, v, v))
      out.emplace_back(u, v);
  return out;
}

RedPathOutcome red_path_or_fail(const Tree& t, const RedEdgeSet& r) {
  RedPathOutcome out;
  if (r.empty()) {
    out.kind = RedPathOutcome::Kind::NoRedEdges;
    return out;
  }
  std::vector<std::vector<int>> red_adj(t.n());
  for (auto [u, v] : r) {
    red_adj[u].push_back(v);
    red_adj[v].push_back(u);
  }
  for (int v = 0; v < t.n(); ++v)
    if (red_adj[v].size() >= 3) {
      out.kind = RedPathOutcome::Kind::NotAPath;
      out.witness = v;
      return out;
    }
  // In a tree the red edge set is always connected, so red degrees <= 2
  // guarantee a single path; the scan below keeps that assumption honest.
  int start = -1;
  for (int v = 0; v < t.n() && start < 0; ++v)
    if (red_adj[v].size() == 1) start = v;
  assert(start >= 0);  // a red cycle would need a cycle in the tree
  std::vector<int> path{start};
  int prev = -1, cur = start;
  while (true) {
    int next = -1;
    for (int w : red_adj[cur])
      if (w != prev) next = w;
    if (next < 0) break;
    path.push_back(next);
    prev = cur;
    cur = next;
  }
  if (path.size() != r.size() + 1) {
    // disconnected red subgraph: report the smallest vertex left out
    std::vector<char> on(t.n(), 0);
    for (int v : path) on[v] = 1;
    for (int v = 0; v < t.n(); ++v)
      if (!red_adj[v].empty() && !on[v]) {
        out.kind = RedPathOutcome::Kind::NotAPath;
        out.witness = v;
        return out;
      }
  }
  if (path.front() > path.back()) std::reverse(path.begin(), path.end());
  out.kind = RedPathOutcome::Kind::Path;
  out.path = std::move(path);
  return out;
}

namespace {

// a1 gets the endpoint with larger tree degree, then smaller id.
void orient(const Tree& t, std::vector<int>& path) {
  if (path.size() < 2) return;
  int a = path.front(), b = path.back();
  bool swap = degree(t, b) > degree(t, a) ||
              (degree(t, b) == degree(t, a) && b < a);
  if (swap) std::reverse(path.begin(), path.end());
}

}  // namespace

ExtendedRedPath extended_red_path(const Tree& t, const RedPathOutcome& outcome) {
  ExtendedRedPath out;
  if (outcome.kind == RedPathOutcome::Kind::Path) {
    out.origin = ExtendedRedPath::Origin::FromRedPath;
    std::vector<int> path = outcome.path;
    std::vector<char> red(t.n(), 0);
    for (int v : path) red[v] = 1;
    if (degree(t, path.front()) == 2) {
      int p = path.front();
      for (int w : t.adj(p))
        if (!red[w]) {
          path.insert(path.begin(), w);
          break;
        }
    }
    if (degree(t, path.back()) == 2) {
      int p = path.back();
      for (int w : t.adj(p))
        if (!red[w]) {
          path.push_back(w);
          break;
        }
    }
    orient(t, path);
    out.vertices = std::move(path);
    return out;
  }
  assert(outcome.kind == RedPathOutcome::Kind::NoRedEdges);
  out.origin = ExtendedRedPath::Origin::NoRedEdgeSpecialVertex;
  std::vector<int> branch = branch_vertices(t);
  assert(branch.size() >= 2);
  int best = -1;
  for (int v = 0; v < t.n(); ++v) {
    bool covers = true;
    for (int b : branch) {
      if (b == v) continue;
      if (!t.g.has_edge(v, b)) {
        covers = false;
        break;
      }
    }
    if (!covers) continue;
    if (best < 0 || degree(t, v) > degree(t, best)) best = v;
  }
  // With no red edges the branch vertices sit pairwise within distance 2,
  // so their closed neighborhoods share a vertex.
  assert(best >= 0);
  if (degree(t, best) == 2) {
    std::vector<int> path{t.adj(best)[0], best, t.adj(best)[1]};
    orient(t, path);
    out.vertices = std::move(path);
  } else {
    out.vertices = {best};
  }
  return out;
}

DecomposeOutcome decompose(const Tree& t, const ExtendedRedPath& a) {
  DecomposeOutcome out;
  int n = t.n();
  std::vector<int> pos(n, -1);
  for (size_t i = 0; i < a.vertices.size(); ++i) pos[a.vertices[i]] = (int)i;
  std::vector<char> is_agent(n, 0);
  Decomposition d;
  d.path = a;
  d.agents_by_pos.assign(a.vertices.size(), {});
  for (size_t i = 0; i < a.vertices.size(); ++i)
    for (int w : t.adj(a.vertices[i]))
      if (pos[w] < 0) {
        d.agents_by_pos[i].push_back(w);
        is_agent[w] = 1;
      }
  // every leftover branch vertex must already be on the backbone or an agent
  for (int v = 0; v < n; ++v)
    if (pos[v] < 0 && !is_agent[v] && degree(t, v) >= 3) {
      out.bad_vertex = v;
      return out;
    }
  for (size_t i = 0; i < a.vertices.size(); ++i) {
    for (int z : d.agents_by_pos[i]) {
      std::vector<std::vector<int>> walks;
      for (int w : t.adj(z)) {
        if (pos[w] >= 0) continue;
        std::vector<int> walk{w};
        int prev = z, cur = w;
        while (true) {
          int next = -1;
          for (int x : t.adj(cur))
            if (x != prev) next = x;
          if (next < 0) break;
          walk.push_back(next);
          prev = cur;
          cur = next;
        }
        walks.push_back(std::move(walk));
      }
      if (walks.size() > 2) {
        out.bad_vertex = z;
        return out;
      }
      while (walks.size() < 2) walks.push_back({});
      bool swap = walks[0].size() < walks[1].size() ||
                  (walks[0].size() == walks[1].size() && !walks[0].empty() &&
                   walks[1][0] < walks[0][0]);
      if (swap) std::swap(walks[0], walks[1]);
      d.tails[z] = Tails{std::move(walks[0]), std::move(walks[1])};
    }
  }
  out.decomposition = std::move(d);
  return out;
}

std::string decomposition_to_json(const Decomposition& d) {
  nlohmann::ordered_json doc;
  doc["extended_path"] = d.path.vertices;
  doc["origin"] = d.path.origin == ExtendedRedPath::Origin::FromRedPath
                      ? "red-path"
                      : "special-vertex";
  nlohmann::ordered_json stations = nlohmann::ordered_json::array();
  for (size_t i = 0; i < d.path.vertices.size(); ++i) {
    nlohmann::ordered_json st;
    st["red"] = d.path.vertices[i];
    nlohmann::ordered_json agents = nlohmann::ordered_json::array();
    for (int z : d.agents_by_pos[i]) {
      const Tails& tl = d.tails.at(z);
      agents.push_back(nlohmann::ordered_json{{"agent", z},
                                              {"long_tail", tl.long_tail},
                                              {"short_tail", tl.short_tail}});
    }
    st["agents"] = std::move(agents);
    stations.push_back(std::move(st));
  }
  doc["stations"] = std::move(stations);
  return doc.dump(2) + "\n";
}

}  // namespace suig2
