#include "suig2/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "suig2/difference_system.hpp"

namespace suig2 {

namespace {

using Clock = std::chrono::steady_clock;

struct Budget {
  std::optional<Clock::time_point> deadline;
  bool exhausted = false;

  bool check() {
    if (exhausted) return true;
    if (!deadline) return false;
    if (Clock::now() >= *deadline) exhausted = true;
    return exhausted;
  }
};

struct Searcher {
  const Graph& g;
  const SearchConfig& cfg;
  int n;
  bool tree;
  std::vector<Stab> stab;
  std::vector<int> order;  // order[p] = vertex at x-rank p
  std::vector<int> rank;   // rank[v] = position, -1 while unplaced
  DifferenceSystem xsys;   // constraints among placed vertices
  Budget budget;
  std::optional<Representation> found;

  Searcher(const Graph& g_, const SearchConfig& cfg_)
      : g(g_), cfg(cfg_), n(g_.n) {
    tree = is_tree();
    xsys.num_vars = n;
    if (cfg.time_budget) budget.deadline = Clock::now() + *cfg.time_budget;
  }

  bool is_tree() const {
    if ((int)g.edges.size() != n - 1) return false;
    std::vector<int> stack{0};
    std::vector<char> seen(n, 0);
    seen[0] = 1;
    int cnt = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : g.adj[u])
        if (!seen[w]) {
          seen[w] = 1;
          ++cnt;
          stack.push_back(w);
        }
    }
    return cnt == n;
  }

  // same-stab adjacency needs |dx| <= 1 only, so in a tree each stab class
  // induces disjoint paths and no vertex fits more than two pairwise
  // non-adjacent cross-stab neighbors inside its unit x-window
  bool stab_assignment_plausible() const {
    if (!tree) return true;
    std::vector<int> same(n, 0), cross(n, 0);
    for (auto [u, v] : g.edges) {
      if (stab[u] == stab[v]) {
        ++same[u];
        ++same[v];
      } else {
        ++cross[u];
        ++cross[v];
      }
    }
    for (int v = 0; v < n; ++v)
      if (same[v] > 2 || cross[v] > 2) return false;
    return true;
  }

  bool x_feasible() const { return solve_difference_system(xsys).feasible; }

  // if v joins at the rightmost position, everything sandwiched between v
  // and an already placed neighbor sits in a window of width at most 1, so
  // same-stab pairs inside it must be edges
  bool sandwich_ok(int v) const {
    int p = (int)order.size();
    for (int u = 0; u < n; ++u) {
      if (rank[u] < 0 || !g.has_edge(u, v)) continue;
      for (int w = rank[u] + 1; w < p; ++w) {
        int m = order[w];
        if (stab[m] == stab[u] && !g.has_edge(m, u)) return false;
        if (stab[m] == stab[v] && !g.has_edge(m, v)) return false;
      }
    }
    return true;
  }

  void push_vertex(int v) {
    int p = (int)order.size();
    if (p > 0) {
      int prev = order[p - 1];
      xsys.constraints.push_back({prev, v, Rat(0), false});  // x_prev <= x_v
    }
    for (int u = 0; u < n; ++u) {
      if (rank[u] < 0 || u == v) continue;
      if (g.has_edge(u, v))
        xsys.constraints.push_back({v, u, Rat(1), false});  // x_v - x_u <= 1
      else if (stab[u] == stab[v])
        xsys.constraints.push_back({u, v, Rat(-1), true});  // x_v - x_u > 1
    }
    order.push_back(v);
    rank[v] = p;
  }

  void pop_vertex(int v, size_t mark) {
    xsys.constraints.resize(mark);
    order.pop_back();
    rank[v] = -1;
  }

  bool place(int depth) {
    if (budget.check()) return false;
    if (depth == n) return leaf();
    for (int v = 0; v < n; ++v) {
      if (rank[v] >= 0) continue;
      if (!sandwich_ok(v)) continue;
      size_t mark = xsys.constraints.size();
      push_vertex(v);
      if (x_feasible() && place(depth + 1)) return true;
      pop_vertex(v, mark);
    }
    return false;
  }

  bool leaf() {
    // mirror image symmetry: each order and its reverse give the same set
    if (n > 1 && order.front() > order.back()) return false;
    DifferenceSystem ysys;
    ysys.num_vars = n;
    for (int v = 0; v < n; ++v) {
      Rat lo = stab[v] == Stab::Lower ? Rat(0) : Rat(1) + cfg.epsilon;
      Rat hi = stab[v] == Stab::Lower ? Rat(1) : Rat(2) + cfg.epsilon;
      ysys.constraints.push_back({v, -1, hi, false});
      ysys.constraints.push_back({-1, v, -lo, false});
    }
    std::vector<std::pair<int, int>> free_pairs;  // (lower u, upper v)
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) {
        if (stab[u] != Stab::Lower || stab[v] != Stab::Upper) continue;
        if (g.has_edge(u, v))
          ysys.constraints.push_back({v, u, Rat(1), false});  // y_v - y_u <= 1
        else
          free_pairs.emplace_back(u, v);
      }
    if (!solve_difference_system(ysys).feasible) return false;
    return split(free_pairs, 0, ysys);
  }

  // each cross-stab non-edge needs its squares pushed apart in x or in y;
  // try y first, fall back to x, with feasibility checked after every commit
  bool split(std::vector<std::pair<int, int>>& pairs, size_t idx,
             DifferenceSystem& ysys) {
    if (budget.check()) return false;
    if (idx == pairs.size()) return finish(ysys);
    auto [u, v] = pairs[idx];
    ysys.constraints.push_back({u, v, Rat(-1), true});  // y_v - y_u > 1
    if (solve_difference_system(ysys).feasible && split(pairs, idx + 1, ysys))
      return true;
    ysys.constraints.pop_back();
    int left = rank[u] < rank[v] ? u : v;
    int right = left == u ? v : u;
    xsys.constraints.push_back({left, right, Rat(-1), true});  // x gap > 1
    if (x_feasible() && split(pairs, idx + 1, ysys)) return true;
    xsys.constraints.pop_back();
    return false;
  }

  bool finish(const DifferenceSystem& ysys) {
    auto xs = solve_difference_system(xsys);
    auto ys = solve_difference_system(ysys);
    if (!xs.feasible || !ys.feasible) return false;
    Representation rep;
    rep.epsilon = cfg.epsilon;
    rep.squares.resize(n);
    for (int v = 0; v < n; ++v)
      rep.squares[v] = {xs.values[v], ys.values[v], stab[v]};
    if (!verify_graph(rep, g).pass) return false;
    found = std::move(rep);
    return true;
  }

  OracleResult run() {
    OracleResult res;
    stab.assign(n, Stab::Lower);
    rank.assign(n, -1);
    long long masks = n >= 1 ? (1LL << (n - 1)) : 1;
    for (long long mask = 0; mask < masks; ++mask) {
      if (budget.check()) break;
      for (int v = 1; v < n; ++v)
        stab[v] = (mask >> (v - 1)) & 1 ? Stab::Upper : Stab::Lower;
      if (!stab_assignment_plausible()) continue;
      order.clear();
      std::fill(rank.begin(), rank.end(), -1);
      xsys.constraints.clear();
      if (place(0)) {
        res.status = OracleResult::Status::Accept;
        res.rep = std::move(found);
        return res;
      }
    }
    res.status = budget.exhausted ? OracleResult::Status::Unknown
                                  : OracleResult::Status::Reject;
    return res;
  }
};

}  // namespace

OracleResult brute_force_2suig(const Graph& g, const SearchConfig& cfg) {
  if (cfg.max_n > 12)
    throw TooLargeError("max_n exceeds the supported cap of 12");
  if (g.n > cfg.max_n)
    throw TooLargeError("graph has " + std::to_string(g.n) +
                        " vertices, oracle limit is " + std::to_string(cfg.max_n));
  Searcher s(g, cfg);
  return s.run();
}

}  // namespace suig2
