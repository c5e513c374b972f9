#include "suig2/difference_system.hpp"

#include <algorithm>

namespace suig2 {

namespace {

// potential = base + strict_count * theta for an infinitesimal theta > 0
struct LexDist {
  Rat base;
  long long stricts = 0;  // each strict edge contributes -1
};

bool lex_less(const Rat& b1, long long s1, const Rat& b2, long long s2) {
  if (b1 != b2) return b1 < b2;
  return s1 < s2;
}

}  // namespace

DiffSolution solve_difference_system(const DifferenceSystem& ds) {
  // node ds.num_vars plays the role of the constant 0 (constraint index -1)
  int n = ds.num_vars + 1;
  int origin = ds.num_vars;
  auto node = [&](int idx) { return idx < 0 ? origin : idx; };
  DiffSolution out;
  // implicit super source: all potentials start at (0, 0)
  std::vector<LexDist> dist(n);
  std::vector<int> pred(n, -1);  // constraint index that last tightened i
  int last_relaxed = -1;
  for (int round = 0; round <= n; ++round) {
    last_relaxed = -1;
    for (size_t c = 0; c < ds.constraints.size(); ++c) {
      const DiffConstraint& k = ds.constraints[c];
      int vi = node(k.i), vj = node(k.j);
      Rat cand_base = dist[vj].base + k.bound;
      long long cand_s = dist[vj].stricts - (k.strict ? 1 : 0);
      if (lex_less(cand_base, cand_s, dist[vi].base, dist[vi].stricts)) {
        dist[vi] = {cand_base, cand_s};
        pred[vi] = (int)c;
        last_relaxed = vi;
      }
    }
    if (last_relaxed < 0) break;
  }
  if (last_relaxed >= 0) {
    // a relaxation in round n proves a negative cycle; walk predecessors
    // n steps to land inside it, then collect it
    int v = last_relaxed;
    for (int step = 0; step < n; ++step) v = node(ds.constraints[pred[v]].j);
    std::vector<int> cyc;
    int cur = v;
    do {
      int c = pred[cur];
      cyc.push_back(c);
      cur = node(ds.constraints[c].j);
    } while (cur != v);
    std::reverse(cyc.begin(), cyc.end());
    out.feasible = false;
    out.cycle = std::move(cyc);
    return out;
  }
  // pick theta small enough that slack in the base part absorbs every
  // strict-count difference, yet big enough (1/(4n) for integer bounds)
  // that strict constraints keep visible slack
  long long max_s_gap = 1;
  Rat gap_min(0);
  bool has_gap = false;
  for (const DiffConstraint& k : ds.constraints) {
    Rat gap = k.bound - (dist[node(k.i)].base - dist[node(k.j)].base);
    long long sdiff = dist[node(k.i)].stricts - dist[node(k.j)].stricts;
    max_s_gap = std::max(max_s_gap, std::llabs(sdiff) + 1);
    if (gap > Rat(0)) {
      gap_min = has_gap ? rat_min(gap_min, gap) : gap;
      has_gap = true;
    }
  }
  Rat theta(1, 4LL * std::max(1, ds.num_vars));
  if (has_gap) theta = rat_min(theta, gap_min / Rat(2 * max_s_gap));
  out.feasible = true;
  out.values.resize(ds.num_vars);
  Rat shift = dist[origin].base + theta * Rat(dist[origin].stricts);
  for (int v = 0; v < ds.num_vars; ++v)
    out.values[v] = dist[v].base + theta * Rat(dist[v].stricts) - shift;
  return out;
}

}  // namespace suig2
