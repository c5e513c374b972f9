#include "suig2/geometry.hpp"

#include <algorithm>
#include <numeric>

namespace suig2 {

std::string stab_name(Stab s) { return s == Stab::Lower ? "lower" : "upper"; }

Rat Representation::stab_y_min(Stab s) const {
  return s == Stab::Lower ? Rat(0) : Rat(1) + epsilon;
}

Rat Representation::stab_y_max(Stab s) const {
  return s == Stab::Lower ? Rat(1) : Rat(2) + epsilon;
}

Graph intersection_graph(const Representation& r) {
  int n = r.n();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return r.squares[a].x < r.squares[b].x;
  });
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < n; ++i) {
    const UnitSquare& a = r.squares[order[i]];
    for (int j = i + 1; j < n; ++j) {
      const UnitSquare& b = r.squares[order[j]];
      if (b.x - a.x > Rat(1)) break;
      if ((a.y - b.y).abs() <= Rat(1)) es.emplace_back(order[i], order[j]);
    }
  }
  return Graph::from_edges(n, std::move(es));
}

std::string Issue::str() const {
  switch (kind) {
    case IssueKind::StabViolation:
      return "StabViolation(" + std::to_string(u) + ")";
    case IssueKind::MissingEdge:
      return "MissingEdge(" + std::to_string(u) + "," + std::to_string(v) + ")";
    case IssueKind::ExtraEdge:
      return "ExtraEdge(" + std::to_string(u) + "," + std::to_string(v) + ")";
    case IssueKind::EpsilonOutOfRange:
      return "EpsilonOutOfRange";
  }
  return "?";
}

VerifyReport verify_graph(const Representation& r, const Graph& g) {
  VerifyReport rep;
  if (r.n() != g.n) {
    rep.pass = false;
    rep.issues.push_back({IssueKind::StabViolation, -1, -1});
    return rep;
  }
  if (!(Rat(0) < r.epsilon && r.epsilon < Rat(1)))
    rep.issues.push_back({IssueKind::EpsilonOutOfRange, -1, -1});
  for (int v = 0; v < r.n(); ++v) {
    const UnitSquare& s = r.squares[v];
    if (s.y < r.stab_y_min(s.stab) || s.y > r.stab_y_max(s.stab))
      rep.issues.push_back({IssueKind::StabViolation, v, -1});
  }
  Graph got = intersection_graph(r);
  const auto& want = g.edges;
  size_t i = 0, j = 0;
  while (i < want.size() || j < got.edges.size()) {
    if (j == got.edges.size() || (i < want.size() && want[i] < got.edges[j])) {
      rep.issues.push_back({IssueKind::MissingEdge, want[i].first, want[i].second});
      ++i;
    } else if (i == want.size() || got.edges[j] < want[i]) {
      rep.issues.push_back({IssueKind::ExtraEdge, got.edges[j].first, got.edges[j].second});
      ++j;
    } else {
      ++i;
      ++j;
    }
  }
  rep.pass = rep.issues.empty();
  return rep;
}

Rat span(const Representation& r, const std::vector<int>& vertices) {
  if (vertices.empty()) return Rat(0);
  std::vector<Rat> xs;
  xs.reserve(vertices.size());
  for (int v : vertices) xs.push_back(r.squares[v].x);
  std::sort(xs.begin(), xs.end());
  Rat total(0);
  Rat lo = xs[0], hi = xs[0] + Rat(1);
  for (size_t i = 1; i < xs.size(); ++i) {
    if (xs[i] > hi)
      throw GeometryError("span: x-projections form a disconnected union");
    hi = rat_max(hi, xs[i] + Rat(1));
  }
  total = hi - lo;
  return total;
}

std::string path_kind_name(PathKind k) {
  switch (k) {
    case PathKind::LowerRight: return "lower-right";
    case PathKind::UpperRight: return "upper-right";
    case PathKind::LowerLeft: return "lower-left";
    case PathKind::UpperLeft: return "upper-left";
    case PathKind::Folded: return "folded";
    case PathKind::Mixed: return "mixed";
  }
  return "?";
}

PathClassification classify_path(const Representation& r,
                                 const std::vector<int>& path,
                                 const Rat& c) {
  PathClassification out;
  size_t k = path.size();
  if (k == 0) return out;
  bool all_lower = true, all_upper = true, incr = true, decr = true;
  for (size_t i = 0; i < k; ++i) {
    const UnitSquare& s = r.squares[path[i]];
    (s.stab == Stab::Lower ? all_upper : all_lower) = false;
    if (i + 1 < k) {
      const UnitSquare& t = r.squares[path[i + 1]];
      if (!(s.x < t.x)) incr = false;
      if (!(t.x < s.x)) decr = false;
    }
  }
  if ((all_lower || all_upper) && (incr || decr)) {
    out.kind = all_lower ? (incr ? PathKind::LowerRight : PathKind::LowerLeft)
                         : (incr ? PathKind::UpperRight : PathKind::UpperLeft);
  } else {
    // folded: some interior vertex's square strictly extremal in x
    bool folded = false;
    for (size_t i = 1; i + 1 < k && !folded; ++i) {
      bool leftmost = true, rightmost = true;
      for (size_t j = 0; j < k; ++j) {
        if (j == i) continue;
        if (!(r.squares[path[i]].x < r.squares[path[j]].x)) leftmost = false;
        if (!(r.squares[path[j]].x < r.squares[path[i]].x)) rightmost = false;
      }
      folded = leftmost || rightmost;
    }
    out.kind = folded ? PathKind::Folded : PathKind::Mixed;
  }
  Rat sp = span(r, path);
  out.stretched = (sp == Rat((long long)k));
  out.shrinked = (sp == Rat((long long)((k + 1) / 2)) + c);
  return out;
}

}  // namespace suig2
