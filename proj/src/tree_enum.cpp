#include "suig2/tree_enum.hpp"

#include <algorithm>
#include <map>

namespace suig2 {

namespace {

std::string encode_rooted(const Tree& t, int root, int parent) {
  std::vector<std::string> kids;
  for (int w : t.adj(root))
    if (w != parent) kids.push_back(encode_rooted(t, w, root));
  std::sort(kids.begin(), kids.end());
  std::string out = "(";
  for (auto& k : kids) out += k;
  out += ")";
  return out;
}

// One or two middle vertices of a longest path.
std::vector<int> centers(const Tree& t) {
  int n = t.n();
  if (n == 1) return {0};
  std::vector<int> deg(n), order;
  for (int v = 0; v < n; ++v) deg[v] = degree(t, v);
  std::vector<int> layer;
  std::vector<char> removed(n, 0);
  for (int v = 0; v < n; ++v)
    if (deg[v] == 1) layer.push_back(v);
  int remaining = n;
  while (remaining > 2) {
    std::vector<int> next;
    for (int v : layer) {
      removed[v] = 1;
      --remaining;
      for (int w : t.adj(v))
        if (!removed[w] && --deg[w] == 1) next.push_back(w);
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

}  // namespace

std::string canonical_form(const Tree& t) {
  std::string best;
  for (int c : centers(t)) {
    std::string enc = encode_rooted(t, c, -1);
    if (best.empty() || enc < best) best = enc;
  }
  return best;
}

std::vector<Tree> enumerate_trees(int n) {
  if (n < 1) return {};
  std::map<std::string, Tree> current;
  {
    Tree single{Graph::from_edges(1, {})};
    current.emplace(canonical_form(single), std::move(single));
  }
  for (int size = 2; size <= n; ++size) {
    std::map<std::string, Tree> next;
    for (auto& [key, t] : current) {
      (void)key;
      for (int v = 0; v < t.n(); ++v) {
        auto es = t.edges();
        es.emplace_back(v, t.n());
        Tree grown = make_tree(t.n() + 1, std::move(es));
        std::string enc = canonical_form(grown);
        next.try_emplace(std::move(enc), std::move(grown));
      }
    }
    current = std::move(next);
  }
  std::vector<Tree> out;
  out.reserve(current.size());
  for (auto& [key, t] : current) {
    (void)key;
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace suig2
