#include "suig2/random_tree.hpp"

#include <queue>

namespace suig2 {

uint64_t uniform_below(std::mt19937_64& rng, uint64_t bound) {
  if (bound == 0) throw std::domain_error("uniform_below: bound must be > 0");
  uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

Tree random_tree(int n, uint64_t seed) {
  if (n < 1) throw std::domain_error("random_tree: n must be >= 1");
  if (n == 1) return Tree{Graph::from_edges(1, {})};
  if (n == 2) return make_tree(2, {{0, 1}});
  std::mt19937_64 rng(seed);
  std::vector<int> pruefer(n - 2);
  for (int& p : pruefer) p = (int)uniform_below(rng, (uint64_t)n);
  std::vector<int> deg(n, 1);
  for (int p : pruefer) ++deg[p];
  std::priority_queue<int, std::vector<int>, std::greater<int>> leaves;
  for (int v = 0; v < n; ++v)
    if (deg[v] == 1) leaves.push(v);
  std::vector<std::pair<int, int>> es;
  es.reserve(n - 1);
  for (int p : pruefer) {
    int leaf = leaves.top();
    leaves.pop();
    es.emplace_back(leaf, p);
    if (--deg[p] == 1) leaves.push(p);
  }
  int a = leaves.top();
  leaves.pop();
  int b = leaves.top();
  es.emplace_back(a, b);
  return make_tree(n, std::move(es));
}

}  // namespace suig2
