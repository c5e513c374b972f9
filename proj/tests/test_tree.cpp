#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "suig2/random_tree.hpp"
#include "suig2/tree.hpp"
#include "suig2/tree_enum.hpp"

using namespace suig2;

namespace {

Tree path(int n) {
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
  return make_tree(n, es);
}

Tree star(int leaves) {
  std::vector<std::pair<int, int>> es;
  for (int i = 1; i <= leaves; ++i) es.emplace_back(0, i);
  return make_tree(leaves + 1, es);
}

// Literal oracle: does the component of T - uv containing `side` contain an
// induced K_{1,3}? Checked by explicit component extraction and degree scan.
bool claw_oracle(const Tree& t, int u, int v, int side) {
  std::set<int> comp;
  std::vector<int> stack{side};
  comp.insert(side);
  while (!stack.empty()) {
    int w = stack.back();
    stack.pop_back();
    for (int x : t.adj(w)) {
      if ((w == u && x == v) || (w == v && x == u)) continue;
      if (comp.insert(x).second) stack.push_back(x);
    }
  }
  for (int w : comp) {
    int d = 0;
    for (int x : t.adj(w))
      if (comp.count(x) && !((w == u && x == v) || (w == v && x == u))) ++d;
    if (d >= 3) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("parse_tree accepts the documented format") {
  Tree t = parse_tree("# a comment\n0 1\n1 2\n\n2 3  # trailing comment\n");
  CHECK(t.n() == 4);
  CHECK(t.edges().size() == 3);
  CHECK(t.g.has_edge(2, 3));
  CHECK_FALSE(t.g.has_edge(0, 3));
}

TEST_CASE("parse_tree error taxonomy") {
  auto kind_of = [](const std::string& s) {
    try {
      parse_tree(s);
    } catch (const TreeError& e) {
      return e.kind;
    }
    return TreeErrorKind::EmptyInput;  // unreachable for error inputs
  };
  CHECK(kind_of("") == TreeErrorKind::EmptyInput);
  CHECK(kind_of("# only comments\n") == TreeErrorKind::EmptyInput);
  CHECK(kind_of("0\n") == TreeErrorKind::ParseError);
  CHECK(kind_of("0 1 2\n") == TreeErrorKind::ParseError);
  CHECK(kind_of("0 2\n") == TreeErrorKind::ParseError);  // id 1 missing
  CHECK(kind_of("-1 0\n") == TreeErrorKind::ParseError);
  CHECK(kind_of("0 0\n") == TreeErrorKind::NotATree);
  CHECK(kind_of("0 1\n0 1\n") == TreeErrorKind::NotATree);
  CHECK(kind_of("0 1\n1 2\n2 0\n") == TreeErrorKind::NotATree);     // cycle
  CHECK(kind_of("0 1\n2 3\n1 2\n0 3\n") == TreeErrorKind::NotATree);
}

TEST_CASE("serialize then parse round trips") {
  Tree t = star(4);
  Tree u = parse_tree(serialize_tree(t));
  CHECK(u.edges() == t.edges());
}

TEST_CASE("degree and branch vertices") {
  Tree t = star(3);
  CHECK(degree(t, 0) == 3);
  CHECK(degree(t, 1) == 1);
  CHECK(branch_vertices(t) == std::vector<int>{0});
  CHECK(branch_vertices(path(5)).empty());
}

TEST_CASE("tree_distance") {
  Tree t = path(6);
  CHECK(tree_distance(t, 0, 5) == 5);
  CHECK(tree_distance(t, 2, 2) == 0);
  Tree s = star(3);
  CHECK(tree_distance(s, 1, 2) == 2);
}

TEST_CASE("component_has_claw matches a literal component scan") {
  // double spider: two degree-3 vertices joined by a path
  // 1,2 - 0 - 3 - 4 - 5 - 6,7   (claws at 0 and 5)
  Tree t = make_tree(8, {{0, 1}, {0, 2}, {0, 3}, {3, 4}, {4, 5}, {5, 6}, {5, 7}});
  ClawIndex idx(t);
  for (auto [u, v] : t.edges()) {
    CAPTURE(u);
    CAPTURE(v);
    CHECK(idx.component_has_claw(u, v, u) == claw_oracle(t, u, v, u));
    CHECK(idx.component_has_claw(u, v, v) == claw_oracle(t, u, v, v));
  }
  // the middle edge separates the two claws
  CHECK(idx.component_has_claw(3, 4, 3));
  CHECK(idx.component_has_claw(3, 4, 4));
  // a pendant edge at a claw center: the leaf side has no claw
  CHECK_FALSE(idx.component_has_claw(0, 1, 1));
  CHECK(idx.component_has_claw(0, 1, 0));
}

TEST_CASE("component_has_claw exhaustive on assorted trees") {
  std::vector<Tree> trees;
  trees.push_back(path(2));
  trees.push_back(path(7));
  trees.push_back(star(3));
  trees.push_back(star(5));
  // caterpillar with legs
  trees.push_back(
      make_tree(9, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {1, 5}, {2, 6}, {3, 7}, {3, 8}}));
  // degree-4 center with one long arm
  trees.push_back(make_tree(7, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {4, 5}, {5, 6}}));
  for (const Tree& t : trees) {
    ClawIndex idx(t);
    for (auto [u, v] : t.edges()) {
      CAPTURE(serialize_tree(t));
      CHECK(idx.component_has_claw(u, v, u) == claw_oracle(t, u, v, u));
      CHECK(idx.component_has_claw(u, v, v) == claw_oracle(t, u, v, v));
    }
  }
}

TEST_CASE("degree four side vertex still centers a claw after removal") {
  // removing one edge at a degree-4 vertex leaves degree 3
  Tree t = star(4);
  ClawIndex idx(t);
  CHECK(idx.component_has_claw(0, 1, 0));
  CHECK_FALSE(idx.component_has_claw(0, 1, 1));
}

TEST_CASE("canonical_form separates isomorphism classes") {
  Tree p4a = make_tree(4, {{0, 1}, {1, 2}, {2, 3}});
  Tree p4b = make_tree(4, {{2, 0}, {0, 3}, {3, 1}});  // same path, relabeled
  Tree s3 = star(3);
  CHECK(canonical_form(p4a) == canonical_form(p4b));
  CHECK(canonical_form(p4a) != canonical_form(s3));
}

TEST_CASE("enumerate_trees matches the known census") {
  // number of unlabeled trees on n = 1..12 vertices
  const std::vector<size_t> expected{1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551};
  for (int n = 1; n <= 12; ++n) {
    auto trees = enumerate_trees(n);
    CAPTURE(n);
    CHECK(trees.size() == expected[n - 1]);
    std::set<std::string> forms;
    for (const Tree& t : trees) {
      CHECK(t.n() == n);
      forms.insert(canonical_form(t));
    }
    CHECK(forms.size() == trees.size());
  }
}

TEST_CASE("random_tree is deterministic per seed and valid") {
  Tree a = random_tree(20, 7);
  Tree b = random_tree(20, 7);
  CHECK(a.edges() == b.edges());
  Tree c = random_tree(20, 8);
  CHECK(a.edges() != c.edges());
  for (uint64_t seed = 0; seed < 50; ++seed) {
    Tree t = random_tree(1 + (int)(seed % 30), seed);
    CHECK(t.edges().size() == (size_t)t.n() - (t.n() > 0 ? 1 : 0));
  }
}

TEST_CASE("random_tree covers all small isomorphism classes") {
  // sanity: with many seeds, every 5-vertex shape appears
  std::set<std::string> seen;
  for (uint64_t seed = 0; seed < 300; ++seed)
    seen.insert(canonical_form(random_tree(5, seed)));
  CHECK(seen.size() == 3);
}
