#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "suig2/difference_system.hpp"
#include "suig2/oracle.hpp"
#include "suig2/random_tree.hpp"
#include "suig2/tree_enum.hpp"

using namespace suig2;

namespace {

Tree star(int leaves) {
  std::vector<std::pair<int, int>> es;
  for (int i = 1; i <= leaves; ++i) es.emplace_back(0, i);
  return make_tree(leaves + 1, es);
}

Tree path(int n) {
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
  return make_tree(n, es);
}

// spider: center 0, legs of the given lengths
Tree spider(const std::vector<int>& legs) {
  std::vector<std::pair<int, int>> es;
  int next = 1;
  for (int len : legs) {
    int prev = 0;
    for (int i = 0; i < len; ++i) {
      es.emplace_back(prev, next);
      prev = next++;
    }
  }
  return make_tree(next, es);
}

bool satisfied(const DifferenceSystem& ds, const std::vector<Rat>& vals) {
  for (const auto& k : ds.constraints) {
    Rat xi = k.i < 0 ? Rat(0) : vals[k.i];
    Rat xj = k.j < 0 ? Rat(0) : vals[k.j];
    Rat d = xi - xj;
    if (k.strict ? !(d < k.bound) : !(d <= k.bound)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("difference system: tight chain") {
  DifferenceSystem ds;
  ds.num_vars = 2;
  ds.constraints.push_back({1, 0, Rat(1), false});
  ds.constraints.push_back({0, 1, Rat(-1), false});
  auto sol = solve_difference_system(ds);
  REQUIRE(sol.feasible);
  CHECK(sol.values[1] - sol.values[0] == Rat(1));
}

TEST_CASE("difference system: strict against tight is infeasible") {
  DifferenceSystem ds;
  ds.num_vars = 2;
  ds.constraints.push_back({1, 0, Rat(1), true});
  ds.constraints.push_back({0, 1, Rat(-1), false});
  auto sol = solve_difference_system(ds);
  REQUIRE_FALSE(sol.feasible);
  REQUIRE(sol.cycle.size() == 2);
  Rat total(0);
  int stricts = 0;
  for (int c : sol.cycle) {
    total += ds.constraints[c].bound;
    stricts += ds.constraints[c].strict ? 1 : 0;
  }
  CHECK((total < Rat(0) || (total == Rat(0) && stricts >= 1)));
}

TEST_CASE("difference system: stab box with one cross adjacency") {
  Rat eps(1, 2);
  DifferenceSystem ds;
  ds.num_vars = 2;  // 0 = y_low, 1 = y_up
  ds.constraints.push_back({1, 0, Rat(1), false});
  ds.constraints.push_back({0, -1, Rat(1), false});
  ds.constraints.push_back({-1, 0, Rat(0), false});
  ds.constraints.push_back({1, -1, Rat(2) + eps, false});
  ds.constraints.push_back({-1, 1, -(Rat(1) + eps), false});
  auto sol = solve_difference_system(ds);
  REQUIRE(sol.feasible);
  CHECK(satisfied(ds, sol.values));
}

TEST_CASE("difference system: strict slack is visible for integer bounds") {
  DifferenceSystem ds;
  ds.num_vars = 3;
  ds.constraints.push_back({1, 0, Rat(2), false});
  ds.constraints.push_back({0, 1, Rat(-1), true});  // x1 - x0 > 1
  ds.constraints.push_back({2, 1, Rat(1), false});
  auto sol = solve_difference_system(ds);
  REQUIRE(sol.feasible);
  CHECK(satisfied(ds, sol.values));
  CHECK(sol.values[1] - sol.values[0] - Rat(1) >= Rat(1, 12));
}

TEST_CASE("difference system: random systems round trip") {
  std::mt19937_64 rng(20260815);
  for (int iter = 0; iter < 500; ++iter) {
    DifferenceSystem ds;
    ds.num_vars = 5;
    int m = 3 + (int)(rng() % 8);
    for (int c = 0; c < m; ++c) {
      int i = (int)(rng() % 6) - 1;  // -1..4
      int j = (int)(rng() % 6) - 1;
      if (i == j) continue;
      Rat bound((long long)(rng() % 5) - 2);
      bool strict = (rng() % 3) == 0;
      ds.constraints.push_back({i, j, bound, strict});
    }
    auto sol = solve_difference_system(ds);
    if (sol.feasible) {
      CHECK(satisfied(ds, sol.values));
    } else {
      // witness must be a closed walk with nonpositive total, negative
      // when no strict edge participates
      REQUIRE_FALSE(sol.cycle.empty());
      Rat total(0);
      int stricts = 0;
      for (size_t p = 0; p < sol.cycle.size(); ++p) {
        const auto& cur = ds.constraints[sol.cycle[p]];
        const auto& nxt = ds.constraints[sol.cycle[(p + 1) % sol.cycle.size()]];
        CHECK(cur.i == nxt.j);
        total += cur.bound;
        stricts += cur.strict ? 1 : 0;
      }
      CHECK((total < Rat(0) || (total == Rat(0) && stricts >= 1)));
    }
  }
}

TEST_CASE("oracle accepts paths, claws and small spiders") {
  for (const Tree& t : {path(1), path(3), path(7), star(3), star(4),
                        spider({2, 2, 1}), spider({2, 2, 2, 2})}) {
    auto res = brute_force_2suig(t);
    CAPTURE(serialize_tree(t));
    REQUIRE(res.status == OracleResult::Status::Accept);
    REQUIRE(res.rep.has_value());
    CHECK(verify(*res.rep, t).pass);
  }
}

TEST_CASE("oracle rejects the five-leaf star") {
  auto res = brute_force_2suig(star(5));
  CHECK(res.status == OracleResult::Status::Reject);
}

TEST_CASE("oracle accepts the five cycle") {
  Graph c5 = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  auto res = brute_force_2suig(c5);
  REQUIRE(res.status == OracleResult::Status::Accept);
  CHECK(verify_graph(*res.rep, c5).pass);
}

TEST_CASE("oracle size guard") {
  CHECK_THROWS_AS(brute_force_2suig(path(10)), TooLargeError);
  SearchConfig big;
  big.max_n = 12;
  CHECK_NOTHROW(brute_force_2suig(path(12), big));
  SearchConfig toobig;
  toobig.max_n = 13;
  CHECK_THROWS_AS(brute_force_2suig(path(5), toobig), TooLargeError);
}

TEST_CASE("oracle honors the time budget with Unknown") {
  SearchConfig cfg;
  cfg.time_budget = std::chrono::milliseconds(0);
  auto res = brute_force_2suig(star(5), cfg);
  CHECK(res.status == OracleResult::Status::Unknown);
}

TEST_CASE("oracle decision is invariant under relabeling") {
  std::mt19937_64 rng(7);
  for (int n = 4; n <= 7; ++n)
    for (const Tree& t : enumerate_trees(n)) {
      auto base = brute_force_2suig(t).status;
      std::vector<int> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      std::vector<std::pair<int, int>> es;
      for (auto [u, v] : t.edges()) es.emplace_back(perm[u], perm[v]);
      Tree relabeled = make_tree(n, es);
      CAPTURE(serialize_tree(t));
      CHECK(brute_force_2suig(relabeled).status == base);
    }
}

TEST_CASE("oracle matches degree and structure facts on small trees") {
  for (int n = 1; n <= 7; ++n)
    for (const Tree& t : enumerate_trees(n)) {
      auto res = brute_force_2suig(t);
      CAPTURE(serialize_tree(t));
      REQUIRE(res.status != OracleResult::Status::Unknown);
      int maxdeg = 0;
      for (int v = 0; v < t.n(); ++v) maxdeg = std::max(maxdeg, degree(t, v));
      if (maxdeg >= 5) CHECK(res.status == OracleResult::Status::Reject);
      if (branch_vertices(t).size() <= 1 && maxdeg <= 4)
        CHECK(res.status == OracleResult::Status::Accept);
      if (res.status == OracleResult::Status::Accept)
        CHECK(verify(*res.rep, t).pass);
    }
}
