#include "suig2/recognizer.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>

#include "suig2/red_structure.hpp"

namespace suig2 {

std::string Certificate::str() const {
  switch (kind) {
    case Kind::DegreeExceeded:
      return "DegreeExceeded(v=" + std::to_string(vertex) + ")";
    case Kind::RedSubgraphNotPath:
      return "RedSubgraphNotPath(v=" + std::to_string(vertex) + ")";
    case Kind::NoSpecialVertex:
      return "NoSpecialVertex(v=" + std::to_string(vertex) + ")";
    case Kind::MalformedPeriphery:
      return "MalformedPeriphery(v=" + std::to_string(vertex) + ")";
    case Kind::StageFailure: {
      std::string s = "StageFailure(stage=" + std::to_string(stage) +
                      ",tried=" + std::to_string(tried) + ",violations=[";
      for (size_t i = 0; i < violations.size(); ++i) {
        if (i) s += ",";
        s += violations[i];
      }
      return s + "])";
    }
  }
  return "?";
}

StabRelation stab_of_a2(int d1, int d2) {
  return (d1 == 4 && d2 == 4) ? StabRelation::Different : StabRelation::Same;
}

bool tail_budget(int case_id, int m, int alpha_v, int alpha_w) {
  if (case_id < 1 || case_id > 4)
    throw std::invalid_argument("tail_budget: case id must be 1..4");
  int adjust = case_id == 1 ? 0 : case_id == 3 ? 2 : 1;
  return alpha_v + alpha_w - adjust <= m;
}

namespace {

// Cumulative x offsets of a shrinked monotone run of q squares: steps
// alternate 1/(4*floor(q/2)) and 1 starting with the small step, so the
// union of x projections has length ceil(q/2) + 1/4 and only consecutive
// squares of the run touch.
std::vector<Rat> shrink_offsets(int q) {
  std::vector<Rat> off{Rat(0)};
  if (q <= 1) return off;
  Rat small(1, 4LL * (q / 2));
  Rat cur(0);
  for (int j = 1; j < q; ++j) {
    cur = cur + (j % 2 == 1 ? small : Rat(1));
    off.push_back(cur);
  }
  return off;
}

// ---------------------------------------------------------------------------
// Per-stage vertical solver: difference constraints y_i - y_j <= b over a
// handful of stage variables, with committed squares folded in as constants.
// Strict separations enter with an explicit margin chosen small enough that
// all emitted y values stay on one fixed lattice.
struct YCon {
  int i;  // -1 stands for the constant 0
  int j;
  Rat b;
};

struct YSolver {
  int nv = 0;
  std::vector<YCon> cons;

  void box(int v, const Rat& lo, const Rat& hi) {
    cons.push_back({v, -1, hi});
    cons.push_back({-1, v, -lo});
  }
  void le(int i, int j, const Rat& b) { cons.push_back({i, j, b}); }

  // Tightest implied interval per variable; false when contradictory.
  bool intervals(std::vector<Rat>& lo, std::vector<Rat>& hi) const {
    int org = nv;
    auto node = [&](int idx) { return idx < 0 ? org : idx; };
    std::vector<std::optional<Rat>> dn(nv + 1), dp(nv + 1);
    dn[org] = Rat(0);  // shortest distance origin -> v  (upper bounds)
    dp[org] = Rat(0);  // shortest distance v -> origin  (negated lower bounds)
    for (int round = 0; round <= nv + 1; ++round) {
      bool changed = false;
      for (const YCon& c : cons) {
        int u = node(c.j), v = node(c.i);
        if (dn[u] && (!dn[v] || *dn[u] + c.b < *dn[v])) {
          dn[v] = *dn[u] + c.b;
          changed = true;
        }
        if (dp[v] && (!dp[u] || *dp[v] + c.b < *dp[u])) {
          dp[u] = *dp[v] + c.b;
          changed = true;
        }
      }
      if (!changed) {
        lo.assign(nv, Rat(0));
        hi.assign(nv, Rat(0));
        for (int v = 0; v < nv; ++v) {
          if (!dn[v] || !dp[v]) return false;  // unbounded: missing box
          lo[v] = -*dp[v];
          hi[v] = *dn[v];
          if (hi[v] < lo[v]) return false;
        }
        return true;
      }
    }
    return false;  // still relaxing after nv+1 rounds: negative cycle
  }

  bool feasible() const {
    std::vector<Rat> lo, hi;
    return intervals(lo, hi);
  }
};

// ---------------------------------------------------------------------------
// Stage engine

struct Role {
  bool right;  // side of the backbone square
  Stab stab;
  int z;  // canonical corner index 1..4
};

// z1 lower-left, z2 upper-left, z3 upper-right, z4 lower-right
const Role kRoles[4] = {
    {false, Stab::Lower, 1},
    {false, Stab::Upper, 2},
    {true, Stab::Upper, 3},
    {true, Stab::Lower, 4},
};

struct PendSq {
  int v;
  Rat x;
  Stab stab;
  int yvar = -1;  // -1: fixed y; else index of a stage variable
  Rat y;          // meaningful when yvar < 0
};

struct TailPlan {
  std::vector<PendSq> sqs;  // run squares, anchor first
  Stab stab;
  bool dir_right;
  bool cross_attached;  // anchor stab differs from the agent's
  Rat leaf_x;
  int agent = -1;
};

struct AgentPlan {
  int v = -1;
  Role role{};
  Rat x;
  std::vector<TailPlan> tails;
};

// Light records kept per enumerated candidate; the full square list is
// rebuilt only for the candidates that reach evaluation.
struct TailLite {
  int anchor_v;
  int q;
  Stab stab;
  bool dir_right;
  bool cross_attached;
  Rat anchor;
  Rat leaf_x;
};

struct AgentLite {
  int v;
  Role role{};
  Rat x;
  std::vector<TailLite> tails;
};

struct StageCandidate {
  std::vector<AgentLite> agents;
  Rat max_x;      // rightmost x among the stage's squares
  int upper_cnt = 0;
  long long seq = 0;  // enumeration order, final tie break
};

struct RightTailRecord {
  bool active = false;
  int owner_pos = -1;  // 0-based backbone position
  bool agent_right = false;
  int alpha = 0;
  Rat leaf_x;
};

// Failure labels as bits; bit order matches the alphabetical order of the
// label names so certificates list them sorted.
enum : unsigned {
  kLabelBudgetCase1 = 1u << 0,
  kLabelRoleShortage = 1u << 4,
  kLabelSearchBudget = 1u << 5,
  kLabelXCollision = 1u << 6,
  kLabelYInfeasible = 1u << 7,
};

std::vector<std::string> label_names(unsigned mask) {
  static const char* names[8] = {"budget-case-1", "budget-case-2",
                                 "budget-case-3", "budget-case-4",
                                 "role-shortage", "search-budget",
                                 "x-collision",   "y-infeasible"};
  std::vector<std::string> out;
  for (int b = 0; b < 8; ++b)
    if (mask & (1u << b)) out.push_back(names[b]);
  return out;
}

// Tail slot-pair options, slot*2+far encoded, in hug-first wave order.
// Fixed tables; build_candidates picks one by tail multiplicity.
struct ComboTables {
  std::vector<std::pair<int, int>> none{{-1, -1}};
  std::vector<std::pair<int, int>> single;
  std::vector<std::pair<int, int>> both;        // distinct tail lengths
  std::vector<std::pair<int, int>> both_equal;  // equal lengths: i < j only
  ComboTables() {
    auto fars = [](int a, int b) {
      return (a > 0 ? a % 2 : 0) + (b > 0 ? b % 2 : 0);
    };
    for (int w = 0; w <= 2; ++w)
      for (int i = 0; i < 8; ++i) {
        if (w == fars(i, -1) && w <= 1) single.push_back({i, -1});
        for (int j = 0; j < 8; ++j) {
          if (i / 2 == j / 2 || fars(i, j) != w) continue;
          both.push_back({i, j});
          if (i < j) both_equal.push_back({i, j});
        }
      }
  }
};

const ComboTables& combo_tables() {
  static const ComboTables t;
  return t;
}

struct StageFailInfo {
  int stage = 0;  // 1-based
  int tried = 0;
  unsigned labels = 0;
};

struct Engine {
  const Tree& t;
  Rat eps;
  int n;
  std::vector<int> deg;
  Rat eta;    // nudge past an obstacle along x
  Rat delta;  // margin for strict vertical separations

  std::vector<int> A;
  std::vector<Stab> sig;
  std::vector<std::vector<int>> agents_by_pos;
  const std::map<int, Tails>& tails;

  std::vector<UnitSquare> sq;
  std::vector<char> placed;
  RightTailRecord pending[2];
  std::map<int, std::vector<Rat>> run_offs;  // shrink offsets per tail length
  mutable std::vector<Rat> obst_buf;         // scratch, reused across calls
  mutable std::vector<Rat> cand_buf;

  // sorted x lists against which same-line collisions are checked: committed
  // squares (refreshed per stage visit) and the fixed backbone columns
  std::vector<std::pair<Rat, int>> committed_xs[2];
  std::vector<std::pair<Rat, int>> col_xs[2];

  Engine(const Tree& tr, const Rat& e, std::vector<int> back,
         std::vector<std::vector<int>> ags, const std::map<int, Tails>& tl)
      : t(tr),
        eps(e),
        n(tr.n()),
        A(std::move(back)),
        agents_by_pos(std::move(ags)),
        tails(tl) {
    deg.resize(n);
    for (int v = 0; v < n; ++v) deg[v] = (int)t.adj(v).size();
    eta = Rat(1, 4LL * (n + 2));
    delta = Rat(1, 64LL * eps.den() * (n + 2) * (n + 2));
    sig.resize(A.size());
    sig[0] = Stab::Lower;
    for (size_t i = 1; i < A.size(); ++i)
      sig[i] = stab_of_a2(deg[A[i - 1]], deg[A[i]]) == StabRelation::Different
                   ? flip(sig[i - 1])
                   : sig[i - 1];
    for (int j = 0; j < (int)A.size(); ++j)
      col_xs[sig[j] == Stab::Upper].emplace_back(backbone_x(j), A[j]);
    for (const auto& [g, tl] : tails)
      for (const std::vector<int>* tv : {&tl.long_tail, &tl.short_tail})
        if (!tv->empty())
          run_offs.emplace((int)tv->size(), shrink_offsets((int)tv->size()));
    sq.resize(n);
    placed.assign(n, 0);
  }

  void refresh_committed() {
    committed_xs[0].clear();
    committed_xs[1].clear();
    for (int v = 0; v < n; ++v)
      if (placed[v]) committed_xs[sq[v].stab == Stab::Upper].emplace_back(sq[v].x, v);
    std::sort(committed_xs[0].begin(), committed_xs[0].end());
    std::sort(committed_xs[1].begin(), committed_xs[1].end());
  }

  int k() const { return (int)A.size(); }
  Rat backbone_x(int pos) const { return Rat((long long)pos + 1); }
  Rat ymin(Stab s) const { return s == Stab::Lower ? Rat(0) : Rat(1) + eps; }
  Rat ymax(Stab s) const { return s == Stab::Lower ? Rat(1) : Rat(2) + eps; }

  // Same-stab x obstacles with x in [qlo, qhi]: committed squares (cached,
  // refreshed at each stage visit), columns of the backbone not yet reached,
  // and the pending squares of the stage candidate so far. `skip` is the one
  // vertex the queried square is allowed to touch. Callers must pass a window
  // covering every obstacle that can interact with the square being placed.
  template <typename Fn>
  void each_obstacle(Stab s, const Rat& qlo, const Rat& qhi, int cur_pos,
                     const std::vector<PendSq>& pend, int skip, Fn&& fn) const {
    int side = s == Stab::Upper;
    auto scan = [&](const std::vector<std::pair<Rat, int>>& xs, const Rat& lo) {
      auto it = std::lower_bound(
          xs.begin(), xs.end(),
          std::make_pair(lo, std::numeric_limits<int>::min()));
      for (; it != xs.end() && it->first <= qhi; ++it)
        if (it->second != skip) fn(it->first);
    };
    scan(committed_xs[side], qlo);
    // columns sit at x = pos + 1, so pos > cur_pos means x >= cur_pos + 2
    Rat future_lo(cur_pos + 2);
    scan(col_xs[side], qlo > future_lo ? qlo : future_lo);
    for (const PendSq& q : pend)
      if (q.stab == s && q.v != skip && q.x >= qlo && q.x <= qhi) fn(q.x);
  }

  bool x_clear(Stab s, const Rat& x, int cur_pos, const std::vector<PendSq>& pend,
               int skip) const {
    // the window is exactly the conflict range, any hit disqualifies x
    bool ok = true;
    each_obstacle(s, x - Rat(1), x + Rat(1), cur_pos, pend, skip,
                  [&](const Rat&) { ok = false; });
    return ok;
  }

  // Anchor for a rigid shrinked run. The legal anchor window keeps the
  // anchor on the agent and, for a same-line run, the second square off it.
  // `far` starts at the outer end of the window and slides inward past
  // obstacles, the default hugs the agent and slides outward; a later agent
  // sometimes needs the room only one of the two leaves.
  std::optional<TailPlan> place_tail(const std::vector<int>& tv, int agent,
                                     const Rat& agent_x, Stab agent_stab,
                                     Stab tstab, bool dir_right, bool far,
                                     int cur_pos,
                                     const std::vector<PendSq>& pend) const {
    int q = (int)tv.size();
    const std::vector<Rat>& off = run_offs.at(q);
    Rat spread = off.back();
    bool same_attach = tstab == agent_stab;

    Rat wlo, whi;
    if (dir_right) {
      wlo = same_attach && q >= 2 ? agent_x + (Rat(1) - off[1]) + eta : agent_x;
      whi = agent_x + Rat(1);
    } else {
      wlo = agent_x - Rat(1);
      whi = same_attach && q >= 2 ? agent_x - (Rat(1) - off[1]) - eta : agent_x;
    }
    if (whi < wlo) return std::nullopt;

    // run squares lie in [a - lo_off, a + hi_off]; consecutive gaps are at
    // most 1, so an obstacle at o conflicts exactly when a - o falls in
    // [-hi_off - 1, lo_off + 1]
    Rat lo_off = dir_right ? Rat(0) : spread;
    Rat hi_off = dir_right ? spread : Rat(0);
    Rat d_lo = -hi_off - Rat(1);
    Rat d_hi = lo_off + Rat(1);
    Rat step_up = d_hi + eta;
    Rat step_dn = d_lo - eta;

    obst_buf.clear();
    each_obstacle(tstab, wlo - d_hi, whi - d_lo, cur_pos, pend, agent,
                  [&](const Rat& o) { obst_buf.push_back(o); });
    std::sort(obst_buf.begin(), obst_buf.end());
    bool slide_up = dir_right != far;
    Rat a = slide_up ? wlo : whi;
    if (slide_up) {
      for (const Rat& o : obst_buf) {
        Rat d = a - o;
        if (d >= d_lo && d <= d_hi) a = o + step_up;
      }
    } else {
      for (auto it = obst_buf.rbegin(); it != obst_buf.rend(); ++it) {
        Rat d = a - *it;
        if (d >= d_lo && d <= d_hi) a = *it + step_dn;
      }
    }
    if (a < wlo || a > whi) return std::nullopt;

    TailPlan tp;
    tp.stab = tstab;
    tp.dir_right = dir_right;
    tp.cross_attached = !same_attach;
    tp.agent = agent;
    Rat body_y = tstab == Stab::Lower ? ymin(tstab) : ymax(tstab);
    for (int j = 0; j < q; ++j) {
      Rat x = dir_right ? a + off[j] : a - off[j];
      tp.sqs.push_back({tv[j], x, tstab, -1, body_y});
    }
    tp.leaf_x = tp.sqs.back().x;
    return tp;
  }

  // Candidate x positions for an agent square: canonical corner offsets plus
  // positions nudged just past nearby same-stab obstacles.
  std::vector<Rat> agent_x_candidates(int pos, const Role& role,
                                      const std::vector<PendSq>& pend) const {
    Rat xi = backbone_x(pos);
    Rat lo = role.right ? xi : xi - Rat(1);
    Rat hi = role.right ? xi + Rat(1) : xi;
    int skip = role.stab == sig[pos] ? A[pos] : -1;
    std::vector<Rat>& cand = cand_buf;
    cand.clear();
    const Rat offs[4] = {Rat(0), Rat(1, 8), Rat(7, 8), Rat(1)};
    for (const Rat& o : offs) cand.push_back(role.right ? xi + o : xi - o);
    Rat bump = Rat(1) + eta;
    each_obstacle(role.stab, lo - bump, hi + bump, pos, pend, skip,
                  [&](const Rat& o) {
                    for (const Rat& x : {o - bump, o + bump})
                      if (x >= lo && x <= hi) cand.push_back(x);
                  });
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    std::vector<Rat> out;
    for (const Rat& x : cand)
      if (x >= lo && x <= hi && x_clear(role.stab, x, pos, pend, skip))
        out.push_back(x);
    if (!role.right) std::reverse(out.begin(), out.end());  // hug first
    return out;
  }

  std::vector<Role> available_roles(int pos) const {
    std::vector<Role> avail;
    for (const Role& r : kRoles) {
      if (k() > 1 && pos == 0 && r.right && r.stab == sig[1]) continue;
      if (pos > 0 && pos < k() - 1) {
        bool keep = (!r.right && r.stab == flip(sig[pos - 1])) ||
                    (r.right && r.stab == flip(sig[pos + 1]));
        if (!keep) continue;
      }
      if (k() > 1 && pos == k() - 1 && !r.right && r.stab == sig[pos - 1]) continue;
      avail.push_back(r);
    }
    return avail;
  }

  // Advisory corridor-capacity label: when a left tail meets a recorded
  // right tail in the same stab, a failed budget inequality names the case.
  void budget_label(const TailPlan& tp, bool agent_right, int pos,
                    unsigned& labels) const {
    if (tp.dir_right || tp.sqs.empty()) return;
    const RightTailRecord& rec = pending[tp.stab == Stab::Upper ? 1 : 0];
    if (!rec.active || rec.owner_pos >= pos) return;
    int m = pos - rec.owner_pos;
    int case_id = rec.agent_right ? (agent_right ? 4 : 1) : (agent_right ? 3 : 2);
    int alpha_w = ((int)tp.sqs.size() + 2) / 2;
    if (!tail_budget(case_id, m, rec.alpha, alpha_w))
      labels |= kLabelBudgetCase1 << (case_id - 1);
  }

  // Enumerates tail slot pairs and positions for the agents of one role
  // assignment, depth-first in canonical order, collecting every fully
  // placed stage candidate.
  void build_candidates(int pos, const std::vector<int>& ags,
                        const std::vector<Role>& roles, size_t idx,
                        std::vector<PendSq>& pend, std::vector<AgentPlan>& plans,
                        long long& seq, std::vector<StageCandidate>& out,
                        unsigned& labels) const {
    if ((long long)out.size() >= gen_cap) return;
    if (idx == ags.size()) {
      StageCandidate c;
      c.max_x = pend[0].x;
      for (const PendSq& q : pend) {
        c.max_x = rat_max(c.max_x, q.x);
        if (q.stab == Stab::Upper) ++c.upper_cnt;
      }
      c.agents.reserve(plans.size());
      for (const AgentPlan& ap : plans) {
        AgentLite al{ap.v, ap.role, ap.x, {}};
        for (const TailPlan& tp : ap.tails)
          al.tails.push_back({tp.sqs.front().v, (int)tp.sqs.size(), tp.stab,
                              tp.dir_right, tp.cross_attached,
                              tp.sqs.front().x, tp.leaf_x});
        c.agents.push_back(std::move(al));
      }
      c.seq = seq++;
      out.push_back(std::move(c));
      return;
    }
    int g = ags[idx];
    const Role& role = roles[idx];
    const Tails& tl = tails.at(g);
    int qlt = (int)tl.long_tail.size();
    int qst = (int)tl.short_tail.size();

    // tail options: (stab, direction) slot plus hug/far anchoring; two tails
    // of one agent never share a slot; equal-length tails are
    // interchangeable, so only one order per slot pair is kept
    struct Slot {
      Stab stab;
      bool right;
    };
    auto slots_for = [&](Stab agent_stab) {
      bool outward_right = role.right;
      std::vector<Slot> s{{agent_stab, outward_right},
                          {flip(agent_stab), outward_right},
                          {agent_stab, !outward_right},
                          {flip(agent_stab), !outward_right}};
      return s;
    };
    const ComboTables& ct = combo_tables();
    const std::vector<std::pair<int, int>>& combos =
        qlt == 0 ? ct.none
        : qst == 0 ? ct.single
        : qlt == qst ? ct.both_equal
                     : ct.both;

    std::vector<Rat> xs = agent_x_candidates(pos, role, pend);
    if (xs.empty()) labels |= kLabelXCollision;
    auto slots = slots_for(role.stab);
    for (const Rat& x : xs) {
      if ((long long)out.size() >= gen_cap) break;
      size_t base = pend.size();
      pend.push_back({g, x, role.stab, 1 + (int)idx, Rat()});
      // the first tail of a combo sees the same pending set whatever the
      // second slot is, so its placement is shared across combos
      std::array<std::optional<TailPlan>, 8> first_cache;
      std::array<char, 8> first_tried{};
      for (auto [ls, ss] : combos) {
        if ((long long)out.size() >= gen_cap) break;
        AgentPlan ap;
        ap.v = g;
        ap.role = role;
        ap.x = x;
        bool ok = true;
        size_t mark = pend.size();
        for (int which = 0; which < 2 && ok; ++which) {
          const std::vector<int>& tv = which == 0 ? tl.long_tail : tl.short_tail;
          int si = which == 0 ? ls : ss;
          if (si < 0 || tv.empty()) continue;
          TailPlan tpv;
          if (which == 0) {
            if (!first_tried[si]) {
              first_tried[si] = 1;
              first_cache[si] =
                  place_tail(tv, g, x, role.stab, slots[si / 2].stab,
                             slots[si / 2].right, si % 2 == 1, pos, pend);
            }
            if (!first_cache[si]) {
              labels |= kLabelXCollision;
              ok = false;
              break;
            }
            tpv = *first_cache[si];
          } else {
            auto tp = place_tail(tv, g, x, role.stab, slots[si / 2].stab,
                                 slots[si / 2].right, si % 2 == 1, pos, pend);
            if (!tp) {
              labels |= kLabelXCollision;
              ok = false;
              break;
            }
            tpv = std::move(*tp);
          }
          budget_label(tpv, role.right, pos, labels);
          for (const PendSq& q : tpv.sqs) pend.push_back(q);
          ap.tails.push_back(std::move(tpv));
        }
        if (ok) {
          plans.push_back(std::move(ap));
          build_candidates(pos, ags, roles, idx + 1, pend, plans, seq, out,
                           labels);
          plans.pop_back();
        }
        pend.resize(mark);
      }
      pend.resize(base);
    }
  }

  // Rebuilds the full square list of a candidate: backbone, agents, tail
  // runs. Stage y variables: 0 backbone, 1+i agent i, then one per anchor
  // square attached across stabs; everything else is pinned to line extremes.
  std::vector<PendSq> materialize(int pos, const StageCandidate& c) const {
    std::vector<PendSq> sqs;
    sqs.push_back({A[pos], backbone_x(pos), sig[pos], 0, Rat()});
    for (size_t i = 0; i < c.agents.size(); ++i)
      sqs.push_back(
          {c.agents[i].v, c.agents[i].x, c.agents[i].role.stab, 1 + (int)i, Rat()});
    int next = 1 + (int)c.agents.size();
    for (const AgentLite& ap : c.agents) {
      const Tails& tl = tails.at(ap.v);
      for (const TailLite& tp : ap.tails) {
        const std::vector<int>& tv =
            !tl.long_tail.empty() && tl.long_tail.front() == tp.anchor_v
                ? tl.long_tail
                : tl.short_tail;
        const std::vector<Rat>& off = run_offs.at(tp.q);
        Rat body_y = tp.stab == Stab::Lower ? ymin(tp.stab) : ymax(tp.stab);
        for (int j = 0; j < tp.q; ++j) {
          Rat x = tp.dir_right ? tp.anchor + off[j] : tp.anchor - off[j];
          int yv = j == 0 && tp.cross_attached ? next++ : -1;
          sqs.push_back({tv[j], x, tp.stab, yv, body_y});
        }
      }
    }
    return sqs;
  }

  YSolver assemble_y_system(int pos, const StageCandidate& c,
                            const std::vector<PendSq>& sqs) const {
    YSolver ys;
    ys.nv = 0;
    std::map<int, int> var_of;  // vertex -> y variable
    for (const PendSq& q : sqs)
      if (q.yvar >= 0) {
        var_of[q.v] = q.yvar;
        ys.nv = std::max(ys.nv, q.yvar + 1);
      }
    for (const PendSq& q : sqs)
      if (q.yvar >= 0) ys.box(q.yvar, ymin(q.stab), ymax(q.stab));

    // required contacts across the stabs
    auto cross_edge = [&](int u, int w, Stab su, Stab sw, const Rat* cu,
                          const Rat* cw) {
      if (su == sw) return;
      // |y_u - y_w| <= 1 with constants folded in
      if (cu && cw) return;
      if (!cu && !cw) {
        ys.le(var_of.at(u), var_of.at(w), Rat(1));
        ys.le(var_of.at(w), var_of.at(u), Rat(1));
      } else if (cu) {
        ys.le(var_of.at(w), -1, *cu + Rat(1));
        ys.le(-1, var_of.at(w), Rat(1) - *cu);
      } else {
        ys.le(var_of.at(u), -1, *cw + Rat(1));
        ys.le(-1, var_of.at(u), Rat(1) - *cw);
      }
    };
    if (pos > 0 && sig[pos] != sig[pos - 1]) {
      Rat c0 = sq[A[pos - 1]].y;
      cross_edge(A[pos], A[pos - 1], sig[pos], sig[pos - 1], nullptr, &c0);
    }
    for (const AgentLite& ap : c.agents) {
      cross_edge(ap.v, A[pos], ap.role.stab, sig[pos], nullptr, nullptr);
      for (const TailLite& tp : ap.tails) {
        if (tp.cross_attached)
          cross_edge(tp.anchor_v, ap.v, tp.stab, ap.role.stab, nullptr,
                     nullptr);
      }
    }

    // forced vertical separations: cross-stab pairs overlapping in x that
    // are not tree edges must stay strictly more than 1 apart
    auto separate = [&](const PendSq& p, int ov, const Rat& ox, Stab ostab,
                        const Rat* oy) {
      if (p.stab == ostab || ov == p.v) return;
      if ((p.x - ox).abs() > Rat(1)) return;
      if (t.g.has_edge(p.v, ov)) return;
      bool p_lower = p.stab == Stab::Lower;
      if (oy == nullptr) {
        const PendSq* o = nullptr;
        for (const PendSq& q : sqs)
          if (q.v == ov) o = &q;
        int lo_var = p_lower ? p.yvar : o->yvar;
        int up_var = p_lower ? o->yvar : p.yvar;
        Rat lo_fix = p_lower ? p.y : o->y;
        Rat up_fix = p_lower ? o->y : p.y;
        if (lo_var >= 0 && up_var >= 0)
          ys.le(lo_var, up_var, -Rat(1) - delta);
        else if (lo_var >= 0)
          ys.le(lo_var, -1, up_fix - Rat(1) - delta);
        else if (up_var >= 0)
          ys.le(-1, up_var, -lo_fix - Rat(1) - delta);
        // both fixed: lower body at 0 vs upper at 1+eps or above, safe
      } else {
        if (p.yvar < 0) return;  // fixed stage square vs committed: safe
        if (p_lower)
          ys.le(p.yvar, -1, *oy - Rat(1) - delta);
        else
          ys.le(-1, p.yvar, -*oy - Rat(1) - delta);
      }
    };
    for (size_t a = 0; a < sqs.size(); ++a) {
      const PendSq& p = sqs[a];
      for (size_t b = a + 1; b < sqs.size(); ++b) {
        const PendSq& q = sqs[b];
        if (p.stab == q.stab) continue;
        if ((p.x - q.x).abs() > Rat(1)) continue;
        if (t.g.has_edge(p.v, q.v)) continue;
        separate(p, q.v, q.x, q.stab, nullptr);
      }
      const auto& other = committed_xs[p.stab == Stab::Upper ? 0 : 1];
      auto it = std::lower_bound(
          other.begin(), other.end(),
          std::make_pair(p.x - Rat(1), std::numeric_limits<int>::min()));
      for (; it != other.end() && it->first <= p.x + Rat(1); ++it)
        separate(p, it->second, it->first, sq[it->second].stab,
                 &sq[it->second].y);
    }
    return ys;
  }

  // Pins every stage variable to an endpoint of its propagated interval:
  // the backbone square leans toward the other stab line only when a bridge
  // or a cross-stab agent needs the contact, agents and anchors retreat to
  // their line's far side.
  bool fix_and_commit(int pos, const StageCandidate& c,
                      std::vector<PendSq>& sqs, YSolver& ys) {
    std::vector<Rat> lo, hi;
    if (!ys.intervals(lo, hi)) return false;

    bool bridge_ahead = pos + 1 < k() && sig[pos + 1] != sig[pos];
    bool cross_agent = false;
    for (const AgentLite& ap : c.agents)
      if (ap.role.stab != sig[pos]) cross_agent = true;

    int nvars = ys.nv;
    for (int v = 0; v < nvars; ++v) {
      Stab vs = Stab::Lower;
      for (const PendSq& q : sqs)
        if (q.yvar == v) vs = q.stab;
      bool toward;
      if (v == 0)
        toward = bridge_ahead || cross_agent;
      else
        toward = false;
      Rat val;
      if (vs == Stab::Lower)
        val = toward ? hi[v] : lo[v];
      else
        val = toward ? lo[v] : hi[v];
      ys.le(v, -1, val);
      ys.le(-1, v, -val);
      if (!ys.intervals(lo, hi)) return false;
    }
    for (PendSq& q : sqs) {
      if (q.yvar >= 0) q.y = lo[q.yvar];
      sq[q.v] = {q.x, q.y, q.stab};
      placed[q.v] = 1;
    }

    // corridor bookkeeping for the advisory budget labels
    for (int s = 0; s < 2; ++s) {
      RightTailRecord& rec = pending[s];
      if (!rec.active) continue;
      Stab st = s ? Stab::Upper : Stab::Lower;
      for (const PendSq& q : sqs)
        if (q.stab == st && q.x > rec.leaf_x) rec.active = false;
    }
    for (const AgentLite& ap : c.agents) {
      for (const TailLite& tp : ap.tails) {
        if (!tp.dir_right || tp.q == 0) continue;
        RightTailRecord& rec = pending[tp.stab == Stab::Upper ? 1 : 0];
        if (rec.active && rec.leaf_x >= tp.leaf_x) continue;
        rec = {true, pos, ap.role.right, (tp.q + 2) / 2, tp.leaf_x};
      }
    }
    return true;
  }

  std::optional<StageFailInfo> deepest;
  long long budget = 0;
  long long gen_cap = 300;  // per-stage candidate list bound
  // a failed stage whose exploration was cut short anywhere makes the whole
  // rejection non-exhaustive, wherever the deepest failure sits
  bool truncated_run = false;

  void merge_fail(int pos, int tried, unsigned labels) {
    if (deepest && deepest->stage > pos + 1) return;
    if (!deepest || deepest->stage < pos + 1) {
      deepest = StageFailInfo{pos + 1, tried, labels};
      return;
    }
    deepest->tried = std::max(deepest->tried, tried);
    deepest->labels |= labels;
  }

  // Depth-first over stages: a committed stage placement can starve a later
  // stage of room, so on failure the previous stage moves to its next
  // candidate. The budget bounds total candidate evaluations.
  bool dfs(int pos) {
    if (pos == k()) return true;
    refresh_committed();
    std::vector<int> ags = agents_by_pos[pos];
    std::vector<Role> avail = available_roles(pos);
    if (ags.size() > avail.size()) {
      merge_fail(pos, 0, kLabelRoleShortage);
      return false;
    }

    std::vector<StageCandidate> cands;
    unsigned labels = 0;
    long long seq = 0;
    int tried = 0;

    // every injective assignment of agents to available roles, in z order;
    // agents with identical tail profiles are interchangeable, so force
    // their role indexes to increase and keep one representative
    std::vector<std::pair<int, int>> prof;
    for (int g : ags)
      prof.push_back({(int)tails.at(g).long_tail.size(),
                      (int)tails.at(g).short_tail.size()});
    std::vector<int> pick(ags.size());
    std::vector<char> used(avail.size(), 0);
    auto assign = [&](auto&& self, size_t at) -> void {
      if (at == ags.size()) {
        ++tried;
        std::vector<Role> roles;
        for (size_t i = 0; i < ags.size(); ++i) roles.push_back(avail[pick[i]]);
        std::vector<PendSq> pend;
        pend.reserve(n + 1);
        pend.push_back({A[pos], backbone_x(pos), sig[pos], 0, Rat()});
        std::vector<AgentPlan> plans;
        build_candidates(pos, ags, roles, 0, pend, plans, seq, cands, labels);
        return;
      }
      for (size_t r = 0; r < avail.size(); ++r) {
        if (used[r]) continue;
        bool canon = true;
        for (size_t i = 0; i < at; ++i)
          if (prof[i] == prof[at] && pick[i] > (int)r) canon = false;
        if (!canon) continue;
        used[r] = 1;
        pick[at] = (int)r;
        self(self, at + 1);
        used[r] = 0;
      }
    };
    assign(assign, 0);
    bool truncated = (long long)cands.size() >= gen_cap;

    std::sort(cands.begin(), cands.end(),
              [](const StageCandidate& a, const StageCandidate& b) {
                if (a.max_x != b.max_x) return a.max_x < b.max_x;
                if (a.upper_cnt != b.upper_cnt) return a.upper_cnt < b.upper_cnt;
                return a.seq < b.seq;
              });
    bool budget_hit = false;
    for (StageCandidate& c : cands) {
      if (budget <= 0) {
        budget_hit = true;
        break;
      }
      --budget;
      std::vector<PendSq> sqs = materialize(pos, c);
      YSolver ys = assemble_y_system(pos, c, sqs);
      if (!ys.feasible()) {
        labels |= kLabelYInfeasible;
        continue;
      }
      RightTailRecord save0 = pending[0], save1 = pending[1];
      if (!fix_and_commit(pos, c, sqs, ys)) {
        labels |= kLabelYInfeasible;
        continue;
      }
      if (dfs(pos + 1)) return true;
      for (const PendSq& q : sqs) placed[q.v] = 0;
      pending[0] = save0;
      pending[1] = save1;
    }
    if (budget_hit || truncated) {
      labels |= kLabelSearchBudget;
      truncated_run = true;
    }
    if (!labels) labels = kLabelXCollision;
    merge_fail(pos, tried, labels);
    return false;
  }

  std::optional<StageFailInfo> run(long long eval_budget, long long cap) {
    deepest.reset();
    truncated_run = false;
    budget = eval_budget;
    gen_cap = cap;
    if (dfs(0)) return std::nullopt;
    if (!deepest) return StageFailInfo{1, 0, kLabelXCollision};
    if (truncated_run) deepest->labels |= kLabelSearchBudget;
    return deepest;
  }

  Representation representation() const {
    Representation r;
    r.epsilon = eps;
    r.squares = sq;
    return r;
  }
};

Certificate stage_certificate(const StageFailInfo& f) {
  Certificate c;
  c.kind = Certificate::Kind::StageFailure;
  c.stage = f.stage;
  c.tried = f.tried;
  c.violations = label_names(f.labels);
  return c;
}

void internal_verify(const Representation& rep, const Tree& t) {
  VerifyReport vr = verify(rep, t);
  if (!vr.pass)
    throw std::logic_error("recognize: produced representation failed "
                           "verification: " +
                           (vr.issues.empty() ? std::string("?")
                                              : vr.issues.front().str()));
}

}  // namespace

Representation layout_single_branch(const Tree& t, const Rat& epsilon) {
  int n = t.n();
  Representation r;
  r.epsilon = epsilon;
  r.squares.resize(n);
  std::vector<int> br = branch_vertices(t);
  if (br.size() > 1)
    throw std::invalid_argument("layout_single_branch: several branch vertices");

  if (br.empty()) {
    // a path: walk from the smallest-id endpoint along the lower stab
    int start = 0;
    for (int v = 0; v < n; ++v)
      if (t.adj(v).size() <= 1) {
        start = v;
        break;
      }
    int prev = -1, cur = start;
    for (long long i = 0; i < n; ++i) {
      r.squares[cur] = {Rat(i), Rat(0), Stab::Lower};
      int nxt = -1;
      for (int w : t.adj(cur))
        if (w != prev) nxt = w;
      prev = cur;
      cur = nxt;
    }
    return r;
  }

  int c = br[0];
  if ((int)t.adj(c).size() > 4)
    throw std::invalid_argument("layout_single_branch: degree above four");
  // pendant legs, longest first
  std::vector<std::vector<int>> legs;
  for (int w : t.adj(c)) {
    std::vector<int> leg{w};
    int prev = c, cur = w;
    while ((int)t.adj(cur).size() == 2) {
      int nxt = t.adj(cur)[0] == prev ? t.adj(cur)[1] : t.adj(cur)[0];
      prev = cur;
      cur = nxt;
      leg.push_back(cur);
    }
    legs.push_back(std::move(leg));
  }
  std::sort(legs.begin(), legs.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a.front() < b.front();
  });

  r.squares[c] = {Rat(0), Rat(1), Stab::Lower};
  for (size_t li = 0; li < legs.size(); ++li) {
    const std::vector<int>& leg = legs[li];
    bool right = li == 0 || li == 2;
    bool upper = li >= 2;
    Stab s = upper ? Stab::Upper : Stab::Lower;
    Rat agent_x = upper ? (right ? Rat(5, 8) : Rat(-5, 8))
                        : (right ? Rat(1) : Rat(-1));
    Rat agent_y = upper ? Rat(1) + epsilon : Rat(0);
    r.squares[leg[0]] = {agent_x, agent_y, s};
    int q = (int)leg.size() - 1;
    if (q > 0) {
      std::vector<Rat> off = shrink_offsets(q);
      Rat anchor = right ? agent_x + Rat(1) : agent_x - Rat(1);
      Rat body_y = upper ? Rat(2) + epsilon : Rat(0);
      for (int j = 0; j < q; ++j) {
        Rat x = right ? anchor + off[j] : anchor - off[j];
        r.squares[leg[j + 1]] = {x, body_y, s};
      }
    }
  }
  return r;
}

RecognizeResult recognize(const Tree& t, const RecognizerOptions& opt) {
  RecognizeResult out;
  int n = t.n();

  for (int v = 0; v < n; ++v) {
    if ((int)t.adj(v).size() > 4) {
      Certificate c;
      c.kind = Certificate::Kind::DegreeExceeded;
      c.vertex = v;
      out.certificate = c;
      return out;
    }
  }

  std::vector<int> br = branch_vertices(t);
  if (br.size() <= 1) {
    Representation rep = layout_single_branch(t, opt.epsilon);
    internal_verify(rep, t);
    out.accepted = true;
    out.rep = std::move(rep);
    return out;
  }

  RedEdgeSet reds = red_edges(t);
  RedPathOutcome rp = red_path_or_fail(t, reds);
  if (rp.kind == RedPathOutcome::Kind::NotAPath) {
    Certificate c;
    c.kind = Certificate::Kind::RedSubgraphNotPath;
    c.vertex = rp.witness;
    out.certificate = c;
    return out;
  }
  if (rp.kind == RedPathOutcome::Kind::NoRedEdges) {
    bool have_special = false;
    for (int v = 0; v < n && !have_special; ++v) {
      bool all = true;
      for (int b : br)
        if (b != v && !t.g.has_edge(v, b)) all = false;
      have_special = all;
    }
    if (!have_special) {
      Certificate c;
      c.kind = Certificate::Kind::NoSpecialVertex;
      c.vertex = br[0];
      out.certificate = c;
      return out;
    }
  }

  ExtendedRedPath a = extended_red_path(t, rp);
  DecomposeOutcome dec = decompose(t, a);
  if (!dec.decomposition) {
    Certificate c;
    c.kind = Certificate::Kind::MalformedPeriphery;
    c.vertex = dec.bad_vertex;
    out.certificate = c;
    return out;
  }
  const Decomposition& d = *dec.decomposition;

  // Iterative deepening: almost every tree is decided within the first
  // allowance, and a failure that never hit a cap is already exhaustive, so
  // only rare deep backtrackers pay for the ten-fold wider retry. Both
  // passes are deterministic.
  constexpr long long kEvalBudget = 2000, kGenCap = 300;
  auto attempt = [](Engine& e) {
    std::optional<StageFailInfo> f = e.run(kEvalBudget, kGenCap);
    if (f && (f->labels & kLabelSearchBudget))
      f = e.run(10 * kEvalBudget, 10 * kGenCap);
    return f;
  };

  Engine fwd(t, opt.epsilon, a.vertices, d.agents_by_pos, d.tails);
  std::optional<StageFailInfo> f1 = attempt(fwd);
  if (!f1) {
    Representation rep = fwd.representation();
    internal_verify(rep, t);
    out.accepted = true;
    out.rep = std::move(rep);
    return out;
  }

  if (a.vertices.size() > 1) {
    std::vector<int> rev_a(a.vertices.rbegin(), a.vertices.rend());
    std::vector<std::vector<int>> rev_ag(d.agents_by_pos.rbegin(),
                                         d.agents_by_pos.rend());
    Engine bwd(t, opt.epsilon, rev_a, rev_ag, d.tails);
    std::optional<StageFailInfo> f2 = attempt(bwd);
    if (!f2) {
      Representation rep = bwd.representation();
      internal_verify(rep, t);
      out.accepted = true;
      out.rep = std::move(rep);
      return out;
    }
    out.certificate =
        stage_certificate(f2->stage > f1->stage ? *f2 : *f1);
    return out;
  }

  out.certificate = stage_certificate(*f1);
  return out;
}

}  // namespace suig2
