#pragma once

#include <optional>
#include <string>
#include <vector>

#include "suig2/geometry.hpp"
#include "suig2/tree.hpp"

namespace suig2 {

// Machine-readable witness for a rejection.
//  DegreeExceeded       vertex of degree >= 5
//  RedSubgraphNotPath   vertex with >= 3 red edges (or a disconnection witness)
//  NoSpecialVertex      defensive: no red edges, >= 2 branch vertices, yet no
//                       vertex whose closed neighborhood covers all of them
//  MalformedPeriphery   defensive: a branch vertex stranded away from the
//                       backbone, or an agent with more than two tails
//  StageFailure         every candidate placement at one backbone position
//                       failed; `tried` counts role assignments attempted,
//                       `violations` lists the distinct failure conditions
struct Certificate {
  enum class Kind {
    DegreeExceeded,
    RedSubgraphNotPath,
    NoSpecialVertex,
    MalformedPeriphery,
    StageFailure,
  };
  Kind kind = Kind::StageFailure;
  int vertex = -1;  // witness vertex for all kinds except StageFailure
  int stage = 0;    // StageFailure: position in the backbone, 1-based
  int tried = 0;    // StageFailure: role assignments attempted (<= 48)
  std::vector<std::string> violations;  // StageFailure: sorted, distinct
  std::string str() const;
};

struct RecognizeResult {
  bool accepted = false;
  std::optional<Representation> rep;       // set on accept, already verified
  std::optional<Certificate> certificate;  // set on reject
};

struct RecognizerOptions {
  Rat epsilon{1, 2};
};

// Decides whether the tree is the intersection graph of closed unit squares
// anchored to two stab lines, producing either a verified representation or
// a certificate. Runs the staged placement for both orientations of the
// backbone and accepts when either succeeds.
RecognizeResult recognize(const Tree& t, const RecognizerOptions& opt = {});

// Direct layout for trees with at most one branch vertex (paths and spiders
// with at most four legs). Center square at x = 0 for spiders; paths run
// along the lower stab with unit steps.
Representation layout_single_branch(const Tree& t, const Rat& epsilon = Rat(1, 2));

// Stab relation of two consecutive backbone vertices of the given degrees:
// both degree 4 forces opposite stabs, everything else stays on one line.
enum class StabRelation { Same, Different };
StabRelation stab_of_a2(int d1, int d2);

// Corridor capacity test between two branch backbone vertices m positions
// apart, for a right tail (independence number alpha_v, agent included) met
// by a left tail (alpha_w) in the same stab. The case id encodes which side
// of its backbone vertex each agent is on:
//   1: first right, second left   alpha_v + alpha_w     <= m
//   2: first left,  second left   alpha_v + alpha_w - 1 <= m
//   3: first left,  second right  alpha_v + alpha_w - 2 <= m
//   4: first right, second right  alpha_v + alpha_w - 1 <= m
bool tail_budget(int case_id, int m, int alpha_v, int alpha_w);

}  // namespace suig2
