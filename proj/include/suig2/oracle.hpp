#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "suig2/geometry.hpp"
#include "suig2/tree.hpp"

namespace suig2 {

struct SearchConfig {
  int max_n = 9;  // hard cap 12: the search space is out of contract beyond
  Rat epsilon{1, 2};
  std::optional<std::chrono::milliseconds> time_budget;
};

class TooLargeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OracleResult {
  enum class Status { Accept, Reject, Unknown };
  Status status = Status::Unknown;
  std::optional<Representation> rep;  // present on Accept, already verified
};

// Exhaustive decision of 2SUIG feasibility straight from the definition:
// enumerate stab assignments (vertex 0 lower, up/down symmetry), then left
// to right x-orders with pruning, then x-or-y separation choices for cross
// stab non-edges, each leaf decided by exact difference-constraint systems.
// Unknown only when the time budget runs out; Accept only after verify.
OracleResult brute_force_2suig(const Graph& g, const SearchConfig& cfg = {});

inline OracleResult brute_force_2suig(const Tree& t, const SearchConfig& cfg = {}) {
  return brute_force_2suig(t.g, cfg);
}

// One compared tree. `agree` is true only when the oracle reached a decision
// and it matches the staged recognizer; Unknown rows never agree.
struct CrossCheckRow {
  Tree tree;
  bool recognizer_accept = false;
  OracleResult::Status oracle = OracleResult::Status::Unknown;
  bool agree = false;
};

struct CrossCheckReport {
  std::vector<CrossCheckRow> rows;   // enumeration order, n = 1..max_n
  std::vector<int> disagreements;    // row indexes with agree == false
  bool pass() const { return disagreements.empty(); }
};

// Runs both deciders on every tree class with n <= cfg.max_n. The recognizer
// uses cfg.epsilon; the oracle gets cfg unchanged (budget included).
CrossCheckReport cross_check(const SearchConfig& cfg = {});

// One compact JSON object per row, newline separated, byte-deterministic:
// {"n":..,"tree":[[u,v],..],"recognizer":"accept","oracle":"reject","agree":false}
std::string cross_check_json_lines(const CrossCheckReport& report);

}  // namespace suig2
