#include <json.hpp>

#include "suig2/oracle.hpp"
#include "suig2/recognizer.hpp"
#include "suig2/tree_enum.hpp"

namespace suig2 {

CrossCheckReport cross_check(const SearchConfig& cfg) {
  CrossCheckReport report;
  RecognizerOptions ropt;
  ropt.epsilon = cfg.epsilon;
  for (int n = 1; n <= cfg.max_n; ++n) {
    for (Tree& t : enumerate_trees(n)) {
      CrossCheckRow row;
      row.recognizer_accept = recognize(t, ropt).accepted;
      row.oracle = brute_force_2suig(t, cfg).status;
      row.agree = row.oracle != OracleResult::Status::Unknown &&
                  (row.oracle == OracleResult::Status::Accept) == row.recognizer_accept;
      row.tree = std::move(t);
      if (!row.agree) report.disagreements.push_back((int)report.rows.size());
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

std::string cross_check_json_lines(const CrossCheckReport& report) {
  using ordered_json = nlohmann::ordered_json;
  std::string out;
  for (const CrossCheckRow& row : report.rows) {
    ordered_json j;
    j["n"] = row.tree.n();
    ordered_json edges = ordered_json::array();
    for (auto [u, v] : row.tree.edges()) edges.push_back(ordered_json::array({u, v}));
    j["tree"] = std::move(edges);
    j["recognizer"] = row.recognizer_accept ? "accept" : "reject";
    j["oracle"] = row.oracle == OracleResult::Status::Accept   ? "accept"
                  : row.oracle == OracleResult::Status::Reject ? "reject"
                                                               : "unknown";
    j["agree"] = row.agree;
    out += j.dump();
    out += '\n';
  }
  return out;
}

}  // namespace suig2
