#include "suig2/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include "suig2/geometry.hpp"
#include "suig2/json_io.hpp"
#include "suig2/oracle.hpp"
#include "suig2/random_tree.hpp"
#include "suig2/recognizer.hpp"
#include "suig2/red_structure.hpp"
#include "suig2/svg.hpp"
#include "suig2/tree.hpp"

namespace suig2 {

namespace {

constexpr int kExitAccept = 0;
constexpr int kExitReject = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

// "p/q" (or a bare integer, which can never satisfy 0 < eps < 1).
Rat parse_epsilon(const std::string& text) {
  long long p = 0, q = 1;
  size_t slash = text.find('/');
  try {
    size_t used = 0;
    p = std::stoll(text.substr(0, slash), &used);
    if (used != (slash == std::string::npos ? text.size() : slash))
      throw UsageError("");
    if (slash != std::string::npos) {
      q = std::stoll(text.substr(slash + 1), &used);
      if (used != text.size() - slash - 1) throw UsageError("");
    }
  } catch (const std::exception&) {
    throw UsageError("--epsilon expects a rational p/q, got \"" + text + "\"");
  }
  if (q == 0) throw UsageError("--epsilon denominator must be nonzero");
  Rat eps(p, q);
  if (!(Rat(0) < eps && eps < Rat(1)))
    throw UsageError("--epsilon must lie strictly between 0 and 1, got " +
                     text);
  return eps;
}

std::string rat_str(const Rat& r) {
  std::string s = std::to_string(r.num());
  if (r.den() != 1) s += "/" + std::to_string(r.den());
  return s;
}

// Mirrors the recognizer's staging far enough to print the backbone split;
// informational only, the decision is still made by recognize().
void dump_decomposition(const Tree& t, std::ostream& err) {
  if (branch_vertices(t).size() <= 1) {
    err << "{\"mode\":\"single-branch\"}\n";
    return;
  }
  RedEdgeSet reds = red_edges(t);
  RedPathOutcome rp = red_path_or_fail(t, reds);
  if (rp.kind == RedPathOutcome::Kind::NotAPath) {
    err << "{\"mode\":\"red-subgraph-not-path\",\"vertex\":" << rp.witness
        << "}\n";
    return;
  }
  if (rp.kind == RedPathOutcome::Kind::NoRedEdges) {
    bool have_special = false;
    for (int v = 0; v < t.n() && !have_special; ++v) {
      bool all = true;
      for (int b : branch_vertices(t))
        if (b != v && !t.g.has_edge(v, b)) all = false;
      have_special = all;
    }
    if (!have_special) {
      err << "{\"mode\":\"no-special-vertex\"}\n";
      return;
    }
  }
  ExtendedRedPath a = extended_red_path(t, rp);
  DecomposeOutcome dec = decompose(t, a);
  if (!dec.decomposition) {
    err << "{\"mode\":\"malformed-periphery\",\"vertex\":" << dec.bad_vertex
        << "}\n";
    return;
  }
  err << decomposition_to_json(*dec.decomposition) << "\n";
}

struct RecognizeArgs {
  std::string input;
  std::string svg_path;
  std::string epsilon = "1/2";
  bool json = false;
  bool explain = false;
};

int cmd_recognize(const RecognizeArgs& a, std::ostream& out,
                  std::ostream& err) {
  Tree t = parse_tree(read_file(a.input));
  RecognizerOptions opt;
  opt.epsilon = parse_epsilon(a.epsilon);
  if (a.explain) dump_decomposition(t, err);
  RecognizeResult res = recognize(t, opt);
  if (res.accepted) {
    if (a.json) {
      out << emit_json(*res.rep);
    } else {
      out << "ACCEPT n=" << t.n() << " epsilon=" << rat_str(opt.epsilon)
          << "\n";
      for (int v = 0; v < t.n(); ++v) {
        const UnitSquare& s = res.rep->squares[v];
        out << v << " " << rat_str(s.x) << " " << rat_str(s.y) << " "
            << stab_name(s.stab) << "\n";
      }
    }
    if (!a.svg_path.empty()) write_file(a.svg_path, emit_svg(*res.rep));
    return kExitAccept;
  }
  out << "REJECT " << res.certificate->str() << "\n";
  return kExitReject;
}

struct VerifyArgs {
  std::string graph_path;
  std::string rep_path;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream&) {
  Graph g = parse_graph(read_file(a.graph_path));
  Representation rep = parse_representation_json(read_file(a.rep_path));
  VerifyReport report = verify_graph(rep, g);
  if (report.pass) {
    out << "PASS\n";
    return kExitAccept;
  }
  for (const Issue& issue : report.issues) out << issue.str() << "\n";
  return kExitReject;
}

struct OracleArgs {
  std::string input;
  int max_n = 9;
  long long time_budget_ms = -1;  // negative = unbounded
};

int cmd_oracle(const OracleArgs& a, std::ostream& out, std::ostream&) {
  Tree t = parse_tree(read_file(a.input));
  SearchConfig cfg;
  cfg.max_n = a.max_n;
  if (a.time_budget_ms >= 0)
    cfg.time_budget = std::chrono::milliseconds(a.time_budget_ms);
  OracleResult res = brute_force_2suig(t, cfg);
  switch (res.status) {
    case OracleResult::Status::Accept:
      out << "ACCEPT\n";
      return kExitAccept;
    case OracleResult::Status::Reject:
      out << "REJECT\n";
      return kExitReject;
    case OracleResult::Status::Unknown:
      break;
  }
  out << "UNKNOWN\n";
  return kExitBudget;
}

struct CrossCheckArgs {
  int max_n = 6;
  unsigned long long seed = 1;
  std::vector<long long> random_spec;  // {count, size} when present
};

int cmd_crosscheck(const CrossCheckArgs& a, std::ostream& out, std::ostream&) {
  if (!a.random_spec.empty()) {
    long long count = a.random_spec[0], size = a.random_spec[1];
    if (count < 0 || size < 1)
      throw UsageError("--random expects COUNT >= 0 and SIZE >= 1");
    out << "fuzz seed=" << a.seed << " count=" << count << " size=" << size
        << "\n";
    std::mt19937_64 master(a.seed);
    int bad = 0;
    for (long long i = 0; i < count; ++i) {
      int n = 1 + (int)uniform_below(master, (uint64_t)size);
      uint64_t tree_seed = master();
      Tree t = random_tree(n, tree_seed);
      RecognizeResult res = recognize(t);
      bool sound = true;
      if (res.accepted) sound = verify(*res.rep, t).pass;
      out << i << " n=" << n << " seed=" << tree_seed << " "
          << (res.accepted ? "accept" : "reject");
      if (!sound) {
        out << " UNSOUND";
        ++bad;
      }
      out << "\n";
    }
    out << (bad == 0 ? "all sound\n" : "unsound accepts: " + std::to_string(bad) + "\n");
    return bad == 0 ? kExitAccept : kExitReject;
  }
  SearchConfig cfg;
  cfg.max_n = a.max_n;
  CrossCheckReport report = cross_check(cfg);
  out << cross_check_json_lines(report);
  out << "checked=" << report.rows.size()
      << " disagreements=" << report.disagreements.size() << "\n";
  return report.pass() ? kExitAccept : kExitReject;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"2-stab unit square intersection representations of trees"};
  app.require_subcommand(1);

  RecognizeArgs rec;
  CLI::App* c_rec = app.add_subcommand(
      "recognize", "decide a tree, print a representation or a certificate");
  c_rec->add_option("input", rec.input, "edge-list file")->required();
  c_rec->add_flag("--json", rec.json, "print the representation as JSON");
  c_rec->add_option("--svg", rec.svg_path, "also write an SVG drawing here");
  c_rec->add_flag("--explain", rec.explain,
                  "dump the backbone decomposition to stderr");
  c_rec->add_option("--epsilon", rec.epsilon,
                    "upper stab line offset, rational p/q in (0,1)");

  VerifyArgs ver;
  CLI::App* c_ver = app.add_subcommand(
      "verify", "check a representation JSON against a graph edge list");
  c_ver->add_option("graph", ver.graph_path, "edge-list file")->required();
  c_ver->add_option("representation", ver.rep_path, "representation JSON file")
      ->required();

  OracleArgs ora;
  CLI::App* c_ora = app.add_subcommand(
      "oracle", "exhaustive search decision, independent of the recognizer");
  c_ora->add_option("input", ora.input, "edge-list file")->required();
  c_ora->add_option("--max-n", ora.max_n, "vertex cap (hard limit 12)");
  c_ora->add_option("--time-budget", ora.time_budget_ms,
                    "milliseconds before giving up with UNKNOWN");

  CrossCheckArgs chk;
  CLI::App* c_chk = app.add_subcommand(
      "crosscheck", "recognizer vs oracle on all trees, or random fuzzing");
  c_chk->add_option("--max-n", chk.max_n, "exhaustive sweep cap");
  c_chk->add_option("--seed", chk.seed, "fuzzing seed");
  c_chk->add_option("--random", chk.random_spec,
                    "fuzz COUNT random trees of at most SIZE vertices")
      ->expected(2);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitAccept;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (c_rec->parsed()) return cmd_recognize(rec, out, err);
    if (c_ver->parsed()) return cmd_verify(ver, out, err);
    if (c_ora->parsed()) return cmd_oracle(ora, out, err);
    return cmd_crosscheck(chk, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const TreeError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const JsonError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const TooLargeError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace suig2
