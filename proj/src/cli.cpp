#include "pegswap/cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "pegswap/audit.hpp"
#include "pegswap/document.hpp"
#include "pegswap/oracle.hpp"
#include "pegswap/solver.hpp"

namespace pegswap::cli {

namespace {

// Largest N the table subcommand hands to the oracle unless told otherwise.
constexpr int kTableOracleMax = 10;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require_n(int n) {
  if (n < 1) throw UsageError("N must be at least 1");
}

// --moves takes either a script or the path of a file holding one.
std::string load_moves(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream in(arg);
    if (!in) throw UsageError("cannot read " + arg);
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
  }
  return arg;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

struct Options {
  int n = 0;
  std::string form = "direct";
  std::string pairing = "strict";
  bool compact = false;
  bool verify = false;
  std::string moves;
  bool trace = false;
  bool path = false;
  bool document = false;
  bool bidirectional = false;
  int max_n = SearchConfig{}.max_n;
  int workers = 1;
  int oracle_max = kTableOracleMax;
  int repeat = 1;
};

int cmd_solve(const Options& o, std::ostream& out, std::ostream& err) {
  require_n(o.n);
  const SolutionForm form = o.form == "symmetric" ? SolutionForm::Symmetric : SolutionForm::Direct;
  const MoveScript script = solution_sequence(o.n, form);
  out << format_script(script, o.compact) << "\n";
  if (!o.verify) return kExitOk;
  const SolutionTrace trace = replay(o.n, script);
  const MoveCounts want = expected_counts(o.n);
  const bool ok = trace.solved && static_cast<long long>(trace.counts.total) == want.total &&
                  static_cast<long long>(trace.counts.jumps) == want.jumps &&
                  static_cast<long long>(trace.counts.steps) == want.steps;
  if (!ok) {
    err << "verification failed: final=" << render_board(trace.final_board())
        << " moves=" << trace.counts.total << " expected=" << want.total << "\n";
    return kExitVerify;
  }
  out << "verified total=" << trace.counts.total << " steps=" << trace.counts.steps
      << " jumps=" << trace.counts.jumps << " final=" << render_board(trace.final_board()) << "\n";
  return kExitOk;
}

int cmd_replay(const Options& o, std::ostream& out, std::ostream& err) {
  require_n(o.n);
  const MoveScript script = parse_script(load_moves(o.moves));
  SolutionTrace trace;
  try {
    trace = replay(o.n, script);
  } catch (const ReplayError& e) {
    err << e.what() << "\n";
    return kExitVerify;
  }
  if (o.trace) {
    out << render_document(trace_document(trace));
  } else {
    out << "final=" << render_board(trace.final_board()) << " solved=" << yes_no(trace.solved)
        << " moves=" << trace.counts.total << " steps=" << trace.counts.steps
        << " jumps=" << trace.counts.jumps << " final_weight=" << trace.final_weight() << "\n";
  }
  if (!trace.solved) {
    err << "script does not solve the puzzle (final " << render_board(trace.final_board())
        << ")\n";
    return kExitVerify;
  }
  return kExitOk;
}

int cmd_oracle(const Options& o, std::ostream& out, std::ostream& err) {
  require_n(o.n);
  SearchConfig config;
  config.max_n = o.max_n;
  config.workers = std::max(1, o.workers);
  SearchResult r;
  try {
    r = bfs_min_moves(o.n, o.path, config);
  } catch (const FeasibilityError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }
  const long long expected = expected_counts(o.n).total;
  const bool match = r.min_moves && *r.min_moves == expected;
  if (o.document) {
    out << render_document(search_document(r));
  } else {
    out << "min_moves=" << (r.min_moves ? std::to_string(*r.min_moves) : "unreachable")
        << " expected=" << expected << " " << (match ? "OK" : "MISMATCH") << "\n";
    out << "reachable_states=" << r.reachable_states << " peak_frontier=" << r.peak_frontier
        << " max_depth=" << r.max_depth << "\n";
    if (o.path) {
      Board b = initial_board(o.n);
      out << "0 - " << render_board(b) << "\n";
      for (std::size_t i = 0; i < r.witness.size(); ++i) {
        b = apply_move(b, r.witness[i]);
        out << i + 1 << " " << classify(r.witness[i]) << " " << r.witness[i].from << "->"
            << r.witness[i].to << " " << render_board(b) << "\n";
      }
    }
  }
  if (o.bidirectional) {
    const auto bi = bidirectional_min_moves(o.n, config);
    if (bi != r.min_moves) {
      err << "bidirectional search disagrees\n";
      return kExitVerify;
    }
  }
  if (!match) {
    err << "oracle minimum differs from N^2+2N\n";
    return kExitVerify;
  }
  return kExitOk;
}

int cmd_audit(const Options& o, std::ostream& out, std::ostream& err) {
  require_n(o.n);
  const MoveScript script = parse_script(load_moves(o.moves));
  SolutionTrace trace;
  try {
    trace = replay(o.n, script);
  } catch (const ReplayError& e) {
    err << e.what() << "\n";
    return kExitVerify;
  }
  const PairingMode mode = o.pairing == "merged" ? PairingMode::Merged : PairingMode::Strict;
  const AuditReport rep = audit_trace(trace, mode);
  if (o.document) {
    out << render_document(audit_document(trace, rep));
  } else {
    out << "verdict=" << (rep.pass ? "pass" : "fail") << "\n"
        << "n=" << rep.n << " pairing=" << pairing_name(rep.pairing)
        << " moves=" << rep.move_count << " solved=" << yes_no(rep.solved)
        << "\n"
        << "first_crosses=" << rep.crossings.first_cross_count
        << " final_weight=" << rep.final_weight << "\n"
        << "crossing_parity=" << status_name(rep.parity)
        << " alternation=" << (rep.alternation.pass ? "pass" : "fail")
        << " hole_side=" << (rep.hole_side.pass ? "pass" : "fail")
        << " partition=" << status_name(rep.partition) << "\n"
        << "groups:";
    for (GroupKind k : {GroupKind::FirstCross, GroupKind::RepeatCrossPair,
                        GroupKind::ProductiveStep, GroupKind::SameColorJumpPair,
                        GroupKind::Residual, GroupKind::MergedPairing}) {
      out << " " << group_kind_name(k) << "=" << rep.grouping.count(k);
    }
    out << "\n"
        << "other_moves=" << rep.bound.other_moves << " other_gain=" << rep.bound.other_gain
        << " implied_bound=" << rep.bound.implied_bound << " move_count=" << rep.move_count
        << "\n";
    for (const std::string& f : rep.failures) out << "failure: " << f << "\n";
    for (const std::string& note : rep.notes) out << "note: " << note << "\n";
  }
  return rep.pass ? kExitOk : kExitVerify;
}

int cmd_table(const Options& o, std::ostream& out, std::ostream&) {
  require_n(o.n);
  SearchConfig config;
  config.max_n = std::max(o.oracle_max, 1);
  config.workers = std::max(1, o.workers);
  bool all_ok = true;
  out << "N\tgenerator\toracle\tmatch\n";
  for (int n = 1; n <= o.n; ++n) {
    const MoveScript script = solution_sequence(n);
    const SolutionTrace trace = replay(n, script);
    const long long expected = expected_counts(n).total;
    bool ok = trace.solved && static_cast<long long>(script.size()) == expected;
    std::string oracle = "-";
    if (n <= o.oracle_max) {
      const SearchResult r = bfs_min_moves(n, false, config);
      oracle = r.min_moves ? std::to_string(*r.min_moves) : "unreachable";
      ok = ok && r.min_moves && *r.min_moves == static_cast<int>(script.size());
    }
    all_ok = all_ok && ok;
    out << n << "\t" << script.size() << "\t" << oracle << "\t" << (ok ? "OK" : "FAIL") << "\n";
  }
  return all_ok ? kExitOk : kExitVerify;
}

int cmd_bench(const Options& o, std::ostream& out, std::ostream& err) {
  require_n(o.n);
  if (o.repeat < 1) throw UsageError("--repeat must be at least 1");
  SearchConfig config;
  config.max_n = o.max_n;
  config.workers = std::max(1, o.workers);
  std::optional<SearchResult> first;
  for (int run = 1; run <= o.repeat; ++run) {
    const auto t0 = std::chrono::steady_clock::now();
    SearchResult r;
    try {
      r = bfs_min_moves(o.n, false, config);
    } catch (const FeasibilityError& e) {
      err << e.what() << "\n";
      return kExitUsage;
    }
    const std::chrono::duration<double, std::milli> ms = std::chrono::steady_clock::now() - t0;
    out << "run=" << run << " n=" << o.n << " workers=" << config.workers << " time_ms="
        << std::fixed << std::setprecision(1) << ms.count() << " states=" << r.reachable_states
        << " peak_frontier=" << r.peak_frontier
        << " min_moves=" << (r.min_moves ? std::to_string(*r.min_moves) : "unreachable") << "\n";
    if (!first) {
      first = r;
    } else if (r.reachable_states != first->reachable_states || r.min_moves != first->min_moves ||
               r.peak_frontier != first->peak_frontier) {
      err << "nondeterministic search result\n";
      return kExitVerify;
    }
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Solve, search and audit the red/blue peg-swap puzzle"};
  app.name(args.empty() ? "pegswap" : args.front());
  app.require_subcommand(1);
  Options o;

  auto* solve = app.add_subcommand("solve", "Print the N^2+2N move solution");
  solve->add_option("N", o.n, "Pegs of each color")->required();
  solve->add_option("--form", o.form, "direct or symmetric bracketing")
      ->check(CLI::IsMember({"direct", "symmetric"}));
  solve->add_flag("--compact", o.compact, "Run-length encode repeated tokens");
  solve->add_flag("--verify", o.verify, "Replay the script and check the move counts");

  auto* rep = app.add_subcommand("replay", "Replay a move script from the starting position");
  rep->add_option("N", o.n, "Pegs of each color")->required();
  rep->add_option("--moves", o.moves, "Script text or a file containing it")->required();
  rep->add_flag("--trace", o.trace, "Emit the full trace document");

  auto* oracle = app.add_subcommand("oracle", "Exhaustive shortest-path search");
  oracle->add_option("N", o.n, "Pegs of each color")->required();
  oracle->add_flag("--path", o.path, "Print a shortest witness path");
  oracle->add_option("--max-n", o.max_n, "Largest N the search accepts");
  oracle->add_option("--workers", o.workers, "Frontier expansion threads");
  oracle->add_flag("--bidirectional", o.bidirectional, "Cross-check with a two-ended search");
  oracle->add_flag("--document", o.document, "Emit a structured document");

  auto* audit = app.add_subcommand("audit", "Check the lower-bound bookkeeping on a solution");
  audit->add_option("N", o.n, "Pegs of each color")->required();
  audit->add_option("--moves", o.moves, "Script text or a file containing it")->required();
  audit->add_option("--pairing", o.pairing, "strict (default) or merged move pairing")
      ->check(CLI::IsMember({"strict", "merged"}));
  audit->add_flag("--document", o.document, "Emit the trace document with the audit report");

  auto* table = app.add_subcommand("table", "Compare generator length and oracle minimum");
  table->add_option("Nmax", o.n, "Largest N in the table")->required();
  table->add_option("--oracle-max", o.oracle_max, "Largest N searched exhaustively");
  table->add_option("--workers", o.workers, "Frontier expansion threads");

  auto* bench = app.add_subcommand("bench", "Time the exhaustive search");
  bench->add_option("N", o.n, "Pegs of each color")->required();
  bench->add_option("--repeat", o.repeat, "Number of timed runs");
  bench->add_option("--workers", o.workers, "Frontier expansion threads");
  bench->add_option("--max-n", o.max_n, "Largest N the search accepts");

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  if (argv.empty()) argv.push_back("pegswap");
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*solve) return cmd_solve(o, out, err);
    if (*rep) return cmd_replay(o, out, err);
    if (*oracle) return cmd_oracle(o, out, err);
    if (*audit) return cmd_audit(o, out, err);
    if (*table) return cmd_table(o, out, err);
    if (*bench) return cmd_bench(o, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ScriptParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const FeasibilityError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PuzzleError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace pegswap::cli
