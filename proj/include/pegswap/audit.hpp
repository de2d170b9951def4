#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pegswap/board.hpp"
#include "pegswap/notation.hpp"

namespace pegswap {

// Crossing bookkeeping, per-peg event histories and the grouping of moves
// that bounds the average weight gain, run on one concrete trace. Traces must
// carry peg identities (replay() from initial_board always does).

struct CrossingEvent {
  std::size_t move_index = 0;
  PegId jumper;
  PegId jumped;
  bool jumper_rightward = false;
  // First crossing of this red-blue pair; always false for same-color pairs.
  bool first = false;

  bool red_blue() const { return jumper.color != jumped.color; }
};

struct CrossingLog {
  int n = 0;
  std::vector<CrossingEvent> events;
  // Crossings per red-blue pair, indexed (red - 1) * n + (blue - 1).
  std::vector<int> pair_counts;
  // Crossings per unordered same-color pair (smaller id first).
  std::map<std::pair<PegId, PegId>, int> same_color_counts;
  // Per move index: the move is the first crossing of a red-blue pair.
  std::vector<bool> first_cross;
  std::size_t first_cross_count = 0;

  int pair_count(int red, int blue) const {
    return pair_counts[static_cast<std::size_t>((red - 1) * n + (blue - 1))];
  }
  // Every red-blue pair crossed an odd number of times.
  bool parity_ok() const;
  // Red-blue pairs with an even crossing count, as (red, blue) ordinals.
  std::vector<std::pair<int, int>> even_pairs() const;
};

CrossingLog track_crossings(const SolutionTrace& trace);

// A: jumped over while the jumper heads left.  B: the peg moves left.
// C: jumped over while the jumper heads right. D: the peg moves right.
enum class EventKind : std::uint8_t { A, B, C, D };

char event_char(EventKind k);
// A and B leave the empty hole to the peg's right; C and D to its left.
constexpr bool leftward_class(EventKind k) { return k == EventKind::A || k == EventKind::B; }

struct PegEvent {
  std::size_t move_index = 0;
  EventKind kind = EventKind::A;

  bool operator==(const PegEvent&) const = default;
};

// Every peg of the trace maps to its events in move order; moves the peg does
// not notice leave no entry.
using PegEventLog = std::map<PegId, std::vector<PegEvent>>;

PegEventLog peg_event_log(const SolutionTrace& trace);

struct AlternationVerdict {
  bool pass = true;
  std::optional<PegId> peg;
  // Offending position: an index into the peg's log, or a move index for the
  // hole-side check.
  std::optional<std::size_t> index;
  std::string detail;
};

// {A,B} and {C,D} events must alternate in each log.
AlternationVerdict check_alternation(std::span<const PegEvent> log);
AlternationVerdict check_alternation(const PegEventLog& logs);
// The mechanism behind alternation: after an {A,B} event the hole is right of
// the peg, after {C,D} it is left, and moves the peg does not notice never
// move the hole across it.
AlternationVerdict check_hole_side(const SolutionTrace& trace);

enum class GroupKind {
  FirstCross,
  RepeatCrossPair,
  ProductiveStep,
  SameColorJumpPair,
  Residual,
  // Merged pairing only: a group that absorbed same-color jumps whose
  // partners it already held.
  MergedPairing,
};

// Strict follows the pairing rule as stated and reports a partner that is
// already grouped as a conflict. Merged instead folds the jump into the group
// holding its partner; the per-group gain check still applies.
enum class PairingMode { Strict, Merged };

const char* group_kind_name(GroupKind k);

struct MoveGroup {
  GroupKind kind = GroupKind::Residual;
  std::vector<std::size_t> moves;
  int weight_gain = 0;
};

struct GroupingIssue {
  std::string what;
  std::vector<std::size_t> moves;
};

struct Grouping {
  std::vector<MoveGroup> groups;
  std::vector<GroupingIssue> issues;

  bool ok() const { return issues.empty(); }
  std::size_t count(GroupKind k) const;
};

// Partitions the moves: first crosses alone; the remaining crossings of each
// red-blue pair together; weight +1 steps alone; each weight-increasing
// same-color jump with the next (or, once the jumped peg has been crossed by
// every opposite-color peg, the previous) event its jumped peg notices; the
// rest alone. Anything that breaks the scheme is recorded as an issue.
Grouping build_groups(const SolutionTrace& trace, const CrossingLog& crossings,
                      const PegEventLog& events, PairingMode mode = PairingMode::Strict);
Grouping build_groups(const SolutionTrace& trace, PairingMode mode = PairingMode::Strict);

enum class CheckStatus { Pass, Fail, NotApplicable };

const char* status_name(CheckStatus s);

struct LowerBound {
  int final_weight = 0;
  int expected_final_weight = 0;  // 2N(N+1)
  int first_cross_weight = 0;     // two per first cross
  int residual_weight = 0;        // final weight not explained by first crosses
  std::size_t other_moves = 0;    // moves outside FirstCross groups
  int other_gain = 0;             // their total weight change
  long long implied_bound = 0;    // first crosses + residual weight
  bool holds = false;
};

struct AuditReport {
  int n = 0;
  PairingMode pairing = PairingMode::Strict;
  std::size_t move_count = 0;
  bool solved = false;
  int final_weight = 0;
  CrossingLog crossings;
  PegEventLog events;
  CheckStatus parity = CheckStatus::NotApplicable;
  CheckStatus first_cross_count = CheckStatus::NotApplicable;
  CheckStatus final_weight_check = CheckStatus::NotApplicable;
  CheckStatus repeat_cross_balance = CheckStatus::NotApplicable;
  AlternationVerdict alternation;
  AlternationVerdict hole_side;
  Grouping grouping;
  CheckStatus partition = CheckStatus::Pass;
  CheckStatus average_gain = CheckStatus::Pass;
  LowerBound bound;
  std::vector<std::string> failures;
  std::vector<std::string> notes;
  bool pass = false;
};

const char* pairing_name(PairingMode m);

AuditReport audit_trace(const SolutionTrace& trace, PairingMode mode = PairingMode::Strict);
AuditReport audit_solution(int n, const std::vector<Move>& moves,
                           PairingMode mode = PairingMode::Strict);
AuditReport audit_solution(int n, const MoveScript& script,
                           PairingMode mode = PairingMode::Strict);
// Audits with the starting pegs labelled by `start_ordinals` (one per cell, 0
// at the hole) instead of left to right.
AuditReport audit_solution(int n, const std::vector<Move>& moves,
                           std::span<const int> start_ordinals,
                           PairingMode mode = PairingMode::Strict);

}  // namespace pegswap
