#include "pegswap/audit.hpp"

#include <algorithm>
#include <string>

namespace pegswap {

namespace {

PegId peg_or_throw(const Board& b, int index) {
  auto id = b.peg_at(index);
  if (!id) throw PuzzleError("trace boards must carry peg identities");
  return *id;
}

std::size_t peg_slot(PegId id, int n) {
  return static_cast<std::size_t>((id.color == Color::Red ? 0 : n) + id.ordinal - 1);
}

std::string move_label(std::size_t i) { return "move " + std::to_string(i + 1); }

}  // namespace

bool CrossingLog::parity_ok() const {
  return std::all_of(pair_counts.begin(), pair_counts.end(), [](int c) { return c % 2 == 1; });
}

std::vector<std::pair<int, int>> CrossingLog::even_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int r = 1; r <= n; ++r) {
    for (int b = 1; b <= n; ++b) {
      if (pair_count(r, b) % 2 == 0) out.emplace_back(r, b);
    }
  }
  return out;
}

CrossingLog track_crossings(const SolutionTrace& trace) {
  CrossingLog log;
  log.n = trace.n;
  log.pair_counts.assign(static_cast<std::size_t>(trace.n * trace.n), 0);
  log.first_cross.assign(trace.moves.size(), false);
  for (std::size_t i = 0; i < trace.moves.size(); ++i) {
    const Move& m = trace.moves[i];
    if (m.kind != MoveKind::Jump) continue;
    const Board& before = trace.boards[i];
    CrossingEvent ev;
    ev.move_index = i;
    ev.jumper = peg_or_throw(before, m.from);
    ev.jumped = peg_or_throw(before, m.over());
    ev.jumper_rightward = m.rightward();
    if (ev.red_blue()) {
      const PegId red = ev.jumper.color == Color::Red ? ev.jumper : ev.jumped;
      const PegId blue = ev.jumper.color == Color::Red ? ev.jumped : ev.jumper;
      int& count = log.pair_counts[static_cast<std::size_t>((red.ordinal - 1) * trace.n +
                                                            (blue.ordinal - 1))];
      ev.first = count == 0;
      ++count;
      if (ev.first) {
        log.first_cross[i] = true;
        ++log.first_cross_count;
      }
    } else {
      ++log.same_color_counts[std::minmax(ev.jumper, ev.jumped)];
    }
    log.events.push_back(ev);
  }
  return log;
}

char event_char(EventKind k) {
  switch (k) {
    case EventKind::A: return 'A';
    case EventKind::B: return 'B';
    case EventKind::C: return 'C';
    case EventKind::D: return 'D';
  }
  return '?';
}

PegEventLog peg_event_log(const SolutionTrace& trace) {
  PegEventLog logs;
  const Board& start = trace.boards.front();
  for (int i = 0; i < start.size(); ++i) {
    if (auto id = start.peg_at(i)) logs[*id];
  }
  for (std::size_t i = 0; i < trace.moves.size(); ++i) {
    const Move& m = trace.moves[i];
    const Board& before = trace.boards[i];
    const bool right = m.rightward();
    logs[peg_or_throw(before, m.from)].push_back({i, right ? EventKind::D : EventKind::B});
    if (m.kind == MoveKind::Jump) {
      logs[peg_or_throw(before, m.over())].push_back({i, right ? EventKind::C : EventKind::A});
    }
  }
  return logs;
}

AlternationVerdict check_alternation(std::span<const PegEvent> log) {
  AlternationVerdict v;
  for (std::size_t k = 1; k < log.size(); ++k) {
    if (leftward_class(log[k].kind) == leftward_class(log[k - 1].kind)) {
      v.pass = false;
      v.index = k;
      v.detail = std::string("events ") + event_char(log[k - 1].kind) + " then " +
                 event_char(log[k].kind) + " at log index " + std::to_string(k);
      return v;
    }
  }
  return v;
}

AlternationVerdict check_alternation(const PegEventLog& logs) {
  for (const auto& [id, log] : logs) {
    AlternationVerdict v = check_alternation(std::span<const PegEvent>(log));
    if (!v.pass) {
      v.peg = id;
      v.detail = to_string(id) + ": " + v.detail;
      return v;
    }
  }
  return {};
}

AlternationVerdict check_hole_side(const SolutionTrace& trace) {
  const int n = trace.n;
  // Cell of every peg, tracked alongside the boards.
  std::vector<int> where(static_cast<std::size_t>(2 * n), -1);
  const Board& start = trace.boards.front();
  for (int i = 0; i < start.size(); ++i) {
    if (auto id = start.peg_at(i)) where[peg_slot(*id, n)] = i;
  }
  auto fail = [&](PegId id, std::size_t move, const std::string& why) {
    AlternationVerdict v;
    v.pass = false;
    v.peg = id;
    v.index = move;
    v.detail = to_string(id) + " at " + move_label(move) + ": " + why;
    return v;
  };
  for (std::size_t i = 0; i < trace.moves.size(); ++i) {
    const Move& m = trace.moves[i];
    const Board& before = trace.boards[i];
    const Board& after = trace.boards[i + 1];
    const PegId mover = peg_or_throw(before, m.from);
    std::optional<PegId> jumped;
    if (m.kind == MoveKind::Jump) jumped = peg_or_throw(before, m.over());
    for (int o = 1; o <= n; ++o) {
      for (Color c : {Color::Red, Color::Blue}) {
        const PegId id{c, o};
        int& pos = where[peg_slot(id, n)];
        const bool right_before = before.empty_index() > pos;
        if (id == mover) pos = m.to;
        const bool right_after = after.empty_index() > pos;
        if (id == mover || id == jumped) {
          // Moving or being passed leftward leaves the hole on the right.
          if (right_after != !m.rightward()) {
            return fail(id, i, "hole on the wrong side after a noticed event");
          }
        } else if (right_after != right_before) {
          return fail(id, i, "hole crossed the peg without an event");
        }
      }
    }
  }
  return {};
}

const char* group_kind_name(GroupKind k) {
  switch (k) {
    case GroupKind::FirstCross: return "FirstCross";
    case GroupKind::RepeatCrossPair: return "RepeatCrossPair";
    case GroupKind::ProductiveStep: return "ProductiveStep";
    case GroupKind::SameColorJumpPair: return "SameColorJumpPair";
    case GroupKind::Residual: return "Residual";
    case GroupKind::MergedPairing: return "MergedPairing";
  }
  return "?";
}

std::size_t Grouping::count(GroupKind k) const {
  return static_cast<std::size_t>(
      std::count_if(groups.begin(), groups.end(), [k](const MoveGroup& g) { return g.kind == k; }));
}

Grouping build_groups(const SolutionTrace& trace, const CrossingLog& crossings,
                      const PegEventLog& events, PairingMode mode) {
  const int n = trace.n;
  const std::size_t count = trace.moves.size();
  Grouping out;
  // Group index owning each move, or -1.
  std::vector<long> owner(count, -1);
  auto delta = [&](std::size_t i) { return weight_delta(trace.moves[i]); };
  auto add_group = [&](GroupKind kind, std::vector<std::size_t> members) {
    MoveGroup g{kind, std::move(members), 0};
    for (std::size_t i : g.moves) {
      g.weight_gain += delta(i);
      owner[i] = static_cast<long>(out.groups.size());
    }
    out.groups.push_back(std::move(g));
  };

  // Red-blue crossings: first crosses alone, later ones grouped per pair.
  std::map<std::pair<int, int>, std::vector<std::size_t>> repeats;
  for (const CrossingEvent& ev : crossings.events) {
    if (!ev.red_blue()) continue;
    if (ev.first) {
      add_group(GroupKind::FirstCross, {ev.move_index});
      continue;
    }
    const PegId red = ev.jumper.color == Color::Red ? ev.jumper : ev.jumped;
    const PegId blue = ev.jumper.color == Color::Red ? ev.jumped : ev.jumper;
    repeats[{red.ordinal, blue.ordinal}].push_back(ev.move_index);
  }
  for (auto& [pair, members] : repeats) add_group(GroupKind::RepeatCrossPair, std::move(members));

  for (std::size_t i = 0; i < count; ++i) {
    if (trace.moves[i].kind == MoveKind::Step && delta(i) == 1) {
      add_group(GroupKind::ProductiveStep, {i});
    }
  }

  // Pegs of the opposite color that have crossed each peg so far.
  std::vector<std::vector<bool>> crossed_by(static_cast<std::size_t>(2 * n),
                                            std::vector<bool>(static_cast<std::size_t>(n), false));
  std::vector<int> crossed_count(static_cast<std::size_t>(2 * n), 0);
  auto note_crossing = [&](PegId a, PegId b) {
    auto seen = crossed_by[peg_slot(a, n)][static_cast<std::size_t>(b.ordinal - 1)];
    if (!seen) {
      seen = true;
      ++crossed_count[peg_slot(a, n)];
    }
  };

  for (const CrossingEvent& ev : crossings.events) {
    const std::size_t i = ev.move_index;
    if (ev.red_blue()) {
      note_crossing(ev.jumper, ev.jumped);
      note_crossing(ev.jumped, ev.jumper);
      continue;
    }
    if (delta(i) <= 0) continue;  // weight-decreasing same-color jumps stay residual

    const PegId jumper = ev.jumper;
    const PegId jumped = ev.jumped;
    const bool all_crossed = crossed_count[peg_slot(jumped, n)] == n;
    const auto& log = events.at(jumped);
    auto here = std::find_if(log.begin(), log.end(),
                             [i](const PegEvent& e) { return e.move_index == i; });
    std::optional<std::size_t> partner;
    if (!all_crossed) {
      if (here != log.end() && std::next(here) != log.end()) partner = std::next(here)->move_index;
    } else if (here != log.end() && here != log.begin()) {
      partner = std::prev(here)->move_index;
    }
    const std::string rule = all_crossed ? "previous" : "next";
    if (!partner) {
      out.issues.push_back({"same-color jump by " + to_string(jumper) + " over " +
                                to_string(jumped) + " has no " + rule + " event to pair with",
                            {i}});
      add_group(GroupKind::SameColorJumpPair, {i});
      continue;
    }

    const std::size_t p = *partner;
    const Move& pm = trace.moves[p];
    const Board& pb = trace.boards[p];
    const PegId pmover = peg_or_throw(pb, pm.from);
    const bool reverse_jump = pm.kind == MoveKind::Jump && pmover == jumper &&
                              peg_or_throw(pb, pm.over()) == jumped &&
                              pm.rightward() != trace.moves[i].rightward();
    const bool retreat = pmover == jumped && delta(p) < 0;
    if (!reverse_jump && !retreat) {
      out.issues.push_back({"partner of same-color jump is neither the reverse jump nor a "
                            "weight-decreasing move of " + to_string(jumped),
                            {i, p}});
    }
    if (owner[p] >= 0) {
      MoveGroup& holder = out.groups[static_cast<std::size_t>(owner[p])];
      if (mode == PairingMode::Merged) {
        holder.kind = GroupKind::MergedPairing;
        holder.moves.push_back(i);
        holder.weight_gain += delta(i);
        owner[i] = owner[p];
        continue;
      }
      out.issues.push_back({"pairing conflict: partner of " + move_label(i) + ", " + move_label(p) +
                                " already belongs to a " +
                                group_kind_name(holder.kind) + " group",
                            {i, p}});
      add_group(GroupKind::SameColorJumpPair, {i});
      continue;
    }
    add_group(GroupKind::SameColorJumpPair, {std::min(i, p), std::max(i, p)});
  }

  for (std::size_t i = 0; i < count; ++i) {
    if (owner[i] >= 0) continue;
    if (delta(i) > -1) {
      out.issues.push_back({"ungrouped " + move_label(i) + " does not decrease the weight", {i}});
    }
    add_group(GroupKind::Residual, {i});
  }

  for (MoveGroup& g : out.groups) std::sort(g.moves.begin(), g.moves.end());
  std::sort(out.groups.begin(), out.groups.end(),
            [](const MoveGroup& a, const MoveGroup& b) { return a.moves.front() < b.moves.front(); });

  for (const MoveGroup& g : out.groups) {
    if (g.kind != GroupKind::FirstCross &&
        g.weight_gain > static_cast<int>(g.moves.size())) {
      out.issues.push_back({std::string(group_kind_name(g.kind)) + " group gains " +
                                std::to_string(g.weight_gain) + " over " +
                                std::to_string(g.moves.size()) + " moves",
                            g.moves});
    }
  }
  return out;
}

Grouping build_groups(const SolutionTrace& trace, PairingMode mode) {
  return build_groups(trace, track_crossings(trace), peg_event_log(trace), mode);
}

const char* pairing_name(PairingMode m) { return m == PairingMode::Strict ? "strict" : "merged"; }

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::NotApplicable: return "n/a";
  }
  return "?";
}

AuditReport audit_trace(const SolutionTrace& trace, PairingMode mode) {
  AuditReport rep;
  const int n = trace.n;
  rep.n = n;
  rep.pairing = mode;
  rep.move_count = trace.moves.size();
  rep.solved = trace.solved;
  rep.final_weight = trace.final_weight();
  rep.crossings = track_crossings(trace);
  rep.events = peg_event_log(trace);
  rep.alternation = check_alternation(rep.events);
  rep.hole_side = check_hole_side(trace);
  rep.grouping = build_groups(trace, rep.crossings, rep.events, mode);

  auto judge = [&](bool ok, const std::string& failure) {
    if (!ok) rep.failures.push_back(failure);
    return ok ? CheckStatus::Pass : CheckStatus::Fail;
  };

  if (!trace.solved) {
    rep.failures.push_back("trace does not end at the goal position");
    for (auto [r, b] : rep.crossings.even_pairs()) {
      rep.notes.push_back("pair R" + std::to_string(r) + "/B" + std::to_string(b) + " crossed " +
                          std::to_string(rep.crossings.pair_count(r, b)) + " times");
    }
  } else {
    rep.parity = judge(rep.crossings.parity_ok(), "a red-blue pair crossed an even number of times");
    rep.first_cross_count =
        judge(rep.crossings.first_cross_count == static_cast<std::size_t>(n * n),
              "first-cross count " + std::to_string(rep.crossings.first_cross_count) +
                  " differs from N^2");
    rep.final_weight_check =
        judge(rep.final_weight == 2 * n * (n + 1), "final weight differs from 2N(N+1)");
    // Each crossing of a red-blue pair flips which peg is on the left, so
    // after the first one the crossings that put the red peg back on the
    // right (weight -2) must match the ones that undo them (+2).
    std::vector<int> balance(rep.crossings.pair_counts.size(), 0);
    for (const CrossingEvent& ev : rep.crossings.events) {
      if (!ev.red_blue() || ev.first) continue;
      const PegId red = ev.jumper.color == Color::Red ? ev.jumper : ev.jumped;
      const PegId blue = ev.jumper.color == Color::Red ? ev.jumped : ev.jumper;
      balance[static_cast<std::size_t>((red.ordinal - 1) * n + (blue.ordinal - 1))] +=
          weight_delta(trace.moves[ev.move_index]);
    }
    const bool balanced = std::all_of(balance.begin(), balance.end(), [](int b) { return b == 0; });
    rep.repeat_cross_balance =
        judge(balanced, "repeated crossings of a red-blue pair do not cancel out");
  }

  judge(rep.alternation.pass, "alternation: " + rep.alternation.detail);
  judge(rep.hole_side.pass, "hole side: " + rep.hole_side.detail);
  for (const GroupingIssue& issue : rep.grouping.issues) rep.failures.push_back(issue.what);

  // Partition: the grouping rules applied cleanly, every move is in exactly one
  // group, and the gains add up.
  std::vector<int> seen(rep.move_count, 0);
  int total_gain = 0;
  for (const MoveGroup& g : rep.grouping.groups) {
    total_gain += g.weight_gain;
    for (std::size_t i : g.moves) ++seen[i];
  }
  const bool partitioned = rep.grouping.ok() &&
                           std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; });
  rep.partition = judge(partitioned && total_gain == rep.final_weight - weight(trace.boards.front()),
                        "groups do not partition the moves");

  LowerBound& lb = rep.bound;
  lb.final_weight = rep.final_weight;
  lb.expected_final_weight = 2 * n * (n + 1);
  lb.first_cross_weight = 2 * static_cast<int>(rep.crossings.first_cross_count);
  lb.residual_weight = lb.final_weight - lb.first_cross_weight;
  for (const MoveGroup& g : rep.grouping.groups) {
    if (g.kind == GroupKind::FirstCross) continue;
    lb.other_moves += g.moves.size();
    lb.other_gain += g.weight_gain;
  }
  rep.average_gain = judge(static_cast<long long>(lb.other_moves) >= lb.other_gain,
                           "average weight gain outside first crosses exceeds 1");
  lb.implied_bound =
      static_cast<long long>(rep.crossings.first_cross_count) + lb.residual_weight;
  lb.holds = trace.solved && lb.implied_bound == static_cast<long long>(n) * n + 2LL * n &&
             lb.implied_bound <= static_cast<long long>(rep.move_count) &&
             rep.average_gain == CheckStatus::Pass;
  if (trace.solved) judge(lb.holds, "lower-bound arithmetic does not hold");

  rep.pass = rep.failures.empty();
  return rep;
}

AuditReport audit_solution(int n, const std::vector<Move>& moves, PairingMode mode) {
  return audit_trace(replay(n, moves), mode);
}

AuditReport audit_solution(int n, const MoveScript& script, PairingMode mode) {
  return audit_trace(replay(n, script), mode);
}

AuditReport audit_solution(int n, const std::vector<Move>& moves,
                           std::span<const int> start_ordinals, PairingMode mode) {
  return audit_trace(replay(initial_board(n).with_identities(start_ordinals), moves), mode);
}

}  // namespace pegswap
