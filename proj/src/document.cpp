#include "pegswap/document.hpp"

namespace pegswap {

namespace {

Document move_entry(std::size_t index, const Move& m) {
  Document d;
  d["index"] = index;
  d["token"] = classify(m);
  d["from"] = m.from;
  d["to"] = m.to;
  d["weight_delta"] = weight_delta(m);
  return d;
}

Document verdict_json(const AlternationVerdict& v) {
  Document d;
  d["pass"] = v.pass;
  d["peg"] = v.peg ? Document(to_string(*v.peg)) : Document(nullptr);
  d["index"] = v.index ? Document(*v.index) : Document(nullptr);
  d["detail"] = v.detail;
  return d;
}

}  // namespace

Document trace_document(const SolutionTrace& trace) {
  Document doc;
  doc["format"] = kDocumentFormat;
  doc["n"] = trace.n;
  MoveScript script;
  bool scriptable = true;
  for (const Move& m : trace.moves) {
    if (auto t = token_for(m)) script.append(*t);
    else scriptable = false;
  }
  doc["script"] = scriptable ? Document(format_script(script)) : Document(nullptr);
  doc["moves"] = Document::array();
  for (std::size_t i = 0; i < trace.moves.size(); ++i) {
    doc["moves"].push_back(move_entry(i + 1, trace.moves[i]));
  }
  doc["weight_trace"] = trace.weight_trace;
  Document counts;
  counts["total"] = trace.counts.total;
  counts["steps"] = trace.counts.steps;
  counts["jumps"] = trace.counts.jumps;
  doc["counts"] = counts;
  doc["final_board"] = render_board(trace.final_board());
  doc["solved"] = trace.solved;
  return doc;
}

Document audit_json(const AuditReport& r) {
  Document d;
  d["verdict"] = r.pass ? "pass" : "fail";
  d["n"] = r.n;
  d["move_count"] = r.move_count;
  d["solved"] = r.solved;
  d["final_weight"] = r.final_weight;
  d["first_crosses"] = r.crossings.first_cross_count;
  d["pairing"] = pairing_name(r.pairing);

  Document checks;
  checks["crossing_parity"] = status_name(r.parity);
  checks["first_cross_count"] = status_name(r.first_cross_count);
  checks["final_weight"] = status_name(r.final_weight_check);
  checks["repeat_cross_balance"] = status_name(r.repeat_cross_balance);
  checks["partition"] = status_name(r.partition);
  checks["average_gain"] = status_name(r.average_gain);
  d["checks"] = checks;

  Document crossings = Document::array();
  for (const CrossingEvent& ev : r.crossings.events) {
    Document c;
    c["move"] = ev.move_index + 1;
    c["jumper"] = to_string(ev.jumper);
    c["jumped"] = to_string(ev.jumped);
    c["direction"] = ev.jumper_rightward ? "right" : "left";
    c["first"] = ev.first;
    crossings.push_back(c);
  }
  d["crossings"] = crossings;

  Document pairs = Document::array();
  for (int red = 1; red <= r.n; ++red) {
    for (int blue = 1; blue <= r.n; ++blue) {
      Document p;
      p["red"] = red;
      p["blue"] = blue;
      p["count"] = r.crossings.pair_count(red, blue);
      p["odd"] = r.crossings.pair_count(red, blue) % 2 == 1;
      pairs.push_back(p);
    }
  }
  d["pair_crossings"] = pairs;

  Document events;
  for (const auto& [id, log] : r.events) {
    std::string s;
    for (const PegEvent& e : log) s.push_back(event_char(e.kind));
    events[to_string(id)] = s;
  }
  d["peg_events"] = events;
  d["alternation"] = verdict_json(r.alternation);
  d["hole_side"] = verdict_json(r.hole_side);

  Document groups = Document::array();
  for (const MoveGroup& g : r.grouping.groups) {
    Document gd;
    gd["kind"] = group_kind_name(g.kind);
    Document members = Document::array();
    for (std::size_t i : g.moves) members.push_back(i + 1);
    gd["moves"] = members;
    gd["weight_gain"] = g.weight_gain;
    groups.push_back(gd);
  }
  d["groups"] = groups;
  Document tally;
  for (GroupKind k : {GroupKind::FirstCross, GroupKind::RepeatCrossPair, GroupKind::ProductiveStep,
                      GroupKind::SameColorJumpPair, GroupKind::Residual,
                      GroupKind::MergedPairing}) {
    tally[group_kind_name(k)] = r.grouping.count(k);
  }
  d["group_counts"] = tally;

  Document lb;
  lb["final_weight"] = r.bound.final_weight;
  lb["expected_final_weight"] = r.bound.expected_final_weight;
  lb["first_cross_weight"] = r.bound.first_cross_weight;
  lb["residual_weight"] = r.bound.residual_weight;
  lb["other_moves"] = r.bound.other_moves;
  lb["other_gain"] = r.bound.other_gain;
  lb["implied_bound"] = r.bound.implied_bound;
  lb["holds"] = r.bound.holds;
  d["lower_bound"] = lb;
  d["failures"] = r.failures;
  d["notes"] = r.notes;
  return d;
}

Document audit_document(const SolutionTrace& trace, const AuditReport& report) {
  Document doc = trace_document(trace);
  doc["audit"] = audit_json(report);
  return doc;
}

Document search_document(const SearchResult& r) {
  Document doc;
  doc["format"] = kDocumentFormat;
  doc["n"] = r.n;
  doc["min_moves"] = r.min_moves ? Document(*r.min_moves) : Document(nullptr);
  doc["reachable_states"] = r.reachable_states;
  doc["peak_frontier"] = r.peak_frontier;
  doc["max_depth"] = r.max_depth;
  Document path = Document::array();
  for (std::size_t i = 0; i < r.witness.size(); ++i) path.push_back(move_entry(i + 1, r.witness[i]));
  doc["witness"] = path;
  return doc;
}

std::string render_document(const Document& doc) { return doc.dump(2) + "\n"; }

}  // namespace pegswap
