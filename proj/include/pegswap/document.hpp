#pragma once

#include <string>

#include <json.hpp>

#include "pegswap/audit.hpp"
#include "pegswap/notation.hpp"
#include "pegswap/oracle.hpp"

namespace pegswap {

// Version written into the "format" field of every document.
inline constexpr int kDocumentFormat = 1;

using Document = nlohmann::ordered_json;

// Fields in fixed order: format, n, script, moves, weight_trace, counts,
// solved. `script` is null when a move falls outside the S/s/J/j alphabet.
Document trace_document(const SolutionTrace& trace);
// trace_document() plus an "audit" object.
Document audit_document(const SolutionTrace& trace, const AuditReport& report);
Document audit_json(const AuditReport& report);
Document search_document(const SearchResult& result);

// Two-space indented text with a trailing newline.
std::string render_document(const Document& doc);

}  // namespace pegswap
