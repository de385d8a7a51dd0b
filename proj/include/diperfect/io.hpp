#pragma once

// Text formats for digraphs and JSON rendering of every report type. JSON
// objects carry "schema": "diperfect/1" at the top level; keys are sorted.

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "diperfect/constructive.hpp"
#include "diperfect/digraph.hpp"
#include "diperfect/forbidden.hpp"
#include "diperfect/harness.hpp"
#include "diperfect/oracles.hpp"

namespace diperfect {

inline constexpr const char* kSchema = "diperfect/1";

enum class Format { EdgeList, Digraph6, Dot, Json };

/// "edge_list", "digraph6", "dot", "json". Throws ParseError.
Format parse_format(std::string_view name);
std::string_view to_string(Format format);

/// Edge list: first line n, then one "u v" arc per line; '#' starts a
/// comment. Digraph6: '&', the order, then the row-major adjacency matrix in
/// 6-bit groups offset by 63. Without a format, text starting with '&' is
/// digraph6 and anything else an edge list. Throws ParseError with line and
/// column, LoopArc, VertexOutOfRange.
Digraph parse_digraph(std::string_view text, std::optional<Format> format = std::nullopt);

std::string emit_edge_list(const Digraph& d);
/// Single line, no trailing newline.
std::string emit_digraph6(const Digraph& d);
/// Digons drawn once with arrowheads at both ends.
std::string emit_dot(const Digraph& d);
std::string emit(const Digraph& d, Format format);

using Json = nlohmann::json;

Json to_json(const Digraph& d);
Json to_json(VertexSet s);
Json to_json(const PathPartition& p);
Json to_json(const BuildTrace& trace);
Json to_json(const Witness& w);
Json to_json(const ClassReport& r);
Json to_json(const PropertyReport& r);
/// Runtime statistics are included only on request so that reports of equal
/// runs are byte-identical.
Json to_json(const SurveyReport& r, bool include_stats = false);
Json to_json(const ValidationReport& r);

Digraph digraph_from_json(const Json& j);
PathPartition partition_from_json(const Json& j);
PropertyReport property_report_from_json(const Json& j);

/// Top-level document: the value with the schema tag added.
Json document(Json value);
/// Two-space indentation and a trailing newline.
std::string dump(const Json& j);

}  // namespace diperfect
