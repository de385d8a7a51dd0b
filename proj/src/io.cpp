#include "diperfect/io.hpp"

#include <sstream>

#include "diperfect/error.hpp"

namespace diperfect {

Format parse_format(std::string_view name) {
  if (name == "edge_list") return Format::EdgeList;
  if (name == "digraph6") return Format::Digraph6;
  if (name == "dot") return Format::Dot;
  if (name == "json") return Format::Json;
  fail(ErrorCode::ParseError, "unknown format '" + std::string(name) + "'");
}

std::string_view to_string(Format format) {
  switch (format) {
    case Format::EdgeList: return "edge_list";
    case Format::Digraph6: return "digraph6";
    case Format::Dot: return "dot";
    case Format::Json: return "json";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

[[noreturn]] void parse_fail(std::size_t line, std::size_t column, const std::string& what) {
  fail(ErrorCode::ParseError, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what);
}

struct Token {
  long long value;
  std::size_t column;
};

std::vector<Token> integer_tokens(std::string_view line, std::size_t line_no) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    const std::string_view word = line.substr(start, i - start);
    long long value = 0;
    for (char c : word) {
      if (c < '0' || c > '9') parse_fail(line_no, start + 1, "expected a non-negative integer, found '" + std::string(word) + "'");
      value = value * 10 + (c - '0');
      if (value > 1'000'000) parse_fail(line_no, start + 1, "integer too large");
    }
    out.push_back({value, start + 1});
  }
  return out;
}

Digraph parse_edge_list(std::string_view text) {
  std::optional<int> order;
  std::vector<Arc> arcs;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const std::vector<Token> tokens = integer_tokens(line, line_no);
    if (tokens.empty()) {
      if (end == text.size()) break;
      continue;
    }
    if (!order) {
      if (tokens.size() != 1) parse_fail(line_no, tokens[1].column, "the first line holds only the order");
      if (tokens[0].value > kMaxOrder) parse_fail(line_no, tokens[0].column, "order exceeds " + std::to_string(kMaxOrder));
      order = static_cast<int>(tokens[0].value);
    } else {
      if (tokens.size() != 2) parse_fail(line_no, tokens.size() < 2 ? 1 : tokens[2].column, "expected 'u v'");
      for (const Token& t : tokens) {
        if (t.value >= *order) fail(ErrorCode::VertexOutOfRange, "line " + std::to_string(line_no) + ", column " + std::to_string(t.column) + ": vertex " + std::to_string(t.value) + " outside 0.." + std::to_string(*order - 1));
      }
      arcs.push_back({static_cast<Vertex>(tokens[0].value), static_cast<Vertex>(tokens[1].value)});
    }
    if (end == text.size()) break;
  }
  if (!order) parse_fail(line_no == 0 ? 1 : line_no, 1, "missing order line");
  return Digraph::from_arcs(*order, arcs);
}

Digraph parse_digraph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) text.remove_suffix(1);
  if (text.empty() || text[0] != '&') parse_fail(1, 1, "digraph6 text starts with '&'");
  std::size_t i = 1;
  auto byte = [&](std::size_t at) -> int {
    if (at >= text.size()) parse_fail(1, at + 1, "unexpected end of input");
    const int c = static_cast<unsigned char>(text[at]);
    if (c < 63 || c > 126) parse_fail(1, at + 1, "character outside the printable range 63..126");
    return c - 63;
  };
  long n = 0;
  if (i < text.size() && text[i] == '~') {
    if (i + 1 < text.size() && text[i + 1] == '~') parse_fail(1, i + 1, "orders above 258047 are not supported");
    n = (byte(i + 1) << 12) | (byte(i + 2) << 6) | byte(i + 3);
    i += 4;
  } else {
    n = byte(i);
    i += 1;
  }
  if (n > kMaxOrder) parse_fail(1, 2, "order exceeds " + std::to_string(kMaxOrder));
  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  const std::size_t groups = (bits + 5) / 6;
  if (text.size() - i != groups) parse_fail(1, text.size() + 1, "expected " + std::to_string(groups) + " matrix characters");
  std::vector<Arc> arcs;
  for (std::size_t k = 0; k < bits; ++k) {
    const int chunk = byte(i + k / 6);
    if ((chunk >> (5 - k % 6)) & 1) {
      const Vertex u = static_cast<Vertex>(k / static_cast<std::size_t>(n));
      const Vertex v = static_cast<Vertex>(k % static_cast<std::size_t>(n));
      if (u == v) parse_fail(1, i + k / 6 + 1, "loop at vertex " + std::to_string(u));
      arcs.push_back({u, v});
    }
  }
  return Digraph::from_arcs(static_cast<int>(n), arcs);
}

}  // namespace

Digraph parse_digraph(std::string_view text, std::optional<Format> format) {
  if (!format) {
    std::size_t first = text.find_first_not_of(" \t\r\n");
    format = first != std::string_view::npos && text[first] == '&' ? Format::Digraph6 : Format::EdgeList;
    if (*format == Format::Digraph6) text = text.substr(first);
  }
  switch (*format) {
    case Format::EdgeList: return parse_edge_list(text);
    case Format::Digraph6: return parse_digraph6(text);
    case Format::Json:
      try {
        return digraph_from_json(Json::parse(text));
      } catch (const Json::exception& e) {
        fail(ErrorCode::ParseError, e.what());
      }
    case Format::Dot: break;
  }
  fail(ErrorCode::ParseError, "dot input is not supported");
}

// ---------------------------------------------------------------------------
// Emission

std::string emit_edge_list(const Digraph& d) {
  std::string out = std::to_string(d.order()) + "\n";
  for (const Arc& a : d.arcs()) out += std::to_string(a.tail) + " " + std::to_string(a.head) + "\n";
  return out;
}

std::string emit_digraph6(const Digraph& d) {
  const int n = d.order();
  std::string out = "&";
  if (n <= 62) {
    out += static_cast<char>(n + 63);
  } else {
    out += '~';
    out += static_cast<char>(((n >> 12) & 63) + 63);
    out += static_cast<char>(((n >> 6) & 63) + 63);
    out += static_cast<char>((n & 63) + 63);
  }
  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  int chunk = 0;
  for (std::size_t k = 0; k < bits; ++k) {
    const Vertex u = static_cast<Vertex>(k / static_cast<std::size_t>(n));
    const Vertex v = static_cast<Vertex>(k % static_cast<std::size_t>(n));
    chunk = (chunk << 1) | (u != v && d.has_arc(u, v) ? 1 : 0);
    if (k % 6 == 5) {
      out += static_cast<char>(chunk + 63);
      chunk = 0;
    }
  }
  if (bits % 6 != 0) out += static_cast<char>((chunk << (6 - bits % 6)) + 63);
  return out;
}

std::string emit_dot(const Digraph& d) {
  std::ostringstream out;
  out << "digraph D {\n";
  for (Vertex v = 0; v < d.order(); ++v) out << "  " << v << ";\n";
  for (const Arc& a : d.arcs()) {
    if (d.is_digon(a.tail, a.head)) {
      if (a.tail < a.head) out << "  " << a.tail << " -> " << a.head << " [dir=both];\n";
    } else {
      out << "  " << a.tail << " -> " << a.head << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string emit(const Digraph& d, Format format) {
  switch (format) {
    case Format::EdgeList: return emit_edge_list(d);
    case Format::Digraph6: return emit_digraph6(d) + "\n";
    case Format::Dot: return emit_dot(d);
    case Format::Json: return dump(document(to_json(d)));
  }
  return {};
}

// ---------------------------------------------------------------------------
// JSON

Json to_json(const Digraph& d) {
  Json arcs = Json::array();
  for (const Arc& a : d.arcs()) arcs.push_back({a.tail, a.head});
  return {{"order", d.order()}, {"arcs", arcs}, {"digraph6", emit_digraph6(d)}};
}

Json to_json(VertexSet s) { return s.to_vector(); }

Json to_json(const PathPartition& p) {
  Json j{{"kind", to_string(p.kind)}, {"paths", p.paths}, {"size", p.size()}};
  j["stable_set"] = p.stable_set ? to_json(*p.stable_set) : Json(nullptr);
  return j;
}

Json to_json(const BuildTrace& trace) {
  Json steps = Json::array();
  for (const TraceStep& step : trace.steps) {
    Json sets = Json::object();
    for (const auto& [name, set] : step.sets) sets[name] = to_json(set);
    Json pairs = Json::array();
    for (const auto& [a, b] : step.pairs) pairs.push_back({a, b});
    steps.push_back({{"rule", step.rule}, {"sets", sets}, {"pairs", pairs}, {"note", step.note}});
  }
  return steps;
}

Json to_json(const Witness& w) {
  Json arcs = Json::array();
  for (const Arc& a : w.arcs) arcs.push_back({a.tail, a.head});
  return {{"kind", to_string(w.kind)}, {"vertices", w.vertices}, {"extra", w.extra}, {"arcs", arcs}};
}

Json to_json(const ClassReport& r) {
  return {{"order", r.order},
          {"arc_count", r.arc_count},
          {"tournament", r.tournament},
          {"semicomplete", r.semicomplete},
          {"complete", r.complete},
          {"symmetric", r.symmetric},
          {"in_semicomplete", r.in_semicomplete},
          {"strong", r.strong},
          {"lonely_arc_count", r.lonely_arc_count},
          {"lonely_arcs_disjoint", r.lonely_arcs_disjoint},
          {"series_parallel", r.series_parallel},
          {"perfect", r.perfect},
          {"alpha", r.alpha},
          {"in_class_b", r.in_class_b},
          {"in_class_d", r.in_class_d}};
}

Json to_json(const PropertyReport& r) {
  Json certs = Json::array();
  for (const auto& [s, p] : r.certificates) certs.push_back({{"stable_set", to_json(s)}, {"partition", to_json(p)}});
  Json j{{"digraph", to_json(r.digraph)}, {"property", to_string(r.mode)}, {"holds", r.holds}, {"certificates", certs}};
  j["failing_stable_set"] = r.failing_stable_set ? to_json(*r.failing_stable_set) : Json(nullptr);
  j["failing_subset"] = r.failing_subset ? to_json(*r.failing_subset) : Json(nullptr);
  return j;
}

Json to_json(const SurveyReport& r, bool include_stats) {
  Json rows = Json::array();
  for (const SurveyRow& row : r.rows) {
    rows.push_back({{"order", row.order},
                    {"digraphs", row.digraphs},
                    {"in_class_diperfect", row.in_class_diperfect},
                    {"in_class_not_diperfect", row.in_class_not_diperfect},
                    {"out_class_diperfect", row.out_class_diperfect},
                    {"out_class_not_diperfect", row.out_class_not_diperfect}});
  }
  Json counter = Json::array();
  for (const Counterexample& c : r.counterexamples) {
    counter.push_back({{"digraph", to_json(c.digraph)}, {"direction", c.direction}, {"report", to_json(c.report)}});
  }
  Json j{{"n_max", r.n_max}, {"mode", to_string(r.mode)}, {"class", r.mode == Mode::Alpha ? "B" : "D"}, {"up_to_iso", r.up_to_iso}, {"rows", rows}, {"counterexamples", counter}};
  if (include_stats) j["stats"] = {{"seconds", r.stats.seconds}, {"jobs", r.stats.jobs}, {"memo_entries", r.stats.memo_entries}};
  return j;
}

Json to_json(const ValidationReport& r) {
  Json failures = Json::array();
  for (const ValidationFailure& f : r.failures) {
    failures.push_back({{"digraph", to_json(f.digraph)}, {"stable_set", to_json(f.stable_set)}, {"message", f.message}});
  }
  return {{"class", r.class_name},
          {"order", r.order},
          {"mode", to_string(r.mode)},
          {"exhaustive", r.exhaustive},
          {"samples", r.samples},
          {"seed", r.seed},
          {"instances", r.instances},
          {"stable_sets", r.stable_sets},
          {"certificates_validated", r.certificates_validated},
          {"lovasz_confirmed", r.lovasz_confirmed},
          {"hamilton_cycles", r.hamilton_cycles},
          {"failures", failures}};
}

namespace {

VertexSet set_from_json(const Json& j) {
  VertexSet s;
  for (const Json& v : j) s.insert(v.get<Vertex>());
  return s;
}

PartitionKind kind_from_string(const std::string& s) {
  if (s == "plain") return PartitionKind::Plain;
  if (s == "alpha") return PartitionKind::Alpha;
  if (s == "be") return PartitionKind::BE;
  fail(ErrorCode::ParseError, "unknown partition kind '" + s + "'");
}

}  // namespace

Digraph digraph_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("order") || !j.contains("arcs")) fail(ErrorCode::ParseError, "digraph object needs 'order' and 'arcs'");
  std::vector<Arc> arcs;
  for (const Json& a : j.at("arcs")) {
    if (!a.is_array() || a.size() != 2) fail(ErrorCode::ParseError, "arc must be a pair");
    arcs.push_back({a[0].get<Vertex>(), a[1].get<Vertex>()});
  }
  const int n = j.at("order").get<int>();
  if (n < 0 || n > kMaxOrder) fail(ErrorCode::ParseError, "order out of range");
  return Digraph::from_arcs(n, arcs);
}

PathPartition partition_from_json(const Json& j) {
  PathPartition p;
  p.kind = kind_from_string(j.at("kind").get<std::string>());
  p.paths = j.at("paths").get<std::vector<Path>>();
  if (!j.at("stable_set").is_null()) p.stable_set = set_from_json(j.at("stable_set"));
  return p;
}

PropertyReport property_report_from_json(const Json& j) {
  PropertyReport r;
  r.digraph = digraph_from_json(j.at("digraph"));
  r.mode = parse_mode(j.at("property").get<std::string>());
  r.holds = j.at("holds").get<bool>();
  if (!j.at("failing_stable_set").is_null()) r.failing_stable_set = set_from_json(j.at("failing_stable_set"));
  if (!j.at("failing_subset").is_null()) r.failing_subset = set_from_json(j.at("failing_subset"));
  for (const Json& c : j.at("certificates")) {
    r.certificates.emplace_back(set_from_json(c.at("stable_set")), partition_from_json(c.at("partition")));
  }
  return r;
}

Json document(Json value) {
  if (!value.is_object()) value = Json{{"value", std::move(value)}};
  value["schema"] = kSchema;
  return value;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace diperfect
