#include <doctest.h>

#include "brute.hpp"
#include "diperfect/error.hpp"
#include "diperfect/harness.hpp"
#include "diperfect/instances.hpp"
#include "diperfect/io.hpp"

using namespace diperfect;
namespace inst = diperfect::instances;

namespace {

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t at = text.find(needle); at != std::string::npos; at = text.find(needle, at + 1)) ++n;
  return n;
}

ErrorCode parse_error(const std::string& text) {
  try {
    parse_digraph(text);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("parsed");
  return ErrorCode::InternalTheoremViolation;
}

}  // namespace

TEST_CASE("edge list parsing") {
  CHECK(parse_digraph("3\n0 1\n0 2\n2 1") == inst::transitive_triangle());
  CHECK(parse_digraph("1\n") == Digraph(1));
  CHECK(parse_digraph("# comment\n3 # order\n0 1\n\n0 2 # arc\n2 1\n") == inst::transitive_triangle());
}

TEST_CASE("parse errors") {
  CHECK(parse_error("3\n0 x\n") == ErrorCode::ParseError);
  CHECK(parse_error("3\n0 1 2\n") == ErrorCode::ParseError);
  CHECK(parse_error("") == ErrorCode::ParseError);
  CHECK(parse_error("3\n1 1\n") == ErrorCode::LoopArc);
  CHECK(parse_error("3\n0 3\n") == ErrorCode::VertexOutOfRange);
  CHECK(parse_error("&B") == ErrorCode::ParseError);
  try {
    parse_digraph("2\n0 1\n1 ?\n");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 3, column 3") != std::string::npos);
  }
}

TEST_CASE("digraph6 matches the edge list") {
  const Digraph tt = inst::transitive_triangle();
  const std::string text = emit_digraph6(tt);
  CHECK(text.front() == '&');
  CHECK(canonical_form(parse_digraph(text)) == canonical_form(tt));
  // Order 3, matrix rows 011 000 010 -> bits 011000 010 -> 'W' 'O'.
  CHECK(text == "&BWO");
  const Digraph big = Digraph::from_arcs(63, {{0, 62}, {61, 3}});
  CHECK(emit_digraph6(big).substr(0, 2) == "&~");
  CHECK(parse_digraph(emit_digraph6(big)) == big);
}

TEST_CASE("dot rendering") {
  const std::string tt = emit_dot(inst::transitive_triangle());
  CHECK(count(tt, "->") == 3);
  CHECK(count(tt, "dir=both") == 0);
  const std::string sym = emit_dot(inst::symmetric_five_cycle());
  CHECK(count(sym, "->") == 5);
  CHECK(count(sym, "dir=both") == 5);
}

TEST_CASE("json documents are versioned and round-trip") {
  const PropertyReport r = check_property(inst::blocking_seven(), Mode::Alpha);
  const Json j = document(to_json(r));
  CHECK(j.at("schema") == kSchema);
  const PropertyReport back = property_report_from_json(Json::parse(dump(j)));
  CHECK(dump(to_json(back)) == dump(to_json(r)));
  CHECK(digraph_from_json(to_json(inst::exceptional_four())) == inst::exceptional_four());
  CHECK(parse_digraph(dump(to_json(inst::exceptional_four())), Format::Json) == inst::exceptional_four());
}

TEST_CASE("json keys are sorted") {
  const std::string text = dump(to_json(classify(inst::transitive_triangle())));
  CHECK(text.find("\"alpha\"") < text.find("\"arc_count\""));
  CHECK(text.find("\"arc_count\"") < text.find("\"complete\""));
}

TEST_CASE("property: parse after emit is the identity at n <= 4") {
  for (int n = 0; n <= 4; ++n) {
    for_each_digraph(n, false, {}, [](const Digraph& d) {
      REQUIRE(parse_digraph(emit_edge_list(d)) == d);
      REQUIRE(parse_digraph(emit_digraph6(d)) == d);
      REQUIRE(parse_digraph(emit_edge_list(d), Format::EdgeList) == d);
      REQUIRE(emit_digraph6(d) == emit_digraph6(Digraph::from_arcs(d.order(), d.arcs())));
      return true;
    });
  }
}
