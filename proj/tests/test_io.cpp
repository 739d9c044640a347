#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oct/dimacs.hpp"
#include "oct/oracle.hpp"
#include "oct/report.hpp"
#include "testutil.hpp"

using namespace oct;
using namespace testutil;

TEST_CASE("parses a DIMACS instance") {
  const auto inst = parse_instance("c a triangle\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n");
  CHECK(inst.graph == complete(3));
  CHECK(inst.labels == std::vector<std::string>{"1", "2", "3"});
  CHECK(inst.find_label("2") == 1);
  CHECK_FALSE(inst.find_label("7").has_value());
}

TEST_CASE("parses a bare edge list with 0-based ids") {
  const auto inst = parse_instance("0 1\n1 2\n");
  CHECK(inst.graph == path(3));
  CHECK(inst.labels == std::vector<std::string>{"0", "1", "2"});

  const auto empty = parse_instance("");
  CHECK(empty.graph.vertex_count() == 0);
}

TEST_CASE("parse errors carry line numbers") {
  try {
    parse_instance("p edge 2 1\ne 1 1\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(std::string(e.what()).find("self-loop") != std::string::npos);
  }

  try {
    parse_instance("p edge 2 1\ne 1 5\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(std::string(e.what()).find("out of range") != std::string::npos);
  }

  try {
    parse_instance("p edge x 1\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(std::string(e.what()).find("malformed header") != std::string::npos);
  }

  try {
    parse_instance("p edge 3 2\ne 1 2\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("mismatch") != std::string::npos);
  }

  try {
    parse_instance("p edge 3 1\ne 1 2\ne 2 3\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }

  CHECK_THROWS_AS(parse_instance("p edge 2 0\nq 1\n"), ParseError);
  CHECK_THROWS_AS(parse_instance("e 1 2\n"), ParseError);          // edge before header
  CHECK_THROWS_AS(parse_instance("c only a comment\n"), ParseError);  // no header at all
  CHECK_THROWS_AS(parse_instance("0 1 2\n"), ParseError);          // bare line with 3 tokens
  CHECK_THROWS_AS(parse_instance("0 0\n"), ParseError);            // bare self-loop
  CHECK_THROWS_AS(parse_instance("-1 2\n"), ParseError);           // negative id
}

TEST_CASE("duplicate edges collapse but still count toward the header") {
  const auto inst = parse_instance("p edge 2 2\ne 1 2\ne 2 1\n");
  CHECK(inst.graph.edge_count() == 1);
}

TEST_CASE("label records") {
  const auto inst = parse_instance("p edge 2 1\nl 1 src\nl 2 dst\ne 1 2\n");
  CHECK(inst.labels == std::vector<std::string>{"src", "dst"});
  CHECK(inst.find_label("dst") == 1);

  try {
    parse_instance("p edge 2 0\nl 1 a\nl 2 a\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(std::string(e.what()).find("duplicate label") != std::string::npos);
  }
}

TEST_CASE("render and parse round trip") {
  SplitMix64 rng(61);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = random_graph({1 + static_cast<int>(rng.next_below(12)), 0.4, {}, {}, rng.next()});
    CHECK(parse_instance(render_instance(g)).graph == g);
  }
  // labels survive the trip too
  const Graph p = path(2);
  const std::vector<std::string> labels{"a", "b"};
  const auto inst = parse_instance(render_instance(p, labels));
  CHECK(inst.graph == p);
  CHECK(inst.labels == labels);
}

TEST_CASE("crlf input parses like lf") {
  const auto inst = parse_instance("p edge 2 1\r\ne 1 2\r\n");
  CHECK(inst.graph.edge_count() == 1);
}

TEST_CASE("report rendering") {
  RunReport rep;
  rep.yes = true;
  rep.witness = {"2", "5"};
  rep.k = 2;
  rep.elapsed_ms = 1.5;
  CHECK(rep.render(false) == "YES\n2 5\n");

  RunReport no;
  no.yes = false;
  no.k = 1;
  CHECK(no.render(false) == "NO\n");
  const auto with_stats = no.render(true);
  CHECK(with_stats.find("c k 1\n") != std::string::npos);
  CHECK(with_stats.find("c elapsed_ms") != std::string::npos);

  // deterministic modulo the elapsed line
  RunReport yes_empty;
  yes_empty.yes = true;
  CHECK(yes_empty.render(false) == "YES\n\n");
}
