#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "divlab/io.hpp"
#include "test_util.hpp"

using namespace divlab;

TEST_CASE("explicit tables parse with exact rationals") {
  FiniteDiversity d = parse_diversity(
      "# three points\n"
      "DIVLAB 1\n"
      "GROUND x y z\n"
      "SET {x,y} = 1\n"
      "SET {x,z} = 3/2\n"
      "SET {y,z} = 1\n"
      "SET {x,y,z} = 2\n");
  CHECK(d.ground().labels() == std::vector<std::string>{"x", "y", "z"});
  CHECK(d.value(0b101) == Rat(3, 2));
  CHECK(d.value(0b111) == Rat(2));
  CHECK(d.value(0b001) == Rat(0));
}

TEST_CASE("parse errors carry line and column") {
  auto expect_error = [](const std::string& text, int line) {
    try {
      parse_diversity(text);
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line == line);
    }
  };
  expect_error("", 1);
  expect_error("DIVLAB 2\n", 1);
  expect_error("DIVLAB 1\nGROUND x y\nSET {x,y} = 1/0\n", 3);
  expect_error("DIVLAB 1\nGROUND x y\nSET {x,w} = 1\n", 3);
  expect_error("DIVLAB 1\nGROUND x y\nSET {x,y} = 1\nSET {x,y} = 2\n", 4);
  expect_error("DIVLAB 1\nGROUND x y\nWHAT\n", 3);
  // missing pair entry
  expect_error("DIVLAB 1\nGROUND x y z\nSET {x,y} = 1\n", 3);

  try {
    parse_diversity("DIVLAB 1\nGROUND x y\nSET {x,y} = 1/0\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.column == 13);
  }
}

TEST_CASE("nonzero singleton entries parse and fail verification, not parsing") {
  FiniteDiversity d = parse_diversity(
      "DIVLAB 1\nGROUND x y\nSET {x} = 1\nSET {x,y} = 1\n");
  CHECK(d.value(0b01) == Rat(1));
  CHECK(!verify_diversity_axioms(d).ok());
}

TEST_CASE("metric bodies build diameter diversities and validate") {
  FiniteDiversity d = parse_diversity(
      "DIVLAB 1\n"
      "GROUND a b c\n"
      "DIAMETER_OF_METRIC\n"
      "DIST a b 1\n"
      "DIST a c 1\n"
      "DIST b c 1\n");
  CHECK(d.value(0b111) == Rat(1));

  CHECK_THROWS_AS(parse_diversity("DIVLAB 1\nGROUND a b c\nDIAMETER_OF_METRIC\n"
                                  "DIST a b 1\nDIST a c 1\nDIST b c 5\n"),
                  ParseError);  // triangle fails
  CHECK_THROWS_AS(parse_diversity("DIVLAB 1\nGROUND a b\nDIAMETER_OF_METRIC\n"), ParseError);
}

TEST_CASE("tree bodies with node and interior marks") {
  FiniteDiversity d = parse_diversity(
      "DIVLAB 1\n"
      "TREE\n"
      "EDGE root tip1 1\n"
      "EDGE root tip2 1\n"
      "MARK p 0 0\n"       // the root
      "MARK q 0 1/2\n"     // interior
      "MARK r 1 1\n");     // tip2
  CHECK(d.ground().labels() == std::vector<std::string>{"p", "q", "r"});
  CHECK(d.value(0b011) == Rat(1, 2));
  CHECK(d.value(0b101) == Rat(1));
  CHECK(d.value(0b111) == Rat(3, 2));

  CHECK_THROWS_AS(parse_diversity("DIVLAB 1\nTREE\nEDGE a b 1\nMARK p 7 0\n"), ParseError);
  CHECK_THROWS_AS(parse_diversity("DIVLAB 1\nTREE\nEDGE a b 0\nMARK p 0 0\n"), ParseError);
}

TEST_CASE("glue bodies nest full diversity blocks") {
  FiniteDiversity d = parse_diversity(
      "DIVLAB 1\n"
      "GLUE hub\n"
      "BEGIN LEFT\n"
      "GROUND hub s\n"
      "SET {hub,s} = 1\n"
      "END LEFT\n"
      "BEGIN RIGHT\n"
      "GROUND hub t\n"
      "SET {hub,t} = 2\n"
      "END RIGHT\n");
  CHECK(d.ground().labels() == std::vector<std::string>{"hub", "s", "t"});
  CHECK(d.value(d.ground().parse_subset("{s,t}")) == Rat(3));
  CHECK(verify_diversity_axioms(d).ok());
}

TEST_CASE("counting bodies with optional renaming") {
  FiniteDiversity d = parse_diversity("DIVLAB 1\nCOUNTING 3\n");
  CHECK(d.ground().labels() == std::vector<std::string>{"x1", "x2", "x3"});
  CHECK(d.value(0b111) == Rat(2));

  FiniteDiversity named = parse_diversity("DIVLAB 1\nGROUND x y z\nCOUNTING 3\n");
  CHECK(named.ground().labels() == std::vector<std::string>{"x", "y", "z"});

  CHECK_THROWS_AS(parse_diversity("DIVLAB 1\nGROUND x y\nCOUNTING 3\n"), ParseError);
  CHECK_THROWS_AS(parse_diversity("DIVLAB 1\nCOUNTING 0\n"), ParseError);
}

TEST_CASE("serialization round-trips exactly") {
  std::mt19937_64 rng(83);
  for (int trial = 0; trial < 6; ++trial) {
    FiniteDiversity d = testutil::random_diversity(4, rng);
    FiniteDiversity back = parse_diversity(serialize_explicit(d));
    CHECK(back.ground() == d.ground());
    CHECK(back.to_table() == d.to_table());
  }
  FiniteDiversity single = counting_diversity(1);
  FiniteDiversity back = parse_diversity(serialize_explicit(single));
  CHECK(back.to_table() == single.to_table());
}

TEST_CASE("map files") {
  GroundSet g({"a", "b", "c"});
  SelfMap m = parse_map("MAP a -> b\nMAP b -> a\nMAP c -> c\n", g);
  CHECK(m.apply(0) == 1);
  CHECK(m.apply(2) == 2);

  CHECK_THROWS_AS(parse_map("MAP a -> b\n", g), ParseError);                 // not total
  CHECK_THROWS_AS(parse_map("MAP a -> w\nMAP b -> a\nMAP c -> c\n", g), ParseError);
  CHECK_THROWS_AS(parse_map("MAP a -> b\nMAP a -> c\nMAP b -> a\nMAP c -> c\n", g), ParseError);
}
