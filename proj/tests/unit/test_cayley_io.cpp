#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "helpers.hpp"

#include "nilgraph/cayley_io.hpp"
#include "nilgraph/constructions.hpp"
#include "nilgraph/error.hpp"

using namespace nilgraph;

namespace {
  void expect_parse_error(std::string const& text, std::size_t line,
                          std::size_t column) {
    try {
      parse_cayley_table(text, "t");
      FAIL("expected ParseError for: " << text);
    } catch (ParseError const& e) {
      CHECK(e.line() == line);
      CHECK(e.column() == column);
    }
  }
}  // namespace

TEST_SUITE("cayley_io") {
  TEST_CASE("parse with comments, blank lines, CRLF and labels") {
    auto const s = parse_cayley_table(
        "# left zero\n\n2\r\n0 0\r\n1 1\r\nx y\n", "t");
    CHECK(s.size() == 2);
    CHECK(s.product(1, 0) == 1);
    CHECK(s.label(0) == "x");
  }

  TEST_CASE("write then parse round-trips") {
    for (auto const& name : fixture_names()) {
      auto const s    = fixture(name);
      auto const text = to_cayley_text(s);
      CHECK(text.find('\r') == std::string::npos);
      auto const back = parse_cayley_table(text, name);
      CHECK(back == s);
      CHECK(back.labels() == s.labels());
    }
  }

  TEST_CASE("exact output") {
    CHECK(to_cayley_text(left_zero_semigroup(2)) == "2\n0 0\n1 1\n");
    CHECK(to_cayley_text(star_semigroup(1)) == "2\n0 0\n1 1\nx0 x1\n");
  }

  TEST_CASE("parse errors carry line and column") {
    expect_parse_error("", 1, 1);
    expect_parse_error("2 2\n", 1, 3);
    expect_parse_error("x\n", 1, 1);
    expect_parse_error("0\n", 1, 1);
    expect_parse_error("2\n0 0\n", 3, 1);
    expect_parse_error("2\n0 0\n1 1 1\n", 3, 5);
    expect_parse_error("2\n0 0\n1 7\n", 3, 3);
    expect_parse_error("2\n0 -1\n1 1\n", 2, 3);
    expect_parse_error("2\n0 0\n1 1\na\n", 4, 1);
    expect_parse_error("2\n0 0\n1 1\na b\nc d\n", 5, 1);
  }

  TEST_CASE("semantic errors") {
    CHECK_THROWS_AS(parse_cayley_table("2\n1 0\n0 0\n", "t"), NotAssociative);
  }

  TEST_CASE("files") {
    auto const path = std::filesystem::temp_directory_path() / "nilgraph_io_test.txt";
    {
      std::ofstream out(path);
      write_cayley_table(out, f7());
    }
    CHECK(read_cayley_table(path) == f7());
    std::filesystem::remove(path);
    CHECK_THROWS_AS(read_cayley_table(path), ParseError);
  }
}
