#include <set>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"

#include "nilgraph/canonical.hpp"
#include "nilgraph/constructions.hpp"
#include "nilgraph/error.hpp"

using namespace nilgraph;

TEST_SUITE("canonical") {
  TEST_CASE("isomorphism and anti-isomorphism") {
    auto const f = f7();
    CHECK(are_isomorphic(f, f));
    auto const lz = left_zero_semigroup(2), rz = right_zero_semigroup(2);
    CHECK_FALSE(are_isomorphic(lz, rz));
    CHECK(are_anti_isomorphic(lz, rz));
    CHECK_FALSE(are_isomorphic(fixture("fig2_left"), fixture("fig2_right")));
  }

  TEST_CASE("modulo names") {
    CHECK(parse_modulo("iso") == Modulo::iso);
    CHECK(parse_modulo("isoanti") == Modulo::iso_anti);
    CHECK(parse_modulo("iso-anti") == Modulo::iso_anti);
    CHECK(to_string(Modulo::iso_anti) == "isoanti");
    CHECK_THROWS_AS(parse_modulo("anti"), std::invalid_argument);
  }

  TEST_CASE("canonical form matches the orbit minimum oracle") {
    for (std::size_t n = 1; n <= 3; ++n) {
      for (auto const& t : oracle::all_associative_tables(n)) {
        auto const s = test::from_table(t);
        for (bool anti : {false, true}) {
          auto const c = canonical_form(s, anti);
          CHECK(c.flat == oracle::orbit_minimum(t, n, anti));
          CHECK(is_canonical(s.flat(), n, anti) == (c.flat == t));
          CHECK(oracle::associative(c.flat, n));
        }
      }
    }
  }

  TEST_CASE("canonical form is a class invariant") {
    auto const                s = fixture("c4");
    std::vector<element_type> perm{2, 0, 3, 1};
    auto const t = FiniteSemigroup::from_flat(4, relabel(s.flat(), perm));
    CHECK(are_isomorphic(s, t));
    CHECK(canonical_form(s, false) == canonical_form(t, false));
    CHECK(canonical_form(s, true) == canonical_form(opposite(t), true));
  }

  TEST_CASE("relabel") {
    // Swapping the two elements of a left zero semigroup gives it back.
    auto const                lz = left_zero_semigroup(2);
    std::vector<element_type> swap{1, 0};
    CHECK(relabel(lz.flat(), swap) == std::vector<element_type>(lz.flat().begin(), lz.flat().end()));
  }

  TEST_CASE("order limit") {
    CHECK_THROWS_AS(canonical_form(brandt_semigroup(3), false), OrderTooLarge);
  }
}
