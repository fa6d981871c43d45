#include <numeric>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"

#include "nilgraph/constructions.hpp"
#include "nilgraph/enumerate.hpp"
#include "nilgraph/error.hpp"
#include "nilgraph/nilpotency.hpp"
#include "nilgraph/theorems.hpp"

using namespace nilgraph;
using test::at;

namespace {
  Multiplier const ONE = Multiplier::identity();

  std::vector<FiniteSemigroup> corpus_up_to_4() {
    std::vector<FiniteSemigroup> out;
    for (std::size_t n = 1; n <= 3; ++n) {
      auto const all = test::all_labelled(n);
      out.insert(out.end(), all.begin(), all.end());
    }
    auto const four = all_semigroups(4, Modulo::iso);
    out.insert(out.end(), four.begin(), four.end());
    return out;
  }
}  // namespace

TEST_SUITE("nilpotency") {
  TEST_CASE("lambda_rho") {
    auto const f = f7();
    CHECK(lambda_rho(f, 0, 1, {}) == std::pair<element_type, element_type>{0, 1});

    auto const              rb = rectangular_band(2, 2);
    std::vector<Multiplier> ones{ONE, ONE};
    auto const a = at(rb, "e_12"), b = at(rb, "e_21");
    CHECK(lambda_rho(rb, a, b, ones) == std::pair{a, b});

    auto const              s = paper_example_s18();
    std::vector<Multiplier> wv{Multiplier(at(s, "w")), Multiplier(at(s, "v"))};
    CHECK(lambda_rho(s, at(s, "e_31"), at(s, "e_42"), wv)
          == std::pair{at(s, "e_31"), at(s, "e_42")});
    // e_31 w = e_34 and e_34 e_42 = e_32.
    std::vector<Multiplier> w{Multiplier(at(s, "w"))};
    CHECK(lambda_rho(s, at(s, "e_31"), at(s, "e_42"), w).first == at(s, "e_32"));
  }

  TEST_CASE("pair transition system") {
    auto const                 f = f7();
    PairTransitionSystem const pts(f);
    CHECK(pts.state_count() == 42);
    CHECK(pts.multiplier_count() == 8);
    for (std::size_t st = 0; st < pts.state_count(); ++st) {
      auto const [a, b] = pts.pair(st);
      CHECK(a != b);
      CHECK(pts.state(a, b) == st);
      for (std::size_t k = 0; k < pts.multiplier_count(); ++k) {
        auto const w  = pts.multiplier(k);
        auto const l  = sandwich(f, a, w, b);
        auto const r  = sandwich(f, b, w, a);
        auto const nx = pts.successor(st, k);
        if (l == r) {
          CHECK(nx == PairTransitionSystem::DIAGONAL);
        } else {
          CHECK(nx == pts.state(l, r));
        }
      }
    }
  }

  TEST_CASE("nilpotency of named semigroups") {
    CHECK(is_malcev_nilpotent(chain_semilattice(4)));
    CHECK(is_malcev_nilpotent(cyclic_group(5)));
    CHECK_FALSE(is_malcev_nilpotent(f7()));
    CHECK(is_malcev_nilpotent(brandt_semigroup(2)));
    CHECK_FALSE(is_malcev_nilpotent(paper_example_s18()));

    auto const lz = left_zero_semigroup(2);
    CHECK_FALSE(is_malcev_nilpotent(lz));
    auto const w = non_nilpotency_witness(lz);
    REQUIRE(w.has_value());
    CHECK(w->word.size() == 1);
    CHECK(lambda_rho(lz, w->x, w->y, w->word) == std::pair{w->x, w->y});
  }

  TEST_CASE("witnesses replay") {
    for (auto const& s : corpus_up_to_4()) {
      if (auto const w = non_nilpotency_witness(s)) {
        CHECK(w->x != w->y);
        CHECK_FALSE(w->word.empty());
        CHECK(lambda_rho(s, w->x, w->y, w->word) == std::pair{w->x, w->y});
      }
    }
    for (auto const& name : {"f7", "s18", "t19"}) {
      auto const s = fixture(name);
      auto const w = non_nilpotency_witness(s);
      REQUIRE(w.has_value());
      CHECK(lambda_rho(s, w->x, w->y, w->word) == std::pair{w->x, w->y});
    }
  }

  TEST_CASE("nilpotency class") {
    CHECK(nilpotency_class(FiniteSemigroup(test::Rows{{0}})) == 1u);
    CHECK(nilpotency_class(chain_semilattice(3)) == 1u);
    CHECK_FALSE(nilpotency_class(f7()).has_value());
    auto const b2 = brandt_semigroup(2);
    CHECK(nilpotency_class(b2) == 3u);
    CHECK(oracle::literal_class(test::table_of(b2), 4) == 3u);
  }

  TEST_CASE("nilpotency class agrees with literal word enumeration up to order 3") {
    for (std::size_t n = 1; n <= 3; ++n) {
      for (auto const& t : oracle::all_associative_tables(n)) {
        auto const s     = test::from_table(t);
        auto const c     = nilpotency_class(s);
        auto const limit = n <= 2 ? 6 : 5;
        if (c) {
          REQUIRE(*c <= static_cast<std::size_t>(limit));
        }
        CHECK(oracle::literal_class(t, limit) == c);
      }
    }
  }

  TEST_CASE("class 1 exactly for commutative semigroups") {
    for (auto const& s : corpus_up_to_4()) {
      CHECK((nilpotency_class(s) == 1u) == is_commutative(s));
    }
  }

  TEST_CASE("brute force agrees on the order 3 tables and order 4 samples") {
    for (std::size_t n = 1; n <= 3; ++n) {
      for (auto const& s : test::all_labelled(n)) {
        CHECK(is_malcev_nilpotent(s) == is_nilpotent_bruteforce(s));
      }
    }
    auto const four = all_semigroups(4, Modulo::iso);
    for (auto const& s : sample_relabelled(four, 200, 7)) {
      CHECK(is_malcev_nilpotent(s) == is_nilpotent_bruteforce(s));
    }
    CHECK(is_nilpotent_bruteforce(chain_semilattice(3), 1));
    CHECK_FALSE(is_nilpotent_bruteforce(left_zero_semigroup(2)));
  }

  TEST_CASE("a non-nilpotent subsemigroup forces non-nilpotency") {
    for (auto const& s : all_semigroups(4, Modulo::iso)) {
      for (element_type x = 0; x < 4; ++x) {
        for (element_type y = x + 1; y < 4; ++y) {
          if (!is_two_gen_nilpotent(s, x, y)) {
            CHECK_FALSE(is_malcev_nilpotent(s));
          }
        }
      }
    }
  }

  TEST_CASE("two generated subsemigroups") {
    auto const f = f7();
    CHECK(is_two_gen_nilpotent(f, at(f, "u"), at(f, "u")));
    CHECK_FALSE(is_two_gen_nilpotent(f, at(f, "u"), at(f, "e_11")));
    auto const s = paper_example_s18();
    for (element_type x = 0; x < s.size(); ++x) {
      for (element_type y = 0; y < s.size(); ++y) {
        CHECK(is_two_gen_nilpotent(s, x, y));
      }
    }
  }

  TEST_CASE("lower edges") {
    auto const rb = rectangular_band(2, 2);
    for (element_type x = 0; x < rb.size(); ++x) {
      for (element_type y = 0; y < rb.size(); ++y) {
        if (x != y) {
          CHECK(lower_edge(rb, x, y));
        }
      }
    }
    auto const f = f7();
    CHECK_FALSE(lower_edge(f, at(f, "u"), at(f, "e_11")));
    auto const c = chain_semilattice(3);
    CHECK_FALSE(lower_edge(c, 0, 2));
    CHECK_THROWS_AS(lower_edge(c, 1, 1), DistinctnessRequired);
  }

  TEST_CASE("positively Engel") {
    CHECK(is_positively_engel(chain_semilattice(3)));
    CHECK(is_positively_engel(cyclic_group(4)));
    CHECK_FALSE(is_positively_engel(f7()));
    CHECK(is_positively_engel(paper_example_s18()));
    auto const lz = left_zero_semigroup(2);
    CHECK(engel_hitting_time(lz, 0, 0, ONE) == 0u);
    CHECK_FALSE(engel_hitting_time(lz, 0, 1, ONE).has_value());
    auto const w = positively_engel_witness(f7());
    REQUIRE(w.has_value());
    CHECK_FALSE(engel_hitting_time(f7(), w->a, w->b, w->c).has_value());
  }

  TEST_CASE("positively Engel agrees with direct simulation") {
    for (auto const& s : corpus_up_to_4()) {
      CHECK(is_positively_engel(s) == oracle::positively_engel(test::table_of(s)));
    }
    for (auto const& name : {"f7", "brandt2", "nil_not_closed"}) {
      auto const s = fixture(name);
      CHECK(is_positively_engel(s) == oracle::positively_engel(test::table_of(s)));
    }
  }

  TEST_CASE("Neumann-Taylor") {
    CHECK(is_neumann_taylor(chain_semilattice(3)));
    CHECK_FALSE(is_neumann_taylor(paper_example_t19()));
    CHECK(is_neumann_taylor(paper_example_s18()));
    CHECK_FALSE(is_neumann_taylor(left_zero_semigroup(2)));
    for (auto const& s : corpus_up_to_4()) {
      CHECK(is_neumann_taylor(s) == oracle::neumann_taylor(test::table_of(s)));
    }
    for (auto const& name : {"f7", "s18", "t19", "brandt2"}) {
      auto const s = fixture(name);
      CHECK(is_neumann_taylor(s) == oracle::neumann_taylor(test::table_of(s)));
    }
  }

  TEST_CASE("PE and NT are invariant under relabelling") {
    auto const four = all_semigroups(4, Modulo::iso);
    auto const sample = sample_relabelled(four, 100, 11);
    for (auto const& s : sample) {
      bool found = false;
      for (auto const& t : four) {
        if (canonical_form(s, false) == canonical_form(t, false)) {
          CHECK(is_positively_engel(s) == is_positively_engel(t));
          CHECK(is_neumann_taylor(s) == is_neumann_taylor(t));
          found = true;
          break;
        }
      }
      CHECK(found);
    }
  }

  TEST_CASE("nilpotentizers") {
    auto const t = star_semigroup(3);
    CHECK(nilpotentizer(t, at(t, "x0")).elements()
          == std::vector<element_type>{at(t, "x0")});

    auto const s = fixture("nil_not_closed");
    CHECK_FALSE(is_n_semigroup(s));
    auto const n11 = nilpotentizer(s, at(s, "1_11"));
    CHECK_FALSE(n11.is_closed());
    CHECK(n11.contains(at(s, "1_12")));
    CHECK(n11.contains(at(s, "1_23")));
    CHECK_FALSE(n11.contains(s.product(at(s, "1_12"), at(s, "1_23"))));

    auto const c = chain_semilattice(4);
    CHECK(nil_of_semigroup(c).size() == 4);
    CHECK(is_n_semigroup(c));
  }
}
