#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"

#include "nilgraph/constructions.hpp"
#include "nilgraph/enumerate.hpp"
#include "nilgraph/graph.hpp"
#include "nilgraph/theorems.hpp"

using namespace nilgraph;

namespace {
  std::vector<FiniteSemigroup> labelled_up_to_3() {
    std::vector<FiniteSemigroup> out;
    for (std::size_t n = 1; n <= 3; ++n) {
      auto const all = test::all_labelled(n);
      out.insert(out.end(), all.begin(), all.end());
    }
    return out;
  }

  CheckResult run(std::string const& name, SemigroupProfile const& p) {
    return theorem_check(name).run(p);
  }
}  // namespace

TEST_SUITE("theorems") {
  TEST_CASE("check registry") {
    auto const& cs = theorem_checks();
    CHECK(cs.size() == 18);
    std::set<std::string> names;
    for (auto const& c : cs) {
      names.insert(c.name);
      CHECK_FALSE(c.statement.empty());
    }
    CHECK(names.size() == cs.size());
    CHECK(theorem_check("no_p4_order_4").name == "no_p4_order_4");
    CHECK_THROWS_AS(theorem_check("nope"), std::invalid_argument);
  }

  TEST_CASE("every check holds on all labelled tables up to order 3") {
    auto const r = verify_theorem_suite(labelled_up_to_3());
    CHECK(r.corpus_size == 1 + 8 + 113);
    for (auto const& c : r.checks) {
      CAPTURE(c.name);
      CHECK(c.failure_count == 0);
      CHECK(c.checked == r.corpus_size);
      CHECK(c.passed == c.applicable);
    }
    CHECK(r.ok());
  }

  TEST_CASE("every check holds on the named examples") {
    std::vector<FiniteSemigroup> corpus;
    for (auto const& name : fixture_names()) {
      corpus.push_back(fixture(name));
    }
    for (std::size_t n = 1; n <= 5; ++n) {
      corpus.push_back(star_semigroup(n));
    }
    auto const r = verify_theorem_suite(corpus);
    for (auto const& c : r.checks) {
      CAPTURE(c.name);
      CHECK(c.failure_count == 0);
    }
  }

  TEST_CASE("checks notice tampered graphs") {
    SemigroupProfile p(chain_semilattice(3));
    CHECK(run("edge_containment", p).violation == std::nullopt);
    p.lower.add_edge(0, 1);
    CHECK(run("edge_containment", p).violation.has_value());

    SemigroupProfile q(rectangular_band(2, 2));
    CHECK(run("complete_iff_rectangular_band", q).violation == std::nullopt);
    q.upper.remove_edge(0, 1);
    CHECK(run("complete_iff_rectangular_band", q).violation.has_value());

    SemigroupProfile f(f7());
    CHECK_FALSE(run("empty_upper_engel", f).applicable);
    f.upper = empty_graph(7);
    auto const r = run("empty_upper_engel", f);
    CHECK(r.applicable);
    CHECK(r.violation.has_value());

    SemigroupProfile s(star_semigroup(3));
    CHECK(run("no_p4_order_4", s).violation == std::nullopt);
    s.upper = path_graph(4);
    CHECK(run("no_p4_order_4", s).violation.has_value());
  }

  TEST_CASE("failures are tallied and capped") {
    TheoremCheck const always{"always", "fails",
                              [](SemigroupProfile const&) {
                                return CheckResult::fail("by design");
                              }};
    TheoremCheck const never{"never", "vacuous",
                             [](SemigroupProfile const&) { return CheckResult::vacuous(); }};
    auto const r = verify_theorem_suite(test::all_labelled(2), {always, never});
    CHECK_FALSE(r.ok());
    REQUIRE(r.checks.size() == 2);
    CHECK(r.checks[0].failure_count == 8);
    CHECK(r.checks[0].failures.size() == MAX_RECORDED_FAILURES);
    CHECK(r.checks[0].failures[0].witness == "by design");
    CHECK_FALSE(r.checks[0].failures[0].table.empty());
    CHECK(r.checks[0].passed == 0);
    CHECK(r.checks[1].applicable == 0);
    CHECK(r.checks[1].passed == 0);
    CHECK(r.checks[1].checked == 8);
  }

  TEST_CASE("upper graph census at order 4") {
    auto const census = upper_graph_census(4);
    std::size_t total = 0;
    for (auto const& [key, n] : census) {
      total += n;
    }
    CHECK(total == 126);
    CHECK(census.size() == 11);
    CHECK(census.at(graph_canonical_key(path_graph(4))) == 0);
    CHECK(census.at(graph_canonical_key(complete_graph(4))) > 0);
    CHECK(census.at(graph_canonical_key(empty_graph(4))) > 0);
  }

  TEST_CASE("relabelled samples are reproducible") {
    auto const three = all_semigroups(3, Modulo::iso);
    auto const a     = sample_relabelled(three, 20, 5);
    auto const b     = sample_relabelled(three, 20, 5);
    CHECK(a == b);
    CHECK(a.size() == 20);
  }

  TEST_CASE("fixture checks all pass") {
    for (auto const& item : fixture_checks()) {
      CAPTURE(item.name);
      CAPTURE(item.detail);
      CHECK(item.status == ItemStatus::pass);
    }
  }

  TEST_CASE("fast verification passes") {
    auto const r = verify_paper(VerifyLevel::fast);
    for (auto const& item : r.items) {
      CAPTURE(item.name);
      CAPTURE(item.detail);
      CHECK(item.status != ItemStatus::fail);
    }
    CHECK(r.ok());
    CHECK(r.seed == DEFAULT_SEED);
    CHECK(r.suite_orders == std::vector<std::size_t>{1, 2, 3, 4});
    CHECK(parse_verify_level("full") == VerifyLevel::full);
    CHECK_THROWS_AS(parse_verify_level("slow"), std::invalid_argument);
  }
}
