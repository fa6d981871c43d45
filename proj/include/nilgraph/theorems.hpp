// Structural statements about the three graphs, checked one semigroup at a
// time, and the corpus-wide verification suite built on them.

#ifndef NILGRAPH_THEOREMS_HPP_
#define NILGRAPH_THEOREMS_HPP_

#include <cstddef>     // for size_t
#include <cstdint>     // for uint64_t
#include <functional>  // for function
#include <map>         // for map
#include <optional>    // for optional
#include <string>      // for string
#include <vector>      // for vector

#include "nilgraph/graph.hpp"      // for SimpleGraph
#include "nilgraph/semigroup.hpp"  // for FiniteSemigroup

namespace nilgraph {

  //! A semigroup together with its three graphs, computed once.
  struct SemigroupProfile {
    explicit SemigroupProfile(FiniteSemigroup s);

    FiniteSemigroup semigroup;
    SimpleGraph     upper;
    SimpleGraph     lower;
    SimpleGraph     noncommuting;
  };

  //! The outcome of one check on one semigroup. A check whose hypothesis
  //! does not hold is inapplicable and passes vacuously.
  struct CheckResult {
    bool                       applicable = true;
    std::optional<std::string> violation;

    static CheckResult vacuous() {
      return {false, std::nullopt};
    }
    static CheckResult pass() {
      return {true, std::nullopt};
    }
    static CheckResult fail(std::string witness) {
      return {true, std::move(witness)};
    }
  };

  struct TheoremCheck {
    std::string                                          name;
    std::string                                          statement;
    std::function<CheckResult(SemigroupProfile const&)> run;
  };

  //! Every check, in a fixed order:
  //!   edge_containment, complete_iff_rectangular_band,
  //!   totally_connected_idempotent, band_upper_equals_noncommuting,
  //!   band_complete_components_subsemigroups, empty_upper_engel,
  //!   empty_upper_unique_inverses, nilpotent_engel_neumann_taylor,
  //!   lower_components_in_j_class, lower_connected_simple,
  //!   prime_order_lower_connected_complete, no_isolated_cyclic_component,
  //!   complete_components_band_chain, band_complete_components_semilattice,
  //!   nilpotentizer_center, no_p4_order_4, no_cycle_order_ge_5,
  //!   small_order_n_semigroup.
  std::vector<TheoremCheck> const& theorem_checks();

  //! Throws std::invalid_argument for an unknown name.
  TheoremCheck const& theorem_check(std::string const& name);

  struct CheckFailure {
    std::string table;  // Cayley-table text
    std::string witness;
  };

  struct CheckTally {
    std::string               name;
    std::string               statement;
    std::size_t               checked    = 0;
    std::size_t               applicable = 0;
    std::size_t               passed     = 0;
    std::vector<CheckFailure> failures;  // at most MAX_RECORDED_FAILURES
    std::size_t               failure_count = 0;
  };

  inline constexpr std::size_t MAX_RECORDED_FAILURES = 5;

  struct SuiteReport {
    std::size_t             corpus_size = 0;
    std::vector<CheckTally> checks;

    bool ok() const;
    void add(SemigroupProfile const& p, std::vector<TheoremCheck> const& cs);
  };

  //! Runs every check on every member of the corpus.
  SuiteReport verify_theorem_suite(std::vector<FiniteSemigroup> const& corpus,
                                   std::vector<TheoremCheck> const& checks
                                   = theorem_checks());

  //! For each isomorphism class of graphs on n vertices (as given by
  //! all_graphs_on), the number of semigroups of order n in the iso+anti
  //! corpus with that upper graph, keyed by graph_canonical_key.
  std::map<std::string, std::size_t> upper_graph_census(std::size_t n,
                                                        std::size_t jobs = 1);

  //! A semigroup of order 4 sampled from the labelled corpus: a uniformly
  //! chosen class, relabelled by a uniformly chosen permutation.
  std::vector<FiniteSemigroup> sample_relabelled(
      std::vector<FiniteSemigroup> const& classes,
      std::size_t                         count,
      std::uint64_t                       seed);

  ////////////////////////////////////////////////////////////////////////
  // Verification driver
  ////////////////////////////////////////////////////////////////////////

  enum class VerifyLevel { fast, full };
  VerifyLevel parse_verify_level(std::string const& text);

  enum class ItemStatus { pass, fail, skipped };
  std::string to_string(ItemStatus s);

  struct VerifyItem {
    std::string name;
    ItemStatus  status;
    std::string detail;
  };

  struct VerifyReport {
    VerifyLevel                level;
    std::uint64_t              seed;
    std::vector<VerifyItem>    items;
    std::vector<SuiteReport>   suites;  // one per corpus order
    std::vector<std::size_t>   suite_orders;

    bool ok() const;
  };

  inline constexpr std::uint64_t DEFAULT_SEED = 20240229;

  //! fast: the named examples, the enumeration counts up to order 4, the
  //! P4 census, the nilpotency cross-check and the theorem suite up to order
  //! 4. full adds the order-5 suite, which includes the C5 check.
  VerifyReport verify_paper(VerifyLevel   level,
                            std::uint64_t seed = DEFAULT_SEED,
                            std::size_t   jobs = 1);

  //! Named fixture checks: the examples with a stated outcome.
  std::vector<VerifyItem> fixture_checks();

}  // namespace nilgraph

#endif  // NILGRAPH_THEOREMS_HPP_
