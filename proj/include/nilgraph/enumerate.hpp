// Exhaustive enumeration of small semigroups.

#ifndef NILGRAPH_ENUMERATE_HPP_
#define NILGRAPH_ENUMERATE_HPP_

#include <cstddef>     // for size_t
#include <functional>  // for function
#include <optional>    // for optional
#include <vector>      // for vector

#include "nilgraph/canonical.hpp"  // for Modulo
#include "nilgraph/graph.hpp"      // for SimpleGraph
#include "nilgraph/semigroup.hpp"  // for FiniteSemigroup, element_type

namespace nilgraph {

  //! Largest order enumerated without EnumerationOptions::allow_order_6.
  inline constexpr std::size_t ENUMERATION_MAX_ORDER = 5;

  struct EnumerationOptions {
    //! Worker threads; 0 means one per hardware thread.
    std::size_t jobs = 1;
    //! Permit n = 6, which takes a long time.
    bool allow_order_6 = false;
    //! Emit every associative table instead of one per class.
    bool all_tables = false;
  };

  //! A fixed first row of the table. The partitions for order n are all the
  //! n^n rows in lexicographic order; each table belongs to exactly one.
  struct SearchPartition {
    std::vector<element_type> first_row;
  };

  std::vector<SearchPartition> search_partitions(std::size_t n);

  //! Called once per emitted table, in order. Returning false stops the
  //! enumeration.
  using SemigroupVisitor = std::function<bool(FiniteSemigroup const&)>;

  //! Backtracks over the cells in row-major order, rejecting a partial table
  //! as soon as a fully defined triple fails associativity, and emits each
  //! completed table that is the least in its orbit under \p modulo. The
  //! stream is therefore sorted by canonical flat table, for any number of
  //! jobs. Throws OrderTooLarge for n > 5 (n > 6 with allow_order_6), and
  //! std::invalid_argument for n = 0.
  void enumerate_semigroups(std::size_t               n,
                            Modulo                    modulo,
                            SemigroupVisitor const&   visitor,
                            EnumerationOptions const& options = {});

  //! The tables found in one partition, in stream order.
  std::vector<FiniteSemigroup> enumerate_partition(std::size_t            n,
                                                   Modulo                 modulo,
                                                   SearchPartition const& part,
                                                   bool all_tables = false);

  std::vector<FiniteSemigroup> all_semigroups(std::size_t               n,
                                              Modulo                    modulo,
                                              EnumerationOptions const& options
                                              = {});

  std::size_t count_semigroups(std::size_t               n,
                               Modulo                    modulo,
                               EnumerationOptions const& options = {});

  //! The first semigroup of order \p n in the stream whose upper
  //! non-nilpotent graph is isomorphic to \p g. The iso+anti stream is used:
  //! the graph of the opposite semigroup is the same graph. Throws
  //! std::invalid_argument when g.order() != n and OrderTooLarge for n > 5.
  std::optional<FiniteSemigroup> realizability_search(SimpleGraph const& g,
                                                      std::size_t        n,
                                                      std::size_t jobs = 1);

}  // namespace nilgraph

#endif  // NILGRAPH_ENUMERATE_HPP_
