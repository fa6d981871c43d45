#ifndef NILGRAPH_TESTS_HELPERS_HPP_
#define NILGRAPH_TESTS_HELPERS_HPP_

#include <string>  // for string
#include <vector>  // for vector

#include "nilgraph/semigroup.hpp"

#include "../oracles.hpp"

namespace test {

  using Rows = std::vector<std::vector<nilgraph::element_type>>;

  inline oracle::Table table_of(nilgraph::FiniteSemigroup const& s) {
    return {s.flat().begin(), s.flat().end()};
  }

  inline nilgraph::FiniteSemigroup from_table(oracle::Table const& t) {
    return nilgraph::FiniteSemigroup::from_flat(oracle::order_of(t), t);
  }

  inline nilgraph::element_type at(nilgraph::FiniteSemigroup const& s,
                                   std::string const&               label) {
    return s.at_label(label);
  }

  inline std::vector<nilgraph::FiniteSemigroup> all_labelled(std::size_t n) {
    std::vector<nilgraph::FiniteSemigroup> out;
    for (auto const& t : oracle::all_associative_tables(n)) {
      out.push_back(from_table(t));
    }
    return out;
  }

}  // namespace test

#endif  // NILGRAPH_TESTS_HELPERS_HPP_
