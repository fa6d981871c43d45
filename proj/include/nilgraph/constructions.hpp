// Builders for the semigroup families used throughout the library and its
// tests. Every builder returns a table that has passed the associativity
// check.

#ifndef NILGRAPH_CONSTRUCTIONS_HPP_
#define NILGRAPH_CONSTRUCTIONS_HPP_

#include <cstddef>      // for size_t
#include <optional>     // for optional
#include <span>         // for span
#include <string>       // for string
#include <string_view>  // for string_view
#include <vector>       // for vector

#include "nilgraph/graph.hpp"      // for SimpleGraph
#include "nilgraph/semigroup.hpp"  // for FiniteSemigroup

namespace nilgraph {

  //! A sandwich matrix entry: a group element, or nullopt for the zero.
  using SandwichEntry = std::optional<element_type>;

  //! The data of M^0(G, I, L; P), or of M(G, I, L; P) when \c with_zero is
  //! false.
  struct ReesMatrixDescriptor {
    FiniteSemigroup group;
    std::size_t     rows;  // |I|
    std::size_t     cols;  // |L|
    //! |L| x |I|: sandwich[l][i] is p_{l,i}.
    std::vector<std::vector<SandwichEntry>> sandwich;
    bool                                    with_zero = true;
    //! Reject a sandwich matrix with a zero row or column.
    bool require_regular = false;
  };

  //! Elements g_{i,l} are numbered row-major (i, then l, then g), followed
  //! by the zero when \c with_zero. The product is
  //! g_{i,l} h_{j,m} = (g p_{l,j} h)_{i,m}, or zero when p_{l,j} is zero.
  //! Labels have the form <g>_<i><l> with 1-based indices, and "theta".
  //!
  //! Throws NotAGroup when the group table is not a group, and
  //! NonRegularSandwich for a zero entry without \c with_zero or for a zero
  //! row or column when \c require_regular is set.
  FiniteSemigroup rees_matrix(ReesMatrixDescriptor const& d);

  //! The one-element group, with the given element label.
  FiniteSemigroup trivial_group(std::string label = "e");
  //! Z/n with elements 0, ..., n - 1.
  FiniteSemigroup cyclic_group(std::size_t n);

  //! M({e}, rows, cols; P) with every entry of P equal to e.
  FiniteSemigroup rectangular_band(std::size_t rows, std::size_t cols);
  FiniteSemigroup left_zero_semigroup(std::size_t n);
  FiniteSemigroup right_zero_semigroup(std::size_t n);
  //! Element 0 is the zero.
  FiniteSemigroup null_semigroup(std::size_t n);
  //! The semilattice of a chain: x_i x_j = x_min(i, j).
  FiniteSemigroup chain_semilattice(std::size_t n);

  //! M^0({e}, n, n; I_n), the Brandt semigroup.
  FiniteSemigroup brandt_semigroup(std::size_t n);

  //! F7 = M^0({e}, 2, 2; I_2) together with the cyclic group {1, u}, with
  //! 1 acting as identity on the Rees part, e_11 u = u e_22 = e_12 and
  //! e_22 u = u e_11 = e_21. Element order: e_11, e_12, e_21, e_22, theta,
  //! 1, u.
  FiniteSemigroup f7();

  //! M^0({e}, 4, 4; I_4) u {w, v}, 19 elements with theta: empty upper
  //! non-nilpotent graph (hence positively Engel) but not nilpotent.
  //! Element order: e_11, ..., e_44, theta, w, v.
  FiniteSemigroup paper_example_s18();

  //! paper_example_s18 with one more element q: empty upper
  //! non-nilpotent graph but not Neumann-Taylor. Element order as for
  //! paper_example_s18, then q.
  FiniteSemigroup paper_example_t19();

  //! The trivial total ideal extension T < S: the disjoint union of \p top
  //! and \p ideal (top elements first) in which s t = t s = s for s in the
  //! ideal and t in the top.
  FiniteSemigroup trivial_total_ideal_extension(FiniteSemigroup const& top,
                                                FiniteSemigroup const& ideal);

  //! S_1 < S_2 < ... < S_k, folded from the left, so each part is an ideal
  //! of the union with everything before it. Throws std::invalid_argument
  //! for an empty list.
  FiniteSemigroup chain_extension(std::span<FiniteSemigroup const> parts);

  //! T_n = {x_0, ..., x_n} with x_0 x_i = x_0 and x_j x_i = x_1 for j != 0.
  //! Throws std::invalid_argument for n = 0.
  FiniteSemigroup star_semigroup(std::size_t n);

  //! A small table together with the upper
  //! non-nilpotent graph it is stated to have.
  struct TableFixture {
    std::string     name;
    FiniteSemigroup semigroup;
    //! The stated upper graph, on the same labels as the semigroup.
    SimpleGraph expected_upper;
    //! When false, the statement is only up to isomorphism; when true the
    //! edges must agree exactly.
    bool exact;
    //! For p4_induced_5 only the subgraph induced on these labels is
    //! stated; empty means the whole graph.
    std::vector<std::string> induced_on;
  };

  //! The small transcribed Cayley tables: c3, c4, fig2_left, fig2_right,
  //! p4_induced_5 and isolated_b.
  std::vector<TableFixture> paper_table_fixtures();

  //! Names accepted by fixture(), in a fixed order.
  std::vector<std::string> fixture_names();

  //! Any named semigroup: the paper_table_fixtures, f7, s18, t19, brandt2
  //! (M^0({e}, 2, 2; I_2)), single_j_class (the M^0({1}, 4, 2; P) with one
  //! nonzero J-class), nil_not_closed (the M^0({1}, 2, 3; P) with a
  //! nilpotentizer that is not a subsemigroup), and the families
  //! star<n>, rect<r>x<c>, leftzero<n>, rightzero<n>, null<n>, chain<n>.
  //! "c3_table" and "c4_table" are accepted for c3 and c4.
  //! Throws std::invalid_argument for an unknown name.
  FiniteSemigroup fixture(std::string_view name);

}  // namespace nilgraph

#endif  // NILGRAPH_CONSTRUCTIONS_HPP_
