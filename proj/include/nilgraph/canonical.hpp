// Canonical forms of Cayley tables under relabelling.

#ifndef NILGRAPH_CANONICAL_HPP_
#define NILGRAPH_CANONICAL_HPP_

#include <compare>      // for strong_ordering
#include <cstddef>      // for size_t
#include <span>         // for span
#include <string>       // for string
#include <string_view>  // for string_view
#include <vector>       // for vector

#include "nilgraph/semigroup.hpp"  // for FiniteSemigroup, element_type

namespace nilgraph {

  //! The symmetry group a canonical form is taken under: relabellings only,
  //! or relabellings together with transposition of the table.
  enum class Modulo { iso, iso_anti };

  std::string to_string(Modulo m);

  //! Accepts "iso" and "isoanti" (also "iso_anti", "iso-anti").
  //! Throws std::invalid_argument otherwise.
  Modulo parse_modulo(std::string_view text);

  //! The lexicographically least row-major flattening in the orbit of a
  //! table.
  struct CanonicalForm {
    std::size_t               order;
    std::vector<element_type> flat;
    Modulo                    modulo;

    friend bool operator==(CanonicalForm const&,
                           CanonicalForm const&) = default;
    friend std::strong_ordering operator<=>(CanonicalForm const& x,
                                            CanonicalForm const& y) {
      if (auto c = x.order <=> y.order; c != 0) {
        return c;
      }
      return x.flat <=> y.flat;
    }
  };

  //! Largest order accepted by canonical_form.
  inline constexpr std::size_t CANONICAL_FORM_MAX_ORDER = 8;

  //! Brute-force minimisation over all n! relabellings (and their
  //! transposes when \p include_anti). Throws OrderTooLarge above
  //! CANONICAL_FORM_MAX_ORDER.
  CanonicalForm canonical_form(FiniteSemigroup const& s, bool include_anti);

  bool are_isomorphic(FiniteSemigroup const& s, FiniteSemigroup const& t);
  bool are_anti_isomorphic(FiniteSemigroup const& s, FiniteSemigroup const& t);

  //! Relabel an n x n row-major table by the permutation \p perm, giving the
  //! table of x -> perm[x].
  std::vector<element_type> relabel(std::span<element_type const> flat,
                                    std::span<element_type const> perm);

  //! True iff no relabelling (nor, when \p include_anti, relabelled
  //! transpose) of the table is lexicographically smaller.
  bool is_canonical(std::span<element_type const> flat,
                    std::size_t                   n,
                    bool                          include_anti);

}  // namespace nilgraph

#endif  // NILGRAPH_CANONICAL_HPP_
