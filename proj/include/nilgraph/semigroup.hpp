// Finite semigroups given by Cayley tables, and their substructures.

#ifndef NILGRAPH_SEMIGROUP_HPP_
#define NILGRAPH_SEMIGROUP_HPP_

#include <cstddef>      // for size_t
#include <cstdint>      // for uint32_t
#include <limits>       // for numeric_limits
#include <optional>     // for optional
#include <span>         // for span
#include <string>       // for string
#include <string_view>  // for string_view
#include <vector>       // for vector

namespace nilgraph {

  using element_type = std::uint32_t;

  //! A semigroup on the elements {0, ..., n - 1} given by its Cayley table.
  //!
  //! Entry (a, b) of the table is the product a*b, so rows are indexed by
  //! the left factor. A zero, when one exists, is an ordinary element.
  //! Instances are immutable after construction; every constructor runs
  //! the full associativity check.
  class FiniteSemigroup {
   public:
    //! Throws MalformedTable for a non-square table or an out-of-range
    //! entry, and NotAssociative for the first violating triple.
    explicit FiniteSemigroup(std::vector<std::vector<element_type>> const& rows,
                             std::vector<std::string> labels = {});

    //! As above, from a row-major flattening of length n * n.
    static FiniteSemigroup from_flat(std::size_t               n,
                                     std::vector<element_type> flat,
                                     std::vector<std::string>  labels = {});

    std::size_t size() const noexcept {
      return _n;
    }

    element_type product(element_type a, element_type b) const noexcept {
      return _table[a * _n + b];
    }

    std::span<element_type const> row(element_type a) const noexcept {
      return {_table.data() + a * _n, _n};
    }

    //! Row-major flattening of the table.
    std::span<element_type const> flat() const noexcept {
      return _table;
    }

    std::vector<std::vector<element_type>> rows() const;

    bool has_labels() const noexcept {
      return !_labels.empty();
    }

    //! The display label of \p a; its decimal index when unlabelled.
    std::string label(element_type a) const;

    std::vector<std::string> const& labels() const noexcept {
      return _labels;
    }

    std::optional<element_type> find_label(std::string_view lbl) const;

    //! Like find_label but throws std::out_of_range when absent.
    element_type at_label(std::string_view lbl) const;

    //! Same table, labels are ignored.
    friend bool operator==(FiniteSemigroup const& x,
                           FiniteSemigroup const& y) noexcept {
      return x._n == y._n && x._table == y._table;
    }

   private:
    FiniteSemigroup(std::size_t               n,
                    std::vector<element_type> flat,
                    std::vector<std::string>  labels,
                    bool                      check);

    std::size_t               _n;
    std::vector<element_type> _table;
    std::vector<std::string>  _labels;
  };

  //! An element of S^1: either the formal identity or an element of S.
  class Multiplier {
   public:
    static constexpr Multiplier identity() noexcept {
      return Multiplier();
    }

    constexpr explicit Multiplier(element_type e) noexcept : _value(e) {}

    constexpr bool is_identity() const noexcept {
      return _value == IDENTITY;
    }

    //! Only meaningful when !is_identity().
    constexpr element_type element() const noexcept {
      return _value;
    }

    friend constexpr bool operator==(Multiplier, Multiplier) noexcept
        = default;

   private:
    static constexpr element_type IDENTITY
        = std::numeric_limits<element_type>::max();

    constexpr Multiplier() noexcept : _value(IDENTITY) {}

    element_type _value;
  };

  //! Display form of a multiplier: "1" for the formal identity.
  std::string to_string(FiniteSemigroup const& s, Multiplier w);

  //! The product a*w*b, with the formal identity skipped.
  inline element_type sandwich(FiniteSemigroup const& s,
                               element_type           a,
                               Multiplier             w,
                               element_type           b) noexcept {
    return w.is_identity() ? s.product(a, b)
                           : s.product(s.product(a, w.element()), b);
  }

  //! A subset of the elements of a semigroup.
  //!
  //! The closed flag records whether the subset is closed under the
  //! multiplication of the semigroup it was built from.
  class ElementSubset {
   public:
    ElementSubset(FiniteSemigroup const& s, std::vector<element_type> members);

    std::size_t parent_size() const noexcept {
      return _flags.size();
    }

    bool contains(element_type e) const noexcept {
      return e < _flags.size() && _flags[e];
    }

    //! Members in increasing order.
    std::vector<element_type> const& elements() const noexcept {
      return _members;
    }

    std::size_t size() const noexcept {
      return _members.size();
    }

    bool empty() const noexcept {
      return _members.empty();
    }

    bool is_closed() const noexcept {
      return _closed;
    }

    bool is_subset_of(ElementSubset const& other) const noexcept;

    friend bool operator==(ElementSubset const& x,
                           ElementSubset const& y) noexcept {
      return x._flags == y._flags;
    }

   private:
    std::vector<bool>         _flags;
    std::vector<element_type> _members;
    bool                      _closed;
  };

  //! The subsemigroup generated by a set, as a subset of the parent and as a
  //! semigroup in its own right.
  //!
  //! Elements of \c semigroup are numbered in breadth-first discovery order,
  //! generators first in the order given; \c to_parent maps them back.
  struct Subsemigroup {
    ElementSubset             subset;
    FiniteSemigroup           semigroup;
    std::vector<element_type> to_parent;
  };

  //! Throws std::invalid_argument when \p gens is empty.
  Subsemigroup closure(FiniteSemigroup const&          s,
                       std::span<element_type const> gens);

  //! The opposite semigroup, with product a.b = b*a (the transposed table).
  FiniteSemigroup opposite(FiniteSemigroup const& s);

  ////////////////////////////////////////////////////////////////////////
  // Structural predicates
  ////////////////////////////////////////////////////////////////////////

  ElementSubset idempotents(FiniteSemigroup const& s);
  bool          is_band(FiniteSemigroup const& s);
  bool          is_commutative(FiniteSemigroup const& s);
  ElementSubset center(FiniteSemigroup const& s);

  //! A band satisfying xyx = x, equivalently M({e}, I, L; P).
  bool is_rectangular_band(FiniteSemigroup const& s);

  std::optional<element_type> zero(FiniteSemigroup const& s);
  std::optional<element_type> identity(FiniteSemigroup const& s);

  //! The principal two-sided ideal S^1 a S^1.
  ElementSubset principal_ideal(FiniteSemigroup const& s, element_type a);

  bool is_simple(FiniteSemigroup const& s);

  //! A finite simple semigroup is completely simple, so this is is_simple.
  bool is_completely_simple(FiniteSemigroup const& s);

  //! S has a zero and every product is that zero.
  bool is_null(FiniteSemigroup const& s);

  //! The b with aba = a and bab = b.
  ElementSubset inverses_of(FiniteSemigroup const& s, element_type a);
  bool          is_regular(FiniteSemigroup const& s);
  bool          is_inverse_semigroup(FiniteSemigroup const& s);

  //! Green's J-relation of a finite semigroup.
  struct GreensJDecomposition {
    //! class_of[a] is the index in \c classes of the class containing a.
    std::vector<std::size_t> class_of;
    //! Classes ordered by their least element; each class is sorted.
    std::vector<std::vector<element_type>> classes;
    //! below[i][j] holds iff the ideal of class i is strictly contained in
    //! the ideal of class j.
    std::vector<std::vector<bool>> below;

    bool same_class(element_type a, element_type b) const {
      return class_of[a] == class_of[b];
    }
  };

  GreensJDecomposition j_classes(FiniteSemigroup const& s);

}  // namespace nilgraph

#endif  // NILGRAPH_SEMIGROUP_HPP_
