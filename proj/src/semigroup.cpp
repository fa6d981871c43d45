#include "nilgraph/semigroup.hpp"

#include <algorithm>  // for all_of, sort, unique
#include <stdexcept>  // for invalid_argument, out_of_range
#include <utility>    // for move

#include "nilgraph/error.hpp"  // for MalformedTable, NotAssociative

namespace nilgraph {

  ////////////////////////////////////////////////////////////////////////
  // FiniteSemigroup
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::vector<element_type>
    flatten(std::vector<std::vector<element_type>> const& rows) {
      std::size_t const         n = rows.size();
      std::vector<element_type> flat;
      flat.reserve(n * n);
      for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n) {
          throw MalformedTable("row " + std::to_string(i) + " has "
                               + std::to_string(rows[i].size())
                               + " entries, expected " + std::to_string(n));
        }
        flat.insert(flat.end(), rows[i].begin(), rows[i].end());
      }
      return flat;
    }
  }  // namespace

  FiniteSemigroup::FiniteSemigroup(
      std::vector<std::vector<element_type>> const& rows,
      std::vector<std::string>                      labels)
      : FiniteSemigroup(rows.size(), flatten(rows), std::move(labels), true) {}

  FiniteSemigroup FiniteSemigroup::from_flat(std::size_t               n,
                                             std::vector<element_type> flat,
                                             std::vector<std::string> labels) {
    return FiniteSemigroup(n, std::move(flat), std::move(labels), true);
  }

  FiniteSemigroup::FiniteSemigroup(std::size_t               n,
                                   std::vector<element_type> flat,
                                   std::vector<std::string>  labels,
                                   bool                      check)
      : _n(n), _table(std::move(flat)), _labels(std::move(labels)) {
    if (!check) {
      return;
    }
    if (_n == 0) {
      throw MalformedTable("a semigroup must have at least one element");
    }
    if (_table.size() != _n * _n) {
      throw MalformedTable("expected " + std::to_string(_n * _n)
                           + " table entries, found "
                           + std::to_string(_table.size()));
    }
    for (std::size_t i = 0; i < _table.size(); ++i) {
      if (_table[i] >= _n) {
        throw MalformedTable("entry (" + std::to_string(i / _n) + ", "
                             + std::to_string(i % _n) + ") = "
                             + std::to_string(_table[i]) + " is out of range");
      }
    }
    if (!_labels.empty() && _labels.size() != _n) {
      throw MalformedTable("expected " + std::to_string(_n) + " labels, found "
                           + std::to_string(_labels.size()));
    }
    for (element_type a = 0; a < _n; ++a) {
      for (element_type b = 0; b < _n; ++b) {
        element_type const ab = product(a, b);
        for (element_type c = 0; c < _n; ++c) {
          if (product(ab, c) != product(a, product(b, c))) {
            throw NotAssociative(a, b, c);
          }
        }
      }
    }
  }

  std::vector<std::vector<element_type>> FiniteSemigroup::rows() const {
    std::vector<std::vector<element_type>> result;
    for (element_type a = 0; a < _n; ++a) {
      auto r = row(a);
      result.emplace_back(r.begin(), r.end());
    }
    return result;
  }

  std::string FiniteSemigroup::label(element_type a) const {
    return _labels.empty() ? std::to_string(a) : _labels[a];
  }

  std::optional<element_type>
  FiniteSemigroup::find_label(std::string_view lbl) const {
    for (element_type a = 0; a < _n; ++a) {
      if (label(a) == lbl) {
        return a;
      }
    }
    return std::nullopt;
  }

  element_type FiniteSemigroup::at_label(std::string_view lbl) const {
    if (auto a = find_label(lbl)) {
      return *a;
    }
    throw std::out_of_range("no element labelled " + std::string(lbl));
  }

  std::string to_string(FiniteSemigroup const& s, Multiplier w) {
    return w.is_identity() ? std::string("1") : s.label(w.element());
  }

  ////////////////////////////////////////////////////////////////////////
  // ElementSubset and closure
  ////////////////////////////////////////////////////////////////////////

  ElementSubset::ElementSubset(FiniteSemigroup const&    s,
                               std::vector<element_type> members)
      : _flags(s.size(), false), _members(std::move(members)), _closed(true) {
    std::sort(_members.begin(), _members.end());
    _members.erase(std::unique(_members.begin(), _members.end()),
                   _members.end());
    for (auto e : _members) {
      if (e >= s.size()) {
        throw std::out_of_range("element " + std::to_string(e)
                                + " is not in the semigroup");
      }
      _flags[e] = true;
    }
    for (auto a : _members) {
      for (auto b : _members) {
        if (!_flags[s.product(a, b)]) {
          _closed = false;
          return;
        }
      }
    }
  }

  bool ElementSubset::is_subset_of(ElementSubset const& other) const noexcept {
    return std::all_of(_members.begin(), _members.end(), [&other](auto e) {
      return other.contains(e);
    });
  }

  Subsemigroup closure(FiniteSemigroup const&        s,
                       std::span<element_type const> gens) {
    if (gens.empty()) {
      throw std::invalid_argument("closure of an empty generating set");
    }
    std::vector<element_type> found;
    std::vector<element_type> position(s.size(), s.size());
    auto                      add = [&](element_type e) {
      if (position[e] == s.size()) {
        position[e] = found.size();
        found.push_back(e);
      }
    };
    for (auto g : gens) {
      add(g);
    }
    std::vector<element_type> const distinct_gens(found);
    // Every element is a word in the generators, so right multiplication by
    // generators reaches everything.
    for (std::size_t i = 0; i < found.size(); ++i) {
      for (auto g : distinct_gens) {
        add(s.product(found[i], g));
      }
    }
    std::size_t const         m = found.size();
    std::vector<element_type> flat(m * m);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        flat[i * m + j] = position[s.product(found[i], found[j])];
      }
    }
    std::vector<std::string> labels;
    if (s.has_labels()) {
      for (auto e : found) {
        labels.push_back(s.label(e));
      }
    }
    return Subsemigroup{ElementSubset(s, found),
                        FiniteSemigroup::from_flat(m, flat, labels),
                        found};
  }

  FiniteSemigroup opposite(FiniteSemigroup const& s) {
    std::size_t const         n = s.size();
    std::vector<element_type> flat(n * n);
    for (element_type a = 0; a < n; ++a) {
      for (element_type b = 0; b < n; ++b) {
        flat[a * n + b] = s.product(b, a);
      }
    }
    return FiniteSemigroup::from_flat(n, flat, s.labels());
  }

  ////////////////////////////////////////////////////////////////////////
  // Structural predicates
  ////////////////////////////////////////////////////////////////////////

  ElementSubset idempotents(FiniteSemigroup const& s) {
    std::vector<element_type> result;
    for (element_type a = 0; a < s.size(); ++a) {
      if (s.product(a, a) == a) {
        result.push_back(a);
      }
    }
    return ElementSubset(s, result);
  }

  bool is_band(FiniteSemigroup const& s) {
    return idempotents(s).size() == s.size();
  }

  bool is_commutative(FiniteSemigroup const& s) {
    for (element_type a = 0; a < s.size(); ++a) {
      for (element_type b = a + 1; b < s.size(); ++b) {
        if (s.product(a, b) != s.product(b, a)) {
          return false;
        }
      }
    }
    return true;
  }

  ElementSubset center(FiniteSemigroup const& s) {
    std::vector<element_type> result;
    for (element_type z = 0; z < s.size(); ++z) {
      bool central = true;
      for (element_type x = 0; x < s.size() && central; ++x) {
        central = s.product(z, x) == s.product(x, z);
      }
      if (central) {
        result.push_back(z);
      }
    }
    return ElementSubset(s, result);
  }

  bool is_rectangular_band(FiniteSemigroup const& s) {
    for (element_type x = 0; x < s.size(); ++x) {
      for (element_type y = 0; y < s.size(); ++y) {
        if (s.product(s.product(x, y), x) != x) {
          return false;
        }
      }
    }
    // xyx = x forces x^3 = x, and then x^2 = x^2 x x^2 = x^5 = x.
    return true;
  }

  std::optional<element_type> zero(FiniteSemigroup const& s) {
    for (element_type z = 0; z < s.size(); ++z) {
      bool is_zero = true;
      for (element_type x = 0; x < s.size() && is_zero; ++x) {
        is_zero = s.product(z, x) == z && s.product(x, z) == z;
      }
      if (is_zero) {
        return z;
      }
    }
    return std::nullopt;
  }

  std::optional<element_type> identity(FiniteSemigroup const& s) {
    for (element_type e = 0; e < s.size(); ++e) {
      bool is_id = true;
      for (element_type x = 0; x < s.size() && is_id; ++x) {
        is_id = s.product(e, x) == x && s.product(x, e) == x;
      }
      if (is_id) {
        return e;
      }
    }
    return std::nullopt;
  }

  ElementSubset principal_ideal(FiniteSemigroup const& s, element_type a) {
    std::vector<bool> in(s.size(), false);
    // S^1 a, then S^1 a S^1.
    std::vector<element_type> left{a};
    for (element_type x = 0; x < s.size(); ++x) {
      left.push_back(s.product(x, a));
    }
    for (auto l : left) {
      in[l] = true;
      for (element_type y = 0; y < s.size(); ++y) {
        in[s.product(l, y)] = true;
      }
    }
    std::vector<element_type> members;
    for (element_type x = 0; x < s.size(); ++x) {
      if (in[x]) {
        members.push_back(x);
      }
    }
    return ElementSubset(s, members);
  }

  bool is_simple(FiniteSemigroup const& s) {
    for (element_type a = 0; a < s.size(); ++a) {
      if (principal_ideal(s, a).size() != s.size()) {
        return false;
      }
    }
    return true;
  }

  bool is_completely_simple(FiniteSemigroup const& s) {
    // Every finite simple semigroup has a primitive idempotent, so for
    // finite inputs completely simple and simple coincide.
    return is_simple(s);
  }

  bool is_null(FiniteSemigroup const& s) {
    auto z = zero(s);
    if (!z) {
      return false;
    }
    return std::all_of(s.flat().begin(), s.flat().end(), [&z](auto x) {
      return x == *z;
    });
  }

  ElementSubset inverses_of(FiniteSemigroup const& s, element_type a) {
    std::vector<element_type> result;
    for (element_type b = 0; b < s.size(); ++b) {
      if (s.product(s.product(a, b), a) == a
          && s.product(s.product(b, a), b) == b) {
        result.push_back(b);
      }
    }
    return ElementSubset(s, result);
  }

  bool is_regular(FiniteSemigroup const& s) {
    for (element_type a = 0; a < s.size(); ++a) {
      if (inverses_of(s, a).empty()) {
        return false;
      }
    }
    return true;
  }

  bool is_inverse_semigroup(FiniteSemigroup const& s) {
    for (element_type a = 0; a < s.size(); ++a) {
      if (inverses_of(s, a).size() != 1) {
        return false;
      }
    }
    return true;
  }

  GreensJDecomposition j_classes(FiniteSemigroup const& s) {
    std::vector<ElementSubset> ideals;
    ideals.reserve(s.size());
    for (element_type a = 0; a < s.size(); ++a) {
      ideals.push_back(principal_ideal(s, a));
    }
    GreensJDecomposition result;
    result.class_of.assign(s.size(), 0);
    std::vector<element_type> representative;
    for (element_type a = 0; a < s.size(); ++a) {
      std::size_t c = 0;
      while (c < representative.size() && !(ideals[representative[c]] == ideals[a])) {
        ++c;
      }
      if (c == representative.size()) {
        representative.push_back(a);
        result.classes.emplace_back();
      }
      result.class_of[a] = c;
      result.classes[c].push_back(a);
    }
    std::size_t const k = representative.size();
    result.below.assign(k, std::vector<bool>(k, false));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        auto const& lo = ideals[representative[i]];
        auto const& hi = ideals[representative[j]];
        result.below[i][j] = i != j && lo.is_subset_of(hi);
      }
    }
    return result;
  }

}  // namespace nilgraph
