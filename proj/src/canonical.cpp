#include "nilgraph/canonical.hpp"

#include <algorithm>  // for next_permutation
#include <numeric>    // for iota
#include <stdexcept>  // for invalid_argument

#include "nilgraph/error.hpp"  // for OrderTooLarge

namespace nilgraph {

  std::string to_string(Modulo m) {
    return m == Modulo::iso ? "iso" : "isoanti";
  }

  Modulo parse_modulo(std::string_view text) {
    if (text == "iso") {
      return Modulo::iso;
    }
    if (text == "isoanti" || text == "iso_anti" || text == "iso-anti") {
      return Modulo::iso_anti;
    }
    throw std::invalid_argument("unknown modulus \"" + std::string(text)
                                + "\", expected iso or isoanti");
  }

  std::vector<element_type> relabel(std::span<element_type const> flat,
                                    std::span<element_type const> perm) {
    std::size_t const         n = perm.size();
    std::vector<element_type> result(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        result[perm[a] * n + perm[b]] = perm[flat[a * n + b]];
      }
    }
    return result;
  }

  namespace {
    // Compares the relabelling of src under the inverse permutation inv
    // (cell (i, j) of the result is perm[src(inv[i], inv[j])]) with target,
    // stopping at the first difference. Negative means the relabelling is
    // smaller.
    int compare_relabelled(std::span<element_type const> src,
                           std::span<element_type const> perm,
                           std::span<element_type const> inv,
                           std::span<element_type const> target,
                           bool                          transpose) {
      std::size_t const n = perm.size();
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          std::size_t const a = transpose ? inv[j] : inv[i];
          std::size_t const b = transpose ? inv[i] : inv[j];
          element_type const v = perm[src[a * n + b]];
          element_type const t = target[i * n + j];
          if (v != t) {
            return v < t ? -1 : 1;
          }
        }
      }
      return 0;
    }

    void fill_relabelled(std::span<element_type const> src,
                         std::span<element_type const> perm,
                         std::span<element_type const> inv,
                         std::vector<element_type>&    out,
                         bool                          transpose) {
      std::size_t const n = perm.size();
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          std::size_t const a = transpose ? inv[j] : inv[i];
          std::size_t const b = transpose ? inv[i] : inv[j];
          out[i * n + j]      = perm[src[a * n + b]];
        }
      }
    }
  }  // namespace

  CanonicalForm canonical_form(FiniteSemigroup const& s, bool include_anti) {
    std::size_t const n = s.size();
    if (n > CANONICAL_FORM_MAX_ORDER) {
      throw OrderTooLarge("canonical_form is limited to order "
                          + std::to_string(CANONICAL_FORM_MAX_ORDER));
    }
    auto const                src = s.flat();
    std::vector<element_type> best(src.begin(), src.end());
    std::vector<element_type> perm(n), inv(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      for (std::size_t x = 0; x < n; ++x) {
        inv[perm[x]] = x;
      }
      for (bool transpose : {false, true}) {
        if (transpose && !include_anti) {
          break;
        }
        if (compare_relabelled(src, perm, inv, best, transpose) < 0) {
          fill_relabelled(src, perm, inv, best, transpose);
        }
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return CanonicalForm{
        n, std::move(best), include_anti ? Modulo::iso_anti : Modulo::iso};
  }

  bool is_canonical(std::span<element_type const> flat,
                    std::size_t                   n,
                    bool                          include_anti) {
    std::vector<element_type> perm(n), inv(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      for (std::size_t x = 0; x < n; ++x) {
        inv[perm[x]] = x;
      }
      if (compare_relabelled(flat, perm, inv, flat, false) < 0) {
        return false;
      }
      if (include_anti && compare_relabelled(flat, perm, inv, flat, true) < 0) {
        return false;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return true;
  }

  bool are_isomorphic(FiniteSemigroup const& s, FiniteSemigroup const& t) {
    return s.size() == t.size()
           && canonical_form(s, false) == canonical_form(t, false);
  }

  bool are_anti_isomorphic(FiniteSemigroup const& s, FiniteSemigroup const& t) {
    return s.size() == t.size()
           && canonical_form(s, false) == canonical_form(opposite(t), false);
  }

}  // namespace nilgraph
