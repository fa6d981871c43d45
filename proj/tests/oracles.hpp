// Slow, direct implementations used to cross-check the library. None of
// them calls into the library's algorithms; they only read tables.

#ifndef NILGRAPH_TESTS_ORACLES_HPP_
#define NILGRAPH_TESTS_ORACLES_HPP_

#include <algorithm>  // for next_permutation, min
#include <cstddef>    // for size_t
#include <cstdint>    // for uint32_t
#include <numeric>    // for iota
#include <optional>   // for optional
#include <set>        // for set
#include <utility>    // for pair
#include <vector>     // for vector

namespace oracle {

  using Table = std::vector<std::uint32_t>;  // row-major n x n

  inline std::size_t order_of(Table const& t) {
    std::size_t n = 0;
    while (n * n < t.size()) {
      ++n;
    }
    return n;
  }

  inline bool associative(Table const& t, std::size_t n) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t c = 0; c < n; ++c) {
          if (t[t[a * n + b] * n + c] != t[a * n + t[b * n + c]]) {
            return false;
          }
        }
      }
    }
    return true;
  }

  //! Every associative n x n table, by running through all n^(n^2).
  inline std::vector<Table> all_associative_tables(std::size_t n) {
    std::vector<Table> out;
    Table              t(n * n, 0);
    while (true) {
      if (associative(t, n)) {
        out.push_back(t);
      }
      std::size_t i = t.size();
      while (i > 0 && t[i - 1] == n - 1) {
        t[--i] = 0;
      }
      if (i == 0) {
        return out;
      }
      ++t[i - 1];
    }
  }

  //! The least image of the table under x -> p[x] for all p, and of its
  //! transpose too when anti is set.
  inline Table orbit_minimum(Table const& t, std::size_t n, bool anti) {
    std::vector<std::uint32_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    Table best;
    do {
      for (int transpose = 0; transpose <= (anti ? 1 : 0); ++transpose) {
        Table img(n * n);
        for (std::size_t a = 0; a < n; ++a) {
          for (std::size_t b = 0; b < n; ++b) {
            auto const v = transpose ? t[b * n + a] : t[a * n + b];
            img[p[a] * n + p[b]] = p[v];
          }
        }
        if (best.empty() || img < best) {
          best = img;
        }
      }
    } while (std::next_permutation(p.begin(), p.end()));
    return best;
  }

  //! Canonical representatives of all semigroups of order n, sorted.
  inline std::vector<Table> naive_classes(std::size_t n, bool anti) {
    std::set<Table> classes;
    for (auto const& t : all_associative_tables(n)) {
      classes.insert(orbit_minimum(t, n, anti));
    }
    return {classes.begin(), classes.end()};
  }

  constexpr std::uint32_t ONE = 0xFFFFFFFF;  // the adjoined identity

  inline std::uint32_t mul(Table const& t, std::size_t n, std::uint32_t a,
                           std::uint32_t b) {
    if (a == ONE) {
      return b;
    }
    if (b == ONE) {
      return a;
    }
    return t[a * n + b];
  }

  //! Whether lambda_m = rho_m for every pair and every word of length m,
  //! trying each of the (n + 1)^m words in turn.
  inline bool identity_holds_literally(Table const& t, std::size_t m) {
    std::size_t const          n = order_of(t);
    std::vector<std::uint32_t> word(m, 0);
    auto letter = [n](std::uint32_t k) { return k == n ? ONE : k; };
    while (true) {
      for (std::uint32_t x = 0; x < n; ++x) {
        for (std::uint32_t y = 0; y < n; ++y) {
          std::uint32_t l = x, r = y;
          for (auto k : word) {
            auto const w  = letter(k);
            auto const nl = mul(t, n, mul(t, n, l, w), r);
            auto const nr = mul(t, n, mul(t, n, r, w), l);
            l             = nl;
            r             = nr;
          }
          if (l != r) {
            return false;
          }
        }
      }
      std::size_t i = m;
      while (i > 0 && word[i - 1] == n) {
        word[--i] = 0;
      }
      if (i == 0) {
        return true;
      }
      ++word[i - 1];
    }
  }

  //! The least m <= max_m for which the identity holds, found by literal
  //! word enumeration.
  inline std::optional<std::size_t> literal_class(Table const& t,
                                                  std::size_t  max_m) {
    for (std::size_t m = 1; m <= max_m; ++m) {
      if (identity_holds_literally(t, m)) {
        return m;
      }
    }
    return std::nullopt;
  }

  //! Whether the identity with first multiplier 1 holds for some n >= 2,
  //! by propagating the set of reachable (lambda_k, rho_k) values over all
  //! words 1 w_2 ... w_k.
  inline bool neumann_taylor(Table const& t) {
    std::size_t const                                 n = order_of(t);
    std::set<std::pair<std::uint32_t, std::uint32_t>> cur;
    for (std::uint32_t a = 0; a < n; ++a) {
      for (std::uint32_t b = 0; b < n; ++b) {
        cur.insert({t[a * n + b], t[b * n + a]});
      }
    }
    for (std::size_t k = 2; k <= n * n + 2; ++k) {
      std::set<std::pair<std::uint32_t, std::uint32_t>> next;
      bool                                              all_equal = true;
      for (auto [l, r] : cur) {
        all_equal = all_equal && l == r;
        for (std::uint32_t w = 0; w <= n; ++w) {
          auto const ww = w == n ? ONE : w;
          next.insert({mul(t, n, mul(t, n, l, ww), r),
                       mul(t, n, mul(t, n, r, ww), l)});
        }
      }
      if (all_equal) {
        return true;
      }
      cur = std::move(next);
    }
    return false;
  }

  //! Whether lambda_N(a, b, 1, 1, c, c^2, ...) = rho_N(...) for every a, b
  //! and c in S^1, with N past every possible eventual period.
  inline bool positively_engel(Table const& t) {
    std::size_t const n     = order_of(t);
    std::size_t const steps = n * n * (n + 1) + 4;
    for (std::uint32_t a = 0; a < n; ++a) {
      for (std::uint32_t b = 0; b < n; ++b) {
        for (std::uint32_t k = 0; k <= n; ++k) {
          auto const    c = k == n ? ONE : k;
          std::uint32_t l = a, r = b, power = ONE;
          // multipliers z_1 = 1 and z_i = c^(i - 2) for i >= 2
          for (std::size_t i = 1; i <= steps; ++i) {
            std::uint32_t const w = i == 1 ? ONE : power;
            if (i >= 2) {
              power = mul(t, n, power, c);
            }
            auto const nl = mul(t, n, mul(t, n, l, w), r);
            auto const nr = mul(t, n, mul(t, n, r, w), l);
            l             = nl;
            r             = nr;
          }
          if (l != r) {
            return false;
          }
        }
      }
    }
    return true;
  }

  //! Generated subsemigroup, as a sorted element list.
  inline std::vector<std::uint32_t> generated(Table const&                      t,
                                              std::vector<std::uint32_t> const& gens) {
    std::size_t const       n = order_of(t);
    std::set<std::uint32_t> s(gens.begin(), gens.end());
    bool                    grew = true;
    while (grew) {
      grew = false;
      std::vector<std::uint32_t> cur(s.begin(), s.end());
      for (auto a : cur) {
        for (auto b : cur) {
          grew = s.insert(t[a * n + b]).second || grew;
        }
      }
    }
    return {s.begin(), s.end()};
  }

  //! The upper non-nilpotent graph as an adjacency matrix: each <x, y> is
  //! rebuilt as its own table and tested with set propagation of
  //! (lambda_k, rho_k) values, which is the definition read directly.
  inline std::vector<std::vector<bool>> upper_graph(Table const& t) {
    std::size_t const              n = order_of(t);
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (std::uint32_t x = 0; x < n; ++x) {
      for (std::uint32_t y = x + 1; y < n; ++y) {
        auto const  sub = generated(t, {x, y});
        std::size_t m   = sub.size();
        auto        idx = [&](std::uint32_t e) {
          return static_cast<std::uint32_t>(
              std::find(sub.begin(), sub.end(), e) - sub.begin());
        };
        Table u(m * m);
        for (std::size_t i = 0; i < m; ++i) {
          for (std::size_t j = 0; j < m; ++j) {
            u[i * m + j] = idx(t[sub[i] * n + sub[j]]);
          }
        }
        std::set<std::pair<std::uint32_t, std::uint32_t>> cur;
        for (std::uint32_t a = 0; a < m; ++a) {
          for (std::uint32_t b = 0; b < m; ++b) {
            cur.insert({a, b});
          }
        }
        bool nilpotent = false;
        for (std::size_t k = 1; k <= m * m + 1 && !nilpotent; ++k) {
          std::set<std::pair<std::uint32_t, std::uint32_t>> next;
          for (auto [l, r] : cur) {
            for (std::uint32_t w = 0; w <= m; ++w) {
              auto const ww = w == m ? ONE : w;
              next.insert({mul(u, m, mul(u, m, l, ww), r),
                           mul(u, m, mul(u, m, r, ww), l)});
            }
          }
          cur       = std::move(next);
          nilpotent = std::all_of(cur.begin(), cur.end(),
                                  [](auto const& p) { return p.first == p.second; });
        }
        adj[x][y] = adj[y][x] = !nilpotent;
      }
    }
    return adj;
  }

  //! Graph isomorphism by trying every bijection.
  inline bool graphs_isomorphic(std::vector<std::vector<bool>> const& g,
                                std::vector<std::vector<bool>> const& h) {
    std::size_t const n = g.size();
    if (h.size() != n) {
      return false;
    }
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
      bool same = true;
      for (std::size_t a = 0; a < n && same; ++a) {
        for (std::size_t b = 0; b < n && same; ++b) {
          same = g[a][b] == h[p[a]][p[b]];
        }
      }
      if (same) {
        return true;
      }
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
  }

}  // namespace oracle

#endif  // NILGRAPH_TESTS_ORACLES_HPP_
