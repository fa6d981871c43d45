#include "nilgraph/enumerate.hpp"

#include <algorithm>  // for fill
#include <atomic>     // for atomic
#include <cstdint>    // for uint8_t
#include <stdexcept>  // for invalid_argument
#include <thread>     // for thread

#include "nilgraph/error.hpp"  // for OrderTooLarge

namespace nilgraph {

  namespace {
    constexpr element_type UNSET = 0xFF;

    class TableSearch {
     public:
      TableSearch(std::size_t n, Modulo modulo, bool all_tables)
          : _n(n),
            _anti(modulo == Modulo::iso_anti),
            _all(all_tables),
            _t(n * n, UNSET) {}

      // Runs the search below the given first row, appending to out.
      void run(std::vector<element_type> const& first_row,
               std::vector<FiniteSemigroup>&    out) {
        std::fill(_t.begin(), _t.end(), UNSET);
        for (std::size_t q = 0; q < _n; ++q) {
          _t[q] = first_row[q];
          if (!consistent(0, q)) {
            return;
          }
        }
        _out = &out;
        descend(_n);
      }

     private:
      element_type at(std::size_t x, std::size_t y) const noexcept {
        return _t[x * _n + y];
      }

      void descend(std::size_t cell) {
        if (cell == _n * _n) {
          if (_all || is_canonical(_t, _n, _anti)) {
            _out->push_back(FiniteSemigroup::from_flat(_n, _t));
          }
          return;
        }
        std::size_t const p = cell / _n, q = cell % _n;
        for (element_type a = 0; a < _n; ++a) {
          _t[cell] = a;
          if (consistent(p, q)) {
            descend(cell + 1);
          }
        }
        _t[cell] = UNSET;
      }

      // Every triple whose cells are all set and which involves the cell
      // (p, q) satisfies associativity. The cell can be xy, yz, (xy)z or
      // x(yz) in (xy)z = x(yz).
      bool consistent(std::size_t p, std::size_t q) const {
        std::size_t const a = at(p, q);
        for (std::size_t z = 0; z < _n; ++z) {
          auto const l = at(a, z), r = at(q, z);
          if (l != UNSET && r != UNSET) {
            auto const rr = at(p, r);
            if (rr != UNSET && rr != l) {
              return false;
            }
          }
        }
        for (std::size_t x = 0; x < _n; ++x) {
          auto const xp = at(x, p), xa = at(x, a);
          if (xp != UNSET && xa != UNSET) {
            auto const l = at(xp, q);
            if (l != UNSET && l != xa) {
              return false;
            }
          }
        }
        for (std::size_t x = 0; x < _n; ++x) {
          for (std::size_t y = 0; y < _n; ++y) {
            if (at(x, y) == p) {
              auto const yq = at(y, q);
              if (yq != UNSET) {
                auto const r = at(x, yq);
                if (r != UNSET && r != a) {
                  return false;
                }
              }
            }
            if (at(x, y) == q) {
              auto const py = at(p, x);
              if (py != UNSET) {
                auto const l = at(py, y);
                if (l != UNSET && l != a) {
                  return false;
                }
              }
            }
          }
        }
        return true;
      }

      std::size_t                   _n;
      bool                          _anti;
      bool                          _all;
      std::vector<element_type>     _t;
      std::vector<FiniteSemigroup>* _out = nullptr;
    };

    void check_order(std::size_t n, bool allow_order_6) {
      if (n == 0) {
        throw std::invalid_argument("semigroups have at least one element");
      }
      std::size_t const cap = allow_order_6 ? 6 : ENUMERATION_MAX_ORDER;
      if (n > cap) {
        throw OrderTooLarge("enumeration is limited to order "
                            + std::to_string(cap) + ", got "
                            + std::to_string(n));
      }
    }
  }  // namespace

  std::vector<SearchPartition> search_partitions(std::size_t n) {
    std::vector<SearchPartition> result;
    std::vector<element_type>    row(n, 0);
    while (true) {
      result.push_back({row});
      std::size_t i = n;
      while (i > 0 && row[i - 1] == n - 1) {
        row[--i] = 0;
      }
      if (i == 0) {
        break;
      }
      ++row[i - 1];
    }
    return result;
  }

  std::vector<FiniteSemigroup> enumerate_partition(std::size_t            n,
                                                   Modulo                 modulo,
                                                   SearchPartition const& part,
                                                   bool all_tables) {
    std::vector<FiniteSemigroup> out;
    TableSearch(n, modulo, all_tables).run(part.first_row, out);
    return out;
  }

  void enumerate_semigroups(std::size_t               n,
                            Modulo                    modulo,
                            SemigroupVisitor const&   visitor,
                            EnumerationOptions const& options) {
    check_order(n, options.allow_order_6);
    auto const  parts = search_partitions(n);
    std::size_t jobs  = options.jobs;
    if (jobs == 0) {
      jobs = std::max(1u, std::thread::hardware_concurrency());
    }
    jobs = std::min(jobs, parts.size());

    if (jobs <= 1) {
      TableSearch search(n, modulo, options.all_tables);
      for (auto const& part : parts) {
        std::vector<FiniteSemigroup> found;
        search.run(part.first_row, found);
        for (auto const& s : found) {
          if (!visitor(s)) {
            return;
          }
        }
      }
      return;
    }

    // Static work queue; results are kept per partition and replayed in
    // partition order, so the stream does not depend on scheduling.
    std::vector<std::vector<FiniteSemigroup>> results(parts.size());
    std::atomic<std::size_t>                  next{0};
    std::atomic<bool>                         stop{false};
    auto worker = [&]() {
      TableSearch search(n, modulo, options.all_tables);
      for (std::size_t i = next++; i < parts.size() && !stop; i = next++) {
        search.run(parts[i].first_row, results[i]);
      }
    };
    std::vector<std::thread> threads;
    for (std::size_t j = 0; j < jobs; ++j) {
      threads.emplace_back(worker);
    }
    for (auto& t : threads) {
      t.join();
    }
    for (auto const& found : results) {
      for (auto const& s : found) {
        if (!visitor(s)) {
          return;
        }
      }
    }
  }

  std::vector<FiniteSemigroup> all_semigroups(std::size_t               n,
                                              Modulo                    modulo,
                                              EnumerationOptions const& options) {
    std::vector<FiniteSemigroup> result;
    enumerate_semigroups(
        n,
        modulo,
        [&result](FiniteSemigroup const& s) {
          result.push_back(s);
          return true;
        },
        options);
    return result;
  }

  std::size_t count_semigroups(std::size_t               n,
                               Modulo                    modulo,
                               EnumerationOptions const& options) {
    std::size_t count = 0;
    enumerate_semigroups(
        n,
        modulo,
        [&count](FiniteSemigroup const&) {
          ++count;
          return true;
        },
        options);
    return count;
  }

  std::optional<FiniteSemigroup> realizability_search(SimpleGraph const& g,
                                                      std::size_t        n,
                                                      std::size_t        jobs) {
    if (g.order() != n) {
      throw std::invalid_argument("the graph has " + std::to_string(g.order())
                                  + " vertices, expected "
                                  + std::to_string(n));
    }
    std::optional<FiniteSemigroup> found;
    enumerate_semigroups(
        n,
        Modulo::iso_anti,
        [&](FiniteSemigroup const& s) {
          if (graph_isomorphic(upper_non_nilpotent_graph(s), g)) {
            found = s;
            return false;
          }
          return true;
        },
        EnumerationOptions{jobs});
    return found;
  }

}  // namespace nilgraph
