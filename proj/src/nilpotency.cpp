#include "nilgraph/nilpotency.hpp"

#include <algorithm>  // for all_of, max
#include <array>      // for array
#include <stdexcept>  // for logic_error

#include "nilgraph/error.hpp"  // for DistinctnessRequired

namespace nilgraph {

  ////////////////////////////////////////////////////////////////////////
  // PairTransitionSystem
  ////////////////////////////////////////////////////////////////////////

  PairTransitionSystem::PairTransitionSystem(FiniteSemigroup const& s)
      : _n(s.size()), _succ(state_count() * (_n + 1)) {
    for (std::size_t st = 0; st < state_count(); ++st) {
      auto [a, b] = pair(st);
      for (std::size_t k = 0; k <= _n; ++k) {
        Multiplier const w = multiplier(k);
        _succ[st * (_n + 1) + k]
            = state(sandwich(s, a, w, b), sandwich(s, b, w, a));
      }
    }
  }

  std::vector<bool> PairTransitionSystem::on_cycle() const {
    // Iterative Tarjan.
    std::size_t const        N     = state_count();
    std::size_t constexpr    UNSET = DIAGONAL;
    std::vector<std::size_t> index(N, UNSET), low(N, 0);
    std::vector<bool>        on_stack(N, false), result(N, false);
    std::vector<std::size_t> stack;
    std::vector<std::array<std::size_t, 2>> frames;  // (state, next k)
    std::size_t                             counter = 0;

    for (std::size_t root = 0; root < N; ++root) {
      if (index[root] != UNSET) {
        continue;
      }
      frames.push_back({root, 0});
      index[root] = low[root] = counter++;
      stack.push_back(root);
      on_stack[root] = true;
      while (!frames.empty()) {
        auto& [v, k] = frames.back();
        if (k <= _n) {
          std::size_t const t = successor(v, k++);
          if (t == DIAGONAL) {
            continue;
          }
          if (t == v) {
            result[v] = true;
          }
          if (index[t] == UNSET) {
            index[t] = low[t] = counter++;
            stack.push_back(t);
            on_stack[t] = true;
            frames.push_back({t, 0});
          } else if (on_stack[t]) {
            low[v] = std::min(low[v], index[t]);
          }
          continue;
        }
        std::size_t const done = v;
        frames.pop_back();
        if (!frames.empty()) {
          std::size_t const parent = frames.back()[0];
          low[parent]              = std::min(low[parent], low[done]);
        }
        if (low[done] == index[done]) {
          std::vector<std::size_t> component;
          std::size_t              w;
          do {
            w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            component.push_back(w);
          } while (w != done);
          if (component.size() > 1) {
            for (auto c : component) {
              result[c] = true;
            }
          }
        }
      }
    }
    return result;
  }

  std::optional<CycleWitness> PairTransitionSystem::find_cycle() const {
    enum class Colour : unsigned char { white, grey, black };
    std::size_t const   N = state_count();
    std::vector<Colour> colour(N, Colour::white);
    // Each frame is (state, index of the next multiplier to try).
    std::vector<std::array<std::size_t, 2>> frames;

    for (std::size_t root = 0; root < N; ++root) {
      if (colour[root] != Colour::white) {
        continue;
      }
      frames.push_back({root, 0});
      colour[root] = Colour::grey;
      while (!frames.empty()) {
        auto& [v, k] = frames.back();
        if (k > _n) {
          colour[v] = Colour::black;
          frames.pop_back();
          continue;
        }
        std::size_t const t = successor(v, k++);
        if (t == DIAGONAL || colour[t] == Colour::black) {
          continue;
        }
        if (colour[t] == Colour::white) {
          colour[t] = Colour::grey;
          frames.push_back({t, 0});
          continue;
        }
        // t is grey, so it is on the current DFS path; the frames from t to
        // the top spell out the cycle.
        std::size_t first = frames.size() - 1;
        while (frames[first][0] != t) {
          --first;
        }
        auto [x, y] = pair(t);
        CycleWitness witness{x, y, {}};
        for (std::size_t f = first; f < frames.size(); ++f) {
          witness.word.push_back(multiplier(frames[f][1] - 1));
        }
        return witness;
      }
    }
    return std::nullopt;
  }

  std::optional<std::size_t> PairTransitionSystem::longest_path() const {
    if (find_cycle()) {
      return std::nullopt;
    }
    std::size_t const        N     = state_count();
    std::size_t constexpr    UNSET = DIAGONAL;
    std::vector<std::size_t> depth(N, UNSET);
    std::vector<std::array<std::size_t, 2>> frames;
    std::size_t                             best = 0;

    for (std::size_t root = 0; root < N; ++root) {
      if (depth[root] != UNSET) {
        continue;
      }
      frames.push_back({root, 0});
      while (!frames.empty()) {
        auto& [v, k] = frames.back();
        if (k <= _n) {
          std::size_t const t = successor(v, k++);
          if (t != DIAGONAL && depth[t] == UNSET) {
            frames.push_back({t, 0});
          }
          continue;
        }
        std::size_t d = 0;
        for (std::size_t j = 0; j <= _n; ++j) {
          std::size_t const t = successor(v, j);
          if (t != DIAGONAL) {
            d = std::max(d, depth[t] + 1);
          }
        }
        depth[v] = d;
        best     = std::max(best, d);
        frames.pop_back();
      }
    }
    return best;
  }

  ////////////////////////////////////////////////////////////////////////
  // Nilpotency
  ////////////////////////////////////////////////////////////////////////

  std::pair<element_type, element_type>
  lambda_rho(FiniteSemigroup const&      s,
             element_type                x,
             element_type                y,
             std::span<Multiplier const> ws) {
    for (auto w : ws) {
      element_type const lam = sandwich(s, x, w, y);
      element_type const rho = sandwich(s, y, w, x);
      x                      = lam;
      y                      = rho;
    }
    return {x, y};
  }

  bool is_malcev_nilpotent(FiniteSemigroup const& s) {
    return !PairTransitionSystem(s).find_cycle().has_value();
  }

  std::optional<CycleWitness> non_nilpotency_witness(FiniteSemigroup const& s) {
    return PairTransitionSystem(s).find_cycle();
  }

  std::optional<std::size_t> nilpotency_class(FiniteSemigroup const& s) {
    auto len = PairTransitionSystem(s).longest_path();
    if (!len) {
      return std::nullopt;
    }
    return *len + 1;
  }

  bool is_nilpotent_bruteforce(FiniteSemigroup const& s, std::size_t max_len) {
    std::size_t const n = s.size();
    if (max_len == 0) {
      max_len = n * n + 1;
    }
    // reached[a * n + b] iff (a, b) = (lambda_k, rho_k) for some start pair
    // and some word of the current length k.
    std::vector<bool> reached(n * n, true), next(n * n);
    for (std::size_t len = 1; len <= max_len; ++len) {
      std::fill(next.begin(), next.end(), false);
      for (element_type a = 0; a < n; ++a) {
        for (element_type b = 0; b < n; ++b) {
          if (!reached[a * n + b]) {
            continue;
          }
          next[s.product(a, b) * n + s.product(b, a)] = true;
          for (element_type w = 0; w < n; ++w) {
            next[s.product(s.product(a, w), b) * n
                 + s.product(s.product(b, w), a)]
                = true;
          }
        }
      }
      reached.swap(next);
      bool all_equal = true;
      for (element_type a = 0; a < n && all_equal; ++a) {
        for (element_type b = 0; b < n && all_equal; ++b) {
          all_equal = a == b || !reached[a * n + b];
        }
      }
      if (all_equal) {
        return true;
      }
    }
    return false;
  }

  bool is_two_gen_nilpotent(FiniteSemigroup const& s,
                            element_type           x,
                            element_type           y) {
    std::array<element_type, 2> const gens{x, y};
    return is_malcev_nilpotent(closure(s, gens).semigroup);
  }

  bool lower_edge(FiniteSemigroup const& s, element_type x, element_type y) {
    if (x == y) {
      throw DistinctnessRequired("lower_edge needs two distinct elements, got "
                                 + s.label(x) + " twice");
    }
    std::array<element_type, 2> const gens{x, y};
    // Generators come first, so x and y are 0 and 1 in the closure, and
    // multipliers range over <x, y>^1 only.
    auto const                 sub = closure(s, gens);
    PairTransitionSystem const pts(sub.semigroup);
    std::size_t const          start = pts.state(0, 1);
    std::vector<bool>          seen(pts.state_count(), false);
    std::vector<std::size_t>   queue;
    auto                       push_successors = [&](std::size_t v) {
      for (std::size_t k = 0; k < pts.multiplier_count(); ++k) {
        std::size_t const t = pts.successor(v, k);
        if (t != PairTransitionSystem::DIAGONAL && !seen[t]) {
          seen[t] = true;
          queue.push_back(t);
        }
      }
    };
    push_successors(start);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      if (queue[i] == start) {
        return true;
      }
      push_successors(queue[i]);
    }
    return false;
  }

  ////////////////////////////////////////////////////////////////////////
  // Positively Engel
  ////////////////////////////////////////////////////////////////////////

  namespace {
    Multiplier times(FiniteSemigroup const& s, Multiplier u, Multiplier v) {
      if (u.is_identity()) {
        return v;
      }
      if (v.is_identity()) {
        return u;
      }
      return Multiplier(s.product(u.element(), v.element()));
    }

    std::size_t multiplier_slot(std::size_t n, Multiplier w) {
      return w.is_identity() ? n : w.element();
    }
  }  // namespace

  std::optional<std::size_t> engel_hitting_time(FiniteSemigroup const& s,
                                                element_type           a,
                                                element_type           b,
                                                Multiplier             c) {
    if (a == b) {
      return 0;
    }
    std::size_t const n = s.size();
    // The sequence is 1, 1, c, c^2, ...; after the first move the next
    // multiplier is c^0 = 1 and each move multiplies it on the right by c.
    EngelSimulationState st{
        s.product(a, b), s.product(b, a), Multiplier::identity()};
    std::size_t       steps = 1;
    std::size_t const cap   = n * n * (n + 1) + 1;
    std::vector<bool> visited(n * n * (n + 1), false);
    while (st.lam != st.rho) {
      std::size_t const key
          = (st.lam * n + st.rho) * (n + 1) + multiplier_slot(n, st.next_multiplier);
      if (visited[key]) {
        return std::nullopt;
      }
      visited[key] = true;
      st           = EngelSimulationState{
          sandwich(s, st.lam, st.next_multiplier, st.rho),
          sandwich(s, st.rho, st.next_multiplier, st.lam),
          times(s, st.next_multiplier, c)};
      if (++steps > cap) {
        throw std::logic_error("positively Engel simulation exceeded its "
                               "state-space bound");
      }
    }
    return steps;
  }

  std::optional<EngelWitness>
  positively_engel_witness(FiniteSemigroup const& s) {
    std::size_t const n = s.size();
    for (element_type a = 0; a < n; ++a) {
      for (element_type b = 0; b < n; ++b) {
        for (std::size_t k = 0; k <= n; ++k) {
          Multiplier const c = k == n ? Multiplier::identity()
                                      : Multiplier(static_cast<element_type>(k));
          if (!engel_hitting_time(s, a, b, c)) {
            return EngelWitness{a, b, c};
          }
        }
      }
    }
    return std::nullopt;
  }

  bool is_positively_engel(FiniteSemigroup const& s) {
    return !positively_engel_witness(s).has_value();
  }

  ////////////////////////////////////////////////////////////////////////
  // Neumann-Taylor
  ////////////////////////////////////////////////////////////////////////

  bool is_neumann_taylor(FiniteSemigroup const& s) {
    PairTransitionSystem const pts(s);
    std::size_t const          N = pts.state_count();
    // Mark every state from which a cycle can be reached by walking the
    // reversed moves out of the cycle states.
    std::vector<std::vector<std::size_t>> reverse(N);
    for (std::size_t v = 0; v < N; ++v) {
      for (std::size_t k = 0; k < pts.multiplier_count(); ++k) {
        std::size_t const t = pts.successor(v, k);
        if (t != PairTransitionSystem::DIAGONAL) {
          reverse[t].push_back(v);
        }
      }
    }
    std::vector<bool>        reaches_cycle = pts.on_cycle();
    std::vector<std::size_t> queue;
    for (std::size_t v = 0; v < N; ++v) {
      if (reaches_cycle[v]) {
        queue.push_back(v);
      }
    }
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (auto u : reverse[queue[i]]) {
        if (!reaches_cycle[u]) {
          reaches_cycle[u] = true;
          queue.push_back(u);
        }
      }
    }
    for (element_type a = 0; a < s.size(); ++a) {
      for (element_type b = 0; b < s.size(); ++b) {
        std::size_t const st = pts.state(s.product(a, b), s.product(b, a));
        if (st != PairTransitionSystem::DIAGONAL && reaches_cycle[st]) {
          return false;
        }
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Nilpotentizers
  ////////////////////////////////////////////////////////////////////////

  ElementSubset nilpotentizer(FiniteSemigroup const& s, element_type x) {
    std::vector<element_type> members{x};
    for (element_type y = 0; y < s.size(); ++y) {
      if (y != x && is_two_gen_nilpotent(s, x, y)) {
        members.push_back(y);
      }
    }
    return ElementSubset(s, members);
  }

  ElementSubset nil_of_semigroup(FiniteSemigroup const& s) {
    std::vector<bool> keep(s.size(), true);
    for (element_type x = 0; x < s.size(); ++x) {
      auto const nil_x = nilpotentizer(s, x);
      for (element_type y = 0; y < s.size(); ++y) {
        keep[y] = keep[y] && nil_x.contains(y);
      }
    }
    std::vector<element_type> members;
    for (element_type y = 0; y < s.size(); ++y) {
      if (keep[y]) {
        members.push_back(y);
      }
    }
    return ElementSubset(s, members);
  }

  bool is_n_semigroup(FiniteSemigroup const& s) {
    for (element_type x = 0; x < s.size(); ++x) {
      if (!nilpotentizer(s, x).is_closed()) {
        return false;
      }
    }
    return true;
  }

}  // namespace nilgraph
