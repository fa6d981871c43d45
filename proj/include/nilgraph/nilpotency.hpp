// Malcev nilpotency and the related positively Engel and Neumann-Taylor
// conditions for finite semigroups.
//
// For x, y in S and multipliers z_1, z_2, ... in S^1 the sequences
//
//   lambda_0 = x,  rho_0 = y,
//   lambda_{k+1} = lambda_k z_{k+1} rho_k,  rho_{k+1} = rho_k z_{k+1} lambda_k
//
// are driven one multiplier at a time, so every question below is a
// question about the directed graph on ordered pairs (a, b) with moves
// (a, b) -> (a w b, b w a). Once the two sides agree they agree forever, so
// pairs with a == b are collapsed into a single absorbing "diagonal".

#ifndef NILGRAPH_NILPOTENCY_HPP_
#define NILGRAPH_NILPOTENCY_HPP_

#include <cstddef>   // for size_t
#include <limits>    // for numeric_limits
#include <optional>  // for optional
#include <span>      // for span
#include <utility>   // for pair
#include <vector>    // for vector

#include "nilgraph/semigroup.hpp"  // for FiniteSemigroup, Multiplier

namespace nilgraph {

  //! A pair (x, y), x != y, together with a non-empty multiplier word that
  //! returns it to itself: x = lambda_m(x, y, word) and y = rho_m(x, y, word).
  struct CycleWitness {
    element_type            x;
    element_type            y;
    std::vector<Multiplier> word;
  };

  //! The transition structure on ordered pairs of distinct elements.
  //!
  //! There are n(n - 1) states and each has n + 1 outgoing moves, one per
  //! multiplier in S^1; multiplier index n is the formal identity.
  class PairTransitionSystem {
   public:
    static constexpr std::size_t DIAGONAL
        = std::numeric_limits<std::size_t>::max();

    explicit PairTransitionSystem(FiniteSemigroup const& s);

    std::size_t order() const noexcept {
      return _n;
    }

    std::size_t state_count() const noexcept {
      return _n * (_n - 1);
    }

    std::size_t multiplier_count() const noexcept {
      return _n + 1;
    }

    Multiplier multiplier(std::size_t k) const noexcept {
      return k == _n ? Multiplier::identity()
                     : Multiplier(static_cast<element_type>(k));
    }

    //! DIAGONAL when a == b.
    std::size_t state(element_type a, element_type b) const noexcept {
      if (a == b) {
        return DIAGONAL;
      }
      return a * (_n - 1) + (b < a ? b : b - 1);
    }

    std::pair<element_type, element_type> pair(std::size_t st) const noexcept {
      auto const a = static_cast<element_type>(st / (_n - 1));
      auto       b = static_cast<element_type>(st % (_n - 1));
      return {a, b < a ? b : b + 1};
    }

    //! The state reached from \p st by multiplier index \p k, or DIAGONAL.
    std::size_t successor(std::size_t st, std::size_t k) const noexcept {
      return _succ[st * (_n + 1) + k];
    }

    //! on_cycle()[st] holds iff \p st lies on a cycle of non-diagonal
    //! states (a self-loop counts).
    std::vector<bool> on_cycle() const;

    //! A cycle through some state, or nullopt when there is none. States are
    //! tried in increasing order, so the result is deterministic.
    std::optional<CycleWitness> find_cycle() const;

    //! The number of moves in a longest walk through non-diagonal states, or
    //! nullopt when such walks are unbounded. Zero when there are no states.
    std::optional<std::size_t> longest_path() const;

   private:
    std::size_t              _n;
    std::vector<std::size_t> _succ;
  };

  //! (lambda_m, rho_m) for the word \p ws of length m.
  std::pair<element_type, element_type>
  lambda_rho(FiniteSemigroup const&      s,
             element_type                x,
             element_type                y,
             std::span<Multiplier const> ws);

  //! S is nilpotent iff no pair of distinct elements returns to itself under
  //! a non-empty multiplier word, i.e. the pair system has no cycle.
  bool is_malcev_nilpotent(FiniteSemigroup const& s);

  //! A pair and word showing that S is not nilpotent.
  std::optional<CycleWitness> non_nilpotency_witness(FiniteSemigroup const& s);

  //! The least n with lambda_n = rho_n identically, or nullopt when S is not
  //! nilpotent. The trivial semigroup has class 1.
  std::optional<std::size_t> nilpotency_class(FiniteSemigroup const& s);

  //! Decides nilpotency straight from the definition: for n = 1, ...,
  //! max_len, collects every value (lambda_n, rho_n) over all start pairs
  //! and all words of length n, and reports whether some n gives only
  //! equal sides. A \p max_len of 0 means |S|^2 + 1, which suffices.
  bool is_nilpotent_bruteforce(FiniteSemigroup const& s,
                               std::size_t            max_len = 0);

  //! Whether <x, y> is nilpotent.
  bool is_two_gen_nilpotent(FiniteSemigroup const& s,
                            element_type           x,
                            element_type           y);

  //! Whether (x, y) returns to itself under a non-empty word over
  //! <x, y>^1. Throws DistinctnessRequired when x == y.
  bool lower_edge(FiniteSemigroup const& s, element_type x, element_type y);

  //! The state carried through the positively Engel simulation: the current
  //! pair and the power of c to be applied next.
  struct EngelSimulationState {
    element_type lam;
    element_type rho;
    Multiplier   next_multiplier;

    friend bool operator==(EngelSimulationState const&,
                           EngelSimulationState const&) = default;
  };

  //! A triple (a, b, c) whose run under 1, 1, c, c^2, ... never reaches
  //! lambda = rho.
  struct EngelWitness {
    element_type a;
    element_type b;
    Multiplier   c;
  };

  //! The number of moves the run from (a, b) with powers of c takes to make
  //! both sides equal, or nullopt if it never does.
  std::optional<std::size_t> engel_hitting_time(FiniteSemigroup const& s,
                                                element_type           a,
                                                element_type           b,
                                                Multiplier             c);

  bool                        is_positively_engel(FiniteSemigroup const& s);
  std::optional<EngelWitness> positively_engel_witness(FiniteSemigroup const& s);

  //! Whether no cycle of the pair system is reachable from any (ab, ba).
  bool is_neumann_taylor(FiniteSemigroup const& s);

  //! {x} together with every y for which <x, y> is nilpotent.
  ElementSubset nilpotentizer(FiniteSemigroup const& s, element_type x);
  //! The intersection of all nilpotentizers.
  ElementSubset nil_of_semigroup(FiniteSemigroup const& s);
  //! Every nilpotentizer is a subsemigroup.
  bool is_n_semigroup(FiniteSemigroup const& s);

}  // namespace nilgraph

#endif  // NILGRAPH_NILPOTENCY_HPP_
