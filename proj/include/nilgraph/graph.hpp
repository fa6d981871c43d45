// Simple graphs on the elements of a semigroup, and the three graphs the
// library is about:
//
//   upper non-nilpotent graph  N_S   x ~ y iff <x, y> is not nilpotent,
//   lower non-nilpotent graph  L_S   x ~ y iff (x, y) returns to itself under
//                                    a word over <x, y>^1,
//   non-commuting graph        M_S   x ~ y iff xy != yx.
//
// Edges of L_S are edges of N_S, which are edges of M_S.

#ifndef NILGRAPH_GRAPH_HPP_
#define NILGRAPH_GRAPH_HPP_

#include <cstddef>      // for size_t
#include <optional>     // for optional
#include <string>       // for string
#include <string_view>  // for string_view
#include <utility>      // for pair
#include <vector>       // for vector

#include "nilgraph/semigroup.hpp"  // for FiniteSemigroup

namespace nilgraph {

  //! An undirected graph without loops on the vertices {0, ..., n - 1}.
  class SimpleGraph {
   public:
    using edge_type = std::pair<std::size_t, std::size_t>;

    explicit SimpleGraph(std::size_t              order,
                         std::vector<std::string> labels = {});

    //! Throws std::invalid_argument for a loop or an out-of-range endpoint.
    static SimpleGraph from_edges(std::size_t                   order,
                                  std::vector<edge_type> const& edges,
                                  std::vector<std::string>      labels = {});

    std::size_t order() const noexcept {
      return _n;
    }

    bool adjacent(std::size_t u, std::size_t v) const noexcept {
      return _adj[u * _n + v];
    }

    void add_edge(std::size_t u, std::size_t v);
    void remove_edge(std::size_t u, std::size_t v);

    std::size_t degree(std::size_t v) const;
    std::size_t edge_count() const;

    //! Edges (u, v) with u < v in lexicographic order.
    std::vector<edge_type> edges() const;

    std::vector<std::size_t> neighbours(std::size_t v) const;

    std::string label(std::size_t v) const;

    std::vector<std::string> const& labels() const noexcept {
      return _labels;
    }

    SimpleGraph complement() const;

    //! The subgraph induced on \p vertices, renumbered in the order given.
    SimpleGraph induced(std::vector<std::size_t> const& vertices) const;

    //! Same vertex set and edges; labels are ignored.
    friend bool operator==(SimpleGraph const& g, SimpleGraph const& h) {
      return g._n == h._n && g._adj == h._adj;
    }

   private:
    std::size_t              _n;
    std::vector<bool>        _adj;
    std::vector<std::string> _labels;
  };

  enum class GraphKind { upper, lower, noncommuting };

  std::string to_string(GraphKind kind);
  //! Accepts "upper", "lower" and "noncommuting". Throws
  //! std::invalid_argument otherwise.
  GraphKind parse_graph_kind(std::string_view text);

  SimpleGraph upper_non_nilpotent_graph(FiniteSemigroup const& s);
  SimpleGraph lower_non_nilpotent_graph(FiniteSemigroup const& s);
  SimpleGraph non_commuting_graph(FiniteSemigroup const& s);
  SimpleGraph build_graph(FiniteSemigroup const& s, GraphKind kind);

  ////////////////////////////////////////////////////////////////////////
  // Named graphs
  ////////////////////////////////////////////////////////////////////////

  SimpleGraph empty_graph(std::size_t n);
  SimpleGraph complete_graph(std::size_t n);
  //! 0 - 1 - ... - (n - 1).
  SimpleGraph path_graph(std::size_t n);
  //! 0 - 1 - ... - (n - 1) - 0; needs n >= 3.
  SimpleGraph cycle_graph(std::size_t n);
  //! Centre 0 joined to 1, ..., n - 1; needs n >= 1.
  SimpleGraph star_graph(std::size_t n);

  //! Parses a family name with its order: "p4", "c5", "k4", "star5",
  //! "empty3". Throws std::invalid_argument otherwise.
  SimpleGraph named_graph(std::string_view name);

  ////////////////////////////////////////////////////////////////////////
  // Predicates
  ////////////////////////////////////////////////////////////////////////

  //! Connected components, each sorted, ordered by least vertex.
  std::vector<std::vector<std::size_t>> components(SimpleGraph const& g);

  bool is_connected(SimpleGraph const& g);
  bool is_complete(SimpleGraph const& g);
  bool is_empty(SimpleGraph const& g);
  //! A single vertex counts as a complete component.
  bool                     all_components_complete(SimpleGraph const& g);
  std::vector<std::size_t> isolated_vertices(SimpleGraph const& g);
  //! A vertex adjacent to every other vertex.
  bool is_totally_connected(SimpleGraph const& g, std::size_t v);

  bool is_path_graph(SimpleGraph const& g);
  //! Needs order >= 3.
  bool is_cycle_graph(SimpleGraph const& g);
  //! A tree on n >= 2 vertices with a vertex of degree n - 1.
  bool is_star_graph(SimpleGraph const& g);
  //! The centre of a star graph (the least candidate when n = 2).
  std::optional<std::size_t> star_center(SimpleGraph const& g);

  ////////////////////////////////////////////////////////////////////////
  // Isomorphism and canonical forms
  ////////////////////////////////////////////////////////////////////////

  inline constexpr std::size_t GRAPH_ISOMORPHISM_MAX_ORDER = 10;

  //! Backtracking over degree-compatible bijections. Throws OrderTooLarge
  //! above GRAPH_ISOMORPHISM_MAX_ORDER.
  bool graph_isomorphic(SimpleGraph const& g, SimpleGraph const& h);

  inline constexpr std::size_t GRAPH_CANONICAL_MAX_ORDER = 8;

  //! The least upper-triangle adjacency bitstring (pairs (0, 1), (0, 2), ...,
  //! (n - 2, n - 1), '1' for an edge) over all relabellings. Throws
  //! OrderTooLarge above GRAPH_CANONICAL_MAX_ORDER.
  std::string graph_canonical_key(SimpleGraph const& g);

  //! One representative per isomorphism class on n <= 6 vertices, sorted by
  //! canonical key. Throws OrderTooLarge for n > 6.
  std::vector<SimpleGraph> all_graphs_on(std::size_t n);

  //! Graphviz text: vertices in index order then edges in lexicographic
  //! order, one statement per line.
  std::string to_dot(SimpleGraph const& g, std::string_view name = "G");

  //! {"order": n, "edges": [[i, j], ...]} with i < j, sorted, plus "labels"
  //! when the graph is labelled.
  std::string to_json(SimpleGraph const& g);

}  // namespace nilgraph

#endif  // NILGRAPH_GRAPH_HPP_
