#include "nilgraph/graph.hpp"

#include <algorithm>  // for sort, next_permutation
#include <charconv>   // for from_chars
#include <cstdint>    // for uint64_t
#include <numeric>    // for iota
#include <set>        // for set
#include <sstream>    // for ostringstream
#include <stdexcept>  // for invalid_argument

#include "json.hpp"  // for nlohmann::json

#include "nilgraph/error.hpp"       // for OrderTooLarge
#include "nilgraph/nilpotency.hpp"  // for is_two_gen_nilpotent, lower_edge

namespace nilgraph {

  ////////////////////////////////////////////////////////////////////////
  // SimpleGraph
  ////////////////////////////////////////////////////////////////////////

  SimpleGraph::SimpleGraph(std::size_t order, std::vector<std::string> labels)
      : _n(order), _adj(order * order, false), _labels(std::move(labels)) {
    if (!_labels.empty() && _labels.size() != _n) {
      throw std::invalid_argument("expected " + std::to_string(_n)
                                  + " vertex labels");
    }
  }

  SimpleGraph SimpleGraph::from_edges(std::size_t                   order,
                                      std::vector<edge_type> const& edges,
                                      std::vector<std::string>      labels) {
    SimpleGraph g(order, std::move(labels));
    for (auto [u, v] : edges) {
      g.add_edge(u, v);
    }
    return g;
  }

  void SimpleGraph::add_edge(std::size_t u, std::size_t v) {
    if (u >= _n || v >= _n || u == v) {
      throw std::invalid_argument("invalid edge {" + std::to_string(u) + ", "
                                  + std::to_string(v) + "}");
    }
    _adj[u * _n + v] = _adj[v * _n + u] = true;
  }

  void SimpleGraph::remove_edge(std::size_t u, std::size_t v) {
    if (u < _n && v < _n) {
      _adj[u * _n + v] = _adj[v * _n + u] = false;
    }
  }

  std::size_t SimpleGraph::degree(std::size_t v) const {
    std::size_t d = 0;
    for (std::size_t u = 0; u < _n; ++u) {
      d += adjacent(v, u);
    }
    return d;
  }

  std::size_t SimpleGraph::edge_count() const {
    std::size_t m = 0;
    for (std::size_t u = 0; u < _n; ++u) {
      for (std::size_t v = u + 1; v < _n; ++v) {
        m += adjacent(u, v);
      }
    }
    return m;
  }

  std::vector<SimpleGraph::edge_type> SimpleGraph::edges() const {
    std::vector<edge_type> result;
    for (std::size_t u = 0; u < _n; ++u) {
      for (std::size_t v = u + 1; v < _n; ++v) {
        if (adjacent(u, v)) {
          result.emplace_back(u, v);
        }
      }
    }
    return result;
  }

  std::vector<std::size_t> SimpleGraph::neighbours(std::size_t v) const {
    std::vector<std::size_t> result;
    for (std::size_t u = 0; u < _n; ++u) {
      if (adjacent(v, u)) {
        result.push_back(u);
      }
    }
    return result;
  }

  std::string SimpleGraph::label(std::size_t v) const {
    return _labels.empty() ? std::to_string(v) : _labels[v];
  }

  SimpleGraph SimpleGraph::complement() const {
    SimpleGraph g(_n, _labels);
    for (std::size_t u = 0; u < _n; ++u) {
      for (std::size_t v = u + 1; v < _n; ++v) {
        if (!adjacent(u, v)) {
          g.add_edge(u, v);
        }
      }
    }
    return g;
  }

  SimpleGraph
  SimpleGraph::induced(std::vector<std::size_t> const& vertices) const {
    std::vector<std::string> labels;
    if (!_labels.empty()) {
      for (auto v : vertices) {
        labels.push_back(_labels[v]);
      }
    }
    SimpleGraph g(vertices.size(), std::move(labels));
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      for (std::size_t j = i + 1; j < vertices.size(); ++j) {
        if (adjacent(vertices[i], vertices[j])) {
          g.add_edge(i, j);
        }
      }
    }
    return g;
  }

  ////////////////////////////////////////////////////////////////////////
  // Graphs of a semigroup
  ////////////////////////////////////////////////////////////////////////

  std::string to_string(GraphKind kind) {
    switch (kind) {
      case GraphKind::upper:
        return "upper";
      case GraphKind::lower:
        return "lower";
      case GraphKind::noncommuting:
        return "noncommuting";
    }
    return "";
  }

  GraphKind parse_graph_kind(std::string_view text) {
    if (text == "upper") {
      return GraphKind::upper;
    }
    if (text == "lower") {
      return GraphKind::lower;
    }
    if (text == "noncommuting") {
      return GraphKind::noncommuting;
    }
    throw std::invalid_argument("unknown graph kind \"" + std::string(text)
                                + "\", expected upper, lower or noncommuting");
  }

  namespace {
    template <typename Adjacent>
    SimpleGraph graph_on(FiniteSemigroup const& s, Adjacent&& adjacent) {
      std::vector<std::string> labels;
      if (s.has_labels()) {
        labels = s.labels();
      }
      SimpleGraph g(s.size(), std::move(labels));
      for (element_type x = 0; x < s.size(); ++x) {
        for (element_type y = x + 1; y < s.size(); ++y) {
          if (adjacent(x, y)) {
            g.add_edge(x, y);
          }
        }
      }
      return g;
    }
  }  // namespace

  SimpleGraph upper_non_nilpotent_graph(FiniteSemigroup const& s) {
    return graph_on(s, [&s](element_type x, element_type y) {
      return !is_two_gen_nilpotent(s, x, y);
    });
  }

  SimpleGraph lower_non_nilpotent_graph(FiniteSemigroup const& s) {
    return graph_on(s, [&s](element_type x, element_type y) {
      return lower_edge(s, x, y);
    });
  }

  SimpleGraph non_commuting_graph(FiniteSemigroup const& s) {
    return graph_on(s, [&s](element_type x, element_type y) {
      return s.product(x, y) != s.product(y, x);
    });
  }

  SimpleGraph build_graph(FiniteSemigroup const& s, GraphKind kind) {
    switch (kind) {
      case GraphKind::upper:
        return upper_non_nilpotent_graph(s);
      case GraphKind::lower:
        return lower_non_nilpotent_graph(s);
      case GraphKind::noncommuting:
        return non_commuting_graph(s);
    }
    return non_commuting_graph(s);
  }

  ////////////////////////////////////////////////////////////////////////
  // Named graphs
  ////////////////////////////////////////////////////////////////////////

  SimpleGraph empty_graph(std::size_t n) {
    return SimpleGraph(n);
  }

  SimpleGraph complete_graph(std::size_t n) {
    return SimpleGraph(n).complement();
  }

  SimpleGraph path_graph(std::size_t n) {
    SimpleGraph g(n);
    for (std::size_t v = 1; v < n; ++v) {
      g.add_edge(v - 1, v);
    }
    return g;
  }

  SimpleGraph cycle_graph(std::size_t n) {
    if (n < 3) {
      throw std::invalid_argument("a cycle needs at least 3 vertices");
    }
    SimpleGraph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
  }

  SimpleGraph star_graph(std::size_t n) {
    if (n == 0) {
      throw std::invalid_argument("a star needs at least 1 vertex");
    }
    SimpleGraph g(n);
    for (std::size_t v = 1; v < n; ++v) {
      g.add_edge(0, v);
    }
    return g;
  }

  SimpleGraph named_graph(std::string_view name) {
    auto const digits = name.find_first_of("0123456789");
    if (digits == std::string_view::npos || digits == 0) {
      throw std::invalid_argument("unknown graph \"" + std::string(name)
                                  + "\"");
    }
    std::string_view const family = name.substr(0, digits);
    std::size_t            n      = 0;
    auto [ptr, ec] = std::from_chars(name.data() + digits,
                                     name.data() + name.size(), n);
    if (ec != std::errc() || ptr != name.data() + name.size()) {
      throw std::invalid_argument("unknown graph \"" + std::string(name)
                                  + "\"");
    }
    if (family == "p") {
      return path_graph(n);
    } else if (family == "c") {
      return cycle_graph(n);
    } else if (family == "k") {
      return complete_graph(n);
    } else if (family == "star") {
      return star_graph(n);
    } else if (family == "empty") {
      return empty_graph(n);
    }
    throw std::invalid_argument("unknown graph family \"" + std::string(family)
                                + "\", expected p, c, k, star or empty");
  }

  ////////////////////////////////////////////////////////////////////////
  // Predicates
  ////////////////////////////////////////////////////////////////////////

  std::vector<std::vector<std::size_t>> components(SimpleGraph const& g) {
    std::size_t const                     n = g.order();
    std::vector<bool>                     seen(n, false);
    std::vector<std::vector<std::size_t>> result;
    for (std::size_t root = 0; root < n; ++root) {
      if (seen[root]) {
        continue;
      }
      std::vector<std::size_t> comp{root};
      seen[root] = true;
      for (std::size_t i = 0; i < comp.size(); ++i) {
        for (std::size_t v = 0; v < n; ++v) {
          if (!seen[v] && g.adjacent(comp[i], v)) {
            seen[v] = true;
            comp.push_back(v);
          }
        }
      }
      std::sort(comp.begin(), comp.end());
      result.push_back(std::move(comp));
    }
    return result;
  }

  bool is_connected(SimpleGraph const& g) {
    return components(g).size() <= 1;
  }

  bool is_complete(SimpleGraph const& g) {
    std::size_t const n = g.order();
    return g.edge_count() == n * (n - (n > 0)) / 2;
  }

  bool is_empty(SimpleGraph const& g) {
    return g.edge_count() == 0;
  }

  bool all_components_complete(SimpleGraph const& g) {
    for (auto const& comp : components(g)) {
      if (!is_complete(g.induced(comp))) {
        return false;
      }
    }
    return true;
  }

  std::vector<std::size_t> isolated_vertices(SimpleGraph const& g) {
    std::vector<std::size_t> result;
    for (std::size_t v = 0; v < g.order(); ++v) {
      if (g.degree(v) == 0) {
        result.push_back(v);
      }
    }
    return result;
  }

  bool is_totally_connected(SimpleGraph const& g, std::size_t v) {
    return g.degree(v) + 1 == g.order();
  }

  bool is_path_graph(SimpleGraph const& g) {
    std::size_t const n = g.order();
    if (n == 0 || !is_connected(g) || g.edge_count() != n - 1) {
      return false;
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (g.degree(v) > 2) {
        return false;
      }
    }
    return true;
  }

  bool is_cycle_graph(SimpleGraph const& g) {
    std::size_t const n = g.order();
    if (n < 3 || !is_connected(g)) {
      return false;
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (g.degree(v) != 2) {
        return false;
      }
    }
    return true;
  }

  std::optional<std::size_t> star_center(SimpleGraph const& g) {
    std::size_t const n = g.order();
    if (n < 2 || g.edge_count() != n - 1) {
      return std::nullopt;
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (g.degree(v) == n - 1) {
        // n - 1 edges all at v: the rest are leaves.
        return v;
      }
    }
    return std::nullopt;
  }

  bool is_star_graph(SimpleGraph const& g) {
    return star_center(g).has_value();
  }

  ////////////////////////////////////////////////////////////////////////
  // Isomorphism
  ////////////////////////////////////////////////////////////////////////

  namespace {
    bool extend(SimpleGraph const&        g,
                SimpleGraph const&        h,
                std::vector<std::size_t>& image,
                std::vector<bool>&        used,
                std::size_t               v) {
      std::size_t const n = g.order();
      if (v == n) {
        return true;
      }
      for (std::size_t w = 0; w < n; ++w) {
        if (used[w] || g.degree(v) != h.degree(w)) {
          continue;
        }
        bool ok = true;
        for (std::size_t u = 0; u < v && ok; ++u) {
          ok = g.adjacent(u, v) == h.adjacent(image[u], w);
        }
        if (!ok) {
          continue;
        }
        image[v] = w;
        used[w]  = true;
        if (extend(g, h, image, used, v + 1)) {
          return true;
        }
        used[w] = false;
      }
      return false;
    }

    std::vector<std::size_t> degree_sequence(SimpleGraph const& g) {
      std::vector<std::size_t> d;
      for (std::size_t v = 0; v < g.order(); ++v) {
        d.push_back(g.degree(v));
      }
      std::sort(d.begin(), d.end());
      return d;
    }

    // Bit (n(n-1)/2 - 1 - p) holds pair number p, so that comparing the
    // integers compares the bitstrings.
    std::uint64_t edge_mask(SimpleGraph const&              g,
                            std::vector<std::size_t> const& inv) {
      std::size_t const n     = g.order();
      std::size_t const pairs = n * (n - (n > 0)) / 2;
      std::uint64_t     mask  = 0;
      std::size_t       p     = 0;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j, ++p) {
          if (g.adjacent(inv[i], inv[j])) {
            mask |= std::uint64_t(1) << (pairs - 1 - p);
          }
        }
      }
      return mask;
    }

    std::uint64_t canonical_mask(SimpleGraph const& g) {
      std::size_t const        n = g.order();
      std::vector<std::size_t> inv(n);
      std::iota(inv.begin(), inv.end(), 0);
      std::uint64_t best = edge_mask(g, inv);
      while (std::next_permutation(inv.begin(), inv.end())) {
        best = std::min(best, edge_mask(g, inv));
      }
      return best;
    }

    std::string mask_to_key(std::uint64_t mask, std::size_t n) {
      std::size_t const pairs = n * (n - (n > 0)) / 2;
      std::string       key(pairs, '0');
      for (std::size_t p = 0; p < pairs; ++p) {
        if (mask >> (pairs - 1 - p) & 1) {
          key[p] = '1';
        }
      }
      return key;
    }

    SimpleGraph mask_to_graph(std::uint64_t mask, std::size_t n) {
      std::size_t const pairs = n * (n - (n > 0)) / 2;
      SimpleGraph       g(n);
      std::size_t       p = 0;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j, ++p) {
          if (mask >> (pairs - 1 - p) & 1) {
            g.add_edge(i, j);
          }
        }
      }
      return g;
    }
  }  // namespace

  bool graph_isomorphic(SimpleGraph const& g, SimpleGraph const& h) {
    if (g.order() > GRAPH_ISOMORPHISM_MAX_ORDER
        || h.order() > GRAPH_ISOMORPHISM_MAX_ORDER) {
      throw OrderTooLarge("graph_isomorphic is limited to order "
                          + std::to_string(GRAPH_ISOMORPHISM_MAX_ORDER));
    }
    if (g.order() != h.order() || g.edge_count() != h.edge_count()
        || degree_sequence(g) != degree_sequence(h)) {
      return false;
    }
    std::vector<std::size_t> image(g.order());
    std::vector<bool>        used(g.order(), false);
    return extend(g, h, image, used, 0);
  }

  std::string graph_canonical_key(SimpleGraph const& g) {
    if (g.order() > GRAPH_CANONICAL_MAX_ORDER) {
      throw OrderTooLarge("graph_canonical_key is limited to order "
                          + std::to_string(GRAPH_CANONICAL_MAX_ORDER));
    }
    return mask_to_key(canonical_mask(g), g.order());
  }

  std::vector<SimpleGraph> all_graphs_on(std::size_t n) {
    if (n > 6) {
      throw OrderTooLarge("all_graphs_on is limited to 6 vertices");
    }
    std::size_t const       pairs = n * (n - (n > 0)) / 2;
    std::set<std::uint64_t> classes;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << pairs); ++mask) {
      classes.insert(canonical_mask(mask_to_graph(mask, n)));
    }
    std::vector<SimpleGraph> result;
    for (auto mask : classes) {
      result.push_back(mask_to_graph(mask, n));
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Output
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::string escape(std::string const& text) {
      std::string out;
      for (char c : text) {
        if (c == '"' || c == '\\') {
          out += '\\';
        }
        out += c;
      }
      return out;
    }
  }  // namespace

  std::string to_dot(SimpleGraph const& g, std::string_view name) {
    std::ostringstream out;
    out << "graph " << name << " {\n";
    for (std::size_t v = 0; v < g.order(); ++v) {
      out << "  " << v << " [label=\"" << escape(g.label(v)) << "\"];\n";
    }
    for (auto [u, v] : g.edges()) {
      out << "  " << u << " -- " << v << ";\n";
    }
    out << "}\n";
    return out.str();
  }

  std::string to_json(SimpleGraph const& g) {
    nlohmann::json j;
    j["order"] = g.order();
    j["edges"] = nlohmann::json::array();
    for (auto [u, v] : g.edges()) {
      j["edges"].push_back({u, v});
    }
    if (!g.labels().empty()) {
      j["labels"] = g.labels();
    }
    return j.dump();
  }

}  // namespace nilgraph
