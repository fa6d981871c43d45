#include "nilgraph/constructions.hpp"

#include <algorithm>  // for all_of, any_of
#include <charconv>   // for from_chars
#include <map>        // for map
#include <stdexcept>  // for invalid_argument
#include <utility>    // for pair

#include "nilgraph/error.hpp"  // for NotAGroup, NonRegularSandwich

namespace nilgraph {

  namespace {
    void check_group(FiniteSemigroup const& g) {
      auto const e = identity(g);
      if (!e) {
        throw NotAGroup("the group table has no identity");
      }
      for (element_type x = 0; x < g.size(); ++x) {
        bool invertible = false;
        for (element_type y = 0; y < g.size() && !invertible; ++y) {
          invertible = g.product(x, y) == *e && g.product(y, x) == *e;
        }
        if (!invertible) {
          throw NotAGroup("element " + g.label(x) + " has no inverse");
        }
      }
    }

    std::string rees_label(std::string const& g, std::size_t i, std::size_t l,
                           std::size_t rows, std::size_t cols) {
      if (rows <= 9 && cols <= 9) {
        return g + "_" + std::to_string(i + 1) + std::to_string(l + 1);
      }
      return g + "_" + std::to_string(i + 1) + "," + std::to_string(l + 1);
    }

    std::vector<std::vector<SandwichEntry>> identity_sandwich(std::size_t n) {
      std::vector<std::vector<SandwichEntry>> p(
          n, std::vector<SandwichEntry>(n, std::nullopt));
      for (std::size_t i = 0; i < n; ++i) {
        p[i][i] = 0;
      }
      return p;
    }

    // A Rees matrix semigroup over the trivial group extended by extra
    // elements x, each acting on the left through a partial map on row
    // indices and on the right through a partial map on column indices:
    //
    //   x e_{i,l} = e_{row_map(i), l},   e_{i,l} x = e_{i, col_map(l)},
    //
    // with theta wherever the map is undefined. Products of two extra
    // elements are given by label. The associativity check of the result is
    // what validates a transcription.
    struct Adjoined {
      std::string                             label;
      std::vector<std::optional<std::size_t>> row_map;
      std::vector<std::optional<std::size_t>> col_map;
    };

    FiniteSemigroup extend_by_actions(
        FiniteSemigroup const&                                    base,
        std::size_t                                               rows,
        std::size_t                                               cols,
        std::vector<Adjoined> const&                              extra,
        std::map<std::pair<std::string, std::string>, std::string> const&
            products) {
      std::size_t const         m = base.size();
      std::size_t const         n = m + extra.size();
      element_type const        theta = static_cast<element_type>(rows * cols);
      std::vector<std::string>  labels(base.labels());
      for (auto const& x : extra) {
        labels.push_back(x.label);
      }
      auto index_of = [&](std::string const& lbl) -> element_type {
        for (std::size_t i = 0; i < n; ++i) {
          if (labels[i] == lbl) {
            return static_cast<element_type>(i);
          }
        }
        throw std::logic_error("no element labelled " + lbl);
      };
      std::vector<element_type> flat(n * n);
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          element_type& cell = flat[a * n + b];
          if (a < m && b < m) {
            cell = base.product(a, b);
          } else if (a < m) {
            // Rees element (or theta) times an extra element.
            auto const& x = extra[b - m];
            if (a == theta) {
              cell = theta;
            } else {
              auto const col = x.col_map[a % cols];
              cell           = col ? static_cast<element_type>(
                           (a / cols) * cols + *col)
                                   : theta;
            }
          } else if (b < m) {
            auto const& x = extra[a - m];
            if (b == theta) {
              cell = theta;
            } else {
              auto const row = x.row_map[b / cols];
              cell           = row ? static_cast<element_type>(
                           *row * cols + b % cols)
                                   : theta;
            }
          } else {
            auto it = products.find({labels[a], labels[b]});
            if (it == products.end()) {
              throw std::logic_error("missing product " + labels[a] + labels[b]);
            }
            cell = index_of(it->second);
          }
        }
      }
      return FiniteSemigroup::from_flat(n, std::move(flat), std::move(labels));
    }

    FiniteSemigroup from_letters(std::vector<std::string> const& rows) {
      // Rows of single letters a, b, c, ... as printed in a Cayley table.
      std::vector<std::vector<element_type>> table;
      std::vector<std::string>               labels;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        labels.emplace_back(1, static_cast<char>('a' + i));
        std::vector<element_type> row;
        for (char c : rows[i]) {
          if (c != ' ') {
            row.push_back(static_cast<element_type>(c - 'a'));
          }
        }
        table.push_back(std::move(row));
      }
      return FiniteSemigroup(table, labels);
    }

    SimpleGraph labelled_graph(FiniteSemigroup const& s,
                               std::vector<std::pair<char, char>> const& edges) {
      SimpleGraph g(s.size(), s.labels());
      for (auto [u, v] : edges) {
        g.add_edge(s.at_label(std::string(1, u)), s.at_label(std::string(1, v)));
      }
      return g;
    }

    std::optional<std::size_t> parse_size(std::string_view text) {
      std::size_t value = 0;
      auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
      if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
        return std::nullopt;
      }
      return value;
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Rees matrix semigroups
  ////////////////////////////////////////////////////////////////////////

  FiniteSemigroup rees_matrix(ReesMatrixDescriptor const& d) {
    check_group(d.group);
    if (d.rows == 0 || d.cols == 0) {
      throw std::invalid_argument("a Rees matrix semigroup needs non-empty "
                                  "index sets");
    }
    if (d.sandwich.size() != d.cols
        || std::any_of(d.sandwich.begin(), d.sandwich.end(), [&d](auto const& r) {
             return r.size() != d.rows;
           })) {
      throw std::invalid_argument("the sandwich matrix must be |L| x |I| = "
                                  + std::to_string(d.cols) + " x "
                                  + std::to_string(d.rows));
    }
    for (std::size_t l = 0; l < d.cols; ++l) {
      for (std::size_t i = 0; i < d.rows; ++i) {
        auto const& p = d.sandwich[l][i];
        if (p && *p >= d.group.size()) {
          throw std::invalid_argument("sandwich entry out of range");
        }
        if (!p && !d.with_zero) {
          throw NonRegularSandwich("zero sandwich entry in a Rees matrix "
                                   "semigroup without zero");
        }
      }
    }
    if (d.require_regular) {
      for (std::size_t l = 0; l < d.cols; ++l) {
        if (std::all_of(d.sandwich[l].begin(), d.sandwich[l].end(),
                        [](auto const& p) { return !p; })) {
          throw NonRegularSandwich("row " + std::to_string(l + 1)
                                   + " of the sandwich matrix is zero");
        }
      }
      for (std::size_t i = 0; i < d.rows; ++i) {
        bool nonzero = false;
        for (std::size_t l = 0; l < d.cols; ++l) {
          nonzero = nonzero || d.sandwich[l][i].has_value();
        }
        if (!nonzero) {
          throw NonRegularSandwich("column " + std::to_string(i + 1)
                                   + " of the sandwich matrix is zero");
        }
      }
    }
    std::size_t const g     = d.group.size();
    std::size_t const m     = d.rows * d.cols * g;
    std::size_t const n     = m + (d.with_zero ? 1 : 0);
    auto              index = [&](std::size_t i, std::size_t l, std::size_t x) {
      return static_cast<element_type>((i * d.cols + l) * g + x);
    };
    std::vector<element_type> flat(n * n);
    std::vector<std::string>  labels(n);
    for (std::size_t a = 0; a < n; ++a) {
      if (a == m) {
        labels[a] = "theta";
      } else {
        labels[a] = rees_label(d.group.label(a % g), a / g / d.cols,
                               a / g % d.cols, d.rows, d.cols);
      }
      for (std::size_t b = 0; b < n; ++b) {
        if (a == m || b == m) {
          flat[a * n + b] = static_cast<element_type>(m);
          continue;
        }
        std::size_t const i = a / g / d.cols, l = a / g % d.cols, x = a % g;
        std::size_t const j = b / g / d.cols, mu = b / g % d.cols, y = b % g;
        auto const&       p = d.sandwich[l][j];
        flat[a * n + b]
            = p ? index(i, mu, d.group.product(d.group.product(x, *p), y))
                : static_cast<element_type>(m);
      }
    }
    return FiniteSemigroup::from_flat(n, std::move(flat), std::move(labels));
  }

  FiniteSemigroup trivial_group(std::string label) {
    return FiniteSemigroup({{0}}, {std::move(label)});
  }

  FiniteSemigroup cyclic_group(std::size_t n) {
    std::vector<std::vector<element_type>> t(n, std::vector<element_type>(n));
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        t[a][b] = static_cast<element_type>((a + b) % n);
      }
    }
    return FiniteSemigroup(t);
  }

  FiniteSemigroup rectangular_band(std::size_t rows, std::size_t cols) {
    return rees_matrix(ReesMatrixDescriptor{
        trivial_group(),
        rows,
        cols,
        std::vector<std::vector<SandwichEntry>>(
            cols, std::vector<SandwichEntry>(rows, 0)),
        false});
  }

  FiniteSemigroup left_zero_semigroup(std::size_t n) {
    std::vector<std::vector<element_type>> t;
    for (std::size_t a = 0; a < n; ++a) {
      t.emplace_back(n, static_cast<element_type>(a));
    }
    return FiniteSemigroup(t);
  }

  FiniteSemigroup right_zero_semigroup(std::size_t n) {
    return opposite(left_zero_semigroup(n));
  }

  FiniteSemigroup null_semigroup(std::size_t n) {
    return FiniteSemigroup(std::vector<std::vector<element_type>>(
        n, std::vector<element_type>(n, 0)));
  }

  FiniteSemigroup chain_semilattice(std::size_t n) {
    std::vector<std::vector<element_type>> t(n, std::vector<element_type>(n));
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        t[a][b] = static_cast<element_type>(std::min(a, b));
      }
    }
    return FiniteSemigroup(t);
  }

  FiniteSemigroup brandt_semigroup(std::size_t n) {
    return rees_matrix(
        ReesMatrixDescriptor{trivial_group(), n, n, identity_sandwich(n), true});
  }

  ////////////////////////////////////////////////////////////////////////
  // The non-nilpotent examples
  ////////////////////////////////////////////////////////////////////////

  FiniteSemigroup f7() {
    using opt = std::optional<std::size_t>;
    return extend_by_actions(
        brandt_semigroup(2),
        2,
        2,
        {{"1", {opt(0), opt(1)}, {opt(0), opt(1)}},
         // u e_11 = e_21, u e_22 = e_12; e_11 u = e_12, e_22 u = e_21.
         {"u", {opt(1), opt(0)}, {opt(1), opt(0)}}},
        {{{"1", "1"}, "1"}, {{"1", "u"}, "u"}, {{"u", "1"}, "u"}, {{"u", "u"}, "1"}});
  }

  namespace {
    // Indices are 0-based here: row/column k stands for k + 1.
    std::vector<Adjoined> s18_generators() {
      using opt = std::optional<std::size_t>;
      opt const none;
      return {// e_11 w = e_14, e_22 w = e_23, e_33 w = e_44 w = theta;
              // w e_33 = e_23, w e_44 = e_14, w e_11 = w e_22 = theta.
              {"w", {none, none, opt(1), opt(0)}, {opt(3), opt(2), none, none}},
              // e_11 v = e_13, e_22 v = e_24, e_33 v = e_44 v = theta;
              // v e_33 = e_13, v e_44 = e_24, v e_11 = v e_22 = theta.
              {"v", {none, none, opt(0), opt(1)}, {opt(2), opt(3), none, none}}};
    }
  }  // namespace

  FiniteSemigroup paper_example_s18() {
    return extend_by_actions(brandt_semigroup(4),
                             4,
                             4,
                             s18_generators(),
                             {{{"w", "w"}, "theta"},
                              {{"v", "v"}, "theta"},
                              {{"w", "v"}, "theta"},
                              {{"v", "w"}, "theta"}});
  }

  FiniteSemigroup paper_example_t19() {
    using opt  = std::optional<std::size_t>;
    auto extra = s18_generators();
    opt const none;
    // e_22 q = e_21, e_44 q = e_43, e_11 q = e_33 q = theta;
    // q e_11 = e_21, q e_33 = e_43, q e_22 = q e_44 = theta.
    extra.push_back({"q", {opt(1), none, opt(3), none}, {none, opt(0), none, opt(2)}});
    return extend_by_actions(brandt_semigroup(4),
                             4,
                             4,
                             extra,
                             {{{"w", "w"}, "theta"},
                              {{"v", "v"}, "theta"},
                              {{"w", "v"}, "theta"},
                              {{"v", "w"}, "theta"},
                              {{"q", "q"}, "theta"},
                              {{"w", "q"}, "e_13"},
                              {{"v", "q"}, "e_23"},
                              {{"q", "w"}, "e_24"},
                              {{"q", "v"}, "e_23"}});
  }

  ////////////////////////////////////////////////////////////////////////
  // Total ideal extensions and star semigroups
  ////////////////////////////////////////////////////////////////////////

  FiniteSemigroup trivial_total_ideal_extension(FiniteSemigroup const& top,
                                                FiniteSemigroup const& ideal) {
    std::size_t const         t = top.size();
    std::size_t const         n = t + ideal.size();
    std::vector<element_type> flat(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        element_type v;
        if (a < t && b < t) {
          v = top.product(a, b);
        } else if (a >= t && b >= t) {
          v = static_cast<element_type>(t + ideal.product(a - t, b - t));
        } else {
          v = static_cast<element_type>(a < t ? b : a);
        }
        flat[a * n + b] = v;
      }
    }
    std::vector<std::string> labels;
    if (top.has_labels() || ideal.has_labels()) {
      for (element_type a = 0; a < t; ++a) {
        labels.push_back(top.label(a));
      }
      for (element_type a = 0; a < ideal.size(); ++a) {
        labels.push_back(ideal.label(a));
      }
    }
    return FiniteSemigroup::from_flat(n, std::move(flat), std::move(labels));
  }

  FiniteSemigroup chain_extension(std::span<FiniteSemigroup const> parts) {
    if (parts.empty()) {
      throw std::invalid_argument("chain_extension of an empty list");
    }
    FiniteSemigroup result = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) {
      result = trivial_total_ideal_extension(result, parts[i]);
    }
    return result;
  }

  FiniteSemigroup star_semigroup(std::size_t n) {
    if (n == 0) {
      throw std::invalid_argument("star_semigroup needs n >= 1");
    }
    std::vector<std::vector<element_type>> t(n + 1);
    std::vector<std::string>               labels;
    for (std::size_t j = 0; j <= n; ++j) {
      t[j].assign(n + 1, j == 0 ? 0 : 1);
      labels.push_back("x" + std::to_string(j));
    }
    return FiniteSemigroup(t, labels);
  }

  ////////////////////////////////////////////////////////////////////////
  // Fixtures
  ////////////////////////////////////////////////////////////////////////

  std::vector<TableFixture> paper_table_fixtures() {
    std::vector<TableFixture> result;

    auto c3 = from_letters({"aaa", "bbb", "ccc"});
    result.push_back({"c3", c3, cycle_graph(3), true, {}});

    // The stated graph is C4 on unspecified vertices.
    auto c4 = from_letters({"bbab", "bbbb", "ddcd", "dddd"});
    result.push_back({"c4", c4, cycle_graph(4), false, {}});

    // Stated as the single edge {a, b}; the table's own letters give
    // {c, d}, so only the isomorphism type is asserted.
    auto left = from_letters({"aaaa", "abaa", "aacc", "aadd"});
    result.push_back(
        {"fig2_left", left, labelled_graph(left, {{'a', 'b'}}), false, {}});

    auto right = from_letters({"aaaa", "bbbb", "bbcd", "dddd"});
    result.push_back({"fig2_right",
                      right,
                      labelled_graph(right, {{'a', 'b'}, {'b', 'd'}, {'a', 'd'}, {'a', 'c'}}),
                      true,
                      {}});

    auto p4 = from_letters({"aaaaa", "abaae", "aacda", "ddddd", "eeeee"});
    result.push_back({"p4_induced_5",
                      p4,
                      labelled_graph(p4, {{'b', 'd'}, {'d', 'e'}, {'e', 'c'}}),
                      true,
                      {"b", "c", "d", "e"}});

    auto iso_b = from_letters({"bacd", "abcd", "dccd", "cdcd"});
    result.push_back({"isolated_b",
                      iso_b,
                      labelled_graph(iso_b, {{'a', 'c'}, {'a', 'd'}, {'c', 'd'}}),
                      true,
                      {}});
    return result;
  }

  std::vector<std::string> fixture_names() {
    return {"f7",
            "s18",
            "t19",
            "fig2_left",
            "fig2_right",
            "c3",
            "c4",
            "p4_induced_5",
            "isolated_b",
            "brandt2",
            "single_j_class",
            "nil_not_closed"};
  }

  FiniteSemigroup fixture(std::string_view name) {
    if (name == "f7") {
      return f7();
    } else if (name == "s18") {
      return paper_example_s18();
    } else if (name == "t19") {
      return paper_example_t19();
    } else if (name == "brandt2") {
      return brandt_semigroup(2);
    } else if (name == "single_j_class") {
      return rees_matrix(ReesMatrixDescriptor{
          trivial_group("1"),
          4,
          2,
          {{0, 0, std::nullopt, std::nullopt}, {std::nullopt, std::nullopt, 0, 0}},
          true,
          true});
    } else if (name == "nil_not_closed") {
      return rees_matrix(ReesMatrixDescriptor{
          trivial_group("1"),
          2,
          3,
          {{0, std::nullopt}, {std::nullopt, 0}, {0, std::nullopt}},
          true,
          true});
    }
    std::string_view key = name;
    if (key == "c3_table" || key == "c4_table") {
      key = key.substr(0, 2);
    }
    for (auto& f : paper_table_fixtures()) {
      if (f.name == key) {
        return f.semigroup;
      }
    }
    auto family = [&](std::string_view prefix) -> std::optional<std::size_t> {
      if (name.substr(0, prefix.size()) == prefix) {
        return parse_size(name.substr(prefix.size()));
      }
      return std::nullopt;
    };
    if (auto n = family("star"); n && *n >= 1) {
      return star_semigroup(*n);
    } else if (auto n = family("leftzero"); n && *n >= 1) {
      return left_zero_semigroup(*n);
    } else if (auto n = family("rightzero"); n && *n >= 1) {
      return right_zero_semigroup(*n);
    } else if (auto n = family("null"); n && *n >= 1) {
      return null_semigroup(*n);
    } else if (auto n = family("chain"); n && *n >= 1) {
      return chain_semilattice(*n);
    } else if (name.substr(0, 4) == "rect") {
      auto const spec = name.substr(4);
      auto const x    = spec.find('x');
      if (x != std::string_view::npos) {
        auto r = parse_size(spec.substr(0, x));
        auto c = parse_size(spec.substr(x + 1));
        if (r && c && *r >= 1 && *c >= 1) {
          return rectangular_band(*r, *c);
        }
      }
    }
    throw std::invalid_argument("unknown fixture \"" + std::string(name) + "\"");
  }

}  // namespace nilgraph
