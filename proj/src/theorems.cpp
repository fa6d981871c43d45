#include "nilgraph/theorems.hpp"

#include <algorithm>  // for all_of, next_permutation, sort
#include <numeric>    // for iota
#include <random>     // for mt19937_64, uniform_int_distribution
#include <set>        // for set
#include <sstream>    // for ostringstream
#include <stdexcept>  // for invalid_argument

#include "nilgraph/canonical.hpp"      // for canonical_form, relabel
#include "nilgraph/cayley_io.hpp"      // for to_cayley_text
#include "nilgraph/constructions.hpp"  // for fixture, paper_table_fixtures
#include "nilgraph/enumerate.hpp"      // for all_semigroups
#include "nilgraph/nilpotency.hpp"     // for is_malcev_nilpotent

namespace nilgraph {

  SemigroupProfile::SemigroupProfile(FiniteSemigroup s)
      : semigroup(std::move(s)),
        upper(upper_non_nilpotent_graph(semigroup)),
        lower(lower_non_nilpotent_graph(semigroup)),
        noncommuting(non_commuting_graph(semigroup)) {}

  namespace {
    std::string pair_text(FiniteSemigroup const& s, std::size_t x, std::size_t y) {
      return "{" + s.label(static_cast<element_type>(x)) + ", "
             + s.label(static_cast<element_type>(y)) + "}";
    }

    std::optional<std::string> subgraph_violation(FiniteSemigroup const& s,
                                                  SimpleGraph const&     g,
                                                  SimpleGraph const&     h,
                                                  char const*            gname,
                                                  char const*            hname) {
      for (auto [u, v] : g.edges()) {
        if (!h.adjacent(u, v)) {
          return std::string(gname) + " edge " + pair_text(s, u, v)
                 + " missing from " + hname;
        }
      }
      return std::nullopt;
    }

    bool is_prime(std::size_t n) {
      if (n < 2) {
        return false;
      }
      for (std::size_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
          return false;
        }
      }
      return true;
    }

    bool components_complete_and_large(SimpleGraph const& g) {
      auto const cs = components(g);
      return all_components_complete(g)
             && std::all_of(cs.begin(), cs.end(),
                            [](auto const& c) { return c.size() >= 2; });
    }

    bool is_closed_set(FiniteSemigroup const&          s,
                       std::vector<std::size_t> const& set) {
      std::vector<element_type> members(set.begin(), set.end());
      return ElementSubset(s, members).is_closed();
    }

    // s t = t s = s for s in the ideal and t in the top.
    bool is_total_ideal_pair(FiniteSemigroup const&          s,
                             std::vector<std::size_t> const& top,
                             std::vector<std::size_t> const& ideal) {
      for (auto t : top) {
        for (auto i : ideal) {
          auto const a = static_cast<element_type>(i);
          auto const b = static_cast<element_type>(t);
          if (s.product(a, b) != a || s.product(b, a) != a) {
            return false;
          }
        }
      }
      return true;
    }

    std::string components_text(FiniteSemigroup const&                       s,
                                std::vector<std::vector<std::size_t>> const& cs) {
      std::string out;
      for (auto const& c : cs) {
        out += out.empty() ? "{" : ", {";
        for (std::size_t i = 0; i < c.size(); ++i) {
          out += (i ? " " : "") + s.label(static_cast<element_type>(c[i]));
        }
        out += "}";
      }
      return out;
    }

    std::vector<TheoremCheck> make_checks() {
      std::vector<TheoremCheck> cs;

      cs.push_back({"edge_containment",
                    "every edge of L is an edge of N, and every edge of N is "
                    "an edge of M",
                    [](SemigroupProfile const& p) {
                      if (auto v = subgraph_violation(p.semigroup, p.lower,
                                                      p.upper, "L", "N")) {
                        return CheckResult::fail(*v);
                      }
                      if (auto v = subgraph_violation(p.semigroup, p.upper,
                                                      p.noncommuting, "N", "M")) {
                        return CheckResult::fail(*v);
                      }
                      return CheckResult::pass();
                    }});

      cs.push_back({"complete_iff_rectangular_band",
                    "L complete, N complete, M complete and S a rectangular "
                    "band are equivalent",
                    [](SemigroupProfile const& p) {
                      bool const l = is_complete(p.lower);
                      bool const n = is_complete(p.upper);
                      bool const m = is_complete(p.noncommuting);
                      bool const r = is_rectangular_band(p.semigroup);
                      if (l == n && n == m && m == r) {
                        return CheckResult::pass();
                      }
                      std::ostringstream w;
                      w << "L complete " << l << ", N complete " << n
                        << ", M complete " << m << ", rectangular band " << r;
                      return CheckResult::fail(w.str());
                    }});

      cs.push_back({"totally_connected_idempotent",
                    "a vertex of N adjacent to all others is idempotent",
                    [](SemigroupProfile const& p) {
                      auto const& s          = p.semigroup;
                      bool        applicable = false;
                      for (element_type a = 0; a < s.size(); ++a) {
                        if (s.size() > 1 && is_totally_connected(p.upper, a)) {
                          applicable = true;
                          if (s.product(a, a) != a) {
                            return CheckResult::fail(s.label(a)
                                                     + " is totally connected "
                                                       "but not idempotent");
                          }
                        }
                      }
                      return applicable ? CheckResult::pass()
                                        : CheckResult::vacuous();
                    }});

      cs.push_back({"band_upper_equals_noncommuting",
                    "in a band, N = M",
                    [](SemigroupProfile const& p) {
                      if (!is_band(p.semigroup)) {
                        return CheckResult::vacuous();
                      }
                      if (auto v = subgraph_violation(p.semigroup, p.noncommuting,
                                                      p.upper, "M", "N")) {
                        return CheckResult::fail(*v);
                      }
                      return CheckResult::pass();
                    }});

      cs.push_back({"band_complete_components_subsemigroups",
                    "in a band, each complete N-component is a subsemigroup, "
                    "and without isolated vertices every N-component is",
                    [](SemigroupProfile const& p) {
                      if (!is_band(p.semigroup)) {
                        return CheckResult::vacuous();
                      }
                      bool const no_isolated = isolated_vertices(p.upper).empty();
                      for (auto const& c : components(p.upper)) {
                        bool const complete = is_complete(p.upper.induced(c));
                        if ((complete || no_isolated)
                            && !is_closed_set(p.semigroup, c)) {
                          return CheckResult::fail(
                              "component "
                              + components_text(p.semigroup, {c})
                              + " is not a subsemigroup");
                        }
                      }
                      return CheckResult::pass();
                    }});

      cs.push_back({"empty_upper_engel",
                    "if N is empty then S is positively Engel",
                    [](SemigroupProfile const& p) {
                      if (!is_empty(p.upper)) {
                        return CheckResult::vacuous();
                      }
                      if (auto w = positively_engel_witness(p.semigroup)) {
                        auto const& s = p.semigroup;
                        return CheckResult::fail(
                            "N is empty but (" + s.label(w->a) + ", "
                            + s.label(w->b) + ") never meets under powers of "
                            + to_string(s, w->c));
                      }
                      return CheckResult::pass();
                    }});

      cs.push_back({"empty_upper_unique_inverses",
                    "if N is empty then every element has at most one inverse",
                    [](SemigroupProfile const& p) {
                      if (!is_empty(p.upper)) {
                        return CheckResult::vacuous();
                      }
                      auto const& s = p.semigroup;
                      for (element_type a = 0; a < s.size(); ++a) {
                        if (inverses_of(s, a).size() > 1) {
                          return CheckResult::fail(s.label(a)
                                                   + " has several inverses");
                        }
                      }
                      return CheckResult::pass();
                    }});

      cs.push_back({"nilpotent_engel_neumann_taylor",
                    "a nilpotent semigroup is positively Engel and "
                    "Neumann-Taylor",
                    [](SemigroupProfile const& p) {
                      if (!is_malcev_nilpotent(p.semigroup)) {
                        return CheckResult::vacuous();
                      }
                      if (!is_positively_engel(p.semigroup)) {
                        return CheckResult::fail("nilpotent but not "
                                                 "positively Engel");
                      }
                      if (!is_neumann_taylor(p.semigroup)) {
                        return CheckResult::fail("nilpotent but not "
                                                 "Neumann-Taylor");
                      }
                      return CheckResult::pass();
                    }});

      cs.push_back({"lower_components_in_j_class",
                    "the vertices of an L-component lie in one J-class",
                    [](SemigroupProfile const& p) {
                      auto const j = j_classes(p.semigroup);
                      for (auto const& c : components(p.lower)) {
                        for (auto v : c) {
                          if (!j.same_class(static_cast<element_type>(c[0]),
                                            static_cast<element_type>(v))) {
                            return CheckResult::fail(
                                "L-component "
                                + components_text(p.semigroup, {c})
                                + " meets two J-classes");
                          }
                        }
                      }
                      return CheckResult::pass();
                    }});

      cs.push_back({"lower_connected_simple",
                    "if L is connected then S is simple",
                    [](SemigroupProfile const& p) {
                      if (!is_connected(p.lower)) {
                        return CheckResult::vacuous();
                      }
                      return is_simple(p.semigroup)
                                 ? CheckResult::pass()
                                 : CheckResult::fail("L connected, S not simple");
                    }});

      cs.push_back({"prime_order_lower_connected_complete",
                    "if |S| is prime and L is connected then L is complete",
                    [](SemigroupProfile const& p) {
                      if (!is_prime(p.semigroup.size())
                          || !is_connected(p.lower)) {
                        return CheckResult::vacuous();
                      }
                      return is_complete(p.lower)
                                 ? CheckResult::pass()
                                 : CheckResult::fail("L connected, not complete");
                    }});

      cs.push_back({"no_isolated_cyclic_component",
                    "if N has no isolated vertex then each <x> lies in the "
                    "N-component of x",
                    [](SemigroupProfile const& p) {
                      if (!isolated_vertices(p.upper).empty()) {
                        return CheckResult::vacuous();
                      }
                      auto const&              s  = p.semigroup;
                      auto const               cs = components(p.upper);
                      std::vector<std::size_t> comp(s.size());
                      for (std::size_t i = 0; i < cs.size(); ++i) {
                        for (auto v : cs[i]) {
                          comp[v] = i;
                        }
                      }
                      for (element_type x = 0; x < s.size(); ++x) {
                        element_type power = x;
                        for (std::size_t k = 0; k < s.size(); ++k) {
                          if (comp[power] != comp[x]) {
                            return CheckResult::fail(
                                "a power " + s.label(power) + " of " + s.label(x)
                                + " lies in another component");
                          }
                          power = s.product(power, x);
                        }
                      }
                      return CheckResult::pass();
                    }});

      cs.push_back({"complete_components_band_chain",
                    "if every N-component is complete with at least two "
                    "elements then S is a band, every component is a "
                    "subsemigroup and S = S_s(1) < ... < S_s(k) for some "
                    "ordering s of the components",
                    [](SemigroupProfile const& p) {
                      auto const& s = p.semigroup;
                      if (!components_complete_and_large(p.upper)) {
                        return CheckResult::vacuous();
                      }
                      if (!is_band(s)) {
                        return CheckResult::fail("not a band");
                      }
                      auto const cs = components(p.upper);
                      for (auto const& c : cs) {
                        if (!is_closed_set(s, c)) {
                          return CheckResult::fail(
                              "component " + components_text(s, {c})
                              + " is not a subsemigroup");
                        }
                      }
                      std::vector<std::size_t> order(cs.size());
                      std::iota(order.begin(), order.end(), 0);
                      do {
                        bool chain = true;
                        for (std::size_t i = 0; i < order.size() && chain; ++i) {
                          for (std::size_t j = i + 1; j < order.size() && chain;
                               ++j) {
                            chain = is_total_ideal_pair(s, cs[order[i]],
                                                        cs[order[j]]);
                          }
                        }
                        if (chain) {
                          return CheckResult::pass();
                        }
                      } while (std::next_permutation(order.begin(), order.end()));
                      return CheckResult::fail("no ordering of the components "
                                               + components_text(s, cs)
                                               + " is a chain of total ideal "
                                                 "extensions");
                    }});

      cs.push_back({"band_complete_components_semilattice",
                    "in a band whose N-components are all complete, any two "
                    "components form a total ideal extension one way or the "
                    "other, or multiply into a single one-element component",
                    [](SemigroupProfile const& p) {
                      auto const& s = p.semigroup;
                      if (!is_band(s) || !all_components_complete(p.upper)) {
                        return CheckResult::vacuous();
                      }
                      auto const cs = components(p.upper);
                      for (std::size_t a = 0; a < cs.size(); ++a) {
                        for (std::size_t b = a + 1; b < cs.size(); ++b) {
                          if (is_total_ideal_pair(s, cs[a], cs[b])
                              || is_total_ideal_pair(s, cs[b], cs[a])) {
                            continue;
                          }
                          std::set<element_type> prods;
                          for (auto x : cs[a]) {
                            for (auto y : cs[b]) {
                              prods.insert(s.product(x, y));
                            }
                          }
                          bool singleton = false;
                          if (prods.size() == 1) {
                            for (auto const& c : cs) {
                              singleton = singleton
                                          || (c.size() == 1
                                              && c[0] == *prods.begin());
                            }
                          }
                          if (!singleton) {
                            return CheckResult::fail(
                                "components "
                                + components_text(s, {cs[a], cs[b]})
                                + " fit none of the three shapes");
                          }
                        }
                      }
                      return CheckResult::pass();
                    }});

      cs.push_back({"nilpotentizer_center",
                    "Z(S) lies in nil(S), and nil_S(x) Z(S) lies in nil_S(x)",
                    [](SemigroupProfile const& p) {
                      auto const& s = p.semigroup;
                      auto const  z = center(s);
                      if (!z.is_subset_of(nil_of_semigroup(s))) {
                        return CheckResult::fail("Z(S) is not inside nil(S)");
                      }
                      for (element_type x = 0; x < s.size(); ++x) {
                        auto const nx = nilpotentizer(s, x);
                        for (auto y : nx.elements()) {
                          for (auto c : z.elements()) {
                            if (!nx.contains(s.product(y, c))) {
                              return CheckResult::fail(
                                  s.label(y) + " in nil(" + s.label(x) + "), "
                                  + s.label(c) + " central, product outside");
                            }
                          }
                        }
                      }
                      return CheckResult::pass();
                    }});

      cs.push_back({"no_p4_order_4",
                    "no semigroup of order 4 has N isomorphic to P4",
                    [](SemigroupProfile const& p) {
                      if (p.semigroup.size() != 4) {
                        return CheckResult::vacuous();
                      }
                      return is_path_graph(p.upper)
                                 ? CheckResult::fail("N is P4")
                                 : CheckResult::pass();
                    }});

      cs.push_back({"no_cycle_order_ge_5",
                    "no semigroup of order n >= 5 has N isomorphic to C_n",
                    [](SemigroupProfile const& p) {
                      if (p.semigroup.size() < 5) {
                        return CheckResult::vacuous();
                      }
                      return is_cycle_graph(p.upper)
                                 ? CheckResult::fail("N is a cycle")
                                 : CheckResult::pass();
                    }});

      cs.push_back({"small_order_n_semigroup",
                    "every semigroup of order at most 4 is an n-semigroup",
                    [](SemigroupProfile const& p) {
                      auto const& s = p.semigroup;
                      if (s.size() > 4) {
                        return CheckResult::vacuous();
                      }
                      for (element_type x = 0; x < s.size(); ++x) {
                        if (!nilpotentizer(s, x).is_closed()) {
                          return CheckResult::fail("nil(" + s.label(x)
                                                   + ") is not a subsemigroup");
                        }
                      }
                      return CheckResult::pass();
                    }});
      return cs;
    }
  }  // namespace

  std::vector<TheoremCheck> const& theorem_checks() {
    static std::vector<TheoremCheck> const checks = make_checks();
    return checks;
  }

  TheoremCheck const& theorem_check(std::string const& name) {
    for (auto const& c : theorem_checks()) {
      if (c.name == name) {
        return c;
      }
    }
    throw std::invalid_argument("unknown check \"" + name + "\"");
  }

  bool SuiteReport::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](auto const& c) {
      return c.failure_count == 0;
    });
  }

  void SuiteReport::add(SemigroupProfile const&          p,
                        std::vector<TheoremCheck> const& cs) {
    if (checks.empty()) {
      for (auto const& c : cs) {
        checks.push_back(CheckTally{c.name, c.statement, 0, 0, 0, {}, 0});
      }
    }
    ++corpus_size;
    for (std::size_t i = 0; i < cs.size(); ++i) {
      auto const r = cs[i].run(p);
      auto&      t = checks[i];
      ++t.checked;
      t.applicable += r.applicable ? 1 : 0;
      if (r.violation) {
        if (t.failures.size() < MAX_RECORDED_FAILURES) {
          t.failures.push_back({to_cayley_text(p.semigroup), *r.violation});
        }
        ++t.failure_count;
      } else if (r.applicable) {
        ++t.passed;
      }
    }
  }

  SuiteReport verify_theorem_suite(std::vector<FiniteSemigroup> const& corpus,
                                   std::vector<TheoremCheck> const&    checks) {
    SuiteReport report;
    for (auto const& c : checks) {
      report.checks.push_back(CheckTally{c.name, c.statement, 0, 0, 0, {}, 0});
    }
    for (auto const& s : corpus) {
      report.add(SemigroupProfile(s), checks);
    }
    return report;
  }

  std::map<std::string, std::size_t> upper_graph_census(std::size_t n,
                                                        std::size_t jobs) {
    std::map<std::string, std::size_t> census;
    for (auto const& g : all_graphs_on(n)) {
      census[graph_canonical_key(g)] = 0;
    }
    enumerate_semigroups(
        n,
        Modulo::iso_anti,
        [&census](FiniteSemigroup const& s) {
          ++census[graph_canonical_key(upper_non_nilpotent_graph(s))];
          return true;
        },
        EnumerationOptions{jobs});
    return census;
  }

  std::vector<FiniteSemigroup> sample_relabelled(
      std::vector<FiniteSemigroup> const& classes,
      std::size_t                         count,
      std::uint64_t                       seed) {
    std::vector<FiniteSemigroup> out;
    if (classes.empty()) {
      return out;
    }
    std::mt19937_64                            rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, classes.size() - 1);
    for (std::size_t i = 0; i < count; ++i) {
      auto const&               s = classes[pick(rng)];
      std::vector<element_type> perm(s.size());
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      out.push_back(
          FiniteSemigroup::from_flat(s.size(), relabel(s.flat(), perm)));
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // verify_paper
  ////////////////////////////////////////////////////////////////////////

  VerifyLevel parse_verify_level(std::string const& text) {
    if (text == "fast") {
      return VerifyLevel::fast;
    } else if (text == "full") {
      return VerifyLevel::full;
    }
    throw std::invalid_argument("level must be fast or full, got \"" + text
                                + "\"");
  }

  std::string to_string(ItemStatus s) {
    switch (s) {
      case ItemStatus::pass:
        return "pass";
      case ItemStatus::fail:
        return "fail";
      default:
        return "skipped";
    }
  }

  bool VerifyReport::ok() const {
    return std::none_of(items.begin(), items.end(), [](auto const& i) {
             return i.status == ItemStatus::fail;
           })
           && std::all_of(suites.begin(), suites.end(),
                          [](auto const& s) { return s.ok(); });
  }

  namespace {
    VerifyItem item(std::string name, bool ok, std::string detail) {
      return {std::move(name), ok ? ItemStatus::pass : ItemStatus::fail,
              std::move(detail)};
    }

    std::string edges_text(SimpleGraph const& g) {
      std::string out = "[";
      for (auto [u, v] : g.edges()) {
        out += (out.size() > 1 ? " " : "") + g.label(u) + "-" + g.label(v);
      }
      return out + "]";
    }

    // Every n^(n^2) table, filtered for associativity and bucketed by
    // canonical form.
    std::size_t naive_class_count(std::size_t n, Modulo m) {
      std::size_t const         cells = n * n;
      std::vector<element_type> t(cells, 0);
      std::set<std::vector<element_type>> classes;
      while (true) {
        bool assoc = true;
        for (std::size_t a = 0; a < n && assoc; ++a) {
          for (std::size_t b = 0; b < n && assoc; ++b) {
            for (std::size_t c = 0; c < n && assoc; ++c) {
              assoc = t[t[a * n + b] * n + c] == t[a * n + t[b * n + c]];
            }
          }
        }
        if (assoc) {
          classes.insert(
              canonical_form(FiniteSemigroup::from_flat(n, t),
                             m == Modulo::iso_anti)
                  .flat);
        }
        std::size_t i = cells;
        while (i > 0 && t[i - 1] == n - 1) {
          t[--i] = 0;
        }
        if (i == 0) {
          break;
        }
        ++t[i - 1];
      }
      return classes.size();
    }
  }  // namespace

  std::vector<VerifyItem> fixture_checks() {
    std::vector<VerifyItem> items;
    {
      auto const s  = f7();
      auto const N  = upper_non_nilpotent_graph(s);
      auto const L  = lower_non_nilpotent_graph(s);
      bool const ok = !is_malcev_nilpotent(s) && !is_positively_engel(s)
                      && N.adjacent(s.at_label("u"), s.at_label("e_11"))
                      && is_empty(L);
      items.push_back(item("f7", ok,
                           "not nilpotent, not positively Engel, N has "
                           "{u, e_11}, L empty; N = "
                               + edges_text(N)));
    }
    {
      auto const s = paper_example_s18();
      std::vector<Multiplier> word{Multiplier(s.at_label("w")),
                                   Multiplier(s.at_label("v"))};
      auto const [l, r] = lambda_rho(s, s.at_label("e_31"), s.at_label("e_42"),
                                     word);
      bool const ok     = is_empty(upper_non_nilpotent_graph(s))
                      && !is_malcev_nilpotent(s) && is_positively_engel(s)
                      && l == s.at_label("e_31") && r == s.at_label("e_42");
      items.push_back(item("s18", ok,
                           "N empty, not nilpotent, positively Engel, "
                           "lambda_2(e_31, e_42, w, v) = "
                               + s.label(l) + ", rho_2 = " + s.label(r)));
    }
    {
      auto const s  = paper_example_t19();
      bool const ok = is_empty(upper_non_nilpotent_graph(s))
                      && !is_neumann_taylor(s);
      items.push_back(item("t19", ok, "N empty, not Neumann-Taylor"));
    }
    for (std::size_t n : {2, 3, 4}) {
      auto const s      = star_semigroup(n);
      auto const N      = upper_non_nilpotent_graph(s);
      auto const centre = star_center(N);
      bool const ok = is_star_graph(N) && centre && s.label(static_cast<element_type>(*centre)) == "x0";
      items.push_back(item("star" + std::to_string(n), ok,
                           "N is a star centred at x0; N = " + edges_text(N)));
    }
    for (auto const& f : paper_table_fixtures()) {
      auto const N  = upper_non_nilpotent_graph(f.semigroup);
      bool       ok = false;
      if (!f.induced_on.empty()) {
        std::vector<std::size_t> vs;
        for (auto const& l : f.induced_on) {
          vs.push_back(f.semigroup.at_label(l));
        }
        ok = N.induced(vs) == f.expected_upper.induced(vs)
             && is_path_graph(N.induced(vs));
      } else if (f.exact) {
        ok = N == f.expected_upper;
      } else {
        ok = graph_isomorphic(N, f.expected_upper);
      }
      if (f.name == "isolated_b") {
        ok = ok && !is_band(f.semigroup);
      }
      items.push_back(item(f.name, ok, "N = " + edges_text(N)));
    }
    return items;
  }

  VerifyReport verify_paper(VerifyLevel level, std::uint64_t seed,
                            std::size_t jobs) {
    VerifyReport report{level, seed, {}, {}, {}};
    auto         fx = fixture_checks();
    report.items.insert(report.items.end(), fx.begin(), fx.end());

    EnumerationOptions const opts{jobs};
    for (std::size_t n = 1; n <= 3; ++n) {
      for (auto m : {Modulo::iso, Modulo::iso_anti}) {
        auto const got  = count_semigroups(n, m, opts);
        auto const want = naive_class_count(n, m);
        report.items.push_back(item(
            "count_order_" + std::to_string(n) + "_" + to_string(m), got == want,
            std::to_string(got) + " classes, naive filter gives "
                + std::to_string(want)));
      }
    }
    auto const corpus4 = all_semigroups(4, Modulo::iso_anti, opts);
    report.items.push_back(item("count_order_4_isoanti", corpus4.size() == 126,
                                std::to_string(corpus4.size())
                                    + " classes, expected 126"));

    {
      auto const census   = upper_graph_census(4, jobs);
      auto const p4key    = graph_canonical_key(path_graph(4));
      std::size_t realized = 0;
      for (auto const& [key, count] : census) {
        realized += (key != p4key && count > 0) ? 1 : 0;
      }
      bool const ok = census.at(p4key) == 0 && realized == census.size() - 1;
      report.items.push_back(item(
          "p4_census_order_4", ok,
          "P4 realized " + std::to_string(census.at(p4key)) + " times; "
              + std::to_string(realized) + " of "
              + std::to_string(census.size() - 1) + " other graphs realized"));
    }

    {
      std::size_t checked = 0, agree = 0;
      for (std::size_t n = 1; n <= 3; ++n) {
        EnumerationOptions all{jobs};
        all.all_tables = true;
        enumerate_semigroups(
            n,
            Modulo::iso,
            [&](FiniteSemigroup const& s) {
              ++checked;
              agree += is_malcev_nilpotent(s) == is_nilpotent_bruteforce(s);
              return true;
            },
            all);
      }
      for (auto const& s : sample_relabelled(corpus4, 200, seed)) {
        ++checked;
        agree += is_malcev_nilpotent(s) == is_nilpotent_bruteforce(s);
      }
      report.items.push_back(item("nilpotency_cross_check", agree == checked,
                                  std::to_string(agree) + " of "
                                      + std::to_string(checked) + " agree"));
    }

    std::vector<std::size_t> orders{1, 2, 3, 4};
    if (level == VerifyLevel::full) {
      orders.push_back(5);
    }
    for (auto n : orders) {
      SuiteReport suite;
      enumerate_semigroups(
          n,
          Modulo::iso,
          [&suite](FiniteSemigroup const& s) {
            suite.add(SemigroupProfile(s), theorem_checks());
            return true;
          },
          opts);
      report.items.push_back(item("theorem_suite_order_" + std::to_string(n),
                                  suite.ok(),
                                  std::to_string(suite.corpus_size)
                                      + " semigroups"));
      report.suites.push_back(std::move(suite));
      report.suite_orders.push_back(n);
    }
    if (level == VerifyLevel::fast) {
      report.items.push_back({"no_c5_order_5", ItemStatus::skipped,
                              "run with --level full"});
    } else {
      auto const& suite5 = report.suites.back();
      auto        it     = std::find_if(
          suite5.checks.begin(), suite5.checks.end(),
          [](auto const& c) { return c.name == "no_cycle_order_ge_5"; });
      report.items.push_back(item("no_c5_order_5", it->failure_count == 0,
                                  std::to_string(it->passed) + " of "
                                      + std::to_string(it->checked)
                                      + " order-5 semigroups have N != C5"));
    }
    return report;
  }

}  // namespace nilgraph
