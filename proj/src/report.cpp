#include "nilgraph/report.hpp"

#include <sstream>  // for ostringstream

#include "json.hpp"  // for nlohmann::json

namespace nilgraph {

  using nlohmann::json;

  GraphSummary summarize(SimpleGraph const& g, GraphKind kind) {
    GraphSummary out{kind,
                     g.edges(),
                     {},
                     is_complete(g),
                     is_empty(g),
                     all_components_complete(g),
                     isolated_vertices(g)};
    for (auto const& c : components(g)) {
      out.component_sizes.push_back(c.size());
    }
    return out;
  }

  AnalysisReport analyze(FiniteSemigroup const& s, std::string input) {
    AnalysisReport r;
    r.input = std::move(input);
    r.order = s.size();
    for (element_type a = 0; a < s.size(); ++a) {
      r.labels.push_back(s.label(a));
    }
    r.band             = is_band(s);
    r.commutative      = is_commutative(s);
    r.simple           = is_simple(s);
    r.regular          = is_regular(s);
    r.inverse          = is_inverse_semigroup(s);
    r.rectangular_band = is_rectangular_band(s);
    r.n_semigroup      = is_n_semigroup(s);
    r.zero             = zero(s);
    r.identity         = identity(s);
    r.j_class_count    = j_classes(s).classes.size();

    r.nilpotency_class = nilpotency_class(s);
    r.nilpotent        = r.nilpotency_class.has_value();
    r.witness          = non_nilpotency_witness(s);
    r.engel_witness    = positively_engel_witness(s);
    r.positively_engel = !r.engel_witness;
    r.neumann_taylor   = is_neumann_taylor(s);

    for (auto kind : {GraphKind::upper, GraphKind::lower, GraphKind::noncommuting}) {
      r.graphs.push_back(summarize(build_graph(s, kind), kind));
    }
    return r;
  }

  namespace {
    json optional_label(AnalysisReport const& r, std::optional<element_type> e) {
      return e ? json(r.labels[*e]) : json(nullptr);
    }

    std::string multiplier_label(AnalysisReport const& r, Multiplier w) {
      return w.is_identity() ? "1" : r.labels[w.element()];
    }

    json graph_json(AnalysisReport const& r, GraphSummary const& g) {
      json edges = json::array();
      for (auto [u, v] : g.edges) {
        edges.push_back({r.labels[u], r.labels[v]});
      }
      json isolated = json::array();
      for (auto v : g.isolated) {
        isolated.push_back(r.labels[v]);
      }
      return {{"kind", to_string(g.kind)},
              {"edge_count", g.edges.size()},
              {"edges", edges},
              {"component_sizes", g.component_sizes},
              {"complete", g.complete},
              {"empty", g.empty},
              {"all_components_complete", g.all_components_complete},
              {"isolated", isolated}};
    }

    std::string yes_no(bool b) {
      return b ? "yes" : "no";
    }
  }  // namespace

  std::string to_json(AnalysisReport const& r, int indent) {
    json j;
    j["input"]  = r.input;
    j["order"]  = r.order;
    j["labels"] = r.labels;
    j["structure"] = {{"band", r.band},
                      {"commutative", r.commutative},
                      {"simple", r.simple},
                      {"regular", r.regular},
                      {"inverse", r.inverse},
                      {"rectangular_band", r.rectangular_band},
                      {"n_semigroup", r.n_semigroup},
                      {"zero", optional_label(r, r.zero)},
                      {"identity", optional_label(r, r.identity)},
                      {"j_classes", r.j_class_count}};
    j["nilpotent"] = r.nilpotent;
    j["nilpotency_class"]
        = r.nilpotency_class ? json(*r.nilpotency_class) : json(nullptr);
    if (r.witness) {
      json word = json::array();
      for (auto w : r.witness->word) {
        word.push_back(multiplier_label(r, w));
      }
      j["witness"] = {{"x", r.labels[r.witness->x]},
                      {"y", r.labels[r.witness->y]},
                      {"word", word}};
    } else {
      j["witness"] = nullptr;
    }
    j["pe"] = r.positively_engel;
    if (r.engel_witness) {
      j["engel_witness"] = {{"a", r.labels[r.engel_witness->a]},
                            {"b", r.labels[r.engel_witness->b]},
                            {"c", multiplier_label(r, r.engel_witness->c)}};
    } else {
      j["engel_witness"] = nullptr;
    }
    j["nt"]     = r.neumann_taylor;
    j["graphs"] = json::object();
    for (auto const& g : r.graphs) {
      j["graphs"][to_string(g.kind)] = graph_json(r, g);
    }
    return j.dump(indent) + "\n";
  }

  std::string to_text(AnalysisReport const& r) {
    std::ostringstream out;
    out << "input: " << r.input << "\n"
        << "order: " << r.order << "\n"
        << "band: " << yes_no(r.band) << ", commutative: " << yes_no(r.commutative)
        << ", simple: " << yes_no(r.simple) << ", inverse: " << yes_no(r.inverse)
        << ", n-semigroup: " << yes_no(r.n_semigroup) << "\n"
        << "nilpotent: " << yes_no(r.nilpotent);
    if (r.nilpotency_class) {
      out << " (class " << *r.nilpotency_class << ")";
    }
    out << "\n";
    if (r.witness) {
      out << "  witness: (" << r.labels[r.witness->x] << ", "
          << r.labels[r.witness->y] << ") returns under";
      for (auto w : r.witness->word) {
        out << " " << multiplier_label(r, w);
      }
      out << "\n";
    }
    out << "positively Engel: " << yes_no(r.positively_engel) << "\n"
        << "Neumann-Taylor: " << yes_no(r.neumann_taylor) << "\n";
    for (auto const& g : r.graphs) {
      out << to_string(g.kind) << " graph: " << g.edges.size() << " edges";
      if (g.complete && r.order > 1) {
        out << ", complete";
      }
      out << ", components";
      for (auto c : g.component_sizes) {
        out << " " << c;
      }
      out << "\n";
      if (!g.edges.empty()) {
        out << " ";
        for (auto [u, v] : g.edges) {
          out << " " << r.labels[u] << "-" << r.labels[v];
        }
        out << "\n";
      }
    }
    return out.str();
  }

  namespace {
    json suite_json(SuiteReport const& r) {
      json checks = json::array();
      for (auto const& c : r.checks) {
        json failures = json::array();
        for (auto const& f : c.failures) {
          failures.push_back({{"table", f.table}, {"witness", f.witness}});
        }
        checks.push_back({{"name", c.name},
                          {"statement", c.statement},
                          {"checked", c.checked},
                          {"applicable", c.applicable},
                          {"passed", c.passed},
                          {"failure_count", c.failure_count},
                          {"failures", failures}});
      }
      return {{"corpus_size", r.corpus_size}, {"ok", r.ok()}, {"checks", checks}};
    }
  }  // namespace

  std::string to_json(SuiteReport const& r, int indent) {
    return suite_json(r).dump(indent) + "\n";
  }

  std::string to_json(VerifyReport const& r, int indent) {
    json items = json::array();
    for (auto const& i : r.items) {
      items.push_back(
          {{"name", i.name}, {"status", to_string(i.status)}, {"detail", i.detail}});
    }
    json suites = json::object();
    for (std::size_t k = 0; k < r.suites.size(); ++k) {
      suites[std::to_string(r.suite_orders[k])] = suite_json(r.suites[k]);
    }
    json j = {{"level", r.level == VerifyLevel::fast ? "fast" : "full"},
              {"seed", r.seed},
              {"ok", r.ok()},
              {"items", items},
              {"suites", suites}};
    return j.dump(indent) + "\n";
  }

  std::string to_text(VerifyReport const& r) {
    std::ostringstream out;
    for (auto const& i : r.items) {
      out << to_string(i.status) << "  " << i.name << ": " << i.detail << "\n";
    }
    for (std::size_t k = 0; k < r.suites.size(); ++k) {
      for (auto const& c : r.suites[k].checks) {
        for (auto const& f : c.failures) {
          out << "violation of " << c.name << " at order " << r.suite_orders[k]
              << ": " << f.witness << "\n"
              << f.table;
        }
      }
    }
    out << (r.ok() ? "all checks passed" : "some checks FAILED") << "\n";
    return out.str();
  }

  std::string enumeration_summary_json(
      std::size_t                               order,
      Modulo                                    modulo,
      std::size_t                               count,
      std::map<std::string, std::size_t> const& histogram,
      int                                       indent) {
    json j = {{"order", order},
              {"modulo", to_string(modulo)},
              {"count", count},
              {"per_graph_histogram", histogram}};
    return j.dump(indent) + "\n";
  }

}  // namespace nilgraph
