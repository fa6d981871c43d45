// Analysis reports and the JSON/text renderings used by the command line
// tool. Schemas are described in docs/formats.md.

#ifndef NILGRAPH_REPORT_HPP_
#define NILGRAPH_REPORT_HPP_

#include <cstddef>   // for size_t
#include <map>       // for map
#include <optional>  // for optional
#include <string>    // for string
#include <vector>    // for vector

#include "nilgraph/canonical.hpp"   // for Modulo
#include "nilgraph/graph.hpp"       // for SimpleGraph, GraphKind
#include "nilgraph/nilpotency.hpp"  // for CycleWitness, EngelWitness
#include "nilgraph/semigroup.hpp"   // for FiniteSemigroup
#include "nilgraph/theorems.hpp"    // for SuiteReport, VerifyReport

namespace nilgraph {

  struct GraphSummary {
    GraphKind                             kind;
    std::vector<SimpleGraph::edge_type>   edges;
    std::vector<std::size_t>              component_sizes;
    bool                                  complete;
    bool                                  empty;
    bool                                  all_components_complete;
    std::vector<std::size_t>              isolated;
  };

  GraphSummary summarize(SimpleGraph const& g, GraphKind kind);

  struct AnalysisReport {
    std::string              input;
    std::size_t              order;
    std::vector<std::string> labels;

    bool band;
    bool commutative;
    bool simple;
    bool regular;
    bool inverse;
    bool rectangular_band;
    bool n_semigroup;

    std::optional<element_type> zero;
    std::optional<element_type> identity;
    std::size_t                 j_class_count;

    bool                        nilpotent;
    std::optional<std::size_t>  nilpotency_class;
    std::optional<CycleWitness> witness;
    bool                        positively_engel;
    std::optional<EngelWitness> engel_witness;
    bool                        neumann_taylor;

    std::vector<GraphSummary> graphs;  // upper, lower, noncommuting
  };

  AnalysisReport analyze(FiniteSemigroup const& s, std::string input);

  std::string to_json(AnalysisReport const& r, int indent = 2);
  std::string to_text(AnalysisReport const& r);

  std::string to_json(SuiteReport const& r, int indent = 2);
  std::string to_json(VerifyReport const& r, int indent = 2);
  std::string to_text(VerifyReport const& r);

  //! {"order", "modulo", "count", "per_graph_histogram"}; the histogram maps
  //! graph_canonical_key of the upper graph to a count.
  std::string enumeration_summary_json(std::size_t                               order,
                                       Modulo                                    modulo,
                                       std::size_t                               count,
                                       std::map<std::string, std::size_t> const& histogram,
                                       int indent = 2);

}  // namespace nilgraph

#endif  // NILGRAPH_REPORT_HPP_
