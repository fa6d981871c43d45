// nilgraph: command line front end.
//
// Exit status: 0 on success, 1 when a verification check fails, 2 for bad
// input (unreadable or malformed tables, unknown names, limits exceeded).

#include <cstdint>     // for uint64_t
#include <filesystem>  // for path, create_directories
#include <fstream>     // for ofstream, ifstream
#include <iomanip>     // for setw, setfill
#include <iostream>    // for cout, cerr, cin
#include <map>         // for map
#include <sstream>     // for ostringstream
#include <string>      // for string

#include "CLI11.hpp"
#include "json.hpp"

#include "nilgraph/cayley_io.hpp"
#include "nilgraph/constructions.hpp"
#include "nilgraph/enumerate.hpp"
#include "nilgraph/error.hpp"
#include "nilgraph/graph.hpp"
#include "nilgraph/report.hpp"
#include "nilgraph/theorems.hpp"

namespace fs = std::filesystem;
using namespace nilgraph;

namespace {

  constexpr int EXIT_CHECK_FAILED = 1;
  constexpr int EXIT_BAD_INPUT    = 2;

  struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
  };

  // "fixture:NAME", "-" for standard input, or a path.
  FiniteSemigroup load(std::string const& spec) {
    if (spec.rfind("fixture:", 0) == 0) {
      return fixture(spec.substr(8));
    }
    if (spec == "-") {
      return parse_cayley_table(std::cin, "<stdin>");
    }
    if (!fs::exists(spec)) {
      throw InputError("no such file: " + spec);
    }
    return read_cayley_table(spec);
  }

  void write_output(std::string const& text, std::string const& path) {
    if (path.empty() || path == "-") {
      std::cout << text;
      return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
      throw InputError("cannot write " + path);
    }
    out << text;
  }

  // A named family (p4, c5, k4, star5, empty3), a JSON edge list, or a path
  // to a file holding one.
  SimpleGraph load_graph(std::string const& spec) {
    std::string text = spec;
    if (spec.find('{') == std::string::npos) {
      if (!fs::exists(spec)) {
        return named_graph(spec);
      }
      std::ifstream     in(spec);
      std::ostringstream buf;
      buf << in.rdbuf();
      text = buf.str();
    }
    auto const j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.is_object() || !j.contains("order")
        || !j.contains("edges")) {
      throw InputError("a graph must be a family name or JSON "
                       "{\"order\": n, \"edges\": [[i, j], ...]}");
    }
    std::vector<SimpleGraph::edge_type> edges;
    for (auto const& e : j.at("edges")) {
      edges.emplace_back(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>());
    }
    return SimpleGraph::from_edges(j.at("order").get<std::size_t>(), edges);
  }

  int cmd_analyze(std::string const& input, std::string const& format) {
    auto const s = load(input);
    auto const r = analyze(s, input);
    std::cout << (format == "text" ? to_text(r) : to_json(r));
    return 0;
  }

  int cmd_graph(std::string const& input,
                std::string const& kind,
                std::string const& out_format,
                std::string const& out_path) {
    auto const s = load(input);
    auto const g = build_graph(s, parse_graph_kind(kind));
    write_output(out_format == "json" ? to_json(g) + "\n" : to_dot(g, kind),
                 out_path);
    return 0;
  }

  int cmd_enumerate(std::size_t        order,
                    std::string const& modulo_text,
                    std::string const& emit,
                    std::size_t        jobs,
                    bool               allow_6) {
    auto const modulo = parse_modulo(modulo_text);
    if (!emit.empty()) {
      fs::create_directories(emit);
    }
    std::map<std::string, std::size_t> histogram;
    std::size_t                        count = 0;
    bool const keyed = order <= GRAPH_CANONICAL_MAX_ORDER;
    enumerate_semigroups(
        order,
        modulo,
        [&](FiniteSemigroup const& s) {
          if (keyed) {
            ++histogram[graph_canonical_key(upper_non_nilpotent_graph(s))];
          }
          if (!emit.empty()) {
            std::ostringstream name;
            name << std::setw(5) << std::setfill('0') << count << ".txt";
            std::ofstream out(fs::path(emit) / name.str(), std::ios::binary);
            write_cayley_table(out, s);
          }
          ++count;
          return true;
        },
        EnumerationOptions{jobs, allow_6});
    std::cout << enumeration_summary_json(order, modulo, count, histogram);
    return 0;
  }

  int cmd_realize(std::string const& graph_spec, std::size_t order,
                  std::size_t jobs) {
    auto const g     = load_graph(graph_spec);
    auto const found = realizability_search(g, order, jobs);
    if (!found) {
      std::cout << "none\n";
    } else {
      write_cayley_table(std::cout, *found);
    }
    return 0;
  }

  int cmd_verify(std::string const& level, std::uint64_t seed,
                 std::size_t jobs, std::string const& format) {
    auto const r = verify_paper(parse_verify_level(level), seed, jobs);
    std::cout << (format == "text" ? to_text(r) : to_json(r));
    return r.ok() ? 0 : EXIT_CHECK_FAILED;
  }

  int cmd_export_fixtures(std::string const& dir) {
    fs::create_directories(dir);
    for (auto const& name : fixture_names()) {
      std::ofstream out(fs::path(dir) / (name + ".txt"), std::ios::binary);
      if (!out) {
        throw InputError("cannot write into " + dir);
      }
      write_cayley_table(out, fixture(name));
      std::cout << (fs::path(dir) / (name + ".txt")).string() << "\n";
    }
    return 0;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nilpotency and non-nilpotent graphs of finite semigroups"};
  app.require_subcommand(1);

  std::string input, format = "json", kind = "upper", out_format = "dot",
                     out_path, modulo = "isoanti", emit, graph_spec,
                     level = "fast";
  std::size_t   order = 4, jobs = 1;
  bool          allow_6 = false;
  std::uint64_t seed    = DEFAULT_SEED;

  auto* analyze_cmd = app.add_subcommand("analyze", "Report on one semigroup");
  analyze_cmd->add_option("input", input, "Table file, - for stdin, or fixture:NAME")
      ->required();
  analyze_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  auto* graph_cmd = app.add_subcommand("graph", "Export one of the three graphs");
  graph_cmd->add_option("input", input, "Table file, - for stdin, or fixture:NAME")
      ->required();
  graph_cmd->add_option("--kind", kind)
      ->check(CLI::IsMember({"upper", "lower", "noncommuting"}));
  graph_cmd->add_option("--out", out_format, "Output format")
      ->check(CLI::IsMember({"dot", "json"}));
  graph_cmd->add_option("-o,--output", out_path, "Output file (default stdout)");

  auto* enum_cmd = app.add_subcommand("enumerate", "Enumerate semigroups of an order");
  enum_cmd->add_option("--order", order)->required()->check(CLI::Range(1, 6));
  enum_cmd->add_option("--modulo", modulo)
      ->check(CLI::IsMember({"iso", "isoanti", "iso_anti", "iso-anti"}));
  enum_cmd->add_option("--emit", emit, "Write one table file per class here");
  enum_cmd->add_option("--jobs", jobs, "Worker threads, 0 for all cores");
  enum_cmd->add_flag("--allow-order-6", allow_6);

  auto* realize_cmd = app.add_subcommand(
      "realize", "Find a semigroup whose upper graph is isomorphic to a graph");
  realize_cmd->add_option("--graph", graph_spec, "p4, c5, k4, star5, ... or JSON")
      ->required();
  realize_cmd->add_option("--order", order)->required();
  realize_cmd->add_option("--jobs", jobs);

  auto* verify_cmd = app.add_subcommand("verify-paper",
                                        "Check the named examples and graph properties");
  verify_cmd->add_option("--level", level)->check(CLI::IsMember({"fast", "full"}));
  verify_cmd->add_option("--seed", seed);
  verify_cmd->add_option("--jobs", jobs);
  verify_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  auto* export_cmd = app.add_subcommand("export-fixtures",
                                        "Write the named examples as table files");
  std::string export_dir = "fixtures";
  export_cmd->add_option("--out", export_dir);

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return EXIT_BAD_INPUT;
  }

  try {
    if (*analyze_cmd) {
      return cmd_analyze(input, format);
    } else if (*graph_cmd) {
      return cmd_graph(input, kind, out_format, out_path);
    } else if (*enum_cmd) {
      return cmd_enumerate(order, modulo, emit, jobs, allow_6);
    } else if (*realize_cmd) {
      return cmd_realize(graph_spec, order, jobs);
    } else if (*verify_cmd) {
      return cmd_verify(level, seed, jobs, format);
    } else if (*export_cmd) {
      return cmd_export_fixtures(export_dir);
    }
  } catch (NotAssociative const& e) {
    auto const [a, b, c] = e.triple();
    nlohmann::json j     = {{"error", "NotAssociative"},
                        {"message", e.what()},
                        {"triple", {a, b, c}}};
    std::cerr << j.dump() << "\n";
    return EXIT_BAD_INPUT;
  } catch (ParseError const& e) {
    nlohmann::json j = {{"error", "ParseError"},
                        {"message", e.what()},
                        {"line", e.line()},
                        {"column", e.column()}};
    std::cerr << j.dump() << "\n";
    return EXIT_BAD_INPUT;
  } catch (std::exception const& e) {
    nlohmann::json j = {{"error", "InputError"}, {"message", e.what()}};
    std::cerr << j.dump() << "\n";
    return EXIT_BAD_INPUT;
  }
  return 0;
}
