#include "nilgraph/cayley_io.hpp"

#include <charconv>  // for from_chars
#include <fstream>   // for ifstream
#include <istream>   // for istream, getline
#include <sstream>   // for istringstream, ostringstream
#include <vector>    // for vector

#include "nilgraph/error.hpp"  // for ParseError

namespace nilgraph {

  namespace {
    struct Token {
      std::string text;
      std::size_t column;  // 1-based
    };

    std::vector<Token> tokenize(std::string const& line) {
      std::vector<Token> tokens;
      std::size_t        i = 0;
      while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) {
          ++i;
        }
        std::size_t const start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') {
          ++i;
        }
        if (i > start) {
          tokens.push_back({line.substr(start, i - start), start + 1});
        }
      }
      return tokens;
    }

    struct Line {
      std::size_t        number;
      std::vector<Token> tokens;
    };

    std::size_t parse_index(std::string const& source,
                            Line const&        line,
                            Token const&       tok) {
      std::size_t value = 0;
      auto [ptr, ec]    = std::from_chars(
          tok.text.data(), tok.text.data() + tok.text.size(), value);
      if (ec != std::errc() || ptr != tok.text.data() + tok.text.size()) {
        throw ParseError(source,
                         line.number,
                         tok.column,
                         "expected a non-negative integer, found \"" + tok.text
                             + "\"");
      }
      return value;
    }
  }  // namespace

  FiniteSemigroup parse_cayley_table(std::istream&      in,
                                     std::string const& source) {
    std::vector<Line> lines;
    std::string       raw;
    std::size_t       number = 0;
    while (std::getline(in, raw)) {
      ++number;
      if (!raw.empty() && raw.back() == '\r') {
        raw.pop_back();
      }
      if (!raw.empty() && raw.front() == '#') {
        continue;
      }
      auto tokens = tokenize(raw);
      if (!tokens.empty()) {
        lines.push_back({number, std::move(tokens)});
      }
    }
    if (lines.empty()) {
      throw ParseError(source, number + 1, 1, "missing order line");
    }
    if (lines[0].tokens.size() != 1) {
      throw ParseError(source,
                       lines[0].number,
                       lines[0].tokens[1].column,
                       "the first line must hold only the order");
    }
    std::size_t const n = parse_index(source, lines[0], lines[0].tokens[0]);
    if (n == 0) {
      throw ParseError(
          source, lines[0].number, 1, "the order must be positive");
    }
    if (lines.size() < n + 1) {
      throw ParseError(source,
                       number + 1,
                       1,
                       "expected " + std::to_string(n) + " table rows, found "
                           + std::to_string(lines.size() - 1));
    }
    if (lines.size() > n + 2) {
      throw ParseError(
          source, lines[n + 2].number, 1, "unexpected trailing content");
    }
    std::vector<element_type> flat;
    flat.reserve(n * n);
    for (std::size_t r = 1; r <= n; ++r) {
      Line const& line = lines[r];
      if (line.tokens.size() != n) {
        throw ParseError(source,
                         line.number,
                         line.tokens.size() > n ? line.tokens[n].column : 1,
                         "expected " + std::to_string(n) + " entries, found "
                             + std::to_string(line.tokens.size()));
      }
      for (auto const& tok : line.tokens) {
        std::size_t const v = parse_index(source, line, tok);
        if (v >= n) {
          throw ParseError(source,
                           line.number,
                           tok.column,
                           "entry " + tok.text + " is out of range [0, "
                               + std::to_string(n) + ")");
        }
        flat.push_back(static_cast<element_type>(v));
      }
    }
    std::vector<std::string> labels;
    if (lines.size() == n + 2) {
      Line const& line = lines[n + 1];
      if (line.tokens.size() != n) {
        throw ParseError(source,
                         line.number,
                         1,
                         "expected " + std::to_string(n) + " labels, found "
                             + std::to_string(line.tokens.size()));
      }
      for (auto const& tok : line.tokens) {
        labels.push_back(tok.text);
      }
    }
    return FiniteSemigroup::from_flat(n, std::move(flat), std::move(labels));
  }

  FiniteSemigroup parse_cayley_table(std::string const& text,
                                     std::string const& source) {
    std::istringstream in(text);
    return parse_cayley_table(in, source);
  }

  FiniteSemigroup read_cayley_table(std::filesystem::path const& path) {
    std::ifstream in(path);
    if (!in) {
      throw ParseError(path.string(), 0, 0, "cannot open file");
    }
    return parse_cayley_table(in, path.string());
  }

  void write_cayley_table(std::ostream& out, FiniteSemigroup const& s) {
    out << s.size() << '\n';
    for (element_type a = 0; a < s.size(); ++a) {
      auto row = s.row(a);
      for (std::size_t b = 0; b < row.size(); ++b) {
        out << (b == 0 ? "" : " ") << row[b];
      }
      out << '\n';
    }
    if (s.has_labels()) {
      for (element_type a = 0; a < s.size(); ++a) {
        out << (a == 0 ? "" : " ") << s.label(a);
      }
      out << '\n';
    }
  }

  std::string to_cayley_text(FiniteSemigroup const& s) {
    std::ostringstream out;
    write_cayley_table(out, s);
    return out.str();
  }

}  // namespace nilgraph
