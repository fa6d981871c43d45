// Reading and writing the plain-text Cayley table format.
//
// Line 1 holds the order n, the next n lines hold n space-separated entries
// each (row = left factor), and an optional final line holds n labels.
// Blank lines and lines starting with '#' are ignored on input. Output uses
// LF line endings.

#ifndef NILGRAPH_CAYLEY_IO_HPP_
#define NILGRAPH_CAYLEY_IO_HPP_

#include <filesystem>  // for path
#include <iosfwd>      // for istream, ostream
#include <string>      // for string

#include "nilgraph/semigroup.hpp"  // for FiniteSemigroup

namespace nilgraph {

  //! Throws ParseError (with line and column) for text that does not follow
  //! the format, and MalformedTable or NotAssociative for a well-formed table
  //! that is not a semigroup.
  FiniteSemigroup parse_cayley_table(std::istream&      in,
                                     std::string const& source = "<input>");

  FiniteSemigroup parse_cayley_table(std::string const& text,
                                     std::string const& source);

  FiniteSemigroup read_cayley_table(std::filesystem::path const& path);

  void        write_cayley_table(std::ostream& out, FiniteSemigroup const& s);
  std::string to_cayley_text(FiniteSemigroup const& s);

}  // namespace nilgraph

#endif  // NILGRAPH_CAYLEY_IO_HPP_
