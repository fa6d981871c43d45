// Exception types thrown by nilgraph.

#ifndef NILGRAPH_ERROR_HPP_
#define NILGRAPH_ERROR_HPP_

#include <array>      // for array
#include <cstddef>    // for size_t
#include <stdexcept>  // for runtime_error
#include <string>     // for string

namespace nilgraph {

  //! Base class of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  //! A Cayley table that is not square or has an entry out of range.
  class MalformedTable : public Error {
   public:
    using Error::Error;
  };

  //! A Cayley table that fails the associativity law.
  //!
  //! The reported triple is the first violation in row-major order of
  //! \c (a, b, c).
  class NotAssociative : public Error {
   public:
    NotAssociative(std::size_t a, std::size_t b, std::size_t c)
        : Error("table is not associative: (" + std::to_string(a) + "*"
                + std::to_string(b) + ")*" + std::to_string(c) + " != "
                + std::to_string(a) + "*(" + std::to_string(b) + "*"
                + std::to_string(c) + ")"),
          _triple{a, b, c} {}

    std::array<std::size_t, 3> const& triple() const noexcept {
      return _triple;
    }

   private:
    std::array<std::size_t, 3> _triple;
  };

  //! Text input that does not follow the Cayley-table format.
  class ParseError : public Error {
   public:
    ParseError(std::string const& source,
               std::size_t        line,
               std::size_t        column,
               std::string const& what)
        : Error(source + ":" + std::to_string(line) + ":"
                + std::to_string(column) + ": " + what),
          _line(line),
          _column(column) {}

    std::size_t line() const noexcept {
      return _line;
    }
    std::size_t column() const noexcept {
      return _column;
    }

   private:
    std::size_t _line;
    std::size_t _column;
  };

  class DistinctnessRequired : public Error {
   public:
    using Error::Error;
  };

  class OrderTooLarge : public Error {
   public:
    using Error::Error;
  };

  class NotAGroup : public Error {
   public:
    using Error::Error;
  };

  class NonRegularSandwich : public Error {
   public:
    using Error::Error;
  };

}  // namespace nilgraph

#endif  // NILGRAPH_ERROR_HPP_
