#ifndef VALENCE_ERROR_HPP_
#define VALENCE_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace valence {

  // Base of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Descriptor/element mismatch, malformed tables, rank errors.
  class StructuralError : public Error {
   public:
    using Error::Error;
  };

  // An enumeration guard or search budget would be exceeded.
  class ResourceError : public Error {
   public:
    using Error::Error;
  };

  // An algebraic precondition (inverse law, non-periodicity, ...) fails.
  class AlgebraError : public Error {
   public:
    using Error::Error;
  };

  class InvalidIdealError : public Error {
   public:
    using Error::Error;
  };

  // Word or rule uses a symbol outside the declared alphabet.
  class AlphabetError : public Error {
   public:
    using Error::Error;
  };

  // Operation not available for the given monoid class.
  class UnsupportedError : public Error {
   public:
    using Error::Error;
  };

  // A constructive search (successful run, repeated state, permutation)
  // failed to produce its object.
  class SearchError : public Error {
   public:
    using Error::Error;
  };

  class ParseError : public Error {
   public:
    ParseError(std::string const& what, std::size_t line, std::size_t column)
        : Error(what), line_(line), column_(column) {}

    std::size_t line() const noexcept {
      return line_;
    }
    std::size_t column() const noexcept {
      return column_;
    }

   private:
    std::size_t line_;
    std::size_t column_;
  };

  // A well-formed document that violates a model invariant.
  class SemanticError : public Error {
   public:
    using Error::Error;
  };

}  // namespace valence

#endif  // VALENCE_ERROR_HPP_
