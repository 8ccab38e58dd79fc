#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tmcg {

  // Base class for every error raised by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // A leaf address does not name a leaf of the tree it is used with.
  class AddressError : public Error {
   public:
    using Error::Error;
  };

  // Strand counts or tree levels do not match.
  class DimensionError : public Error {
   public:
    using Error::Error;
  };

  // An argument lies outside the domain of a partial operation.
  class DomainError : public Error {
   public:
    using Error::Error;
  };

  // A requested computation exceeds a configured resource bound.
  class ResourceError : public Error {
   public:
    using Error::Error;
  };

  // Normalization exceeded its step budget. Never silently produces a result.
  class NonConvergenceError : public Error {
   public:
    using Error::Error;
  };

  class ParseError : public Error {
   public:
    ParseError(std::string const& msg, std::size_t pos)
        : Error(msg + " at position " + std::to_string(pos)), _pos(pos) {}

    std::size_t position() const noexcept {
      return _pos;
    }

   private:
    std::size_t _pos;
  };

}  // namespace tmcg
