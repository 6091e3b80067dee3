#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace fuzzysg {

  // Base of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // A Cayley table that is malformed or fails associativity.
  class InvalidTable : public Error {
   public:
    using Error::Error;
  };

  class NotAssociative : public InvalidTable {
   public:
    NotAssociative(std::size_t a, std::size_t b, std::size_t c)
        : InvalidTable("not associative at (" + std::to_string(a) + ", "
                       + std::to_string(b) + ", " + std::to_string(c) + ")"),
          triple_{a, b, c} {}

    std::array<std::size_t, 3> const& triple() const noexcept {
      return triple_;
    }

   private:
    std::array<std::size_t, 3> triple_;
  };

  // Caller violated a documented precondition (empty subset, bad level, ...).
  class PreconditionError : public Error {
   public:
    using Error::Error;
  };

  // Two fuzzy subsets or regions live over different hosts or chains.
  class MismatchError : public Error {
   public:
    using Error::Error;
  };

  // An enumeration would exceed its configured size bound.
  class BudgetExceeded : public Error {
   public:
    using Error::Error;
  };

  // Cache file problems: corrupt content or unknown version tag.
  class CacheError : public Error {
   public:
    using Error::Error;
  };

  class CacheVersionError : public CacheError {
   public:
    using CacheError::CacheError;
  };

  // An internal consistency check failed; indicates a library bug.
  class InternalError : public Error {
   public:
    using Error::Error;
  };

}  // namespace fuzzysg
