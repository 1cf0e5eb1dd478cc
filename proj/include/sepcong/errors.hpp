#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sepcong {

  /// Base class of every error raised by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  /// Malformed text input. line() is 1-based, 0 when unknown.
  class ParseError : public Error {
   public:
    ParseError(std::size_t line, std::string const& msg)
        : Error(line == 0 ? msg : "line " + std::to_string(line) + ": " + msg),
          _line(line) {}

    std::size_t line() const noexcept {
      return _line;
    }

   private:
    std::size_t _line;
  };

  class InvalidArgument : public Error {
   public:
    using Error::Error;
  };

  /// An exhaustive computation was asked to run above its configured order cap.
  class CapExceeded : public Error {
   public:
    CapExceeded(std::string const& what, std::size_t order, std::size_t cap)
        : Error(what + ": order " + std::to_string(order) + " exceeds cap "
                + std::to_string(cap)),
          _order(order),
          _cap(cap) {}

    std::size_t order() const noexcept {
      return _order;
    }
    std::size_t cap() const noexcept {
      return _cap;
    }

   private:
    std::size_t _order;
    std::size_t _cap;
  };

}  // namespace sepcong
