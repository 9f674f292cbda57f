#ifndef TFS_ERRORS_HPP
#define TFS_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tfs {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A precondition on mathematical inputs was violated (wrong domain,
// mismatched carriers, out-of-range index).
struct DomainError : Error {
  using Error::Error;
};

// A configured cap (element count, coefficient size, nesting depth,
// enumeration budget) was exceeded.
struct ResourceError : Error {
  using Error::Error;
};

// An internal consistency contract failed (e.g. a non-concordant value map
// was supplied where concordance is required).
struct ContractError : Error {
  using Error::Error;
};

// Text input could not be parsed; `position` is a byte offset into the input.
struct ParseError : Error {
  std::size_t position;
  ParseError(const std::string& what, std::size_t pos)
      : Error(what + " (at offset " + std::to_string(pos) + ")"), position(pos) {}
};

}  // namespace tfs

#endif
