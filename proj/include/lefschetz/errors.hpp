#ifndef LEFSCHETZ_ERRORS_HPP
#define LEFSCHETZ_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lefschetz {

/// Malformed ideal text. `offset()` is the byte offset of the offending character.
class ParseError : public std::invalid_argument {
public:
  ParseError(const std::string& what, std::size_t offset)
      : std::invalid_argument(what + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

private:
  std::size_t offset_;
};

/// A mathematical precondition does not hold (not Artinian, wrong type, bad range, ...).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// A cross-check between two independent computations failed.
class InternalError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

}  // namespace lefschetz

#endif  // LEFSCHETZ_ERRORS_HPP
