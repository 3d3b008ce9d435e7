#ifndef TREEEMBED_ERRORS_HPP
#define TREEEMBED_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace treeembed {

/// Malformed tree or forest literal. Carries the byte offset of the first
/// offending character.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at byte " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Argument outside an operation's domain (negative size, r < 2 forest, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The exact series engine has no formula for this input (e.g. a non-plane
/// pattern with a node of out-degree >= 3). Use the oracle or asymptotics.
class UnsupportedError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A configured enumeration cap or subset budget would be exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An iterative numeric procedure failed to converge.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace treeembed

#endif  // TREEEMBED_ERRORS_HPP
