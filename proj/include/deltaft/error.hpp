#pragma once

#include <stdexcept>
#include <string>

namespace deltaft {

/// A mathematically invalid request: wrong strand counts, non-pure input
/// where purity is required, a word outside P', and so on.
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed text or JSON input.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace deltaft
