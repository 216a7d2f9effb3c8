#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace klein {

/// Malformed textual input (signature, word, homomorphism literal, ...).
class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A well-formed input that violates a mathematical hypothesis
/// (e.g. an orientable surface passed where a non-orientable one is needed).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Internal consistency failure; indicates a bug rather than bad input.
class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace klein
