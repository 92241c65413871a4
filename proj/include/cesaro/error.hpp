#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace cesaro {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Measure expression that does not match the grammar.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error("syntax error at position " + std::to_string(position) + ": " +
                           message),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Well-formed measure expression whose values violate a measure invariant.
class SemanticError : public std::runtime_error {
 public:
  SemanticError(const std::string& message, std::string token, std::size_t position)
      : std::runtime_error("semantic error at position " + std::to_string(position) + " ('" +
                           token + "'): " + message),
        token_(std::move(token)),
        position_(position) {}

  const std::string& token() const noexcept { return token_; }
  std::size_t position() const noexcept { return position_; }

 private:
  std::string token_;
  std::size_t position_;
};

/// Invalid panel configuration file or value.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cesaro
