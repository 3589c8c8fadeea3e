#pragma once

#include <stdexcept>
#include <string>

namespace gammamin {

// Violation of a mathematical precondition (z <= 0, non-unit divisor, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace gammamin
