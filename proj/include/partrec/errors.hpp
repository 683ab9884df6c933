#pragma once

#include <stdexcept>

namespace partrec {

// Invalid parameter values (family params out of range, bad theta spec).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// API misuse: mismatched orders, tables too short, unknown catalog ids.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Resource guards, e.g. exhaustive enumeration past its size bound.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Internal consistency failure; signals a wrong catalog entry or a bug.
class IntegrityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace partrec
