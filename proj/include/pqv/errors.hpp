#pragma once

#include <stdexcept>
#include <string>

namespace pqv {

/// Malformed input: bad flags, unreadable or inconsistent configuration.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input parsed fine but failed a mathematical check (curve equation,
/// stabilizer, series expansion, quasi-etale condition, ...).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A post-condition the library relies on did not hold.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Exit codes used by the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitValidation = 3;
inline constexpr int kExitInternal = 4;

}  // namespace pqv
