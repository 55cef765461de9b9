#ifndef LIFTCODE_ERRORS_HPP_
#define LIFTCODE_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace liftcode {

// Caller misuse: bad arguments, mismatched contexts, malformed input.
class UsageError : public std::invalid_argument {
 public:
  explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

// Mathematical domain violations (inverting zero, etc.).
class FieldDomainError : public std::domain_error {
 public:
  explicit FieldDomainError(const std::string& what) : std::domain_error(what) {}
};

// An exhaustive-enumeration guard was exceeded. Guards are explicit numeric
// limits and may only be loosened by an explicit override.
class GuardError : public std::runtime_error {
 public:
  GuardError(const std::string& what, std::uint64_t limit, std::uint64_t requested)
      : std::runtime_error(what), limit(limit), requested(requested) {}
  std::uint64_t limit;
  std::uint64_t requested;
};

// Infeasible construction parameters; `constraint` names the violated one.
class ParamError : public UsageError {
 public:
  ParamError(const std::string& constraint, const std::string& what)
      : UsageError(what), constraint(constraint) {}
  std::string constraint;
};

}  // namespace liftcode

#endif  // LIFTCODE_ERRORS_HPP_
