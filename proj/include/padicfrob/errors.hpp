#pragma once

#include <stdexcept>
#include <string>

namespace padicfrob {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define PADICFROB_DEFINE_ERROR(Name)   \
  class Name : public Error {          \
   public:                             \
    using Error::Error;                \
  }

PADICFROB_DEFINE_ERROR(DivisionByZero);
PADICFROB_DEFINE_ERROR(PrimeMismatch);
PADICFROB_DEFINE_ERROR(NonUnitConstantTerm);
PADICFROB_DEFINE_ERROR(BadConstantTerm);
PADICFROB_DEFINE_ERROR(LevelTooLarge);
PADICFROB_DEFINE_ERROR(PrecisionBudgetExceeded);
PADICFROB_DEFINE_ERROR(WeightMismatch);
PADICFROB_DEFINE_ERROR(NotMUM);
PADICFROB_DEFINE_ERROR(NoOperatorFound);
PADICFROB_DEFINE_ERROR(AmbiguousNullspace);
PADICFROB_DEFINE_ERROR(InsufficientOrder);
PADICFROB_DEFINE_ERROR(NonUnitWronskian);
PADICFROB_DEFINE_ERROR(BoxTooLarge);
PADICFROB_DEFINE_ERROR(PrecisionExhausted);

#undef PADICFROB_DEFINE_ERROR

/// Raised when a congruence system has no solution. `condition_index` is the
/// first condition whose addition makes the prefix system unsolvable.
class Inconsistent : public Error {
 public:
  Inconsistent(const std::string& what, std::size_t condition_index)
      : Error(what), condition_index_(condition_index) {}
  std::size_t condition_index() const noexcept { return condition_index_; }

 private:
  std::size_t condition_index_;
};

}  // namespace padicfrob
