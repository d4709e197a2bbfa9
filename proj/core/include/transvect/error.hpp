#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace transvect {

enum class ErrorCode {
  NotPrime,
  DegreeTooLarge,
  DivisionByZero,
  FieldMismatch,
  NoInvolution,
  DimensionMismatch,
  Singular,
  NoSolution,
  NotIsotropic,
  ZeroVector,
  NotTransvection,
  UnsupportedKind,
  CapExceeded,
  NotIrreducible,
  NotDense,
  NotStronglyConnected,
  WrongCharacteristic,
  NotInvariantForm,
  IndexMismatch,
  MissingForm,
  NoWitness,
  NotFound,
  WrongField,
  BadParameters,
  UnsupportedTag,
  NotExplored,
  ParseError,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

// Resource limits shared by the enumeration routines. Every limit is a hard
// cap: exceeding it raises CapExceeded instead of truncating silently.
struct Budgets {
  std::uint64_t walks = 1'000'000;
  std::uint64_t projective = std::uint64_t{1} << 20;
  std::uint64_t elements = 10'000'000;
};

}  // namespace transvect
