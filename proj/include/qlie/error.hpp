#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qlie {

enum class Errc {
  DivisionByZero,
  FieldMismatch,
  IndexOutOfRange,
  MinusOneNotSimple,
  CharTwo,
  BasisMismatch,
  HypothesisViolated,
  Inconsistent,
  Unstabilized,
  DegreeMismatch,
  PreconditionViolated,
  InternalContradiction,
  UnsupportedField,
  NotBraided,
  Parse,
};

std::string_view errc_name(Errc e);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& what);

}  // namespace qlie
