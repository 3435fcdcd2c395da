#ifndef M21_ERROR_HPP
#define M21_ERROR_HPP

#include <stdexcept>
#include <string>

namespace m21 {

enum class Errc {
  RingMismatch,
  ParseError,
  UnknownVariable,
  RationalInIntegerRing,
  ZeroPoly,
  DegreeMismatch,
  BudgetExceeded,
  DivisionFailure,
  InhomogeneousIdeal,
  PreconditionNzd,
  NotReducible,
  LiftFailure,
  UnresolvedName,
  TypeMismatch,
  Usage,
  Internal,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
  Error(Errc code, std::string what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

} // namespace m21

#endif
