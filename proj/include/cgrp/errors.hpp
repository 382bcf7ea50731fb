#pragma once

#include <stdexcept>
#include <string>

namespace cgrp {

// Every failure the library raises derives from SolverError.  The CLI maps
// kind() to its exit codes: validation -> 2, numerical -> 3.
class SolverError : public std::runtime_error {
public:
  enum class Kind { validation, numerical };

  SolverError(Kind k, const std::string& msg)
      : std::runtime_error(msg), kind_(k) {}

  Kind kind() const { return kind_; }

private:
  Kind kind_;
};

#define CGRP_DEFINE_ERROR(Name, Kind_)                                  \
  class Name : public SolverError {                                     \
  public:                                                               \
    explicit Name(const std::string& msg)                               \
        : SolverError(Kind::Kind_, std::string(#Name ": ") + msg) {}    \
  }

CGRP_DEFINE_ERROR(NonPhysicalState, numerical);
CGRP_DEFINE_ERROR(VacuumState, numerical);
CGRP_DEFINE_ERROR(NoConvergence, numerical);
CGRP_DEFINE_ERROR(SupersonicInterface, numerical);
CGRP_DEFINE_ERROR(NegativeVelocity, numerical);
CGRP_DEFINE_ERROR(SingularSystem, numerical);
CGRP_DEFINE_ERROR(SingularCoupling, numerical);
CGRP_DEFINE_ERROR(SonicFan, numerical);
CGRP_DEFINE_ERROR(WindowExceeded, numerical);
CGRP_DEFINE_ERROR(MismatchedDomains, validation);
CGRP_DEFINE_ERROR(ValidationError, validation);

#undef CGRP_DEFINE_ERROR

// Configuration file syntax error; carries the 1-based line number.
class ParseError : public SolverError {
public:
  ParseError(int line, const std::string& msg)
      : SolverError(Kind::validation,
                    "ParseError (line " + std::to_string(line) + "): " + msg),
        line_(line) {}

  int line() const { return line_; }

private:
  int line_;
};

}  // namespace cgrp
