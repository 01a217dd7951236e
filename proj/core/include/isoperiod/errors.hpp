#ifndef ISOPERIOD_ERRORS_HPP
#define ISOPERIOD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace isoperiod {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define ISOPERIOD_DEFINE_ERROR(Name)                              \
  struct Name : Error {                                           \
    explicit Name(const std::string& what) : Error(what) {}       \
  }

ISOPERIOD_DEFINE_ERROR(NonzeroConstantInner);
ISOPERIOD_DEFINE_ERROR(NotInvertible);
ISOPERIOD_DEFINE_ERROR(OutOfDomain);
ISOPERIOD_DEFINE_ERROR(NotACenter);
ISOPERIOD_DEFINE_ERROR(NotMonotoneBranch);
ISOPERIOD_DEFINE_ERROR(NoTurningPoint);
ISOPERIOD_DEFINE_ERROR(NonSimpleTurningPoint);
ISOPERIOD_DEFINE_ERROR(InvalidSide);
ISOPERIOD_DEFINE_ERROR(NotDegenerate);
ISOPERIOD_DEFINE_ERROR(UnsupportedCase);
ISOPERIOD_DEFINE_ERROR(NotMonodromicError);
ISOPERIOD_DEFINE_ERROR(EventNotBracketed);
ISOPERIOD_DEFINE_ERROR(MaxStepsExceeded);
ISOPERIOD_DEFINE_ERROR(EscapedDomain);
ISOPERIOD_DEFINE_ERROR(ConfigError);

#undef ISOPERIOD_DEFINE_ERROR

}  // namespace isoperiod

#endif
