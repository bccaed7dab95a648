#pragma once

#include <stdexcept>
#include <string>

namespace oalpha {

/// Base class for every error raised by the library. `kind()` is a stable
/// identifier used by the harness when it records a failed precondition.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define OALPHA_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                       \
   public:                                                          \
    explicit Name(const std::string& what) : Error(#Name, what) {} \
  }

OALPHA_DEFINE_ERROR(AngleDegenerate);
OALPHA_DEFINE_ERROR(AngleOutOfRange);
OALPHA_DEFINE_ERROR(DomainError);
OALPHA_DEFINE_ERROR(TailMassError);
OALPHA_DEFINE_ERROR(GridError);
OALPHA_DEFINE_ERROR(GridAsymmetryError);
OALPHA_DEFINE_ERROR(SingularWeightError);
OALPHA_DEFINE_ERROR(WindowError);
OALPHA_DEFINE_ERROR(EmptySetError);
OALPHA_DEFINE_ERROR(BandwidthError);
OALPHA_DEFINE_ERROR(InputError);
OALPHA_DEFINE_ERROR(ParseError);
OALPHA_DEFINE_ERROR(NonUniformGridError);
OALPHA_DEFINE_ERROR(EmptyFileError);
OALPHA_DEFINE_ERROR(IoError);

#undef OALPHA_DEFINE_ERROR

}  // namespace oalpha
