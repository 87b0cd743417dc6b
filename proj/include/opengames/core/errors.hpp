#ifndef OPENGAMES_CORE_ERRORS_HPP_
#define OPENGAMES_CORE_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace og {

// Base of every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define OPENGAMES_DEFINE_ERROR(Name)    \
  class Name : public Error {           \
   public:                              \
    using Error::Error;                 \
  };

OPENGAMES_DEFINE_ERROR(DuplicateElement)
OPENGAMES_DEFINE_ERROR(EnumerationBound)
OPENGAMES_DEFINE_ERROR(TypeMismatch)
OPENGAMES_DEFINE_ERROR(BackwardMismatch)
OPENGAMES_DEFINE_ERROR(EmptyChoiceSet)
OPENGAMES_DEFINE_ERROR(BoundaryMismatch)
OPENGAMES_DEFINE_ERROR(NotAState)
OPENGAMES_DEFINE_ERROR(IndexMismatch)
OPENGAMES_DEFINE_ERROR(MalformedInfoSet)
OPENGAMES_DEFINE_ERROR(UnsoundProbe)

#undef OPENGAMES_DEFINE_ERROR

}  // namespace og

#endif  // OPENGAMES_CORE_ERRORS_HPP_
