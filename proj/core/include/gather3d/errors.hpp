#ifndef GATHER3D_ERRORS_HPP
#define GATHER3D_ERRORS_HPP

#include <stdexcept>

namespace gather3d {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/* Geometry preconditions. */
struct DegenerateSegment : Error { using Error::Error; };
struct NotCoplanar : Error { using Error::Error; };
struct DegenerateCircle : Error { using Error::Error; };
struct EmptyInput : Error { using Error::Error; };

/* Configuration / simulation preconditions. */
struct NotInConfiguration : Error { using Error::Error; };
struct UnknownRobot : Error { using Error::Error; };
struct AllCrashed : Error { using Error::Error; };

}  // namespace gather3d

#endif
