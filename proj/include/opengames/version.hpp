#ifndef OPENGAMES_VERSION_HPP_
#define OPENGAMES_VERSION_HPP_

namespace og {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace og

#endif  // OPENGAMES_VERSION_HPP_
