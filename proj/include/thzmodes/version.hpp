#ifndef THZMODES_VERSION_HPP
#define THZMODES_VERSION_HPP

namespace thzmodes {

inline constexpr const char* kVersion = "0.1.0";

} // namespace thzmodes

#endif
