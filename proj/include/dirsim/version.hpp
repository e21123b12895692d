// SPDX-License-Identifier: Apache-2.0

#ifndef DIRSIM_VERSION_HPP
#define DIRSIM_VERSION_HPP

namespace dirsim {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace dirsim

#endif  // DIRSIM_VERSION_HPP
