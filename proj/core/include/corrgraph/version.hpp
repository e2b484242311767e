#pragma once

#include <cstdint>
#include <string>

namespace corrgraph {

inline constexpr const char* kVersion = "0.1.0";

// Seed used whenever --seed is not given; fixed so runs stay reproducible.
inline constexpr std::uint64_t kDefaultSeed = 1729;

inline std::string csv_header(const std::string& experiment_kind) {
  return std::string("# corrgraph-detect v") + kVersion + " " + experiment_kind + "\n";
}

}  // namespace corrgraph
