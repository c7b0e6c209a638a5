#pragma once

#include <cstdint>

namespace mflab {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Seed of trial `trial` in stream `stream`; depends only on its arguments.
inline std::uint64_t trial_seed(std::uint64_t master, std::uint64_t stream, std::uint64_t trial) {
  return splitmix64(splitmix64(splitmix64(master) ^ stream) ^ trial);
}

}  // namespace mflab
