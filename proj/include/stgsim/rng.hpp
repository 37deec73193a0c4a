#pragma once

#include <cstdint>
#include <random>

namespace stgsim {

using Rng = std::mt19937_64;

// splitmix64 finalizer; used to derive independent sub-streams from one run seed.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Stream ids keep per-cloudlet RNGs independent of each other and of the
// order in which cloudlets are processed.
inline Rng make_stream(std::uint64_t seed, std::uint64_t stream_id, std::uint64_t salt = 0) {
  return Rng(mix64(mix64(seed) ^ mix64(stream_id + 0x632be59bd9b4e019ULL * (salt + 1))));
}

}  // namespace stgsim
