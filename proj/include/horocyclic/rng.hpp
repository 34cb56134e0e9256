#pragma once

#include <cstdint>

#include "horocyclic/foliation.hpp"

namespace horo {

// SplitMix64 with an explicit 53-bit uniform mapping. Seeded output is
// identical across platforms and toolchains; <random> distributions are not.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) with 53 random bits.
  double uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform(); }

private:
  std::uint64_t state_;
};

// Sampling domains shared by the verification suites: u in [-2,2],
// v in [0.2,5], foliation angle in [0,pi), vector components in [-2,2].
HalfPlanePoint sample_point(SplitMix64& rng);
Foliation sample_foliation(SplitMix64& rng);
TangentVec sample_tangent(SplitMix64& rng, const HalfPlanePoint& base);

// Random element of SL(2,R) with entries bounded away from degeneracy.
MoebiusMap sample_unimodular(SplitMix64& rng);

}  // namespace horo
