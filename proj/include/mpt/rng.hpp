#pragma once

#include <cstdint>
#include <random>

namespace mpt {

/// mt19937_64 with the [0,1) mapping pinned here rather than delegated to
/// std::uniform_real_distribution, whose output is implementation-defined.
/// Fixed seed therefore means fixed bytes in every emitted artifact.
struct Rng {
    std::mt19937_64 gen;

    explicit Rng(std::uint64_t seed) : gen(seed) {}

    double u01() { return static_cast<double>(gen() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * u01(); }
    std::uint64_t next() { return gen(); }
};

}  // namespace mpt
