#pragma once

#include <cstdint>
#include <random>

namespace aqb {

// Deterministic uniform stream: std::mt19937_64 raw output mapped to [0, 1)
// through the fixed 53-bit construction (x >> 11) * 2^-53. The engine's output
// sequence is pinned by the standard, and the mapping avoids the
// implementation-defined behaviour of std::uniform_real_distribution, so
// streams are identical across platforms and compilers. Reported in JSON
// output as the PRNG identifier "mt19937_64/u53".
class UniformRng {
public:
    explicit UniformRng(std::uint64_t seed) : engine_(seed) {}

    double next() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    std::uint64_t next_raw() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

} // namespace aqb
