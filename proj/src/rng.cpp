#include "weylcones/rng.hpp"

#include <cmath>

namespace weylcones {

namespace {

inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

constexpr double kTwoPi = 6.283185307179586476925286766559;

}  // namespace

std::uint64_t CounterRng::next_u64() {
    return mix64(seed_ ^ mix64(stream_ ^ mix64(counter_++)));
}

std::uint64_t CounterRng::next_below(std::uint64_t bound) {
    // tiny modulo bias (bound << 2^64) is irrelevant here; determinism is not
    return bound ? next_u64() % bound : 0;
}

double CounterRng::uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double CounterRng::uniform_open() {
    return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
}

double CounterRng::gaussian() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    const double u1 = uniform_open();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(kTwoPi * u2);
    has_spare_ = true;
    return r * std::cos(kTwoPi * u2);
}

double CounterRng::exponential() { return -std::log(uniform_open()); }

}  // namespace weylcones
