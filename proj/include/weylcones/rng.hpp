#ifndef WEYLCONES_RNG_HPP
#define WEYLCONES_RNG_HPP

#include <cstdint>

namespace weylcones {

/// Identifies one reproducible random stream. Identical (seed, stream)
/// pairs reproduce identical draws on every platform.
struct RngSpec {
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;
};

/**
 * Counter-based generator: the t-th output is a pure integer hash of
 * (seed, stream, t), so streams can be split across workers freely and
 * replayed from any point.
 */
class CounterRng {
  public:
    explicit CounterRng(RngSpec spec) : seed_(spec.seed), stream_(spec.stream) {}
    CounterRng(std::uint64_t seed, std::uint64_t stream) : seed_(seed), stream_(stream) {}

    std::uint64_t next_u64();
    std::uint64_t next_below(std::uint64_t bound);  // uniform on [0, bound)
    double uniform01();     // [0, 1)
    double uniform_open();  // (0, 1]
    double gaussian();      // standard normal via Box-Muller
    double exponential();   // rate 1

  private:
    std::uint64_t seed_, stream_;
    std::uint64_t counter_ = 0;
    bool has_spare_ = false;
    double spare_ = 0;
};

}  // namespace weylcones

#endif
