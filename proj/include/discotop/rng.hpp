#pragma once

#include <cmath>
#include <cstdint>

namespace disco {

// Counter-based generator: output i of stream `seed` is
// splitmix64(seed + i * 0x9E3779B97F4A7C15). Stateless per draw, so streams
// can be split and replayed; this is the generator recorded in every report.
inline constexpr const char* kRngName = "splitmix64-counter";

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
        : seed_(splitmix64(seed ^ (stream * 0xA24BAED4963EE407ULL))) {}

    std::uint64_t bits() { return splitmix64(seed_ + (counter_++) * 0x9E3779B97F4A7C15ULL); }

    // uniform in [0, 1)
    double uniform() { return static_cast<double>(bits() >> 11) * 0x1.0p-53; }

    // uniform in (0, 1]
    double uniform_pos() { return (static_cast<double>(bits() >> 11) + 1.0) * 0x1.0p-53; }

    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u = uniform_pos();
        const double v = uniform();
        const double r = std::sqrt(-2.0 * std::log(u));
        const double a = 6.283185307179586476925286766559 * v;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    // integer in [0, n)
    std::uint64_t below(std::uint64_t n) { return bits() % n; }

private:
    std::uint64_t seed_;
    std::uint64_t counter_ = 0;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

} // namespace disco
