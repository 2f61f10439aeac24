#ifndef PLINK_RNG_HPP
#define PLINK_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

namespace plink {

// splitmix64 step; used to derive per-trial and per-attempt seeds so that
// trials are independent and reproducible from one root seed.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Deterministic RNG with self-contained bounded sampling.  The standard
// distributions are implementation-defined, so bounds are drawn by
// rejection directly from the mt19937_64 stream; identical seeds give
// identical streams on every platform.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // Uniform in [lo, hi], inclusive.
    long long uniform(long long lo, long long hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        if (span == 0) return static_cast<long long>(next());  // full range
        std::uint64_t limit = std::uint64_t(-1) - (std::uint64_t(-1) % span);
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return lo + static_cast<long long>(v % span);
    }

    // Fisher-Yates.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(uniform(0, static_cast<long long>(i) - 1));
            std::swap(v[i - 1], v[j]);
        }
    }

    // `count` distinct values from [lo, hi], in random order.
    std::vector<long long> sample_distinct(long long lo, long long hi, std::size_t count);

private:
    std::mt19937_64 eng_;
};

}  // namespace plink

#endif  // PLINK_RNG_HPP
