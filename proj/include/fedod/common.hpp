// Shared error types and the deterministic PRNG used across the library.
#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fedod {

// Shape/precondition violations of public operations. CLI maps these to exit code 4.
class ContractError : public std::runtime_error {
public:
    explicit ContractError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed or unusable input data (files, formats). CLI exit code 3.
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

// Invalid experiment configuration. CLI exit code 2.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

inline uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Derives an independent stream id from a seed and a list of tags
// (round index, client id, purpose hash...). Used so that parallel or
// reordered execution cannot change any drawn value.
inline uint64_t mix_seed(uint64_t seed, std::initializer_list<uint64_t> tags) {
    uint64_t h = seed;
    for (uint64_t t : tags) {
        uint64_t s = h ^ (t + 0x9E3779B97F4A7C15ULL);
        h = splitmix64(s);
    }
    return h;
}

inline uint64_t tag_of(const char* name) {
    // FNV-1a over the tag name; stable across platforms.
    uint64_t h = 1469598103934665603ULL;
    for (const char* p = name; *p; ++p) {
        h ^= static_cast<unsigned char>(*p);
        h *= 1099511628211ULL;
    }
    return h;
}

// Deterministic generator. All draws are defined entirely by this code,
// never by implementation-defined std:: distributions, so identical seeds
// give bitwise-identical results on any platform.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next_u64() { return splitmix64(state_); }

    // Uniform in [0, 1).
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform in (0, 1].
    double next_unit_open0() { return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

    // Inclusive bounds, unbiased via rejection.
    uint64_t uniform_index(uint64_t n) {
        if (n == 0) throw ContractError("Rng::uniform_index: n must be positive");
        const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        uint64_t x;
        do {
            x = next_u64();
        } while (x >= limit);
        return x % n;
    }

    // Standard normal via Box-Muller; one value per call.
    double normal() {
        const double u1 = next_unit_open0();
        const double u2 = next_unit();
        const double r = std::sqrt(-2.0 * std::log(u1));
        return r * std::cos(2.0 * 3.14159265358979323846 * u2);
    }

    double normal(double mean, double stddev) { return mean + stddev * normal(); }

    // Laplace(0, b) by inverse CDF.
    double laplace(double scale) {
        const double u = next_unit() - 0.5;
        const double s = u < 0 ? -1.0 : 1.0;
        return -scale * s * std::log(1.0 - 2.0 * std::abs(u));
    }

    bool coin() { return (next_u64() & 1ULL) != 0; }

    // In-place Fisher-Yates.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) {
            const size_t j = static_cast<size_t>(uniform_index(i));
            std::swap(v[i - 1], v[j]);
        }
    }

    // k distinct values from [0, n), in draw order.
    std::vector<size_t> sample_without_replacement(size_t n, size_t k) {
        if (k > n) throw ContractError("Rng::sample_without_replacement: k > n");
        std::vector<size_t> pool(n);
        for (size_t i = 0; i < n; ++i) pool[i] = i;
        std::vector<size_t> out;
        out.reserve(k);
        for (size_t i = 0; i < k; ++i) {
            const size_t j = i + static_cast<size_t>(uniform_index(n - i));
            std::swap(pool[i], pool[j]);
            out.push_back(pool[i]);
        }
        return out;
    }

private:
    uint64_t state_;
};

}  // namespace fedod
