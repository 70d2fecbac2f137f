// =========================
// rng.hpp
// =========================
//
// Deterministic, splittable randomness for Monte Carlo runs.
//
// One generator algorithm is used everywhere: xoshiro256++ seeded from a
// 64-bit key expanded with SplitMix64. Substreams are derived by absorbing
// path labels (e.g. "snr=5", "trial=0") into the key with FNV-1a + a
// SplitMix64 finalizer, so the same (seed, path) always yields the same
// sample sequence on any machine, and distinct paths give statistically
// independent streams. Gaussians come from a plain Box-Muller transform
// (no rejection step), so draw counts are input-independent.
#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace semlink {

namespace detail {

inline uint64_t splitmix64_mix(uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline uint64_t fnv1a64(std::string_view s) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace detail

class Rng {
public:
    explicit Rng(uint64_t seed) : key_(seed) { reseat(); }

    // Derived generator for a labeled substream. Path must be non-empty.
    Rng substream(std::initializer_list<std::string_view> path) const {
        if (path.size() == 0) throw std::invalid_argument("Rng::substream: empty path");
        uint64_t k = key_;
        for (std::string_view label : path)
            k = detail::splitmix64_mix(k ^ detail::fnv1a64(label));
        return Rng(k, tag{});
    }

    Rng substream(std::string_view label) const { return substream({label}); }

    Rng substream(const std::vector<std::string>& path) const {
        if (path.empty()) throw std::invalid_argument("Rng::substream: empty path");
        uint64_t k = key_;
        for (const auto& label : path)
            k = detail::splitmix64_mix(k ^ detail::fnv1a64(label));
        return Rng(k, tag{});
    }

    uint64_t u64() {
        const uint64_t result = detail::rotl(s_[0] + s_[3], 23) + s_[0];
        const uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = detail::rotl(s_[3], 45);
        return result;
    }

    // Uniform on (0,1], 53-bit resolution. Strictly positive so it can feed log().
    double u01() { return static_cast<double>((u64() >> 11) + 1) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * u01(); }

    // Unbiased integer in [0, n) via rejection.
    uint64_t below(uint64_t n) {
        if (n == 0) throw std::invalid_argument("Rng::below(0)");
        const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        uint64_t x = u64();
        while (x >= limit) x = u64();
        return x % n;
    }

    // Standard normal via Box-Muller; generates pairs, caches the second.
    double normal() {
        if (has_cached_) {
            has_cached_ = false;
            return cached_;
        }
        const double u1 = u01();
        const double u2 = u01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.283185307179586476925286766559 * u2;
        cached_ = r * std::sin(a);
        has_cached_ = true;
        return r * std::cos(a);
    }

    // Circularly-symmetric complex Gaussian with total variance var_total.
    std::complex<double> cnormal(double var_total) {
        const double s = std::sqrt(var_total / 2.0);
        return {s * normal(), s * normal()};
    }

    template <typename It>
    void shuffle(It first, It last) {
        const auto n = static_cast<uint64_t>(last - first);
        for (uint64_t i = n; i > 1; --i) std::swap(first[i - 1], first[below(i)]);
    }

    uint64_t key() const { return key_; }

private:
    struct tag {};
    Rng(uint64_t key, tag) : key_(key) { reseat(); }

    void reseat() {
        uint64_t z = key_;
        for (auto& w : s_) {
            z = detail::splitmix64_mix(z);
            w = z;
        }
        // xoshiro must not start at the all-zero state
        if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = 1;
        has_cached_ = false;
        cached_ = 0.0;
    }

    std::array<uint64_t, 4> s_{};
    uint64_t key_ = 0;
    double cached_ = 0.0;
    bool has_cached_ = false;
};

}  // namespace semlink
