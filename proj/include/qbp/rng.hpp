#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

namespace qbp {

// Counter-based splittable RNG. Every draw is a SplitMix64-style finalizer
// applied to (key, counter), so streams are reproducible across platforms and
// independent of call interleaving once split. `split(i)` derives a child
// whose key mixes the parent key with the stream index.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : key_(mix(seed ^ 0x9e3779b97f4a7c15ull)), ctr_(0) {}

    Rng split(std::uint64_t stream) const {
        Rng child(0);
        child.key_ = mix(key_ + 0x9e3779b97f4a7c15ull * (stream + 1));
        child.ctr_ = 0;
        return child;
    }

    std::uint64_t next_u64() { return mix(key_ + 0x9e3779b97f4a7c15ull * ++ctr_); }

    // Uniform in [0, 1), 53-bit resolution.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform in [0, 1); never returns exactly 0 (safe to feed into log).
    double next_double_pos() {
        double u;
        do {
            u = next_double();
        } while (u == 0.0);
        return u;
    }

    std::uint64_t next_below(std::uint64_t n) { return next_u64() % n; }

    // Standard normal via Box-Muller; the second value of each pair is cached.
    double next_normal() {
        if (have_cached_) {
            have_cached_ = false;
            return cached_;
        }
        double u1 = next_double_pos();
        double u2 = next_double();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 6.283185307179586476925286766559 * u2;
        cached_ = r * std::sin(a);
        have_cached_ = true;
        return r * std::cos(a);
    }

    std::complex<double> next_complex_normal() {
        double u1 = next_double_pos();
        double u2 = next_double();
        double r = std::sqrt(-std::log(u1)); // per-component variance 1/2
        double a = 6.283185307179586476925286766559 * u2;
        return {r * std::cos(a), r * std::sin(a)};
    }

    // Sample an index from a (not necessarily normalized) nonnegative weight vector.
    std::size_t next_categorical(const std::vector<double>& weights) {
        double total = 0;
        for (double w : weights) total += w;
        double u = next_double() * total;
        double acc = 0;
        for (std::size_t i = 0; i + 1 < weights.size(); ++i) {
            acc += weights[i];
            if (u < acc) return i;
        }
        return weights.empty() ? 0 : weights.size() - 1;
    }

  private:
    static std::uint64_t mix(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xbf58476d1ce4e5b9ull;
        z ^= z >> 27;
        z *= 0x94d049bb133111ebull;
        z ^= z >> 31;
        return z;
    }

    std::uint64_t key_;
    std::uint64_t ctr_;
    double cached_ = 0;
    bool have_cached_ = false;
};

} // namespace qbp
