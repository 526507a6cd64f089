#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <vector>

namespace pex {

// Counter-based splittable random number streams.
//
// A stream is identified by a (seed, stream_id) pair.  Draw i of a stream is
// mix64(key + i * GOLDEN) where key is itself a mix of seed and stream_id, so
// streams are pure functions of their identity: random access, no shared
// state, and the same (seed, stream_id) always replays the same sequence.
// The mixer is the SplitMix64 finalizer (Steele, Lea & Flood 2014 via Vigna),
// which is the standard choice for seeding and splitting.

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

inline std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
}

// The fixed mixer used everywhere a new seed is derived from an existing one
// (per-trial seeds, SIM inner-instance seeds).  Documented contract: the
// result depends only on (seed, salt).
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    return mix64(seed ^ mix64(salt + kGolden));
}

class RngStream {
public:
    RngStream() : RngStream(0, 0) {}
    RngStream(std::uint64_t seed, std::uint64_t stream_id)
        : key_(mix_seed(seed, stream_id)), counter_(0) {}

    std::uint64_t next_u64() { return mix64(key_ + (++counter_) * kGolden); }

    // Uniform on [0, 1), 53-bit resolution.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Standard Box-Muller transform; consumes exactly two words per call.
    double next_gaussian(double mean, double sigma) {
        double u1 = static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;  // (0, 1]
        double u2 = next_double();
        double z = std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
        return mean + sigma * z;
    }

    double next_bernoulli(double p) { return next_double() < p ? 1.0 : 0.0; }

    // Unbiased integer in [0, n) via 128-bit multiply.
    std::uint64_t next_below(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
    }

    // Exact draw of Binomial(n, p) counts, used for aggregated Bernoulli
    // sampling.  Endpoint probabilities short-circuit so degenerate arms stay
    // exact.
    std::uint64_t next_binomial(std::uint64_t n, double p) {
        if (p <= 0.0) return 0;
        if (p >= 1.0) return n;
        std::binomial_distribution<long long> dist(static_cast<long long>(n), p);
        return static_cast<std::uint64_t>(dist(*this));
    }

    // UniformRandomBitGenerator interface for <random> distributions.
    using result_type = std::uint64_t;
    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }
    result_type operator()() { return next_u64(); }

private:
    std::uint64_t key_;
    std::uint64_t counter_;
};

// Stream-id layout for one algorithm run.  Every arm gets its own stream so
// pull order inside an algorithm cannot perturb another arm's reward
// sequence; internal randomized choices (FractionTest arm picks, input
// permutations) live on dedicated streams.
namespace stream_id {
inline constexpr std::uint64_t kChoice = 0x0100000000000000ULL;
inline constexpr std::uint64_t kPermutation = 0x0200000000000000ULL;
inline std::uint64_t arm(int arm_index) { return static_cast<std::uint64_t>(arm_index); }
}  // namespace stream_id

// All streams owned by a single algorithm run.  Arm streams are created
// lazily; each keeps its own sequential position.
class RunRng {
public:
    explicit RunRng(std::uint64_t run_seed) : seed_(run_seed) {}

    std::uint64_t seed() const { return seed_; }

    RngStream& arm(int arm_index) {
        if (arm_index >= static_cast<int>(arm_streams_.size())) {
            arm_streams_.reserve(arm_index + 1);
            for (int i = static_cast<int>(arm_streams_.size()); i <= arm_index; ++i) {
                arm_streams_.emplace_back(seed_, stream_id::arm(i));
            }
        }
        return arm_streams_[arm_index];
    }

    RngStream& choice() {
        if (!choice_) choice_.emplace(seed_, stream_id::kChoice);
        return *choice_;
    }

    RngStream& permutation() {
        if (!permutation_) permutation_.emplace(seed_, stream_id::kPermutation);
        return *permutation_;
    }

private:
    std::uint64_t seed_;
    std::vector<RngStream> arm_streams_;
    std::optional<RngStream> choice_;
    std::optional<RngStream> permutation_;
};

// Per-trial seed derivation: depends on (base_seed, trial_index) only, so
// adding trials or reordering execution never perturbs existing trials.
inline std::uint64_t trial_seed(std::uint64_t base_seed, std::uint64_t trial_index) {
    return mix_seed(base_seed, trial_index);
}

}  // namespace pex
