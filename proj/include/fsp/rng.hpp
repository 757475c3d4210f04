// rng.hpp: deterministic, splittable random streams
//
// Stream algorithm "fsp-rng v1":
//   origin hash  h = splitmix64-finalize chain over (master, fnv1a64(label), trial)
//   state        xoshiro256** seeded by four successive SplitMix64 outputs from h
//   unit uniform (next >> 11) * 2^-53
//   fair coin    top bit of next()
// Changing any of the above changes every CSV this library writes, so bump
// kRngVersion when touching it.
#pragma once
#include <array>
#include <cstdint>
#include <string_view>

namespace fsp {

inline constexpr std::string_view kRngVersion = "fsp-rng v1";

struct MasterSeed {
    std::uint64_t value = 0;
};

/// 64-bit FNV-1a over the label bytes.
std::uint64_t fnv1a64(std::string_view text) noexcept;

/// SplitMix64 output function applied to a single word.
std::uint64_t mix64(std::uint64_t x) noexcept;

class RngStream {
public:
    /// Seeds the xoshiro state from one 64-bit word via SplitMix64.
    explicit RngStream(std::uint64_t seed) noexcept;

    std::uint64_t seed() const noexcept { return seed_; }

    std::uint64_t next_u64() noexcept;
    /// Uniform real in [0, 1) with 53 bits of resolution.
    double next_unit_uniform() noexcept;
    /// Returns true with probability p; throws ParameterError unless 0 <= p <= 1.
    bool next_bernoulli(double p);
    bool next_fair_coin() noexcept { return (next_u64() >> 63) != 0; }

    // UniformRandomBitGenerator surface, so std:: algorithms accept a stream.
    using result_type = std::uint64_t;
    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return ~result_type{0}; }
    result_type operator()() noexcept { return next_u64(); }

private:
    std::uint64_t seed_;
    std::array<std::uint64_t, 4> s_{};
};

/// The seed a stream with this origin would be constructed from.
std::uint64_t derive_seed(MasterSeed master, std::string_view context, std::uint64_t trial) noexcept;

/// Pure function of its inputs; safe to call concurrently.
RngStream derive_stream(MasterSeed master, std::string_view context, std::uint64_t trial) noexcept;

} // namespace fsp
