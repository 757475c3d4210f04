#include "fsp/rng.hpp"

#include <bit>
#include <string>

#include "fsp/errors.hpp"

namespace fsp {

std::uint64_t fnv1a64(std::string_view text) noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

namespace {
constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;
}

RngStream::RngStream(std::uint64_t seed) noexcept : seed_(seed) {
    std::uint64_t x = seed;
    for (auto& word : s_) {
        x += kGolden;
        word = mix64(x);
    }
    // all-zero state is absorbing for xoshiro; SplitMix64 never emits four zeros, but be safe
    if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = kGolden;
}

std::uint64_t RngStream::next_u64() noexcept {
    const std::uint64_t result = std::rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = std::rotl(s_[3], 45);
    return result;
}

double RngStream::next_unit_uniform() noexcept {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

bool RngStream::next_bernoulli(double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw ParameterError("next_bernoulli: probability " + std::to_string(p) + " outside [0,1]");
    }
    return next_unit_uniform() < p;
}

std::uint64_t derive_seed(MasterSeed master, std::string_view context, std::uint64_t trial) noexcept {
    std::uint64_t h = mix64(master.value + kGolden);
    h = mix64(h ^ (fnv1a64(context) + kGolden));
    h = mix64(h ^ (trial * kGolden + 1));
    return h;
}

RngStream derive_stream(MasterSeed master, std::string_view context, std::uint64_t trial) noexcept {
    return RngStream(derive_seed(master, context, trial));
}

} // namespace fsp
