#pragma once

#include <cstdint>

namespace specnorm {

/// Finalizer of the splitmix64 generator. Bijective on uint64_t, so distinct
/// inputs can never collide.
inline constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
}

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

/// Counter-based uniform bit stream.  State advances by a fixed odd constant,
/// outputs are the mixed state (splitmix64).  The sequence for a given seed is
/// fully determined by the seed, independent of call order elsewhere.
class SplitMix64 {
  public:
    explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    constexpr std::uint64_t next_u64() noexcept {
        state_ += kGolden;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1), 53 random bits.
    double next_unit() noexcept {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform double in (0, 1]; never returns 0, safe under log().
    double next_unit_open() noexcept {
        return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    }

  private:
    std::uint64_t state_;
};

/// Seed of the substream for element `index` of the stream keyed by `master`.
/// For a fixed master seed the map index -> seed is injective (composition of
/// bijections with a constant xor), so substreams never collide.
inline constexpr std::uint64_t substream_seed(std::uint64_t master, std::uint64_t index) noexcept {
    return mix64(master ^ mix64(index + kGolden));
}

/// Hash of (master, a, b) used for per-trial seeds.  Extending a sweep with a
/// new n or replication never disturbs seeds of existing cells.
inline constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a,
                                           std::uint64_t b) noexcept {
    std::uint64_t h = mix64(master ^ kGolden);
    h = mix64(h ^ mix64(a + 0x517CC1B727220A95ULL));
    h = mix64(h ^ mix64(b + 0x2545F4914F6CDD1DULL));
    return h;
}

}  // namespace specnorm
