#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>

namespace covtrans::rng {

/// Philox4x32-10 counter-based generator. Every 128-bit counter maps to an
/// independent 128-bit output block under a 64-bit key, so any position in
/// the stream is computable without sequential state.
struct Philox4x32 {
    static constexpr std::uint32_t kMult0 = 0xD2511F53u;
    static constexpr std::uint32_t kMult1 = 0xCD9E8D57u;
    static constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
    static constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

    static std::array<std::uint32_t, 4> block(std::uint64_t ctr_lo, std::uint64_t ctr_hi,
                                              std::uint64_t key) {
        std::uint32_t c0 = static_cast<std::uint32_t>(ctr_lo);
        std::uint32_t c1 = static_cast<std::uint32_t>(ctr_lo >> 32);
        std::uint32_t c2 = static_cast<std::uint32_t>(ctr_hi);
        std::uint32_t c3 = static_cast<std::uint32_t>(ctr_hi >> 32);
        std::uint32_t k0 = static_cast<std::uint32_t>(key);
        std::uint32_t k1 = static_cast<std::uint32_t>(key >> 32);
        for (int round = 0; round < 10; ++round) {
            const std::uint64_t prod0 = static_cast<std::uint64_t>(kMult0) * c0;
            const std::uint64_t prod1 = static_cast<std::uint64_t>(kMult1) * c2;
            const std::uint32_t hi0 = static_cast<std::uint32_t>(prod0 >> 32);
            const std::uint32_t lo0 = static_cast<std::uint32_t>(prod0);
            const std::uint32_t hi1 = static_cast<std::uint32_t>(prod1 >> 32);
            const std::uint32_t lo1 = static_cast<std::uint32_t>(prod1);
            c0 = hi1 ^ c1 ^ k0;
            c1 = lo1;
            c2 = hi0 ^ c3 ^ k1;
            c3 = lo0;
            k0 += kWeyl0;
            k1 += kWeyl1;
        }
        return {c0, c1, c2, c3};
    }
};

/// Maps a 64-bit word to the open interval (0, 1) on the 2^-52 grid.
/// 52 bits keep the +0.5 offset exactly representable at the top of the
/// range, so neither endpoint is ever produced.
inline double u64_to_unit_open(std::uint64_t x) {
    return (static_cast<double>(x >> 12) + 0.5) * 0x1.0p-52;
}

/// Two standard normals from the Philox block at (sample, block) under the
/// given key, via Box-Muller.
inline std::array<double, 2> normal_pair(std::uint64_t sample, std::uint32_t block_in_sample,
                                         std::uint64_t key) {
    const auto words = Philox4x32::block(sample, block_in_sample, key);
    const std::uint64_t w0 = (static_cast<std::uint64_t>(words[1]) << 32) | words[0];
    const std::uint64_t w1 = (static_cast<std::uint64_t>(words[3]) << 32) | words[2];
    const double u1 = u64_to_unit_open(w0);
    const double u2 = u64_to_unit_open(w1);
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    return {radius * std::cos(angle), radius * std::sin(angle)};
}

}  // namespace covtrans::rng
