// SPDX-License-Identifier: Apache-2.0
//
// Splittable random source for the Monte Carlo oracle.
//
// Engine: xoshiro256** (Blackman & Vigna), state filled by SplitMix64.
// Stream rule: the substream for (seed, stream_id) is seeded by running
// SplitMix64 from  seed ^ (0x9E3779B97F4A7C15 * (stream_id + 1)).
// The oracle uses stream_id = trial * regions + region, so every (trial,
// region) pair draws from its own stream regardless of scheduling.
#pragma once

#include <cstdint>
#include <limits>

namespace iftw {

class SplitMix64
{
  public:
    explicit SplitMix64(std::uint64_t state) : state_(state) {}

    std::uint64_t next()
    {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

  private:
    std::uint64_t state_;
};

//! Satisfies UniformRandomBitGenerator, so it plugs into <random> distributions.
class Xoshiro256ss
{
  public:
    using result_type = std::uint64_t;

    explicit Xoshiro256ss(std::uint64_t seed)
    {
        SplitMix64 sm(seed);
        for (auto& word : s_)
            word = sm.next();
    }

    static Xoshiro256ss substream(std::uint64_t seed, std::uint64_t stream_id)
    {
        return Xoshiro256ss(seed ^ (0x9E3779B97F4A7C15ULL * (stream_id + 1)));
    }

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    result_type operator()()
    {
        const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

  private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::uint64_t s_[4];
};

}  // namespace iftw
