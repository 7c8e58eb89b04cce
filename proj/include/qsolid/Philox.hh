//----------------------------------*-C++-*----------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file qsolid/Philox.hh
//---------------------------------------------------------------------------//
#pragma once

#include <array>
#include <cstdint>

namespace qsolid
{
//---------------------------------------------------------------------------//
/*!
 * Philox4x32-10 counter-based bijection.
 *
 * The output block is a pure function of the 128-bit counter and 64-bit key,
 * so any sample index can be generated independently of every other one.
 * Constants and round structure follow Salmon et al. (SC'11).
 */
class Philox4x32
{
  public:
    using Block = std::array<std::uint32_t, 4>;
    using Key = std::array<std::uint32_t, 2>;

    explicit constexpr Philox4x32(std::uint64_t seed)
        : key_{static_cast<std::uint32_t>(seed),
               static_cast<std::uint32_t>(seed >> 32)}
    {
    }

    explicit constexpr Philox4x32(Key key) : key_{key} {}

    constexpr Block operator()(Block ctr) const
    {
        Key key = key_;
        for (int round = 0; round < 10; ++round)
        {
            if (round > 0)
            {
                key[0] += weyl_a;
                key[1] += weyl_b;
            }
            std::uint64_t p0 = std::uint64_t{mult_a} * ctr[0];
            std::uint64_t p1 = std::uint64_t{mult_b} * ctr[2];
            auto hi0 = static_cast<std::uint32_t>(p0 >> 32);
            auto lo0 = static_cast<std::uint32_t>(p0);
            auto hi1 = static_cast<std::uint32_t>(p1 >> 32);
            auto lo1 = static_cast<std::uint32_t>(p1);
            ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
        }
        return ctr;
    }

  private:
    static constexpr std::uint32_t mult_a = 0xD2511F53u;
    static constexpr std::uint32_t mult_b = 0xCD9E8D57u;
    static constexpr std::uint32_t weyl_a = 0x9E3779B9u;
    static constexpr std::uint32_t weyl_b = 0xBB67AE85u;

    Key key_;
};

//---------------------------------------------------------------------------//
//! Map 64 random bits to a double in [0, 1) with 53 bits of resolution
constexpr double to_unit_interval(std::uint32_t hi, std::uint32_t lo)
{
    std::uint64_t bits = (std::uint64_t{hi} << 32) | lo;
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

//---------------------------------------------------------------------------//
}  // namespace qsolid
