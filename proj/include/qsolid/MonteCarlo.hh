//----------------------------------*-C++-*----------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file qsolid/MonteCarlo.hh
//---------------------------------------------------------------------------//
#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "AffineMap.hh"
#include "ImplicitSolid.hh"
#include "Types.hh"

namespace qsolid
{
//---------------------------------------------------------------------------//
enum class VolumeMethod
{
    mc,
    cubature,
    closed_form
};

std::string_view to_cstring(VolumeMethod m);

//---------------------------------------------------------------------------//
/*!
 * Volume with its uncertainty.
 *
 * For Monte Carlo, \c std_error is one standard deviation of the estimator
 * using the binomial plug-in variance; for other methods it holds the
 * method's error bound.
 */
struct VolumeEstimate
{
    real_type value{0};
    real_type std_error{0};
    std::uint64_t n{0};
    std::uint64_t hits{0};
    VolumeMethod method{VolumeMethod::mc};
    std::optional<std::uint64_t> seed;
};

//---------------------------------------------------------------------------//
// Uniform sample 'index' of the stream keyed by 'seed' inside a box
Real3 uniform_point(Box const& box, std::uint64_t seed, std::uint64_t index);

// Hit-or-miss estimate of the solid's volume inside the box
VolumeEstimate estimate_volume(ImplicitSolid const& s,
                               Box const& box,
                               std::uint64_t n,
                               std::uint64_t seed,
                               unsigned int threads = 0);

// Fraction of box samples inside the solid
real_type hit_rate(ImplicitSolid const& s,
                   Box const& box,
                   std::uint64_t n,
                   std::uint64_t seed,
                   unsigned int threads = 0);

// Estimate over the parallelepiped map(box) by sampling the pre-image box
VolumeEstimate estimate_volume_mapped(ImplicitSolid const& s,
                                      Box const& box,
                                      AffineMap const& map,
                                      std::uint64_t n,
                                      std::uint64_t seed,
                                      unsigned int threads = 0);

//---------------------------------------------------------------------------//
}  // namespace qsolid
