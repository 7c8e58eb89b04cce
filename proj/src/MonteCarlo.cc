//----------------------------------*-C++-*----------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file MonteCarlo.cc
//---------------------------------------------------------------------------//
#include "qsolid/MonteCarlo.hh"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "qsolid/Parallel.hh"
#include "qsolid/Philox.hh"

namespace qsolid
{
namespace
{
//---------------------------------------------------------------------------//
constexpr std::uint64_t chunk_size = std::uint64_t{1} << 16;

//---------------------------------------------------------------------------//
void validate(Box const& box, std::uint64_t n)
{
    if (!box.valid())
        throw std::invalid_argument("sampling box must have lo < hi");
    if (n == 0)
        throw std::invalid_argument("sample count must be positive");
}

//---------------------------------------------------------------------------//
/*!
 * Count hits over fixed index chunks.
 *
 * Chunks are summed as integers so the total is independent of how chunks
 * are distributed over threads.
 */
template<class Pred>
std::uint64_t count_hits(Box const& box,
                         std::uint64_t n,
                         std::uint64_t seed,
                         unsigned int threads,
                         Pred const& is_hit)
{
    std::size_t const num_chunks = (n + chunk_size - 1) / chunk_size;
    std::vector<std::uint64_t> hits(num_chunks, 0);
    parallel_for(num_chunks, resolve_threads(threads), [&](std::size_t c) {
        std::uint64_t begin = c * chunk_size;
        std::uint64_t end = std::min(n, begin + chunk_size);
        std::uint64_t count = 0;
        for (std::uint64_t i = begin; i < end; ++i)
        {
            if (is_hit(uniform_point(box, seed, i)))
                ++count;
        }
        hits[c] = count;
    });
    return std::accumulate(hits.begin(), hits.end(), std::uint64_t{0});
}

//---------------------------------------------------------------------------//
VolumeEstimate make_estimate(real_type region_volume,
                             std::uint64_t n,
                             std::uint64_t hits,
                             std::uint64_t seed)
{
    VolumeEstimate result;
    real_type p = static_cast<real_type>(hits) / static_cast<real_type>(n);
    result.value = region_volume * p;
    result.std_error = region_volume
                       * std::sqrt(p * (1 - p) / static_cast<real_type>(n));
    result.n = n;
    result.hits = hits;
    result.method = VolumeMethod::mc;
    result.seed = seed;
    return result;
}

//---------------------------------------------------------------------------//
}  // namespace

//---------------------------------------------------------------------------//
std::string_view to_cstring(VolumeMethod m)
{
    switch (m)
    {
        case VolumeMethod::mc:
            return "mc";
        case VolumeMethod::cubature:
            return "cubature";
        case VolumeMethod::closed_form:
            return "closed_form";
    }
    return "unknown";
}

//---------------------------------------------------------------------------//
/*!
 * Point for sample 'index': two Philox blocks keyed by the seed, with the
 * sample index as the counter, supply 64 bits per coordinate.
 */
Real3 uniform_point(Box const& box, std::uint64_t seed, std::uint64_t index)
{
    Philox4x32 const rng{seed};
    auto lo = static_cast<std::uint32_t>(index);
    auto hi = static_cast<std::uint32_t>(index >> 32);
    auto a = rng({lo, hi, 0, 0});
    auto b = rng({lo, hi, 1, 0});
    Real3 const u{to_unit_interval(a[0], a[1]),
                  to_unit_interval(a[2], a[3]),
                  to_unit_interval(b[0], b[1])};
    Real3 p;
    for (int ax = 0; ax < 3; ++ax)
        p[ax] = box.lo[ax] + u[ax] * (box.hi[ax] - box.lo[ax]);
    return p;
}

//---------------------------------------------------------------------------//
VolumeEstimate estimate_volume(ImplicitSolid const& s,
                               Box const& box,
                               std::uint64_t n,
                               std::uint64_t seed,
                               unsigned int threads)
{
    validate(box, n);
    auto hits = count_hits(
        box, n, seed, threads, [&s](Real3 const& p) { return s.contains(p); });
    return make_estimate(box.volume(), n, hits, seed);
}

//---------------------------------------------------------------------------//
real_type hit_rate(ImplicitSolid const& s,
                   Box const& box,
                   std::uint64_t n,
                   std::uint64_t seed,
                   unsigned int threads)
{
    auto est = estimate_volume(s, box, n, seed, threads);
    return static_cast<real_type>(est.hits) / static_cast<real_type>(est.n);
}

//---------------------------------------------------------------------------//
/*!
 * Uniform samples of the box pushed through the map are uniform in the
 * parallelepiped image, whose volume is |det| times the box volume.
 */
VolumeEstimate estimate_volume_mapped(ImplicitSolid const& s,
                                      Box const& box,
                                      AffineMap const& map,
                                      std::uint64_t n,
                                      std::uint64_t seed,
                                      unsigned int threads)
{
    validate(box, n);
    auto hits = count_hits(box, n, seed, threads, [&](Real3 const& p) {
        return s.contains(map(p));
    });
    return make_estimate(std::abs(map.det()) * box.volume(), n, hits, seed);
}

//---------------------------------------------------------------------------//
}  // namespace qsolid
