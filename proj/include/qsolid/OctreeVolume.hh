//----------------------------------*-C++-*----------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file qsolid/OctreeVolume.hh
//---------------------------------------------------------------------------//
#pragma once

#include <cstdint>
#include <vector>

#include "ImplicitSolid.hh"
#include "Quadrature.hh"
#include "Types.hh"

namespace qsolid
{
//---------------------------------------------------------------------------//
//! Closed real interval
struct Interval
{
    real_type lo;
    real_type hi;
};

enum class CellClass
{
    inside,
    outside,
    boundary
};

//---------------------------------------------------------------------------//
// Enclosure of a quadric form's values over a box
Interval form_range(QuadricForm const& q, Box const& cell);

// Classify a box against every constraint of a solid
CellClass classify_cell(ImplicitSolid const& s, Box const& cell);

//---------------------------------------------------------------------------//
/*!
 * Octree traversal details.
 *
 * Level 0 is the root box; level L has cells of volume V/8^L. The counts
 * hold inside and boundary cells found at each level.
 */
struct OctreeResult
{
    QuadratureResult result;
    int depth{0};
    std::vector<std::uint64_t> inside;
    std::vector<std::uint64_t> boundary;
};

//---------------------------------------------------------------------------//
/*!
 * Indicator cubature of a solid's volume over an enclosing box.
 *
 * Cells are recursively classified by interval bounds of every constraint.
 * Inside cells contribute their full volume and boundary cells at the final
 * depth contribute half their volume, so the error bound is half the
 * remaining boundary volume. The depth is increased until the bound meets
 * \c tol or \c max_depth is reached. All sums are integer cell counts, so
 * the result does not depend on the thread count.
 */
OctreeResult volume_by_octree_detailed(ImplicitSolid const& s,
                                       Box const& box,
                                       real_type tol,
                                       int max_depth,
                                       unsigned int threads = 0);

// Volume and error bound only
QuadratureResult volume_by_octree(ImplicitSolid const& s,
                                  Box const& box,
                                  real_type tol,
                                  int max_depth,
                                  unsigned int threads = 0);

// Single traversal to a fixed depth
OctreeResult octree_at_depth(ImplicitSolid const& s,
                             Box const& box,
                             int depth,
                             unsigned int threads = 0);

//---------------------------------------------------------------------------//
}  // namespace qsolid
