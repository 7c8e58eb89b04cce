//----------------------------------*-C++-*----------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file qsolid/MeshExport.hh
//! \brief Wireframe and surface geometry of the tri-hyperboloid boundary
//---------------------------------------------------------------------------//
#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "Revenge.hh"
#include "Types.hh"

namespace qsolid
{
//---------------------------------------------------------------------------//
/*!
 * Indexed line and triangle geometry.
 *
 * Indices are zero-based into \c vertices. Segments never join a vertex to
 * itself.
 */
struct WireMesh
{
    using Index = std::size_t;

    std::vector<Real3> vertices;
    std::vector<std::array<Index, 2>> segments;
    std::vector<std::array<Index, 3>> faces;
};

// Check index ranges and segment non-degeneracy, throwing on failure
void validate(WireMesh const& m);

// Append another mesh, offsetting its indices
void append(WireMesh* dst, WireMesh const& src);

// The 24 maps generated by sign flips and the cyclic rotation
std::array<Mat3, 24> symmetry_group();

/*!
 * Boundary wireframe of the tri-hyperboloid solid.
 *
 * Always contains the 12 stella octangula edges. For a positive ruling
 * count it adds the 12 coordinate-plane quarter circles, sampled on the same
 * angular grid as the rulings, and both ruling families of every curved
 * piece in every octant. Vertices with identical coordinates are shared.
 */
WireMesh build_wireframe(int rulings_per_family);

/*!
 * Triangulated hyperboloid roof of one curved piece.
 *
 * The grid spans angle t in [0, pi/2] and ruling parameter s in [0, u(t)]
 * with resolution + 1 samples each. Every grid point is kept, so the cells
 * touching the apex at t = pi/2 collapse to degenerate triangles.
 */
WireMesh triangulate_patch(revenge::Piece piece, int resolution);

// Sum of triangle areas
real_type surface_area(WireMesh const& m);

// OBJ text with 17 significant digits and 1-based indices
std::string write_obj(WireMesh const& m);

//---------------------------------------------------------------------------//
}  // namespace qsolid
