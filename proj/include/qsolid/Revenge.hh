//----------------------------------*-C++-*----------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file qsolid/Revenge.hh
//! \brief Symmetry decomposition of the tri-hyperboloid solid
//---------------------------------------------------------------------------//
#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ImplicitSolid.hh"
#include "Quadrature.hh"
#include "Types.hh"

namespace qsolid
{
namespace revenge
{
//---------------------------------------------------------------------------//
// SOLIDS
//---------------------------------------------------------------------------//
// The three hyperboloid forms: x^2+y^2-z^2-1, y^2+z^2-x^2-1, z^2+x^2-y^2-1
QuadricForm hyperboloid(int index);

// Intersection R of the three solid hyperboloids, enclosed by [-1, 1]^3
ImplicitSolid tri_hyperboloid();

// First-octant component R1 (adds x, y, z >= 0), enclosed by [0, 1]^3
ImplicitSolid first_octant_component();

//---------------------------------------------------------------------------//
/*!
 * Curved pieces of R1.
 *
 * S2 lies under the hyperboloid z^2 + x^2 - y^2 = 1 and above the face
 * x - y + z = 1 of the outer tetrahedron:
 * 0 <= y <= x <= 1 and 1 - x + y <= z <= sqrt(1 + y^2 - x^2).
 * S3 and S1 are its images under successive cyclic rotations
 * (x, y, z) -> (y, z, x).
 */
enum class Piece
{
    s1,
    s2,
    s3
};

ImplicitSolid curved_piece(Piece p);

// Cyclic coordinate rotation as an affine map
AffineMap cyclic_rotation();

//---------------------------------------------------------------------------//
// PAIRWISE INTERSECTIONS
//---------------------------------------------------------------------------//
struct Segment
{
    Real3 start;
    Real3 end;
};

struct Line
{
    Real3 point;
    Real3 direction;
    std::optional<Segment> clipped;
};

//! The two lines a = b and a = -b at one sign of the fixed coordinate
struct LinePair
{
    std::array<Line, 2> lines;
};

/*!
 * Degenerate intersection of two hyperboloid surfaces.
 *
 * Summing the two equations fixes one coordinate at +-1 and subtracting them
 * gives a^2 = b^2 in the other two. Element 0 is the +1 pair and element 1
 * the -1 pair. Each line is clipped by the third solid hyperboloid to the
 * segment with endpoints on a^2 + b^2 = 2.
 */
std::array<LinePair, 2> pairwise_intersection(int i, int j);

//---------------------------------------------------------------------------//
// VOLUMES AND INTEGRALS
//---------------------------------------------------------------------------//
// Unsigned tetrahedron volume
real_type tetra_volume(Real3 const& p0,
                       Real3 const& p1,
                       Real3 const& p2,
                       Real3 const& p3);

// Curved-piece volume log(2)/3 - 1/6
real_type curved_piece_closed_form();

// Roof integral I1 = log(2)/3 + 1/6
real_type roof_integral_closed_form();

// Tetrahedral face integral I2 = 1/3
real_type face_integral_closed_form();

// Curved-piece volume by iterated quadrature of the height difference
QuadratureResult curved_piece_quadrature(real_type tol);

// Iterated quadrature of sqrt(1 + y^2 - x^2) over 0 <= y <= x <= 1
QuadratureResult roof_integral_quadrature(real_type tol);

// Iterated quadrature of 1 - x + y over 0 <= y <= x <= 1
QuadratureResult face_integral_quadrature(real_type tol);

// Integrand of the alternative one-dimensional curved-piece integral
real_type li_integrand(real_type z);

// Alternative one-dimensional integral for the curved-piece volume
QuadratureResult li_integral(real_type tol);

//---------------------------------------------------------------------------//
// RULINGS
//---------------------------------------------------------------------------//
enum class RulingFamily
{
    theta,
    phi
};

/*!
 * Straight segment of S2's hyperboloid roof.
 *
 * Theta rulings run from (sin t, 0, cos t) on the quarter circle to
 * (1, u, u) on the edge x = 1, y = z; phi rulings from (cos t, 0, sin t) to
 * (u, u, 1), with u = sec t - tan t.
 */
struct RulingSegment
{
    RulingFamily family;
    real_type angle;
    Real3 start;
    Real3 end;

    // Point at parameter s along the ruling, s in [0, u]
    Real3 at(real_type s) const;
    // Parameter length u
    real_type length_parameter() const;
};

// Ruling at an arbitrary angle in [0, pi/2]
RulingSegment ruling(RulingFamily family, real_type angle);

// Rulings at angles k (pi/2) / (count + 1), k = 1..count
std::vector<RulingSegment> rulings(RulingFamily family, int count);

//---------------------------------------------------------------------------//
// REPORT
//---------------------------------------------------------------------------//
struct CrossCheck
{
    std::string name;
    real_type lhs;
    real_type rhs;
    real_type abs_diff;
    real_type tolerance;
    bool pass;
};

struct ReportOptions
{
    real_type tol{1e-8};
    //! Tolerance for the alternative integral
    real_type li_tol{1e-10};
    std::uint64_t mc_samples{1000000};
    std::uint64_t mc_seed{42};
    //! Octree tolerance on the total volume; nonpositive disables
    real_type octree_tol{5e-2};
    int octree_max_depth{16};
    unsigned int threads{0};
};

/*!
 * Assembled decomposition with independent cross-checks.
 *
 * Closed forms are the reported values; quadrature, Monte Carlo and octree
 * results only appear in the cross-checks.
 */
struct DecompositionReport
{
    real_type vol_pi1;
    real_type vol_pi2;
    real_type curved;  //!< I
    real_type roof;  //!< I1
    real_type face;  //!< I2
    real_type v1;
    real_type total;

    QuadratureResult curved_quad;
    QuadratureResult roof_quad;
    QuadratureResult face_quad;
    QuadratureResult li;

    std::vector<CrossCheck> cross_checks;
    bool converged;
};

DecompositionReport full_report(ReportOptions const& opts = {});

// Report with default options at the given quadrature tolerance
DecompositionReport full_report(real_type tol);

//---------------------------------------------------------------------------//
}  // namespace revenge
}  // namespace qsolid
