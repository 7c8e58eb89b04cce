//----------------------------------*-C++-*----------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file qsolid/Classics.hh
//! \brief Steinmetz solids built from cylinder constraints
//---------------------------------------------------------------------------//
#pragma once

#include <cstdint>

#include "AffineMap.hh"
#include "ImplicitSolid.hh"
#include "Types.hh"

namespace qsolid
{
//---------------------------------------------------------------------------//
/*!
 * Infinite solid cylinder through the origin.
 *
 * The axis must have unit norm within 1e-12 and the radius must be positive.
 */
struct CylinderSpec
{
    Real3 axis;
    real_type radius;
};

// Check the cylinder invariants, throwing on failure
void validate(CylinderSpec const& c);

// Squared distance to the axis minus r^2
QuadricForm cylinder_form(CylinderSpec const& c);

//---------------------------------------------------------------------------//
/*!
 * Two equal cylinders with axes in the xy-plane, one along x.
 *
 * The second axis is (cos a, sin a, 0). The attached bounding box is
 * |x| <= r (1 + |cos a|) / sin a, |y| <= r, |z| <= r.
 */
ImplicitSolid bicylinder(real_type radius, real_type angle);

// Three equal axis-aligned cylinders, bounded by [-r, r]^3
ImplicitSolid tricylinder(real_type radius);

/*!
 * Shear taking the orthogonal bicylinder to the one at the given angle.
 *
 * The map fixes the x axis and sends the y axis to (cos a, sin a, 0) scaled
 * by 1 / sin a, so its determinant is 1 / sin a.
 */
AffineMap bicylinder_shear(real_type angle);

// Cube [-r, r]^3 circumscribing the orthogonal bicylinder
Box bicylinder_cube(real_type radius);

//---------------------------------------------------------------------------//
//! Volume ratios before and after an affine map
struct AffineRatio
{
    real_type before;
    real_type after;
    real_type before_stderr;
    real_type after_stderr;
};

/*!
 * Monte Carlo volume ratios of a solid to its box, before and after a map.
 *
 * The mapped ratio is Vol(A(s)) / Vol(A(box)); its samples are drawn in the
 * original box and pushed forward through A, so the parallelepiped A(box)
 * never needs an axis-aligned enclosure.
 */
AffineRatio affine_ratio_check(ImplicitSolid const& s,
                               Box const& box,
                               AffineMap const& a,
                               std::uint64_t n,
                               std::uint64_t seed,
                               unsigned int threads = 0);

//---------------------------------------------------------------------------//
}  // namespace qsolid
