//----------------------------------*-C++-*----------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file qsolid/AffineMap.hh
//---------------------------------------------------------------------------//
#pragma once

#include "Types.hh"

namespace qsolid
{
//---------------------------------------------------------------------------//
/*!
 * Invertible affine transformation p -> A p + b of three-space.
 *
 * The determinant of the linear part is cached at construction. Singular
 * (or numerically singular) linear parts are rejected with
 * \c std::invalid_argument.
 */
class AffineMap
{
  public:
    // Identity map
    AffineMap();

    // Construct from linear part and translation
    explicit AffineMap(Mat3 const& a, Real3 const& b = {0, 0, 0});

    // Diagonal scaling about the origin
    static AffineMap scaling(Real3 const& s);

    //! Linear part
    Mat3 const& linear() const { return a_; }
    //! Translation
    Real3 const& translation() const { return b_; }
    //! Determinant of the linear part
    real_type det() const { return det_; }

    // Apply to a point
    Real3 operator()(Real3 const& p) const;

    // Inverse map
    AffineMap inverse() const;

    // Homogeneous 4x4 matrix [A b; 0 1]
    Mat4 homogeneous() const;

  private:
    Mat3 a_;
    Real3 b_;
    real_type det_;
};

//---------------------------------------------------------------------------//
// Composition: (f * g)(p) == f(g(p))
AffineMap operator*(AffineMap const& f, AffineMap const& g);

// Determinant of a 3x3 matrix
real_type determinant(Mat3 const& a);

//---------------------------------------------------------------------------//
}  // namespace qsolid
