//----------------------------------*-C++-*----------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file qsolid/QuadricForm.hh
//---------------------------------------------------------------------------//
#pragma once

#include "Types.hh"

namespace qsolid
{
//---------------------------------------------------------------------------//
/*!
 * Polynomial coefficients of a general quadric in x, y, z.
 *
 * \verbatim
   p(x,y,z) = xx x^2 + yy y^2 + zz z^2 + xy xy + xz xz + yz yz
              + x x + y y + z z + c
 * \endverbatim
 */
struct QuadricCoeffs
{
    real_type xx{0}, yy{0}, zz{0};
    real_type xy{0}, xz{0}, yz{0};
    real_type x{0}, y{0}, z{0};
    real_type c{0};
};

//---------------------------------------------------------------------------//
/*!
 * Quadratic polynomial stored as a symmetric homogeneous 4x4 matrix.
 *
 * The polynomial value is \f$ p(v) = \tilde v^T M \tilde v \f$ with
 * \f$ \tilde v = (x, y, z, 1) \f$. Off-diagonal polynomial coefficients are
 * split evenly between the two symmetric entries, so a cross-term coefficient
 * \c xy maps to \c M[0][1] = M[1][0] = xy/2. Halving and doubling are exact in
 * binary floating point, which lets coefficients survive a round trip through
 * the matrix bit-for-bit.
 */
class QuadricForm
{
  public:
    // Zero polynomial
    QuadricForm() = default;

    // Construct from an arbitrary matrix (symmetrized)
    explicit QuadricForm(Mat4 const& m);

    // Construct from polynomial coefficients
    static QuadricForm from_coeffs(QuadricCoeffs const& c);

    //! Symmetric homogeneous matrix
    Mat4 const& matrix() const { return m_; }

    // Polynomial coefficients recovered from the matrix
    QuadricCoeffs coeffs() const;

    // Evaluate the polynomial
    real_type operator()(Real3 const& p) const;

    // Gradient of the polynomial
    Real3 gradient(Real3 const& p) const;

    // Whether every coefficient is zero
    bool is_zero() const;

    friend bool operator==(QuadricForm const&, QuadricForm const&) = default;

  private:
    Mat4 m_{};
};

//---------------------------------------------------------------------------//
// Evaluate a quadric form at a point
inline real_type eval(QuadricForm const& q, Real3 const& p)
{
    return q(p);
}

//---------------------------------------------------------------------------//
}  // namespace qsolid
