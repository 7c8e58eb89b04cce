//----------------------------------*-C++-*----------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file AffineMap.cc
//---------------------------------------------------------------------------//
#include "qsolid/AffineMap.hh"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qsolid
{
namespace
{
//---------------------------------------------------------------------------//
Mat3 identity3()
{
    return {Real3{1, 0, 0}, Real3{0, 1, 0}, Real3{0, 0, 1}};
}

//---------------------------------------------------------------------------//
real_type max_abs_entry(Mat3 const& a)
{
    real_type result = 0;
    for (auto const& row : a)
    {
        for (real_type v : row)
            result = std::max(result, std::abs(v));
    }
    return result;
}

//---------------------------------------------------------------------------//
}  // namespace

//---------------------------------------------------------------------------//
real_type determinant(Mat3 const& a)
{
    return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
           - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
           + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

//---------------------------------------------------------------------------//
AffineMap::AffineMap() : a_{identity3()}, b_{0, 0, 0}, det_{1} {}

//---------------------------------------------------------------------------//
/*!
 * Construct and validate invertibility.
 *
 * The map is singular if |det| is below a relative threshold of the cubed
 * largest entry.
 */
AffineMap::AffineMap(Mat3 const& a, Real3 const& b)
    : a_{a}, b_{b}, det_{determinant(a)}
{
    real_type scale = max_abs_entry(a);
    if (!(std::abs(det_) > 1e-14 * scale * scale * scale)
        || !std::isfinite(det_))
    {
        std::ostringstream msg;
        msg << "singular affine map (det = " << det_ << ")";
        throw std::invalid_argument(msg.str());
    }
}

//---------------------------------------------------------------------------//
AffineMap AffineMap::scaling(Real3 const& s)
{
    return AffineMap{Mat3{Real3{s[0], 0, 0}, Real3{0, s[1], 0},
                          Real3{0, 0, s[2]}}};
}

//---------------------------------------------------------------------------//
Real3 AffineMap::operator()(Real3 const& p) const
{
    Real3 result;
    for (int i = 0; i < 3; ++i)
    {
        result[i] = a_[i][0] * p[0] + a_[i][1] * p[1] + a_[i][2] * p[2]
                    + b_[i];
    }
    return result;
}

//---------------------------------------------------------------------------//
/*!
 * Inverse via the adjugate: A^{-1} = adj(A)/det, translation -A^{-1} b.
 */
AffineMap AffineMap::inverse() const
{
    auto const& a = a_;
    Mat3 inv;
    inv[0][0] = a[1][1] * a[2][2] - a[1][2] * a[2][1];
    inv[0][1] = a[0][2] * a[2][1] - a[0][1] * a[2][2];
    inv[0][2] = a[0][1] * a[1][2] - a[0][2] * a[1][1];
    inv[1][0] = a[1][2] * a[2][0] - a[1][0] * a[2][2];
    inv[1][1] = a[0][0] * a[2][2] - a[0][2] * a[2][0];
    inv[1][2] = a[0][2] * a[1][0] - a[0][0] * a[1][2];
    inv[2][0] = a[1][0] * a[2][1] - a[1][1] * a[2][0];
    inv[2][1] = a[0][1] * a[2][0] - a[0][0] * a[2][1];
    inv[2][2] = a[0][0] * a[1][1] - a[0][1] * a[1][0];
    for (auto& row : inv)
    {
        for (real_type& v : row)
            v /= det_;
    }
    Real3 t;
    for (int i = 0; i < 3; ++i)
    {
        t[i] = 0 - (inv[i][0] * b_[0] + inv[i][1] * b_[1] + inv[i][2] * b_[2]);
    }
    return AffineMap{inv, t};
}

//---------------------------------------------------------------------------//
Mat4 AffineMap::homogeneous() const
{
    Mat4 h{};
    for (int i = 0; i < 3; ++i)
    {
        for (int j = 0; j < 3; ++j)
            h[i][j] = a_[i][j];
        h[i][3] = b_[i];
    }
    h[3][3] = 1;
    return h;
}

//---------------------------------------------------------------------------//
AffineMap operator*(AffineMap const& f, AffineMap const& g)
{
    auto const& fa = f.linear();
    auto const& ga = g.linear();
    Mat3 a{};
    for (int i = 0; i < 3; ++i)
    {
        for (int j = 0; j < 3; ++j)
        {
            a[i][j] = fa[i][0] * ga[0][j] + fa[i][1] * ga[1][j]
                      + fa[i][2] * ga[2][j];
        }
    }
    Real3 gb = g.translation();
    Real3 b = f(gb);
    return AffineMap{a, b};
}

//---------------------------------------------------------------------------//
}  // namespace qsolid
