//----------------------------------*-C++-*----------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file qsolid/Types.hh
//---------------------------------------------------------------------------//
#pragma once

#include <array>
#include <cmath>
#include <cstddef>

namespace qsolid
{
//---------------------------------------------------------------------------//
using real_type = double;
using Real3 = std::array<real_type, 3>;
using Mat3 = std::array<Real3, 3>;
using Mat4 = std::array<std::array<real_type, 4>, 4>;

//---------------------------------------------------------------------------//
/*!
 * Axis-aligned box with closed bounds.
 *
 * A box is valid if lo < hi along every axis.
 */
struct Box
{
    Real3 lo{0, 0, 0};
    Real3 hi{0, 0, 0};

    bool valid() const
    {
        for (std::size_t ax = 0; ax < 3; ++ax)
        {
            if (!(lo[ax] < hi[ax]))
                return false;
        }
        return true;
    }

    real_type volume() const
    {
        return (hi[0] - lo[0]) * (hi[1] - lo[1]) * (hi[2] - lo[2]);
    }

    bool contains(Real3 const& p) const
    {
        for (std::size_t ax = 0; ax < 3; ++ax)
        {
            if (p[ax] < lo[ax] || p[ax] > hi[ax])
                return false;
        }
        return true;
    }

    //! Cube [-h, h]^3
    static Box cube(real_type h) { return {{-h, -h, -h}, {h, h, h}}; }
};

//---------------------------------------------------------------------------//
// VECTOR HELPERS
//---------------------------------------------------------------------------//
inline Real3 operator+(Real3 const& a, Real3 const& b)
{
    return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}

inline Real3 operator-(Real3 const& a, Real3 const& b)
{
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

inline Real3 operator*(real_type s, Real3 const& a)
{
    return {s * a[0], s * a[1], s * a[2]};
}

inline real_type dot(Real3 const& a, Real3 const& b)
{
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

inline Real3 cross(Real3 const& a, Real3 const& b)
{
    return {a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0]};
}

inline real_type norm(Real3 const& a)
{
    return std::sqrt(dot(a, a));
}

//! Cyclic coordinate rotation (x, y, z) -> (y, z, x)
inline Real3 rotate_cyclic(Real3 const& p)
{
    return {p[1], p[2], p[0]};
}

//---------------------------------------------------------------------------//
}  // namespace qsolid
