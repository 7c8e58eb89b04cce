//----------------------------------*-C++-*----------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file ImplicitSolid.cc
//---------------------------------------------------------------------------//
#include "qsolid/ImplicitSolid.hh"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace qsolid
{
//---------------------------------------------------------------------------//
ImplicitSolid::ImplicitSolid(VecHalfSpace constraints, std::optional<Box> bbox)
    : constraints_{std::move(constraints)}, bbox_{std::move(bbox)}
{
    if (constraints_.empty())
    {
        throw std::invalid_argument("implicit solid needs at least one "
                                    "constraint");
    }
    if (bbox_ && !bbox_->valid())
    {
        throw std::invalid_argument("implicit solid bounding box is invalid");
    }
}

//---------------------------------------------------------------------------//
bool ImplicitSolid::contains(Real3 const& p) const
{
    return std::all_of(constraints_.begin(),
                       constraints_.end(),
                       [&p](HalfSpace const& h) { return h.contains(p); });
}

//---------------------------------------------------------------------------//
/*!
 * Append constraints. The attached box stays valid since the result is a
 * subset.
 */
ImplicitSolid ImplicitSolid::intersected(VecHalfSpace const& extra) const
{
    VecHalfSpace cons = constraints_;
    cons.insert(cons.end(), extra.begin(), extra.end());
    return ImplicitSolid{std::move(cons), bbox_};
}

//---------------------------------------------------------------------------//
/*!
 * Congruence transform of the homogeneous matrix.
 *
 * With h = T p for the homogeneous map T, q'(h) = q(T^{-1} h), so
 * M' = T^{-T} M T^{-1}.
 */
QuadricForm transform(QuadricForm const& q, AffineMap const& a)
{
    Mat4 const inv = a.inverse().homogeneous();
    Mat4 const& m = q.matrix();

    // tmp = M T^{-1}
    Mat4 tmp{};
    for (int i = 0; i < 4; ++i)
    {
        for (int j = 0; j < 4; ++j)
        {
            real_type acc = 0;
            for (int k = 0; k < 4; ++k)
                acc += m[i][k] * inv[k][j];
            tmp[i][j] = acc;
        }
    }
    // result = T^{-T} tmp
    Mat4 result{};
    for (int i = 0; i < 4; ++i)
    {
        for (int j = 0; j < 4; ++j)
        {
            real_type acc = 0;
            for (int k = 0; k < 4; ++k)
                acc += inv[k][i] * tmp[k][j];
            result[i][j] = acc;
        }
    }
    return QuadricForm{result};
}

//---------------------------------------------------------------------------//
ImplicitSolid transform(ImplicitSolid const& s, AffineMap const& a)
{
    ImplicitSolid::VecHalfSpace cons;
    cons.reserve(s.constraints().size());
    for (auto const& h : s.constraints())
    {
        cons.push_back({transform(h.form, a)});
    }
    std::optional<Box> bbox;
    if (s.bbox())
    {
        bbox = transform(*s.bbox(), a);
    }
    return ImplicitSolid{std::move(cons), bbox};
}

//---------------------------------------------------------------------------//
Box transform(Box const& b, AffineMap const& a)
{
    constexpr real_type inf = std::numeric_limits<real_type>::infinity();
    Box result{{inf, inf, inf}, {-inf, -inf, -inf}};
    for (int corner = 0; corner < 8; ++corner)
    {
        Real3 p;
        for (int ax = 0; ax < 3; ++ax)
            p[ax] = (corner & (1 << ax)) ? b.hi[ax] : b.lo[ax];
        Real3 q = a(p);
        for (int ax = 0; ax < 3; ++ax)
        {
            result.lo[ax] = std::min(result.lo[ax], q[ax]);
            result.hi[ax] = std::max(result.hi[ax], q[ax]);
        }
    }
    return result;
}

//---------------------------------------------------------------------------//
}  // namespace qsolid
