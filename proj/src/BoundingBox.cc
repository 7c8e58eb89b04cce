//----------------------------------*-C++-*----------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file BoundingBox.cc
//! \brief Boundedness certification from nonnegative constraint combinations
//---------------------------------------------------------------------------//
#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <optional>
#include <vector>

#include "qsolid/ImplicitSolid.hh"

namespace qsolid
{
namespace
{
//---------------------------------------------------------------------------//
constexpr real_type inf = std::numeric_limits<real_type>::infinity();

// Range of log2 weights scanned for the second member of a constraint pair
constexpr int min_log_weight = -10;
constexpr int max_log_weight = 10;

//---------------------------------------------------------------------------//
/*!
 * Invert a small symmetric matrix if it is positive definite.
 *
 * Uses a Cholesky factorization; returns false if any pivot is not
 * comfortably positive.
 */
bool invert_spd(std::vector<std::vector<real_type>> const& a,
                std::vector<std::vector<real_type>>* inv)
{
    std::size_t const n = a.size();
    real_type scale = 0;
    for (std::size_t i = 0; i < n; ++i)
        scale = std::max(scale, std::abs(a[i][i]));

    std::vector<std::vector<real_type>> l(n, std::vector<real_type>(n, 0));
    for (std::size_t j = 0; j < n; ++j)
    {
        real_type d = a[j][j];
        for (std::size_t k = 0; k < j; ++k)
            d -= l[j][k] * l[j][k];
        if (!(d > 1e-12 * scale))
            return false;
        l[j][j] = std::sqrt(d);
        for (std::size_t i = j + 1; i < n; ++i)
        {
            real_type s = a[i][j];
            for (std::size_t k = 0; k < j; ++k)
                s -= l[i][k] * l[j][k];
            l[i][j] = s / l[j][j];
        }
    }

    // Solve L L^T X = I column by column
    inv->assign(n, std::vector<real_type>(n, 0));
    for (std::size_t col = 0; col < n; ++col)
    {
        std::vector<real_type> y(n, 0);
        for (std::size_t i = 0; i < n; ++i)
        {
            real_type s = (i == col) ? 1 : 0;
            for (std::size_t k = 0; k < i; ++k)
                s -= l[i][k] * y[k];
            y[i] = s / l[i][i];
        }
        for (std::size_t ii = n; ii-- > 0;)
        {
            real_type s = y[ii];
            for (std::size_t k = ii + 1; k < n; ++k)
                s -= l[k][ii] * (*inv)[k][col];
            (*inv)[ii][col] = s / l[ii][ii];
        }
    }
    return true;
}

//---------------------------------------------------------------------------//
/*!
 * Tighten the box using a single combined form Q(p) <= 0.
 *
 * Coordinates that appear in the quadratic part form a subspace J. If the
 * linear part has no component outside J and the quadratic block on J is
 * positive definite, the feasible set projects onto an ellipsoid in J:
 * (p - c)^T A (p - c) <= rho with c = -A^{-1} b and rho = b^T A^{-1} b - d.
 * Its extent along axis i is sqrt(rho (A^{-1})_ii). Axes outside J are left
 * unbounded.
 */
std::optional<Box> ellipsoid_box(Mat4 const& q)
{
    Box box{{-inf, -inf, -inf}, {inf, inf, inf}};
    std::vector<int> dims;
    for (int i = 0; i < 3; ++i)
    {
        bool active = q[i][0] != 0 || q[i][1] != 0 || q[i][2] != 0;
        if (active)
        {
            dims.push_back(i);
        }
        else if (q[i][3] != 0)
        {
            // Unbounded along a purely linear direction
            return std::nullopt;
        }
    }
    if (dims.empty())
        return std::nullopt;

    std::size_t const n = dims.size();
    std::vector<std::vector<real_type>> a(n, std::vector<real_type>(n));
    std::vector<real_type> b(n);
    for (std::size_t i = 0; i < n; ++i)
    {
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = q[dims[i]][dims[j]];
        b[i] = q[dims[i]][3];
    }
    std::vector<std::vector<real_type>> ainv;
    if (!invert_spd(a, &ainv))
        return std::nullopt;

    std::vector<real_type> center(n, 0);
    real_type rho = -q[3][3];
    for (std::size_t i = 0; i < n; ++i)
    {
        for (std::size_t j = 0; j < n; ++j)
        {
            center[i] -= ainv[i][j] * b[j];
            rho += b[i] * ainv[i][j] * b[j];
        }
    }
    if (!(rho >= 0))
        return std::nullopt;

    // Widen slightly so rounding in the inverse cannot cut off the boundary
    constexpr real_type margin = 1e-9;
    for (std::size_t i = 0; i < n; ++i)
    {
        real_type half = std::sqrt(rho * ainv[i][i]);
        half += margin * (half + std::abs(center[i]));
        int ax = dims[i];
        box.lo[ax] = center[i] - half;
        box.hi[ax] = center[i] + half;
    }
    return box;
}

//---------------------------------------------------------------------------//
//! Intersect the box with the enclosure of a single quadric, if any
void tighten(Mat4 const& q, Box* box)
{
    if (auto e = ellipsoid_box(q))
    {
        for (int ax = 0; ax < 3; ++ax)
        {
            box->lo[ax] = std::max(box->lo[ax], e->lo[ax]);
            box->hi[ax] = std::min(box->hi[ax], e->hi[ax]);
        }
    }
}

//---------------------------------------------------------------------------//
Mat4 weighted_sum(Mat4 const& a, Mat4 const& b, real_type w)
{
    Mat4 sum;
    for (int r = 0; r < 4; ++r)
    {
        for (int c = 0; c < 4; ++c)
            sum[r][c] = a[r][c] + w * b[r][c];
    }
    return sum;
}

//---------------------------------------------------------------------------//
/*!
 * Optimize the pair weight separately for each face of the box.
 *
 * The upper extent (side 0) is minimized and the lower extent (side 1)
 * maximized along each axis. Integer exponents of two are scanned first,
 * then a golden-section search on log2(w) brackets the best scanned
 * exponent by its neighbors. Any weight gives a valid enclosure, so a poor
 * search only costs tightness.
 */
void tighten_pair(Mat4 const& a, Mat4 const& b, Box* box)
{
    for (int ax = 0; ax < 3; ++ax)
    {
        for (int side = 0; side < 2; ++side)
        {
            auto cost = [&](real_type t) {
                auto e = ellipsoid_box(weighted_sum(a, b, std::exp2(t)));
                if (!e || !std::isfinite(e->hi[ax]))
                    return inf;
                return side == 0 ? e->hi[ax] : -e->lo[ax];
            };
            real_type best = inf;
            int best_log_w = 0;
            for (int k = min_log_weight; k <= max_log_weight; ++k)
            {
                real_type f = cost(k);
                if (f < best)
                {
                    best = f;
                    best_log_w = k;
                }
            }
            if (best == inf)
                continue;
            tighten(weighted_sum(a, b, std::exp2(best_log_w)), box);

            constexpr real_type ratio = 0.6180339887498949;
            real_type lo = best_log_w - 1;
            real_type hi = best_log_w + 1;
            real_type x1 = hi - ratio * (hi - lo);
            real_type x2 = lo + ratio * (hi - lo);
            real_type f1 = cost(x1);
            real_type f2 = cost(x2);
            for (int iter = 0; iter < 48; ++iter)
            {
                if (f1 <= f2)
                {
                    hi = x2;
                    x2 = x1;
                    f2 = f1;
                    x1 = hi - ratio * (hi - lo);
                    f1 = cost(x1);
                }
                else
                {
                    lo = x1;
                    x1 = x2;
                    f1 = f2;
                    x2 = lo + ratio * (hi - lo);
                    f2 = cost(x2);
                }
            }
            tighten(weighted_sum(a, b, std::exp2(f1 <= f2 ? x1 : x2)), box);
        }
    }
}

//---------------------------------------------------------------------------//
}  // namespace

//---------------------------------------------------------------------------//
/*!
 * Certify boundedness using single constraints and weighted pairs.
 *
 * Every nonnegative combination of constraints is itself satisfied by all
 * member points, so each positive-definite combination yields an enclosing
 * ellipsoid. The search is sound but incomplete.
 */
std::optional<Box> certified_bbox(ImplicitSolid::VecHalfSpace const& cons)
{
    Box box{{-inf, -inf, -inf}, {inf, inf, inf}};

    for (std::size_t i = 0; i < cons.size(); ++i)
    {
        tighten(cons[i].form.matrix(), &box);
        for (std::size_t j = i + 1; j < cons.size(); ++j)
            tighten_pair(cons[i].form.matrix(), cons[j].form.matrix(), &box);
    }

    for (int ax = 0; ax < 3; ++ax)
    {
        if (!std::isfinite(box.lo[ax]) || !std::isfinite(box.hi[ax]))
            return std::nullopt;
        if (!(box.lo[ax] < box.hi[ax]))
            return std::nullopt;
    }
    return box;
}

//---------------------------------------------------------------------------//
/*!
 * Certified enclosure of a solid, combining any attached box.
 */
std::optional<Box> certified_bbox(ImplicitSolid const& s)
{
    auto result = certified_bbox(s.constraints());
    if (!s.bbox())
        return result;
    if (!result)
        return s.bbox();

    Box b = *result;
    for (int ax = 0; ax < 3; ++ax)
    {
        b.lo[ax] = std::max(b.lo[ax], s.bbox()->lo[ax]);
        b.hi[ax] = std::min(b.hi[ax], s.bbox()->hi[ax]);
    }
    if (!b.valid())
        return s.bbox();
    return b;
}

//---------------------------------------------------------------------------//
}  // namespace qsolid
