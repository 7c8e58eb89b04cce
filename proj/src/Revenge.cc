//----------------------------------*-C++-*----------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file Revenge.cc
//---------------------------------------------------------------------------//
#include "qsolid/Revenge.hh"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qsolid/MonteCarlo.hh"
#include "qsolid/OctreeVolume.hh"

namespace qsolid
{
namespace revenge
{
namespace
{
//---------------------------------------------------------------------------//
HalfSpace linear(real_type cx, real_type cy, real_type cz, real_type c)
{
    QuadricCoeffs q;
    q.x = cx;
    q.y = cy;
    q.z = cz;
    q.c = c;
    return {QuadricForm::from_coeffs(q)};
}

//---------------------------------------------------------------------------//
Real3 unit(int axis, real_type scale = 1)
{
    Real3 v{0, 0, 0};
    v[axis] = scale;
    return v;
}

//---------------------------------------------------------------------------//
CrossCheck
make_check(std::string name, real_type lhs, real_type rhs, real_type tol)
{
    real_type diff = std::abs(lhs - rhs);
    return {std::move(name), lhs, rhs, diff, tol, diff <= tol};
}

//---------------------------------------------------------------------------//
}  // namespace

//---------------------------------------------------------------------------//
QuadricForm hyperboloid(int index)
{
    if (index < 0 || index > 2)
        throw std::invalid_argument("hyperboloid index must be 0, 1 or 2");
    // The negative-signature coordinate is z, x, y for index 0, 1, 2
    int const negative = (index + 2) % 3;
    std::array<real_type, 3> diag{1, 1, 1};
    diag[negative] = -1;
    QuadricCoeffs c;
    c.xx = diag[0];
    c.yy = diag[1];
    c.zz = diag[2];
    c.c = -1;
    return QuadricForm::from_coeffs(c);
}

//---------------------------------------------------------------------------//
ImplicitSolid tri_hyperboloid()
{
    return ImplicitSolid{{{hyperboloid(0)}, {hyperboloid(1)}, {hyperboloid(2)}}};
}

//---------------------------------------------------------------------------//
ImplicitSolid first_octant_component()
{
    return ImplicitSolid{{{hyperboloid(0)},
                          {hyperboloid(1)},
                          {hyperboloid(2)},
                          linear(-1, 0, 0, 0),
                          linear(0, -1, 0, 0),
                          linear(0, 0, -1, 0)},
                         Box{{0, 0, 0}, {1, 1, 1}}};
}

//---------------------------------------------------------------------------//
AffineMap cyclic_rotation()
{
    return AffineMap{Mat3{Real3{0, 1, 0}, Real3{0, 0, 1}, Real3{1, 0, 0}}};
}

//---------------------------------------------------------------------------//
ImplicitSolid curved_piece(Piece p)
{
    // 0 <= y <= x <= 1, 1 - x + y <= z, z^2 + x^2 - y^2 <= 1
    ImplicitSolid s2{{linear(0, -1, 0, 0),
                      linear(-1, 1, 0, 0),
                      linear(1, 0, 0, -1),
                      linear(-1, 1, -1, 1),
                      {hyperboloid(2)}},
                     Box{{0, 0, 0}, {1, 1, 1}}};
    switch (p)
    {
        case Piece::s2:
            return s2;
        case Piece::s3:
            return transform(s2, cyclic_rotation());
        case Piece::s1:
            return transform(transform(s2, cyclic_rotation()),
                             cyclic_rotation());
    }
    throw std::invalid_argument("unknown curved piece");
}

//---------------------------------------------------------------------------//
/*!
 * Lines on two hyperboloid surfaces.
 *
 * For the pair (i, j) with remaining index k, the fixed coordinate is the
 * negative-signature coordinate of hyperboloid k, and (a, b) are the other
 * two in cyclic order.
 */
std::array<LinePair, 2> pairwise_intersection(int i, int j)
{
    if (i < 0 || i > 2 || j < 0 || j > 2)
        throw std::invalid_argument("hyperboloid index must be 0, 1 or 2");
    if (i == j)
        throw std::invalid_argument("pairwise intersection needs two "
                                    "distinct hyperboloids");

    int const k = 3 - i - j;
    int const fixed = (k + 2) % 3;
    int const a = k;
    int const b = (k + 1) % 3;

    std::array<LinePair, 2> result;
    for (int side = 0; side < 2; ++side)
    {
        real_type const sign = side == 0 ? 1 : -1;
        Real3 const center = unit(fixed, sign);
        for (int which = 0; which < 2; ++which)
        {
            // which == 0: a = b; which == 1: a = -b
            real_type const bsign = which == 0 ? 1 : -1;
            Real3 dir = unit(a) + unit(b, bsign);
            Line& line = result[side].lines[which];
            line.point = center;
            line.direction = dir;
            line.clipped = Segment{center - dir, center + dir};
        }
    }
    return result;
}

//---------------------------------------------------------------------------//
real_type tetra_volume(Real3 const& p0,
                       Real3 const& p1,
                       Real3 const& p2,
                       Real3 const& p3)
{
    return std::abs(dot(p1 - p0, cross(p2 - p0, p3 - p0))) / 6;
}

//---------------------------------------------------------------------------//
real_type curved_piece_closed_form()
{
    return std::numbers::ln2 / 3 - real_type(1) / 6;
}

real_type roof_integral_closed_form()
{
    return std::numbers::ln2 / 3 + real_type(1) / 6;
}

real_type face_integral_closed_form()
{
    return real_type(1) / 3;
}

//---------------------------------------------------------------------------//
QuadratureResult curved_piece_quadrature(real_type tol)
{
    return integrate_2d_iterated(
        [](real_type x, real_type y) {
            return std::sqrt(std::max<real_type>(0, 1 + y * y - x * x))
                   - (1 - x + y);
        },
        0,
        1,
        [](real_type y) { return y; },
        [](real_type) { return real_type(1); },
        tol);
}

QuadratureResult roof_integral_quadrature(real_type tol)
{
    return integrate_2d_iterated(
        [](real_type x, real_type y) {
            return std::sqrt(std::max<real_type>(0, 1 + y * y - x * x));
        },
        0,
        1,
        [](real_type y) { return y; },
        [](real_type) { return real_type(1); },
        tol);
}

QuadratureResult face_integral_quadrature(real_type tol)
{
    return integrate_2d_iterated(
        [](real_type x, real_type y) { return 1 - x + y; },
        0,
        1,
        [](real_type y) { return y; },
        [](real_type) { return real_type(1); },
        tol);
}

//---------------------------------------------------------------------------//
real_type li_integrand(real_type z)
{
    constexpr real_type half_pi = std::numbers::pi / 2;
    return ((z * z + 1) * (half_pi - 2 * std::atan(z)) + z * z - 1) / 2;
}

QuadratureResult li_integral(real_type tol)
{
    return integrate_1d(li_integrand, 0, 1, tol);
}

//---------------------------------------------------------------------------//
Real3 RulingSegment::at(real_type s) const
{
    // Exact at the right angle so the arc endpoint lands on an axis
    bool const right = angle == std::numbers::pi / 2;
    real_type const sn = right ? 1 : std::sin(angle);
    real_type const cs = right ? 0 : std::cos(angle);
    if (family == RulingFamily::theta)
        return {sn + s * cs, s, cs - s * sn};
    return {cs - s * sn, s, sn + s * cs};
}

real_type RulingSegment::length_parameter() const
{
    // sec - tan, written to stay finite at pi/2
    if (angle == std::numbers::pi / 2)
        return 0;
    return std::cos(angle) / (1 + std::sin(angle));
}

//---------------------------------------------------------------------------//
RulingSegment ruling(RulingFamily family, real_type angle)
{
    if (!(angle >= 0 && angle <= std::numbers::pi / 2))
        throw std::invalid_argument("ruling angle must be in [0, pi/2]");
    RulingSegment seg{family, angle, {}, {}};
    real_type const u = seg.length_parameter();
    seg.start = seg.at(0);
    if (family == RulingFamily::theta)
        seg.end = {1, u, u};
    else
        seg.end = {u, u, 1};
    return seg;
}

//---------------------------------------------------------------------------//
std::vector<RulingSegment> rulings(RulingFamily family, int count)
{
    if (count < 1)
        throw std::invalid_argument("ruling count must be positive");
    std::vector<RulingSegment> result;
    result.reserve(count);
    for (int k = 1; k <= count; ++k)
    {
        real_type angle = k * (std::numbers::pi / 2) / (count + 1);
        result.push_back(ruling(family, angle));
    }
    return result;
}

//---------------------------------------------------------------------------//
DecompositionReport full_report(ReportOptions const& opts)
{
    if (!(opts.tol > 0) || !(opts.li_tol > 0))
        throw std::invalid_argument("report tolerances must be positive");

    DecompositionReport r;
    Real3 const origin{0, 0, 0};
    Real3 const apex{1, 1, 1};
    r.vol_pi1 = tetra_volume(origin, unit(0), unit(1), unit(2));
    r.vol_pi2 = tetra_volume(apex, unit(0), unit(1), unit(2));
    r.curved = curved_piece_closed_form();
    r.roof = roof_integral_closed_form();
    r.face = face_integral_closed_form();
    r.v1 = 3 * r.curved + r.vol_pi1 + r.vol_pi2;
    r.total = 8 * r.v1;

    r.curved_quad = curved_piece_quadrature(opts.tol);
    r.roof_quad = roof_integral_quadrature(opts.tol);
    r.face_quad = face_integral_quadrature(opts.tol);
    r.li = li_integral(opts.li_tol);

    real_type const ln2 = std::numbers::ln2;
    real_type const ln256 = std::log(real_type(256));
    auto& checks = r.cross_checks;
    checks.push_back(make_check("total_equals_log256", r.total, ln256, 1e-12));
    checks.push_back(make_check("v1_equals_log2", r.v1, ln2, 1e-12));
    checks.push_back(make_check(
        "tetrahedra_sum_half", r.vol_pi1 + r.vol_pi2, 0.5, 1e-15));
    checks.push_back(make_check("curved_equals_roof_minus_face",
                                r.curved,
                                r.roof - r.face,
                                1e-15));
    checks.push_back(make_check("curved_quadrature_vs_closed",
                                r.curved_quad.value,
                                r.curved,
                                opts.tol));
    checks.push_back(make_check(
        "roof_quadrature_vs_closed", r.roof_quad.value, r.roof, opts.tol));
    checks.push_back(make_check(
        "face_quadrature_vs_closed", r.face_quad.value, r.face, opts.tol));
    checks.push_back(make_check("li_equals_I", r.li.value, r.curved, 1e-9));

    bool converged = r.curved_quad.converged && r.roof_quad.converged
                     && r.face_quad.converged && r.li.converged;

    ImplicitSolid const solid = tri_hyperboloid();
    Box const cube = Box::cube(1);
    if (opts.mc_samples > 0)
    {
        auto mc = estimate_volume(
            solid, cube, opts.mc_samples, opts.mc_seed, opts.threads);
        checks.push_back(
            make_check("mc_4sigma", mc.value, r.total, 4 * mc.std_error));
    }
    if (opts.octree_tol > 0)
    {
        auto oct = volume_by_octree(
            solid, cube, opts.octree_tol, opts.octree_max_depth, opts.threads);
        checks.push_back(make_check(
            "octree_vs_closed", oct.value, r.total, oct.abs_error_bound));
        converged = converged && oct.converged;
    }
    r.converged = converged;
    return r;
}

//---------------------------------------------------------------------------//
DecompositionReport full_report(real_type tol)
{
    ReportOptions opts;
    opts.tol = tol;
    return full_report(opts);
}

//---------------------------------------------------------------------------//
}  // namespace revenge
}  // namespace qsolid
