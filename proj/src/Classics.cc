//----------------------------------*-C++-*----------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file Classics.cc
//---------------------------------------------------------------------------//
#include "qsolid/Classics.hh"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "qsolid/MonteCarlo.hh"

namespace qsolid
{
namespace
{
//---------------------------------------------------------------------------//
void validate_radius(real_type radius)
{
    if (!(radius > 0) || !std::isfinite(radius))
        throw std::invalid_argument("cylinder radius must be positive");
}

//---------------------------------------------------------------------------//
void validate_angle(real_type angle)
{
    if (!(angle > 0 && angle <= std::numbers::pi / 2))
        throw std::invalid_argument(
            "bicylinder angle must be in (0, pi/2]; parallel cylinders "
            "have an unbounded intersection");
}

//---------------------------------------------------------------------------//
// Cosine and sine that are exact at a right angle
std::pair<real_type, real_type> cos_sin(real_type angle)
{
    if (angle == std::numbers::pi / 2)
        return {0, 1};
    return {std::cos(angle), std::sin(angle)};
}

//---------------------------------------------------------------------------//
}  // namespace

//---------------------------------------------------------------------------//
void validate(CylinderSpec const& c)
{
    validate_radius(c.radius);
    if (!(std::abs(norm(c.axis) - 1) <= 1e-12))
        throw std::invalid_argument("cylinder axis must have unit norm");
}

//---------------------------------------------------------------------------//
QuadricForm cylinder_form(CylinderSpec const& c)
{
    validate(c);
    // |p|^2 - (a.p)^2 - r^2
    auto const& a = c.axis;
    QuadricCoeffs q;
    q.xx = 1 - a[0] * a[0];
    q.yy = 1 - a[1] * a[1];
    q.zz = 1 - a[2] * a[2];
    q.xy = -2 * a[0] * a[1];
    q.xz = -2 * a[0] * a[2];
    q.yz = -2 * a[1] * a[2];
    q.c = -c.radius * c.radius;
    return QuadricForm::from_coeffs(q);
}

//---------------------------------------------------------------------------//
ImplicitSolid bicylinder(real_type radius, real_type angle)
{
    validate_radius(radius);
    validate_angle(angle);
    auto [c, s] = cos_sin(angle);
    QuadricForm along_x = cylinder_form({{1, 0, 0}, radius});
    QuadricForm skewed = cylinder_form({{c, s, 0}, radius});
    real_type const xmax = radius * (1 + std::abs(c)) / s;
    Box box{{-xmax, -radius, -radius}, {xmax, radius, radius}};
    return ImplicitSolid{{{along_x}, {skewed}}, box};
}

//---------------------------------------------------------------------------//
ImplicitSolid tricylinder(real_type radius)
{
    validate_radius(radius);
    return ImplicitSolid{{{cylinder_form({{1, 0, 0}, radius})},
                          {cylinder_form({{0, 1, 0}, radius})},
                          {cylinder_form({{0, 0, 1}, radius})}},
                         Box::cube(radius)};
}

//---------------------------------------------------------------------------//
AffineMap bicylinder_shear(real_type angle)
{
    validate_angle(angle);
    auto [c, s] = cos_sin(angle);
    return AffineMap{
        Mat3{Real3{1 / s, c / s, 0}, Real3{0, 1, 0}, Real3{0, 0, 1}}};
}

//---------------------------------------------------------------------------//
Box bicylinder_cube(real_type radius)
{
    validate_radius(radius);
    return Box::cube(radius);
}

//---------------------------------------------------------------------------//
AffineRatio affine_ratio_check(ImplicitSolid const& s,
                               Box const& box,
                               AffineMap const& a,
                               std::uint64_t n,
                               std::uint64_t seed,
                               unsigned int threads)
{
    VolumeEstimate before = estimate_volume(s, box, n, seed, threads);
    VolumeEstimate after
        = estimate_volume_mapped(transform(s, a), box, a, n, seed, threads);

    auto ratio = [](VolumeEstimate const& e) {
        return static_cast<real_type>(e.hits) / static_cast<real_type>(e.n);
    };
    auto ratio_stderr = [](real_type p, std::uint64_t count) {
        return std::sqrt(p * (1 - p) / static_cast<real_type>(count));
    };

    AffineRatio result;
    result.before = ratio(before);
    result.after = ratio(after);
    result.before_stderr = ratio_stderr(result.before, n);
    result.after_stderr = ratio_stderr(result.after, n);
    return result;
}

//---------------------------------------------------------------------------//
}  // namespace qsolid
