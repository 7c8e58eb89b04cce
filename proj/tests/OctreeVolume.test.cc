//----------------------------------*-C++-*----------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file OctreeVolume.test.cc
//---------------------------------------------------------------------------//
#include "qsolid/OctreeVolume.hh"

#include <cmath>
#include <random>
#include <stdexcept>

#include <gtest/gtest.h>

#include "qsolid/Classics.hh"
#include "qsolid/Revenge.hh"

#include "TestUtils.hh"

namespace qsolid
{
namespace test
{
namespace
{
//---------------------------------------------------------------------------//
// |x| <= h, |y| <= h, |z| <= h as six linear constraints
ImplicitSolid axis_box(double h)
{
    ImplicitSolid::VecHalfSpace cons;
    for (int ax = 0; ax < 3; ++ax)
    {
        for (double sign : {1.0, -1.0})
        {
            QuadricCoeffs c;
            (ax == 0 ? c.x : ax == 1 ? c.y : c.z) = sign;
            c.c = -h;
            cons.push_back({QuadricForm::from_coeffs(c)});
        }
    }
    return ImplicitSolid{cons};
}

double const log256 = std::log(256.0);

//---------------------------------------------------------------------------//
}  // namespace

//---------------------------------------------------------------------------//
TEST(FormRangeTest, encloses_samples)
{
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> coef(-3, 3);
    for (int trial = 0; trial < 200; ++trial)
    {
        QuadricCoeffs c{coef(rng),
                        coef(rng),
                        coef(rng),
                        coef(rng),
                        coef(rng),
                        coef(rng),
                        coef(rng),
                        coef(rng),
                        coef(rng),
                        coef(rng)};
        auto q = QuadricForm::from_coeffs(c);
        Real3 lo{coef(rng), coef(rng), coef(rng)};
        Box cell{lo, {lo[0] + 0.7, lo[1] + 0.3, lo[2] + 1.1}};
        Interval range = form_range(q, cell);
        ASSERT_LE(range.lo, range.hi);
        PointSampler sample(cell, trial);
        for (int i = 0; i < 200; ++i)
        {
            double v = q(sample());
            EXPECT_LE(range.lo, v + 1e-12);
            EXPECT_GE(range.hi, v - 1e-12);
        }
    }
}

TEST(ClassifyTest, sound)
{
    auto r = revenge::tri_hyperboloid();
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> pos(-1.3, 1.3);
    std::uniform_real_distribution<double> size(0.01, 0.5);
    int counts[3] = {0, 0, 0};
    for (int trial = 0; trial < 2000; ++trial)
    {
        Real3 lo{pos(rng), pos(rng), pos(rng)};
        double h = size(rng);
        Box cell{lo, {lo[0] + h, lo[1] + h, lo[2] + h}};
        auto cls = classify_cell(r, cell);
        ++counts[static_cast<int>(cls)];
        if (cls == CellClass::boundary)
            continue;
        PointSampler sample(cell, trial);
        for (int i = 0; i < 50; ++i)
        {
            ASSERT_EQ(cls == CellClass::inside, r.contains(sample()));
        }
    }
    EXPECT_GT(counts[0], 0);
    EXPECT_GT(counts[1], 0);
    EXPECT_GT(counts[2], 0);
}

//---------------------------------------------------------------------------//
TEST(OctreeTest, axis_box_aligned)
{
    // Cells of width 1/2 resolve the faces at +-1/2 exactly
    auto r = volume_by_octree(axis_box(0.5), Box::cube(1), 1e-12, 2);
    EXPECT_TRUE(r.converged);
    EXPECT_EQ(1.0, r.value);
    EXPECT_EQ(0.0, r.abs_error_bound);

    // With the faces on the first split planes, depth 1 suffices
    auto one = octree_at_depth(axis_box(0.5), Box{{-0.5, -0.5, -0.5},
                                                  {1.5, 1.5, 1.5}}, 1);
    EXPECT_EQ(1.0, one.result.value);
    EXPECT_EQ(0.0, one.result.abs_error_bound);
}

TEST(OctreeTest, tri_hyperboloid_coarse)
{
    auto r = volume_by_octree_detailed(
        revenge::tri_hyperboloid(), Box::cube(1), 2e-2, 16);
    EXPECT_TRUE(r.result.converged);
    EXPECT_LE(r.result.abs_error_bound, 2e-2);
    EXPECT_LE(std::abs(r.result.value - log256), r.result.abs_error_bound);

    // Bound is half the boundary volume at the cutoff depth
    ASSERT_EQ(static_cast<std::size_t>(r.depth + 1), r.boundary.size());
    double cell = 8 / std::pow(8.0, r.depth);
    EXPECT_DOUBLE_EQ(0.5 * r.boundary[r.depth] * cell, r.result.abs_error_bound);
}

TEST(OctreeTest, tricylinder_coarse)
{
    auto r = volume_by_octree(tricylinder(1), Box::cube(1), 2e-2, 16);
    EXPECT_TRUE(r.converged);
    EXPECT_LE(std::abs(r.value - (16 - 8 * std::sqrt(2.0))), r.abs_error_bound);
}

TEST(OctreeTest, monotone_refinement)
{
    auto s = revenge::tri_hyperboloid();
    double prev = INFINITY;
    for (int depth = 1; depth <= 9; ++depth)
    {
        auto r = volume_by_octree(s, Box::cube(1), 1e-9, depth);
        EXPECT_FALSE(r.converged);
        EXPECT_LE(r.abs_error_bound, prev) << "depth " << depth;
        EXPECT_LE(std::abs(r.value - log256), r.abs_error_bound);
        prev = r.abs_error_bound;
    }
}

TEST(OctreeTest, deterministic_across_threads)
{
    auto s = revenge::tri_hyperboloid();
    auto a = octree_at_depth(s, Box::cube(1), 8, 1);
    auto b = octree_at_depth(s, Box::cube(1), 8, 4);
    EXPECT_EQ(a.result.value, b.result.value);
    EXPECT_EQ(a.inside, b.inside);
    EXPECT_EQ(a.boundary, b.boundary);
}

TEST(OctreeTest, first_octant_and_piece)
{
    auto r1 = revenge::first_octant_component();
    auto v1 = volume_by_octree(r1, *r1.bbox(), 1e-2, 14);
    EXPECT_LE(std::abs(v1.value - std::log(2.0)), v1.abs_error_bound);

    auto s2 = revenge::curved_piece(revenge::Piece::s2);
    auto i = volume_by_octree(s2, *s2.bbox(), 5e-3, 14);
    EXPECT_LE(std::abs(i.value - revenge::curved_piece_closed_form()),
              i.abs_error_bound);
}

TEST(OctreeTest, rejects_bad_input)
{
    auto s = revenge::tri_hyperboloid();
    EXPECT_THROW(volume_by_octree(s, Box::cube(1), 0, 4), std::invalid_argument);
    EXPECT_THROW(volume_by_octree(s, Box::cube(1), 1e-3, 31),
                 std::invalid_argument);
    EXPECT_THROW(volume_by_octree(s, Box{{0, 0, 0}, {0, 1, 1}}, 1e-3, 4),
                 std::invalid_argument);
}

//---------------------------------------------------------------------------//
}  // namespace test
}  // namespace qsolid
