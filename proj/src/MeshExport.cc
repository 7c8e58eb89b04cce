//----------------------------------*-C++-*----------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file MeshExport.cc
//---------------------------------------------------------------------------//
#include "qsolid/MeshExport.hh"

#include <charconv>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <set>
#include <stdexcept>

namespace qsolid
{
namespace
{
//---------------------------------------------------------------------------//
Real3 apply(Mat3 const& m, Real3 const& p)
{
    Real3 r;
    for (int i = 0; i < 3; ++i)
    {
        // Each row has one nonzero entry of +-1, so this is exact
        r[i] = m[i][0] * p[0] + m[i][1] * p[1] + m[i][2] * p[2];
        // Collapse negative zero so equal points share a vertex
        r[i] += real_type(0);
    }
    return r;
}

//---------------------------------------------------------------------------//
//! Vertex table that merges identical coordinates
class VertexPool
{
  public:
    explicit VertexPool(WireMesh* mesh) : mesh_(mesh) {}

    WireMesh::Index operator()(Real3 p)
    {
        for (auto& c : p)
            c += real_type(0);
        auto [iter, inserted] = index_.try_emplace(p, mesh_->vertices.size());
        if (inserted)
            mesh_->vertices.push_back(p);
        return iter->second;
    }

  private:
    WireMesh* mesh_;
    std::map<Real3, WireMesh::Index> index_;
};

//---------------------------------------------------------------------------//
//! Segment list that skips repeats in either orientation
class SegmentPool
{
  public:
    SegmentPool(WireMesh* mesh) : mesh_(mesh), vertices_(mesh) {}

    void operator()(Real3 const& a, Real3 const& b)
    {
        auto i = vertices_(a);
        auto j = vertices_(b);
        if (i == j)
            return;
        std::array<WireMesh::Index, 2> key{std::min(i, j), std::max(i, j)};
        if (seen_.insert(key).second)
            mesh_->segments.push_back({i, j});
    }

  private:
    WireMesh* mesh_;
    VertexPool vertices_;
    std::set<std::array<WireMesh::Index, 2>> seen_;
};

//---------------------------------------------------------------------------//
/*!
 * Pull a boundary point inside the solid by a few ulps.
 *
 * Rounding can leave a computed boundary point just outside one of the
 * hyperboloids. The solid is star-shaped about the origin, so shrinking the
 * point until every symmetry image is a member keeps it on the surface to
 * within rounding.
 */
Real3 snap_inside(Real3 p, std::array<Mat3, 24> const& group)
{
    ImplicitSolid const solid = revenge::tri_hyperboloid();
    auto all_inside = [&](Real3 const& q) {
        for (auto const& g : group)
        {
            if (!solid.contains(apply(g, q)))
                return false;
        }
        return true;
    };
    real_type const shrink = 1 - std::numeric_limits<real_type>::epsilon();
    for (int iter = 0; iter < 64 && !all_inside(p); ++iter)
        p = shrink * p;
    return p;
}

//---------------------------------------------------------------------------//
void append_number(std::string* out, real_type v)
{
    char buf[32];
    auto result
        = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    out->append(buf, result.ptr);
}

//---------------------------------------------------------------------------//
void append_number(std::string* out, WireMesh::Index v)
{
    char buf[32];
    auto result = std::to_chars(buf, buf + sizeof(buf), v);
    out->append(buf, result.ptr);
}

//---------------------------------------------------------------------------//
}  // namespace

//---------------------------------------------------------------------------//
void validate(WireMesh const& m)
{
    auto const nv = m.vertices.size();
    for (auto const& s : m.segments)
    {
        if (s[0] >= nv || s[1] >= nv)
            throw std::invalid_argument("segment index out of range");
        if (m.vertices[s[0]] == m.vertices[s[1]])
            throw std::invalid_argument("degenerate segment");
    }
    for (auto const& f : m.faces)
    {
        for (auto i : f)
        {
            if (i >= nv)
                throw std::invalid_argument("face index out of range");
        }
    }
}

//---------------------------------------------------------------------------//
void append(WireMesh* dst, WireMesh const& src)
{
    auto const offset = dst->vertices.size();
    dst->vertices.insert(
        dst->vertices.end(), src.vertices.begin(), src.vertices.end());
    for (auto s : src.segments)
        dst->segments.push_back({s[0] + offset, s[1] + offset});
    for (auto f : src.faces)
        dst->faces.push_back({f[0] + offset, f[1] + offset, f[2] + offset});
}

//---------------------------------------------------------------------------//
std::array<Mat3, 24> symmetry_group()
{
    Mat3 const identity{Real3{1, 0, 0}, Real3{0, 1, 0}, Real3{0, 0, 1}};
    Mat3 const cyclic{Real3{0, 1, 0}, Real3{0, 0, 1}, Real3{1, 0, 0}};

    // The last entry is the square of the cyclic permutation
    std::array<Mat3, 3> const rotations{
        identity,
        cyclic,
        Mat3{Real3{0, 0, 1}, Real3{1, 0, 0}, Real3{0, 1, 0}}};

    std::array<Mat3, 24> result;
    int n = 0;
    for (auto const& rot : rotations)
    {
        for (int signs = 0; signs < 8; ++signs)
        {
            Mat3 m = rot;
            for (int i = 0; i < 3; ++i)
            {
                if (signs & (1 << i))
                {
                    for (auto& entry : m[i])
                        entry = -entry;
                }
            }
            result[n++] = m;
        }
    }
    return result;
}

//---------------------------------------------------------------------------//
WireMesh build_wireframe(int rulings_per_family)
{
    using namespace revenge;
    if (rulings_per_family < 0)
        throw std::invalid_argument("ruling count must be nonnegative");

    WireMesh mesh;
    SegmentPool add_segment(&mesh);

    int const pairs[3][2] = {{0, 1}, {1, 2}, {0, 2}};
    for (auto const& pair : pairs)
    {
        for (auto const& lp : pairwise_intersection(pair[0], pair[1]))
        {
            for (auto const& line : lp.lines)
                add_segment(line.clipped->start, line.clipped->end);
        }
    }
    if (rulings_per_family == 0)
        return mesh;

    // Quarter circle z^2 + x^2 = 1 in the plane y = 0 and rulings of S2
    int const steps = rulings_per_family + 1;
    std::vector<std::array<Real3, 2>> base;
    for (int k = 0; k < steps; ++k)
    {
        real_type a0 = k * (std::numbers::pi / 2) / steps;
        real_type a1 = (k + 1) * (std::numbers::pi / 2) / steps;
        if (k + 1 == steps)
            a1 = std::numbers::pi / 2;
        base.push_back({ruling(RulingFamily::theta, a0).start,
                        ruling(RulingFamily::theta, a1).start});
    }
    for (auto family : {RulingFamily::theta, RulingFamily::phi})
    {
        for (auto const& r : rulings(family, rulings_per_family))
            base.push_back({r.start, r.end});
    }

    auto const group = symmetry_group();
    for (auto& seg : base)
    {
        for (auto& p : seg)
            p = snap_inside(p, group);
    }
    for (auto const& g : group)
    {
        for (auto const& seg : base)
            add_segment(apply(g, seg[0]), apply(g, seg[1]));
    }
    return mesh;
}

//---------------------------------------------------------------------------//
WireMesh triangulate_patch(revenge::Piece piece, int resolution)
{
    using namespace revenge;
    if (resolution < 1)
        throw std::invalid_argument("patch resolution must be positive");

    int const rotations = piece == Piece::s2 ? 0 : piece == Piece::s3 ? 1 : 2;
    auto const n = static_cast<WireMesh::Index>(resolution);

    WireMesh mesh;
    mesh.vertices.reserve((n + 1) * (n + 1));
    for (WireMesh::Index i = 0; i <= n; ++i)
    {
        real_type angle = i * (std::numbers::pi / 2) / resolution;
        if (i == n)
            angle = std::numbers::pi / 2;
        RulingSegment r = ruling(RulingFamily::theta, angle);
        real_type const u = r.length_parameter();
        for (WireMesh::Index j = 0; j <= n; ++j)
        {
            Real3 p = j == 0 ? r.start : j == n ? r.end : r.at(u * j / n);
            for (int k = 0; k < rotations; ++k)
                p = rotate_cyclic(p);
            mesh.vertices.push_back(p);
        }
    }
    auto vid = [n](WireMesh::Index i, WireMesh::Index j) {
        return i * (n + 1) + j;
    };
    for (WireMesh::Index i = 0; i < n; ++i)
    {
        for (WireMesh::Index j = 0; j < n; ++j)
        {
            mesh.faces.push_back({vid(i, j), vid(i + 1, j), vid(i + 1, j + 1)});
            mesh.faces.push_back({vid(i, j), vid(i + 1, j + 1), vid(i, j + 1)});
        }
    }
    return mesh;
}

//---------------------------------------------------------------------------//
real_type surface_area(WireMesh const& m)
{
    real_type total = 0;
    for (auto const& f : m.faces)
    {
        Real3 const& a = m.vertices[f[0]];
        total += norm(cross(m.vertices[f[1]] - a, m.vertices[f[2]] - a)) / 2;
    }
    return total;
}

//---------------------------------------------------------------------------//
std::string write_obj(WireMesh const& m)
{
    std::string out;
    for (auto const& v : m.vertices)
    {
        out += 'v';
        for (auto c : v)
        {
            out += ' ';
            append_number(&out, c);
        }
        out += '\n';
    }
    for (auto const& s : m.segments)
    {
        out += 'l';
        for (auto i : s)
        {
            out += ' ';
            append_number(&out, i + 1);
        }
        out += '\n';
    }
    for (auto const& f : m.faces)
    {
        out += 'f';
        for (auto i : f)
        {
            out += ' ';
            append_number(&out, i + 1);
        }
        out += '\n';
    }
    return out;
}

//---------------------------------------------------------------------------//
}  // namespace qsolid
