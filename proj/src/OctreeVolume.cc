//----------------------------------*-C++-*----------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file OctreeVolume.cc
//---------------------------------------------------------------------------//
#include "qsolid/OctreeVolume.hh"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qsolid/Parallel.hh"

namespace qsolid
{
namespace
{
//---------------------------------------------------------------------------//
using CellIndex = std::array<std::uint32_t, 3>;
using Mask = std::uint64_t;

// Tasks are generated from this level (or the final depth if shallower)
constexpr int task_level = 3;

//---------------------------------------------------------------------------//
/*!
 * Quadric split into q(p) = p^T A p + 2 b.p + d.
 */
struct Form
{
    real_type a[3][3];
    real_type b[3];
    real_type d;
    bool zero;
};

Form make_form(QuadricForm const& q)
{
    Mat4 const& m = q.matrix();
    Form f;
    for (int i = 0; i < 3; ++i)
    {
        for (int j = 0; j < 3; ++j)
            f.a[i][j] = m[i][j];
        f.b[i] = m[i][3];
    }
    f.d = m[3][3];
    f.zero = q.is_zero();
    return f;
}

//---------------------------------------------------------------------------//
/*!
 * Range of the pure quadratic part (r u)^T A (r u) over u in [-1, 1]^3.
 */
Interval quadratic_range(Form const& f, Real3 const& half)
{
    Interval result{0, 0};
    for (int i = 0; i < 3; ++i)
    {
        real_type diag = f.a[i][i] * half[i] * half[i];
        result.lo += std::min<real_type>(0, diag);
        result.hi += std::max<real_type>(0, diag);
        for (int j = 0; j < 3; ++j)
        {
            if (j == i)
                continue;
            real_type off = std::abs(f.a[i][j]) * half[i] * half[j];
            result.lo -= off;
            result.hi += off;
        }
    }
    return result;
}

//---------------------------------------------------------------------------//
/*!
 * Enclosure of q over the box centered at c with half-widths r.
 *
 * In centered coordinates q(c + r u) = q(c) + g.(r u) + (r u)^T A (r u) with
 * g = 2 (A c + b); the linear term is bounded by sum |g_i| r_i.
 */
inline Interval
form_range_centered(Form const& f, Real3 const& c, Real3 const& r, Interval quad)
{
    real_type acb[3];
    for (int i = 0; i < 3; ++i)
    {
        acb[i] = f.a[i][0] * c[0] + f.a[i][1] * c[1] + f.a[i][2] * c[2]
                 + f.b[i];
    }
    real_type value = c[0] * (acb[0] + f.b[0]) + c[1] * (acb[1] + f.b[1])
                      + c[2] * (acb[2] + f.b[2]) + f.d;
    real_type lin = 2
                    * (std::abs(acb[0]) * r[0] + std::abs(acb[1]) * r[1]
                       + std::abs(acb[2]) * r[2]);
    return {value - lin + quad.lo, value + lin + quad.hi};
}

//---------------------------------------------------------------------------//
/*!
 * Exact range of a x^2 + 2 b x over [x0, x1].
 */
Interval axis_range(real_type a, real_type b, real_type x0, real_type x1)
{
    auto f = [a, b](real_type x) { return (a * x + 2 * b) * x; };
    real_type f0 = f(x0);
    real_type f1 = f(x1);
    Interval result{std::min(f0, f1), std::max(f0, f1)};
    if (a != 0)
    {
        real_type vertex = -b / a;
        if (vertex > x0 && vertex < x1)
        {
            real_type fv = f(vertex);
            result.lo = std::min(result.lo, fv);
            result.hi = std::max(result.hi, fv);
        }
    }
    return result;
}

//---------------------------------------------------------------------------//
/*!
 * Classifier for cells of one octree over a fixed box.
 *
 * The mask holds constraints not yet proven to hold on an ancestor cell;
 * constraints satisfied over a cell are satisfied over its descendants.
 *
 * Forms without cross terms are separable, so their exact range over a cell
 * is the sum of per-axis ranges. Those are tabulated per level and cell
 * index for levels up to \c max_table_level. Other forms use the centered
 * interval bound.
 */
class Classifier
{
  public:
    static constexpr int max_table_level = 18;

    Classifier(ImplicitSolid const& s, Box const& box, int depth)
        : lo_{box.lo}
    {
        auto const& cons = s.constraints();
        if (cons.size() > 64)
            throw std::invalid_argument("octree supports at most 64 "
                                        "constraints");
        for (auto const& h : cons)
        {
            forms_.push_back(make_form(h.form));
            Form const& f = forms_.back();
            separable_.push_back(f.a[0][1] == 0 && f.a[0][2] == 0
                                 && f.a[1][2] == 0);
            all_separable_ = all_separable_ && separable_.back();
        }

        Real3 half;
        for (int ax = 0; ax < 3; ++ax)
            half[ax] = (box.hi[ax] - box.lo[ax]) / 2;
        for (int level = 0; level <= depth; ++level)
        {
            Level lev;
            lev.half = half;
            for (auto const& f : forms_)
                lev.quad.push_back(quadratic_range(f, half));
            if (level <= max_table_level)
                this->build_tables(box, level, &lev);
            levels_.push_back(std::move(lev));
            for (auto& h : half)
                h /= 2;
        }
    }

    Mask full_mask() const
    {
        return forms_.size() == 64 ? ~Mask{0}
                                   : ((Mask{1} << forms_.size()) - 1);
    }

    CellClass operator()(int level, CellIndex const& idx, Mask* mask) const
    {
        Level const& lev = levels_[level];
        bool const tabulated = level <= max_table_level;
        Real3 c;
        for (int ax = 0; ax < 3; ++ax)
        {
            c[ax] = lo_[ax]
                    + static_cast<real_type>(2 * idx[ax] + 1) * lev.half[ax];
        }
        Mask remaining = *mask;
        for (Mask m = *mask; m != 0; m &= m - 1)
        {
            int k = __builtin_ctzll(m);
            Form const& f = forms_[k];
            Interval range;
            if (tabulated && separable_[k])
            {
                auto const& t = lev.tables[k];
                Interval const& rx = t[0][idx[0]];
                Interval const& ry = t[1][idx[1]];
                Interval const& rz = t[2][idx[2]];
                range.lo = rx.lo + ry.lo + rz.lo + f.d;
                range.hi = rx.hi + ry.hi + rz.hi + f.d;
            }
            else
            {
                range = form_range_centered(f, c, lev.half, lev.quad[k]);
            }
            if (range.hi <= 0)
            {
                remaining &= ~(Mask{1} << k);
            }
            else if (range.lo >= 0 && !f.zero)
            {
                // Members can only lie on the measure-zero set {q = 0}
                return CellClass::outside;
            }
        }
        *mask = remaining;
        return remaining == 0 ? CellClass::inside : CellClass::boundary;
    }

    /*!
     * Classify all eight children of a cell at the given level.
     *
     * Child octant bits are (x, y, z) = (oct & 1, oct >> 1 & 1, oct >> 2).
     */
    void children(int level,
                  CellIndex const& idx,
                  Mask mask,
                  std::array<CellClass, 8>* cls,
                  std::array<Mask, 8>* masks) const
    {
        int const child_level = level + 1;
        if (!(all_separable_ && child_level <= max_table_level))
        {
            for (std::uint32_t oct = 0; oct < 8; ++oct)
            {
                CellIndex child{2 * idx[0] + (oct & 1u),
                                2 * idx[1] + ((oct >> 1) & 1u),
                                2 * idx[2] + ((oct >> 2) & 1u)};
                (*masks)[oct] = mask;
                (*cls)[oct] = (*this)(child_level, child, &(*masks)[oct]);
            }
            return;
        }

        Level const& lev = levels_[child_level];
        std::array<bool, 8> outside{};
        masks->fill(mask);
        for (Mask m = mask; m != 0; m &= m - 1)
        {
            int k = __builtin_ctzll(m);
            Mask const bit = Mask{1} << k;
            Form const& f = forms_[k];
            auto const& t = lev.tables[k];
            Interval const* x = t[0].data() + 2 * idx[0];
            Interval const* y = t[1].data() + 2 * idx[1];
            Interval const* z = t[2].data() + 2 * idx[2];
            Interval xy[4];
            for (int j = 0; j < 4; ++j)
            {
                xy[j].lo = x[j & 1].lo + y[j >> 1].lo;
                xy[j].hi = x[j & 1].hi + y[j >> 1].hi;
            }
            for (int oct = 0; oct < 8; ++oct)
            {
                real_type lo = xy[oct & 3].lo + z[oct >> 2].lo + f.d;
                real_type hi = xy[oct & 3].hi + z[oct >> 2].hi + f.d;
                if (hi <= 0)
                    (*masks)[oct] &= ~bit;
                else if (lo >= 0 && !f.zero)
                    outside[oct] = true;
            }
        }
        for (int oct = 0; oct < 8; ++oct)
        {
            (*cls)[oct] = outside[oct]       ? CellClass::outside
                          : (*masks)[oct] == 0 ? CellClass::inside
                                               : CellClass::boundary;
        }
    }

  private:
    using AxisTable = std::vector<Interval>;

    struct Level
    {
        Real3 half;
        std::vector<Interval> quad;
        std::vector<std::array<AxisTable, 3>> tables;
    };

    Real3 lo_;
    std::vector<Form> forms_;
    std::vector<bool> separable_;
    bool all_separable_{true};
    std::vector<Level> levels_;

    void build_tables(Box const& box, int level, Level* lev) const
    {
        std::size_t const n = std::size_t{1} << level;
        lev->tables.resize(forms_.size());
        for (std::size_t k = 0; k < forms_.size(); ++k)
        {
            if (!separable_[k])
                continue;
            Form const& f = forms_[k];
            for (int ax = 0; ax < 3; ++ax)
            {
                AxisTable& table = lev->tables[k][ax];
                table.resize(n);
                real_type const width = (box.hi[ax] - box.lo[ax])
                                        / static_cast<real_type>(n);
                for (std::size_t j = 0; j < n; ++j)
                {
                    real_type x0 = box.lo[ax]
                                   + static_cast<real_type>(j) * width;
                    real_type x1 = (j + 1 == n)
                                       ? box.hi[ax]
                                       : box.lo[ax]
                                             + static_cast<real_type>(j + 1)
                                                   * width;
                    table[j] = axis_range(f.a[ax][ax], f.b[ax], x0, x1);
                }
            }
        }
    }
};

//---------------------------------------------------------------------------//
struct Counts
{
    std::vector<std::uint64_t> inside;
    std::vector<std::uint64_t> boundary;
    std::uint64_t classified{0};

    explicit Counts(int depth) : inside(depth + 1, 0), boundary(depth + 1, 0)
    {
    }

    void add(Counts const& other)
    {
        for (std::size_t i = 0; i < inside.size(); ++i)
        {
            inside[i] += other.inside[i];
            boundary[i] += other.boundary[i];
        }
        classified += other.classified;
    }
};

//---------------------------------------------------------------------------//
struct Frontier
{
    CellIndex idx;
    Mask mask;
};

//---------------------------------------------------------------------------//
/*!
 * Classify the children of a boundary cell, recursing into boundary ones.
 */
void descend(Classifier const& classify,
             int level,
             CellIndex const& idx,
             Mask mask,
             int depth,
             Counts* counts)
{
    int const child_level = level + 1;
    std::array<CellClass, 8> cls;
    std::array<Mask, 8> masks;
    classify.children(level, idx, mask, &cls, &masks);
    counts->classified += 8;
    for (std::uint32_t oct = 0; oct < 8; ++oct)
    {
        switch (cls[oct])
        {
            case CellClass::inside:
                ++counts->inside[child_level];
                break;
            case CellClass::outside:
                break;
            case CellClass::boundary:
                ++counts->boundary[child_level];
                if (child_level < depth)
                {
                    CellIndex child{2 * idx[0] + (oct & 1u),
                                    2 * idx[1] + ((oct >> 1) & 1u),
                                    2 * idx[2] + ((oct >> 2) & 1u)};
                    descend(
                        classify, child_level, child, masks[oct], depth, counts);
                }
                break;
        }
    }
}

//---------------------------------------------------------------------------//
/*!
 * Estimate and bound from the counts, cut off at the given level.
 */
QuadratureResult
summarize(Counts const& counts, real_type box_volume, int cutoff)
{
    QuadratureResult result;
    real_type inside_volume = 0;
    real_type cell_volume = box_volume;
    for (int level = 0; level <= cutoff; ++level)
    {
        inside_volume += static_cast<real_type>(counts.inside[level])
                         * cell_volume;
        if (level < cutoff)
            cell_volume /= 8;
    }
    real_type half_shell = static_cast<real_type>(counts.boundary[cutoff])
                           * cell_volume / 2;
    result.value = inside_volume + half_shell;
    result.abs_error_bound = half_shell;
    result.evaluations = counts.classified;
    return result;
}

//---------------------------------------------------------------------------//
}  // namespace

//---------------------------------------------------------------------------//
Interval form_range(QuadricForm const& q, Box const& cell)
{
    Form f = make_form(q);
    Real3 c, r;
    for (int ax = 0; ax < 3; ++ax)
    {
        c[ax] = (cell.lo[ax] + cell.hi[ax]) / 2;
        r[ax] = (cell.hi[ax] - cell.lo[ax]) / 2;
    }
    return form_range_centered(f, c, r, quadratic_range(f, r));
}

//---------------------------------------------------------------------------//
CellClass classify_cell(ImplicitSolid const& s, Box const& cell)
{
    Classifier classify{s, cell, 0};
    Mask mask = classify.full_mask();
    return classify(0, CellIndex{0, 0, 0}, &mask);
}

//---------------------------------------------------------------------------//
OctreeResult octree_at_depth(ImplicitSolid const& s,
                             Box const& box,
                             int depth,
                             unsigned int threads)
{
    if (!box.valid())
        throw std::invalid_argument("octree box must have lo < hi");
    if (depth < 0 || depth > 30)
        throw std::invalid_argument("octree depth must be in [0, 30]");

    Classifier const classify{s, box, depth};
    Counts total{depth};

    // Breadth-first over the top levels to build independent tasks
    std::vector<Frontier> frontier;
    {
        Mask mask = classify.full_mask();
        ++total.classified;
        switch (classify(0, CellIndex{0, 0, 0}, &mask))
        {
            case CellClass::inside:
                ++total.inside[0];
                break;
            case CellClass::outside:
                break;
            case CellClass::boundary:
                ++total.boundary[0];
                frontier.push_back({CellIndex{0, 0, 0}, mask});
                break;
        }
    }
    int const top = std::min(depth, task_level);
    for (int level = 0; level < top; ++level)
    {
        std::vector<Frontier> next;
        for (auto const& cell : frontier)
        {
            for (std::uint32_t oct = 0; oct < 8; ++oct)
            {
                CellIndex child{2 * cell.idx[0] + (oct & 1u),
                                2 * cell.idx[1] + ((oct >> 1) & 1u),
                                2 * cell.idx[2] + ((oct >> 2) & 1u)};
                Mask child_mask = cell.mask;
                ++total.classified;
                switch (classify(level + 1, child, &child_mask))
                {
                    case CellClass::inside:
                        ++total.inside[level + 1];
                        break;
                    case CellClass::outside:
                        break;
                    case CellClass::boundary:
                        ++total.boundary[level + 1];
                        next.push_back({child, child_mask});
                        break;
                }
            }
        }
        frontier = std::move(next);
    }

    if (top < depth)
    {
        std::vector<Counts> partial(frontier.size(), Counts{depth});
        parallel_for(
            frontier.size(), resolve_threads(threads), [&](std::size_t i) {
                descend(classify,
                        top,
                        frontier[i].idx,
                        frontier[i].mask,
                        depth,
                        &partial[i]);
            });
        for (auto const& p : partial)
            total.add(p);
    }

    OctreeResult out;
    out.result = summarize(total, box.volume(), depth);
    out.depth = depth;
    out.inside = std::move(total.inside);
    out.boundary = std::move(total.boundary);
    return out;
}

//---------------------------------------------------------------------------//
/*!
 * Iterative deepening.
 *
 * Each pass traverses to a fixed depth. If the bound misses the tolerance,
 * the next depth is predicted from the observed per-level shrink ratio of
 * the boundary volume. The ratio is capped at one half, its asymptotic value
 * for a smooth boundary, because coarse levels overstate it and a
 * prediction that overshoots costs a factor of four per extra level.
 */
OctreeResult volume_by_octree_detailed(ImplicitSolid const& s,
                                       Box const& box,
                                       real_type tol,
                                       int max_depth,
                                       unsigned int threads)
{
    if (!(tol > 0))
        throw std::invalid_argument("octree tolerance must be positive");
    if (max_depth < 0 || max_depth > 30)
        throw std::invalid_argument("octree max depth must be in [0, 30]");

    std::uint64_t evaluations = 0;
    int depth = std::min(max_depth, 4);
    while (true)
    {
        OctreeResult pass = octree_at_depth(s, box, depth, threads);
        evaluations += pass.result.evaluations;
        real_type bound = pass.result.abs_error_bound;
        if (bound <= tol || depth == max_depth)
        {
            pass.result.evaluations = evaluations;
            pass.result.converged = bound <= tol;
            return pass;
        }

        real_type ratio = 0.5;
        if (depth > 0)
        {
            real_type cell = box.volume() / std::pow(8.0, depth - 1);
            real_type prev_bound
                = static_cast<real_type>(pass.boundary[depth - 1]) * cell / 2;
            if (prev_bound > 0)
                ratio = std::clamp(bound / prev_bound, 0.3, 0.5);
        }
        int steps = static_cast<int>(
            std::ceil(std::log(tol / bound) / std::log(ratio)));
        depth = std::min(max_depth, depth + std::max(1, steps));
    }
}

//---------------------------------------------------------------------------//
QuadratureResult volume_by_octree(ImplicitSolid const& s,
                                  Box const& box,
                                  real_type tol,
                                  int max_depth,
                                  unsigned int threads)
{
    return volume_by_octree_detailed(s, box, tol, max_depth, threads).result;
}

//---------------------------------------------------------------------------//
}  // namespace qsolid
