//----------------------------------*-C++-*----------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file Quadrature.cc
//---------------------------------------------------------------------------//
#include "qsolid/Quadrature.hh"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace qsolid
{
namespace
{
//---------------------------------------------------------------------------//
// Kronrod abscissae on [0, 1]; odd indices are the 7-point Gauss nodes
constexpr std::array<real_type, 8> xgk{
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr std::array<real_type, 8> wgk{
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

constexpr std::array<real_type, 4> wg{
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

constexpr real_type rounding_slack
    = 64 * std::numeric_limits<real_type>::epsilon();

//---------------------------------------------------------------------------//
struct Segment
{
    real_type a;
    real_type b;
    real_type value;
    real_type error;

    bool operator<(Segment const& other) const
    {
        return error < other.error;
    }
};

//---------------------------------------------------------------------------//
Segment gauss_kronrod(Integrand1D const& f, real_type a, real_type b)
{
    real_type const center = (a + b) / 2;
    real_type const half = (b - a) / 2;

    real_type fc = f(center);
    real_type kronrod = fc * wgk[7];
    real_type gauss = fc * wg[3];
    for (int j = 0; j < 7; ++j)
    {
        real_type dx = half * xgk[j];
        real_type sum = f(center - dx) + f(center + dx);
        kronrod += wgk[j] * sum;
        if (j % 2 == 1)
            gauss += wg[j / 2] * sum;
    }
    kronrod *= half;
    gauss *= half;
    if (!std::isfinite(kronrod))
        throw std::domain_error("integrand is not finite on the interval");
    return {a, b, kronrod, std::abs(kronrod - gauss)};
}

//---------------------------------------------------------------------------//
}  // namespace

//---------------------------------------------------------------------------//
QuadratureResult integrate_1d(Integrand1D const& f,
                              real_type a,
                              real_type b,
                              real_type tol,
                              std::size_t max_intervals)
{
    if (!(a <= b))
        throw std::invalid_argument("integration limits must satisfy a <= b");
    if (!(tol > 0))
        throw std::invalid_argument("integration tolerance must be positive");

    QuadratureResult result;
    if (a == b)
    {
        result.converged = true;
        return result;
    }

    // Max-heap on segment error
    std::vector<Segment> heap{gauss_kronrod(f, a, b)};
    result.evaluations = 15;
    real_type total_error = heap.front().error;

    // Summed differences plus slack for rounding in the final sum
    auto exact_total = [&heap] {
        real_type err = 0;
        real_type value = 0;
        for (auto const& s : heap)
        {
            err += s.error;
            value += s.value;
        }
        return err + rounding_slack * std::abs(value);
    };

    while (heap.size() < max_intervals)
    {
        if (total_error <= tol)
        {
            // Guard against drift in the running sum
            total_error = exact_total();
            if (total_error <= tol)
                break;
        }
        Segment const worst = heap.front();
        real_type mid = (worst.a + worst.b) / 2;
        if (!(worst.a < mid && mid < worst.b))
        {
            // Interval cannot be split further in floating point
            break;
        }
        std::pop_heap(heap.begin(), heap.end());
        heap.pop_back();
        Segment left = gauss_kronrod(f, worst.a, mid);
        Segment right = gauss_kronrod(f, mid, worst.b);
        result.evaluations += 30;
        total_error += left.error + right.error - worst.error;
        heap.push_back(left);
        std::push_heap(heap.begin(), heap.end());
        heap.push_back(right);
        std::push_heap(heap.begin(), heap.end());
    }

    // Sum in ascending order of left endpoint for a reproducible result
    std::vector<Segment> segments = std::move(heap);
    std::sort(segments.begin(),
              segments.end(),
              [](Segment const& lhs, Segment const& rhs) {
                  return lhs.a < rhs.a;
              });

    // Kahan-compensated sums
    real_type sum = 0, comp = 0, err = 0;
    for (auto const& s : segments)
    {
        real_type y = s.value - comp;
        real_type t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        err += s.error;
    }
    // Account for accumulated rounding in the reported bound
    err += rounding_slack * std::abs(sum);

    result.value = sum;
    result.abs_error_bound = err;
    result.converged = err <= tol;
    return result;
}

//---------------------------------------------------------------------------//
QuadratureResult integrate_2d_iterated(Integrand2D const& f,
                                       real_type a,
                                       real_type b,
                                       Integrand1D const& inner_lo,
                                       Integrand1D const& inner_hi,
                                       real_type tol)
{
    if (!(a <= b))
        throw std::invalid_argument("integration limits must satisfy a <= b");
    if (!(tol > 0))
        throw std::invalid_argument("integration tolerance must be positive");

    QuadratureResult result;
    if (a == b)
    {
        result.converged = true;
        return result;
    }

    real_type const inner_tol = tol / (2 * (b - a));
    real_type max_inner_error = 0;
    bool inner_converged = true;
    std::uint64_t inner_evals = 0;

    auto outer = [&](real_type y) {
        real_type lo = inner_lo(y);
        real_type hi = inner_hi(y);
        if (!(lo <= hi))
        {
            throw std::invalid_argument(
                "inner limits must satisfy lo(y) <= hi(y)");
        }
        auto inner = integrate_1d(
            [&f, y](real_type x) { return f(x, y); }, lo, hi, inner_tol);
        max_inner_error = std::max(max_inner_error, inner.abs_error_bound);
        inner_converged = inner_converged && inner.converged;
        inner_evals += inner.evaluations;
        return inner.value;
    };

    auto outer_result = integrate_1d(outer, a, b, tol / 2);
    result.value = outer_result.value;
    result.abs_error_bound = outer_result.abs_error_bound
                             + (b - a) * max_inner_error;
    result.evaluations = inner_evals;
    result.converged = outer_result.converged && inner_converged
                       && result.abs_error_bound <= tol;
    return result;
}

//---------------------------------------------------------------------------//
}  // namespace qsolid
