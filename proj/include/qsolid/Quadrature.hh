//----------------------------------*-C++-*----------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file qsolid/Quadrature.hh
//---------------------------------------------------------------------------//
#pragma once

#include <cstdint>
#include <functional>

#include "Types.hh"

namespace qsolid
{
//---------------------------------------------------------------------------//
/*!
 * Result of a numerical integration.
 *
 * When \c converged is set, the error bound is at most the requested
 * tolerance.
 */
struct QuadratureResult
{
    real_type value{0};
    real_type abs_error_bound{0};
    std::uint64_t evaluations{0};
    bool converged{false};
};

using Integrand1D = std::function<real_type(real_type)>;
using Integrand2D = std::function<real_type(real_type, real_type)>;

//---------------------------------------------------------------------------//
/*!
 * Globally adaptive Gauss-Kronrod 7/15 quadrature.
 *
 * The subinterval with the largest |K15 - G7| difference is bisected until
 * the summed differences fall below \c tol or the interval budget is spent.
 * The reported bound is the sum of those differences, which overestimates
 * the error of the Kronrod value for smooth integrands.
 */
QuadratureResult integrate_1d(Integrand1D const& f,
                              real_type a,
                              real_type b,
                              real_type tol,
                              std::size_t max_intervals = 4000);

//---------------------------------------------------------------------------//
/*!
 * Iterated integral over a region bounded by curves in the outer variable.
 *
 * Computes the integral over y in [a, b] of the integral over x in
 * [inner_lo(y), inner_hi(y)] of f(x, y). The tolerance is split evenly
 * between the outer rule and the inner rules; an inner error e(y) perturbs
 * the outer sum by at most (b - a) max e(y) because the Kronrod weights are
 * positive.
 */
QuadratureResult integrate_2d_iterated(Integrand2D const& f,
                                       real_type a,
                                       real_type b,
                                       Integrand1D const& inner_lo,
                                       Integrand1D const& inner_hi,
                                       real_type tol);

//---------------------------------------------------------------------------//
}  // namespace qsolid
