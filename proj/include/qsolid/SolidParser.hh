//----------------------------------*-C++-*----------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file qsolid/SolidParser.hh
//---------------------------------------------------------------------------//
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "ImplicitSolid.hh"

namespace qsolid
{
//---------------------------------------------------------------------------//
/*!
 * Error raised while reading solid source text.
 *
 * Line and column are 1-based. The constraint index is the 1-based position
 * of the offending constraint, or zero when the input has no constraint.
 */
class ParseError : public std::runtime_error
{
  public:
    enum class Kind
    {
        lexical,
        syntax,
        degree,
        empty
    };

    ParseError(Kind kind,
               std::string const& what,
               int line,
               int column,
               int constraint);

    Kind kind() const { return kind_; }
    int line() const { return line_; }
    int column() const { return column_; }
    int constraint() const { return constraint_; }

  private:
    Kind kind_;
    int line_;
    int column_;
    int constraint_;
};

//---------------------------------------------------------------------------//
/*!
 * Parse quadratic inequalities in x, y, z.
 *
 * Constraints are separated by semicolons or newlines and have the form
 * <tt>poly <= poly</tt> or <tt>poly >= poly</tt>; \c # starts a comment.
 * A term is a product of decimal literals and the variables x, y, z
 * (optionally raised to an integer power) with total degree at most two.
 * A literal may directly precede a variable (\c 2x); two variables must be
 * joined by \c *.
 *
 * \code
   auto r = parse_solid("x^2 + y^2 - z^2 <= 1; y^2 + z^2 - x^2 <= 1");
 * \endcode
 */
ImplicitSolid parse_solid(std::string_view text);

// Canonical text: one "... <= 0" line per constraint
std::string format_solid(ImplicitSolid const& s);

// Canonical polynomial text for a single form
std::string format_polynomial(QuadricForm const& q);

//---------------------------------------------------------------------------//
}  // namespace qsolid
