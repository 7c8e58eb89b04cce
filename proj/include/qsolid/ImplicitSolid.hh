//----------------------------------*-C++-*----------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file qsolid/ImplicitSolid.hh
//---------------------------------------------------------------------------//
#pragma once

#include <optional>
#include <vector>

#include "AffineMap.hh"
#include "QuadricForm.hh"
#include "Types.hh"

namespace qsolid
{
//---------------------------------------------------------------------------//
/*!
 * Closed quadric half-space {p : q(p) <= 0}.
 */
struct HalfSpace
{
    QuadricForm form;

    //! Boundary points (q == 0) are members
    bool contains(Real3 const& p) const { return form(p) <= 0; }

    friend bool operator==(HalfSpace const&, HalfSpace const&) = default;
};

//---------------------------------------------------------------------------//
/*!
 * Intersection of a nonempty list of quadric half-spaces.
 *
 * An optional bounding box may be attached by the constructor of the solid;
 * it must be certified to enclose every member point.
 */
class ImplicitSolid
{
  public:
    using VecHalfSpace = std::vector<HalfSpace>;

    // Construct from constraints, with an optional enclosing box
    explicit ImplicitSolid(VecHalfSpace constraints,
                           std::optional<Box> bbox = std::nullopt);

    //! Ordered constraints
    VecHalfSpace const& constraints() const { return constraints_; }

    //! Attached enclosure, if any
    std::optional<Box> const& bbox() const { return bbox_; }

    // Whether every constraint holds at the point
    bool contains(Real3 const& p) const;

    // Solid with additional constraints appended
    ImplicitSolid intersected(VecHalfSpace const& extra) const;

  private:
    VecHalfSpace constraints_;
    std::optional<Box> bbox_;
};

//---------------------------------------------------------------------------//
// FREE FUNCTIONS
//---------------------------------------------------------------------------//
// Point membership
inline bool contains(ImplicitSolid const& s, Real3 const& p)
{
    return s.contains(p);
}

// Image of a quadric form under an affine map: q'(A p) == q(p)
QuadricForm transform(QuadricForm const& q, AffineMap const& a);

// Image of a solid under an affine map
ImplicitSolid transform(ImplicitSolid const& s, AffineMap const& a);

// Axis-aligned box enclosing the image of a box
Box transform(Box const& b, AffineMap const& a);

// Box proven to enclose the solid, if one can be found
std::optional<Box> certified_bbox(ImplicitSolid const& s);

// Enclosure proven from the constraints alone
std::optional<Box> certified_bbox(ImplicitSolid::VecHalfSpace const& cons);

//---------------------------------------------------------------------------//
}  // namespace qsolid
