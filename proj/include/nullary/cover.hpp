#pragma once

// The boundary of the unit square, its universal cover zeta: R -> B, lifts
// of maps into B, degree, and the strict generalization step.

#include <utility>

#include "nullary/squeeze.hpp"
#include "nullary/zmap.hpp"

namespace nullary {

/// The four edges of the boundary of [0,1]^2 in the order bottom, right, top, left.
Polyhedron boundary_square();

/// Counter-clockwise unit-speed wrap of the real line around the boundary, zeta(0) = (0,0).
RationalPoint zeta(const Rational& x);

/// zeta restricted to [a, b], triangulated at the integers. Throws BadInterval.
ZMap zeta_segment(const Integer& a, const Integer& b);

struct Lift {
    ZMap map;                   // real-valued, same triangulation as the input
    RationalPoint base_vertex;  // smallest domain vertex
    Rational base_value;        // in [0, 4)
};

/// zeta o lift(eta).map == eta. Throws NotIntoBoundary.
Lift lift(const ZMap& eta);

/// Length of the image of any lift.
Rational degree(const ZMap& eta);

bool nonconstant_on_corners(const ZMap& eta);

struct Generalization {
    ZMap theta;  // [0,1]^max(2,n) -> B
    ZMap alpha;  // theta o alpha == eta (padded)
};
/// A strictly more general map than eta. Throws ConstantOnCorners.
Generalization generalize(const ZMap& eta, FacetChoice choice = FacetChoice::Coarsest);

/// eta on [0,1]^n viewed as a map on [0,1]^m (m >= n) ignoring the extra coordinates.
ZMap pad(const ZMap& eta, std::size_t m);

}  // namespace nullary
