#pragma once

// Squeezing a simplex onto itself along a level set of an affine map, and
// the resulting non-surjective self-maps of the cube.

#include <utility>
#include <vector>

#include "nullary/zmap.hpp"

namespace nullary {

struct SqueezeContext {
    Simplex s;
    Simplex f;            // a facet of s
    IntegerVector eta;    // (l0, l1, ..., ln), integer affine map, nonconstant on f
    HalfSpaceSystem system;  // system of s, inequality 0 defines f

    /// Validates the setup and orders the system. Throws DimensionTooLow,
    /// ConstantOnFace, or BadInput when f is not a facet of s.
    static SqueezeContext make(const Simplex& s, const Simplex& f, IntegerVector eta);
};

/// (delta, tau) in (0, eps) with den(t + delta v) = den(t + delta v + tau w).
std::pair<Rational, Rational> equal_denominator_points(const RationalPoint& t, const RationalVector& v,
                                                       const RationalVector& w, const Rational& eps);

/// eps > 0 such that t + sum d_j w_j stays in the relative interior of s for
/// all d_j in (0, eps).
Rational interior_step(const Simplex& s, const RationalPoint& t, const std::vector<RationalVector>& directions);

RationalVector squeezing_direction(const SqueezeContext& ctx);

struct SqueezeResult {
    ZMap rho;            // s -> s
    RationalPoint y;     // not in the image of rho
    RationalPoint z;     // rho(y)
};
SqueezeResult squeeze(const SqueezeContext& ctx);

// Which boundary facet of eta's triangulation gets squeezed: the first one in
// canonical order, or the one whose containing simplex has the smallest
// vertex denominators (ties in canonical order).
enum class FacetChoice { First, Coarsest };

struct MakeSpaceResult {
    ZMap alpha;          // [0,1]^n -> [0,1]^n with eta o alpha = eta
    RationalPoint y;     // not in the image of alpha
};
MakeSpaceResult make_space(const ZMap& eta, FacetChoice choice = FacetChoice::Coarsest);

struct UpperBound {
    ZMap theta;
    ZMap alpha;
};
/// theta o alpha = eta with z among the values of theta.
UpperBound exists_upper_bound(const ZMap& eta, const Integer& z, FacetChoice choice = FacetChoice::Coarsest);

}  // namespace nullary
