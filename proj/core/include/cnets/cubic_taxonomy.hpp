#pragma once

#include <optional>
#include <string>

#include "cnets/forms.hpp"

namespace cnets::taxonomy {

using forms::TernaryCubic;
using gf::FieldCtx;
using gf::Fq;

/// The possible projective types of a plane cubic (including 0) in
/// characteristic >= 5. Invariant under invertible coordinate changes and
/// scalar multiplication.
enum class CubicType {
    Zero,
    TripleLine,
    DoubleLinePlusLine,
    ThreeConcurrentLines,
    ThreeGeneralLines,
    ConicPlusSecant,
    ConicPlusTangent,
    Cusp,
    Node,
    Nonsingular,
};

const char* to_string(CubicType t);

/// Classical invariants of a ternary cubic. S has degree 4 and T degree 6 in
/// the coefficients; delta = S^3 - T^2 vanishes iff the cubic is singular
/// (or zero / non-reduced); j = 1728 S^3 / delta when delta != 0.
struct CubicInvariants {
    Fq S;
    Fq T;
    Fq delta;
    std::optional<Fq> j_value;

    bool j_defined() const { return j_value.has_value(); }
    /// Throws JUndefined when delta = 0.
    Fq j() const {
        if (!j_value) throw JUndefined("j is undefined when the discriminant vanishes");
        return *j_value;
    }
};

CubicInvariants aronhold(const FieldCtx& F, const TernaryCubic& f);

/// Total classification of a rational plane cubic into its projective type.
/// Decides nonsingularity geometrically (factor structure and singular
/// points), independently of the delta = S^3 - T^2 route.
CubicType classify_cubic(const FieldCtx& F, const TernaryCubic& f);

} // namespace cnets::taxonomy
