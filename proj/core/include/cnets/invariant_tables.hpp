#pragma once

#include <array>
#include <cstdint>

namespace cnets::taxonomy {

/// One monomial of an invariant: exponents of the 10 cubic coefficients
/// (fixed monomial order) and an integer coefficient.
struct InvariantTerm {
    std::array<std::uint8_t, 10> e;
    long long coeff;
};

/// Degree-4 invariant S of a ternary cubic, normalized so the coefficient
/// of (xyz-coefficient)^4 is 1. S scales by det(M)^4 under substitution.
extern const std::array<InvariantTerm, 25> aronhold_s_terms;

/// Degree-6 invariant T, same normalization scheme; scales by det(M)^6.
/// With these normalizations S^3 - T^2 vanishes exactly on singular cubics
/// and j = 1728 S^3 / (S^3 - T^2) is the classical j-invariant.
extern const std::array<InvariantTerm, 103> aronhold_t_terms;

} // namespace cnets::taxonomy
