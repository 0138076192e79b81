#pragma once

#include <array>
#include <vector>

#include "cnets/net_orbits.hpp"

namespace cnets::algebras {

using gf::FieldCtx;
using gf::i64;
using linalg::Row6;

/// Structure constants of a commutative unital algebra of rank 7 over F_p.
/// Basis index 0 is the unit; constructed tables use the graded basis
/// (1, x, y, z, e1, e2, e3). Construction validates commutativity, the unit
/// law and associativity (all 343 triples); violations raise InvalidMultTable.
struct MultTable {
    i64 p = 0;
    std::array<std::array<std::array<i64, 7>, 7>, 7> c{};
};

MultTable make_mult_table(const FieldCtx& F,
                          const std::array<std::array<std::array<i64, 7>, 7>, 7>& constants);

/// Dimensions d_i = dim m^i / m^{i+1} of the maximal-ideal filtration.
struct HilbertVector {
    std::vector<int> d;

    friend bool operator==(const HilbertVector&, const HilbertVector&) = default;
};

/// A subspace of the 6-dimensional space of quadrics, stored as RREF rows in
/// the fixed quadric coordinate order.
struct QuadricSpace {
    std::vector<Row6> rref;

    friend bool operator==(const QuadricSpace&, const QuadricSpace&) = default;
};

/// One homogeneous ideal generator, encoded by its coefficient vector in the
/// fixed monomial order: length 3 = linear, 6 = quadric, 10 = cubic.
struct IdealGenerator {
    std::vector<i64> coeffs;

    int degree() const;
};

/// The quadrics vanishing against every member of W under the trace pairing
/// trace(q A) (off-diagonal quadric coefficients are twice the matrix
/// entries). Always 3-dimensional: the pairing is perfect in char != 2.
QuadricSpace apolar_annihilator(const FieldCtx& F, const nets::Net& W);

/// The graded rank-7 algebra attached to a net: basis (1, x, y, z, e1, e2, e3),
/// x_a x_b = sum_i trace(S_ab A_i) e_i over the canonical basis of W, and
/// m^3 = 0. The Hilbert vector is always (3,3).
MultTable structure_constants(const FieldCtx& F, const nets::Net& W);

/// The rank-7 graded model of k[x,y,z]/(I + m^3-tail): degree-2 normal forms
/// modulo the degree-2 part of I, with every product of three variables zero.
/// Throws WrongHilbert unless the graded dimensions come out (1,3,3,0).
MultTable quotient_algebra(const FieldCtx& F, const std::vector<IdealGenerator>& generators);

/// Whether the cubic monomials are exhausted by (linear forms) * I_2 plus the
/// printed degree-3 generators, i.e. the generators literally present the
/// rank-7 quotient rather than relying on the forced truncation.
bool ideal_fills_cubics(const FieldCtx& F, const std::vector<IdealGenerator>& generators);

/// Hilbert vector of an arbitrary rank-7 table. The maximal ideal is found
/// via lambda_i = trace(L_{b_i}) / 7, so p = 7 raises
/// CharacteristicObstruction; a table that is not local raises NotLocal.
HilbertVector hilbert_vector(const FieldCtx& F, const MultTable& T);

/// Inverse of the correspondence: from a type-(3,3) table, the multiplication
/// m/m^2 x m/m^2 -> m^2 gives three symmetric matrices whose span is a net
/// with the same classification. Throws NotType33.
nets::Net recover_net(const FieldCtx& F, const MultTable& T);

/// classify_net(recover_net(T)); propagates NotLocal / NotType33.
nets::OrbitLabel classify_algebra(const FieldCtx& F, const MultTable& T);

} // namespace cnets::algebras
