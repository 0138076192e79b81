#pragma once

#include <array>
#include <cstdint>

#include "cnets/cubic_taxonomy.hpp"
#include "cnets/forms.hpp"
#include "cnets/symmat.hpp"

namespace cnets::nets {

using forms::TernaryCubic;
using gf::FieldCtx;
using gf::i64;
using linalg::Row6;
using sym::Mat3i;
using taxonomy::CubicType;

/// A 3-dimensional subspace of the symmetric 3x3 matrices over F_p, stored
/// as the given basis plus the unique RREF coordinates of the 3-plane
/// (coordinate order m11, m12, m13, m22, m23, m33).
struct Net {
    i64 p = 0;
    std::array<Row6, 3> basis;
    std::array<Row6, 3> canonical;

    friend bool operator==(const Net& a, const Net& b) {
        return a.p == b.p && a.canonical == b.canonical;
    }
};

/// The ten congruence classes with singular discriminant, plus Nonsingular.
/// The _a/_b pairs are the two classes sharing a discriminant type,
/// separated by the slice (I) and by rank-one membership (IV).
enum class OrbitLabel { I_a, I_b, II, III, IV_a, IV_b, V, VI, VII, VIII, Nonsingular };
const char* to_string(OrbitLabel l);

Net make_net(const FieldCtx& F, const Mat3i& a, const Mat3i& b, const Mat3i& c);
Net net_from_rows(const FieldCtx& F, const std::array<Row6, 3>& rows);

/// Congruence action W -> M^T W M (a right action: act(M2, act(M1, W)) =
/// act(M1 M2, W)). Throws SingularMatrix.
Net act(const FieldCtx& F, const Mat3i& M, const Net& W);

/// det(A1 x + A2 y + A3 z) for the stored basis, leading coefficient
/// normalized to 1; its CubicType does not depend on the basis.
TernaryCubic net_disc(const FieldCtx& F, const Net& W);

/// The regrouped determinant: writing the basis entries a^i_{jk}, the matrix
/// attached to variable k has (j, i) entry a^i_{jk}. Same normalization; its
/// CubicType is invariant under basis change and the congruence action.
TernaryCubic net_slice(const FieldCtx& F, const Net& W);

/// True iff some nonzero member of W over the closure has rank one.
/// Decided exactly via apolarity: v v^T lies in W iff every annihilator
/// quadric vanishes at v, so the rank-one locus corresponds to the base
/// points of the annihilator net of conics (degree <= 4, inside the tower).
bool has_rank_one(const FieldCtx& F, const Net& W);

/// Same predicate by exhaustive enumeration of P^2(F_{p^k}), k in {1,..,max},
/// over the coefficient space of W, testing all 2x2 minors. Exhaustive up to
/// level 4, which is complete; kept as the independent slow route.
bool has_rank_one_by_search(const FieldCtx& F, const Net& W, int max_level = 4);

/// Classification dispatch on the discriminant type, refined by the slice
/// (case I) and rank-one membership (case IV). ThreeConcurrentLines cannot
/// occur as a discriminant; it raises ImpossibleDiscriminant.
OrbitLabel classify_net(const FieldCtx& F, const Net& W);

/// The ten catalog representatives, reduced mod p, in label order.
std::array<Net, 10> representatives(const FieldCtx& F);

/// Deterministic uniform samples (per seed): a 3-plane via a full-rank
/// random 3x6 coordinate matrix, and an invertible matrix via rejection.
Net random_net(const FieldCtx& F, std::uint64_t seed);
Mat3i random_gl3(const FieldCtx& F, std::uint64_t seed);

} // namespace cnets::nets
