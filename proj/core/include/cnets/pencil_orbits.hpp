#pragma once

#include <array>
#include <vector>

#include "cnets/forms.hpp"
#include "cnets/symmat.hpp"

namespace cnets::pencils {

using forms::BinaryCubic;
using gf::FieldCtx;
using gf::i64;
using linalg::Row6;
using sym::Mat3i;

/// A 2-dimensional subspace of the symmetric 3x3 matrices, stored as the
/// given basis plus the unique RREF coordinates of the plane (coordinate
/// order m11, m12, m13, m22, m23, m33).
struct Pencil {
    i64 p = 0;
    std::array<Row6, 2> basis;
    std::array<Row6, 2> canonical;

    friend bool operator==(const Pencil& a, const Pencil& b) {
        return a.p == b.p && a.canonical == b.canonical;
    }
};

/// Build from two symmetric matrices; throws std::invalid_argument when the
/// matrices are dependent.
Pencil make_pencil(const FieldCtx& F, const Mat3i& a, const Mat3i& b);
Pencil pencil_from_rows(const FieldCtx& F, const Row6& a, const Row6& b);

/// The eight congruence classes of pencils, in catalog order. The SqOne_*
/// labels are the three (1^2 1)-headed rows, Cube is (1^3), P1_* the three
/// rows with identically-zero discriminant, Simple111 the (111) row.
enum class PencilLabel { P1_a, P1_b, P1_c, Cube, SqOne_a, SqOne_b, SqOne_c, Simple111 };
const char* to_string(PencilLabel l);

/// det(A x + B y) for the stored basis (A, B); well-defined up to invertible
/// substitution of (x, y) and scalar.
BinaryCubic pencil_disc(const FieldCtx& F, const Pencil& U);

/// The separating invariants of a pencil, all computed over the closure and
/// therefore constant on congruence orbits (over any p >= 5).
struct PencilInvariants {
    bool disc_zero = false;
    /// Root multiplicity profile of the disc, sorted descending; empty when
    /// the disc vanishes identically.
    std::vector<int> profile;
    /// Rank of the member at the unique multiple root (-1 when none exists).
    int rank_at_multiple_root = -1;
    /// Number of points of P^1 over the closure where the member has rank
    /// <= 1 (-1 would mean infinitely many; cannot occur for a pencil).
    int rank_one_points = 0;
    /// Whether all members share a kernel vector.
    bool common_kernel = false;

    friend bool operator==(const PencilInvariants&, const PencilInvariants&) = default;
};

PencilInvariants pencil_invariants(const FieldCtx& F, const Pencil& U);

/// Classify by the calibrated invariant-vector dictionary; throws
/// UnrecognizedPencil if the vector matches no class (must never happen).
PencilLabel classify_pencil(const FieldCtx& F, const Pencil& U);

/// The eight catalog representatives, reduced mod p, in label order.
std::array<Pencil, 8> pencil_representatives(const FieldCtx& F);

/// Congruence action U -> M^T U M; throws SingularMatrix.
Pencil act(const FieldCtx& F, const Mat3i& M, const Pencil& U);

} // namespace cnets::pencils
