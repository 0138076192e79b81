#include "cnets/pencil_orbits.hpp"

#include <algorithm>
#include <cassert>

namespace cnets::pencils {

using gf::Fq;

const char* to_string(PencilLabel l) {
    switch (l) {
        case PencilLabel::P1_a: return "P1_a";
        case PencilLabel::P1_b: return "P1_b";
        case PencilLabel::P1_c: return "P1_c";
        case PencilLabel::Cube: return "Cube";
        case PencilLabel::SqOne_a: return "SqOne_a";
        case PencilLabel::SqOne_b: return "SqOne_b";
        case PencilLabel::SqOne_c: return "SqOne_c";
        case PencilLabel::Simple111: return "Simple111";
    }
    return "?";
}

Pencil pencil_from_rows(const FieldCtx& F, const Row6& a, const Row6& b) {
    Pencil U;
    U.p = F.p();
    U.basis = {a, b};
    for (auto& row : U.basis)
        for (auto& v : row) v = sym::norm(v, U.p);
    auto rref = linalg::rref6({U.basis[0], U.basis[1]}, U.p);
    if (rref.size() != 2) throw std::invalid_argument("pencil basis is linearly dependent");
    U.canonical = {rref[0], rref[1]};
    return U;
}

Pencil make_pencil(const FieldCtx& F, const Mat3i& a, const Mat3i& b) {
    if (!sym::is_symmetric(a, F.p()) || !sym::is_symmetric(b, F.p()))
        throw std::invalid_argument("pencil basis matrices must be symmetric");
    return pencil_from_rows(F, sym::pack(a, F.p()), sym::pack(b, F.p()));
}

Pencil act(const FieldCtx& F, const Mat3i& M, const Pencil& U) {
    if (sym::mat_det(M, F.p()) == 0) throw SingularMatrix("congruence by a singular matrix");
    return pencil_from_rows(F, sym::congruence(M, U.basis[0], F.p()),
                            sym::congruence(M, U.basis[1], F.p()));
}

BinaryCubic pencil_disc(const FieldCtx& F, const Pencil& U) {
    const i64 p = F.p();
    Mat3i A = sym::unpack(U.basis[0]);
    Mat3i B = sym::unpack(U.basis[1]);
    // det(Ax + By) by multilinearity in the columns: the x^{3-k} y^k
    // coefficient sums the determinants picking k columns from B
    auto pick = [&](int m0, int m1, int m2) {
        const Mat3i& c0 = m0 ? B : A;
        const Mat3i& c1 = m1 ? B : A;
        const Mat3i& c2 = m2 ? B : A;
        Mat3i m;
        for (int r = 0; r < 3; ++r) {
            m[r][0] = c0[r][0];
            m[r][1] = c1[r][1];
            m[r][2] = c2[r][2];
        }
        return sym::mat_det(m, p);
    };
    std::array<i64, 4> c{};
    for (int m0 = 0; m0 < 2; ++m0)
        for (int m1 = 0; m1 < 2; ++m1)
            for (int m2 = 0; m2 < 2; ++m2) {
                int k = m0 + m1 + m2;
                c[k] = sym::norm(c[k] + pick(m0, m1, m2), p);
            }
    BinaryCubic out;
    for (int k = 0; k < 4; ++k) out.c[k] = F.from_int(c[k]);
    return out;
}

PencilInvariants pencil_invariants(const FieldCtx& F, const Pencil& U) {
    const i64 p = F.p();
    PencilInvariants out;
    BinaryCubic disc = pencil_disc(F, U);
    out.disc_zero = forms::is_zero(disc);

    if (!out.disc_zero) {
        // multiplicity profile over the closure from the squarefree defect:
        // deg gcd(g, g') + max(m_inf - 1, 0) distinguishes (111), (2,1), (3),
        // and the multiple root, when present, is rational.
        int m_inf = 0;
        while (disc.c[m_inf].is_zero()) ++m_inf;
        // g(t) = disc(t, 1), degree 3 - m_inf
        std::vector<i64> g;
        for (int d = 0; d <= 3 - m_inf; ++d) g.push_back(disc.c[3 - d].c[0]);
        // derivative
        std::vector<i64> dg;
        for (size_t d = 1; d < g.size(); ++d) dg.push_back(g[d] * static_cast<i64>(d) % p);
        // univariate gcd over F_p
        auto gcd_poly = [&](std::vector<i64> a, std::vector<i64> b) {
            auto trim = [](std::vector<i64>& v) {
                while (!v.empty() && v.back() == 0) v.pop_back();
            };
            auto inv_mod = [&](i64 x) {
                i64 t0 = 0, t1 = 1, r0 = p, r1 = sym::norm(x, p);
                while (r1 != 0) {
                    i64 q = r0 / r1;
                    std::swap(t0 -= q * t1, t1);
                    std::swap(r0 -= q * r1, r1);
                }
                return sym::norm(t0, p);
            };
            trim(a);
            trim(b);
            while (!b.empty()) {
                i64 li = inv_mod(b.back());
                for (int d = static_cast<int>(a.size()) - 1; d >= static_cast<int>(b.size()) - 1;
                     --d) {
                    i64 c = a[d] % p;
                    if (c == 0) continue;
                    i64 q = c * li % p;
                    for (size_t i = 0; i < b.size(); ++i)
                        a[d - b.size() + 1 + i] = sym::norm(a[d - b.size() + 1 + i] - q * b[i], p);
                }
                trim(a);
                std::swap(a, b);
            }
            return a;
        };
        std::vector<i64> gg = g.size() > 1 ? gcd_poly(g, dg) : std::vector<i64>{1};
        int excess = static_cast<int>(gg.size()) - 1 + std::max(m_inf - 1, 0);
        if (excess == 0)
            out.profile = {1, 1, 1};
        else if (excess == 1)
            out.profile = {2, 1};
        else
            out.profile = {3};

        if (excess > 0) {
            // the multiple root is rational: [1:0] when m_inf >= 2, otherwise
            // the unique repeated root of g
            i64 rx = 1, ry = 0;
            if (m_inf < 2) {
                // root of gg (degree 1) or double root of gg (degree 2)
                i64 root;
                if (gg.size() == 2) {
                    // gg = c0 + c1 t
                    i64 t0 = 0, t1 = 1, r0 = p, r1 = sym::norm(gg[1], p);
                    while (r1 != 0) {
                        i64 q = r0 / r1;
                        std::swap(t0 -= q * t1, t1);
                        std::swap(r0 -= q * r1, r1);
                    }
                    root = sym::norm(-gg[0] * sym::norm(t0, p), p);
                } else {
                    // profile (3) with finite triple root: gg quadratic
                    // (t - r)^2: r = -c1/(2 c2)
                    assert(gg.size() == 3);
                    i64 c1 = gg[1], c2 = gg[2];
                    i64 t0 = 0, t1 = 1, r0 = p, r1 = sym::norm(2 * c2, p);
                    while (r1 != 0) {
                        i64 q = r0 / r1;
                        std::swap(t0 -= q * t1, t1);
                        std::swap(r0 -= q * r1, r1);
                    }
                    root = sym::norm(-c1 * sym::norm(t0, p), p);
                }
                rx = root;
                ry = 1;
            }
            Row6 member;
            for (int i = 0; i < 6; ++i)
                member[i] = sym::norm(rx * U.basis[0][i] + ry * U.basis[1][i], p);
            out.rank_at_multiple_root = sym::sym_rank(member, p);
        }
    }

    // rank <= 1 points over the closure: the rank-drop locus is cut out by
    // binary quadratics, so P^1(F_{p^2}) is exhaustive
    int count = 0;
    auto test_point = [&](const Fq& x, const Fq& y) {
        std::array<Fq, 6> m;
        for (int i = 0; i < 6; ++i)
            m[i] = x * F.from_int(U.basis[0][i], x.level) + y * F.from_int(U.basis[1][i], x.level);
        // 6 independent 2x2 minors of the symmetric matrix
        // entries: (00,01,02,11,12,22) = m[0..5]
        auto minor = [&](int a, int b, int c, int d) { return m[a] * m[d] - m[b] * m[c]; };
        if (!minor(0, 1, 1, 3).is_zero()) return; // rows01 cols01
        if (!minor(0, 2, 1, 4).is_zero()) return; // rows01 cols02
        if (!minor(1, 2, 3, 4).is_zero()) return; // rows01 cols12
        if (!minor(0, 2, 2, 5).is_zero()) return; // rows02 cols02
        if (!minor(1, 2, 4, 5).is_zero()) return; // rows02 cols12
        if (!minor(3, 4, 4, 5).is_zero()) return; // rows12 cols12
        ++count;
    };
    // P^1(F_{p^2}) = {(1, b)} cup {(0, 1)}
    forms::for_each_element(F, 2, [&](const Fq& b) { test_point(F.one(2), b); });
    test_point(F.zero(2), F.one(2));
    out.rank_one_points = count;

    // common kernel vector: stacked 6x3 system over F_p
    {
        Mat3i A = sym::unpack(U.basis[0]);
        Mat3i B = sym::unpack(U.basis[1]);
        std::vector<std::array<Fq, 3>> rows;
        for (int r = 0; r < 3; ++r)
            rows.push_back({F.from_int(A[r][0]), F.from_int(A[r][1]), F.from_int(A[r][2])});
        for (int r = 0; r < 3; ++r)
            rows.push_back({F.from_int(B[r][0]), F.from_int(B[r][1]), F.from_int(B[r][2])});
        out.common_kernel = linalg::rank_rows<3>(F, rows) < 3;
    }
    return out;
}

PencilLabel classify_pencil(const FieldCtx& F, const Pencil& U) {
    PencilInvariants v = pencil_invariants(F, U);
    // dictionary calibrated against the full F_5 orbit enumeration of the
    // catalog representatives
    if (v.disc_zero) {
        if (v.common_kernel && v.rank_one_points == 2) return PencilLabel::P1_a;
        if (v.common_kernel && v.rank_one_points == 1) return PencilLabel::P1_b;
        if (!v.common_kernel && v.rank_one_points == 0) return PencilLabel::P1_c;
    } else if (v.profile == std::vector<int>{3} && !v.common_kernel) {
        if (v.rank_at_multiple_root == 1 && v.rank_one_points == 1) return PencilLabel::Cube;
        if (v.rank_at_multiple_root == 2 && v.rank_one_points == 0) return PencilLabel::SqOne_a;
    } else if (v.profile == std::vector<int>{2, 1} && !v.common_kernel) {
        if (v.rank_at_multiple_root == 1 && v.rank_one_points == 1) return PencilLabel::SqOne_b;
        if (v.rank_at_multiple_root == 2 && v.rank_one_points == 0) return PencilLabel::SqOne_c;
    } else if (v.profile == std::vector<int>{1, 1, 1} && !v.common_kernel &&
               v.rank_one_points == 0) {
        return PencilLabel::Simple111;
    }
    throw UnrecognizedPencil("pencil invariant vector matches no calibrated class");
}

std::array<Pencil, 8> pencil_representatives(const FieldCtx& F) {
    auto mk = [&](std::array<std::array<i64, 3>, 3> a, std::array<std::array<i64, 3>, 3> b) {
        return make_pencil(F, a, b);
    };
    return {
        // disc identically zero
        mk({{{0, 0, 0}, {0, 0, 0}, {0, 0, 1}}}, {{{0, 0, 0}, {0, 1, 0}, {0, 0, 0}}}),   // P1_a
        mk({{{0, 0, 0}, {0, 0, 0}, {0, 0, 1}}}, {{{0, 0, 0}, {0, 0, 1}, {0, 1, 0}}}),   // P1_b
        mk({{{0, 0, 1}, {0, 0, 0}, {1, 0, 0}}}, {{{0, 0, 0}, {0, 0, 1}, {0, 1, 0}}}),   // P1_c
        // (1^3)
        mk({{{1, 0, 0}, {0, 0, 0}, {0, 0, 0}}}, {{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}}),   // Cube
        // (1^2 1)
        mk({{{1, 0, 0}, {0, -1, 0}, {0, 0, 0}}}, {{{1, 0, 1}, {0, 0, 1}, {1, 1, 0}}}),  // SqOne_a
        mk({{{0, 0, 0}, {0, 0, 1}, {0, 1, 0}}}, {{{1, 0, 0}, {0, 0, 0}, {0, 0, 0}}}),   // SqOne_b
        mk({{{0, 0, 0}, {0, 1, 0}, {0, 0, 1}}}, {{{0, 0, 1}, {0, 0, 0}, {1, 0, 1}}}),   // SqOne_c
        // (111)
        mk({{{0, 0, 0}, {0, 1, 0}, {0, 0, 1}}}, {{{1, 0, 0}, {0, 0, 0}, {0, 0, 1}}}),   // Simple111
    };
}

} // namespace cnets::pencils
