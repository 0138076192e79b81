#include "cnets/cubic_taxonomy.hpp"

#include <cassert>

#include "cnets/invariant_tables.hpp"
#include "cnets/linalg.hpp"

namespace cnets::taxonomy {

using forms::LinearForm;
using forms::TernaryQuadric;
using linalg::Mat3;
using linalg::Vec3;

const char* to_string(CubicType t) {
    switch (t) {
        case CubicType::Zero: return "Zero";
        case CubicType::TripleLine: return "TripleLine";
        case CubicType::DoubleLinePlusLine: return "DoubleLinePlusLine";
        case CubicType::ThreeConcurrentLines: return "ThreeConcurrentLines";
        case CubicType::ThreeGeneralLines: return "ThreeGeneralLines";
        case CubicType::ConicPlusSecant: return "ConicPlusSecant";
        case CubicType::ConicPlusTangent: return "ConicPlusTangent";
        case CubicType::Cusp: return "Cusp";
        case CubicType::Node: return "Node";
        case CubicType::Nonsingular: return "Nonsingular";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// invariants
// ---------------------------------------------------------------------------

namespace {

template <std::size_t N>
Fq eval_invariant(const FieldCtx& F, const std::array<InvariantTerm, N>& terms,
                  const TernaryCubic& f) {
    const int level = forms::level_of(f);
    Fq acc = F.zero(level);
    for (const auto& t : terms) {
        Fq term = F.from_int(t.coeff, level);
        for (int i = 0; i < 10; ++i)
            for (int e = 0; e < t.e[i]; ++e) term = term * f.c[i];
        acc = acc + term;
    }
    return acc;
}

} // namespace

CubicInvariants aronhold(const FieldCtx& F, const TernaryCubic& f) {
    CubicInvariants inv;
    inv.S = eval_invariant(F, aronhold_s_terms, f);
    inv.T = eval_invariant(F, aronhold_t_terms, f);
    Fq s3 = inv.S * inv.S * inv.S;
    inv.delta = s3 - inv.T * inv.T;
    if (!inv.delta.is_zero()) inv.j_value = F.from_int(1728, s3.level) * s3 / inv.delta;
    return inv;
}

// ---------------------------------------------------------------------------
// classification
// ---------------------------------------------------------------------------

namespace {

struct RationalFactors {
    std::vector<std::pair<LinearForm, int>> lines;
    std::optional<TernaryQuadric> quadric; // residual after one extraction
    int total = 0;
};

// All rational linear factors (dual scan of P^2(F_p)) with multiplicities.
// Each found line is divided out of the running residual to its full
// multiplicity; distinct lines are coprime, so the residual always carries
// the full remaining multiplicity of every later line.
RationalFactors rational_factors(const FieldCtx& F, const TernaryCubic& f) {
    RationalFactors out;
    TernaryCubic deg3 = f;
    TernaryQuadric deg2;
    LinearForm deg1;
    forms::for_each_p2_point(F, 1, false, [&](const std::array<Fq, 3>& dual) {
        if (out.total == 3) return;
        LinearForm l{dual};
        auto [P0, P1] = forms::line_span(F, l);
        if (!forms::eval_at(F, f, P0).is_zero()) return;
        if (!forms::is_zero(forms::restrict_to_line(F, f, P0, P1))) return;
        int mult = 0;
        for (bool more = true; more;) {
            switch (out.total + mult) {
                case 0: {
                    auto q = forms::divide_by_linear(F, deg3, l);
                    if (q) {
                        deg2 = *q;
                        ++mult;
                    } else {
                        more = false;
                    }
                    break;
                }
                case 1: {
                    auto ll = forms::divide_by_linear(F, deg2, l);
                    if (ll) {
                        deg1 = *ll;
                        ++mult;
                    } else {
                        more = false;
                    }
                    break;
                }
                case 2: {
                    int li = -1;
                    for (int i = 0; i < 3; ++i)
                        if (!l.c[i].is_zero()) {
                            li = i;
                            break;
                        }
                    Fq ratio = deg1.c[li] / l.c[li];
                    bool prop = !ratio.is_zero();
                    for (int i = 0; i < 3; ++i)
                        if (!(deg1.c[i] == ratio * l.c[i])) prop = false;
                    if (prop)
                        ++mult;
                    more = false;
                    break;
                }
                default:
                    more = false;
            }
        }
        assert(mult > 0);
        out.lines.emplace_back(l, mult);
        out.total += mult;
    });
    if (out.total == 1) out.quadric = deg2;
    return out;
}

// rank of the binary quadratic b0 s^2 + b1 st + b2 t^2
int binary_quadratic_rank(const FieldCtx& F, const forms::BinaryQuadratic& b) {
    bool zero = b.c[0].is_zero() && b.c[1].is_zero() && b.c[2].is_zero();
    if (zero) return 0;
    Fq disc = b.c[1] * b.c[1] - F.from_int(4) * b.c[0] * b.c[2];
    return disc.is_zero() ? 1 : 2;
}

// kernel vector of a rank-2 quadric's matrix (the vertex of the line pair)
Vec3 conic_vertex(const FieldCtx& F, const TernaryQuadric& q) {
    Mat3 m = forms::quadric_matrix(F, q);
    // solve m v = 0 by elimination; rank 2 so kernel is 1-dimensional
    std::array<std::array<Fq, 3>, 3> a = {m[0], m[1], m[2]};
    int rank = 0;
    std::array<int, 3> pivot_col{-1, -1, -1};
    for (int col = 0; col < 3 && rank < 3; ++col) {
        int piv = -1;
        for (int r = rank; r < 3; ++r)
            if (!a[r][col].is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[piv], a[rank]);
        Fq li = F.inv(a[rank][col]);
        for (int j = 0; j < 3; ++j) a[rank][j] = a[rank][j] * li;
        for (int r = 0; r < 3; ++r) {
            if (r == rank || a[r][col].is_zero()) continue;
            Fq c = a[r][col];
            for (int j = 0; j < 3; ++j) a[r][j] = a[r][j] - c * a[rank][j];
        }
        pivot_col[rank] = col;
        ++rank;
    }
    int free_col = -1;
    for (int col = 0; col < 3; ++col) {
        bool is_pivot = false;
        for (int r = 0; r < rank; ++r)
            if (pivot_col[r] == col) is_pivot = true;
        if (!is_pivot) free_col = col;
    }
    Vec3 v{F.zero(), F.zero(), F.zero()};
    v[free_col] = F.one();
    for (int r = 0; r < rank; ++r) v[pivot_col[r]] = -a[r][free_col];
    return v;
}

Fq eval_linear(const LinearForm& l, const Vec3& v) {
    return l.c[0] * v[0] + l.c[1] * v[1] + l.c[2] * v[2];
}

// unique rational singular point of an irreducible rational cubic, if any
std::optional<std::array<Fq, 3>> rational_singular_point(const FieldCtx& F, const TernaryCubic& f) {
    auto d = forms::partials(F, f);
    std::optional<std::array<Fq, 3>> found;
    forms::for_each_p2_point(F, 1, false, [&](const std::array<Fq, 3>& pt) {
        if (found) return;
        if (!forms::eval_at(F, f, pt).is_zero()) return;
        for (int i = 0; i < 3; ++i)
            if (!forms::eval_at(F, d[i], pt).is_zero()) return;
        found = pt;
    });
    return found;
}

// node vs cusp by the rank of the quadratic tangent cone at a singular point
CubicType node_or_cusp(const FieldCtx& F, const TernaryCubic& f, const std::array<Fq, 3>& P) {
    // change coordinates so the singular point is [1:0:0]
    Mat3 M;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) M[i][j] = F.zero();
    for (int i = 0; i < 3; ++i) M[i][0] = P[i];
    int pivot = 0;
    while (P[pivot].is_zero()) ++pivot;
    int col = 1;
    for (int j = 0; j < 3; ++j) {
        if (j == pivot) continue;
        M[j][col] = F.one();
        ++col;
    }
    TernaryCubic G = forms::compose(F, f, M);
    // singular at [1:0:0]: x^3, x^2 y, x^2 z coefficients vanish
    assert(G.c[0].is_zero() && G.c[1].is_zero() && G.c[2].is_zero());
    forms::BinaryQuadratic cone{{G.c[3], G.c[4], G.c[5]}}; // x y^2, x y z, x z^2
    int r = binary_quadratic_rank(F, cone);
    assert(r >= 1);
    return r == 2 ? CubicType::Node : CubicType::Cusp;
}

} // namespace

CubicType classify_cubic(const FieldCtx& F, const TernaryCubic& f) {
    if (forms::is_zero(f)) return CubicType::Zero;
    if (forms::level_of(f) != 1)
        throw std::invalid_argument("classify_cubic expects rational coefficients");

    RationalFactors rf = rational_factors(F, f);

    if (rf.total == 3) {
        if (rf.lines.size() == 1) return CubicType::TripleLine;
        if (rf.lines.size() == 2) return CubicType::DoubleLinePlusLine;
        // three distinct rational lines: concurrent iff the dual points are
        // collinear
        Mat3 D;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) D[i][j] = rf.lines[i].first.c[j];
        return linalg::det(D).is_zero() ? CubicType::ThreeConcurrentLines
                                        : CubicType::ThreeGeneralLines;
    }

    if (rf.total == 1) {
        const LinearForm& l = rf.lines[0].first;
        const TernaryQuadric& q = *rf.quadric;
        int r = forms::conic_rank(F, q);
        if (r == 3) {
            auto [P0, P1] = forms::line_span(F, l);
            auto restr = forms::restrict_to_line(F, q, P0, P1);
            int br = binary_quadratic_rank(F, restr);
            assert(br >= 1);
            return br == 2 ? CubicType::ConicPlusSecant : CubicType::ConicPlusTangent;
        }
        // rank 2: the residual conic is a pair of conjugate lines meeting in a
        // rational vertex; rank 1 cannot happen (a rational double line would
        // have been extracted)
        assert(r == 2);
        Vec3 v = conic_vertex(F, q);
        return eval_linear(l, v).is_zero() ? CubicType::ThreeConcurrentLines
                                           : CubicType::ThreeGeneralLines;
    }

    assert(rf.total == 0);
    // No rational linear factor: the cubic is irreducible, or a Galois orbit
    // of three conjugate lines.
    TernaryCubic H = forms::hessian(F, f);
    if (forms::is_zero(H)) return CubicType::ThreeConcurrentLines; // cone
    if (forms::proportional(H, f)) return CubicType::ThreeGeneralLines; // triangle
    if (auto P = rational_singular_point(F, f)) return node_or_cusp(F, f, *P);
    return CubicType::Nonsingular;
}

} // namespace cnets::taxonomy
