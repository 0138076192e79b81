#include "cnets/net_orbits.hpp"

#include <cassert>
#include <random>

namespace cnets::nets {

using forms::LinearForm;
using forms::TernaryQuadric;
using gf::Fq;

const char* to_string(OrbitLabel l) {
    switch (l) {
        case OrbitLabel::I_a: return "I_a";
        case OrbitLabel::I_b: return "I_b";
        case OrbitLabel::II: return "II";
        case OrbitLabel::III: return "III";
        case OrbitLabel::IV_a: return "IV_a";
        case OrbitLabel::IV_b: return "IV_b";
        case OrbitLabel::V: return "V";
        case OrbitLabel::VI: return "VI";
        case OrbitLabel::VII: return "VII";
        case OrbitLabel::VIII: return "VIII";
        case OrbitLabel::Nonsingular: return "Nonsingular";
    }
    return "?";
}

Net net_from_rows(const FieldCtx& F, const std::array<Row6, 3>& rows) {
    Net W;
    W.p = F.p();
    W.basis = rows;
    for (auto& row : W.basis)
        for (auto& v : row) v = sym::norm(v, W.p);
    auto rref = linalg::rref6({W.basis[0], W.basis[1], W.basis[2]}, W.p);
    if (rref.size() != 3) throw std::invalid_argument("net basis is linearly dependent");
    W.canonical = {rref[0], rref[1], rref[2]};
    return W;
}

Net make_net(const FieldCtx& F, const Mat3i& a, const Mat3i& b, const Mat3i& c) {
    const i64 p = F.p();
    for (const auto* m : {&a, &b, &c})
        if (!sym::is_symmetric(*m, p))
            throw std::invalid_argument("net basis matrices must be symmetric");
    return net_from_rows(F, {sym::pack(a, p), sym::pack(b, p), sym::pack(c, p)});
}

Net act(const FieldCtx& F, const Mat3i& M, const Net& W) {
    if (sym::mat_det(M, F.p()) == 0) throw SingularMatrix("congruence by a singular matrix");
    return net_from_rows(F, {sym::congruence(M, W.basis[0], F.p()),
                             sym::congruence(M, W.basis[1], F.p()),
                             sym::congruence(M, W.basis[2], F.p())});
}

namespace {

// determinant of a 3x3 matrix of linear forms, as a ternary cubic
TernaryCubic det3_linear(const FieldCtx& F, const std::array<std::array<LinearForm, 3>, 3>& m) {
    TernaryCubic out = forms::cubic_zero(F);
    constexpr int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
    constexpr int signs[6] = {1, 1, 1, -1, -1, -1};
    for (int t = 0; t < 6; ++t) {
        TernaryQuadric q = forms::mul(F, m[0][perms[t][0]], m[1][perms[t][1]]);
        TernaryCubic cube = forms::mul(F, q, m[2][perms[t][2]]);
        Fq s = F.from_int(signs[t]);
        for (int i = 0; i < 10; ++i) out.c[i] = out.c[i] + s * cube.c[i];
    }
    return out;
}

LinearForm entry_form(const FieldCtx& F, const Net& W, int j, int k) {
    // linear form in (x, y, z) whose coefficient of variable i is A_i[j][k]
    LinearForm l;
    for (int i = 0; i < 3; ++i) l.c[i] = F.from_int(sym::entry(W.basis[i], j, k));
    return l;
}

} // namespace

TernaryCubic net_disc(const FieldCtx& F, const Net& W) {
    std::array<std::array<LinearForm, 3>, 3> m;
    for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) m[j][k] = entry_form(F, W, j, k);
    return forms::normalized(F, det3_linear(F, m));
}

TernaryCubic net_slice(const FieldCtx& F, const Net& W) {
    // matrix for variable k has (j, i) entry A_i[j][k]
    std::array<std::array<LinearForm, 3>, 3> m;
    for (int j = 0; j < 3; ++j)
        for (int i = 0; i < 3; ++i) {
            LinearForm l;
            for (int k = 0; k < 3; ++k) {
                Mat3i ai = sym::unpack(W.basis[i]);
                l.c[k] = F.from_int(ai[j][k]);
            }
            m[j][i] = l;
        }
    return forms::normalized(F, det3_linear(F, m));
}

// ---------------------------------------------------------------------------
// rank-one membership
// ---------------------------------------------------------------------------

namespace {

std::array<TernaryQuadric, 3> annihilator_conics(const FieldCtx& F, const Net& W) {
    auto kern = linalg::kernel6({W.canonical[0], W.canonical[1], W.canonical[2]}, F.p());
    assert(kern.size() == 3);
    std::array<TernaryQuadric, 3> q;
    for (int i = 0; i < 3; ++i) {
        std::array<i64, 6> c;
        for (int j = 0; j < 6; ++j) c[j] = kern[i][j];
        q[i] = forms::quadric_from_ints(F, c);
    }
    return q;
}

} // namespace

bool has_rank_one(const FieldCtx& F, const Net& W) {
    auto Q = annihilator_conics(F, W);
    // rational base point fast path
    bool found = false;
    forms::for_each_p2_point(F, 1, false, [&](const std::array<Fq, 3>& v) {
        if (found) return;
        if (forms::eval_at(F, Q[0], v).is_zero() && forms::eval_at(F, Q[1], v).is_zero() &&
            forms::eval_at(F, Q[2], v).is_zero())
            found = true;
    });
    if (found) return true;

    // move a rational point where Q0 and Q1 are both nonzero to [0:0:1]
    std::array<Fq, 3> v0{};
    bool have_v0 = false;
    forms::for_each_p2_point(F, 1, false, [&](const std::array<Fq, 3>& v) {
        if (have_v0) return;
        if (!forms::eval_at(F, Q[0], v).is_zero() && !forms::eval_at(F, Q[1], v).is_zero()) {
            v0 = v;
            have_v0 = true;
        }
    });
    assert(have_v0); // two conics cover at most 4p+2 < p^2+p+1 points
    linalg::Mat3 M;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) M[i][j] = F.zero();
    for (int i = 0; i < 3; ++i) M[i][2] = v0[i];
    int pivot = 0;
    while (v0[pivot].is_zero()) ++pivot;
    int col = 0;
    for (int j = 0; j < 3; ++j) {
        if (j == pivot) continue;
        M[j][col] = F.one();
        ++col;
    }
    TernaryQuadric q0 = forms::compose(F, Q[0], M);
    TernaryQuadric q1 = forms::compose(F, Q[1], M);
    TernaryQuadric q2 = forms::compose(F, Q[2], M);
    assert(!q0.c[5].is_zero() && !q1.c[5].is_zero());

    // treat q0, q1 as quadratics in w = z with binary-form coefficients:
    // q = a w^2 + b(u,v) w + c(u,v)
    struct WQuad {
        Fq a;                 // z^2
        std::array<Fq, 2> b;  // xz, yz
        std::array<Fq, 3> c;  // x^2, xy, y^2
    };
    auto split = [&](const TernaryQuadric& q) {
        return WQuad{q.c[5], {q.c[2], q.c[4]}, {q.c[0], q.c[1], q.c[3]}};
    };
    WQuad A = split(q0), B = split(q1);
    // binary-form helpers (coefficients indexed by u-degree descending)
    auto bin_mul = [&](const std::vector<Fq>& x, const std::vector<Fq>& y) {
        std::vector<Fq> r(x.size() + y.size() - 1, F.zero());
        for (size_t i = 0; i < x.size(); ++i)
            for (size_t j = 0; j < y.size(); ++j) r[i + j] = r[i + j] + x[i] * y[j];
        return r;
    };
    auto bin_sub = [&](std::vector<Fq> x, const std::vector<Fq>& y) {
        x.resize(std::max(x.size(), y.size()), F.zero());
        for (size_t i = 0; i < y.size(); ++i) x[i] = x[i] - y[i];
        return x;
    };
    std::vector<Fq> a1{A.a}, a2{B.a};
    std::vector<Fq> b1{A.b[0], A.b[1]}, b2{B.b[0], B.b[1]};
    std::vector<Fq> c1{A.c[0], A.c[1], A.c[2]}, c2{B.c[0], B.c[1], B.c[2]};
    // Res_w = (a1 c2 - a2 c1)^2 - (a1 b2 - a2 b1)(b1 c2 - b2 c1), quartic in (u, v)
    auto ac = bin_sub(bin_mul(a1, c2), bin_mul(a2, c1));
    auto ab = bin_sub(bin_mul(a1, b2), bin_mul(a2, b1));
    auto bc = bin_sub(bin_mul(b1, c2), bin_mul(b2, c1));
    auto res = bin_sub(bin_mul(ac, ac), bin_mul(ab, bc));
    res.resize(5, F.zero());
    bool res_zero = true;
    for (const auto& v : res)
        if (!v.is_zero()) res_zero = false;
    // a common component of two annihilator conics always meets the third
    // conic over the closure
    if (res_zero) return true;

    // roots of the quartic over the tower; candidate (u:v) includes [1:0]
    auto w_candidates = [&](const Fq& u, const Fq& v, int point_level) {
        // gcd of the two dehomogenized quadratics in w
        auto evalbin = [&](const std::vector<Fq>& f) {
            // index i holds the u^{deg-i} v^i coefficient
            Fq acc = F.zero(point_level);
            int deg = static_cast<int>(f.size()) - 1;
            std::vector<Fq> up(deg + 1, F.one(point_level)), vp(deg + 1, F.one(point_level));
            for (int i = 1; i <= deg; ++i) {
                up[i] = up[i - 1] * u;
                vp[i] = vp[i - 1] * v;
            }
            for (int i = 0; i <= deg; ++i) acc = acc + f[i] * up[deg - i] * vp[i];
            return acc;
        };
        std::array<Fq, 3> qa = {evalbin(c1), evalbin(b1), F.embed(A.a, point_level)};
        std::array<Fq, 3> qb = {evalbin(c2), evalbin(b2), F.embed(B.a, point_level)};
        // gcd of qa, qb as degree-2 polys in w (leading coefficients nonzero)
        std::vector<Fq> g;
        {
            std::vector<Fq> f1 = {qa[0], qa[1], qa[2]}, f2 = {qb[0], qb[1], qb[2]};
            auto trim = [&](std::vector<Fq>& h) {
                while (!h.empty() && h.back().is_zero()) h.pop_back();
            };
            trim(f1);
            trim(f2);
            while (!f2.empty()) {
                // f1 mod f2
                Fq li = F.inv(f2.back());
                for (int d = static_cast<int>(f1.size()) - 1;
                     d >= static_cast<int>(f2.size()) - 1; --d) {
                    Fq cq = f1[d] * li;
                    if (cq.is_zero()) continue;
                    for (size_t i = 0; i < f2.size(); ++i)
                        f1[d - f2.size() + 1 + i] = f1[d - f2.size() + 1 + i] - cq * f2[i];
                }
                trim(f1);
                std::swap(f1, f2);
            }
            g = f1;
        }
        std::vector<Fq> out;
        if (g.size() <= 1) return out; // no common w at this (u:v)
        for (int target : {point_level, 2 * point_level}) {
            if (target > 4 || !F.has_level(target) || target % point_level != 0) continue;
            if (target == 2 * point_level && g.size() < 3) continue;
            for (const auto& w : F.roots_in_level(g, target)) out.push_back(w);
        }
        return out;
    };

    auto try_point = [&](const Fq& u, const Fq& v, int level) {
        for (const auto& w : w_candidates(u, v, level)) {
            std::array<Fq, 3> pt{F.embed(u, w.level), F.embed(v, w.level), w};
            if (forms::eval_at(F, q2, pt).is_zero()) return true;
        }
        return false;
    };

    for (int level : {1, 2, 3, 4}) {
        // roots with v != 0: dehomogenize at v = 1; res[i] is the u^{4-i} v^i
        // coefficient, so the univariate in u has ascending coefficients
        // res[4], res[3], ..., res[0]
        std::vector<Fq> ru;
        for (int i = 4; i >= 0; --i) ru.push_back(F.embed(res[i], level));
        auto roots = F.roots_in_level(ru, level);
        for (const auto& r : roots)
            if (try_point(r, F.one(level), level)) return true;
        // root at [1:0]: the u^4 coefficient vanishes
        if (level == 1 && res[0].is_zero())
            if (try_point(F.one(1), F.zero(1), 1)) return true;
    }
    return false;
}

bool has_rank_one_by_search(const FieldCtx& F, const Net& W, int max_level) {
    for (int level : {1, 2, 3, 4}) {
        if (level > max_level) break;
        bool found = false;
        forms::for_each_p2_point(F, level, false, [&](const std::array<Fq, 3>& cf) {
            if (found) return;
            // member cf0 A1 + cf1 A2 + cf2 A3, packed entries
            std::array<Fq, 6> m;
            for (int i = 0; i < 6; ++i)
                m[i] = cf[0] * F.from_int(W.basis[0][i], level) +
                       cf[1] * F.from_int(W.basis[1][i], level) +
                       cf[2] * F.from_int(W.basis[2][i], level);
            auto minor = [&](int a, int b, int c, int d) { return m[a] * m[d] - m[b] * m[c]; };
            if (!minor(0, 1, 1, 3).is_zero()) return;
            if (!minor(0, 2, 1, 4).is_zero()) return;
            if (!minor(1, 2, 3, 4).is_zero()) return;
            if (!minor(0, 2, 2, 5).is_zero()) return;
            if (!minor(1, 2, 4, 5).is_zero()) return;
            if (!minor(3, 4, 4, 5).is_zero()) return;
            found = true;
        });
        if (found) return true;
    }
    return false;
}

OrbitLabel classify_net(const FieldCtx& F, const Net& W) {
    TernaryCubic disc = net_disc(F, W);
    switch (taxonomy::classify_cubic(F, disc)) {
        case CubicType::Zero:
            return taxonomy::classify_cubic(F, net_slice(F, W)) == CubicType::Zero
                       ? OrbitLabel::I_a
                       : OrbitLabel::I_b;
        case CubicType::TripleLine: return OrbitLabel::II;
        case CubicType::DoubleLinePlusLine: return OrbitLabel::III;
        case CubicType::ThreeGeneralLines:
            return has_rank_one(F, W) ? OrbitLabel::IV_a : OrbitLabel::IV_b;
        case CubicType::ConicPlusSecant: return OrbitLabel::V;
        case CubicType::ConicPlusTangent: return OrbitLabel::VI;
        case CubicType::Cusp: return OrbitLabel::VII;
        case CubicType::Node: return OrbitLabel::VIII;
        case CubicType::Nonsingular: return OrbitLabel::Nonsingular;
        case CubicType::ThreeConcurrentLines:
            throw ImpossibleDiscriminant("a net discriminant cannot be three concurrent lines");
    }
    throw ImpossibleDiscriminant("unreachable");
}

std::array<Net, 10> representatives(const FieldCtx& F) {
    auto mk = [&](std::array<std::array<i64, 3>, 3> a, std::array<std::array<i64, 3>, 3> b,
                  std::array<std::array<i64, 3>, 3> c) { return make_net(F, a, b, c); };
    return {
        // I_a, I_b
        mk({{{0, 0, 0}, {0, 0, 0}, {0, 0, 1}}}, {{{0, 0, 0}, {0, 1, 0}, {0, 0, 0}}},
           {{{0, 0, 0}, {0, 0, 1}, {0, 1, 0}}}),
        mk({{{0, 0, 1}, {0, 0, 0}, {1, 0, 0}}}, {{{0, 0, 0}, {0, 0, 1}, {0, 1, 0}}},
           {{{0, 0, 0}, {0, 0, 0}, {0, 0, 1}}}),
        // II
        mk({{{1, 0, 0}, {0, 0, 0}, {0, 0, 0}}}, {{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}},
           {{{0, 1, 0}, {1, 0, 0}, {0, 0, 0}}}),
        // III
        mk({{{1, 0, 0}, {0, 0, 0}, {0, 0, 0}}}, {{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}},
           {{{0, 0, 0}, {0, 1, 0}, {0, 0, 0}}}),
        // IV_a, IV_b
        mk({{{1, 0, 0}, {0, 0, 0}, {0, 0, 0}}}, {{{0, 0, 0}, {0, 1, 0}, {0, 0, 0}}},
           {{{0, 0, 0}, {0, 0, 0}, {0, 0, 1}}}),
        mk({{{0, 0, 0}, {0, 1, 0}, {0, 0, -1}}}, {{{1, 0, 0}, {0, 0, 0}, {0, 0, -1}}},
           {{{2, 1, 1}, {1, 0, 1}, {1, 1, 0}}}),
        // V
        mk({{{1, 0, 0}, {0, 0, 0}, {0, 0, 0}}}, {{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}},
           {{{0, 0, 0}, {0, 0, 0}, {0, 0, 1}}}),
        // VI
        mk({{{0, 0, 0}, {0, 1, 0}, {0, 0, 1}}}, {{{1, 0, 0}, {0, 0, 0}, {0, 0, 1}}},
           {{{2, 1, 0}, {1, 0, 0}, {0, 0, 0}}}),
        // VII
        mk({{{1, 0, 0}, {0, 0, 0}, {0, 0, 0}}}, {{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}},
           {{{0, 0, 0}, {0, 0, 1}, {0, 1, 0}}}),
        // VIII
        mk({{{1, 0, 0}, {0, 0, 0}, {0, 0, 0}}}, {{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}},
           {{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}}),
    };
}

namespace {

i64 uniform_residue(std::mt19937_64& rng, i64 p) {
    const std::uint64_t limit =
        std::numeric_limits<std::uint64_t>::max() -
        std::numeric_limits<std::uint64_t>::max() % static_cast<std::uint64_t>(p);
    for (;;) {
        std::uint64_t r = rng();
        if (r < limit) return static_cast<i64>(r % static_cast<std::uint64_t>(p));
    }
}

} // namespace

Net random_net(const FieldCtx& F, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const i64 p = F.p();
    for (;;) {
        std::array<Row6, 3> rows;
        for (auto& r : rows)
            for (auto& v : r) v = uniform_residue(rng, p);
        if (linalg::rref6({rows[0], rows[1], rows[2]}, p).size() != 3) continue;
        return net_from_rows(F, rows);
    }
}

Mat3i random_gl3(const FieldCtx& F, std::uint64_t seed) {
    std::mt19937_64 rng(seed ^ 0x5bf03635ULL);
    const i64 p = F.p();
    for (;;) {
        Mat3i M;
        for (auto& row : M)
            for (auto& v : row) v = uniform_residue(rng, p);
        if (sym::mat_det(M, p) != 0) return M;
    }
}

} // namespace cnets::nets
