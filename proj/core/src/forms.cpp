#include "cnets/forms.hpp"

#include <algorithm>
#include <cassert>
#include <variant>

namespace cnets::forms {

namespace {

int quadric_index(int a, int b, int c) {
    for (int i = 0; i < 6; ++i)
        if (quadric_monomials[i][0] == a && quadric_monomials[i][1] == b && quadric_monomials[i][2] == c)
            return i;
    return -1;
}

int cubic_index(int a, int b, int c) {
    for (int i = 0; i < 10; ++i)
        if (cubic_monomials[i][0] == a && cubic_monomials[i][1] == b && cubic_monomials[i][2] == c)
            return i;
    return -1;
}

int common_level(std::initializer_list<int> levels) {
    int m = 1;
    for (int l : levels) m = std::max(m, l);
    return m;
}

} // namespace

// --- points -------------------------------------------------------------------

ProjPoint make_point(const FieldCtx& F, std::array<Fq, 3> coords) {
    int level = common_level({coords[0].level, coords[1].level, coords[2].level});
    for (auto& v : coords) v = F.embed(v, level);
    int i0 = -1;
    for (int i = 0; i < 3; ++i)
        if (!coords[i].is_zero()) {
            i0 = i;
            break;
        }
    if (i0 < 0) throw std::invalid_argument("projective point needs a nonzero coordinate");
    Fq s = F.inv(coords[i0]);
    for (auto& v : coords) v = v * s;
    // drop to the minimal field of definition
    for (int sub : {1, 2, 3}) {
        if (sub >= level || level % sub != 0 || !F.has_level(sub)) continue;
        bool in = coords[0].is_in_sublevel(sub) && coords[1].is_in_sublevel(sub) &&
                  coords[2].is_in_sublevel(sub);
        if (in) {
            for (auto& v : coords) v = F.project(v, sub);
            level = sub;
            break;
        }
    }
    return ProjPoint{level, coords};
}

P1Point make_p1_point(const FieldCtx& F, std::array<Fq, 2> coords) {
    int level = common_level({coords[0].level, coords[1].level});
    for (auto& v : coords) v = F.embed(v, level);
    int i0 = coords[0].is_zero() ? (coords[1].is_zero() ? -1 : 1) : 0;
    if (i0 < 0) throw std::invalid_argument("projective point needs a nonzero coordinate");
    Fq s = F.inv(coords[i0]);
    for (auto& v : coords) v = v * s;
    for (int sub : {1, 2, 3}) {
        if (sub >= level || level % sub != 0 || !F.has_level(sub)) continue;
        if (coords[0].is_in_sublevel(sub) && coords[1].is_in_sublevel(sub)) {
            for (auto& v : coords) v = F.project(v, sub);
            level = sub;
            break;
        }
    }
    return P1Point{level, coords};
}

bool operator==(const ProjPoint& a, const ProjPoint& b) {
    if (a.level != b.level) return false;
    for (int i = 0; i < 3; ++i)
        if (!(a.x[i] == b.x[i])) return false;
    return true;
}

bool operator<(const ProjPoint& a, const ProjPoint& b) {
    if (a.level != b.level) return a.level < b.level;
    for (int i = 0; i < 3; ++i) {
        if (a.x[i] < b.x[i]) return true;
        if (b.x[i] < a.x[i]) return false;
    }
    return false;
}

bool operator==(const P1Point& a, const P1Point& b) {
    return a.level == b.level && a.x[0] == b.x[0] && a.x[1] == b.x[1];
}

bool operator<(const P1Point& a, const P1Point& b) {
    if (a.level != b.level) return a.level < b.level;
    if (a.x[0] < b.x[0]) return true;
    if (b.x[0] < a.x[0]) return false;
    return a.x[1] < b.x[1];
}

// --- construction ---------------------------------------------------------------

TernaryCubic cubic_zero(const FieldCtx& F, int level) {
    TernaryCubic f;
    f.c.fill(F.zero(level));
    return f;
}

TernaryQuadric quadric_zero(const FieldCtx& F, int level) {
    TernaryQuadric f;
    f.c.fill(F.zero(level));
    return f;
}

TernaryCubic cubic_from_ints(const FieldCtx& F, const std::array<i64, 10>& v) {
    TernaryCubic f;
    for (int i = 0; i < 10; ++i) f.c[i] = F.from_int(v[i]);
    return f;
}

TernaryQuadric quadric_from_ints(const FieldCtx& F, const std::array<i64, 6>& v) {
    TernaryQuadric f;
    for (int i = 0; i < 6; ++i) f.c[i] = F.from_int(v[i]);
    return f;
}

LinearForm linear_from_ints(const FieldCtx& F, const std::array<i64, 3>& v) {
    LinearForm f;
    for (int i = 0; i < 3; ++i) f.c[i] = F.from_int(v[i]);
    return f;
}

bool is_zero(const TernaryCubic& f) {
    return std::all_of(f.c.begin(), f.c.end(), [](const Fq& v) { return v.is_zero(); });
}
bool is_zero(const TernaryQuadric& f) {
    return std::all_of(f.c.begin(), f.c.end(), [](const Fq& v) { return v.is_zero(); });
}
bool is_zero(const BinaryCubic& f) {
    return std::all_of(f.c.begin(), f.c.end(), [](const Fq& v) { return v.is_zero(); });
}

int level_of(const TernaryCubic& f) {
    int m = 1;
    for (const auto& v : f.c) m = std::max(m, v.level);
    return m;
}

TernaryCubic normalized(const FieldCtx& F, const TernaryCubic& f) {
    for (const auto& v : f.c) {
        if (v.is_zero()) continue;
        Fq s = F.inv(v);
        TernaryCubic g = f;
        for (auto& w : g.c) w = w * s;
        return g;
    }
    return f;
}

bool proportional(const TernaryCubic& f, const TernaryCubic& g) {
    // all 2x2 minors of the coefficient pair vanish, and zero patterns agree
    for (int i = 0; i < 10; ++i)
        for (int j = i + 1; j < 10; ++j)
            if (!(f.c[i] * g.c[j] == f.c[j] * g.c[i])) return false;
    // rule out (nonzero, zero) pairs
    bool fz = is_zero(f), gz = is_zero(g);
    return fz == gz;
}

bool equal(const TernaryCubic& f, const TernaryCubic& g) {
    for (int i = 0; i < 10; ++i)
        if (!(f.c[i] == g.c[i])) return false;
    return true;
}

// --- evaluation -----------------------------------------------------------------

namespace {

template <std::size_t N, std::size_t M>
Fq eval_monomials(const FieldCtx& F, const std::array<Fq, N>& coeff,
                  const std::array<std::array<int, 3>, M>& mono, const std::array<Fq, 3>& v) {
    static_assert(N == M);
    int level = common_level({coeff[0].level, v[0].level, v[1].level, v[2].level});
    for (const auto& cc : coeff) level = std::max(level, cc.level);
    // power tables up to 3
    std::array<std::array<Fq, 4>, 3> pw;
    for (int i = 0; i < 3; ++i) {
        pw[i][0] = F.one(level);
        pw[i][1] = F.embed(v[i], level);
        pw[i][2] = pw[i][1] * pw[i][1];
        pw[i][3] = pw[i][2] * pw[i][1];
    }
    Fq acc = F.zero(level);
    for (std::size_t m = 0; m < N; ++m) {
        if (coeff[m].is_zero()) continue;
        Fq term = F.embed(coeff[m], level) * pw[0][mono[m][0]];
        term = term * pw[1][mono[m][1]];
        term = term * pw[2][mono[m][2]];
        acc = acc + term;
    }
    return acc;
}

} // namespace

Fq eval_at(const FieldCtx& F, const TernaryCubic& f, const std::array<Fq, 3>& v) {
    return eval_monomials(F, f.c, cubic_monomials, v);
}
Fq eval_at(const FieldCtx& F, const TernaryQuadric& f, const std::array<Fq, 3>& v) {
    return eval_monomials(F, f.c, quadric_monomials, v);
}
Fq eval(const FieldCtx& F, const TernaryCubic& f, const ProjPoint& P) { return eval_at(F, f, P.x); }
Fq eval(const FieldCtx& F, const TernaryQuadric& f, const ProjPoint& P) {
    return eval_at(F, f, P.x);
}

std::array<TernaryQuadric, 3> partials(const FieldCtx& F, const TernaryCubic& f) {
    int level = level_of(f);
    std::array<TernaryQuadric, 3> d{quadric_zero(F, level), quadric_zero(F, level),
                                    quadric_zero(F, level)};
    for (int m = 0; m < 10; ++m) {
        if (f.c[m].is_zero()) continue;
        const auto& e = cubic_monomials[m];
        for (int var = 0; var < 3; ++var) {
            if (e[var] == 0) continue;
            std::array<int, 3> g = {e[0], e[1], e[2]};
            g[var] -= 1;
            int qi = quadric_index(g[0], g[1], g[2]);
            d[var].c[qi] = d[var].c[qi] + F.from_int(e[var], 1) * f.c[m];
        }
    }
    return d;
}

// --- products, composition, division ---------------------------------------------

TernaryQuadric mul(const FieldCtx& F, const LinearForm& a, const LinearForm& b) {
    int level = common_level({a.c[0].level, b.c[0].level});
    for (const auto& v : a.c) level = std::max(level, v.level);
    for (const auto& v : b.c) level = std::max(level, v.level);
    TernaryQuadric r = quadric_zero(F, level);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            std::array<int, 3> e{};
            e[i] += 1;
            e[j] += 1;
            int qi = quadric_index(e[0], e[1], e[2]);
            r.c[qi] = r.c[qi] + a.c[i] * b.c[j];
        }
    return r;
}

TernaryCubic mul(const FieldCtx& F, const TernaryQuadric& a, const LinearForm& b) {
    int level = 1;
    for (const auto& v : a.c) level = std::max(level, v.level);
    for (const auto& v : b.c) level = std::max(level, v.level);
    TernaryCubic r = cubic_zero(F, level);
    for (int m = 0; m < 6; ++m) {
        if (a.c[m].is_zero()) continue;
        for (int j = 0; j < 3; ++j) {
            if (b.c[j].is_zero()) continue;
            std::array<int, 3> e = quadric_monomials[m];
            e[j] += 1;
            int ci = cubic_index(e[0], e[1], e[2]);
            r.c[ci] = r.c[ci] + a.c[m] * b.c[j];
        }
    }
    return r;
}

TernaryCubic scale(const FieldCtx& F, const TernaryCubic& f, const Fq& s) {
    (void)F;
    TernaryCubic g = f;
    for (auto& v : g.c) v = v * s;
    return g;
}

namespace {

// rows of M as linear forms: (f . M) built by expanding each monomial
std::array<LinearForm, 3> substitution_rows(const Mat3& M) {
    std::array<LinearForm, 3> rows;
    for (int i = 0; i < 3; ++i) rows[i].c = {M[i][0], M[i][1], M[i][2]};
    return rows;
}

} // namespace

TernaryCubic compose(const FieldCtx& F, const TernaryCubic& f, const Mat3& M) {
    int level = level_of(f);
    for (const auto& row : M)
        for (const auto& v : row) level = std::max(level, v.level);
    auto rows = substitution_rows(M);
    TernaryCubic out = cubic_zero(F, level);
    for (int m = 0; m < 10; ++m) {
        if (f.c[m].is_zero()) continue;
        const auto& e = cubic_monomials[m];
        // product of the three linear substitutions for this monomial
        std::array<const LinearForm*, 3> fs{};
        int n = 0;
        for (int var = 0; var < 3; ++var)
            for (int k = 0; k < e[var]; ++k) fs[n++] = &rows[var];
        TernaryQuadric q = mul(F, *fs[0], *fs[1]);
        TernaryCubic cube = mul(F, q, *fs[2]);
        for (int i = 0; i < 10; ++i) out.c[i] = out.c[i] + f.c[m] * cube.c[i];
    }
    return out;
}

TernaryQuadric compose(const FieldCtx& F, const TernaryQuadric& f, const Mat3& M) {
    int level = 1;
    for (const auto& v : f.c) level = std::max(level, v.level);
    for (const auto& row : M)
        for (const auto& v : row) level = std::max(level, v.level);
    auto rows = substitution_rows(M);
    TernaryQuadric out = quadric_zero(F, level);
    for (int m = 0; m < 6; ++m) {
        if (f.c[m].is_zero()) continue;
        const auto& e = quadric_monomials[m];
        std::array<const LinearForm*, 2> fs{};
        int n = 0;
        for (int var = 0; var < 3; ++var)
            for (int k = 0; k < e[var]; ++k) fs[n++] = &rows[var];
        TernaryQuadric q = mul(F, *fs[0], *fs[1]);
        for (int i = 0; i < 6; ++i) out.c[i] = out.c[i] + f.c[m] * q.c[i];
    }
    return out;
}

std::pair<Vec3, Vec3> line_span(const FieldCtx& F, const LinearForm& l) {
    int level = common_level({l.c[0].level, l.c[1].level, l.c[2].level});
    auto u = F.embed(l.c[0], level), v = F.embed(l.c[1], level), w = F.embed(l.c[2], level);
    Fq zero = F.zero(level), one = F.one(level);
    if (!u.is_zero()) {
        Fq iu = F.inv(u);
        return {Vec3{-(v * iu), one, zero}, Vec3{-(w * iu), zero, one}};
    }
    if (!v.is_zero()) {
        Fq iv = F.inv(v);
        return {Vec3{one, zero, zero}, Vec3{zero, -(w * iv), one}};
    }
    if (!w.is_zero()) return {Vec3{one, zero, zero}, Vec3{zero, one, zero}};
    throw std::invalid_argument("zero linear form has no line");
}

namespace {

// change of basis with (l . M) = x: column 0 maps to a vector where l = 1,
// columns 1,2 span ker l
Mat3 division_basis(const FieldCtx& F, const LinearForm& l) {
    int level = common_level({l.c[0].level, l.c[1].level, l.c[2].level});
    std::array<Fq, 3> lc = {F.embed(l.c[0], level), F.embed(l.c[1], level), F.embed(l.c[2], level)};
    int i0 = -1;
    for (int i = 0; i < 3; ++i)
        if (!lc[i].is_zero()) {
            i0 = i;
            break;
        }
    if (i0 < 0) throw std::invalid_argument("division by the zero form");
    Fq inv0 = F.inv(lc[i0]);
    Mat3 M;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) M[i][j] = F.zero(level);
    // column 0: e_{i0} / l_{i0}
    M[i0][0] = inv0;
    // columns 1,2: e_j - (l_j / l_{i0}) e_{i0} for j != i0
    int col = 1;
    for (int j = 0; j < 3; ++j) {
        if (j == i0) continue;
        M[j][col] = F.one(level);
        M[i0][col] = -(lc[j] * inv0);
        ++col;
    }
    return M;
}

} // namespace

std::optional<TernaryQuadric> divide_by_linear(const FieldCtx& F, const TernaryCubic& f,
                                               const LinearForm& l) {
    Mat3 M = division_basis(F, l);
    TernaryCubic G = compose(F, f, M);
    // divisible by x iff no monomial free of x survives
    for (int idx : {6, 7, 8, 9})
        if (!G.c[idx].is_zero()) return std::nullopt;
    TernaryQuadric Q;
    Q.c = {G.c[0], G.c[1], G.c[2], G.c[3], G.c[4], G.c[5]};
    auto Minv = linalg::inverse(F, M);
    return compose(F, Q, *Minv);
}

std::optional<LinearForm> divide_by_linear(const FieldCtx& F, const TernaryQuadric& f,
                                           const LinearForm& l) {
    Mat3 M = division_basis(F, l);
    TernaryQuadric G = compose(F, f, M);
    for (int idx : {3, 4, 5})
        if (!G.c[idx].is_zero()) return std::nullopt;
    // quotient x-coefficients, then substitute back: row covector times M^{-1}
    auto Minv = linalg::inverse(F, M);
    LinearForm q;
    for (int j = 0; j < 3; ++j)
        q.c[j] = G.c[0] * (*Minv)[0][j] + G.c[1] * (*Minv)[1][j] + G.c[2] * (*Minv)[2][j];
    return q;
}

BinaryCubic restrict_to_line(const FieldCtx& F, const TernaryCubic& f, const Vec3& P0,
                             const Vec3& P1) {
    Fq b0 = eval_at(F, f, P0);
    Fq b3 = eval_at(F, f, P1);
    std::array<Fq, 3> plus{P0[0] + P1[0], P0[1] + P1[1], P0[2] + P1[2]};
    std::array<Fq, 3> minus{P0[0] - P1[0], P0[1] - P1[1], P0[2] - P1[2]};
    Fq s1 = eval_at(F, f, plus) - b0 - b3;
    Fq s2 = eval_at(F, f, minus) - b0 + b3;
    Fq half = F.inv(F.from_int(2));
    BinaryCubic r;
    r.c[0] = b0;
    r.c[1] = (s1 - s2) * half;
    r.c[2] = (s1 + s2) * half;
    r.c[3] = b3;
    return r;
}

BinaryQuadratic restrict_to_line(const FieldCtx& F, const TernaryQuadric& f, const Vec3& P0,
                                 const Vec3& P1) {
    Fq b0 = eval_at(F, f, P0);
    Fq b2 = eval_at(F, f, P1);
    std::array<Fq, 3> plus{P0[0] + P1[0], P0[1] + P1[1], P0[2] + P1[2]};
    Fq b1 = eval_at(F, f, plus) - b0 - b2;
    return BinaryQuadratic{{b0, b1, b2}};
}

TernaryCubic hessian(const FieldCtx& F, const TernaryCubic& f) {
    int level = level_of(f);
    auto lf = [&](std::array<Fq, 3> c) {
        LinearForm l;
        l.c = c;
        return l;
    };
    auto ci = [&](int i) { return F.embed(f.c[i], level); };
    auto k = [&](int n) { return F.from_int(n, level); };
    LinearForm fxx = lf({k(6) * ci(0), k(2) * ci(1), k(2) * ci(2)});
    LinearForm fxy = lf({k(2) * ci(1), k(2) * ci(3), ci(4)});
    LinearForm fxz = lf({k(2) * ci(2), ci(4), k(2) * ci(5)});
    LinearForm fyy = lf({k(2) * ci(3), k(6) * ci(6), k(2) * ci(7)});
    LinearForm fyz = lf({ci(4), k(2) * ci(7), k(2) * ci(8)});
    LinearForm fzz = lf({k(2) * ci(5), k(2) * ci(8), k(6) * ci(9)});
    auto sub = [&](const TernaryQuadric& a, const TernaryQuadric& b) {
        TernaryQuadric r = a;
        for (int i = 0; i < 6; ++i) r.c[i] = a.c[i] - b.c[i];
        return r;
    };
    auto subc = [&](const TernaryCubic& a, const TernaryCubic& b) {
        TernaryCubic r = a;
        for (int i = 0; i < 10; ++i) r.c[i] = a.c[i] - b.c[i];
        return r;
    };
    TernaryCubic t1 = mul(F, sub(mul(F, fyy, fzz), mul(F, fyz, fyz)), fxx);
    TernaryCubic t2 = mul(F, sub(mul(F, fxy, fzz), mul(F, fyz, fxz)), fxy);
    TernaryCubic t3 = mul(F, sub(mul(F, fxy, fyz), mul(F, fyy, fxz)), fxz);
    TernaryCubic r = subc(t1, t2);
    for (int i = 0; i < 10; ++i) r.c[i] = r.c[i] + t3.c[i];
    return r;
}

Mat3 quadric_matrix(const FieldCtx& F, const TernaryQuadric& q) {
    int level = 1;
    for (const auto& v : q.c) level = std::max(level, v.level);
    Fq half = F.inv(F.from_int(2, level));
    Mat3 m;
    m[0][0] = F.embed(q.c[0], level);
    m[1][1] = F.embed(q.c[3], level);
    m[2][2] = F.embed(q.c[5], level);
    m[0][1] = m[1][0] = F.embed(q.c[1], level) * half;
    m[0][2] = m[2][0] = F.embed(q.c[2], level) * half;
    m[1][2] = m[2][1] = F.embed(q.c[4], level) * half;
    return m;
}

TernaryQuadric quadric_from_matrix(const FieldCtx& F, const Mat3& m) {
    (void)F;
    TernaryQuadric q;
    Fq two = F.from_int(2, m[0][0].level);
    q.c[0] = m[0][0];
    q.c[1] = two * m[0][1];
    q.c[2] = two * m[0][2];
    q.c[3] = m[1][1];
    q.c[4] = two * m[1][2];
    q.c[5] = m[2][2];
    return q;
}

// --- binary roots ----------------------------------------------------------------

BinaryRootList binary_roots(const FieldCtx& F, const BinaryCubic& f) {
    BinaryRootList out;
    if (is_zero(f)) {
        out.identically_zero = true;
        return out;
    }
    // multiplicity of [1:0] = index of the first nonzero coefficient
    int m_inf = 0;
    while (f.c[m_inf].is_zero()) ++m_inf;
    if (m_inf > 0) {
        P1Point p{1, {F.one(), F.zero()}};
        out.roots.emplace_back(p, m_inf);
    }
    // finite roots: g(t) = f(t,1), deg = 3 - m_inf, all roots in F_{p^6}
    const int lvl = 6;
    std::vector<Fq> g; // index = degree
    for (int d = 0; d <= 3 - m_inf; ++d) g.push_back(F.embed(f.c[3 - d], lvl));
    if (g.size() > 1) {
        auto roots = F.roots_in_level(g, lvl);
        for (const auto& r : roots) {
            // multiplicity by repeated synthetic division
            int mult = 0;
            std::vector<Fq> h = g;
            while (h.size() > 1) {
                std::vector<Fq> q(h.size() - 1, F.zero(lvl));
                Fq acc = F.zero(lvl);
                for (int d = static_cast<int>(h.size()) - 1; d >= 1; --d) {
                    acc = acc * r + h[d];
                    q[d - 1] = acc;
                }
                Fq rem = acc * r + h[0];
                if (!rem.is_zero()) break;
                ++mult;
                h = std::move(q);
            }
            out.roots.emplace_back(make_p1_point(F, {r, F.one(lvl)}), mult);
        }
    }
    std::sort(out.roots.begin(), out.roots.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    int total = 0;
    for (const auto& [p, m] : out.roots) total += m;
    assert(total == 3);
    return out;
}

// --- linear factors ---------------------------------------------------------------

namespace {

struct Residual {
    // degree 3 -> 2 -> 1 -> 0 as factors are peeled off
    std::variant<TernaryCubic, TernaryQuadric, LinearForm, Fq> v;

    int degree() const { return 3 - static_cast<int>(v.index()); }
};

// divide residual by l as many times as possible; returns multiplicity
int peel(const FieldCtx& F, Residual& r, const LinearForm& l) {
    int mult = 0;
    for (;;) {
        if (std::holds_alternative<TernaryCubic>(r.v)) {
            auto q = divide_by_linear(F, std::get<TernaryCubic>(r.v), l);
            if (!q) return mult;
            r.v = *q;
            ++mult;
        } else if (std::holds_alternative<TernaryQuadric>(r.v)) {
            auto q = divide_by_linear(F, std::get<TernaryQuadric>(r.v), l);
            if (!q) return mult;
            r.v = *q;
            ++mult;
        } else if (std::holds_alternative<LinearForm>(r.v)) {
            // proportionality test
            const auto& m = std::get<LinearForm>(r.v);
            int li = -1;
            for (int i = 0; i < 3; ++i)
                if (!l.c[i].is_zero()) {
                    li = i;
                    break;
                }
            bool prop = true;
            Fq ratio = m.c[li] / l.c[li];
            for (int i = 0; i < 3; ++i)
                if (!(m.c[i] == ratio * l.c[i])) prop = false;
            if (!prop || ratio.is_zero()) return mult;
            r.v = ratio;
            ++mult;
        } else {
            return mult;
        }
    }
}

} // namespace

LinearFactorization linear_factors(const FieldCtx& F, const TernaryCubic& f) {
    if (is_zero(f)) throw ZeroForm("linear_factors of the zero cubic");
    if (level_of(f) != 1) throw std::invalid_argument("linear_factors expects rational coefficients");
    LinearFactorization out;
    Residual res;
    res.v = f;
    int total = 0;
    for (int level : {1, 2, 3}) {
        if (total == 3) break;
        if (!F.has_level(level)) throw std::invalid_argument("field tower lacks level needed for factor search");
        for_each_p2_point(F, level, level > 1, [&](const std::array<Fq, 3>& dual) {
            if (total == 3) return;
            LinearForm l{dual};
            // cheap reject: f must vanish on the line
            auto [P0, P1] = line_span(F, l);
            if (!eval_at(F, f, P0).is_zero()) return;
            BinaryCubic r = restrict_to_line(F, f, P0, P1);
            if (!is_zero(r)) return;
            int mult = peel(F, res, l);
            assert(mult > 0);
            out.factors.emplace_back(l, mult);
            total += mult;
        });
    }
    if (total == 3) {
        out.unit = std::get<Fq>(res.v);
    } else if (total == 1) {
        out.quadric = std::get<TernaryQuadric>(res.v);
    } else {
        assert(total == 0);
        out.cubic = std::get<TernaryCubic>(res.v);
    }
    return out;
}

int conic_rank(const FieldCtx& F, const TernaryQuadric& q) {
    if (is_zero(q)) return 0;
    Mat3 m = quadric_matrix(F, q);
    std::vector<std::array<Fq, 3>> rows = {m[0], m[1], m[2]};
    return linalg::rank_rows<3>(F, rows);
}

std::vector<ProjPoint> singular_points(const FieldCtx& F, const TernaryCubic& f) {
    if (is_zero(f)) throw ZeroForm("singular_points of the zero cubic");
    if (level_of(f) != 1) throw std::invalid_argument("singular_points expects rational coefficients");
    auto fact = linear_factors(F, f);
    for (const auto& [l, m] : fact.factors)
        if (m >= 2) throw NonReducedInput("cubic has a repeated linear component");
    auto d = partials(F, f);
    std::vector<ProjPoint> found;
    for (int level : {1, 2, 3}) {
        for_each_p2_point(F, level, level > 1, [&](const std::array<Fq, 3>& pt) {
            if (!eval_at(F, f, pt).is_zero()) return;
            for (int i = 0; i < 3; ++i)
                if (!eval_at(F, d[i], pt).is_zero()) return;
            found.push_back(make_point(F, pt));
        });
    }
    std::sort(found.begin(), found.end());
    return found;
}

} // namespace cnets::forms
