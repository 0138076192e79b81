#include "cnets/algebras.hpp"

#include <algorithm>
#include <cassert>

namespace cnets::algebras {

namespace {

i64 inv_mod(i64 a, i64 p) {
    i64 t0 = 0, t1 = 1, r0 = p, r1 = ((a % p) + p) % p;
    while (r1 != 0) {
        i64 q = r0 / r1;
        std::swap(t0 -= q * t1, t1);
        std::swap(r0 -= q * r1, r1);
    }
    return ((t0 % p) + p) % p;
}

using Vec7 = std::array<i64, 7>;

Vec7 mul_vec(const MultTable& T, const Vec7& u, const Vec7& v) {
    const i64 p = T.p;
    Vec7 out{};
    for (int a = 0; a < 7; ++a) {
        if (u[a] == 0) continue;
        for (int b = 0; b < 7; ++b) {
            if (v[b] == 0) continue;
            i64 s = u[a] * v[b] % p;
            for (int e = 0; e < 7; ++e) out[e] = (out[e] + s * T.c[a][b][e]) % p;
        }
    }
    return out;
}

void validate(const MultTable& T) {
    const i64 p = T.p;
    for (int a = 0; a < 7; ++a)
        for (int b = 0; b < 7; ++b)
            for (int e = 0; e < 7; ++e) {
                if (T.c[a][b][e] != T.c[b][a][e])
                    throw InvalidMultTable("structure constants are not commutative");
            }
    for (int b = 0; b < 7; ++b)
        for (int e = 0; e < 7; ++e)
            if (T.c[0][b][e] != (b == e ? 1 : 0))
                throw InvalidMultTable("basis element 0 is not a unit");
    // associativity on all basis triples
    for (int a = 0; a < 7; ++a)
        for (int b = 0; b < 7; ++b) {
            Vec7 ea{}, eb{};
            ea[a] = 1;
            eb[b] = 1;
            Vec7 ab = mul_vec(T, ea, eb);
            for (int cidx = 0; cidx < 7; ++cidx) {
                Vec7 ec{};
                ec[cidx] = 1;
                Vec7 lhs = mul_vec(T, ab, ec);
                Vec7 rhs = mul_vec(T, ea, mul_vec(T, eb, ec));
                if (lhs != rhs) throw InvalidMultTable("structure constants are not associative");
                (void)p;
            }
        }
}

} // namespace

MultTable make_mult_table(const FieldCtx& F,
                          const std::array<std::array<std::array<i64, 7>, 7>, 7>& constants) {
    MultTable T;
    T.p = F.p();
    for (int a = 0; a < 7; ++a)
        for (int b = 0; b < 7; ++b)
            for (int e = 0; e < 7; ++e) T.c[a][b][e] = sym::norm(constants[a][b][e], T.p);
    validate(T);
    return T;
}

int IdealGenerator::degree() const {
    switch (coeffs.size()) {
        case 3: return 1;
        case 6: return 2;
        case 10: return 3;
        default: throw std::invalid_argument("generator coefficient vector must have length 3, 6 or 10");
    }
}

QuadricSpace apolar_annihilator(const FieldCtx& F, const nets::Net& W) {
    // In packed coordinates the trace pairing is the standard dot product, so
    // the annihilator is the kernel of the canonical 3x6 matrix.
    return QuadricSpace{linalg::kernel6({W.canonical[0], W.canonical[1], W.canonical[2]}, F.p())};
}

MultTable structure_constants(const FieldCtx& F, const nets::Net& W) {
    MultTable T;
    T.p = F.p();
    for (int e = 0; e < 7; ++e) {
        T.c[0][e][e] = 1;
        T.c[e][0][e] = 1;
    }
    T.c[0][0][0] = 1;
    // x_a x_b = sum_i trace(S_ab A_i) e_i = sum_i (A_i)_{ab} e_i over the
    // canonical basis
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int i = 0; i < 3; ++i)
                T.c[1 + a][1 + b][4 + i] = sym::entry(W.canonical[i], a, b);
    // products touching m^2 vanish; already zero-initialized
    validate(T);
    return T;
}

MultTable quotient_algebra(const FieldCtx& F, const std::vector<IdealGenerator>& generators) {
    const i64 p = F.p();
    std::vector<std::vector<i64>> lin, quad;
    for (const auto& g : generators) {
        if (g.degree() == 1) lin.push_back(g.coeffs);
        if (g.degree() == 2) quad.push_back(g.coeffs);
    }
    if (!linalg::rref_rows(lin, p).empty())
        throw WrongHilbert("degree-1 generators make dim m/m^2 < 3");
    auto i2 = linalg::rref_rows(quad, p);
    if (i2.size() != 3)
        throw WrongHilbert("degree-2 part of the ideal must have dimension 3, got " +
                           std::to_string(i2.size()));

    // normal forms: the three non-pivot quadric monomials survive
    std::array<int, 6> pivot_row;
    pivot_row.fill(-1);
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 6; ++c)
            if (i2[r][c] != 0) {
                pivot_row[c] = r;
                break;
            }
    std::vector<int> free_cols;
    for (int c = 0; c < 6; ++c)
        if (pivot_row[c] < 0) free_cols.push_back(c);
    assert(free_cols.size() == 3);

    // reduction of each quadric monomial to the free-monomial basis
    std::array<std::array<i64, 3>, 6> red{};
    for (int c = 0; c < 6; ++c) {
        if (pivot_row[c] < 0) {
            for (int k = 0; k < 3; ++k) red[c][k] = (free_cols[k] == c) ? 1 : 0;
        } else {
            const auto& row = i2[pivot_row[c]];
            for (int k = 0; k < 3; ++k) red[c][k] = sym::norm(-row[free_cols[k]], p);
        }
    }

    MultTable T;
    T.p = p;
    for (int e = 0; e < 7; ++e) {
        T.c[0][e][e] = 1;
        T.c[e][0][e] = 1;
    }
    T.c[0][0][0] = 1;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            int qi = sym::pack_index(a, b);
            for (int k = 0; k < 3; ++k) T.c[1 + a][1 + b][4 + k] = red[qi][k];
        }
    validate(T);
    return T;
}

bool ideal_fills_cubics(const FieldCtx& F, const std::vector<IdealGenerator>& generators) {
    const i64 p = F.p();
    std::vector<std::vector<i64>> cubics;
    for (const auto& g : generators) {
        if (g.degree() == 3) cubics.push_back(g.coeffs);
        if (g.degree() != 2) continue;
        // multiply the quadric by x, y, z
        std::array<i64, 6> q;
        std::copy(g.coeffs.begin(), g.coeffs.end(), q.begin());
        auto Q = forms::quadric_from_ints(F, q);
        for (int var = 0; var < 3; ++var) {
            std::array<i64, 3> l{};
            l[var] = 1;
            auto prod = forms::mul(F, Q, forms::linear_from_ints(F, l));
            std::vector<i64> row(10);
            for (int i = 0; i < 10; ++i) row[i] = prod.c[i].c[0];
            cubics.push_back(std::move(row));
        }
    }
    return linalg::rref_rows(cubics, p).size() == 10;
}

HilbertVector hilbert_vector(const FieldCtx& F, const MultTable& T) {
    validate(T);
    const i64 p = F.p();
    if (p == 7)
        throw CharacteristicObstruction("residue projection divides by the rank 7 = 0 mod p");
    const i64 inv7 = inv_mod(7, p);

    // lambda_i = trace(L_{b_i}) / 7; in a local algebra every left
    // multiplication is scalar + nilpotent
    std::array<i64, 7> lambda{};
    for (int i = 0; i < 7; ++i) {
        i64 tr = 0;
        for (int b = 0; b < 7; ++b) tr += T.c[i][b][b];
        lambda[i] = tr % p * inv7 % p;
    }
    // m = ker phi, phi(x) = sum lambda_i x_i (note lambda_0 = 1)
    auto phi = [&](const Vec7& x) {
        i64 s = 0;
        for (int i = 0; i < 7; ++i) s += lambda[i] * x[i];
        return sym::norm(s, p);
    };
    std::vector<Vec7> mgens;
    for (int i = 1; i < 7; ++i) {
        Vec7 v{};
        v[i] = 1;
        v[0] = sym::norm(-lambda[i], p);
        mgens.push_back(v);
    }
    // m must be an ideal: products of generators with every basis element stay
    // in ker phi
    for (const auto& v : mgens)
        for (int b = 0; b < 7; ++b) {
            Vec7 eb{};
            eb[b] = 1;
            if (phi(mul_vec(T, v, eb)) != 0)
                throw NotLocal("candidate maximal ideal is not an ideal");
        }

    auto to_rows = [](const std::vector<Vec7>& vs) {
        std::vector<std::vector<i64>> rows;
        for (const auto& v : vs) rows.push_back(std::vector<i64>(v.begin(), v.end()));
        return rows;
    };
    auto from_rows = [](const std::vector<std::vector<i64>>& rows) {
        std::vector<Vec7> vs;
        for (const auto& r : rows) {
            Vec7 v{};
            std::copy(r.begin(), r.end(), v.begin());
            vs.push_back(v);
        }
        return vs;
    };

    std::vector<int> dims; // dim m^1, m^2, ...
    std::vector<Vec7> power = from_rows(linalg::rref_rows(to_rows(mgens), p));
    dims.push_back(static_cast<int>(power.size()));
    for (int k = 2; k <= 8 && !power.empty(); ++k) {
        std::vector<Vec7> next;
        for (const auto& u : power)
            for (const auto& v : mgens) next.push_back(mul_vec(T, u, v));
        power = from_rows(linalg::rref_rows(to_rows(next), p));
        dims.push_back(static_cast<int>(power.size()));
        if (k == 8 && !power.empty())
            throw NotLocal("maximal-ideal filtration does not terminate");
    }
    HilbertVector h;
    for (size_t i = 0; i + 1 < dims.size(); ++i) {
        int d = dims[i] - dims[i + 1];
        h.d.push_back(d);
    }
    while (!h.d.empty() && h.d.back() == 0) h.d.pop_back();
    // sanity: 1 + sum d_i = 7
    int total = 1;
    for (int d : h.d) total += d;
    if (total != 7) throw NotLocal("filtration dimensions are inconsistent");
    return h;
}

nets::Net recover_net(const FieldCtx& F, const MultTable& T) {
    auto h = hilbert_vector(F, T);
    if (!(h == HilbertVector{{3, 3}})) throw NotType33("algebra does not have Hilbert vector (3,3)");
    const i64 p = F.p();
    const i64 inv7 = inv_mod(7, p);
    std::array<i64, 7> lambda{};
    for (int i = 0; i < 7; ++i) {
        i64 tr = 0;
        for (int b = 0; b < 7; ++b) tr += T.c[i][b][b];
        lambda[i] = tr % p * inv7 % p;
    }
    std::vector<Vec7> mgens;
    for (int i = 1; i < 7; ++i) {
        Vec7 v{};
        v[i] = 1;
        v[0] = sym::norm(-lambda[i], p);
        mgens.push_back(v);
    }
    // m^2 in RREF
    std::vector<std::vector<i64>> sq_rows;
    for (const auto& u : mgens)
        for (const auto& v : mgens) {
            auto w = mul_vec(T, u, v);
            sq_rows.push_back(std::vector<i64>(w.begin(), w.end()));
        }
    auto m2 = linalg::rref_rows(sq_rows, p);
    assert(m2.size() == 3);
    std::array<int, 7> m2_pivot;
    m2_pivot.fill(-1);
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 7; ++c)
            if (m2[r][c] != 0) {
                m2_pivot[c] = r;
                break;
            }
    // coordinates of a vector of m^2 in the RREF basis
    auto m2_coords = [&](const Vec7& w) {
        std::array<i64, 3> alpha{};
        for (int c = 0; c < 7; ++c)
            if (m2_pivot[c] >= 0) alpha[m2_pivot[c]] = w[c];
        // verify membership
        Vec7 check{};
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 7; ++c)
                check[c] = sym::norm(check[c] + alpha[r] * m2[r][c], p);
        if (!(check == w)) throw NotType33("product does not lie in m^2");
        return alpha;
    };
    // complement of m^2 inside m: greedily extend the RREF of m^2 by
    // generators of m
    std::vector<std::vector<i64>> ext = m2;
    std::vector<Vec7> xbar;
    for (const auto& v : mgens) {
        auto trial = ext;
        trial.push_back(std::vector<i64>(v.begin(), v.end()));
        auto r = linalg::rref_rows(trial, p);
        if (r.size() > ext.size()) {
            ext = r;
            xbar.push_back(v);
        }
        if (xbar.size() == 3) break;
    }
    assert(xbar.size() == 3);
    // the three symmetric matrices of the multiplication map
    std::array<sym::Mat3i, 3> mats{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            auto alpha = m2_coords(mul_vec(T, xbar[i], xbar[j]));
            for (int k = 0; k < 3; ++k) mats[k][i][j] = alpha[k];
        }
    return nets::make_net(F, mats[0], mats[1], mats[2]);
}

nets::OrbitLabel classify_algebra(const FieldCtx& F, const MultTable& T) {
    return nets::classify_net(F, recover_net(F, T));
}

} // namespace cnets::algebras
