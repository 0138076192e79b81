#pragma once

// Independent derivation of the two generating invariants of ternary cubics
// (degrees 4 and 6) by linear algebra: an invariant is a polynomial in the
// 10 cubic coefficients annihilated by the six derivations induced by the
// off-diagonal sl3 generators, and isobaric of weight (d,d,d). Each graded
// piece here is 1-dimensional, so the kernel determines the invariantup to
// one scalar, which is fixed by making the coefficient vector a primitive
// integer vector whose first nonzero entry (in enumeration order) is
// positive.
//
// Self-contained on purpose: the production tables are validated against
// this recomputation, so it must not share code with them.

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace sl3oracle {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline constexpr u64 P = 2305843009213693951ull; // 2^61 - 1

inline u64 addm(u64 a, u64 b) { return (a + b) % P; }
inline u64 subm(u64 a, u64 b) { return (a + P - b % P) % P; }
inline u64 mulm(u64 a, u64 b) { return static_cast<u64>(static_cast<u128>(a) * b % P); }
inline u64 powm(u64 a, u64 e) {
    u64 r = 1;
    while (e) {
        if (e & 1) r = mulm(r, a);
        a = mulm(a, a);
        e >>= 1;
    }
    return r;
}
inline u64 invm(u64 a) { return powm(a, P - 2); }

// cubic monomial exponents, the project-wide fixed order
inline constexpr std::array<std::array<int, 3>, 10> cubic_monos = {{{3, 0, 0},
                                                                    {2, 1, 0},
                                                                    {2, 0, 1},
                                                                    {1, 2, 0},
                                                                    {1, 1, 1},
                                                                    {1, 0, 2},
                                                                    {0, 3, 0},
                                                                    {0, 2, 1},
                                                                    {0, 1, 2},
                                                                    {0, 0, 3}}};

using Expo = std::array<std::uint8_t, 10>; // exponent vector of a monomial in c_0..c_9

inline u64 expo_key(const Expo& e) {
    u64 k = 0;
    for (int i = 0; i < 10; ++i) k = (k << 4) | e[i];
    return k;
}

/// All degree-d monomials in the 10 coefficients with weight (d,d,d).
inline std::vector<Expo> isobaric_monomials(int degree) {
    std::vector<Expo> out;
    Expo cur{};
    auto rec = [&](auto&& self, int idx, int left, int wx, int wy, int wz) -> void {
        if (idx == 10) {
            if (left == 0 && wx == degree && wy == degree && wz == degree) out.push_back(cur);
            return;
        }
        for (int e = 0; e <= left; ++e) {
            int nx = wx + e * cubic_monos[idx][0];
            int ny = wy + e * cubic_monos[idx][1];
            int nz = wz + e * cubic_monos[idx][2];
            if (nx > degree || ny > degree || nz > degree) break;
            cur[idx] = static_cast<std::uint8_t>(e);
            self(self, idx + 1, left - e, nx, ny, nz);
        }
        cur[idx] = 0;
    };
    rec(rec, 0, degree, 0, 0, 0);
    return out;
}

struct Invariant {
    std::vector<Expo> monos;
    std::vector<long long> coeffs; // primitive integers, first nonzero positive
};

/// Derive the unique invariant of the given degree (4 or 6).
inline Invariant derive_invariant(int degree) {
    auto basis = isobaric_monomials(degree);
    const int n = static_cast<int>(basis.size());

    // coefficient-space derivations: for g = E_{ab}, delta F = v_b dF/dv_a,
    // so c_m picks up alpha_a * c_alpha for every alpha with
    // alpha - e_a + e_b = m.
    struct Move {
        int from;  // coefficient index alpha
        int to;    // coefficient index m
        int scale; // alpha_a
    };
    std::vector<std::vector<Move>> gens;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            if (a == b) continue;
            std::vector<Move> moves;
            for (int alpha = 0; alpha < 10; ++alpha) {
                if (cubic_monos[alpha][a] == 0) continue;
                std::array<int, 3> m = cubic_monos[alpha];
                m[a] -= 1;
                m[b] += 1;
                for (int mi = 0; mi < 10; ++mi)
                    if (cubic_monos[mi][0] == m[0] && cubic_monos[mi][1] == m[1] &&
                        cubic_monos[mi][2] == m[2])
                        moves.push_back({alpha, mi, cubic_monos[alpha][a]});
            }
            gens.push_back(std::move(moves));
        }

    // Rows of the linear system: coefficients of each target monomial in
    // D_g(sum x_e c^e) for each generator g.
    std::vector<std::vector<u64>> rows;
    for (const auto& moves : gens) {
        std::map<u64, std::vector<std::pair<int, u64>>> by_target; // target monomial -> (col, coeff)
        for (int col = 0; col < n; ++col) {
            const Expo& e = basis[col];
            // D(c^e) = sum_m e_m c^{e - delta_m} (T c)_m
            //        = sum over moves (from=alpha, to=m): e_m * scale * c^{e - delta_m + delta_alpha}
            for (const auto& mv : moves) {
                if (e[mv.to] == 0) continue;
                Expo t = e;
                t[mv.to] -= 1;
                t[mv.from] += 1;
                u64 coeff = mulm(e[mv.to] % P, static_cast<u64>(mv.scale));
                by_target[expo_key(t)].push_back({col, coeff});
            }
        }
        for (auto& [key, entries] : by_target) {
            std::vector<u64> row(n, 0);
            for (auto& [col, coeff] : entries) row[col] = addm(row[col], coeff);
            rows.push_back(std::move(row));
        }
    }

    // kernel of the stacked system by Gaussian elimination
    std::vector<std::vector<u64>> mat = rows;
    std::vector<int> pivot_of_col(n, -1);
    int rank = 0;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = rank; r < static_cast<int>(mat.size()); ++r)
            if (mat[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(mat[piv], mat[rank]);
        u64 li = invm(mat[rank][col]);
        for (int j = col; j < n; ++j) mat[rank][j] = mulm(mat[rank][j], li);
        for (int r = 0; r < static_cast<int>(mat.size()); ++r) {
            if (r == rank || mat[r][col] == 0) continue;
            u64 c = mat[r][col];
            for (int j = col; j < n; ++j) mat[r][j] = subm(mat[r][j], mulm(c, mat[rank][j]));
        }
        pivot_of_col[col] = rank;
        ++rank;
    }
    if (rank != n - 1) throw std::runtime_error("invariant space is not 1-dimensional");

    // free column = the one without a pivot
    int free_col = -1;
    for (int col = 0; col < n; ++col)
        if (pivot_of_col[col] < 0) free_col = col;
    std::vector<u64> v(n, 0);
    v[free_col] = 1;
    for (int col = 0; col < n; ++col) {
        int r = pivot_of_col[col];
        if (r < 0) continue;
        v[col] = subm(0, mat[r][free_col]); // x_col = -coef * x_free
    }

    // lift to a primitive integer vector: try small denominators
    auto lift_sym = [](u64 x) -> long long {
        return x > P / 2 ? -static_cast<long long>(P - x) : static_cast<long long>(x);
    };
    for (u64 den = 1; den <= 100000; ++den) {
        std::vector<long long> w(n);
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
            long long lifted = lift_sym(mulm(v[i], den));
            if (lifted > 100000000 || lifted < -100000000) ok = false;
            w[i] = lifted;
        }
        if (!ok) continue;
        long long g = 0;
        for (long long x : w) {
            long long a = x < 0 ? -x : x;
            while (a) {
                long long t = g % a;
                g = a;
                a = t;
            }
        }
        if (g == 0) throw std::runtime_error("kernel vector vanished");
        for (auto& x : w) x /= g;
        for (long long x : w) {
            if (x == 0) continue;
            if (x < 0)
                for (auto& y : w) y = -y;
            break;
        }
        Invariant inv;
        inv.monos = basis;
        inv.coeffs = std::move(w);
        return inv;
    }
    throw std::runtime_error("integer reconstruction failed");
}

} // namespace sl3oracle
