#pragma once

#include <array>
#include <cstdint>

#include "cnets/linalg.hpp"

namespace cnets::sym {

using gf::i64;
using linalg::Row6;

/// Raw 3x3 matrix of residues mod p (not necessarily symmetric).
using Mat3i = std::array<std::array<i64, 3>, 3>;

inline i64 norm(i64 v, i64 p) { return ((v % p) + p) % p; }

/// Packed symmetric coordinates (m11, m12, m13, m22, m23, m33).
inline constexpr int pack_index(int i, int j) {
    if (i > j) std::swap(i, j);
    if (i == 0) return j;          // 0,1,2
    if (i == 1) return 2 + j;      // 3,4
    return 5;
}

inline i64 entry(const Row6& s, int i, int j) { return s[pack_index(i, j)]; }

inline Row6 pack(const Mat3i& m, i64 p) {
    return Row6{norm(m[0][0], p), norm(m[0][1], p), norm(m[0][2], p),
                norm(m[1][1], p), norm(m[1][2], p), norm(m[2][2], p)};
}

inline Mat3i unpack(const Row6& s) {
    return Mat3i{{{s[0], s[1], s[2]}, {s[1], s[3], s[4]}, {s[2], s[4], s[5]}}};
}

inline bool is_symmetric(const Mat3i& m, i64 p) {
    return norm(m[0][1] - m[1][0], p) == 0 && norm(m[0][2] - m[2][0], p) == 0 &&
           norm(m[1][2] - m[2][1], p) == 0;
}

inline Mat3i mat_mul(const Mat3i& a, const Mat3i& b, i64 p) {
    Mat3i r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            r[i][j] = (a[i][0] * b[0][j] + a[i][1] * b[1][j] + a[i][2] * b[2][j]) % p;
    return r;
}

inline Mat3i mat_transpose(const Mat3i& a) {
    Mat3i r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r[i][j] = a[j][i];
    return r;
}

inline i64 mat_det(const Mat3i& m, i64 p) {
    i64 d = m[0][0] * ((m[1][1] * m[2][2] - m[1][2] * m[2][1]) % p) -
            m[0][1] * ((m[1][0] * m[2][2] - m[1][2] * m[2][0]) % p) +
            m[0][2] * ((m[1][0] * m[2][1] - m[1][1] * m[2][0]) % p);
    return norm(d, p);
}

/// Congruence action M^T S M on a packed symmetric matrix.
inline Row6 congruence(const Mat3i& M, const Row6& s, i64 p) {
    Mat3i d = unpack(s);
    Mat3i r = mat_mul(mat_mul(mat_transpose(M), d, p), M, p);
    return pack(r, p);
}

/// Rank of a packed symmetric matrix over F_p.
inline int sym_rank(const Row6& s, i64 p) {
    Mat3i m = unpack(s);
    int rank = 0;
    for (int col = 0; col < 3 && rank < 3; ++col) {
        int piv = -1;
        for (int r = rank; r < 3; ++r)
            if (norm(m[r][col], p) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[piv], m[rank]);
        // eliminate below and above
        i64 a = norm(m[rank][col], p);
        i64 inv = 1; // extended Euclid
        {
            i64 t0 = 0, t1 = 1, r0 = p, r1 = a;
            while (r1 != 0) {
                i64 q = r0 / r1;
                std::swap(t0 -= q * t1, t1);
                std::swap(r0 -= q * r1, r1);
            }
            inv = norm(t0, p);
        }
        for (int j = 0; j < 3; ++j) m[rank][j] = norm(m[rank][j] * inv, p);
        for (int r = 0; r < 3; ++r) {
            if (r == rank) continue;
            i64 c = norm(m[r][col], p);
            if (c == 0) continue;
            for (int j = 0; j < 3; ++j) m[r][j] = norm(m[r][j] - c * m[rank][j], p);
        }
        ++rank;
    }
    return rank;
}

} // namespace cnets::sym
