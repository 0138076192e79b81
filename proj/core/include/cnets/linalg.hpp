#pragma once

#include <array>
#include <optional>
#include <vector>

#include "cnets/gf.hpp"

namespace cnets::linalg {

using gf::Fq;
using gf::FieldCtx;
using gf::i64;

using Vec3 = std::array<Fq, 3>;
using Mat3 = std::array<std::array<Fq, 3>, 3>;

inline Mat3 mat3_from_ints(const FieldCtx& F, const std::array<std::array<i64, 3>, 3>& m, int level = 1) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r[i][j] = F.from_int(m[i][j], level);
    return r;
}

inline Mat3 transpose(const Mat3& m) {
    Mat3 r = m;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r[i][j] = m[j][i];
    return r;
}

inline Mat3 mul(const Mat3& a, const Mat3& b) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Fq s = a[i][0] * b[0][j];
            s = s + a[i][1] * b[1][j];
            s = s + a[i][2] * b[2][j];
            r[i][j] = s;
        }
    return r;
}

inline Vec3 apply(const Mat3& m, const Vec3& v) {
    Vec3 r;
    for (int i = 0; i < 3; ++i) r[i] = m[i][0] * v[0] + m[i][1] * v[1] + m[i][2] * v[2];
    return r;
}

inline Fq det(const Mat3& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

inline std::optional<Mat3> inverse(const FieldCtx& F, const Mat3& m) {
    int level = m[0][0].level;
    for (const auto& row : m)
        for (const auto& e : row) level = std::max(level, e.level);
    // Gauss-Jordan on [m | I]
    std::array<std::array<Fq, 6>, 3> a;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            a[i][j] = F.embed(m[i][j], level);
            a[i][j + 3] = F.zero(level);
        }
        a[i][i + 3] = F.one(level);
    }
    for (int col = 0; col < 3; ++col) {
        int piv = -1;
        for (int r = col; r < 3; ++r)
            if (!a[r][col].is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) return std::nullopt;
        std::swap(a[piv], a[col]);
        Fq li = F.inv(a[col][col]);
        for (int j = 0; j < 6; ++j) a[col][j] = a[col][j] * li;
        for (int r = 0; r < 3; ++r) {
            if (r == col || a[r][col].is_zero()) continue;
            Fq c = a[r][col];
            for (int j = 0; j < 6; ++j) a[r][j] = a[r][j] - c * a[col][j];
        }
    }
    Mat3 inv;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) inv[i][j] = a[i][j + 3];
    return inv;
}

/// Rank of a matrix given as rows of arbitrary fixed width.
template <std::size_t W>
int rank_rows(const FieldCtx& F, std::vector<std::array<Fq, W>> rows) {
    int rank = 0;
    std::size_t col = 0;
    while (col < W && rank < static_cast<int>(rows.size())) {
        int piv = -1;
        for (std::size_t r = rank; r < rows.size(); ++r)
            if (!rows[r][col].is_zero()) {
                piv = static_cast<int>(r);
                break;
            }
        if (piv < 0) {
            ++col;
            continue;
        }
        std::swap(rows[piv], rows[rank]);
        Fq li = F.inv(rows[rank][col]);
        for (std::size_t j = col; j < W; ++j) rows[rank][j] = rows[rank][j] * li;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (static_cast<int>(r) == rank || rows[r][col].is_zero()) continue;
            Fq c = rows[r][col];
            for (std::size_t j = col; j < W; ++j) rows[r][j] = rows[r][j] - c * rows[rank][j];
        }
        ++rank;
        ++col;
    }
    return rank;
}

// ---------------------------------------------------------------------------
// Prime-field row spaces of width 6 (coordinates of Sym2(3) with the fixed
// ordering m11, m12, m13, m22, m23, m33). Used for subspace canonical forms.
// ---------------------------------------------------------------------------

using Row6 = std::array<i64, 6>;

/// Reduced row echelon form over F_p; zero rows dropped, rows ordered by
/// pivot column. Unique per row space.
inline std::vector<Row6> rref6(std::vector<Row6> rows, i64 p) {
    auto norm = [p](i64 v) { return ((v % p) + p) % p; };
    for (auto& r : rows)
        for (auto& v : r) v = norm(v);
    int rank = 0;
    for (int col = 0; col < 6 && rank < static_cast<int>(rows.size()); ++col) {
        int piv = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r)
            if (rows[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(rows[piv], rows[rank]);
        // scale pivot to 1
        i64 li = 1;
        {
            i64 a = rows[rank][col], t0 = 0, t1 = 1, r0 = p, r1 = a;
            while (r1 != 0) {
                i64 q = r0 / r1;
                std::swap(t0 -= q * t1, t1);
                std::swap(r0 -= q * r1, r1);
            }
            li = norm(t0);
        }
        for (int j = col; j < 6; ++j) rows[rank][j] = rows[rank][j] * li % p;
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            i64 c = rows[r][col];
            for (int j = col; j < 6; ++j) rows[r][j] = norm(rows[r][j] - c * rows[rank][j]);
        }
        ++rank;
    }
    rows.resize(rank);
    return rows;
}

/// General RREF over F_p on variable-width rows; zero rows dropped.
inline std::vector<std::vector<i64>> rref_rows(std::vector<std::vector<i64>> rows, i64 p) {
    auto norm = [p](i64 v) { return ((v % p) + p) % p; };
    if (rows.empty()) return rows;
    const std::size_t W = rows[0].size();
    for (auto& r : rows)
        for (auto& v : r) v = norm(v);
    int rank = 0;
    for (std::size_t col = 0; col < W && rank < static_cast<int>(rows.size()); ++col) {
        int piv = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r)
            if (rows[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(rows[piv], rows[rank]);
        i64 li;
        {
            i64 a = rows[rank][col], t0 = 0, t1 = 1, r0 = p, r1 = a;
            while (r1 != 0) {
                i64 q = r0 / r1;
                std::swap(t0 -= q * t1, t1);
                std::swap(r0 -= q * r1, r1);
            }
            li = norm(t0);
        }
        for (std::size_t j = col; j < W; ++j) rows[rank][j] = rows[rank][j] * li % p;
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            i64 c = rows[r][col];
            for (std::size_t j = col; j < W; ++j) rows[r][j] = norm(rows[r][j] - c * rows[rank][j]);
        }
        ++rank;
    }
    rows.resize(rank);
    return rows;
}

/// RREF basis of the orthogonal complement {v : r . v = 0 for all rows r}
/// under the standard dot product on the 6 coordinates.
inline std::vector<Row6> kernel6(const std::vector<Row6>& rows, i64 p) {
    auto rref = rref6(rows, p);
    auto norm = [p](i64 v) { return ((v % p) + p) % p; };
    std::array<int, 6> pivot_row;
    pivot_row.fill(-1);
    for (int r = 0; r < static_cast<int>(rref.size()); ++r)
        for (int c = 0; c < 6; ++c)
            if (rref[r][c] != 0) {
                pivot_row[c] = r;
                break;
            }
    std::vector<Row6> basis;
    for (int c = 0; c < 6; ++c) {
        if (pivot_row[c] >= 0) continue;
        Row6 v{};
        v[c] = 1;
        for (int pc = 0; pc < 6; ++pc)
            if (pivot_row[pc] >= 0) v[pc] = norm(-rref[pivot_row[pc]][c]);
        basis.push_back(v);
    }
    return rref6(basis, p);
}

/// Pack an RREF row list into one integer (base-p digits); rows of width 6,
/// at most 3 rows. Only valid when p^18 fits in 64 bits (p <= 11); the
/// oracle uses it at p = 5.
inline std::uint64_t pack_rows(const std::vector<Row6>& rows, i64 p) {
    std::uint64_t key = 0;
    for (const auto& r : rows)
        for (i64 v : r) key = key * static_cast<std::uint64_t>(p) + static_cast<std::uint64_t>(v);
    return key;
}

} // namespace cnets::linalg
