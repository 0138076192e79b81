#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "cnets/gf.hpp"
#include "cnets/linalg.hpp"

namespace cnets::forms {

using gf::Fq;
using gf::FieldCtx;
using gf::i64;
using linalg::Mat3;
using linalg::Vec3;

// Fixed monomial orders; these are bit-exact in file formats.
//   cubic:   x^3, x^2y, x^2z, xy^2, xyz, xz^2, y^3, y^2z, yz^2, z^3
//   quadric: x^2, xy, xz, y^2, yz, z^2
//   linear:  x, y, z
inline constexpr std::array<std::array<int, 3>, 10> cubic_monomials = {{{3, 0, 0},
                                                                        {2, 1, 0},
                                                                        {2, 0, 1},
                                                                        {1, 2, 0},
                                                                        {1, 1, 1},
                                                                        {1, 0, 2},
                                                                        {0, 3, 0},
                                                                        {0, 2, 1},
                                                                        {0, 1, 2},
                                                                        {0, 0, 3}}};
inline constexpr std::array<std::array<int, 3>, 6> quadric_monomials = {
    {{2, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 2, 0}, {0, 1, 1}, {0, 0, 2}}};

struct LinearForm {
    std::array<Fq, 3> c;
};

struct TernaryQuadric {
    std::array<Fq, 6> c;
};

/// Homogeneous cubic in x, y, z; coefficients in the fixed monomial order.
struct TernaryCubic {
    std::array<Fq, 10> c;
};

/// c0 x^3 + c1 x^2 y + c2 x y^2 + c3 y^3.
struct BinaryCubic {
    std::array<Fq, 4> c;
};

/// c0 x^2 + c1 x y + c2 y^2 (internal helper degree).
struct BinaryQuadratic {
    std::array<Fq, 3> c;
};

/// Point of P^2(F_{p^level}), normalized so the first nonzero coordinate
/// is 1; equality is coordinate-wise.
struct ProjPoint {
    int level = 1;
    std::array<Fq, 3> x;

    friend bool operator==(const ProjPoint& a, const ProjPoint& b);
    friend bool operator<(const ProjPoint& a, const ProjPoint& b);
};

/// Point of P^1, same normalization.
struct P1Point {
    int level = 1;
    std::array<Fq, 2> x;

    friend bool operator==(const P1Point& a, const P1Point& b);
    friend bool operator<(const P1Point& a, const P1Point& b);
};

ProjPoint make_point(const FieldCtx& F, std::array<Fq, 3> coords);
P1Point make_p1_point(const FieldCtx& F, std::array<Fq, 2> coords);

// --- construction helpers ----------------------------------------------------

TernaryCubic cubic_zero(const FieldCtx& F, int level = 1);
TernaryQuadric quadric_zero(const FieldCtx& F, int level = 1);
TernaryCubic cubic_from_ints(const FieldCtx& F, const std::array<i64, 10>& v);
TernaryQuadric quadric_from_ints(const FieldCtx& F, const std::array<i64, 6>& v);
LinearForm linear_from_ints(const FieldCtx& F, const std::array<i64, 3>& v);

bool is_zero(const TernaryCubic& f);
bool is_zero(const TernaryQuadric& f);
bool is_zero(const BinaryCubic& f);
int level_of(const TernaryCubic& f);

/// Scale so the first nonzero coefficient (in the monomial order) is 1.
TernaryCubic normalized(const FieldCtx& F, const TernaryCubic& f);
bool proportional(const TernaryCubic& f, const TernaryCubic& g);
bool equal(const TernaryCubic& f, const TernaryCubic& g);

// --- evaluation and calculus -------------------------------------------------

Fq eval(const FieldCtx& F, const TernaryCubic& f, const ProjPoint& P);
Fq eval(const FieldCtx& F, const TernaryQuadric& f, const ProjPoint& P);
Fq eval_at(const FieldCtx& F, const TernaryCubic& f, const std::array<Fq, 3>& v);
Fq eval_at(const FieldCtx& F, const TernaryQuadric& f, const std::array<Fq, 3>& v);

/// Formal partials (dF/dx, dF/dy, dF/dz); Euler's identity
/// x Fx + y Fy + z Fz = 3 F holds.
std::array<TernaryQuadric, 3> partials(const FieldCtx& F, const TernaryCubic& f);

// --- algebra on forms ----------------------------------------------------------

TernaryQuadric mul(const FieldCtx& F, const LinearForm& a, const LinearForm& b);
TernaryCubic mul(const FieldCtx& F, const TernaryQuadric& a, const LinearForm& b);
TernaryCubic scale(const FieldCtx& F, const TernaryCubic& f, const Fq& s);

/// Substitution (f . M)(v) = f(M v).
TernaryCubic compose(const FieldCtx& F, const TernaryCubic& f, const Mat3& M);
TernaryQuadric compose(const FieldCtx& F, const TernaryQuadric& f, const Mat3& M);

/// Exact division by a linear form, or nullopt when it does not divide.
std::optional<TernaryQuadric> divide_by_linear(const FieldCtx& F, const TernaryCubic& f,
                                               const LinearForm& l);
std::optional<LinearForm> divide_by_linear(const FieldCtx& F, const TernaryQuadric& f,
                                           const LinearForm& l);

/// Restriction to the line spanned by P0, P1: g(s,t) = f(s P0 + t P1).
BinaryCubic restrict_to_line(const FieldCtx& F, const TernaryCubic& f, const Vec3& P0, const Vec3& P1);
BinaryQuadratic restrict_to_line(const FieldCtx& F, const TernaryQuadric& f, const Vec3& P0,
                                 const Vec3& P1);

/// Two points spanning the zero locus of a nonzero linear form.
std::pair<Vec3, Vec3> line_span(const FieldCtx& F, const LinearForm& l);

/// Determinant of the matrix of second partials (a cubic).
TernaryCubic hessian(const FieldCtx& F, const TernaryCubic& f);

/// Symmetric matrix of a quadric (c_ii = q_ii, c_ij = 2 q_ij for i < j).
Mat3 quadric_matrix(const FieldCtx& F, const TernaryQuadric& q);
TernaryQuadric quadric_from_matrix(const FieldCtx& F, const Mat3& m);

// --- spec operations -----------------------------------------------------------

struct BinaryRootList {
    bool identically_zero = false;
    /// (point, multiplicity), multiplicities summing to 3; points reported
    /// at their minimal field of definition, sorted.
    std::vector<std::pair<P1Point, int>> roots;
};

/// Complete projective roots of a binary cubic over the closure (all live in
/// F_{p^6}). Coefficients must be rational.
BinaryRootList binary_roots(const FieldCtx& F, const BinaryCubic& f);

struct LinearFactorization {
    /// Distinct linear factors over the closure with multiplicities,
    /// in dual-point enumeration order (levels 1, then 2, then 3).
    std::vector<std::pair<LinearForm, int>> factors;
    /// Exactly one of the three is set, by total multiplicity 3 / 1 / 0.
    std::optional<Fq> unit;
    std::optional<TernaryQuadric> quadric;
    std::optional<TernaryCubic> cubic;
    int total_multiplicity() const {
        int t = 0;
        for (const auto& [l, m] : factors) t += m;
        return t;
    }
};

/// All linear factors of a nonzero rational cubic, found by enumerating dual
/// points of P^2(F_{p^k}), k in {1,2,3}; complete because any linear factor
/// of a cubic is defined over a degree <= 3 extension. Throws ZeroForm.
LinearFactorization linear_factors(const FieldCtx& F, const TernaryCubic& f);

/// Rank (0..3) of the symmetric matrix of a quadric.
int conic_rank(const FieldCtx& F, const TernaryQuadric& q);

/// All singular points of a reduced rational cubic over the closure, found by
/// exhaustive search over P^2(F_{p^k}), k in {1,2,3} (a reduced cubic has at
/// most 3 singular points, a Galois-stable set, so each has degree <= 3).
/// Throws ZeroForm on 0 and NonReducedInput on a repeated component.
std::vector<ProjPoint> singular_points(const FieldCtx& F, const TernaryCubic& f);

// --- enumeration helpers -------------------------------------------------------

/// Visit every element of F_{p^level} (coefficient odometer order).
template <class Fn>
void for_each_element(const FieldCtx& F, int level, Fn&& fn) {
    const i64 p = F.p();
    Fq x = F.zero(level);
    for (;;) {
        fn(static_cast<const Fq&>(x));
        int i = 0;
        while (i < level) {
            if (++x.c[i] < p) break;
            x.c[i] = 0;
            ++i;
        }
        if (i == level) return;
    }
}

/// Visit normalized representatives of P^2(F_{p^level}): (1,a,b), (0,1,b),
/// (0,0,1). With skip_rational, charts skip points whose coordinates are all
/// constant (only meaningful for levels 2 and 3, whose unique proper subfield
/// is F_p).
template <class Fn>
void for_each_p2_point(const FieldCtx& F, int level, bool skip_rational, Fn&& fn) {
    const Fq one = F.one(level);
    const Fq zero = F.zero(level);
    auto rational = [](const Fq& v) {
        for (int i = 1; i < v.level; ++i)
            if (v.c[i] != 0) return false;
        return true;
    };
    for_each_element(F, level, [&](const Fq& a) {
        for_each_element(F, level, [&](const Fq& b) {
            if (skip_rational && rational(a) && rational(b)) return;
            fn(std::array<Fq, 3>{one, a, b});
        });
    });
    for_each_element(F, level, [&](const Fq& b) {
        if (skip_rational && rational(b)) return;
        fn(std::array<Fq, 3>{zero, one, b});
    });
    if (!skip_rational) fn(std::array<Fq, 3>{zero, zero, one});
}

} // namespace cnets::forms
