#pragma once

// Independent j-invariant oracle: reduce a nonsingular cubic to Weierstrass
// form y^2 z = x^3 + A x z^2 + B z^3 through one of its flexes (searched over
// the extension tower) and read off j = 1728 * 4A^3 / (4A^3 + 27B^2).
// Deliberately avoids the invariant tables: only evaluation, composition and
// the Hessian are shared with the production path.

#include <optional>

#include "cnets/cubic_taxonomy.hpp"

namespace wtest {

using namespace cnets;
using forms::TernaryCubic;
using gf::FieldCtx;
using gf::Fq;
using linalg::Mat3;

/// A flex of f over F_{p^k}, k in {1,2,3}, if one exists there.
inline std::optional<std::array<Fq, 3>> find_flex(const FieldCtx& F, const TernaryCubic& f) {
    TernaryCubic H = forms::hessian(F, f);
    std::optional<std::array<Fq, 3>> found;
    for (int level : {1, 2, 3}) {
        if (found) break;
        forms::for_each_p2_point(F, level, level > 1, [&](const std::array<Fq, 3>& pt) {
            if (found) return;
            if (!forms::eval_at(F, f, pt).is_zero()) return;
            if (!forms::eval_at(F, H, pt).is_zero()) return;
            found = pt;
        });
    }
    return found;
}

/// j of a nonsingular cubic via Weierstrass reduction at a tower flex;
/// nullopt when no flex lies within levels {1,2,3}.
inline std::optional<Fq> weierstrass_j(const FieldCtx& F, const TernaryCubic& f) {
    auto flex = find_flex(F, f);
    if (!flex) return std::nullopt;
    const int lvl = (*flex)[0].level;
    auto Z = [&] { return F.zero(lvl); };
    auto O = [&] { return F.one(lvl); };

    // move the flex to [0:1:0]
    Mat3 M1;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) M1[i][j] = Z();
    for (int i = 0; i < 3; ++i) M1[i][1] = (*flex)[i];
    int pivot = 0;
    while ((*flex)[pivot].is_zero()) ++pivot;
    int col = 0;
    for (int j = 0; j < 3; ++j) {
        if (j == pivot) continue;
        M1[j][col == 0 ? 0 : 2] = O();
        ++col;
    }
    TernaryCubic g = forms::compose(F, f, M1);
    // on the curve at [0:1:0]: no y^3 term
    REQUIRE(g.c[6].is_zero());

    // tangent line at [0:1:0] is a x + c z with a = coeff(x y^2), c = coeff(y^2 z)
    Fq a = g.c[3], c = g.c[7];
    REQUIRE((!a.is_zero() || !c.is_zero()));
    Mat3 M2;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) M2[i][j] = Z();
    M2[1][1] = O();
    if (!a.is_zero()) {
        // kernel vector (c, 0, -a), unit vector (1/a, 0, 0)
        M2[0][0] = c;
        M2[2][0] = -a;
        M2[0][2] = F.inv(a);
    } else {
        M2[0][0] = O();
        M2[2][2] = F.inv(c);
    }
    g = forms::compose(F, g, M2);
    // now flex [0:1:0], tangent z = 0: only x^3 outside the ideal (z)
    REQUIRE(g.c[6].is_zero()); // y^3
    REQUIRE(g.c[3].is_zero()); // x y^2
    REQUIRE(g.c[1].is_zero()); // x^2 y
    Fq kappa = g.c[0]; // x^3
    Fq beta = g.c[7];  // y^2 z
    REQUIRE(!kappa.is_zero());
    REQUIRE(!beta.is_zero());

    // kill xyz and y z^2 with y -> y - (gamma x + delta z) / (2 beta)
    {
        Fq gamma = g.c[4], delta = g.c[8];
        Fq half = F.inv(F.from_int(2, lvl));
        Mat3 M3;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) M3[i][j] = Z();
        M3[0][0] = O();
        M3[1][1] = O();
        M3[2][2] = O();
        M3[1][0] = -(gamma * half * F.inv(beta));
        M3[1][2] = -(delta * half * F.inv(beta));
        g = forms::compose(F, g, M3);
        REQUIRE(g.c[4].is_zero());
        REQUIRE(g.c[8].is_zero());
    }
    // kill x^2 z with x -> x - eps/(3 kappa) z
    {
        Fq eps = g.c[2];
        Mat3 M4;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) M4[i][j] = Z();
        M4[0][0] = O();
        M4[1][1] = O();
        M4[2][2] = O();
        M4[0][2] = -(eps * F.inv(F.from_int(3, lvl) * kappa));
        g = forms::compose(F, g, M4);
        REQUIRE(g.c[2].is_zero());
    }
    // beta y^2 z + kappa x^3 + zeta x z^2 + eta z^3 = 0
    // -> y^2 z = c3 x^3 + c1 x z^2 + c0 z^3 with ci = -g_i / beta
    Fq ib = -F.inv(beta);
    Fq c3 = g.c[0] * ib, c1 = g.c[5] * ib, c0 = g.c[9] * ib;
    // x = u / c3, y = v / c3 gives v^2 z = u^3 + (c1 c3) u z^2 + (c0 c3^2) z^3
    Fq A = c1 * c3;
    Fq B = c0 * c3 * c3;
    Fq A3 = F.from_int(4, lvl) * A * A * A;
    Fq disc = A3 + F.from_int(27, lvl) * B * B;
    REQUIRE(!disc.is_zero());
    Fq j = F.from_int(1728, lvl) * A3 / disc;
    // j of a rational cubic is rational
    REQUIRE(j.is_in_sublevel(1));
    return F.project(j, 1);
}

} // namespace wtest
