#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <vector>

#include "cnets/errors.hpp"

namespace cnets::gf {

using i64 = std::int64_t;

/// Extension degrees supported by a field tower. Linear factors of cubics
/// need degree <= 3, rank-one loci degree <= 4 and flex/singular searches
/// degree <= 6, so {1,2,3,4,6} covers every root the classifiers look for.
inline constexpr std::array<int, 5> tower_levels = {1, 2, 3, 4, 6};

inline constexpr bool is_tower_level(int k) {
    return k == 1 || k == 2 || k == 3 || k == 4 || k == 6;
}

namespace detail {
struct FieldData;
}

class FieldCtx;

/// Element of F_{p^k}: k residues mod p, coordinates in the power basis of
/// the level-k tower polynomial. Elements keep a pointer into their context
/// and must not outlive it.
struct Fq {
    const detail::FieldData* f = nullptr;
    int level = 1;
    std::array<i64, 6> c{};

    bool is_zero() const;
    /// True when the element lies in the prime field (constant coordinates).
    bool is_rational() const { return is_in_sublevel(1); }
    /// True when the element is fixed by Frobenius^sub, i.e. lies in the
    /// image of F_{p^sub}.
    bool is_in_sublevel(int sub) const;

    friend Fq operator+(const Fq& a, const Fq& b);
    friend Fq operator-(const Fq& a, const Fq& b);
    friend Fq operator*(const Fq& a, const Fq& b);
    friend Fq operator/(const Fq& a, const Fq& b);
    Fq operator-() const;
    friend bool operator==(const Fq& a, const Fq& b);
    friend bool operator!=(const Fq& a, const Fq& b) { return !(a == b); }
    /// Deterministic total order (level, then coordinates); used to make
    /// root lists and reports reproducible.
    friend bool operator<(const Fq& a, const Fq& b);
};

/// Immutable description of F_p together with its extension tower.
/// Construction verifies primality, searches tower polynomials
/// deterministically and builds compatible embeddings; afterwards all
/// arithmetic is pure and safe for concurrent use.
class FieldCtx {
public:
    /// Build a context for prime p >= 5 with the requested levels
    /// (level 1 is always included).
    /// Throws CompositeModulus, SmallCharacteristic, IrreducibleSearchFailed.
    static FieldCtx make(i64 p, std::vector<int> levels);
    /// Context with the full tower {1,2,3,4,6}.
    static FieldCtx make_all(i64 p);

    i64 p() const;
    bool has_level(int k) const;
    /// Low coefficients of the monic level-k tower polynomial
    /// f_k = t^k + sum_i poly[i] t^i.
    const std::vector<i64>& tower_poly(int k) const;

    Fq zero(int level = 1) const;
    Fq one(int level = 1) const;
    /// Reduce an integer (possibly negative) into the prime field, lifted
    /// to `level`.
    Fq from_int(i64 v, int level = 1) const;
    /// Element with the given power-basis coordinates.
    Fq element(const std::vector<i64>& coords, int level) const;
    /// Generator t of the level-k power basis.
    Fq gen(int level) const;

    /// Multiplicative inverse; throws DivisionByZero on 0.
    Fq inv(const Fq& a) const;
    Fq pow(const Fq& a, i64 e) const;
    /// x -> x^p, the generator of the Galois group of every level.
    Fq frobenius(const Fq& a) const;
    /// Canonical embedding into a higher level (a.level must divide to_level).
    Fq embed(const Fq& a, int to_level) const;
    /// Inverse of embed for elements known to lie in the sublevel.
    Fq project(const Fq& a, int to_level) const;

    /// All x in F_{p^target_level} with x^n = a, n in {2,3}; empty when there
    /// are none. a.level must divide target_level.
    std::vector<Fq> nth_roots(const Fq& a, int n, int target_level) const;

    /// Distinct roots in F_{p^level} of the univariate polynomial with the
    /// given coefficients (index = degree; coefficient levels must divide
    /// `level`). Deterministic: sorted in the Fq total order.
    std::vector<Fq> roots_in_level(const std::vector<Fq>& coeffs, int level) const;

    const detail::FieldData* data() const { return d_.get(); }

private:
    std::shared_ptr<const detail::FieldData> d_;
};

/// Free-function spelling of the constructor.
inline FieldCtx make_field(i64 p, std::vector<int> levels) {
    return FieldCtx::make(p, std::move(levels));
}

} // namespace cnets::gf
