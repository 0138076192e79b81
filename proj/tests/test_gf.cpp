#include <doctest.h>

#include <random>

#include "cnets/gf.hpp"

using namespace cnets;
using namespace cnets::gf;

TEST_CASE("make_field finds the expected tower polynomial over F_5") {
    auto F = FieldCtx::make(5, {1, 2, 4});
    // 2 is a non-square mod 5 (exhaustive): t^2 = -2 = 3 has no solution
    for (i64 t = 0; t < 5; ++t) CHECK(t * t % 5 != 3);
    CHECK(F.tower_poly(2) == std::vector<i64>{2, 0}); // t^2 + 2
    CHECK(F.has_level(4));
    CHECK_FALSE(F.has_level(6));
}

TEST_CASE("make_field rejects bad moduli") {
    CHECK_THROWS_AS(FieldCtx::make(4, {1}), CompositeModulus);
    CHECK_THROWS_AS(FieldCtx::make(9, {1}), CompositeModulus);
    CHECK_THROWS_AS(FieldCtx::make(3, {1}), SmallCharacteristic);
    CHECK_THROWS_AS(FieldCtx::make(2, {1}), SmallCharacteristic);
    CHECK_THROWS_AS(FieldCtx::make(5, {5}), std::invalid_argument);
}

TEST_CASE("inverses") {
    auto F = FieldCtx::make_all(5);
    CHECK(F.inv(F.from_int(2)) == F.from_int(3));
    CHECK(F.inv(F.one()) == F.one());
    // inv(t) = 2t in F_25 = F_5[t]/(t^2+2): t * 2t = 2t^2 = -4 = 1
    auto t = F.gen(2);
    auto it = F.inv(t);
    CHECK(it == F.element({0, 2}, 2));
    CHECK(it * t == F.one(2));
    CHECK_THROWS_AS(F.inv(F.zero(3)), DivisionByZero);
}

TEST_CASE("nth_roots examples over F_5") {
    auto F = FieldCtx::make_all(5);
    auto r = F.nth_roots(F.from_int(-1), 2, 1);
    REQUIRE(r.size() == 2);
    CHECK(r[0] == F.from_int(2));
    CHECK(r[1] == F.from_int(3));
    // cubing is a bijection on F_5 (5 != 1 mod 3); exhaustive: 3^3 = 27 = 2
    for (i64 a = 0; a < 5; ++a) {
        int count = 0;
        for (i64 t = 0; t < 5; ++t)
            if (t * t * t % 5 == a) ++count;
        CHECK(count == 1);
    }
    auto c = F.nth_roots(F.from_int(2), 3, 1);
    REQUIRE(c.size() == 1);
    CHECK(c[0] == F.from_int(3));
    // squares mod 5 are {0, 1, 4} (exhaustive), so 2 has no square root
    CHECK(F.nth_roots(F.from_int(2), 2, 1).empty());
    // but it acquires two in F_25
    auto r25 = F.nth_roots(F.from_int(2), 2, 2);
    REQUIRE(r25.size() == 2);
    CHECK(r25[0] * r25[0] == F.embed(F.from_int(2), 2));
}

TEST_CASE("field axioms hold on random triples at every level") {
    auto F = FieldCtx::make_all(5);
    std::mt19937_64 rng(2024);
    for (int level : {1, 2, 3, 4, 6}) {
        auto rnd = [&] {
            Fq x = F.zero(level);
            for (int i = 0; i < level; ++i) x.c[i] = static_cast<i64>(rng() % 5);
            return x;
        };
        for (int t = 0; t < 10000; ++t) {
            Fq a = rnd(), b = rnd(), c = rnd();
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            if (!a.is_zero()) CHECK(a * F.inv(a) == F.one(level));
        }
    }
}

TEST_CASE("a^(p^k) = a at every level") {
    auto F = FieldCtx::make_all(5);
    std::mt19937_64 rng(7);
    for (int level : {1, 2, 3, 4, 6}) {
        for (int t = 0; t < 50; ++t) {
            Fq a = F.zero(level);
            for (int i = 0; i < level; ++i) a.c[i] = static_cast<i64>(rng() % 5);
            Fq x = a;
            for (int i = 0; i < level; ++i) x = F.frobenius(x);
            CHECK(x == a);
        }
    }
}

TEST_CASE("frobenius fixes exactly the rational elements") {
    auto F = FieldCtx::make_all(5);
    for (int level : {2, 3, 4, 6}) {
        for (i64 v = 0; v < 5; ++v) {
            auto e = F.embed(F.from_int(v), level);
            CHECK(F.frobenius(e) == e);
        }
        auto g = F.gen(level);
        CHECK_FALSE(F.frobenius(g) == g);
        CHECK(g.is_in_sublevel(level));
        CHECK_FALSE(g.is_rational());
    }
}

TEST_CASE("embeddings are ring homomorphisms and commute along the tower") {
    auto F = FieldCtx::make_all(5);
    std::mt19937_64 rng(99);
    auto rnd = [&](int level) {
        Fq x = F.zero(level);
        for (int i = 0; i < level; ++i) x.c[i] = static_cast<i64>(rng() % 5);
        return x;
    };
    const std::pair<int, int> pairs[] = {{1, 2}, {1, 3}, {1, 4}, {1, 6}, {2, 4}, {2, 6}, {3, 6}};
    for (auto [a, b] : pairs) {
        for (int t = 0; t < 1000 / 7; ++t) {
            Fq x = rnd(a), y = rnd(a);
            CHECK(F.embed(x + y, b) == F.embed(x, b) + F.embed(y, b));
            CHECK(F.embed(x * y, b) == F.embed(x, b) * F.embed(y, b));
        }
        CHECK(F.embed(F.one(a), b) == F.one(b));
    }
    // commuting through an intermediate level (chains with divisibility)
    const std::tuple<int, int, int> chains[] = {{1, 2, 4}, {1, 2, 6}, {1, 3, 6}};
    for (auto [a, b, c] : chains)
        for (i64 v = 0; v < 5; ++v) {
            auto x = F.from_int(v, a);
            CHECK(F.embed(x, c) == F.embed(F.embed(x, b), c));
        }
}

TEST_CASE("project inverts embed") {
    auto F = FieldCtx::make_all(13);
    std::mt19937_64 rng(5);
    const std::pair<int, int> pairs[] = {{1, 4}, {2, 4}, {2, 6}, {3, 6}};
    for (auto [a, b] : pairs)
        for (int t = 0; t < 40; ++t) {
            Fq x = F.zero(a);
            for (int i = 0; i < a; ++i) x.c[i] = static_cast<i64>(rng() % 13);
            auto up = F.embed(x, b);
            CHECK(up.is_in_sublevel(a));
            CHECK(F.project(up, a) == x);
        }
}

TEST_CASE("roots_in_level finds complete root sets") {
    auto F = FieldCtx::make_all(5);
    // x^2 + 2 is the level-2 tower polynomial: no roots at level 1, two at 2
    std::vector<Fq> f = {F.from_int(2), F.zero(), F.one()};
    CHECK(F.roots_in_level(f, 1).empty());
    auto r2 = F.roots_in_level(f, 2);
    REQUIRE(r2.size() == 2);
    for (const auto& r : r2) CHECK((r * r + F.embed(F.from_int(2), 2)).is_zero());
    // a full split: prod (x - i) for i in F_5
    // x^5 - x has all five roots
    std::vector<Fq> g(6, F.zero());
    g[5] = F.one();
    g[1] = F.from_int(-1);
    CHECK(F.roots_in_level(g, 1).size() == 5);
}
