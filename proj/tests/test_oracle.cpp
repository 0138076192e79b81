#include <doctest.h>

#include "cnets/oracle.hpp"

using namespace cnets;
using namespace cnets::oracle;

TEST_CASE("gaussian binomials from first principles") {
    CHECK(gaussian_binomial(6, 3, 5) == 2558556ULL);
    CHECK(gaussian_binomial(6, 2, 5) == 508431ULL);
    CHECK(gaussian_binomial(4, 2, 3) == 130ULL);
    CHECK(gaussian_binomial(3, 1, 7) == 57ULL);
}

TEST_CASE("full-application and BFS orbit enumeration coincide") {
    auto F = gf::FieldCtx::make_all(5);
    auto reps = nets::representatives(F);
    for (int i : {0, 4, 5}) {
        auto full = enumerate_orbit(F, reps[i]);
        auto bfs = enumerate_orbit_bfs(F, reps[i]);
        CHECK(full == bfs);
    }
    auto preps = pencils::pencil_representatives(F);
    CHECK(enumerate_orbit(F, preps[3]) == enumerate_orbit_bfs(F, preps[3]));
}

TEST_CASE("orbits are start-point independent and satisfy orbit-stabilizer") {
    auto F = gf::FieldCtx::make_all(5);
    auto reps = nets::representatives(F);
    auto orbit = enumerate_orbit_bfs(F, reps[4]);
    for (int t = 0; t < 10; ++t) {
        auto member = nets::act(F, nets::random_gl3(F, 600 + t), reps[4]);
        CHECK(enumerate_orbit_bfs(F, member) == orbit);
    }
    // scalars act trivially on subspaces, so orbit sizes divide |GL(3,5)| / 4
    for (int i = 0; i < 10; ++i)
        CHECK(372000 % enumerate_orbit_bfs(F, reps[i]).size() == 0);
}

TEST_CASE("orbit membership") {
    auto F = gf::FieldCtx::make_all(5);
    auto reps = nets::representatives(F);
    CHECK_FALSE(orbits_equal(F, reps[0], reps[1]));
    CHECK(orbits_equal(F, reps[6], nets::act(F, nets::random_gl3(F, 12), reps[6])));
    auto F13 = gf::FieldCtx::make_all(13);
    CHECK_THROWS_AS((void)enumerate_orbit(F13, nets::representatives(F13)[0]), UnsupportedField);
}

TEST_CASE("sample sweeps are deterministic and total") {
    auto F = gf::FieldCtx::make_all(5);
    auto a = sample_sweep_nets(F, 500, 9);
    auto b = sample_sweep_nets(F, 500, 9);
    CHECK(a.label_counts == b.label_counts);
    CHECK(a.total == 500);
    CHECK(a.unclassified == 0);
    u64 nonsingular = 0, best = 0;
    for (const auto& [label, n] : a.label_counts) {
        if (label == "Nonsingular") nonsingular = n;
        best = std::max(best, n);
    }
    CHECK(nonsingular == best);
    auto empty = sample_sweep_nets(F, 0, 1);
    CHECK(empty.total == 0);
}
