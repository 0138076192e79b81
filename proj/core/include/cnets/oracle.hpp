#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cnets/net_orbits.hpp"
#include "cnets/pencil_orbits.hpp"

namespace cnets::oracle {

using gf::FieldCtx;
using gf::i64;
using u64 = std::uint64_t;

/// Number of k-dimensional subspaces of F_q^n, computed from first
/// principles (exact integer arithmetic).
u64 gaussian_binomial(int n, int k, i64 q);

/// Packed canonical form (RREF rows as base-p digits). Valid for p = 5.
u64 pack_net(const nets::Net& W);
u64 pack_pencil(const pencils::Pencil& U);

/// A full congruence orbit over F_5 as a sorted set of packed canonical
/// forms.
struct OrbitSet {
    std::vector<u64> keys; // sorted

    bool contains(u64 k) const;
    std::size_t size() const { return keys.size(); }
    friend bool operator==(const OrbitSet&, const OrbitSet&) = default;
};

/// Orbit by applying every element of GL(3, F_5) (1,488,000 matrices).
/// Throws UnsupportedField when the context prime is not 5.
OrbitSet enumerate_orbit(const FieldCtx& F, const nets::Net& W);
OrbitSet enumerate_orbit(const FieldCtx& F, const pencils::Pencil& U);

/// Same orbits by breadth-first search over a fixed generating set of
/// GL(3, F_5); must produce the identical set (tested).
OrbitSet enumerate_orbit_bfs(const FieldCtx& F, const nets::Net& W);
OrbitSet enumerate_orbit_bfs(const FieldCtx& F, const pencils::Pencil& U);

bool orbits_equal(const FieldCtx& F, const nets::Net& a, const nets::Net& b);
bool orbits_equal(const FieldCtx& F, const pencils::Pencil& a, const pencils::Pencil& b);

/// Census of a sweep over subspaces. All counts are deterministic; the
/// orbit decomposition lists rational orbit sizes per label.
struct OrbitCensus {
    std::string kind; // "net" or "pencil"
    std::string mode; // "full" or "sample"
    u64 total = 0;
    u64 expected_total = 0; // Gaussian binomial for full mode, n for sample
    u64 unclassified = 0;   // classification failures; must stay 0
    std::vector<std::pair<std::string, u64>> label_counts; // fixed label order
    /// label -> sorted rational orbit sizes (full mode only)
    std::vector<std::pair<std::string, std::vector<u64>>> orbit_sizes;
    /// nets only: (label, slice CubicType) -> count
    std::vector<std::pair<std::string, u64>> slice_histogram;
    std::vector<std::string> notes;
};

/// Classify every 3-plane of Sym2(3) over F_5; asserts the Gaussian-binomial
/// total, zero unclassified nets and zero ThreeConcurrentLines discriminants
/// (throws ConsistencyFailure otherwise), decomposes every label class into
/// rational orbits and records the label x slice-type histogram.
OrbitCensus full_sweep_nets(const FieldCtx& F, int workers = 1);

/// Classify every 2-plane; asserts the total and totality of the pencil
/// classifier, and decomposes labels into rational orbits.
OrbitCensus full_sweep_pencils(const FieldCtx& F, int workers = 1);

/// Classify n pseudorandom nets (deterministic per seed).
OrbitCensus sample_sweep_nets(const FieldCtx& F, u64 n, u64 seed);

} // namespace cnets::oracle
