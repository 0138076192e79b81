#include "cnets/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <thread>
#include <unordered_map>
#include <unordered_set>

namespace cnets::oracle {

using linalg::Row6;
using sym::Mat3i;

u64 gaussian_binomial(int n, int k, i64 q) {
    // prod_{i=0}^{k-1} (q^{n-i} - 1) / (q^{i+1} - 1), exact
    unsigned __int128 num = 1, den = 1;
    auto qpow = [&](int e) {
        unsigned __int128 r = 1;
        for (int i = 0; i < e; ++i) r *= static_cast<unsigned __int128>(q);
        return r;
    };
    for (int i = 0; i < k; ++i) {
        num *= qpow(n - i) - 1;
        den *= qpow(i + 1) - 1;
    }
    assert(num % den == 0);
    return static_cast<u64>(num / den);
}

u64 pack_net(const nets::Net& W) {
    return linalg::pack_rows({W.canonical[0], W.canonical[1], W.canonical[2]}, W.p);
}

u64 pack_pencil(const pencils::Pencil& U) {
    return linalg::pack_rows({U.canonical[0], U.canonical[1]}, U.p);
}

bool OrbitSet::contains(u64 k) const { return std::binary_search(keys.begin(), keys.end(), k); }

namespace {

void require_q5(const FieldCtx& F) {
    if (F.p() != 5) throw UnsupportedField("orbit enumeration is fixed at q = 5");
}

// visit every element of GL(3,5)
template <class Fn>
void for_each_gl3_f5(Fn&& fn) {
    Mat3i M;
    for (int code = 0; code < 1953125; ++code) { // 5^9
        int c = code;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                M[i][j] = c % 5;
                c /= 5;
            }
        if (sym::mat_det(M, 5) != 0) fn(static_cast<const Mat3i&>(M));
    }
}

// fixed generating set of GL(3,5): a transvection, a cycle, a diagonal
// (BFS from any start must reproduce the full-application orbit; tested)
const std::vector<Mat3i>& gl3_f5_generators() {
    static const std::vector<Mat3i> gens = {
        Mat3i{{{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}},
        Mat3i{{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}},
        Mat3i{{{2, 0, 0}, {0, 1, 0}, {0, 0, 1}}},
    };
    return gens;
}

template <int R>
u64 canon_key(const std::array<Row6, R>& rows, i64 p) {
    std::vector<Row6> v(rows.begin(), rows.end());
    auto rref = linalg::rref6(v, p);
    return linalg::pack_rows(rref, p);
}

template <int R>
std::array<Row6, R> act_rows(const Mat3i& M, const std::array<Row6, R>& rows, i64 p) {
    std::array<Row6, R> out;
    for (int i = 0; i < R; ++i) out[i] = sym::congruence(M, rows[i], p);
    return out;
}

template <int R>
OrbitSet enumerate_full(const std::array<Row6, R>& rows, i64 p) {
    std::unordered_set<u64> seen;
    for_each_gl3_f5([&](const Mat3i& M) { seen.insert(canon_key<R>(act_rows<R>(M, rows, p), p)); });
    OrbitSet out;
    out.keys.assign(seen.begin(), seen.end());
    std::sort(out.keys.begin(), out.keys.end());
    return out;
}

std::vector<Row6> unpack_rows(u64 key, int nrows, i64 p) {
    std::vector<Row6> rows(nrows);
    for (int r = nrows - 1; r >= 0; --r)
        for (int c = 5; c >= 0; --c) {
            rows[r][c] = static_cast<i64>(key % static_cast<u64>(p));
            key /= static_cast<u64>(p);
        }
    return rows;
}

template <int R>
OrbitSet enumerate_bfs(const std::array<Row6, R>& rows, i64 p) {
    std::unordered_set<u64> seen;
    std::vector<u64> queue;
    u64 start = canon_key<R>(rows, p);
    seen.insert(start);
    queue.push_back(start);
    while (!queue.empty()) {
        u64 key = queue.back();
        queue.pop_back();
        auto rws = unpack_rows(key, R, p);
        std::array<Row6, R> arr;
        for (int i = 0; i < R; ++i) arr[i] = rws[i];
        for (const auto& g : gl3_f5_generators()) {
            u64 nk = canon_key<R>(act_rows<R>(g, arr, p), p);
            if (seen.insert(nk).second) queue.push_back(nk);
        }
    }
    OrbitSet out;
    out.keys.assign(seen.begin(), seen.end());
    std::sort(out.keys.begin(), out.keys.end());
    return out;
}

} // namespace

OrbitSet enumerate_orbit(const FieldCtx& F, const nets::Net& W) {
    require_q5(F);
    return enumerate_full<3>(W.canonical, 5);
}

OrbitSet enumerate_orbit(const FieldCtx& F, const pencils::Pencil& U) {
    require_q5(F);
    return enumerate_full<2>(U.canonical, 5);
}

OrbitSet enumerate_orbit_bfs(const FieldCtx& F, const nets::Net& W) {
    require_q5(F);
    return enumerate_bfs<3>(W.canonical, 5);
}

OrbitSet enumerate_orbit_bfs(const FieldCtx& F, const pencils::Pencil& U) {
    require_q5(F);
    return enumerate_bfs<2>(U.canonical, 5);
}

bool orbits_equal(const FieldCtx& F, const nets::Net& a, const nets::Net& b) {
    require_q5(F);
    return enumerate_orbit_bfs(F, a).contains(pack_net(b));
}

bool orbits_equal(const FieldCtx& F, const pencils::Pencil& a, const pencils::Pencil& b) {
    require_q5(F);
    return enumerate_orbit_bfs(F, a).contains(pack_pencil(b));
}

// ---------------------------------------------------------------------------
// sweeps
// ---------------------------------------------------------------------------

namespace {

// visit every RREF matrix with `rows` rows and 6 columns over F_p, i.e. every
// canonical subspace form; pattern index selects the pivot-column combination
// so workers can partition deterministically.
template <class Fn>
void for_each_canonical(int nrows, i64 p, int pattern_lo, int pattern_stride, Fn&& fn) {
    // enumerate pivot column combinations in lexicographic order
    std::vector<std::vector<int>> patterns;
    std::vector<int> combo(nrows);
    auto rec = [&](auto&& self, int idx, int start) -> void {
        if (idx == nrows) {
            patterns.push_back(combo);
            return;
        }
        for (int c = start; c < 6; ++c) {
            combo[idx] = c;
            self(self, idx + 1, c + 1);
        }
    };
    rec(rec, 0, 0);
    for (int pi = pattern_lo; pi < static_cast<int>(patterns.size()); pi += pattern_stride) {
        const auto& piv = patterns[pi];
        // free slots: (r, c) with c > piv[r] and c not a pivot column
        std::vector<std::pair<int, int>> free_slots;
        for (int r = 0; r < nrows; ++r)
            for (int c = piv[r] + 1; c < 6; ++c) {
                bool is_pivot = false;
                for (int rr = 0; rr < nrows; ++rr)
                    if (piv[rr] == c) is_pivot = true;
                if (!is_pivot) free_slots.emplace_back(r, c);
            }
        std::vector<i64> vals(free_slots.size(), 0);
        for (;;) {
            std::vector<Row6> rows(nrows, Row6{});
            for (int r = 0; r < nrows; ++r) rows[r][piv[r]] = 1;
            for (std::size_t s = 0; s < free_slots.size(); ++s)
                rows[free_slots[s].first][free_slots[s].second] = vals[s];
            fn(rows);
            std::size_t i = 0;
            while (i < vals.size()) {
                if (++vals[i] < p) break;
                vals[i] = 0;
                ++i;
            }
            if (i == vals.size()) break;
        }
    }
}

struct SweepShard {
    std::array<u64, 11> label_counts{};
    std::array<std::array<u64, 16>, 11> slice_counts{};
    std::vector<std::pair<u64, int>> labeled_keys; // (packed canonical, label)
    u64 total = 0;
    u64 unclassified = 0;
    std::vector<std::string> failures;
};

const char* net_label_name(int i) {
    return nets::to_string(static_cast<nets::OrbitLabel>(i));
}

void sweep_net_rows(const FieldCtx& F, const std::vector<Row6>& rows, bool record_keys,
                    SweepShard& shard) {
    ++shard.total;
    nets::Net W = nets::net_from_rows(F, {rows[0], rows[1], rows[2]});
    int label;
    try {
        label = static_cast<int>(nets::classify_net(F, W));
    } catch (const ImpossibleDiscriminant&) {
        ++shard.unclassified;
        shard.failures.push_back("impossible discriminant at key " +
                                 std::to_string(pack_net(W)));
        return;
    }
    shard.label_counts[label]++;
    int slice = static_cast<int>(taxonomy::classify_cubic(F, nets::net_slice(F, W)));
    shard.slice_counts[label][slice]++;
    if (record_keys) shard.labeled_keys.emplace_back(pack_net(W), label);
}

// decompose the keys of each label class into rational orbits by BFS with
// the generator set; checks that every reached subspace carries the same
// label. `labeled` must be sorted by key.
template <int R>
std::vector<std::pair<std::string, std::vector<u64>>> decompose(
    const std::vector<std::pair<u64, int>>& labeled, i64 p, const char* (*label_name)(int)) {
    auto index_of = [&](u64 key) -> std::size_t {
        auto it = std::lower_bound(labeled.begin(), labeled.end(), key,
                                   [](const auto& a, u64 k) { return a.first < k; });
        if (it == labeled.end() || it->first != key)
            throw ConsistencyFailure("orbit leaves the sweep key set at " + std::to_string(key));
        return static_cast<std::size_t>(it - labeled.begin());
    };
    std::vector<bool> visited(labeled.size(), false);
    std::map<int, std::vector<u64>> sizes;
    for (std::size_t start = 0; start < labeled.size(); ++start) {
        if (visited[start]) continue;
        const int label = labeled[start].second;
        u64 size = 0;
        std::vector<std::size_t> queue{start};
        visited[start] = true;
        while (!queue.empty()) {
            std::size_t idx = queue.back();
            queue.pop_back();
            ++size;
            if (labeled[idx].second != label)
                throw ConsistencyFailure("orbit crosses label classes at key " +
                                         std::to_string(labeled[idx].first));
            auto rws = unpack_rows(labeled[idx].first, R, p);
            std::array<Row6, R> arr;
            for (int i = 0; i < R; ++i) arr[i] = rws[i];
            for (const auto& g : gl3_f5_generators()) {
                std::size_t ni = index_of(canon_key<R>(act_rows<R>(g, arr, p), p));
                if (!visited[ni]) {
                    visited[ni] = true;
                    queue.push_back(ni);
                }
            }
        }
        sizes[label].push_back(size);
    }
    std::vector<std::pair<std::string, std::vector<u64>>> out;
    for (auto& [l, v] : sizes) {
        std::sort(v.begin(), v.end());
        out.emplace_back(label_name(l), v);
    }
    return out;
}

} // namespace

OrbitCensus full_sweep_nets(const FieldCtx& F, int workers) {
    require_q5(F);
    workers = std::max(1, workers);
    std::vector<SweepShard> shards(workers);
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w)
        threads.emplace_back([&, w] {
            for_each_canonical(3, 5, w, workers, [&](const std::vector<Row6>& rows) {
                sweep_net_rows(F, rows, true, shards[w]);
            });
        });
    for (auto& t : threads) t.join();

    OrbitCensus census;
    census.kind = "net";
    census.mode = "full";
    census.expected_total = gaussian_binomial(6, 3, 5);
    std::vector<std::pair<u64, int>> labeled;
    std::array<u64, 11> counts{};
    std::array<std::array<u64, 16>, 11> slices{};
    for (auto& s : shards) {
        census.total += s.total;
        census.unclassified += s.unclassified;
        for (int l = 0; l <= 10; ++l) counts[l] += s.label_counts[l];
        for (int l = 0; l <= 10; ++l)
            for (int t = 0; t < 16; ++t) slices[l][t] += s.slice_counts[l][t];
        labeled.insert(labeled.end(), s.labeled_keys.begin(), s.labeled_keys.end());
        s.labeled_keys.clear();
        s.labeled_keys.shrink_to_fit();
        for (auto& f : s.failures) census.notes.push_back(f);
    }
    std::sort(labeled.begin(), labeled.end());
    for (int l = 0; l <= 10; ++l)
        census.label_counts.emplace_back(net_label_name(l), counts[l]);
    for (int l = 0; l <= 10; ++l)
        for (int t = 0; t < 16; ++t)
            if (slices[l][t])
                census.slice_histogram.emplace_back(
                    std::string(net_label_name(l)) + "/" +
                        taxonomy::to_string(static_cast<taxonomy::CubicType>(t)),
                    slices[l][t]);
    if (census.unclassified != 0)
        throw ConsistencyFailure("net sweep hit unclassifiable subspaces: " + census.notes.front());
    if (census.total != census.expected_total)
        throw ConsistencyFailure("net sweep total " + std::to_string(census.total) +
                                 " != " + std::to_string(census.expected_total));
    census.orbit_sizes = decompose<3>(labeled, 5, net_label_name);
    return census;
}

namespace {

const char* pencil_label_name(int i) {
    return pencils::to_string(static_cast<pencils::PencilLabel>(i));
}

} // namespace

OrbitCensus full_sweep_pencils(const FieldCtx& F, int workers) {
    require_q5(F);
    workers = std::max(1, workers);
    struct Shard {
        std::array<u64, 8> counts{};
        std::vector<std::pair<u64, int>> labeled;
        u64 total = 0;
        u64 unclassified = 0;
        std::vector<std::string> failures;
    };
    std::vector<Shard> shards(workers);
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w)
        threads.emplace_back([&, w] {
            for_each_canonical(2, 5, w, workers, [&](const std::vector<Row6>& rows) {
                auto& s = shards[w];
                ++s.total;
                pencils::Pencil U = pencils::pencil_from_rows(F, rows[0], rows[1]);
                try {
                    int l = static_cast<int>(pencils::classify_pencil(F, U));
                    s.counts[l]++;
                    s.labeled.emplace_back(pack_pencil(U), l);
                } catch (const UnrecognizedPencil&) {
                    ++s.unclassified;
                    s.failures.push_back("unrecognized pencil at key " +
                                         std::to_string(pack_pencil(U)));
                }
            });
        });
    for (auto& t : threads) t.join();

    OrbitCensus census;
    census.kind = "pencil";
    census.mode = "full";
    census.expected_total = gaussian_binomial(6, 2, 5);
    std::array<u64, 8> counts{};
    std::vector<std::pair<u64, int>> labeled;
    for (auto& s : shards) {
        census.total += s.total;
        census.unclassified += s.unclassified;
        for (int l = 0; l < 8; ++l) counts[l] += s.counts[l];
        labeled.insert(labeled.end(), s.labeled.begin(), s.labeled.end());
        for (auto& f : s.failures) census.notes.push_back(f);
    }
    std::sort(labeled.begin(), labeled.end());
    for (int l = 0; l < 8; ++l) census.label_counts.emplace_back(pencil_label_name(l), counts[l]);
    if (census.unclassified != 0)
        throw ConsistencyFailure("pencil sweep hit unrecognized pencils: " + census.notes.front());
    if (census.total != census.expected_total)
        throw ConsistencyFailure("pencil sweep total mismatch");
    census.orbit_sizes = decompose<2>(labeled, 5, pencil_label_name);
    return census;
}

OrbitCensus sample_sweep_nets(const FieldCtx& F, u64 n, u64 seed) {
    OrbitCensus census;
    census.kind = "net";
    census.mode = "sample";
    census.expected_total = n;
    std::array<u64, 11> counts{};
    for (u64 i = 0; i < n; ++i) {
        nets::Net W = nets::random_net(F, seed + i);
        ++census.total;
        try {
            counts[static_cast<int>(nets::classify_net(F, W))]++;
        } catch (const ImpossibleDiscriminant&) {
            ++census.unclassified;
            census.notes.push_back("impossible discriminant at seed " + std::to_string(seed + i));
        }
    }
    for (int l = 0; l <= 10; ++l)
        census.label_counts.emplace_back(net_label_name(l), counts[l]);
    if (census.unclassified != 0)
        throw ConsistencyFailure("sample sweep hit unclassifiable nets: " + census.notes.front());
    return census;
}

} // namespace cnets::oracle
