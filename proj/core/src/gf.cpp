#include "cnets/gf.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <stdexcept>

namespace cnets::gf {

namespace detail {

struct FieldData {
    i64 p = 0;
    std::array<bool, 7> has{};
    // Monic tower polynomial per level: f_k = t^k + sum_{i<k} poly[k][i] t^i.
    std::array<std::vector<i64>, 7> poly;
    // red[k][m-k] = coordinates of t^m mod f_k for m = k..2k-2.
    std::array<std::vector<std::array<i64, 6>>, 7> red;
    // emb[a][b][j] = coordinates of (image of t_a in level b)^j, j = 0..a-1.
    std::array<std::array<std::vector<std::array<i64, 6>>, 7>, 7> emb;

    i64 norm(i64 v) const {
        v %= p;
        return v < 0 ? v + p : v;
    }
};

} // namespace detail

using detail::FieldData;

namespace {

// ---------------------------------------------------------------------------
// prime-field scalars
// ---------------------------------------------------------------------------

i64 inv_mod(i64 a, i64 p) {
    // extended Euclid; a != 0 mod p
    i64 t = 0, new_t = 1, r = p, new_r = a % p;
    if (new_r < 0) new_r += p;
    while (new_r != 0) {
        i64 q = r / new_r;
        std::swap(t -= q * new_t, new_t);
        std::swap(r -= q * new_r, new_r);
    }
    if (r != 1) throw DivisionByZero("element has no inverse");
    return t < 0 ? t + p : t;
}

bool is_prime(i64 n) {
    if (n < 2) return false;
    for (i64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// ---------------------------------------------------------------------------
// univariate polynomials over F_p (vector<i64>, index = degree)
// ---------------------------------------------------------------------------

using PPoly = std::vector<i64>;

void ptrim(PPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int pdeg(const PPoly& a) { return static_cast<int>(a.size()) - 1; }

PPoly pmul_mod(const PPoly& a, const PPoly& b, const PPoly& f, i64 p) {
    if (a.empty() || b.empty()) return {};
    PPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    // reduce mod monic f
    int df = pdeg(f);
    for (int d = pdeg(r); d >= df; --d) {
        i64 c = r[d];
        if (c == 0) continue;
        r[d] = 0;
        for (int i = 0; i < df; ++i) r[d - df + i] = ((r[d - df + i] - c * f[i]) % p + p) % p;
    }
    ptrim(r);
    return r;
}

PPoly ppow_mod(PPoly base, i64 e, const PPoly& f, i64 p) {
    PPoly r{1};
    while (e > 0) {
        if (e & 1) r = pmul_mod(r, base, f, p);
        base = pmul_mod(base, base, f, p);
        e >>= 1;
    }
    return r;
}

PPoly pgcd(PPoly a, PPoly b, i64 p) {
    ptrim(a);
    ptrim(b);
    while (!b.empty()) {
        // a mod b with b made monic on the fly
        i64 lead_inv = inv_mod(b.back(), p);
        PPoly r = a;
        for (int d = pdeg(r); d >= pdeg(b); --d) {
            i64 c = r[d] % p;
            if (c == 0) continue;
            i64 q = c * lead_inv % p;
            for (size_t i = 0; i < b.size(); ++i)
                r[d - pdeg(b) + i] = ((r[d - pdeg(b) + i] - q * b[i]) % p + p) % p;
        }
        ptrim(r);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// f = t^k + low (monic, low has size k). Irreducible over F_p iff it has no
// irreducible factor of degree j for any j < k; each such factor divides
// x^{p^j} - x.
bool tower_poly_irreducible(const PPoly& low, int k, i64 p) {
    PPoly f = low;
    f.resize(k + 1, 0);
    f[k] = 1;
    PPoly x{0, 1};
    PPoly xq = x; // will hold x^{p^j} mod f
    for (int j = 1; j < k; ++j) {
        xq = ppow_mod(xq, p, f, p);
        PPoly d = xq;
        // d = x^{p^j} - x
        if (d.size() < 2) d.resize(2, 0);
        d[1] = ((d[1] - 1) % p + p) % p;
        ptrim(d);
        PPoly g = pgcd(f, d, p);
        if (pdeg(g) != 0) return false;
    }
    xq = ppow_mod(xq, p, f, p); // now x^{p^k} mod f
    return xq == x;
}

// ---------------------------------------------------------------------------
// Fq helpers
// ---------------------------------------------------------------------------

Fq make_fq(const FieldData* f, int level) {
    Fq a;
    a.f = f;
    a.level = level;
    return a;
}

void require_level(const FieldData* f, int k) {
    if (!f || k < 1 || k > 6 || !f->has[k])
        throw std::invalid_argument("field level " + std::to_string(k) + " not in tower");
}

Fq fq_add(const Fq& a, const Fq& b) {
    Fq r = a;
    for (int i = 0; i < a.level; ++i) r.c[i] = (a.c[i] + b.c[i]) % a.f->p;
    return r;
}

Fq fq_sub(const Fq& a, const Fq& b) {
    Fq r = a;
    for (int i = 0; i < a.level; ++i) r.c[i] = ((a.c[i] - b.c[i]) % a.f->p + a.f->p) % a.f->p;
    return r;
}

Fq fq_mul(const Fq& a, const Fq& b) {
    const FieldData* f = a.f;
    const i64 p = f->p;
    const int k = a.level;
    Fq r = make_fq(f, k);
    if (k == 1) {
        r.c[0] = a.c[0] * b.c[0] % p;
        return r;
    }
    std::array<i64, 11> prod{};
    for (int i = 0; i < k; ++i) {
        if (a.c[i] == 0) continue;
        for (int j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + a.c[i] * b.c[j]) % p;
    }
    for (int i = 0; i < k; ++i) r.c[i] = prod[i];
    for (int m = k; m <= 2 * k - 2; ++m) {
        if (prod[m] == 0) continue;
        const auto& t = f->red[k][m - k];
        for (int i = 0; i < k; ++i) r.c[i] = (r.c[i] + prod[m] * t[i]) % p;
    }
    return r;
}

// Lift both operands to a common level; levels must be comparable by
// divisibility inside the tower.
void align_levels(Fq& a, Fq& b);

Fq fq_embed(const Fq& a, int to_level) {
    const FieldData* f = a.f;
    require_level(f, to_level);
    if (a.level == to_level) return a;
    if (to_level % a.level != 0)
        throw std::invalid_argument("no embedding between incompatible levels");
    Fq r = make_fq(f, to_level);
    const auto& powers = f->emb[a.level][to_level];
    for (int j = 0; j < a.level; ++j) {
        if (a.c[j] == 0) continue;
        for (int i = 0; i < to_level; ++i) r.c[i] = (r.c[i] + a.c[j] * powers[j][i]) % f->p;
    }
    return r;
}

void align_levels(Fq& a, Fq& b) {
    if (a.level == b.level) return;
    if (b.level % a.level == 0)
        a = fq_embed(a, b.level);
    else if (a.level % b.level == 0)
        b = fq_embed(b, a.level);
    else
        throw std::invalid_argument("elements live in incomparable levels");
}

Fq fq_inv(const Fq& a) {
    const FieldData* f = a.f;
    const i64 p = f->p;
    if (a.is_zero()) throw DivisionByZero("inverse of zero");
    if (a.level == 1) {
        Fq r = a;
        r.c[0] = inv_mod(a.c[0], p);
        return r;
    }
    // extended Euclid in F_p[t] against the tower polynomial
    const int k = a.level;
    PPoly f_poly = f->poly[k];
    f_poly.resize(k + 1, 0);
    f_poly[k] = 1;
    PPoly r0 = f_poly, r1(a.c.begin(), a.c.begin() + k);
    ptrim(r1);
    PPoly t0{}, t1{1};
    while (pdeg(r1) > 0) {
        i64 lead_inv = inv_mod(r1.back(), p);
        PPoly q(pdeg(r0) - pdeg(r1) + 1, 0);
        PPoly rem = r0;
        for (int d = pdeg(rem); d >= pdeg(r1); --d) {
            i64 c = rem[d];
            if (c == 0) continue;
            i64 qq = c * lead_inv % p;
            q[d - pdeg(r1)] = qq;
            for (size_t i = 0; i < r1.size(); ++i)
                rem[d - pdeg(r1) + i] = ((rem[d - pdeg(r1) + i] - qq * r1[i]) % p + p) % p;
        }
        ptrim(rem);
        // t_next = t0 - q * t1
        PPoly qt(q.size() + t1.size(), 0);
        for (size_t i = 0; i < q.size(); ++i)
            for (size_t j = 0; j < t1.size(); ++j) qt[i + j] = (qt[i + j] + q[i] * t1[j]) % p;
        qt.resize(std::max(qt.size(), t0.size()), 0);
        PPoly t2 = qt;
        for (auto& v : t2) v = (p - v % p) % p;
        for (size_t i = 0; i < t0.size(); ++i) t2[i] = (t2[i] + t0[i]) % p;
        ptrim(t2);
        r0 = std::move(r1);
        r1 = std::move(rem);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r1.empty()) throw DivisionByZero("inverse of zero");
    i64 scale = inv_mod(r1[0], p);
    Fq r = make_fq(f, k);
    for (size_t i = 0; i < t1.size() && i < static_cast<size_t>(k); ++i)
        r.c[i] = t1[i] * scale % p;
    return r;
}

Fq fq_pow(const Fq& a, unsigned __int128 e) {
    Fq r = make_fq(a.f, a.level);
    r.c[0] = 1;
    Fq base = a;
    while (e > 0) {
        if (e & 1) r = fq_mul(r, base);
        base = fq_mul(base, base);
        e >>= 1;
    }
    return r;
}

unsigned __int128 level_order(i64 p, int k) {
    unsigned __int128 q = 1;
    for (int i = 0; i < k; ++i) q *= static_cast<unsigned __int128>(p);
    return q;
}

// ---------------------------------------------------------------------------
// univariate polynomials over F_{p^k} (vector<Fq>)
// ---------------------------------------------------------------------------

using QPoly = std::vector<Fq>;

void qtrim(QPoly& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

int qdeg(const QPoly& a) { return static_cast<int>(a.size()) - 1; }

QPoly qmul(const QPoly& a, const QPoly& b, const FieldData* f, int level) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1, make_fq(f, level));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = fq_add(r[i + j], fq_mul(a[i], b[j]));
    }
    return r;
}

// a mod b (b nonzero); also returns quotient when `quot` given
QPoly qmod(QPoly a, const QPoly& b, QPoly* quot = nullptr) {
    const Fq lead_inv = fq_inv(b.back());
    if (quot) quot->assign(a.size() > b.size() - 1 ? a.size() - b.size() + 1 : 0,
                           make_fq(b.back().f, b.back().level));
    for (int d = qdeg(a); d >= qdeg(b); --d) {
        if (a[d].is_zero()) continue;
        Fq q = fq_mul(a[d], lead_inv);
        if (quot) (*quot)[d - qdeg(b)] = q;
        for (size_t i = 0; i < b.size(); ++i)
            a[d - qdeg(b) + i] = fq_sub(a[d - qdeg(b) + i], fq_mul(q, b[i]));
    }
    qtrim(a);
    if (quot) qtrim(*quot);
    return a;
}

QPoly qmul_mod(const QPoly& a, const QPoly& b, const QPoly& f, const FieldData* fd, int level) {
    QPoly r = qmul(a, b, fd, level);
    return qmod(std::move(r), f);
}

QPoly qgcd(QPoly a, QPoly b) {
    qtrim(a);
    qtrim(b);
    while (!b.empty()) {
        QPoly r = qmod(std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Fq s = fq_inv(a.back());
        for (auto& v : a) v = fq_mul(v, s);
    }
    return a;
}

QPoly qpow_mod(QPoly base, unsigned __int128 e, const QPoly& f, const FieldData* fd, int level) {
    QPoly r{make_fq(fd, level)};
    r[0].c[0] = 1;
    base = qmod(std::move(base), f);
    while (e > 0) {
        if (e & 1) r = qmul_mod(r, base, f, fd, level);
        base = qmul_mod(base, base, f, fd, level);
        e >>= 1;
    }
    return r;
}

// Equal-degree splitting of a squarefree product of linear factors.
// The generator is seeded from the polynomial so the recursion (and hence
// every report that prints roots) is reproducible.
void collect_roots(const QPoly& h, const FieldData* fd, int level, std::mt19937_64& rng,
                   std::vector<Fq>& out) {
    const int d = qdeg(h);
    if (d <= 0) return;
    if (d == 1) {
        // monic x + h0  ->  root -h0
        Fq r = h[0];
        for (int i = 0; i < level; ++i) r.c[i] = (fd->p - r.c[i] % fd->p) % fd->p;
        out.push_back(r);
        return;
    }
    const unsigned __int128 q = level_order(fd->p, level);
    for (;;) {
        // random a; split h by gcd(h, (x+a)^((q-1)/2) - 1)
        Fq a = make_fq(fd, level);
        for (int i = 0; i < level; ++i) a.c[i] = static_cast<i64>(rng() % static_cast<std::uint64_t>(fd->p));
        QPoly xa{a, make_fq(fd, level)};
        xa[1].c[0] = 1;
        QPoly w = qpow_mod(xa, (q - 1) / 2, h, fd, level);
        if (w.empty()) w.assign(1, make_fq(fd, level));
        w.resize(std::max<size_t>(w.size(), 1), make_fq(fd, level));
        w[0] = fq_sub(w[0], [&] {
            Fq one = make_fq(fd, level);
            one.c[0] = 1;
            return one;
        }());
        qtrim(w);
        QPoly g = qgcd(h, w);
        int dg = qdeg(g);
        if (dg > 0 && dg < d) {
            QPoly quot;
            qmod(h, g, &quot);
            collect_roots(g, fd, level, rng, out);
            collect_roots(quot, fd, level, rng, out);
            return;
        }
    }
}

} // namespace

// ---------------------------------------------------------------------------
// Fq members / operators
// ---------------------------------------------------------------------------

bool Fq::is_zero() const {
    for (int i = 0; i < level; ++i)
        if (c[i] != 0) return false;
    return true;
}

bool Fq::is_in_sublevel(int sub) const {
    if (level == sub) return true;
    if (level % sub != 0) return false;
    Fq x = *this;
    for (int i = 0; i < sub; ++i) x = fq_pow(x, static_cast<unsigned __int128>(f->p));
    return x == *this;
}

Fq operator+(const Fq& a, const Fq& b) {
    Fq x = a, y = b;
    align_levels(x, y);
    return fq_add(x, y);
}

Fq operator-(const Fq& a, const Fq& b) {
    Fq x = a, y = b;
    align_levels(x, y);
    return fq_sub(x, y);
}

Fq operator*(const Fq& a, const Fq& b) {
    Fq x = a, y = b;
    align_levels(x, y);
    return fq_mul(x, y);
}

Fq operator/(const Fq& a, const Fq& b) {
    Fq x = a, y = b;
    align_levels(x, y);
    return fq_mul(x, fq_inv(y));
}

Fq Fq::operator-() const {
    Fq r = *this;
    for (int i = 0; i < level; ++i) r.c[i] = (f->p - c[i] % f->p) % f->p;
    return r;
}

bool operator==(const Fq& a, const Fq& b) {
    Fq x = a, y = b;
    align_levels(x, y);
    for (int i = 0; i < x.level; ++i)
        if (x.c[i] != y.c[i]) return false;
    return true;
}

bool operator<(const Fq& a, const Fq& b) {
    if (a.level != b.level) return a.level < b.level;
    for (int i = 0; i < a.level; ++i)
        if (a.c[i] != b.c[i]) return a.c[i] < b.c[i];
    return false;
}

// ---------------------------------------------------------------------------
// FieldCtx
// ---------------------------------------------------------------------------

FieldCtx FieldCtx::make(i64 p, std::vector<int> levels) {
    if (p == 2 || p == 3) throw SmallCharacteristic("characteristic 2 and 3 are excluded");
    if (p < 2 || !is_prime(p)) throw CompositeModulus("modulus " + std::to_string(p) + " is not prime");
    if (p > (1 << 20)) throw std::invalid_argument("modulus too large for this tower implementation");

    auto d = std::make_shared<FieldData>();
    d->p = p;
    d->has[1] = true;
    d->poly[1] = {};
    for (int k : levels) {
        if (!is_tower_level(k)) throw std::invalid_argument("unsupported extension degree " + std::to_string(k));
        d->has[k] = true;
    }

    for (int k : tower_levels) {
        if (k == 1 || !d->has[k]) continue;
        // deterministic search: coefficient tuples (c_0 least significant)
        // enumerated in increasing base-p counter order
        bool found = false;
        i64 span = 1;
        for (int i = 0; i < k && span < (i64{1} << 40); ++i) span *= p;
        span = std::min<i64>(span, 10'000'000);
        for (i64 n = 0; n < span && !found; ++n) {
            PPoly low(k, 0);
            i64 m = n;
            for (int i = 0; i < k; ++i) {
                low[i] = m % p;
                m /= p;
            }
            if (tower_poly_irreducible(low, k, p)) {
                d->poly[k] = low;
                found = true;
            }
        }
        if (!found) throw IrreducibleSearchFailed("no irreducible polynomial of degree " + std::to_string(k));
        // reduction table t^m mod f_k for m = k .. 2k-2
        d->red[k].assign(k - 1, {});
        std::array<i64, 6> cur{};
        for (int i = 0; i < k; ++i) cur[i] = (p - d->poly[k][i]) % p; // t^k = -low
        d->red[k][0] = cur;
        for (int m = k + 1; m <= 2 * k - 2; ++m) {
            std::array<i64, 6> nxt{};
            // multiply cur by t
            i64 top = cur[k - 1];
            for (int i = k - 1; i >= 1; --i) nxt[i] = cur[i - 1];
            nxt[0] = 0;
            if (top != 0)
                for (int i = 0; i < k; ++i) nxt[i] = (nxt[i] + top * ((p - d->poly[k][i]) % p)) % p;
            cur = nxt;
            d->red[k][m - k] = cur;
        }
    }

    // embeddings: trivial from level 1, computed root images for (2,4), (2,6), (3,6)
    const FieldData* fd = d.get();
    for (int a : tower_levels) {
        if (!d->has[a]) continue;
        for (int b : tower_levels) {
            if (!d->has[b] || b <= a || b % a != 0) continue;
            auto& table = d->emb[a][b];
            table.assign(a, {});
            if (a == 1) {
                table[0][0] = 1;
                continue;
            }
            // image of t_a = deterministically smallest root of f_a in level b
            QPoly fa;
            for (int i = 0; i < a; ++i) {
                Fq ci = make_fq(fd, b);
                ci.c[0] = d->poly[a][i];
                fa.push_back(ci);
            }
            Fq lead = make_fq(fd, b);
            lead.c[0] = 1;
            fa.push_back(lead);
            std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ (static_cast<std::uint64_t>(p) << 8) ^
                                (static_cast<std::uint64_t>(a) << 4) ^ static_cast<std::uint64_t>(b));
            // roots of f_a within level b: gcd with x^{q}-x is f_a itself
            // (a | b so f_a splits); split directly
            std::vector<Fq> roots;
            QPoly x{make_fq(fd, b), make_fq(fd, b)};
            x[1].c[0] = 1;
            QPoly xq = x;
            for (int i = 0; i < b; ++i) xq = qpow_mod(xq, static_cast<unsigned __int128>(p), fa, fd, b);
            QPoly diff = xq;
            diff.resize(std::max<size_t>(diff.size(), 2), make_fq(fd, b));
            diff[1] = fq_sub(diff[1], x[1]);
            qtrim(diff);
            QPoly split = qgcd(fa, diff);
            collect_roots(split, fd, b, rng, roots);
            if (static_cast<int>(roots.size()) != a)
                throw IrreducibleSearchFailed("tower polynomial failed to split in extension");
            std::sort(roots.begin(), roots.end());
            Fq img = roots.front();
            Fq pw = make_fq(fd, b);
            pw.c[0] = 1;
            for (int j = 0; j < a; ++j) {
                table[j] = pw.c;
                pw = fq_mul(pw, img);
            }
        }
    }

    FieldCtx ctx;
    ctx.d_ = std::move(d);
    return ctx;
}

FieldCtx FieldCtx::make_all(i64 p) { return make(p, {1, 2, 3, 4, 6}); }

i64 FieldCtx::p() const { return d_->p; }

bool FieldCtx::has_level(int k) const { return k >= 1 && k <= 6 && d_->has[k]; }

const std::vector<i64>& FieldCtx::tower_poly(int k) const {
    require_level(d_.get(), k);
    return d_->poly[k];
}

Fq FieldCtx::zero(int level) const {
    require_level(d_.get(), level);
    return make_fq(d_.get(), level);
}

Fq FieldCtx::one(int level) const {
    Fq r = zero(level);
    r.c[0] = 1;
    return r;
}

Fq FieldCtx::from_int(i64 v, int level) const {
    Fq r = zero(level);
    r.c[0] = d_->norm(v);
    return r;
}

Fq FieldCtx::element(const std::vector<i64>& coords, int level) const {
    Fq r = zero(level);
    if (static_cast<int>(coords.size()) > level)
        throw std::invalid_argument("too many coordinates for level");
    for (size_t i = 0; i < coords.size(); ++i) r.c[i] = d_->norm(coords[i]);
    return r;
}

Fq FieldCtx::gen(int level) const {
    Fq r = zero(level);
    if (level == 1)
        r.c[0] = 1;
    else
        r.c[1] = 1;
    return r;
}

Fq FieldCtx::inv(const Fq& a) const { return fq_inv(a); }

Fq FieldCtx::pow(const Fq& a, i64 e) const {
    if (e >= 0) return fq_pow(a, static_cast<unsigned __int128>(e));
    return fq_pow(fq_inv(a), static_cast<unsigned __int128>(-e));
}

Fq FieldCtx::frobenius(const Fq& a) const { return fq_pow(a, static_cast<unsigned __int128>(d_->p)); }

Fq FieldCtx::embed(const Fq& a, int to_level) const { return fq_embed(a, to_level); }

Fq FieldCtx::project(const Fq& a, int to_level) const {
    require_level(d_.get(), to_level);
    if (a.level == to_level) return a;
    if (a.level % to_level != 0 || !a.is_in_sublevel(to_level))
        throw std::invalid_argument("element does not lie in the requested sublevel");
    // solve embed(x) = a: the embedding is F_p-linear with known images of
    // the power basis
    const int s = to_level, k = a.level;
    const i64 p = d_->p;
    // columns: embeddings of t_s^j
    std::vector<std::array<i64, 6>> cols(s);
    if (s == 1) {
        cols[0] = {};
        cols[0][0] = 1;
    } else {
        for (int j = 0; j < s; ++j) cols[j] = d_->emb[s][k][j];
    }
    // Gaussian elimination on the k x (s+1) system
    std::vector<std::array<i64, 7>> m(k);
    for (int r = 0; r < k; ++r) {
        for (int j = 0; j < s; ++j) m[r][j] = cols[j][r];
        m[r][s] = a.c[r];
    }
    std::vector<i64> sol(s, 0);
    int row = 0;
    std::vector<int> pivot_col(k, -1);
    for (int col = 0; col < s && row < k; ++col) {
        int pr = -1;
        for (int r = row; r < k; ++r)
            if (m[r][col] != 0) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        std::swap(m[pr], m[row]);
        i64 li = inv_mod(m[row][col], p);
        for (int j = col; j <= s; ++j) m[row][j] = m[row][j] * li % p;
        for (int r = 0; r < k; ++r) {
            if (r == row || m[r][col] == 0) continue;
            i64 c = m[r][col];
            for (int j = col; j <= s; ++j) m[r][j] = ((m[r][j] - c * m[row][j]) % p + p) % p;
        }
        pivot_col[row] = col;
        ++row;
    }
    for (int r = 0; r < row; ++r) sol[pivot_col[r]] = m[r][s];
    Fq out = zero(s);
    for (int j = 0; j < s; ++j) out.c[j] = sol[j];
    return out;
}

std::vector<Fq> FieldCtx::roots_in_level(const std::vector<Fq>& coeffs, int level) const {
    require_level(d_.get(), level);
    const FieldData* fd = d_.get();
    QPoly g;
    for (const auto& c : coeffs) g.push_back(fq_embed(c, level));
    qtrim(g);
    if (g.empty()) throw std::invalid_argument("root finding on the zero polynomial");
    if (qdeg(g) == 0) return {};
    // make monic
    Fq s = fq_inv(g.back());
    for (auto& v : g) v = fq_mul(v, s);
    // product of distinct linear factors: gcd(g, x^q - x)
    QPoly x{make_fq(fd, level), make_fq(fd, level)};
    x[1].c[0] = 1;
    QPoly xq = qmod(x, g);
    for (int i = 0; i < level; ++i)
        xq = qpow_mod(xq, static_cast<unsigned __int128>(fd->p), g, fd, level);
    QPoly diff = xq;
    diff.resize(std::max<size_t>(diff.size(), 2), make_fq(fd, level));
    diff[1] = fq_sub(diff[1], [&] {
        Fq one = make_fq(fd, level);
        one.c[0] = 1;
        return one;
    }());
    qtrim(diff);
    QPoly h = qgcd(g, diff);
    std::vector<Fq> roots;
    std::uint64_t seed = 0x243f6a8885a308d3ULL ^ static_cast<std::uint64_t>(fd->p);
    for (const auto& c : g)
        for (int i = 0; i < c.level; ++i) seed = seed * 1099511628211ULL + static_cast<std::uint64_t>(c.c[i] + 1);
    std::mt19937_64 rng(seed ^ static_cast<std::uint64_t>(level));
    collect_roots(h, fd, level, rng, roots);
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::vector<Fq> FieldCtx::nth_roots(const Fq& a, int n, int target_level) const {
    if (n != 2 && n != 3) throw std::invalid_argument("nth_roots supports n in {2,3}");
    require_level(d_.get(), target_level);
    if (target_level % a.level != 0)
        throw std::invalid_argument("element level must divide the target level");
    std::vector<Fq> coeffs(n + 1, zero(target_level));
    coeffs[0] = -fq_embed(a, target_level);
    coeffs[n] = one(target_level);
    return roots_in_level(coeffs, target_level);
}

} // namespace cnets::gf
