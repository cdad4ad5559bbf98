#include "symcyc/fp_poly.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <unordered_map>

namespace symcyc::fp {

namespace {

constexpr int kMulSchoolbook = 80;
constexpr int kDivSchoolbook = 128;
constexpr int kGcdSchoolbook = 768;
constexpr int kHgcdBase = 192;

struct Mont {
    u32 mod = 0, ninv = 0, r2 = 0, one = 0;
    Mont() = default;
    explicit Mont(u32 m) : mod(m) {
        u32 inv = m;
        for (int i = 0; i < 4; ++i) inv *= 2 - m * inv;  // m * inv == 1 mod 2^32
        ninv = ~inv + 1;
        u64 r32 = (u64(1) << 32) % m;
        r2 = static_cast<u32>(r32 * r32 % m);
        one = static_cast<u32>(r32);
    }
    u32 mul(u32 a, u32 b) const {
        u64 t = static_cast<u64>(a) * b;
        u32 m = static_cast<u32>(t) * ninv;
        u32 res = static_cast<u32>((t + static_cast<u64>(m) * mod) >> 32);
        return res >= mod ? res - mod : res;
    }
    u32 to(u32 x) const { return mul(x, r2); }
    u32 from(u32 x) const { return mul(x, 1); }
    u32 add(u32 a, u32 b) const {
        u32 r = a + b;
        return r >= mod ? r - mod : r;
    }
    u32 sub(u32 a, u32 b) const { return a >= b ? a - b : a + mod - b; }
};

struct NttPlan {
    u64 mu = 0;
    Mont mont;
    int capacity = 0;
    u64 generator = 0;
    // per level s: twiddles w^0..w^{2^{s-1}-1} for the 2^s-point butterflies
    std::vector<std::vector<u32>> tw, itw;

    explicit NttPlan(u64 m) : mu(m), mont(static_cast<u32>(m)) {
        u64 t = m - 1;
        while ((t & 1) == 0) t >>= 1, ++capacity;
        auto fac = prime_factors(m - 1);
        for (u64 g = 2;; ++g) {
            bool ok = true;
            for (int p : fac)
                if (powmod(g, (m - 1) / static_cast<u64>(p), m) == 1) {
                    ok = false;
                    break;
                }
            if (ok) {
                generator = g;
                break;
            }
        }
        tw.resize(static_cast<size_t>(capacity) + 1);
        itw.resize(static_cast<size_t>(capacity) + 1);
    }

    const std::vector<u32>& level(int s, bool inverse) {
        auto& slot = inverse ? itw[static_cast<size_t>(s)] : tw[static_cast<size_t>(s)];
        if (!slot.empty()) return slot;
        size_t half = size_t(1) << (s - 1);
        u64 w = powmod(generator, (mu - 1) >> s, mu);
        if (inverse) w = invmod(w, mu);
        slot.resize(half);
        u32 wm = mont.to(static_cast<u32>(w));
        slot[0] = mont.one;
        for (size_t i = 1; i < half; ++i) slot[i] = mont.mul(slot[i - 1], wm);
        return slot;
    }
};

NttPlan& plan_for(u64 mu) {
    thread_local std::unordered_map<u64, NttPlan*> cache;
    auto it = cache.find(mu);
    if (it != cache.end()) return *it->second;
    auto* p = new NttPlan(mu);
    cache.emplace(mu, p);
    return *p;
}

// Decimation-in-frequency forward (natural order in, bit-reversed out)
// paired with decimation-in-time inverse; no bit-reversal pass is needed
// for convolution.
void ntt(std::vector<u32>& a, bool inverse, NttPlan& pl) {
    const Mont& M = pl.mont;
    const size_t n = a.size();
    if (n == 1) return;
    int lg = 0;
    while ((size_t(1) << lg) < n) ++lg;
    if (!inverse) {
        for (int s = lg; s >= 1; --s) {
            const size_t len = size_t(1) << s;
            const size_t half = len >> 1;
            const std::vector<u32>& w = pl.level(s, false);
            for (size_t i = 0; i < n; i += len) {
                const u32* wp = w.data();
                u32* lo = a.data() + i;
                u32* hi = lo + half;
                for (size_t j = 0; j < half; ++j) {
                    u32 u = lo[j], v = hi[j];
                    lo[j] = M.add(u, v);
                    hi[j] = M.mul(M.sub(u, v), wp[j]);
                }
            }
        }
    } else {
        for (int s = 1; s <= lg; ++s) {
            const size_t len = size_t(1) << s;
            const size_t half = len >> 1;
            const std::vector<u32>& w = pl.level(s, true);
            for (size_t i = 0; i < n; i += len) {
                const u32* wp = w.data();
                u32* lo = a.data() + i;
                u32* hi = lo + half;
                for (size_t j = 0; j < half; ++j) {
                    u32 u = lo[j];
                    u32 v = M.mul(hi[j], wp[j]);
                    lo[j] = M.add(u, v);
                    hi[j] = M.sub(u, v);
                }
            }
        }
        u32 ninv = M.to(static_cast<u32>(invmod(static_cast<u64>(n), pl.mu)));
        for (auto& x : a) x = M.mul(x, ninv);
    }
}

// Frequency-domain fusion for the 2x2 combinations used by the half-gcd:
// transform each distinct operand once, combine pointwise, invert twice.
struct Freq {
    std::vector<u32> v;
};

Freq forward(const FpPoly& p, size_t n, NttPlan& pl) {
    Freq f;
    f.v.assign(n, 0);
    for (size_t i = 0; i < p.size(); ++i) f.v[i] = pl.mont.to(static_cast<u32>(p[i]));
    ntt(f.v, false, pl);
    return f;
}

FpPoly backward(std::vector<u32> v, size_t out_len, NttPlan& pl) {
    ntt(v, true, pl);
    FpPoly r(std::min(out_len, v.size()));
    for (size_t i = 0; i < r.size(); ++i) r[i] = pl.mont.from(v[i]);
    trim(r);
    return r;
}

// lhs0*rhs0 + lhs1*rhs1 with shared transforms
FpPoly fused_pair(const Freq& l0, const Freq& r0, const Freq& l1, const Freq& r1, size_t n,
                  size_t out_len, NttPlan& pl) {
    const Mont& M = pl.mont;
    std::vector<u32> acc(n);
    for (size_t i = 0; i < n; ++i)
        acc[i] = M.add(M.mul(l0.v[i], r0.v[i]), M.mul(l1.v[i], r1.v[i]));
    return backward(std::move(acc), out_len, pl);
}

size_t fuse_size(int max_out_deg) {
    size_t n = 1;
    while (static_cast<long>(n) < max_out_deg + 1) n <<= 1;
    return n;
}

FpPoly mul_schoolbook(const FpPoly& a, const FpPoly& b, u64 mu) {
    if (a.empty() || b.empty()) return {};
    Reducer R(mu);
    FpPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        u64 ai = a[i];
        if (!ai) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = R.reduce(r[i + j] + ai * b[j]);
    }
    trim(r);
    return r;
}

FpPoly mul_karatsuba(const FpPoly& a, const FpPoly& b, u64 mu) {
    if (std::min(a.size(), b.size()) <= static_cast<size_t>(kMulSchoolbook))
        return mul_schoolbook(a, b, mu);
    size_t h = std::max(a.size(), b.size()) / 2;
    auto lo = [&](const FpPoly& p) {
        FpPoly r(p.begin(), p.begin() + static_cast<long>(std::min(h, p.size())));
        trim(r);
        return r;
    };
    auto hi = [&](const FpPoly& p) {
        return p.size() > h ? FpPoly(p.begin() + static_cast<long>(h), p.end()) : FpPoly{};
    };
    FpPoly a0 = lo(a), a1 = hi(a), b0 = lo(b), b1 = hi(b);
    FpPoly z0 = mul_karatsuba(a0, b0, mu);
    FpPoly z2 = mul_karatsuba(a1, b1, mu);
    FpPoly z1 = mul_karatsuba(add(a0, a1, mu), add(b0, b1, mu), mu);
    z1 = sub(sub(z1, z0, mu), z2, mu);
    FpPoly r(a.size() + b.size() - 1, 0);
    auto acc = [&](const FpPoly& p, size_t off) {
        for (size_t i = 0; i < p.size(); ++i) {
            r[off + i] += p[i];
            if (r[off + i] >= mu) r[off + i] -= mu;
        }
    };
    acc(z0, 0);
    acc(z1, h);
    acc(z2, 2 * h);
    trim(r);
    return r;
}

FpPoly mul_ntt(const FpPoly& a, const FpPoly& b, u64 mu) {
    NttPlan& pl = plan_for(mu);
    const Mont& M = pl.mont;
    size_t need = a.size() + b.size() - 1;
    size_t n = 1;
    while (n < need) n <<= 1;
    std::vector<u32> fa(n, 0), fb(n, 0);
    for (size_t i = 0; i < a.size(); ++i) fa[i] = M.to(static_cast<u32>(a[i]));
    for (size_t i = 0; i < b.size(); ++i) fb[i] = M.to(static_cast<u32>(b[i]));
    ntt(fa, false, pl);
    ntt(fb, false, pl);
    for (size_t i = 0; i < n; ++i) fa[i] = M.mul(fa[i], fb[i]);
    ntt(fa, true, pl);
    FpPoly r(need);
    for (size_t i = 0; i < need; ++i) r[i] = M.from(fa[i]);
    trim(r);
    return r;
}

}  // namespace

int ntt_capacity(u64 mu) { return plan_for(mu).capacity; }

int deg(const FpPoly& a) { return static_cast<int>(a.size()) - 1; }

bool is_zero(const FpPoly& a) { return a.empty(); }

void trim(FpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

FpPoly add(const FpPoly& a, const FpPoly& b, u64 mu) {
    FpPoly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) {
        r[i] += b[i];
        if (r[i] >= mu) r[i] -= mu;
    }
    trim(r);
    return r;
}

FpPoly sub(const FpPoly& a, const FpPoly& b, u64 mu) {
    FpPoly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = r[i] >= b[i] ? r[i] - b[i] : r[i] + mu - b[i];
    trim(r);
    return r;
}

FpPoly scale(const FpPoly& a, u64 s, u64 mu) {
    Reducer R(mu);
    FpPoly r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = R.mul(a[i], s);
    trim(r);
    return r;
}

u64 eval(const FpPoly& a, u64 x, u64 mu) {
    Reducer R(mu);
    u64 r = 0;
    for (auto it = a.rbegin(); it != a.rend(); ++it) r = R.reduce(R.mul(r, x) + *it);
    return r;
}

FpPoly make_monic(FpPoly a, u64 mu) {
    trim(a);
    if (a.empty() || a.back() == 1) return a;
    return scale(a, invmod(a.back(), mu), mu);
}

FpPoly mul(const FpPoly& a, const FpPoly& b, u64 mu) {
    if (a.empty() || b.empty()) return {};
    if (std::min(a.size(), b.size()) <= static_cast<size_t>(kMulSchoolbook))
        return mul_schoolbook(a, b, mu);
    size_t need = a.size() + b.size() - 1;
    if (need <= (size_t(1) << ntt_capacity(mu))) return mul_ntt(a, b, mu);
    return mul_karatsuba(a, b, mu);
}

namespace {

// First n coefficients of 1/f, requires f[0] != 0.
FpPoly inv_series(const FpPoly& f, size_t n, u64 mu) {
    FpPoly g{invmod(f[0], mu)};
    size_t k = 1;
    const size_t cap = size_t(1) << ntt_capacity(mu);
    while (k < n) {
        k = std::min(2 * k, n);
        FpPoly fk(f.begin(), f.begin() + static_cast<long>(std::min(k, f.size())));
        trim(fk);
        size_t sz = 1;
        while (sz < 2 * k) sz <<= 1;
        if (g.size() > static_cast<size_t>(kMulSchoolbook) && sz <= cap) {
            // shared-transform update: g <- g * (2 - f*g) mod x^k
            NttPlan& pl = plan_for(mu);
            Freq Fg = forward(g, sz, pl);
            Freq Ff = forward(fk, sz, pl);
            const Mont& M = pl.mont;
            std::vector<u32> prod(sz);
            for (size_t i = 0; i < sz; ++i) prod[i] = M.mul(Fg.v[i], Ff.v[i]);
            FpPoly t = backward(std::move(prod), k, pl);
            t.resize(k, 0);
            for (auto& x : t) x = x ? mu - x : 0;
            t[0] = (t[0] + 2) % mu;
            trim(t);
            Freq Ft = forward(t, sz, pl);
            std::vector<u32> upd(sz);
            for (size_t i = 0; i < sz; ++i) upd[i] = M.mul(Fg.v[i], Ft.v[i]);
            g = backward(std::move(upd), k, pl);
        } else {
            FpPoly t = mul(fk, g, mu);
            t.resize(k, 0);
            for (auto& x : t) x = x ? mu - x : 0;
            t[0] = (t[0] + 2) % mu;
            trim(t);
            g = mul(g, t, mu);
        }
        g.resize(k, 0);
    }
    g.resize(n, 0);
    return g;
}

void divmod_schoolbook(const FpPoly& a, const FpPoly& b, u64 mu, FpPoly* quo, FpPoly* rem_out) {
    FpPoly r = a;
    int db = deg(b);
    FpPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
    u64 lcinv = invmod(b.back(), mu);
    Reducer R(mu);
    for (int k = static_cast<int>(q.size()) - 1; k >= 0; --k) {
        u64 c = R.mul(r[static_cast<size_t>(k + db)], lcinv);
        if (!c) continue;
        q[static_cast<size_t>(k)] = c;
        for (int i = 0; i <= db; ++i) {
            u64& x = r[static_cast<size_t>(k + i)];
            u64 t = R.mul(c, b[static_cast<size_t>(i)]);
            x = x >= t ? x - t : x + mu - t;
        }
    }
    r.resize(static_cast<size_t>(db));
    trim(r);
    trim(q);
    if (quo) *quo = std::move(q);
    if (rem_out) *rem_out = std::move(r);
}

}  // namespace

void divmod(const FpPoly& a, const FpPoly& b, u64 mu, FpPoly* quo, FpPoly* rem_out) {
    if (is_zero(b)) throw std::domain_error("fp polynomial division by zero");
    int da = deg(a), db = deg(b);
    if (da < db) {
        if (quo) quo->clear();
        if (rem_out) *rem_out = a;
        return;
    }
    if (db <= kDivSchoolbook || da - db <= kDivSchoolbook) {
        divmod_schoolbook(a, b, mu, quo, rem_out);
        return;
    }
    size_t qlen = static_cast<size_t>(da - db) + 1;
    FpPoly ra(a.rbegin(), a.rend());
    ra.resize(qlen);
    trim(ra);
    FpPoly rb(b.rbegin(), b.rend());
    FpPoly rbi = inv_series(rb, qlen, mu);
    FpPoly rq = mul(ra, rbi, mu);
    rq.resize(qlen, 0);
    FpPoly q(rq.rbegin(), rq.rend());
    trim(q);
    if (rem_out) {
        FpPoly t = mul(q, b, mu);
        FpPoly r = sub(a, t, mu);
        r.resize(static_cast<size_t>(db));
        trim(r);
        *rem_out = std::move(r);
    }
    if (quo) *quo = std::move(q);
}

FpPoly rem(const FpPoly& a, const FpPoly& b, u64 mu) {
    FpPoly r;
    divmod(a, b, mu, nullptr, &r);
    return r;
}

FpPoly quot(const FpPoly& a, const FpPoly& b, u64 mu) {
    FpPoly q;
    divmod(a, b, mu, &q, nullptr);
    return q;
}

namespace {

struct Mat22 {
    FpPoly m00, m01, m10, m11;
    static Mat22 identity() { return {{1}, {}, {}, {1}}; }
};

Mat22 mat_mul(const Mat22& A, const Mat22& B, u64 mu) {
    int da = std::max(std::max(deg(A.m00), deg(A.m01)), std::max(deg(A.m10), deg(A.m11)));
    int db = std::max(std::max(deg(B.m00), deg(B.m01)), std::max(deg(B.m10), deg(B.m11)));
    int out = da + db;
    if (da < kMulSchoolbook || db < kMulSchoolbook ||
        out + 1 > (1ll << ntt_capacity(mu))) {
        return {add(mul(A.m00, B.m00, mu), mul(A.m01, B.m10, mu), mu),
                add(mul(A.m00, B.m01, mu), mul(A.m01, B.m11, mu), mu),
                add(mul(A.m10, B.m00, mu), mul(A.m11, B.m10, mu), mu),
                add(mul(A.m10, B.m01, mu), mul(A.m11, B.m11, mu), mu)};
    }
    NttPlan& pl = plan_for(mu);
    size_t n = fuse_size(out);
    Freq a00 = forward(A.m00, n, pl), a01 = forward(A.m01, n, pl), a10 = forward(A.m10, n, pl),
         a11 = forward(A.m11, n, pl);
    Freq b00 = forward(B.m00, n, pl), b01 = forward(B.m01, n, pl), b10 = forward(B.m10, n, pl),
         b11 = forward(B.m11, n, pl);
    size_t out_len = static_cast<size_t>(out) + 1;
    return {fused_pair(a00, b00, a01, b10, n, out_len, pl),
            fused_pair(a00, b01, a01, b11, n, out_len, pl),
            fused_pair(a10, b00, a11, b10, n, out_len, pl),
            fused_pair(a10, b01, a11, b11, n, out_len, pl)};
}

void mat_apply(const Mat22& A, FpPoly& a, FpPoly& b, u64 mu) {
    int dm = std::max(std::max(deg(A.m00), deg(A.m01)), std::max(deg(A.m10), deg(A.m11)));
    int dv = std::max(deg(a), deg(b));
    int out = dm + dv;
    if (dm < kMulSchoolbook || dv < kMulSchoolbook ||
        out + 1 > (1ll << ntt_capacity(mu))) {
        FpPoly na = add(mul(A.m00, a, mu), mul(A.m01, b, mu), mu);
        FpPoly nb = add(mul(A.m10, a, mu), mul(A.m11, b, mu), mu);
        a = std::move(na);
        b = std::move(nb);
        return;
    }
    NttPlan& pl = plan_for(mu);
    size_t n = fuse_size(out);
    Freq fa = forward(a, n, pl), fb = forward(b, n, pl);
    Freq m00 = forward(A.m00, n, pl), m01 = forward(A.m01, n, pl), m10 = forward(A.m10, n, pl),
         m11 = forward(A.m11, n, pl);
    size_t out_len = static_cast<size_t>(out) + 1;
    FpPoly na = fused_pair(m00, fa, m01, fb, n, out_len, pl);
    FpPoly nb = fused_pair(m10, fa, m11, fb, n, out_len, pl);
    a = std::move(na);
    b = std::move(nb);
}

FpPoly shift_down(const FpPoly& a, int k) {
    if (static_cast<int>(a.size()) <= k) return {};
    return FpPoly(a.begin() + k, a.end());
}

FpPoly low_part(const FpPoly& a, int k) {
    FpPoly r(a.begin(), a.begin() + std::min<long>(k, static_cast<long>(a.size())));
    trim(r);
    return r;
}

FpPoly shift_up_add(const FpPoly& hi, int k, const FpPoly& lo, u64 mu) {
    FpPoly r(hi.size() + static_cast<size_t>(k), 0);
    for (size_t i = 0; i < lo.size(); ++i) r[i] = lo[i];
    for (size_t i = 0; i < hi.size(); ++i) {
        u64& x = r[i + static_cast<size_t>(k)];
        x += hi[i];
        if (x >= mu) x -= mu;
    }
    trim(r);
    return r;
}

// Left-multiply M by [[0,1],[1,-q]] (one Euclid step).
Mat22 euclid_step(const FpPoly& q, Mat22 M, u64 mu) {
    FpPoly t0 = sub(M.m00, mul(q, M.m10, mu), mu);
    FpPoly t1 = sub(M.m01, mul(q, M.m11, mu), mu);
    return {std::move(M.m10), std::move(M.m11), std::move(t0), std::move(t1)};
}

struct HgcdResult {
    Mat22 M;      // valid only when requested
    FpPoly ra, rb;  // the reduced pair M * (a, b)
};

// In-place remainder Euclid with matrix tracking for small degrees. The
// quotient is applied directly to the dividend buffer and to the matrix
// rows without temporary allocations.
HgcdResult hgcd_base(FpPoly x, FpPoly y, int m, u64 mu) {
    Reducer R(mu);
    // matrix rows as flat buffers with explicit degrees
    FpPoly m00{1}, m01, m10, m11{1};
    FpPoly q;
    while (deg(y) >= m) {
        int dx = deg(x), dy = deg(y);
        q.assign(static_cast<size_t>(dx - dy) + 1, 0);
        u64 lcinv = invmod(y.back(), mu);
        for (int k = dx - dy; k >= 0; --k) {
            u64 c = R.mul(x[static_cast<size_t>(k + dy)], lcinv);
            if (!c) continue;
            q[static_cast<size_t>(k)] = c;
            const size_t off = static_cast<size_t>(k);
            for (int i = 0; i <= dy; ++i) {
                u64 t = R.mul(c, y[static_cast<size_t>(i)]);
                u64& xv = x[off + static_cast<size_t>(i)];
                xv = xv >= t ? xv - t : xv + mu - t;
            }
        }
        x.resize(static_cast<size_t>(dy));
        trim(x);
        // (m00,m01; m10,m11) <- (m10,m11; m00-q*m10, m01-q*m11)
        auto fma_sub = [&](FpPoly& hi, const FpPoly& lo) {
            // hi -= q * lo, in place
            if (lo.empty() || q.empty()) return;
            if (hi.size() < q.size() + lo.size() - 1) hi.resize(q.size() + lo.size() - 1, 0);
            for (size_t i = 0; i < q.size(); ++i) {
                u64 qc = q[i];
                if (!qc) continue;
                for (size_t j = 0; j < lo.size(); ++j) {
                    u64 t = R.mul(qc, lo[j]);
                    u64& h = hi[i + j];
                    h = h >= t ? h - t : h + mu - t;
                }
            }
            trim(hi);
        };
        fma_sub(m00, m10);
        fma_sub(m01, m11);
        m00.swap(m10);
        m01.swap(m11);
        x.swap(y);
    }
    return {{std::move(m00), std::move(m01), std::move(m10), std::move(m11)}, std::move(x),
            std::move(y)};
}

// Reduce (a, b) with deg a > deg b to (ra, rb) with
// deg ra >= ceil(deg a / 2) > deg rb. The transform matrix is composed only
// when the caller needs it; the reduced pair is always returned, computed
// from half-size products on the way back up.
HgcdResult hgcd(const FpPoly& a, const FpPoly& b, u64 mu, bool with_matrix) {
    int n = deg(a);
    int m = (n + 1) / 2;
    if (deg(b) < m) return {Mat22::identity(), a, b};
    if (n <= kHgcdBase) return hgcd_base(a, b, m, mu);
    HgcdResult r1 = hgcd(shift_down(a, m), shift_down(b, m), mu, true);
    FpPoly c0 = low_part(a, m), d0 = low_part(b, m);
    mat_apply(r1.M, c0, d0, mu);
    FpPoly c = shift_up_add(r1.ra, m, c0, mu);
    FpPoly d = shift_up_add(r1.rb, m, d0, mu);
    if (deg(d) < m) return {std::move(r1.M), std::move(c), std::move(d)};
    FpPoly q, r;
    divmod(c, d, mu, &q, &r);
    if (deg(r) < m) {
        Mat22 M2;
        if (with_matrix) M2 = euclid_step(q, std::move(r1.M), mu);
        return {std::move(M2), std::move(d), std::move(r)};
    }
    int k = 2 * m - deg(d);
    HgcdResult r3 = hgcd(shift_down(d, k), shift_down(r, k), mu, true);
    FpPoly e0 = low_part(d, k), f0 = low_part(r, k);
    mat_apply(r3.M, e0, f0, mu);
    FpPoly e = shift_up_add(r3.ra, k, e0, mu);
    FpPoly f = shift_up_add(r3.rb, k, f0, mu);
    Mat22 Mout;
    if (with_matrix) Mout = mat_mul(r3.M, euclid_step(q, std::move(r1.M), mu), mu);
    return {std::move(Mout), std::move(e), std::move(f)};
}

}  // namespace

FpPoly gcd(FpPoly a, FpPoly b, u64 mu) {
    trim(a);
    trim(b);
    if (is_zero(a)) return make_monic(std::move(b), mu);
    if (is_zero(b)) return make_monic(std::move(a), mu);
    if (deg(a) < deg(b)) std::swap(a, b);
    while (true) {
        if (is_zero(b)) return make_monic(std::move(a), mu);
        if (deg(b) <= kGcdSchoolbook) {
            if (deg(a) - deg(b) > kDivSchoolbook) {
                FpPoly r = rem(a, b, mu);
                a = std::move(b);
                b = std::move(r);
                if (is_zero(b)) return make_monic(std::move(a), mu);
            }
            Reducer R(mu);
            while (!is_zero(b)) {
                int dx = deg(a), dy = deg(b);
                u64 lcinv = invmod(b.back(), mu);
                for (int k = dx - dy; k >= 0; --k) {
                    u64 c = R.mul(a[static_cast<size_t>(k + dy)], lcinv);
                    if (!c) continue;
                    for (int i = 0; i <= dy; ++i) {
                        u64 t = R.mul(c, b[static_cast<size_t>(i)]);
                        u64& xv = a[static_cast<size_t>(k + i)];
                        xv = xv >= t ? xv - t : xv + mu - t;
                    }
                }
                a.resize(static_cast<size_t>(dy));
                trim(a);
                a.swap(b);
            }
            return make_monic(std::move(a), mu);
        }
        if (deg(a) - deg(b) > kDivSchoolbook) {
            // large degree gap: one fast reduction first
            FpPoly r = rem(a, b, mu);
            a = std::move(b);
            b = std::move(r);
            continue;
        }
        HgcdResult h = hgcd(a, b, mu, false);
        a = std::move(h.ra);
        b = std::move(h.rb);
        if (is_zero(b)) return make_monic(std::move(a), mu);
        if (deg(a) < deg(b)) std::swap(a, b);
        FpPoly r = rem(a, b, mu);
        a = std::move(b);
        b = std::move(r);
    }
}

FpPoly lcm(const FpPoly& a, const FpPoly& b, u64 mu) {
    if (is_zero(a) || is_zero(b)) return {};
    FpPoly g = gcd(a, b, mu);
    return make_monic(mul(a, quot(b, g, mu), mu), mu);
}

}  // namespace symcyc::fp
