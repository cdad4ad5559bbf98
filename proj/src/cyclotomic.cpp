#include "symcyc/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "symcyc/errors.hpp"

namespace symcyc {

int euler_totient(int q) {
    int n = q, result = q;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            result -= result / p;
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

IntPoly cyclotomic_polynomial(int q) {
    static std::map<int, IntPoly> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto compute = [](auto&& self, int n) -> const IntPoly& {
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
        std::vector<Int> xn(static_cast<size_t>(n) + 1, Int(0));
        xn[0] = -1;
        xn.back() = 1;
        IntPoly num((std::vector<Int>(xn)));
        for (int d = 1; d < n; ++d)
            if (n % d == 0) num = num.div_exact(self(self, d));
        return cache.emplace(n, std::move(num)).first->second;
    };
    if (q < 1) throw UnsupportedQ("cyclotomic polynomial needs q >= 1");
    return compute(compute, q);
}

std::shared_ptr<const CycRing> CycRing::get(int q) {
    static std::map<int, std::shared_ptr<const CycRing>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(q);
    if (it != cache.end()) return it->second;
    auto ring = std::make_shared<CycRing>();
    ring->q = q;
    ring->phi = cyclotomic_polynomial(q);
    ring->deg = ring->phi.degree();
    const int deg = ring->deg;
    const int table = std::max(2 * deg, q) + 1;
    ring->xpow.resize(static_cast<size_t>(table));
    std::vector<Int> cur(static_cast<size_t>(deg), Int(0));
    if (deg > 0) cur[0] = 1;
    for (int k = 0; k < table; ++k) {
        ring->xpow[static_cast<size_t>(k)] = cur;
        // multiply by x modulo phi
        Int top = deg > 0 ? cur[static_cast<size_t>(deg - 1)] : Int(0);
        for (int i = deg - 1; i > 0; --i) cur[static_cast<size_t>(i)] = cur[static_cast<size_t>(i - 1)];
        if (deg > 0) cur[0] = 0;
        if (top != 0)
            for (int i = 0; i < deg; ++i)
                cur[static_cast<size_t>(i)] -= top * ring->phi.coeff(i);
    }
    cache.emplace(q, ring);
    return ring;
}

CycInt make_cyc(std::shared_ptr<const CycRing> ring, std::vector<Int> c) {
    CycInt x;
    x.ring_ = std::move(ring);
    x.c_ = std::move(c);
    x.c_.resize(static_cast<size_t>(x.ring_->deg), Int(0));
    return x;
}

CycInt::CycInt(int q, Int constant) {
    ring_ = CycRing::get(q);
    c_.assign(static_cast<size_t>(ring_->deg), Int(0));
    if (ring_->deg > 0) c_[0] = std::move(constant);
}

CycInt CycInt::omega_power(int q, long k) {
    auto ring = CycRing::get(q);
    long kk = ((k % q) + q) % q;
    return make_cyc(ring, ring->xpow[static_cast<size_t>(kk)]);
}

bool CycInt::is_zero() const {
    for (const Int& x : c_)
        if (x != 0) return false;
    return true;
}

CycInt CycInt::operator-() const {
    CycInt r = *this;
    for (Int& x : r.c_) x = -x;
    return r;
}

CycInt operator+(const CycInt& a, const CycInt& b) {
    if (!a.ring_) return b;
    if (!b.ring_) return a;
    CycInt r = a;
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
    return r;
}

CycInt operator-(const CycInt& a, const CycInt& b) {
    if (!b.ring_) return a;
    if (!a.ring_) return -b;
    CycInt r = a;
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] -= b.c_[i];
    return r;
}

CycInt operator*(const CycInt& a, const CycInt& b) {
    if (!a.ring_ || !b.ring_) return CycInt{};
    const auto& ring = *a.ring_;
    const int deg = ring.deg;
    std::vector<Int> raw(static_cast<size_t>(2 * deg - 1), Int(0));
    for (int i = 0; i < deg; ++i) {
        if (a.c_[static_cast<size_t>(i)] == 0) continue;
        for (int j = 0; j < deg; ++j) {
            if (b.c_[static_cast<size_t>(j)] == 0) continue;
            raw[static_cast<size_t>(i + j)] += a.c_[static_cast<size_t>(i)] * b.c_[static_cast<size_t>(j)];
        }
    }
    std::vector<Int> out(raw.begin(), raw.begin() + deg);
    for (int k = deg; k < 2 * deg - 1; ++k) {
        const Int& coeff = raw[static_cast<size_t>(k)];
        if (coeff == 0) continue;
        const auto& pw = ring.xpow[static_cast<size_t>(k)];
        for (int i = 0; i < deg; ++i) out[static_cast<size_t>(i)] += coeff * pw[static_cast<size_t>(i)];
    }
    return make_cyc(a.ring_, std::move(out));
}

CycInt operator*(const Int& s, const CycInt& a) {
    CycInt r = a;
    for (Int& x : r.c_) x *= s;
    return r;
}

bool CycInt::operator==(const CycInt& o) const {
    if (!ring_ || !o.ring_) return is_zero() && o.is_zero();
    if (ring_->q != o.ring_->q) return false;
    return c_ == o.c_;
}

std::string CycInt::str() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ",";
        os << c_[i];
    }
    os << "]";
    return os.str();
}

CycInt omega_j(int q, long j) {
    long jj = ((j % q) + q) % q;
    return CycInt::omega_power(q, jj) + CycInt::omega_power(q, (q - jj) % q);
}

CycMatrix CycMatrix::zero(int q, int rows, int cols) {
    CycMatrix m;
    m.q = q;
    m.rows = rows;
    m.cols = cols;
    m.e.assign(static_cast<size_t>(rows) * cols, CycInt(q, 0));
    return m;
}

CycMatrix CycMatrix::identity_times(int q, int n, Int scalar) {
    CycMatrix m = zero(q, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = CycInt(q, scalar);
    return m;
}

CycMatrix operator*(const CycMatrix& a, const CycMatrix& b) {
    CycMatrix r = CycMatrix::zero(a.q, a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (int j = 0; j < b.cols; ++j) r.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return r;
}

bool CycMatrix::operator==(const CycMatrix& o) const {
    return rows == o.rows && cols == o.cols && q == o.q && e == o.e;
}

std::vector<CycInt> CycMatrix::apply(const std::vector<CycInt>& v) const {
    std::vector<CycInt> r(static_cast<size_t>(rows), CycInt(q, 0));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (!at(i, j).is_zero() && !v[static_cast<size_t>(j)].is_zero())
                r[static_cast<size_t>(i)] += at(i, j) * v[static_cast<size_t>(j)];
    return r;
}

CycMatrix build_A(int q) {
    if (q <= 2) throw UnsupportedQ("symmetrized Fourier matrix needs q >= 3");
    if (q % 2 == 1) {
        int p = (q - 1) / 2;
        CycMatrix A = CycMatrix::zero(q, p + 1, p + 1);
        for (int i = 0; i <= p; ++i) A.at(i, 0) = CycInt(q, 1);
        for (int j = 1; j <= p; ++j) {
            A.at(0, j) = CycInt(q, 2);
            for (int i = 1; i <= p; ++i) A.at(i, j) = omega_j(q, static_cast<long>(i) * j);
        }
        return A;
    }
    int p = q / 2;
    CycMatrix A = CycMatrix::zero(q, p + 1, p + 1);
    for (int i = 0; i <= p; ++i) {
        A.at(i, 0) = CycInt(q, 1);
        A.at(i, p) = CycInt(q, i % 2 == 0 ? 1 : -1);
    }
    for (int j = 1; j < p; ++j) {
        A.at(0, j) = CycInt(q, 2);
        A.at(p, j) = CycInt(q, j % 2 == 0 ? 2 : -2);
        for (int i = 1; i < p; ++i) A.at(i, j) = omega_j(q, static_cast<long>(i) * j);
    }
    return A;
}

SignVector v_vector(int q, int k) {
    if (q % 2 == 0 || q < 3) throw UnsupportedQ("v vectors are defined for odd q >= 3");
    if (std::gcd(k, q) != 1) throw InvalidIndex("v vector index must be coprime to q");
    const int p = (q - 1) / 2;
    std::vector<int> t(static_cast<size_t>(p) + 1, 0);
    t[0] = 1;
    for (int j = 1; j <= p; ++j) {
        int n = p % 2 == 0 ? j / 2 : (j + 1) / 2;
        t[static_cast<size_t>(j)] = n % 2 == 0 ? 1 : -1;
    }
    if (k % q == 1) return {t};
    // permutation: omega_{jk} = omega_{pi(j)} with pi(j) = fold(jk mod q)
    std::vector<int> out(static_cast<size_t>(p) + 1, 0);
    out[0] = 1;
    for (int j = 1; j <= p; ++j) {
        long m = (static_cast<long>(j) * k) % q;
        if (m < 0) m += q;
        long folded = m <= p ? m : q - m;
        out[static_cast<size_t>(folded)] = t[static_cast<size_t>(j)];
    }
    return {out};
}

SignVector eta_vector(int q, int r) {
    if (q % 2 == 0 || r <= 1 || r >= q || q % r != 0)
        throw InvalidIndex("eta vector needs a proper divisor of odd q");
    SignVector vt = v_vector(q / r, 1);
    const int p = (q - 1) / 2;
    std::vector<int> out(static_cast<size_t>(p) + 1, 0);
    for (size_t j = 0; j < vt.entries.size(); ++j)
        out[j * static_cast<size_t>(r)] = vt.entries[j];
    return {out};
}

fp::u64 reduce_mod_prime(const CycInt& x, fp::u64 mu, fp::u64 g) {
    if (x.q() == 0) return 0;
    const int q = x.q();
    if ((mu - 1) % static_cast<fp::u64>(q) != 0) throw BadPrime("prime is not 1 mod q");
    if (fp::powmod(g, static_cast<fp::u64>(q), mu) != 1 ||
        fp::order_dividing(g, static_cast<fp::u64>(q), mu) != static_cast<fp::u64>(q))
        throw BadGenerator("element does not have exact order q");
    fp::u64 acc = 0;
    fp::u64 gi = 1;
    for (const Int& c : x.coeffs()) {
        Int cm = c % Int(mu);
        if (cm < 0) cm += Int(mu);
        acc = (acc + fp::mulmod(cm.convert_to<fp::u64>(), gi, mu)) % mu;
        gi = fp::mulmod(gi, g, mu);
    }
    return acc;
}

std::vector<std::vector<fp::u64>> reduce_matrix_mod_prime(const CycMatrix& m, fp::u64 mu, fp::u64 g) {
    std::vector<std::vector<fp::u64>> out(static_cast<size_t>(m.rows),
                                          std::vector<fp::u64>(static_cast<size_t>(m.cols), 0));
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) out[static_cast<size_t>(i)][static_cast<size_t>(j)] =
            reduce_mod_prime(m.at(i, j), mu, g);
    return out;
}

bool projectively_equal(const std::vector<CycInt>& u, const std::vector<CycInt>& v) {
    if (u.size() != v.size()) return false;
    bool u_zero = true, v_zero = true;
    for (const auto& x : u) u_zero = u_zero && x.is_zero();
    for (const auto& x : v) v_zero = v_zero && x.is_zero();
    if (u_zero || v_zero) return false;
    for (size_t i = 0; i < u.size(); ++i)
        for (size_t j = i + 1; j < u.size(); ++j)
            if (u[i] * v[j] != u[j] * v[i]) return false;
    return true;
}

std::vector<CycInt> reciprocal_products(const std::vector<CycInt>& x) {
    const size_t n = x.size();
    std::vector<CycInt> pre(n), suf(n);
    for (size_t i = 0; i < n; ++i) pre[i] = i == 0 ? x[0] : pre[i - 1] * x[i];
    for (size_t i = n; i-- > 0;) suf[i] = i + 1 == n ? x[i] : suf[i + 1] * x[i];
    std::vector<CycInt> out(n);
    for (size_t i = 0; i < n; ++i) {
        CycInt acc;
        if (i > 0) acc = pre[i - 1];
        if (i + 1 < n) acc = i > 0 ? acc * suf[i + 1] : suf[i + 1];
        out[i] = acc;
    }
    return out;
}

std::vector<CycInt> reciprocal_products_one_zero(const std::vector<CycInt>& x) {
    size_t zero_at = x.size();
    for (size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero()) {
            if (zero_at != x.size()) throw InvalidIndex("more than one zero coordinate");
            zero_at = i;
        }
    }
    if (zero_at == x.size()) throw InvalidIndex("no zero coordinate");
    std::vector<CycInt> rest;
    rest.reserve(x.size() - 1);
    for (size_t i = 0; i < x.size(); ++i)
        if (i != zero_at) rest.push_back(x[i]);
    std::vector<CycInt> partial = reciprocal_products(rest);
    std::vector<CycInt> out(x.size());
    size_t k = 0;
    for (size_t i = 0; i < x.size(); ++i) out[i] = i == zero_at ? CycInt{} : partial[k++];
    return out;
}

}  // namespace symcyc
