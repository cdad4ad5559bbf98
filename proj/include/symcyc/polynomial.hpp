#pragma once

#include <algorithm>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "symcyc/errors.hpp"

namespace symcyc {

/// Dense univariate polynomial with coefficients in ascending degree order.
/// Canonical form: no trailing zero coefficients; the zero polynomial has an
/// empty coefficient list.
template <typename T>
class Polynomial {
  public:
    Polynomial() = default;
    Polynomial(std::initializer_list<T> cs) : c_(cs) { trim(); }
    explicit Polynomial(std::vector<T> cs) : c_(std::move(cs)) { trim(); }

    static Polynomial monomial(int degree, T coeff = T(1)) {
        std::vector<T> cs(static_cast<size_t>(degree) + 1, T(0));
        cs.back() = std::move(coeff);
        return Polynomial(std::move(cs));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<T>& coeffs() const { return c_; }

    T coeff(int k) const {
        if (k < 0 || k > degree()) return T(0);
        return c_[static_cast<size_t>(k)];
    }
    const T& leading() const { return c_.back(); }

    bool operator==(const Polynomial& o) const { return c_ == o.c_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial operator-() const {
        Polynomial r(*this);
        for (auto& x : r.c_) x = -x;
        return r;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<T> r(std::max(a.c_.size(), b.c_.size()), T(0));
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
        return Polynomial(std::move(r));
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        std::vector<T> r(std::max(a.c_.size(), b.c_.size()), T(0));
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
        return Polynomial(std::move(r));
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return Polynomial(std::move(r));
    }
    friend Polynomial operator*(const T& s, const Polynomial& a) {
        Polynomial r(a);
        for (auto& x : r.c_) x = s * x;
        r.trim();
        return r;
    }
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    /// Multiply by x^k.
    Polynomial shifted(int k) const {
        if (is_zero()) return {};
        std::vector<T> r(c_.size() + static_cast<size_t>(k), T(0));
        std::copy(c_.begin(), c_.end(), r.begin() + k);
        return Polynomial(std::move(r));
    }

    /// Exact division; throws InexactDivision if the divisor does not divide
    /// this polynomial over the coefficient ring.
    Polynomial div_exact(const Polynomial& d) const {
        if (d.is_zero()) throw InexactDivision("division by zero polynomial");
        if (is_zero()) return {};
        if (degree() < d.degree()) throw InexactDivision("degree of divisor exceeds dividend");
        std::vector<T> rem = c_;
        std::vector<T> quo(c_.size() - d.c_.size() + 1, T(0));
        for (int k = static_cast<int>(quo.size()) - 1; k >= 0; --k) {
            T& top = rem[static_cast<size_t>(k) + d.c_.size() - 1];
            if (top == T(0)) continue;
            T q = top / d.leading();
            if (q * d.leading() != top) throw InexactDivision("leading coefficient does not divide");
            quo[static_cast<size_t>(k)] = q;
            for (size_t i = 0; i < d.c_.size(); ++i)
                rem[static_cast<size_t>(k) + i] -= q * d.c_[i];
        }
        for (const T& x : rem)
            if (x != T(0)) throw InexactDivision("nonzero remainder in exact division");
        return Polynomial(std::move(quo));
    }

    /// True iff d divides this polynomial exactly.
    bool divisible_by(const Polynomial& d) const {
        try {
            (void)div_exact(d);
            return true;
        } catch (const InexactDivision&) {
            return false;
        }
    }

    T eval(const T& x) const {
        T r(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
        return r;
    }

    Polynomial derivative() const {
        if (degree() < 1) return {};
        std::vector<T> r(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = T(static_cast<long>(i)) * c_[i];
        return Polynomial(std::move(r));
    }

    std::string str(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (int k = degree(); k >= 0; --k) {
            const T& a = c_[static_cast<size_t>(k)];
            if (a == T(0)) continue;
            if (!first) os << (a < T(0) ? " - " : " + ");
            else if (a < T(0)) os << "-";
            T mag = a < T(0) ? T(-a) : a;
            if (mag != T(1) || k == 0) os << mag;
            if (k >= 1) {
                os << var;
                if (k > 1) os << "^" << k;
            }
            first = false;
        }
        return os.str();
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
    }
    std::vector<T> c_;
};

}  // namespace symcyc
