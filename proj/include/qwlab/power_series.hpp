#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qwlab/errors.hpp"

namespace qwlab {

using bigint = boost::multiprecision::cpp_int;
using rational = boost::multiprecision::cpp_rational;

// Formal power series truncated at order trunc(): coefficients of z^0 .. z^trunc.
// Arithmetic is exact for exact coefficient types; truncation propagates as the
// minimum of the operands.
template <class T>
class PowerSeries {
  public:
    PowerSeries() : c_(1, T(0)) {}
    explicit PowerSeries(int trunc) : c_(static_cast<size_t>(trunc) + 1, T(0)) {}
    PowerSeries(std::vector<T> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) c_.assign(1, T(0));
    }

    static PowerSeries constant(const T& v, int trunc) {
        PowerSeries s(trunc);
        s.c_[0] = v;
        return s;
    }
    // z^k within truncation trunc.
    static PowerSeries monomial(const T& v, int k, int trunc) {
        PowerSeries s(trunc);
        if (k <= trunc) s.c_[static_cast<size_t>(k)] = v;
        return s;
    }

    int trunc() const { return static_cast<int>(c_.size()) - 1; }
    const T& operator[](int n) const { return c_[static_cast<size_t>(n)]; }
    T& operator[](int n) { return c_[static_cast<size_t>(n)]; }
    const std::vector<T>& coeffs() const { return c_; }

    PowerSeries truncated(int new_trunc) const {
        PowerSeries s(new_trunc);
        const int keep = std::min(new_trunc, trunc());
        for (int n = 0; n <= keep; ++n) s.c_[static_cast<size_t>(n)] = c_[static_cast<size_t>(n)];
        return s;
    }

    // Multiply by z^k; truncation grows so no coefficient is lost.
    PowerSeries shift_up(int k) const {
        PowerSeries s(trunc() + k);
        for (int n = 0; n <= trunc(); ++n) s.c_[static_cast<size_t>(n + k)] = c_[static_cast<size_t>(n)];
        return s;
    }

    // Divide by z^k; the low-order coefficients must vanish.
    PowerSeries shift_down(int k) const {
        for (int n = 0; n < k; ++n) {
            if (c_[static_cast<size_t>(n)] != T(0)) {
                throw std::invalid_argument("shift_down would drop a nonzero coefficient");
            }
        }
        PowerSeries s(trunc() - k);
        for (int n = k; n <= trunc(); ++n) s.c_[static_cast<size_t>(n - k)] = c_[static_cast<size_t>(n)];
        return s;
    }

    friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
        PowerSeries s(std::min(a.trunc(), b.trunc()));
        for (int n = 0; n <= s.trunc(); ++n) s[n] = a[n] + b[n];
        return s;
    }
    friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
        PowerSeries s(std::min(a.trunc(), b.trunc()));
        for (int n = 0; n <= s.trunc(); ++n) s[n] = a[n] - b[n];
        return s;
    }
    friend PowerSeries operator-(const PowerSeries& a) {
        PowerSeries s(a.trunc());
        for (int n = 0; n <= s.trunc(); ++n) s[n] = -a[n];
        return s;
    }
    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
        PowerSeries s(std::min(a.trunc(), b.trunc()));
        for (int i = 0; i <= s.trunc(); ++i) {
            if (a[i] == T(0)) continue;
            for (int j = 0; i + j <= s.trunc(); ++j) s[i + j] += a[i] * b[j];
        }
        return s;
    }
    friend PowerSeries operator*(const T& v, const PowerSeries& a) {
        PowerSeries s(a.trunc());
        for (int n = 0; n <= s.trunc(); ++n) s[n] = v * a[n];
        return s;
    }
    friend bool operator==(const PowerSeries& a, const PowerSeries& b) { return a.c_ == b.c_; }

    // Reciprocal series; requires an invertible constant term.
    PowerSeries inverse() const {
        if (c_[0] == T(0)) throw std::invalid_argument("series with zero constant term has no inverse");
        PowerSeries s(trunc());
        s[0] = T(1) / c_[0];
        for (int n = 1; n <= trunc(); ++n) {
            T acc(0);
            for (int k = 1; k <= n; ++k) acc += c_[static_cast<size_t>(k)] * s[n - k];
            s[n] = -acc / c_[0];
        }
        return s;
    }

  private:
    std::vector<T> c_;
};

// num/den with den(0) invertible, computed by one forward substitution pass.
template <class T>
PowerSeries<T> divide(const PowerSeries<T>& num, const PowerSeries<T>& den) {
    if (den[0] == T(0)) throw std::invalid_argument("division by series with zero constant term");
    PowerSeries<T> s(std::min(num.trunc(), den.trunc()));
    for (int n = 0; n <= s.trunc(); ++n) {
        T acc = num[n];
        for (int k = 1; k <= n; ++k) acc -= den[k] * s[n - k];
        s[n] = acc / den[0];
    }
    return s;
}

// Principal square root s of a with s(0) = 1, by Newton iteration
// s <- (s + a/s)/2 with order doubling. Requires a(0) = 1.
template <class T>
PowerSeries<T> ps_sqrt(const PowerSeries<T>& a) {
    if (a[0] != T(1)) {
        throw bad_leading_coefficient("series square root requires constant term 1");
    }
    const T half = T(1) / T(2);
    PowerSeries<T> s = PowerSeries<T>::constant(T(1), 0);
    int prec = 0;
    while (prec < a.trunc()) {
        prec = std::min(2 * prec + 1, a.trunc());
        PowerSeries<T> cur = s.truncated(prec);
        s = half * (cur + divide(a.truncated(prec), cur));
    }
    return s;
}

using RationalSeries = PowerSeries<rational>;

inline RationalSeries ps_add(const RationalSeries& a, const RationalSeries& b) { return a + b; }
inline RationalSeries ps_mul(const RationalSeries& a, const RationalSeries& b) { return a * b; }

}  // namespace qwlab
