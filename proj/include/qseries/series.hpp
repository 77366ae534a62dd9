#pragma once

// Truncated power series in q with exact coefficients.

#include <algorithm>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qseries/error.hpp"
#include "qseries/integer.hpp"

namespace qseries {

namespace detail {
// Unqualified so coefficient types found by ADL (CycInt) participate.
template <class R>
bool coeff_is_zero(const R& c) { return is_zero(c); }
template <class R>
void coeff_add_product(R& acc, const R& a, const R& b) { add_product(acc, a, b); }
}  // namespace detail

/// Truncated power series sum_{n < precision} c_n q^n over a coefficient ring R.
///
/// `precision` is a certification bound: every coefficient below it is exact,
/// nothing at or beyond it is ever reported. Binary operations return the
/// minimum of the operand precisions.
template <class R>
class PowerSeries {
public:
    PowerSeries() = default;

    explicit PowerSeries(int precision) : coeffs_(checked(precision)) {}

    explicit PowerSeries(std::vector<R> coeffs) : coeffs_(std::move(coeffs)) {}

    static PowerSeries constant(R c, int precision) {
        PowerSeries s(precision);
        if (precision > 0) s.coeffs_[0] = std::move(c);
        return s;
    }

    static PowerSeries monomial(R c, int exponent, int precision) {
        PowerSeries s(precision);
        if (exponent < 0) throw Error(Errc::negative_exponent, "monomial q^" + std::to_string(exponent));
        if (exponent < precision) s.coeffs_[exponent] = std::move(c);
        return s;
    }

    int precision() const { return static_cast<int>(coeffs_.size()); }

    const R& operator[](int n) const { return coeff(n); }

    const R& coeff(int n) const {
        if (n < 0 || n >= precision())
            throw Error(Errc::invalid_precision, "coefficient q^" + std::to_string(n) +
                                                     " is not certified (precision " +
                                                     std::to_string(precision()) + ")");
        return coeffs_[n];
    }

    // Mutable access for constructors that fill a series in place.
    R& at(int n) {
        if (n < 0 || n >= precision())
            throw Error(Errc::invalid_precision, "write beyond precision at q^" + std::to_string(n));
        return coeffs_[n];
    }

    std::span<const R> coefficients() const { return coeffs_; }

    bool is_zero() const {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](const R& c) { return detail::coeff_is_zero(c); });
    }

    PowerSeries truncated(int n) const {
        n = std::clamp(n, 0, precision());
        return PowerSeries(std::vector<R>(coeffs_.begin(), coeffs_.begin() + n));
    }

    // Multiply by q^e. The result is certified up to precision + e.
    PowerSeries shifted(int e) const {
        if (e < 0) throw Error(Errc::negative_exponent, "shift by q^" + std::to_string(e));
        PowerSeries out(precision() + e);
        for (int n = 0; n < precision(); ++n) out.coeffs_[n + e] = coeffs_[n];
        return out;
    }

    // q -> q^k; coefficients certified up to k * precision.
    PowerSeries subst_q_to_qk(int k) const {
        if (k < 1) throw Error(Errc::invalid_argument, "subst_q_to_qk needs k >= 1");
        PowerSeries out(k * precision());
        for (int n = 0; n < precision(); ++n) out.coeffs_[n * k] = coeffs_[n];
        return out;
    }

    // In place: multiply by (1 - sign*q^k)^power, k >= 1, sign = +-1.
    void apply_factor(int k, int sign, int power) {
        if (k < 1) throw Error(Errc::invalid_argument, "factor (1 - q^k) needs k >= 1");
        const int N = precision();
        if (k >= N) return;
        for (int rep = 0; rep < power; ++rep)
            for (int n = N - 1; n >= k; --n) step(coeffs_[n], coeffs_[n - k], sign);
        for (int rep = 0; rep < -power; ++rep)
            for (int n = k; n < N; ++n) step(coeffs_[n], coeffs_[n - k], -sign);
    }

    PowerSeries operator-() const {
        PowerSeries out = *this;
        for (auto& c : out.coeffs_) c = -c;
        return out;
    }

    PowerSeries& operator+=(const PowerSeries& o) {
        coeffs_.resize(std::min(precision(), o.precision()));
        for (int n = 0; n < precision(); ++n) coeffs_[n] += o.coeffs_[n];
        return *this;
    }

    PowerSeries& operator-=(const PowerSeries& o) {
        coeffs_.resize(std::min(precision(), o.precision()));
        for (int n = 0; n < precision(); ++n) coeffs_[n] -= o.coeffs_[n];
        return *this;
    }

    friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
    friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }

    // Schoolbook product on dense buffers, zero coefficients skipped.
    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
        const int N = std::min(a.precision(), b.precision());
        PowerSeries out(N);
        for (int i = 0; i < N; ++i) {
            if (detail::coeff_is_zero(a.coeffs_[i])) continue;
            for (int j = 0; i + j < N; ++j) {
                if (detail::coeff_is_zero(b.coeffs_[j])) continue;
                detail::coeff_add_product(out.coeffs_[i + j], a.coeffs_[i], b.coeffs_[j]);
            }
        }
        return out;
    }

    PowerSeries& operator*=(const PowerSeries& o) { return *this = *this * o; }

    PowerSeries scaled(const R& c) const {
        PowerSeries out = *this;
        for (auto& x : out.coeffs_) x = R(x * c);
        return out;
    }

    friend bool operator==(const PowerSeries& a, const PowerSeries& b) { return a.coeffs_ == b.coeffs_; }

private:
    static std::vector<R> checked(int precision) {
        if (precision < 0) throw Error(Errc::invalid_precision, "negative precision");
        return std::vector<R>(static_cast<std::size_t>(precision));
    }

    // dst -= sign * src
    static void step(R& dst, const R& src, int sign) {
        if (sign > 0)
            dst -= src;
        else
            dst += src;
    }

    std::vector<R> coeffs_;
};

using QSeries = PowerSeries<Integer>;

/// Two-sided inverse; the constant term must be +1 or -1.
QSeries invert(const QSeries& s);

/// s^k; negative k inverts first.
QSeries pow(const QSeries& s, int k);

/// E(q) = prod_{n>=1} (1 - q^n), truncated to `prec` (prec >= 1).
QSeries euler_E(int prec);

/// (q^j; q^m)_inf truncated to `prec`; j >= 1, m >= 1.
QSeries pochhammer_inf(int j, int m, int prec);

/// Finite Pochhammer (q^j; q^m)_n = prod_{i<n} (1 - q^{j+mi}), truncated.
QSeries pochhammer_finite(int j, int m, int n, int prec);

std::string to_string(const QSeries& s);

/// Symbolic eta product prod_k eta(k tau)^{e(k)}.
///
/// The q^{1/24}-type prefactor is kept as an integer count of 24ths and is never
/// folded into series exponents; expand() returns only prod_k E(q^k)^{e(k)}.
class EtaQuotient {
public:
    EtaQuotient() = default;
    explicit EtaQuotient(std::map<int, int> factors);

    static EtaQuotient eta(int level, int exponent = 1);

    const std::map<int, int>& factors() const { return factors_; }

    // sum_k k * e(k)
    long prefactor24() const;

    QSeries expand(int prec) const;

    EtaQuotient& operator*=(const EtaQuotient& o);
    friend EtaQuotient operator*(EtaQuotient a, const EtaQuotient& b) { return a *= b; }
    EtaQuotient inverse() const;
    EtaQuotient pow(int k) const;

    friend bool operator==(const EtaQuotient&, const EtaQuotient&) = default;

private:
    void normalize();
    std::map<int, int> factors_;
};

// "c/24" rendering, never decimal.
std::string format_prefactor24(long p24);

}  // namespace qseries
