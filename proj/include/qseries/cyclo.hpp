#pragma once

// Exact arithmetic in Z[zeta_a], zeta_a a primitive a-th root of unity.
//
// Elements are integer polynomials in x reduced modulo the a-th cyclotomic
// polynomial, so equality here is equality of the complex values under every
// embedding. zeta_a is the residue class of x; no numeric root is ever chosen.

#include <memory>
#include <string>
#include <vector>

#include "qseries/integer.hpp"
#include "qseries/series.hpp"

namespace qseries {

/// Coefficients (ascending) of the a-th cyclotomic polynomial, a >= 1.
std::vector<Integer> cyclotomic_poly(int a);

/// Euler phi via the degree of the cyclotomic polynomial's defining relation.
int euler_phi(int n);

class CyclotomicRing;

/// Element of Z[zeta_a]. A default-constructed value (order 0) is a plain
/// integer that adopts the order of whatever it is combined with.
class CycInt {
public:
    CycInt() = default;
    CycInt(Integer value);  // NOLINT: integers embed implicitly
    CycInt(long value) : CycInt(Integer(value)) {}

    static CycInt zero(int order);
    static CycInt from_coeffs(int order, std::vector<Integer> coeffs);

    int order() const;
    // Coefficients in the power basis 1, zeta, ..., zeta^{phi(a)-1}.
    std::vector<Integer> coeffs() const;

    bool is_rational_integer() const;
    // Valid only when is_rational_integer().
    Integer rational_value() const;

    CycInt& operator+=(const CycInt& o);
    CycInt& operator-=(const CycInt& o);
    CycInt& operator*=(const CycInt& o);
    CycInt operator-() const;

    friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
    friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
    friend CycInt operator*(CycInt a, const CycInt& b) { return a *= b; }

    friend bool operator==(const CycInt& a, const CycInt& b);

    // zeta^k with k reduced mod the order
    CycInt& add_zeta_power(int k, const Integer& count);

private:
    void adopt(const CycInt& o);
    void trim();

    std::shared_ptr<const CyclotomicRing> ring_;
    std::vector<Integer> c_;
};

bool is_zero(const CycInt& x);
std::string to_string(const CycInt& x);
void add_product(CycInt& acc, const CycInt& a, const CycInt& b);

/// zeta_a^k, reduced modulo the a-th cyclotomic polynomial.
CycInt zeta_pow(int a, int k);

inline CycInt cyc_mul(const CycInt& a, const CycInt& b) { return a * b; }
inline CycInt cyc_add(const CycInt& a, const CycInt& b) { return a + b; }
inline bool is_rational_integer(const CycInt& x) { return x.is_rational_integer(); }

using CycSeries = PowerSeries<CycInt>;

/// Integer series embedded into Z[zeta_a][[q]].
CycSeries lift(const QSeries& s);

/// True iff every coefficient of `s` is a rational integer equal to the
/// corresponding coefficient of `t` (compared up to the smaller precision).
bool equals_integer_series(const CycSeries& s, const QSeries& t);

/// Converts a series whose coefficients are all rational integers; throws otherwise.
QSeries to_integer_series(const CycSeries& s);

}  // namespace qseries
