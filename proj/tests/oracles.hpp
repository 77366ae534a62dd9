#pragma once

// Small reference implementations used as independent oracles. They share no
// code with the library beyond the Integer type.

#include <random>
#include <vector>

#include "qseries/integer.hpp"

namespace oracle {

using qseries::Integer;
using Poly = std::vector<Integer>;  // dense, index = q-exponent

inline Poly one(int prec) {
    Poly p(prec);
    if (prec > 0) p[0] = 1;
    return p;
}

inline Poly mul(const Poly& a, const Poly& b) {
    const std::size_t n = std::min(a.size(), b.size());
    Poly out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; i + j < n; ++j) out[i + j] += a[i] * b[j];
    return out;
}

// (1 - q^k) truncated to prec
inline Poly one_minus(int k, int prec) {
    Poly p = one(prec);
    if (k < prec) p[k] -= 1;
    return p;
}

// 1 / (1 - q^k) as a geometric series
inline Poly geometric(int k, int prec) {
    Poly p(prec);
    for (int e = 0; e < prec; e += k) p[e] = 1;
    return p;
}

// prod_{n >= 1} (1 - q^{kn})^e by repeated multiplication
inline Poly euler_power(int k, int e, int prec) {
    Poly out = one(prec);
    for (int n = k; n < prec; n += k)
        for (int r = 0; r < (e < 0 ? -e : e); ++r) out = mul(out, e > 0 ? one_minus(n, prec) : geometric(n, prec));
    return out;
}

// Partitions of n into parts <= maxpart, counted by recursion.
inline Integer partition_count(int n, int maxpart) {
    std::vector<std::vector<Integer>> t(n + 1, std::vector<Integer>(maxpart + 1));
    for (int m = 0; m <= maxpart; ++m) t[0][m] = 1;
    for (int k = 1; k <= n; ++k)
        for (int m = 1; m <= maxpart; ++m) t[k][m] = t[k][m - 1] + (k >= m ? t[k - m][m] : Integer(0));
    return t[n][maxpart];
}

inline Integer partition_count(int n) { return partition_count(n, n); }

inline std::vector<int> random_coeffs(std::mt19937& rng, int n, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    std::vector<int> out(n);
    for (auto& x : out) x = d(rng);
    return out;
}

}  // namespace oracle
