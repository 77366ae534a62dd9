#pragma once

// Theta sums over the zero-sum lattice {n in Z^a : n_0 + ... + n_{a-1} = 0}.
//
// Q_a(n) = (a/2) n.n + b.n with b = (0, 1, ..., a-1). On the zero-sum lattice
// n.n is even, so Q_a and n.n/2 are integers.

#include <functional>
#include <span>
#include <vector>

#include "qseries/bivar.hpp"
#include "qseries/cyclo.hpp"
#include "qseries/series.hpp"

namespace qseries {

struct LatticePoint {
    std::vector<int> n;
    long qexp;  // Q_a(n)

    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

long quadratic_form_Q(std::span<const int> n);
long half_norm(std::span<const int> n);  // n.n / 2
long b_dot(std::span<const int> n);      // b.n

/// Every zero-sum n in Z^a with n.n <= R, in lexicographic order. a >= 1.
void for_each_zero_sum(int a, long R, const std::function<void(std::span<const int>)>& visit);

/// Points with Q_a(n) <= bound sorted by (qexp, n). a >= 2.
std::vector<LatticePoint> enumerate_zero_sum(int a, long bound);

/// n' = (n_1, ..., n_{a-1}, n_0) + e_{j-1} - e_{a-1} for 1 <= j <= a-1; the
/// plain rotation for j = 0.
std::vector<int> cyclic_shift_image(std::span<const int> n, int j);

/// sum_n q^{Q_a(n)} sum_j z^{a n_j + j}, exact.
ZqSeries theta_C(int a, int qprec);

/// sum_n z^{a n_j + j} q^{Q_a(n)}, exact.
ZqSeries theta_F(int j, int a, int qprec);

/// sum_n z^{n_j} zeta_a^{b.n} q^{n.n/2} over Z[zeta_a], exact.
CycZqSeries theta_B(int j, int a, int qprec);

/// sum_n q^{Q_t(n)}; t >= 1.
QSeries klyachko_lhs(int t, int qprec);

/// sum_n zeta_t^{b.n} q^{n.n/2}; t >= 1.
CycSeries klyachko_cyclotomic_lhs(int t, int qprec);

/// C_a(q^r; q^M) = sum_n q^{M Q_a(n)} sum_j q^{r (a n_j + j)}, 0 <= r <= M, a >= 1.
QSeries theta_C_at_monomial(int a, int r, int M, int qprec);

/// Exponent shift making q^shift B_{j,a}(q^k; q) a power series:
/// ceil(k^2 (a-1) / (2a)).
int theta_B_monomial_shift(int a, int k);

/// q^shift B_{j,a}(q^k; q) with shift = theta_B_monomial_shift(a, k).
CycSeries theta_B_at_monomial(int j, int a, int k, int qprec);

}  // namespace qseries
