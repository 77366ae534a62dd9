#pragma once

// Named product and sum constructors.

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qseries/bivar.hpp"
#include "qseries/bracket.hpp"
#include "qseries/series.hpp"

namespace qseries {

int mobius(int n);
std::vector<int> divisors(int n);

/// E(q^N)^{phi(N)} / prod_{d|N} E(q^d)^{mu(d)} as an eta quotient.
EtaQuotient saito_eta(int N);

/// N phi(N) - sum_{d|N} mu(d) d.
long saito_prefactor24(int N);

/// Eta product with the q-prefactor stripped.
QSeries saito_tilde(int N, int qprec);

/// prod_{n < qprec, gcd(n, M) = 1} (1 - q^n), multiplied out factor by factor.
QSeries coprime_E(int M, int qprec);

/// prod_{d|M} E(q^d)^{mu(d)}, expanded from the eta quotient.
QSeries mobius_E(int M, int qprec);

/// E(q) E(q^a)^{a-2} [z^a; q^a] / [z; q].
BracketSpec spec_R(int a);
ZqSeries rhs_C(int a, int qprec);

/// E(q^a)^{2a-2} [z^a; q^a] / [z; q].
BracketSpec spec_D(int a);

/// D_a(q^r; q^M) from the product side.
QSeries d_series(int a, int r, int M, int qprec);

/// D_a(q^r; q^M) as E(q^{aM})^a / E(q^M) times the lattice sum C_a(q^r; q^M).
QSeries d_series_lattice(int a, int r, int M, int qprec);

/// E(q)^{a-2} E(q^a) [z; q] / [z; q^a].
BracketSpec spec_B_product(int a);

enum class Side { Left, Right };

/// [z^a; q] / [z, z^{a+1}; q] (left), or
/// E(q^{a+1})^2/E(q)^2 sum_j z^j [q^{a-j}; q^{a+1}] / [z^{a+1}, z^{a+1} q^{a-j}; q^{a+1}] (right).
ZqSeries gqpi_side(int a, Side side, int qprec, int window);

/// Left: E(q)^2/E(q^{a+1})^2 [z^a; q]/[z; q]. Right: the sum above with the
/// denominators cleared by prod_{k=1}^{a} [z^{a+1} q^k; q^{a+1}]. Both exact.
ZqSeries gqpib_side(int a, Side side, int qprec);

/// (1 - z) E(q) / [z; q]; exact because (1 - z) cancels.
ZqSeries crank_gen(int qprec, std::optional<int> window = std::nullopt);

/// prod_n (1 - q^n) / ((1 - z q^n)(1 - z^-1 q^n)).
ZqSeries crank_gen_product(int qprec);

/// [n+m choose m]_q via exact division, precision n*m + 1.
QSeries gaussian_poly(int n, int m);

/// sum_n z^n q^{n(n-1)/2}.
ZqSeries ekin_theta1(int qprec);
/// sum_{n1,n2} z^{n1 + 2 n2} q^{n1(n1-1)/2 + n2(n2-1)}.
ZqSeries ekin_theta2(int qprec);

/// sum_n z^n / ((q)_n (z^-1 q^{n+1}; q)_inf), certified for z <= window.
ZqSeries zq_sum(int qprec, int window);

/// sum_n t^n / ((a q^n; q)_inf (q)_n) at a = sa q^alpha, t = st q^beta.
QSeries atq_sum(int alpha, int sa, int beta, int st, int qprec);

/// sum_j [L, j]_q z1^j / ((z1 q^{L-j}; q)_j (z2 q^j; q)_{L-j}) at z1 = s1 q^alpha, z2 = s2 q^beta.
QSeries atqfin_sum(int L, int alpha, int s1, int beta, int s2, int qprec);

using Params = std::map<std::string, long>;
using AnySeries = std::variant<QSeries, ZqSeries>;

/// One constructor per displayed expression; ids are listed by named_series_ids().
AnySeries named_series(const std::string& id, const Params& params, int qprec, std::optional<int> window = std::nullopt);
std::vector<std::string> named_series_ids();

/// Reads an integer parameter, falling back to `fallback`; throws invalid_params
/// when absent without fallback or outside [lo, hi].
long param(const Params& p, const std::string& key, std::optional<long> fallback, long lo, long hi);

}  // namespace qseries
