#include <doctest.h>

#include <numeric>

#include "oracles.hpp"
#include "qseries/partitions.hpp"
#include "qseries/products.hpp"

using namespace qseries;

namespace {

QSeries from_poly(const oracle::Poly& p) { return QSeries(p); }

QSeries from_ints(std::vector<int> c) { return QSeries(std::vector<Integer>(c.begin(), c.end())); }

int phi_naive(int n) {
    int c = 0;
    for (int k = 1; k <= n; ++k) c += std::gcd(k, n) == 1;
    return c;
}

int mu_naive(int n) {
    int sign = 1;
    for (int p = 2; p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        sign = -sign;
    }
    return sign;
}

// prod_{d|N} E(q^d)^{e(d)} with the oracle's product expansion
oracle::Poly eta_oracle(const std::vector<std::pair<int, int>>& f, int N) {
    oracle::Poly out = oracle::one(N);
    for (const auto& [d, e] : f) out = oracle::mul(out, oracle::euler_power(d, e, N));
    return out;
}

// [n+m choose m]_q by the q-Pascal rule
oracle::Poly gauss_binomial(int n, int m) {
    const int P = n * m + 1;
    if (n == 0 || m == 0) return oracle::one(P);
    const auto a = gauss_binomial(n - 1, m), b = gauss_binomial(n, m - 1);
    oracle::Poly out(P);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i + n] += b[i];  // q^n [n+m-1 choose m-1]
    return out;
}

}  // namespace

TEST_CASE("Saito eta product") {
    CHECK(saito_tilde(1, 30) == QSeries::constant(Integer(1), 30));
    for (int p : {2, 3, 5, 7}) {
        const int N = 50;
        CHECK(saito_tilde(p, N) == from_poly(eta_oracle({{p, p}, {1, -1}}, N)));
    }
    const auto s6 = saito_tilde(6, 50);
    CHECK(s6[0] == 1);
    for (int e = 0; e < 50; ++e) CHECK(s6[e] >= 0);
    CHECK(saito_tilde(6, 50) == from_poly(eta_oracle({{6, 2}, {1, -1}, {2, 1}, {3, 1}, {6, -1}}, 50)));
}

TEST_CASE("Saito prefactor") {
    CHECK(saito_prefactor24(5) == 24);
    CHECK(saito_prefactor24(2) == 3);
    CHECK(saito_prefactor24(1) == 0);
    std::vector<int> not_whole;
    for (int N = 1; N <= 200; ++N) {
        long sum = 0;
        for (int d = 1; d <= N; ++d)
            if (N % d == 0) sum += static_cast<long>(mu_naive(d)) * d;
        const long want = static_cast<long>(N) * phi_naive(N) - sum;
        CHECK(saito_prefactor24(N) == want);
        CHECK(saito_eta(N).prefactor24() == want);
        CHECK(want >= 0);
        if (want % 24) not_whole.push_back(N);
    }
    // nonnegative throughout, but not always a whole power of q
    CHECK(std::find(not_whole.begin(), not_whole.end(), 2) != not_whole.end());
    CHECK(std::find(not_whole.begin(), not_whole.end(), 5) == not_whole.end());
    MESSAGE("N <= 200 with fractional prefactor: " << not_whole.size());
}

TEST_CASE("coprime products") {
    CHECK(coprime_E(1, 40) == euler_E(40));
    const auto c6 = coprime_E(6, 40);
    CHECK(c6 == from_poly(eta_oracle({{1, 1}, {2, -1}, {3, -1}, {6, 1}}, 40)));
    CHECK(c6 == mobius_E(6, 40));
    oracle::Poly direct = oracle::one(40);
    for (int n = 1; n < 40; ++n)
        if (std::gcd(n, 6) == 1) direct = oracle::mul(direct, oracle::one_minus(n, 40));
    CHECK(c6 == from_poly(direct));
    // coefficients up to q^6 come from (1 - q)(1 - q^5): exponents with gcd(n, 6) > 1 contribute no factor
    CHECK(c6.truncated(7) == from_ints({1, -1, 0, 0, 0, -1, 1}));
    for (int M : {12, 18, 24, 36}) {
        CHECK(coprime_E(M, 40) == c6);
        CHECK(mobius_E(M, 40) == c6);
    }
    for (int n = 1; n <= 30; ++n) CHECK(mobius(n) == mu_naive(n));
}

TEST_CASE("Sprop factorization") {
    const int N = 40;
    // (p, alpha, M) = (2, 2, 3): N = 12, N' = 6
    CHECK(saito_tilde(12, N) == (EtaQuotient({{12, 2}, {6, -1}}).pow(2).expand(N) * saito_tilde(6, N)));
    // (3, 2, 1): N = 9, N' = 3
    CHECK(saito_tilde(9, N) == (EtaQuotient({{9, 3}, {3, -1}}).pow(2).expand(N) * saito_tilde(3, N)));
}

TEST_CASE("R_a specializations and functional equation") {
    for (int a = 2; a <= 6; ++a) {
        const int N = 30;
        const auto R = rhs_C(a, N);
        oracle::Poly want = eta_oracle({{a, a}, {1, -1}}, N);
        for (auto& c : want) c *= a;
        CHECK(R.specialize_one() == from_poly(want));
        long n = 0;
        CHECK(!first_mismatch(R.shift_z(1), R.mul_monomial(Integer(1), -(a - 1), 0), &n));
        CHECK(n > 0);
    }
}

TEST_CASE("D_a series") {
    const auto d = d_series(2, 1, 3, 20);
    for (int e = 0; e < 20; ++e) CHECK(d[e] >= 0);
    CHECK(d_series(5, 1, 3, 40) == saito_tilde(15, 40));
    for (int a = 2; a <= 4; ++a)
        for (int M = 2; M <= 4; ++M)
            for (int r = 1; r < M; ++r) CHECK(d_series(a, r, M, 30) == d_series_lattice(a, r, M, 30));
    CHECK_THROWS_AS(d_series(2, 3, 3, 20), Error);
    CHECK_THROWS_AS(d_series(2, 0, 3, 20), Error);
}

TEST_CASE("Gaussian polynomials") {
    CHECK(gaussian_poly(4, 0) == QSeries::constant(Integer(1), 1));
    CHECK(gaussian_poly(1, 1) == from_ints({1, 1}));
    CHECK(gaussian_poly(2, 2) == from_ints({1, 1, 2, 1, 1}));
    for (int n = 0; n <= 6; ++n)
        for (int m = 0; m <= 6; ++m) {
            const auto g = gaussian_poly(n, m);
            CHECK(g == from_poly(gauss_binomial(n, m)));
            for (int k = 0; k <= n * m; ++k) CHECK(g[k] == count_in_box(n, m, k));
        }
}

TEST_CASE("quintuple sides") {
    for (int a : {1, 2}) {
        const auto L = gqpi_side(a, Side::Left, 40, 12);
        const auto R = gqpi_side(a, Side::Right, 40, 12);
        long n = 0;
        CHECK(!first_mismatch(L, R, &n));
        CHECK(n > 0);
    }
    for (int a = 1; a <= 3; ++a) {
        const int N = 30;
        const auto L = gqpib_side(a, Side::Left, N);
        const auto R = gqpib_side(a, Side::Right, N);
        CHECK(!first_mismatch(L, R));
        const int c2 = a * (a - 1) / 2;
        long n = 0;
        CHECK(!first_mismatch(L.shift_z(1, c2), L.mul_monomial(Integer(a % 2 ? 1 : -1), 1 - a * a, 0), &n));
        CHECK(n > 0);
    }
}

TEST_CASE("named series") {
    CHECK(std::get<QSeries>(named_series("Vn", {{"n", 1}}, 30)) == QSeries::constant(Integer(1), 30));

    const auto ekin = std::get<ZqSeries>(named_series("EkinIt", {{"depth", 4}}, 16, 16));
    const auto scan = nonneg_scan(ekin);
    CHECK(scan.ok);
    CHECK(scan.scanned > 0);
    CHECK_THROWS_AS(named_series("EkinIt", {{"depth", 3}}, 16, 16), Error);

    const auto c5 = std::get<QSeries>(named_series("crank5b", {}, 40));
    for (int n = 0; n < 40; ++n) {
        const auto m = crank_counts_mod(5, 5 * n);
        CHECK(c5[n] == m[0] - m[1]);
    }

    for (int t = 1; t <= 8; ++t) {
        const auto s = std::get<QSeries>(named_series("tcore", {{"t", t}}, 100));
        for (int n = 0; n < 100; ++n) {
            CHECK(s[n] >= 0);
            if (t >= 4) CHECK(s[n] > 0);
        }
    }

    CHECK_THROWS_AS(named_series("nope", {}, 10), Error);
    CHECK_THROWS_AS(named_series("aci", {{"m", 1}}, 10, 10), Error);
}
