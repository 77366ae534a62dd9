#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "qseries/series.hpp"

using namespace qseries;

namespace {

QSeries from_ints(std::vector<int> c) {
    std::vector<Integer> v(c.begin(), c.end());
    return QSeries(std::move(v));
}

QSeries from_poly(const oracle::Poly& p) { return QSeries(p); }

QSeries random_series(std::mt19937& rng, int prec) { return from_ints(oracle::random_coeffs(rng, prec, -5, 5)); }

}  // namespace

TEST_CASE("euler_E small orders") {
    CHECK(euler_E(1) == from_ints({1}));
    CHECK(euler_E(8) == from_ints({1, -1, -1, 0, 0, 1, 0, 1}));
    CHECK(euler_E(13)[12] == -1);
    CHECK_THROWS_AS(euler_E(0), Error);
}

TEST_CASE("euler_E matches the direct product and is pentagonal-sparse up to 500") {
    const int N = 500;
    const auto E = euler_E(N);
    CHECK(E == from_poly(oracle::euler_power(1, 1, N)));
    std::set<long> pent;
    for (long k = -40; k <= 40; ++k) pent.insert(k * (3 * k - 1) / 2);
    for (int n = 0; n < N; ++n) {
        if (pent.count(n)) {
            CHECK(abs(E[n]) == 1);
        } else {
            CHECK(E[n] == 0);
        }
    }
}

TEST_CASE("pochhammer_inf") {
    CHECK(pochhammer_inf(1, 1, 8) == euler_E(8));
    CHECK(pochhammer_inf(1, 2, 6) == from_ints({1, -1, 0, -1, 1, -1}));
    CHECK(pochhammer_inf(2, 2, 3) == from_ints({1, 0, -1}));
    CHECK_THROWS_AS(pochhammer_inf(0, 1, 5), Error);
}

TEST_CASE("pochhammer_finite") {
    // (q; q^2)_2 = (1 - q)(1 - q^3)
    CHECK(pochhammer_finite(1, 2, 2, 6) == from_ints({1, -1, 0, -1, 1, 0}));
    CHECK(pochhammer_finite(3, 1, 0, 4) == from_ints({1, 0, 0, 0}));
}

TEST_CASE("ring operations") {
    CHECK(from_ints({1, -1, 0}) * from_ints({1, 1, 0}) == from_ints({1, 0, -1}));
    const auto E = euler_E(20);
    CHECK(E * invert(E) == QSeries::constant(Integer(1), 20));
    CHECK(invert(E) * E == QSeries::constant(Integer(1), 20));
    CHECK_THROWS_AS(invert(from_ints({2, 1})), Error);
    CHECK(pow(E, -2) == invert(E * E));
    CHECK(pow(E, 0) == QSeries::constant(Integer(1), 20));
    // precision is the minimum of the operands
    CHECK((euler_E(5) + euler_E(9)).precision() == 5);
    CHECK((euler_E(5) * euler_E(9)).precision() == 5);
}

TEST_CASE("subst_q_to_qk") {
    const auto s = euler_E(5).subst_q_to_qk(3);
    CHECK(s.precision() == 15);
    CHECK(s[3] == -1);
    CHECK(s[6] == -1);
    CHECK(s == from_poly(oracle::euler_power(3, 1, 15)));
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const auto x = random_series(rng, 12);
        for (int k = 1; k <= 4; ++k) {
            const auto y = x.subst_q_to_qk(k);
            for (int n = 0; n < x.precision(); ++n) CHECK(y[n * k] == x[n]);
        }
    }
}

TEST_CASE("ring laws on random series") {
    std::mt19937 rng(20261016);
    for (int trial = 0; trial < 100; ++trial) {
        const int N = 1 + trial % 17;
        const auto a = random_series(rng, N), b = random_series(rng, N), c = random_series(rng, N);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK(a - a == QSeries(N));
        CHECK(-(-a) == a);
    }
}

TEST_CASE("invert is a two-sided inverse for units") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        auto a = random_series(rng, 15);
        a.at(0) = trial % 2 ? 1 : -1;
        CHECK(a * invert(a) == QSeries::constant(Integer(1), 15));
        CHECK(invert(a) * a == QSeries::constant(Integer(1), 15));
    }
}

TEST_CASE("apply_factor matches explicit multiplication") {
    const int N = 30;
    auto s = QSeries::constant(Integer(1), N);
    s.apply_factor(2, 1, 3);   // (1 - q^2)^3
    s.apply_factor(5, -1, -2); // (1 + q^5)^-2
    oracle::Poly want = oracle::one(N);
    for (int i = 0; i < 3; ++i) want = oracle::mul(want, oracle::one_minus(2, N));
    oracle::Poly inv(N);  // 1 / (1 + q^5) = sum (-1)^i q^{5i}
    for (int e = 0; e < N; e += 5) inv[e] = (e / 5) % 2 ? -1 : 1;
    want = oracle::mul(oracle::mul(want, inv), inv);
    CHECK(s == from_poly(want));
}

TEST_CASE("EtaQuotient prefactor and expansion") {
    const auto q = EtaQuotient::eta(2, 3);
    CHECK(q.prefactor24() == 6);
    CHECK(format_prefactor24(q.prefactor24()) == "6/24");
    const EtaQuotient five({{5, 5}, {1, -1}});
    CHECK(five.prefactor24() == 24);
    oracle::Poly want = oracle::mul(oracle::euler_power(5, 5, 40), oracle::euler_power(1, -1, 40));
    CHECK(five.expand(40) == from_poly(want));
    CHECK((five * five.inverse()).factors().empty());
    CHECK(five.pow(2) == five * five);
}
