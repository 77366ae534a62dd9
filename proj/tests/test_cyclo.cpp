#include <doctest.h>

#include <complex>
#include <numeric>

#include "qseries/cyclo.hpp"

using namespace qseries;

namespace {

std::vector<Integer> ints(std::vector<int> v) { return {v.begin(), v.end()}; }

// Evaluate a power-basis element at exp(2 pi i / a) numerically; used only as
// an independent sanity oracle with a generous tolerance.
std::complex<double> embed(const CycInt& x) {
    const double pi = std::acos(-1.0);
    const auto w = std::polar(1.0, 2 * pi / x.order());
    std::complex<double> acc = 0, p = 1;
    for (const auto& c : x.coeffs()) {
        acc += c.get_d() * p;
        p *= w;
    }
    return acc;
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_poly(1) == ints({-1, 1}));
    CHECK(cyclotomic_poly(2) == ints({1, 1}));
    CHECK(cyclotomic_poly(4) == ints({1, 0, 1}));
    CHECK(cyclotomic_poly(6) == ints({1, -1, 1}));
    CHECK(cyclotomic_poly(12) == ints({1, 0, -1, 0, 1}));
    for (int n = 1; n <= 40; ++n) {
        int phi = 0;
        for (int k = 1; k <= n; ++k) phi += std::gcd(k, n) == 1;
        CHECK(euler_phi(n) == phi);
        CHECK(static_cast<int>(cyclotomic_poly(n).size()) == phi + 1);
    }
}

TEST_CASE("zeta powers") {
    CHECK(zeta_pow(3, 3) == CycInt(1));
    CHECK(zeta_pow(3, 2) == CycInt::from_coeffs(3, ints({-1, -1})));
    CHECK(zeta_pow(3, -1) == zeta_pow(3, 2));
    for (int a : {2, 3, 4, 5, 6, 7, 12}) {
        CycInt s = CycInt::zero(a);
        for (int k = 0; k < a; ++k) s += zeta_pow(a, k);
        CHECK(is_zero(s) == (a > 1));
    }
}

TEST_CASE("zeta is a root of its cyclotomic polynomial") {
    for (int a = 1; a <= 15; ++a) {
        const auto phi = cyclotomic_poly(a);
        CycInt acc = CycInt::zero(a);
        for (std::size_t i = 0; i < phi.size(); ++i) acc += CycInt(phi[i]) * zeta_pow(a, static_cast<int>(i));
        CHECK(is_zero(acc));
    }
}

TEST_CASE("arithmetic agrees with the complex embedding") {
    for (int a : {5, 7, 8, 9, 12}) {
        for (int i = 0; i < a; ++i)
            for (int j = 0; j < a; ++j) {
                const auto x = zeta_pow(a, i) + CycInt(2) * zeta_pow(a, j);
                const auto y = zeta_pow(a, i + j) - CycInt(3);
                CHECK(std::abs(embed(x * y) - embed(x) * embed(y)) < 1e-9);
                CHECK(x * y == y * x);
            }
    }
}

TEST_CASE("rational integers") {
    CHECK(CycInt(5).is_rational_integer());
    CHECK(zeta_pow(4, 2).is_rational_integer());
    CHECK(zeta_pow(4, 2).rational_value() == -1);
    CHECK_FALSE(zeta_pow(4, 1).is_rational_integer());
    CHECK((zeta_pow(5, 1) + zeta_pow(5, 4)) * (zeta_pow(5, 2) + zeta_pow(5, 3)) == CycInt(-1));
}

TEST_CASE("order mismatch is rejected") {
    CHECK_THROWS_AS(zeta_pow(3, 1) + zeta_pow(4, 1), Error);
    CHECK_THROWS_AS(zeta_pow(3, 1) * zeta_pow(5, 1), Error);
}

TEST_CASE("integer series embed faithfully") {
    const auto s = lift(euler_E(20));
    CHECK(equals_integer_series(s, euler_E(20)));
    CHECK(to_integer_series(s) == euler_E(20));
    auto t = s;
    t.at(3) = zeta_pow(3, 1);
    CHECK_FALSE(equals_integer_series(t, euler_E(20)));
    CHECK_THROWS_AS(to_integer_series(t), Error);
}
