#include <doctest.h>

#include <map>

#include "qseries/bracket.hpp"
#include "qseries/partitions.hpp"
#include "qseries/products.hpp"

using namespace qseries;

namespace {

// Naive bivariate polynomial: (zexp, qexp) -> coefficient, truncated in q and
// capped in z from above.
struct Naive {
    std::map<std::pair<int, int>, Integer> c;
    int qprec;
    int zcap;

    static Naive unit(int qprec, int zcap) {
        Naive n{{}, qprec, zcap};
        n.c[{0, 0}] = 1;
        return n;
    }

    Naive times(const std::map<std::pair<int, int>, Integer>& f) const {
        Naive out{{}, qprec, zcap};
        for (const auto& [k1, v1] : c)
            for (const auto& [k2, v2] : f) {
                const int d = k1.first + k2.first, e = k1.second + k2.second;
                if (e < qprec && d <= zcap) out.c[{d, e}] += v1 * v2;
            }
        return out;
    }

    // multiply by (1 - z^s q^j)^{+-1}; the inverse is a geometric series
    // which terminates because j > 0 or s > 0 is capped.
    Naive factor(int s, int j, int power) const {
        Naive out = *this;
        for (int r = 0; r < (power > 0 ? power : -power); ++r) {
            std::map<std::pair<int, int>, Integer> f;
            if (power > 0) {
                f[{0, 0}] = 1;
                f[{s, j}] -= 1;
            } else {
                for (int k = 0;; ++k) {
                    const long e = static_cast<long>(j) * k, d = static_cast<long>(s) * k;
                    if (e >= qprec || d > zcap + 4 * qprec * qprec) break;
                    f[{static_cast<int>(d), static_cast<int>(e)}] += 1;
                    if (j == 0 && s <= 0) break;
                }
            }
            out = out.times(f);
        }
        return out;
    }

    Naive bracket(int s, int j, int m, int power) const {
        Naive out = *this;
        for (int n = 0; j + m * n < qprec || (m - j) + m * n < qprec; ++n) {
            if (j + m * n < qprec) out = out.factor(s, j + m * n, power);
            if (m - j + m * n < qprec) out = out.factor(-s, m - j + m * n, power);
        }
        return out;
    }

    Naive euler(int k, int power) const {
        Naive out = *this;
        for (int n = k; n < qprec; n += k) out = out.factor(0, n, power);
        return out;
    }
};

void check_against(const ZqSeries& s, const Naive& n) {
    long checked = 0;
    s.for_each_certified([&](int d, int e, const Integer& v) {
        const auto it = n.c.find({d, e});
        const Integer want = it == n.c.end() ? Integer(0) : it->second;
        CHECK_MESSAGE(v == want, "z^" << d << " q^" << e);
        ++checked;
    });
    for (const auto& [k, v] : n.c)
        if (v != 0 && s.certified(k.first, k.second)) CHECK(s.raw(k.first, k.second) == v);
    CHECK(checked > 0);
}

}  // namespace

TEST_CASE("[z; q] at qprec 2") {
    BracketSpec b;
    b.bracket(1, 0, 1);
    const auto s = expand_bracket_spec(b, 2);
    CHECK(s.exact());
    std::map<std::pair<int, int>, Integer> got;
    s.for_each_certified([&](int d, int e, const Integer& v) {
        if (v != 0) got[{d, e}] = v;
    });
    // (1 - z)(1 - zq)(1 - q/z) = 1 - z + q(1 - z - z^-1 + z^2) + O(q^2)
    const std::map<std::pair<int, int>, Integer> want = {
        {{0, 0}, 1}, {{1, 0}, -1}, {{-1, 1}, -1}, {{0, 1}, 1}, {{1, 1}, -1}, {{2, 1}, 1}};
    CHECK(got == want);
}

TEST_CASE("bracket products against naive expansion") {
    const int N = 9;
    {
        BracketSpec b;
        b.bracket(1, 0, 1).euler(1);
        check_against(expand_bracket_spec(b, N), Naive::unit(N, 1000).bracket(1, 0, 1, 1).euler(1, 1));
    }
    {
        BracketSpec b;  // [z^2 q; q^3] (z q^2; q) / E(q^2)
        b.bracket(2, 1, 3).poch(1, 2, 1).euler(2, -1);
        check_against(expand_bracket_spec(b, N),
                      Naive::unit(N, 1000).bracket(2, 1, 3, 1).factor(1, 2, 1).factor(1, 3, 1).factor(1, 4, 1)
                          .factor(1, 5, 1).factor(1, 6, 1).factor(1, 7, 1).factor(1, 8, 1).euler(2, -1));
    }
}

TEST_CASE("windowed expansion is sound on its certified region") {
    const int N = 8;
    for (int W : {0, 3, 8}) {
        BracketSpec b;  // E(q) / [z; q]
        b.euler(1).bracket(1, 0, 1, -1);
        const auto s = expand_bracket_spec(b, N, W);
        CHECK_FALSE(s.exact());
        // reference with a much deeper z cap so nothing near the window is cut
        const auto ref = Naive::unit(N, W + 60).euler(1, 1).bracket(1, 0, 1, -1);
        check_against(s, ref);
    }
    BracketSpec b;
    b.bracket(1, 0, 1, -1);
    CHECK_THROWS_AS(expand_bracket_spec(b, 5), Error);
}

TEST_CASE("symbolic cancellation and reductions") {
    BracketSpec b;
    b.bracket(1, 0, 1).bracket(1, 0, 1, -1);
    const auto one = expand_bracket_spec(b, 10);
    CHECK(one.exact());
    CHECK(!first_mismatch(one, ZqSeries::monomial(Integer(1), 0, 0, 10)));
    BracketSpec e;
    e.poch(0, 1, 1);
    CHECK(expand_univariate(e, 30) == euler_E(30));
    BracketSpec zero_offset;
    zero_offset.poch(0, 0, 1, -1);
    try {
        expand_bracket_spec(zero_offset, 5, 5);
        FAIL("expected an error");
    } catch (const Error& err) {
        CHECK(err.code() == Errc::division_by_zero_series);
    }
    BracketSpec unbounded;
    unbounded.single(1, 0, -1);
    try {
        expand_bracket_spec(unbounded, 5);
        FAIL("expected an error");
    } catch (const Error& err) {
        CHECK(err.code() == Errc::unbounded_z_support);
    }
}

TEST_CASE("exact-mode completeness under larger qprec") {
    BracketSpec b;
    b.bracket(3, 0, 3).euler(1).euler(3).bracket(1, 0, 1, -1);
    const auto small = expand_bracket_spec(b, 15);
    const auto large = expand_bracket_spec(b, 40);
    long n = 0;
    CHECK(!first_mismatch(small, large.truncated(15), &n));
    CHECK(n > 0);
}

TEST_CASE("shift_z") {
    const auto one = ZqSeries::monomial(Integer(1), 0, 0, 12);
    const auto s1 = one.shift_z(1);
    CHECK(s1.qprec() == 12);
    CHECK(!first_mismatch(s1, one));

    const auto C = expand_bracket_spec(spec_R(3), 30);
    const auto twice = C.shift_z(1).shift_z(1);
    const auto once = C.shift_z(2);
    long n = 0;
    CHECK(!first_mismatch(twice, once, &n));
    CHECK(n > 0);
}

TEST_CASE("specialize_one commutes with multiplication") {
    BracketSpec a, b;
    a.bracket(2, 0, 2).euler(1);
    b.poch(1, 1, 1).poch(-1, 2, 2);
    const auto A = expand_bracket_spec(a, 25), B = expand_bracket_spec(b, 25);
    CHECK((A * B).specialize_one() == A.specialize_one() * B.specialize_one());
}

TEST_CASE("window product rule") {
    BracketSpec inv;
    inv.single(1, 0, -1);
    const auto g = expand_bracket_spec(inv, 6, 5);  // 1 / (1 - z), window 5
    const auto shifted = ZqSeries::monomial(Integer(1), -2, 0, 6);
    const auto p = g * shifted;
    REQUIRE(p.window());
    CHECK(*p.window() == 3);
    const auto far = ZqSeries::monomial(Integer(1), -7, 0, 6);
    CHECK_THROWS_AS(g * far, Error);
}

TEST_CASE("extract_z_coeff and nonneg_scan") {
    CHECK(ZqSeries::monomial(Integer(1), 0, 0, 5).extract_z_coeff(0) == QSeries::constant(Integer(1), 5));
    const auto aci = std::get<ZqSeries>(named_series("aci", {{"m", 2}}, 30, 10));
    CHECK(nonneg_scan(aci).ok);
}

TEST_CASE("crank generating function has one negative coefficient") {
    const int N = 60;
    const auto g = crank_gen(N);
    CHECK(negative_coordinates(g) == std::vector<std::pair<int, int>>{{0, 1}});
    for (int n = 2; n <= 20; ++n)
        for (const auto& [m, c] : crank_counts(n)) CHECK(g.coeff(m, n) == c);
    CHECK(g.coeff(0, 0) == 1);
    CHECK(g.coeff(1, 1) == 1);
    CHECK(g.coeff(-1, 1) == 1);
    CHECK(g.coeff(0, 1) == -1);
}

TEST_CASE("monomial specialization") {
    BracketSpec b;
    b.bracket(1, 2, 5);  // [z q^2; q^5], every factor has q-slope >= 2
    const auto s = expand_bracket_spec(b, 40);
    // z -> q gives [q^3; q^5]
    BracketSpec u;
    u.bracket(0, 3, 5);
    const auto direct = expand_univariate(u, 40);
    const auto spec = s.specialize_monomial(1);
    REQUIRE(spec.precision() > 0);
    CHECK(spec == direct.truncated(spec.precision()));
    // z -> q^2 reaches the slope of the first factor and is refused
    CHECK_THROWS_AS(s.specialize_monomial(2), Error);
    // a z-free series is unchanged
    const auto E = ZqSeries::from_q_series(euler_E(20));
    CHECK(E.specialize_monomial(3) == euler_E(20));
}

TEST_CASE("root of unity specialization") {
    const auto R2 = expand_bracket_spec(spec_R(2), 30);
    const auto s = specialize_root_of_unity(R2, 2, 1);
    for (int e = 0; e < s.precision(); ++e) CHECK(is_zero(s[e]));
}
