#include <doctest.h>

#include <numeric>

#include "oracles.hpp"
#include "qseries/partitions.hpp"
#include "qseries/products.hpp"

using namespace qseries;

TEST_CASE("partition enumeration") {
    CHECK(partitions_of(0) == std::vector<Partition>{Partition{}});
    CHECK(partitions_of(4) == std::vector<Partition>{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}});
    CHECK(partitions_of(10).size() == 42);
    for (int n = 0; n <= 22; ++n) {
        const auto ps = partitions_of(n);
        CHECK(Integer(static_cast<long>(ps.size())) == oracle::partition_count(n));
        for (std::size_t i = 0; i < ps.size(); ++i) {
            CHECK(std::accumulate(ps[i].begin(), ps[i].end(), 0) == n);
            CHECK(std::is_sorted(ps[i].rbegin(), ps[i].rend()));
            if (i > 0) CHECK(ps[i - 1] > ps[i]);  // strictly reverse lexicographic, so no repeats
        }
    }
}

TEST_CASE("hook lengths") {
    // (3, 1): hooks 4 2 1 / 1
    CHECK(hooks({3, 1}) == std::vector<int>{4, 2, 1, 1});
    CHECK(hooks({2, 2}) == std::vector<int>{3, 2, 2, 1});
    CHECK(hooks({}).empty());
}

TEST_CASE("t-cores") {
    for (int t = 1; t <= 6; ++t) CHECK(count_t_cores(t, 0) == 1);
    for (int n = 1; n <= 10; ++n) CHECK(count_t_cores(1, n) == 0);
    CHECK(count_t_cores(2, 3) == 1);
    CHECK(is_t_core({2, 1}, 2));
    CHECK_FALSE(is_t_core({3}, 2));
    // the two core predicates agree on every partition
    for (int n = 0; n <= 16; ++n)
        for (const auto& p : partitions_of(n))
            for (int t = 1; t <= 6; ++t)
                CHECK(is_t_core(p, t, CorePredicate::NoHookEqual) == is_t_core(p, t, CorePredicate::NoHookDivisible));
    // 2-cores are the staircases
    for (int n = 0; n <= 28; ++n) {
        bool triangular = false;
        for (int k = 0; k * (k + 1) / 2 <= n; ++k) triangular |= k * (k + 1) / 2 == n;
        CHECK(count_t_cores(2, n) == (triangular ? 1 : 0));
    }
}

TEST_CASE("t-core counts match E(q^t)^t / E(q)") {
    const int N = 26;
    for (int t = 1; t <= 7; ++t) {
        const auto want = oracle::mul(oracle::euler_power(t, t, N), oracle::euler_power(1, -1, N));
        for (int n = 0; n < N; ++n) CHECK(count_t_cores(t, n) == want[n]);
    }
}

TEST_CASE("crank") {
    CHECK(crank_of({4}) == 4);
    CHECK(crank_of({1}) == -1);
    CHECK(crank_of({}) == 0);
    // (3, 1, 1): two ones, one part larger than 2, crank 1 - 2 = -1
    CHECK(crank_of({3, 1, 1}) == -1);
    CHECK(crank_of({2, 2, 1}) == 1);
    for (int n = 0; n <= 20; ++n) {
        Integer total = 0;
        for (const auto& [m, c] : crank_counts(n)) total += c;
        CHECK(total == oracle::partition_count(n));
    }
}

TEST_CASE("crank symmetry M(m, n) = M(-m, n) for n >= 2") {
    for (int n = 2; n <= 20; ++n) {
        const auto c = crank_counts(n);
        for (const auto& [m, v] : c) {
            const auto it = c.find(-m);
            REQUIRE(it != c.end());
            CHECK(it->second == v);
        }
    }
}

TEST_CASE("crank counting method matches enumeration") {
    for (int n = 0; n <= 30; ++n) CHECK(crank_counts_dp(n) == crank_counts(n));
    for (int t : {2, 5, 7, 11})
        for (int n = 0; n <= 30; ++n) CHECK(crank_counts_mod(t, n, 0) == crank_counts_mod(t, n, 30));
}

TEST_CASE("crank inequalities") {
    for (int n = 0; n <= 8; ++n) {
        const auto c = crank_counts_mod(5, 5 * n);
        CHECK(c[0] > c[1]);
    }
    std::vector<int> not_strict;
    for (int n = 0; 11 * n + 2 <= 90; ++n) {
        const auto c = crank_counts_mod(11, 11 * n + 2);
        CHECK(c[2] >= c[1]);
        if (!(c[2] > c[1])) not_strict.push_back(n);
    }
    CHECK(not_strict == std::vector<int>{3});
}

TEST_CASE("box partitions") {
    CHECK(count_in_box(1, 1, 1) == 1);
    CHECK(count_in_box(2, 2, 2) == 2);
    for (int n = 0; n <= 5; ++n)
        for (int m = 0; m <= 5; ++m) {
            Integer total = 0;
            for (int k = 0; k <= n * m; ++k) total += count_in_box(n, m, k);
            // binomial(n + m, m)
            Integer binom = 1;
            for (int i = 1; i <= m; ++i) binom = binom * (n + i) / i;
            CHECK(total == binom);
        }
}
