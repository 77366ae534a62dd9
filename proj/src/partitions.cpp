#include "qseries/partitions.hpp"

#include <algorithm>

#include "qseries/error.hpp"

namespace qseries {

namespace {

void check_n(int n) {
    if (n < 0) throw Error(Errc::invalid_argument, "partition size must be >= 0");
}

void check_t(int t) {
    if (t < 1) throw Error(Errc::invalid_argument, "t must be >= 1");
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    check_n(n);
    std::vector<Partition> out;
    for_each_partition(n, [&](const Partition& p) { out.push_back(p); });
    return out;
}

std::vector<int> hooks(const Partition& p) {
    std::vector<int> out;
    const int rows = static_cast<int>(p.size());
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < p[i]; ++j) {
            // leg: rows below i whose length exceeds j
            int leg = 0;
            for (int k = i + 1; k < rows && p[k] > j; ++k) ++leg;
            out.push_back(p[i] - j - 1 + leg + 1);
        }
    return out;
}

bool is_t_core(const Partition& p, int t, CorePredicate pred) {
    check_t(t);
    for (int h : hooks(p)) {
        if (pred == CorePredicate::NoHookEqual && h == t) return false;
        if (pred == CorePredicate::NoHookDivisible && h % t == 0) return false;
    }
    return true;
}

Integer count_t_cores(int t, int n, CorePredicate pred) {
    check_t(t);
    check_n(n);
    long count = 0;
    for_each_partition(n, [&](const Partition& p) { count += is_t_core(p, t, pred); });
    return Integer(count);
}

int crank_of(const Partition& p) {
    if (p.empty()) return 0;
    const int ones = static_cast<int>(std::count(p.begin(), p.end(), 1));
    if (ones == 0) return p.front();
    const int larger = static_cast<int>(std::count_if(p.begin(), p.end(), [&](int x) { return x > ones; }));
    return larger - ones;
}

std::map<int, Integer> crank_counts(int n) {
    check_n(n);
    std::map<int, long> c;
    for_each_partition(n, [&](const Partition& p) { c[crank_of(p)] += 1; });
    std::map<int, Integer> out;
    for (auto [k, v] : c) out[k] = Integer(v);
    return out;
}

std::map<int, Integer> crank_counts_dp(int n) {
    check_n(n);
    std::map<int, Integer> out;
    if (n == 0) {
        out[0] = 1;
        return out;
    }
    // exact[k][s]: partitions of s into exactly k parts
    std::vector<std::vector<Integer>> exact(n + 1, std::vector<Integer>(n + 1, 0));
    exact[0][0] = 1;
    for (int k = 1; k <= n; ++k)
        for (int s = k; s <= n; ++s) exact[k][s] = exact[k - 1][s - 1] + exact[k][s - k];

    // No ones: crank = largest part L; count partitions of n - L into parts in [2, L].
    // bounded[L][s]: partitions of s into parts in [2, L]
    std::vector<Integer> bounded(n + 1, 0);
    bounded[0] = 1;
    for (int L = 2; L <= n; ++L) {
        for (int s = L; s <= n; ++s) bounded[s] += bounded[s - L];
        out[L] += bounded[n - L];
    }

    // w >= 1 ones: the rest is a partition of n - w into parts >= 2, split into
    // parts in [2, w] summing to s1 and exactly k parts > w summing to s2.
    for (int w = 1; w <= n; ++w) {
        const int rest = n - w;
        std::vector<Integer> small(rest + 1, 0);
        small[0] = 1;
        for (int part = 2; part <= w; ++part)
            for (int s = part; s <= rest; ++s) small[s] += small[s - part];
        for (int s2 = 0; s2 <= rest; ++s2) {
            const Integer& ways_small = small[rest - s2];
            if (ways_small == 0) continue;
            // k parts each > w summing to s2: subtract w from each part
            for (int k = 0; static_cast<long>(k) * (w + 1) <= s2; ++k) {
                const int reduced = s2 - k * w;
                const Integer& ways_large = exact[k][reduced];
                if (ways_large == 0) continue;
                out[k - w] += ways_small * ways_large;
            }
        }
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

std::vector<Integer> crank_counts_mod(int t, int n, int enumeration_limit) {
    check_t(t);
    check_n(n);
    const auto counts = n <= enumeration_limit ? crank_counts(n) : crank_counts_dp(n);
    std::vector<Integer> out(t, 0);
    for (const auto& [m, c] : counts) out[((m % t) + t) % t] += c;
    return out;
}

Integer count_in_box(int n, int m, int k) {
    if (n < 0 || m < 0) throw Error(Errc::invalid_argument, "box dimensions must be >= 0");
    check_n(k);
    long count = 0;
    for_each_partition(k, [&](const Partition& p) {
        if (static_cast<int>(p.size()) <= m && (p.empty() || p.front() <= n)) ++count;
    });
    return Integer(count);
}

}  // namespace qseries
