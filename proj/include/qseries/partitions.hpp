#pragma once

// Integer partitions: enumeration, hook lengths, t-cores and the crank.

#include <map>
#include <vector>

#include "qseries/integer.hpp"

namespace qseries {

/// A partition as non-increasing positive parts; the empty partition is {}.
using Partition = std::vector<int>;

/// All partitions of n in reverse lexicographic order: (n), (n-1, 1), ..., (1^n).
std::vector<Partition> partitions_of(int n);

/// Calls visit on each partition of n in the same order without storing them.
template <class F>
void for_each_partition(int n, F&& visit);

/// Hook lengths of every cell, row by row.
std::vector<int> hooks(const Partition& p);

enum class CorePredicate {
    NoHookEqual,      // no hook of length exactly t
    NoHookDivisible,  // no hook of length divisible by t
};

bool is_t_core(const Partition& p, int t, CorePredicate pred = CorePredicate::NoHookEqual);

/// Number of t-cores of n.
Integer count_t_cores(int t, int n, CorePredicate pred = CorePredicate::NoHookEqual);

/// Largest part if there are no ones; otherwise (#parts larger than the number
/// of ones) - (number of ones). The empty partition has crank 0.
int crank_of(const Partition& p);

/// M(m, n) for every m that occurs, by enumeration.
std::map<int, Integer> crank_counts(int n);

/// M(m, n) by counting over the number of ones, without enumerating partitions.
std::map<int, Integer> crank_counts_dp(int n);

/// M(k, t, n) for k = 0..t-1. Uses enumeration for n <= enumeration_limit and
/// the counting method above otherwise.
std::vector<Integer> crank_counts_mod(int t, int n, int enumeration_limit = 30);

/// Partitions of k with at most m parts, each at most n.
Integer count_in_box(int n, int m, int k);

template <class F>
void for_each_partition(int n, F&& visit) {
    if (n < 0) return;
    Partition p;
    if (n == 0) {
        visit(p);
        return;
    }
    p.push_back(n);
    for (;;) {
        visit(p);
        // rightmost part > 1
        int i = static_cast<int>(p.size()) - 1;
        int ones = 0;
        while (i >= 0 && p[i] == 1) {
            ++ones;
            --i;
        }
        if (i < 0) return;
        const int v = p[i] - 1;
        int rest = ones + 1;
        p.resize(i);
        p.push_back(v);
        while (rest > 0) {
            const int take = rest < v ? rest : v;
            p.push_back(take);
            rest -= take;
        }
    }
}

}  // namespace qseries
