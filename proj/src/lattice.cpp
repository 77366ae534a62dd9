#include "qseries/lattice.hpp"

#include <algorithm>
#include <cmath>

namespace qseries {

long quadratic_form_Q(std::span<const int> n) {
    const long a = static_cast<long>(n.size());
    long nn = 0;
    for (int x : n) nn += static_cast<long>(x) * x;
    // a * n.n is even on the zero-sum lattice
    return a * nn / 2 + b_dot(n);
}

long half_norm(std::span<const int> n) {
    long nn = 0;
    for (int x : n) nn += static_cast<long>(x) * x;
    return nn / 2;
}

long b_dot(std::span<const int> n) {
    long s = 0;
    for (std::size_t i = 0; i < n.size(); ++i) s += static_cast<long>(i) * n[i];
    return s;
}

namespace {

long isqrt(long x) {
    if (x <= 0) return 0;
    long r = static_cast<long>(std::sqrt(static_cast<double>(x)));
    while (r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r;
}

// Coordinates 0..i-1 fixed with partial sum S and partial square P; the m
// remaining coordinates must sum to -S, costing at least S^2/m, so a branch
// survives only if m P + S^2 <= m R.
void recurse(std::vector<int>& n, int i, long S, long P, long R, long box,
             const std::function<void(std::span<const int>)>& visit) {
    const int a = static_cast<int>(n.size());
    if (i == a - 1) {
        const long last = -S;
        if (P + last * last <= R) {
            n[i] = static_cast<int>(last);
            visit(n);
        }
        return;
    }
    const long m = a - i - 1;  // coordinates left after this one
    for (long x = -box; x <= box; ++x) {
        const long S2 = S + x;
        const long P2 = P + x * x;
        if (m * P2 + S2 * S2 > m * R) continue;
        n[i] = static_cast<int>(x);
        recurse(n, i + 1, S2, P2, R, box, visit);
    }
}

// |b - mean(b)|^2 = a (a^2 - 1) / 12: the relevant linear coefficient on the zero-sum lattice.
// Radius for Q_a(n) <= B: (a/2) x^2 - |b'| x <= B gives x^2 <= 4B/a + 4|b'|^2/a^2,
// and 4(a-1)^2/a dominates the second term.
long radius_for_Q(int a, long B) { return 4 * (B + static_cast<long>(a - 1) * (a - 1)) / a; }

void check_a(int a, int lo) {
    if (a < lo) throw Error(Errc::invalid_argument, "lattice dimension must be >= " + std::to_string(lo));
    if (a > 64) throw Error(Errc::invalid_argument, "lattice dimension too large");
}

void check_j(int j, int a) {
    if (j < 0 || j >= a) throw Error(Errc::invalid_argument, "j must lie in 0..a-1");
}

}  // namespace

void for_each_zero_sum(int a, long R, const std::function<void(std::span<const int>)>& visit) {
    check_a(a, 1);
    if (R < 0) return;
    std::vector<int> n(a, 0);
    recurse(n, 0, 0, 0, R, isqrt(R), visit);
}

std::vector<LatticePoint> enumerate_zero_sum(int a, long bound) {
    check_a(a, 2);
    std::vector<LatticePoint> out;
    if (bound < 0) return out;
    for_each_zero_sum(a, radius_for_Q(a, bound), [&](std::span<const int> n) {
        const long Q = quadratic_form_Q(n);
        if (Q <= bound) out.push_back({std::vector<int>(n.begin(), n.end()), Q});
    });
    std::sort(out.begin(), out.end(), [](const LatticePoint& x, const LatticePoint& y) {
        if (x.qexp != y.qexp) return x.qexp < y.qexp;
        return x.n < y.n;
    });
    return out;
}

std::vector<int> cyclic_shift_image(std::span<const int> n, int j) {
    const int a = static_cast<int>(n.size());
    check_j(j, a);
    std::vector<int> out(a);
    for (int i = 0; i < a; ++i) out[i] = n[(i + 1) % a];
    if (j >= 1) {
        out[j - 1] += 1;
        out[a - 1] -= 1;
    }
    return out;
}

namespace {

// Shared builder for C_a and the F_j: jsel < 0 means all j.
ZqSeries theta_CF(int jsel, int a, int qprec) {
    check_a(a, 2);
    ZqSeries out(qprec);
    if (qprec > 0) {
        auto& rows = out.rows_for_construction();
        for_each_zero_sum(a, radius_for_Q(a, qprec - 1), [&](std::span<const int> n) {
            const long Q = quadratic_form_Q(n);
            if (Q >= qprec) return;
            for (int j = 0; j < a; ++j) {
                if (jsel >= 0 && j != jsel) continue;
                rows[Q].at(a * n[j] + j) += 1;
            }
        });
        for (auto& r : rows) r.trim();
    }
    // Q_a(n) + (a n_j + j) = Q_a(n') >= 0, so e >= |d| whenever d < 0
    out.set_growth(GrowthBound::linear(1, 0, 0));
    return out;
}

}  // namespace

ZqSeries theta_C(int a, int qprec) { return theta_CF(-1, a, qprec); }

ZqSeries theta_F(int j, int a, int qprec) {
    check_a(a, 2);
    check_j(j, a);
    return theta_CF(j, a, qprec);
}

CycZqSeries theta_B(int j, int a, int qprec) {
    check_a(a, 2);
    check_j(j, a);
    CycZqSeries out(qprec);
    if (qprec > 0) {
        const long R = 2L * (qprec - 1);
        const long box = isqrt(R);
        const int width = static_cast<int>(2 * box + 1);
        // counts[(e * width + d + box) * a + residue]
        std::vector<long> counts(static_cast<std::size_t>(qprec) * width * a, 0);
        for_each_zero_sum(a, R, [&](std::span<const int> n) {
            const long e = half_norm(n);
            if (e >= qprec) return;
            const long res = ((b_dot(n) % a) + a) % a;
            counts[(static_cast<std::size_t>(e) * width + n[j] + box) * a + res] += 1;
        });
        auto& rows = out.rows_for_construction();
        for (int e = 0; e < qprec; ++e)
            for (int w = 0; w < width; ++w) {
                CycInt v = CycInt::zero(a);
                bool any = false;
                for (int r = 0; r < a; ++r) {
                    const long c = counts[(static_cast<std::size_t>(e) * width + w) * a + r];
                    if (c == 0) continue;
                    v.add_zeta_power(r, Integer(c));
                    any = true;
                }
                if (any && !is_zero(v)) rows[e].at(w - static_cast<int>(box)) = v;
            }
        for (auto& r : rows) r.trim();
    }
    // n.n/2 >= a n_j^2 / (2(a-1)) >= a |n_j| - a(a-1)/2
    out.set_growth(GrowthBound::linear(a, a, static_cast<long>(a) * (a - 1) / 2));
    return out;
}

QSeries klyachko_lhs(int t, int qprec) {
    check_a(t, 1);
    QSeries out(qprec);
    if (qprec <= 0) return out;
    std::vector<long> counts(qprec, 0);
    for_each_zero_sum(t, radius_for_Q(t, qprec - 1), [&](std::span<const int> n) {
        const long Q = quadratic_form_Q(n);
        if (Q < qprec) counts[Q] += 1;
    });
    for (int e = 0; e < qprec; ++e) out.at(e) = Integer(counts[e]);
    return out;
}

CycSeries klyachko_cyclotomic_lhs(int t, int qprec) {
    check_a(t, 1);
    CycSeries out(qprec);
    if (qprec <= 0) return out;
    std::vector<long> counts(static_cast<std::size_t>(qprec) * t, 0);
    for_each_zero_sum(t, 2L * (qprec - 1), [&](std::span<const int> n) {
        const long e = half_norm(n);
        if (e >= qprec) return;
        counts[static_cast<std::size_t>(e) * t + ((b_dot(n) % t) + t) % t] += 1;
    });
    for (int e = 0; e < qprec; ++e) {
        CycInt v = CycInt::zero(t);
        for (int r = 0; r < t; ++r)
            if (long c = counts[static_cast<std::size_t>(e) * t + r]) v.add_zeta_power(r, Integer(c));
        out.at(e) = v;
    }
    return out;
}

QSeries theta_C_at_monomial(int a, int r, int M, int qprec) {
    check_a(a, 1);
    if (M < 1 || r < 0 || r > M) throw Error(Errc::invalid_argument, "theta_C_at_monomial needs 0 <= r <= M");
    QSeries out(qprec);
    if (qprec <= 0) return out;
    // M Q + r(a n_j + j) >= (M a/2) x^2 - L x - r(a-1) with x = |n|,
    // L = M |b'| + r a, |b'|^2 = a(a^2-1)/12. Then
    // x^2 <= (4 L^2 + 4 M a (P + r(a-1))) / (M a)^2 and 4 L^2 <= 8 M^2 |b'|^2 + 8 r^2 a^2.
    const long P = qprec - 1;
    const long Ma = static_cast<long>(M) * a;
    const long num = (2L * M * M * a * (static_cast<long>(a) * a - 1) + 2) / 3 + 8L * r * r * a * a +
                     4 * Ma * (P + static_cast<long>(r) * (a - 1));
    const long R = num / (Ma * Ma) + 1;
    std::vector<long> counts(qprec, 0);
    for_each_zero_sum(a, R, [&](std::span<const int> n) {
        const long Q = quadratic_form_Q(n);
        for (int j = 0; j < a; ++j) {
            const long E = M * Q + static_cast<long>(r) * (static_cast<long>(a) * n[j] + j);
            if (E < 0) throw Error(Errc::negative_exponent, "C_a(q^r; q^M) produced a negative exponent");
            if (E < qprec) counts[E] += 1;
        }
    });
    for (int e = 0; e < qprec; ++e) out.at(e) = Integer(counts[e]);
    return out;
}

int theta_B_monomial_shift(int a, int k) {
    check_a(a, 2);
    const long num = static_cast<long>(k) * k * (a - 1);
    const long den = 2L * a;
    return static_cast<int>((num + den - 1) / den);
}

CycSeries theta_B_at_monomial(int j, int a, int k, int qprec) {
    check_a(a, 2);
    check_j(j, a);
    if (k < 0) throw Error(Errc::invalid_argument, "theta_B_at_monomial needs k >= 0");
    const int shift = theta_B_monomial_shift(a, k);
    CycSeries out(qprec);
    if (qprec <= 0) return out;
    // n.n/2 + k n_j + shift < P with n.n/2 + k n_j >= x^2/2 - k x gives x^2 <= 4(P + k^2)
    const long R = 4L * (qprec + static_cast<long>(k) * k);
    std::vector<long> counts(static_cast<std::size_t>(qprec) * a, 0);
    for_each_zero_sum(a, R, [&](std::span<const int> n) {
        const long E = half_norm(n) + static_cast<long>(k) * n[j] + shift;
        if (E < 0) throw Error(Errc::negative_exponent, "B(q^k) exponent below the computed shift");
        if (E >= qprec) return;
        counts[static_cast<std::size_t>(E) * a + ((b_dot(n) % a) + a) % a] += 1;
    });
    for (int e = 0; e < qprec; ++e) {
        CycInt v = CycInt::zero(a);
        for (int r = 0; r < a; ++r)
            if (long c = counts[static_cast<std::size_t>(e) * a + r]) v.add_zeta_power(r, Integer(c));
        out.at(e) = v;
    }
    return out;
}

}  // namespace qseries
