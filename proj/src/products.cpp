#include "qseries/products.hpp"

#include <functional>
#include <numeric>

#include "qseries/cyclo.hpp"
#include "qseries/lattice.hpp"

namespace qseries {

int mobius(int n) {
    if (n < 1) throw Error(Errc::invalid_argument, "mobius needs n >= 1");
    int result = 1;
    for (int p = 2; static_cast<long>(p) * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        result = -result;
    }
    return n > 1 ? -result : result;
}

std::vector<int> divisors(int n) {
    if (n < 1) throw Error(Errc::invalid_argument, "divisors needs n >= 1");
    std::vector<int> out;
    for (int d = 1; d <= n; ++d)
        if (n % d == 0) out.push_back(d);
    return out;
}

EtaQuotient saito_eta(int N) {
    if (N < 1) throw Error(Errc::invalid_argument, "saito_eta needs N >= 1");
    std::map<int, int> f;
    f[N] += euler_phi(N);
    for (int d : divisors(N)) f[d] -= mobius(d);
    return EtaQuotient(f);
}

long saito_prefactor24(int N) {
    if (N < 1) throw Error(Errc::invalid_argument, "saito_prefactor24 needs N >= 1");
    long s = static_cast<long>(N) * euler_phi(N);
    for (int d : divisors(N)) s -= static_cast<long>(mobius(d)) * d;
    return s;
}

QSeries saito_tilde(int N, int qprec) { return saito_eta(N).expand(qprec); }

QSeries coprime_E(int M, int qprec) {
    if (M < 1) throw Error(Errc::invalid_argument, "coprime_E needs M >= 1");
    auto out = QSeries::constant(Integer(1), qprec);
    for (int n = 1; n < qprec; ++n)
        if (std::gcd(n, M) == 1) out.apply_factor(n, 1, 1);
    return out;
}

QSeries mobius_E(int M, int qprec) {
    if (M < 1) throw Error(Errc::invalid_argument, "mobius_E needs M >= 1");
    std::map<int, int> f;
    for (int d : divisors(M))
        if (int mu = mobius(d)) f[d] += mu;
    return EtaQuotient(f).expand(qprec);
}

BracketSpec spec_R(int a) {
    if (a < 1) throw Error(Errc::invalid_argument, "spec_R needs a >= 1");
    BracketSpec s;
    s.euler(1).euler(a, a - 2).bracket(a, 0, a).bracket(1, 0, 1, -1);
    return s;
}

ZqSeries rhs_C(int a, int qprec) { return expand_bracket_spec(spec_R(a), qprec); }

BracketSpec spec_D(int a) {
    if (a < 1) throw Error(Errc::invalid_argument, "spec_D needs a >= 1");
    BracketSpec s;
    s.euler(a, 2 * a - 2).bracket(a, 0, a).bracket(1, 0, 1, -1);
    return s;
}

QSeries d_series(int a, int r, int M, int qprec) {
    if (M < 1 || r < 1 || r >= M) throw Error(Errc::invalid_argument, "d_series needs 1 <= r < M");
    return expand_univariate(specialize(spec_D(a), 1, r, M), qprec);
}

QSeries d_series_lattice(int a, int r, int M, int qprec) {
    if (M < 1 || r < 1 || r >= M) throw Error(Errc::invalid_argument, "d_series_lattice needs 1 <= r < M");
    std::map<int, int> f;
    f[a * M] += a;
    f[M] -= 1;
    const auto pre = EtaQuotient(f).expand(qprec);
    return pre * theta_C_at_monomial(a, r, M, qprec);
}

BracketSpec spec_B_product(int a) {
    if (a < 2) throw Error(Errc::invalid_argument, "spec_B_product needs a >= 2");
    BracketSpec s;
    s.euler(1, a - 2).euler(a).bracket(1, 0, 1).bracket(1, 0, a, -1);
    return s;
}

ZqSeries gqpi_side(int a, Side side, int qprec, int window) {
    if (a < 1) throw Error(Errc::invalid_argument, "gqpi needs a >= 1");
    const int m = a + 1;
    if (side == Side::Left) {
        BracketSpec s;
        s.bracket(a, 0, 1).bracket(1, 0, 1, -1).bracket(m, 0, 1, -1);
        return expand_bracket_spec(s, qprec, window);
    }
    std::optional<ZqSeries> sum;
    for (int j = 0; j < a; ++j) {
        BracketSpec s;
        s.euler(m, 2).euler(1, -2).monomial(j, 0);
        s.bracket(0, a - j, m).bracket(m, 0, m, -1).bracket(m, a - j, m, -1);
        auto t = expand_bracket_spec(s, qprec, window);
        sum = sum ? *sum + t : t;
    }
    return *sum;
}

ZqSeries gqpib_side(int a, Side side, int qprec) {
    if (a < 1) throw Error(Errc::invalid_argument, "gqpib needs a >= 1");
    const int m = a + 1;
    if (side == Side::Left) {
        BracketSpec s;
        s.euler(1, 2).euler(m, -2).bracket(a, 0, 1).bracket(1, 0, 1, -1);
        return expand_bracket_spec(s, qprec);
    }
    std::optional<ZqSeries> sum;
    for (int j = 0; j < a; ++j) {
        BracketSpec s;
        s.monomial(j, 0).bracket(0, a - j, m);
        for (int k = 1; k <= a; ++k)
            if (k != a - j) s.bracket(m, k, m);
        auto t = expand_bracket_spec(s, qprec);
        sum = sum ? *sum + t : t;
    }
    return *sum;
}

ZqSeries crank_gen(int qprec, std::optional<int> window) {
    BracketSpec s;
    s.single(1, 0).euler(1).bracket(1, 0, 1, -1);
    return expand_bracket_spec(s, qprec, window);
}

ZqSeries crank_gen_product(int qprec) {
    BracketSpec s;
    s.poch(0, 1, 1).poch(1, 1, 1, -1).poch(-1, 1, 1, -1);
    return expand_bracket_spec(s, qprec);
}

QSeries gaussian_poly(int n, int m) {
    if (n < 0 || m < 0) throw Error(Errc::invalid_argument, "gaussian_poly needs n, m >= 0");
    BracketSpec s;
    s.finite_poch(0, 1, 1, n + m).finite_poch(0, 1, 1, n, -1).finite_poch(0, 1, 1, m, -1);
    return expand_univariate(s, n * m + 1);
}

ZqSeries ekin_theta1(int qprec) {
    ZqSeries out(qprec);
    auto& rows = out.rows_for_construction();
    for (long n = 1;; ++n) {
        bool any = false;
        for (long d : {n, 1 - n}) {  // the exponent n(n-1)/2 is shared by n and 1-n
            const long e = n * (n - 1) / 2;
            if (e >= qprec) continue;
            rows[e].at(static_cast<int>(d)) += 1;
            any = true;
        }
        if (!any) break;
    }
    // e >= -d and e >= d - 1
    out.set_growth(GrowthBound::linear(1, 1, 1));
    return out;
}

ZqSeries ekin_theta2(int qprec) {
    ZqSeries out(qprec);
    auto& rows = out.rows_for_construction();
    auto tri = [](long n) { return n * (n - 1) / 2; };
    // n(n-1)/2 >= 0 on the integers; both parts bounded by qprec - 1
    long R1 = 0;
    while (tri(-R1) < qprec) ++R1;
    long R2 = 0;
    while (2 * tri(-R2) < qprec) ++R2;
    for (long n1 = -R1; n1 <= R1 + 1; ++n1)
        for (long n2 = -R2; n2 <= R2 + 1; ++n2) {
            const long e = tri(n1) + 2 * tri(n2);
            if (e < qprec) rows[e].at(static_cast<int>(n1 + 2 * n2)) += 1;
        }
    for (auto& r : rows) r.trim();
    // n1(n1-1)/2 >= max(-n1, n1 - 1) and n2(n2-1) >= max(-2 n2, 2 n2 - 2)
    out.set_growth(GrowthBound::linear(1, 1, 3));
    return out;
}

ZqSeries zq_sum(int qprec, int window) {
    if (window < 0) throw Error(Errc::insufficient_window, "negative window");
    // Term n reaches z^d only through z^{n-k} q^{k(n+1)}; for n > W the lowest
    // q-exponent landing at d <= W is (n - W)(n + 1).
    ZqSeries out(qprec);
    for (long n = 0; n <= window || (n - window) * (n + 1) < qprec; ++n) {
        BracketSpec s;
        s.monomial(static_cast<int>(n), 0).finite_poch(0, 1, 1, static_cast<int>(n), -1);
        s.poch(-1, static_cast<int>(n) + 1, 1, -1);
        out += expand_bracket_spec(s, qprec);
    }
    out.set_window(window);
    out.set_growth(GrowthBound::unknown());
    return out;
}

namespace {

void check_sign(int s) {
    if (s != 1 && s != -1) throw Error(Errc::invalid_argument, "signs must be +1 or -1");
}

}  // namespace

QSeries atq_sum(int alpha, int sa, int beta, int st, int qprec) {
    if (alpha < 1 || beta < 1) throw Error(Errc::invalid_argument, "atq_sum needs alpha, beta >= 1");
    check_sign(sa);
    check_sign(st);
    QSeries out(qprec);
    for (int n = 0; static_cast<long>(beta) * n < qprec; ++n) {
        BracketSpec s;
        s.scale(Integer(n % 2 && st < 0 ? -1 : 1)).monomial(0, beta * n);
        s.poch(0, alpha + n, 1, -1, sa).finite_poch(0, 1, 1, n, -1);
        out += expand_univariate(s, qprec);
    }
    return out;
}

QSeries atqfin_sum(int L, int alpha, int s1, int beta, int s2, int qprec) {
    if (L < 0 || alpha < 1 || beta < 1) throw Error(Errc::invalid_argument, "atqfin_sum needs L >= 0, alpha, beta >= 1");
    check_sign(s1);
    check_sign(s2);
    QSeries out(qprec);
    for (int j = 0; j <= L; ++j) {
        BracketSpec s;
        s.finite_poch(0, 1, 1, L).finite_poch(0, 1, 1, j, -1).finite_poch(0, 1, 1, L - j, -1);
        s.scale(Integer(j % 2 && s1 < 0 ? -1 : 1)).monomial(0, alpha * j);
        s.finite_poch(0, alpha + L - j, 1, j, -1, s1).finite_poch(0, beta + j, 1, L - j, -1, s2);
        out += expand_univariate(s, qprec);
    }
    return out;
}

long param(const Params& p, const std::string& key, std::optional<long> fallback, long lo, long hi) {
    long v;
    if (auto it = p.find(key); it != p.end())
        v = it->second;
    else if (fallback)
        v = *fallback;
    else
        throw Error(Errc::invalid_params, "missing parameter '" + key + "'");
    if (v < lo || v > hi)
        throw Error(Errc::invalid_params, "parameter '" + key + "' = " + std::to_string(v) + " outside [" +
                                              std::to_string(lo) + ", " + std::to_string(hi) + "]");
    return v;
}

namespace {

struct Ctx {
    const Params& p;
    int qprec;
    std::optional<int> window;

    int get(const char* key, long lo, long hi, std::optional<long> fallback = std::nullopt) const {
        return static_cast<int>(param(p, key, fallback, lo, hi));
    }
    ZqSeries zq(const BracketSpec& s) const { return expand_bracket_spec(s, qprec, window); }
    QSeries q(const BracketSpec& s) const { return expand_univariate(s, qprec); }
    // Repeated levels accumulate.
    QSeries eta(std::initializer_list<std::pair<int, int>> f) const {
        std::map<int, int> m;
        for (auto [k, e] : f) m[k] += e;
        return EtaQuotient(m).expand(qprec);
    }
    QSeries eta(const std::map<int, int>& f) const { return EtaQuotient(f).expand(qprec); }
};

constexpr long kMax = 1000;

using Builder = std::function<AnySeries(const Ctx&)>;

// prod_{r=1}^{R} C_n(q^r; q^m) from the product side of C_n.
QSeries product_of_C(int n, int m, int R, int qprec) {
    auto out = QSeries::constant(Integer(1), qprec);
    for (int r = 1; r <= R; ++r) out *= expand_univariate(specialize(spec_R(n), 1, r, m), qprec);
    return out;
}

QSeries product_of_D(int n, int m, int qprec) {
    auto out = QSeries::constant(Integer(1), qprec);
    for (int r = 1; r <= (m - 1) / 2; ++r) out *= d_series(n, r, m, qprec);
    return out;
}

BracketSpec spec_Pn(int n) {
    BracketSpec s;
    s.poch(1, 0, n).poch(n - 1, n, n).poch(1, 0, 1, -1);
    return s;
}

const std::map<std::string, Builder>& registry() {
    static const std::map<std::string, Builder> reg = {
        {"atq",
         [](const Ctx& c) -> AnySeries {
             const int al = c.get("alpha", 1, kMax), be = c.get("beta", 1, kMax);
             const int sa = c.get("sa", -1, 1, 1), st = c.get("st", -1, 1, 1);
             check_sign(sa);
             check_sign(st);
             BracketSpec s;
             s.poch(0, al + be, 1, 1, sa * st).poch(0, al, 1, -1, sa).poch(0, be, 1, -1, st);
             return c.q(s);
         }},
        {"atqfin",
         [](const Ctx& c) -> AnySeries {
             const int L = c.get("L", 0, kMax);
             const int al = c.get("alpha", 1, kMax), be = c.get("beta", 1, kMax);
             const int s1 = c.get("s1", -1, 1, 1), s2 = c.get("s2", -1, 1, 1);
             check_sign(s1);
             check_sign(s2);
             BracketSpec s;
             s.finite_poch(0, al + be, 1, L, 1, s1 * s2).finite_poch(0, al, 1, L, -1, s1);
             s.finite_poch(0, be, 1, L, -1, s2);
             return c.q(s);
         }},
        {"coratq1",
         [](const Ctx& c) -> AnySeries {
             const int a = c.get("a", 1, kMax), b = c.get("b", 1, kMax), M = c.get("M", 1, kMax);
             BracketSpec s;
             s.poch(0, a + b, M).poch(0, a, M, -1).poch(0, b, M, -1);
             return c.q(s);
         }},
        {"gpdef",
         [](const Ctx& c) -> AnySeries {
             const auto g = gaussian_poly(c.get("n", 0, kMax), c.get("m", 0, kMax));
             QSeries out(c.qprec);
             for (int e = 0; e < std::min(c.qprec, g.precision()); ++e) out.at(e) = g[e];
             return out;
         }},
        {"zq",
         [](const Ctx& c) -> AnySeries {
             BracketSpec s;
             s.euler(1).bracket(1, 0, 1, -1);
             return c.zq(s);
         }},
        {"crankgen", [](const Ctx& c) -> AnySeries { return crank_gen(c.qprec, c.window); }},
        {"aci",
         [](const Ctx& c) -> AnySeries {
             BracketSpec s;
             s.single(c.get("m", 2, kMax), 0).euler(1).bracket(1, 0, 1, -1);
             return c.zq(s);
         }},
        {"tcore",
         [](const Ctx& c) -> AnySeries {
             const int t = c.get("t", 1, kMax);
             return c.eta({{t, t}, {1, -1}});
         }},
        {"quin",
         [](const Ctx& c) -> AnySeries {
             BracketSpec s;
             s.bracket(2, 0, 1).euler(1).bracket(1, 0, 1, -1).bracket(3, 0, 1, -1);
             return c.zq(s);
         }},
        {"gqpi",
         [](const Ctx& c) -> AnySeries {
             if (!c.window) throw Error(Errc::unbounded_z_support, "gqpi needs a z-window");
             return gqpi_side(c.get("a", 1, kMax), Side::Left, c.qprec, *c.window);
         }},
        {"gqpib", [](const Ctx& c) -> AnySeries { return gqpib_side(c.get("a", 1, kMax), Side::Left, c.qprec); }},
        {"jactrans",
         [](const Ctx& c) -> AnySeries {
             const int k = c.get("k", 0, kMax);
             BracketSpec s;
             s.bracket(1, k, 1).monomial(0, k * (k - 1) / 2);
             return c.zq(s);
         }},
        {"EkinId1",
         [](const Ctx& c) -> AnySeries {
             BracketSpec s;
             s.euler(1).bracket(1, 0, 1, -1);
             return c.zq(s);
         }},
        {"EkinId2",
         [](const Ctx& c) -> AnySeries {
             BracketSpec s;
             s.euler(1).euler(2).bracket(1, 0, 1, -1);
             return c.zq(s);
         }},
        {"EkinIt",
         [](const Ctx& c) -> AnySeries {
             const int depth = c.get("depth", 1, 30);
             // E(q^{2^i}) for 2^i >= qprec is 1 + O(q^qprec)
             if ((1L << depth) < c.qprec)
                 throw Error(Errc::invalid_params, "EkinIt needs 2^depth >= qprec to represent the infinite product");
             BracketSpec s;
             for (int i = 0; i < depth; ++i) s.euler(1 << i);
             s.bracket(1, 0, 1, -1);
             return c.zq(s);
         }},
        {"corgqpi1",
         [](const Ctx& c) -> AnySeries {
             const int a = c.get("a", 2, kMax), k = c.get("k", 2, kMax);
             BracketSpec s;
             s.single(k * (a + 1), 0).euler(1).euler(a + 1, (a + 1) / 2);
             s.bracket(a, 0, 1).bracket(1, 0, 1, -1).bracket(a + 1, 0, 1, -1);
             return c.zq(s);
         }},
        {"gqpic",
         [](const Ctx& c) -> AnySeries {
             const int a = c.get("a", 2, kMax), k = c.get("k", 2, kMax);
             const int m = a + 1;
             std::optional<ZqSeries> sum;
             for (int i = 0; i < a; ++i) {
                 BracketSpec s;
                 s.monomial(i, 0).euler(m, (a + 1) / 2).bracket(0, a - i, m).euler(1, -1);
                 s.single(k * m, 0).euler(m, 2).bracket(m, 0, m, -1).bracket(m, a - i, m, -1);
                 auto t = c.zq(s);
                 sum = sum ? *sum + t : t;
             }
             return *sum;
         }},
        {"crank5a",
         [](const Ctx& c) -> AnySeries {
             BracketSpec s;
             s.single(0, 8).euler(5).euler(20, 2).bracket(0, 2, 5).bracket(0, 1, 5, -2);
             return c.q(s);
         }},
        {"crank5b",
         [](const Ctx& c) -> AnySeries {
             BracketSpec s;
             s.euler(5).bracket(0, 2, 5).bracket(0, 1, 5, -2);
             return c.q(s);
         }},
        {"crank11a",
         [](const Ctx& c) -> AnySeries {
             BracketSpec s;
             s.euler(11).bracket(0, 3, 11).bracket(0, 1, 11, -1).bracket(0, 4, 11, -1);
             return c.q(s);
         }},
        {"res1",
         [](const Ctx& c) -> AnySeries {
             BracketSpec s;
             s.euler(2).bracket(4, 0, 2).bracket(2, 0, 2, -1).bracket(3, 1, 2, -1);
             return c.zq(s);
         }},
        {"res2",
         [](const Ctx& c) -> AnySeries {
             BracketSpec s;
             s.euler(3).poch(2, 0, 3).poch(-1, 3, 3, -1).poch(1, 0, 1, -1);
             return c.zq(s);
         }},
        {"res2b",
         [](const Ctx& c) -> AnySeries {
             BracketSpec s;
             s.euler(3).bracket(2, 0, 3).bracket(1, 0, 1, -1);
             return c.zq(s);
         }},
        {"res2c",
         [](const Ctx& c) -> AnySeries {
             BracketSpec f1, f2, f3;
             f1.single(2, 0).euler(3).bracket(1, 0, 3, -1);
             f2.poch(2, 3, 3).poch(1, 1, 3, -1).poch(1, 2, 3, -1);
             f3.poch(-2, 3, 3).poch(-1, 1, 3, -1).poch(-1, 2, 3, -1);
             return c.zq(f1) * c.zq(f2) * c.zq(f3);
         }},
        {"res2d",
         [](const Ctx& c) -> AnySeries {
             BracketSpec t1, t2;
             t1.euler(6).bracket(6, 2, 6).bracket(3, 1, 2, -1);
             t2.monomial(2, 0).euler(6).bracket(-6, 2, 6).bracket(-3, 1, 2, -1);
             return c.zq(t1) + c.zq(t2);
         }},
        {"res2e",
         [](const Ctx& c) -> AnySeries {
             BracketSpec f1, f2;
             f1.single(2, 0).euler(3).bracket(1, 0, 3, -1);
             f2.poch(2, 3, 3).poch(1, 1, 3, -1).poch(1, 2, 3, -1);
             return c.zq(f1) * c.zq(f2);
         }},
        {"eta1a",
         [](const Ctx& c) -> AnySeries {
             const int m = c.get("m", 1, kMax), n = c.get("n", 1, kMax);
             if (m % 2 == 0) throw Error(Errc::invalid_params, "eta1a needs odd m");
             std::map<int, int> f;
             f[m * n] += n * (m - 1) / 2 - m;
             f[m] += (m + 1) / 2;
             f[n] += 1;
             f[1] -= 1;
             return c.eta(f);
         }},
        {"eta1b",
         [](const Ctx& c) -> AnySeries {
             const int m = c.get("m", 2, kMax), n = c.get("n", 1, kMax);
             if (m % 2) throw Error(Errc::invalid_params, "eta1b needs even m");
             std::map<int, int> f;
             f[m * n] += (n - 2) * (m / 2 - 1);
             f[m] += m / 2 - 1;
             f[n] += 1;
             f[m / 2] += 1;
             f[1] -= 1;
             f[m * n / 2] -= 1;
             return c.eta(f);
         }},
        {"Bev",
         [](const Ctx& c) -> AnySeries {
             const int m = c.get("m", 1, kMax);
             if (m % 2 == 0) throw Error(Errc::invalid_params, "Bev needs odd m");
             BracketSpec s;
             for (int r = 1; r <= (m - 1) / 2; ++r) s.bracket(0, r, m);
             return c.q(s);
         }},
        {"Bodd",
         [](const Ctx& c) -> AnySeries {
             const int m = c.get("m", 2, kMax);
             if (m % 2) throw Error(Errc::invalid_params, "Bodd needs even m");
             BracketSpec s;
             for (int r = 1; r <= m / 2 - 1; ++r) s.bracket(0, r, m);
             return c.q(s);
         }},
        {"eta1aid",
         [](const Ctx& c) -> AnySeries {
             const int m = c.get("m", 1, kMax), n = c.get("n", 1, kMax);
             if (m % 2 == 0) throw Error(Errc::invalid_params, "eta1aid needs odd m");
             return product_of_C(n, m, (m - 1) / 2, c.qprec);
         }},
        {"eta1bid",
         [](const Ctx& c) -> AnySeries {
             const int m = c.get("m", 2, kMax), n = c.get("n", 1, kMax);
             if (m % 2) throw Error(Errc::invalid_params, "eta1bid needs even m");
             return product_of_C(n, m, m / 2 - 1, c.qprec);
         }},
        {"eta2",
         [](const Ctx& c) -> AnySeries {
             const int m = c.get("m", 1, kMax), n = c.get("n", 1, kMax);
             std::map<int, int> f;
             f[m * n] += m * n - m - n;
             f[m] += 1;
             f[n] += 1;
             f[1] -= 1;
             return c.eta(f);
         }},
        {"eta2id1",
         [](const Ctx& c) -> AnySeries {
             const int m = c.get("m", 1, kMax), n = c.get("n", 1, kMax);
             if (m % 2 == 0) throw Error(Errc::invalid_params, "eta2id1 needs odd m");
             Params p{{"m", m}, {"n", n}};
             auto left = std::get<QSeries>(named_series("eta1a", p, c.qprec));
             return left * pow(c.eta({{m * n, n}, {m, -1}}), (m - 1) / 2);
         }},
        {"Vn",
         [](const Ctx& c) -> AnySeries {
             const int n = c.get("n", 1, kMax);
             std::map<int, int> f;
             f[2 * n] += n - 2;
             f[2] += 1;
             f[n] += 1;
             f[1] -= 1;
             return c.eta(f);
         }},
        {"eta2id2",
         [](const Ctx& c) -> AnySeries {
             const int m = c.get("m", 2, kMax), n = c.get("n", 1, kMax);
             if (m % 2) throw Error(Errc::invalid_params, "eta2id2 needs even m");
             auto left = std::get<QSeries>(named_series("eta1b", {{"m", m}, {"n", n}}, c.qprec));
             auto mid = pow(c.eta({{m * n, n}, {m, -1}}), m / 2 - 1);
             // V_n(q^{m/2}) needs only qprec / (m/2) terms before the substitution
             const int h = m / 2;
             auto v = std::get<QSeries>(named_series("Vn", {{"n", n}}, (c.qprec + h - 1) / h)).subst_q_to_qk(h);
             return left * mid * v.truncated(c.qprec);
         }},
        {"eta2alt",
         [](const Ctx& c) -> AnySeries {
             const int m = c.get("m", 1, kMax), n = c.get("n", 1, kMax);
             if (m % 2 == 0) throw Error(Errc::invalid_params, "eta2alt needs odd m");
             return product_of_D(n, m, c.qprec);
         }},
        {"conj2a",
         [](const Ctx& c) -> AnySeries {
             const int p = c.get("p", 1, kMax);
             BracketSpec s;
             s.euler(1).poch(1, 0, 1, -1).poch(-p, 1, 1, -1);
             return c.zq(s);
         }},
        {"conj2b",
         [](const Ctx& c) -> AnySeries {
             const int a = c.get("a", 1, kMax), b = c.get("b", 1, kMax);
             const int m = c.get("m", 1, kMax), n = c.get("n", 1, kMax);
             const int K = m * a + n * b;
             BracketSpec s;
             s.euler(K).poch(0, a, K, -1).poch(0, b, K, -1);
             return c.q(s);
         }},
        {"conj2c",
         [](const Ctx& c) -> AnySeries { return c.zq(spec_Pn(c.get("n", 3, kMax))); }},
        {"conj2d",
         [](const Ctx& c) -> AnySeries {
             const int n = c.get("n", 4, kMax);
             BracketSpec s;
             s.poch(n - 1, n, n).poch(1, 1, n, -1).poch(1, 2, n, -1).poch(1, 3, n, -1);
             return c.zq(s);
         }},
        {"conj2e",
         [](const Ctx& c) -> AnySeries {
             const int n = c.get("n", 2, kMax);
             BracketSpec s;
             s.euler(n).bracket(n - 1, 0, n).bracket(1, 0, 1, -1);
             return c.zq(s);
         }},
        {"conj2f",
         [](const Ctx& c) -> AnySeries {
             const int n = c.get("n", 2, kMax), m = c.get("m", 1, kMax), a = c.get("a", 1, 2);
             BracketSpec s;
             s.euler(n * m).poch(0, a, m, -1);
             return c.q(s);
         }},
        {"conj2g",
         [](const Ctx& c) -> AnySeries {
             const int m = c.get("m", 2, kMax);
             BracketSpec s;
             s.euler(m).bracket(2, 0, m).bracket(1, 0, m, -1).poch(1, 1, m, -1).poch(-1, 1, m, -1);
             return c.zq(s);
         }},
        {"conj2h",
         [](const Ctx& c) -> AnySeries {
             const int n = c.get("n", 2, kMax);
             BracketSpec s;
             s.euler(n).bracket(n * n, 0, n).bracket(n, 0, n, -1);
             s.bracket(n + 1, n, n).bracket(n + 1, 1, 1, -1);
             return c.zq(s);
         }},
        {"conj2c3",
         [](const Ctx& c) -> AnySeries {
             BracketSpec s;
             s.poch(2, 3, 3).poch(1, 1, 3, -1).poch(1, 2, 3, -1);
             return c.zq(s);
         }},
        {"conj2c4",
         [](const Ctx& c) -> AnySeries {
             BracketSpec s;
             s.poch(3, 4, 4).poch(1, 1, 2, -1).poch(1, 2, 4, -1);
             return c.zq(s);
         }},
        {"conj2ea",
         [](const Ctx& c) -> AnySeries {
             const int n = c.get("n", 3, kMax);
             BracketSpec s;
             s.single(n - 1, 0).euler(n).bracket(1, 0, n, -1);
             s *= spec_Pn(n);
             s *= substitute(spec_Pn(n), {1, -1, 0, 1});
             return c.zq(s);
         }},
        {"conj2e2",
         [](const Ctx& c) -> AnySeries {
             BracketSpec s;
             s.euler(2).bracket(1, 1, 2, -1);
             return c.zq(s);
         }},
        {"conj2f2",
         [](const Ctx& c) -> AnySeries {
             const int n = c.get("n", 1, kMax);
             return c.eta({{2, 2}, {1, -1}}) * c.eta({{2 * n, 1}, {2, -1}});
         }},
        {"conj2g2",
         [](const Ctx& c) -> AnySeries {
             BracketSpec s;
             s.euler(2).euler(1, -1).poch(0, 1, 1).poch(1, 0, 1, 1, -1).poch(-1, 1, 1, 1, -1);
             return c.zq(s);
         }},
    };
    return reg;
}

}  // namespace

AnySeries named_series(const std::string& id, const Params& params, int qprec, std::optional<int> window) {
    if (qprec < 0) throw Error(Errc::invalid_precision, "negative qprec");
    const auto& reg = registry();
    auto it = reg.find(id);
    if (it == reg.end()) throw Error(Errc::unknown_id, "unknown series '" + id + "'");
    return it->second(Ctx{params, qprec, window});
}

std::vector<std::string> named_series_ids() {
    std::vector<std::string> out;
    for (const auto& [k, v] : registry()) out.push_back(k);
    return out;
}

}  // namespace qseries
