// The identity catalog. Each runner builds both sides independently and
// records comparisons in a Check; see verify.cpp for dispatch.

#include <numeric>

#include "check.hpp"
#include "catalog_impl.hpp"
#include "qseries/lattice.hpp"
#include "qseries/partitions.hpp"

namespace qseries::detail {

namespace {

int P(const Params& p, const char* key, long lo, long hi, std::optional<long> fallback = std::nullopt) {
    return static_cast<int>(param(p, key, fallback, lo, hi));
}

ZqSeries X(const BracketSpec& s, int qprec, std::optional<int> window = std::nullopt) {
    return expand_bracket_spec(s, qprec, window);
}

QSeries U(const BracketSpec& s, int qprec) { return expand_univariate(s, qprec); }

QSeries eta(std::initializer_list<std::pair<int, int>> f, int qprec) {
    std::map<int, int> m;
    for (auto [k, e] : f) m[k] += e;
    return EtaQuotient(m).expand(qprec);
}

ZqSeries as_zq(const AnySeries& s) { return std::get<ZqSeries>(s); }
QSeries as_q(const AnySeries& s) { return std::get<QSeries>(s); }

ZqSeries named_zq(const std::string& id, const Params& p, int qprec, std::optional<int> w = std::nullopt) {
    return as_zq(named_series(id, p, qprec, w));
}

QSeries named_q(const std::string& id, const Params& p, int qprec) { return as_q(named_series(id, p, qprec)); }

ZqSeries mono(long c, int zc, int qb, int qprec) { return ZqSeries::monomial(Integer(c), zc, qb, qprec); }

int sign_pow(int k) { return k % 2 == 0 ? 1 : -1; }

std::string num(long v) { return std::to_string(v); }

using Axis = std::pair<std::string, std::vector<long>>;

std::vector<long> range(long lo, long hi, long step = 1) {
    std::vector<long> v;
    for (long x = lo; x <= hi; x += step) v.push_back(x);
    return v;
}

std::vector<Params> cartesian(const std::vector<Axis>& axes, const std::function<bool(const Params&)>& keep = {}) {
    std::vector<Params> out{Params{}};
    for (const auto& [name, values] : axes) {
        std::vector<Params> next;
        for (const auto& p : out)
            for (long v : values) {
                Params q = p;
                q[name] = v;
                next.push_back(q);
            }
        out = std::move(next);
    }
    if (keep) std::erase_if(out, [&](const Params& p) { return !keep(p); });
    return out;
}

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

long ipow(long b, int e) {
    long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

// sum_k (-1)^k q^{k(3k-1)/2}, k over all integers
QSeries pentagonal(int qprec) {
    QSeries out(qprec);
    for (long k = 0;; ++k) {
        bool any = false;
        for (long j : {k, -k - 1}) {
            const long e = j * (3 * j - 1) / 2;
            if (e < qprec) {
                out.at(static_cast<int>(e)) += Integer(sign_pow(static_cast<int>(j & 1)));
                any = true;
            }
        }
        if (!any) break;
    }
    return out;
}

// sum_n q^{2n^2+n} (z^{-2n} + z^{2n+1}); the z^{2n} variant disagrees at q^1
ZqSeries cazq2_sum(int qprec) {
    ZqSeries out(qprec);
    auto& rows = out.rows_for_construction();
    for (long n = 0;; ++n) {
        bool any = false;
        for (long m : {n, -n - 1}) {
            const long e = 2 * m * m + m;
            if (e >= qprec) continue;
            any = true;
            rows[e].at(static_cast<int>(-2 * m)) += 1;
            rows[e].at(static_cast<int>(2 * m + 1)) += 1;
        }
        if (!any) break;
    }
    return out;
}

// E(q)^{a-2} E(q^a) [z; q] / [z; q^a] with z -> q^k; the point z = q^k hits
// the zero factor (1 - q^0) of [z; q] for 1 <= k.
QSeries b_product_at(int a, int k, int qprec) { return U(specialize(spec_B_product(a), 1, k), qprec); }

// Direct scan of the box |n_i| <= X with the last coordinate forced.
std::vector<LatticePoint> naive_zero_sum(int a, long bound) {
    // (a/2) x^2 - (a-1) x <= bound + (a-1)(a/2 - 1) bounds every |n_i|
    long X = 0;
    while (a * (X + 1) * (X + 1) - 2 * (a - 1) * (X + 1) <= 2 * bound + (a - 1) * (a - 2)) ++X;
    std::vector<LatticePoint> out;
    std::vector<int> n(a, 0);
    std::function<void(int, long)> rec = [&](int i, long s) {
        if (i == a - 1) {
            if (std::abs(s) > X) return;
            n[i] = static_cast<int>(-s);
            long nn = 0, bn = 0;
            for (int t = 0; t < a; ++t) {
                nn += static_cast<long>(n[t]) * n[t];
                bn += static_cast<long>(t) * n[t];
            }
            const long Q = a * nn / 2 + bn;
            if (Q <= bound) out.push_back({n, Q});
            return;
        }
        for (long x = -X; x <= X; ++x) {
            n[i] = static_cast<int>(x);
            rec(i + 1, s + x);
        }
    };
    rec(0, 0);
    std::sort(out.begin(), out.end(), [](const LatticePoint& x, const LatticePoint& y) {
        return x.qexp != y.qexp ? x.qexp < y.qexp : x.n < y.n;
    });
    return out;
}

std::string vec_string(const std::vector<int>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

// prod_{r=1}^{R} C_n(q^r; q^m) through the lattice sum.
QSeries lattice_product_of_C(int n, int m, int R, int qprec) {
    auto out = QSeries::constant(Integer(1), qprec);
    for (int r = 1; r <= R; ++r) out *= theta_C_at_monomial(n, r, m, qprec);
    return out;
}

}  // namespace

std::vector<CatalogItem> build_catalog() {
    std::vector<CatalogItem> c;
    auto add = [&](CatalogEntry e, Runner r) { c.push_back({std::move(e), std::move(r)}); };

    // ---- lattice sums and their product sides --------------------------------

    add({"thm1", {"Cazq", "Radef"},
         "sum_{n in Z^a, n.1 = 0} q^{Q_a(n)} sum_j z^{a n_j + j} = E(q) E(q^a)^{a-2} [z^a; q^a] / [z; q]",
         Strategy::Equal, false, {"a"}, cartesian({{"a", range(2, 6)}}), 60},
        [](Check& k, const Params& p, int N, auto) {
            const int a = P(p, "a", 2, 12);
            k.equal("theta_C vs product", theta_C(a, N), rhs_C(a, N));
        });

    add({"cazq2", {"Cazq2"},
         "sum_n q^{2n^2+n} (z^{-2n} + z^{2n+1}) = prod_n (1 + z q^{n-1})(1 + z^-1 q^n)(1 - q^n)", Strategy::Equal,
         false, {}, {Params{}}, 60},
        [](Check& k, const Params&, int N, auto) {
            BracketSpec s;
            s.poch(1, 0, 1, 1, -1).poch(-1, 1, 1, 1, -1).euler(1);
            const auto sum = cazq2_sum(N);
            k.equal("theta_C(2) vs termwise sum", theta_C(2, N), sum);
            k.equal("termwise sum vs product", sum, X(s, N));
        });

    add({"qadef", {"Qadef"},
         "Q_a(n) = (a/2) n.n + b_a.n on n.1 = 0; enumeration complete against a box scan",
         Strategy::Equal, false, {"a", "bound"},
         cartesian({{"a", range(2, 6)}, {"bound", {0, 1, 2, 3, 10, 25, 40}}}), 1},
        [](Check& k, const Params& p, int, auto) {
            const int a = P(p, "a", 2, 8);
            const long B = P(p, "bound", 0, 60);
            const auto fast = enumerate_zero_sum(a, B);
            const auto slow = naive_zero_sum(a, B);
            k.truth("point count", fast.size() == slow.size(), num(static_cast<long>(fast.size())),
                    num(static_cast<long>(slow.size())));
            for (std::size_t i = 0; i < std::min(fast.size(), slow.size()); ++i)
                k.truth("point " + std::to_string(i), fast[i] == slow[i], vec_string(fast[i].n), vec_string(slow[i].n),
                        fast[i].qexp);
        });

    add({"casum", {"Fjdef", "Casum"}, "C_a(z; q) = sum_j F_j(z; q), F_j = sum_n z^{a n_j + j} q^{Q_a(n)}",
         Strategy::Equal, false, {"a"}, cartesian({{"a", range(2, 6)}}), 40},
        [](Check& k, const Params& p, int N, auto) {
            const int a = P(p, "a", 2, 12);
            ZqSeries sum(N);
            for (int j = 0; j < a; ++j) sum += theta_F(j, a, N);
            k.equal("sum of F_j vs C_a", sum, theta_C(a, N));
        });

    auto qdiff = [](bool rotation) {
        return [rotation](Check& k, const Params& p, int, auto) {
            const int a = P(p, "a", 2, 8);
            const long B = P(p, "bound", 0, 60, 30);
            for (const auto& pt : enumerate_zero_sum(a, B)) {
                for (int j = rotation ? 0 : 1; j < (rotation ? 1 : a); ++j) {
                    const auto n2 = cyclic_shift_image(pt.n, j);
                    long s = 0;
                    for (int x : n2) s += x;
                    const long diff = quadratic_form_Q(n2) - pt.qexp;
                    const long want = static_cast<long>(a) * pt.n[j] + j;  // n.1 = 0
                    k.truth("Q(n') - Q(n) at " + vec_string(pt.n) + " j=" + std::to_string(j), diff == want && s == 0,
                            num(diff), num(want), pt.qexp);
                }
            }
        };
    };
    add({"qdiff", {"Qdiff"},
         "n' = (n_1, ..., n_{a-1}, n_0) + e_{j-1} - e_{a-1}: Q_a(n') - Q_a(n) = a n_j + j - n.1", Strategy::Equal,
         false, {"a", "bound"}, cartesian({{"a", range(2, 6)}, {"bound", {30}}}), 1},
        qdiff(false));
    add({"qdiff0", {"Qdiff0"}, "n' = (n_1, ..., n_{a-1}, n_0): Q_a(n') - Q_a(n) = a n_0 - n.1", Strategy::Equal, false,
         {"a", "bound"}, cartesian({{"a", range(2, 6)}, {"bound", {30}}}), 1},
        qdiff(true));

    add({"fjfe", {"Fjfe", "Fjm1"}, "F_j(zq; q) = z^{-(a-1)} F_{j-1}(z; q), equivalently F_{j-1}(z) = z^{a-1} F_j(zq)",
         Strategy::Equal, false, {"a"}, cartesian({{"a", range(2, 5)}}), 40},
        [](Check& k, const Params& p, int N, auto) {
            const int a = P(p, "a", 2, 12);
            for (int j = 1; j < a; ++j) {
                const auto Fj = theta_F(j, a, N);
                const auto Fjm = theta_F(j - 1, a, N);
                const auto shifted = Fj.shift_z(1);
                k.equal("F_j(zq) j=" + std::to_string(j), shifted, Fjm.mul_monomial(Integer(1), -(a - 1), 0));
                k.equal("F_{j-1} j=" + std::to_string(j), Fjm, shifted.mul_monomial(Integer(1), a - 1, 0));
            }
        });

    add({"f0fe", {"F0fe"}, "F_0(zq; q) = z^{-(a-1)} F_{a-1}(z; q)", Strategy::Equal, false, {"a"},
         cartesian({{"a", range(2, 5)}}), 40},
        [](Check& k, const Params& p, int N, auto) {
            const int a = P(p, "a", 2, 12);
            k.equal("F_0(zq)", theta_F(0, a, N).shift_z(1),
                    theta_F(a - 1, a, N).mul_monomial(Integer(1), -(a - 1), 0));
        });

    add({"cafe", {"Cafe"}, "C_a(zq; q) = z^{-(a-1)} C_a(z; q)", Strategy::Equal, false, {"a"},
         cartesian({{"a", range(2, 5)}}), 40},
        [](Check& k, const Params& p, int N, auto) {
            const int a = P(p, "a", 2, 12);
            const auto C = theta_C(a, N);
            k.equal("C_a(zq)", C.shift_z(1), C.mul_monomial(Integer(1), -(a - 1), 0));
        });

    add({"rafe", {"Rafe"}, "R_a(zq; q) = z^{-(a-1)} R_a(z; q)", Strategy::Equal, false, {"a"},
         cartesian({{"a", range(2, 6)}}), 40},
        [](Check& k, const Params& p, int N, auto) {
            const int a = P(p, "a", 2, 12);
            const auto R = rhs_C(a, N);
            k.equal("R_a(zq)", R.shift_z(1), R.mul_monomial(Integer(1), -(a - 1), 0));
        });

    add({"cazqzero", {"Cazqzero"}, "C_a(zeta_a^k; q) = R_a(zeta_a^k; q) = 0 for 1 <= k <= a-1", Strategy::ZeroSeries,
         false, {"a"}, cartesian({{"a", range(2, 6)}}), 40},
        [](Check& k, const Params& p, int N, auto) {
            const int a = P(p, "a", 2, 12);
            const auto C = theta_C(a, N);
            const auto R = rhs_C(a, N);
            for (int j = 1; j < a; ++j) {
                k.zero("C_a at zeta^" + std::to_string(j), specialize_root_of_unity(C, a, j));
                k.zero("R_a at zeta^" + std::to_string(j), specialize_root_of_unity(R, a, j));
            }
        });

    add({"ca1", {"Ca1"}, "C_a(1; q) = a E(q^a)^a / E(q) = R_a(1; q)", Strategy::Equal, false, {"a"},
         cartesian({{"a", range(2, 6)}}), 60},
        [](Check& k, const Params& p, int N, auto) {
            const int a = P(p, "a", 2, 12);
            const auto want = eta({{a, a}, {1, -1}}, N).scaled(Integer(a));
            k.equal("C_a(1)", theta_C(a, N).specialize_one(), want);
            k.equal("R_a(1)", rhs_C(a, N).specialize_one(), want);
        });

    add({"thm2", {"Bjazq"},
         "B_{j,a}(z; q) = sum_{n.1 = 0} z^{n_j} w^{b.n} q^{n.n/2} = E(q)^{a-2} E(q^a) [z; q] / [z; q^a], "
         "independent of j",
         Strategy::EqualCrossMultiplied, false, {"a", "j"},
         cartesian({{"a", range(2, 5)}, {"j", range(0, 4)}}, [](const Params& p) { return p.at("j") < p.at("a"); }),
         40},
        [](Check& k, const Params& p, int N, auto) {
            const int a = P(p, "a", 2, 12);
            const int j = P(p, "j", 0, a - 1);
            const auto B = theta_B(j, a, N);
            BracketSpec den, num;
            den.bracket(1, 0, a);
            num.euler(1, a - 2).euler(a).bracket(1, 0, 1);
            k.equal("B * [z; q^a] vs numerator", B * lift(X(den, N)), lift(X(num, N)));
            k.equal("B vs B_0", B, theta_B(0, a, N));
            // the quotient itself has rational-integer coefficients
            const auto prod = lift(X(spec_B_product(a), N));
            k.equal("B vs expanded quotient", B, prod);
        });

    add({"phitrans", {"Phitrans"}, "Phi_a(z q^a; q) = q^{-binom(a,2)} (-z)^{-(a-1)} Phi_a(z; q), both sides of B_{j,a}",
         Strategy::Equal, false, {"a"}, cartesian({{"a", range(2, 5)}}), 40},
        [](Check& k, const Params& p, int N, auto) {
            const int a = P(p, "a", 2, 12);
            const int c2 = a * (a - 1) / 2;
            const auto B = theta_B(0, a, N);
            k.equal("lattice side", B.shift_z(a, c2), B.mul_monomial(CycInt(sign_pow(a - 1)), -(a - 1), 0));
            const auto R = X(spec_B_product(a), N);
            k.equal("product side", R.shift_z(a, c2), R.mul_monomial(Integer(sign_pow(a - 1)), -(a - 1), 0));
        });

    add({"bzero0", {"Bzero0"}, "B_{j,a}(q^k; q) = w^k B_{j+1,a}(q^k; q)", Strategy::Equal, false, {"a", "k", "j"},
         cartesian({{"a", range(2, 5)}, {"k", range(1, 4)}, {"j", range(0, 3)}},
                   [](const Params& p) { return p.at("k") < p.at("a") && p.at("j") + 1 < p.at("a"); }),
         30},
        [](Check& k, const Params& p, int N, auto) {
            const int a = P(p, "a", 2, 12);
            const int kk = P(p, "k", 1, a - 1);
            const int j = P(p, "j", 0, a - 2);
            const auto lhs = theta_B_at_monomial(j, a, kk, N);
            const auto rhs = theta_B_at_monomial(j + 1, a, kk, N).scaled(zeta_pow(a, kk));
            k.equal("B_j(q^k) vs w^k B_{j+1}(q^k)", lhs, rhs);
        });

    add({"vanishB", {"Bzero1"}, "B_{j,a}(q^k; q) = 0 for 1 <= k <= a-1", Strategy::ZeroSeries, false, {"a", "k", "j"},
         cartesian({{"a", range(2, 5)}, {"k", range(1, 4)}}, [](const Params& p) { return p.at("k") < p.at("a"); }),
         30},
        [](Check& k, const Params& p, int N, auto) {
            const int a = P(p, "a", 2, 12);
            const int kk = P(p, "k", 1, a - 1);
            const int j = P(p, "j", 0, a - 1, 0);
            k.zero("lattice side at z = q^k", theta_B_at_monomial(j, a, kk, N));
            k.zero("product side at z = q^k", b_product_at(a, kk, N));
        });

    add({"kid", {"kid"}, "sum_{n.1 = 0} q^{(t/2) n.n + b_t.n} = E(q^t)^t / E(q)", Strategy::Equal, false, {"t"},
         cartesian({{"t", range(1, 7)}}), 80},
        [](Check& k, const Params& p, int N, auto) {
            const int t = P(p, "t", 1, 12);
            k.equal("lattice vs eta quotient", klyachko_lhs(t, N), eta({{t, t}, {1, -1}}, N));
        });

    add({"ckid", {"ckid"}, "sum_{n.1 = 0} w_t^{b_t.n} q^{n.n/2} = E(q)^t / E(q^t)", Strategy::Equal, false, {"t"},
         cartesian({{"t", range(1, 7)}}), 80},
        [](Check& k, const Params& p, int N, auto) {
            const int t = P(p, "t", 1, 12);
            const auto lhs = klyachko_cyclotomic_lhs(t, N);
            for (int e = 0; e < N; ++e)
                k.truth("rational integer coefficient", is_rational_integer(lhs[e]), to_string(lhs[e]), "", e);
            if (!k.failed()) k.equal("lattice vs eta quotient", to_integer_series(lhs), eta({{1, t}, {t, -1}}, N));
        });

    // ---- eta products and the Saito family -----------------------------------

    add({"edef", {"Edef"}, "E(q) = prod_{n >= 1} (1 - q^n) = sum_k (-1)^k q^{k(3k-1)/2}", Strategy::Equal, false, {},
         {Params{}}, 200},
        [](Check& k, const Params&, int N, auto) { k.equal("product vs pentagonal sum", euler_E(N), pentagonal(N)); });

    add({"pcore1", {"pcore1"}, "sum_n a_t(n) q^n = E(q^t)^t / E(q)", Strategy::Equal, false, {"t"},
         cartesian({{"t", range(1, 7)}}), 26},
        [](Check& k, const Params& p, int N, auto) {
            const int t = P(p, "t", 1, 12);
            const auto gf = eta({{t, t}, {1, -1}}, N);
            QSeries counts(N);
            for (int n = 0; n < N; ++n) counts.at(n) = count_t_cores(t, n);
            k.equal("t-core counts vs eta quotient", counts, gf);
        });

    add({"sp", {"Sp"}, "S_p = eta(p tau)^p / eta(tau) = q^{(p^2-1)/24} E(q^p)^p / E(q)", Strategy::Equal, false, {"p"},
         cartesian({{"p", {2, 3, 5, 7, 11, 13}}}), 60},
        [](Check& k, const Params& p, int N, auto) {
            const int pr = P(p, "p", 2, 100);
            if (!is_prime(pr)) throw Error(Errc::invalid_params, "sp needs a prime p");
            k.truth("prefactor", saito_prefactor24(pr) == static_cast<long>(pr) * pr - 1,
                    format_prefactor24(saito_prefactor24(pr)), format_prefactor24(static_cast<long>(pr) * pr - 1));
            k.equal("S~_p vs p-core series", saito_tilde(pr, N), eta({{pr, pr}, {1, -1}}, N));
        });

    add({"tcore", {"tcore"}, "E(q^t)^t / E(q) >= 0, and > 0 coefficientwise for t >= 4", Strategy::Nonneg, false,
         {"t"}, cartesian({{"t", range(1, 8)}}), 100},
        [](Check& k, const Params& p, int N, auto) {
            const int t = P(p, "t", 1, 40);
            const auto s = eta({{t, t}, {1, -1}}, N);
            if (t >= 4)
                k.positive("a_t(n) > 0", s);
            else
                k.nonneg("a_t(n) >= 0", s);
        });

    add({"saito", {"conj1", "setaproddef", "SNdef"},
         "S~_N = E(q^N)^{phi(N)} / prod_{d|N} E(q^d)^{mu(d)} >= 0", Strategy::Nonneg, false, {"N"},
         cartesian({{"N", range(1, 60)}}), 200},
        [](Check& k, const Params& p, int N, auto) {
            const int n = P(p, "N", 1, 100000);
            const auto s = saito_tilde(n, N);
            k.truth("constant term", N == 0 || s[0] == 1, N ? s[0].get_str() : "", "1");
            k.nonneg("coefficients", s);
            k.add_note("prefactor " + format_prefactor24(saito_prefactor24(n)));
        });

    add({"etadef", {"etadef", "etaproddef"},
         "eta(k tau) = q^{k/24} E(q^k); S_N has prefactor q^{(N phi(N) - sum_{d|N} mu(d) d)/24}", Strategy::Equal,
         false, {"N"}, cartesian({{"N", range(1, 60)}}), 40},
        [](Check& k, const Params& p, int N, auto) {
            const int n = P(p, "N", 1, 100000);
            const auto q = saito_eta(n);
            long direct = 0;
            for (auto [lvl, e] : q.factors()) direct += static_cast<long>(lvl) * e;
            k.truth("prefactor", q.prefactor24() == saito_prefactor24(n) && direct == q.prefactor24(),
                    format_prefactor24(q.prefactor24()), format_prefactor24(saito_prefactor24(n)));
            // the eta quotient expands to the product of its E(q^k) factors
            auto prod = QSeries::constant(Integer(1), N);
            for (auto [lvl, e] : q.factors()) {
                auto f = QSeries::constant(Integer(1), N);
                for (int m = lvl; m < N; m += lvl) f.apply_factor(m, 1, e);
                prod *= f;
            }
            k.equal("expansion vs factor product", q.expand(N), prod);
        });

    add({"eprop", {"Eprop"}, "prod_{d|M} E(q^d)^{mu(d)} = prod_{(n, M) = 1} (1 - q^n)", Strategy::Equal, false, {"M"},
         cartesian({{"M", range(1, 30)}}), 60},
        [](Check& k, const Params& p, int N, auto) {
            const int M = P(p, "M", 1, 100000);
            k.equal("Mobius product vs coprime product", mobius_E(M, N), coprime_E(M, N));
        });

    add({"eep", {"Eep", "epsimp"},
         "prod_{d|M} E(q^d)^{mu(d)} = prod_n (1 - q^n)^{eps(n)}, eps(n) = sum_{d | (M, n)} mu(d) = [(M, n) = 1]",
         Strategy::Equal, false, {"M"}, cartesian({{"M", range(1, 30)}}), 60},
        [](Check& k, const Params& p, int N, auto) {
            const int M = P(p, "M", 1, 100000);
            auto prod = QSeries::constant(Integer(1), N);
            for (int n = 1; n < N; ++n) {
                int eps = 0;
                for (int d : divisors(std::gcd(n, M))) eps += mobius(d);
                const int want = std::gcd(n, M) == 1 ? 1 : 0;
                k.truth("eps(" + std::to_string(n) + ")", eps == want, num(eps), num(want), n);
                prod.apply_factor(n, 1, eps);
            }
            k.equal("exponent product vs Mobius product", prod, mobius_E(M, N));
        });

    add({"case1", {"Case1"},
         "N = p^alpha: S~_N >= 0 and S~_{p^alpha} = S~_{p^{alpha-1}} (E(q^{p^alpha})^p / E(q^{p^{alpha-1}}))^{p^{alpha-2}(p-1)}",
         Strategy::Nonneg, false, {"p", "alpha"},
         cartesian({{"p", {2, 3, 5, 7}}, {"alpha", range(1, 6)}},
                   [](const Params& p) { return ipow(p.at("p"), static_cast<int>(p.at("alpha"))) <= 64; }),
         120},
        [](Check& k, const Params& p, int N, auto) {
            const int pr = P(p, "p", 2, 1000);
            const int al = P(p, "alpha", 1, 20);
            if (!is_prime(pr)) throw Error(Errc::invalid_params, "case1 needs a prime p");
            const int n = static_cast<int>(ipow(pr, al));
            const auto s = saito_tilde(n, N);
            k.nonneg("S~_{p^alpha}", s);
            if (al >= 2) {
                const int lower = n / pr;
                const auto step = eta({{n, pr}, {lower, -1}}, N);
                k.nonneg("step factor", step);
                k.equal("induction step", s, saito_tilde(lower, N) * pow(step, static_cast<int>(ipow(pr, al - 2)) * (pr - 1)));
            }
        });

    add({"eprod", {"Eprod"}, "N = pM, p prime, p !| M: prod_{d|N} E(q^d)^{mu(d)} = prod_{d|M} (E(q^d) / E(q^{pd}))^{mu(d)}",
         Strategy::Equal, false, {"p", "M"},
         cartesian({{"p", {2, 3, 5, 7}}, {"M", range(1, 15)}},
                   [](const Params& p) { return p.at("M") % p.at("p") != 0; }),
         60},
        [](Check& k, const Params& p, int N, auto) {
            const int pr = P(p, "p", 2, 1000), M = P(p, "M", 1, 100000);
            if (!is_prime(pr) || M % pr == 0) throw Error(Errc::invalid_params, "eprod needs a prime p not dividing M");
            std::map<int, int> f;
            for (int d : divisors(M))
                if (int mu = mobius(d)) {
                    f[d] += mu;
                    f[pr * d] -= mu;
                }
            k.equal("divisor product over N vs over M", mobius_E(pr * M, N), EtaQuotient(f).expand(N));
        });

    add({"eprod2", {"Eprod2"},
         "M odd: prod_{d|M} E(q^d)^{mu(d)} = prod_{(r, M) = 1, 1 <= r <= (M-1)/2} [q^r; q^M]", Strategy::Equal, false,
         {"M"}, cartesian({{"M", range(3, 21, 2)}}), 60},
        [](Check& k, const Params& p, int N, auto) {
            const int M = P(p, "M", 3, 100000);
            if (M % 2 == 0) throw Error(Errc::invalid_params, "eprod2 needs odd M");
            BracketSpec s;
            for (int r = 1; r <= (M - 1) / 2; ++r)
                if (std::gcd(r, M) == 1) s.bracket(0, r, M);
            k.equal("Mobius product vs brackets", mobius_E(M, N), U(s, N));
        });

    add({"dazq", {"Dazq"}, "D_a(z; q) = (E(q^a)^a / E(q)) C_a(z; q) = E(q^a)^{2a-2} [z^a; q^a] / [z; q]",
         Strategy::Equal, false, {"a"}, cartesian({{"a", range(2, 5)}}), 40},
        [](Check& k, const Params& p, int N, auto) {
            const int a = P(p, "a", 2, 12);
            const auto pre = ZqSeries::from_q_series(eta({{a, a}, {1, -1}}, N));
            k.equal("prefactor times lattice sum vs product", pre * theta_C(a, N), X(spec_D(a), N));
        });

    add({"dprod", {"Dprod"}, "prod_{(r, M) = 1, r <= (M-1)/2} D_p(q^r; q^M) = S~_{pM}", Strategy::Equal, false,
         {"p", "M"}, {Params{{"p", 5}, {"M", 3}}, Params{{"p", 2}, {"M", 3}}, Params{{"p", 7}, {"M", 5}},
                      Params{{"p", 3}, {"M", 5}}, Params{{"p", 2}, {"M", 5}}},
         60},
        [](Check& k, const Params& p, int N, auto) {
            const int pr = P(p, "p", 2, 1000), M = P(p, "M", 3, 100000);
            if (!is_prime(pr) || M % 2 == 0 || M % pr == 0)
                throw Error(Errc::invalid_params, "dprod needs a prime p and odd M with p !| M");
            auto via_product = QSeries::constant(Integer(1), N);
            auto via_lattice = via_product;
            for (int r = 1; r <= (M - 1) / 2; ++r) {
                if (std::gcd(r, M) != 1) continue;
                const auto d1 = d_series(pr, r, M, N);
                const auto d2 = d_series_lattice(pr, r, M, N);
                k.equal("D_p(q^r; q^M) both routes, r=" + std::to_string(r), d1, d2);
                k.nonneg("D_p(q^r; q^M) r=" + std::to_string(r), d1);
                via_product *= d1;
                via_lattice *= d2;
            }
            const auto S = saito_tilde(pr * M, N);
            k.equal("product route vs S~", via_product, S);
            k.equal("lattice route vs S~", via_lattice, S);
        });

    add({"eprop2", {"Eprop2"}, "N = p^alpha M, N' = pM: prod_{d|N} E(q^d)^{mu(d)} = prod_{d|N'} E(q^d)^{mu(d)}",
         Strategy::Equal, false, {"p", "alpha", "M"},
         {Params{{"p", 2}, {"alpha", 2}, {"M", 3}}, Params{{"p", 2}, {"alpha", 3}, {"M", 3}},
          Params{{"p", 3}, {"alpha", 2}, {"M", 1}}, Params{{"p", 3}, {"alpha", 2}, {"M", 5}},
          Params{{"p", 2}, {"alpha", 2}, {"M", 5}}, Params{{"p", 5}, {"alpha", 2}, {"M", 3}}},
         60},
        [](Check& k, const Params& p, int N, auto) {
            const int pr = P(p, "p", 2, 1000), al = P(p, "alpha", 2, 20), M = P(p, "M", 1, 100000);
            if (!is_prime(pr) || M % pr == 0) throw Error(Errc::invalid_params, "eprop2 needs a prime p not dividing M");
            const int big = static_cast<int>(ipow(pr, al)) * M;
            k.equal("Mobius products", mobius_E(big, N), mobius_E(pr * M, N));
            k.equal("coprime products", coprime_E(big, N), coprime_E(pr * M, N));
        });

    add({"sprop", {"Sprop"},
         "S~_N = (E(q^{p^{alpha-1} N'})^{p^{alpha-1}} / E(q^{N'}))^{(p-1) phi(M)} S~_{N'}, N = p^alpha M, N' = pM",
         Strategy::Equal, false, {"p", "alpha", "M"},
         {Params{{"p", 2}, {"alpha", 2}, {"M", 3}}, Params{{"p", 3}, {"alpha", 2}, {"M", 2}},
          Params{{"p", 3}, {"alpha", 2}, {"M", 1}}},
         40},
        [](Check& k, const Params& p, int N, auto) {
            const int pr = P(p, "p", 2, 1000), al = P(p, "alpha", 2, 20), M = P(p, "M", 1, 100000);
            if (!is_prime(pr) || M % pr == 0) throw Error(Errc::invalid_params, "sprop needs a prime p not dividing M");
            const int Np = pr * M;
            const int pa1 = static_cast<int>(ipow(pr, al - 1));
            const auto factor = pow(eta({{pa1 * Np, pa1}, {Np, -1}}, N), (pr - 1) * euler_phi(M));
            k.nonneg("first factor", factor);
            k.equal("S~_N factorization", saito_tilde(pa1 * Np, N), factor * saito_tilde(Np, N));
        });

    // ---- q-binomial family -----------------------------------------------------

    auto signs = std::vector<long>{1, -1};
    add({"atq", {"atq"}, "(at; q) / ((a; q)(t; q)) = sum_n t^n / ((a q^n; q) (q)_n), a = +-q^alpha, t = +-q^beta",
         Strategy::Equal, false, {"alpha", "beta", "sa", "st"},
         cartesian({{"alpha", range(1, 3)}, {"beta", range(1, 3)}, {"sa", signs}, {"st", signs}}), 40},
        [](Check& k, const Params& p, int N, auto) {
            const int al = P(p, "alpha", 1, 1000), be = P(p, "beta", 1, 1000);
            const int sa = P(p, "sa", -1, 1, 1), st = P(p, "st", -1, 1, 1);
            const auto lhs = named_q("atq", p, N);
            k.equal("product vs sum", lhs, atq_sum(al, sa, be, st, N));
            if (sa > 0 && st > 0) k.nonneg("positive specialization", lhs);
        });

    add({"coratq1", {"coratq1"}, "prod_n (1 - q^{Mn+a+b}) / ((1 - q^{Mn+a})(1 - q^{Mn+b})) >= 0", Strategy::Nonneg,
         false, {"a", "b", "M"}, cartesian({{"a", range(1, 3)}, {"b", range(1, 3)}, {"M", range(1, 3)}}), 40},
        [](Check& k, const Params& p, int N, auto) {
            const int a = P(p, "a", 1, 1000), b = P(p, "b", 1, 1000), M = P(p, "M", 1, 1000);
            const auto lhs = named_q("coratq1", p, N);
            // the q-binomial sum in base q^M with a -> q^a, t -> q^b
            QSeries sum(N);
            for (int n = 0; static_cast<long>(b) * n < N; ++n) {
                BracketSpec s;
                s.monomial(0, b * n).poch(0, a + M * n, M, -1).finite_poch(0, M, M, n, -1);
                sum += U(s, N);
            }
            k.equal("product vs sum", lhs, sum);
            k.nonneg("coefficients", lhs);
        });

    add({"gpdef", {"gpdef"},
         "[n+m, m]_q = (q)_{m+n} / ((q)_n (q)_m) = (1 - q^{n+1}) ... (1 - q^{n+m}) / (q)_m counts partitions in an m x n box",
         Strategy::Equal, false, {"n", "m"}, cartesian({{"n", range(0, 6)}, {"m", range(0, 6)}}), 40},
        [](Check& k, const Params& p, int, auto) {
            const int n = P(p, "n", 0, 40), m = P(p, "m", 0, 40);
            const auto g = gaussian_poly(n, m);
            BracketSpec s;
            for (int i = 1; i <= m; ++i) s.single(0, n + i);
            s.finite_poch(0, 1, 1, m, -1);
            k.equal("(q)_{m+n}/((q)_n (q)_m) vs (1-q^{n+1})...(1-q^{n+m})/(q)_m", g, U(s, n * m + 1));
            QSeries box(n * m + 1);
            for (int e = 0; e <= n * m; ++e) box.at(e) = count_in_box(n, m, e);
            k.equal("box partition counts", g, box);
            k.positive("positive coefficients", g);
        });

    add({"atqfin", {"atqfin"},
         "(z1 z2; q)_L / ((z1; q)_L (z2; q)_L) = sum_j [L, j] z1^j / ((z1 q^{L-j}; q)_j (z2 q^j; q)_{L-j})",
         Strategy::Equal, false, {"L", "alpha", "beta", "s1", "s2"},
         cartesian({{"L", range(0, 4)}, {"alpha", range(1, 3)}, {"beta", range(1, 3)}, {"s1", signs}, {"s2", signs}}),
         40},
        [](Check& k, const Params& p, int N, auto) {
            const int L = P(p, "L", 0, 1000), al = P(p, "alpha", 1, 1000), be = P(p, "beta", 1, 1000);
            const int s1 = P(p, "s1", -1, 1, 1), s2 = P(p, "s2", -1, 1, 1);
            const auto lhs = named_q("atqfin", p, N);
            k.equal("product vs sum", lhs, atqfin_sum(L, al, s1, be, s2, N));
            if (s1 > 0 && s2 > 0) k.nonneg("positive specialization", lhs);
        });

    add({"zq", {"zq"}, "E(q) / [z; q] = sum_n z^n / ((q)_n (z^-1 q^{n+1}; q)) >= 0", Strategy::Equal, false, {}, {Params{}},
         40, true},
        [](Check& k, const Params& p, int N, std::optional<int> W) {
            const auto lhs = named_zq("zq", p, N, W);
            k.equal("product vs sum", lhs, zq_sum(N, *W));
            k.nonneg("coefficients", lhs);
        });

    // ---- crank -------------------------------------------------------------------

    add({"crankgen", {"crankgen"},
         "(1 - z) E(q) / [z; q] = prod_n (1 - q^n) / ((1 - z q^n)(1 - z^-1 q^n)) = 1 + (z + z^-1 - 1) q + sum_{n>=2} M(m, n) z^m q^n",
         Strategy::Equal, false, {}, {Params{}}, 21},
        [](Check& k, const Params&, int N, auto) {
            const auto g = crank_gen(N);
            k.equal("bracket form vs product form", g, crank_gen_product(N));
            ZqSeries oracle(N);
            auto& rows = oracle.rows_for_construction();
            if (N > 0) rows[0].at(0) = 1;
            if (N > 1) {
                rows[1].at(-1) = 1;
                rows[1].at(0) = -1;
                rows[1].at(1) = 1;
            }
            for (int n = 2; n < N; ++n)
                for (const auto& [m, cnt] : crank_counts(n)) rows[n].at(m) = cnt;
            k.equal("series vs crank counts", g, oracle);
        });

    add({"crankgen-nonneg", {}, "(1 - z) E(q) / [z; q] has exactly one negative coefficient, at z^0 q^1",
         Strategy::NonnegExpectException, false, {}, {Params{}}, 30},
        [](Check& k, const Params&, int N, auto) {
            const auto neg = negative_coordinates(crank_gen(N));
            std::vector<std::pair<int, int>> want;
            if (N > 1) want.emplace_back(0, 1);
            std::string got;
            for (auto [d, e] : neg) got += "(z^" + std::to_string(d) + ",q^" + std::to_string(e) + ")";
            k.truth("negative coordinates", neg == want, got, N > 1 ? "(z^0,q^1)" : "");
            if (neg == want && N > 1) k.add_note("exception set {(z^0,q^1)}");
        });

    add({"aci", {"aci"}, "(1 - z^m) E(q) / [z; q] = (1 + z + ... + z^{m-1}) prod_n (1 - q^n) / ((1 - z q^n)(1 - z^-1 q^n)) >= 0",
         Strategy::Equal, false, {"m"}, cartesian({{"m", range(2, 4)}}), 40},
        [](Check& k, const Params& p, int N, auto) {
            const int m = P(p, "m", 2, 1000);
            const auto lhs = named_zq("aci", p, N);
            ZqSeries geo(N);
            for (int i = 0; i < m; ++i) geo += mono(1, i, 0, N);
            k.equal("bracket form vs geometric times crank product", lhs, geo * crank_gen_product(N));
            k.nonneg("coefficients", lhs);
        });

    // ---- quintuple and its generalization -----------------------------------------

    add({"quin", {"quin"}, "[z^2; q] E(q) / [z, z^3; q] = E(q^3) / [z^3, q^2 z^3; q^3] + z E(q^3) / [z^3, q z^3; q^3]",
         Strategy::Equal, false, {}, {Params{}}, 50, true},
        [](Check& k, const Params& p, int N, std::optional<int> W) {
            BracketSpec t0, t1;
            t0.euler(3).bracket(3, 0, 3, -1).bracket(3, 2, 3, -1);
            t1.monomial(1, 0).euler(3).bracket(3, 0, 3, -1).bracket(3, 1, 3, -1);
            const auto lhs = named_zq("quin", p, N, W);
            k.equal("both sides", lhs, X(t0, N, W) + X(t1, N, W));
            k.equal("a = 2 case of the generalization", lhs,
                    ZqSeries::from_q_series(euler_E(N)) * gqpi_side(2, Side::Right, N, *W));
        });

    add({"gqpi", {"gqpi"},
         "[z^a; q] / [z, z^{a+1}; q] = E(q^{a+1})^2 / E(q)^2 sum_{j<a} z^j [q^{a-j}; q^{a+1}] / [z^{a+1}, z^{a+1} q^{a-j}; q^{a+1}]",
         Strategy::Equal, false, {"a"}, cartesian({{"a", range(1, 5)}}), 30, true},
        [](Check& k, const Params& p, int N, std::optional<int> W) {
            const int a = P(p, "a", 1, 12);
            k.equal("windowed sides", gqpi_side(a, Side::Left, N, *W), gqpi_side(a, Side::Right, N, *W));
        });

    add({"gqpib", {"gqpib"},
         "E(q)^2 / E(q^{a+1})^2 [z^a; q] / [z; q] = [z^{a+1} q, ..., z^{a+1} q^a; q^{a+1}] sum_{j<a} z^j [q^{a-j}; q^{a+1}] / [z^{a+1} q^{a-j}; q^{a+1}]",
         Strategy::EqualCrossMultiplied, false, {"a"}, cartesian({{"a", range(1, 5)}}), 50},
        [](Check& k, const Params& p, int N, auto) {
            const int a = P(p, "a", 1, 12);
            k.equal("cleared sides", gqpib_side(a, Side::Left, N), gqpib_side(a, Side::Right, N));
        });

    add({"jactrans", {"jactrans"}, "[z q^k; q] = (-1)^k z^{-k} q^{-binom(k,2)} [z; q]", Strategy::Equal, false, {"k"},
         cartesian({{"k", range(0, 5)}}), 30},
        [](Check& k, const Params& p, int N, auto) {
            const int kk = P(p, "k", 0, 100);
            BracketSpec base;
            base.bracket(1, 0, 1);
            const auto br = X(base, N);
            const auto want = br.mul_monomial(Integer(sign_pow(kk)), -kk, 0);
            k.equal("normalized product", named_zq("jactrans", p, N), want);
            if (kk >= 1) k.equal("shifted series", br.shift_z(kk, kk * (kk - 1) / 2), want);
        });

    add({"phitrans2", {"Phitrans2"},
         "Phi_a(zq; q) = (-1)^{a-1} q^{-binom(a,2)} z^{1-a^2} Phi_a(z; q) for both cleared sides", Strategy::Equal,
         false, {"a"}, cartesian({{"a", range(1, 5)}}), 40},
        [](Check& k, const Params& p, int N, auto) {
            const int a = P(p, "a", 1, 12);
            const int c2 = a * (a - 1) / 2;
            for (Side s : {Side::Left, Side::Right}) {
                const auto phi = gqpib_side(a, s, N);
                k.equal(s == Side::Left ? "left side" : "right side", phi.shift_z(1, c2),
                        phi.mul_monomial(Integer(sign_pow(a - 1)), 1 - a * a, 0));
            }
        });

    add({"ekinid1", {"EkinId1"}, "E(q) / [z; q] = (1 / [z^2; q^2]) sum_n z^n q^{n(n-1)/2}",
         Strategy::EqualCrossMultiplied, false, {}, {Params{}}, 40, true},
        [](Check& k, const Params& p, int N, std::optional<int> W) {
            BracketSpec s;
            s.euler(1).bracket(2, 0, 2).bracket(1, 0, 1, -1);
            k.equal("[z^2; q^2] E(q) / [z; q] vs theta sum", X(s, N), ekin_theta1(N));
            k.nonneg("E(q) / [z; q]", named_zq("EkinId1", p, N, W));
        });

    add({"ekinid2", {"EkinId2"},
         "E(q) E(q^2) / [z; q] = (1 / [z^4; q^4]) sum_{n1,n2} z^{n1 + 2 n2} q^{n1(n1-1)/2 + n2(n2-1)} >= 0",
         Strategy::EqualCrossMultiplied, false, {}, {Params{}}, 40, true},
        [](Check& k, const Params& p, int N, std::optional<int> W) {
            BracketSpec s;
            s.euler(1).euler(2).bracket(4, 0, 4).bracket(1, 0, 1, -1);
            const auto theta = ekin_theta2(N);
            k.equal("[z^4; q^4] E(q) E(q^2) / [z; q] vs theta sum", X(s, N), theta);
            k.nonneg("theta sum", theta);
            k.nonneg("E(q) E(q^2) / [z; q]", named_zq("EkinId2", p, N, W));
        });

    add({"ekinit", {"EkinIt"}, "E(q) E(q^2) E(q^4) ... E(q^{2^{depth-1}}) / [z; q] >= 0 with 2^depth >= qprec",
         Strategy::Nonneg, false, {"depth"}, cartesian({{"depth", {5}}}), 32, true},
        [](Check& k, const Params& p, int N, std::optional<int> W) {
            k.nonneg("certified coefficients", named_zq("EkinIt", p, N, W));
        });

    add({"corgqpi1", {"corgqpi1"},
         "(1 - z^{k(a+1)}) E(q) E(q^{a+1})^{floor((a+1)/2)} [z^a; q] / [z, z^{a+1}; q] >= 0, a, k >= 2",
         Strategy::Nonneg, false, {"a", "k"}, cartesian({{"a", range(2, 5)}, {"k", range(2, 3)}}), 40},
        [](Check& k, const Params& p, int N, auto) { k.nonneg("coefficients", named_zq("corgqpi1", p, N)); });

    add({"gqpic", {"gqpic"},
         "corgqpi1 = sum_i z^i (E(q^{a+1})^{floor((a+1)/2)} [q^{a-i}; q^{a+1}] / E(q)) "
         "(1 - z^{k(a+1)}) E(q^{a+1})^2 / [z^{a+1}, z^{a+1} q^{a-i}; q^{a+1}]; each factor >= 0",
         Strategy::Equal, false, {"a", "k"}, cartesian({{"a", range(2, 5)}, {"k", range(2, 3)}}), 40},
        [](Check& k, const Params& p, int N, auto) {
            const int a = P(p, "a", 2, 12), kk = P(p, "k", 2, 100);
            const int m = a + 1, h = (a + 1) / 2;
            k.equal("decomposition", named_zq("corgqpi1", p, N), named_zq("gqpic", p, N));
            for (int i = 0; i < a; ++i) {
                const std::string tag = " i=" + std::to_string(i);
                BracketSpec zpart;
                zpart.single(kk * m, 0).euler(m, 2).bracket(m, 0, m, -1).bracket(m, a - i, m, -1);
                k.nonneg("z factor" + tag, X(zpart, N));
                BracketSpec qpart;
                qpart.euler(m, h).bracket(0, a - i, m).euler(1, -1);
                const auto qs = U(qpart, N);
                k.nonneg("q factor" + tag, qs);
                // closed forms of the q factor
                BracketSpec closed;
                if (a % 2 == 0) {
                    for (int j = 1; j <= a / 2; ++j)
                        if (j != a - i && j != i + 1) closed.euler(m).bracket(0, j, m, -1);
                } else if (i != (a - 1) / 2) {
                    closed.euler(m, 2).euler(h, -1);
                    for (int j = 1; j <= (a - 1) / 2; ++j)
                        if (j != a - i && j != i + 1) closed.euler(m).bracket(0, j, m, -1);
                } else {
                    closed.euler(h, h).euler(1, -1).euler(m, (a - 3) / 2).euler(h, -(a - 3) / 2);
                }
                k.equal("closed form" + tag, qs, U(closed, N));
            }
        });

    add({"crank5a", {"crank5a"},
         "(1 - q^8) E(q^5) E(q^20)^2 [q^2; q^5] / [q; q^5]^2 >= 0, the a = 3, k = 2 case at z = q, q -> q^5",
         Strategy::Nonneg, false, {}, {Params{}}, 60},
        [](Check& k, const Params& p, int N, auto) {
            const auto s = named_q("crank5a", p, N);
            BracketSpec g;
            g.single(8, 0).euler(1).euler(4, 2).bracket(3, 0, 1).bracket(1, 0, 1, -1).bracket(4, 0, 1, -1);
            k.equal("specialized corollary", s, U(specialize(g, 1, 1, 5), N));
            k.nonneg("coefficients", s);
        });

    add({"crank5b", {"crank5b"}, "sum_n (M(0,5,5n) - M(1,5,5n)) q^n = E(q^5) [q^2; q^5] / [q; q^5]^2", Strategy::Equal,
         false, {}, {Params{}}, 40},
        [](Check& k, const Params& p, int N, auto) {
            QSeries oracle(N);
            for (int n = 0; n < N; ++n) {
                const auto c = crank_counts_mod(5, 5 * n);
                oracle.at(n) = c[0] - c[1];
            }
            k.equal("series vs crank counts", named_q("crank5b", p, N), oracle);
        });

    add({"crank5c", {"crank5c"}, "M(0,5,5n) > M(1,5,5n) for n >= 0", Strategy::Nonneg, false, {}, {Params{}}, 9},
        [](Check& k, const Params&, int N, auto) {
            for (int n = 0; n < N; ++n) {
                const auto c = crank_counts_mod(5, 5 * n);
                k.truth("M(0,5,5n) > M(1,5,5n)", c[0] > c[1], c[0].get_str(), c[1].get_str(), n);
            }
            // beyond the checked range the crank5a product carries the inequality
            const auto s = named_q("crank5b", {}, N);
            k.positive("series coefficients", s);
        });

    add({"crank11a", {"crank11a"}, "sum_n (M(2,11,11n+2) - M(1,11,11n+2)) q^n = E(q^11) [q^3; q^11] / [q, q^4; q^11]",
         Strategy::Equal, false, {}, {Params{}}, 9},
        [](Check& k, const Params& p, int N, auto) {
            QSeries oracle(N);
            for (int n = 0; n < N; ++n) {
                const auto c = crank_counts_mod(11, 11 * n + 2);
                oracle.at(n) = c[2] - c[1];
            }
            k.equal("series vs crank counts", named_q("crank11a", p, N), oracle);
        });

    add({"crank11b", {"crank11b"}, "M(2,11,11n+2) > M(1,11,11n+2) for n != 3; equality at n = 3",
         Strategy::NonnegExpectException, false, {}, {Params{}}, 12},
        [](Check& k, const Params&, int N, auto) {
            std::vector<int> not_strict;
            for (int n = 0; n < N; ++n) {
                const auto c = crank_counts_mod(11, 11 * n + 2);
                if (!(c[2] > c[1])) not_strict.push_back(n);
                k.truth("M(2,11,11n+2) >= M(1,11,11n+2)", c[2] >= c[1], c[2].get_str(), c[1].get_str(), n);
            }
            const std::vector<int> want = N > 3 ? std::vector<int>{3} : std::vector<int>{};
            k.truth("exception set", not_strict == want, vec_string(not_strict), vec_string(want));
            if (not_strict == want && N > 3) k.add_note("strict inequality fails exactly at n = 3");
            BracketSpec g;
            g.single(8, 0).euler(1).euler(4, 2).bracket(3, 0, 1).bracket(1, 0, 1, -1).bracket(4, 0, 1, -1);
            k.nonneg("supporting product at q -> q^11", U(specialize(g, 1, 1, 11), 11 * N));
        });

    // ---- resolvent identities -----------------------------------------------------

    add({"res1", {"res1"}, "E(q^2) [z^4; q^2] / ([z^2; q^2] [q z^3; q^2]) >= 0", Strategy::Nonneg, false, {}, {Params{}},
         40},
        [](Check& k, const Params& p, int N, auto) { k.nonneg("coefficients", named_zq("res1", p, N)); });
    add({"res2", {"res2"}, "E(q^3) (z^2; q^3) / ((q^3 z^-1; q^3) (z; q)) >= 0", Strategy::Nonneg, false, {}, {Params{}},
         40},
        [](Check& k, const Params& p, int N, auto) { k.nonneg("coefficients", named_zq("res2", p, N)); });
    add({"res2b", {"res2b"}, "E(q^3) [z^2; q^3] / [z; q] >= 0", Strategy::Nonneg, false, {}, {Params{}}, 40},
        [](Check& k, const Params& p, int N, auto) { k.nonneg("coefficients", named_zq("res2b", p, N)); });
    add({"res2c", {"res2c"},
         "E(q^3) [z^2; q^3] / [z; q] = ((1 - z^2) E(q^3) / [z; q^3]) ((z^2 q^3; q^3) / (zq, zq^2; q^3)) "
         "((q^3/z^2; q^3) / (q/z, q^2/z; q^3)), each factor >= 0",
         Strategy::Equal, false, {}, {Params{}}, 40},
        [](Check& k, const Params& p, int N, auto) {
            k.equal("factorization", named_zq("res2b", p, N), named_zq("res2c", p, N));
            BracketSpec f1, f2, f3;
            f1.single(2, 0).euler(3).bracket(1, 0, 3, -1);
            f2.poch(2, 3, 3).poch(1, 1, 3, -1).poch(1, 2, 3, -1);
            f3.poch(-2, 3, 3).poch(-1, 1, 3, -1).poch(-1, 2, 3, -1);
            k.nonneg("first factor", X(f1, N));
            k.nonneg("second factor", X(f2, N));
            k.nonneg("third factor", X(f3, N));
        });
    add({"res2d", {"res2d"},
         "E(q^2) [z^4; q^2] / ([z^2; q^2] [q z^3; q^2]) = E(q^6) [q^2 z^6; q^6] / [q z^3; q^2] + z^2 E(q^6) [q^2/z^6; q^6] / [q/z^3; q^2]",
         Strategy::Equal, false, {}, {Params{}}, 40},
        [](Check& k, const Params& p, int N, auto) {
            k.equal("decomposition", named_zq("res1", p, N), named_zq("res2d", p, N));
        });
    add({"res2e", {"res2e"},
         "E(q^3) (z^2; q^3) / ((q^3/z; q^3)(z; q)) = ((1 - z^2) E(q^3) / [z; q^3]) ((z^2 q^3; q^3) / ((zq; q^3)(zq^2; q^3)))",
         Strategy::Equal, false, {}, {Params{}}, 40},
        [](Check& k, const Params& p, int N, auto) {
            k.equal("factorization", named_zq("res2", p, N), named_zq("res2e", p, N));
        });

    // ---- eta quotient families --------------------------------------------------------

    auto odd_m = cartesian({{"m", {1, 3, 5}}, {"n", range(1, 4)}});
    auto even_m = cartesian({{"m", {2, 4, 6}}, {"n", range(1, 4)}});

    add({"ctzq", {"Ctzq"}, "C_t(z; q) = E(q) E(q^t)^{t-2} [z^t; q^t] / [z; q] >= 0", Strategy::Nonneg, false, {"t"},
         cartesian({{"t", range(1, 7)}}), 30},
        [](Check& k, const Params& p, int N, auto) { k.nonneg("coefficients", rhs_C(P(p, "t", 1, 12), N)); });

    add({"eta1a", {"eta1a"}, "m odd: E(q^{mn})^{n(m-1)/2 - m} E(q^m)^{(m+1)/2} E(q^n) / E(q) >= 0", Strategy::Nonneg,
         false, {"m", "n"}, odd_m, 40},
        [](Check& k, const Params& p, int N, auto) { k.nonneg("coefficients", named_q("eta1a", p, N)); });
    add({"eta1b", {"eta1b"},
         "m even: E(q^{mn})^{(n-2)(m/2-1)} E(q^m)^{m/2-1} E(q^n) E(q^{m/2}) / (E(q) E(q^{mn/2})) >= 0",
         Strategy::Nonneg, false, {"m", "n"}, even_m, 40},
        [](Check& k, const Params& p, int N, auto) { k.nonneg("coefficients", named_q("eta1b", p, N)); });
    add({"bev", {"Bev"}, "m odd: prod_{r=1}^{(m-1)/2} [q^r; q^m] = E(q) / E(q^m)", Strategy::Equal, false, {"m"},
         cartesian({{"m", range(1, 11, 2)}}), 40},
        [](Check& k, const Params& p, int N, auto) {
            const int m = P(p, "m", 1, 1000);
            k.equal("bracket product", named_q("Bev", p, N), eta({{1, 1}, {m, -1}}, N));
        });
    add({"bodd", {"Bodd"}, "m even: prod_{r=1}^{m/2-1} [q^r; q^m] = E(q) / E(q^{m/2})", Strategy::Equal, false, {"m"},
         cartesian({{"m", range(2, 12, 2)}}), 40},
        [](Check& k, const Params& p, int N, auto) {
            const int m = P(p, "m", 2, 1000);
            k.equal("bracket product", named_q("Bodd", p, N), eta({{1, 1}, {m / 2, -1}}, N));
        });
    add({"eta1aid", {"eta1aid"}, "m odd: prod_{r=1}^{(m-1)/2} C_n(q^r, q^m) = eta1a quotient", Strategy::Equal, false,
         {"m", "n"}, odd_m, 40},
        [](Check& k, const Params& p, int N, auto) {
            const int m = P(p, "m", 1, 1000), n = P(p, "n", 1, 100);
            const auto want = named_q("eta1a", p, N);
            k.equal("product sides of C_n", named_q("eta1aid", p, N), want);
            k.equal("lattice sums C_n", lattice_product_of_C(n, m, (m - 1) / 2, N), want);
        });
    add({"eta1bid", {"eta1bid"}, "m even: prod_{r=1}^{m/2-1} C_n(q^r, q^m) = eta1b quotient", Strategy::Equal, false,
         {"m", "n"}, even_m, 40},
        [](Check& k, const Params& p, int N, auto) {
            const int m = P(p, "m", 2, 1000), n = P(p, "n", 1, 100);
            const auto want = named_q("eta1b", p, N);
            k.equal("product sides of C_n", named_q("eta1bid", p, N), want);
            k.equal("lattice sums C_n", lattice_product_of_C(n, m, m / 2 - 1, N), want);
        });
    add({"eta2", {"eta2"}, "E(q^{mn})^{mn-m-n} E(q^m) E(q^n) / E(q) >= 0", Strategy::Nonneg, false, {"m", "n"},
         cartesian({{"m", range(1, 5)}, {"n", range(1, 5)}}), 40},
        [](Check& k, const Params& p, int N, auto) { k.nonneg("coefficients", named_q("eta2", p, N)); });
    add({"eta2id1", {"eta2id1"}, "m odd: eta2 quotient = eta1a quotient (E(q^{mn})^n / E(q^m))^{(m-1)/2}",
         Strategy::Equal, false, {"m", "n"}, cartesian({{"m", {1, 3, 5}}, {"n", range(1, 5)}}), 40},
        [](Check& k, const Params& p, int N, auto) {
            const int m = P(p, "m", 1, 1000), n = P(p, "n", 1, 100);
            k.equal("factorization", named_q("eta2", p, N), named_q("eta2id1", p, N));
            k.nonneg("t-core factor", eta({{m * n, n}, {m, -1}}, N));
        });
    add({"vn", {"Vn"}, "V_n(q) = E(q^{2n})^{n-2} E(q^2) E(q^n) / E(q) >= 0, the eta1b case (m, n) -> (2n, 2)",
         Strategy::Nonneg, false, {"n"}, cartesian({{"n", range(1, 6)}}), 40},
        [](Check& k, const Params& p, int N, auto) {
            const int n = P(p, "n", 1, 100);
            const auto v = named_q("Vn", p, N);
            k.equal("eta1b at m = 2n, n = 2", v, named_q("eta1b", {{"m", 2 * n}, {"n", 2}}, N));
            k.nonneg("coefficients", v);
        });
    add({"eta2id2", {"eta2id2"},
         "m even: eta2 quotient = eta1b quotient (E(q^{mn})^n / E(q^m))^{m/2-1} V_n(q^{m/2})", Strategy::Equal, false,
         {"m", "n"}, cartesian({{"m", {2, 4}}, {"n", range(1, 5)}}), 40},
        [](Check& k, const Params& p, int N, auto) {
            k.equal("factorization", named_q("eta2", p, N), named_q("eta2id2", p, N));
        });
    add({"eta2alt", {"eta2alt"}, "m odd: prod_{r=1}^{(m-1)/2} D_n(q^r, q^m) = eta2 quotient", Strategy::Equal, false,
         {"m", "n"}, cartesian({{"m", {1, 3, 5}}, {"n", range(1, 5)}}), 40},
        [](Check& k, const Params& p, int N, auto) {
            const int m = P(p, "m", 1, 1000), n = P(p, "n", 1, 100);
            const auto want = named_q("eta2", p, N);
            k.equal("product sides of D_n", named_q("eta2alt", p, N), want);
            auto lat = QSeries::constant(Integer(1), N);
            for (int r = 1; r <= (m - 1) / 2; ++r) lat *= d_series_lattice(n, r, m, N);
            k.equal("lattice sums D_n", lat, want);
        });

    // ---- second conjecture: evidence scans and proved cases --------------------------------

    auto scan = [](const char* id) {
        return [id](Check& k, const Params& p, int N, std::optional<int> W) {
            const auto s = named_series(id, p, N, W);
            if (auto z = std::get_if<ZqSeries>(&s))
                k.nonneg("coefficients", *z);
            else
                k.nonneg("coefficients", std::get<QSeries>(s));
        };
    };
    add({"conj2a", {"conj2a"}, "E(q) / ((z; q) (q z^-p; q)) >= 0, p >= 1", Strategy::Nonneg, true, {"p"},
         cartesian({{"p", range(1, 6)}}), 60, true},
        scan("conj2a"));
    add({"conj2b", {"conj2b"}, "E(q^{ma+nb}) / ((q^a; q^{ma+nb}) (q^b; q^{ma+nb})) >= 0", Strategy::Nonneg, true,
         {"a", "b", "m", "n"}, cartesian({{"a", range(1, 4)}, {"b", range(1, 4)}, {"m", range(1, 4)}, {"n", range(1, 4)}}),
         60},
        scan("conj2b"));
    add({"conj2c", {"conj2c", "Pnzq"}, "P_n(z, q) = (z, z^{n-1} q^n; q^n) / (z; q) >= 0, n >= 3", Strategy::Nonneg, true,
         {"n"}, cartesian({{"n", range(3, 8)}}), 60},
        scan("conj2c"));
    add({"conj2d", {"conj2d"}, "(z^{n-1} q^n; q^n) / (zq, zq^2, zq^3; q^n) >= 0, n >= 4", Strategy::Nonneg, true, {"n"},
         cartesian({{"n", range(4, 8)}}), 60},
        scan("conj2d"));
    add({"conj2e", {"conj2e"}, "E(q^n) [z^{n-1}; q^n] / [z; q] >= 0, n >= 2", Strategy::Nonneg, true, {"n"},
         cartesian({{"n", range(2, 8)}}), 60},
        scan("conj2e"));
    add({"conj2f", {"conj2f"}, "E(q^{nm}) / (q^a; q^m) >= 0, n > 1, m > 0, a in {1, 2}", Strategy::Nonneg, true,
         {"n", "m", "a"}, cartesian({{"n", range(2, 6)}, {"m", range(2, 6)}, {"a", {1, 2}}}), 60},
        scan("conj2f"));
    add({"conj2g", {"conj2g"}, "E(q^m) [z^2; q^m] / ([z; q^m] (zq, q/z; q^m)) >= 0, m > 1", Strategy::Nonneg, true, {"m"},
         cartesian({{"m", range(2, 6)}}), 60},
        scan("conj2g"));
    add({"conj2h", {"conj2h"}, "E(q^n) [z^{n^2}; q^n] [z^{n+1} q^n; q^n] / ([z^n; q^n] [z^{n+1} q; q]) >= 0, n >= 2",
         Strategy::Nonneg, true, {"n"}, cartesian({{"n", range(2, 4)}}), 60},
        scan("conj2h"));

    add({"conj2c3", {"conj2c3"}, "P_3(z, q) = (z^2 q^3; q^3) / (zq, zq^2; q^3) >= 0", Strategy::Equal, false, {},
         {Params{}}, 40},
        [](Check& k, const Params& p, int N, auto) {
            const auto s = named_zq("conj2c3", p, N);
            k.equal("P_3", named_zq("conj2c", {{"n", 3}}, N), s);
            k.nonneg("coefficients", s);
        });
    add({"conj2c4", {"conj2c4"},
         "P_4(z, q) = (z^3 q^4; q^4) / ((zq; q^2)(zq^2; q^4)) = (-zq; q^2) (z^3 q^4; q^4) / ((zq^2; q^4)(z^2 q^2; q^4)) >= 0",
         Strategy::Equal, false, {}, {Params{}}, 40},
        [](Check& k, const Params& p, int N, auto) {
            const auto s = named_zq("conj2c4", p, N);
            BracketSpec alt;
            alt.poch(1, 1, 2, 1, -1).poch(3, 4, 4).poch(1, 2, 4, -1).poch(2, 2, 4, -1);
            k.equal("P_4", named_zq("conj2c", {{"n", 4}}, N), s);
            k.equal("second form", s, X(alt, N));
            k.nonneg("coefficients", s);
        });
    add({"conj2ea", {"conj2ea"},
         "E(q^n) [z^{n-1}; q^n] / [z; q] = (1 - z^{n-1}) E(q^n) / [z; q^n] P_n(z, q) P_n(z^-1, q)", Strategy::Equal,
         false, {"n"}, cartesian({{"n", range(3, 6)}}), 40},
        [](Check& k, const Params& p, int N, auto) {
            k.equal("factorization", named_zq("conj2e", p, N), named_zq("conj2ea", p, N));
            const int n = P(p, "n", 3, 100);
            if (n <= 4) k.nonneg("proved case", named_zq("conj2e", p, N));
        });
    add({"conj2e2", {"conj2e2"}, "E(q^2) [z; q^2] / [z; q] = E(q^2) / [zq; q^2] >= 0", Strategy::Equal, false, {},
         {Params{}}, 40},
        [](Check& k, const Params& p, int N, auto) {
            const auto s = named_zq("conj2e2", p, N);
            k.equal("n = 2", named_zq("conj2e", {{"n", 2}}, N), s);
            k.nonneg("coefficients", s);
        });
    add({"conj2f2", {"conj2f2"}, "E(q^{2n}) / (q; q^2) = (E(q^2)^2 / E(q)) (E(q^{2n}) / E(q^2)) >= 0", Strategy::Equal,
         false, {"n"}, cartesian({{"n", range(2, 6)}}), 40},
        [](Check& k, const Params& p, int N, auto) {
            const int n = P(p, "n", 2, 100);
            const auto s = named_q("conj2f2", p, N);
            k.equal("m = 2, a = 1", named_q("conj2f", {{"n", n}, {"m", 2}, {"a", 1}}, N), s);
            k.nonneg("coefficients", s);
        });
    add({"conj2g2", {"conj2g2"},
         "E(q^2) [z^2; q^2] / ([z; q^2] (zq, q/z; q^2)) = E(q^2) [z^2; q^2] / [z; q] = (E(q^2) / E(q)) (q, -z, -q/z; q) >= 0",
         Strategy::Equal, false, {}, {Params{}}, 40},
        [](Check& k, const Params& p, int N, auto) {
            const auto s = named_zq("conj2g2", p, N);
            BracketSpec mid;
            mid.euler(2).bracket(2, 0, 2).bracket(1, 0, 1, -1);
            k.equal("m = 2", named_zq("conj2g", {{"m", 2}}, N), X(mid, N));
            k.equal("product form", X(mid, N), s);
            k.nonneg("coefficients", s);
        });

    return c;
}

}  // namespace qseries::detail
