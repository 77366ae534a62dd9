#include "qseries/bracket.hpp"

#include <map>
#include <sstream>
#include <tuple>

namespace qseries {

BracketSpec& BracketSpec::poch(int s, int j, int m, int power, int sigma) {
    if (m < 1) throw Error(Errc::invalid_argument, "infinite Pochhammer needs step m >= 1");
    if (sigma != 1 && sigma != -1) throw Error(Errc::invalid_argument, "sigma must be +-1");
    if (power != 0) factors_.push_back({s, j, m, sigma, power, -1});
    return *this;
}

BracketSpec& BracketSpec::finite_poch(int s, int j, int m, int n, int power, int sigma) {
    if (n < 0) throw Error(Errc::invalid_argument, "finite Pochhammer length must be >= 0");
    if (sigma != 1 && sigma != -1) throw Error(Errc::invalid_argument, "sigma must be +-1");
    if (power != 0 && n > 0) factors_.push_back({s, j, m, sigma, power, n});
    return *this;
}

BracketSpec& BracketSpec::bracket(int s, int j, int m, int power, int sigma) {
    poch(s, j, m, power, sigma);
    return poch(-s, m - j, m, power, sigma);
}

BracketSpec& BracketSpec::single(int s, int j, int power, int sigma) { return finite_poch(s, j, 0, 1, power, sigma); }

BracketSpec& BracketSpec::euler(int k, int power) {
    if (k < 1) throw Error(Errc::invalid_argument, "E(q^k) needs k >= 1");
    return poch(0, k, k, power);
}

BracketSpec& BracketSpec::monomial(int zc, int qb) {
    zc_ += zc;
    qb_ += qb;
    return *this;
}

BracketSpec& BracketSpec::scale(const Integer& num, const Integer& den) {
    if (is_zero(den)) throw Error(Errc::invalid_argument, "zero denominator");
    num_ *= num;
    den_ *= den;
    if (sgn(den_) < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    Integer g = gcd(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
    return *this;
}

BracketSpec& BracketSpec::operator*=(const BracketSpec& o) {
    factors_.insert(factors_.end(), o.factors_.begin(), o.factors_.end());
    zc_ += o.zc_;
    qb_ += o.qb_;
    return scale(o.num_, o.den_);
}

BracketSpec BracketSpec::inverse() const {
    if (is_zero(num_)) throw Error(Errc::division_by_zero_series, "inverse of a zero product");
    BracketSpec out;
    out.factors_ = factors_;
    for (auto& f : out.factors_) f.power = -f.power;
    out.zc_ = -zc_;
    out.qb_ = -qb_;
    out.num_ = den_;
    out.den_ = num_;
    return out.scale(Integer(1));
}

BracketSpec BracketSpec::pow(int k) const {
    if (k < 0) return inverse().pow(-k);
    BracketSpec out;
    for (int i = 0; i < k; ++i) out *= *this;
    return out;
}

bool BracketSpec::z_free() const {
    if (zc_ != 0) return false;
    for (const auto& f : factors_)
        if (f.s != 0) return false;
    return true;
}

std::string BracketSpec::describe() const {
    std::ostringstream os;
    os << num_.get_str();
    if (den_ != 1) os << "/" << den_.get_str();
    if (zc_ != 0) os << " z^" << zc_;
    if (qb_ != 0) os << " q^" << qb_;
    for (const auto& f : factors_) {
        os << " (" << (f.sigma < 0 ? "-" : "") << "z^" << f.s << " q^" << f.j << "; q^" << f.m << ")_";
        if (f.count < 0)
            os << "inf";
        else
            os << f.count;
        if (f.power != 1) os << "^" << f.power;
    }
    return os.str();
}

BracketSpec substitute(const BracketSpec& spec, const Substitution& sub) {
    if (sub.M < 1) throw Error(Errc::invalid_argument, "q -> q^M needs M >= 1");
    if (sub.sigma != 1 && sub.sigma != -1) throw Error(Errc::invalid_argument, "sigma must be +-1");
    BracketSpec out;
    for (const auto& f : spec.factors()) {
        const int sig = f.sigma * ((sub.sigma < 0 && (f.s % 2 != 0)) ? -1 : 1);
        const int s = sub.zk * f.s;
        const int j = sub.M * f.j + sub.r * f.s;
        if (f.count < 0)
            out.poch(s, j, sub.M * f.m, f.power, sig);
        else
            out.finite_poch(s, j, sub.M * f.m, f.count, f.power, sig);
    }
    out.monomial(sub.zk * spec.z_exp(), sub.r * spec.z_exp() + sub.M * spec.q_exp());
    const int zsign = (sub.sigma < 0 && (spec.z_exp() % 2 != 0)) ? -1 : 1;
    out.scale(spec.num() * zsign, spec.den());
    return out;
}

namespace {

// An elementary factor (1 - sigma z^s q^e)^power after normalization to e >= 0.
using Key = std::tuple<int, int, int>;  // s, e, sigma

struct Flattened {
    std::map<Key, int> factors;
    int zc = 0;
    long qb = 0;
    Integer num = 1;
    Integer den = 1;
    GrowthBound growth;
    bool zero = false;
};

long ipow_sign(int sigma, long p) { return (sigma < 0 && (p % 2 != 0)) ? -1 : 1; }

void mul_rational_pow(Flattened& F, const Integer& base, int p) {
    Integer b;
    mpz_pow_ui(b.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(std::abs(p)));
    if (p > 0)
        F.num *= b;
    else
        F.den *= b;
}

// Negative offsets are rewritten as (1 - c z^s q^e) = -c z^s q^e (1 - c z^-s q^-e).
void record_prefactor(Flattened& F, int s, long e, int sigma, int p) {
    F.zc += s * p;
    F.qb += e * p;
    if (ipow_sign(-sigma, p) < 0) F.num = -F.num;
}

// Records (1 - sigma z^s q^e)^p with e >= 0.
void add_elementary(Flattened& F, int s, long e, int sigma, int p, long limit) {
    if (e == 0 && s == 0) {
        if (sigma > 0) {
            if (p < 0) throw Error(Errc::division_by_zero_series, "reciprocal of the factor (1 - 1)");
            F.zero = true;
            return;
        }
        mul_rational_pow(F, Integer(2), p);
        return;
    }
    if (e >= limit) return;
    F.factors[{s, static_cast<int>(e), sigma}] += p;
}

GrowthBound factor_growth(int s, long e) {
    if (s == 0) return GrowthBound::z_free();
    if (e == 0) return GrowthBound::linear(0, 0, 0);
    return GrowthBound::factor(s, static_cast<int>(std::min(e, 1L << 30)));
}

// Visits the offsets j + m i of a family in increasing i; visit returns
// false to stop.
template <class F>
void for_offsets(const PochFactor& f, F&& visit) {
    if (f.count >= 0) {
        for (int i = 0; i < f.count; ++i)
            if (!visit(static_cast<long>(f.j) + static_cast<long>(f.m) * i)) return;
        return;
    }
    for (long i = 0;; ++i)
        if (!visit(static_cast<long>(f.j) + static_cast<long>(f.m) * i)) return;
}

// Two passes: the q-prefactor produced by negative offsets must be known
// before the truncation limit is fixed.
Flattened flatten(const BracketSpec& spec, int qprec) {
    Flattened F;
    F.zc = spec.z_exp();
    F.qb = spec.q_exp();
    F.num = spec.num();
    F.den = spec.den();
    for (const auto& f : spec.factors()) {
        if (f.count < 0 && f.m < 1) throw Error(Errc::invalid_argument, "infinite Pochhammer needs m >= 1");
        for_offsets(f, [&](long e) {
            if (e >= 0) return f.count >= 0;  // infinite families are increasing
            record_prefactor(F, f.s, e, f.sigma, f.power);
            return true;
        });
    }
    const long limit = static_cast<long>(qprec) - F.qb;
    F.growth = GrowthBound::z_free();
    for (const auto& f : spec.factors()) {
        bool first = true;
        for_offsets(f, [&](long e) {
            const int s = e < 0 ? -f.s : f.s;
            const long ee = e < 0 ? -e : e;
            // Skipped members still bound the growth; within an infinite
            // family the first non-negative member has the smallest slope.
            if (e < 0 || first || f.count >= 0) F.growth = F.growth.times(factor_growth(s, ee));
            if (e >= 0) first = false;
            if (e >= 0 && e >= limit) return f.count >= 0;
            add_elementary(F, s, ee, f.sigma, f.power, limit);
            return true;
        });
    }
    if (F.qb < 0 && !is_zero(F.num) && !F.zero)
        throw Error(Errc::negative_exponent, "product starts at q^" + std::to_string(F.qb));
    std::erase_if(F.factors, [](const auto& kv) { return kv.second == 0; });
    return F;
}

using Poly = Laurent<Integer>;

// (1 - sigma z^s)^p for p >= 0
Poly binomial_power(int s, int sigma, int p) {
    Poly out = Poly::monomial(Integer(1), 0);
    for (int i = 0; i < p; ++i) {
        Poly next = out;
        next.add_shifted(out, s, -sigma);
        next.trim();
        out = next;
    }
    return out;
}

Poly poly_mul(const Poly& a, const Poly& b) {
    Poly out;
    out.add_product(a, b);
    out.trim();
    return out;
}

// x / D as a power series in z, degrees <= W only; D has constant term 1.
Poly divide_truncated(const Poly& x, const Poly& D, int W) {
    Poly y;
    if (x.empty() || W < x.lo()) return y;
    const int dD = D.hi();
    for (int d = x.lo(); d <= W; ++d) {
        Integer v = x[d];
        for (int k = 1; k <= dD && d - k >= x.lo(); ++k)
            if (!is_zero(D[k])) sub_product(v, D[k], y[d - k]);
        if (!is_zero(v)) y.at(d) = v;
    }
    y.trim();
    return y;
}

// Exact Laurent quotient N / D, D with constant term 1; nullopt if D does not divide N.
std::optional<Poly> divide_exact(const Poly& N, const Poly& D) {
    if (N.empty()) return Poly{};
    const int dD = D.hi();
    const int top = N.hi() - dD;
    if (top < N.lo()) return std::nullopt;
    Poly Q = divide_truncated(N, D, top);
    Poly back = poly_mul(Q, D);
    Poly diff = N;
    diff.add_shifted(back, 0, -1);
    diff.trim();
    if (!diff.empty()) return std::nullopt;
    return Q;
}

void divide_scalar(Integer& x, const Integer& den) {
    if (den == 1) return;
    if (!mpz_divisible_p(x.get_mpz_t(), den.get_mpz_t()))
        throw Error(Errc::invalid_argument, "rational prefactor does not yield integer coefficients");
    mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), den.get_mpz_t());
}

}  // namespace

ZqSeries expand_bracket_spec(const BracketSpec& spec, int qprec, std::optional<int> window) {
    if (qprec < 0) throw Error(Errc::invalid_precision, "negative qprec");
    if (window && *window < 0) throw Error(Errc::insufficient_window, "negative window");
    Flattened F = flatten(spec, qprec);
    if (F.zero || is_zero(F.num)) return ZqSeries(qprec);
    const int Neff = static_cast<int>(std::max(0L, qprec - F.qb));

    Poly numer = Poly::monomial(Integer(1), 0);
    Poly denom = Poly::monomial(Integer(1), 0);
    ZqSeries body(Neff);
    if (Neff > 0) body.row_mut(0) = Poly::monomial(Integer(1), 0);
    for (const auto& [key, p] : F.factors) {
        const auto [s, e, sigma] = key;
        if (e >= 1) {
            body.apply_factor(s, e, sigma, p);
            continue;
        }
        if (p > 0) {
            numer = poly_mul(numer, binomial_power(s, sigma, p));
            continue;
        }
        // 1/(1 - c z^s), s < 0, equals -c z^|s| / (1 - c z^|s|)
        int sp = s;
        if (s < 0) {
            sp = -s;
            F.zc += sp * (-p);
            if (ipow_sign(-sigma, -p) < 0) F.num = -F.num;
        }
        denom = poly_mul(denom, binomial_power(sp, sigma, -p));
    }
    const GrowthBound growth = F.growth;

    auto quotient = divide_exact(numer, denom);
    std::optional<int> W;  // in body coordinates, before the z^zc shift
    if (!quotient) {
        if (!window)
            throw Error(Errc::unbounded_z_support,
                        "reciprocal factor with q-offset 0 survives cancellation; a z-window is required");
        W = *window - F.zc;
        if (*W < 0) throw Error(Errc::insufficient_window, "window below the product's z-shift");
    }
    ZqSeries out(qprec);
    for (int e = 0; e < Neff; ++e) {
        const Poly& r = body.row(e);
        if (r.empty()) continue;
        Poly v = quotient ? poly_mul(r, *quotient) : divide_truncated(poly_mul(r, numer), denom, *W);
        if (v.empty()) continue;
        Poly& dst = out.row_mut(static_cast<int>(e + F.qb));
        for (int d = v.lo(); d <= v.hi(); ++d) {
            Integer c = v[d] * F.num;
            divide_scalar(c, F.den);
            if (!is_zero(c)) dst.at(d + F.zc) = c;
        }
    }
    for (int e = 0; e < qprec; ++e) out.row_mut(e).trim();
    if (W) out.set_window(*W + F.zc);
    out.set_growth(growth.monomial(F.zc, static_cast<int>(F.qb)));
    return out;
}

QSeries expand_univariate(const BracketSpec& spec, int qprec) {
    if (!spec.z_free()) throw Error(Errc::invalid_argument, "expand_univariate on a product involving z");
    if (qprec < 0) throw Error(Errc::invalid_precision, "negative qprec");
    Flattened F = flatten(spec, qprec);
    QSeries out(qprec);
    if (F.zero || is_zero(F.num)) return out;
    const int Neff = static_cast<int>(std::max(0L, qprec - F.qb));
    auto body = QSeries::constant(Integer(1), Neff);
    for (const auto& [key, p] : F.factors) body.apply_factor(std::get<1>(key), std::get<2>(key), p);
    for (int e = 0; e < Neff; ++e) {
        Integer c = body[e] * F.num;
        divide_scalar(c, F.den);
        out.at(static_cast<int>(e + F.qb)) = c;
    }
    return out;
}

}  // namespace qseries
