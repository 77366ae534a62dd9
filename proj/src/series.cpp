#include "qseries/series.hpp"

#include <sstream>

namespace qseries {

const char* errc_name(Errc code) {
    switch (code) {
    case Errc::invalid_precision: return "invalid precision";
    case Errc::invalid_argument: return "invalid argument";
    case Errc::non_unit: return "non-unit";
    case Errc::unbounded_z_support: return "unbounded z-support";
    case Errc::division_by_zero_series: return "division by zero series";
    case Errc::insufficient_window: return "insufficient window";
    case Errc::negative_exponent: return "negative exponent";
    case Errc::order_mismatch: return "order mismatch";
    case Errc::unknown_id: return "unknown id";
    case Errc::invalid_params: return "invalid params";
    case Errc::syntax_error: return "syntax error";
    case Errc::exponent_overflow: return "exponent overflow";
    }
    return "error";
}

QSeries invert(const QSeries& s) {
    const int N = s.precision();
    if (N == 0) return s;
    const Integer& c0 = s[0];
    if (c0 != 1 && c0 != -1) throw Error(Errc::non_unit, "constant term " + c0.get_str() + " is not +-1");
    QSeries g(N);
    g.at(0) = c0;
    const auto f = s.coefficients();
    for (int n = 1; n < N; ++n) {
        Integer acc;
        for (int k = 1; k <= n; ++k) {
            if (is_zero(f[k])) continue;
            add_product(acc, f[k], g[n - k]);
        }
        // f0 * g_n = -acc and f0 = 1/f0
        g.at(n) = -acc * c0;
    }
    return g;
}

QSeries pow(const QSeries& s, int k) {
    if (k < 0) return pow(invert(s), -k);
    QSeries result = QSeries::constant(Integer(1), s.precision());
    QSeries base = s;
    while (k > 0) {
        if (k & 1) result *= base;
        k >>= 1;
        if (k > 0) base *= base;
    }
    return result;
}

QSeries euler_E(int prec) {
    if (prec < 1) throw Error(Errc::invalid_precision, "euler_E needs prec >= 1");
    auto s = QSeries::constant(Integer(1), prec);
    for (int n = 1; n < prec; ++n) s.apply_factor(n, 1, 1);
    return s;
}

QSeries pochhammer_inf(int j, int m, int prec) {
    if (j < 1) throw Error(Errc::invalid_argument, "pochhammer_inf needs j >= 1 (j = 0 gives a zero factor)");
    if (m < 1) throw Error(Errc::invalid_argument, "pochhammer_inf needs step m >= 1");
    if (prec < 0) throw Error(Errc::invalid_precision, "negative precision");
    auto s = QSeries::constant(Integer(1), prec);
    for (int e = j; e < prec; e += m) s.apply_factor(e, 1, 1);
    return s;
}

QSeries pochhammer_finite(int j, int m, int n, int prec) {
    if (j < 1 || m < 0) throw Error(Errc::invalid_argument, "pochhammer_finite needs j >= 1, m >= 0");
    auto s = QSeries::constant(Integer(1), prec);
    for (int i = 0; i < n; ++i) s.apply_factor(j + m * i, 1, 1);
    return s;
}

std::string to_string(const QSeries& s) {
    std::ostringstream os;
    bool first = true;
    for (int n = 0; n < s.precision(); ++n) {
        const Integer& c = s[n];
        if (is_zero(c)) continue;
        if (!first) os << (sgn(c) < 0 ? " - " : " + ");
        else if (sgn(c) < 0) os << "-";
        first = false;
        Integer a = abs(c);
        if (n == 0 || a != 1) os << a.get_str();
        if (n > 0) os << (a != 1 ? "*" : "") << "q" << (n > 1 ? "^" + std::to_string(n) : "");
    }
    if (first) os << "0";
    os << " + O(q^" << s.precision() << ")";
    return os.str();
}

EtaQuotient::EtaQuotient(std::map<int, int> factors) : factors_(std::move(factors)) {
    for (const auto& [k, e] : factors_)
        if (k < 1) throw Error(Errc::invalid_argument, "eta level must be positive");
    normalize();
}

EtaQuotient EtaQuotient::eta(int level, int exponent) { return EtaQuotient(std::map<int, int>{{level, exponent}}); }

long EtaQuotient::prefactor24() const {
    long p = 0;
    for (const auto& [k, e] : factors_) p += static_cast<long>(k) * e;
    return p;
}

QSeries EtaQuotient::expand(int prec) const {
    auto s = QSeries::constant(Integer(1), prec);
    for (const auto& [k, e] : factors_)
        for (int n = k; n < prec; n += k) s.apply_factor(n, 1, e);
    return s;
}

EtaQuotient& EtaQuotient::operator*=(const EtaQuotient& o) {
    for (const auto& [k, e] : o.factors_) factors_[k] += e;
    normalize();
    return *this;
}

EtaQuotient EtaQuotient::inverse() const { return pow(-1); }

EtaQuotient EtaQuotient::pow(int k) const {
    EtaQuotient out;
    for (const auto& [lvl, e] : factors_) out.factors_[lvl] = e * k;
    out.normalize();
    return out;
}

void EtaQuotient::normalize() {
    std::erase_if(factors_, [](const auto& kv) { return kv.second == 0; });
}

std::string format_prefactor24(long p24) { return std::to_string(p24) + "/24"; }

}  // namespace qseries
