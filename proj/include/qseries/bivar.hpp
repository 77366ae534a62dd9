#pragma once

// Series in q whose coefficients are Laurent polynomials in z.
//
// Validity model:
//   * Exact: every coefficient with q-exponent below qprec is present.
//   * Windowed(W): coefficients are certified for z-degree d <= W. Reciprocal
//     factors 1/(1 - z^s) are expanded as power series in z, so the low side
//     of every row is complete and only the high side is cut.
//   * Substitutions z -> z q^k move coefficients across the q-truncation. The
//     certified set is then e < Q + sum_i t_i * min(d - p_i, 0) for every
//     recorded bound (Q, {(t_i, p_i)}); the storage limit qprec() is the
//     smallest Q.

#include <climits>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "qseries/cyclo.hpp"
#include "qseries/error.hpp"
#include "qseries/series.hpp"

namespace qseries {

/// Finite Laurent polynomial sum_d c_d z^d with dense storage from lo().
template <class R>
class Laurent {
public:
    Laurent() = default;

    static Laurent monomial(R c, int d) {
        Laurent p;
        if (!detail::coeff_is_zero(c)) {
            p.lo_ = d;
            p.c_.push_back(std::move(c));
        }
        return p;
    }

    bool empty() const { return c_.empty(); }
    // Meaningful only when !empty().
    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(c_.size()) - 1; }

    const R& operator[](int d) const {
        static const R zero{};
        if (c_.empty() || d < lo_ || d > hi()) return zero;
        return c_[d - lo_];
    }

    R& at(int d) {
        cover(d, d);
        return c_[d - lo_];
    }

    std::span<const R> coefficients() const { return c_; }

    bool is_zero() const {
        for (const auto& x : c_)
            if (!detail::coeff_is_zero(x)) return false;
        return true;
    }

    // this += sign * z^shift * src
    void add_shifted(const Laurent& src, int shift, int sign) {
        if (src.c_.empty()) return;
        cover(src.lo_ + shift, src.hi() + shift);
        const int base = src.lo_ + shift - lo_;
        for (std::size_t i = 0; i < src.c_.size(); ++i) {
            if (detail::coeff_is_zero(src.c_[i])) continue;
            if (sign > 0)
                c_[base + i] += src.c_[i];
            else
                c_[base + i] -= src.c_[i];
        }
    }

    // this += a * b, keeping only degrees <= max_degree
    void add_product(const Laurent& a, const Laurent& b, int max_degree = INT_MAX) {
        if (a.c_.empty() || b.c_.empty()) return;
        const int lo = a.lo_ + b.lo_;
        const int hi = std::min(a.hi() + b.hi(), max_degree);
        if (hi < lo) return;
        cover(lo, hi);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (detail::coeff_is_zero(a.c_[i])) continue;
            const int di = a.lo_ + static_cast<int>(i);
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                const int d = di + b.lo_ + static_cast<int>(j);
                if (d > hi) break;
                if (detail::coeff_is_zero(b.c_[j])) continue;
                detail::coeff_add_product(c_[d - lo_], a.c_[i], b.c_[j]);
            }
        }
    }

    void scale(const R& k) {
        for (auto& x : c_) x = R(x * k);
    }

    void negate() {
        for (auto& x : c_) x = -x;
    }

    void truncate_above(int W) {
        if (c_.empty()) return;
        if (W < lo_) {
            c_.clear();
            return;
        }
        if (W < hi()) c_.resize(W - lo_ + 1);
    }

    // Drops zero coefficients at both ends.
    void trim() {
        while (!c_.empty() && detail::coeff_is_zero(c_.back())) c_.pop_back();
        std::size_t k = 0;
        while (k < c_.size() && detail::coeff_is_zero(c_[k])) ++k;
        if (k > 0) {
            c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(k));
            lo_ += static_cast<int>(k);
        }
        if (c_.empty()) lo_ = 0;
    }

private:
    void cover(int lo, int hi) {
        if (c_.empty()) {
            lo_ = lo;
            c_.assign(hi - lo + 1, R{});
            return;
        }
        if (lo < lo_) {
            c_.insert(c_.begin(), static_cast<std::size_t>(lo_ - lo), R{});
            lo_ = lo;
        }
        if (hi > this->hi()) c_.resize(hi - lo_ + 1);
    }

    int lo_ = 0;
    std::vector<R> c_;
};

/// Term (d, e) is certified iff e < q + sum slope * min(d - pivot, 0).
struct CertBound {
    struct Tilt {
        int slope;
        int pivot;
    };
    int q = 0;
    std::vector<Tilt> tilts;

    long limit(int d) const {
        long lim = q;
        for (const auto& t : tilts) lim += static_cast<long>(t.slope) * std::min(d - t.pivot, 0);
        return lim;
    }
};

/// Linear lower bounds on q-exponents: every term (d, e) with d < 0 has
/// e >= neg.slope * |d| - offset, likewise for d > 0 with pos. Terms beyond
/// the truncation obey the same bound, which is what lets a specialization
/// z -> q^r certify its output.
struct GrowthBound {
    struct Side {
        enum class Kind { empty, linear, unknown };
        Kind kind = Kind::empty;
        mpq_class slope;
    };
    Side neg;
    Side pos;
    mpq_class offset;

    static GrowthBound z_free() { return {}; }
    static GrowthBound unknown();
    static GrowthBound linear(mpq_class neg_slope, mpq_class pos_slope, mpq_class offset);

    GrowthBound times(const GrowthBound& o) const;
    GrowthBound plus(const GrowthBound& o) const;
    GrowthBound monomial(int zc, int qb) const;
    GrowthBound shift_z(int k) const;
    GrowthBound subst_q(int m) const;
    // Bound of the single factor (1 - c z^s q^e)^{+-1} expanded up to any order.
    static GrowthBound factor(int s, int e);
};

/// First certified coordinate where two series differ.
template <class R>
struct ZqMismatch {
    int zexp;
    int qexp;
    R lhs;
    R rhs;
};

template <class R>
class Bivariate {
public:
    Bivariate() = default;

    explicit Bivariate(int qprec) {
        if (qprec < 0) throw Error(Errc::invalid_precision, "negative qprec");
        rows_.resize(qprec);
        bounds_.push_back({qprec, {}});
    }

    static Bivariate from_q_series(const PowerSeries<R>& s) {
        Bivariate b(s.precision());
        for (int e = 0; e < s.precision(); ++e)
            if (!detail::coeff_is_zero(s[e])) b.rows_[e] = Laurent<R>::monomial(s[e], 0);
        return b;
    }

    static Bivariate monomial(R c, int d, int e, int qprec) {
        Bivariate b(qprec);
        if (e < 0) throw Error(Errc::negative_exponent, "monomial q^" + std::to_string(e));
        if (e < qprec) b.rows_[e] = Laurent<R>::monomial(std::move(c), d);
        b.growth_ = GrowthBound::z_free().monomial(d, e);
        return b;
    }

    int qprec() const { return static_cast<int>(rows_.size()); }
    bool exact() const { return !window_.has_value(); }
    const std::optional<int>& window() const { return window_; }
    const std::vector<CertBound>& bounds() const { return bounds_; }
    bool tilted() const {
        for (const auto& b : bounds_)
            if (!b.tilts.empty()) return true;
        return false;
    }
    const GrowthBound& growth() const { return growth_; }
    const std::map<std::pair<int, int>, R>& negative_terms() const { return negative_; }

    void set_window(std::optional<int> W) {
        window_ = W;
        if (W)
            for (auto& r : rows_) r.truncate_above(*W);
    }
    void set_growth(GrowthBound g) { growth_ = std::move(g); }

    const Laurent<R>& row(int e) const {
        if (e < 0 || e >= qprec()) throw Error(Errc::invalid_precision, "row q^" + std::to_string(e) + " not stored");
        return rows_[e];
    }
    Laurent<R>& row_mut(int e) {
        if (e < 0 || e >= qprec()) throw Error(Errc::invalid_precision, "row q^" + std::to_string(e) + " not stored");
        return rows_[e];
    }

    bool certified(int d, int e) const {
        if (window_ && d > *window_) return false;
        for (const auto& b : bounds_)
            if (e >= b.limit(d)) return false;
        return true;
    }

    R coeff(int d, int e) const {
        if (!certified(d, e))
            throw Error(Errc::invalid_precision,
                        "coefficient z^" + std::to_string(d) + " q^" + std::to_string(e) + " is not certified");
        return raw(d, e);
    }

    // Stored value (zero if absent), certified or not.
    R raw(int d, int e) const {
        if (e < 0) {
            auto it = negative_.find({d, e});
            return it == negative_.end() ? R{} : it->second;
        }
        if (e >= qprec()) return R{};
        return rows_[e][d];
    }

    bool is_zero() const {
        for (const auto& r : rows_)
            if (!r.is_zero()) return false;
        for (const auto& [k, v] : negative_)
            if (!detail::coeff_is_zero(v)) return false;
        return true;
    }

    // Lowest / highest stored z-degree; nullopt for the zero series.
    std::optional<int> min_z() const {
        std::optional<int> m;
        for (const auto& r : rows_)
            if (!r.empty()) m = m ? std::min(*m, r.lo()) : r.lo();
        return m;
    }
    std::optional<int> max_z() const {
        std::optional<int> m;
        for (const auto& r : rows_)
            if (!r.empty()) m = m ? std::max(*m, r.hi()) : r.hi();
        return m;
    }

    Bivariate operator-() const {
        Bivariate out = *this;
        for (auto& r : out.rows_) r.negate();
        for (auto& [k, v] : out.negative_) v = -v;
        return out;
    }

    Bivariate& operator+=(const Bivariate& o) { return accumulate(o, 1); }
    Bivariate& operator-=(const Bivariate& o) { return accumulate(o, -1); }
    friend Bivariate operator+(Bivariate a, const Bivariate& b) { return a += b; }
    friend Bivariate operator-(Bivariate a, const Bivariate& b) { return a -= b; }

    // Window rule: W_out = min(W_a + lo_b, W_b + lo_a), an exact operand
    // having W = +inf. Tilted operands are rejected; use mul_monomial.
    friend Bivariate operator*(const Bivariate& a, const Bivariate& b) {
        if (a.tilted() || b.tilted() || !a.negative_.empty() || !b.negative_.empty())
            throw Error(Errc::invalid_argument, "product of shifted series; multiply by a monomial instead");
        const int N = std::min(a.qprec(), b.qprec());
        Bivariate out(N);
        out.growth_ = a.growth_.times(b.growth_);
        const auto lo_a = a.min_z();
        const auto lo_b = b.min_z();
        if (!lo_a || !lo_b) return out;  // a zero operand gives an exact zero
        std::optional<int> W;
        if (a.window_) W = *a.window_ + *lo_b;
        if (b.window_) W = W ? std::min(*W, *b.window_ + *lo_a) : *b.window_ + *lo_a;
        if (W && *W < 0)
            throw Error(Errc::insufficient_window, "product window " + std::to_string(*W) + " < 0");
        const int cap = W ? *W : INT_MAX;
        for (int i = 0; i < N; ++i) {
            if (a.rows_[i].empty()) continue;
            for (int j = 0; i + j < N; ++j) {
                if (b.rows_[j].empty()) continue;
                out.rows_[i + j].add_product(a.rows_[i], b.rows_[j], cap);
            }
        }
        out.window_ = W;
        for (auto& r : out.rows_) r.trim();
        return out;
    }

    Bivariate& operator*=(const Bivariate& o) { return *this = *this * o; }

    Bivariate scaled(const R& k) const {
        Bivariate out = *this;
        for (auto& r : out.rows_) r.scale(k);
        for (auto& [key, v] : out.negative_) v = R(v * k);
        return out;
    }

    // Multiplies by c z^zc q^qb. A negative qb is allowed; certified terms
    // that land below q^0 are kept in negative_terms().
    Bivariate mul_monomial(const R& c, int zc, int qb) const {
        Bivariate out = remap([&](int d, int e) { return std::pair{d + zc, e + qb}; }, qprec() + qb);
        if (!(c == R(1)))
            out = out.scaled(c);
        for (auto& b : out.bounds_) {
            b.q = b.q + qb;
            for (auto& t : b.tilts) t.pivot += zc;
        }
        if (window_) out.window_ = *window_ + zc;
        out.growth_ = growth_.monomial(zc, qb);
        return out;
    }

    // z -> z q^k followed by multiplication with q^q_mult: (d, e) -> (d, e + k d + q_mult).
    Bivariate shift_z(int k, int q_mult = 0) const {
        if (k < 1) throw Error(Errc::invalid_argument, "shift_z needs k >= 1");
        Bivariate out =
            remap([&](int d, int e) { return std::pair{d, e + k * d + q_mult}; }, qprec() + q_mult);
        for (auto& b : out.bounds_) {
            b.q += q_mult;
            b.tilts.push_back({k, 0});
        }
        out.window_ = window_;
        out.growth_ = growth_.shift_z(k).monomial(0, q_mult);
        return out;
    }

    // q -> q^m
    Bivariate subst_q(int m) const {
        if (m < 1) throw Error(Errc::invalid_argument, "subst_q needs m >= 1");
        Bivariate out = remap([&](int d, int e) { return std::pair{d, e * m}; }, qprec() * m);
        for (auto& b : out.bounds_) {
            b.q *= m;
            for (auto& t : b.tilts) t.slope *= m;
        }
        out.window_ = window_;
        out.growth_ = growth_.subst_q(m);
        return out;
    }

    Bivariate truncated(int N) const {
        N = std::clamp(N, 0, qprec());
        Bivariate out = *this;
        out.rows_.resize(N);
        out.bounds_.push_back({N, {}});
        return out;
    }

    // In place: multiply by (1 - sign z^s q^e)^power with e >= 1.
    void apply_factor(int s, int e, int sign, int power) {
        if (e < 1) throw Error(Errc::invalid_argument, "apply_factor needs a positive q-offset");
        if (tilted() || !negative_.empty()) throw Error(Errc::invalid_argument, "apply_factor on a shifted series");
        const int N = qprec();
        growth_ = growth_.times(GrowthBound::factor(s, e));
        if (e >= N || power == 0) return;
        if (window_) {
            // lowest z-degree the factor (or its inverse) reaches below q^N
            const int reach = power > 0 ? std::min(s, 0) * power : std::min(s, 0) * ((N - 1) / e);
            *window_ += reach;
            if (*window_ < 0) throw Error(Errc::insufficient_window, "window exhausted by a factor with z^" + std::to_string(s));
        }
        for (int rep = 0; rep < power; ++rep)
            for (int n = N - 1; n >= e; --n) rows_[n].add_shifted(rows_[n - e], s, -sign);
        for (int rep = 0; rep < -power; ++rep)
            for (int n = e; n < N; ++n) rows_[n].add_shifted(rows_[n - e], s, sign);
        if (window_)
            for (auto& r : rows_) r.truncate_above(*window_);
        for (auto& r : rows_) r.trim();
    }

    PowerSeries<R> extract_z_coeff(int d) const {
        int N = qprec();
        // Beyond the certified part of column d nothing is reported.
        for (int e = 0; e < N; ++e)
            if (!certified(d, e)) {
                N = e;
                break;
            }
        PowerSeries<R> out(N);
        for (int e = 0; e < N; ++e) out.at(e) = rows_[e][d];
        return out;
    }

    // z -> 1; requires a complete, untilted series.
    PowerSeries<R> specialize_one() const {
        require_complete("z -> 1");
        PowerSeries<R> out(qprec());
        for (int e = 0; e < qprec(); ++e) {
            R acc{};
            for (const auto& c : rows_[e].coefficients()) acc += c;
            out.at(e) = acc;
        }
        return out;
    }

    // q^q_shift * f(sign * q^r; q), r >= 1. Output precision is what the
    // growth bound and window can certify.
    PowerSeries<R> specialize_monomial(int r, int sign = 1, int q_shift = 0) const;

    // Coordinates in ascending (qexp, zexp) order.
    template <class F>
    void for_each_certified(F&& f) const {
        for (const auto& [key, v] : negative_)
            if (certified(key.first, key.second)) f(key.first, key.second, v);
        for (int e = 0; e < qprec(); ++e) {
            const auto& r = rows_[e];
            if (r.empty()) continue;
            for (int d = r.lo(); d <= r.hi(); ++d)
                if (certified(d, e)) f(d, e, r[d]);
        }
    }

    std::vector<Laurent<R>>& rows_for_construction() { return rows_; }

private:
    template <class Map>
    Bivariate remap(Map map, int new_qprec) const {
        Bivariate out;
        if (new_qprec < 0) new_qprec = 0;
        out.rows_.resize(new_qprec);
        out.bounds_ = bounds_;
        auto put = [&](int d, int e, const R& v) {
            auto [d2, e2] = map(d, e);
            if (e2 >= new_qprec) return;
            if (e2 < 0)
                out.negative_[{d2, e2}] += v;
            else
                out.rows_[e2].at(d2) += v;
        };
        for (const auto& [key, v] : negative_) put(key.first, key.second, v);
        for (int e = 0; e < qprec(); ++e) {
            const auto& r = rows_[e];
            if (r.empty()) continue;
            for (int d = r.lo(); d <= r.hi(); ++d)
                if (!detail::coeff_is_zero(r[d])) put(d, e, r[d]);
        }
        for (auto& r : out.rows_) r.trim();
        std::erase_if(out.negative_, [](const auto& kv) { return detail::coeff_is_zero(kv.second); });
        return out;
    }

    Bivariate& accumulate(const Bivariate& o, int sign) {
        const int N = std::min(qprec(), o.qprec());
        rows_.resize(N);
        for (int e = 0; e < N; ++e) rows_[e].add_shifted(o.rows_[e], 0, sign);
        for (const auto& [k, v] : o.negative_) {
            if (sign > 0)
                negative_[k] += v;
            else
                negative_[k] -= v;
        }
        std::erase_if(negative_, [](const auto& kv) { return detail::coeff_is_zero(kv.second); });
        bounds_.insert(bounds_.end(), o.bounds_.begin(), o.bounds_.end());
        if (o.window_) window_ = window_ ? std::min(*window_, *o.window_) : *o.window_;
        if (window_)
            for (auto& r : rows_) r.truncate_above(*window_);
        for (auto& r : rows_) r.trim();
        growth_ = growth_.plus(o.growth_);
        return *this;
    }

    void require_complete(const char* what) const {
        if (window_) throw Error(Errc::insufficient_window, std::string(what) + " needs an exact series");
        if (tilted() || !negative_.empty())
            throw Error(Errc::insufficient_window, std::string(what) + " needs an unshifted series");
    }

    std::vector<Laurent<R>> rows_;
    std::optional<int> window_;
    std::vector<CertBound> bounds_;
    GrowthBound growth_;
    std::map<std::pair<int, int>, R> negative_;
};

using ZqSeries = Bivariate<Integer>;
using CycZqSeries = Bivariate<CycInt>;

/// Smallest certified-output bound for q^shift * f(sign q^r; q); see specialize_monomial.
int monomial_specialization_precision(int qprec, const std::optional<int>& window, const GrowthBound& g, int r,
                                      int q_shift);

template <class R>
PowerSeries<R> Bivariate<R>::specialize_monomial(int r, int sign, int q_shift) const {
    if (r < 1) throw Error(Errc::invalid_argument, "MonomialQ needs r >= 1");
    if (tilted() || !negative_.empty())
        throw Error(Errc::insufficient_window, "z -> q^r needs an unshifted series");
    const int P = monomial_specialization_precision(qprec(), window_, growth_, r, q_shift);
    PowerSeries<R> out(P);
    for (int e = 0; e < qprec(); ++e) {
        const auto& row = rows_[e];
        if (row.empty()) continue;
        for (int d = row.lo(); d <= row.hi(); ++d) {
            const R& c = row[d];
            if (detail::coeff_is_zero(c)) continue;
            const long E = static_cast<long>(e) + static_cast<long>(r) * d + q_shift;
            if (E >= P) continue;
            if (E < 0)
                throw Error(Errc::negative_exponent, "z^" + std::to_string(d) + " q^" + std::to_string(e) +
                                                         " specializes to q^" + std::to_string(E));
            if (sign < 0 && (d % 2 != 0))
                out.at(static_cast<int>(E)) -= c;
            else
                out.at(static_cast<int>(E)) += c;
        }
    }
    return out;
}

/// z -> zeta_a^k. Needs an exact, unshifted series.
CycSeries specialize_root_of_unity(const ZqSeries& s, int a, int k);
CycSeries specialize_root_of_unity(const CycZqSeries& s, int a, int k);

/// Embeds an integer series into Z[zeta_a]-coefficients.
CycZqSeries lift(const ZqSeries& s);

/// First coordinate certified in both series where they differ, scanning
/// (qexp, zexp) in ascending order; nullopt if they agree everywhere both are
/// certified. `compared` receives the number of coordinates inspected.
template <class R>
std::optional<ZqMismatch<R>> first_mismatch(const Bivariate<R>& a, const Bivariate<R>& b, long* compared = nullptr) {
    long n = 0;
    std::optional<ZqMismatch<R>> bad;
    auto visit = [&](int d, int e) {
        if (bad) return;
        if (!a.certified(d, e) || !b.certified(d, e)) return;
        ++n;
        R x = a.raw(d, e), y = b.raw(d, e);
        if (!(x == y)) bad = ZqMismatch<R>{d, e, x, y};
    };
    // negative-exponent entries of either side
    std::map<std::pair<int, int>, bool> neg;
    for (const auto& [k, v] : a.negative_terms()) neg[{k.second, k.first}] = true;
    for (const auto& [k, v] : b.negative_terms()) neg[{k.second, k.first}] = true;
    for (const auto& [k, v] : neg) visit(k.second, k.first);
    const int N = std::min(a.qprec(), b.qprec());
    for (int e = 0; e < N && !bad; ++e) {
        const auto& ra = a.row(e);
        const auto& rb = b.row(e);
        if (ra.empty() && rb.empty()) continue;
        int lo = INT_MAX, hi = INT_MIN;
        if (!ra.empty()) lo = std::min(lo, ra.lo()), hi = std::max(hi, ra.hi());
        if (!rb.empty()) lo = std::min(lo, rb.lo()), hi = std::max(hi, rb.hi());
        for (int d = lo; d <= hi && !bad; ++d) visit(d, e);
    }
    if (compared) *compared = n;
    return bad;
}

/// Result of a nonnegativity scan over the certified region.
struct NonnegResult {
    bool ok = true;
    int zexp = 0;
    int qexp = 0;
    Integer value;
    long scanned = 0;
};

/// First negative certified coefficient with |zexp| <= zlimit (if given), in
/// ascending (qexp, zexp) order.
NonnegResult nonneg_scan(const ZqSeries& s, std::optional<int> zlimit = std::nullopt);

/// All negative certified coefficients, same order.
std::vector<std::pair<int, int>> negative_coordinates(const ZqSeries& s, std::optional<int> zlimit = std::nullopt);

std::string to_string(const ZqSeries& s);

}  // namespace qseries
