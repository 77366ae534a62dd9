#pragma once

// Accumulates the comparisons made by one catalog run. Only the first
// failure is kept as the witness; later checks still count coefficients.

#include <string>

#include "qseries/bivar.hpp"
#include "qseries/cyclo.hpp"
#include "qseries/verify.hpp"

namespace qseries::detail {

inline std::string value_string(const Integer& v) { return v.get_str(); }
inline std::string value_string(const CycInt& v) { return to_string(v); }

class Check {
public:
    bool failed() const { return witness_.has_value(); }
    const std::optional<Witness>& witness() const { return witness_; }
    long compared() const { return compared_; }
    bool empty_comparison() const { return empty_; }
    std::string note() const { return note_; }
    void add_note(const std::string& s) { note_ += (note_.empty() ? "" : "; ") + s; }

    template <class R>
    void equal(const std::string& name, const Bivariate<R>& a, const Bivariate<R>& b) {
        long n = 0;
        auto bad = first_mismatch(a, b, &n);
        compared_ += n;
        if (n == 0) empty_ = true;
        if (bad) fail({name, bad->zexp, bad->qexp, value_string(bad->lhs), value_string(bad->rhs)});
    }

    template <class R>
    void equal(const std::string& name, const PowerSeries<R>& a, const PowerSeries<R>& b) {
        const int N = std::min(a.precision(), b.precision());
        if (N == 0) empty_ = true;
        for (int e = 0; e < N; ++e) {
            ++compared_;
            if (!(a[e] == b[e])) {
                fail({name, std::nullopt, e, value_string(a[e]), value_string(b[e])});
                return;
            }
        }
    }

    void nonneg(const std::string& name, const ZqSeries& s) {
        auto r = nonneg_scan(s);
        compared_ += r.scanned;
        if (r.scanned == 0) empty_ = true;
        if (!r.ok) fail({name, r.zexp, r.qexp, r.value.get_str(), ""});
    }

    void nonneg(const std::string& name, const QSeries& s, int from = 0) { sign_scan(name, s, from, false); }
    void positive(const std::string& name, const QSeries& s, int from = 0) { sign_scan(name, s, from, true); }

    template <class R>
    void zero(const std::string& name, const PowerSeries<R>& s) {
        if (s.precision() == 0) empty_ = true;
        for (int e = 0; e < s.precision(); ++e) {
            ++compared_;
            if (!is_zero(s[e])) {
                fail({name, std::nullopt, e, value_string(s[e]), "0"});
                return;
            }
        }
    }

    template <class R>
    void zero(const std::string& name, const Bivariate<R>& s) {
        equal(name, s, Bivariate<R>(s.qprec()));
    }

    // A scalar fact; lhs/rhs describe the two sides when it fails.
    void truth(const std::string& name, bool ok, const std::string& lhs = "", const std::string& rhs = "",
               long qexp = 0, std::optional<int> zexp = std::nullopt) {
        ++compared_;
        if (!ok) fail({name, zexp, qexp, lhs, rhs});
    }

private:
    void sign_scan(const std::string& name, const QSeries& s, int from, bool strict) {
        if (s.precision() <= from) empty_ = true;
        for (int e = from; e < s.precision(); ++e) {
            ++compared_;
            const int sg = sgn(s[e]);
            if (sg < 0 || (strict && sg == 0)) {
                fail({name, std::nullopt, e, s[e].get_str(), ""});
                return;
            }
        }
    }

    void fail(Witness w) {
        if (!witness_) witness_ = std::move(w);
    }

    std::optional<Witness> witness_;
    long compared_ = 0;
    bool empty_ = false;
    std::string note_;
};

}  // namespace qseries::detail
