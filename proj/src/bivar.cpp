#include "qseries/bivar.hpp"

#include <sstream>

namespace qseries {

namespace {

using Side = GrowthBound::Side;
using Kind = GrowthBound::Side::Kind;

Side linear_side(mpq_class slope) {
    if (sgn(slope) < 0) return {Kind::unknown, 0};
    return {Kind::linear, std::move(slope)};
}

// min over the non-empty sides; unknown if any of them is unknown
Side min_of(std::initializer_list<const Side*> sides) {
    Side out{Kind::empty, 0};
    for (const Side* s : sides) {
        if (s->kind == Kind::empty) continue;
        if (s->kind == Kind::unknown) return {Kind::unknown, 0};
        if (out.kind == Kind::empty || s->slope < out.slope) out = *s;
    }
    return out;
}

mpq_class clamp0(mpq_class x) { return sgn(x) < 0 ? mpq_class(0) : x; }

}  // namespace

GrowthBound GrowthBound::unknown() {
    GrowthBound g;
    g.neg = {Kind::unknown, 0};
    g.pos = {Kind::unknown, 0};
    return g;
}

GrowthBound GrowthBound::linear(mpq_class neg_slope, mpq_class pos_slope, mpq_class offset) {
    GrowthBound g;
    g.neg = linear_side(std::move(neg_slope));
    g.pos = linear_side(std::move(pos_slope));
    g.offset = clamp0(std::move(offset));
    return g;
}

GrowthBound GrowthBound::times(const GrowthBound& o) const {
    // A product term with d < 0 needs a negative-side term in some factor,
    // and its bound can involve any side of either factor.
    const Side all = min_of({&neg, &pos, &o.neg, &o.pos});
    GrowthBound g;
    const bool any_neg = neg.kind != Kind::empty || o.neg.kind != Kind::empty;
    const bool any_pos = pos.kind != Kind::empty || o.pos.kind != Kind::empty;
    g.neg = any_neg ? all : Side{};
    g.pos = any_pos ? all : Side{};
    g.offset = offset + o.offset;
    return g;
}

GrowthBound GrowthBound::plus(const GrowthBound& o) const {
    GrowthBound g;
    g.neg = min_of({&neg, &o.neg});
    g.pos = min_of({&pos, &o.pos});
    g.offset = offset > o.offset ? offset : o.offset;
    return g;
}

GrowthBound GrowthBound::monomial(int zc, int qb) const {
    GrowthBound g = *this;
    if (zc == 0) {
        g.offset = clamp0(offset - qb);
        return g;
    }
    if (neg.kind == Kind::empty && pos.kind == Kind::empty) {
        // only z^0 terms, moved to z^zc with e >= 0
        g.neg = zc < 0 ? Side{Kind::linear, 0} : Side{};
        g.pos = zc > 0 ? Side{Kind::linear, 0} : Side{};
        g.offset = 0;
        return g;
    }
    Side m = min_of({&neg, &pos});
    if (m.kind == Kind::unknown) return unknown();
    // z^0 terms also move, so both sides may become populated
    g.neg = m;
    g.pos = m;
    g.offset = clamp0(offset + m.slope * std::abs(zc) - qb);
    return g;
}

GrowthBound GrowthBound::shift_z(int k) const {
    GrowthBound g = *this;
    if (neg.kind == Kind::linear) g.neg = linear_side(neg.slope - k);
    if (pos.kind == Kind::linear) g.pos = linear_side(pos.slope + k);
    return g;
}

GrowthBound GrowthBound::subst_q(int m) const {
    GrowthBound g = *this;
    if (g.neg.kind == Kind::linear) g.neg.slope *= m;
    if (g.pos.kind == Kind::linear) g.pos.slope *= m;
    g.offset *= m;
    return g;
}

GrowthBound GrowthBound::factor(int s, int e) {
    GrowthBound g;
    if (s == 0) return g;
    // terms z^{s k} q^{e k}, k >= 0
    if (e < 0) return unknown();
    Side side{Kind::linear, mpq_class(e, std::abs(s))};
    side.slope.canonicalize();
    if (s < 0)
        g.neg = side;
    else
        g.pos = side;
    return g;
}

int monomial_specialization_precision(int qprec, const std::optional<int>& window, const GrowthBound& g, int r,
                                      int q_shift) {
    long P = static_cast<long>(qprec) + q_shift;
    if (window) P = std::min(P, static_cast<long>(r) * (*window + 1) + q_shift);
    switch (g.neg.kind) {
    case Kind::empty: break;
    case Kind::unknown:
        throw Error(Errc::insufficient_window, "z -> q^r: no growth bound for negative z-degrees");
    case Kind::linear: {
        const mpq_class& s = g.neg.slope;
        if (s <= r)
            throw Error(Errc::insufficient_window, "z -> q^r: growth slope " + s.get_str() + " does not exceed r = " +
                                                       std::to_string(r));
        // a term beyond the truncation (e >= qprec, d < 0) lands at
        // E >= (qprec (s - r) - r offset) / s + q_shift
        mpq_class lower = (mpq_class(qprec) * (s - r) - r * g.offset) / s;
        mpz_class c;
        mpz_cdiv_q(c.get_mpz_t(), lower.get_num_mpz_t(), lower.get_den_mpz_t());
        P = std::min(P, c.get_si() + q_shift);
        break;
    }
    }
    return static_cast<int>(std::max(P, 0L));
}

namespace {

template <class R>
CycSeries root_of_unity_impl(const Bivariate<R>& s, int a, int k) {
    if (a < 1) throw Error(Errc::invalid_argument, "root of unity order must be >= 1");
    if (!s.exact()) throw Error(Errc::insufficient_window, "z -> zeta needs an exact series");
    if (s.tilted() || !s.negative_terms().empty())
        throw Error(Errc::insufficient_window, "z -> zeta needs an unshifted series");
    CycSeries out(s.qprec());
    std::vector<CycInt> zp;
    zp.reserve(a);
    for (int i = 0; i < a; ++i) zp.push_back(zeta_pow(a, i));
    for (int e = 0; e < s.qprec(); ++e) {
        CycInt acc = CycInt::zero(a);
        const auto& row = s.row(e);
        if (!row.empty())
            for (int d = row.lo(); d <= row.hi(); ++d) {
                const auto& c = row[d];
                if (is_zero(c)) continue;
                const long idx = ((static_cast<long>(k) * d) % a + a) % a;
                acc += CycInt(c) * zp[idx];
            }
        out.at(e) = acc;
    }
    return out;
}

}  // namespace

CycSeries specialize_root_of_unity(const ZqSeries& s, int a, int k) { return root_of_unity_impl(s, a, k); }
CycSeries specialize_root_of_unity(const CycZqSeries& s, int a, int k) { return root_of_unity_impl(s, a, k); }

CycZqSeries lift(const ZqSeries& s) {
    if (s.tilted() || !s.negative_terms().empty())
        throw Error(Errc::invalid_argument, "lift of a shifted series");
    CycZqSeries out(s.qprec());
    for (int e = 0; e < s.qprec(); ++e) {
        const auto& row = s.row(e);
        if (row.empty()) continue;
        auto& dst = out.row_mut(e);
        for (int d = row.lo(); d <= row.hi(); ++d)
            if (!is_zero(row[d])) dst.at(d) = CycInt(row[d]);
    }
    out.set_window(s.window());
    out.set_growth(s.growth());
    return out;
}

NonnegResult nonneg_scan(const ZqSeries& s, std::optional<int> zlimit) {
    NonnegResult res;
    s.for_each_certified([&](int d, int e, const Integer& v) {
        if (!res.ok) return;
        if (zlimit && std::abs(d) > *zlimit) return;
        ++res.scanned;
        if (sgn(v) < 0) {
            res.ok = false;
            res.zexp = d;
            res.qexp = e;
            res.value = v;
        }
    });
    return res;
}

std::vector<std::pair<int, int>> negative_coordinates(const ZqSeries& s, std::optional<int> zlimit) {
    std::vector<std::pair<int, int>> out;
    s.for_each_certified([&](int d, int e, const Integer& v) {
        if (zlimit && std::abs(d) > *zlimit) return;
        if (sgn(v) < 0) out.emplace_back(d, e);
    });
    return out;
}

std::string to_string(const ZqSeries& s) {
    std::ostringstream os;
    bool first = true;
    s.for_each_certified([&](int d, int e, const Integer& v) {
        if (is_zero(v)) return;
        os << (first ? "" : " + ") << "(" << v.get_str() << ")";
        if (d != 0) os << "*z^" << d;
        if (e != 0) os << "*q^" << e;
        first = false;
    });
    if (first) os << "0";
    os << " + O(q^" << s.qprec() << ")";
    if (s.window()) os << " [z <= " << *s.window() << "]";
    return os.str();
}

}  // namespace qseries
