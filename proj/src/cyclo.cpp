#include "qseries/cyclo.hpp"

#include <map>
#include <mutex>

namespace qseries {

namespace {

using Poly = std::vector<Integer>;

void trim_poly(Poly& p) {
    while (!p.empty() && is_zero(p.back())) p.pop_back();
}

// Exact quotient num / den over Z; den must be monic. Returns false on a remainder.
bool divide_monic(const Poly& num, const Poly& den, Poly& quot) {
    Poly rem = num;
    trim_poly(rem);
    const int dd = static_cast<int>(den.size()) - 1;
    if (static_cast<int>(rem.size()) - 1 < dd) {
        quot.clear();
        return rem.empty();
    }
    quot.assign(rem.size() - dd, Integer(0));
    for (int k = static_cast<int>(rem.size()) - 1; k >= dd; --k) {
        Integer c = rem[k];
        if (is_zero(c)) continue;
        quot[k - dd] = c;
        for (int i = 0; i <= dd; ++i) sub_product(rem[k - dd + i], c, den[i]);
    }
    trim_poly(rem);
    trim_poly(quot);
    return rem.empty();
}

Poly compute_cyclotomic(int a) {
    Poly p(a + 1, Integer(0));
    p[0] = -1;
    p[a] = 1;
    for (int d = 1; d < a; ++d) {
        if (a % d != 0) continue;
        Poly q;
        divide_monic(p, compute_cyclotomic(d), q);
        p = q;
    }
    return p;
}

}  // namespace

/// Immutable per-order data: the modulus and reductions of x^k, 0 <= k < 2*phi.
class CyclotomicRing {
public:
    explicit CyclotomicRing(int a) : order(a), modulus(compute_cyclotomic(a)) {
        phi = static_cast<int>(modulus.size()) - 1;
        const int kmax = std::max(2 * phi, a);
        powers.resize(kmax);
        // x^k mod Phi_a by repeated multiplication by x
        Poly cur(phi, Integer(0));
        cur[0] = 1;
        if (phi == 0) cur.clear();
        for (int k = 0; k < kmax; ++k) {
            powers[k] = cur;
            if (phi == 0) continue;
            Integer top = cur[phi - 1];
            for (int i = phi - 1; i > 0; --i) cur[i] = cur[i - 1];
            cur[0] = 0;
            // x^phi = -(m_0 + ... + m_{phi-1} x^{phi-1})
            if (!is_zero(top))
                for (int i = 0; i < phi; ++i) sub_product(cur[i], top, modulus[i]);
        }
    }

    static std::shared_ptr<const CyclotomicRing> get(int a) {
        if (a < 1) throw Error(Errc::invalid_argument, "cyclotomic order must be >= 1");
        static std::mutex mu;
        static std::map<int, std::shared_ptr<const CyclotomicRing>> memo;
        std::lock_guard lock(mu);
        auto& slot = memo[a];
        if (!slot) slot = std::make_shared<const CyclotomicRing>(a);
        return slot;
    }

    int order;
    int phi = 0;
    Poly modulus;
    std::vector<Poly> powers;
};

std::vector<Integer> cyclotomic_poly(int a) {
    if (a < 1) throw Error(Errc::invalid_argument, "cyclotomic_poly needs a >= 1");
    return CyclotomicRing::get(a)->modulus;
}

int euler_phi(int n) {
    if (n < 1) throw Error(Errc::invalid_argument, "euler_phi needs n >= 1");
    int result = n;
    int m = n;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        while (m % p == 0) m /= p;
        result -= result / p;
    }
    if (m > 1) result -= result / m;
    return result;
}

CycInt::CycInt(Integer value) {
    if (!is_zero(value)) c_.push_back(std::move(value));
}

CycInt CycInt::zero(int order) {
    CycInt z;
    z.ring_ = CyclotomicRing::get(order);
    return z;
}

CycInt CycInt::from_coeffs(int order, std::vector<Integer> coeffs) {
    CycInt r = zero(order);
    if (static_cast<int>(coeffs.size()) > r.ring_->phi)
        throw Error(Errc::invalid_argument, "too many coefficients for Z[zeta_" + std::to_string(order) + "]");
    r.c_ = std::move(coeffs);
    r.trim();
    return r;
}

int CycInt::order() const { return ring_ ? ring_->order : 0; }

std::vector<Integer> CycInt::coeffs() const {
    std::vector<Integer> out = c_;
    if (ring_) out.resize(ring_->phi, Integer(0));
    return out;
}

bool CycInt::is_rational_integer() const { return c_.size() <= 1; }

Integer CycInt::rational_value() const {
    if (!is_rational_integer()) throw Error(Errc::invalid_argument, "not a rational integer: " + to_string(*this));
    return c_.empty() ? Integer(0) : c_[0];
}

void CycInt::adopt(const CycInt& o) {
    if (!o.ring_) return;
    if (!ring_) {
        ring_ = o.ring_;
        return;
    }
    if (ring_->order != o.ring_->order)
        throw Error(Errc::order_mismatch, "Z[zeta_" + std::to_string(ring_->order) + "] vs Z[zeta_" +
                                              std::to_string(o.ring_->order) + "]");
}

void CycInt::trim() {
    while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
}

CycInt& CycInt::operator+=(const CycInt& o) {
    adopt(o);
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Integer(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

CycInt& CycInt::operator-=(const CycInt& o) {
    adopt(o);
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Integer(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

CycInt& CycInt::operator*=(const CycInt& o) {
    adopt(o);
    if (c_.empty() || o.c_.empty()) {
        c_.clear();
        return *this;
    }
    if (!ring_) {  // both plain integers
        c_[0] *= o.c_[0];
        return *this;
    }
    const int phi = ring_->phi;
    Poly out(phi, Integer(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (is_zero(c_[i])) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) {
            if (is_zero(o.c_[j])) continue;
            Integer prod = c_[i] * o.c_[j];
            const Poly& red = ring_->powers[i + j];
            for (int k = 0; k < phi; ++k)
                if (!is_zero(red[k])) add_product(out[k], prod, red[k]);
        }
    }
    c_ = std::move(out);
    trim();
    return *this;
}

CycInt CycInt::operator-() const {
    CycInt r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

bool operator==(const CycInt& a, const CycInt& b) {
    if (a.ring_ && b.ring_ && a.ring_->order != b.ring_->order) return false;
    return a.c_ == b.c_;
}

CycInt& CycInt::add_zeta_power(int k, const Integer& count) {
    if (!ring_) throw Error(Errc::invalid_argument, "add_zeta_power on an element without an order");
    const int a = ring_->order;
    const int r = ((k % a) + a) % a;
    const Poly& red = ring_->powers[r];
    if (c_.size() < red.size()) c_.resize(red.size(), Integer(0));
    for (std::size_t i = 0; i < red.size(); ++i)
        if (!is_zero(red[i])) add_product(c_[i], count, red[i]);
    trim();
    return *this;
}

bool is_zero(const CycInt& x) { return x.coeffs().empty() || x == CycInt(); }

std::string to_string(const CycInt& x) {
    const auto c = x.coeffs();
    std::string out;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (is_zero(c[i])) continue;
        if (!out.empty()) out += sgn(c[i]) < 0 ? " - " : " + ";
        else if (sgn(c[i]) < 0) out += "-";
        Integer a = abs(c[i]);
        if (i == 0)
            out += a.get_str();
        else {
            if (a != 1) out += a.get_str() + "*";
            out += "w" + (i > 1 ? "^" + std::to_string(i) : std::string());
        }
    }
    return out.empty() ? "0" : out;
}

void add_product(CycInt& acc, const CycInt& a, const CycInt& b) { acc += a * b; }

CycInt zeta_pow(int a, int k) { return CycInt::zero(a).add_zeta_power(k, Integer(1)); }

CycSeries lift(const QSeries& s) {
    CycSeries out(s.precision());
    for (int n = 0; n < s.precision(); ++n) out.at(n) = CycInt(s[n]);
    return out;
}

bool equals_integer_series(const CycSeries& s, const QSeries& t) {
    const int N = std::min(s.precision(), t.precision());
    for (int n = 0; n < N; ++n) {
        if (!s[n].is_rational_integer()) return false;
        if (s[n].rational_value() != t[n]) return false;
    }
    return true;
}

QSeries to_integer_series(const CycSeries& s) {
    QSeries out(s.precision());
    for (int n = 0; n < s.precision(); ++n) out.at(n) = s[n].rational_value();
    return out;
}

}  // namespace qseries
