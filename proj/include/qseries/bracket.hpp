#pragma once

// Symbolic products of Pochhammer factors, expanded after cancellation.

#include <optional>
#include <string>
#include <vector>

#include "qseries/bivar.hpp"
#include "qseries/integer.hpp"
#include "qseries/series.hpp"

namespace qseries {

/// (sigma z^s q^j; q^m)_count ^ power. count < 0 means the infinite product
/// (m >= 1 required); count = 1 is the single factor (1 - sigma z^s q^j).
struct PochFactor {
    int s = 0;
    int j = 0;
    int m = 1;
    int sigma = 1;
    int power = 1;
    int count = -1;
};

/// A product c * z^zc * q^qb * prod of PochFactor, c rational.
class BracketSpec {
public:
    BracketSpec() = default;

    // (sigma z^s q^j; q^m)_inf ^ power
    BracketSpec& poch(int s, int j, int m, int power = 1, int sigma = 1);
    // (sigma z^s q^j; q^m)_n ^ power
    BracketSpec& finite_poch(int s, int j, int m, int n, int power = 1, int sigma = 1);
    // [sigma z^s q^j; q^m]_inf ^ power = ((sigma z^s q^j; q^m)(sigma z^-s q^{m-j}; q^m))^power
    BracketSpec& bracket(int s, int j, int m, int power = 1, int sigma = 1);
    // (1 - sigma z^s q^j) ^ power
    BracketSpec& single(int s, int j, int power = 1, int sigma = 1);
    // E(q^k)^power
    BracketSpec& euler(int k, int power = 1);
    BracketSpec& monomial(int zc, int qb);
    BracketSpec& scale(const Integer& num, const Integer& den = Integer(1));

    BracketSpec& operator*=(const BracketSpec& o);
    friend BracketSpec operator*(BracketSpec a, const BracketSpec& b) { return a *= b; }
    friend BracketSpec operator/(BracketSpec a, const BracketSpec& b) { return a *= b.inverse(); }
    BracketSpec inverse() const;
    BracketSpec pow(int k) const;

    bool z_free() const;

    const std::vector<PochFactor>& factors() const { return factors_; }
    int z_exp() const { return zc_; }
    int q_exp() const { return qb_; }
    const Integer& num() const { return num_; }
    const Integer& den() const { return den_; }

    std::string describe() const;

private:
    std::vector<PochFactor> factors_;
    int zc_ = 0;
    int qb_ = 0;
    Integer num_ = 1;
    Integer den_ = 1;
};

/// z -> sigma z^zk q^r and q -> q^M, applied symbolically to every factor.
struct Substitution {
    int sigma = 1;
    int zk = 1;
    int r = 0;
    int M = 1;
};

BracketSpec substitute(const BracketSpec& spec, const Substitution& sub);

/// z -> sigma q^r, q -> q^M: the result has no z.
inline BracketSpec specialize(const BracketSpec& spec, int sigma, int r, int M = 1) {
    return substitute(spec, {sigma, 0, r, M});
}

/// Expands a bivariate product. Factors that cannot reach below q^qprec are
/// skipped; identical numerator and denominator factors cancel first. If the
/// q-offset-0 part N(z)/D(z) is a Laurent polynomial the result is Exact,
/// otherwise a window is required and the result is certified for z <= W.
ZqSeries expand_bracket_spec(const BracketSpec& spec, int qprec, std::optional<int> window = std::nullopt);

/// Expands a spec without z (e.g. after specialize()).
QSeries expand_univariate(const BracketSpec& spec, int qprec);

}  // namespace qseries
