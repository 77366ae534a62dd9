#pragma once

// A small expression language for eta quotients and bracket products.
//
//   expr   := term (('*' | '/') term)*
//   term   := factor ('^' int)?
//   factor := 'E' '(' 'q' ('^' int)? ')' | 'eta' '(' int ')'
//           | 'poch' '[' zmon ';' qstep ']' | 'bracket' '[' zmon ';' qstep ']'
//           | '(' expr ')' | int | zmon
//   zmon   := ('z' ('^' int)?)? ('q' ('^' int)?)?   at least one of z, q
//   qstep  := 'q' ('^' int)?
//
// int may carry a leading '-'. poch[z^s q^j; q^m] is (z^s q^j; q^m)_inf and
// bracket[z^s q^j; q^m] is [z^s q^j; q^m]_inf. Parentheses do not appear in
// the tree; print() inserts the ones needed to parse back to the same tree.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qseries/bracket.hpp"
#include "qseries/error.hpp"
#include "qseries/integer.hpp"
#include "qseries/series.hpp"

namespace qseries::dsl {

struct Expr {
    enum class Kind { Int, Eta, E, ZMon, Poch, Bracket, Mul, Div, Pow };

    Kind kind = Kind::Int;
    Integer value;      // Int
    int level = 0;      // Eta, E: k; Poch, Bracket: step m
    int s = 0;          // ZMon, Poch, Bracket: z-exponent
    int j = 0;          // ZMon, Poch, Bracket: q-exponent
    int exponent = 0;   // Pow
    std::vector<Expr> args;  // Mul, Div: {lhs, rhs}; Pow: {base}

    friend bool operator==(const Expr& a, const Expr& b);
};

/// Syntax error with a 1-based position and the tokens that would have been accepted.
class ParseError : public Error {
public:
    ParseError(int line, int column, std::vector<std::string> expected, const std::string& found);

    int line() const { return line_; }
    int column() const { return column_; }
    const std::vector<std::string>& expected() const { return expected_; }

private:
    int line_;
    int column_;
    std::vector<std::string> expected_;
};

/// Integers in exponent, level and step positions must satisfy |n| <= this.
inline constexpr long max_exponent = 1'000'000;

/// Throws ParseError, or Error(exponent_overflow) for out-of-range integers.
Expr parse(std::string_view text);

std::string print(const Expr& e);

struct Evaluated {
    BracketSpec spec;
    long prefactor24 = 0;              // sum of k * exponent over eta(k) nodes
    std::optional<EtaQuotient> eta;    // set when every leaf is eta(k)
};

Evaluated evaluate(const Expr& e);

}  // namespace qseries::dsl
