#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "qseries/dsl.hpp"

using namespace qseries;
using qseries::dsl::Expr;

namespace {

Expr leaf(std::mt19937& rng) {
    auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    Expr e;
    switch (pick(0, 5)) {
        case 0:
            e.kind = Expr::Kind::Int;
            e.value = pick(-5, 40);
            break;
        case 1:
            e.kind = Expr::Kind::Eta;
            e.level = pick(1, 12);
            break;
        case 2:
            e.kind = Expr::Kind::E;
            e.level = pick(1, 12);
            break;
        case 3:
            e.kind = Expr::Kind::ZMon;
            e.s = pick(-3, 3);
            e.j = pick(-3, 3);
            break;
        default:
            e.kind = pick(0, 1) ? Expr::Kind::Poch : Expr::Kind::Bracket;
            e.s = pick(-3, 3);
            e.j = pick(-3, 3);
            e.level = pick(1, 6);
            break;
    }
    return e;
}

Expr random_expr(std::mt19937& rng, int depth) {
    auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    if (depth == 0 || pick(0, 3) == 0) return leaf(rng);
    Expr e;
    const int k = pick(0, 2);
    if (k == 2) {
        e.kind = Expr::Kind::Pow;
        e.exponent = pick(-4, 4);
        e.args = {random_expr(rng, depth - 1)};
    } else {
        e.kind = k ? Expr::Kind::Div : Expr::Kind::Mul;
        e.args = {random_expr(rng, depth - 1), random_expr(rng, depth - 1)};
    }
    return e;
}

dsl::ParseError parse_error(const std::string& text) {
    try {
        dsl::parse(text);
    } catch (const dsl::ParseError& e) {
        return e;
    }
    FAIL("no syntax error for " << text);
    throw;
}

}  // namespace

TEST_CASE("parse examples") {
    const auto q5 = dsl::parse("E(q^5)^5 / E(q)");
    REQUIRE(q5.kind == Expr::Kind::Div);
    CHECK(q5.args[0].kind == Expr::Kind::Pow);
    CHECK(q5.args[0].exponent == 5);
    CHECK(q5.args[0].args[0].level == 5);
    CHECK(q5.args[1].kind == Expr::Kind::E);
    CHECK(q5.args[1].level == 1);

    const auto br = dsl::parse("bracket[z; q] * E(q)");
    REQUIRE(br.kind == Expr::Kind::Mul);
    CHECK(br.args[0].kind == Expr::Kind::Bracket);
    CHECK(br.args[0].s == 1);
    CHECK(br.args[0].j == 0);
    CHECK(br.args[0].level == 1);

    const auto z = dsl::parse("z^-2 q^3");
    CHECK(z.kind == Expr::Kind::ZMon);
    CHECK(z.s == -2);
    CHECK(z.j == 3);

    // '*' and '/' associate to the left
    const auto chain = dsl::parse("E(q) / E(q^2) * E(q^3)");
    CHECK(chain.kind == Expr::Kind::Mul);
    CHECK(chain.args[0].kind == Expr::Kind::Div);
}

TEST_CASE("evaluation") {
    const auto q5 = dsl::evaluate(dsl::parse("E(q^5)^5 / E(q)"));
    CHECK(expand_univariate(q5.spec, 40) ==
          QSeries(oracle::mul(oracle::euler_power(5, 5, 40), oracle::euler_power(1, -1, 40))));
    CHECK(q5.prefactor24 == 0);
    CHECK_FALSE(q5.eta);

    const auto e3 = dsl::evaluate(dsl::parse("eta(2)^3"));
    CHECK(e3.prefactor24 == 6);
    REQUIRE(e3.eta);
    CHECK(*e3.eta == EtaQuotient::eta(2, 3));

    const auto mixed = dsl::evaluate(dsl::parse("eta(5)^5 / eta(1)"));
    CHECK(mixed.prefactor24 == 24);

    BracketSpec want;
    want.bracket(1, 0, 1).euler(1);
    const auto br = dsl::evaluate(dsl::parse("bracket[z; q] * E(q)"));
    CHECK(!first_mismatch(expand_bracket_spec(br.spec, 20), expand_bracket_spec(want, 20)));

    const auto three = dsl::evaluate(dsl::parse("3 * poch[q; q^2]"));
    CHECK(expand_univariate(three.spec, 10) == pochhammer_inf(1, 2, 10).scaled(Integer(3)));
}

TEST_CASE("print then parse is the identity") {
    std::mt19937 rng(424242);
    for (int i = 0; i < 2000; ++i) {
        const Expr e = random_expr(rng, 4);
        const std::string text = dsl::print(e);
        CAPTURE(text);
        CHECK(dsl::parse(text) == e);
        CHECK(dsl::print(dsl::parse(text)) == text);
    }
}

TEST_CASE("syntax errors carry a position and the expected tokens") {
    {
        const auto e = parse_error("E(q");
        CHECK(e.line() == 1);
        CHECK(e.column() == 4);
        CHECK(e.expected() == std::vector<std::string>{"')'"});
        CHECK(e.code() == Errc::syntax_error);
    }
    {
        const auto e = parse_error("E(q) *\n  / E(q)");
        CHECK(e.line() == 2);
        CHECK(e.column() == 3);
        CHECK(e.expected().size() == 8);
        CHECK(std::find(e.expected().begin(), e.expected().end(), "'eta'") != e.expected().end());
    }
    {
        const auto e = parse_error("bracket[; q]");
        CHECK(e.column() == 9);
        CHECK(e.expected() == std::vector<std::string>{"'z'", "'q'"});
    }
    {
        const auto e = parse_error("E(q) E(q)");
        CHECK(e.column() == 6);
    }
    CHECK(parse_error("eta(0)").column() == 5);
    CHECK(parse_error("E(q) # 2").column() == 6);
}

TEST_CASE("exponent overflow") {
    CHECK_NOTHROW(dsl::parse("E(q)^1000000"));
    try {
        dsl::parse("E(q)^1000001");
        FAIL("expected overflow");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::exponent_overflow);
    }
    CHECK_THROWS_AS(dsl::parse("eta(99999999999999999999)"), Error);
    // integer literals themselves are unbounded
    CHECK(dsl::parse("123456789012345678901234567890").value == Integer("123456789012345678901234567890"));
}
