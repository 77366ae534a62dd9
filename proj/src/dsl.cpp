#include "qseries/dsl.hpp"

#include <cctype>

namespace qseries::dsl {

bool operator==(const Expr& a, const Expr& b) {
    return a.kind == b.kind && a.value == b.value && a.level == b.level && a.s == b.s && a.j == b.j &&
           a.exponent == b.exponent && a.args == b.args;
}

namespace {

std::string join(const std::vector<std::string>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + v[i];
    return out;
}

}  // namespace

ParseError::ParseError(int line, int column, std::vector<std::string> expected, const std::string& found)
    : Error(Errc::syntax_error, std::to_string(line) + ":" + std::to_string(column) + ": expected one of " +
                                    join(expected) + ", found " + found),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

namespace {

enum class Tok { Int, E, Eta, Poch, Bracket, Z, Q, LParen, RParen, LBrack, RBrack, Semi, Caret, Star, Slash, End };

struct Token {
    Tok kind;
    std::string text;
    int line;
    int column;
};

std::string quoted(Tok t) {
    switch (t) {
        case Tok::Int: return "integer";
        case Tok::E: return "'E'";
        case Tok::Eta: return "'eta'";
        case Tok::Poch: return "'poch'";
        case Tok::Bracket: return "'bracket'";
        case Tok::Z: return "'z'";
        case Tok::Q: return "'q'";
        case Tok::LParen: return "'('";
        case Tok::RParen: return "')'";
        case Tok::LBrack: return "'['";
        case Tok::RBrack: return "']'";
        case Tok::Semi: return "';'";
        case Tok::Caret: return "'^'";
        case Tok::Star: return "'*'";
        case Tok::Slash: return "'/'";
        case Tok::End: return "end of input";
    }
    return "?";
}

std::vector<Token> lex(std::string_view src) {
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k, ++i) {
            if (src[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };
    auto starts = [&](std::string_view w) { return src.substr(i, w.size()) == w; };
    while (i < src.size()) {
        const char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        const int l = line, cl = col;
        auto push = [&](Tok t, std::size_t n) {
            out.push_back({t, std::string(src.substr(i, n)), l, cl});
            advance(n);
        };
        const bool neg_digit = c == '-' && i + 1 < src.size() && std::isdigit(static_cast<unsigned char>(src[i + 1]));
        if (std::isdigit(static_cast<unsigned char>(c)) || neg_digit) {
            std::size_t n = 1;
            while (i + n < src.size() && std::isdigit(static_cast<unsigned char>(src[i + n]))) ++n;
            push(Tok::Int, n);
        } else if (starts("eta")) {
            push(Tok::Eta, 3);
        } else if (starts("poch")) {
            push(Tok::Poch, 4);
        } else if (starts("bracket")) {
            push(Tok::Bracket, 7);
        } else {
            Tok t;
            switch (c) {
                case 'E': t = Tok::E; break;
                case 'z': t = Tok::Z; break;
                case 'q': t = Tok::Q; break;
                case '(': t = Tok::LParen; break;
                case ')': t = Tok::RParen; break;
                case '[': t = Tok::LBrack; break;
                case ']': t = Tok::RBrack; break;
                case ';': t = Tok::Semi; break;
                case '^': t = Tok::Caret; break;
                case '*': t = Tok::Star; break;
                case '/': t = Tok::Slash; break;
                default:
                    throw ParseError(l, cl, {"expression"}, "'" + std::string(1, c) + "'");
            }
            push(t, 1);
        }
    }
    out.push_back({Tok::End, "", line, col});
    return out;
}

const std::vector<Tok> factor_starts = {Tok::E,      Tok::Eta, Tok::Poch, Tok::Bracket,
                                        Tok::LParen, Tok::Int, Tok::Z,    Tok::Q};

class Parser {
public:
    explicit Parser(std::vector<Token> toks) : t_(std::move(toks)) {}

    Expr parse_all() {
        Expr e = expr();
        if (peek().kind != Tok::End) fail({Tok::Star, Tok::Slash, Tok::Caret, Tok::End});
        return e;
    }

private:
    const Token& peek() const { return t_[pos_]; }

    [[noreturn]] void fail(std::vector<Tok> expected) const {
        std::vector<std::string> names;
        for (Tok k : expected) names.push_back(quoted(k));
        const auto& t = peek();
        throw ParseError(t.line, t.column, names, t.kind == Tok::End ? quoted(Tok::End) : "'" + t.text + "'");
    }

    bool accept(Tok k) {
        if (peek().kind != k) return false;
        ++pos_;
        return true;
    }

    void expect(Tok k) {
        if (!accept(k)) fail({k});
    }

    Integer integer() {
        if (peek().kind != Tok::Int) fail({Tok::Int});
        Integer v(t_[pos_++].text);
        return v;
    }

    int small_int() {
        const auto& t = peek();
        Integer v = integer();
        if (abs(v) > max_exponent)
            throw Error(Errc::exponent_overflow, std::to_string(t.line) + ":" + std::to_string(t.column) + ": " +
                                                     t.text + " exceeds " + std::to_string(max_exponent));
        return static_cast<int>(v.get_si());
    }

    int positive_int() {
        const auto& t = peek();
        const int v = small_int();
        if (v < 1) throw ParseError(t.line, t.column, {"positive integer"}, "'" + t.text + "'");
        return v;
    }

    int optional_power(int fallback) { return accept(Tok::Caret) ? small_int() : fallback; }

    Expr expr() {
        Expr lhs = term();
        for (;;) {
            Expr::Kind k;
            if (accept(Tok::Star))
                k = Expr::Kind::Mul;
            else if (accept(Tok::Slash))
                k = Expr::Kind::Div;
            else
                return lhs;
            Expr node;
            node.kind = k;
            node.args = {std::move(lhs), term()};
            lhs = std::move(node);
        }
    }

    Expr term() {
        Expr base = factor();
        if (!accept(Tok::Caret)) return base;
        Expr node;
        node.kind = Expr::Kind::Pow;
        node.exponent = small_int();
        node.args = {std::move(base)};
        return node;
    }

    Expr zmon() {
        Expr e;
        e.kind = Expr::Kind::ZMon;
        bool any = false;
        if (accept(Tok::Z)) {
            e.s = optional_power(1);
            any = true;
        }
        if (accept(Tok::Q)) {
            e.j = optional_power(1);
            any = true;
        }
        if (!any) fail({Tok::Z, Tok::Q});
        return e;
    }

    int qstep() {
        expect(Tok::Q);
        return accept(Tok::Caret) ? positive_int() : 1;
    }

    Expr factor() {
        Expr e;
        switch (peek().kind) {
            case Tok::E:
                ++pos_;
                expect(Tok::LParen);
                expect(Tok::Q);
                e.kind = Expr::Kind::E;
                e.level = accept(Tok::Caret) ? positive_int() : 1;
                expect(Tok::RParen);
                return e;
            case Tok::Eta:
                ++pos_;
                expect(Tok::LParen);
                e.kind = Expr::Kind::Eta;
                e.level = positive_int();
                expect(Tok::RParen);
                return e;
            case Tok::Poch:
            case Tok::Bracket: {
                e.kind = peek().kind == Tok::Poch ? Expr::Kind::Poch : Expr::Kind::Bracket;
                ++pos_;
                expect(Tok::LBrack);
                const Expr m = zmon();
                e.s = m.s;
                e.j = m.j;
                expect(Tok::Semi);
                e.level = qstep();
                expect(Tok::RBrack);
                return e;
            }
            case Tok::LParen: {
                ++pos_;
                Expr inner = expr();
                if (!accept(Tok::RParen)) fail({Tok::Star, Tok::Slash, Tok::Caret, Tok::RParen});
                return inner;
            }
            case Tok::Int:
                e.kind = Expr::Kind::Int;
                e.value = integer();
                return e;
            case Tok::Z:
            case Tok::Q:
                return zmon();
            default:
                fail(factor_starts);
        }
    }

    std::vector<Token> t_;
    std::size_t pos_ = 0;
};

std::string power_suffix(int e) { return e == 1 ? "" : "^" + std::to_string(e); }

std::string zmon_string(int s, int j) {
    std::string out;
    if (s != 0) out += "z" + power_suffix(s);
    if (j != 0) out += (out.empty() ? "" : " ") + std::string("q") + power_suffix(j);
    return out.empty() ? "q^0" : out;
}

bool is_chain(const Expr& e) { return e.kind == Expr::Kind::Mul || e.kind == Expr::Kind::Div; }

}  // namespace

Expr parse(std::string_view text) { return Parser(lex(text)).parse_all(); }

std::string print(const Expr& e) {
    using K = Expr::Kind;
    switch (e.kind) {
        case K::Int: return e.value.get_str();
        case K::Eta: return "eta(" + std::to_string(e.level) + ")";
        case K::E: return "E(q" + power_suffix(e.level) + ")";
        case K::ZMon: return zmon_string(e.s, e.j);
        case K::Poch:
        case K::Bracket:
            return std::string(e.kind == K::Poch ? "poch[" : "bracket[") + zmon_string(e.s, e.j) + "; q" +
                   power_suffix(e.level) + "]";
        case K::Mul:
        case K::Div: {
            const auto& r = e.args[1];
            const std::string rhs = is_chain(r) ? "(" + print(r) + ")" : print(r);
            return print(e.args[0]) + (e.kind == K::Mul ? " * " : " / ") + rhs;
        }
        case K::Pow: {
            const auto& b = e.args[0];
            const bool wrap = is_chain(b) || b.kind == K::Pow || b.kind == K::ZMon;
            return (wrap ? "(" + print(b) + ")" : print(b)) + "^" + std::to_string(e.exponent);
        }
    }
    return "";
}

Evaluated evaluate(const Expr& e) {
    using K = Expr::Kind;
    Evaluated out;
    switch (e.kind) {
        case K::Int:
            out.spec.scale(e.value);
            break;
        case K::Eta:
            out.spec.euler(e.level);
            out.prefactor24 = e.level;
            out.eta = EtaQuotient::eta(e.level);
            break;
        case K::E:
            out.spec.euler(e.level);
            break;
        case K::ZMon:
            out.spec.monomial(e.s, e.j);
            break;
        case K::Poch:
            out.spec.poch(e.s, e.j, e.level);
            break;
        case K::Bracket:
            out.spec.bracket(e.s, e.j, e.level);
            break;
        case K::Mul:
        case K::Div: {
            const auto a = evaluate(e.args[0]);
            const auto b = evaluate(e.args[1]);
            const bool mul = e.kind == K::Mul;
            out.spec = mul ? a.spec * b.spec : a.spec / b.spec;
            out.prefactor24 = mul ? a.prefactor24 + b.prefactor24 : a.prefactor24 - b.prefactor24;
            if (a.eta && b.eta) out.eta = mul ? *a.eta * *b.eta : *a.eta * b.eta->inverse();
            break;
        }
        case K::Pow: {
            const auto a = evaluate(e.args[0]);
            out.spec = a.spec.pow(e.exponent);
            out.prefactor24 = a.prefactor24 * e.exponent;
            if (a.eta) out.eta = a.eta->pow(e.exponent);
            break;
        }
    }
    return out;
}

}  // namespace qseries::dsl
