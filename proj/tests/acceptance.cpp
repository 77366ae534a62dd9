// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Usage: acceptance <path-to-qseries-cli>

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <json.hpp>
#include <random>
#include <sstream>

#include "qseries/dsl.hpp"
#include "qseries/partitions.hpp"
#include "qseries/verify.hpp"

using namespace qseries;

namespace {

struct Tally {
    long runs = 0;
    long compared = 0;
    std::vector<std::string> problems;

    void add(const IdentityReport& r, Verdict want) {
        ++runs;
        compared += r.compared;
        if (r.verdict != want || r.compared == 0) {
            std::ostringstream os;
            os << r.id;
            for (const auto& [k, v] : r.params) os << " " << k << "=" << v;
            os << " -> " << to_string(r.verdict);
            if (r.witness) os << " at q^" << r.witness->qexp;
            if (!r.note.empty()) os << " (" << r.note << ")";
            problems.push_back(os.str());
        }
    }
    void require(bool ok, const std::string& what) {
        ++runs;
        if (!ok) problems.push_back(what);
    }
    bool ok() const { return problems.empty(); }
};

Verdict expected(const std::string& id) { return find_entry(id).conjecture ? Verdict::Evidence : Verdict::Pass; }

IdentityReport run(Tally& t, const std::string& id, const Params& p, int qprec) {
    auto r = run_entry(id, p, qprec);
    t.add(r, expected(id));
    return r;
}

// the entry's default grid; qprec <= 0 uses its default order
void run_grid(Tally& t, const std::string& id, int qprec = 0) {
    const auto& e = find_entry(id);
    for (const auto& p : e.grid) run(t, id, p, qprec > 0 ? qprec : e.default_qprec);
}

using Criterion = Tally (*)();

Tally theorem1() {
    Tally t;
    for (int a = 2; a <= 6; ++a) run(t, "thm1", {{"a", a}}, 60);
    run(t, "cazq2", {}, 60);
    return t;
}

Tally theorem2() {
    Tally t;
    for (int a = 2; a <= 5; ++a) {
        for (int j = 0; j < a; ++j) {
            run(t, "thm2", {{"a", a}, {"j", j}}, 40);
            for (int k = 1; k < a; ++k) run(t, "vanishB", {{"a", a}, {"k", k}, {"j", j}}, 40);
        }
    }
    run_grid(t, "bzero0", 40);
    return t;
}

Tally klyachko() {
    Tally t;
    for (int s = 1; s <= 7; ++s) {
        run(t, "kid", {{"t", s}}, 80);
        run(t, "ckid", {{"t", s}}, 80);
    }
    return t;
}

Tally saito() {
    Tally t;
    for (int N = 1; N <= 60; ++N) run(t, "saito", {{"N", N}}, 200);
    for (auto [p, M] : std::vector<std::pair<int, int>>{{5, 3}, {2, 3}, {7, 5}}) run(t, "dprod", {{"p", p}, {"M", M}}, 60);
    run(t, "sprop", {{"p", 2}, {"alpha", 2}, {"M", 3}}, 40);  // N = 12
    run(t, "sprop", {{"p", 3}, {"alpha", 2}, {"M", 2}}, 40);  // N = 18
    return t;
}

Tally cores() {
    Tally t;
    for (int s = 1; s <= 7; ++s) run(t, "pcore1", {{"t", s}}, 26);
    for (int s = 4; s <= 7; ++s)
        for (int n = 1; n <= 25; ++n)
            t.require(count_t_cores(s, n) > 0, "a_" + std::to_string(s) + "(" + std::to_string(n) + ") = 0");
    return t;
}

Tally crank() {
    Tally t;
    run(t, "crankgen", {}, 21);
    const auto g = run(t, "crankgen-nonneg", {}, 30);
    t.require(g.note.find("(z^0,q^1)") != std::string::npos, "crankgen exception set not reported");
    run(t, "crank5c", {}, 9);
    const auto b = run(t, "crank11b", {}, 9);
    t.require(b.note.find("n = 3") != std::string::npos, "crank11b exception at n = 3 not reported");
    return t;
}

Tally gqpi() {
    Tally t;
    for (int a = 1; a <= 5; ++a) run(t, "gqpib", {{"a", a}}, 50);
    run(t, "quin", {}, 50);
    for (const char* id : {"phitrans2", "cafe", "rafe", "fjfe", "f0fe", "phitrans"}) {
        for (const auto& p : find_entry(id).grid)
            if (p.at("a") <= 5) run(t, id, p, 40);
    }
    return t;
}

Tally section4() {
    Tally t;
    for (const char* id : {"atq", "atqfin", "coratq1", "aci", "zq", "res1", "res2", "res2b", "res2c", "res2d", "res2e",
                           "ekinid1", "ekinid2", "eta1a", "eta1b", "bev", "bodd", "eta1aid", "eta1bid", "eta2",
                           "eta2id1", "eta2id2", "eta2alt", "vn"})
        run_grid(t, id, 40);
    run(t, "ekinit", {{"depth", 5}}, 32);
    return t;
}

Tally conjecture2() {
    Tally t;
    for (char c = 'a'; c <= 'h'; ++c) {
        const std::string id = std::string("conj2") + c;
        t.require(find_entry(id).conjecture, id + " is not reported as evidence");
        run_grid(t, id, 60);
    }
    for (const char* id : {"conj2c3", "conj2c4", "conj2e2", "conj2f2", "conj2g2", "conj2ea"}) run_grid(t, id, 40);
    return t;
}

// ---- infrastructure ---------------------------------------------------------

QSeries random_series(std::mt19937& rng, int n) {
    std::uniform_int_distribution<int> d(-9, 9);
    std::vector<Integer> c(n);
    for (auto& x : c) x = d(rng);
    return QSeries(std::move(c));
}

dsl::Expr random_expr(std::mt19937& rng, int depth) {
    auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    using K = dsl::Expr::Kind;
    dsl::Expr e;
    if (depth == 0 || pick(0, 3) == 0) {
        const K leaves[] = {K::Int, K::Eta, K::E, K::ZMon, K::Poch, K::Bracket};
        e.kind = leaves[pick(0, 5)];
        e.value = pick(-3, 30);
        e.level = e.kind == K::Int || e.kind == K::ZMon ? 0 : pick(1, 9);
        if (e.kind == K::ZMon || e.kind == K::Poch || e.kind == K::Bracket) {
            e.s = pick(-3, 3);
            e.j = pick(-3, 3);
        }
        if (e.kind != K::Int) e.value = 0;
        return e;
    }
    const int k = pick(0, 2);
    e.kind = k == 0 ? K::Mul : k == 1 ? K::Div : K::Pow;
    if (e.kind == K::Pow) {
        e.exponent = pick(-5, 5);
        e.args = {random_expr(rng, depth - 1)};
    } else {
        e.args = {random_expr(rng, depth - 1), random_expr(rng, depth - 1)};
    }
    return e;
}

std::string run_cli(const std::string& cmd, int& status) {
    std::string out;
    FILE* f = popen(cmd.c_str(), "r");
    if (!f) {
        status = -1;
        return out;
    }
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), f)) > 0) out.append(buf.data(), n);
    status = pclose(f);
    return out;
}

std::string g_cli;

Tally infrastructure() {
    Tally t;
    std::mt19937 rng(1234567);
    for (int i = 0; i < 200; ++i) {
        const int N = 1 + i % 25;
        const auto a = random_series(rng, N), b = random_series(rng, N), c = random_series(rng, N);
        const bool ok = (a * b) * c == a * (b * c) && a * b == b * a && a * (b + c) == a * b + a * c &&
                        (a + b) - b == a;
        t.require(ok, "ring law failed at trial " + std::to_string(i));
    }
    run_grid(t, "qadef");
    run_grid(t, "qdiff");
    run_grid(t, "qdiff0");
    for (int i = 0; i < 1000; ++i) {
        const auto e = random_expr(rng, 4);
        const auto text = dsl::print(e);
        t.require(dsl::parse(text) == e, "round trip failed for " + text);
    }
    if (g_cli.empty()) {
        t.require(false, "no CLI path given for the JSON check");
        return t;
    }
    for (const char* expr : {"E(q)", "E(q^5)^5 / E(q)", "bracket[z; q] * E(q)", "eta(2)^3 * poch[z q; q^2]"}) {
        const std::string cmd = "'" + g_cli + "' expand '" + expr + "' --order 12 --json";
        int s1 = 0, s2 = 0;
        const auto a = run_cli(cmd, s1), b = run_cli(cmd, s2);
        t.require(s1 == 0 && s2 == 0, std::string("expand failed for ") + expr);
        t.require(!a.empty() && a == b, std::string("JSON differs between runs for ") + expr);
        try {
            const auto j = nlohmann::json::parse(a);
            t.require(j.dump() + "\n" == a || j.dump() == a, std::string("JSON not canonical for ") + expr);
        } catch (const std::exception&) {
            t.require(false, std::string("JSON does not parse for ") + expr);
        }
    }
    return t;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc > 1) g_cli = argv[1];
    const std::vector<std::pair<const char*, Criterion>> criteria = {
        {"lattice sum equals product, a = 2..6, order 60", theorem1},
        {"cyclotomic theta identity, vanishing at z = q^k, a = 2..5, order 40", theorem2},
        {"zero-sum lattice identities t = 1..7, order 80", klyachko},
        {"Saito products nonnegative N <= 60 order 200, factorizations", saito},
        {"t-core counts equal E(q^t)^t/E(q), positivity t = 4..7", cores},
        {"crank generating function and residue inequalities", crank},
        {"generalized quintuple identity and functional equations", gqpi},
        {"product and sum propositions, order >= 40", section4},
        {"second conjecture evidence scan and proved subcases", conjecture2},
        {"ring laws, enumeration, parser round trip, stable JSON", infrastructure},
    };
    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Tally t;
        try {
            t = criteria[i].second();
        } catch (const std::exception& e) {
            t.problems.push_back(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s criterion %zu: %s (%ld checks, %ld coefficients, %.1fs)\n", t.ok() ? "PASS" : "FAIL", i + 1,
                    criteria[i].first, t.runs, t.compared, secs);
        for (const auto& p : t.problems) std::printf("    %s\n", p.c_str());
        all = all && t.ok();
    }
    return all ? 0 : 1;
}
