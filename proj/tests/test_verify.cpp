#include <doctest.h>

#include <json.hpp>
#include <set>

#include "qseries/verify.hpp"

using namespace qseries;

namespace {

const std::vector<std::string> kLabels = {
    "etadef",  "setaproddef", "conj1",   "Edef",     "pcore1",   "Sp",       "kid",      "ckid",     "Cazq",
    "Cazq2",   "Bjazq",       "Radef",   "Rafe",     "Qadef",    "Fjdef",    "Qdiff",    "Fjm1",     "Fjfe",
    "F0fe",    "Qdiff0",      "Casum",   "Cafe",     "Cazqzero", "Ca1",      "Phitrans", "Bzero0",   "Bzero1",
    "Eprop",   "Eep",         "epsimp",  "SNdef",    "Case1",    "Eprod",    "Eprod2",   "Dazq",     "Dprod",
    "Eprop2",  "Sprop",       "atq",     "coratq1",  "gpdef",    "atqfin",   "zq",       "crankgen", "aci",
    "tcore",   "quin",        "gqpi",    "gqpib",    "jactrans", "Phitrans2", "EkinId1", "EkinId2",  "EkinIt",
    "corgqpi1", "gqpic",      "crank5a", "crank5b",  "crank5c",  "crank11a", "crank11b", "res1",     "res2",
    "res2b",   "res2c",       "res2d",   "res2e",    "eta1a",    "eta1b",    "Bev",      "eta1aid",  "Bodd",
    "eta1bid", "eta2",        "eta2id1", "Vn",       "eta2id2",  "eta2alt",  "conj2a",   "conj2b",   "conj2c",
    "conj2d",  "conj2e",      "conj2f",  "conj2g",   "conj2h",   "conj2c3",  "conj2c4",  "conj2ea",  "conj2e2",
    "conj2f2", "conj2g2",
};

bool same_report(const IdentityReport& a, const IdentityReport& b) {
    auto key = [](const IdentityReport& r) {
        std::string w;
        if (r.witness)
            w = r.witness->check + "|" + (r.witness->zexp ? std::to_string(*r.witness->zexp) : "-") + "|" +
                std::to_string(r.witness->qexp) + "|" + r.witness->lhs + "|" + r.witness->rhs;
        return std::tuple(r.id, r.params, r.qprec, r.window, r.verdict, w, r.compared, r.note);
    };
    return key(a) == key(b);
}

}  // namespace

TEST_CASE("every label maps to exactly one entry") {
    const auto m = nlohmann::json::parse(manifest_json());
    std::map<std::string, int> owners;
    std::set<std::string> ids;
    for (const auto& e : m.at("entries")) {
        ids.insert(e.at("id").get<std::string>());
        for (const auto& l : e.at("labels")) ++owners[l.get<std::string>()];
    }
    CHECK(ids.size() == catalog().size());
    for (const auto& l : kLabels) {
        CAPTURE(l);
        CHECK(owners[l] == 1);
        REQUIRE(m.at("labels").contains(l));
        CHECK(ids.count(m.at("labels").at(l).get<std::string>()) == 1);
    }
    for (const auto& e : catalog()) {
        CHECK_FALSE(e.anchor.empty());
        CHECK_FALSE(e.grid.empty());
        for (const auto& p : e.grid)
            for (const auto& [k, v] : p) CHECK(std::find(e.param_names.begin(), e.param_names.end(), k) != e.param_names.end());
    }
}

TEST_CASE("single entries") {
    const auto t = run_entry("thm1", {{"a", 3}}, 60);
    CHECK(t.verdict == Verdict::Pass);
    CHECK_FALSE(t.witness);
    CHECK(t.compared > 0);

    const auto c = run_entry("crankgen-nonneg", {}, 30);
    CHECK(c.verdict == Verdict::Pass);
    CHECK(c.note.find("(z^0,q^1)") != std::string::npos);

    const auto v = run_entry("vanishB", {{"a", 4}, {"k", 2}}, 30);
    CHECK(v.verdict == Verdict::Pass);
    CHECK(find_entry("vanishB").strategy == Strategy::ZeroSeries);
}

TEST_CASE("errors") {
    try {
        run_entry("no-such-entry", {}, 10);
        FAIL("expected unknown_id");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::unknown_id);
    }
    try {
        run_entry("thm1", {{"a", 1}}, 10);
        FAIL("expected invalid_params");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::invalid_params);
    }
    CHECK_THROWS_AS(find_entry("nope"), Error);
}

TEST_CASE("a window that is too small is inconclusive, never a pass") {
    const auto r = run_entry("quin", {}, 20, 0);
    CHECK(r.verdict == Verdict::Inconclusive);
    CHECK_FALSE(is_success(r.verdict));
    CHECK(r.compared == 0);
    CHECK_FALSE(r.note.empty());
}

TEST_CASE("catalog filters") {
    const auto saito = run_catalog("saito", 120);
    CHECK(saito.size() == 60);
    for (const auto& r : saito) {
        CHECK(r.id == "saito");
        CHECK(r.verdict == Verdict::Pass);
    }

    const auto conj = run_catalog("conj2", 60);
    std::set<std::string> seen;
    for (const auto& r : conj) {
        seen.insert(r.id);
        CAPTURE(r.id);
        CHECK(r.verdict == (find_entry(r.id).conjecture ? Verdict::Evidence : Verdict::Pass));
    }
    for (char c = 'a'; c <= 'h'; ++c) CHECK(seen.count(std::string("conj2") + c));

    const auto crank = run_catalog("crank11");
    REQUIRE(crank.size() == 2);
    for (const auto& r : crank) CHECK(r.verdict == Verdict::Pass);
    CHECK(crank[1].id == "crank11b");
    CHECK(crank[1].note.find("n = 3") != std::string::npos);

    // labels select their entry
    const auto by_label = run_catalog("Bzero1", 20);
    REQUIRE_FALSE(by_label.empty());
    for (const auto& r : by_label) CHECK(r.id == "vanishB");
}

TEST_CASE("reports are reproducible") {
    for (const auto& f : {"gqpi", "crank", "eta1a", "conj2b"}) {
        const auto a = run_catalog(f, 20), b = run_catalog(f, 20);
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) CHECK(same_report(a[i], b[i]));
    }
    const auto x = run_entry("quin", {}, 20, 0), y = run_entry("quin", {}, 20, 0);
    CHECK(same_report(x, y));
}

TEST_CASE("verdict names") {
    CHECK(to_string(Verdict::Pass) == "pass");
    CHECK(to_string(Verdict::Evidence) == "evidence");
    CHECK(to_string(Verdict::Violation) == "violation");
    CHECK(to_string(Verdict::Inconclusive) == "inconclusive");
    CHECK(is_success(Verdict::Evidence));
    CHECK_FALSE(is_success(Verdict::Violation));
    CHECK_FALSE(is_success(Verdict::Fail));
}
