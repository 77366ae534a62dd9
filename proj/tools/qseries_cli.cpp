// Command-line front end: expand and scan DSL expressions, drive the identity
// catalog, and run the Saito, crank and second-conjecture scans.
//
// Exit status: 0 pass, 1 fail, 2 inconclusive or window too small, 3 usage.

#include <algorithm>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qseries/dsl.hpp"
#include "qseries/partitions.hpp"
#include "qseries/verify.hpp"

using namespace qseries;
using nlohmann::json;

namespace {

enum Exit { ok = 0, failed = 1, inconclusive = 2, usage = 3 };

int exit_for(const Error& e) {
    switch (e.code()) {
        case Errc::insufficient_window:
        case Errc::unbounded_z_support:
            return inconclusive;
        case Errc::syntax_error:
        case Errc::exponent_overflow:
        case Errc::unknown_id:
        case Errc::invalid_params:
        case Errc::invalid_argument:
        case Errc::invalid_precision:
        case Errc::division_by_zero_series:
        case Errc::negative_exponent:
            return usage;
        default:
            return failed;
    }
}

int exit_for(const std::vector<IdentityReport>& reports) {
    int code = ok;
    for (const auto& r : reports) {
        if (r.verdict == Verdict::Fail || r.verdict == Verdict::Violation) return failed;
        if (r.verdict == Verdict::Inconclusive) code = inconclusive;
    }
    return code;
}

std::string upper(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::toupper(c); });
    return s;
}

std::string params_string(const Params& p) {
    std::string out;
    for (const auto& [k, v] : p) out += (out.empty() ? "" : " ") + k + "=" + std::to_string(v);
    return out;
}

std::string coordinate(std::optional<int> zexp, long qexp) {
    return "q^" + std::to_string(qexp) + (zexp ? " z^" + std::to_string(*zexp) : "");
}

void print_report(const IdentityReport& r) {
    std::cout << upper(to_string(r.verdict)) << " " << r.id;
    if (!r.params.empty()) std::cout << " " << params_string(r.params);
    std::cout << " order=" << r.qprec;
    if (r.window) std::cout << " window=" << *r.window;
    std::cout << " compared=" << r.compared;
    if (r.witness) {
        const auto& w = *r.witness;
        std::cout << " | " << w.check << " at " << coordinate(w.zexp, w.qexp) << ": " << w.lhs;
        if (!w.rhs.empty()) std::cout << " vs " << w.rhs;
    }
    if (!r.note.empty()) std::cout << " | " << r.note;
    std::cout << "\n";
}

json report_json(const IdentityReport& r) {
    json p = json::object();
    for (const auto& [k, v] : r.params) p[k] = v;
    json w = nullptr;
    if (r.witness) {
        w = {{"check", r.witness->check}, {"qexp", r.witness->qexp}, {"lhs", r.witness->lhs}, {"rhs", r.witness->rhs}};
        if (r.witness->zexp) w["zexp"] = *r.witness->zexp;
    }
    return {{"id", r.id},           {"params", p},          {"order", r.qprec},
            {"window", r.window ? json(*r.window) : json(nullptr)},       {"verdict", to_string(r.verdict)},
            {"witness", w},         {"compared", r.compared}, {"note", r.note}};
}

int emit(const std::vector<IdentityReport>& reports, bool as_json) {
    if (as_json) {
        json arr = json::array();
        for (const auto& r : reports) arr.push_back(report_json(r));
        std::cout << arr.dump(2) << "\n";
    } else {
        for (const auto& r : reports) print_report(r);
    }
    return exit_for(reports);
}

AnySeries expand_expr(const dsl::Evaluated& ev, int order, std::optional<int> window) {
    if (ev.spec.z_free()) return expand_univariate(ev.spec, order);
    return expand_bracket_spec(ev.spec, order, window);
}

struct Coeff {
    int q;
    std::optional<int> z;
    Integer v;
};

std::vector<Coeff> certified_coeffs(const AnySeries& s) {
    std::vector<Coeff> out;
    if (auto u = std::get_if<QSeries>(&s)) {
        for (int e = 0; e < u->precision(); ++e) out.push_back({e, std::nullopt, (*u)[e]});
        return out;
    }
    std::get<ZqSeries>(s).for_each_certified([&](int d, int e, const Integer& v) {
        if (sgn(v) != 0) out.push_back({e, d, v});
    });
    std::sort(out.begin(), out.end(), [](const Coeff& a, const Coeff& b) {
        return a.q != b.q ? a.q < b.q : *a.z < *b.z;
    });
    return out;
}

int cmd_expand(const std::string& text, int order, std::optional<int> window, bool as_json) {
    const auto expr = dsl::parse(text);
    const auto ev = dsl::evaluate(expr);
    const auto s = expand_expr(ev, order, window);
    const auto coeffs = certified_coeffs(s);
    std::optional<int> w;
    if (auto z = std::get_if<ZqSeries>(&s)) w = z->window();
    if (as_json) {
        json c = json::array();
        for (const auto& x : coeffs) {
            if (x.z)
                c.push_back({x.q, *x.z, x.v.get_str()});
            else
                c.push_back({x.q, x.v.get_str()});
        }
        json out = {{"expr", dsl::print(expr)},
                    {"order", order},
                    {"window", w ? json(*w) : json(nullptr)},
                    {"prefactor24", ev.prefactor24},
                    {"coeffs", c}};
        std::cout << out.dump() << "\n";
        return ok;
    }
    std::cout << "# " << dsl::print(expr) << "  order " << order;
    if (w) std::cout << "  window " << *w;
    if (ev.prefactor24 != 0) std::cout << "  prefactor q^(" << format_prefactor24(ev.prefactor24) << ")";
    std::cout << "\n";
    for (const auto& x : coeffs) std::cout << coordinate(x.z, x.q) << ": " << x.v.get_str() << "\n";
    return ok;
}

int cmd_nonneg(const std::string& text, int order, std::optional<int> window) {
    const auto ev = dsl::evaluate(dsl::parse(text));
    const auto s = expand_expr(ev, order, window);
    if (auto z = std::get_if<ZqSeries>(&s)) {
        const auto r = nonneg_scan(*z);
        if (!r.ok) {
            std::cout << "FAIL negative coefficient at " << coordinate(r.zexp, r.qexp) << ": " << r.value.get_str()
                      << "\n";
            return failed;
        }
        if (r.scanned == 0) {
            std::cout << "INCONCLUSIVE no certified coefficients\n";
            return inconclusive;
        }
        std::cout << "PASS " << r.scanned << " certified coefficients nonnegative\n";
        return ok;
    }
    const auto& u = std::get<QSeries>(s);
    for (int e = 0; e < u.precision(); ++e)
        if (sgn(u[e]) < 0) {
            std::cout << "FAIL negative coefficient at q^" << e << ": " << u[e].get_str() << "\n";
            return failed;
        }
    std::cout << "PASS " << u.precision() << " coefficients nonnegative\n";
    return ok;
}

const std::vector<std::string> param_keys = {"a",  "b",  "j",  "k",  "m",     "n",    "p",     "t",   "L",
                                             "M",  "N",  "r",  "sa", "st",    "s1",   "s2",    "alpha", "beta",
                                             "depth", "bound"};

Params parse_params(const std::string& text) {
    Params p;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw Error(Errc::invalid_params, "expected key=value, got '" + item + "'");
        try {
            std::size_t used = 0;
            const std::string value = item.substr(eq + 1);
            p[item.substr(0, eq)] = std::stol(value, &used);
            if (used != value.size()) throw std::invalid_argument(value);
        } catch (const std::logic_error&) {
            throw Error(Errc::invalid_params, "not an integer in '" + item + "'");
        }
    }
    return p;
}

bool is_entry(const std::string& id) {
    for (const auto& e : catalog())
        if (e.id == id) return true;
    return false;
}

int cmd_verify(const std::string& id, const Params& given, int order, std::optional<int> window, bool as_json) {
    if (id != "all" && is_entry(id)) {
        const auto& e = find_entry(id);
        const int N = order > 0 ? order : e.default_qprec;
        std::vector<IdentityReport> reports;
        if (!given.empty() || e.grid.empty())
            reports.push_back(run_entry(id, given, N, window));
        else
            for (const auto& p : e.grid) reports.push_back(run_entry(id, p, N, window));
        return emit(reports, as_json);
    }
    const auto reports = run_catalog(id, order);
    if (reports.empty()) throw Error(Errc::unknown_id, "no catalog entry or label matches '" + id + "'");
    return emit(reports, as_json);
}

int cmd_saito(int max_N, int order, bool as_json) {
    std::vector<IdentityReport> reports;
    for (int n = 1; n <= max_N; ++n) reports.push_back(run_entry("saito", {{"N", n}}, order));
    if (as_json) return emit(reports, true);
    for (const auto& r : reports) {
        const int n = static_cast<int>(r.params.at("N"));
        std::cout << upper(to_string(r.verdict)) << " N=" << n << " prefactor24=" << saito_prefactor24(n)
                  << " prefactor=q^(" << format_prefactor24(saito_prefactor24(n)) << ") order=" << r.qprec;
        if (r.witness)
            std::cout << " | negative at q^" << r.witness->qexp << ": " << r.witness->lhs;
        std::cout << "\n";
    }
    return exit_for(reports);
}

int cmd_crank(int t, int max_n) {
    if (t < 1) throw Error(Errc::invalid_params, "--mod must be >= 1");
    if (max_n < 0) throw Error(Errc::invalid_params, "--max-n must be >= 0");
    std::cout << "n";
    for (int k = 0; k < t; ++k) std::cout << "\tM(" << k << "," << t << ",n)";
    std::cout << "\n";
    for (int n = 0; n <= max_n; ++n) {
        std::cout << n;
        for (const auto& c : crank_counts_mod(t, n)) std::cout << "\t" << c.get_str();
        std::cout << "\n";
    }
    std::vector<IdentityReport> reports;
    reports.push_back(run_entry("crankgen", {}, std::min(max_n, 60) + 1));
    reports.push_back(run_entry("crankgen-nonneg", {}, std::min(max_n, 60) + 1));
    if (t == 5 && max_n >= 0) {
        const int N = max_n / 5 + 1;
        reports.push_back(run_entry("crank5b", {}, N));
        reports.push_back(run_entry("crank5c", {}, N));
    }
    if (t == 11 && max_n >= 2) {
        const int N = (max_n - 2) / 11 + 1;
        reports.push_back(run_entry("crank11a", {}, N));
        reports.push_back(run_entry("crank11b", {}, N));
    }
    for (const auto& r : reports) print_report(r);
    return exit_for(reports);
}

int cmd_conj2(const std::string& item, const Params& given, int order, std::optional<int> window, bool as_json) {
    static const std::map<std::string, std::string> names = {
        {"a", "a"}, {"b", "b"}, {"c", "c"}, {"d", "d"}, {"e", "e"}, {"f", "f"}, {"g", "g"}, {"h", "h"},
        {"1", "a"}, {"2", "b"}, {"3", "c"}, {"4", "d"}, {"5", "e"}, {"6", "f"}, {"7", "g"}, {"8", "h"},
        {"i", "a"}, {"ii", "b"}, {"iii", "c"}, {"iv", "d"}, {"v", "e"}, {"vi", "f"}, {"vii", "g"}, {"viii", "h"}};
    const auto it = names.find(item);
    if (it == names.end()) throw Error(Errc::invalid_params, "--item must be a..h, 1..8 or i..viii");
    return cmd_verify("conj2" + it->second, given, order > 0 ? order : 0, window, as_json);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact q-series expansion and identity verification"};
    app.require_subcommand(1);

    std::string expr, id, params_text, item;
    int order = 0, max_N = 60, mod = 5, max_n = 20;
    std::optional<int> window;
    bool as_json = false;
    std::map<std::string, long> named;

    auto* expand = app.add_subcommand("expand", "Print certified coefficients of an expression");
    expand->add_option("expr", expr, "Expression")->required();
    expand->add_option("--order", order, "q-order (exclusive)")->required()->check(CLI::NonNegativeNumber);
    expand->add_option("--window", window, "z-window for reciprocal z factors")->check(CLI::NonNegativeNumber);
    expand->add_flag("--json", as_json, "JSON output");

    auto* nonneg = app.add_subcommand("nonneg", "Report the first negative certified coefficient");
    nonneg->add_option("expr", expr, "Expression")->required();
    nonneg->add_option("--order", order, "q-order (exclusive)")->required()->check(CLI::NonNegativeNumber);
    nonneg->add_option("--window", window, "z-window")->check(CLI::NonNegativeNumber);

    auto* verify = app.add_subcommand("verify", "Run catalog entries (an id, a prefix, a label, or 'all')");
    verify->add_option("id", id, "Entry id, prefix or label")->required();
    verify->add_option("--params", params_text, "Comma-separated key=value list");
    verify->add_option("--order", order, "q-order; defaults per entry")->check(CLI::NonNegativeNumber);
    verify->add_option("--window", window, "z-window for windowed entries")->check(CLI::NonNegativeNumber);
    verify->add_flag("--json", as_json, "JSON output");
    for (const auto& k : param_keys) verify->add_option("--" + k, named[k], "parameter " + k);

    auto* saito = app.add_subcommand("saito", "Nonnegativity scans of the eta products S~_N");
    saito->add_option("--max-N", max_N, "Largest N")->check(CLI::PositiveNumber);
    saito->add_option("--order", order, "q-order")->required()->check(CLI::NonNegativeNumber);
    saito->add_flag("--json", as_json, "JSON output");

    auto* crank = app.add_subcommand("crank", "Crank tables M(k, t, n) and the crank inequalities");
    crank->add_option("--mod", mod, "Modulus t")->check(CLI::PositiveNumber);
    crank->add_option("--max-n", max_n, "Largest n")->check(CLI::NonNegativeNumber);

    auto* conj2 = app.add_subcommand("conj2", "Evidence scan for one item of the second conjecture");
    conj2->add_option("--item", item, "a..h, 1..8 or i..viii")->required();
    conj2->add_option("--params", params_text, "Comma-separated key=value list");
    conj2->add_option("--order", order, "q-order; default 60")->check(CLI::NonNegativeNumber);
    conj2->add_option("--window", window, "z-window for windowed items")->check(CLI::NonNegativeNumber);
    conj2->add_flag("--json", as_json, "JSON output");
    for (const auto& k : param_keys) conj2->add_option("--" + k, named[k], "parameter " + k);

    app.add_subcommand("manifest", "Print the label-to-entry manifest as JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? ok : usage;
    }

    auto collect = [&](CLI::App* sub) {
        Params p = parse_params(params_text);
        for (const auto& k : param_keys)
            if (sub->count("--" + k) > 0) p[k] = named[k];
        return p;
    };

    try {
        if (*expand) return cmd_expand(expr, order, window, as_json);
        if (*nonneg) return cmd_nonneg(expr, order, window);
        if (*verify) return cmd_verify(id, collect(verify), order, window, as_json);
        if (*saito) return cmd_saito(max_N, order, as_json);
        if (*crank) return cmd_crank(mod, max_n);
        if (*conj2) return cmd_conj2(item, collect(conj2), order, window, as_json);
        std::cout << manifest_json();
        return ok;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return exit_for(e);
    }
}
