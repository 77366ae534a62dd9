#include "qseries/verify.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include <json.hpp>

#include "catalog_impl.hpp"
#include "qseries/error.hpp"

namespace qseries {

namespace {

const std::vector<detail::CatalogItem>& items() {
    static const std::vector<detail::CatalogItem> all = detail::build_catalog();
    return all;
}

const detail::CatalogItem& find_item(const std::string& id) {
    for (const auto& it : items())
        if (it.entry.id == id) return it;
    throw Error(Errc::unknown_id, "no catalog entry '" + id + "'");
}

bool matches(const CatalogEntry& e, const std::string& filter) {
    if (filter.empty() || filter == "all") return true;
    if (e.id.rfind(filter, 0) == 0) return true;
    return std::find(e.labels.begin(), e.labels.end(), filter) != e.labels.end();
}

}  // namespace

std::string to_string(Strategy s) {
    switch (s) {
        case Strategy::Equal: return "Equal";
        case Strategy::EqualCrossMultiplied: return "EqualCrossMultiplied";
        case Strategy::Nonneg: return "Nonneg";
        case Strategy::NonnegExpectException: return "NonnegExpectException";
        case Strategy::ZeroSeries: return "ZeroSeries";
    }
    return "?";
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::Inconclusive: return "inconclusive";
        case Verdict::Evidence: return "evidence";
        case Verdict::Violation: return "violation";
    }
    return "?";
}

bool is_success(Verdict v) { return v == Verdict::Pass || v == Verdict::Evidence; }

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = [] {
        std::vector<CatalogEntry> out;
        for (const auto& it : items()) out.push_back(it.entry);
        return out;
    }();
    return entries;
}

const CatalogEntry& find_entry(const std::string& id) { return find_item(id).entry; }

IdentityReport run_entry(const std::string& id, const Params& params, int qprec, std::optional<int> window) {
    const auto& item = find_item(id);
    if (qprec < 0) throw Error(Errc::invalid_params, "negative order");
    IdentityReport r;
    r.id = id;
    r.params = params;
    r.qprec = qprec;
    if (item.entry.windowed) r.window = window.value_or(qprec);

    const auto t0 = std::chrono::steady_clock::now();
    detail::Check check;
    std::optional<std::string> error;
    try {
        item.run(check, params, qprec, r.window);
    } catch (const Error& e) {
        if (e.code() == Errc::unknown_id || e.code() == Errc::invalid_params) throw;
        error = e.what();
    } catch (const std::exception& e) {
        error = std::string("error: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    r.compared = check.compared();
    r.note = check.note();

    // a witness found before an error is still a genuine counterexample
    if (check.failed()) {
        r.verdict = item.entry.conjecture ? Verdict::Violation : Verdict::Fail;
        r.witness = check.witness();
    } else if (error) {
        r.verdict = Verdict::Inconclusive;
        r.note = *error;
    } else if (check.empty_comparison()) {
        r.verdict = Verdict::Inconclusive;
        r.note = "no certified coefficients in some comparison";
    } else {
        r.verdict = item.entry.conjecture ? Verdict::Evidence : Verdict::Pass;
    }
    return r;
}

std::vector<IdentityReport> run_catalog(const std::string& filter, int qprec) {
    struct Job {
        const CatalogEntry* entry;
        Params params;
    };
    std::vector<Job> jobs;
    for (const auto& e : catalog())
        if (matches(e, filter))
            for (const auto& p : e.grid) jobs.push_back({&e, p});

    std::vector<IdentityReport> out(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < jobs.size();) {
            const auto& j = jobs[i];
            out[i] = run_entry(j.entry->id, j.params, qprec > 0 ? qprec : j.entry->default_qprec);
        }
    };
    const unsigned n = std::clamp(std::thread::hardware_concurrency(), 1u, 16u);
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < n && t < jobs.size(); ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return out;
}

std::string manifest_json() {
    using nlohmann::json;
    json labels = json::object();
    json entries = json::array();
    for (const auto& e : catalog()) {
        for (const auto& l : e.labels) labels[l] = e.id;
        json grid = json::array();
        for (const auto& p : e.grid) {
            json g = json::object();
            for (const auto& [k, v] : p) g[k] = v;
            grid.push_back(g);
        }
        entries.push_back({{"id", e.id},
                           {"labels", e.labels},
                           {"anchor", e.anchor},
                           {"strategy", to_string(e.strategy)},
                           {"conjecture", e.conjecture},
                           {"params", e.param_names},
                           {"grid", grid},
                           {"default_order", e.default_qprec},
                           {"windowed", e.windowed}});
    }
    return json{{"labels", labels}, {"entries", entries}}.dump(2) + "\n";
}

}  // namespace qseries
