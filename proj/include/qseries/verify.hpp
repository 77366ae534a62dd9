#pragma once

// Identity catalog: each entry checks one displayed identity or inequality
// over a parameter grid and reports a verdict with a coefficient witness.

#include <chrono>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qseries/products.hpp"

namespace qseries {

enum class Strategy { Equal, EqualCrossMultiplied, Nonneg, NonnegExpectException, ZeroSeries };

// Conjecture entries report Evidence / Violation; everything else Pass / Fail.
// Inconclusive means the certified region was too small to decide.
enum class Verdict { Pass, Fail, Inconclusive, Evidence, Violation };

std::string to_string(Strategy s);
std::string to_string(Verdict v);

/// First offending coordinate. zexp is absent for univariate series.
struct Witness {
    std::string check;  // which comparison inside the entry
    std::optional<int> zexp;
    long qexp = 0;
    std::string lhs;
    std::string rhs;  // empty for nonnegativity witnesses
};

struct IdentityReport {
    std::string id;
    Params params;
    int qprec = 0;
    std::optional<int> window;
    Verdict verdict = Verdict::Pass;
    std::optional<Witness> witness;  // present whenever verdict is Fail or Violation
    long compared = 0;               // certified coefficients consulted
    std::string note;
    double seconds = 0;
};

struct CatalogEntry {
    std::string id;
    std::vector<std::string> labels;  // equation keys covered by this entry
    std::string anchor;               // the statement being checked, as a formula
    Strategy strategy = Strategy::Equal;
    bool conjecture = false;
    std::vector<std::string> param_names;
    std::vector<Params> grid;  // default parameter sets
    int default_qprec = 40;
    bool windowed = false;  // uses a z-window, defaulting to qprec
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry& find_entry(const std::string& id);

/// Runs one entry at one parameter set. Throws unknown_id / invalid_params;
/// every other failure becomes data in the report.
IdentityReport run_entry(const std::string& id, const Params& params, int qprec,
                         std::optional<int> window = std::nullopt);

/// Runs every entry whose id equals `filter`, starts with it, or lists it as a
/// label ("all" or "" selects everything), over its default grid. qprec <= 0
/// uses each entry's default.
std::vector<IdentityReport> run_catalog(const std::string& filter, int qprec = 0);

/// Pass or Evidence.
bool is_success(Verdict v);

/// Labels mapped to entry ids plus per-entry metadata, as pretty-printed JSON.
std::string manifest_json();

}  // namespace qseries
