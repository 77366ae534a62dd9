#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "check.hpp"
#include "qseries/verify.hpp"

namespace qseries::detail {

// window is set exactly when the entry is windowed
using Runner = std::function<void(Check&, const Params&, int qprec, std::optional<int> window)>;

struct CatalogItem {
    CatalogEntry entry;
    Runner run;
};

std::vector<CatalogItem> build_catalog();

}  // namespace qseries::detail
