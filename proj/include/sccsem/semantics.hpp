#pragma once

#include "sccsem/argset.hpp"

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace sccsem {

enum class Semantics {
    conflict_free,
    naive,
    grounded,
    stage,
    cf2,
    stg2,
    icf2,
    istg2,
    cf15,
    stg15,
};

/// CLI/JSON identifier: "cf", "naive", "grounded", "stage", "cf2", "stg2",
/// "icf2", "istg2", "cf1.5", "stg1.5".
std::string_view to_string(Semantics s);
/// Accepts the identifiers above plus a few aliases ("na", "stg", "cf15", ...).
Semantics parse_semantics(std::string_view name);

/// The eight semantics compared in the evaluation-criteria table.
inline constexpr std::array<Semantics, 8> table_semantics{
    Semantics::naive, Semantics::cf2,  Semantics::stage, Semantics::stg2,
    Semantics::icf2,  Semantics::cf15, Semantics::istg2, Semantics::stg15,
};

/// The six SCC-based semantics, each of which only admits naive extensions.
inline constexpr std::array<Semantics, 6> scc_based_semantics{
    Semantics::cf2, Semantics::stg2, Semantics::icf2, Semantics::istg2, Semantics::cf15, Semantics::stg15,
};

/// Canonically sorted, duplicate-free family of extensions over a universe of
/// `universe` arguments.
struct ExtensionSet {
    std::size_t universe = 0;
    std::vector<ArgSet> extensions;

    ExtensionSet() = default;
    ExtensionSet(std::size_t n, std::vector<ArgSet> exts);

    std::size_t size() const { return extensions.size(); }
    bool empty() const { return extensions.empty(); }
    bool contains(const ArgSet& s) const;
    bool credulous(ArgIndex a) const;
    /// Vacuously true when there are no extensions.
    bool skeptical(ArgIndex a) const;

    friend bool operator==(const ExtensionSet&, const ExtensionSet&) = default;
};

/// Resource bounds for exponential searches; exceeding one raises LimitExceeded.
struct Limits {
    std::size_t max_args = 24;            // enumeration size limit
    std::size_t unattacked_cap = 4096;    // directionality: number of unattacked sets
    std::size_t component_limit = 24;     // exhaustive per-component selection
    std::size_t search_limit = 2'000'000; // backtracking nodes per witness search
};

} // namespace sccsem
