#include "sccsem/semantics.hpp"

#include "sccsem/errors.hpp"

#include <algorithm>

namespace sccsem {

std::string_view to_string(Semantics s) {
    switch (s) {
    case Semantics::conflict_free: return "cf";
    case Semantics::naive: return "naive";
    case Semantics::grounded: return "grounded";
    case Semantics::stage: return "stage";
    case Semantics::cf2: return "cf2";
    case Semantics::stg2: return "stg2";
    case Semantics::icf2: return "icf2";
    case Semantics::istg2: return "istg2";
    case Semantics::cf15: return "cf1.5";
    case Semantics::stg15: return "stg1.5";
    }
    return "?";
}

Semantics parse_semantics(std::string_view name) {
    struct Alias {
        std::string_view name;
        Semantics sem;
    };
    static constexpr Alias aliases[] = {
        {"cf", Semantics::conflict_free}, {"conflict-free", Semantics::conflict_free},
        {"naive", Semantics::naive},      {"na", Semantics::naive},
        {"grounded", Semantics::grounded}, {"gr", Semantics::grounded},
        {"stage", Semantics::stage},      {"stg", Semantics::stage},
        {"cf2", Semantics::cf2},          {"stg2", Semantics::stg2},
        {"icf2", Semantics::icf2},        {"istg2", Semantics::istg2},
        {"cf1.5", Semantics::cf15},       {"cf15", Semantics::cf15},
        {"stg1.5", Semantics::stg15},     {"stg15", Semantics::stg15},
    };
    for (const auto& a : aliases) {
        if (a.name == name) return a.sem;
    }
    throw PreconditionError("unknown semantics '" + std::string(name) + "'");
}

ExtensionSet::ExtensionSet(std::size_t n, std::vector<ArgSet> exts)
    : universe(n), extensions(std::move(exts)) {
    std::sort(extensions.begin(), extensions.end());
    extensions.erase(std::unique(extensions.begin(), extensions.end()), extensions.end());
}

bool ExtensionSet::contains(const ArgSet& s) const {
    return std::binary_search(extensions.begin(), extensions.end(), s);
}

bool ExtensionSet::credulous(ArgIndex a) const {
    return std::any_of(extensions.begin(), extensions.end(), [&](const ArgSet& e) { return e.contains(a); });
}

bool ExtensionSet::skeptical(ArgIndex a) const {
    return std::all_of(extensions.begin(), extensions.end(), [&](const ArgSet& e) { return e.contains(a); });
}

} // namespace sccsem
