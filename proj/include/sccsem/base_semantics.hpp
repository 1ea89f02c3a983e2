#pragma once

#include "sccsem/argset.hpp"
#include "sccsem/framework.hpp"
#include "sccsem/semantics.hpp"

#include <vector>

namespace sccsem {

// Enumerations throw LimitExceeded when f has more than limits.max_args
// arguments. The empty framework yields {∅} under every semantics.

ExtensionSet enumerate_conflict_free(const Framework& f, const Limits& limits = {});
ExtensionSet enumerate_naive(const Framework& f, const Limits& limits = {});
ExtensionSet enumerate_stage(const Framework& f, const Limits& limits = {});

/// Least fixed point of the characteristic function, by Kleene iteration from ∅.
ArgSet grounded(const Framework& f);

bool is_naive(const Framework& f, const ArgSet& s);
bool is_stage(const Framework& f, const ArgSet& s, const Limits& limits = {});

// The same notions evaluated on the induced sub-framework f|within without
// materialising it. Sets are expressed in f's indices.

/// Maximal conflict-free subsets of `within` (Bron-Kerbosch on the
/// compatibility graph), in no particular order.
std::vector<ArgSet> naive_within(const Framework& f, const ArgSet& within);
bool is_naive_within(const Framework& f, const ArgSet& within, const ArgSet& s);
bool is_stage_within(const Framework& f, const ArgSet& within, const ArgSet& s,
                     const Limits& limits = {});
/// Range of `s` inside f|within.
ArgSet range_within(const Framework& f, const ArgSet& within, const ArgSet& s);

} // namespace sccsem
