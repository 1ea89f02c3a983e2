#pragma once

#include "sccsem/argset.hpp"
#include "sccsem/framework.hpp"

#include <cstddef>
#include <limits>
#include <utility>
#include <vector>

namespace sccsem {

inline constexpr std::size_t no_component = std::numeric_limits<std::size_t>::max();

/// Strongly connected components plus the condensation DAG.
///
/// `components` is a topological order of the condensation: a component only
/// attacks components listed after it. Among simultaneously available
/// components the one with the smallest member index comes first.
struct SccDecomposition {
    std::vector<ArgSet> components;
    std::vector<std::size_t> component_of;   // no_component for arguments outside the decomposed set
    std::vector<std::pair<std::size_t, std::size_t>> condensation_edges;   // sorted, no self loops

    std::size_t count() const { return components.size(); }
    /// Components with an edge into component `c`.
    std::vector<std::size_t> predecessors(std::size_t c) const;
};

SccDecomposition decompose(const Framework& f);
/// Components of the induced sub-framework on `within`, expressed in f's indices.
SccDecomposition decompose(const Framework& f, const ArgSet& within);

/// The strongly connected component of `a` inside f restricted to `within`;
/// empty when `a` is not in `within`.
ArgSet component_of(const Framework& f, const ArgSet& within, ArgIndex a);

/// Arguments reachable from `from` by paths that stay inside `within`
/// (including `from` itself when it is in `within`).
ArgSet reachable_from(const Framework& f, const ArgSet& within, ArgIndex from);
/// Arguments that reach `to` by paths inside `within`.
ArgSet reaching(const Framework& f, const ArgSet& within, ArgIndex to);

/// Topological order of the condensation in which ties between available
/// components are broken by the smallest `rank` among their members.
std::vector<std::size_t> topological_order(const SccDecomposition& d,
                                           const std::vector<std::size_t>& rank);

/// Members of X attacked by some member of S lying outside X.
ArgSet d_s(const Framework& f, const ArgSet& s, const ArgSet& x);

inline constexpr std::size_t default_unattacked_cap = 4096;

/// Every U that receives no attack from outside U, i.e. every
/// predecessor-closed union of components. Canonically sorted.
/// Throws LimitExceeded once more than `cap` sets exist.
std::vector<ArgSet> unattacked_sets(const Framework& f, std::size_t cap = default_unattacked_cap);

bool is_unattacked(const Framework& f, const ArgSet& u);

} // namespace sccsem
