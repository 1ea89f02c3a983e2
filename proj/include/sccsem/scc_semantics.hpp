#pragma once

#include "sccsem/argset.hpp"
#include "sccsem/framework.hpp"
#include "sccsem/semantics.hpp"

#include <cstddef>
#include <vector>

namespace sccsem {

// --- Recursive cf2 / stg2 -------------------------------------------------
//
// Literal evaluation of the SCC-recursive schema: a framework with a single
// component is checked against the base semantics, otherwise every component
// X is evaluated recursively on X minus the members attacked by S from
// outside X. Identical restrictions are evaluated once per query.

bool is_cf2(const Framework& f, const ArgSet& s, const Limits& limits = {});
bool is_stg2(const Framework& f, const ArgSet& s, const Limits& limits = {});

// --- Reachability and the Δ operator -------------------------------------

/// True iff a and b both lie in B and b is reachable from a inside f|B.
/// Length-zero paths count, so a reaches itself whenever a ∈ B.
bool reachable_mod(const Framework& f, const ArgSet& b_set, ArgIndex a, ArgIndex b);

/// One application of Δ_{F,S}: arguments attacked by some s ∈ S from which s
/// is not reachable modulo A∖D.
ArgSet delta_step(const Framework& f, const ArgSet& s, const ArgSet& d);

/// Kleene iteration of Δ_{F,S} from ∅.
struct DeltaTrace {
    std::vector<ArgSet> stages;   // Δ⁰ = ∅, Δ¹, ... strictly increasing; the last is the fixed point
    ArgSet fixed_point;
    std::size_t steps = 0;        // index of the fixed point in `stages`
};

DeltaTrace delta_lfp(const Framework& f, const ArgSet& s);

/// The framework with every attack between different components removed.
Framework separation(const Framework& f);

/// Fixed-point characterisation: S conflict-free and naive (resp. stage) in the
/// separation of f minus the least fixed point of Δ_{F,S}. Checked
/// component by component.
bool is_icf2(const Framework& f, const ArgSet& s, const Limits& limits = {});
bool is_istg2(const Framework& f, const ArgSet& s, const Limits& limits = {});

// --- Iterated components ---------------------------------------------------

/// C⁰_S(a) = SCC(a); C^{k+1}_S(a) is the component of a inside
/// C^k_S(a) ∖ D_S(C^k_S(a)) (empty once a has been removed).
struct ComponentTrace {
    ArgIndex argument = 0;
    std::vector<ArgSet> stages;        // C⁰ ... C^{comp_ordinal}
    std::size_t comp_ordinal = 0;      // first k with a ∉ C^k or C^{k+1} = C^k
    bool survived = false;             // a ∈ C^{comp_ordinal}

    /// C^k for any k; stages beyond comp_ordinal repeat the final one.
    const ArgSet& stage(std::size_t k) const { return stages[k < stages.size() ? k : stages.size() - 1]; }
};

ComponentTrace component_trace(const Framework& f, const ArgSet& s, ArgIndex a);

// --- SCC-prioritised semantics ---------------------------------------------

/// S conflict-free and, for every original component X, S ∩ X naive (resp.
/// stage) in f restricted to X ∖ D_S(X).
bool is_cf15(const Framework& f, const ArgSet& s, const Limits& limits = {});
bool is_stg15(const Framework& f, const ArgSet& s, const Limits& limits = {});

// --- Dispatch -----------------------------------------------------------------

/// Membership predicate for any semantics.
bool is_extension(const Framework& f, Semantics which, const ArgSet& s, const Limits& limits = {});

/// All extensions. SCC-based semantics are obtained by filtering the naive
/// extensions, which is complete because each of them only admits naive sets.
ExtensionSet enumerate_semantics(const Framework& f, Semantics which, const Limits& limits = {});

} // namespace sccsem
