#pragma once

#include "sccsem/argset.hpp"
#include "sccsem/framework.hpp"
#include "sccsem/generators.hpp"
#include "sccsem/semantics.hpp"

#include <cstddef>
#include <vector>

namespace sccsem {

/// An enumeration of arguments in which every argument attacks only finitely
/// many of its predecessors.
struct FinitaryOrder {
    std::vector<std::size_t> order;              // source indices, in enumeration order
    std::vector<std::size_t> back_attack_bound;  // per position: attacked predecessors

    /// position[a] for every a < n; arguments missing from the order get n.
    std::vector<std::size_t> positions(std::size_t n) const;
};

/// Enumeration built by repeatedly taking the least unused argument and then
/// closing under attackers breadth-first (attackers in ascending index order).
/// Returns the first min(n, |A|) arguments.
FinitaryOrder lemma1_order(const Framework& f, std::size_t n);
/// Same procedure over a generator's full attacker lists; throws
/// PreconditionError for non-finitary families.
FinitaryOrder lemma1_order(const Generator& g, std::size_t n);
/// lemma1_order(f, |A|).
FinitaryOrder lemma1_order(const Framework& f);

/// Components in condensation order (ties: smallest order position first);
/// inside a component, arguments in order, each added unless it attacks itself
/// or conflicts with the set built so far.
ArgSet greedy_cf15(const Framework& f, const FinitaryOrder& ord);

/// Every argument that does not attack itself is in S, attacked by S, or
/// attacks a member of S that precedes it in its own component.
bool is_greedy_cf15(const Framework& f, const FinitaryOrder& ord, const ArgSet& s);

/// Per component, the naive set of X ∖ D_S(X) whose range there is
/// lexicographically largest (earlier order position = more significant).
/// Throws LimitExceeded when an available part exceeds limits.component_limit.
ArgSet lex_scc_stg15(const Framework& f, const FinitaryOrder& ord, const Limits& limits = {});

/// Two passes: walk the order and keep a in D iff some conflict-free set has
/// D ∪ {a} inside its range; then return a conflict-free S whose range is D.
/// Throws LimitExceeded when one witness search visits more than
/// limits.search_limit nodes.
ArgSet lex_greedy_stage(const Framework& f, const FinitaryOrder& ord, const Limits& limits = {});

/// a >lex b: the earliest argument of `order` in exactly one of them lies in a.
bool lex_greater(const ArgSet& a, const ArgSet& b, const std::vector<std::size_t>& order);

} // namespace sccsem
