#pragma once

#include "sccsem/argset.hpp"
#include "sccsem/framework.hpp"
#include "sccsem/semantics.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sccsem {

/// Counterexample attached to a failed criterion. Every part is expressed in
/// the indices of `universe` arguments of the checked framework.
struct Witness {
    std::vector<std::pair<std::string, ArgSet>> sets;          // e.g. ("S", ...), ("U", ...)
    std::vector<std::pair<std::string, ArgIndex>> arguments;   // e.g. ("a", ...)
    std::vector<std::pair<std::string, ExtensionSet>> families;
};

struct CriterionReport {
    std::string criterion;
    bool holds = true;
    std::optional<Witness> witness;   // present iff !holds
};

/// Antichain test; the witness is a pair S1 ⊊ S2.
CriterionReport check_i_maximality(const ExtensionSet& es);

enum class Reinstatement { plain, weak, cf };
std::string_view to_string(Reinstatement r);

/// plain: every argument defended by S is in S.
/// weak:  S contains the grounded extension.
/// cf:    every argument defended by S and not in conflict with S is in S.
CriterionReport check_reinstatement(const Framework& f, const ExtensionSet& es, Reinstatement variant);

/// σ(F|U) = {S ∩ U : S ∈ σ(F)} for the given unattacked U, or for every
/// unattacked set when `u` is empty. Throws PreconditionError when `u` is
/// attacked from outside and LimitExceeded past limits.unattacked_cap.
CriterionReport check_directionality(const Framework& f, Semantics which, const std::optional<ArgSet>& u = {},
                                     const Limits& limits = {});

enum class Skepticism { cap, weak };
std::string_view to_string(Skepticism r);

/// cap:  ⋂τ1 ⊆ ⋂τ2, with ⋂ of an empty family taken as the whole universe.
/// weak: every S2 ∈ τ2 has some S1 ∈ τ1 with S1 ⊆ S2.
bool skepticism_compare(const ExtensionSet& t1, const ExtensionSet& t2, Skepticism rel);

/// With R_G ⊆ R_F and conf(F) = conf(G), checks σ(F) ⪯ σ(G). Both frameworks
/// must list the same labels in the same order; PreconditionError otherwise.
CriterionReport check_skepticism_adequacy(const Framework& f, const Framework& g, Semantics which, Skepticism rel,
                                          const Limits& limits = {});

} // namespace sccsem
