#pragma once

#include "sccsem/framework.hpp"
#include "sccsem/semantics.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace sccsem::oracle {

inline constexpr std::size_t max_args = 15;

/// Scans all 2^n subsets and applies the textbook definition of `which`.
/// Shares no code with the fast modules beyond the Framework container.
/// Throws LimitExceeded above max_args arguments.
ExtensionSet brute_force(const Framework& f, Semantics which);

/// Membership by definition, for a single set given as a bit mask.
bool is_member(const Framework& f, Semantics which, std::uint32_t set);

/// n arguments a0..a{n-1}; each ordered pair of distinct arguments is an
/// attack with probability edge_prob, each self-attack with probability
/// self_attack_prob. Fully determined by `seed`.
Framework random_framework(std::size_t n, double edge_prob, double self_attack_prob, std::uint64_t seed);

/// `count` random frameworks with 1..max_n arguments and varying density.
std::vector<Framework> random_corpus(std::size_t count, std::size_t max_n, std::uint64_t seed);

inline constexpr std::uint64_t default_corpus_seed = 20240917;

} // namespace sccsem::oracle
