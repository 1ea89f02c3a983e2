#pragma once

#include "sccsem/argset.hpp"
#include "sccsem/framework.hpp"
#include "sccsem/semantics.hpp"

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sccsem {

using Params = std::map<std::string, std::string, std::less<>>;

/// A lazily presented countable framework.
///
/// Arguments are enumerated by a fixed decoding order (index -> label); the
/// first n of them induce the truncation at level n. Attacks are stored on
/// the victim's side: each family reports the attackers of an argument.
/// Finitary families always report a finite list; the omega chains give some
/// arguments infinitely many attackers and only answer prefix queries.
class Generator {
public:
    virtual ~Generator() = default;

    const std::string& name() const { return name_; }
    const Params& params() const { return params_; }

    /// Number of arguments, or nullopt when countably infinite.
    virtual std::optional<std::size_t> size() const = 0;
    virtual std::string decode(std::size_t index) const = 0;
    virtual std::optional<std::size_t> encode(std::string_view label) const = 0;

    /// All attackers of `index`; nullopt when there are infinitely many.
    virtual std::optional<std::vector<std::size_t>> attackers(std::size_t index) const = 0;
    /// Attackers of `index` among the first `n` arguments, ascending.
    virtual std::vector<std::size_t> attackers_in_prefix(std::size_t index, std::size_t n) const;

    virtual bool finitary() const { return true; }
    std::string universe_hint() const;

    /// Label-based view of attackers(); throws PreconditionError for
    /// arguments with infinitely many attackers.
    std::vector<std::string> attacker_labels(std::string_view label) const;
    std::size_t require(std::string_view label) const;

protected:
    Generator(std::string name, Params params) : name_(std::move(name)), params_(std::move(params)) {}

private:
    std::string name_;
    Params params_;
};

/// Families:
///   bs_ladder                 a1,b1,a2,b2,...   a_{i+1}→a_i, b_i→a_i, a_i→b_{i+1}
///   omega_chain               a0,a1,...         a_i→a_j iff i>j
///   omega_chain_xy            x,y,a0,a1,...     omega_chain plus x↔y and x→a_i
///   tree_scc   tree=e,0,1,10  one component X_σ per string σ of a finite tree,
///                             decoded row by row (index i, then σ in shortlex order)
///   high_ordinal levels=L [width=W]
///                             blocks 0..L and ω, decoded row by row
///   t3, pt, wr, sk_f, sk_g    finite fixtures
/// Throws PreconditionError for unknown names or invalid parameters.
std::unique_ptr<Generator> builtin_generator(std::string_view name, const Params& params = {});
std::vector<std::string> builtin_generator_names();

/// Parses "k=v" tokens.
Params parse_params(const std::vector<std::string>& tokens);

/// Induced sub-framework on the first n decoded arguments (clamped to the size
/// of finite generators). Index i of the result is argument i of the generator.
Framework truncate(const Generator& g, std::size_t n);

/// The set S used for the high comp-ordinal family, restricted to `frame`
/// (a truncation of high_ordinal): every b, the odd-indexed c and the
/// even-indexed d of blocks 1..L and ω.
ArgSet high_ordinal_witness(const Framework& frame);

namespace fixtures {
Framework t3();        // 3-cycle a→b→c→a
Framework pentagon();  // a→b0, and the 4-cycle b0→b1→b2→b3→b0
Framework weak_reinstatement();   // pentagon plus the self-attack b3→b3
Framework skeptic_f(); // a↔b, b↔c, c→c
Framework skeptic_g(); // a→b, c→b, c→c
Framework ladder4();   // truncate(bs_ladder, 8)
Framework chain(std::size_t n);     // a0..a_{n-1}, a_i→a_j iff i>j
Framework chain_xy(std::size_t n);  // chain(n) plus x↔y, x→a_i
} // namespace fixtures

// --- Truncation studies -------------------------------------------------------

enum class Verdict { accepted, rejected, absent, gap };
std::string_view to_string(Verdict v);

struct TrackedArgument {
    std::string label;
    std::vector<Verdict> verdicts;   // one per level
    bool stabilized = false;
};

struct TruncationReport {
    std::string family;
    Semantics semantics = Semantics::naive;
    std::size_t k = 3;
    std::vector<std::size_t> levels;                          // ascending, distinct
    std::vector<std::optional<std::size_t>> extension_counts; // nullopt marks a gap
    std::vector<std::string> gap_reasons;                     // empty string when no gap
    std::vector<TrackedArgument> tracked;
};

/// Credulous acceptance of each tracked label at every truncation level.
///
/// A tracked argument is stabilized when its last k verdicts agree (accepted or
/// rejected) and those levels admit a coherent chain of extensions: one
/// extension per level, each the restriction of the next to the smaller
/// prefix, all containing the argument when it is accepted. This is heuristic
/// evidence about the infinite framework, never a decision.
/// Levels exceeding `limits` produce gap entries rather than an error.
TruncationReport truncation_study(const Generator& g, Semantics which, std::vector<std::size_t> levels,
                                  const std::vector<std::string>& tracked, std::size_t k = 3,
                                  const Limits& limits = {});

} // namespace sccsem
