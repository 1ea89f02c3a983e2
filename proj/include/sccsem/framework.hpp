#pragma once

#include "sccsem/argset.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sccsem {

struct Attack {
    ArgIndex attacker;
    ArgIndex target;
    friend auto operator<=>(const Attack&, const Attack&) = default;
};

/// A finite argumentation framework: interned labels plus an attack relation.
///
/// Labels receive dense indices in the order they were supplied; that order is
/// the canonical argument order used by every enumeration in the library.
/// Self-attacks are allowed. Instances are immutable after construction.
class Framework {
public:
    Framework() = default;

    /// Index-based construction. Throws InvalidFramework on duplicate labels
    /// or out-of-range endpoints. Duplicate attacks are merged.
    Framework(std::vector<std::string> labels, const std::vector<Attack>& attacks);

    /// Label-based construction; every endpoint must appear in `labels`.
    static Framework build(std::vector<std::string> labels,
                           const std::vector<std::pair<std::string, std::string>>& attacks);

    std::size_t size() const { return labels_.size(); }
    bool empty() const { return labels_.empty(); }

    const std::string& label(ArgIndex a) const { return labels_.at(a); }
    const std::vector<std::string>& labels() const { return labels_; }
    std::optional<ArgIndex> index_of(std::string_view label) const;
    /// Like index_of but throws InvalidFramework for unknown labels.
    ArgIndex require(std::string_view label) const;
    ArgSet set_of(const std::vector<std::string>& labels) const;
    std::vector<std::string> labels_of(const ArgSet& s) const;

    bool attacks(ArgIndex from, ArgIndex to) const { return targets_[from].contains(to); }
    bool self_attacking(ArgIndex a) const { return attacks(a, a); }
    const ArgSet& attackers(ArgIndex a) const { return attackers_[a]; }
    const ArgSet& targets(ArgIndex a) const { return targets_[a]; }
    /// All attacks, ordered by (attacker, target).
    std::vector<Attack> attack_list() const;
    std::size_t attack_count() const;

    ArgSet none() const { return ArgSet(size()); }
    ArgSet all() const { return ArgSet::full(size()); }

    friend bool operator==(const Framework& a, const Framework& b) {
        return a.labels_ == b.labels_ && a.targets_ == b.targets_;
    }

private:
    std::vector<std::string> labels_;
    std::map<std::string, ArgIndex, std::less<>> index_;
    std::vector<ArgSet> attackers_;
    std::vector<ArgSet> targets_;
};

/// An induced sub-framework together with the index translation back to its parent.
struct Restriction {
    Framework frame;
    std::vector<ArgIndex> to_parent;   // child index -> parent index
    std::size_t parent_size = 0;

    ArgSet lift(const ArgSet& child) const;
    ArgSet project(const ArgSet& parent) const;
};

Restriction restrict(const Framework& f, const ArgSet& keep);

struct Neighborhoods {
    ArgSet plus;    // arguments attacked by S
    ArgSet minus;   // arguments attacking S
    ArgSet range;   // S together with plus
};

Neighborhoods neighborhoods(const Framework& f, const ArgSet& s);
ArgSet attacked_by(const Framework& f, const ArgSet& s);
ArgSet attackers_of(const Framework& f, const ArgSet& s);
ArgSet range_of(const Framework& f, const ArgSet& s);

bool is_conflict_free(const Framework& f, const ArgSet& s);
bool defends(const Framework& f, const ArgSet& s, ArgIndex a);
/// Every argument defended by `s`.
ArgSet characteristic(const Framework& f, const ArgSet& s);

/// Unordered conflicting pairs {x, y}, stored with first <= second, sorted.
std::vector<std::pair<ArgIndex, ArgIndex>> conflicts(const Framework& f);

/// The same arguments with every attack flipped.
Framework reversed(const Framework& f);

} // namespace sccsem
