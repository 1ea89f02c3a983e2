#include "sccsem/framework.hpp"

#include "sccsem/errors.hpp"

#include <algorithm>

namespace sccsem {

Framework::Framework(std::vector<std::string> labels, const std::vector<Attack>& attacks)
    : labels_(std::move(labels)) {
    const auto n = labels_.size();
    for (std::size_t i = 0; i < n; ++i) {
        auto [it, fresh] = index_.emplace(labels_[i], static_cast<ArgIndex>(i));
        if (!fresh) throw InvalidFramework("duplicate argument label '" + labels_[i] + "'");
    }
    attackers_.assign(n, ArgSet(n));
    targets_.assign(n, ArgSet(n));
    for (const auto& att : attacks) {
        if (att.attacker >= n || att.target >= n) {
            throw InvalidFramework("attack endpoint out of range");
        }
        targets_[att.attacker].insert(att.target);
        attackers_[att.target].insert(att.attacker);
    }
}

Framework Framework::build(std::vector<std::string> labels,
                           const std::vector<std::pair<std::string, std::string>>& attacks) {
    std::map<std::string, ArgIndex, std::less<>> idx;
    for (std::size_t i = 0; i < labels.size(); ++i) idx.emplace(labels[i], static_cast<ArgIndex>(i));
    std::vector<Attack> resolved;
    resolved.reserve(attacks.size());
    for (const auto& [from, to] : attacks) {
        auto f = idx.find(from);
        auto t = idx.find(to);
        if (f == idx.end()) throw InvalidFramework("unknown attack endpoint '" + from + "'");
        if (t == idx.end()) throw InvalidFramework("unknown attack endpoint '" + to + "'");
        resolved.push_back({f->second, t->second});
    }
    return Framework(std::move(labels), resolved);
}

std::optional<ArgIndex> Framework::index_of(std::string_view label) const {
    auto it = index_.find(label);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

ArgIndex Framework::require(std::string_view label) const {
    if (auto i = index_of(label)) return *i;
    throw InvalidFramework("unknown argument '" + std::string(label) + "'");
}

ArgSet Framework::set_of(const std::vector<std::string>& labels) const {
    ArgSet s(size());
    for (const auto& l : labels) s.insert(require(l));
    return s;
}

std::vector<std::string> Framework::labels_of(const ArgSet& s) const {
    std::vector<std::string> out;
    s.for_each([&](ArgIndex a) { out.push_back(labels_[a]); });
    return out;
}

std::vector<Attack> Framework::attack_list() const {
    std::vector<Attack> out;
    for (std::size_t a = 0; a < size(); ++a) {
        targets_[a].for_each([&](ArgIndex b) { out.push_back({static_cast<ArgIndex>(a), b}); });
    }
    return out;
}

std::size_t Framework::attack_count() const {
    std::size_t total = 0;
    for (const auto& t : targets_) total += t.count();
    return total;
}

ArgSet Restriction::lift(const ArgSet& child) const {
    ArgSet out(parent_size);
    child.for_each([&](ArgIndex a) { out.insert(to_parent[a]); });
    return out;
}

ArgSet Restriction::project(const ArgSet& parent) const {
    ArgSet out(to_parent.size());
    for (std::size_t i = 0; i < to_parent.size(); ++i) {
        if (parent.contains(to_parent[i])) out.insert(static_cast<ArgIndex>(i));
    }
    return out;
}

Restriction restrict(const Framework& f, const ArgSet& keep) {
    Restriction r;
    r.parent_size = f.size();
    std::vector<ArgIndex> to_child(f.size(), 0);
    std::vector<std::string> labels;
    for (std::size_t a = 0; a < f.size(); ++a) {
        if (!keep.contains(static_cast<ArgIndex>(a))) continue;
        to_child[a] = static_cast<ArgIndex>(r.to_parent.size());
        r.to_parent.push_back(static_cast<ArgIndex>(a));
        labels.push_back(f.label(static_cast<ArgIndex>(a)));
    }
    std::vector<Attack> attacks;
    for (ArgIndex p : r.to_parent) {
        f.targets(p).for_each([&](ArgIndex q) {
            if (keep.contains(q)) attacks.push_back({to_child[p], to_child[q]});
        });
    }
    r.frame = Framework(std::move(labels), attacks);
    return r;
}

ArgSet attacked_by(const Framework& f, const ArgSet& s) {
    ArgSet out = f.none();
    s.for_each([&](ArgIndex a) { out |= f.targets(a); });
    return out;
}

ArgSet attackers_of(const Framework& f, const ArgSet& s) {
    ArgSet out = f.none();
    s.for_each([&](ArgIndex a) { out |= f.attackers(a); });
    return out;
}

ArgSet range_of(const Framework& f, const ArgSet& s) { return s | attacked_by(f, s); }

Neighborhoods neighborhoods(const Framework& f, const ArgSet& s) {
    Neighborhoods n{attacked_by(f, s), attackers_of(f, s), {}};
    n.range = s | n.plus;
    return n;
}

bool is_conflict_free(const Framework& f, const ArgSet& s) {
    bool ok = true;
    s.for_each([&](ArgIndex a) {
        if (ok && f.targets(a).intersects(s)) ok = false;
    });
    return ok;
}

bool defends(const Framework& f, const ArgSet& s, ArgIndex a) {
    return f.attackers(a).is_subset_of(attacked_by(f, s));
}

ArgSet characteristic(const Framework& f, const ArgSet& s) {
    const ArgSet plus = attacked_by(f, s);
    ArgSet out = f.none();
    for (std::size_t a = 0; a < f.size(); ++a) {
        if (f.attackers(static_cast<ArgIndex>(a)).is_subset_of(plus)) out.insert(static_cast<ArgIndex>(a));
    }
    return out;
}

std::vector<std::pair<ArgIndex, ArgIndex>> conflicts(const Framework& f) {
    std::vector<std::pair<ArgIndex, ArgIndex>> out;
    for (const auto& [x, y] : f.attack_list()) out.emplace_back(std::min(x, y), std::max(x, y));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Framework reversed(const Framework& f) {
    std::vector<Attack> flipped;
    for (const auto& [x, y] : f.attack_list()) flipped.push_back({y, x});
    return Framework(f.labels(), flipped);
}

} // namespace sccsem
