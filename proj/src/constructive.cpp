#include "sccsem/constructive.hpp"

#include "sccsem/base_semantics.hpp"
#include "sccsem/errors.hpp"
#include "sccsem/scc.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <string>

namespace sccsem {

std::vector<std::size_t> FinitaryOrder::positions(std::size_t n) const {
    std::vector<std::size_t> pos(n, n);
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (order[i] < n) pos[order[i]] = i;
    }
    return pos;
}

namespace {

template <class Attackers, class Exhausted>
std::vector<std::size_t> lemma1_walk(std::size_t n, Attackers attackers, Exhausted exhausted) {
    std::vector<std::size_t> order;
    std::set<std::size_t> used;
    std::size_t processed = 0;
    std::size_t next_seed = 0;
    while (order.size() < n) {
        if (processed == order.size()) {
            while (used.count(next_seed)) ++next_seed;
            if (exhausted(next_seed)) break;
            order.push_back(next_seed);
            used.insert(next_seed);
            continue;
        }
        auto list = attackers(order[processed++]);
        std::sort(list.begin(), list.end());
        for (auto x : list) {
            if (order.size() == n) break;
            if (used.insert(x).second) order.push_back(x);
        }
    }
    return order;
}

std::vector<std::size_t> back_bounds(const std::vector<std::size_t>& order,
                                     const std::function<bool(std::size_t, std::size_t)>& attacks) {
    std::vector<std::size_t> out(order.size(), 0);
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (attacks(order[i], order[j])) ++out[i];
        }
    }
    return out;
}

std::vector<std::size_t> require_permutation(const Framework& f, const FinitaryOrder& ord) {
    auto pos = ord.positions(f.size());
    if (ord.order.size() != f.size() || std::count(pos.begin(), pos.end(), f.size()) != 0) {
        throw PreconditionError("order must enumerate every argument exactly once");
    }
    return pos;
}

// Components in condensation order, ties broken by order position.
std::vector<ArgSet> ordered_components(const Framework& f, const std::vector<std::size_t>& pos) {
    const auto d = decompose(f);
    std::vector<ArgSet> out;
    for (auto c : topological_order(d, pos)) out.push_back(d.components[c]);
    return out;
}

std::vector<ArgIndex> members_in_order(const ArgSet& x, const FinitaryOrder& ord) {
    std::vector<ArgIndex> out;
    for (auto a : ord.order) {
        if (x.contains(static_cast<ArgIndex>(a))) out.push_back(static_cast<ArgIndex>(a));
    }
    return out;
}

// Backtracking search for a conflict-free B whose range covers `targets`.
class CoverSearch {
public:
    CoverSearch(const Framework& f, std::size_t budget) : f_(f), budget_(budget) {}

    std::optional<ArgSet> find(const ArgSet& targets) {
        nodes_ = 0;
        ArgSet b = f_.none();
        ArgSet blocked = f_.none();
        ArgSet covered = f_.none();
        if (search(targets, b, blocked, covered)) return b;
        return std::nullopt;
    }

private:
    bool search(const ArgSet& targets, ArgSet& b, ArgSet& blocked, ArgSet& covered) {
        if (++nodes_ > budget_) {
            throw LimitExceeded("witness search exceeded " + std::to_string(budget_) + " nodes");
        }
        const ArgSet open = targets - covered;
        if (open.empty()) return true;
        const auto t = static_cast<ArgIndex>(open.first());
        ArgSet options = f_.attackers(t);
        options.insert(t);
        bool found = false;
        options.for_each([&](ArgIndex x) {
            if (found || f_.self_attacking(x) || blocked.contains(x)) return;
            const ArgSet saved_blocked = blocked;
            const ArgSet saved_covered = covered;
            b.insert(x);
            blocked |= f_.attackers(x) | f_.targets(x);
            covered.insert(x);
            covered |= f_.targets(x);
            found = search(targets, b, blocked, covered);
            if (found) return;
            b.erase(x);
            blocked = saved_blocked;
            covered = saved_covered;
        });
        return found;
    }

    const Framework& f_;
    std::size_t budget_;
    std::size_t nodes_ = 0;
};

} // namespace

FinitaryOrder lemma1_order(const Framework& f, std::size_t n) {
    FinitaryOrder out;
    out.order = lemma1_walk(
        std::min(n, f.size()),
        [&](std::size_t a) { return f.attackers(static_cast<ArgIndex>(a)).members(); },
        [&](std::size_t seed) { return seed >= f.size(); });
    out.back_attack_bound = back_bounds(out.order, [&](std::size_t a, std::size_t b) {
        return f.attacks(static_cast<ArgIndex>(a), static_cast<ArgIndex>(b));
    });
    return out;
}

FinitaryOrder lemma1_order(const Framework& f) { return lemma1_order(f, f.size()); }

FinitaryOrder lemma1_order(const Generator& g, std::size_t n) {
    if (!g.finitary()) throw PreconditionError("family " + g.name() + " is not finitary");
    if (auto size = g.size()) n = std::min(n, *size);
    FinitaryOrder out;
    out.order = lemma1_walk(
        n, [&](std::size_t a) { return *g.attackers(a); },
        [&](std::size_t seed) { return g.size() && seed >= *g.size(); });
    out.back_attack_bound = back_bounds(out.order, [&](std::size_t a, std::size_t b) {
        const auto list = *g.attackers(b);
        return std::find(list.begin(), list.end(), a) != list.end();
    });
    return out;
}

ArgSet greedy_cf15(const Framework& f, const FinitaryOrder& ord) {
    const auto pos = require_permutation(f, ord);
    ArgSet s = f.none();
    ArgSet blocked = f.none();
    for (const auto& x : ordered_components(f, pos)) {
        for (auto a : members_in_order(x, ord)) {
            if (f.self_attacking(a) || blocked.contains(a)) continue;
            s.insert(a);
            blocked |= f.attackers(a) | f.targets(a);
        }
    }
    return s;
}

bool is_greedy_cf15(const Framework& f, const FinitaryOrder& ord, const ArgSet& s) {
    const auto pos = require_permutation(f, ord);
    if (!is_conflict_free(f, s)) return false;
    const auto d = decompose(f);
    const ArgSet hit = attacked_by(f, s);
    for (ArgIndex a = 0; a < f.size(); ++a) {
        if (f.self_attacking(a) || s.contains(a) || hit.contains(a)) continue;
        bool earlier = false;
        (f.targets(a) & s & d.components[d.component_of[a]]).for_each([&](ArgIndex x) {
            if (pos[x] < pos[a]) earlier = true;
        });
        if (!earlier) return false;
    }
    return true;
}

bool lex_greater(const ArgSet& a, const ArgSet& b, const std::vector<std::size_t>& order) {
    for (auto x : order) {
        const auto arg = static_cast<ArgIndex>(x);
        const bool in_a = a.contains(arg);
        if (in_a != b.contains(arg)) return in_a;
    }
    return false;
}

ArgSet lex_scc_stg15(const Framework& f, const FinitaryOrder& ord, const Limits& limits) {
    const auto pos = require_permutation(f, ord);
    ArgSet s = f.none();
    for (const auto& x : ordered_components(f, pos)) {
        const ArgSet available = x - d_s(f, s, x);
        if (available.count() > limits.component_limit) {
            throw LimitExceeded("component part of size " + std::to_string(available.count()) +
                                " exceeds the selection limit " + std::to_string(limits.component_limit));
        }
        std::optional<ArgSet> best, best_range;
        for (const auto& t : naive_within(f, available)) {
            const ArgSet r = range_within(f, available, t);
            if (!best || lex_greater(r, *best_range, ord.order) ||
                (r == *best_range && lex_greater(t, *best, ord.order))) {
                best = t;
                best_range = r;
            }
        }
        if (best) s |= *best;
    }
    return s;
}

ArgSet lex_greedy_stage(const Framework& f, const FinitaryOrder& ord, const Limits& limits) {
    require_permutation(f, ord);
    CoverSearch search(f, limits.search_limit);
    ArgSet d = f.none();
    for (auto a : ord.order) {
        ArgSet trial = d;
        trial.insert(static_cast<ArgIndex>(a));
        if (search.find(trial)) d = std::move(trial);
    }
    auto witness = search.find(d);
    if (!witness) throw Error("no conflict-free set covers the accumulated range");
    return *witness;
}

} // namespace sccsem
