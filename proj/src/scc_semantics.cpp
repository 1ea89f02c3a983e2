#include "sccsem/scc_semantics.hpp"

#include "sccsem/base_semantics.hpp"
#include "sccsem/errors.hpp"
#include "sccsem/scc.hpp"

#include <algorithm>
#include <map>

namespace sccsem {

namespace {

enum class Base { naive, stage };

bool base_holds(Base base, const Framework& f, const ArgSet& within, const ArgSet& s, const Limits& limits) {
    return base == Base::naive ? is_naive_within(f, within, s) : is_stage_within(f, within, s, limits);
}

class RecursiveCheck {
public:
    RecursiveCheck(const Framework& f, const ArgSet& s, Base base, const Limits& limits)
        : f_(f), s_(s), base_(base), limits_(limits) {}

    bool holds(const ArgSet& within) {
        if (auto it = memo_.find(within); it != memo_.end()) return it->second;
        const bool result = evaluate(within);
        memo_.emplace(within, result);
        return result;
    }

private:
    bool evaluate(const ArgSet& within) {
        const ArgSet local = s_ & within;
        const auto d = decompose(f_, within);
        if (d.count() == 1) return base_holds(base_, f_, within, local, limits_);
        for (const auto& x : d.components) {
            const ArgSet remaining = x - d_s(f_, local, x);
            // S ∩ X must be an extension of the restriction, hence a subset of it.
            if (!(local & x).is_subset_of(remaining)) return false;
            if (!holds(remaining)) return false;
        }
        return true;
    }

    const Framework& f_;
    ArgSet s_;
    Base base_;
    const Limits& limits_;
    std::map<ArgSet, bool> memo_;
};

bool fixed_point_check(const Framework& f, const ArgSet& s, Base base, const Limits& limits) {
    if (!is_conflict_free(f, s)) return false;
    const ArgSet rest = f.all() - delta_lfp(f, s).fixed_point;
    if (!s.is_subset_of(rest)) return false;
    for (const auto& x : decompose(f, rest).components) {
        if (!base_holds(base, f, x, s & x, limits)) return false;
    }
    return true;
}

bool prioritised_check(const Framework& f, const ArgSet& s, Base base, const Limits& limits) {
    if (!is_conflict_free(f, s)) return false;
    for (const auto& x : decompose(f).components) {
        const ArgSet remaining = x - d_s(f, s, x);
        if (!base_holds(base, f, remaining, s & x, limits)) return false;
    }
    return true;
}

} // namespace

bool is_cf2(const Framework& f, const ArgSet& s, const Limits& limits) {
    return RecursiveCheck(f, s, Base::naive, limits).holds(f.all());
}

bool is_stg2(const Framework& f, const ArgSet& s, const Limits& limits) {
    return RecursiveCheck(f, s, Base::stage, limits).holds(f.all());
}

bool reachable_mod(const Framework& f, const ArgSet& b_set, ArgIndex a, ArgIndex b) {
    return b_set.contains(b) && reachable_from(f, b_set, a).contains(b);
}

ArgSet delta_step(const Framework& f, const ArgSet& s, const ArgSet& d) {
    const ArgSet alive = f.all() - d;
    ArgSet out = f.none();
    s.for_each([&](ArgIndex b) {
        // Attacked arguments that cannot get back to b while avoiding D.
        out |= f.targets(b) - reaching(f, alive, b);
    });
    return out;
}

DeltaTrace delta_lfp(const Framework& f, const ArgSet& s) {
    DeltaTrace t;
    t.stages.push_back(f.none());
    for (;;) {
        ArgSet next = delta_step(f, s, t.stages.back());
        if (next == t.stages.back()) break;
        t.stages.push_back(std::move(next));
    }
    t.fixed_point = t.stages.back();
    t.steps = t.stages.size() - 1;
    return t;
}

Framework separation(const Framework& f) {
    const auto d = decompose(f);
    std::vector<Attack> kept;
    for (const auto& att : f.attack_list()) {
        if (d.component_of[att.attacker] == d.component_of[att.target]) kept.push_back(att);
    }
    return Framework(f.labels(), kept);
}

bool is_icf2(const Framework& f, const ArgSet& s, const Limits& limits) {
    return fixed_point_check(f, s, Base::naive, limits);
}

bool is_istg2(const Framework& f, const ArgSet& s, const Limits& limits) {
    return fixed_point_check(f, s, Base::stage, limits);
}

ComponentTrace component_trace(const Framework& f, const ArgSet& s, ArgIndex a) {
    ComponentTrace t;
    t.argument = a;
    t.stages.push_back(component_of(f, f.all(), a));
    for (;;) {
        const ArgSet& current = t.stages.back();
        if (!current.contains(a)) break;
        ArgSet next = component_of(f, current - d_s(f, s, current), a);
        if (next == current) break;
        t.stages.push_back(std::move(next));
    }
    t.comp_ordinal = t.stages.size() - 1;
    t.survived = t.stages.back().contains(a);
    return t;
}

bool is_cf15(const Framework& f, const ArgSet& s, const Limits& limits) {
    return prioritised_check(f, s, Base::naive, limits);
}

bool is_stg15(const Framework& f, const ArgSet& s, const Limits& limits) {
    return prioritised_check(f, s, Base::stage, limits);
}

bool is_extension(const Framework& f, Semantics which, const ArgSet& s, const Limits& limits) {
    switch (which) {
    case Semantics::conflict_free: return is_conflict_free(f, s);
    case Semantics::naive: return is_naive(f, s);
    case Semantics::grounded: return s == grounded(f);
    case Semantics::stage: return is_stage(f, s, limits);
    case Semantics::cf2: return is_cf2(f, s, limits);
    case Semantics::stg2: return is_stg2(f, s, limits);
    case Semantics::icf2: return is_icf2(f, s, limits);
    case Semantics::istg2: return is_istg2(f, s, limits);
    case Semantics::cf15: return is_cf15(f, s, limits);
    case Semantics::stg15: return is_stg15(f, s, limits);
    }
    return false;
}

ExtensionSet enumerate_semantics(const Framework& f, Semantics which, const Limits& limits) {
    switch (which) {
    case Semantics::conflict_free: return enumerate_conflict_free(f, limits);
    case Semantics::naive: return enumerate_naive(f, limits);
    case Semantics::stage: return enumerate_stage(f, limits);
    case Semantics::grounded: return ExtensionSet(f.size(), {grounded(f)});
    default: break;
    }
    const auto candidates = enumerate_naive(f, limits);
    std::vector<ArgSet> accepted;
    std::copy_if(candidates.extensions.begin(), candidates.extensions.end(), std::back_inserter(accepted),
                 [&](const ArgSet& s) { return is_extension(f, which, s, limits); });
    return ExtensionSet(f.size(), std::move(accepted));
}

} // namespace sccsem
