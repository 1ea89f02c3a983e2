#include "sccsem/criteria.hpp"

#include "sccsem/base_semantics.hpp"
#include "sccsem/errors.hpp"
#include "sccsem/scc.hpp"
#include "sccsem/scc_semantics.hpp"

#include <algorithm>

namespace sccsem {

namespace {

CriterionReport failed(std::string name, Witness w) { return {std::move(name), false, std::move(w)}; }

ArgSet intersection(const ExtensionSet& t) {
    ArgSet out = ArgSet::full(t.universe);
    for (const auto& e : t.extensions) out &= e;
    return out;
}

} // namespace

std::string_view to_string(Reinstatement r) {
    switch (r) {
    case Reinstatement::plain: return "reinstatement";
    case Reinstatement::weak: return "weak-reinstatement";
    case Reinstatement::cf: return "cf-reinstatement";
    }
    return "?";
}

std::string_view to_string(Skepticism r) { return r == Skepticism::cap ? "cap" : "weak"; }

CriterionReport check_i_maximality(const ExtensionSet& es) {
    for (const auto& s1 : es.extensions) {
        for (const auto& s2 : es.extensions) {
            if (s1.is_proper_subset_of(s2)) return failed("i-maximality", {{{"S1", s1}, {"S2", s2}}, {}, {}});
        }
    }
    return {"i-maximality", true, {}};
}

CriterionReport check_reinstatement(const Framework& f, const ExtensionSet& es, Reinstatement variant) {
    const std::string name(to_string(variant));
    const ArgSet g = variant == Reinstatement::weak ? grounded(f) : f.none();
    for (const auto& s : es.extensions) {
        std::optional<ArgIndex> missing;
        if (variant == Reinstatement::weak) {
            const ArgSet lost = g - s;
            if (!lost.empty()) missing = static_cast<ArgIndex>(lost.first());
        } else {
            const ArgSet outside = characteristic(f, s) - s;
            outside.for_each([&](ArgIndex a) {
                if (missing) return;
                if (variant == Reinstatement::cf) {
                    ArgSet grown = s;
                    grown.insert(a);
                    if (!is_conflict_free(f, grown)) return;
                }
                missing = a;
            });
        }
        if (missing) return failed(name, {{{"S", s}}, {{"a", *missing}}, {}});
    }
    return {name, true, {}};
}

CriterionReport check_directionality(const Framework& f, Semantics which, const std::optional<ArgSet>& u,
                                     const Limits& limits) {
    std::vector<ArgSet> tested;
    if (u) {
        if (!is_unattacked(f, *u)) throw PreconditionError("U is attacked from outside");
        tested.push_back(*u);
    } else {
        tested = unattacked_sets(f, limits.unattacked_cap);
    }
    const ExtensionSet whole = enumerate_semantics(f, which, limits);
    for (const auto& set : tested) {
        const Restriction r = restrict(f, set);
        std::vector<ArgSet> lifted;
        for (const auto& e : enumerate_semantics(r.frame, which, limits).extensions) lifted.push_back(r.lift(e));
        ExtensionSet local(f.size(), std::move(lifted));
        std::vector<ArgSet> cut;
        for (const auto& e : whole.extensions) cut.push_back(e & set);
        ExtensionSet projected(f.size(), std::move(cut));
        if (local != projected) {
            return failed("directionality",
                          {{{"U", set}}, {}, {{"restricted", std::move(local)}, {"projected", std::move(projected)}}});
        }
    }
    return {"directionality", true, {}};
}

bool skepticism_compare(const ExtensionSet& t1, const ExtensionSet& t2, Skepticism rel) {
    if (t1.universe != t2.universe) throw PreconditionError("extension sets over different universes");
    if (rel == Skepticism::cap) return intersection(t1).is_subset_of(intersection(t2));
    return std::all_of(t2.extensions.begin(), t2.extensions.end(), [&](const ArgSet& s2) {
        return std::any_of(t1.extensions.begin(), t1.extensions.end(),
                           [&](const ArgSet& s1) { return s1.is_subset_of(s2); });
    });
}

CriterionReport check_skepticism_adequacy(const Framework& f, const Framework& g, Semantics which, Skepticism rel,
                                          const Limits& limits) {
    if (f.labels() != g.labels()) throw PreconditionError("frameworks must share their argument list");
    const auto rf = f.attack_list();
    for (const auto& att : g.attack_list()) {
        if (!std::binary_search(rf.begin(), rf.end(), att)) {
            throw PreconditionError("attacks of G must be attacks of F");
        }
    }
    if (conflicts(f) != conflicts(g)) throw PreconditionError("F and G must have the same conflicts");
    const std::string name = "skepticism-adequacy(" + std::string(to_string(rel)) + ")";
    ExtensionSet sf = enumerate_semantics(f, which, limits);
    ExtensionSet sg = enumerate_semantics(g, which, limits);
    if (skepticism_compare(sf, sg, rel)) return {name, true, {}};
    return failed(name, {{}, {}, {{"F", std::move(sf)}, {"G", std::move(sg)}}});
}

} // namespace sccsem
