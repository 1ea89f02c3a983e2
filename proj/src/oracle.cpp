#include "sccsem/oracle.hpp"

#include "sccsem/errors.hpp"

#include <bit>
#include <random>
#include <string>

namespace sccsem::oracle {

namespace {

using Mask = std::uint32_t;

bool has(Mask m, std::size_t i) { return (m >> i) & 1u; }

struct Graph {
    std::size_t n = 0;
    std::vector<Mask> out;   // out[i]: arguments attacked by i
    std::vector<Mask> in;    // in[i]: attackers of i

    explicit Graph(const Framework& f) : n(f.size()), out(f.size(), 0), in(f.size(), 0) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (f.attacks(static_cast<ArgIndex>(i), static_cast<ArgIndex>(j))) {
                    out[i] |= Mask{1} << j;
                    in[j] |= Mask{1} << i;
                }
            }
        }
    }

    Mask plus(Mask s) const {
        Mask r = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (has(s, i)) r |= out[i];
        }
        return r;
    }

    bool conflict_free(Mask s) const { return (plus(s) & s) == 0; }

    // Everything reachable from i by paths inside w (i itself included when in w).
    Mask reach(Mask w, std::size_t i) const {
        if (!has(w, i)) return 0;
        Mask seen = Mask{1} << i;
        for (;;) {
            Mask grown = seen | (plus(seen) & w);
            if (grown == seen) return seen;
            seen = grown;
        }
    }

    // Strongly connected components of the sub-framework on w.
    std::vector<Mask> components(Mask w) const {
        std::vector<Mask> out_components;
        Mask left = w;
        while (left) {
            const auto i = static_cast<std::size_t>(std::countr_zero(left));
            Mask comp = 0;
            const Mask fwd = reach(w, i);
            for (std::size_t j = 0; j < n; ++j) {
                if (has(fwd, j) && has(reach(w, j), i)) comp |= Mask{1} << j;
            }
            out_components.push_back(comp);
            left &= ~comp;
        }
        return out_components;
    }

    Mask component_of(Mask w, std::size_t a) const {
        for (Mask c : components(w)) {
            if (has(c, a)) return c;
        }
        return 0;
    }

    // {b ∈ X : some member of S outside X attacks b}
    Mask invalidated(Mask s, Mask x) const { return plus(s & ~x) & x; }

    // S ⊆ w maximal conflict-free inside w.
    bool naive_in(Mask w, Mask s) const {
        if ((s & ~w) || !conflict_free(s)) return false;
        for (std::size_t a = 0; a < n; ++a) {
            if (has(w, a) && !has(s, a) && conflict_free(s | (Mask{1} << a))) return false;
        }
        return true;
    }

    // S ⊆ w conflict-free and no conflict-free T ⊆ w has a strictly larger range inside w.
    bool stage_in(Mask w, Mask s) const {
        if ((s & ~w) || !conflict_free(s)) return false;
        const Mask mine = (s | plus(s)) & w;
        for (Mask t = w;; t = (t - 1) & w) {
            if (conflict_free(t)) {
                const Mask theirs = (t | plus(t)) & w;
                if ((mine & ~theirs) == 0 && mine != theirs) return false;
            }
            if (t == 0) break;
        }
        return true;
    }

    bool base(bool stage, Mask w, Mask s) const { return stage ? stage_in(w, s) : naive_in(w, s); }

    // The SCC-recursive schema evaluated on the sub-framework w.
    bool recursive(bool stage, Mask w, Mask s) const {
        s &= w;
        const auto comps = components(w);
        if (comps.size() == 1) return base(stage, w, s);
        for (Mask x : comps) {
            const Mask rest = x & ~invalidated(s, x);
            if (s & x & ~rest) return false;
            if (!recursive(stage, rest, s & x)) return false;
        }
        return true;
    }

    // Iterated components: accept iff each argument that survives to its
    // stable component sees S restricted there as a naive/stage extension.
    bool iterated(bool stage, Mask s) const {
        if (!conflict_free(s)) return false;
        const Mask all = (Mask{1} << n) - 1;
        for (std::size_t a = 0; a < n; ++a) {
            Mask c = component_of(all, a);
            for (;;) {
                if (!has(c, a)) break;
                const Mask next = component_of(c & ~invalidated(s, c), a);
                if (next == c) break;
                c = next;
            }
            if (has(c, a) && !base(stage, c, s & c)) return false;
        }
        return true;
    }

    bool prioritised(bool stage, Mask s) const {
        if (!conflict_free(s)) return false;
        const Mask all = (Mask{1} << n) - 1;
        for (Mask x : components(all)) {
            if (!base(stage, x & ~invalidated(s, x), s & x)) return false;
        }
        return true;
    }

    Mask defended(Mask s) const {
        const Mask hit = plus(s);
        Mask r = 0;
        for (std::size_t a = 0; a < n; ++a) {
            if ((in[a] & ~hit) == 0) r |= Mask{1} << a;
        }
        return r;
    }

    // The ⊆-least fixed point of the characteristic function, by scanning.
    Mask least_fixed_point() const {
        const Mask all = (Mask{1} << n) - 1;
        Mask least = all;
        for (Mask s = 0;; ++s) {
            if (defended(s) == s) least &= s;
            if (s == all) break;
        }
        return least;
    }
};

ArgSet to_set(Mask m, std::size_t n) {
    ArgSet s(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (has(m, i)) s.insert(static_cast<ArgIndex>(i));
    }
    return s;
}

bool member(const Graph& g, Semantics which, Mask s) {
    const Mask all = (Mask{1} << g.n) - 1;
    switch (which) {
    case Semantics::conflict_free: return g.conflict_free(s);
    case Semantics::naive: return g.naive_in(all, s);
    case Semantics::stage: return g.stage_in(all, s);
    case Semantics::grounded: return s == g.least_fixed_point();
    case Semantics::cf2: return g.recursive(false, all, s);
    case Semantics::stg2: return g.recursive(true, all, s);
    case Semantics::icf2: return g.iterated(false, s);
    case Semantics::istg2: return g.iterated(true, s);
    case Semantics::cf15: return g.prioritised(false, s);
    case Semantics::stg15: return g.prioritised(true, s);
    }
    return false;
}

void check_size(const Framework& f) {
    if (f.size() > max_args) {
        throw LimitExceeded("oracle handles at most " + std::to_string(max_args) + " arguments, got " +
                            std::to_string(f.size()));
    }
}

double uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

} // namespace

bool is_member(const Framework& f, Semantics which, std::uint32_t set) {
    check_size(f);
    return member(Graph(f), which, set);
}

ExtensionSet brute_force(const Framework& f, Semantics which) {
    check_size(f);
    const Graph g(f);
    const Mask all = (Mask{1} << g.n) - 1;
    std::vector<ArgSet> found;
    if (which == Semantics::grounded) {
        found.push_back(to_set(g.least_fixed_point(), g.n));
    } else {
        for (Mask s = 0;; ++s) {
            if (member(g, which, s)) found.push_back(to_set(s, g.n));
            if (s == all) break;
        }
    }
    return ExtensionSet(f.size(), std::move(found));
}

Framework random_framework(std::size_t n, double edge_prob, double self_attack_prob, std::uint64_t seed) {
    if (n < 1 || n > max_args) throw PreconditionError("random frameworks have 1.." + std::to_string(max_args) + " arguments");
    if (!(edge_prob >= 0 && edge_prob <= 1 && self_attack_prob >= 0 && self_attack_prob <= 1)) {
        throw PreconditionError("probabilities must lie in [0,1]");
    }
    std::mt19937_64 rng(seed);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back("a" + std::to_string(i));
    std::vector<Attack> attacks;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double p = i == j ? self_attack_prob : edge_prob;
            if (uniform(rng) < p) attacks.push_back({static_cast<ArgIndex>(i), static_cast<ArgIndex>(j)});
        }
    }
    return Framework(std::move(labels), attacks);
}

std::vector<Framework> random_corpus(std::size_t count, std::size_t max_n, std::uint64_t seed) {
    if (max_n < 1 || max_n > max_args) throw PreconditionError("corpus frameworks have 1.." + std::to_string(max_args) + " arguments");
    std::mt19937_64 rng(seed);
    std::vector<Framework> out;
    out.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        const std::size_t n = 1 + static_cast<std::size_t>(rng() % max_n);
        const double edge = 0.1 + 0.4 * uniform(rng);
        const double self = 0.15 * uniform(rng);
        out.push_back(random_framework(n, edge, self, rng()));
    }
    return out;
}

} // namespace sccsem::oracle
