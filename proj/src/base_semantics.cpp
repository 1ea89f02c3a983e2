#include "sccsem/base_semantics.hpp"

#include "sccsem/errors.hpp"

#include <algorithm>
#include <string>

namespace sccsem {

namespace {

void check_size(std::size_t n, const Limits& limits) {
    if (n > limits.max_args) {
        throw LimitExceeded("framework has " + std::to_string(n) + " arguments; enumeration limit is " +
                            std::to_string(limits.max_args));
    }
}

ArgSet conflicting(const Framework& f, ArgIndex a) { return f.attackers(a) | f.targets(a); }

// Tomita-style pivoting over the compatibility graph restricted to `within`.
class NaiveEnumerator {
public:
    NaiveEnumerator(const Framework& f, const ArgSet& within) : f_(f), compat_(f.size()) {
        candidates_ = f.none();
        within.for_each([&](ArgIndex a) {
            if (!f.self_attacking(a)) candidates_.insert(a);
        });
        candidates_.for_each([&](ArgIndex a) {
            compat_[a] = candidates_ - conflicting(f, a);
            compat_[a].erase(a);
        });
    }

    std::vector<ArgSet> run() {
        ArgSet r = f_.none();
        ArgSet x = f_.none();
        expand(r, candidates_, x);
        return std::move(found_);
    }

private:
    void expand(ArgSet& r, ArgSet p, ArgSet x) {
        if (p.empty()) {
            if (x.empty()) found_.push_back(r);
            return;
        }
        const ArgSet px = p | x;
        ArgIndex pivot = static_cast<ArgIndex>(px.first());
        std::size_t best = 0;
        px.for_each([&](ArgIndex u) {
            const auto c = (p & compat_[u]).count();
            if (c > best) {
                best = c;
                pivot = u;
            }
        });
        const ArgSet branch = p - compat_[pivot];
        branch.for_each([&](ArgIndex v) {
            r.insert(v);
            expand(r, p & compat_[v], x & compat_[v]);
            r.erase(v);
            p.erase(v);
            x.insert(v);
        });
    }

    const Framework& f_;
    std::vector<ArgSet> compat_;
    ArgSet candidates_;
    std::vector<ArgSet> found_;
};

} // namespace

ArgSet range_within(const Framework& f, const ArgSet& within, const ArgSet& s) {
    return range_of(f, s) & within;
}

std::vector<ArgSet> naive_within(const Framework& f, const ArgSet& within) {
    return NaiveEnumerator(f, within).run();
}

bool is_naive_within(const Framework& f, const ArgSet& within, const ArgSet& s) {
    if (!s.is_subset_of(within) || !is_conflict_free(f, s)) return false;
    const ArgSet blocked = attacked_by(f, s) | attackers_of(f, s);
    bool maximal = true;
    (within - s).for_each([&](ArgIndex a) {
        if (maximal && !f.self_attacking(a) && !blocked.contains(a)) maximal = false;
    });
    return maximal;
}

bool is_stage_within(const Framework& f, const ArgSet& within, const ArgSet& s, const Limits& limits) {
    if (!is_naive_within(f, within, s)) return false;
    check_size(within.count(), limits);
    const ArgSet mine = range_within(f, within, s);
    for (const auto& t : naive_within(f, within)) {
        if (mine.is_proper_subset_of(range_within(f, within, t))) return false;
    }
    return true;
}

bool is_naive(const Framework& f, const ArgSet& s) { return is_naive_within(f, f.all(), s); }

bool is_stage(const Framework& f, const ArgSet& s, const Limits& limits) {
    return is_stage_within(f, f.all(), s, limits);
}

ExtensionSet enumerate_conflict_free(const Framework& f, const Limits& limits) {
    check_size(f.size(), limits);
    std::vector<ArgSet> out;
    ArgSet current = f.none();
    ArgSet blocked = f.none();
    // Depth-first over arguments in index order; `blocked` holds everything in
    // conflict with the current set.
    auto walk = [&](auto&& self, std::size_t next) -> void {
        out.push_back(current);
        for (std::size_t a = next; a < f.size(); ++a) {
            const auto arg = static_cast<ArgIndex>(a);
            if (f.self_attacking(arg) || blocked.contains(arg)) continue;
            const ArgSet saved = blocked;
            current.insert(arg);
            blocked |= conflicting(f, arg);
            self(self, a + 1);
            current.erase(arg);
            blocked = saved;
        }
    };
    walk(walk, 0);
    return ExtensionSet(f.size(), std::move(out));
}

ExtensionSet enumerate_naive(const Framework& f, const Limits& limits) {
    check_size(f.size(), limits);
    return ExtensionSet(f.size(), naive_within(f, f.all()));
}

ExtensionSet enumerate_stage(const Framework& f, const Limits& limits) {
    check_size(f.size(), limits);
    const auto naive = naive_within(f, f.all());
    std::vector<ArgSet> ranges;
    ranges.reserve(naive.size());
    for (const auto& s : naive) ranges.push_back(range_of(f, s));
    std::vector<ArgSet> out;
    for (std::size_t i = 0; i < naive.size(); ++i) {
        const bool dominated = std::any_of(ranges.begin(), ranges.end(), [&](const ArgSet& r) {
            return ranges[i].is_proper_subset_of(r);
        });
        if (!dominated) out.push_back(naive[i]);
    }
    return ExtensionSet(f.size(), std::move(out));
}

ArgSet grounded(const Framework& f) {
    ArgSet current = f.none();
    for (;;) {
        ArgSet next = characteristic(f, current);
        if (next == current) return current;
        current = std::move(next);
    }
}

} // namespace sccsem
