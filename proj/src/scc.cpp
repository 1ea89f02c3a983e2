#include "sccsem/scc.hpp"

#include "sccsem/errors.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace sccsem {

namespace {

// Iterative Tarjan over the sub-graph induced by `within`. Components come out
// in reverse topological order (sinks first).
std::vector<ArgSet> tarjan(const Framework& f, const ArgSet& within) {
    const std::size_t n = f.size();
    constexpr std::size_t unvisited = no_component;
    std::vector<std::size_t> index(n, unvisited), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<ArgIndex> stack;
    std::vector<ArgSet> out;
    std::size_t counter = 0;

    struct Frame {
        ArgIndex node;
        std::size_t cursor;   // last successor visited, or npos before the first
    };

    for (auto root = within.first(); root != ArgSet::npos; root = within.next(root)) {
        if (index[root] != unvisited) continue;
        std::vector<Frame> call{{static_cast<ArgIndex>(root), ArgSet::npos}};
        index[root] = low[root] = counter++;
        stack.push_back(static_cast<ArgIndex>(root));
        on_stack[root] = true;

        while (!call.empty()) {
            Frame& top = call.back();
            const ArgSet& succ = f.targets(top.node);
            std::size_t next = top.cursor == ArgSet::npos ? succ.first() : succ.next(top.cursor);
            while (next != ArgSet::npos && !within.contains(static_cast<ArgIndex>(next))) {
                next = succ.next(next);
            }
            if (next != ArgSet::npos) {
                top.cursor = next;
                if (index[next] == unvisited) {
                    index[next] = low[next] = counter++;
                    stack.push_back(static_cast<ArgIndex>(next));
                    on_stack[next] = true;
                    call.push_back({static_cast<ArgIndex>(next), ArgSet::npos});
                } else if (on_stack[next]) {
                    low[top.node] = std::min(low[top.node], index[next]);
                }
                continue;
            }
            const ArgIndex v = top.node;
            call.pop_back();
            if (!call.empty()) low[call.back().node] = std::min(low[call.back().node], low[v]);
            if (low[v] == index[v]) {
                ArgSet comp(n);
                ArgIndex w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    comp.insert(w);
                } while (w != v);
                out.push_back(std::move(comp));
            }
        }
    }
    return out;
}

SccDecomposition assemble(const Framework& f, std::vector<ArgSet> raw) {
    const std::size_t k = raw.size();
    std::vector<std::size_t> raw_of(f.size(), no_component);
    for (std::size_t c = 0; c < k; ++c) raw[c].for_each([&](ArgIndex a) { raw_of[a] = c; });

    std::set<std::pair<std::size_t, std::size_t>> raw_edges;
    for (std::size_t c = 0; c < k; ++c) {
        raw[c].for_each([&](ArgIndex a) {
            f.targets(a).for_each([&](ArgIndex b) {
                const auto d = raw_of[b];
                if (d != no_component && d != c) raw_edges.emplace(c, d);
            });
        });
    }

    SccDecomposition tmp;
    tmp.components = std::move(raw);
    tmp.condensation_edges.assign(raw_edges.begin(), raw_edges.end());
    std::vector<std::size_t> rank(f.size());
    for (std::size_t a = 0; a < f.size(); ++a) rank[a] = a;
    const auto order = topological_order(tmp, rank);

    std::vector<std::size_t> renumber(k);
    SccDecomposition d;
    for (std::size_t pos = 0; pos < k; ++pos) {
        renumber[order[pos]] = pos;
        d.components.push_back(tmp.components[order[pos]]);
    }
    d.component_of.assign(f.size(), no_component);
    for (std::size_t c = 0; c < k; ++c) d.components[c].for_each([&](ArgIndex a) { d.component_of[a] = c; });
    for (const auto& [x, y] : tmp.condensation_edges) d.condensation_edges.emplace_back(renumber[x], renumber[y]);
    std::sort(d.condensation_edges.begin(), d.condensation_edges.end());
    return d;
}

} // namespace

std::vector<std::size_t> SccDecomposition::predecessors(std::size_t c) const {
    std::vector<std::size_t> out;
    for (const auto& [x, y] : condensation_edges) {
        if (y == c) out.push_back(x);
    }
    return out;
}

SccDecomposition decompose(const Framework& f) { return decompose(f, f.all()); }

SccDecomposition decompose(const Framework& f, const ArgSet& within) {
    return assemble(f, tarjan(f, within));
}

std::vector<std::size_t> topological_order(const SccDecomposition& d,
                                           const std::vector<std::size_t>& rank) {
    const std::size_t k = d.components.size();
    std::vector<std::size_t> key(k, no_component), indegree(k, 0);
    for (std::size_t c = 0; c < k; ++c) {
        d.components[c].for_each([&](ArgIndex a) { key[c] = std::min(key[c], rank[a]); });
    }
    std::vector<std::vector<std::size_t>> out_edges(k);
    for (const auto& [x, y] : d.condensation_edges) {
        out_edges[x].push_back(y);
        ++indegree[y];
    }
    using Item = std::pair<std::size_t, std::size_t>;   // (key, component)
    std::priority_queue<Item, std::vector<Item>, std::greater<>> ready;
    for (std::size_t c = 0; c < k; ++c) {
        if (indegree[c] == 0) ready.emplace(key[c], c);
    }
    std::vector<std::size_t> order;
    order.reserve(k);
    while (!ready.empty()) {
        const auto c = ready.top().second;
        ready.pop();
        order.push_back(c);
        for (auto y : out_edges[c]) {
            if (--indegree[y] == 0) ready.emplace(key[y], y);
        }
    }
    return order;
}

ArgSet reachable_from(const Framework& f, const ArgSet& within, ArgIndex from) {
    ArgSet seen = f.none();
    if (!within.contains(from)) return seen;
    std::vector<ArgIndex> todo{from};
    seen.insert(from);
    while (!todo.empty()) {
        const auto v = todo.back();
        todo.pop_back();
        f.targets(v).for_each([&](ArgIndex w) {
            if (within.contains(w) && !seen.contains(w)) {
                seen.insert(w);
                todo.push_back(w);
            }
        });
    }
    return seen;
}

ArgSet reaching(const Framework& f, const ArgSet& within, ArgIndex to) {
    ArgSet seen = f.none();
    if (!within.contains(to)) return seen;
    std::vector<ArgIndex> todo{to};
    seen.insert(to);
    while (!todo.empty()) {
        const auto v = todo.back();
        todo.pop_back();
        f.attackers(v).for_each([&](ArgIndex w) {
            if (within.contains(w) && !seen.contains(w)) {
                seen.insert(w);
                todo.push_back(w);
            }
        });
    }
    return seen;
}

ArgSet component_of(const Framework& f, const ArgSet& within, ArgIndex a) {
    return reachable_from(f, within, a) & reaching(f, within, a);
}

ArgSet d_s(const Framework& f, const ArgSet& s, const ArgSet& x) {
    return x & attacked_by(f, s - x);
}

bool is_unattacked(const Framework& f, const ArgSet& u) {
    return !attackers_of(f, u).intersects(u.complement());
}

std::vector<ArgSet> unattacked_sets(const Framework& f, std::size_t cap) {
    const auto d = decompose(f);
    const std::size_t k = d.count();
    std::vector<std::vector<std::size_t>> preds(k);
    for (const auto& [x, y] : d.condensation_edges) preds[y].push_back(x);

    std::vector<ArgSet> out;
    std::vector<bool> chosen(k, false);
    // Components are topologically sorted, so every predecessor is decided
    // before the component that depends on it.
    auto walk = [&](auto&& self, std::size_t c, ArgSet& acc) -> void {
        if (c == k) {
            if (out.size() >= cap) {
                throw LimitExceeded("more than " + std::to_string(cap) + " unattacked sets");
            }
            out.push_back(acc);
            return;
        }
        self(self, c + 1, acc);
        const bool closed = std::all_of(preds[c].begin(), preds[c].end(),
                                        [&](std::size_t p) { return chosen[p]; });
        if (closed) {
            chosen[c] = true;
            ArgSet with = acc | d.components[c];
            self(self, c + 1, with);
            chosen[c] = false;
        }
    };
    ArgSet start = f.none();
    walk(walk, 0, start);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace sccsem
