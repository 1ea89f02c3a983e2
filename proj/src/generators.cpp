#include "sccsem/generators.hpp"

#include "sccsem/errors.hpp"
#include "sccsem/scc_semantics.hpp"

#include <algorithm>
#include <charconv>
#include <set>

namespace sccsem {

namespace {

std::optional<std::size_t> parse_count(std::string_view text) {
    std::size_t value = 0;
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end || text.empty()) return std::nullopt;
    return value;
}

std::size_t count_param(const Params& params, std::string_view key, std::optional<std::size_t> fallback) {
    auto it = params.find(key);
    if (it == params.end()) {
        if (fallback) return *fallback;
        throw PreconditionError("missing parameter '" + std::string(key) + "'");
    }
    auto v = parse_count(it->second);
    if (!v) throw PreconditionError("parameter '" + std::string(key) + "' must be a non-negative integer");
    return *v;
}

void reject_unknown(const Params& params, std::initializer_list<std::string_view> known) {
    for (const auto& [k, v] : params) {
        if (std::find(known.begin(), known.end(), k) == known.end()) {
            throw PreconditionError("unknown parameter '" + k + "'");
        }
    }
}

// --- bs_ladder -------------------------------------------------------------

class Ladder final : public Generator {
public:
    explicit Ladder(Params p) : Generator("bs_ladder", std::move(p)) { reject_unknown(params(), {}); }

    std::optional<std::size_t> size() const override { return std::nullopt; }

    std::string decode(std::size_t index) const override {
        return (index % 2 == 0 ? "a" : "b") + std::to_string(index / 2 + 1);
    }

    std::optional<std::size_t> encode(std::string_view label) const override {
        if (label.size() < 2 || (label[0] != 'a' && label[0] != 'b')) return std::nullopt;
        auto i = parse_count(label.substr(1));
        if (!i || *i == 0) return std::nullopt;
        return 2 * (*i - 1) + (label[0] == 'b' ? 1 : 0);
    }

    // a_i is attacked by b_i and a_{i+1}; b_i (i ≥ 2) by a_{i-1}.
    std::optional<std::vector<std::size_t>> attackers(std::size_t index) const override {
        const std::size_t i = index / 2;
        if (index % 2 == 0) return std::vector<std::size_t>{index + 1, index + 2};
        if (i == 0) return std::vector<std::size_t>{};
        return std::vector<std::size_t>{2 * (i - 1)};
    }
};

// --- omega chains ------------------------------------------------------------

class OmegaChain final : public Generator {
public:
    OmegaChain(Params p, bool with_xy)
        : Generator(with_xy ? "omega_chain_xy" : "omega_chain", std::move(p)), offset_(with_xy ? 2 : 0) {
        reject_unknown(params(), {});
    }

    std::optional<std::size_t> size() const override { return std::nullopt; }
    bool finitary() const override { return false; }

    std::string decode(std::size_t index) const override {
        if (offset_ == 2 && index < 2) return index == 0 ? "x" : "y";
        return "a" + std::to_string(index - offset_);
    }

    std::optional<std::size_t> encode(std::string_view label) const override {
        if (offset_ == 2 && label == "x") return 0;
        if (offset_ == 2 && label == "y") return 1;
        if (label.size() < 2 || label[0] != 'a') return std::nullopt;
        auto i = parse_count(label.substr(1));
        if (!i) return std::nullopt;
        return *i + offset_;
    }

    std::optional<std::vector<std::size_t>> attackers(std::size_t index) const override {
        if (offset_ == 2 && index < 2) return std::vector<std::size_t>{1 - index};
        return std::nullopt;   // every later chain element attacks it
    }

    std::vector<std::size_t> attackers_in_prefix(std::size_t index, std::size_t n) const override {
        if (offset_ == 2 && index < 2) return n > 1 - index ? std::vector<std::size_t>{1 - index} : std::vector<std::size_t>{};
        std::vector<std::size_t> out;
        if (offset_ == 2) out.push_back(0);
        for (std::size_t j = index + 1; j < n; ++j) out.push_back(j);
        return out;
    }

private:
    std::size_t offset_;
};

// --- tree_scc ------------------------------------------------------------------

bool shortlex_less(const std::string& a, const std::string& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
}

std::string string_name(const std::string& sigma) { return sigma.empty() ? "e" : sigma; }

// One strongly connected component X_σ per tree string σ, with
//   a_i → c_{i+1} → a_{i+1} → b_i → a_i,   a_0 → d → c_1,   d → d,
// and a^{τ_j}_0 → a^σ_j where τ_1, τ_2, ... lists (shortlex) the tree strings
// longer than σ that do not extend σ.
class TreeScc final : public Generator {
public:
    explicit TreeScc(Params p) : Generator("tree_scc", std::move(p)) {
        reject_unknown(params(), {"tree"});
        auto it = params().find("tree");
        if (it == params().end()) throw PreconditionError("tree_scc requires parameter 'tree'");
        std::set<std::string> strings;
        std::string_view text = it->second;
        std::size_t start = 0;
        while (start <= text.size()) {
            auto comma = text.find(',', start);
            if (comma == std::string_view::npos) comma = text.size();
            std::string token(text.substr(start, comma - start));
            if (token == "e" || token == "ε") token.clear();
            if (!std::all_of(token.begin(), token.end(), [](char c) { return c >= '0' && c <= '9'; })) {
                throw PreconditionError("tree strings are digit sequences; got '" + token + "'");
            }
            strings.insert(token);
            start = comma + 1;
        }
        for (const auto& s : strings) {
            if (!s.empty() && !strings.count(s.substr(0, s.size() - 1))) {
                throw PreconditionError("tree is not prefix-closed: '" + s + "' lacks its parent");
            }
        }
        tree_.assign(strings.begin(), strings.end());
        std::sort(tree_.begin(), tree_.end(), shortlex_less);
        for (std::size_t p = 0; p < tree_.size(); ++p) {
            std::vector<std::size_t> qual;
            for (std::size_t q = 0; q < tree_.size(); ++q) {
                const auto& sigma = tree_[p];
                const auto& tau = tree_[q];
                if (tau.size() > sigma.size() && tau.compare(0, sigma.size(), sigma) != 0) qual.push_back(q);
            }
            qualifiers_.push_back(std::move(qual));
        }
        attacked_by_.resize(tree_.size());
        for (std::size_t p = 0; p < tree_.size(); ++p) {
            for (std::size_t j = 0; j < qualifiers_[p].size(); ++j) attacked_by_[p].emplace(j + 1, qualifiers_[p][j]);
        }
    }

    std::optional<std::size_t> size() const override { return std::nullopt; }

    std::string decode(std::size_t index) const override {
        const auto [row, p, kind] = split(index);
        const std::string sigma = string_name(tree_[p]);
        switch (kind) {
        case 0: return "a_" + sigma + "_" + std::to_string(row);
        case 1: return "b_" + sigma + "_" + std::to_string(row);
        default: return row == 0 ? "d_" + sigma : "c_" + sigma + "_" + std::to_string(row);
        }
    }

    std::optional<std::size_t> encode(std::string_view label) const override {
        if (label.size() < 3 || label[1] != '_') return std::nullopt;
        const char kind = label[0];
        auto rest = label.substr(2);
        std::string sigma;
        std::size_t row = 0;
        if (kind == 'd') {
            sigma = std::string(rest);
        } else {
            auto us = rest.find('_');
            if (us == std::string_view::npos) return std::nullopt;
            sigma = std::string(rest.substr(0, us));
            auto r = parse_count(rest.substr(us + 1));
            if (!r) return std::nullopt;
            row = *r;
        }
        if (sigma == "e") sigma.clear();
        auto it = std::find(tree_.begin(), tree_.end(), sigma);
        if (it == tree_.end()) return std::nullopt;
        const auto p = static_cast<std::size_t>(it - tree_.begin());
        switch (kind) {
        case 'a': return index(row, p, 0);
        case 'b': return index(row, p, 1);
        case 'c': return row >= 1 ? std::optional(index(row, p, 2)) : std::nullopt;
        case 'd': return index(0, p, 2);
        default: return std::nullopt;
        }
    }

    std::optional<std::vector<std::size_t>> attackers(std::size_t idx) const override {
        const auto [row, p, kind] = split(idx);
        std::vector<std::size_t> out;
        switch (kind) {
        case 0:
            out.push_back(index(row, p, 1));                         // b_i → a_i
            if (row >= 1) out.push_back(index(row, p, 2));           // c_i → a_i
            if (auto it = attacked_by_[p].find(row); it != attacked_by_[p].end()) {
                out.push_back(index(0, it->second, 0));              // a^τ_0 → a^σ_i
            }
            break;
        case 1:
            out.push_back(index(row + 1, p, 0));                     // a_{i+1} → b_i
            break;
        default:
            if (row == 0) {                                          // d
                out.push_back(index(0, p, 0));
                out.push_back(idx);
            } else {                                                 // c_i
                out.push_back(index(row - 1, p, 0));
                if (row == 1) out.push_back(index(0, p, 2));
            }
        }
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    struct Position {
        std::size_t row, component, kind;
    };
    Position split(std::size_t index) const {
        const std::size_t width = 3 * tree_.size();
        return {index / width, (index % width) / 3, index % 3};
    }
    std::size_t index(std::size_t row, std::size_t component, std::size_t kind) const {
        return row * 3 * tree_.size() + component * 3 + kind;
    }

    std::vector<std::string> tree_;
    std::vector<std::vector<std::size_t>> qualifiers_;
    std::vector<std::map<std::size_t, std::size_t>> attacked_by_;   // row j → component of τ_j
};

// --- high_ordinal ------------------------------------------------------------------

// Blocks k = 0..L are the finite superscripts, block L+1 stands for ω.
// Block 0 holds a, b; every other block holds a, b, c, d, e.
class HighOrdinal final : public Generator {
public:
    explicit HighOrdinal(Params p) : Generator("high_ordinal", std::move(p)) {
        reject_unknown(params(), {"levels", "width"});
        levels_ = count_param(params(), "levels", 2);
        if (params().count("width")) {
            width_ = count_param(params(), "width", std::nullopt);
            if (*width_ == 0) throw PreconditionError("width must be positive");
        }
        row_ = 2 + 5 * (levels_ + 1);
    }

    std::optional<std::size_t> size() const override {
        if (!width_) return std::nullopt;
        return *width_ * row_;
    }

    std::string decode(std::size_t index) const override {
        const auto [row, block, kind] = split(index);
        static constexpr char names[] = {'a', 'b', 'c', 'd', 'e'};
        return std::string(1, names[kind]) + "_" + block_name(block) + "_" + std::to_string(row);
    }

    std::optional<std::size_t> encode(std::string_view label) const override {
        if (label.size() < 5 || label[1] != '_') return std::nullopt;
        const std::string_view kinds = "abcde";
        const auto kind = kinds.find(label[0]);
        if (kind == std::string_view::npos) return std::nullopt;
        auto rest = label.substr(2);
        auto us = rest.find('_');
        if (us == std::string_view::npos) return std::nullopt;
        auto block_text = rest.substr(0, us);
        std::size_t block;
        if (block_text == "w") {
            block = omega();
        } else if (auto b = parse_count(block_text); b && *b <= levels_) {
            block = *b;
        } else {
            return std::nullopt;
        }
        auto row = parse_count(rest.substr(us + 1));
        if (!row || (width_ && *row >= *width_)) return std::nullopt;
        if (block == 0 && kind > 1) return std::nullopt;
        return index(*row, block, kind);
    }

    std::optional<std::vector<std::size_t>> attackers(std::size_t idx) const override {
        const auto [i, k, kind] = split(idx);
        std::vector<std::size_t> out;
        auto add = [&](std::size_t row, std::size_t block, std::size_t t) {
            if (!width_ || row < *width_) out.push_back(index(row, block, t));
        };
        const bool finite_block = k <= levels_;
        switch (kind) {
        case A:
            add(i, k, B);                                    // b^α_i → a^α_i
            add(i + 1, k, A);                                // a^α_{i+1} → a^α_i
            if (k + 1 <= levels_) add(i, k + 1, E);          // e^{α+1}_i → a^α_i
            if (i == 0 && finite_block) add(k, omega(), E);  // e^ω_α → a^α_0
            break;
        case B:
            if (i >= 1) add(i - 1, k, A);                    // a^α_{i-1} → b^α_i
            if (i == 0 && k >= 1) add(0, k, C);              // c^β_0 → b^β_0
            break;
        case C:
            add(i, k, E);                                    // e^β_i → c^β_i
            add(i + 1, k, C);                                // c^β_{i+1} → c^β_i
            break;
        case D:
            if (i >= 1) add(i - 1, k, D);                    // d^β_{i-1} → d^β_i
            else add(0, k, A);                               // a^β_0 → d^β_0
            break;
        case E:
            add(i, k, D);                                    // d^β_i → e^β_i
            if (finite_block) add(i, k - 1, B);              // b^{β-1}_i → e^β_i
            else if (i <= levels_) add(0, i, B);             // b^i_0 → e^ω_i
            break;
        }
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    enum Kind : std::size_t { A = 0, B = 1, C = 2, D = 3, E = 4 };
    struct Position {
        std::size_t row, block, kind;
    };
    std::size_t omega() const { return levels_ + 1; }
    std::string block_name(std::size_t block) const { return block == omega() ? "w" : std::to_string(block); }
    Position split(std::size_t index) const {
        const std::size_t row = index / row_;
        const std::size_t off = index % row_;
        if (off < 2) return {row, 0, off};
        return {row, 1 + (off - 2) / 5, (off - 2) % 5};
    }
    std::size_t index(std::size_t row, std::size_t block, std::size_t kind) const {
        return row * row_ + (block == 0 ? kind : 2 + 5 * (block - 1) + kind);
    }

    std::size_t levels_ = 2;
    std::optional<std::size_t> width_;
    std::size_t row_ = 0;
};

// --- finite fixtures -------------------------------------------------------------

class FixtureGenerator final : public Generator {
public:
    FixtureGenerator(std::string name, Params p, Framework frame)
        : Generator(std::move(name), std::move(p)), frame_(std::move(frame)) {
        reject_unknown(params(), {});
    }

    std::optional<std::size_t> size() const override { return frame_.size(); }
    std::string decode(std::size_t index) const override { return frame_.label(static_cast<ArgIndex>(index)); }
    std::optional<std::size_t> encode(std::string_view label) const override {
        auto i = frame_.index_of(label);
        if (!i) return std::nullopt;
        return *i;
    }
    std::optional<std::vector<std::size_t>> attackers(std::size_t index) const override {
        std::vector<std::size_t> out;
        frame_.attackers(static_cast<ArgIndex>(index)).for_each([&](ArgIndex a) { out.push_back(a); });
        return out;
    }

private:
    Framework frame_;
};

} // namespace

std::vector<std::size_t> Generator::attackers_in_prefix(std::size_t index, std::size_t n) const {
    auto all = attackers(index);
    if (!all) throw PreconditionError(name() + " must override attackers_in_prefix");
    std::vector<std::size_t> out;
    std::copy_if(all->begin(), all->end(), std::back_inserter(out), [&](std::size_t a) { return a < n; });
    return out;
}

std::string Generator::universe_hint() const {
    if (auto n = size()) return std::to_string(*n);
    return "countably infinite";
}

std::size_t Generator::require(std::string_view label) const {
    if (auto i = encode(label)) return *i;
    throw PreconditionError("generator " + name() + " has no argument '" + std::string(label) + "'");
}

std::vector<std::string> Generator::attacker_labels(std::string_view label) const {
    auto all = attackers(require(label));
    if (!all) throw PreconditionError("argument '" + std::string(label) + "' has infinitely many attackers");
    std::vector<std::string> out;
    for (auto a : *all) out.push_back(decode(a));
    return out;
}

std::vector<std::string> builtin_generator_names() {
    return {"bs_ladder", "omega_chain", "omega_chain_xy", "tree_scc", "high_ordinal",
            "t3",        "pt",          "wr",             "sk_f",     "sk_g"};
}

std::unique_ptr<Generator> builtin_generator(std::string_view name, const Params& params) {
    if (name == "bs_ladder") return std::make_unique<Ladder>(params);
    if (name == "omega_chain") return std::make_unique<OmegaChain>(params, false);
    if (name == "omega_chain_xy") return std::make_unique<OmegaChain>(params, true);
    if (name == "tree_scc") return std::make_unique<TreeScc>(params);
    if (name == "high_ordinal") return std::make_unique<HighOrdinal>(params);
    if (name == "t3") return std::make_unique<FixtureGenerator>("t3", params, fixtures::t3());
    if (name == "pt") return std::make_unique<FixtureGenerator>("pt", params, fixtures::pentagon());
    if (name == "wr") return std::make_unique<FixtureGenerator>("wr", params, fixtures::weak_reinstatement());
    if (name == "sk_f") return std::make_unique<FixtureGenerator>("sk_f", params, fixtures::skeptic_f());
    if (name == "sk_g") return std::make_unique<FixtureGenerator>("sk_g", params, fixtures::skeptic_g());
    throw PreconditionError("unknown generator family '" + std::string(name) + "'");
}

Params parse_params(const std::vector<std::string>& tokens) {
    Params out;
    for (const auto& t : tokens) {
        auto eq = t.find('=');
        if (eq == std::string::npos || eq == 0) throw PreconditionError("expected key=value, got '" + t + "'");
        out[t.substr(0, eq)] = t.substr(eq + 1);
    }
    return out;
}

Framework truncate(const Generator& g, std::size_t n) {
    if (auto size = g.size()) n = std::min(n, *size);
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) labels.push_back(g.decode(i));
    std::vector<Attack> attacks;
    for (std::size_t i = 0; i < n; ++i) {
        for (auto a : g.attackers_in_prefix(i, n)) {
            attacks.push_back({static_cast<ArgIndex>(a), static_cast<ArgIndex>(i)});
        }
    }
    return Framework(std::move(labels), attacks);
}

ArgSet high_ordinal_witness(const Framework& frame) {
    ArgSet s = frame.none();
    for (std::size_t a = 0; a < frame.size(); ++a) {
        const auto& l = frame.label(static_cast<ArgIndex>(a));
        if (l.size() < 5 || l[1] != '_') continue;
        const auto last = l.rfind('_');
        const auto block = l.substr(2, last - 2);
        const auto row = std::stoul(l.substr(last + 1));
        const bool upper = block != "0";
        if (l[0] == 'b' || (upper && l[0] == 'c' && row % 2 == 1) || (upper && l[0] == 'd' && row % 2 == 0)) {
            s.insert(static_cast<ArgIndex>(a));
        }
    }
    return s;
}

namespace fixtures {

Framework t3() { return Framework::build({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}}); }

Framework pentagon() {
    return Framework::build({"a", "b0", "b1", "b2", "b3"},
                            {{"a", "b0"}, {"b0", "b1"}, {"b1", "b2"}, {"b2", "b3"}, {"b3", "b0"}});
}

Framework weak_reinstatement() {
    return Framework::build({"a", "b0", "b1", "b2", "b3"},
                            {{"a", "b0"}, {"b0", "b1"}, {"b1", "b2"}, {"b2", "b3"}, {"b3", "b0"}, {"b3", "b3"}});
}

Framework skeptic_f() {
    return Framework::build({"a", "b", "c"}, {{"a", "b"}, {"b", "a"}, {"b", "c"}, {"c", "b"}, {"c", "c"}});
}

Framework skeptic_g() { return Framework::build({"a", "b", "c"}, {{"a", "b"}, {"c", "b"}, {"c", "c"}}); }

Framework ladder4() { return truncate(*builtin_generator("bs_ladder"), 8); }

Framework chain(std::size_t n) { return truncate(*builtin_generator("omega_chain"), n); }

Framework chain_xy(std::size_t n) { return truncate(*builtin_generator("omega_chain_xy"), n + 2); }

} // namespace fixtures

std::string_view to_string(Verdict v) {
    switch (v) {
    case Verdict::accepted: return "accepted";
    case Verdict::rejected: return "rejected";
    case Verdict::absent: return "absent";
    case Verdict::gap: return "gap";
    }
    return "?";
}

namespace {

ArgSet prefix_of(const ArgSet& s, std::size_t n) {
    ArgSet out(n);
    s.for_each([&](ArgIndex a) {
        if (a < n) out.insert(a);
    });
    return out;
}

} // namespace

TruncationReport truncation_study(const Generator& g, Semantics which, std::vector<std::size_t> levels,
                                  const std::vector<std::string>& tracked, std::size_t k, const Limits& limits) {
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    if (k == 0) throw PreconditionError("stabilization window k must be positive");

    TruncationReport report;
    report.family = g.name();
    report.semantics = which;
    report.k = k;
    report.levels = levels;

    std::vector<std::size_t> indices;
    for (const auto& label : tracked) {
        indices.push_back(g.require(label));
        report.tracked.push_back({label, {}, false});
    }

    std::vector<std::optional<ExtensionSet>> per_level;
    for (auto level : levels) {
        const Framework frame = truncate(g, level);
        std::optional<ExtensionSet> exts;
        try {
            exts = enumerate_semantics(frame, which, limits);
            report.gap_reasons.emplace_back();
        } catch (const LimitExceeded& e) {
            report.gap_reasons.emplace_back(e.what());
        }
        report.extension_counts.push_back(exts ? std::optional(exts->size()) : std::nullopt);
        for (std::size_t t = 0; t < indices.size(); ++t) {
            Verdict v = Verdict::gap;
            if (indices[t] >= frame.size()) {
                v = Verdict::absent;
            } else if (exts) {
                v = exts->credulous(static_cast<ArgIndex>(indices[t])) ? Verdict::accepted : Verdict::rejected;
            }
            report.tracked[t].verdicts.push_back(v);
        }
        per_level.push_back(std::move(exts));
    }

    if (levels.size() < k) return report;
    const std::size_t start = levels.size() - k;
    for (std::size_t t = 0; t < indices.size(); ++t) {
        auto& entry = report.tracked[t];
        const Verdict v = entry.verdicts[start];
        if (v != Verdict::accepted && v != Verdict::rejected) continue;
        if (!std::all_of(entry.verdicts.begin() + static_cast<std::ptrdiff_t>(start), entry.verdicts.end(),
                         [&](Verdict w) { return w == v; })) {
            continue;
        }
        const auto arg = static_cast<ArgIndex>(indices[t]);
        auto fits = [&](const ArgSet& e) { return v == Verdict::rejected || e.contains(arg); };
        std::vector<ArgSet> frontier;
        for (const auto& e : per_level[start]->extensions) {
            if (fits(e)) frontier.push_back(e);
        }
        for (std::size_t j = start + 1; j < levels.size() && !frontier.empty(); ++j) {
            std::vector<ArgSet> next;
            for (const auto& e : per_level[j]->extensions) {
                if (fits(e) && std::find(frontier.begin(), frontier.end(), prefix_of(e, levels[j - 1])) != frontier.end()) {
                    next.push_back(e);
                }
            }
            frontier = std::move(next);
        }
        entry.stabilized = !frontier.empty();
    }
    return report;
}

} // namespace sccsem
