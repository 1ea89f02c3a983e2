#include "sccsem/io.hpp"

#include "sccsem/errors.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace sccsem {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        auto line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        start = end + 1;
    }
    return lines;
}

class ApxLine {
public:
    ApxLine(std::string_view text, std::size_t line) : text_(text), line_(line) {}

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool done() {
        skip_space();
        return pos_ >= text_.size() || text_[pos_] == '%';
    }
    void expect(char c) {
        skip_space();
        if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }
    std::string word() {
        skip_space();
        const auto start = pos_;
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (std::isspace(static_cast<unsigned char>(c)) || c == ',' || c == '(' || c == ')' || c == '%') break;
            ++pos_;
        }
        if (start == pos_) fail("expected a name");
        return std::string(text_.substr(start, pos_ - start));
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(line_, what + " at column " + std::to_string(pos_ + 1));
    }

private:
    std::string_view text_;
    std::size_t line_;
    std::size_t pos_ = 0;
};

struct PendingAttack {
    std::string from, to;
    std::size_t line;
};

Framework assemble(std::vector<std::string> labels, const std::vector<PendingAttack>& pending) {
    std::map<std::string, ArgIndex, std::less<>> index;
    for (std::size_t i = 0; i < labels.size(); ++i) index.emplace(labels[i], static_cast<ArgIndex>(i));
    std::vector<Attack> attacks;
    for (const auto& p : pending) {
        auto a = index.find(p.from);
        auto b = index.find(p.to);
        if (a == index.end()) throw ParseError(p.line, "undeclared argument '" + p.from + "'");
        if (b == index.end()) throw ParseError(p.line, "undeclared argument '" + p.to + "'");
        attacks.push_back({a->second, b->second});
    }
    return Framework(std::move(labels), attacks);
}

Json family_json(const Framework& f, const ExtensionSet& es) {
    Json out = Json::array();
    for (const auto& e : es.extensions) out.push_back(labels_json(f, e));
    return out;
}

std::string braces(const Framework& f, const ArgSet& s) {
    std::string out = "{";
    bool first = true;
    s.for_each([&](ArgIndex a) {
        if (!first) out += ",";
        out += f.label(a);
        first = false;
    });
    return out + "}";
}

} // namespace

Framework parse_apx(std::string_view text) {
    std::vector<std::string> labels;
    std::map<std::string, std::size_t, std::less<>> seen;
    std::vector<PendingAttack> pending;
    std::size_t number = 0;
    for (auto line : split_lines(text)) {
        ++number;
        ApxLine p(line, number);
        while (!p.done()) {
            const std::string kind = p.word();
            if (kind != "arg" && kind != "att") p.fail("unknown fact '" + kind + "'");
            p.expect('(');
            const std::string first = p.word();
            if (kind == "arg") {
                p.expect(')');
                p.expect('.');
                if (seen.emplace(first, labels.size()).second) labels.push_back(first);
            } else {
                p.expect(',');
                const std::string second = p.word();
                p.expect(')');
                p.expect('.');
                pending.push_back({first, second, number});
            }
        }
    }
    return assemble(std::move(labels), pending);
}

std::string serialize_apx(const Framework& f) {
    std::string out;
    for (const auto& l : f.labels()) out += "arg(" + l + ").\n";
    for (const auto& att : f.attack_list()) {
        out += "att(" + f.label(att.attacker) + "," + f.label(att.target) + ").\n";
    }
    return out;
}

Framework parse_tgf(std::string_view text) {
    std::vector<std::string> labels;
    std::map<std::string, std::size_t, std::less<>> seen;
    std::vector<PendingAttack> pending;
    bool edges = false;
    std::size_t number = 0;
    for (auto line : split_lines(text)) {
        ++number;
        std::istringstream in{std::string(line)};
        std::vector<std::string> tokens;
        for (std::string t; in >> t;) tokens.push_back(t);
        if (tokens.empty()) continue;
        if (tokens.size() == 1 && tokens[0] == "#") {
            if (edges) throw ParseError(number, "second '#' separator");
            edges = true;
            continue;
        }
        if (!edges) {
            if (tokens.size() != 1) throw ParseError(number, "node line must hold a single identifier");
            if (!seen.emplace(tokens[0], labels.size()).second) {
                throw ParseError(number, "duplicate node '" + tokens[0] + "'");
            }
            labels.push_back(tokens[0]);
        } else {
            if (tokens.size() != 2) throw ParseError(number, "edge line must hold two identifiers");
            pending.push_back({tokens[0], tokens[1], number});
        }
    }
    if (!edges) throw ParseError(number, "missing '#' separator");
    return assemble(std::move(labels), pending);
}

std::string serialize_tgf(const Framework& f) {
    std::string out;
    for (const auto& l : f.labels()) out += l + "\n";
    out += "#\n";
    for (const auto& att : f.attack_list()) out += f.label(att.attacker) + " " + f.label(att.target) + "\n";
    return out;
}

Format parse_format(std::string_view name) {
    if (name == "text") return Format::text;
    if (name == "json") return Format::json;
    throw PreconditionError("unknown output format '" + std::string(name) + "'");
}

Json labels_json(const Framework& f, const ArgSet& s) {
    Json out = Json::array();
    s.for_each([&](ArgIndex a) { out.push_back(f.label(a)); });
    return out;
}

Json to_json(const Framework& f, Semantics which, const ExtensionSet& es) {
    Json j;
    j["schema"] = json_schema;
    j["semantics"] = to_string(which);
    j["extensions"] = family_json(f, es);
    return j;
}

Json to_json(const Framework& f, const CriterionReport& r) {
    Json j;
    j["schema"] = json_schema;
    j["criterion"] = r.criterion;
    j["holds"] = r.holds;
    if (r.witness) {
        Json w;
        for (const auto& [name, set] : r.witness->sets) w["sets"][name] = labels_json(f, set);
        for (const auto& [name, a] : r.witness->arguments) w["arguments"][name] = f.label(a);
        for (const auto& [name, family] : r.witness->families) w["families"][name] = family_json(f, family);
        j["witness"] = std::move(w);
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

Json to_json(const TruncationReport& r) {
    Json j;
    j["schema"] = json_schema;
    j["family"] = r.family;
    j["semantics"] = to_string(r.semantics);
    j["k"] = r.k;
    j["levels"] = r.levels;
    Json counts = Json::array();
    for (const auto& c : r.extension_counts) counts.push_back(c ? Json(*c) : Json(nullptr));
    j["extension_counts"] = std::move(counts);
    Json gaps = Json::array();
    for (std::size_t i = 0; i < r.gap_reasons.size(); ++i) {
        if (!r.gap_reasons[i].empty()) gaps.push_back({{"level", r.levels[i]}, {"reason", r.gap_reasons[i]}});
    }
    j["gaps"] = std::move(gaps);
    Json tracked = Json::array();
    for (const auto& t : r.tracked) {
        Json verdicts = Json::array();
        for (auto v : t.verdicts) verdicts.push_back(to_string(v));
        Json entry;
        entry["label"] = t.label;
        entry["verdicts"] = std::move(verdicts);
        entry["stabilized"] = t.stabilized;
        tracked.push_back(std::move(entry));
    }
    j["tracked"] = std::move(tracked);
    return j;
}

std::string dump(const Json& j) { return j.dump() + "\n"; }

std::string emit_report(const Framework& f, Semantics which, const ExtensionSet& es, Format format) {
    if (format == Format::json) return dump(to_json(f, which, es));
    std::string out = std::string(to_string(which)) + ": " + std::to_string(es.size()) + " extension(s)\n";
    for (const auto& e : es.extensions) out += "  " + braces(f, e) + "\n";
    return out;
}

std::string emit_report(const Framework& f, const CriterionReport& r, Format format) {
    if (format == Format::json) return dump(to_json(f, r));
    std::string out = r.criterion + ": " + (r.holds ? "holds" : "fails") + "\n";
    if (!r.witness) return out;
    for (const auto& [name, set] : r.witness->sets) out += "  " + name + " = " + braces(f, set) + "\n";
    for (const auto& [name, a] : r.witness->arguments) out += "  " + name + " = " + f.label(a) + "\n";
    for (const auto& [name, family] : r.witness->families) {
        out += "  " + name + " = {";
        for (std::size_t i = 0; i < family.extensions.size(); ++i) {
            out += (i ? ", " : "") + braces(f, family.extensions[i]);
        }
        out += "}\n";
    }
    return out;
}

std::string emit_report(const TruncationReport& r, Format format) {
    if (format == Format::json) return dump(to_json(r));
    std::ostringstream out;
    out << r.family << " under " << to_string(r.semantics) << " (k=" << r.k << ")\n";
    out << "level";
    for (const auto& t : r.tracked) out << "\t" << t.label;
    out << "\textensions\n";
    for (std::size_t i = 0; i < r.levels.size(); ++i) {
        out << r.levels[i];
        for (const auto& t : r.tracked) out << "\t" << to_string(t.verdicts[i]);
        if (r.extension_counts[i]) out << "\t" << *r.extension_counts[i];
        else out << "\tgap: " << r.gap_reasons[i];
        out << "\n";
    }
    for (const auto& t : r.tracked) out << t.label << ": " << (t.stabilized ? "stabilized" : "not stabilized") << "\n";
    return out.str();
}

} // namespace sccsem
