#include "sccsem/base_semantics.hpp"
#include "sccsem/constructive.hpp"
#include "sccsem/criteria.hpp"
#include "sccsem/errors.hpp"
#include "sccsem/generators.hpp"
#include "sccsem/io.hpp"
#include "sccsem/oracle.hpp"
#include "sccsem/scc_semantics.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace sccsem;

namespace {

enum Exit { ok = 0, usage = 1, limit = 2, violation = 3 };

struct Common {
    std::string output = "text";
    Limits limits;
};

struct Input {
    std::string path;
    std::string format;   // apx, tgf, or empty to guess from the extension
};

Framework load(const Input& in) {
    std::ifstream file(in.path, std::ios::binary);
    if (!file) throw PreconditionError("cannot read " + in.path);
    std::ostringstream text;
    text << file.rdbuf();
    std::string format = in.format;
    if (format.empty()) format = in.path.size() >= 4 && in.path.substr(in.path.size() - 4) == ".tgf" ? "tgf" : "apx";
    if (format == "tgf") return parse_tgf(text.str());
    if (format == "apx") return parse_apx(text.str());
    throw PreconditionError("unknown input format '" + format + "'");
}

std::vector<std::string> split(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream in(text);
    for (std::string item; std::getline(in, item, ',');) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

void add_input(CLI::App* cmd, Input& in) {
    cmd->add_option("--input,-i", in.path, "framework file")->required();
    cmd->add_option("--format,-f", in.format, "input format (default: by file extension, else apx)")
        ->check(CLI::IsMember({"apx", "tgf"}));
}

void add_limits(CLI::App* cmd, Common& c) {
    cmd->add_option("--max-args", c.limits.max_args, "enumeration size limit")->envname("SCCSEM_MAX_ARGS");
    cmd->add_option("--unattacked-cap", c.limits.unattacked_cap, "cap on unattacked sets for directionality")
        ->envname("SCCSEM_UNATTACKED_CAP");
    cmd->add_option("--search-limit", c.limits.search_limit, "node budget per witness search")
        ->envname("SCCSEM_SEARCH_LIMIT");
}

void print(const std::string& text) { std::cout << text; }

// --- solve ---------------------------------------------------------------

struct SolveArgs {
    Input in;
    std::string semantics;
    std::string credulous, skeptical;
};

int solve(const SolveArgs& a, const Common& c) {
    const auto f = load(a.in);
    const auto which = parse_semantics(a.semantics);
    const auto format = parse_format(c.output);
    const auto es = enumerate_semantics(f, which, c.limits);
    if (a.credulous.empty() && a.skeptical.empty()) {
        print(emit_report(f, which, es, format));
        return ok;
    }
    const bool credulous = !a.credulous.empty();
    const auto arg = f.require(credulous ? a.credulous : a.skeptical);
    const bool accepted = credulous ? es.credulous(arg) : es.skeptical(arg);
    if (format == Format::json) {
        Json j;
        j["schema"] = json_schema;
        j["semantics"] = to_string(which);
        j["query"] = credulous ? "credulous" : "skeptical";
        j["argument"] = f.label(arg);
        j["accepted"] = accepted;
        print(dump(j));
    } else {
        print(std::string(accepted ? "YES" : "NO") + "\n");
    }
    return ok;
}

// --- check ---------------------------------------------------------------

struct CheckArgs {
    Input in;
    std::string criterion;
    std::string semantics;
    std::string other;         // second framework for skepticism adequacy
    std::string relation = "cap";
    std::string unattacked;    // comma-separated U for directionality
    bool assert_mode = false;
};

int check(const CheckArgs& a, const Common& c) {
    const auto f = load(a.in);
    const auto which = parse_semantics(a.semantics);
    const auto format = parse_format(c.output);
    CriterionReport r;
    if (a.criterion == "i-max") {
        r = check_i_maximality(enumerate_semantics(f, which, c.limits));
    } else if (a.criterion == "reinstatement" || a.criterion == "weak-reinstatement" ||
               a.criterion == "cf-reinstatement") {
        const auto variant = a.criterion == "reinstatement"        ? Reinstatement::plain
                             : a.criterion == "weak-reinstatement" ? Reinstatement::weak
                                                                   : Reinstatement::cf;
        r = check_reinstatement(f, enumerate_semantics(f, which, c.limits), variant);
    } else if (a.criterion == "directionality") {
        std::optional<ArgSet> u;
        if (!a.unattacked.empty()) u = f.set_of(split(a.unattacked));
        r = check_directionality(f, which, u, c.limits);
    } else {
        if (a.other.empty()) throw PreconditionError("skepticism-adequacy needs --other FILE");
        const auto g = load({a.other, a.in.format});
        const auto rel = a.relation == "cap" ? Skepticism::cap : Skepticism::weak;
        r = check_skepticism_adequacy(f, g, which, rel, c.limits);
    }
    print(emit_report(f, r, format));
    return a.assert_mode && !r.holds ? violation : ok;
}

// --- oracle --------------------------------------------------------------

struct OracleArgs {
    std::size_t trials = 200;
    std::size_t max_args = 9;
    std::uint64_t seed = oracle::default_corpus_seed;
    bool assert_mode = false;
};

int run_oracle(const OracleArgs& a, const Common& c) {
    const auto format = parse_format(c.output);
    const auto corpus = oracle::random_corpus(a.trials, a.max_args, a.seed);
    Json mismatches = Json::array();
    std::size_t count = 0;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        for (auto which : table_semantics) {
            const auto fast = enumerate_semantics(corpus[i], which, c.limits);
            const auto slow = oracle::brute_force(corpus[i], which);
            if (fast == slow) continue;
            ++count;
            mismatches.push_back({{"trial", i}, {"semantics", to_string(which)}, {"apx", serialize_apx(corpus[i])}});
        }
    }
    if (format == Format::json) {
        Json j;
        j["schema"] = json_schema;
        j["trials"] = a.trials;
        j["max_args"] = a.max_args;
        j["seed"] = a.seed;
        j["semantics"] = Json::array();
        for (auto which : table_semantics) j["semantics"].push_back(to_string(which));
        j["mismatch_count"] = count;
        j["mismatches"] = std::move(mismatches);
        print(dump(j));
    } else {
        std::cout << a.trials << " frameworks (seed " << a.seed << ", up to " << a.max_args
                  << " arguments), 8 semantics: " << count << " mismatch(es)\n";
        for (const auto& m : mismatches) {
            std::cout << "trial " << m["trial"] << " " << m["semantics"].get<std::string>() << "\n"
                      << m["apx"].get<std::string>();
        }
    }
    return a.assert_mode && count ? violation : ok;
}

// --- infinite ------------------------------------------------------------

struct InfiniteArgs {
    std::string family;
    std::vector<std::string> params;
    std::vector<std::size_t> levels;
    std::string semantics;
    std::string track;
    std::size_t k = 3;
};

int infinite(const InfiniteArgs& a, const Common& c) {
    const auto g = builtin_generator(a.family, parse_params(a.params));
    const auto report = truncation_study(*g, parse_semantics(a.semantics), a.levels, split(a.track), a.k, c.limits);
    print(emit_report(report, parse_format(c.output)));
    return ok;
}

// --- construct -----------------------------------------------------------

struct ConstructArgs {
    Input in;
    std::string algorithm;
};

int construct(const ConstructArgs& a, const Common& c) {
    const auto f = load(a.in);
    const auto ord = lemma1_order(f);
    ArgSet s;
    bool verified = false;
    std::string property;
    if (a.algorithm == "greedy-cf1.5") {
        s = greedy_cf15(f, ord);
        verified = is_cf15(f, s, c.limits);
        property = "cf1.5";
    } else if (a.algorithm == "lex-stg1.5") {
        s = lex_scc_stg15(f, ord, c.limits);
        verified = is_stg15(f, s, c.limits);
        property = "stg1.5";
    } else {
        s = lex_greedy_stage(f, ord, c.limits);
        verified = is_stage(f, s, c.limits);
        property = "stage";
    }
    std::vector<std::string> order;
    for (auto i : ord.order) order.push_back(f.label(static_cast<ArgIndex>(i)));
    if (parse_format(c.output) == Format::json) {
        Json j;
        j["schema"] = json_schema;
        j["algorithm"] = a.algorithm;
        j["order"] = order;
        j["extension"] = labels_json(f, s);
        j["verified"] = {{"semantics", property}, {"holds", verified}};
        print(dump(j));
    } else {
        std::cout << a.algorithm << ": {";
        const auto labels = f.labels_of(s);
        for (std::size_t i = 0; i < labels.size(); ++i) std::cout << (i ? "," : "") << labels[i];
        std::cout << "}  (" << property << (verified ? " verified" : " NOT verified") << ")\n";
    }
    return verified ? ok : violation;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"SCC-recursive abstract argumentation semantics"};
    app.require_subcommand(1);
    app.fallthrough();
    Common common;
    app.add_option("--output,-o", common.output, "text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    SolveArgs solve_args;
    auto* s = app.add_subcommand("solve", "enumerate extensions or decide acceptance");
    add_input(s, solve_args.in);
    s->add_option("--semantics,-s", solve_args.semantics, "cf|naive|grounded|stage|cf2|stg2|icf2|istg2|cf1.5|stg1.5")
        ->required();
    auto* en = s->add_flag("--enumerate", "list all extensions (default)");
    auto* cr = s->add_option("--credulous", solve_args.credulous, "is ARG in some extension");
    auto* sk = s->add_option("--skeptical", solve_args.skeptical, "is ARG in every extension");
    en->excludes(cr)->excludes(sk);
    cr->excludes(sk);
    add_limits(s, common);

    CheckArgs check_args;
    auto* c = app.add_subcommand("check", "evaluate a criterion");
    add_input(c, check_args.in);
    c->add_option("--criterion,-c", check_args.criterion)
        ->required()
        ->check(CLI::IsMember({"i-max", "reinstatement", "weak-reinstatement", "cf-reinstatement", "directionality",
                               "skepticism-adequacy"}));
    c->add_option("--semantics,-s", check_args.semantics)->required();
    c->add_option("--other", check_args.other, "framework G with fewer attacks (skepticism-adequacy)");
    c->add_option("--relation", check_args.relation, "cap or weak")->check(CLI::IsMember({"cap", "weak"}));
    c->add_option("--unattacked,-U", check_args.unattacked, "comma-separated U (directionality)");
    c->add_flag("--assert", check_args.assert_mode, "exit 3 when the criterion fails");
    add_limits(c, common);

    OracleArgs oracle_args;
    auto* o = app.add_subcommand("oracle", "compare fast enumeration with brute force on random frameworks");
    o->add_option("--trials", oracle_args.trials)->capture_default_str();
    o->add_option("--max-args", oracle_args.max_args)->check(CLI::Range(1, 15))->capture_default_str();
    o->add_option("--seed", oracle_args.seed)->capture_default_str();
    o->add_flag("--assert", oracle_args.assert_mode, "exit 3 on any mismatch");

    InfiniteArgs inf_args;
    auto* inf = app.add_subcommand("infinite", "truncation study of a built-in infinite family");
    inf->add_option("--family", inf_args.family)->required();
    inf->add_option("--params", inf_args.params, "K=V ...");
    inf->add_option("--levels", inf_args.levels)->required()->delimiter(',');
    inf->add_option("--semantics,-s", inf_args.semantics)->required();
    inf->add_option("--track", inf_args.track, "comma-separated labels")->required();
    inf->add_option("--k", inf_args.k, "trailing levels required to agree")
        ->envname("SCCSEM_STABILIZE_K")
        ->check(CLI::PositiveNumber);
    add_limits(inf, common);

    ConstructArgs con_args;
    auto* con = app.add_subcommand("construct", "run a constructive existence algorithm");
    add_input(con, con_args.in);
    con->add_option("--algorithm,-a", con_args.algorithm)
        ->required()
        ->check(CLI::IsMember({"greedy-cf1.5", "lex-stg1.5", "lex-stage"}));
    add_limits(con, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? ok : usage;
    }

    try {
        if (*s) return solve(solve_args, common);
        if (*c) return check(check_args, common);
        if (*o) return run_oracle(oracle_args, common);
        if (*inf) return infinite(inf_args, common);
        return construct(con_args, common);
    } catch (const LimitExceeded& e) {
        std::cerr << "limit exceeded: " << e.what() << "\n";
        return limit;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return usage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage;
    }
}
