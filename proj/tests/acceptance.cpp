// Acceptance suite: one PASS/FAIL line per criterion. With --json-out the
// JSON evidence of every criterion is written to a file so that two runs can
// be compared byte for byte.

#include "sccsem/base_semantics.hpp"
#include "sccsem/constructive.hpp"
#include "sccsem/criteria.hpp"
#include "sccsem/generators.hpp"
#include "sccsem/io.hpp"
#include "sccsem/oracle.hpp"
#include "sccsem/scc.hpp"
#include "sccsem/scc_semantics.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>

using namespace sccsem;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    Json evidence = Json::array();

    void require(bool ok, const std::string& what) {
        if (!ok && pass) detail = what;
        pass = pass && ok;
    }
};

ArgSet set(const Framework& f, std::vector<std::string> labels) { return f.set_of(labels); }

ExtensionSet family(const Framework& f, std::vector<std::vector<std::string>> sets) {
    std::vector<ArgSet> out;
    for (auto& s : sets) out.push_back(f.set_of(s));
    return ExtensionSet(f.size(), std::move(out));
}

const std::vector<Framework>& corpus() {
    static const auto c = oracle::random_corpus(200, 9, oracle::default_corpus_seed);
    return c;
}

std::vector<std::pair<std::string, Framework>> named_fixtures() {
    return {{"T3", fixtures::t3()},          {"PT", fixtures::pentagon()},  {"WR", fixtures::weak_reinstatement()},
            {"SK_F", fixtures::skeptic_f()}, {"SK_G", fixtures::skeptic_g()}, {"L4", fixtures::ladder4()},
            {"CH_5", fixtures::chain(5)},    {"XY_8", fixtures::chain_xy(8)}};
}

Outcome pentagon_values() {
    Outcome o;
    auto pt = fixtures::pentagon();
    const auto single = family(pt, {{"a", "b1", "b3"}});
    for (auto which : {Semantics::cf2, Semantics::stg2, Semantics::stg15, Semantics::cf15}) {
        auto es = enumerate_semantics(pt, which);
        auto expected = which == Semantics::cf15 ? family(pt, {{"a", "b1", "b3"}, {"a", "b2"}}) : single;
        o.require(es == expected, std::string(to_string(which)) + " differs");
        o.evidence.push_back(to_json(pt, which, es));
    }
    return o;
}

Outcome ladder_values() {
    Outcome o;
    auto l4 = fixtures::ladder4();
    auto cf2 = enumerate_semantics(l4, Semantics::cf2);
    o.require(cf2 == family(l4, {{"b1", "b2", "b3", "b4"}}), "cf2(L4) is not {{b1,b2,b3,b4}}");
    auto s = set(l4, {"b1", "a2", "a4"});
    o.require(is_cf15(l4, s), "{b1,a2,a4} is not cf1.5");
    o.require(!is_cf2(l4, s), "{b1,a2,a4} is cf2");
    o.evidence.push_back(to_json(l4, Semantics::cf2, cf2));
    o.evidence.push_back({{"set", labels_json(l4, s)}, {"cf1.5", is_cf15(l4, s)}, {"cf2", is_cf2(l4, s)}});
    return o;
}

Outcome weak_reinstatement_values() {
    Outcome o;
    auto wr = fixtures::weak_reinstatement();
    auto s = set(wr, {"a", "b2"});
    o.require(is_cf15(wr, s) && is_stg15(wr, s), "{a,b2} rejected by cf1.5 or stg1.5");
    o.require(grounded(wr).contains(*wr.index_of("b1")), "b1 not grounded");
    auto r = check_reinstatement(wr, enumerate_semantics(wr, Semantics::cf15), Reinstatement::weak);
    o.require(!r.holds && r.witness && r.witness->sets[0].second == s &&
                  r.witness->arguments[0].second == *wr.index_of("b1"),
              "weak reinstatement witness is not ({a,b2}, b1)");
    o.evidence.push_back(to_json(wr, r));
    return o;
}

Outcome skeptic_pair() {
    Outcome o;
    auto f = fixtures::skeptic_f();
    auto g = fixtures::skeptic_g();
    for (auto which : {Semantics::stage, Semantics::stg2, Semantics::istg2, Semantics::stg15}) {
        auto ef = enumerate_semantics(f, which);
        auto eg = enumerate_semantics(g, which);
        o.require(ef == family(f, {{"b"}}), std::string(to_string(which)) + "(SK_F) is not {{b}}");
        o.require(eg == family(g, {{"a"}}), std::string(to_string(which)) + "(SK_G) is not {{a}}");
        o.evidence.push_back(to_json(f, which, ef));
        o.evidence.push_back(to_json(g, which, eg));
    }
    for (auto which : {Semantics::stage, Semantics::stg2, Semantics::istg2, Semantics::stg15}) {
        for (auto rel : {Skepticism::cap, Skepticism::weak}) {
            auto r = check_skepticism_adequacy(f, g, which, rel);
            o.require(!r.holds, std::string(to_string(which)) + " satisfies skepticism adequacy (" +
                                    std::string(to_string(rel)) + ")");
            o.evidence.push_back(to_json(f, r));
        }
    }
    return o;
}

Outcome three_cycle() {
    Outcome o;
    auto t3 = fixtures::t3();
    const auto singles = family(t3, {{"a"}, {"b"}, {"c"}});
    for (auto which : table_semantics) {
        auto es = enumerate_semantics(t3, which);
        o.require(es == singles, std::string(to_string(which)) + "(T3) differs");
        o.evidence.push_back(to_json(t3, which, es));
    }
    auto r = check_reinstatement(t3, family(t3, {{"a"}}), Reinstatement::plain);
    o.require(!r.holds && r.witness && r.witness->arguments[0].second == *t3.index_of("c"),
              "plain reinstatement witness is not ({a}, c)");
    o.evidence.push_back(to_json(t3, r));
    return o;
}

Outcome oracle_equivalence() {
    Outcome o;
    std::size_t mismatches = 0;
    for (const auto& f : corpus()) {
        for (auto which : table_semantics) {
            if (enumerate_semantics(f, which) != oracle::brute_force(f, which)) ++mismatches;
        }
    }
    o.require(mismatches == 0, std::to_string(mismatches) + " mismatches");
    o.detail = o.pass ? "200 frameworks x 8 semantics, 0 mismatches" : o.detail;
    o.evidence.push_back({{"frameworks", corpus().size()}, {"mismatches", mismatches}});
    return o;
}

Outcome finite_agreement() {
    Outcome o;
    std::size_t mismatches = 0, candidates = 0;
    for (const auto& f : corpus()) {
        for (const auto& s : enumerate_naive(f).extensions) {
            ++candidates;
            if (is_cf2(f, s) != is_icf2(f, s) || is_stg2(f, s) != is_istg2(f, s)) ++mismatches;
        }
    }
    o.require(mismatches == 0, std::to_string(mismatches) + " mismatches");
    o.detail = o.pass ? std::to_string(candidates) + " naive candidates, 0 mismatches" : o.detail;
    o.evidence.push_back({{"candidates", candidates}, {"mismatches", mismatches}});
    return o;
}

Outcome trace_lemma() {
    Outcome o;
    std::size_t mismatches = 0, checks = 0;
    for (const auto& f : corpus()) {
        for (const auto& s : enumerate_naive(f).extensions) {
            const auto delta = delta_lfp(f, s);
            for (ArgIndex a = 0; a < f.size(); ++a) {
                const auto trace = component_trace(f, s, a);
                const auto last = std::max(delta.steps, trace.comp_ordinal) + 1;
                for (std::size_t k = 0; k <= last; ++k) {
                    ++checks;
                    const auto& dk = delta.stages[std::min(k, delta.steps)];
                    if (trace.stage(k) != component_of(f, f.all() - dk, a)) ++mismatches;
                }
            }
        }
    }
    o.require(mismatches == 0, std::to_string(mismatches) + " mismatches");
    o.detail = o.pass ? std::to_string(checks) + " stage comparisons, 0 mismatches" : o.detail;
    o.evidence.push_back({{"checks", checks}, {"mismatches", mismatches}});
    return o;
}

Outcome table_rows() {
    Outcome o;
    std::size_t violations = 0;
    for (const auto& f : corpus()) {
        const auto naive = enumerate_naive(f);
        for (auto which : table_semantics) {
            const auto es = enumerate_semantics(f, which);
            if (!check_i_maximality(es).holds) ++violations;
            if (!check_reinstatement(f, es, Reinstatement::cf).holds) ++violations;
            if ((which == Semantics::icf2 || which == Semantics::istg2) &&
                !check_reinstatement(f, es, Reinstatement::weak).holds) {
                ++violations;
            }
            if (which != Semantics::naive && which != Semantics::stage) {
                for (const auto& s : es.extensions) {
                    if (!naive.contains(s)) ++violations;
                }
            }
        }
    }
    o.require(violations == 0, std::to_string(violations) + " violations");
    o.evidence.push_back({{"violations", violations}});
    return o;
}

Outcome constructions() {
    Outcome o;
    std::size_t failures = 0, runs = 0;
    std::vector<Framework> frames = corpus();
    for (auto& [name, f] : named_fixtures()) frames.push_back(f);
    for (const auto& f : frames) {
        const auto ord = lemma1_order(f);
        ++runs;
        if (!is_cf15(f, greedy_cf15(f, ord))) ++failures;
        if (!is_stage(f, lex_greedy_stage(f, ord))) ++failures;
    }
    o.require(failures == 0, std::to_string(failures) + " failures");
    o.detail = o.pass ? std::to_string(runs) + " frameworks, 0 failures" : o.detail;
    o.evidence.push_back({{"frameworks", runs}, {"failures", failures}});
    return o;
}

Outcome infinite_probes() {
    Outcome o;
    auto ladder = truncation_study(*builtin_generator("bs_ladder"), Semantics::cf2, {4, 8, 12, 16}, {"b1"});
    o.require(ladder.tracked[0].stabilized && ladder.tracked[0].verdicts.back() == Verdict::accepted,
              "b1 not stabilized-accepted on bs_ladder");
    auto chain = truncation_study(*builtin_generator("omega_chain"), Semantics::cf15, {3, 5, 8}, {"a0"});
    o.require(!chain.tracked[0].stabilized, "a0 stabilized on omega_chain");
    auto xy = truncation_study(*builtin_generator("omega_chain_xy"), Semantics::cf15, {5, 8, 12}, {"x"});
    o.require(xy.tracked[0].stabilized && xy.tracked[0].verdicts.back() == Verdict::accepted,
              "x not stabilized-accepted on omega_chain_xy");
    auto f = truncate(*builtin_generator("omega_chain_xy"), 8);
    auto d = check_directionality(f, Semantics::cf15, set(f, {"x", "y"}));
    o.require(d.holds, "directionality fails on U={x,y}");
    o.evidence.push_back(to_json(ladder));
    o.evidence.push_back(to_json(chain));
    o.evidence.push_back(to_json(xy));
    o.evidence.push_back(to_json(f, d));
    return o;
}

using Check = std::pair<std::string, std::function<Outcome()>>;

std::vector<Check> semantic_checks() {
    return {
        {"pentagon-with-tail PT: cf2, stg2, stg1.5, cf1.5 values", pentagon_values},
        {"finite ladder L4: unique cf2 extension, {b1,a2,a4} cf1.5 but not cf2", ladder_values},
        {"weak reinstatement counterexample WR", weak_reinstatement_values},
        {"stage-like semantics and skepticism adequacy on SK_F/SK_G", skeptic_pair},
        {"3-cycle: eight semantics and plain reinstatement", three_cycle},
        {"fast enumeration equals brute force on 200 random frameworks", oracle_equivalence},
        {"cf2 = icf2 and stg2 = istg2 on every naive candidate", finite_agreement},
        {"component trace stage k = component in F minus Delta^k", trace_lemma},
        {"I-maximality, CF-reinstatement, weak reinstatement, subset-of-naive", table_rows},
        {"greedy cf1.5 and two-pass stage constructions", constructions},
        {"truncation probes and finitary directionality", infinite_probes},
    };
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"acceptance suite"};
    std::string json_out;
    app.add_option("--json-out", json_out, "write the JSON evidence of every criterion to this file");
    CLI11_PARSE(app, argc, argv);

    const auto start = std::chrono::steady_clock::now();
    bool all = true;
    Json evidence = Json::array();
    std::vector<std::string> first_run;
    std::size_t number = 0;
    auto report = [&](const std::string& title, const Outcome& o) {
        ++number;
        all = all && o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << "  " << number << ". " << title;
        if (!o.detail.empty()) std::cout << " (" << o.detail << ")";
        std::cout << "\n";
    };

    for (const auto& [title, check] : semantic_checks()) {
        Outcome o;
        try {
            o = check();
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        first_run.push_back(dump(o.evidence));
        evidence.push_back({{"criterion", number + 1}, {"pass", o.pass}, {"evidence", o.evidence}});
        report(title, o);
    }

    // Round trips on every fixture, and a second in-process run of every
    // criterion above must reproduce the same JSON bytes.
    Outcome last;
    for (const auto& [name, f] : named_fixtures()) {
        last.require(parse_apx(serialize_apx(f)) == f, "APX round trip fails on " + name);
        last.require(parse_tgf(serialize_tgf(f)) == f, "TGF round trip fails on " + name);
    }
    const auto checks = semantic_checks();
    for (std::size_t i = 0; i < checks.size(); ++i) {
        std::string again;
        try {
            again = dump(checks[i].second().evidence);
        } catch (const std::exception& e) {
            again = e.what();
        }
        last.require(again == first_run[i], "criterion " + std::to_string(i + 1) + " JSON differs between runs");
    }
    evidence.push_back({{"criterion", 12}, {"pass", last.pass}});
    report("APX/TGF round trips and byte-identical JSON across runs", last);

    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (all ? "all criteria pass" : "some criteria FAIL") << " in " << seconds << " s\n";

    if (!json_out.empty()) {
        std::ofstream out(json_out, std::ios::binary);
        out << dump(evidence);
    }
    return all ? 0 : 1;
}
