#include "helpers.hpp"

#include "sccsem/base_semantics.hpp"
#include "sccsem/constructive.hpp"
#include "sccsem/errors.hpp"
#include "sccsem/generators.hpp"
#include "sccsem/oracle.hpp"
#include "sccsem/scc_semantics.hpp"

#include <doctest.h>

using namespace sccsem;
using sccsem::test::set;

namespace {

FinitaryOrder identity(std::size_t n) {
    FinitaryOrder o;
    for (std::size_t i = 0; i < n; ++i) o.order.push_back(i);
    o.back_attack_bound.assign(n, 0);
    return o;
}

std::vector<Framework> all_fixtures() {
    return {fixtures::t3(),        fixtures::pentagon(),  fixtures::weak_reinstatement(),
            fixtures::skeptic_f(), fixtures::skeptic_g(), fixtures::ladder4(),
            fixtures::chain(5),    fixtures::chain_xy(6), test::single("a", true)};
}

} // namespace

TEST_CASE("lemma1 order on frameworks") {
    auto e = test::edge();
    // a has no attackers, so the next seed is b
    CHECK(lemma1_order(e, 2).order == std::vector<std::size_t>{0, 1});

    auto ch = fixtures::chain(5);
    auto o = lemma1_order(ch, 5);
    CHECK(o.order == std::vector<std::size_t>{0, 1, 2, 3, 4});
    CHECK(o.back_attack_bound == std::vector<std::size_t>{0, 1, 2, 3, 4});

    auto t3 = fixtures::t3();
    // a, then its attacker c, then c's attacker b
    CHECK(lemma1_order(t3).order == std::vector<std::size_t>{0, 2, 1});
    CHECK(lemma1_order(t3, 10).order.size() == 3);
}

TEST_CASE("lemma1 order on generators") {
    auto g = builtin_generator("bs_ladder");
    auto o = lemma1_order(*g, 6);
    std::vector<std::string> labels;
    for (auto i : o.order) labels.push_back(g->decode(i));
    // a1; its attackers b1, a2; b1 has none; a2's attackers b2, a3
    CHECK(labels == std::vector<std::string>{"a1", "b1", "a2", "b2", "a3", "b3"});
    for (std::size_t i = 0; i < o.order.size(); ++i) CHECK(o.back_attack_bound[i] <= i);

    CHECK_THROWS_AS(lemma1_order(*builtin_generator("omega_chain"), 4), PreconditionError);

    auto tree = builtin_generator("tree_scc", {{"tree", "e,0,1,10"}});
    auto ot = lemma1_order(*tree, 40);
    CHECK(ot.order.size() == 40);
    CHECK(std::set<std::size_t>(ot.order.begin(), ot.order.end()).size() == 40);
}

TEST_CASE("greedy cf1.5") {
    auto t3 = fixtures::t3();
    CHECK(greedy_cf15(t3, identity(3)) == set(t3, {"a"}));

    auto ch = fixtures::chain(5);
    auto s = greedy_cf15(ch, lemma1_order(ch));
    CHECK(s == set(ch, {"a4"}));
    CHECK(is_cf15(ch, s));

    auto pt = fixtures::pentagon();
    auto sp = greedy_cf15(pt, identity(5));
    CHECK(sp == set(pt, {"a", "b1", "b3"}));
    CHECK(is_cf15(pt, sp));
    CHECK(is_greedy_cf15(pt, identity(5), sp));

    FinitaryOrder partial;
    partial.order = {0, 1};
    CHECK_THROWS_AS(greedy_cf15(pt, partial), PreconditionError);
}

TEST_CASE("lexicographic stg1.5") {
    auto pt = fixtures::pentagon();
    CHECK(lex_scc_stg15(pt, identity(5)) == set(pt, {"a", "b1", "b3"}));
    auto wr = fixtures::weak_reinstatement();
    auto sw = lex_scc_stg15(wr, identity(5));
    CHECK(is_stg15(wr, sw));
    CHECK(oracle::brute_force(wr, Semantics::stg15).contains(sw));
    auto t3 = fixtures::t3();
    CHECK(lex_scc_stg15(t3, identity(3)) == set(t3, {"a"}));

    Limits tight;
    tight.component_limit = 2;
    CHECK_THROWS_AS(lex_scc_stg15(pt, identity(5), tight), LimitExceeded);
}

TEST_CASE("two-pass lexicographic stage") {
    auto f = fixtures::skeptic_f();
    CHECK(lex_greedy_stage(f, identity(3)) == set(f, {"b"}));
    auto t3 = fixtures::t3();
    auto s = lex_greedy_stage(t3, identity(3));
    CHECK(enumerate_stage(t3).contains(s));
    CHECK(range_of(t3, s).contains(0));
    auto loop = test::single("a", true);
    CHECK(lex_greedy_stage(loop, identity(1)).empty());

    Limits tight;
    tight.search_limit = 1;
    CHECK_THROWS_AS(lex_greedy_stage(fixtures::chain_xy(6), lemma1_order(fixtures::chain_xy(6)), tight),
                    LimitExceeded);
}

TEST_CASE("constructions on fixtures and the corpus") {
    auto frames = all_fixtures();
    for (auto& f : oracle::random_corpus(200, 9, oracle::default_corpus_seed)) frames.push_back(std::move(f));
    for (const auto& f : frames) {
        for (const auto& ord : {lemma1_order(f), identity(f.size())}) {
            const auto g = greedy_cf15(f, ord);
            CHECK(is_cf15(f, g));
            CHECK(is_greedy_cf15(f, ord, g));
            CHECK(is_stg15(f, lex_scc_stg15(f, ord)));
            const auto st = lex_greedy_stage(f, ord);
            CHECK(is_stage(f, st));
            CHECK(lex_greedy_stage(f, ord) == st);
        }
        const auto o = lemma1_order(f);
        const auto pos = o.positions(f.size());
        for (std::size_t i = 0; i < o.order.size(); ++i) {
            std::size_t back = 0;
            f.targets(static_cast<ArgIndex>(o.order[i])).for_each([&](ArgIndex b) {
                if (pos[b] < i) ++back;
            });
            CHECK(back == o.back_attack_bound[i]);
        }
    }
}
