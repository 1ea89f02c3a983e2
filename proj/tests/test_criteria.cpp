#include "helpers.hpp"

#include "sccsem/base_semantics.hpp"
#include "sccsem/criteria.hpp"
#include "sccsem/errors.hpp"
#include "sccsem/generators.hpp"
#include "sccsem/oracle.hpp"
#include "sccsem/scc.hpp"
#include "sccsem/scc_semantics.hpp"

#include <doctest.h>

using namespace sccsem;
using sccsem::test::family;
using sccsem::test::set;

TEST_CASE("I-maximality") {
    auto t3 = fixtures::t3();
    CHECK(check_i_maximality(enumerate_naive(t3)).holds);
    auto r = check_i_maximality(family(t3, {{}, {"a"}}));
    CHECK_FALSE(r.holds);
    REQUIRE(r.witness);
    CHECK(r.witness->sets[0].second.empty());
    CHECK(r.witness->sets[1].second == set(t3, {"a"}));
    auto pt = fixtures::pentagon();
    CHECK(check_i_maximality(enumerate_semantics(pt, Semantics::cf15)).holds);
}

TEST_CASE("reinstatement variants") {
    auto t3 = fixtures::t3();
    auto plain = check_reinstatement(t3, family(t3, {{"a"}}), Reinstatement::plain);
    CHECK_FALSE(plain.holds);
    REQUIRE(plain.witness);
    CHECK(plain.witness->sets[0].second == set(t3, {"a"}));
    CHECK(plain.witness->arguments[0].second == 2);

    auto wr = fixtures::weak_reinstatement();
    auto weak = check_reinstatement(wr, enumerate_semantics(wr, Semantics::cf15), Reinstatement::weak);
    CHECK_FALSE(weak.holds);
    REQUIRE(weak.witness);
    CHECK(weak.witness->sets[0].second == set(wr, {"a", "b2"}));
    CHECK(weak.witness->arguments[0].second == *wr.index_of("b1"));

    CHECK(check_reinstatement(t3, enumerate_naive(t3), Reinstatement::cf).holds);
}

TEST_CASE("directionality") {
    auto e = test::edge();
    auto r = check_directionality(e, Semantics::naive);
    CHECK_FALSE(r.holds);
    REQUIRE(r.witness);
    CHECK(r.witness->sets[0].second == set(e, {"a"}));
    CHECK(r.witness->families[0].second == family(e, {{"a"}}));
    CHECK(r.witness->families[1].second == family(e, {{}, {"a"}}));

    auto xy = fixtures::chain_xy(8);
    auto cf15 = enumerate_semantics(xy, Semantics::cf15);
    CHECK(cf15.contains(set(xy, {"x"})));
    CHECK(cf15.contains(set(xy, {"y", "a7"})));
    CHECK(check_directionality(xy, Semantics::cf15, set(xy, {"x", "y"})).holds);
    CHECK_THROWS_AS(check_directionality(xy, Semantics::cf15, set(xy, {"a0"})), PreconditionError);

    auto t3 = fixtures::t3();
    CHECK(check_directionality(t3, Semantics::cf2).holds);

    Limits tight;
    tight.unattacked_cap = 2;
    CHECK_THROWS_AS(check_directionality(xy, Semantics::cf15, std::nullopt, tight), LimitExceeded);
}

TEST_CASE("skepticism relations") {
    auto f = fixtures::skeptic_f();
    auto b = family(f, {{"b"}});
    auto a = family(f, {{"a"}});
    CHECK_FALSE(skepticism_compare(b, a, Skepticism::cap));
    CHECK(skepticism_compare(a, a, Skepticism::cap));
    CHECK(skepticism_compare(a, a, Skepticism::weak));
    CHECK(skepticism_compare(a, family(f, {{"a", "b"}}), Skepticism::weak));
    // ⋂ of no extensions is everything
    CHECK(skepticism_compare(ExtensionSet(3, {}), ExtensionSet(3, {}), Skepticism::cap));
    CHECK_FALSE(skepticism_compare(ExtensionSet(3, {}), a, Skepticism::cap));
    CHECK_THROWS_AS(skepticism_compare(ExtensionSet(2, {}), a, Skepticism::cap), PreconditionError);
}

TEST_CASE("skepticism adequacy") {
    auto f = fixtures::skeptic_f();
    auto g = fixtures::skeptic_g();
    CHECK_FALSE(check_skepticism_adequacy(f, g, Semantics::stage, Skepticism::weak).holds);
    CHECK_FALSE(check_skepticism_adequacy(f, g, Semantics::stg15, Skepticism::cap).holds);
    CHECK(check_skepticism_adequacy(f, f, Semantics::cf2, Skepticism::weak).holds);
    CHECK(check_skepticism_adequacy(f, f, Semantics::stage, Skepticism::cap).holds);
    CHECK_THROWS_AS(check_skepticism_adequacy(g, f, Semantics::stage, Skepticism::cap), PreconditionError);
    CHECK_THROWS_AS(check_skepticism_adequacy(f, fixtures::t3(), Semantics::stage, Skepticism::cap),
                    PreconditionError);
}

TEST_CASE("table rows on the corpus") {
    std::size_t directionality_failures = 0;
    for (const auto& f : oracle::random_corpus(200, 9, oracle::default_corpus_seed)) {
        for (auto which : table_semantics) {
            const auto es = enumerate_semantics(f, which);
            CHECK(check_i_maximality(es).holds);
            CHECK(check_reinstatement(f, es, Reinstatement::cf).holds);
            if (which == Semantics::icf2 || which == Semantics::istg2) {
                CHECK(check_reinstatement(f, es, Reinstatement::weak).holds);
            }
            const auto d = check_directionality(f, which);
            if (!d.holds) {
                ++directionality_failures;
                // the witness re-verifies
                const auto& u = d.witness->sets[0].second;
                CHECK(is_unattacked(f, u));
                CHECK(d.witness->families[0].second != d.witness->families[1].second);
            }
        }
    }
    MESSAGE("finite directionality failures across the corpus: " << directionality_failures);
}
