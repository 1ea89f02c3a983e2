#include "helpers.hpp"

#include "sccsem/errors.hpp"
#include "sccsem/generators.hpp"
#include "sccsem/oracle.hpp"
#include "sccsem/scc.hpp"

#include <doctest.h>

#include <set>

using namespace sccsem;
using sccsem::test::set;

TEST_CASE("decompose") {
    auto t3 = fixtures::t3();
    auto d = decompose(t3);
    REQUIRE(d.count() == 1);
    CHECK(d.components[0] == t3.all());
    CHECK(d.condensation_edges.empty());

    auto l4 = fixtures::ladder4();
    auto dl = decompose(l4);
    REQUIRE(dl.count() == 2);
    CHECK(dl.components[0] == set(l4, {"b1"}));
    CHECK(dl.components[1] == l4.all() - set(l4, {"b1"}));

    auto ch = fixtures::chain(5);
    auto dc = decompose(ch);
    REQUIRE(dc.count() == 5);
    for (std::size_t i = 0; i < 5; ++i) CHECK(dc.components[i] == ArgSet::of(5, {static_cast<ArgIndex>(4 - i)}));
}

TEST_CASE("d_s") {
    auto l4 = fixtures::ladder4();
    auto big = l4.all() - set(l4, {"b1"});
    CHECK(d_s(l4, set(l4, {"b1"}), big) == set(l4, {"a1"}));
    CHECK(d_s(l4, l4.none(), big).empty());
    auto t3 = fixtures::t3();
    CHECK(d_s(t3, set(t3, {"a"}), t3.all()).empty());
}

TEST_CASE("unattacked sets") {
    auto e = test::edge();
    CHECK(unattacked_sets(e) == std::vector<ArgSet>{e.none(), set(e, {"a"}), e.all()});

    auto xy = fixtures::chain_xy(5);
    auto sets = unattacked_sets(xy);
    CHECK(std::find(sets.begin(), sets.end(), set(xy, {"x", "y"})) != sets.end());

    auto t3 = fixtures::t3();
    CHECK(unattacked_sets(t3) == std::vector<ArgSet>{t3.none(), t3.all()});

    // three isolated arguments: all 8 subsets qualify
    auto loose = Framework::build({"a", "b", "c"}, {});
    CHECK(unattacked_sets(loose, 8).size() == 8);
    CHECK_THROWS_AS(unattacked_sets(loose, 7), LimitExceeded);
}

TEST_CASE("scc properties on the random corpus") {
    for (const auto& f : oracle::random_corpus(80, 9, 11)) {
        auto d = decompose(f);
        // partition
        ArgSet seen = f.none();
        for (const auto& c : d.components) {
            CHECK_FALSE(c.intersects(seen));
            seen |= c;
        }
        CHECK(seen == f.all());
        // symmetric membership and mutual reachability
        for (ArgIndex a = 0; a < f.size(); ++a) {
            for (ArgIndex b = 0; b < f.size(); ++b) {
                const bool same = d.component_of[a] == d.component_of[b];
                const bool mutual = reachable_from(f, f.all(), a).contains(b) && reachable_from(f, f.all(), b).contains(a);
                CHECK(same == mutual);
            }
        }
        // condensation edges point forward in the listed order, hence acyclic
        for (auto [x, y] : d.condensation_edges) CHECK(x < y);
        for (const auto& att : f.attack_list()) {
            auto x = d.component_of[att.attacker];
            auto y = d.component_of[att.target];
            if (x != y) {
                CHECK(std::binary_search(d.condensation_edges.begin(), d.condensation_edges.end(), std::pair{x, y}));
            }
        }
        // every unattacked set really is unattacked, and none is missed
        const auto sets = unattacked_sets(f);
        for (const auto& u : sets) CHECK((attacked_by(f, f.all() - u) & u).empty());
        if (f.size() <= 8) {
            std::size_t brute = 0;
            for (std::uint32_t m = 0; m < (1u << f.size()); ++m) {
                ArgSet u = f.none();
                for (ArgIndex a = 0; a < f.size(); ++a) {
                    if (m >> a & 1u) u.insert(a);
                }
                if ((attacked_by(f, f.all() - u) & u).empty()) ++brute;
            }
            CHECK(brute == sets.size());
        }
        // D_S(X) ⊆ X and each member is attacked from S ∖ X
        ArgSet s = f.none();
        for (ArgIndex a = 0; a < f.size(); a += 3) s.insert(a);
        for (const auto& x : d.components) {
            auto dx = d_s(f, s, x);
            CHECK(dx.is_subset_of(x));
            dx.for_each([&](ArgIndex b) { CHECK(f.attackers(b).intersects(s - x)); });
        }
    }
}
