#include <catch2/catch_amalgamated.hpp>

#include "injcolor/exact.hpp"
#include "test_util.hpp"

using namespace inj;

TEST_CASE("decision search on small graphs")
{
    SECTION("triangle needs exactly three colors")
    {
        auto g = testutil::cycle(3);
        ConflictGraph cg(g);
        auto yes = color_with_k(cg, 3);
        REQUIRE(yes.outcome == SearchOutcome::Found);
        CHECK(validate(cg, *yes.coloring).valid());
        auto no = color_with_k(cg, 2);
        CHECK(no.outcome == SearchOutcome::None);
    }
    SECTION("star is 1-colorable")
    {
        auto g = testutil::star(3);
        ConflictGraph cg(g);
        auto res = color_with_k(cg, 1);
        REQUIRE(res.outcome == SearchOutcome::Found);
        CHECK(validate(cg, *res.coloring).valid());
    }
    SECTION("budget exhaustion is distinct from unsatisfiable")
    {
        auto g = testutil::complete(4);
        ConflictGraph cg(g);
        auto res = color_with_k(cg, 5, 2);
        CHECK(res.outcome == SearchOutcome::Budget);
    }
}

TEST_CASE("known small chromatic indices")
{
    // oracle first: enumeration fixes the expected values
    CHECK(testutil::chi_enumeration(testutil::cycle(3)) == 3);
    CHECK(testutil::chi_enumeration(testutil::path(4)) == 2);
    CHECK(testutil::chi_enumeration(testutil::star(3)) == 1);
    CHECK(testutil::chi_enumeration(testutil::complete(4)) == 6);

    CHECK(chi_injective_exact(testutil::cycle(3)).chi == 3);
    CHECK(chi_injective_exact(testutil::path(4)).chi == 2);
    CHECK(chi_injective_exact(testutil::star(3)).chi == 1);
    CHECK(chi_injective_exact(testutil::complete(4)).chi == 6);
}

TEST_CASE("edgeless graphs have index zero")
{
    Graph g(4);
    auto res = chi_injective_exact(g);
    CHECK(res.chi == 0);
    CHECK(res.exact);
}

TEST_CASE("solver equals enumeration on small random graphs")
{
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        int n = 4 + static_cast<int>(seed % 5);
        auto g = testutil::random_graph(n, 8, seed);
        REQUIRE(g.num_edges() <= 8);
        auto res = chi_injective_exact(g);
        REQUIRE(res.exact);
        CHECK(res.chi == testutil::chi_enumeration(g));
        if (res.chi > 0) {
            ConflictGraph cg(g);
            CHECK(validate(cg, res.witness).valid());
            CHECK(res.witness.colors_used() == res.chi);
            // one fewer color is certified impossible
            CHECK(color_with_k(cg, res.chi - 1 == 0 ? 1 : res.chi - 1).outcome
                == (res.chi == 1 ? SearchOutcome::Found : SearchOutcome::None));
        }
    }
}

TEST_CASE("chi is invariant under relabeling")
{
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        auto g = testutil::random_graph(8, 11, seed);
        int expected = chi_injective_exact(g).chi;
        std::mt19937_64 rng(seed + 999);
        std::vector<int> perm(8);
        for (int i = 0; i < 8; ++i)
            perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        Graph h(8);
        for (EdgeId e : g.edges()) {
            auto [u, v] = g.edge_ends(e);
            h.add_edge(perm[u], perm[v]);
        }
        CHECK(chi_injective_exact(h).chi == expected);
    }
}

TEST_CASE("budget exhaustion yields a bracket with a witness")
{
    auto g = testutil::complete(4);
    auto res = chi_injective_exact(g, 1);
    CHECK_FALSE(res.exact);
    CHECK(res.lower_bound <= res.upper_bound);
    CHECK(res.chi == res.upper_bound);
    ConflictGraph cg(g);
    CHECK(validate(cg, res.witness).valid());
    CHECK(res.witness.colors_used() == res.upper_bound);
}

TEST_CASE("solver is deterministic")
{
    auto g = testutil::random_graph(9, 13, 3);
    auto a = chi_injective_exact(g);
    auto b = chi_injective_exact(g);
    CHECK(a.chi == b.chi);
    CHECK(a.nodes == b.nodes);
    for (EdgeId e : g.edges())
        CHECK(a.witness.get(e) == b.witness.get(e));
}
