#include "doctest.h"

#include "oracles.hpp"
#include "stepup/base_search.hpp"
#include "stepup/clique.hpp"
#include "stepup/error.hpp"

using namespace stepup;

namespace {

// 4-sets with 1 or 2 red triples, and no all-blue n-set, by brute force.
bool phi_ok(const TwoColoring& phi, int n)
{
    const auto ground = oracle::range(phi.ground_size());
    for (const auto& q : oracle::subsets(ground, 4)) {
        int red = 0;
        for (const auto& t : oracle::subsets(q, 3)) {
            red += phi.color(t) == Color::red ? 1 : 0;
        }
        if (red > 2) {
            return false;
        }
    }
    for (const auto& s : oracle::subsets(ground, n)) {
        bool blue = true;
        for (const auto& t : oracle::subsets(s, 3)) {
            blue = blue && phi.color(t) == Color::blue;
        }
        if (blue) {
            return false;
        }
    }
    return true;
}

} // namespace

TEST_CASE("exhaustive base colorings")
{
    for (int N = 4; N <= 6; ++N) {
        const auto phi = exhaustive_base_coloring(N, 4);
        REQUIRE(phi.has_value());
        CHECK(phi_ok(*phi, 4));
        CHECK(verify_base_phi(*phi, 4).pass);
    }
    CHECK(exhaustive_base_coloring(3, 4).has_value());
    CHECK_THROWS(exhaustive_base_coloring(7, 4));
}

TEST_CASE("searched colorings pass the independent check")
{
    SearchOptions opts;
    opts.allow_exhaustive = false;
    for (const auto& [N, n] : std::vector<std::pair<int, int>>{{4, 5}, {6, 4}, {7, 4}, {8, 5}}) {
        CAPTURE(N);
        CAPTURE(n);
        const auto r = search_base_coloring(N, n, opts);
        REQUIRE(r.phi.has_value());
        CHECK(r.method == "local-search");
        CHECK(r.best_score == 0);
        CHECK(phi_ok(*r.phi, n));
    }
}

TEST_CASE("no base coloring exists on 8 points for n = 4")
{
    CHECK(oracle::base_phi_exists(7));
    CHECK_FALSE(oracle::base_phi_exists(8));
    SearchOptions opts;
    opts.budget = 3000;
    opts.restarts = 2;
    const auto r = search_base_coloring(8, 4, opts);
    CHECK_FALSE(r.phi.has_value());
    CHECK(r.best_score > 0);
    CHECK(r.method.empty());
}

TEST_CASE("search is reproducible")
{
    SearchOptions opts;
    opts.seed = 77;
    opts.allow_exhaustive = false;
    const auto a = search_base_coloring(7, 4, opts);
    const auto b = search_base_coloring(7, 4, opts);
    REQUIRE(a.phi.has_value());
    REQUIRE(b.phi.has_value());
    CHECK(a.phi->red().edges() == b.phi->red().edges());
    CHECK(a.log.size() == b.log.size());
    for (std::size_t i = 0; i < a.log.size() && i < b.log.size(); ++i) {
        CHECK(a.log[i].to_json() == b.log[i].to_json());
    }
    CHECK(restart_seed(77, 0) != restart_seed(77, 1));
    CHECK(restart_seed(77, 3) == restart_seed(77, 3));
    CHECK_THROWS(search_base_coloring(3, 4));
}

TEST_CASE("base hypergraph search")
{
    SUBCASE("no k-set fits: empty graph")
    {
        const auto r = search_base_hypergraph(4, 5);
        CHECK(r.alpha == 4);
        CHECK(r.graph.edges().empty());
    }
    SUBCASE("checked against brute force")
    {
        for (const auto& [N, k] : std::vector<std::pair<int, int>>{{5, 4}, {6, 5}, {7, 4}, {8, 5}}) {
            CAPTURE(N);
            CAPTURE(k);
            SearchOptions opts;
            opts.budget = 400;
            opts.restarts = 3;
            const auto r = search_base_hypergraph(N, k, opts);
            CHECK(r.graph.uniformity() == k - 1);
            CHECK(r.graph.ground_size() == static_cast<std::uint64_t>(N));
            CHECK_FALSE(oracle::find_clique(r.graph, k + 1).has_value());
            CHECK(r.alpha == oracle::alpha(r.graph, k));
            CHECK(r.alpha >= static_cast<std::uint64_t>(k - 1));
            CHECK(r.alpha < static_cast<std::uint64_t>(N));
        }
    }
    SUBCASE("reproducible")
    {
        SearchOptions opts;
        opts.seed = 5;
        opts.budget = 300;
        const auto a = search_base_hypergraph(7, 5, opts);
        const auto b = search_base_hypergraph(7, 5, opts);
        CHECK(a.graph.edges() == b.graph.edges());
        CHECK(a.alpha == b.alpha);
    }
    CHECK_THROWS(search_base_hypergraph(3, 5));
    CHECK_THROWS(search_base_hypergraph(6, 2));
}
