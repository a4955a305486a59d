#include "doctest.h"

#include <algorithm>
#include <atomic>
#include <set>
#include <stdexcept>

#include "oracles.hpp"
#include "stepup/combinatorics.hpp"
#include "stepup/parallel.hpp"

using namespace stepup;

TEST_CASE("binomial")
{
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(64, 5) == 7624512);
    CHECK(binomial(1024, 3) == 178433024);
    CHECK_THROWS(binomial(200, 100));
}

TEST_CASE("colex rank and unrank are inverse and follow colex order")
{
    const auto all = oracle::subsets(oracle::range(10), 3);
    std::vector<std::vector<Vertex>> colex = all;
    std::sort(colex.begin(), colex.end(), [](const auto& a, const auto& b) {
        return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
    });
    for (std::uint64_t r = 0; r < colex.size(); ++r) {
        CHECK(colex_rank(colex[r]) == r);
        CHECK(colex_unrank(r, 3, 10) == colex[r]);
    }
    const std::vector<Vertex> unsorted{3, 1, 5};
    CHECK_THROWS(colex_rank(unsorted));
}

TEST_CASE("for_each_combination visits every subset once in lexicographic order")
{
    std::vector<std::vector<std::uint32_t>> seen;
    for_each_combination(7, 3, [&](std::span<const std::uint32_t> idx) { seen.emplace_back(idx.begin(), idx.end()); });
    CHECK(seen.size() == 35);
    CHECK(std::is_sorted(seen.begin(), seen.end()));
    CHECK(std::set<std::vector<std::uint32_t>>(seen.begin(), seen.end()).size() == 35);

    int calls = 0;
    for_each_combination(4, 0, [&](std::span<const std::uint32_t> idx) {
        CHECK(idx.empty());
        ++calls;
    });
    CHECK(calls == 1);

    calls = 0;
    for_each_combination(3, 5, [&](std::span<const std::uint32_t>) { ++calls; });
    CHECK(calls == 0);

    calls = 0;
    for_each_combination(10, 2, [&](std::span<const std::uint32_t>) { return ++calls < 4; });
    CHECK(calls == 4);
}

TEST_CASE("seeded sampling is reproducible")
{
    std::mt19937_64 a(42);
    std::mt19937_64 b(42);
    for (int i = 0; i < 1000; ++i) {
        const auto x = uniform_below(a, 37);
        CHECK(x < 37);
        CHECK(x == uniform_below(b, 37));
    }
    std::mt19937_64 rng(7);
    const auto s = sample_sorted(rng, 100, 30);
    CHECK(s.size() == 30);
    CHECK(std::adjacent_find(s.begin(), s.end(), [](Vertex x, Vertex y) { return x >= y; }) == s.end());
    CHECK(s.back() < 100);
    CHECK(sample_sorted(rng, 5, 5) == std::vector<Vertex>{0, 1, 2, 3, 4});
    CHECK_THROWS(sample_sorted(rng, 5, 6));
}

TEST_CASE("parallel_tasks runs every index and rethrows")
{
    std::vector<std::atomic<int>> hits(500);
    parallel_tasks(hits.size(), [&](std::size_t i) { hits[i]++; });
    for (const auto& h : hits) {
        CHECK(h.load() == 1);
    }
    CHECK_THROWS_AS(parallel_tasks(50,
                                   [](std::size_t i) {
                                       if (i == 17) {
                                           throw std::runtime_error("boom");
                                       }
                                   }),
                    std::runtime_error);
}
