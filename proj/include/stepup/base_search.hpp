#pragma once

// Randomized search for the base objects the lifts start from. Nothing is
// returned unless it passes the exhaustive verifier.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "stepup/certificate.hpp"
#include "stepup/coloring.hpp"
#include "stepup/hypergraph.hpp"

namespace stepup {

struct SearchLogEntry {
    std::uint64_t seed = 0;
    std::uint64_t score = 0;
    std::uint64_t step = 0;

    Json to_json() const { return Json{{"seed", seed}, {"score", score}, {"step", step}}; }
};

struct SearchOptions {
    std::uint64_t seed = 1;
    // Local-search steps per restart.
    std::uint64_t budget = 20000;
    int restarts = 8;
    // Coloring score = quad_weight * (4-sets with > 2 red triples)
    //                + clique_weight * (all-blue n-sets).
    std::uint64_t quad_weight = 1;
    std::uint64_t clique_weight = 1;
    // Probability of a random instead of a greedy flip.
    double noise = 0.2;
    // Skip the exhaustive fallback even when the ground set is small.
    bool allow_exhaustive = true;
};

// Seed of restart r; restarts are independent streams.
std::uint64_t restart_seed(std::uint64_t seed, int restart);

struct ColoringSearchResult {
    std::optional<TwoColoring> phi;
    std::uint64_t best_score = 0;
    // "local-search", "exhaustive" or "" on failure.
    std::string method;
    std::vector<SearchLogEntry> log;
};

// 3-uniform phi on [0, N) with at most 2 red triples per 4-set and no blue
// K_n^(3). Requires N >= 4, n >= 4.
ColoringSearchResult search_base_coloring(int N, int n, const SearchOptions& options = {});

// First passing phi in binary-counting order over colex-ranked triples
// (bit r of the counter = colour of triple r), or nullopt. N <= 6.
std::optional<TwoColoring> exhaustive_base_coloring(int N, int n);

struct HypergraphSearchResult {
    Hypergraph graph;
    // alpha_k of graph, exact.
    std::uint64_t alpha = 0;
    std::vector<SearchLogEntry> log;
};

// K_{k+1}-free (k-1)-graph on [0, N) with small alpha_k. Always succeeds
// (the empty graph is feasible); the best graph found is returned after
// re-verification. Requires k >= 3, k-1 <= N <= 64.
HypergraphSearchResult search_base_hypergraph(int N, int k, const SearchOptions& options = {});

} // namespace stepup
