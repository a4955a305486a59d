#pragma once

// Exact clique and s-independence search in k-uniform hypergraphs.
//
// Exact routines work over a scope of at most 64 vertices (one bit each).
// A partial clique S carries a candidate mask; for |S| >= k-2 the candidates
// form an ordinary graph (u ~ v iff every k-subset T+{u,v}, T a (k-2)-subset
// of S, is an edge), and any extension of S is a clique of that graph, so a
// greedy coloring of it bounds the extension size.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "stepup/hypergraph.hpp"

namespace stepup {

constexpr std::size_t exact_scope_limit = 64;

// All vertices of the ground set, when it fits the exact limit.
std::vector<Vertex> full_scope(const Hypergraph& h);

// Lexicographically least t-clique inside `scope` (sorted, <= 64 vertices),
// or nullopt. t must be >= k; t > |scope| yields nullopt.
std::optional<std::vector<Vertex>> find_clique(const Hypergraph& h, int t, std::span<const Vertex> scope);
std::optional<std::vector<Vertex>> find_clique(const Hypergraph& h, int t);

// Same search with `seed` (sorted, inside scope) forced into the clique.
std::optional<std::vector<Vertex>> find_clique_containing(const Hypergraph& h, int t, std::span<const Vertex> scope,
                                                          std::span<const Vertex> seed);

// Maximum clique in scope. `on_improve`, when set, sees every incumbent in
// the order found (each is a clique; the last one is the result).
std::vector<Vertex> max_clique(const Hypergraph& h, std::span<const Vertex> scope,
                               const std::function<void(std::span<const Vertex>)>& on_improve = {});

enum class AlphaMode { exact, heuristic };

const char* to_string(AlphaMode m);

struct AlphaResult {
    std::size_t size = 0;
    std::vector<Vertex> witness;
    AlphaMode mode = AlphaMode::exact;
};

struct AlphaOptions {
    // Exact branch-and-bound is refused above 64 vertices unless forced.
    bool force_exact = false;
    // Heuristic mode: number of randomized greedy restarts.
    int restarts = 32;
    std::uint64_t seed = 1;
};

// Largest vertex subset containing no K_s (s >= k). Exact for <= 64 vertices,
// otherwise an any-time lower bound (mode = heuristic).
AlphaResult alpha_s(const Hypergraph& h, int s, const AlphaOptions& options = {});

// True when `vertices` (sorted) span a clique of h.
bool is_clique(const Hypergraph& h, std::span<const Vertex> vertices);

// True when `members` (sorted) plus v contain an s-clique through v. Works
// for any number of members; plain depth-first search.
bool has_clique_through(const Hypergraph& h, std::span<const Vertex> members, Vertex v, int s);

} // namespace stepup
