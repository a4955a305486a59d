#pragma once

// Brute-force reference implementations. They share no code with the
// library beyond the Hypergraph/TwoColoring membership interface, and are
// only fast enough for tiny instances (v <= 12 or so).

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "stepup/coloring.hpp"
#include "stepup/hypergraph.hpp"

namespace oracle {

using stepup::Vertex;

// Highest differing bit by scanning from the top.
inline int delta(Vertex a, Vertex b)
{
    for (int i = 63; i >= 0; --i) {
        if (((a >> i) & 1U) != ((b >> i) & 1U)) {
            return i;
        }
    }
    return -1;
}

inline std::vector<int> deltas(const std::vector<Vertex>& t)
{
    std::vector<int> d;
    for (std::size_t i = 0; i + 1 < t.size(); ++i) {
        d.push_back(delta(t[i], t[i + 1]));
    }
    return d;
}

// (m, n): local extrema and local monotones among interior deltas.
inline std::pair<int, int> extrema(const std::vector<int>& d)
{
    int m = 0;
    int n = 0;
    for (std::size_t i = 1; i + 1 < d.size(); ++i) {
        const bool up_in = d[i - 1] < d[i];
        const bool up_out = d[i] < d[i + 1];
        if (up_in == up_out) {
            ++n;
        } else {
            ++m;
        }
    }
    return {m, n};
}

inline std::vector<Vertex> members(std::uint32_t mask)
{
    std::vector<Vertex> out;
    for (Vertex i = 0; i < 32; ++i) {
        if ((mask >> i) & 1U) {
            out.push_back(i);
        }
    }
    return out;
}

// All k-subsets of `set`, lexicographic.
inline void subsets(const std::vector<Vertex>& set, int k, std::vector<Vertex>& cur, std::size_t from,
                    std::vector<std::vector<Vertex>>& out)
{
    if (static_cast<int>(cur.size()) == k) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = from; i < set.size(); ++i) {
        cur.push_back(set[i]);
        subsets(set, k, cur, i + 1, out);
        cur.pop_back();
    }
}

inline std::vector<std::vector<Vertex>> subsets(const std::vector<Vertex>& set, int k)
{
    std::vector<std::vector<Vertex>> out;
    std::vector<Vertex> cur;
    subsets(set, k, cur, 0, out);
    return out;
}

inline bool is_clique(const stepup::Hypergraph& h, const std::vector<Vertex>& set)
{
    for (const auto& e : subsets(set, h.uniformity())) {
        if (!h.contains(e)) {
            return false;
        }
    }
    return true;
}

inline std::vector<Vertex> range(Vertex v)
{
    std::vector<Vertex> out;
    for (Vertex i = 0; i < v; ++i) {
        out.push_back(i);
    }
    return out;
}

// Lexicographically least t-clique.
inline std::optional<std::vector<Vertex>> find_clique(const stepup::Hypergraph& h, int t)
{
    for (const auto& s : subsets(range(h.ground_size()), t)) {
        if (is_clique(h, s)) {
            return s;
        }
    }
    return std::nullopt;
}

inline std::size_t max_clique(const stepup::Hypergraph& h)
{
    std::size_t best = 0;
    const auto v = static_cast<std::uint32_t>(h.ground_size());
    for (std::uint32_t mask = 0; mask < (1U << v); ++mask) {
        const auto set = members(mask);
        if (set.size() > best && (static_cast<int>(set.size()) < h.uniformity() || is_clique(h, set))) {
            best = set.size();
        }
    }
    return best;
}

// Largest subset without an s-clique.
inline std::size_t alpha(const stepup::Hypergraph& h, int s)
{
    std::size_t best = 0;
    const auto v = static_cast<std::uint32_t>(h.ground_size());
    for (std::uint32_t mask = 0; mask < (1U << v); ++mask) {
        const auto set = members(mask);
        if (set.size() <= best) {
            continue;
        }
        bool free = true;
        for (const auto& sub : subsets(set, s)) {
            if (is_clique(h, sub)) {
                free = false;
                break;
            }
        }
        if (free) {
            best = set.size();
        }
    }
    return best;
}

inline std::uint64_t max_red(const stepup::TwoColoring& chi, int p)
{
    std::uint64_t best = 0;
    for (const auto& set : subsets(range(chi.ground_size()), p)) {
        std::uint64_t red = 0;
        for (const auto& e : subsets(set, chi.uniformity())) {
            red += chi.color(e) == stepup::Color::red ? 1 : 0;
        }
        best = std::max(best, red);
    }
    return best;
}

inline stepup::Hypergraph random_hypergraph(int k, Vertex v, double density, std::mt19937_64& rng)
{
    std::vector<std::vector<Vertex>> edges;
    std::bernoulli_distribution coin(density);
    for (const auto& e : subsets(range(v), k)) {
        if (coin(rng)) {
            edges.push_back(e);
        }
    }
    return stepup::Hypergraph::from_edges(k, v, edges);
}

// Does some 3-coloring of [0, N) give every 4-set 1 or 2 red triples?
// Plain backtracking, triples in colex order, each 4-set checked when its
// last triple is coloured.
inline bool base_phi_exists(int N)
{
    std::vector<std::array<int, 3>> triples;
    std::array<std::array<std::array<int, 16>, 16>, 16> id{};
    for (int c = 2; c < N; ++c) {
        for (int b = 1; b < c; ++b) {
            for (int a = 0; a < b; ++a) {
                id[a][b][c] = static_cast<int>(triples.size());
                triples.push_back({a, b, c});
            }
        }
    }
    std::vector<std::vector<std::array<int, 4>>> closing(triples.size());
    for (int a = 0; a < N; ++a) {
        for (int b = a + 1; b < N; ++b) {
            for (int c = b + 1; c < N; ++c) {
                for (int d = c + 1; d < N; ++d) {
                    const std::array<int, 4> q{id[a][b][c], id[a][b][d], id[a][c][d], id[b][c][d]};
                    closing[static_cast<std::size_t>(*std::max_element(q.begin(), q.end()))].push_back(q);
                }
            }
        }
    }
    std::vector<int> color(triples.size(), 0);
    auto rec = [&](auto&& self, std::size_t t) -> bool {
        if (t == triples.size()) {
            return true;
        }
        for (int c = 0; c < 2; ++c) {
            color[t] = c;
            bool ok = true;
            for (const auto& q : closing[t]) {
                const int red = color[static_cast<std::size_t>(q[0])] + color[static_cast<std::size_t>(q[1])]
                                + color[static_cast<std::size_t>(q[2])] + color[static_cast<std::size_t>(q[3])];
                if (red < 1 || red > 2) {
                    ok = false;
                    break;
                }
            }
            if (ok && self(self, t + 1)) {
                return true;
            }
        }
        return false;
    };
    return rec(rec, 0);
}

} // namespace oracle
