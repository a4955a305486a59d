#include "stepup/base_search.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <random>

#include "stepup/clique.hpp"
#include "stepup/error.hpp"
#include "stepup/parallel.hpp"

namespace stepup {

std::uint64_t restart_seed(std::uint64_t seed, int restart)
{
    // splitmix64 finalizer over (seed, restart).
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (static_cast<std::uint64_t>(restart) + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

namespace {

constexpr std::uint64_t max_constraints = std::uint64_t{1} << 22;

// Constraint system for the base coloring: every 4-set carries at most 2
// red triples, every n-set at least one.
struct ColoringModel {
    struct Constraint {
        std::vector<std::uint32_t> triples;
        bool quad = false;
    };

    std::uint32_t triple_count = 0;
    std::vector<Constraint> constraints;
    std::vector<std::vector<std::uint32_t>> touching;
    std::uint64_t quad_weight = 1;
    std::uint64_t clique_weight = 1;

    ColoringModel(int N, int n, const SearchOptions& options)
        : quad_weight(options.quad_weight)
        , clique_weight(options.clique_weight)
    {
        const auto v = static_cast<std::uint32_t>(N);
        triple_count = static_cast<std::uint32_t>(binomial(v, 3));
        if (binomial(v, 4) + (n <= N ? binomial(v, static_cast<std::uint64_t>(n)) : 0) > max_constraints) {
            throw InputError("search-phi: instance too large");
        }
        add_sets(v, 4, true);
        if (n <= N) {
            add_sets(v, n, false);
        }
        touching.resize(triple_count);
        for (std::uint32_t c = 0; c < constraints.size(); ++c) {
            for (const auto t : constraints[c].triples) {
                touching[t].push_back(c);
            }
        }
    }

    void add_sets(std::uint32_t v, int size, bool quad)
    {
        std::vector<Vertex> set(static_cast<std::size_t>(size));
        for_each_combination(v, size, [&](std::span<const std::uint32_t> idx) {
            std::copy(idx.begin(), idx.end(), set.begin());
            Constraint c;
            c.quad = quad;
            for_each_combination(static_cast<std::uint32_t>(size), 3, [&](std::span<const std::uint32_t> inner) {
                const std::array<Vertex, 3> t{set[inner[0]], set[inner[1]], set[inner[2]]};
                c.triples.push_back(static_cast<std::uint32_t>(colex_rank(t)));
            });
            constraints.push_back(std::move(c));
        });
    }

    std::uint64_t penalty(std::uint32_t c, std::uint32_t red) const
    {
        const auto& con = constraints[c];
        if (con.quad) {
            return red > 2 ? quad_weight : 0;
        }
        return red == 0 ? clique_weight : 0;
    }
};

struct ColoringState {
    const ColoringModel& model;
    std::vector<std::uint8_t> red;
    std::vector<std::uint32_t> red_count;
    std::uint64_t score = 0;

    ColoringState(const ColoringModel& m, std::vector<std::uint8_t> colors)
        : model(m)
        , red(std::move(colors))
        , red_count(m.constraints.size(), 0)
    {
        for (std::uint32_t c = 0; c < m.constraints.size(); ++c) {
            for (const auto t : m.constraints[c].triples) {
                red_count[c] += red[t];
            }
            score += m.penalty(c, red_count[c]);
        }
    }

    std::int64_t flip_delta(std::uint32_t t) const
    {
        std::int64_t d = 0;
        for (const auto c : model.touching[t]) {
            const std::uint32_t after = red[t] ? red_count[c] - 1 : red_count[c] + 1;
            d += static_cast<std::int64_t>(model.penalty(c, after)) - static_cast<std::int64_t>(model.penalty(c, red_count[c]));
        }
        return d;
    }

    void flip(std::uint32_t t)
    {
        for (const auto c : model.touching[t]) {
            score -= model.penalty(c, red_count[c]);
            red_count[c] = red[t] ? red_count[c] - 1 : red_count[c] + 1;
            score += model.penalty(c, red_count[c]);
        }
        red[t] ^= 1U;
    }
};

TwoColoring to_coloring(int N, const std::vector<std::uint8_t>& red)
{
    EdgeSet edges(3, static_cast<std::uint64_t>(N));
    for (std::uint32_t r = 0; r < red.size(); ++r) {
        if (red[r]) {
            edges.set_rank(r, true);
        }
    }
    return TwoColoring(Hypergraph::from_edge_set(std::move(edges)));
}

struct ColoringRestart {
    bool success = false;
    std::uint64_t best_score = 0;
    std::vector<std::uint8_t> colors;
    std::vector<SearchLogEntry> log;
};

ColoringRestart run_coloring_restart(const ColoringModel& model, std::uint64_t seed, const SearchOptions& options,
                                     const std::function<bool()>& cancelled)
{
    std::mt19937_64 rng(seed);
    std::vector<std::uint8_t> init(model.triple_count);
    for (auto& c : init) {
        c = uniform_below(rng, 5) < 2 ? 1 : 0;
    }
    ColoringState state(model, std::move(init));
    ColoringRestart out;
    out.best_score = state.score;
    out.log.push_back({seed, state.score, 0});
    const std::uint64_t noise_cut = static_cast<std::uint64_t>(std::clamp(options.noise, 0.0, 1.0) * 1e6);
    std::vector<std::uint32_t> violated;
    for (std::uint64_t step = 1; step <= options.budget && state.score > 0; ++step) {
        if ((step & 255U) == 0 && cancelled()) {
            break;
        }
        violated.clear();
        for (std::uint32_t c = 0; c < model.constraints.size(); ++c) {
            if (model.penalty(c, state.red_count[c]) > 0) {
                violated.push_back(c);
            }
        }
        const auto& con = model.constraints[violated[uniform_below(rng, violated.size())]];
        std::uint32_t pick = con.triples[uniform_below(rng, con.triples.size())];
        if (uniform_below(rng, 1000000) >= noise_cut) {
            std::int64_t best = 0;
            bool have = false;
            for (const auto t : con.triples) {
                const auto d = state.flip_delta(t);
                if (!have || d < best) {
                    best = d;
                    pick = t;
                    have = true;
                }
            }
        }
        state.flip(pick);
        if (state.score < out.best_score) {
            out.best_score = state.score;
            out.log.push_back({seed, state.score, step});
        }
    }
    out.success = state.score == 0;
    out.colors = std::move(state.red);
    return out;
}

bool passes(const TwoColoring& phi, int n)
{
    return verify_base_phi(phi, n).pass;
}

} // namespace

std::optional<TwoColoring> exhaustive_base_coloring(int N, int n)
{
    if (N < 3 || N > 6) {
        throw InputError("exhaustive base search needs 3 <= N <= 6");
    }
    SearchOptions opts;
    const ColoringModel model(N, n, opts);
    std::vector<std::uint32_t> masks;
    std::vector<bool> quad;
    for (const auto& c : model.constraints) {
        std::uint32_t m = 0;
        for (const auto t : c.triples) {
            m |= 1U << t;
        }
        masks.push_back(m);
        quad.push_back(c.quad);
    }
    const std::uint32_t total = 1U << model.triple_count;
    for (std::uint32_t colors = 0; colors < total; ++colors) {
        bool ok = true;
        for (std::size_t c = 0; c < masks.size() && ok; ++c) {
            const int red = __builtin_popcount(colors & masks[c]);
            ok = quad[c] ? red <= 2 : red > 0;
        }
        if (ok) {
            std::vector<std::uint8_t> red(model.triple_count);
            for (std::uint32_t t = 0; t < model.triple_count; ++t) {
                red[t] = (colors >> t) & 1U;
            }
            auto phi = to_coloring(N, red);
            if (passes(phi, n)) {
                return phi;
            }
        }
    }
    return std::nullopt;
}

ColoringSearchResult search_base_coloring(int N, int n, const SearchOptions& options)
{
    if (N < 4 || n < 4) {
        throw InputError("search-phi needs N >= 4 and n >= 4");
    }
    if (N > 64) {
        throw InputError("search-phi: N limited to 64");
    }
    const ColoringModel model(N, n, options);
    const int restarts = std::max(1, options.restarts);
    std::vector<ColoringRestart> outcomes(static_cast<std::size_t>(restarts));
    std::atomic<int> winner{restarts};
    parallel_tasks(static_cast<std::size_t>(restarts), [&](std::size_t r) {
        const int ri = static_cast<int>(r);
        if (ri > winner.load()) {
            return;
        }
        const auto cancelled = [&] { return ri > winner.load(); };
        outcomes[r] = run_coloring_restart(model, restart_seed(options.seed, ri), options, cancelled);
        if (outcomes[r].success) {
            int cur = winner.load();
            while (ri < cur && !winner.compare_exchange_weak(cur, ri)) {
            }
        }
    });

    ColoringSearchResult result;
    const int last = std::min(winner.load(), restarts - 1);
    bool first = true;
    for (int r = 0; r <= last; ++r) {
        auto& o = outcomes[static_cast<std::size_t>(r)];
        result.log.insert(result.log.end(), o.log.begin(), o.log.end());
        if (first || o.best_score < result.best_score) {
            result.best_score = o.best_score;
            first = false;
        }
    }
    if (winner.load() < restarts) {
        auto phi = to_coloring(N, outcomes[static_cast<std::size_t>(winner.load())].colors);
        if (passes(phi, n)) {
            result.phi = std::move(phi);
            result.best_score = 0;
            result.method = "local-search";
            return result;
        }
    }
    if (options.allow_exhaustive && N <= 6) {
        if (auto phi = exhaustive_base_coloring(N, n)) {
            result.phi = std::move(phi);
            result.best_score = 0;
            result.method = "exhaustive";
        }
    }
    return result;
}

namespace {

// Mutable K_{k+1}-free (k-1)-graph under construction.
class HypergraphState {
public:
    HypergraphState(int N, int k)
        : N_(N)
        , k_(k)
        , edges_(std::make_shared<EdgeSet>(k - 1, static_cast<std::uint64_t>(N)))
    {
    }

    std::uint64_t subset_count() const { return edges_->subset_count(); }
    bool has(std::uint64_t rank) const { return edges_->test_rank(rank); }
    void set(std::uint64_t rank, bool on) { edges_->set_rank(rank, on); }
    const EdgeSet& edges() const { return *edges_; }
    void restore(const EdgeSet& saved) { *edges_ = saved; }

    Hypergraph view() const { return Hypergraph(k_ - 1, static_cast<std::uint64_t>(N_), edges_); }

    // Adding edge `rank` would complete a K_{k+1}: some pair x < y outside
    // it spans, together with it, k+1 vertices whose (k-1)-subsets other
    // than the new edge are all present.
    bool closes_clique(std::uint64_t rank) const
    {
        const int u = k_ - 1;
        const auto e = colex_unrank(rank, u, static_cast<std::uint64_t>(N_));
        std::vector<Vertex> outside;
        for (Vertex x = 0; x < static_cast<Vertex>(N_); ++x) {
            if (!std::binary_search(e.begin(), e.end(), x)) {
                outside.push_back(x);
            }
        }
        std::vector<Vertex> big(static_cast<std::size_t>(k_ + 1));
        std::vector<Vertex> sub(static_cast<std::size_t>(u));
        for (std::size_t i = 0; i < outside.size(); ++i) {
            for (std::size_t j = i + 1; j < outside.size(); ++j) {
                std::copy(e.begin(), e.end(), big.begin());
                big[static_cast<std::size_t>(u)] = outside[i];
                big[static_cast<std::size_t>(u + 1)] = outside[j];
                std::sort(big.begin(), big.end());
                bool all = true;
                for_each_combination(static_cast<std::uint32_t>(k_ + 1), u, [&](std::span<const std::uint32_t> idx) {
                    for (int a = 0; a < u; ++a) {
                        sub[static_cast<std::size_t>(a)] = big[idx[static_cast<std::size_t>(a)]];
                    }
                    const auto r = colex_rank(sub);
                    all = r == rank || edges_->test_rank(r);
                    return all;
                });
                if (all) {
                    return true;
                }
            }
        }
        return false;
    }

    // Adds every absent edge, in the given order, that keeps the graph
    // K_{k+1}-free.
    void saturate(std::span<const std::uint64_t> order)
    {
        for (const auto r : order) {
            if (!has(r) && !closes_clique(r)) {
                set(r, true);
            }
        }
    }

    std::uint64_t alpha() const
    {
        AlphaOptions opts;
        opts.force_exact = true;
        return alpha_s(view(), k_, opts).size;
    }

private:
    int N_;
    int k_;
    std::shared_ptr<EdgeSet> edges_;
};

struct HypergraphRestart {
    std::uint64_t alpha = 0;
    std::optional<EdgeSet> edges;
    std::vector<SearchLogEntry> log;
};

void shuffle(std::vector<std::uint64_t>& v, std::mt19937_64& rng)
{
    for (std::size_t i = v.size(); i > 1; --i) {
        std::swap(v[i - 1], v[uniform_below(rng, i)]);
    }
}

HypergraphRestart run_hypergraph_restart(int N, int k, std::uint64_t seed, const SearchOptions& options,
                                         std::uint64_t floor, const std::function<bool()>& cancelled)
{
    std::mt19937_64 rng(seed);
    HypergraphState state(N, k);
    std::vector<std::uint64_t> order(state.subset_count());
    std::iota(order.begin(), order.end(), std::uint64_t{0});
    shuffle(order, rng);
    state.saturate(order);

    HypergraphRestart out;
    out.alpha = state.alpha();
    out.edges = state.edges();
    out.log.push_back({seed, out.alpha, 0});
    for (std::uint64_t step = 1; step <= options.budget && out.alpha > floor; ++step) {
        if (cancelled()) {
            break;
        }
        std::vector<std::uint64_t> present;
        for (std::uint64_t r = 0; r < state.subset_count(); ++r) {
            if (state.has(r)) {
                present.push_back(r);
            }
        }
        if (present.empty()) {
            break;
        }
        const EdgeSet saved = state.edges();
        const std::uint64_t removed = present[uniform_below(rng, present.size())];
        state.set(removed, false);
        shuffle(order, rng);
        // The removed edge goes last so the move can change the graph.
        std::vector<std::uint64_t> retry;
        for (const auto r : order) {
            if (r != removed) {
                retry.push_back(r);
            }
        }
        retry.push_back(removed);
        state.saturate(retry);
        const auto a = state.alpha();
        if (a <= out.alpha) {
            if (a < out.alpha) {
                out.log.push_back({seed, a, step});
            }
            out.alpha = a;
            out.edges = state.edges();
        } else {
            state.restore(saved);
        }
    }
    return out;
}

} // namespace

HypergraphSearchResult search_base_hypergraph(int N, int k, const SearchOptions& options)
{
    if (k < 3) {
        throw InputError("search-base needs k >= 3");
    }
    if (N < k - 1) {
        throw InputError("search-base needs N >= k-1");
    }
    if (N > static_cast<int>(exact_scope_limit)) {
        throw InputError("search-base: N limited to 64");
    }
    const int u = k - 1;
    if (binomial(static_cast<std::uint64_t>(N), static_cast<std::uint64_t>(u)) > (std::uint64_t{1} << 20)) {
        throw InputError("search-base: too many candidate edges");
    }
    if (N < k) {
        // No k vertices fit, so alpha_k = N whatever the edges are.
        HypergraphSearchResult result{Hypergraph::empty(u, static_cast<std::uint64_t>(N)),
                                      static_cast<std::uint64_t>(N),
                                      {{options.seed, static_cast<std::uint64_t>(N), 0}}};
        return result;
    }

    // Any k-1 vertices are k-independent, so alpha_k >= k-1.
    const auto floor = static_cast<std::uint64_t>(k - 1);
    const int restarts = std::max(1, options.restarts);
    std::vector<HypergraphRestart> outcomes(static_cast<std::size_t>(restarts));
    std::atomic<int> winner{restarts};
    parallel_tasks(static_cast<std::size_t>(restarts), [&](std::size_t r) {
        const int ri = static_cast<int>(r);
        if (ri > winner.load()) {
            return;
        }
        const auto cancelled = [&] { return ri > winner.load(); };
        outcomes[r] = run_hypergraph_restart(N, k, restart_seed(options.seed, ri), options, floor, cancelled);
        if (outcomes[r].alpha <= floor) {
            int cur = winner.load();
            while (ri < cur && !winner.compare_exchange_weak(cur, ri)) {
            }
        }
    });

    const int last = std::min(winner.load(), restarts - 1);
    int best = 0;
    std::vector<SearchLogEntry> log;
    for (int r = 0; r <= last; ++r) {
        const auto& o = outcomes[static_cast<std::size_t>(r)];
        log.insert(log.end(), o.log.begin(), o.log.end());
        if (o.alpha < outcomes[static_cast<std::size_t>(best)].alpha) {
            best = r;
        }
    }
    auto graph = Hypergraph::from_edge_set(*outcomes[static_cast<std::size_t>(best)].edges);
    if (find_clique(graph, k + 1)) {
        throw Error("search-base: internal error, result contains K_" + std::to_string(k + 1));
    }
    AlphaOptions opts;
    opts.force_exact = true;
    const auto alpha = alpha_s(graph, k, opts).size;
    if (alpha != outcomes[static_cast<std::size_t>(best)].alpha) {
        throw Error("search-base: internal error, alpha mismatch on re-verification");
    }
    return {std::move(graph), alpha, std::move(log)};
}

} // namespace stepup
