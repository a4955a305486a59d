#include "stepup/clique.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <memory>
#include <numeric>
#include <random>

#include "stepup/error.hpp"
#include "stepup/parallel.hpp"

namespace stepup {

namespace {

constexpr int max_uniformity = 16;

using Mask = std::uint64_t;

inline Mask bit(int i) { return Mask{1} << i; }

void check_scope(std::span<const Vertex> scope, const Hypergraph& h)
{
    if (scope.size() > exact_scope_limit) {
        throw InputError("scope: exact search is limited to 64 vertices, got " + std::to_string(scope.size()));
    }
    for (std::size_t i = 0; i < scope.size(); ++i) {
        if ((i > 0 && scope[i] <= scope[i - 1]) || scope[i] >= h.ground_size()) {
            throw InputError("scope must be a sorted subset of the ground set");
        }
    }
    if (h.uniformity() < 2 || h.uniformity() > max_uniformity) {
        throw InputError("clique search supports uniformity 2.." + std::to_string(max_uniformity));
    }
}

// Pair-graph rows for every (k-2)-subset T of the scope (local indices):
// row(T)[u] has bit v set iff T + {u, v} is an edge. Built once per search
// and shared by its tasks; skipped when it would exceed `max_words`.
class LinkTable {
public:
    static constexpr std::uint64_t max_words = std::uint64_t{1} << 23;

    static std::shared_ptr<const LinkTable> build(const Hypergraph& h, std::span<const Vertex> scope)
    {
        const int k = h.uniformity();
        const auto n = static_cast<std::uint32_t>(scope.size());
        if (k < 2 || n < static_cast<std::uint32_t>(k) || binomial(n, static_cast<std::uint64_t>(k - 2)) * n > max_words) {
            return nullptr;
        }
        auto table = std::make_shared<LinkTable>(k, n);
        std::vector<Vertex> e(static_cast<std::size_t>(k));
        std::array<int, max_uniformity> rest{};
        for_each_combination(n, k, [&](std::span<const std::uint32_t> idx) {
            for (int i = 0; i < k; ++i) {
                e[static_cast<std::size_t>(i)] = scope[idx[static_cast<std::size_t>(i)]];
            }
            if (!h.contains(e)) {
                return;
            }
            for (int a = 0; a < k; ++a) {
                for (int b = a + 1; b < k; ++b) {
                    int j = 0;
                    for (int i = 0; i < k; ++i) {
                        if (i != a && i != b) {
                            rest[static_cast<std::size_t>(j++)] = static_cast<int>(idx[static_cast<std::size_t>(i)]);
                        }
                    }
                    Mask* row = table->mutable_rows(std::span<const int>(rest.data(), static_cast<std::size_t>(k - 2)));
                    const auto u = idx[static_cast<std::size_t>(a)];
                    const auto v = idx[static_cast<std::size_t>(b)];
                    row[u] |= Mask{1} << v;
                    row[v] |= Mask{1} << u;
                }
            }
        });
        return table;
    }

    LinkTable(int k, std::uint32_t n)
        : k_(k)
        , n_(n)
        , rows_(binomial(n, static_cast<std::uint64_t>(k - 2)) * n, 0)
    {
    }

    // `t` sorted ascending, k-2 local indices.
    const Mask* rows(std::span<const int> t) const { return rows_.data() + rank(t) * n_; }

private:
    Mask* mutable_rows(std::span<const int> t) { return rows_.data() + rank(t) * n_; }

    static std::uint64_t rank(std::span<const int> t)
    {
        std::uint64_t r = 0;
        for (std::size_t i = 0; i < t.size(); ++i) {
            r += binomial(static_cast<std::uint64_t>(t[i]), i + 1);
        }
        return r;
    }

    int k_;
    std::uint64_t n_;
    std::vector<Mask> rows_;
};

// Bitmask branch-and-bound over a scope of <= 64 vertices. Local index i
// stands for scope[i]; scope is sorted, so local order is vertex order.
class MaskSearch {
public:
    MaskSearch(const Hypergraph& h, std::span<const Vertex> scope, std::shared_ptr<const LinkTable> links = nullptr)
        : h_(h)
        , k_(h.uniformity())
        , scope_(scope.begin(), scope.end())
        , n_(static_cast<int>(scope.size()))
        , adj_(static_cast<std::size_t>(n_) + 2)
        , links_(std::move(links))
    {
    }

    int size() const { return n_; }
    const std::vector<int>& clique() const { return clique_; }

    std::vector<Vertex> clique_vertices() const { return vertices_of(clique_); }

    std::vector<Vertex> vertices_of(const std::vector<int>& locals) const
    {
        std::vector<Vertex> out;
        for (const int i : locals) {
            out.push_back(scope_[static_cast<std::size_t>(i)]);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    // Starts from the forced clique `seed`, restricting candidates to
    // `allowed`. Returns the candidate mask (vertices extending seed), or
    // nullopt when seed itself is not a clique.
    std::optional<Mask> reset(std::span<const int> seed, Mask allowed)
    {
        clique_.assign(seed.begin(), seed.end());
        for (const int s : seed) {
            allowed &= ~bit(s);
        }
        if (!seed_is_clique()) {
            return std::nullopt;
        }
        Mask cand = 0;
        for (Mask m = allowed; m != 0; m &= m - 1) {
            const int v = __builtin_ctzll(m);
            if (extends(v)) {
                cand |= bit(v);
            }
        }
        init_adjacency(cand);
        return cand;
    }

    // Depth-first search for a clique of size `target`, smallest local
    // indices first, so the first hit is lexicographically least.
    bool find(std::size_t depth, Mask cand, std::size_t target)
    {
        if (clique_.size() >= target) {
            return true;
        }
        if (clique_.size() + static_cast<std::size_t>(__builtin_popcountll(cand)) < target) {
            return false;
        }
        if (clique_.size() + color_count(depth, cand) < target) {
            return false;
        }
        while (cand != 0) {
            if (clique_.size() + static_cast<std::size_t>(__builtin_popcountll(cand)) < target) {
                return false;
            }
            const int x = __builtin_ctzll(cand);
            cand &= cand - 1;
            if (branch(depth, cand, x, target)) {
                return true;
            }
        }
        return false;
    }

    // One root-level branch: add x, candidates restricted to `rest`.
    bool branch(std::size_t depth, Mask rest, int x, std::size_t target)
    {
        const Mask next = rest & adj_[depth][static_cast<std::size_t>(x)];
        clique_.push_back(x);
        push_adjacency(depth, next, x);
        if (find(depth + 1, next, target)) {
            return true;
        }
        clique_.pop_back();
        return false;
    }

    // Tomita-style maximum clique with greedy coloring bounds.
    void maximize(std::size_t depth, Mask cand, std::vector<int>& best,
                  const std::function<void(const std::vector<int>&)>& on_improve)
    {
        if (cand == 0) {
            if (clique_.size() > best.size()) {
                best = clique_;
                if (on_improve) {
                    on_improve(best);
                }
            }
            return;
        }
        std::array<int, 64> order{};
        std::array<int, 64> colors{};
        const int count = greedy_coloring(depth, cand, order, colors);
        for (int i = count - 1; i >= 0; --i) {
            if (clique_.size() + static_cast<std::size_t>(colors[static_cast<std::size_t>(i)]) <= best.size()) {
                return;
            }
            const int x = order[static_cast<std::size_t>(i)];
            const Mask next = cand & adj_[depth][static_cast<std::size_t>(x)];
            clique_.push_back(x);
            push_adjacency(depth, next, x);
            maximize(depth + 1, next, best, on_improve);
            clique_.pop_back();
            cand &= ~bit(x);
        }
    }

    Mask adjacency_row(std::size_t depth, int x) const { return adj_[depth][static_cast<std::size_t>(x)]; }

    // Russian-doll maximum clique: for i = n-1 down to 0, the largest clique
    // whose lowest local index is i, bounded by doll_[x] = largest clique
    // within local indices >= x. Unlike the pair-graph coloring, this bound
    // also prunes before k-2 vertices are chosen.
    void maximize_dolls(std::vector<int>& best, const std::function<void(const std::vector<int>&)>& on_improve)
    {
        doll_.assign(static_cast<std::size_t>(n_) + 1, 0);
        for (int i = n_ - 1; i >= 0; --i) {
            const std::array<int, 1> root{i};
            const auto cand = reset(root, all_later(i));
            if (cand) {
                level_target_ = doll_[static_cast<std::size_t>(i) + 1] + 1;
                level_done_ = false;
                doll(0, *cand, best, on_improve);
            }
            doll_[static_cast<std::size_t>(i)] = best.size();
        }
    }

private:
    Mask all_later(int i) const
    {
        const Mask below_n = n_ >= 64 ? ~Mask{0} : bit(n_) - 1;
        return i >= 63 ? Mask{0} : below_n & ~((bit(i) << 1) - 1);
    }

    void doll(std::size_t depth, Mask cand, std::vector<int>& best,
              const std::function<void(const std::vector<int>&)>& on_improve)
    {
        if (cand == 0) {
            if (clique_.size() > best.size()) {
                best = clique_;
                if (on_improve) {
                    on_improve(best);
                }
                level_done_ = best.size() >= level_target_;
            }
            return;
        }
        if (clique_.size() + color_count(depth, cand) <= best.size()) {
            return;
        }
        while (cand != 0) {
            if (clique_.size() + static_cast<std::size_t>(__builtin_popcountll(cand)) <= best.size()) {
                return;
            }
            const int x = __builtin_ctzll(cand);
            if (clique_.size() + doll_[static_cast<std::size_t>(x)] <= best.size()) {
                return;
            }
            cand &= cand - 1;
            const Mask next = cand & adj_[depth][static_cast<std::size_t>(x)];
            clique_.push_back(x);
            push_adjacency(depth, next, x);
            doll(depth + 1, next, best, on_improve);
            clique_.pop_back();
            if (level_done_) {
                return;
            }
        }
    }

private:
    // Local order may differ from vertex order, so sort after mapping.
    bool edge(std::array<int, max_uniformity>& locals) const
    {
        std::array<Vertex, max_uniformity> e{};
        for (int i = 0; i < k_; ++i) {
            e[static_cast<std::size_t>(i)] = scope_[static_cast<std::size_t>(locals[static_cast<std::size_t>(i)])];
        }
        std::sort(e.begin(), e.begin() + k_);
        return h_.contains(std::span<const Vertex>(e.data(), static_cast<std::size_t>(k_)));
    }

    bool seed_is_clique() const
    {
        if (clique_.size() < static_cast<std::size_t>(k_)) {
            return true;
        }
        bool ok = true;
        for_each_combination(static_cast<std::uint32_t>(clique_.size()), k_, [&](std::span<const std::uint32_t> idx) {
            std::array<int, max_uniformity> locals{};
            for (int i = 0; i < k_; ++i) {
                locals[static_cast<std::size_t>(i)] = clique_[idx[static_cast<std::size_t>(i)]];
            }
            ok = edge(locals);
            return ok;
        });
        return ok;
    }

    // Every k-subset of clique+{v} through v is an edge.
    bool extends(int v) const
    {
        if (clique_.size() + 1 < static_cast<std::size_t>(k_)) {
            return true;
        }
        bool ok = true;
        for_each_combination(static_cast<std::uint32_t>(clique_.size()), k_ - 1,
                             [&](std::span<const std::uint32_t> idx) {
                                 std::array<int, max_uniformity> locals{};
                                 for (int i = 0; i < k_ - 1; ++i) {
                                     locals[static_cast<std::size_t>(i)] = clique_[idx[static_cast<std::size_t>(i)]];
                                 }
                                 locals[static_cast<std::size_t>(k_ - 1)] = v;
                                 ok = edge(locals);
                                 return ok;
                             });
        return ok;
    }

    // Pair graph on cand for the current clique, from scratch.
    void init_adjacency(Mask cand)
    {
        auto& rows = adj_[0];
        rows.fill(0);
        const int free = k_ - 2;
        std::vector<std::vector<int>> subsets;
        if (static_cast<int>(clique_.size()) >= free) {
            for_each_combination(static_cast<std::uint32_t>(clique_.size()), free,
                                 [&](std::span<const std::uint32_t> idx) {
                                     std::vector<int> t;
                                     for (const auto i : idx) {
                                         t.push_back(clique_[i]);
                                     }
                                     subsets.push_back(std::move(t));
                                 });
        }
        fill_rows(rows, cand, subsets);
    }

    // Pair graph after x joined the clique: previous graph restricted to
    // `cand`, minus pairs broken by k-subsets through x.
    void push_adjacency(std::size_t depth, Mask cand, int x)
    {
        auto& rows = adj_[depth + 1];
        const auto& prev = adj_[depth];
        const int free = k_ - 3;
        const std::size_t before = clique_.size() - 1;
        for (Mask m = cand; m != 0; m &= m - 1) {
            const int u = __builtin_ctzll(m);
            rows[static_cast<std::size_t>(u)] = prev[static_cast<std::size_t>(u)] & cand;
        }
        if (free < 0 || static_cast<int>(before) < free) {
            return;
        }
        if (links_) {
            std::array<int, max_uniformity> t{};
            for_each_combination(static_cast<std::uint32_t>(before), free, [&](std::span<const std::uint32_t> idx) {
                for (int i = 0; i < free; ++i) {
                    t[static_cast<std::size_t>(i)] = clique_[idx[static_cast<std::size_t>(i)]];
                }
                t[static_cast<std::size_t>(free)] = x;
                std::sort(t.begin(), t.begin() + free + 1);
                const Mask* link = links_->rows(std::span<const int>(t.data(), static_cast<std::size_t>(free) + 1));
                for (Mask m = cand; m != 0; m &= m - 1) {
                    const int u = __builtin_ctzll(m);
                    rows[static_cast<std::size_t>(u)] &= link[u];
                }
            });
            return;
        }
        std::vector<std::vector<int>> subsets;
        for_each_combination(static_cast<std::uint32_t>(before), free, [&](std::span<const std::uint32_t> idx) {
            std::vector<int> t;
            for (const auto i : idx) {
                t.push_back(clique_[i]);
            }
            subsets.push_back(std::move(t));
        });
        refine_rows(rows, cand, subsets, x);
    }

    void fill_rows(std::array<Mask, 64>& rows, Mask cand, const std::vector<std::vector<int>>& subsets)
    {
        for (Mask m = cand; m != 0; m &= m - 1) {
            rows[static_cast<std::size_t>(__builtin_ctzll(m))] = cand & ~bit(__builtin_ctzll(m));
        }
        if (subsets.empty()) {
            return;
        }
        if (links_) {
            for (auto sub : subsets) {
                std::sort(sub.begin(), sub.end());
                const Mask* link = links_->rows(sub);
                for (Mask m = cand; m != 0; m &= m - 1) {
                    const int u = __builtin_ctzll(m);
                    rows[static_cast<std::size_t>(u)] &= link[u];
                }
            }
            return;
        }
        refine_rows(rows, cand, subsets, -1);
    }

    // Clears u~v unless T+{extra}+{u,v} is an edge for every T in subsets.
    void refine_rows(std::array<Mask, 64>& rows, Mask cand, const std::vector<std::vector<int>>& subsets, int extra)
    {
        for (Mask mu = cand; mu != 0; mu &= mu - 1) {
            const int u = __builtin_ctzll(mu);
            Mask later = rows[static_cast<std::size_t>(u)] & cand & ~((bit(u) << 1) - 1);
            for (Mask mv = later; mv != 0; mv &= mv - 1) {
                const int v = __builtin_ctzll(mv);
                bool ok = true;
                for (const auto& t : subsets) {
                    std::array<int, max_uniformity> locals{};
                    std::size_t j = 0;
                    for (const int w : t) {
                        locals[j++] = w;
                    }
                    if (extra >= 0) {
                        locals[j++] = extra;
                    }
                    locals[j++] = u;
                    locals[j++] = v;
                    if (!edge(locals)) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) {
                    rows[static_cast<std::size_t>(u)] &= ~bit(v);
                    rows[static_cast<std::size_t>(v)] &= ~bit(u);
                }
            }
        }
    }

    int greedy_coloring(std::size_t depth, Mask cand, std::array<int, 64>& order, std::array<int, 64>& colors) const
    {
        const auto& rows = adj_[depth];
        Mask uncolored = cand;
        int color = 0;
        int count = 0;
        while (uncolored != 0) {
            ++color;
            Mask q = uncolored;
            while (q != 0) {
                const int v = __builtin_ctzll(q);
                q &= ~bit(v);
                q &= ~rows[static_cast<std::size_t>(v)];
                uncolored &= ~bit(v);
                order[static_cast<std::size_t>(count)] = v;
                colors[static_cast<std::size_t>(count)] = color;
                ++count;
            }
        }
        return count;
    }

    std::size_t color_count(std::size_t depth, Mask cand) const
    {
        std::array<int, 64> order{};
        std::array<int, 64> colors{};
        const int count = greedy_coloring(depth, cand, order, colors);
        return count == 0 ? 0 : static_cast<std::size_t>(colors[static_cast<std::size_t>(count - 1)]);
    }

    const Hypergraph& h_;
    int k_;
    std::vector<Vertex> scope_;
    int n_;
    std::vector<std::array<Mask, 64>> adj_;
    std::vector<int> clique_;
    std::shared_ptr<const LinkTable> links_;
    std::vector<std::size_t> doll_;
    std::size_t level_target_ = 0;
    bool level_done_ = false;
};

Mask all_bits(std::size_t n)
{
    return n >= 64 ? ~Mask{0} : (bit(static_cast<int>(n)) - 1);
}

std::vector<int> to_locals(std::span<const Vertex> scope, std::span<const Vertex> vertices)
{
    std::vector<int> out;
    for (const Vertex v : vertices) {
        const auto it = std::lower_bound(scope.begin(), scope.end(), v);
        if (it == scope.end() || *it != v) {
            throw InputError("seed vertex " + std::to_string(v) + " not in scope");
        }
        out.push_back(static_cast<int>(it - scope.begin()));
    }
    return out;
}

} // namespace

std::vector<Vertex> full_scope(const Hypergraph& h)
{
    if (h.ground_size() > exact_scope_limit) {
        throw InputError("scope: exact search is limited to 64 vertices, ground set has "
                         + std::to_string(h.ground_size()) + "; pass a window");
    }
    std::vector<Vertex> out(h.ground_size());
    std::iota(out.begin(), out.end(), Vertex{0});
    return out;
}

std::optional<std::vector<Vertex>> find_clique_containing(const Hypergraph& h, int t, std::span<const Vertex> scope,
                                                          std::span<const Vertex> seed)
{
    check_scope(scope, h);
    if (t < h.uniformity()) {
        throw InputError("find_clique: t must be at least the uniformity");
    }
    if (static_cast<std::size_t>(t) > scope.size()) {
        return std::nullopt;
    }
    const auto seed_locals = to_locals(scope, seed);
    MaskSearch search(h, scope, LinkTable::build(h, scope));
    const auto cand = search.reset(seed_locals, all_bits(scope.size()));
    if (!cand) {
        return std::nullopt;
    }
    if (search.find(0, *cand, static_cast<std::size_t>(t))) {
        return search.clique_vertices();
    }
    return std::nullopt;
}

std::optional<std::vector<Vertex>> find_clique(const Hypergraph& h, int t, std::span<const Vertex> scope)
{
    check_scope(scope, h);
    if (t < h.uniformity()) {
        throw InputError("find_clique: t must be at least the uniformity");
    }
    if (static_cast<std::size_t>(t) > scope.size()) {
        return std::nullopt;
    }
    const std::size_t n = scope.size();
    // Root branches run as independent tasks; the smallest root vertex with
    // a clique wins, which is the lexicographically least clique overall.
    std::atomic<std::size_t> winner{n};
    std::vector<std::optional<std::vector<Vertex>>> found(n);
    const auto links = LinkTable::build(h, scope);
    MaskSearch root(h, scope, links);
    const Mask root_cand = *root.reset({}, all_bits(n));
    parallel_tasks(n, [&](std::size_t x) {
        if (x >= winner.load() || !(root_cand & bit(static_cast<int>(x)))) {
            return;
        }
        if (n - x < static_cast<std::size_t>(t)) {
            return;
        }
        MaskSearch search(h, scope, links);
        search.reset({}, all_bits(n));
        const Mask rest = root_cand & ~all_bits(x + 1);
        if (search.branch(0, rest, static_cast<int>(x), static_cast<std::size_t>(t))) {
            found[x] = search.clique_vertices();
            std::size_t cur = winner.load();
            while (x < cur && !winner.compare_exchange_weak(cur, x)) {
            }
        }
    });
    const std::size_t w = winner.load();
    if (w < n) {
        return found[w];
    }
    return std::nullopt;
}

std::optional<std::vector<Vertex>> find_clique(const Hypergraph& h, int t)
{
    const auto scope = full_scope(h);
    return find_clique(h, t, scope);
}

std::vector<Vertex> max_clique(const Hypergraph& h, std::span<const Vertex> scope,
                               const std::function<void(std::span<const Vertex>)>& on_improve)
{
    check_scope(scope, h);
    MaskSearch search(h, scope, LinkTable::build(h, scope));
    std::vector<int> best;
    std::function<void(const std::vector<int>&)> report;
    if (on_improve) {
        report = [&](const std::vector<int>& locals) {
            on_improve(search.vertices_of(locals));
        };
    }
    search.maximize_dolls(best, report);
    return search.vertices_of(best);
}

const char* to_string(AlphaMode m)
{
    return m == AlphaMode::exact ? "exact" : "heuristic";
}

bool is_clique(const Hypergraph& h, std::span<const Vertex> vertices)
{
    const int k = h.uniformity();
    bool ok = true;
    std::vector<Vertex> e(static_cast<std::size_t>(k));
    for_each_combination(static_cast<std::uint32_t>(vertices.size()), k, [&](std::span<const std::uint32_t> idx) {
        for (int i = 0; i < k; ++i) {
            e[static_cast<std::size_t>(i)] = vertices[idx[static_cast<std::size_t>(i)]];
        }
        ok = h.contains(e);
        return ok;
    });
    return ok;
}

namespace {

// Extends `current` (sorted clique containing v) with members from index
// `from` on; true when a clique of size s through v exists.
bool extend_through(const Hypergraph& h, std::span<const Vertex> members, std::size_t from, std::vector<Vertex>& current,
                    std::size_t s)
{
    if (current.size() == s) {
        return true;
    }
    const int k = h.uniformity();
    for (std::size_t i = from; i < members.size(); ++i) {
        if (current.size() + (members.size() - i) < s) {
            return false;
        }
        const Vertex w = members[i];
        current.insert(std::upper_bound(current.begin(), current.end(), w), w);
        bool ok = true;
        if (current.size() >= static_cast<std::size_t>(k)) {
            // k-subsets through w.
            std::vector<Vertex> others;
            for (const Vertex c : current) {
                if (c != w) {
                    others.push_back(c);
                }
            }
            std::vector<Vertex> e(static_cast<std::size_t>(k));
            for_each_combination(static_cast<std::uint32_t>(others.size()), k - 1,
                                 [&](std::span<const std::uint32_t> idx) {
                                     for (int j = 0; j < k - 1; ++j) {
                                         e[static_cast<std::size_t>(j)] = others[idx[static_cast<std::size_t>(j)]];
                                     }
                                     e[static_cast<std::size_t>(k - 1)] = w;
                                     std::sort(e.begin(), e.end());
                                     ok = h.contains(e);
                                     return ok;
                                 });
        }
        if (ok && extend_through(h, members, i + 1, current, s)) {
            return true;
        }
        current.erase(std::find(current.begin(), current.end(), w));
    }
    return false;
}

AlphaResult alpha_exact(const Hypergraph& h, int s, std::span<const Vertex> scope)
{
    const int n = static_cast<int>(scope.size());
    MaskSearch search(h, scope, LinkTable::build(h, scope));
    std::vector<int> chosen;
    Mask chosen_mask = 0;
    Mask best_mask = 0;
    int best = -1;

    // Would adding v to the chosen set create an s-clique through v?
    auto creates_clique = [&](int v) {
        if (static_cast<int>(chosen.size()) + 1 < s) {
            return false;
        }
        const int seed[1] = {v};
        const auto cand = search.reset(seed, chosen_mask);
        return cand && search.find(0, *cand, static_cast<std::size_t>(s));
    };

    std::function<void(int)> rec = [&](int idx) {
        if (static_cast<int>(chosen.size()) + (n - idx) <= best) {
            return;
        }
        if (idx == n) {
            best = static_cast<int>(chosen.size());
            best_mask = chosen_mask;
            return;
        }
        if (!creates_clique(idx)) {
            chosen.push_back(idx);
            chosen_mask |= bit(idx);
            rec(idx + 1);
            chosen.pop_back();
            chosen_mask &= ~bit(idx);
        }
        rec(idx + 1);
    };
    rec(0);

    AlphaResult out;
    out.mode = AlphaMode::exact;
    out.size = static_cast<std::size_t>(std::max(best, 0));
    for (int i = 0; i < n; ++i) {
        if (best_mask & bit(i)) {
            out.witness.push_back(scope[static_cast<std::size_t>(i)]);
        }
    }
    return out;
}

AlphaResult alpha_heuristic(const Hypergraph& h, int s, const AlphaOptions& options)
{
    std::mt19937_64 rng(options.seed);
    const std::uint64_t v = h.ground_size();
    if (v > (std::uint64_t{1} << 20)) {
        throw InputError("alpha: heuristic mode limited to 2^20 vertices");
    }
    AlphaResult best;
    best.mode = AlphaMode::heuristic;
    std::vector<Vertex> order(v);
    std::iota(order.begin(), order.end(), Vertex{0});
    for (int r = 0; r < std::max(1, options.restarts); ++r) {
        if (r > 0) {
            for (std::size_t i = order.size(); i > 1; --i) {
                std::swap(order[i - 1], order[uniform_below(rng, i)]);
            }
        }
        std::vector<Vertex> members;
        for (const Vertex x : order) {
            if (!has_clique_through(h, members, x, s)) {
                members.insert(std::upper_bound(members.begin(), members.end(), x), x);
            }
        }
        if (members.size() > best.size) {
            best.size = members.size();
            best.witness = members;
        }
    }
    return best;
}

} // namespace

bool has_clique_through(const Hypergraph& h, std::span<const Vertex> members, Vertex v, int s)
{
    if (s < 1) {
        return true;
    }
    std::vector<Vertex> others;
    for (const Vertex m : members) {
        if (m != v) {
            others.push_back(m);
        }
    }
    std::vector<Vertex> current{v};
    return extend_through(h, others, 0, current, static_cast<std::size_t>(s));
}

AlphaResult alpha_s(const Hypergraph& h, int s, const AlphaOptions& options)
{
    if (s < h.uniformity()) {
        throw InputError("alpha_s: s must be at least the uniformity");
    }
    if (h.ground_size() <= exact_scope_limit) {
        const auto scope = full_scope(h);
        check_scope(scope, h);
        return alpha_exact(h, s, scope);
    }
    if (options.force_exact) {
        throw InputError("alpha_s: exact mode is limited to 64 vertices");
    }
    return alpha_heuristic(h, s, options);
}

} // namespace stepup
