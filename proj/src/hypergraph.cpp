#include "stepup/hypergraph.hpp"

#include <string>

#include "stepup/error.hpp"

namespace stepup {

EdgeSet::EdgeSet(int k, std::uint64_t ground_size)
    : k_(k)
    , v_(ground_size)
{
    if (k < 1) {
        throw InputError("uniformity must be positive");
    }
    subsets_ = binomial(ground_size, static_cast<std::uint64_t>(k));
    if (subsets_ > max_subsets) {
        throw InputError("explicit edge table too large: C(" + std::to_string(ground_size) + ", "
                         + std::to_string(k) + ") subsets");
    }
    bits_.assign((subsets_ + 63) / 64, 0);
}

void EdgeSet::set_rank(std::uint64_t rank, bool on)
{
    const std::uint64_t mask = std::uint64_t{1} << (rank & 63);
    if (on) {
        bits_[rank >> 6] |= mask;
    } else {
        bits_[rank >> 6] &= ~mask;
    }
}

void EdgeSet::set(std::span<const Vertex> edge, bool on)
{
    if (edge.size() != static_cast<std::size_t>(k_)) {
        throw InputError("edge has " + std::to_string(edge.size()) + " vertices, expected " + std::to_string(k_));
    }
    if (edge.back() >= v_) {
        throw InputError("edge vertex " + std::to_string(edge.back()) + " outside ground set of size "
                         + std::to_string(v_));
    }
    set_rank(colex_rank(edge), on);
}

std::uint64_t EdgeSet::edge_count() const
{
    std::uint64_t n = 0;
    for (const auto w : bits_) {
        n += static_cast<std::uint64_t>(__builtin_popcountll(w));
    }
    return n;
}

Hypergraph::Hypergraph(int k, std::uint64_t ground_size, std::shared_ptr<const EdgeOracle> oracle,
                       bool complemented)
    : k_(k)
    , v_(ground_size)
    , oracle_(std::move(oracle))
    , complemented_(complemented)
{
    if (k < 1) {
        throw InputError("uniformity must be positive");
    }
    if (!oracle_) {
        throw Error("hypergraph without membership oracle");
    }
}

Hypergraph Hypergraph::from_edges(int k, std::uint64_t ground_size, const std::vector<std::vector<Vertex>>& edges)
{
    EdgeSet set(k, ground_size);
    for (const auto& e : edges) {
        set.set(e, true);
    }
    return from_edge_set(std::move(set));
}

Hypergraph Hypergraph::from_edge_set(EdgeSet edges)
{
    const int k = edges.uniformity();
    const std::uint64_t v = edges.ground_size();
    return Hypergraph(k, v, std::make_shared<const EdgeSet>(std::move(edges)));
}

Hypergraph Hypergraph::empty(int k, std::uint64_t ground_size)
{
    return from_edge_set(EdgeSet(k, ground_size));
}

Hypergraph Hypergraph::complete(int k, std::uint64_t ground_size)
{
    return empty(k, ground_size).complement();
}

bool Hypergraph::contains_checked(std::span<const Vertex> edge) const
{
    if (edge.size() != static_cast<std::size_t>(k_)) {
        throw InputError("arity: expected " + std::to_string(k_) + " vertices, got " + std::to_string(edge.size()));
    }
    for (std::size_t i = 1; i < edge.size(); ++i) {
        if (edge[i] <= edge[i - 1]) {
            throw InputError("not a sorted set");
        }
    }
    if (!edge.empty() && edge.back() >= v_) {
        throw InputError("vertex " + std::to_string(edge.back()) + " outside ground set of size " + std::to_string(v_));
    }
    return contains(edge);
}

const EdgeSet* Hypergraph::explicit_edges() const
{
    return dynamic_cast<const EdgeSet*>(oracle_.get());
}

std::string Hypergraph::describe() const
{
    return complemented_ ? "complement(" + oracle_->describe() + ")" : oracle_->describe();
}

std::vector<std::vector<Vertex>> Hypergraph::edges(std::uint64_t limit) const
{
    const std::uint64_t total = binomial(v_, static_cast<std::uint64_t>(k_));
    if (total > limit) {
        throw InputError("refusing to enumerate C(" + std::to_string(v_) + ", " + std::to_string(k_)
                         + ") subsets; use a windowed scope");
    }
    std::vector<std::vector<Vertex>> out;
    for (std::uint64_t r = 0; r < total; ++r) {
        auto e = colex_unrank(r, k_, v_);
        if (contains(e)) {
            out.push_back(std::move(e));
        }
    }
    return out;
}

Hypergraph Hypergraph::materialize(std::uint64_t limit) const
{
    const std::uint64_t total = binomial(v_, static_cast<std::uint64_t>(k_));
    if (total > limit) {
        throw InputError("refusing to materialize C(" + std::to_string(v_) + ", " + std::to_string(k_)
                         + ") subsets");
    }
    EdgeSet set(k_, v_);
    for (std::uint64_t r = 0; r < total; ++r) {
        const auto e = colex_unrank(r, k_, v_);
        set.set_rank(r, contains(e));
    }
    return from_edge_set(std::move(set));
}

} // namespace stepup
