#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "stepup/combinatorics.hpp"

namespace stepup {

// Membership oracle behind a Hypergraph. Implementations answer for sorted
// k-subsets of [0, ground_size) and are immutable once built.
class EdgeOracle {
public:
    virtual ~EdgeOracle() = default;
    virtual bool contains(std::span<const Vertex> edge) const = 0;
    // Short description stamped into certificates ("explicit", "lift k=5 ...").
    virtual std::string describe() const = 0;
};

// Explicit edge table: one bit per k-subset, indexed by colex rank.
class EdgeSet final : public EdgeOracle {
public:
    static constexpr std::uint64_t max_subsets = std::uint64_t{1} << 30;

    EdgeSet(int k, std::uint64_t ground_size);

    int uniformity() const { return k_; }
    std::uint64_t ground_size() const { return v_; }
    std::uint64_t subset_count() const { return subsets_; }

    bool contains(std::span<const Vertex> edge) const override { return test_rank(colex_rank(edge)); }
    std::string describe() const override { return "explicit"; }

    bool test_rank(std::uint64_t rank) const { return (bits_[rank >> 6] >> (rank & 63)) & 1U; }
    void set_rank(std::uint64_t rank, bool on);
    void set(std::span<const Vertex> edge, bool on);
    std::uint64_t edge_count() const;

private:
    int k_;
    std::uint64_t v_;
    std::uint64_t subsets_;
    std::vector<std::uint64_t> bits_;
};

// A k-uniform hypergraph on [0, ground_size): an explicit edge set or a
// rule-backed oracle, optionally viewed through its complement.
class Hypergraph {
public:
    Hypergraph(int k, std::uint64_t ground_size, std::shared_ptr<const EdgeOracle> oracle,
               bool complemented = false);

    static Hypergraph from_edges(int k, std::uint64_t ground_size, const std::vector<std::vector<Vertex>>& edges);
    static Hypergraph from_edge_set(EdgeSet edges);
    static Hypergraph empty(int k, std::uint64_t ground_size);
    static Hypergraph complete(int k, std::uint64_t ground_size);

    int uniformity() const { return k_; }
    std::uint64_t ground_size() const { return v_; }

    // `edge` must be a sorted k-subset of the ground set (unchecked).
    bool contains(std::span<const Vertex> edge) const { return oracle_->contains(edge) != complemented_; }

    // Checked variant: throws InputError on wrong arity, order or range.
    bool contains_checked(std::span<const Vertex> edge) const;

    // Complement view; shares the oracle.
    Hypergraph complement() const { return Hypergraph(k_, v_, oracle_, !complemented_); }
    bool complemented() const { return complemented_; }

    const EdgeOracle& oracle() const { return *oracle_; }
    std::shared_ptr<const EdgeOracle> oracle_ptr() const { return oracle_; }
    // Non-null when backed by an explicit table.
    const EdgeSet* explicit_edges() const;

    std::string describe() const;

    // All edges in colex order. Refuses when C(v, k) exceeds `limit`.
    std::vector<std::vector<Vertex>> edges(std::uint64_t limit = std::uint64_t{1} << 24) const;

    // Explicit copy of this hypergraph (same guard as edges()).
    Hypergraph materialize(std::uint64_t limit = std::uint64_t{1} << 24) const;

private:
    int k_;
    std::uint64_t v_;
    std::shared_ptr<const EdgeOracle> oracle_;
    bool complemented_;
};

} // namespace stepup
