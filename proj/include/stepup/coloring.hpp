#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "stepup/certificate.hpp"
#include "stepup/hypergraph.hpp"

namespace stepup {

enum class Color : std::uint8_t { blue, red };

const char* to_string(Color c);
Color parse_color(const std::string& text);

// Total red/blue coloring of the k-subsets of [0, ground_size). Stored as
// the hypergraph of red subsets; everything else is blue.
class TwoColoring {
public:
    explicit TwoColoring(Hypergraph red, std::shared_ptr<const TwoColoring> base = nullptr);

    static TwoColoring from_red(int k, std::uint64_t ground_size, const std::vector<std::vector<Vertex>>& red);
    static TwoColoring constant(Color c, int k, std::uint64_t ground_size);

    int uniformity() const { return red_.uniformity(); }
    std::uint64_t ground_size() const { return red_.ground_size(); }

    // `subset` must be a sorted k-subset (unchecked).
    Color color(std::span<const Vertex> subset) const { return red_.contains(subset) ? Color::red : Color::blue; }

    const Hypergraph& red() const { return red_; }
    // Hypergraph whose edges are the subsets of color c.
    Hypergraph graph(Color c) const { return c == Color::red ? red_ : red_.complement(); }

    bool is_lifted() const { return base_ != nullptr; }
    // The base coloring of a lifted coloring, else null.
    const TwoColoring* base() const { return base_.get(); }

private:
    Hypergraph red_;
    std::shared_ptr<const TwoColoring> base_;
};

// Stepped-up 4-uniform coloring on [0, 2^N) from a 3-uniform phi on [0, N):
// a 4-tuple with strictly monotone (delta_1, delta_2, delta_3) takes
// phi({delta_1, delta_2, delta_3}); every other 4-tuple is blue. Evaluated
// on demand. Throws InputError("base uniformity") unless phi is 3-uniform.
TwoColoring lift_coloring(const TwoColoring& phi);

// Pass iff every 4-set spans at most 2 red triples and no n-set is all blue.
// Failing certificates carry the offending subset as witness.
Certificate verify_base_phi(const TwoColoring& phi, int n);

struct RedCount {
    std::uint64_t max_red = 0;
    // A p-subset attaining max_red (first in enumeration order).
    std::vector<Vertex> witness;
    std::uint64_t subsets_scanned = 0;
};

// Maximum number of red k-subsets inside a p-subset, over the scope. Full
// and window scopes enumerate every p-subset; sample scopes draw `count`
// uniform p-subsets of the ground set with the given seed.
RedCount max_red_in_p_sets(const TwoColoring& chi, int p, const Scope& scope = Scope::full());

struct MonoClique {
    std::size_t size = 0;
    std::vector<Vertex> witness;
};

// Largest subset of the scope (<= 64 vertices) all of whose k-subsets have
// color c. `on_improve` sees every incumbent clique found on the way.
MonoClique max_mono_clique(const TwoColoring& chi, Color c, const Scope& scope = Scope::full(),
                           const std::function<void(std::span<const Vertex>)>& on_improve = {});

} // namespace stepup
