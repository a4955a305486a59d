#pragma once

// Binary delta machinery for the stepping-up constructions.
//
// A vertex is an N-bit string. delta(a, b) is the highest bit where a and b
// differ. For a sorted tuple (a_1 < ... < a_r) the delta sequence is
// delta_i = delta(a_i, a_{i+1}); every interior position of that sequence is
// a local minimum, a local maximum or a local monotone.
//
// Indexing: all spans of deltas are 0-based, so deltas[i] is delta_{i+1}.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "stepup/combinatorics.hpp"

namespace stepup {

using BitIndex = int;

// Highest differing bit. Throws Error on a == b.
BitIndex delta(Vertex a, Vertex b);

// Same, and both vertices must lie in [0, 2^width).
BitIndex delta(Vertex a, Vertex b, int width);

enum class Position : std::uint8_t { boundary, local_min, local_max, local_monotone };

const char* to_string(Position p);

// Label of deltas[i]; positions 0 and size-1 are boundary.
Position classify(std::span<const BitIndex> deltas, std::size_t i);

struct ExtremaCount {
    int extrema = 0;  // m
    int monotone = 0; // n
};

// m and n of a delta sequence. Sequences shorter than 3 (tuples with r < 4)
// count as m = n = 0.
ExtremaCount count_extrema(std::span<const BitIndex> deltas);

// Strictly increasing or strictly decreasing. Length <= 1 counts as monotone.
bool is_strictly_monotone(std::span<const BitIndex> deltas);

// Writes the delta sequence of a sorted tuple into out (size r-1). No checks;
// hot-path helper for membership tests.
inline void delta_sequence(std::span<const Vertex> tuple, std::span<BitIndex> out)
{
    for (std::size_t i = 0; i + 1 < tuple.size(); ++i) {
        out[i] = 63 - __builtin_clzll(tuple[i] ^ tuple[i + 1]);
    }
}

// Immutable delta profile of a strictly increasing tuple.
class DeltaProfile {
public:
    // Throws InputError "not a sorted set" unless strictly increasing and
    // of size >= 2, and "vertex exceeds width" when a value is >= 2^width.
    explicit DeltaProfile(std::vector<Vertex> vertices, int width = 64);

    int width() const { return width_; }
    std::size_t size() const { return vertices_.size(); }
    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<BitIndex>& deltas() const { return deltas_; }
    Position label(std::size_t i) const { return labels_[i]; }
    const std::vector<Position>& labels() const { return labels_; }

    int extrema() const { return counts_.extrema; }
    int monotone() const { return counts_.monotone; }

    // Delta indices (0-based) of interior positions with the given label,
    // in increasing order.
    std::vector<std::size_t> positions(Position p) const;
    std::vector<std::size_t> extremum_positions() const;

    // Profile of the tuple with the listed 0-based vertex indices removed.
    DeltaProfile without(std::initializer_list<std::size_t> removed) const;

private:
    int width_;
    std::vector<Vertex> vertices_;
    std::vector<BitIndex> deltas_;
    std::vector<Position> labels_;
    ExtremaCount counts_;
};

enum class Property { A, B, C, D, G };

const char* to_string(Property p);
Property parse_property(const std::string& name);
// Shortest tuple a property applies to.
std::size_t property_min_arity(Property p);

struct PropertyVerdict {
    bool holds = true;
    // The sub-tuple checked; on failure, the offending sub-tuple.
    std::vector<Vertex> witness;
};

// Checks one of the stepping-up properties on a concrete sorted tuple:
//   A: delta(a,b) != delta(b,c) for every triple of the tuple
//   B: delta(a_1, a_r) = max_i delta_i
//   C: the maximum delta_i is attained once
//   D: for every 4-subset, delta_1 > delta_2 implies delta_1 != delta_3
//   G: consecutive local maxima carry distinct values
// Throws InputError("arity") when the tuple is too short for the property.
PropertyVerdict check_property(std::span<const Vertex> tuple, Property which);

enum class Direction { increasing, decreasing };

const char* to_string(Direction d);

struct MonotoneExtraction {
    // n+1 vertices whose consecutive deltas are `deltas`.
    std::vector<Vertex> witness;
    // n strictly monotone delta values, in vertex order.
    std::vector<BitIndex> deltas;
    Direction direction = Direction::decreasing;
    // 0-based delta positions of all 2n halving steps, in step order.
    std::vector<std::size_t> steps;
};

// Halving search: take the unique largest delta of the current window,
// continue in the larger side (left on ties), 2n times; then keep the side
// of the final split that collected at least n steps (preferring the
// decreasing side when both did) and return its first n steps.
// Throws InputError("insufficient ground set") when |tuple| < 2^(2n).
MonotoneExtraction extract_monotone(std::span<const Vertex> tuple, int target);

// A delta sequence is realizable by some sorted vertex tuple iff every
// contiguous window has a unique maximum.
bool is_realizable(std::span<const BitIndex> deltas);

// Smallest-valued sorted tuple (starting at 0) realizing the sequence.
// Throws InputError when the sequence is not realizable.
std::vector<Vertex> realize(std::span<const BitIndex> deltas);

// Enumerates every realizable delta sequence of the given length with all
// values in [0, value_bound). Each sequence is produced exactly once.
void for_each_realizable_sequence(std::size_t length, BitIndex value_bound,
                                  const std::function<void(std::span<const BitIndex>)>& fn);

} // namespace stepup
