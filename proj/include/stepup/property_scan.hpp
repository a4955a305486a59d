#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "stepup/delta.hpp"

namespace stepup {

struct PropertyScanResult {
    std::uint64_t tuples = 0;
    // Individual property evaluations.
    std::uint64_t checks = 0;
    std::uint64_t counterexamples = 0;
    // First counterexample in enumeration order.
    std::optional<Property> failed;
    std::vector<Vertex> witness;

    void merge(const PropertyScanResult& later);
};

// Every `arity`-subset of the sorted vertex list `ground`, checked against
// each property in `which` that applies at that arity.
PropertyScanResult scan_properties(std::span<const Property> which, std::span<const Vertex> ground, std::size_t arity);

// `count` uniform sorted tuples of [0, 2^width) with arity uniform in
// [min_arity, max_arity], drawn from a seeded stream.
PropertyScanResult sample_properties(std::span<const Property> which, int width, std::size_t min_arity,
                                     std::size_t max_arity, std::uint64_t seed, std::uint64_t count);

} // namespace stepup
