#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "stepup/combinatorics.hpp"

namespace stepup {

using Json = nlohmann::ordered_json;

inline constexpr const char* tool_version = "stepup 1.0.0";

// Which part of a (possibly huge) subset space a verifier enumerated.
struct Scope {
    enum class Kind { full, window, sample };

    Kind kind = Kind::full;
    // window: vertices [lo, hi)
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
    // sample: `count` random subsets drawn with `seed`
    std::uint64_t seed = 0;
    std::uint64_t count = 0;

    static Scope full() { return {}; }
    static Scope window(std::uint64_t lo, std::uint64_t hi);
    static Scope sample(std::uint64_t seed, std::uint64_t count);

    // "full", "window:LO:HI" or "sample:SEED:COUNT".
    static Scope parse(const std::string& text);

    std::string describe() const;
    Json to_json() const;

    // Vertex list for full/window scopes over a ground set of size v.
    std::vector<Vertex> vertices(std::uint64_t ground_size) const;
};

// Machine-readable record of one verification run.
struct Certificate {
    std::string task;
    Json construction = Json::object();
    std::string property;
    Scope scope;
    bool pass = false;
    Json witness = nullptr;
    Json details = Json::object();
    // Only emitted when set; leaving it out keeps certificates byte-stable.
    std::optional<double> wall_time_ms;

    Json to_json() const;
    std::string dump() const { return to_json().dump(2) + "\n"; }
};

// FNV-1a 64 of a byte string, as 16 hex digits.
std::string digest(const std::string& bytes);

} // namespace stepup
