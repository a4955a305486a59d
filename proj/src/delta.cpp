#include "stepup/delta.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "stepup/error.hpp"

namespace stepup {

BitIndex delta(Vertex a, Vertex b)
{
    if (a == b) {
        throw Error("delta undefined on equal vertices");
    }
    return 63 - __builtin_clzll(a ^ b);
}

BitIndex delta(Vertex a, Vertex b, int width)
{
    if (width < 64 && ((a >> width) != 0 || (b >> width) != 0)) {
        throw InputError("vertex exceeds width " + std::to_string(width));
    }
    return delta(a, b);
}

const char* to_string(Position p)
{
    switch (p) {
    case Position::boundary:
        return "boundary";
    case Position::local_min:
        return "local_min";
    case Position::local_max:
        return "local_max";
    case Position::local_monotone:
        return "local_monotone";
    }
    return "?";
}

Position classify(std::span<const BitIndex> deltas, std::size_t i)
{
    if (i == 0 || i + 1 >= deltas.size()) {
        return Position::boundary;
    }
    const BitIndex prev = deltas[i - 1];
    const BitIndex cur = deltas[i];
    const BitIndex next = deltas[i + 1];
    if (prev == cur || cur == next) {
        throw Error("classify: equal adjacent deltas");
    }
    if (prev > cur && cur < next) {
        return Position::local_min;
    }
    if (prev < cur && cur > next) {
        return Position::local_max;
    }
    return Position::local_monotone;
}

ExtremaCount count_extrema(std::span<const BitIndex> deltas)
{
    ExtremaCount c;
    if (deltas.size() < 3) {
        return c;
    }
    for (std::size_t i = 1; i + 1 < deltas.size(); ++i) {
        const bool up_before = deltas[i - 1] < deltas[i];
        const bool up_after = deltas[i] < deltas[i + 1];
        if (up_before == up_after) {
            ++c.monotone;
        } else {
            ++c.extrema;
        }
    }
    return c;
}

bool is_strictly_monotone(std::span<const BitIndex> deltas)
{
    if (deltas.size() <= 1) {
        return true;
    }
    bool inc = true;
    bool dec = true;
    for (std::size_t i = 1; i < deltas.size(); ++i) {
        inc = inc && deltas[i - 1] < deltas[i];
        dec = dec && deltas[i - 1] > deltas[i];
    }
    return inc || dec;
}

DeltaProfile::DeltaProfile(std::vector<Vertex> vertices, int width)
    : width_(width)
    , vertices_(std::move(vertices))
{
    if (vertices_.size() < 2) {
        throw InputError("not a sorted set: need at least 2 vertices");
    }
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (i > 0 && vertices_[i] <= vertices_[i - 1]) {
            throw InputError("not a sorted set");
        }
        if (width_ < 64 && (vertices_[i] >> width_) != 0) {
            throw InputError("vertex exceeds width " + std::to_string(width_));
        }
    }
    deltas_.resize(vertices_.size() - 1);
    delta_sequence(vertices_, deltas_);
    labels_.resize(deltas_.size(), Position::boundary);
    if (vertices_.size() >= 4) {
        for (std::size_t i = 1; i + 1 < deltas_.size(); ++i) {
            labels_[i] = classify(deltas_, i);
        }
    }
    counts_ = count_extrema(deltas_);
}

std::vector<std::size_t> DeltaProfile::positions(Position p) const
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (labels_[i] == p) {
            out.push_back(i);
        }
    }
    return out;
}

std::vector<std::size_t> DeltaProfile::extremum_positions() const
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (labels_[i] == Position::local_min || labels_[i] == Position::local_max) {
            out.push_back(i);
        }
    }
    return out;
}

DeltaProfile DeltaProfile::without(std::initializer_list<std::size_t> removed) const
{
    std::vector<Vertex> kept;
    kept.reserve(vertices_.size());
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (std::find(removed.begin(), removed.end(), i) == removed.end()) {
            kept.push_back(vertices_[i]);
        }
    }
    return DeltaProfile(std::move(kept), width_);
}

const char* to_string(Property p)
{
    switch (p) {
    case Property::A:
        return "A";
    case Property::B:
        return "B";
    case Property::C:
        return "C";
    case Property::D:
        return "D";
    case Property::G:
        return "G";
    }
    return "?";
}

Property parse_property(const std::string& name)
{
    if (name == "A") {
        return Property::A;
    }
    if (name == "B") {
        return Property::B;
    }
    if (name == "C") {
        return Property::C;
    }
    if (name == "D") {
        return Property::D;
    }
    if (name == "G") {
        return Property::G;
    }
    throw InputError("unknown property '" + name + "' (expected one of A,B,C,D,G)");
}

namespace {

void require_sorted(std::span<const Vertex> tuple)
{
    for (std::size_t i = 1; i < tuple.size(); ++i) {
        if (tuple[i] <= tuple[i - 1]) {
            throw InputError("not a sorted set");
        }
    }
}

} // namespace

std::size_t property_min_arity(Property p)
{
    switch (p) {
    case Property::A:
        return 3;
    case Property::D:
        return 4;
    case Property::B:
    case Property::C:
        return 2;
    case Property::G:
        return 2;
    }
    return 2;
}

PropertyVerdict check_property(std::span<const Vertex> tuple, Property which)
{
    if (tuple.size() < property_min_arity(which)) {
        throw InputError("arity: property " + std::string(to_string(which)) + " needs at least "
                         + std::to_string(property_min_arity(which)) + " vertices");
    }
    require_sorted(tuple);
    PropertyVerdict verdict;
    const std::size_t r = tuple.size();
    std::array<BitIndex, 64> buf{};
    std::vector<BitIndex> heap;
    std::span<BitIndex> d(buf.data(), r - 1);
    if (r - 1 > buf.size()) {
        heap.resize(r - 1);
        d = heap;
    }
    delta_sequence(tuple, d);

    switch (which) {
    case Property::A:
        for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t j = i + 1; j < r; ++j) {
                for (std::size_t l = j + 1; l < r; ++l) {
                    if (delta(tuple[i], tuple[j]) == delta(tuple[j], tuple[l])) {
                        verdict.holds = false;
                        verdict.witness = {tuple[i], tuple[j], tuple[l]};
                        return verdict;
                    }
                }
            }
        }
        break;
    case Property::B:
        if (delta(tuple.front(), tuple.back()) != *std::max_element(d.begin(), d.end())) {
            verdict.holds = false;
        }
        break;
    case Property::C: {
        const BitIndex top = *std::max_element(d.begin(), d.end());
        if (delta(tuple.front(), tuple.back()) != top || std::count(d.begin(), d.end(), top) != 1) {
            verdict.holds = false;
        }
        break;
    }
    case Property::D:
        for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t j = i + 1; j < r; ++j) {
                for (std::size_t l = j + 1; l < r; ++l) {
                    for (std::size_t q = l + 1; q < r; ++q) {
                        const BitIndex d1 = delta(tuple[i], tuple[j]);
                        const BitIndex d2 = delta(tuple[j], tuple[l]);
                        const BitIndex d3 = delta(tuple[l], tuple[q]);
                        if (d1 > d2 && d1 == d3) {
                            verdict.holds = false;
                            verdict.witness = {tuple[i], tuple[j], tuple[l], tuple[q]};
                            return verdict;
                        }
                    }
                }
            }
        }
        break;
    case Property::G: {
        std::size_t prev_max = 0;
        bool have_prev = false;
        for (std::size_t i = 1; i + 1 < d.size(); ++i) {
            if (d[i - 1] < d[i] && d[i] > d[i + 1]) {
                if (have_prev && d[prev_max] == d[i]) {
                    verdict.holds = false;
                    verdict.witness = {tuple[prev_max], tuple[prev_max + 1], tuple[i], tuple[i + 1]};
                    return verdict;
                }
                prev_max = i;
                have_prev = true;
            }
        }
        break;
    }
    }
    verdict.witness.assign(tuple.begin(), tuple.end());
    return verdict;
}

const char* to_string(Direction d)
{
    return d == Direction::increasing ? "increasing" : "decreasing";
}

MonotoneExtraction extract_monotone(std::span<const Vertex> tuple, int target)
{
    if (target < 1 || target > 31) {
        throw InputError("extract_monotone: target must be in [1, 31]");
    }
    require_sorted(tuple);
    const std::uint64_t needed = std::uint64_t{1} << (2 * target);
    if (tuple.size() < needed) {
        throw InputError("insufficient ground set: need " + std::to_string(needed) + " vertices, got "
                         + std::to_string(tuple.size()));
    }
    std::vector<BitIndex> d(tuple.size() - 1);
    delta_sequence(tuple, d);

    const int steps = 2 * target;
    MonotoneExtraction out;
    std::vector<bool> went_left;
    std::size_t lo = 0;
    std::size_t hi = tuple.size() - 1; // vertex window [lo, hi]
    for (int step = 0; step < steps; ++step) {
        const auto first = d.begin() + static_cast<std::ptrdiff_t>(lo);
        const auto last = d.begin() + static_cast<std::ptrdiff_t>(hi);
        const auto top = std::max_element(first, last);
        if (std::count(first, last, *top) != 1) {
            throw Error("extract_monotone: window maximum is not unique");
        }
        const auto s = static_cast<std::size_t>(top - d.begin());
        out.steps.push_back(s);
        const std::size_t left_size = s - lo + 1;
        const std::size_t right_size = hi - s;
        if (left_size >= right_size) {
            went_left.push_back(true);
            hi = s;
        } else {
            went_left.push_back(false);
            lo = s + 1;
        }
    }

    // Steps that went right sit left of the final split and decrease along
    // the tuple; steps that went left sit right of it and increase. The
    // final split belongs to both groups.
    std::vector<std::size_t> decreasing;
    std::vector<std::size_t> increasing;
    for (int step = 0; step + 1 < steps; ++step) {
        (went_left[static_cast<std::size_t>(step)] ? increasing : decreasing).push_back(
            out.steps[static_cast<std::size_t>(step)]);
    }
    decreasing.push_back(out.steps.back());
    increasing.push_back(out.steps.back());

    const auto n = static_cast<std::size_t>(target);
    std::vector<std::size_t> chosen;
    if (decreasing.size() >= n) {
        out.direction = Direction::decreasing;
        chosen.assign(decreasing.begin(), decreasing.begin() + static_cast<std::ptrdiff_t>(n));
    } else {
        out.direction = Direction::increasing;
        chosen.assign(increasing.begin(), increasing.begin() + static_cast<std::ptrdiff_t>(n));
    }
    std::sort(chosen.begin(), chosen.end());
    for (const std::size_t p : chosen) {
        out.witness.push_back(tuple[p]);
    }
    out.witness.push_back(tuple[chosen.back() + 1]);
    out.deltas.resize(n);
    delta_sequence(out.witness, out.deltas);
    return out;
}

bool is_realizable(std::span<const BitIndex> deltas)
{
    // A window max is non-unique iff two equal values have only smaller
    // values between them.
    for (std::size_t i = 0; i < deltas.size(); ++i) {
        if (deltas[i] < 0 || deltas[i] > 62) {
            return false;
        }
        for (std::size_t j = i + 1; j < deltas.size(); ++j) {
            if (deltas[j] > deltas[i]) {
                break;
            }
            if (deltas[j] == deltas[i]) {
                return false;
            }
        }
    }
    return true;
}

namespace {

void realize_into(std::span<const BitIndex> d, std::size_t lo, std::size_t hi, Vertex base,
                  std::vector<Vertex>& out)
{
    // Vertices lo..hi use deltas lo..hi-1.
    if (lo == hi) {
        out[lo] = base;
        return;
    }
    const auto first = d.begin() + static_cast<std::ptrdiff_t>(lo);
    const auto top = std::max_element(first, d.begin() + static_cast<std::ptrdiff_t>(hi));
    const auto s = static_cast<std::size_t>(top - d.begin());
    realize_into(d, lo, s, base, out);
    realize_into(d, s + 1, hi, base | (Vertex{1} << *top), out);
}

void enumerate(std::vector<BitIndex>& buf, std::size_t pos, std::size_t len, BitIndex bound,
               const std::function<void()>& next)
{
    if (len == 0) {
        next();
        return;
    }
    for (std::size_t s = 0; s < len; ++s) {
        for (BitIndex v = 0; v < bound; ++v) {
            buf[pos + s] = v;
            enumerate(buf, pos, s, v, [&] { enumerate(buf, pos + s + 1, len - s - 1, v, next); });
        }
    }
}

} // namespace

std::vector<Vertex> realize(std::span<const BitIndex> deltas)
{
    if (!is_realizable(deltas)) {
        throw InputError("delta sequence is not realizable");
    }
    std::vector<Vertex> out(deltas.size() + 1);
    realize_into(deltas, 0, deltas.size(), 0, out);
    return out;
}

void for_each_realizable_sequence(std::size_t length, BitIndex value_bound,
                                  const std::function<void(std::span<const BitIndex>)>& fn)
{
    std::vector<BitIndex> buf(length);
    enumerate(buf, 0, length, value_bound, [&] { fn(std::span<const BitIndex>(buf)); });
}

} // namespace stepup
