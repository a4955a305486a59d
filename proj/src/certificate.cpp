#include "stepup/certificate.hpp"

#include <charconv>
#include <cstdio>
#include <numeric>

#include "stepup/error.hpp"

namespace stepup {

namespace {

std::uint64_t parse_u64(const std::string& text, const std::string& what)
{
    std::uint64_t value = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end || text.empty()) {
        throw InputError("bad " + what + " '" + text + "'");
    }
    return value;
}

} // namespace

Scope Scope::window(std::uint64_t lo, std::uint64_t hi)
{
    if (hi <= lo) {
        throw InputError("scope window must have lo < hi");
    }
    Scope s;
    s.kind = Kind::window;
    s.lo = lo;
    s.hi = hi;
    return s;
}

Scope Scope::sample(std::uint64_t seed, std::uint64_t count)
{
    Scope s;
    s.kind = Kind::sample;
    s.seed = seed;
    s.count = count;
    return s;
}

Scope Scope::parse(const std::string& text)
{
    if (text == "full") {
        return full();
    }
    const auto first = text.find(':');
    const auto second = first == std::string::npos ? std::string::npos : text.find(':', first + 1);
    if (second == std::string::npos) {
        throw InputError("bad scope '" + text + "' (expected full, window:LO:HI or sample:SEED:COUNT)");
    }
    const std::string kind = text.substr(0, first);
    const auto a = parse_u64(text.substr(first + 1, second - first - 1), "scope bound");
    const auto b = parse_u64(text.substr(second + 1), "scope bound");
    if (kind == "window") {
        return window(a, b);
    }
    if (kind == "sample") {
        return sample(a, b);
    }
    throw InputError("bad scope kind '" + kind + "'");
}

std::string Scope::describe() const
{
    switch (kind) {
    case Kind::full:
        return "full";
    case Kind::window:
        return "window:" + std::to_string(lo) + ":" + std::to_string(hi);
    case Kind::sample:
        return "sample:" + std::to_string(seed) + ":" + std::to_string(count);
    }
    return "?";
}

Json Scope::to_json() const
{
    Json j;
    switch (kind) {
    case Kind::full:
        j["kind"] = "full";
        break;
    case Kind::window:
        j["kind"] = "window";
        j["lo"] = lo;
        j["hi"] = hi;
        break;
    case Kind::sample:
        j["kind"] = "sample";
        j["seed"] = seed;
        j["count"] = count;
        break;
    }
    return j;
}

std::vector<Vertex> Scope::vertices(std::uint64_t ground_size) const
{
    std::uint64_t first = 0;
    std::uint64_t last = ground_size;
    if (kind == Kind::window) {
        if (hi > ground_size) {
            throw InputError("scope window exceeds ground set of size " + std::to_string(ground_size));
        }
        first = lo;
        last = hi;
    } else if (kind == Kind::sample) {
        throw InputError("sample scope has no vertex list");
    }
    if (last - first > (std::uint64_t{1} << 24)) {
        throw InputError("scope too large to enumerate; use a window");
    }
    std::vector<Vertex> out(last - first);
    std::iota(out.begin(), out.end(), first);
    return out;
}

Json Certificate::to_json() const
{
    Json j;
    j["task"] = task;
    j["tool_version"] = tool_version;
    j["construction"] = construction;
    j["property"] = property;
    j["scope"] = scope.to_json();
    j["verdict"] = pass ? "pass" : "fail";
    j["witness"] = witness;
    j["details"] = details;
    if (wall_time_ms) {
        j["wall_time_ms"] = *wall_time_ms;
    }
    return j;
}

std::string digest(const std::string& bytes)
{
    std::uint64_t h = 14695981039346656037ULL;
    for (const unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

} // namespace stepup
