#pragma once

#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <string_view>

namespace zsearch {

inline constexpr const char* kVersion = "0.1.0";

struct InvalidSeed : std::runtime_error {
    explicit InvalidSeed(const std::string& reason) : std::runtime_error("invalid seed: " + reason) {}
};
struct BadDimensions : std::runtime_error {
    explicit BadDimensions(const std::string& what) : std::runtime_error("bad dimensions: " + what) {}
};
struct ParseError : std::runtime_error {
    ParseError(const std::string& what, long line)
        : std::runtime_error("parse error at line " + std::to_string(line) + ": " + what), line_number(line) {}
    long line_number;
};
struct DimensionMismatch : std::runtime_error {
    explicit DimensionMismatch(const std::string& what) : std::runtime_error("dimension mismatch: " + what) {}
};
struct RankDeficient : std::runtime_error {
    explicit RankDeficient(const std::string& what) : std::runtime_error("rank deficient: " + what) {}
};
struct DegenerateAnchor : std::runtime_error {
    explicit DegenerateAnchor(const std::string& what) : std::runtime_error("degenerate anchor: " + what) {}
};
struct EmptyAfterFilter : std::runtime_error {
    explicit EmptyAfterFilter(const std::string& what) : std::runtime_error("empty after filter: " + what) {}
};
struct LibraryTooSmall : std::runtime_error {
    explicit LibraryTooSmall(const std::string& what) : std::runtime_error("library too small: " + what) {}
};
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error("config error: " + what) {}
};

// Shortest-ish decimal form that round-trips a double exactly.
inline std::string fmt_double(double v) {
    char buf[40];
    for (int prec = 15; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
        double back = 0.0;
        std::sscanf(buf, "%lf", &back);
        if (back == v) break;
    }
    return buf;
}

inline uint64_t fnv1a64(std::string_view data, uint64_t seed = 0xcbf29ce484222325ull) {
    uint64_t h = seed;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

inline std::string hex64(uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

}  // namespace zsearch
