#pragma once

#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>

namespace voltlab {

// Shortest round-trip decimal form of a double ("1e-07", "0.5", ...).
// Keeps serialized files byte-stable across runs.
std::string format_double(double x);

// Strict full-token numeric parses; return false on trailing garbage.
bool parse_double(std::string_view s, double& out);
bool parse_u64(std::string_view s, std::uint64_t& out);
bool parse_i64(std::string_view s, std::int64_t& out);

std::string_view trim(std::string_view s);

}  // namespace voltlab
