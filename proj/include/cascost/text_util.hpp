#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace cascost {

// FNV-1a 64-bit, rendered as 16 hex digits. Used for content digests; stable
// across runs and platforms.
std::string fnv1a_hex(std::string_view bytes);

// Shortest decimal text that round-trips the double (std::to_chars).
std::string format_double(double value);

std::string format_u64(std::uint64_t value);

// Current UTC time as RFC 3339 with seconds precision.
std::string utc_now_rfc3339();

}  // namespace cascost
