#ifndef SVDDCAP_TEXT_HPP
#define SVDDCAP_TEXT_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace svddcap {

/// Shortest decimal string that parses back to the identical double.
std::string format_double(double value);

/// Fixed-precision formatting for SVG coordinates.
std::string format_fixed(double value, int precision);

/// Strict double parse: the whole (trimmed) field must be consumed.
double parse_double(std::string_view text, std::string_view what);

std::uint64_t parse_uint64(std::string_view text, std::string_view what);

std::string_view trim(std::string_view text);

std::vector<std::string_view> split(std::string_view text, char delim);

/// FNV-1a 64-bit hash; fingerprint of serialized documents.
std::uint64_t fnv1a64(std::string_view bytes);

std::string hex16(std::uint64_t value);

}  // namespace svddcap

#endif  // SVDDCAP_TEXT_HPP
