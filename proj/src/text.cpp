#include "svddcap/text.hpp"

#include <array>
#include <charconv>
#include <cstdio>
#include <system_error>

#include "svddcap/types.hpp"

namespace svddcap {

std::string format_double(double value) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  if (ec != std::errc{}) {
    throw ValidationError("failed to format a floating-point value");
  }
  return std::string(buf.data(), ptr);
}

std::string format_fixed(double value, int precision) {
  std::array<char, 64> buf{};
  const int len = std::snprintf(buf.data(), buf.size(), "%.*f", precision, value);
  return std::string(buf.data(), static_cast<std::size_t>(len));
}

double parse_double(std::string_view text, std::string_view what) {
  const std::string_view field = trim(text);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size() || field.empty()) {
    throw ValidationError("invalid numeric value for " + std::string(what) + ": '" +
                          std::string(text) + "'");
  }
  return value;
}

std::uint64_t parse_uint64(std::string_view text, std::string_view what) {
  const std::string_view field = trim(text);
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size() || field.empty()) {
    throw ValidationError("invalid integer value for " + std::string(what) + ": '" +
                          std::string(text) + "'");
  }
  return value;
}

std::string_view trim(std::string_view text) {
  const char* ws = " \t\r\n";
  const auto first = text.find_first_not_of(ws);
  if (first == std::string_view::npos) return {};
  const auto last = text.find_last_not_of(ws);
  return text.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view text, char delim) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(delim, start);
    if (pos == std::string_view::npos) {
      fields.push_back(text.substr(start));
      break;
    }
    fields.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
  return fields;
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t hash = 0xCBF29CE484222325ull;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001B3ull;
  }
  return hash;
}

std::string hex16(std::uint64_t value) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[value & 0xF];
    value >>= 4;
  }
  return out;
}

}  // namespace svddcap
