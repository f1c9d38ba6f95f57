#pragma once

#include <charconv>
#include <cstdint>
#include <string>

namespace loscov {

// Shortest decimal representation that round-trips to the same double.
// Locale-independent, used by every text output format.
inline std::string fmt_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

inline std::string fmt_u64(std::uint64_t v) {
  char buf[24];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

}  // namespace loscov
