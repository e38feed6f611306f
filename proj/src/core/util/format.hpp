#pragma once

#include <charconv>
#include <cstdio>
#include <string>

namespace helmscat::util {

// Shortest representation that round-trips (reports).
inline std::string shortest(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

// Full 17-significant-digit form (CSV).
inline std::string digits17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace helmscat::util
