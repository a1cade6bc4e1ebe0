#include "awcd/csv.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace awcd {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  if (res.ec != std::errc{}) throw std::runtime_error("number formatting failed");
  return std::string(buf, res.ptr);
}

std::string format_bool01(bool v) { return v ? "1" : "0"; }

}  // namespace awcd
