#include "zrank/config.hpp"

#include <charconv>
#include <cstdlib>
#include <string_view>

#include "zrank/error.hpp"

namespace zrank {

namespace {

std::int64_t parse_bound(std::string_view key, std::string_view value) {
  std::int64_t out = 0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || ptr != value.data() + value.size() || out < 1)
    throw ParseError("oracle bound '" + std::string(key) + "' needs a positive integer, got '" +
                     std::string(value) + "'");
  return out;
}

}  // namespace

OracleBounds OracleBounds::with_overrides(const std::string& text) const {
  OracleBounds b = *this;
  std::string_view rest = text;
  while (!rest.empty()) {
    auto comma = rest.find(',');
    std::string_view item = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string_view::npos)
      throw ParseError("oracle bound entry '" + std::string(item) + "' is not key=value");
    auto key = item.substr(0, eq);
    auto value = parse_bound(key, item.substr(eq + 1));
    if (key == "decomposition_cells")
      b.decomposition_cells = static_cast<int>(value);
    else if (key == "ssyt_cells")
      b.ssyt_cells = static_cast<int>(value);
    else if (key == "ssyt_max_t")
      b.ssyt_max_t = static_cast<int>(value);
    else if (key == "interval_sets")
      b.interval_sets = value;
    else
      throw ParseError("unknown oracle bound '" + std::string(key) + "'");
  }
  return b;
}

OracleBounds OracleBounds::from_env() {
  const char* env = std::getenv(kOracleBoundsEnv);
  if (env == nullptr) return {};
  return OracleBounds{}.with_overrides(env);
}

}  // namespace zrank
