#pragma once

#include <string_view>

namespace meadow::detail {

inline std::string_view trim(std::string_view s) {
  constexpr std::string_view ws = " \t\r\n";
  while (!s.empty() && ws.find(s.front()) != std::string_view::npos) s.remove_prefix(1);
  while (!s.empty() && ws.find(s.back()) != std::string_view::npos) s.remove_suffix(1);
  return s;
}

}  // namespace meadow::detail
