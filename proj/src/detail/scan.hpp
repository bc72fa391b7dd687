#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace wdl::detail {

// First falsifying instance over {0..n-1}^k, rendered with `name`; empty when none.
template <typename Name, typename Holds>
std::vector<std::string> witness1(std::size_t n, Name&& name, Holds&& holds) {
  for (std::size_t x = 0; x < n; ++x)
    if (!holds(x)) return {name(x)};
  return {};
}

template <typename Name, typename Holds>
std::vector<std::string> witness2(std::size_t n, Name&& name, Holds&& holds) {
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (!holds(x, y)) return {name(x), name(y)};
  return {};
}

template <typename Name, typename Holds>
std::vector<std::string> witness3(std::size_t n, Name&& name, Holds&& holds) {
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (!holds(x, y, z)) return {name(x), name(y), name(z)};
  return {};
}

}  // namespace wdl::detail
