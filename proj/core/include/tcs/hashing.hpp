#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tcs/simplicial.hpp"

namespace tcs {

inline std::uint64_t hash_ids(std::span<const SimplexId> ids) {
  std::uint64_t h = 1469598103934665603ull;
  for (SimplexId id : ids) {
    h ^= id;
    h *= 1099511628211ull;
    h ^= h >> 29;
  }
  return h;
}

struct IdVectorHash {
  std::size_t operator()(const std::vector<SimplexId>& v) const {
    return static_cast<std::size_t>(hash_ids(v));
  }
};

}  // namespace tcs
