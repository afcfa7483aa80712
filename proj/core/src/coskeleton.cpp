#include "tcs/coskeleton.hpp"

#include <unordered_map>

#include "tcs/errors.hpp"
#include "tcs/hashing.hpp"
#include "tcs/limits.hpp"

namespace tcs {

SimplicialSet coskeletal_extension(const SimplicialSet& data, int new_bound) {
  if (new_bound <= data.bound()) return data.truncated(new_bound);
  Deadline deadline("raise_bound");
  std::vector<SimplicialSet::LevelTables> tables;
  for (int k = 0; k <= data.bound(); ++k) tables.push_back(data.tables(k));
  SimplicialSet current = data;

  for (int b = data.bound(); b < new_bound; ++b) {
    const int k = b + 1;
    std::vector<int> all(static_cast<std::size_t>(k + 1));
    for (int j = 0; j <= k; ++j) all[static_cast<std::size_t>(j)] = j;

    SimplicialSet::LevelTables top;
    std::unordered_map<std::vector<SimplexId>, SimplexId, IdVectorHash> ids;
    for_each_compatible_family(
        current, k, all, [&](std::span<const SimplexId> family) {
          deadline.check();
          std::vector<SimplexId> key(family.begin(), family.end());
          ids.emplace(key, static_cast<SimplexId>(top.count));
          top.faces.insert(top.faces.end(), key.begin(), key.end());
          ++top.count;
          deadline.check_size(top.count, "coskeletal level");
          return true;
        });

    auto& below = tables[static_cast<std::size_t>(b)];
    below.degeneracies.clear();
    std::vector<SimplexId> family(static_cast<std::size_t>(k + 1));
    for (SimplexId x = 0; x < current.size(b); ++x) {
      for (int j = 0; j <= b; ++j) {
        for (int i = 0; i <= k; ++i) {
          SimplexId f;
          if (i < j) {
            f = current.degeneracy(b - 1, current.face(b, x, i), j - 1);
          } else if (i == j || i == j + 1) {
            f = x;
          } else {
            f = current.degeneracy(b - 1, current.face(b, x, i - 1), j);
          }
          family[static_cast<std::size_t>(i)] = f;
        }
        auto it = ids.find(family);
        if (it == ids.end()) {
          throw InvalidData("degenerate sphere missing from coskeleton level " +
                            std::to_string(k));
        }
        below.degeneracies.push_back(it->second);
      }
    }
    tables.push_back(std::move(top));
    current = SimplicialSet::from_tables(k, tables);
  }
  return current;
}

BoundedKanComplex raise_bound(const BoundedKanComplex& x, int new_bound) {
  if (new_bound < x.bound()) {
    throw BoundMismatch("raise_bound: target bound " + std::to_string(new_bound) +
                        " below current bound " + std::to_string(x.bound()));
  }
  if (new_bound == x.bound()) return x;
  return BoundedKanComplex::by_construction(
      share(coskeletal_extension(x.data(), new_bound)));
}

BoundedKanComplex truncate(const BoundedKanComplex& x, int n) {
  const int bound = std::max(1, n + 1);
  if (bound >= x.bound()) return x;
  return BoundedKanComplex::by_construction(share(x.data().truncated(bound)));
}

BoundedKanComplex rebound_truncated(const LevelSource& source, int m) {
  auto data = source(m + 1);
  if (data->bound() != m + 1) {
    throw BoundMismatch("level source returned bound " +
                        std::to_string(data->bound()) + ", expected " +
                        std::to_string(m + 1));
  }
  return BoundedKanComplex::by_construction(std::move(data));
}

std::pair<BoundedKanComplex, BoundedKanComplex> equalize_bounds(
    const BoundedKanComplex& x, const BoundedKanComplex& y) {
  const int b = std::max(x.bound(), y.bound());
  return {raise_bound(x, b), raise_bound(y, b)};
}

}  // namespace tcs
