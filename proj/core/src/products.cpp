#include "tcs/products.hpp"

#include <unordered_map>

#include "tcs/coskeleton.hpp"
#include "tcs/errors.hpp"
#include "tcs/limits.hpp"

namespace tcs {

namespace {

void require_same_bound(const SimplicialSet& x, const SimplicialSet& y,
                        const char* op) {
  if (x.bound() != y.bound()) {
    throw BoundMismatch(std::string(op) + ": bounds " +
                        std::to_string(x.bound()) + " and " +
                        std::to_string(y.bound()));
  }
}

}  // namespace

ProductData product_data(const SimplicialSetPtr& x, const SimplicialSetPtr& y) {
  require_same_bound(*x, *y, "product");
  const int bound = x->bound();
  Deadline deadline("product");
  std::vector<SimplicialSet::LevelTables> levels(
      static_cast<std::size_t>(bound + 1));
  std::vector<std::vector<SimplexId>> first(static_cast<std::size_t>(bound + 1));
  std::vector<std::vector<SimplexId>> second(static_cast<std::size_t>(bound + 1));
  for (int k = 0; k <= bound; ++k) {
    const std::size_t nx = x->size(k);
    const std::size_t ny = y->size(k);
    deadline.check_size(nx * ny, "product level");
    auto& t = levels[static_cast<std::size_t>(k)];
    t.count = nx * ny;
    const std::size_t ny_below = k > 0 ? y->size(k - 1) : 0;
    const std::size_t ny_above = k < bound ? y->size(k + 1) : 0;
    for (SimplexId a = 0; a < nx; ++a) {
      for (SimplexId b = 0; b < ny; ++b) {
        for (int i = 0; k > 0 && i <= k; ++i) {
          t.faces.push_back(static_cast<SimplexId>(
              x->face(k, a, i) * ny_below + y->face(k, b, i)));
        }
        for (int j = 0; k < bound && j <= k; ++j) {
          t.degeneracies.push_back(static_cast<SimplexId>(
              x->degeneracy(k, a, j) * ny_above + y->degeneracy(k, b, j)));
        }
        first[static_cast<std::size_t>(k)].push_back(a);
        second[static_cast<std::size_t>(k)].push_back(b);
      }
    }
  }
  auto space = share(SimplicialSet::from_tables(bound, std::move(levels)));
  return {space, SimplicialMap(space, x, std::move(first)),
          SimplicialMap(space, y, std::move(second))};
}

CoproductData coproduct_data(const SimplicialSetPtr& x,
                             const SimplicialSetPtr& y) {
  require_same_bound(*x, *y, "coproduct");
  const int bound = x->bound();
  std::vector<SimplicialSet::LevelTables> levels(
      static_cast<std::size_t>(bound + 1));
  std::vector<std::vector<SimplexId>> left(static_cast<std::size_t>(bound + 1));
  std::vector<std::vector<SimplexId>> right(static_cast<std::size_t>(bound + 1));
  for (int k = 0; k <= bound; ++k) {
    auto& t = levels[static_cast<std::size_t>(k)];
    t.count = x->size(k) + y->size(k);
    const auto shift_below = static_cast<SimplexId>(k > 0 ? x->size(k - 1) : 0);
    const auto shift_above =
        static_cast<SimplexId>(k < bound ? x->size(k + 1) : 0);
    for (SimplexId a = 0; a < x->size(k); ++a) {
      for (int i = 0; k > 0 && i <= k; ++i) t.faces.push_back(x->face(k, a, i));
      for (int j = 0; k < bound && j <= k; ++j) {
        t.degeneracies.push_back(x->degeneracy(k, a, j));
      }
      left[static_cast<std::size_t>(k)].push_back(a);
    }
    const auto shift = static_cast<SimplexId>(x->size(k));
    for (SimplexId b = 0; b < y->size(k); ++b) {
      for (int i = 0; k > 0 && i <= k; ++i) {
        t.faces.push_back(y->face(k, b, i) + shift_below);
      }
      for (int j = 0; k < bound && j <= k; ++j) {
        t.degeneracies.push_back(y->degeneracy(k, b, j) + shift_above);
      }
      right[static_cast<std::size_t>(k)].push_back(b + shift);
    }
  }
  auto space = share(SimplicialSet::from_tables(bound, std::move(levels)));
  return {space, SimplicialMap(x, space, std::move(left)),
          SimplicialMap(y, space, std::move(right))};
}

StrictPullback strict_pullback(const SimplicialMap& f, const SimplicialMap& g) {
  const SimplicialSet& a = f.source();
  const SimplicialSet& b = g.source();
  require_same_bound(a, b, "pullback");
  require_same_bound(f.target(), g.target(), "pullback");
  const int bound = a.bound();
  Deadline deadline("pullback");
  // level k: pairs grouped by common image
  std::vector<std::vector<std::pair<SimplexId, SimplexId>>> pairs(
      static_cast<std::size_t>(bound + 1));
  std::vector<std::unordered_map<std::uint64_t, SimplexId>> index(
      static_cast<std::size_t>(bound + 1));
  for (int k = 0; k <= bound; ++k) {
    std::vector<std::vector<SimplexId>> by_image(f.target().size(k));
    for (SimplexId y = 0; y < b.size(k); ++y) by_image[g(k, y)].push_back(y);
    auto& lvl = pairs[static_cast<std::size_t>(k)];
    for (SimplexId x = 0; x < a.size(k); ++x) {
      for (SimplexId y : by_image[f(k, x)]) {
        index[static_cast<std::size_t>(k)].emplace(
            (static_cast<std::uint64_t>(x) << 32) | y,
            static_cast<SimplexId>(lvl.size()));
        lvl.emplace_back(x, y);
      }
      deadline.check_size(lvl.size(), "pullback level");
    }
  }
  auto id_of = [&](int k, SimplexId x, SimplexId y) {
    return index[static_cast<std::size_t>(k)].at(
        (static_cast<std::uint64_t>(x) << 32) | y);
  };
  std::vector<SimplicialSet::LevelTables> levels(
      static_cast<std::size_t>(bound + 1));
  std::vector<std::vector<SimplexId>> first(static_cast<std::size_t>(bound + 1));
  std::vector<std::vector<SimplexId>> second(static_cast<std::size_t>(bound + 1));
  for (int k = 0; k <= bound; ++k) {
    auto& t = levels[static_cast<std::size_t>(k)];
    const auto& lvl = pairs[static_cast<std::size_t>(k)];
    t.count = lvl.size();
    for (auto [x, y] : lvl) {
      for (int i = 0; k > 0 && i <= k; ++i) {
        t.faces.push_back(id_of(k - 1, a.face(k, x, i), b.face(k, y, i)));
      }
      for (int j = 0; k < bound && j <= k; ++j) {
        t.degeneracies.push_back(
            id_of(k + 1, a.degeneracy(k, x, j), b.degeneracy(k, y, j)));
      }
      first[static_cast<std::size_t>(k)].push_back(x);
      second[static_cast<std::size_t>(k)].push_back(y);
    }
  }
  auto space = share(SimplicialSet::from_tables(bound, std::move(levels)));
  return {space, SimplicialMap(space, f.source_ptr(), std::move(first)),
          SimplicialMap(space, g.source_ptr(), std::move(second))};
}

KanProduct product_with_projections(const BoundedKanComplex& x,
                                    const BoundedKanComplex& y) {
  auto [xx, yy] = equalize_bounds(x, y);
  auto data = product_data(xx.ptr(), yy.ptr());
  return {BoundedKanComplex::by_construction(data.space), std::move(data.first),
          std::move(data.second)};
}

BoundedKanComplex product(const BoundedKanComplex& x, const BoundedKanComplex& y) {
  return product_with_projections(x, y).space;
}

KanCoproduct coproduct_with_inclusions(const BoundedKanComplex& x,
                                       const BoundedKanComplex& y) {
  auto [xx, yy] = equalize_bounds(x, y);
  auto data = coproduct_data(xx.ptr(), yy.ptr());
  return {BoundedKanComplex::by_construction(data.space), std::move(data.left),
          std::move(data.right)};
}

BoundedKanComplex coproduct(const BoundedKanComplex& x,
                            const BoundedKanComplex& y) {
  return coproduct_with_inclusions(x, y).space;
}

}  // namespace tcs
