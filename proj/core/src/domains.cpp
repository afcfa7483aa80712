#include "tcs/domains.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "tcs/errors.hpp"

namespace tcs {

SimplicialSet operator_complex(
    int n, int bound,
    const std::function<std::optional<int>(const SimplicialOperator&)>& label) {
  struct LevelIds {
    std::unordered_map<int, SimplexId> ids;
    std::vector<SimplicialOperator> reps;
  };
  std::vector<LevelIds> ids(static_cast<std::size_t>(bound + 1));
  for (int m = 0; m <= bound; ++m) {
    auto& lvl = ids[static_cast<std::size_t>(m)];
    for (const auto& op : operators_between(m, n)) {
      const auto l = label(op);
      if (!l) continue;
      if (lvl.ids.emplace(*l, static_cast<SimplexId>(lvl.reps.size())).second) {
        lvl.reps.push_back(op);
      }
    }
  }
  auto lookup = [&](int m, const SimplicialOperator& op) -> SimplexId {
    const auto l = label(op);
    const auto& lvl = ids[static_cast<std::size_t>(m)];
    auto it = l ? lvl.ids.find(*l) : lvl.ids.end();
    if (it == lvl.ids.end()) {
      throw InvalidData("operator labelling is not closed under faces");
    }
    return it->second;
  };
  std::vector<SimplicialSet::LevelTables> levels(
      static_cast<std::size_t>(bound + 1));
  for (int m = 0; m <= bound; ++m) {
    const auto& reps = ids[static_cast<std::size_t>(m)].reps;
    auto& t = levels[static_cast<std::size_t>(m)];
    t.count = reps.size();
    for (const auto& op : reps) {
      for (int i = 0; m > 0 && i <= m; ++i) {
        t.faces.push_back(
            lookup(m - 1, op.after(SimplicialOperator::coface(m, i))));
      }
      for (int j = 0; m < bound && j <= m; ++j) {
        t.degeneracies.push_back(
            lookup(m + 1, op.after(SimplicialOperator::codegeneracy(m, j))));
      }
    }
  }
  return SimplicialSet::from_tables(bound, std::move(levels));
}

SimplicialSet standard_simplex(int n, int bound) {
  return operator_complex(n, bound, [](const SimplicialOperator& op) {
    return std::optional<int>(static_cast<int>(operator_index(op)));
  });
}

SimplicialSet simplex_boundary(int n, int bound) {
  return operator_complex(
      n, bound, [n](const SimplicialOperator& op) -> std::optional<int> {
        if (static_cast<int>(op.image().size()) == n + 1) return std::nullopt;
        return static_cast<int>(operator_index(op));
      });
}

SimplicialSet horn_shape(int n, int missing, int bound) {
  return operator_complex(
      n, bound, [n, missing](const SimplicialOperator& op) -> std::optional<int> {
        auto image = op.image();
        int covered = 0;
        for (int v : image) covered += v != missing ? 1 : 0;
        if (covered == n) return std::nullopt;  // hits every vertex but `missing`
        return static_cast<int>(operator_index(op));
      });
}

SimplicialSet simplicial_circle(int bound) {
  return operator_complex(1, bound, [](const SimplicialOperator& op) {
    const bool constant = op.image().size() == 1;
    return std::optional<int>(constant ? -1 : static_cast<int>(operator_index(op)));
  });
}

SimplicialSet discrete_set(std::size_t n, int bound) {
  std::vector<SimplicialSet::LevelTables> levels(
      static_cast<std::size_t>(bound + 1));
  for (int k = 0; k <= bound; ++k) {
    auto& t = levels[static_cast<std::size_t>(k)];
    t.count = n;
    for (SimplexId v = 0; v < n; ++v) {
      for (int i = 0; k > 0 && i <= k; ++i) t.faces.push_back(v);
      for (int j = 0; k < bound && j <= k; ++j) t.degeneracies.push_back(v);
    }
  }
  return SimplicialSet::from_tables(bound, std::move(levels));
}

namespace {

std::uint64_t ez_key(int base_dim, SimplexId base, std::uint32_t mask) {
  return (static_cast<std::uint64_t>(base_dim) << 56) |
         (static_cast<std::uint64_t>(mask) << 32) | base;
}

}  // namespace

SimplicialSet skeletal_extension(const SimplicialSet& data, int bound) {
  const int stored = data.bound();
  if (bound <= stored) return data.truncated(bound);

  struct Entry {
    int dim;
    SimplexId base;
    std::uint32_t mask;
  };
  std::vector<std::vector<Entry>> entries(static_cast<std::size_t>(bound + 1));
  std::vector<std::unordered_map<std::uint64_t, SimplexId>> index(
      static_cast<std::size_t>(bound + 1));
  for (int k = 0; k <= bound; ++k) {
    auto& lvl = entries[static_cast<std::size_t>(k)];
    if (k <= stored) {
      for (SimplexId x = 0; x < data.size(k); ++x) {
        const std::uint32_t mask = data.degeneracy_mask(k, x);
        lvl.push_back({k - std::popcount(mask), data.base(k, x), mask});
      }
    } else {
      for (int d = 0; d <= stored; ++d) {
        for (SimplexId y : data.nondegenerate(d)) {
          for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
            if (std::popcount(mask) == k - d) lvl.push_back({d, y, mask});
          }
        }
      }
    }
    auto& idx = index[static_cast<std::size_t>(k)];
    for (std::size_t t = 0; t < lvl.size(); ++t) {
      idx.emplace(ez_key(lvl[t].dim, lvl[t].base, lvl[t].mask),
                  static_cast<SimplexId>(t));
    }
  }

  auto normal_form = [&](int level, const Entry& e,
                         const SimplicialOperator& theta) -> SimplexId {
    // theta : [level] -> [e.dim]; factor as injection after surjection.
    const auto image = theta.image();
    const int r = static_cast<int>(image.size()) - 1;
    const SimplicialOperator inj(e.dim, image);
    std::vector<int> surj_values;
    for (int v : theta.values()) {
      surj_values.push_back(static_cast<int>(
          std::lower_bound(image.begin(), image.end(), v) - image.begin()));
    }
    const SimplicialOperator surj(r, std::move(surj_values));
    const SimplexId z = data.act(e.base, inj);
    const std::uint32_t zmask = data.degeneracy_mask(r, z);
    const auto tau = SimplicialOperator::surjection_from_mask(r, zmask);
    const auto total = tau.after(surj);
    const auto& idx = index[static_cast<std::size_t>(level)];
    return idx.at(ez_key(total.target_dim(), data.base(r, z), total.repeat_mask()));
  };

  std::vector<SimplicialSet::LevelTables> levels(
      static_cast<std::size_t>(bound + 1));
  for (int k = 0; k <= bound; ++k) {
    auto& t = levels[static_cast<std::size_t>(k)];
    const auto& lvl = entries[static_cast<std::size_t>(k)];
    t.count = lvl.size();
    for (const Entry& e : lvl) {
      const auto sigma = SimplicialOperator::surjection_from_mask(k, e.mask);
      for (int i = 0; k > 0 && i <= k; ++i) {
        t.faces.push_back(
            normal_form(k - 1, e, sigma.after(SimplicialOperator::coface(k, i))));
      }
      for (int j = 0; k < bound && j <= k; ++j) {
        t.degeneracies.push_back(normal_form(
            k + 1, e, sigma.after(SimplicialOperator::codegeneracy(k, j))));
      }
    }
  }
  return SimplicialSet::from_tables(bound, std::move(levels));
}

Subcomplex subcomplex(const SimplicialSetPtr& data,
                      const std::vector<std::vector<bool>>& keep) {
  const int bound = data->bound();
  std::vector<std::vector<SimplexId>> new_id(static_cast<std::size_t>(bound + 1));
  std::vector<std::vector<SimplexId>> old_id(static_cast<std::size_t>(bound + 1));
  for (int k = 0; k <= bound; ++k) {
    auto& fwd = new_id[static_cast<std::size_t>(k)];
    fwd.assign(data->size(k), kNoSimplex);
    for (SimplexId x = 0; x < data->size(k); ++x) {
      if (keep[static_cast<std::size_t>(k)][x]) {
        fwd[x] = static_cast<SimplexId>(old_id[static_cast<std::size_t>(k)].size());
        old_id[static_cast<std::size_t>(k)].push_back(x);
      }
    }
  }
  auto remap = [&](int k, SimplexId x) {
    const SimplexId y = new_id[static_cast<std::size_t>(k)][x];
    if (y == kNoSimplex) {
      throw InvalidData("subcomplex is not closed under faces and degeneracies");
    }
    return y;
  };
  std::vector<SimplicialSet::LevelTables> levels(
      static_cast<std::size_t>(bound + 1));
  for (int k = 0; k <= bound; ++k) {
    auto& t = levels[static_cast<std::size_t>(k)];
    const auto& olds = old_id[static_cast<std::size_t>(k)];
    t.count = olds.size();
    for (SimplexId x : olds) {
      for (int i = 0; k > 0 && i <= k; ++i) {
        t.faces.push_back(remap(k - 1, data->face(k, x, i)));
      }
      for (int j = 0; k < bound && j <= k; ++j) {
        t.degeneracies.push_back(remap(k + 1, data->degeneracy(k, x, j)));
      }
    }
  }
  auto space = share(SimplicialSet::from_tables(bound, std::move(levels)));
  SimplicialMap inclusion(space, data, old_id);
  return {space, std::move(inclusion)};
}

}  // namespace tcs
