#include "tcs/simplicial.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <map>
#include <mutex>
#include <sstream>
#include <unordered_map>

#include "tcs/errors.hpp"

namespace tcs {

// ---------------------------------------------------------------------------
// SimplicialOperator

SimplicialOperator::SimplicialOperator(int target_dim, std::vector<int> values)
    : target_dim_(target_dim), values_(std::move(values)) {
  assert(!values_.empty());
  assert(std::is_sorted(values_.begin(), values_.end()));
  assert(values_.front() >= 0 && values_.back() <= target_dim_);
}

SimplicialOperator SimplicialOperator::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n + 1));
  for (int t = 0; t <= n; ++t) v[static_cast<std::size_t>(t)] = t;
  return {n, std::move(v)};
}

SimplicialOperator SimplicialOperator::coface(int n, int i) {
  std::vector<int> v;
  v.reserve(static_cast<std::size_t>(n));
  for (int t = 0; t <= n; ++t) {
    if (t != i) v.push_back(t);
  }
  return {n, std::move(v)};
}

SimplicialOperator SimplicialOperator::codegeneracy(int n, int i) {
  std::vector<int> v;
  v.reserve(static_cast<std::size_t>(n + 2));
  for (int t = 0; t <= n + 1; ++t) v.push_back(t <= i ? t : t - 1);
  return {n, std::move(v)};
}

SimplicialOperator SimplicialOperator::surjection_from_mask(int n,
                                                            std::uint32_t mask) {
  std::vector<int> v(static_cast<std::size_t>(n + 1));
  v[0] = 0;
  for (int t = 0; t < n; ++t) {
    v[static_cast<std::size_t>(t + 1)] =
        v[static_cast<std::size_t>(t)] + (((mask >> t) & 1u) != 0u ? 0 : 1);
  }
  const int target = v.back();
  return {target, std::move(v)};
}

bool SimplicialOperator::is_injective() const {
  return std::adjacent_find(values_.begin(), values_.end()) == values_.end();
}

bool SimplicialOperator::is_surjective() const {
  return values_.front() == 0 && values_.back() == target_dim_ &&
         static_cast<int>(image().size()) == target_dim_ + 1;
}

std::uint32_t SimplicialOperator::repeat_mask() const {
  std::uint32_t mask = 0;
  for (std::size_t t = 0; t + 1 < values_.size(); ++t) {
    if (values_[t] == values_[t + 1]) mask |= 1u << t;
  }
  return mask;
}

std::vector<int> SimplicialOperator::image() const {
  std::vector<int> out = values_;
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SimplicialOperator SimplicialOperator::after(
    const SimplicialOperator& inner) const {
  assert(inner.target_dim() == source_dim());
  std::vector<int> v;
  v.reserve(inner.values().size());
  for (int t : inner.values()) v.push_back((*this)(t));
  return {target_dim_, std::move(v)};
}

namespace {

struct OperatorTable {
  std::vector<SimplicialOperator> ops;
  std::unordered_map<std::uint64_t, std::size_t> index;
};

std::uint64_t encode(const std::vector<int>& values) {
  std::uint64_t key = 0;
  for (int v : values) key = key * 64u + static_cast<std::uint64_t>(v);
  return key;
}

const OperatorTable& operator_table(int m, int k) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::unique_ptr<OperatorTable>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{m, k}];
  if (!slot) {
    slot = std::make_unique<OperatorTable>();
    std::vector<int> v(static_cast<std::size_t>(m + 1), 0);
    while (true) {
      slot->index.emplace(encode(v), slot->ops.size());
      slot->ops.emplace_back(k, v);
      // next nondecreasing sequence in lexicographic order
      int pos = m;
      while (pos >= 0 && v[static_cast<std::size_t>(pos)] == k) --pos;
      if (pos < 0) break;
      const int next = v[static_cast<std::size_t>(pos)] + 1;
      for (int t = pos; t <= m; ++t) v[static_cast<std::size_t>(t)] = next;
    }
  }
  return *slot;
}

}  // namespace

const std::vector<SimplicialOperator>& operators_between(int m, int k) {
  return operator_table(m, k).ops;
}

std::size_t operator_index(const SimplicialOperator& op) {
  const auto& table = operator_table(op.source_dim(), op.target_dim());
  return table.index.at(encode(op.values()));
}

// ---------------------------------------------------------------------------
// Words

OperatorWord normalize_word(OperatorWord word) {
  using K = OperatorLetter::Kind;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t p = 0; p + 1 < word.size(); ++p) {
      const OperatorLetter a = word[p];
      const OperatorLetter b = word[p + 1];
      if (a.kind == K::face && b.kind == K::degeneracy) {
        const int i = a.index;
        const int j = b.index;
        if (i < j) {
          word[p] = {K::degeneracy, j - 1};
          word[p + 1] = {K::face, i};
        } else if (i == j || i == j + 1) {
          word.erase(word.begin() + static_cast<std::ptrdiff_t>(p),
                     word.begin() + static_cast<std::ptrdiff_t>(p + 2));
        } else {
          word[p] = {K::degeneracy, j};
          word[p + 1] = {K::face, i - 1};
        }
      } else if (a.kind == K::face && b.kind == K::face && a.index >= b.index) {
        word[p] = {K::face, b.index};
        word[p + 1] = {K::face, a.index + 1};
      } else if (a.kind == K::degeneracy && b.kind == K::degeneracy &&
                 a.index <= b.index) {
        word[p] = {K::degeneracy, b.index + 1};
        word[p + 1] = {K::degeneracy, a.index};
      } else {
        continue;
      }
      changed = true;
      break;
    }
  }
  return word;
}

SimplicialOperator word_operator(const OperatorWord& word, int n) {
  SimplicialOperator theta = SimplicialOperator::identity(n);
  int current = n;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (it->kind == OperatorLetter::Kind::face) {
      theta = theta.after(SimplicialOperator::coface(current, it->index));
      --current;
    } else {
      theta = theta.after(SimplicialOperator::codegeneracy(current, it->index));
      ++current;
    }
  }
  return theta;
}

std::string to_string(const OperatorWord& word) {
  std::ostringstream out;
  for (std::size_t p = 0; p < word.size(); ++p) {
    if (p != 0) out << ' ';
    out << (word[p].kind == OperatorLetter::Kind::face ? "d_" : "s_")
        << word[p].index;
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// SimplicialSet

SimplicialSet SimplicialSet::from_tables(int bound,
                                         std::vector<LevelTables> levels) {
  if (bound < 0 || levels.size() != static_cast<std::size_t>(bound + 1)) {
    throw InvalidData("level count does not match bound " +
                      std::to_string(bound));
  }
  SimplicialSet out;
  out.bound_ = bound;
  out.levels_.resize(levels.size());
  for (std::size_t k = 0; k < levels.size(); ++k) {
    auto& dst = out.levels_[k];
    static_cast<LevelTables&>(dst) = std::move(levels[k]);
    const std::size_t arity = k + 1;
    const std::size_t expected_faces = k == 0 ? 0 : dst.count * arity;
    const std::size_t expected_degens =
        k == static_cast<std::size_t>(bound) ? 0 : dst.count * arity;
    if (k == 0 && dst.faces.size() == dst.count) dst.faces.clear();
    if (dst.faces.size() != expected_faces ||
        dst.degeneracies.size() != expected_degens) {
      throw InvalidData("table sizes at level " + std::to_string(k) +
                        " do not match the simplex count");
    }
    if (k > 0) {
      const std::size_t below = out.levels_[k - 1].count;
      for (SimplexId f : dst.faces) {
        if (f >= below) {
          throw InvalidData("face pointer out of range at level " +
                            std::to_string(k));
        }
      }
    }
  }
  for (std::size_t k = 0; k + 1 < out.levels_.size(); ++k) {
    const std::size_t above = out.levels_[k + 1].count;
    for (SimplexId s : out.levels_[k].degeneracies) {
      if (s >= above) {
        throw InvalidData("degeneracy pointer out of range at level " +
                          std::to_string(k));
      }
    }
  }
  out.derive_forms();
  out.build_indexes();
  return out;
}

void SimplicialSet::derive_forms() {
  for (std::size_t k = 0; k < levels_.size(); ++k) {
    auto& level = levels_[k];
    level.base.assign(level.count, kNoSimplex);
    level.mask.assign(level.count, 0);
    if (k > 0) {
      const auto& below = levels_[k - 1];
      const int kk = static_cast<int>(k);
      for (SimplexId y = 0; y < below.count; ++y) {
        const auto op_y =
            SimplicialOperator::surjection_from_mask(kk - 1, below.mask[y]);
        for (int j = 0; j < kk; ++j) {
          const SimplexId x = below.degeneracies[y * k + static_cast<std::size_t>(j)];
          const std::uint32_t mask =
              op_y.after(SimplicialOperator::codegeneracy(kk - 1, j)).repeat_mask();
          if (level.base[x] == kNoSimplex) {
            level.base[x] = below.base[y];
            level.mask[x] = mask;
          } else if (level.base[x] != below.base[y] || level.mask[x] != mask) {
            conflicts_.push_back("simplex " + std::to_string(x) + " at level " +
                                 std::to_string(k) +
                                 " has two distinct degeneracy forms");
          }
        }
      }
    }
    level.nondegenerate.clear();
    for (SimplexId x = 0; x < level.count; ++x) {
      if (level.base[x] == kNoSimplex) {
        level.base[x] = x;
        level.nondegenerate.push_back(x);
      }
    }
  }
}

void SimplicialSet::build_indexes() {
  for (std::size_t k = 1; k < levels_.size(); ++k) {
    auto& level = levels_[k];
    const std::size_t below = levels_[k - 1].count;
    level.bucket_offsets.assign(k + 1, {});
    level.bucket_items.assign(k + 1, {});
    for (std::size_t i = 0; i <= k; ++i) {
      auto& offsets = level.bucket_offsets[i];
      auto& items = level.bucket_items[i];
      offsets.assign(below + 1, 0);
      for (SimplexId x = 0; x < level.count; ++x) {
        ++offsets[level.faces[x * (k + 1) + i] + 1];
      }
      for (std::size_t f = 0; f < below; ++f) offsets[f + 1] += offsets[f];
      items.resize(level.count);
      std::vector<std::uint32_t> cursor(offsets.begin(), offsets.end() - 1);
      for (SimplexId x = 0; x < level.count; ++x) {
        items[cursor[level.faces[x * (k + 1) + i]]++] = x;
      }
    }
  }
}

std::size_t SimplicialSet::total_size() const {
  std::size_t n = 0;
  for (const auto& level : levels_) n += level.count;
  return n;
}

std::size_t SimplicialSet::nondegenerate_count(int k) const {
  return levels_[idx(k)].nondegenerate.size();
}

std::span<const SimplexId> SimplicialSet::faces(int k, SimplexId x) const {
  const auto& f = levels_[idx(k)].faces;
  return {f.data() + x * static_cast<std::size_t>(k + 1),
          static_cast<std::size_t>(k + 1)};
}

std::vector<int> SimplicialSet::degeneracy_word(int k, SimplexId x) const {
  std::vector<int> word;
  const std::uint32_t mask = degeneracy_mask(k, x);
  for (int t = k - 1; t >= 0; --t) {
    if ((mask >> t) & 1u) word.push_back(t);
  }
  return word;
}

SimplexId SimplicialSet::act(SimplexId x, const SimplicialOperator& theta) const {
  const int m = theta.source_dim();
  if (m > bound_) return kNoSimplex;
  int dim = theta.target_dim();
  const std::vector<int> image = theta.image();
  // faces: delete the missed vertices from the top down
  for (int t = dim; t >= 0; --t) {
    if (!std::binary_search(image.begin(), image.end(), t)) {
      x = face(dim, x, t);
      --dim;
    }
  }
  const std::uint32_t mask = theta.repeat_mask();
  for (int t = 0; t < m; ++t) {
    if ((mask >> t) & 1u) {
      x = degeneracy(dim, x, t);
      ++dim;
    }
  }
  return x;
}

SimplexId SimplicialSet::degenerate_vertex(SimplexId v, int k) const {
  for (int d = 0; d < k; ++d) v = degeneracy(d, v, 0);
  return v;
}

std::span<const SimplexId> SimplicialSet::with_face(int k, int i,
                                                    SimplexId f) const {
  const auto& level = levels_[idx(k)];
  const auto& offsets = level.bucket_offsets[static_cast<std::size_t>(i)];
  const auto& items = level.bucket_items[static_cast<std::size_t>(i)];
  return {items.data() + offsets[f], offsets[f + 1] - offsets[f]};
}

const SimplicialSet::LevelTables& SimplicialSet::tables(int k) const {
  return levels_[idx(k)];
}

SimplicialSet SimplicialSet::truncated(int new_bound) const {
  assert(new_bound <= bound_);
  std::vector<LevelTables> levels;
  for (int k = 0; k <= new_bound; ++k) levels.push_back(tables(k));
  levels.back().degeneracies.clear();
  return from_tables(new_bound, std::move(levels));
}

bool operator==(const SimplicialSet& a, const SimplicialSet& b) {
  if (a.bound_ != b.bound_) return false;
  for (std::size_t k = 0; k < a.levels_.size(); ++k) {
    const auto& la = a.levels_[k];
    const auto& lb = b.levels_[k];
    if (la.count != lb.count || la.faces != lb.faces ||
        la.degeneracies != lb.degeneracies) {
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// SimplicialMap

SimplicialMap::SimplicialMap(SimplicialSetPtr source, SimplicialSetPtr target,
                             std::vector<std::vector<SimplexId>> images)
    : source_(std::move(source)),
      target_(std::move(target)),
      images_(std::move(images)) {
  if (source_->bound() != target_->bound()) {
    throw BoundMismatch("map between bounds " +
                        std::to_string(source_->bound()) + " and " +
                        std::to_string(target_->bound()));
  }
  if (images_.size() != static_cast<std::size_t>(source_->bound() + 1)) {
    throw InvalidData("map has the wrong number of levels");
  }
  for (int k = 0; k <= source_->bound(); ++k) {
    const auto& lvl = images_[static_cast<std::size_t>(k)];
    if (lvl.size() != source_->size(k)) {
      throw InvalidData("map level " + std::to_string(k) + " has wrong size");
    }
    for (SimplexId y : lvl) {
      if (y >= target_->size(k)) {
        throw InvalidData("map image out of range at level " +
                          std::to_string(k));
      }
    }
  }
}

SimplicialMap SimplicialMap::identity(const SimplicialSetPtr& space) {
  std::vector<std::vector<SimplexId>> images;
  for (int k = 0; k <= space->bound(); ++k) {
    std::vector<SimplexId> lvl(space->size(k));
    for (SimplexId x = 0; x < lvl.size(); ++x) lvl[x] = x;
    images.push_back(std::move(lvl));
  }
  return {space, space, std::move(images)};
}

SimplicialMap SimplicialMap::constant(const SimplicialSetPtr& source,
                                      const SimplicialSetPtr& target,
                                      SimplexId v) {
  std::vector<std::vector<SimplexId>> images;
  for (int k = 0; k <= source->bound(); ++k) {
    images.emplace_back(source->size(k), target->degenerate_vertex(v, k));
  }
  return {source, target, std::move(images)};
}

SimplicialMap SimplicialMap::after(const SimplicialMap& first) const {
  std::vector<std::vector<SimplexId>> images;
  for (int k = 0; k <= bound(); ++k) {
    std::vector<SimplexId> lvl;
    lvl.reserve(first.level(k).size());
    for (SimplexId y : first.level(k)) lvl.push_back((*this)(k, y));
    images.push_back(std::move(lvl));
  }
  return {first.source_ptr(), target_, std::move(images)};
}

std::string SimplicialMap::check() const {
  for (int k = 0; k <= bound(); ++k) {
    for (SimplexId x = 0; x < source_->size(k); ++x) {
      const SimplexId fx = (*this)(k, x);
      for (int i = 0; k > 0 && i <= k; ++i) {
        if ((*this)(k - 1, source_->face(k, x, i)) != target_->face(k, fx, i)) {
          return "map does not commute with d_" + std::to_string(i) +
                 " at simplex " + std::to_string(x) + " of level " +
                 std::to_string(k);
        }
      }
      for (int i = 0; k < bound() && i <= k; ++i) {
        if ((*this)(k + 1, source_->degeneracy(k, x, i)) !=
            target_->degeneracy(k, fx, i)) {
          return "map does not commute with s_" + std::to_string(i) +
                 " at simplex " + std::to_string(x) + " of level " +
                 std::to_string(k);
        }
      }
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// Validation

std::string ValidationReport::summary(std::size_t max_lines) const {
  if (valid()) return "valid";
  std::ostringstream out;
  out << violations.size() << " violated identities";
  for (std::size_t n = 0; n < violations.size() && n < max_lines; ++n) {
    const auto& v = violations[n];
    out << "\n  " << v.identity << " at simplex " << v.simplex
        << " of dimension " << v.dimension;
  }
  return out.str();
}

namespace {

std::string dd_name(int i, int j) {
  return "d_" + std::to_string(i) + " d_" + std::to_string(j) + " = d_" +
         std::to_string(j - 1) + " d_" + std::to_string(i);
}

}  // namespace

ValidationReport validate_identities(const SimplicialSet& data) {
  ValidationReport report;
  auto fail = [&](std::string name, int k, SimplexId x, int i, int j) {
    report.violations.push_back({std::move(name), k, x, i, j});
  };
  const int bound = data.bound();
  for (int k = 0; k <= bound; ++k) {
    for (SimplexId x = 0; x < data.size(k); ++x) {
      // d_i d_j = d_{j-1} d_i for i < j
      for (int j = 1; k >= 2 && j <= k; ++j) {
        for (int i = 0; i < j; ++i) {
          const SimplexId lhs = data.face(k - 1, data.face(k, x, j), i);
          const SimplexId rhs = data.face(k - 1, data.face(k, x, i), j - 1);
          if (lhs != rhs) fail(dd_name(i, j), k, x, i, j);
        }
      }
      if (k + 1 > bound) continue;
      // d_i s_j
      for (int j = 0; j <= k; ++j) {
        const SimplexId sx = data.degeneracy(k, x, j);
        for (int i = 0; i <= k + 1; ++i) {
          const SimplexId lhs = data.face(k + 1, sx, i);
          SimplexId rhs = kNoSimplex;
          std::string name;
          if (i < j) {
            rhs = data.degeneracy(k - 1, data.face(k, x, i), j - 1);
            name = "d_" + std::to_string(i) + " s_" + std::to_string(j) +
                   " = s_" + std::to_string(j - 1) + " d_" + std::to_string(i);
          } else if (i == j || i == j + 1) {
            rhs = x;
            name = "d_" + std::to_string(i) + " s_" + std::to_string(j) + " = id";
          } else {
            rhs = data.degeneracy(k - 1, data.face(k, x, i - 1), j);
            name = "d_" + std::to_string(i) + " s_" + std::to_string(j) +
                   " = s_" + std::to_string(j) + " d_" + std::to_string(i - 1);
          }
          if (lhs != rhs) fail(std::move(name), k + 1, sx, i, j);
        }
      }
      // s_i s_j = s_{j+1} s_i for i <= j
      if (k + 2 > bound) continue;
      for (int j = 0; j <= k; ++j) {
        for (int i = 0; i <= j; ++i) {
          const SimplexId lhs = data.degeneracy(k + 1, data.degeneracy(k, x, j), i);
          const SimplexId rhs =
              data.degeneracy(k + 1, data.degeneracy(k, x, i), j + 1);
          if (lhs != rhs) {
            fail("s_" + std::to_string(i) + " s_" + std::to_string(j) + " = s_" +
                     std::to_string(j + 1) + " s_" + std::to_string(i),
                 k + 2, lhs, i, j);
          }
        }
      }
    }
  }
  for (const auto& conflict : data.ez_conflicts()) {
    fail("Eilenberg-Zilber form: " + conflict, 0, 0, 0, 0);
  }
  return report;
}

}  // namespace tcs
