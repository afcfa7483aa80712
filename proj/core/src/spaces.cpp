#include "tcs/spaces.hpp"

#include <map>
#include <unordered_map>

#include "tcs/coskeleton.hpp"
#include "tcs/domains.hpp"
#include "tcs/errors.hpp"
#include "tcs/hashing.hpp"
#include "tcs/limits.hpp"
#include "tcs/mapping.hpp"
#include "tcs/products.hpp"

namespace tcs {

BoundedKanComplex discrete(std::size_t n) { return require_kan(share(discrete_set(n, 1))); }

BoundedKanComplex point(int bound) { return require_kan(share(standard_simplex(0, bound))); }

BoundedKanComplex nerve_groupoid(const FiniteGroupoid& g) {
  const int n = g.morphism_count();
  std::vector<SimplicialSet::LevelTables> levels(3);
  std::vector<SimplexId> pair_id(static_cast<std::size_t>(n) * static_cast<std::size_t>(n),
                                 kNoSimplex);
  std::vector<std::pair<int, int>> pairs;
  for (int f = 0; f < n; ++f) {
    for (int h = 0; h < n; ++h) {
      if (g.compose(f, h) < 0) continue;
      pair_id[static_cast<std::size_t>(f * n + h)] = static_cast<SimplexId>(pairs.size());
      pairs.emplace_back(f, h);
    }
  }
  Deadline("nerve").check_size(pairs.size(), "nerve level");
  auto pair_of = [&](int f, int h) { return pair_id[static_cast<std::size_t>(f * n + h)]; };

  auto& l0 = levels[0];
  l0.count = static_cast<std::size_t>(g.objects());
  for (int x = 0; x < g.objects(); ++x) l0.degeneracies.push_back(static_cast<SimplexId>(g.identity(x)));
  auto& l1 = levels[1];
  l1.count = static_cast<std::size_t>(n);
  for (int f = 0; f < n; ++f) {
    const auto& m = g.morphism(f);
    l1.faces.push_back(static_cast<SimplexId>(m.target));
    l1.faces.push_back(static_cast<SimplexId>(m.source));
    l1.degeneracies.push_back(pair_of(g.identity(m.source), f));
    l1.degeneracies.push_back(pair_of(f, g.identity(m.target)));
  }
  auto& l2 = levels[2];
  l2.count = pairs.size();
  for (auto [f, h] : pairs) {
    l2.faces.push_back(static_cast<SimplexId>(h));
    l2.faces.push_back(static_cast<SimplexId>(g.compose(f, h)));
    l2.faces.push_back(static_cast<SimplexId>(f));
  }
  return require_kan(share(SimplicialSet::from_tables(2, std::move(levels))));
}

BoundedKanComplex classifying_space(const FiniteGroup& g) {
  return nerve_groupoid(FiniteGroupoid::from_group(g));
}

// ---------------------------------------------------------------------------
// Eilenberg-MacLane spaces

namespace {

/// Injective operators [n] -> [q] with a lookup by value list.
struct Subsets {
  std::vector<SimplicialOperator> ops;
  std::map<std::vector<int>, int> index;
};

Subsets injective_operators(int n, int q) {
  Subsets s;
  for (const auto& op : operators_between(n, q)) {
    if (!op.is_injective()) continue;
    s.index[op.values()] = static_cast<int>(s.ops.size());
    s.ops.push_back(op);
  }
  return s;
}

bool is_cocycle(const FiniteGroup& g, int n, const Subsets& cells,
                const std::vector<SimplicialOperator>& tops, const std::vector<int>& c) {
  for (const auto& t : tops) {
    auto value_of_face = [&](int i) {
      return c[static_cast<std::size_t>(
          cells.index.at(t.after(SimplicialOperator::coface(n + 1, i)).values()))];
    };
    if (n == 1) {
      // c(a, c) = c(a, b) c(b, c)
      if (value_of_face(1) != g.multiply(value_of_face(2), value_of_face(0))) return false;
      continue;
    }
    int sum = g.identity();
    for (int i = 0; i <= n + 1; ++i) {
      const int v = value_of_face(i);
      sum = g.multiply(sum, i % 2 == 0 ? v : g.inverse(v));
    }
    if (sum != g.identity()) return false;
  }
  return true;
}

}  // namespace

BoundedKanComplex eilenberg_maclane(const FiniteGroup& g, int n) {
  if (n < 1) throw InvalidData("K(G, n) needs n >= 1");
  if (n >= 2 && !g.is_abelian()) {
    throw NonAbelian("K(" + g.label() + ", " + std::to_string(n) +
                     ") needs an abelian group");
  }
  const int bound = n + 1;
  Deadline deadline("eilenberg_maclane");
  std::vector<Subsets> cells;
  std::vector<std::vector<std::vector<int>>> elements(static_cast<std::size_t>(bound + 1));
  std::vector<std::map<std::vector<int>, SimplexId>> ids(static_cast<std::size_t>(bound + 1));
  for (int q = 0; q <= bound; ++q) {
    cells.push_back(injective_operators(n, q));
    std::vector<SimplicialOperator> tops;
    for (const auto& op : operators_between(n + 1, q)) {
      if (op.is_injective()) tops.push_back(op);
    }
    const auto width = cells.back().ops.size();
    std::vector<int> c(width, 0);
    // odometer over G^width
    while (true) {
      deadline.check();
      if (is_cocycle(g, n, cells.back(), tops, c)) {
        ids[static_cast<std::size_t>(q)].emplace(
            c, static_cast<SimplexId>(elements[static_cast<std::size_t>(q)].size()));
        elements[static_cast<std::size_t>(q)].push_back(c);
        deadline.check_size(elements[static_cast<std::size_t>(q)].size(), "cocycle level");
      }
      std::size_t pos = 0;
      while (pos < width && ++c[pos] == g.size()) c[pos++] = 0;
      if (pos == width) break;
    }
  }
  // translate identity index: cocycles are stored with values as element ids,
  // and "zero" must be the group identity
  if (g.identity() != 0) {
    throw InvalidData("K(G, n) expects the identity to be element 0");
  }
  std::vector<SimplicialSet::LevelTables> levels(static_cast<std::size_t>(bound + 1));
  for (int q = 0; q <= bound; ++q) {
    auto& t = levels[static_cast<std::size_t>(q)];
    const auto& lvl = elements[static_cast<std::size_t>(q)];
    t.count = lvl.size();
    for (const auto& c : lvl) {
      for (int i = 0; q > 0 && i <= q; ++i) {
        const auto delta = SimplicialOperator::coface(q, i);
        const auto& below = cells[static_cast<std::size_t>(q - 1)];
        std::vector<int> face;
        for (const auto& op : below.ops) {
          face.push_back(c[static_cast<std::size_t>(
              cells[static_cast<std::size_t>(q)].index.at(delta.after(op).values()))]);
        }
        t.faces.push_back(ids[static_cast<std::size_t>(q - 1)].at(face));
      }
      for (int j = 0; q < bound && j <= q; ++j) {
        const auto sigma = SimplicialOperator::codegeneracy(q, j);
        const auto& above = cells[static_cast<std::size_t>(q + 1)];
        std::vector<int> lifted;
        for (const auto& op : above.ops) {
          const auto image = sigma.after(op);
          lifted.push_back(image.is_injective()
                               ? c[static_cast<std::size_t>(
                                     cells[static_cast<std::size_t>(q)].index.at(image.values()))]
                               : g.identity());
        }
        t.degeneracies.push_back(ids[static_cast<std::size_t>(q + 1)].at(lifted));
      }
    }
  }
  return require_kan(share(SimplicialSet::from_tables(bound, std::move(levels))));
}

// ---------------------------------------------------------------------------
// Path spaces and pullbacks

FibrantReplacement fibrant_replace(const SimplicialMap& f) {
  const auto& y = f.target();
  const int bound = f.bound();
  SectionProblem problem;
  problem.params = f.source_ptr();
  problem.ambient = share(standard_simplex(1, bound));
  problem.target = f.target_ptr();
  problem.fixed = [&](int k, SimplexId x, int, SimplexId a,
                      const SimplicialOperator& theta) -> SimplexId {
    return a == 0 ? y.act(f(k, x), theta) : kNoSimplex;
  };
  auto sections = std::make_shared<const SectionSpace>(problem);
  const auto& total = sections->space();

  std::vector<std::vector<SimplexId>> far_end(static_cast<std::size_t>(bound + 1));
  for (int k = 0; k <= bound; ++k) {
    auto& lvl = far_end[static_cast<std::size_t>(k)];
    for (SimplexId e = 0; e < total->size(k); ++e) {
      lvl.push_back(sections->evaluate(k, e, static_cast<SimplexId>(k + 1)));
    }
  }
  std::vector<std::vector<SimplexId>> constant_paths(static_cast<std::size_t>(bound + 1));
  const auto& interval = *sections->ambient();
  for (int k = 0; k <= bound; ++k) {
    std::vector<SimplexId> flat(sections->stride(k), kNoSimplex);
    for (SimplexId x = 0; x < f.source().size(k); ++x) {
      for (int m = 0; m <= bound; ++m) {
        for (const auto& theta : operators_between(m, k)) {
          const SimplexId image = y.act(f(k, x), theta);
          for (SimplexId a = 0; a < interval.size(m); ++a) {
            flat[sections->flat_index(k, a, theta)] = image;
          }
        }
      }
      const SimplexId id = sections->find(k, x, flat);
      if (id == kNoSimplex) throw InvalidData("constant path missing from path space");
      constant_paths[static_cast<std::size_t>(k)].push_back(id);
    }
  }
  return {sections->complex(), SimplicialMap(total, f.target_ptr(), std::move(far_end)),
          SimplicialMap(f.source_ptr(), total, std::move(constant_paths)),
          sections->projection()};
}

HomotopyPullback homotopy_pullback(const SimplicialMap& f, const SimplicialMap& g) {
  if (f.bound() != g.bound()) {
    throw BoundMismatch("homotopy pullback of maps at bounds " + std::to_string(f.bound()) +
                        " and " + std::to_string(g.bound()));
  }
  if (f.target_ptr() != g.target_ptr() && !(f.target() == g.target())) {
    throw InvalidData("homotopy pullback of maps with different targets");
  }
  // Triples (x, path, z) with the path running from f(x) to g(z): the strict
  // pullback along g of the fibrant replacement of f, built in one pass.
  const auto& y = f.target();
  const int bound = f.bound();
  auto pairs = product_data(f.source_ptr(), g.source_ptr());
  SectionProblem problem;
  problem.params = pairs.space;
  problem.ambient = share(standard_simplex(1, bound));
  problem.target = f.target_ptr();
  problem.fixed = [&](int k, SimplexId p, int m, SimplexId a,
                      const SimplicialOperator& theta) -> SimplexId {
    if (a == 0) return y.act(f(k, pairs.first(k, p)), theta);
    if (a == static_cast<SimplexId>(m + 1)) return y.act(g(k, pairs.second(k, p)), theta);
    return kNoSimplex;
  };
  SectionSpace sections(problem);
  return {sections.complex(), pairs.first.after(sections.projection()),
          pairs.second.after(sections.projection())};
}

HomotopyPullback homotopy_fiber(const SimplicialMap& f, SimplexId y) {
  auto pt = share(standard_simplex(0, f.bound()));
  return homotopy_pullback(f, SimplicialMap::constant(pt, f.target_ptr(), y));
}

BoundedKanComplex loop_space(const BoundedKanComplex& x, SimplexId basepoint) {
  if (basepoint >= x.data().size(0)) throw InvalidData("basepoint is not a vertex");
  auto pt = share(standard_simplex(0, x.bound()));
  auto c = SimplicialMap::constant(pt, x.ptr(), basepoint);
  return homotopy_pullback(c, c).space;
}

// ---------------------------------------------------------------------------
// Group actions and the Borel construction

GroupAction::GroupAction(FiniteGroup group, BoundedKanComplex space,
                         std::vector<std::vector<std::vector<SimplexId>>> action)
    : group_(std::move(group)), space_(std::move(space)), action_(std::move(action)) {
  const auto& x = space_.data();
  const int bound = x.bound();
  if (static_cast<int>(action_.size()) != group_.size()) {
    throw InvalidData("action table needs one entry per group element");
  }
  for (int g = 0; g < group_.size(); ++g) {
    if (static_cast<int>(action_[g].size()) != bound + 1) {
      throw InvalidData("action table needs one row per level 0.." + std::to_string(bound));
    }
    for (int k = 0; k <= bound; ++k) {
      const auto& row = action_[g][static_cast<std::size_t>(k)];
      if (row.size() != x.size(k)) throw InvalidData("action row has the wrong length");
      for (SimplexId v : row) {
        if (v >= x.size(k)) throw InvalidData("action entry out of range");
      }
    }
  }
  for (int k = 0; k <= bound; ++k) {
    for (SimplexId s = 0; s < x.size(k); ++s) {
      if (act(group_.identity(), k, s) != s) {
        throw InvalidData("identity does not act trivially");
      }
      for (int g = 0; g < group_.size(); ++g) {
        for (int h = 0; h < group_.size(); ++h) {
          if (act(g, k, act(h, k, s)) != act(group_.multiply(g, h), k, s)) {
            throw InvalidData("action is not compatible with multiplication");
          }
        }
        for (int i = 0; k > 0 && i <= k; ++i) {
          if (x.face(k, act(g, k, s), i) != act(g, k - 1, x.face(k, s, i))) {
            throw InvalidData("group element " + group_.elements()[g] +
                              " does not commute with d_" + std::to_string(i));
          }
        }
        for (int j = 0; k < bound && j <= k; ++j) {
          if (x.degeneracy(k, act(g, k, s), j) != act(g, k + 1, x.degeneracy(k, s, j))) {
            throw InvalidData("group element " + group_.elements()[g] +
                              " does not commute with s_" + std::to_string(j));
          }
        }
      }
    }
  }
}

namespace {

/// Extends a per-vertex (or lower-level) action to level k of x by
/// matching faces; degenerate simplices follow their base.
std::vector<SimplexId> extend_action_level(const SimplicialSet& x, int k,
                                           const std::vector<SimplexId>& below) {
  std::vector<SimplexId> out(x.size(k), kNoSimplex);
  std::vector<SimplexId> faces(static_cast<std::size_t>(k + 1));
  for (SimplexId s = 0; s < x.size(k); ++s) {
    for (int i = 0; i <= k; ++i) faces[static_cast<std::size_t>(i)] = below[x.face(k, s, i)];
    auto matches = simplices_with_faces(x, k, faces);
    if (matches.size() != 1) {
      throw InvalidData("action on lower simplices does not determine level " +
                        std::to_string(k));
    }
    out[s] = matches.front();
  }
  return out;
}

}  // namespace

GroupAction GroupAction::on_vertices(FiniteGroup group, BoundedKanComplex space,
                                     const std::vector<std::vector<SimplexId>>& vertex_action) {
  std::vector<std::vector<std::vector<SimplexId>>> table;
  for (const auto& v : vertex_action) {
    std::vector<std::vector<SimplexId>> levels{v};
    for (int k = 1; k <= space.bound(); ++k) {
      levels.push_back(extend_action_level(space.data(), k, levels.back()));
    }
    table.push_back(std::move(levels));
  }
  return {std::move(group), std::move(space), std::move(table)};
}

GroupAction GroupAction::trivial(FiniteGroup group, BoundedKanComplex space) {
  std::vector<std::vector<std::vector<SimplexId>>> table(static_cast<std::size_t>(group.size()));
  for (auto& levels : table) {
    for (int k = 0; k <= space.bound(); ++k) {
      std::vector<SimplexId> row(space.data().size(k));
      for (SimplexId s = 0; s < row.size(); ++s) row[s] = s;
      levels.push_back(std::move(row));
    }
  }
  return {std::move(group), std::move(space), std::move(table)};
}

GroupAction GroupAction::raised(int bound) const {
  if (bound <= space_.bound()) return *this;
  auto space = raise_bound(space_, bound);
  auto table = action_;
  for (auto& levels : table) {
    for (int k = space_.bound() + 1; k <= bound; ++k) {
      levels.push_back(extend_action_level(space.data(), k, levels.back()));
    }
  }
  return {group_, std::move(space), std::move(table)};
}

BoundedKanComplex homotopy_quotient(const GroupAction& a) {
  const int m = std::max(a.space().bound() - 1, 1);
  auto source = [&](int top) -> SimplicialSetPtr {
    const auto action = a.raised(top);
    const auto& x = action.space().data();
    const auto& g = action.group();
    const auto order = static_cast<std::size_t>(g.size());
    Deadline deadline("homotopy_quotient");
    std::vector<std::size_t> words(static_cast<std::size_t>(top + 2), 1);
    for (int k = 1; k <= top + 1; ++k) words[static_cast<std::size_t>(k)] = words[k - 1] * order;

    std::vector<SimplicialSet::LevelTables> levels(static_cast<std::size_t>(top + 1));
    std::vector<int> word;
    auto encode = [&](const std::vector<int>& w, int k, SimplexId s) {
      std::size_t index = 0;
      for (int v : w) index = index * order + static_cast<std::size_t>(v);
      return static_cast<SimplexId>(index * x.size(k) + s);
    };
    for (int k = 0; k <= top; ++k) {
      auto& t = levels[static_cast<std::size_t>(k)];
      const std::size_t nx = x.size(k);
      t.count = words[static_cast<std::size_t>(k)] * nx;
      deadline.check_size(t.count, "quotient level");
      for (std::size_t id = 0; id < t.count; ++id) {
        deadline.check();
        std::size_t w = id / nx;
        const auto s = static_cast<SimplexId>(id % nx);
        word.assign(static_cast<std::size_t>(k), 0);
        for (int i = k - 1; i >= 0; --i) {
          word[static_cast<std::size_t>(i)] = static_cast<int>(w % order);
          w /= order;
        }
        for (int i = 0; k > 0 && i <= k; ++i) {
          std::vector<int> face;
          SimplexId xs = x.face(k, s, i);
          if (i == 0) {
            face.assign(word.begin() + 1, word.end());
            xs = action.act(g.inverse(word[0]), k - 1, xs);
          } else if (i == k) {
            face.assign(word.begin(), word.end() - 1);
          } else {
            face.assign(word.begin(), word.begin() + (i - 1));
            face.push_back(g.multiply(word[static_cast<std::size_t>(i - 1)],
                                      word[static_cast<std::size_t>(i)]));
            face.insert(face.end(), word.begin() + (i + 1), word.end());
          }
          t.faces.push_back(encode(face, k - 1, xs));
        }
        for (int j = 0; k < top && j <= k; ++j) {
          std::vector<int> lifted(word.begin(), word.begin() + j);
          lifted.push_back(g.identity());
          lifted.insert(lifted.end(), word.begin() + j, word.end());
          t.degeneracies.push_back(encode(lifted, k + 1, x.degeneracy(k, s, j)));
        }
      }
    }
    return share(SimplicialSet::from_tables(top, std::move(levels)));
  };
  return rebound_truncated(source, m);
}

SimplicialMap quotient_map(const GroupAction& a, const BoundedKanComplex& quotient) {
  const int bound = quotient.bound();
  const auto action = a.raised(bound);
  const auto& x = action.space().data();
  const auto order = static_cast<std::size_t>(action.group().size());
  const auto e = static_cast<std::size_t>(action.group().identity());
  std::vector<std::vector<SimplexId>> images(static_cast<std::size_t>(bound + 1));
  std::size_t word = 0;  // index of the word (e, .., e) of length k
  for (int k = 0; k <= bound; ++k) {
    if (k > 0) word = word * order + e;
    for (SimplexId s = 0; s < x.size(k); ++s) {
      images[static_cast<std::size_t>(k)].push_back(static_cast<SimplexId>(word * x.size(k) + s));
    }
  }
  return {action.space().ptr(), quotient.ptr(), std::move(images)};
}

// ---------------------------------------------------------------------------

DependentProduct dependent_product(const SimplicialMap& p, const SimplicialMap& f) {
  if (p.bound() != f.bound()) throw BoundMismatch("dependent product: maps at different bounds");
  if (p.target_ptr() != f.source_ptr() && !(p.target() == f.source())) {
    throw InvalidData("dependent product: p must land in the source of f");
  }
  for (const auto* map : {&p, &f}) {
    auto r = is_fibration(*map);
    if (!r.fibration) {
      throw NotFibration("dependent product needs fibrations; lifting problem " +
                         (r.counterexample ? r.counterexample->describe() : std::string()));
    }
  }
  const auto& y = f.target();
  SectionProblem problem;
  problem.params = f.target_ptr();
  problem.ambient = f.source_ptr();
  problem.target = p.source_ptr();
  problem.in_domain = [&](int, SimplexId s, int m, SimplexId x,
                          const SimplicialOperator& theta) { return y.act(s, theta) == f(m, x); };
  problem.over = &p;
  problem.required = [](int, SimplexId, int, SimplexId x, const SimplicialOperator&) { return x; };
  SectionSpace sections(problem);
  return {sections.complex(), sections.projection()};
}

BoundedKanComplex symmetric_universe(int n) {
  if (n < 0) throw InvalidData("symmetric universe needs n >= 0");
  if (n > limits().universe_cap) {
    throw SizeCapExceeded("symmetric universe of size " + std::to_string(n) +
                          " exceeds the cap " + std::to_string(limits().universe_cap));
  }
  BoundedKanComplex result = classifying_space(FiniteGroup::symmetric(0));
  for (int k = 1; k <= n; ++k) {
    result = coproduct(result, classifying_space(FiniteGroup::symmetric(k)));
  }
  return result;
}

}  // namespace tcs
