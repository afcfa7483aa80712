#include "tcs/invariants.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "tcs/coskeleton.hpp"
#include "tcs/domains.hpp"
#include "tcs/errors.hpp"
#include "tcs/limits.hpp"
#include "tcs/mapping.hpp"
#include "tcs/products.hpp"
#include "tcs/spaces.hpp"

namespace tcs {

namespace {

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::size_t> parent;
};

}  // namespace

int Components::of_simplex(const SimplicialSet& x, int k, SimplexId s) const {
  for (int level = k; level > 0; --level) s = x.face(level, s, 0);
  return of_vertex[s];
}

Components pi0(const SimplicialSet& x) {
  const std::size_t n = x.size(0);
  UnionFind uf(n);
  if (x.bound() >= 1) {
    for (SimplexId e = 0; e < x.size(1); ++e) uf.unite(x.face(1, e, 0), x.face(1, e, 1));
  }
  Components c;
  c.of_vertex.assign(n, -1);
  for (SimplexId v = 0; v < n; ++v) {
    const auto root = uf.find(v);
    if (root == v) {
      c.of_vertex[v] = static_cast<int>(c.basepoints.size());
      c.basepoints.push_back(v);
    } else {
      c.of_vertex[v] = c.of_vertex[root];
    }
  }
  return c;
}

// ---------------------------------------------------------------------------
// Homotopy groups

int HomotopyGroup::class_of(SimplexId sphere) const {
  if (spheres_.empty()) return 0;  // degree >= bound: every sphere is trivial
  auto it = std::lower_bound(spheres_.begin(), spheres_.end(), sphere);
  if (it == spheres_.end() || *it != sphere) return -1;
  return sphere_class_[static_cast<std::size_t>(it - spheres_.begin())];
}

struct HomotopyGroupBuilder {
  static HomotopyGroup build(const SimplicialSet& x, SimplexId v, int n) {
    if (v >= x.size(0)) throw InvalidData("basepoint " + std::to_string(v) + " is not a vertex");
    HomotopyGroup g;
    g.degree_ = n;
    g.basepoint_ = v;
    if (n == 0) {
      g.representatives_ = pi0(x).basepoints;
      return g;
    }
    if (n < 0) throw InvalidData("homotopy group degree must be >= 0");
    if (n >= x.bound()) {
      g.representatives_.push_back(n <= x.bound() ? x.degenerate_vertex(v, n) : kNoSimplex);
      g.group_ = FiniteGroup::trivial();
      return g;
    }
    Deadline deadline("pi_n");
    const SimplexId below = x.degenerate_vertex(v, n - 1);
    const SimplexId base = x.degenerate_vertex(v, n);
    for (SimplexId s : x.with_face(n, 0, below)) {
      bool spherical = true;
      for (int i = 1; i <= n && spherical; ++i) spherical = x.face(n, s, i) == below;
      if (spherical) g.spheres_.push_back(s);
    }
    std::sort(g.spheres_.begin(), g.spheres_.end());
    auto index = [&](SimplexId s) {
      return static_cast<std::size_t>(
          std::lower_bound(g.spheres_.begin(), g.spheres_.end(), s) - g.spheres_.begin());
    };
    UnionFind uf(g.spheres_.size());
    std::unordered_set<std::uint64_t> related;
    auto is_base_below = [&](SimplexId z, int upto) {
      for (int i = 0; i < upto; ++i) {
        if (x.face(n + 1, z, i) != base) return false;
      }
      return true;
    };
    for (SimplexId t : g.spheres_) {
      for (SimplexId z : x.with_face(n + 1, n + 1, t)) {
        deadline.check();
        if (!is_base_below(z, n)) continue;
        const SimplexId s = x.face(n + 1, z, n);
        related.insert((static_cast<std::uint64_t>(s) << 32) | t);
        uf.unite(index(s), index(t));
      }
    }
    // number the classes: the trivial class first, then by least member
    std::vector<int> class_of_root(g.spheres_.size(), -1);
    const auto base_root = uf.find(index(base));
    class_of_root[base_root] = 0;
    g.representatives_.push_back(base);
    for (std::size_t i = 0; i < g.spheres_.size(); ++i) {
      const auto root = uf.find(i);
      if (class_of_root[root] < 0) {
        class_of_root[root] = static_cast<int>(g.representatives_.size());
        g.representatives_.push_back(g.spheres_[i]);
      }
      g.sphere_class_.push_back(class_of_root[root]);
    }
    // the relation is an equivalence relation on a Kan complex; verify
    std::vector<std::vector<SimplexId>> members(g.representatives_.size());
    for (std::size_t i = 0; i < g.spheres_.size(); ++i) {
      members[static_cast<std::size_t>(g.sphere_class_[i])].push_back(g.spheres_[i]);
    }
    for (const auto& m : members) {
      for (SimplexId s : m) {
        for (SimplexId t : m) {
          deadline.check();
          if (!related.count((static_cast<std::uint64_t>(s) << 32) | t)) {
            throw InvalidData("homotopy relation on " + std::to_string(n) +
                              "-spheres is not transitive; the complex is not Kan");
          }
        }
      }
    }
    const std::size_t order = g.representatives_.size();
    std::vector<std::vector<int>> table(order, std::vector<int>(order, -1));
    for (std::size_t a = 0; a < order; ++a) {
      for (std::size_t b = 0; b < order; ++b) {
        const SimplexId ra = g.representatives_[a];
        const SimplexId rb = g.representatives_[b];
        for (SimplexId z : x.with_face(n + 1, n + 1, ra)) {
          deadline.check();
          if (x.face(n + 1, z, n - 1) != rb || !is_base_below(z, n - 1)) continue;
          table[a][b] = g.class_of(x.face(n + 1, z, n));
          break;
        }
        if (table[a][b] < 0) {
          throw InvalidData("no filler for a product of " + std::to_string(n) +
                            "-spheres; the complex is not Kan");
        }
      }
    }
    std::vector<std::string> names;
    for (SimplexId r : g.representatives_) names.push_back("[" + std::to_string(r) + "]");
    g.group_ = FiniteGroup(std::move(names), std::move(table));
    return g;
  }
};

HomotopyGroup pi_n(const SimplicialSet& x, SimplexId basepoint, int n) {
  return HomotopyGroupBuilder::build(x, basepoint, n);
}

HomotopyGroup pi_n(const BoundedKanComplex& x, SimplexId basepoint, int n) {
  return HomotopyGroupBuilder::build(x.data(), basepoint, n);
}

// ---------------------------------------------------------------------------

std::string HomotopyCardinality::str() const {
  const auto num = boost::multiprecision::numerator(value);
  const auto den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

HomotopyCardinality homotopy_cardinality(const BoundedKanComplex& x) {
  const auto comps = pi0(x);
  Rational total = 0;
  for (SimplexId b : comps.basepoints) {
    Rational term = 1;
    for (int i = 1; i < x.bound(); ++i) {
      const auto order = static_cast<long long>(pi_n(x, b, i).order());
      if (i % 2 == 0) {
        term *= order;
      } else {
        term /= order;
      }
    }
    total += term;
  }
  return {total};
}

// ---------------------------------------------------------------------------
// Equivalences

namespace {

/// The map pi_n(X) -> pi_n(Y) induced by a level-n image table, or a
/// reason it is not an isomorphism.
std::string induced_isomorphism(const HomotopyGroup& gx, const HomotopyGroup& gy,
                                const std::vector<SimplexId>& level_n) {
  if (gx.order() != gy.order()) {
    return "pi_" + std::to_string(gx.degree()) + " has order " + std::to_string(gx.order()) +
           " vs " + std::to_string(gy.order());
  }
  if (gx.order() == 1) return {};
  std::vector<int> map;
  std::vector<bool> hit(gy.order(), false);
  for (SimplexId r : gx.representatives()) {
    const int c = gy.class_of(level_n[r]);
    if (c < 0) return "image of a sphere is not spherical";
    if (hit[static_cast<std::size_t>(c)]) {
      return "pi_" + std::to_string(gx.degree()) + " is not injective";
    }
    hit[static_cast<std::size_t>(c)] = true;
    map.push_back(c);
  }
  if (!is_homomorphism(gx.group(), gy.group(), map)) {
    return "pi_" + std::to_string(gx.degree()) + " map is not a homomorphism";
  }
  return {};
}

}  // namespace

EquivalenceCheck is_equivalence(const SimplicialMap& f) {
  const auto& x = f.source();
  const auto& y = f.target();
  if (x.bound() != y.bound()) throw BoundMismatch("is_equivalence: bounds differ");
  const auto cx = pi0(x);
  const auto cy = pi0(y);
  if (cx.count() != cy.count()) {
    return {false, "pi_0 has " + std::to_string(cx.count()) + " vs " +
                       std::to_string(cy.count()) + " elements"};
  }
  std::vector<bool> hit(cy.count(), false);
  for (SimplexId b : cx.basepoints) {
    const int d = cy.of_vertex[f(0, b)];
    if (hit[static_cast<std::size_t>(d)]) return {false, "pi_0 is not injective"};
    hit[static_cast<std::size_t>(d)] = true;
  }
  for (SimplexId b : cx.basepoints) {
    for (int n = 1; n < x.bound(); ++n) {
      const auto why = induced_isomorphism(pi_n(x, b, n), pi_n(y, f(0, b), n), f.level(n));
      if (!why.empty()) {
        return {false, why + " at basepoint " + std::to_string(b)};
      }
    }
  }
  return {true, {}};
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::yes:
      return "equivalent";
    case Verdict::no:
      return "not-equivalent";
    case Verdict::inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

EquivalenceDecision are_equivalent(const BoundedKanComplex& x0, const BoundedKanComplex& y0) {
  EquivalenceDecision out;
  try {
    auto [x, y] = equalize_bounds(x0, y0);
    const int bound = x.bound();
    const auto cx = pi0(x);
    const auto cy = pi0(y);
    if (cx.count() != cy.count()) {
      out.verdict = Verdict::no;
      out.reason = "pi_0 has " + std::to_string(cx.count()) + " vs " +
                   std::to_string(cy.count()) + " elements";
      return out;
    }
    std::vector<std::vector<HomotopyGroup>> gx(cx.count()), gy(cy.count());
    for (std::size_t c = 0; c < cx.count(); ++c) {
      for (int n = 1; n < bound; ++n) {
        gx[c].push_back(pi_n(x, cx.basepoints[c], n));
        gy[c].push_back(pi_n(y, cy.basepoints[c], n));
      }
    }
    // compatible[c][d]: components with isomorphic homotopy groups
    const std::size_t count = cx.count();
    std::vector<std::vector<bool>> compatible(count, std::vector<bool>(count, true));
    for (std::size_t c = 0; c < count; ++c) {
      for (std::size_t d = 0; d < count; ++d) {
        for (int n = 1; n < bound && compatible[c][d]; ++n) {
          const auto& a = gx[c][static_cast<std::size_t>(n - 1)];
          const auto& b = gy[d][static_cast<std::size_t>(n - 1)];
          compatible[c][d] = a.order() == b.order() &&
                             (a.order() == 1 || find_isomorphism(a.group(), b.group()));
        }
      }
    }
    // A quick perfect-matching test on the invariants alone.
    std::vector<int> match(count, -1);
    auto matching = [&](const auto& edge) {
      std::fill(match.begin(), match.end(), -1);
      auto augment = [&](auto&& self, std::size_t c, std::vector<bool>& seen) -> bool {
        // free partners first, so easy cases decide few pairs
        for (std::size_t d = 0; d < count; ++d) {
          if (match[d] < 0 && !seen[d] && edge(c, d)) {
            seen[d] = true;
            match[d] = static_cast<int>(c);
            return true;
          }
        }
        for (std::size_t d = 0; d < count; ++d) {
          if (seen[d] || match[d] < 0 || !edge(c, d)) continue;
          seen[d] = true;
          if (match[d] < 0 || self(self, static_cast<std::size_t>(match[d]), seen)) {
            match[d] = static_cast<int>(c);
            return true;
          }
        }
        return false;
      };
      for (std::size_t c = 0; c < count; ++c) {
        std::vector<bool> seen(count, false);
        if (!augment(augment, c, seen)) return static_cast<int>(c);
      }
      return -1;
    };
    if (const int c = matching([&](std::size_t a, std::size_t b) { return compatible[a][b]; });
        c >= 0) {
      out.verdict = Verdict::no;
      out.reason = "homotopy groups of the component at vertex " +
                   std::to_string(cx.basepoints[static_cast<std::size_t>(c)]) +
                   " match no component of the target";
      return out;
    }

    // Components are decided pairwise: a map out of a sum is a map out of
    // each summand, so searching them separately adds the candidate counts
    // instead of multiplying them.
    auto component_of = [](const BoundedKanComplex& z, std::size_t c, std::size_t n) {
      std::vector<bool> mask(n, false);
      mask[c] = true;
      return subobject(z, mask);
    };
    std::vector<std::optional<Subobject>> xs(count), ys(count);
    auto piece = [&](std::vector<std::optional<Subobject>>& cache, const BoundedKanComplex& z,
                     std::size_t c) -> const Subobject& {
      if (!cache[c]) cache[c] = component_of(z, c, count);
      return *cache[c];
    };
    const std::size_t cap = limits().simplex_cap;
    // decided[c][d]: 0 unknown, 1 equivalent, 2 not
    std::vector<std::vector<int>> decided(count, std::vector<int>(count, 0));
    std::vector<std::vector<std::optional<ImageTable>>> found(
        count, std::vector<std::optional<ImageTable>>(count));
    auto decide = [&](std::size_t c, std::size_t d) -> bool {
      if (!compatible[c][d]) return false;
      if (decided[c][d] != 0) return decided[c][d] == 1;
      const auto& xc = piece(xs, x, c);
      const auto& yd = piece(ys, y, d);
      const auto& xi = xc.inclusion;
      const auto& yi = yd.inclusion;
      // the basepoint is the least vertex, so it is vertex 0 of the piece
      MapConstraints constraints;
      constraints.fixed.resize(static_cast<std::size_t>(bound + 1));
      for (int k = 0; k <= bound; ++k) {
        constraints.fixed[static_cast<std::size_t>(k)].assign(xc.space.data().size(k), kNoSimplex);
      }
      constraints.fixed[0][0] = 0;
      std::vector<std::vector<SimplexId>> parent(static_cast<std::size_t>(bound));
      for (int n = 1; n < bound; ++n) {
        parent[static_cast<std::size_t>(n)].assign(x.data().size(n), kNoSimplex);
      }
      enumerate_maps(xc.space.data(), yd.space.data(), constraints, [&](const ImageTable& img) {
        if (++out.candidates > cap) {
          throw SizeCapExceeded("more than " + std::to_string(cap) + " candidate maps");
        }
        for (int n = 1; n < bound; ++n) {
          auto& lvl = parent[static_cast<std::size_t>(n)];
          for (SimplexId s = 0; s < img[static_cast<std::size_t>(n)].size(); ++s) {
            lvl[xi(n, s)] = yi(n, img[static_cast<std::size_t>(n)][s]);
          }
          if (!induced_isomorphism(gx[c][static_cast<std::size_t>(n - 1)],
                                   gy[d][static_cast<std::size_t>(n - 1)], lvl)
                   .empty()) {
            return true;
          }
        }
        found[c][d] = img;
        return false;
      });
      decided[c][d] = found[c][d] ? 1 : 2;
      return decided[c][d] == 1;
    };
    if (const int c = matching(decide); c >= 0) {
      out.verdict = Verdict::no;
      out.reason = "no component of the target is equivalent to the component at vertex " +
                   std::to_string(cx.basepoints[static_cast<std::size_t>(c)]) + " (" +
                   std::to_string(out.candidates) + " maps examined)";
      return out;
    }
    std::vector<std::vector<SimplexId>> images(static_cast<std::size_t>(bound + 1));
    for (int k = 0; k <= bound; ++k) {
      images[static_cast<std::size_t>(k)].assign(x.data().size(k), kNoSimplex);
    }
    for (std::size_t d = 0; d < count; ++d) {
      const auto c = static_cast<std::size_t>(match[d]);
      const auto& img = *found[c][d];
      const auto& xi = piece(xs, x, c).inclusion;
      const auto& yi = piece(ys, y, d).inclusion;
      for (int k = 0; k <= bound; ++k) {
        for (SimplexId s = 0; s < img[static_cast<std::size_t>(k)].size(); ++s) {
          images[static_cast<std::size_t>(k)][xi(k, s)] = yi(k, img[static_cast<std::size_t>(k)][s]);
        }
      }
    }
    out.witness = SimplicialMap(x.ptr(), y.ptr(), std::move(images));
    out.verdict = Verdict::yes;
  } catch (const SizeCapExceeded& e) {
    out.verdict = Verdict::inconclusive;
    out.witness.reset();
    out.reason = e.what();
  } catch (const Timeout& e) {
    out.verdict = Verdict::inconclusive;
    out.witness.reset();
    out.reason = e.what();
  }
  return out;
}

bool is_contractible(const BoundedKanComplex& x) {
  const auto comps = pi0(x);
  if (comps.count() != 1) return false;
  for (int n = 1; n < x.bound(); ++n) {
    if (!pi_n(x, comps.basepoints[0], n).trivial()) return false;
  }
  return true;
}

bool is_mono(const SimplicialMap& f) {
  for (SimplexId y : pi0(f.target()).basepoints) {
    auto fibre = homotopy_fiber(f, y).space;
    if (!fibre.data().empty() && !is_contractible(fibre)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Subobjects

std::vector<std::vector<bool>> subobjects(const BoundedKanComplex& x) {
  const auto n = pi0(x).count();
  if (n > 20) throw SizeCapExceeded("more than 2^20 subobjects");
  std::vector<std::vector<bool>> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<bool> s(n);
    for (std::size_t c = 0; c < n; ++c) s[c] = (mask >> c) & 1u;
    out.push_back(std::move(s));
  }
  return out;
}

Subobject subobject(const BoundedKanComplex& x, const std::vector<bool>& components) {
  const auto comps = pi0(x);
  if (components.size() != comps.count()) throw InvalidData("subobject needs one flag per component");
  std::vector<std::vector<bool>> keep(static_cast<std::size_t>(x.bound() + 1));
  for (int k = 0; k <= x.bound(); ++k) {
    for (SimplexId s = 0; s < x.data().size(k); ++s) {
      keep[static_cast<std::size_t>(k)].push_back(
          components[static_cast<std::size_t>(comps.of_simplex(x.data(), k, s))]);
    }
  }
  auto sub = subcomplex(x.ptr(), keep);
  return {components, BoundedKanComplex::by_construction(sub.space), std::move(sub.inclusion)};
}

SimplicialMap classify_subobject(const BoundedKanComplex& x,
                                 const std::vector<bool>& components) {
  const auto comps = pi0(x);
  if (components.size() != comps.count()) throw InvalidData("subobject needs one flag per component");
  auto two = share(discrete_set(2, x.bound()));
  std::vector<std::vector<SimplexId>> images(static_cast<std::size_t>(x.bound() + 1));
  for (int k = 0; k <= x.bound(); ++k) {
    for (SimplexId s = 0; s < x.data().size(k); ++s) {
      images[static_cast<std::size_t>(k)].push_back(
          components[static_cast<std::size_t>(comps.of_simplex(x.data(), k, s))] ? 1 : 0);
    }
  }
  return {x.ptr(), two, std::move(images)};
}

Subobject pullback_of_true(const BoundedKanComplex& x, const SimplicialMap& chi) {
  auto pt = share(standard_simplex(0, chi.bound()));
  auto pulled = strict_pullback(chi, SimplicialMap::constant(pt, chi.target_ptr(), 1));
  const auto comps = pi0(x);
  std::vector<bool> components;
  for (SimplexId b : comps.basepoints) components.push_back(chi(0, b) == 1);
  return {std::move(components), BoundedKanComplex::by_construction(pulled.space),
          std::move(pulled.first)};
}

BoundedKanComplex pointed_hom(const BoundedKanComplex& x, SimplexId xv,
                              const BoundedKanComplex& y, SimplexId yv) {
  if (xv >= x.data().size(0) || yv >= y.data().size(0)) {
    throw InvalidData("pointed_hom: basepoints must be vertices");
  }
  MappingSpace hom(domain_at_bound(x, y.bound()), y);
  return homotopy_fiber(hom.evaluation(xv), yv).space;
}

// ---------------------------------------------------------------------------
// Reports

std::string identify_group(const FiniteGroup& g) {
  const int n = g.size();
  if (n == 1) return "1";
  std::vector<FiniteGroup> candidates{FiniteGroup::cyclic(n)};
  for (int a = 2; a * a <= n; ++a) {
    if (n % a == 0) {
      candidates.push_back(FiniteGroup::direct_product(FiniteGroup::cyclic(a),
                                                       FiniteGroup::cyclic(n / a)));
    }
  }
  int factorial = 1;
  for (int k = 1; k <= 5; ++k) {
    factorial *= k;
    if (factorial == n && k >= 3) candidates.push_back(FiniteGroup::symmetric(k));
    if (factorial / 2 == n && k >= 4) candidates.push_back(FiniteGroup::alternating(k));
  }
  if (n % 2 == 0 && n / 2 >= 3) candidates.push_back(FiniteGroup::dihedral(n / 2));
  for (const auto& c : candidates) {
    if (find_isomorphism(g, c)) return c.label();
  }
  return "order-" + std::to_string(n);
}

InvariantReport invariant_report(const BoundedKanComplex& x) {
  InvariantReport r;
  r.bound = x.bound();
  for (SimplexId b : pi0(x).basepoints) {
    ComponentInvariants c;
    c.basepoint = b;
    for (int n = 1; n < x.bound(); ++n) c.groups.push_back(pi_n(x, b, n));
    r.components.push_back(std::move(c));
  }
  r.cardinality = homotopy_cardinality(x);
  return r;
}

std::string to_text(const InvariantReport& r) {
  std::ostringstream out;
  out << "bound        " << r.bound << "\n";
  out << "pi_0         " << r.components.size() << "\n";
  for (const auto& c : r.components) {
    out << "component @" << c.basepoint << ":";
    if (c.groups.empty()) out << " (no higher groups below the bound)";
    for (const auto& g : c.groups) {
      out << "  pi_" << g.degree() << " = " << identify_group(g.group());
    }
    out << "\n";
  }
  out << "cardinality  " << r.cardinality.str() << "\n";
  return out.str();
}

std::string to_json(const InvariantReport& r) {
  nlohmann::json j;
  j["bound"] = r.bound;
  j["pi0"] = r.components.size();
  j["components"] = nlohmann::json::array();
  for (const auto& c : r.components) {
    nlohmann::json comp;
    comp["basepoint"] = c.basepoint;
    comp["pi"] = nlohmann::json::array();
    for (const auto& g : c.groups) {
      comp["pi"].push_back(
          {{"n", g.degree()}, {"order", g.order()}, {"group", identify_group(g.group())}});
    }
    j["components"].push_back(std::move(comp));
  }
  j["cardinality"] = r.cardinality.str();
  return j.dump();
}

std::string group_table_text(const HomotopyGroup& g) {
  std::ostringstream out;
  out << "pi_" << g.degree() << " at vertex " << g.basepoint() << ": order " << g.order();
  if (g.degree() == 0) {
    out << "\ncomponents based at";
    for (SimplexId r : g.representatives()) out << " " << r;
    out << "\n";
    return out.str();
  }
  out << " (" << identify_group(g.group()) << ")\n";
  out << "classes:";
  for (std::size_t i = 0; i < g.order(); ++i) {
    out << " " << i << "=";
    if (g.representatives()[i] == kNoSimplex) {
      out << "trivial";
    } else {
      out << "[" << g.representatives()[i] << "]";
    }
  }
  out << "\n";
  for (std::size_t a = 0; a < g.order(); ++a) {
    for (std::size_t b = 0; b < g.order(); ++b) {
      out << (b ? " " : "") << g.group().multiply(static_cast<int>(a), static_cast<int>(b));
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace tcs
