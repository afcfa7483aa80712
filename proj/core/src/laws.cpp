#include "tcs/laws.hpp"

#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "tcs/coskeleton.hpp"
#include "tcs/domains.hpp"
#include "tcs/errors.hpp"
#include "tcs/invariants.hpp"
#include "tcs/io.hpp"
#include "tcs/limits.hpp"
#include "tcs/mapping.hpp"
#include "tcs/products.hpp"

namespace tcs {

using nlohmann::json;

const char* to_string(LawVerdict v) {
  switch (v) {
    case LawVerdict::pass: return "PASS";
    case LawVerdict::fail: return "FAIL";
    case LawVerdict::inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

std::string LawReport::instance_hash() const {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : instance) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string LawReport::line() const {
  return "LAW " + law + " " + instance_hash() + " " + to_string(verdict);
}

namespace {

struct Outcome {
  LawVerdict verdict;
  std::string detail;
};

Outcome pass(std::string detail) { return {LawVerdict::pass, std::move(detail)}; }
Outcome fail(std::string detail) { return {LawVerdict::fail, std::move(detail)}; }

Outcome from_decision(const EquivalenceDecision& d, const std::string& what) {
  switch (d.verdict) {
    case Verdict::yes: return pass(what + " equivalent");
    case Verdict::no: return fail(what + " not equivalent: " + d.reason);
    case Verdict::inconclusive: return {LawVerdict::inconclusive, what + ": " + d.reason};
  }
  return fail("unknown verdict");
}

std::string sizes(const BoundedKanComplex& x) {
  std::string s = "[";
  for (int k = 0; k <= x.bound(); ++k) {
    s += (k ? "," : "") + std::to_string(x.data().size(k));
  }
  return s + "]";
}

// -- sum descent --------------------------------------------------------------

Outcome sum_descent(const BoundedKanComplex& x, const BoundedKanComplex& y,
                    const SimplicialMap& h) {
  auto sum = coproduct_with_inclusions(x, y);
  if (h.bound() != sum.space.bound()) {
    throw BoundMismatch("sum descent: h must land in X + Y at bound " +
                        std::to_string(sum.space.bound()));
  }
  if (!(h.target() == sum.space.data())) throw InvalidData("sum descent: h must land in X + Y");
  const SimplicialMap hh(h.source_ptr(), sum.space.ptr(), h.images());
  const auto& z = h.source();
  // Summand inclusions are fibrations (unions of components), so these
  // strict pullbacks are homotopy pullbacks.
  auto zx = strict_pullback(hh, sum.left);
  auto zy = strict_pullback(hh, sum.right);
  auto parts = coproduct_data(zx.space, zy.space);
  std::vector<std::vector<SimplexId>> images(static_cast<std::size_t>(z.bound() + 1));
  for (int k = 0; k <= z.bound(); ++k) {
    const auto nx = zx.space->size(k);
    if (nx + zy.space->size(k) != z.size(k)) {
      return fail("preimages of the summands do not partition Z in dimension " +
                  std::to_string(k));
    }
    std::vector<bool> hit(z.size(k), false);
    auto& lvl = images[static_cast<std::size_t>(k)];
    for (SimplexId s = 0; s < parts.space->size(k); ++s) {
      const bool left = s < nx;
      const SimplexId zs = left ? zx.first(k, s) : zy.first(k, s - nx);
      const SimplexId expected =
          left ? sum.left(k, zx.second(k, s)) : sum.right(k, zy.second(k, s - nx));
      if (hh(k, zs) != expected) return fail("h is not the sum of its restrictions");
      if (hit[zs]) return fail("a simplex of Z lies over both summands");
      hit[zs] = true;
      lvl.push_back(zs);
    }
  }
  const SimplicialMap comparison(parts.space, h.source_ptr(), std::move(images));
  if (auto why = comparison.check(); !why.empty()) return fail("Z_X + Z_Y -> Z: " + why);
  auto eq = is_equivalence(comparison);
  if (!eq.equivalent) return fail("Z_X + Z_Y -> Z is not an equivalence: " + eq.diagnostic);
  auto overlap = strict_pullback(sum.left, sum.right);
  if (!overlap.space->empty()) return fail("the summand inclusions meet");
  return pass("Z = Z_X + Z_Y with " + std::to_string(pi0(*zx.space).count()) + " + " +
              std::to_string(pi0(*zy.space).count()) + " components; summands disjoint");
}

// -- effectivity --------------------------------------------------------------

Outcome effectivity(const GroupAction& a) {
  auto quotient = homotopy_quotient(a);
  auto q = quotient_map(a, quotient);
  if (auto why = q.check(); !why.empty()) throw InvalidData("quotient map: " + why);
  const auto x = BoundedKanComplex::by_construction(q.source_ptr());
  const auto g = discrete(static_cast<std::size_t>(a.group().size()));
  // maps are enumerated out of the first argument, so the small model goes first
  auto c1 = homotopy_pullback(q, q);
  auto level1 = from_decision(are_equivalent(product(g, x), c1.space), "Cech level 1 and G x X");
  if (level1.verdict != LawVerdict::pass) return level1;
  auto c2 = homotopy_pullback(q.after(c1.second), q);
  auto level2 =
      from_decision(are_equivalent(product(product(g, g), x), c2.space), "Cech level 2 and G x G x X");
  if (level2.verdict != LawVerdict::pass) return level2;
  return pass("Cech levels match X, G x X, G x G x X with |G| = " +
              std::to_string(a.group().size()));
}

// -- local cartesian closure --------------------------------------------------

Outcome lcc(BoundedKanComplex z, BoundedKanComplex x, BoundedKanComplex y) {
  const int bound = std::max({z.bound(), x.bound(), y.bound()});
  z = raise_bound(z, bound);
  x = raise_bound(x, bound);
  y = raise_bound(y, bound);
  auto zx = product_data(z.ptr(), x.ptr());
  MappingSpace left(zx.space, y, 1);
  MappingSpace inner(x.ptr(), y);
  MappingSpace right(z.ptr(), inner.complex(), 1);
  const auto& sections = inner.sections();
  const auto cl = pi0(left.complex());
  const auto cr = pi0(right.complex());
  if (cl.count() != cr.count()) {
    return fail("pi_0 hom(Z x X, Y) has " + std::to_string(cl.count()) +
                " classes but pi_0 hom(Z, hom(X, Y)) has " + std::to_string(cr.count()));
  }
  const auto& xs = x.data();
  const auto& zs = z.data();

  auto curry = [&](SimplexId v) -> SimplexId {
    const auto f = left.map_of(v);
    std::vector<std::vector<SimplexId>> images(static_cast<std::size_t>(bound + 1));
    for (int k = 0; k <= bound; ++k) {
      std::vector<SimplexId> flat(sections.stride(k), kNoSimplex);
      for (SimplexId s = 0; s < zs.size(k); ++s) {
        for (int m = 0; m <= bound; ++m) {
          for (const auto& theta : operators_between(m, k)) {
            const SimplexId zt = zs.act(s, theta);
            for (SimplexId a = 0; a < xs.size(m); ++a) {
              flat[sections.flat_index(k, a, theta)] =
                  f(m, static_cast<SimplexId>(zt * xs.size(m) + a));
            }
          }
        }
        const SimplexId id = sections.find(k, 0, flat);
        if (id == kNoSimplex) throw InvalidData("curried simplex missing from hom(X, Y)");
        images[static_cast<std::size_t>(k)].push_back(id);
      }
    }
    return right.vertex_of(SimplicialMap(z.ptr(), inner.complex().ptr(), std::move(images)));
  };
  auto uncurry = [&](SimplexId w) -> SimplexId {
    const auto g = right.map_of(w);
    std::vector<std::vector<SimplexId>> images(static_cast<std::size_t>(bound + 1));
    for (int k = 0; k <= bound; ++k) {
      for (SimplexId s = 0; s < zx.space->size(k); ++s) {
        const auto nx = static_cast<SimplexId>(xs.size(k));
        images[static_cast<std::size_t>(k)].push_back(sections.evaluate(k, g(k, s / nx), s % nx));
      }
    }
    return left.vertex_of(SimplicialMap(zx.space, y.ptr(), std::move(images)));
  };

  std::vector<int> image_class(cl.count(), -1);
  for (SimplexId v = 0; v < left.complex().data().size(0); ++v) {
    const SimplexId w = curry(v);
    if (w == kNoSimplex) return fail("currying a map gave no vertex of hom(Z, hom(X, Y))");
    const int c = cl.of_vertex[v];
    const int target = cr.of_vertex[w];
    if (image_class[static_cast<std::size_t>(c)] == -1) {
      image_class[static_cast<std::size_t>(c)] = target;
    } else if (image_class[static_cast<std::size_t>(c)] != target) {
      return fail("currying does not respect homotopy classes");
    }
    if (uncurry(w) != v) return fail("uncurry(curry(f)) differs from f");
  }
  std::vector<bool> hit(cr.count(), false);
  for (int c : image_class) {
    if (hit[static_cast<std::size_t>(c)]) return fail("currying identifies two classes");
    hit[static_cast<std::size_t>(c)] = true;
  }
  for (SimplexId w : cr.basepoints) {
    const SimplexId v = uncurry(w);
    if (v == kNoSimplex || curry(v) != w) return fail("curry(uncurry(g)) differs from g");
  }
  return pass(std::to_string(cl.count()) + " classes on both sides, currying bijective");
}

// -- subobject classifier -----------------------------------------------------

Outcome classifier(const BoundedKanComplex& x) {
  const auto subs = subobjects(x);
  const auto two = BoundedKanComplex::by_construction(share(discrete_set(2, x.bound())));
  MappingSpace h(x.ptr(), two, 1);
  const auto classes = pi0(h.complex());
  if (classes.count() != subs.size()) {
    return fail(std::to_string(subs.size()) + " subobjects but " +
                std::to_string(classes.count()) + " classes of maps to 2");
  }
  std::vector<bool> seen(classes.count(), false);
  for (const auto& s : subs) {
    const auto chi = classify_subobject(x, s);
    const SimplexId v = h.vertex_of(SimplicialMap(x.ptr(), two.ptr(), chi.images()));
    if (v == kNoSimplex) return fail("characteristic map missing from hom(X, 2)");
    const int c = classes.of_vertex[v];
    if (seen[static_cast<std::size_t>(c)]) return fail("two subobjects share a classifying class");
    seen[static_cast<std::size_t>(c)] = true;
    if (pullback_of_true(x, chi).components != s) {
      return fail("pulling back true does not recover the subobject");
    }
  }
  for (SimplexId b : classes.basepoints) {
    const auto chi = h.map_of(b);
    const auto back = classify_subobject(x, pullback_of_true(x, chi).components);
    const SimplexId v = h.vertex_of(SimplicialMap(x.ptr(), two.ptr(), back.images()));
    if (v == kNoSimplex || classes.of_vertex[v] != classes.of_vertex[b]) {
      return fail("classifying the pullback of true changes the class");
    }
  }
  const auto one = point(1);
  auto boolean = are_equivalent(discrete(2), coproduct(one, one));
  if (boolean.verdict != Verdict::yes) return from_decision(boolean, "2 and 1 + 1");
  auto t = SimplicialMap::constant(one.ptr(), discrete(2).ptr(), 1);
  auto f = SimplicialMap::constant(one.ptr(), discrete(2).ptr(), 0);
  if (!homotopy_pullback(t, f).space.data().empty()) return fail("true and false meet");
  return pass(std::to_string(subs.size()) + " subobjects and map classes; 2 = 1 + 1");
}

// -- free loops ---------------------------------------------------------------

std::size_t conjugacy_class_count(const FiniteGroup& g) {
  std::vector<bool> seen(static_cast<std::size_t>(g.size()), false);
  std::size_t classes = 0;
  for (int a = 0; a < g.size(); ++a) {
    if (seen[static_cast<std::size_t>(a)]) continue;
    ++classes;
    for (int b = 0; b < g.size(); ++b) {
      seen[static_cast<std::size_t>(g.multiply(g.multiply(b, a), g.inverse(b)))] = true;
    }
  }
  return classes;
}

Outcome free_loops(const FiniteGroup& g) {
  auto bg = classifying_space(g);
  AuxiliaryDomain circle(share(simplicial_circle(bg.bound())));
  const auto components = pi0(hom_complex(circle, bg)).count();
  const auto expected = conjugacy_class_count(g);
  if (components != expected) {
    return fail(std::to_string(components) + " free loop classes, " + std::to_string(expected) +
                " conjugacy classes");
  }
  return pass(std::to_string(components) + " free loop classes = conjugacy classes");
}

std::string default_description(const LawInstance& in) {
  std::string d = in.law;
  for (const auto& s : in.spaces) d += " " + sizes(s);
  if (in.action) d += " |G|=" + std::to_string(in.action->group().size()) + " on " + sizes(in.action->space());
  if (in.group) d += " " + in.group->label();
  return d;
}

}  // namespace

LawReport check_law(const LawInstance& in) {
  LawReport r;
  r.law = in.law;
  r.instance = in.description.empty() ? default_description(in) : in.description;
  Outcome out{LawVerdict::inconclusive, ""};
  try {
    if (in.law == "sum_descent") {
      if (in.spaces.size() < 2 || !in.map) throw InvalidData("sum_descent needs X, Y and h");
      out = sum_descent(in.spaces[0], in.spaces[1], *in.map);
    } else if (in.law == "groupoid_effectivity") {
      if (!in.action) throw InvalidData("groupoid_effectivity needs an action");
      out = effectivity(*in.action);
    } else if (in.law == "lcc_adjunction") {
      if (in.spaces.size() != 3) throw InvalidData("lcc_adjunction needs Z, X and Y");
      out = lcc(in.spaces[0], in.spaces[1], in.spaces[2]);
    } else if (in.law == "subobject_classifier") {
      if (in.spaces.size() != 1) throw InvalidData("subobject_classifier needs X");
      out = classifier(in.spaces[0]);
    } else if (in.law == "free_loops") {
      if (!in.group) throw InvalidData("free_loops needs a group");
      out = free_loops(*in.group);
    } else {
      throw InvalidData("unknown law \"" + in.law + "\"");
    }
  } catch (const SizeCapExceeded& e) {
    out = {LawVerdict::inconclusive, std::string("size cap: ") + e.what()};
  } catch (const Timeout& e) {
    out = {LawVerdict::inconclusive, std::string("timeout: ") + e.what()};
  }
  r.verdict = out.verdict;
  r.detail = std::move(out.detail);
  if (r.verdict == LawVerdict::fail) r.witness = instance_to_json(in).dump(1);
  return r;
}

LawReport check_sum_descent(const BoundedKanComplex& x, const BoundedKanComplex& y,
                            const SimplicialMap& h) {
  LawInstance in{"sum_descent", {}, {x, y, BoundedKanComplex::by_construction(h.source_ptr())}, h,
                 std::nullopt, std::nullopt};
  return check_law(in);
}

LawReport check_groupoid_effectivity(const GroupAction& a) {
  return check_law({"groupoid_effectivity", {}, {}, std::nullopt, a, std::nullopt});
}

LawReport check_lcc_adjunction(const BoundedKanComplex& z, const BoundedKanComplex& x,
                               const BoundedKanComplex& y) {
  return check_law({"lcc_adjunction", {}, {z, x, y}, std::nullopt, std::nullopt, std::nullopt});
}

LawReport check_subobject_classifier(const BoundedKanComplex& x) {
  return check_law({"subobject_classifier", {}, {x}, std::nullopt, std::nullopt, std::nullopt});
}

LawReport check_free_loops(const FiniteGroup& group) {
  return check_law({"free_loops", {}, {}, std::nullopt, std::nullopt, group});
}

// -- witnesses ------------------------------------------------------------------

nlohmann::json instance_to_json(const LawInstance& in) {
  json j;
  j["format_version"] = kFormatVersion;
  j["law"] = in.law;
  j["description"] = in.description;
  j["spaces"] = json::array();
  for (const auto& s : in.spaces) j["spaces"].push_back(complex_to_json(s.data()));
  if (in.map) j["map"] = map_to_json(*in.map);
  if (in.action) j["action"] = action_to_json(*in.action);
  if (in.group) j["group"] = group_to_json(*in.group);
  return j;
}

LawInstance instance_from_json(const nlohmann::json& j) {
  LawInstance in;
  in.law = j.at("law").get<std::string>();
  in.description = j.value("description", std::string());
  for (const auto& s : j.at("spaces")) in.spaces.push_back(require_kan(complex_from_json(s).data));
  if (j.contains("map")) {
    if (in.spaces.size() != 3) throw InvalidData("a sum_descent witness lists X, Y and Z");
    auto sum = coproduct(in.spaces[0], in.spaces[1]);
    in.map = map_from_json(j.at("map"), in.spaces[2].ptr(), sum.ptr());
  }
  if (j.contains("action")) in.action = action_from_json(j.at("action"));
  if (j.contains("group")) in.group = group_from_json(j.at("group"));
  return in;
}

LawReport replay_witness(const std::filesystem::path& path) {
  return check_law(instance_from_json(read_json(path)));
}

std::filesystem::path write_witness(const LawReport& report, const std::filesystem::path& dir) {
  if (!report.witness) throw InvalidData("report has no witness");
  std::filesystem::create_directories(dir);
  auto path = dir / ("witness-" + report.law + "-" + report.instance_hash() + ".json");
  std::ofstream out(path);
  out << *report.witness << "\n";
  return path;
}

// -- random instances -------------------------------------------------------------

namespace {

const std::vector<std::string>& small_groups() {
  static const std::vector<std::string> names = {
      "1", "Z/2", "Z/3", "Z/4", "Z/2xZ/2", "Z/5", "Z/6", "S_3",
      "Z/7", "Z/8", "Z/2xZ/4", "Z/2xZ/2xZ/2", "D_4"};
  return names;
}

FiniteGroup group_named(const std::string& name) { return *builtin_group(name); }

/// Disjoint union of connected groupoids, each with the given object count
/// and vertex group.
FiniteGroupoid groupoid_of(const std::vector<std::pair<int, FiniteGroup>>& parts) {
  struct Arrow {
    int source, target, element, part;
  };
  std::vector<FiniteGroupoid::Morphism> morphisms;
  std::vector<Arrow> arrows;
  int first = 0;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    const auto& [objects, g] = parts[p];
    for (int s = 0; s < objects; ++s) {
      for (int t = 0; t < objects; ++t) {
        for (int e = 0; e < g.size(); ++e) {
          arrows.push_back({first + s, first + t, e, static_cast<int>(p)});
          morphisms.push_back({first + s, first + t,
                               std::to_string(first + s) + ">" + std::to_string(first + t) + ":" +
                                   g.elements()[static_cast<std::size_t>(e)]});
        }
      }
    }
    first += objects;
  }
  // arrows of one part are laid out as (source, target, element)
  std::vector<int> offset(parts.size() + 1, 0);
  std::vector<int> start(parts.size() + 1, 0);
  for (std::size_t p = 0; p < parts.size(); ++p) {
    offset[p + 1] = offset[p] + parts[p].first * parts[p].first * parts[p].second.size();
    start[p + 1] = start[p] + parts[p].first;
  }
  const auto n = arrows.size();
  std::vector<std::vector<int>> compose(n, std::vector<int>(n, -1));
  for (std::size_t f = 0; f < n; ++f) {
    for (std::size_t h = 0; h < n; ++h) {
      const auto& a = arrows[f];
      const auto& b = arrows[h];
      if (a.target != b.source) continue;
      const auto& [objects, g] = parts[static_cast<std::size_t>(a.part)];
      const int s = a.source - start[static_cast<std::size_t>(a.part)];
      const int t = b.target - start[static_cast<std::size_t>(a.part)];
      compose[f][h] = offset[static_cast<std::size_t>(a.part)] +
                      (s * objects + t) * g.size() + g.multiply(a.element, b.element);
    }
  }
  return {first, std::move(morphisms), std::move(compose)};
}

struct Generator {
  std::mt19937_64 rng;

  std::size_t below(std::size_t n) { return static_cast<std::size_t>(rng() % n); }

  /// A random groupoid nerve with at most `max_objects` objects, at most
  /// `max_parts` components and vertex groups from the first `groups` names.
  std::pair<BoundedKanComplex, std::string> nerve(int max_objects, int max_parts,
                                                  std::size_t groups) {
    std::vector<std::pair<int, FiniteGroup>> parts;
    std::string name = "Nerve{";
    int left = max_objects;
    const int count = 1 + static_cast<int>(below(static_cast<std::size_t>(max_parts)));
    for (int p = 0; p < count && left > 0; ++p) {
      const int objects = 1 + static_cast<int>(below(static_cast<std::size_t>(std::min(left, 2))));
      const auto& g = small_groups()[below(groups)];
      parts.emplace_back(objects, group_named(g));
      left -= objects;
      name += (p ? "," : "") + std::to_string(objects) + "*" + g;
    }
    return {nerve_groupoid(groupoid_of(parts)), name + "}"};
  }

  std::pair<BoundedKanComplex, std::string> simple(std::size_t choices) {
    switch (below(choices)) {
      case 0: return {discrete(1), "Fin(1)"};
      case 1: return {discrete(2), "Fin(2)"};
      case 2: return {classifying_space(FiniteGroup::cyclic(2)), "B(Z/2)"};
      case 3: return {discrete(3), "Fin(3)"};
      case 4: return {classifying_space(FiniteGroup::cyclic(3)), "B(Z/3)"};
      default: return {discrete(0), "Fin(0)"};
    }
  }
};

void add_sum_descent(Generator& gen, std::vector<LawInstance>& out, int index) {
  auto [x, xn] = gen.nerve(4, 2, small_groups().size());
  auto [y, yn] = gen.nerve(3, 2, 8);
  auto sum = coproduct_with_inclusions(x, y);
  const auto& s = sum.space;
  BoundedKanComplex z;
  std::optional<SimplicialMap> h;
  std::string how;
  switch (index % 3) {
    case 0: {
      // a discrete Z with random vertex images
      const std::size_t n = 1 + gen.below(4);
      z = raise_bound(discrete(n), s.bound());
      std::vector<std::vector<SimplexId>> images(static_cast<std::size_t>(s.bound() + 1));
      for (SimplexId v = 0; v < n; ++v) {
        const SimplexId image = static_cast<SimplexId>(gen.below(s.data().size(0)));
        for (int k = 0; k <= s.bound(); ++k) {
          images[static_cast<std::size_t>(k)].push_back(s.data().degenerate_vertex(image, k));
        }
      }
      h = SimplicialMap(z.ptr(), s.ptr(), std::move(images));
      how = "Fin(" + std::to_string(n) + ") random";
      break;
    }
    case 1: {
      auto [w, wn] = gen.simple(3);
      auto p = product_with_projections(w, s);
      z = p.space;
      h = SimplicialMap(z.ptr(), s.ptr(), p.second.images());
      how = "Prod(" + wn + ",X+Y) projection";
      break;
    }
    default: {
      auto [w, wn] = gen.nerve(2, 2, 3);
      z = raise_bound(w, s.bound());
      MapConstraints none;
      std::vector<SimplicialMap> found;
      enumerate_maps(z.data(), s.data(), none, [&](const ImageTable& t) {
        found.emplace_back(z.ptr(), s.ptr(), t);
        return found.size() < 32;
      });
      h = found[gen.below(found.size())];
      how = wn + " random map";
      break;
    }
  }
  out.push_back({"sum_descent", "X=" + xn + " Y=" + yn + " Z=" + how + " #" + std::to_string(index),
                 {x, y, z}, h, std::nullopt, std::nullopt});
}

/// Z/2 swapping the two summands of Y + Y.
GroupAction swap_summands(const BoundedKanComplex& y) {
  auto sum = coproduct(y, y);
  std::vector<std::vector<std::vector<SimplexId>>> table(2);
  for (int k = 0; k <= sum.bound(); ++k) {
    const auto n = static_cast<SimplexId>(y.data().size(k));
    std::vector<SimplexId> id, swap;
    for (SimplexId s = 0; s < 2 * n; ++s) {
      id.push_back(s);
      swap.push_back(s < n ? s + n : s - n);
    }
    table[0].push_back(std::move(id));
    table[1].push_back(std::move(swap));
  }
  return {FiniteGroup::cyclic(2), std::move(sum), std::move(table)};
}

void add_effectivity(Generator& gen, std::vector<LawInstance>& out, int index) {
  const auto& name = small_groups()[gen.below(small_groups().size())];
  auto g = group_named(name);
  std::string how;
  std::optional<GroupAction> action;
  switch (index % 5) {
    case 0:
      action = GroupAction::trivial(g, point(1));
      how = name + " trivial on Fin(1)";
      break;
    case 1: {
      auto [y, yn] = gen.simple(5);
      // the Cech levels of a non-discrete space grow quickly with |G|
      if (y.data().size(1) > y.data().size(0)) g = group_named(small_groups()[gen.below(3)]);
      action = GroupAction::trivial(g, y);
      how = g.label() + " trivial on " + yn;
      break;
    }
    case 2: {
      std::vector<std::vector<SimplexId>> table;
      for (int a = 0; a < g.size(); ++a) {
        std::vector<SimplexId> row;
        for (int b = 0; b < g.size(); ++b) row.push_back(static_cast<SimplexId>(g.multiply(a, b)));
        table.push_back(std::move(row));
      }
      action = GroupAction::on_vertices(g, discrete(static_cast<std::size_t>(g.size())), table);
      how = name + " translation";
      break;
    }
    case 3: {
      auto [y, yn] = gen.simple(5);
      action = swap_summands(y);
      how = "Z/2 swapping " + yn + " + " + yn;
      break;
    }
    default: {
      // through a homomorphism to Z/2 acting by swapping two points
      std::vector<int> sign(static_cast<std::size_t>(g.size()), 0);
      const auto z2 = FiniteGroup::cyclic(2);
      std::vector<std::vector<int>> homs;
      for (std::uint64_t bits = 0; bits < (1ull << g.size()); ++bits) {
        for (int e = 0; e < g.size(); ++e) sign[static_cast<std::size_t>(e)] = (bits >> e) & 1;
        if (is_homomorphism(g, z2, sign)) homs.push_back(sign);
      }
      const auto& phi = homs[gen.below(homs.size())];
      std::vector<std::vector<SimplexId>> table;
      for (int e : phi) table.push_back(e ? std::vector<SimplexId>{1, 0} : std::vector<SimplexId>{0, 1});
      action = GroupAction::on_vertices(g, discrete(2), table);
      how = name + " swapping Fin(2) through a sign";
      break;
    }
  }
  out.push_back({"groupoid_effectivity", how + " #" + std::to_string(index), {}, std::nullopt,
                 action, std::nullopt});
}

void add_lcc(Generator& gen, std::vector<LawInstance>& out, int index) {
  auto [z, zn] = gen.simple(index % 3 ? 3 : 5);
  auto [x, xn] = gen.simple(index % 2 ? 5 : 3);
  auto [y, yn] = gen.simple(5);
  out.push_back({"lcc_adjunction", "Z=" + zn + " X=" + xn + " Y=" + yn + " #" + std::to_string(index),
                 {z, x, y}, std::nullopt, std::nullopt, std::nullopt});
}

void add_classifier(Generator& gen, std::vector<LawInstance>& out, int index) {
  auto [x, xn] = index % 4 == 3 ? gen.simple(6) : gen.nerve(4, 3, small_groups().size());
  out.push_back({"subobject_classifier", "X=" + xn + " #" + std::to_string(index), {x},
                 std::nullopt, std::nullopt, std::nullopt});
}

}  // namespace

std::vector<LawInstance> generate_instances(std::uint64_t seed) {
  Generator gen{std::mt19937_64(seed)};
  std::vector<LawInstance> out;
  for (int i = 0; i < 14; ++i) add_sum_descent(gen, out, i);
  for (int i = 0; i < 15; ++i) add_effectivity(gen, out, i);
  for (int i = 0; i < 14; ++i) add_lcc(gen, out, i);
  for (int i = 0; i < 12; ++i) add_classifier(gen, out, i);
  for (const auto& name : small_groups()) {
    out.push_back({"free_loops", "B(" + name + ")", {}, std::nullopt, std::nullopt,
                   group_named(name)});
  }
  return out;
}

std::vector<LawReport> run_suite(const SuiteOptions& options) {
  auto instances = generate_instances(options.seed);
  Limits capped = limits();
  capped.simplex_cap = options.simplex_cap;
  ScopedLimits guard(capped);
  std::vector<LawReport> reports;
  for (const auto& in : instances) {
    reports.push_back(check_law(in));
    if (reports.back().verdict == LawVerdict::fail && !options.witness_dir.empty()) {
      write_witness(reports.back(), options.witness_dir);
    }
  }
  return reports;
}

}  // namespace tcs
