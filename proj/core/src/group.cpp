#include "tcs/group.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <map>
#include <numeric>

#include "tcs/errors.hpp"

namespace tcs {

FiniteGroup::FiniteGroup(std::vector<std::string> elements,
                         std::vector<std::vector<int>> table, std::string label)
    : elements_(std::move(elements)), table_(std::move(table)), label_(std::move(label)) {
  const int n = size();
  if (n == 0) throw InvalidData("a group needs at least one element");
  if (static_cast<int>(table_.size()) != n) {
    throw InvalidData("multiplication table has " + std::to_string(table_.size()) +
                      " rows for " + std::to_string(n) + " elements");
  }
  for (const auto& row : table_) {
    if (static_cast<int>(row.size()) != n) throw InvalidData("multiplication table is not square");
    for (int v : row) {
      if (v < 0 || v >= n) throw InvalidData("multiplication table entry out of range");
    }
  }
  identity_ = -1;
  for (int e = 0; e < n && identity_ < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = multiply(e, a) == a && multiply(a, e) == a;
    if (ok) identity_ = e;
  }
  if (identity_ < 0) throw InvalidData("multiplication table has no identity");
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        if (multiply(multiply(a, b), c) != multiply(a, multiply(b, c))) {
          throw InvalidData("multiplication is not associative at (" + elements_[a] +
                            ", " + elements_[b] + ", " + elements_[c] + ")");
        }
      }
    }
  }
  inverse_.assign(static_cast<std::size_t>(n), -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (multiply(a, b) == identity_ && multiply(b, a) == identity_) {
        inverse_[static_cast<std::size_t>(a)] = b;
        break;
      }
    }
    if (inverse_[static_cast<std::size_t>(a)] < 0) {
      throw InvalidData("element " + elements_[a] + " has no inverse");
    }
  }
}

int FiniteGroup::order(int a) const {
  int k = 1;
  for (int x = a; x != identity_; x = multiply(x, a)) ++k;
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < size(); ++a) {
    for (int b = a + 1; b < size(); ++b) {
      if (multiply(a, b) != multiply(b, a)) return false;
    }
  }
  return true;
}

FiniteGroup FiniteGroup::trivial() { return FiniteGroup({"e"}, {{0}}, "1"); }

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n < 1) throw InvalidData("Z/n needs n >= 1");
  std::vector<std::string> names;
  std::vector<std::vector<int>> table(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    names.push_back(std::to_string(a));
    for (int b = 0; b < n; ++b) table[static_cast<std::size_t>(a)].push_back((a + b) % n);
  }
  return {std::move(names), std::move(table), "Z/" + std::to_string(n)};
}

namespace {

FiniteGroup permutation_group(int n, bool even_only, std::string label) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> perms;
  do {
    if (even_only) {
      int inversions = 0;
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) inversions += p[i] > p[j] ? 1 : 0;
      }
      if (inversions % 2 != 0) continue;
    }
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<int>, int> index;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < perms.size(); ++i) {
    index[perms[i]] = static_cast<int>(i);
    std::string name;
    for (int v : perms[i]) name += (name.empty() ? "" : ",") + std::to_string(v);
    names.push_back("(" + name + ")");
  }
  std::vector<std::vector<int>> table(perms.size());
  for (std::size_t a = 0; a < perms.size(); ++a) {
    for (std::size_t b = 0; b < perms.size(); ++b) {
      std::vector<int> c(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) c[i] = perms[a][perms[b][i]];
      table[a].push_back(index.at(c));
    }
  }
  return {std::move(names), std::move(table), std::move(label)};
}

}  // namespace

FiniteGroup FiniteGroup::symmetric(int n) {
  if (n < 0) throw InvalidData("S_n needs n >= 0");
  return permutation_group(n, false, "S_" + std::to_string(n));
}

FiniteGroup FiniteGroup::alternating(int n) {
  if (n < 0) throw InvalidData("A_n needs n >= 0");
  return permutation_group(n, true, "A_" + std::to_string(n));
}

FiniteGroup FiniteGroup::dihedral(int n) {
  if (n < 1) throw InvalidData("D_n needs n >= 1");
  // r^a s^e has index a + n e; s r = r^{-1} s.
  std::vector<std::string> names;
  for (int e = 0; e < 2; ++e) {
    for (int a = 0; a < n; ++a) names.push_back((e ? "s" : "r") + std::to_string(a));
  }
  std::vector<std::vector<int>> table(static_cast<std::size_t>(2 * n));
  for (int x = 0; x < 2 * n; ++x) {
    for (int y = 0; y < 2 * n; ++y) {
      const int a = x % n, e = x / n, b = y % n, f = y / n;
      const int r = ((a + (e ? -b : b)) % n + n) % n;
      table[static_cast<std::size_t>(x)].push_back(r + n * ((e + f) % 2));
    }
  }
  return {std::move(names), std::move(table), "D_" + std::to_string(n)};
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  std::vector<std::string> names;
  const int nb = b.size();
  std::vector<std::vector<int>> table(static_cast<std::size_t>(a.size() * nb));
  for (int x = 0; x < a.size() * nb; ++x) {
    names.push_back("(" + a.elements()[x / nb] + "," + b.elements()[x % nb] + ")");
    for (int y = 0; y < a.size() * nb; ++y) {
      table[static_cast<std::size_t>(x)].push_back(a.multiply(x / nb, y / nb) * nb +
                                                   b.multiply(x % nb, y % nb));
    }
  }
  return {std::move(names), std::move(table), a.label() + "x" + b.label()};
}

bool is_homomorphism(const FiniteGroup& a, const FiniteGroup& b,
                     const std::vector<int>& map) {
  if (static_cast<int>(map.size()) != a.size()) return false;
  for (int x = 0; x < a.size(); ++x) {
    for (int y = 0; y < a.size(); ++y) {
      if (map[a.multiply(x, y)] != b.multiply(map[x], map[y])) return false;
    }
  }
  return true;
}

namespace {

std::vector<int> generating_set(const FiniteGroup& g) {
  std::vector<int> by_order(static_cast<std::size_t>(g.size()));
  std::iota(by_order.begin(), by_order.end(), 0);
  std::stable_sort(by_order.begin(), by_order.end(),
                   [&](int x, int y) { return g.order(x) > g.order(y); });
  std::vector<bool> in(static_cast<std::size_t>(g.size()), false);
  in[g.identity()] = true;
  std::vector<int> members{g.identity()};
  std::vector<int> gens;
  for (int x : by_order) {
    if (in[x]) continue;
    gens.push_back(x);
    // close under right multiplication by the generators
    std::deque<int> queue(members.begin(), members.end());
    while (!queue.empty()) {
      const int y = queue.front();
      queue.pop_front();
      for (int s : gens) {
        const int z = g.multiply(y, s);
        if (!in[z]) {
          in[z] = true;
          members.push_back(z);
          queue.push_back(z);
        }
      }
    }
  }
  return gens;
}

/// Extends generator images to an element map by multiplying along words;
/// std::nullopt on an inconsistency.
std::optional<std::vector<int>> extend(const FiniteGroup& a, const FiniteGroup& b,
                                       const std::vector<int>& gens,
                                       const std::vector<int>& images) {
  std::vector<int> map(static_cast<std::size_t>(a.size()), -1);
  map[a.identity()] = b.identity();
  std::deque<int> queue{a.identity()};
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const int y = a.multiply(x, gens[i]);
      const int image = b.multiply(map[x], images[i]);
      if (map[y] < 0) {
        map[y] = image;
        queue.push_back(y);
      } else if (map[y] != image) {
        return std::nullopt;
      }
    }
  }
  return map;
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const FiniteGroup& a,
                                                 const FiniteGroup& b) {
  if (a.size() != b.size() || a.is_abelian() != b.is_abelian()) return std::nullopt;
  std::vector<int> oa, ob;
  for (int x = 0; x < a.size(); ++x) oa.push_back(a.order(x));
  for (int x = 0; x < b.size(); ++x) ob.push_back(b.order(x));
  auto sa = oa, sb = ob;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return std::nullopt;

  const auto gens = generating_set(a);
  std::vector<int> images(gens.size(), -1);
  std::optional<std::vector<int>> found;
  auto search = [&](auto&& self, std::size_t i) -> bool {
    if (i == gens.size()) {
      auto map = extend(a, b, gens, images);
      if (!map) return false;
      std::vector<bool> hit(static_cast<std::size_t>(b.size()), false);
      for (int v : *map) {
        if (hit[v]) return false;
        hit[v] = true;
      }
      if (!is_homomorphism(a, b, *map)) return false;
      found = std::move(map);
      return true;
    }
    for (int y = 0; y < b.size(); ++y) {
      if (ob[y] != oa[gens[i]]) continue;
      images[i] = y;
      if (self(self, i + 1)) return true;
    }
    return false;
  };
  search(search, 0);
  return found;
}

std::optional<std::vector<int>> standard_inclusion(const FiniteGroup& sub,
                                                   const FiniteGroup& group) {
  std::vector<int> map;
  auto parse_cyclic = [](const std::string& label) -> int {
    if (label.rfind("Z/", 0) != 0) return 0;
    return std::atoi(label.c_str() + 2);
  };
  const int m = parse_cyclic(sub.label());
  const int n = parse_cyclic(group.label());
  if (m > 0 && n > 0 && n % m == 0) {
    for (int k = 0; k < m; ++k) map.push_back(k * (n / m));
  } else if (sub.size() == 1) {
    map.push_back(group.identity());
  } else {
    std::map<std::string, int> names;
    for (int x = 0; x < group.size(); ++x) names[group.elements()[x]] = x;
    for (const auto& name : sub.elements()) {
      auto it = names.find(name);
      if (it == names.end()) return std::nullopt;
      map.push_back(it->second);
    }
  }
  if (!is_homomorphism(sub, group, map)) return std::nullopt;
  return map;
}

std::optional<FiniteGroup> builtin_group(const std::string& raw) {
  std::string name;
  for (char c : raw) {
    if (c != ' ') name += c;
  }
  if (const auto x = name.find('x'); x != std::string::npos) {
    auto a = builtin_group(name.substr(0, x));
    auto b = builtin_group(name.substr(x + 1));
    if (!a || !b) return std::nullopt;
    return FiniteGroup::direct_product(*a, *b);
  }
  if (name == "1" || name == "e") return FiniteGroup::trivial();
  auto number = [&](std::size_t from) -> std::optional<int> {
    int v = 0;
    const char* end = name.data() + name.size();
    auto [ptr, ec] = std::from_chars(name.data() + from, end, v);
    if (ec != std::errc() || ptr != end) return std::nullopt;
    return v;
  };
  if (name.rfind("Z/", 0) == 0) {
    if (auto n = number(2); n && *n >= 1) return FiniteGroup::cyclic(*n);
  } else if (name.rfind("S_", 0) == 0) {
    if (auto n = number(2); n && *n >= 0 && *n <= 7) return FiniteGroup::symmetric(*n);
  } else if (name.rfind("A_", 0) == 0) {
    if (auto n = number(2); n && *n >= 0 && *n <= 7) return FiniteGroup::alternating(*n);
  } else if (name.rfind("D_", 0) == 0) {
    if (auto n = number(2); n && *n >= 1) return FiniteGroup::dihedral(*n);
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

FiniteGroupoid::FiniteGroupoid(int objects, std::vector<Morphism> morphisms,
                               std::vector<std::vector<int>> composition)
    : objects_(objects), morphisms_(std::move(morphisms)), compose_(std::move(composition)) {
  const int n = morphism_count();
  if (objects_ < 0) throw InvalidData("negative object count");
  if (static_cast<int>(compose_.size()) != n) throw InvalidData("composition table has wrong size");
  for (const auto& f : morphisms_) {
    if (f.source < 0 || f.source >= objects_ || f.target < 0 || f.target >= objects_) {
      throw InvalidData("morphism " + f.name + " has an endpoint out of range");
    }
  }
  for (int f = 0; f < n; ++f) {
    if (static_cast<int>(compose_[f].size()) != n) throw InvalidData("composition table is not square");
    for (int g = 0; g < n; ++g) {
      const int h = compose_[f][g];
      const bool composable = morphism(f).target == morphism(g).source;
      if (composable != (h >= 0)) {
        throw InvalidData("composition of " + morphism(f).name + " and " + morphism(g).name +
                          (composable ? " is missing" : " should be undefined"));
      }
      if (h >= n) throw InvalidData("composition table entry out of range");
      if (h >= 0 && (morphism(h).source != morphism(f).source ||
                     morphism(h).target != morphism(g).target)) {
        throw InvalidData("composite of " + morphism(f).name + " and " + morphism(g).name +
                          " has wrong endpoints");
      }
    }
  }
  for (int f = 0; f < n; ++f) {
    for (int g = 0; g < n; ++g) {
      if (compose(f, g) < 0) continue;
      for (int h = 0; h < n; ++h) {
        if (compose(g, h) < 0) continue;
        if (compose(compose(f, g), h) != compose(f, compose(g, h))) {
          throw InvalidData("composition is not associative");
        }
      }
    }
  }
  identity_.assign(static_cast<std::size_t>(objects_), -1);
  for (int f = 0; f < n; ++f) {
    const int x = morphism(f).source;
    if (morphism(f).target != x || identity_[x] >= 0) continue;
    bool ok = true;
    for (int g = 0; g < n && ok; ++g) {
      if (morphism(g).source == x) ok = compose(f, g) == g;
      if (ok && morphism(g).target == x) ok = compose(g, f) == g;
    }
    if (ok) identity_[x] = f;
  }
  for (int x = 0; x < objects_; ++x) {
    if (identity_[x] < 0) throw InvalidData("object " + std::to_string(x) + " has no identity");
  }
  inverse_.assign(static_cast<std::size_t>(n), -1);
  for (int f = 0; f < n; ++f) {
    for (int g = 0; g < n; ++g) {
      if (compose(f, g) == identity(morphism(f).source) &&
          compose(g, f) == identity(morphism(f).target)) {
        inverse_[f] = g;
        break;
      }
    }
    if (inverse_[f] < 0) throw InvalidData("morphism " + morphism(f).name + " is not invertible");
  }
}

FiniteGroupoid FiniteGroupoid::from_group(const FiniteGroup& g) {
  std::vector<Morphism> morphisms;
  for (const auto& name : g.elements()) morphisms.push_back({0, 0, name});
  return {1, std::move(morphisms), g.table()};
}

FiniteGroupoid FiniteGroupoid::discrete(int objects) {
  std::vector<Morphism> morphisms;
  std::vector<std::vector<int>> compose(static_cast<std::size_t>(objects),
                                        std::vector<int>(static_cast<std::size_t>(objects), -1));
  for (int x = 0; x < objects; ++x) {
    morphisms.push_back({x, x, "id" + std::to_string(x)});
    compose[x][x] = x;
  }
  return {objects, std::move(morphisms), std::move(compose)};
}

FiniteGroupoid FiniteGroupoid::codiscrete(int objects) {
  // morphism x -> y has index x * objects + y
  std::vector<Morphism> morphisms;
  const int n = objects * objects;
  std::vector<std::vector<int>> compose(static_cast<std::size_t>(n),
                                        std::vector<int>(static_cast<std::size_t>(n), -1));
  for (int x = 0; x < objects; ++x) {
    for (int y = 0; y < objects; ++y) {
      morphisms.push_back({x, y, std::to_string(x) + "->" + std::to_string(y)});
    }
  }
  for (int f = 0; f < n; ++f) {
    for (int g = 0; g < n; ++g) {
      if (f % objects == g / objects) compose[f][g] = (f / objects) * objects + g % objects;
    }
  }
  return {objects, std::move(morphisms), std::move(compose)};
}

}  // namespace tcs
