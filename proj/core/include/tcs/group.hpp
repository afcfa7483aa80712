#pragma once

// Finite groups and groupoids given by multiplication tables.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace tcs {

class FiniteGroup {
 public:
  FiniteGroup() = default;
  /// Validates closure, associativity, identity and inverses; throws
  /// InvalidData otherwise. table[a][b] = a * b.
  FiniteGroup(std::vector<std::string> elements,
              std::vector<std::vector<int>> table, std::string label = {});

  static FiniteGroup trivial();
  static FiniteGroup cyclic(int n);
  /// Permutations of {0..n-1} in lexicographic order; (a * b)(i) = a(b(i)).
  static FiniteGroup symmetric(int n);
  static FiniteGroup alternating(int n);
  /// The symmetries of the n-gon, of order 2n.
  static FiniteGroup dihedral(int n);
  static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

  int size() const { return static_cast<int>(elements_.size()); }
  int identity() const { return identity_; }
  int multiply(int a, int b) const {
    return table_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
  }
  int inverse(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
  int order(int a) const;
  bool is_abelian() const;
  const std::vector<std::string>& elements() const { return elements_; }
  const std::vector<std::vector<int>>& table() const { return table_; }
  const std::string& label() const { return label_; }

 private:
  std::vector<std::string> elements_;
  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
  int identity_ = 0;
  std::string label_;
};

bool is_homomorphism(const FiniteGroup& a, const FiniteGroup& b,
                     const std::vector<int>& map);
/// A group isomorphism a -> b as an element map, found by searching images
/// of a generating set.
std::optional<std::vector<int>> find_isomorphism(const FiniteGroup& a,
                                                 const FiniteGroup& b);
/// Element map of the standard embedding of a named subgroup, e.g. A_n in
/// S_n or Z/m in Z/n; std::nullopt if none is known.
std::optional<std::vector<int>> standard_inclusion(const FiniteGroup& sub,
                                                   const FiniteGroup& group);

/// Parses "Z/n", "S_n", "A_n", "D_n" or "1".
std::optional<FiniteGroup> builtin_group(const std::string& name);

class FiniteGroupoid {
 public:
  struct Morphism {
    int source = 0;
    int target = 0;
    std::string name;
  };

  FiniteGroupoid() = default;
  /// compose[f][g] is "f then g" when target(f) == source(g), else -1.
  /// Validates the category axioms and invertibility.
  FiniteGroupoid(int objects, std::vector<Morphism> morphisms,
                 std::vector<std::vector<int>> composition);

  static FiniteGroupoid from_group(const FiniteGroup& g);
  static FiniteGroupoid discrete(int objects);
  /// Exactly one morphism between any two objects.
  static FiniteGroupoid codiscrete(int objects);

  int objects() const { return objects_; }
  int morphism_count() const { return static_cast<int>(morphisms_.size()); }
  const Morphism& morphism(int f) const { return morphisms_[static_cast<std::size_t>(f)]; }
  int compose(int f, int g) const {
    return compose_[static_cast<std::size_t>(f)][static_cast<std::size_t>(g)];
  }
  int identity(int object) const { return identity_[static_cast<std::size_t>(object)]; }
  int inverse(int f) const { return inverse_[static_cast<std::size_t>(f)]; }
  const std::vector<Morphism>& morphisms() const { return morphisms_; }
  const std::vector<std::vector<int>>& composition() const { return compose_; }

 private:
  int objects_ = 0;
  std::vector<Morphism> morphisms_;
  std::vector<std::vector<int>> compose_;
  std::vector<int> identity_;
  std::vector<int> inverse_;
};

}  // namespace tcs
