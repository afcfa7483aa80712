#pragma once

// Homotopy invariants of bounded Kan complexes and the decision procedure
// for homotopy equivalence.

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tcs/group.hpp"
#include "tcs/kan.hpp"
#include "tcs/simplicial.hpp"

namespace tcs {

/// Path components; each is based at its least vertex.
struct Components {
  std::vector<int> of_vertex;
  std::vector<SimplexId> basepoints;
  std::size_t count() const { return basepoints.size(); }
  /// Component of a k-simplex (that of its last vertex).
  int of_simplex(const SimplicialSet& x, int k, SimplexId s) const;
};

Components pi0(const SimplicialSet& x);
inline Components pi0(const BoundedKanComplex& x) { return pi0(x.data()); }

/// pi_n(X, x) for n >= 1: classes of n-simplices with every face at the
/// degenerate basepoint, and the group structure from horn fillers. For
/// n = 0 the carrier lists the component basepoints and group() is empty.
class HomotopyGroup {
 public:
  int degree() const { return degree_; }
  SimplexId basepoint() const { return basepoint_; }
  std::size_t order() const { return representatives_.size(); }
  const std::vector<SimplexId>& representatives() const { return representatives_; }
  const FiniteGroup& group() const { return group_; }
  bool trivial() const { return order() == 1; }
  /// Class index of a spherical n-simplex, -1 if it is not spherical.
  int class_of(SimplexId sphere) const;

 private:
  friend struct HomotopyGroupBuilder;
  int degree_ = 0;
  SimplexId basepoint_ = 0;
  std::vector<SimplexId> representatives_;
  std::vector<SimplexId> spheres_;
  std::vector<int> sphere_class_;
  FiniteGroup group_;
};

/// Throws InvalidData when `basepoint` is not a vertex or the homotopy
/// relation turns out not to be transitive (a complex that is not Kan).
HomotopyGroup pi_n(const BoundedKanComplex& x, SimplexId basepoint, int n);
/// The same computation on data whose Kan property the caller vouches for.
HomotopyGroup pi_n(const SimplicialSet& x, SimplexId basepoint, int n);

using Rational = boost::multiprecision::cpp_rational;

struct HomotopyCardinality {
  Rational value;
  bool empty_space() const { return value == 0; }
  /// "p/q", or "p" when q = 1.
  std::string str() const;
};
HomotopyCardinality homotopy_cardinality(const BoundedKanComplex& x);

struct EquivalenceCheck {
  bool equivalent = false;
  std::string diagnostic;  // why not, when not
};
/// Whitehead test: pi_0 bijective and pi_n(f) an isomorphism for
/// 1 <= n < B at the basepoint of every source component.
EquivalenceCheck is_equivalence(const SimplicialMap& f);

enum class Verdict { yes, no, inconclusive };
const char* to_string(Verdict v);

struct EquivalenceDecision {
  Verdict verdict = Verdict::inconclusive;
  std::optional<SimplicialMap> witness;
  /// Maps examined; for "no" after enumeration, the exhaustive count.
  std::size_t candidates = 0;
  std::string reason;
};
/// Decides X ~ Y. Invariants (pi_0 and the homotopy groups per component)
/// reject quickly. Otherwise each pair of components with matching
/// invariants is decided by enumerating basepoint-preserving maps between
/// them, and a perfect matching of equivalent pairs assembles the witness.
/// Cap or timeout yields an inconclusive decision.
EquivalenceDecision are_equivalent(const BoundedKanComplex& x, const BoundedKanComplex& y);

/// Every homotopy fibre of f (one per target component) is empty or
/// contractible.
bool is_mono(const SimplicialMap& f);

/// True when every homotopy group of every component is trivial and there
/// is exactly one component.
bool is_contractible(const BoundedKanComplex& x);

/// A subobject, given by the set of components it contains.
struct Subobject {
  std::vector<bool> components;
  BoundedKanComplex space;
  SimplicialMap inclusion;
};
/// All 2^{|pi_0|} subsets of components, in binary counting order.
std::vector<std::vector<bool>> subobjects(const BoundedKanComplex& x);
Subobject subobject(const BoundedKanComplex& x, const std::vector<bool>& components);
/// The characteristic map X -> 2 (vertex 1 is "true").
SimplicialMap classify_subobject(const BoundedKanComplex& x,
                                 const std::vector<bool>& components);
/// Pulls "true" back along a map X -> 2.
Subobject pullback_of_true(const BoundedKanComplex& x, const SimplicialMap& chi);

/// Homotopy fibre over y of evaluation at x, hom(X, Y) -> Y.
BoundedKanComplex pointed_hom(const BoundedKanComplex& x, SimplexId xv,
                              const BoundedKanComplex& y, SimplexId yv);

/// A name for a small group up to isomorphism (Z/n, products of two
/// cyclic groups, S_n, A_n, D_n), or "order-N".
std::string identify_group(const FiniteGroup& g);

struct ComponentInvariants {
  SimplexId basepoint = 0;
  std::vector<HomotopyGroup> groups;  // pi_1 .. pi_{B-1}
};
struct InvariantReport {
  int bound = 0;
  std::vector<ComponentInvariants> components;
  HomotopyCardinality cardinality;
};
InvariantReport invariant_report(const BoundedKanComplex& x);
std::string to_text(const InvariantReport& r);
/// {"pi0": n, "components": [{"basepoint", "pi": [{"n", "order", "group"}]}],
///  "cardinality": "p/q"}
std::string to_json(const InvariantReport& r);
/// The multiplication table of a homotopy group as text.
std::string group_table_text(const HomotopyGroup& g);

}  // namespace tcs
