#pragma once

// Constructors and categorical operations producing Kan complexes.

#include <vector>

#include "tcs/group.hpp"
#include "tcs/kan.hpp"
#include "tcs/simplicial.hpp"

namespace tcs {

/// n points at bound 1.
BoundedKanComplex discrete(std::size_t n);
/// The one-point space at the given bound.
BoundedKanComplex point(int bound = 1);

/// Level k: composable strings f_1 .. f_k (f_i then f_{i+1}); d_0 drops the
/// first arrow, d_k the last, the inner faces compose. Stored at bound 2.
BoundedKanComplex nerve_groupoid(const FiniteGroupoid& g);
/// Nerve of the one-object groupoid of g.
BoundedKanComplex classifying_space(const FiniteGroup& g);

/// K(G, n) from normalized G-valued n-cocycles on the simplices, stored at
/// bound n+1. Throws NonAbelian when n >= 2 and G is not abelian.
BoundedKanComplex eilenberg_maclane(const FiniteGroup& g, int n);

/// Replacement of f : X -> Y by the fibration X' -> Y, with X' the pairs of
/// a simplex of X and a path in Y out of its image.
struct FibrantReplacement {
  BoundedKanComplex space;  // X'
  SimplicialMap fibration;  // X' -> Y, the far end of the path
  SimplicialMap section;    // X -> X', constant paths; an equivalence
  SimplicialMap retraction; // X' -> X
};
FibrantReplacement fibrant_replace(const SimplicialMap& f);

struct HomotopyPullback {
  BoundedKanComplex space;
  SimplicialMap first;   // -> source of f
  SimplicialMap second;  // -> source of g
};
/// X x_Y P(Y) x_Y Z: pairs of points joined by a path in Y, which is the
/// strict pullback of the fibrant replacement of f along g.
HomotopyPullback homotopy_pullback(const SimplicialMap& f, const SimplicialMap& g);

/// Loops at a vertex: the homotopy pullback of x : 1 -> X along itself.
BoundedKanComplex loop_space(const BoundedKanComplex& x, SimplexId basepoint);

/// Homotopy fibre of f over a vertex of its target.
HomotopyPullback homotopy_fiber(const SimplicialMap& f, SimplexId y);

/// Left action of a group by simplicial automorphisms; action[g][k][x] is
/// the image of the k-simplex x under g, for k up to the space's bound.
class GroupAction {
 public:
  GroupAction(FiniteGroup group, BoundedKanComplex space,
              std::vector<std::vector<std::vector<SimplexId>>> action);

  /// Acts on vertices only; higher simplices follow (valid when the space is
  /// determined by its vertices, e.g. discrete spaces).
  static GroupAction on_vertices(FiniteGroup group, BoundedKanComplex space,
                                 const std::vector<std::vector<SimplexId>>& vertex_action);
  static GroupAction trivial(FiniteGroup group, BoundedKanComplex space);

  const FiniteGroup& group() const { return group_; }
  const BoundedKanComplex& space() const { return space_; }
  SimplexId act(int g, int k, SimplexId x) const {
    return action_[static_cast<std::size_t>(g)][static_cast<std::size_t>(k)][x];
  }
  const std::vector<std::vector<std::vector<SimplexId>>>& table() const { return action_; }
  /// The same action on the space raised to a higher bound.
  GroupAction raised(int bound) const;

 private:
  FiniteGroup group_;
  BoundedKanComplex space_;
  std::vector<std::vector<std::vector<SimplexId>>> action_;
};

/// Borel construction X // G: level k is G^k x X_k.
BoundedKanComplex homotopy_quotient(const GroupAction& a);
/// The map X -> X // G, x |-> (e, .., e; x), from the acted-on space raised
/// to the quotient's bound.
SimplicialMap quotient_map(const GroupAction& a, const BoundedKanComplex& quotient);

struct DependentProduct {
  BoundedKanComplex space;
  SimplicialMap projection;  // to the base Y
};
/// Pi along f of p. Level k over a k-simplex s of Y consists of the maps
/// Delta[k] x_Y X -> E over X. Throws NotFibration unless p and f are
/// fibrations.
DependentProduct dependent_product(const SimplicialMap& p, const SimplicialMap& f);

/// The coproduct of B(S_k) for k = 0..n. Throws SizeCapExceeded above the
/// configured universe cap.
BoundedKanComplex symmetric_universe(int n);

}  // namespace tcs
