#pragma once

#include "tcs/kan.hpp"
#include "tcs/simplicial.hpp"

namespace tcs {

struct ProductData {
  SimplicialSetPtr space;
  SimplicialMap first;
  SimplicialMap second;
};

/// Levelwise product of truncated data at equal bound. The pair (x, y) at
/// level k has id x * |Y_k| + y.
ProductData product_data(const SimplicialSetPtr& x, const SimplicialSetPtr& y);

struct CoproductData {
  SimplicialSetPtr space;
  SimplicialMap left;
  SimplicialMap right;
};

/// Levelwise disjoint union; the summands keep their ids, Y shifted by |X_k|.
CoproductData coproduct_data(const SimplicialSetPtr& x,
                             const SimplicialSetPtr& y);

/// Levelwise {(a, b) : f(a) = g(b)} with its two projections.
struct StrictPullback {
  SimplicialSetPtr space;
  SimplicialMap first;
  SimplicialMap second;
};
StrictPullback strict_pullback(const SimplicialMap& f, const SimplicialMap& g);

BoundedKanComplex product(const BoundedKanComplex& x, const BoundedKanComplex& y);
BoundedKanComplex coproduct(const BoundedKanComplex& x,
                            const BoundedKanComplex& y);

/// Coproduct with its summand inclusions (bounds equalized first).
struct KanCoproduct {
  BoundedKanComplex space;
  SimplicialMap left;
  SimplicialMap right;
};
KanCoproduct coproduct_with_inclusions(const BoundedKanComplex& x,
                                       const BoundedKanComplex& y);

struct KanProduct {
  BoundedKanComplex space;
  SimplicialMap first;
  SimplicialMap second;
};
KanProduct product_with_projections(const BoundedKanComplex& x,
                                    const BoundedKanComplex& y);

}  // namespace tcs
