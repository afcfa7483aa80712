#pragma once

// Enumeration of simplicial maps and the mapping-space constructions built
// on it.
//
// Maps out of a finite domain are found by backtracking over its
// nondegenerate simplices. Vertices are taken in increasing order and every
// higher simplex right after the last of its faces, so face constraints
// prune early. Images of degenerate simplices follow from their
// Eilenberg-Zilber form, and a candidate image for a nondegenerate
// k-simplex must have the already-assigned images of its faces.

#include <functional>
#include <memory>
#include <span>
#include <unordered_map>
#include <vector>

#include "tcs/kan.hpp"
#include "tcs/simplicial.hpp"

namespace tcs {

/// Image tables indexed [level][simplex]; kNoSimplex marks unassigned.
using ImageTable = std::vector<std::vector<SimplexId>>;

struct MapConstraints {
  /// Prescribed images (kNoSimplex = free); empty = none. Only entries on
  /// nondegenerate simplices are consulted.
  ImageTable fixed;
  /// Require over->operator()(level, image(x)) == required[level][x].
  const SimplicialMap* over = nullptr;
  ImageTable required;
  /// Extra pruning hook, consulted for every candidate image. `partial`
  /// holds the images of the nondegenerate simplices assigned so far.
  std::function<bool(int level, SimplexId x, SimplexId candidate,
                     const ImageTable& partial)>
      admissible;
};

/// Calls `visit` with the full image table of every simplicial map
/// domain -> target satisfying the constraints, in enumeration order.
/// `visit` returns false to stop. Returns the number of maps visited.
std::size_t enumerate_maps(const SimplicialSet& domain,
                           const SimplicialSet& target,
                           const MapConstraints& constraints,
                           const std::function<bool(const ImageTable&)>& visit);

/// All maps as SimplicialMap values (bounded by the simplex cap).
std::vector<SimplicialMap> all_maps(const SimplicialSetPtr& domain,
                                    const SimplicialSetPtr& target,
                                    const MapConstraints& constraints = {});

/// A family of mapping spaces parametrised by a complex P: level k consists
/// of pairs (p in P_k, map g from a subcomplex D(k, p) of A x Delta[k] to T).
/// Faces and degeneracies act on p and by precomposition with
/// A x delta^i and A x sigma^j. D(k, p) must pull back along those maps to
/// D(k-1, d_i p) and D(k+1, s_j p).
struct SectionProblem {
  SimplicialSetPtr params;
  SimplicialSetPtr ambient;
  SimplicialSetPtr target;
  /// Membership of (a, theta) in D(k, p); null means all of A x Delta[k].
  std::function<bool(int k, SimplexId p, int m, SimplexId a,
                     const SimplicialOperator& theta)>
      in_domain;
  /// Prescribed image of (a, theta) over (k, p), or kNoSimplex.
  std::function<SimplexId(int k, SimplexId p, int m, SimplexId a,
                          const SimplicialOperator& theta)>
      fixed;
  /// Optional projection T -> W and the required image of (a, theta) in W.
  const SimplicialMap* over = nullptr;
  std::function<SimplexId(int k, SimplexId p, int m, SimplexId a,
                          const SimplicialOperator& theta)>
      required;
  /// Number of levels to compute; defaults to the common bound.
  int max_level = -1;
};

class SectionSpace {
 public:
  explicit SectionSpace(const SectionProblem& problem);

  const BoundedKanComplex& complex() const { return complex_; }
  const SimplicialSetPtr& space() const { return complex_.ptr(); }
  int bound() const { return complex_.bound(); }
  /// The projection to the parameter complex (truncated to this bound).
  const SimplicialMap& projection() const { return projection_; }
  const SimplicialSetPtr& target() const { return target_; }
  const SimplicialSetPtr& ambient() const { return ambient_; }

  SimplexId param(int k, SimplexId element) const;
  /// Images over the simplices of A x Delta[k] (levels concatenated);
  /// kNoSimplex outside D(k, p).
  std::span<const SimplexId> images(int k, SimplexId element) const;
  /// Offset of (a, theta) inside images(k, .), theta : [m] -> [k].
  std::size_t flat_index(int k, SimplexId a,
                         const SimplicialOperator& theta) const;
  /// Looks up (p, images); kNoSimplex if absent.
  SimplexId find(int k, SimplexId p, std::span<const SimplexId> images) const;
  /// The image of (a, identity_k) for an element at level k; for the hom
  /// complex this is evaluation at the simplex a.
  SimplexId evaluate(int k, SimplexId element, SimplexId a) const;
  std::size_t stride(int k) const { return layout_[static_cast<std::size_t>(k)].stride; }

 private:
  struct Layout {
    std::vector<std::size_t> offsets;  // per level m of A x Delta[k]
    std::size_t stride = 0;
  };
  struct Level {
    std::vector<SimplexId> params;
    std::vector<SimplexId> data;  // count * stride
    std::unordered_map<std::uint64_t, std::vector<SimplexId>> index;
  };

  std::uint64_t key(SimplexId p, std::span<const SimplexId> images) const;
  void insert(int k, SimplexId p, std::vector<SimplexId> images);

  SimplicialSetPtr params_;
  SimplicialSetPtr ambient_;
  SimplicialSetPtr target_;
  std::vector<Layout> layout_;
  std::vector<Level> levels_;
  BoundedKanComplex complex_;
  SimplicialMap projection_;
};

/// Mapping complex hom(A, Y) stored at Y's bound (or `max_level` when
/// given, which yields its truncation). Level k consists of all maps
/// tr(A x Delta[k]) -> Y.
class MappingSpace {
 public:
  MappingSpace(const SimplicialSetPtr& domain, const BoundedKanComplex& target,
               int max_level = -1);

  const BoundedKanComplex& complex() const { return sections_->complex(); }
  const SectionSpace& sections() const { return *sections_; }
  const SimplicialSetPtr& domain() const { return domain_; }

  /// The vertex of hom(A, Y) corresponding to a map A -> Y.
  SimplexId vertex_of(const SimplicialMap& f) const;
  /// The map A -> Y named by a vertex.
  SimplicialMap map_of(SimplexId vertex) const;
  /// Evaluation at a vertex of A, as a map hom(A, Y) -> Y.
  SimplicialMap evaluation(SimplexId a) const;

 private:
  SimplicialSetPtr domain_;
  SimplicialSetPtr target_;
  std::shared_ptr<const SectionSpace> sections_;
};

BoundedKanComplex hom_complex(const AuxiliaryDomain& a, const BoundedKanComplex& y);
BoundedKanComplex hom_complex(const BoundedKanComplex& a,
                              const BoundedKanComplex& y);

/// The domain data for mapping out of a Kan complex or auxiliary domain at
/// a given bound (coskeletal resp. skeletal extension).
SimplicialSetPtr domain_at_bound(const BoundedKanComplex& a, int bound);
SimplicialSetPtr domain_at_bound(const AuxiliaryDomain& a, int bound);

}  // namespace tcs
