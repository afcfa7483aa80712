#pragma once

// Kan complexes with coskeletal semantics, auxiliary (skeletal) domains and
// the horn-filling checks.
//
// A BoundedKanComplex stored at bound B denotes cosk_B of its data. Horns
// of dimension <= B are filled by stored simplices, horns of dimension B+1
// by completing a sphere with a stored B-simplex, and fillers above B+1 are
// unique, so they are never searched. The finite-cover characterization of
// coherence needs no check here: every level is a finite set by
// construction.

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tcs/simplicial.hpp"

namespace tcs {

enum class Certification {
  searched,         // kan_check enumerated every horn
  by_construction,  // output of an operation that preserves Kan complexes
};

class KanCheckResult;
KanCheckResult kan_check(const SimplicialSetPtr& data);

class BoundedKanComplex {
 public:
  BoundedKanComplex() = default;

  const SimplicialSet& data() const { return *data_; }
  const SimplicialSetPtr& ptr() const { return data_; }
  int bound() const { return data_->bound(); }
  bool kan_certified() const { return static_cast<bool>(data_); }
  Certification certification() const { return certification_; }

  /// Wraps the result of an operation known to produce Kan complexes
  /// (products, truncations, mapping spaces into Kan targets, ...).
  static BoundedKanComplex by_construction(SimplicialSetPtr data);

 private:
  friend KanCheckResult kan_check(const SimplicialSetPtr& data);
  BoundedKanComplex(SimplicialSetPtr data, Certification c)
      : data_(std::move(data)), certification_(c) {}

  SimplicialSetPtr data_;
  Certification certification_ = Certification::searched;
};

/// A finite simplicial set used only as a mapping-space domain or lifting
/// shape. Levels above the stored bound are degenerate (skeletal extension).
class AuxiliaryDomain {
 public:
  AuxiliaryDomain() = default;
  explicit AuxiliaryDomain(SimplicialSetPtr data) : data_(std::move(data)) {}

  const SimplicialSet& data() const { return *data_; }
  const SimplicialSetPtr& ptr() const { return data_; }
  int bound() const { return data_->bound(); }

  /// The same simplicial set at another bound: truncation, or skeletal
  /// extension by degenerate simplices.
  AuxiliaryDomain at_bound(int bound) const;

 private:
  SimplicialSetPtr data_;
};

/// A horn Lambda^k_i: `faces` has k+1 entries of dimension k-1 with
/// kNoSimplex at `missing`.
struct Horn {
  int dimension = 0;
  int missing = 0;
  std::vector<SimplexId> faces;
  std::string describe() const;
};

class KanCheckResult {
 public:
  bool certified() const { return complex_.has_value(); }
  const BoundedKanComplex& complex() const { return *complex_; }
  const std::optional<Horn>& counterexample() const { return counterexample_; }
  std::size_t horns_checked() const { return horns_checked_; }

 private:
  friend KanCheckResult kan_check(const SimplicialSetPtr& data);
  std::optional<BoundedKanComplex> complex_;
  std::optional<Horn> counterexample_;
  std::size_t horns_checked_ = 0;
};

/// Certifies horn filling in dimensions 1..B+1 or returns an unfillable
/// horn. Throws InvalidData when the simplicial identities fail.
KanCheckResult kan_check(const SimplicialSetPtr& data);

/// kan_check that throws NotKan on failure.
BoundedKanComplex require_kan(const SimplicialSetPtr& data);

struct LiftingProblem {
  Horn horn;  // in the source
  /// For dimension <= B the target k-simplex under the horn; for dimension
  /// B+1 the target B-simplex that completes the image sphere.
  SimplexId target_simplex = kNoSimplex;
  std::string describe() const;
};

struct FibrationResult {
  bool fibration = false;
  std::optional<LiftingProblem> counterexample;
};

/// Decides the right lifting property against every horn inclusion of
/// dimension 1..B+1. Throws BoundMismatch if the bounds differ.
FibrationResult is_fibration(const SimplicialMap& f);

// -- Compatible families -----------------------------------------------------

/// True when d_a y_b = d_{b-1} y_a for a < b, on (k-1)-simplices at level k-1.
bool faces_compatible(const SimplicialSet& x, int level, int a, SimplexId ya,
                      int b, SimplexId yb);

/// Enumerates families (y_j) indexed by `indices` (increasing) of
/// (k-1)-simplices that are pairwise compatible as faces of a k-simplex.
/// `visit` receives the family in index order and returns false to stop.
/// Returns false if stopped early.
bool for_each_compatible_family(
    const SimplicialSet& x, int k, std::span<const int> indices,
    const std::function<bool(std::span<const SimplexId>)>& visit);

/// Stored k-simplices (k <= bound) whose faces agree with `faces` wherever
/// the entry is not kNoSimplex.
std::vector<SimplexId> simplices_with_faces(const SimplicialSet& x, int k,
                                            std::span<const SimplexId> faces);

/// (k-1)-simplices that complete the family `faces` (one kNoSimplex entry at
/// `missing`) to a compatible sphere.
std::vector<SimplexId> sphere_completions(const SimplicialSet& x, int k,
                                          std::span<const SimplexId> faces,
                                          int missing);

}  // namespace tcs
