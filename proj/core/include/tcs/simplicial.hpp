#pragma once

// Finite truncated simplicial sets.
//
// A SimplicialSet stores levels 0..bound. Every simplex of every stored
// level is materialized with its face and degeneracy pointers, and carries
// its Eilenberg-Zilber form: a nondegenerate base simplex plus a canonical
// (strictly decreasing) degeneracy word, packed as a bit mask of the
// repeated positions of the corresponding surjection.
//
// Whether the stored data denotes its coskeleton (a bounded Kan complex) or
// its skeleton (an auxiliary domain such as a horn or a circle) is decided
// by the wrapper types in kan.hpp; this header is agnostic.

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace tcs {

using SimplexId = std::uint32_t;
inline constexpr SimplexId kNoSimplex = 0xffffffffu;

/// An order-preserving map [source_dim] -> [target_dim]. Acting on a simplex
/// x of dimension target_dim yields x.theta of dimension source_dim.
class SimplicialOperator {
 public:
  SimplicialOperator() = default;
  SimplicialOperator(int target_dim, std::vector<int> values);

  static SimplicialOperator identity(int n);
  /// delta^i : [n-1] -> [n], skipping i.
  static SimplicialOperator coface(int n, int i);
  /// sigma^i : [n+1] -> [n], hitting i twice.
  static SimplicialOperator codegeneracy(int n, int i);
  /// The surjection [n] -> [n - popcount(mask)] whose repeated positions
  /// (t with theta(t) == theta(t+1)) are the set bits of `mask`.
  static SimplicialOperator surjection_from_mask(int n, std::uint32_t mask);

  int source_dim() const { return static_cast<int>(values_.size()) - 1; }
  int target_dim() const { return target_dim_; }
  int operator()(int t) const { return values_[static_cast<std::size_t>(t)]; }
  const std::vector<int>& values() const { return values_; }

  bool is_injective() const;
  bool is_surjective() const;
  /// Repeated positions as a bit mask.
  std::uint32_t repeat_mask() const;
  /// Image as a sorted list (for the injective part of the factorization).
  std::vector<int> image() const;

  /// (this o inner)(t) = this(inner(t)).
  SimplicialOperator after(const SimplicialOperator& inner) const;

  friend bool operator==(const SimplicialOperator&,
                         const SimplicialOperator&) = default;

 private:
  int target_dim_ = 0;
  std::vector<int> values_{0};
};

/// All order-preserving maps [m] -> [k] in lexicographic order.
const std::vector<SimplicialOperator>& operators_between(int m, int k);
/// Index of an operator within operators_between(source, target).
std::size_t operator_index(const SimplicialOperator& op);

/// A word in face and degeneracy letters, applied right to left: the word
/// {d_i, s_j} sends x to d_i(s_j(x)).
struct OperatorLetter {
  enum class Kind : std::uint8_t { face, degeneracy };
  Kind kind;
  int index;
  friend bool operator==(const OperatorLetter&, const OperatorLetter&) = default;
};
using OperatorWord = std::vector<OperatorLetter>;

/// Rewrites a word into s_{i1}..s_{ik} d_{j1}..d_{jl} with i1 > .. > ik and
/// j1 < .. < jl using the simplicial identities.
OperatorWord normalize_word(OperatorWord word);
/// The operator the word denotes when applied to simplices of dimension n.
SimplicialOperator word_operator(const OperatorWord& word, int n);
std::string to_string(const OperatorWord& word);

class SimplicialSet {
 public:
  /// Raw per-level tables. `faces` has count*(k+1) entries ordered by
  /// simplex then index; `degeneracies` likewise, and is empty on the top
  /// level.
  struct LevelTables {
    std::size_t count = 0;
    std::vector<SimplexId> faces;
    std::vector<SimplexId> degeneracies;
  };

  SimplicialSet() = default;

  /// Takes ownership of the tables, derives Eilenberg-Zilber forms and face
  /// indexes. Inconsistent tables are accepted; validate_identities reports
  /// the problems.
  static SimplicialSet from_tables(int bound, std::vector<LevelTables> levels);

  int bound() const { return bound_; }
  std::size_t size(int k) const { return levels_[idx(k)].count; }
  std::size_t total_size() const;
  std::size_t nondegenerate_count(int k) const;
  bool empty() const { return levels_.empty() || levels_[0].count == 0; }

  SimplexId face(int k, SimplexId x, int i) const {
    return levels_[idx(k)].faces[x * static_cast<std::size_t>(k + 1) +
                                 static_cast<std::size_t>(i)];
  }
  SimplexId degeneracy(int k, SimplexId x, int i) const {
    return levels_[idx(k)].degeneracies[x * static_cast<std::size_t>(k + 1) +
                                        static_cast<std::size_t>(i)];
  }
  std::span<const SimplexId> faces(int k, SimplexId x) const;

  bool is_degenerate(int k, SimplexId x) const {
    return levels_[idx(k)].mask[x] != 0;
  }
  SimplexId base(int k, SimplexId x) const { return levels_[idx(k)].base[x]; }
  std::uint32_t degeneracy_mask(int k, SimplexId x) const {
    return levels_[idx(k)].mask[x];
  }
  /// Canonical degeneracy word, strictly decreasing.
  std::vector<int> degeneracy_word(int k, SimplexId x) const;
  /// Nondegenerate simplices of level k, increasing.
  const std::vector<SimplexId>& nondegenerate(int k) const {
    return levels_[idx(k)].nondegenerate;
  }

  /// x.theta for x of dimension theta.target_dim(); kNoSimplex if the result
  /// lies above the bound.
  SimplexId act(SimplexId x, const SimplicialOperator& theta) const;
  /// s_0^k applied to a vertex.
  SimplexId degenerate_vertex(SimplexId v, int k) const;
  /// Simplices of level k whose i-th face is `f`.
  std::span<const SimplexId> with_face(int k, int i, SimplexId f) const;

  /// Problems found while deriving Eilenberg-Zilber forms.
  const std::vector<std::string>& ez_conflicts() const { return conflicts_; }

  const LevelTables& tables(int k) const;
  /// Levels 0..new_bound of this set (new_bound <= bound).
  SimplicialSet truncated(int new_bound) const;

  friend bool operator==(const SimplicialSet& a, const SimplicialSet& b);

 private:
  struct Level : LevelTables {
    std::vector<SimplexId> base;
    std::vector<std::uint32_t> mask;
    std::vector<SimplexId> nondegenerate;
    // Face index: for face i, CSR over the previous level.
    std::vector<std::vector<std::uint32_t>> bucket_offsets;
    std::vector<std::vector<SimplexId>> bucket_items;
  };

  static std::size_t idx(int k) { return static_cast<std::size_t>(k); }
  void derive_forms();
  void build_indexes();

  int bound_ = 0;
  std::vector<Level> levels_;
  std::vector<std::string> conflicts_;
};

using SimplicialSetPtr = std::shared_ptr<const SimplicialSet>;

inline SimplicialSetPtr share(SimplicialSet s) {
  return std::make_shared<const SimplicialSet>(std::move(s));
}

/// Levelwise function between truncated data of equal bound.
class SimplicialMap {
 public:
  SimplicialMap() = default;
  SimplicialMap(SimplicialSetPtr source, SimplicialSetPtr target,
                std::vector<std::vector<SimplexId>> images);

  static SimplicialMap identity(const SimplicialSetPtr& space);
  /// The map that sends everything to the degeneracies of vertex `v`.
  static SimplicialMap constant(const SimplicialSetPtr& source,
                                const SimplicialSetPtr& target, SimplexId v);

  const SimplicialSet& source() const { return *source_; }
  const SimplicialSet& target() const { return *target_; }
  const SimplicialSetPtr& source_ptr() const { return source_; }
  const SimplicialSetPtr& target_ptr() const { return target_; }
  int bound() const { return source_->bound(); }

  SimplexId operator()(int k, SimplexId x) const {
    return images_[static_cast<std::size_t>(k)][x];
  }
  const std::vector<SimplexId>& level(int k) const {
    return images_[static_cast<std::size_t>(k)];
  }
  const std::vector<std::vector<SimplexId>>& images() const { return images_; }

  /// this o first.
  SimplicialMap after(const SimplicialMap& first) const;

  /// Empty when the map commutes with all faces and degeneracies, otherwise
  /// a description of the first failure.
  std::string check() const;

 private:
  SimplicialSetPtr source_;
  SimplicialSetPtr target_;
  std::vector<std::vector<SimplexId>> images_;
};

struct IdentityViolation {
  std::string identity;  // e.g. "d_0 d_1 = d_0 d_0"
  int dimension = 0;
  SimplexId simplex = 0;
  int i = 0;
  int j = 0;
};

struct ValidationReport {
  std::vector<IdentityViolation> violations;
  bool valid() const { return violations.empty(); }
  std::string summary(std::size_t max_lines = 8) const;
};

/// Checks every simplicial identity whose two sides are stored, and that
/// every Eilenberg-Zilber form is canonical.
ValidationReport validate_identities(const SimplicialSet& data);

}  // namespace tcs
