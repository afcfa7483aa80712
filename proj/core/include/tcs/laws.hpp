#pragma once

// Checkers for the pretopos, local cartesian closure and subobject
// classifier laws on concrete instances. Laws are checked on homotopy
// classes: equivalences are decided with are_equivalent and mapping spaces
// are compared through pi_0.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "tcs/kan.hpp"
#include "tcs/simplicial.hpp"
#include "tcs/spaces.hpp"

namespace tcs {

enum class LawVerdict { pass, fail, inconclusive };
const char* to_string(LawVerdict v);

/// The inputs of one law check; enough to replay it.
struct LawInstance {
  std::string law;  // sum_descent, groupoid_effectivity, lcc_adjunction,
                    // subobject_classifier, free_loops
  std::string description;
  std::vector<BoundedKanComplex> spaces;
  std::optional<SimplicialMap> map;    // sum_descent: Z -> X + Y
  std::optional<GroupAction> action;   // groupoid_effectivity
  std::optional<FiniteGroup> group;    // free_loops
};

struct LawReport {
  std::string law;
  std::string instance;
  LawVerdict verdict = LawVerdict::inconclusive;
  std::string detail;
  /// Serialized LawInstance; always set on failure.
  std::optional<std::string> witness;

  /// FNV-1a of the instance description, 16 hex digits.
  std::string instance_hash() const;
  /// "LAW <name> <instance-hash> PASS|FAIL|INCONCLUSIVE"
  std::string line() const;
};

/// Z decomposes along h : Z -> X + Y into the preimages of the summands,
/// and the two summand inclusions have empty pullback.
LawReport check_sum_descent(const BoundedKanComplex& x, const BoundedKanComplex& y,
                            const SimplicialMap& h);
/// The Cech levels of X -> X // G agree with X, G x X and G x G x X.
LawReport check_groupoid_effectivity(const GroupAction& a);
/// pi_0 hom(Z x X, Y) and pi_0 hom(Z, hom(X, Y)) correspond under currying.
LawReport check_lcc_adjunction(const BoundedKanComplex& z, const BoundedKanComplex& x,
                               const BoundedKanComplex& y);
/// Sub(X) and pi_0 hom(X, 2) correspond under classification and pullback
/// of true, and 2 is the sum 1 + 1.
LawReport check_subobject_classifier(const BoundedKanComplex& x);
/// pi_0 hom(S^1, X) counts conjugacy classes when X = B(G); `group` names G.
LawReport check_free_loops(const FiniteGroup& group);

LawReport check_law(const LawInstance& instance);

nlohmann::json instance_to_json(const LawInstance& instance);
LawInstance instance_from_json(const nlohmann::json& j);
/// Re-runs the check recorded in a witness file.
LawReport replay_witness(const std::filesystem::path& path);

struct SuiteOptions {
  std::uint64_t seed = 1;
  std::size_t simplex_cap = 100000;
  /// Directory for witness files of failing checks; empty = none written.
  std::filesystem::path witness_dir;
};

/// Seeded random instances of every law (at least 50); deterministic in
/// the seed and cap.
std::vector<LawInstance> generate_instances(std::uint64_t seed);
std::vector<LawReport> run_suite(const SuiteOptions& options);

/// Writes the witness of a failing report; returns the file path.
std::filesystem::path write_witness(const LawReport& report,
                                    const std::filesystem::path& dir);

}  // namespace tcs
