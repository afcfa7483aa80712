#pragma once

// Standard finite simplicial sets: simplices, boundaries, horns, the
// one-vertex circle, and helpers for sub- and extended simplicial sets.

#include <functional>
#include <optional>
#include <vector>

#include "tcs/kan.hpp"
#include "tcs/simplicial.hpp"

namespace tcs {

/// Simplicial subset of Delta[n] (or a quotient of one) described by a
/// labelling of operators [m] -> [n]: operators with the same label are
/// identified, std::nullopt drops the operator. Labels must be stable under
/// faces and degeneracies.
SimplicialSet operator_complex(
    int n, int bound,
    const std::function<std::optional<int>(const SimplicialOperator&)>& label);

SimplicialSet standard_simplex(int n, int bound);
SimplicialSet simplex_boundary(int n, int bound);
SimplicialSet horn_shape(int n, int missing, int bound);
/// Delta[1] with its two endpoints identified.
SimplicialSet simplicial_circle(int bound);

/// n points, every higher simplex degenerate.
SimplicialSet discrete_set(std::size_t n, int bound);

/// The same simplicial set stored up to `bound`, adding only degenerate
/// simplices above its current bound.
SimplicialSet skeletal_extension(const SimplicialSet& data, int bound);

/// Sub-simplicial set of the kept simplices (must be closed under faces and
/// degeneracies), renumbered densely, plus its inclusion map.
struct Subcomplex {
  SimplicialSetPtr space;
  SimplicialMap inclusion;
};
Subcomplex subcomplex(const SimplicialSetPtr& data,
                      const std::vector<std::vector<bool>>& keep);

}  // namespace tcs
