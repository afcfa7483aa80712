#pragma once

#include <functional>

#include "tcs/kan.hpp"
#include "tcs/simplicial.hpp"

namespace tcs {

/// Adds levels bound+1..new_bound as compatible sphere families of the level
/// below (the coskeleton). Levels <= bound keep their ids.
SimplicialSet coskeletal_extension(const SimplicialSet& data, int new_bound);

/// The same space stored up to `new_bound` >= X.bound().
BoundedKanComplex raise_bound(const BoundedKanComplex& x, int new_bound);

/// Postnikov truncation: keeps levels 0..min(B, n+1).
BoundedKanComplex truncate(const BoundedKanComplex& x, int n);

/// A Kan complex whose levels are produced on demand: `build(b)` returns the
/// levels 0..b of the (possibly untruncated) space.
using LevelSource = std::function<SimplicialSetPtr(int bound)>;

/// Stores levels 0..m+1 of an m-truncated Kan complex. The caller asserts
/// Kan-ness and m-truncatedness of the source.
BoundedKanComplex rebound_truncated(const LevelSource& source, int m);

/// Raises both complexes to the larger bound.
std::pair<BoundedKanComplex, BoundedKanComplex> equalize_bounds(
    const BoundedKanComplex& x, const BoundedKanComplex& y);

}  // namespace tcs
