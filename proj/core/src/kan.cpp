#include "tcs/kan.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

#include "tcs/domains.hpp"
#include "tcs/errors.hpp"
#include "tcs/limits.hpp"

namespace tcs {

BoundedKanComplex BoundedKanComplex::by_construction(SimplicialSetPtr data) {
  return {std::move(data), Certification::by_construction};
}

AuxiliaryDomain AuxiliaryDomain::at_bound(int bound) const {
  if (bound == data_->bound()) return *this;
  if (bound < data_->bound()) {
    return AuxiliaryDomain(share(data_->truncated(bound)));
  }
  return AuxiliaryDomain(share(skeletal_extension(*data_, bound)));
}

namespace {

std::string describe_faces(std::span<const SimplexId> faces) {
  std::ostringstream out;
  out << '[';
  for (std::size_t j = 0; j < faces.size(); ++j) {
    if (j != 0) out << ", ";
    if (faces[j] == kNoSimplex) {
      out << '_';
    } else {
      out << faces[j];
    }
  }
  out << ']';
  return out.str();
}

std::vector<int> horn_indices(int k, int missing) {
  std::vector<int> out;
  for (int j = 0; j <= k; ++j) {
    if (j != missing) out.push_back(j);
  }
  return out;
}

std::vector<SimplexId> spread(std::span<const SimplexId> family, int k,
                              int missing) {
  std::vector<SimplexId> faces(static_cast<std::size_t>(k + 1), kNoSimplex);
  std::size_t t = 0;
  for (int j = 0; j <= k; ++j) {
    if (j != missing) faces[static_cast<std::size_t>(j)] = family[t++];
  }
  return faces;
}

}  // namespace

std::string Horn::describe() const {
  return "horn Lambda^" + std::to_string(dimension) + "_" +
         std::to_string(missing) + " with faces " + describe_faces(faces);
}

std::string LiftingProblem::describe() const {
  return horn.describe() + " over target simplex " +
         std::to_string(target_simplex);
}

bool faces_compatible(const SimplicialSet& x, int level, int a, SimplexId ya,
                      int b, SimplexId yb) {
  if (level == 0) return true;
  return x.face(level, yb, a) == x.face(level, ya, b - 1);
}

bool for_each_compatible_family(
    const SimplicialSet& x, int k, std::span<const int> indices,
    const std::function<bool(std::span<const SimplexId>)>& visit) {
  const int level = k - 1;
  std::vector<SimplexId> chosen(indices.size(), kNoSimplex);
  Deadline deadline("compatible family enumeration");
  std::function<bool(std::size_t)> step = [&](std::size_t t) -> bool {
    if (t == indices.size()) return visit(chosen);
    deadline.check();
    const int j = indices[t];
    auto try_candidate = [&](SimplexId y) -> bool {
      for (std::size_t s = 0; s < t; ++s) {
        if (!faces_compatible(x, level, indices[s], chosen[s], j, y)) return true;
      }
      chosen[t] = y;
      return step(t + 1);
    };
    if (t == 0 || level == 0) {
      for (SimplexId y = 0; y < x.size(level); ++y) {
        if (!try_candidate(y)) return false;
      }
      return true;
    }
    const int a = indices[0];
    const SimplexId key = x.face(level, chosen[0], j - 1);
    for (SimplexId y : x.with_face(level, a, key)) {
      if (!try_candidate(y)) return false;
    }
    return true;
  };
  return step(0);
}

std::vector<SimplexId> simplices_with_faces(const SimplicialSet& x, int k,
                                            std::span<const SimplexId> faces) {
  std::vector<SimplexId> out;
  int known = -1;
  for (int j = 0; j <= k; ++j) {
    if (faces[static_cast<std::size_t>(j)] != kNoSimplex) {
      known = j;
      break;
    }
  }
  auto matches = [&](SimplexId s) {
    for (int j = 0; j <= k; ++j) {
      const SimplexId f = faces[static_cast<std::size_t>(j)];
      if (f != kNoSimplex && x.face(k, s, j) != f) return false;
    }
    return true;
  };
  if (known < 0) {
    for (SimplexId s = 0; s < x.size(k); ++s) out.push_back(s);
    return out;
  }
  for (SimplexId s :
       x.with_face(k, known, faces[static_cast<std::size_t>(known)])) {
    if (matches(s)) out.push_back(s);
  }
  return out;
}

std::vector<SimplexId> sphere_completions(const SimplicialSet& x, int k,
                                          std::span<const SimplexId> faces,
                                          int missing) {
  const int level = k - 1;
  std::vector<SimplexId> out;
  auto matches = [&](SimplexId y) {
    for (int a = 0; a <= k; ++a) {
      if (a == missing) continue;
      const SimplexId ya = faces[static_cast<std::size_t>(a)];
      const bool ok = a < missing
                          ? faces_compatible(x, level, a, ya, missing, y)
                          : faces_compatible(x, level, missing, y, a, ya);
      if (!ok) return false;
    }
    return true;
  };
  if (level == 0) {
    for (SimplexId y = 0; y < x.size(0); ++y) out.push_back(y);
    return out;
  }
  const int a = missing == 0 ? 1 : 0;
  const SimplexId ya = faces[static_cast<std::size_t>(a)];
  std::span<const SimplexId> pool =
      a < missing ? x.with_face(level, a, x.face(level, ya, missing - 1))
                  : x.with_face(level, a - 1, x.face(level, ya, missing));
  for (SimplexId y : pool) {
    if (matches(y)) out.push_back(y);
  }
  return out;
}

KanCheckResult kan_check(const SimplicialSetPtr& data) {
  const auto report = validate_identities(*data);
  if (!report.valid()) throw InvalidData(report.summary());
  KanCheckResult result;
  const int bound = data->bound();
  for (int k = 1; k <= bound + 1 && !result.counterexample_; ++k) {
    for (int i = 0; i <= k && !result.counterexample_; ++i) {
      const auto indices = horn_indices(k, i);
      for_each_compatible_family(
          *data, k, indices, [&](std::span<const SimplexId> family) {
            ++result.horns_checked_;
            auto faces = spread(family, k, i);
            const bool filled =
                k <= bound ? !simplices_with_faces(*data, k, faces).empty()
                           : !sphere_completions(*data, k, faces, i).empty();
            if (!filled) {
              result.counterexample_ = Horn{k, i, std::move(faces)};
              return false;
            }
            return true;
          });
    }
  }
  if (!result.counterexample_) {
    result.complex_ = BoundedKanComplex(data, Certification::searched);
  }
  return result;
}

BoundedKanComplex require_kan(const SimplicialSetPtr& data) {
  auto result = kan_check(data);
  if (!result.certified()) {
    throw NotKan("not a Kan complex: " + result.counterexample()->describe());
  }
  return result.complex();
}

FibrationResult is_fibration(const SimplicialMap& f) {
  const SimplicialSet& source = f.source();
  const SimplicialSet& target = f.target();
  if (source.bound() != target.bound()) {
    throw BoundMismatch("is_fibration: source bound " +
                        std::to_string(source.bound()) + " vs target bound " +
                        std::to_string(target.bound()));
  }
  const int bound = source.bound();
  FibrationResult result;
  for (int k = 1; k <= bound + 1 && !result.counterexample; ++k) {
    for (int i = 0; i <= k && !result.counterexample; ++i) {
      const auto indices = horn_indices(k, i);
      for_each_compatible_family(
          source, k, indices, [&](std::span<const SimplexId> family) {
            auto horn = spread(family, k, i);
            std::vector<SimplexId> image(horn.size(), kNoSimplex);
            for (int j = 0; j <= k; ++j) {
              if (j != i) {
                image[static_cast<std::size_t>(j)] =
                    f(k - 1, horn[static_cast<std::size_t>(j)]);
              }
            }
            std::vector<SimplexId> wanted;
            std::unordered_set<SimplexId> reached;
            if (k <= bound) {
              wanted = simplices_with_faces(target, k, image);
              for (SimplexId x : simplices_with_faces(source, k, horn)) {
                reached.insert(f(k, x));
              }
            } else {
              wanted = sphere_completions(target, k, image, i);
              for (SimplexId y : sphere_completions(source, k, horn, i)) {
                reached.insert(f(k - 1, y));
              }
            }
            for (SimplexId b : wanted) {
              if (!reached.contains(b)) {
                result.counterexample =
                    LiftingProblem{Horn{k, i, std::move(horn)}, b};
                return false;
              }
            }
            return true;
          });
    }
  }
  result.fibration = !result.counterexample;
  return result;
}

}  // namespace tcs
