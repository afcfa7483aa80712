#include "tcs/mapping.hpp"

#include <algorithm>
#include <bit>

#include "tcs/coskeleton.hpp"
#include "tcs/domains.hpp"
#include "tcs/errors.hpp"
#include "tcs/hashing.hpp"
#include "tcs/limits.hpp"
#include "tcs/products.hpp"

namespace tcs {

namespace {

/// Nondegenerate simplices in the order they are assigned: dimension by
/// dimension, except that a simplex is moved up to right after the last of
/// its faces so that constraints prune as early as possible.
std::vector<std::pair<int, SimplexId>> assignment_order(const SimplicialSet& domain) {
  const int bound = domain.bound();
  auto key = [](int m, SimplexId x) { return (static_cast<std::uint64_t>(m) << 32) | x; };
  std::unordered_map<std::uint64_t, std::vector<std::pair<int, SimplexId>>> dependents;
  std::unordered_map<std::uint64_t, int> pending;
  for (int m = 1; m <= bound; ++m) {
    for (SimplexId x : domain.nondegenerate(m)) {
      std::vector<std::uint64_t> deps;
      for (int i = 0; i <= m; ++i) {
        const SimplexId f = domain.face(m, x, i);
        const int dim = m - 1 - std::popcount(domain.degeneracy_mask(m - 1, f));
        deps.push_back(key(dim, domain.base(m - 1, f)));
      }
      std::sort(deps.begin(), deps.end());
      deps.erase(std::unique(deps.begin(), deps.end()), deps.end());
      pending[key(m, x)] = static_cast<int>(deps.size());
      for (auto d : deps) dependents[d].emplace_back(m, x);
    }
  }
  std::vector<std::pair<int, SimplexId>> order;
  std::vector<std::vector<bool>> placed(static_cast<std::size_t>(bound + 1));
  for (int m = 0; m <= bound; ++m) placed[static_cast<std::size_t>(m)].assign(domain.size(m), false);
  auto place = [&](auto&& self, int m, SimplexId x) -> void {
    placed[static_cast<std::size_t>(m)][x] = true;
    order.emplace_back(m, x);
    auto it = dependents.find(key(m, x));
    if (it == dependents.end()) return;
    for (auto [dm, dx] : it->second) {
      if (--pending[key(dm, dx)] == 0 && !placed[static_cast<std::size_t>(dm)][dx]) {
        self(self, dm, dx);
      }
    }
  };
  for (int m = 0; m <= bound; ++m) {
    for (SimplexId x : domain.nondegenerate(m)) {
      if (!placed[static_cast<std::size_t>(m)][x]) place(place, m, x);
    }
  }
  return order;
}

}  // namespace

std::size_t enumerate_maps(const SimplicialSet& domain,
                           const SimplicialSet& target,
                           const MapConstraints& constraints,
                           const std::function<bool(const ImageTable&)>& visit) {
  if (domain.bound() != target.bound()) {
    throw BoundMismatch("map enumeration between bounds " +
                        std::to_string(domain.bound()) + " and " +
                        std::to_string(target.bound()));
  }
  const int bound = domain.bound();
  Deadline deadline("map enumeration");
  const auto positions = assignment_order(domain);
  ImageTable img(static_cast<std::size_t>(bound + 1));
  for (int m = 0; m <= bound; ++m) img[static_cast<std::size_t>(m)].assign(domain.size(m), kNoSimplex);
  const bool has_fixed = !constraints.fixed.empty();
  const bool has_over = constraints.over != nullptr;

  std::vector<std::vector<SimplexId>> vertex_fibres;
  if (has_over) {
    vertex_fibres.resize(constraints.over->target().size(0));
    for (SimplexId v = 0; v < target.size(0); ++v) {
      vertex_fibres[(*constraints.over)(0, v)].push_back(v);
    }
  }
  std::vector<SimplexId> all_vertices(target.size(0));
  for (SimplexId v = 0; v < all_vertices.size(); ++v) all_vertices[v] = v;

  // image of any simplex whose base is assigned
  auto image_of = [&](int m, SimplexId x) {
    const std::uint32_t mask = domain.degeneracy_mask(m, x);
    if (mask == 0) return img[static_cast<std::size_t>(m)][x];
    int dim = m - std::popcount(mask);
    SimplexId y = img[static_cast<std::size_t>(dim)][domain.base(m, x)];
    for (int t = 0; t < m; ++t) {
      if ((mask >> t) & 1u) {
        y = target.degeneracy(dim, y, t);
        ++dim;
      }
    }
    return y;
  };

  std::size_t visited = 0;
  std::function<bool(std::size_t)> step = [&](std::size_t t) -> bool {
    deadline.check();
    if (t == positions.size()) {
      for (int m = 1; m <= bound; ++m) {
        for (SimplexId x = 0; x < domain.size(m); ++x) {
          if (domain.is_degenerate(m, x)) img[static_cast<std::size_t>(m)][x] = image_of(m, x);
        }
      }
      ++visited;
      return visit(img);
    }
    const auto [m, x] = positions[t];
    const SimplexId fixed =
        has_fixed ? constraints.fixed[static_cast<std::size_t>(m)][x] : kNoSimplex;
    SimplexId face_images[32];
    for (int i = 0; m > 0 && i <= m; ++i) face_images[i] = image_of(m - 1, domain.face(m, x, i));
    auto accept = [&](SimplexId c) -> bool {
      for (int i = 0; m > 0 && i <= m; ++i) {
        if (target.face(m, c, i) != face_images[i]) return false;
      }
      if (has_over && (*constraints.over)(m, c) !=
                          constraints.required[static_cast<std::size_t>(m)][x]) {
        return false;
      }
      return !constraints.admissible || constraints.admissible(m, x, c, img);
    };
    auto descend = [&](SimplexId c) -> bool {
      if (!accept(c)) return true;
      img[static_cast<std::size_t>(m)][x] = c;
      const bool go_on = step(t + 1);
      img[static_cast<std::size_t>(m)][x] = kNoSimplex;
      return go_on;
    };

    if (fixed != kNoSimplex) return descend(fixed);
    if (m == 0) {
      const auto& pool =
          has_over ? vertex_fibres[constraints.required[0][x]] : all_vertices;
      for (SimplexId c : pool) {
        if (!descend(c)) return false;
      }
      return true;
    }
    for (SimplexId c : target.with_face(m, 0, face_images[0])) {
      if (!descend(c)) return false;
    }
    return true;
  };
  step(0);
  return visited;
}

std::vector<SimplicialMap> all_maps(const SimplicialSetPtr& domain,
                                    const SimplicialSetPtr& target,
                                    const MapConstraints& constraints) {
  std::vector<SimplicialMap> out;
  Deadline deadline("all_maps");
  enumerate_maps(*domain, *target, constraints, [&](const ImageTable& img) {
    out.emplace_back(domain, target, img);
    deadline.check_size(out.size(), "map list");
    return true;
  });
  return out;
}

// ---------------------------------------------------------------------------
// SectionSpace

namespace {

/// Flat index of the simplices of D_from inside D_to along an operator on
/// the Delta factor: (a, theta) |-> (a, op o theta).
std::vector<std::size_t> pullback_index(
    const SimplicialSet& ambient, int from_k, int to_k,
    const SimplicialOperator& op,  // [from_k] -> [to_k]
    const std::vector<std::size_t>& from_offsets,
    const std::vector<std::size_t>& to_offsets, std::size_t from_stride) {
  std::vector<std::size_t> out(from_stride);
  for (int m = 0; m <= ambient.bound(); ++m) {
    const auto& from_ops = operators_between(m, from_k);
    const std::size_t to_count = operators_between(m, to_k).size();
    for (SimplexId a = 0; a < ambient.size(m); ++a) {
      for (std::size_t t = 0; t < from_ops.size(); ++t) {
        const std::size_t image = operator_index(op.after(from_ops[t]));
        out[from_offsets[static_cast<std::size_t>(m)] + a * from_ops.size() + t] =
            to_offsets[static_cast<std::size_t>(m)] + a * to_count + image;
      }
    }
  }
  return out;
}

}  // namespace

std::uint64_t SectionSpace::key(SimplexId p,
                                std::span<const SimplexId> images) const {
  return hash_ids(images) * 31u + p;
}

void SectionSpace::insert(int k, SimplexId p, std::vector<SimplexId> images) {
  auto& level = levels_[static_cast<std::size_t>(k)];
  const auto id = static_cast<SimplexId>(level.params.size());
  level.index[key(p, images)].push_back(id);
  level.params.push_back(p);
  level.data.insert(level.data.end(), images.begin(), images.end());
}

SimplexId SectionSpace::find(int k, SimplexId p,
                             std::span<const SimplexId> images) const {
  const auto& level = levels_[static_cast<std::size_t>(k)];
  auto it = level.index.find(key(p, images));
  if (it == level.index.end()) return kNoSimplex;
  for (SimplexId id : it->second) {
    if (level.params[id] != p) continue;
    auto stored = this->images(k, id);
    if (std::equal(stored.begin(), stored.end(), images.begin(), images.end())) {
      return id;
    }
  }
  return kNoSimplex;
}

SimplexId SectionSpace::param(int k, SimplexId element) const {
  return levels_[static_cast<std::size_t>(k)].params[element];
}

std::span<const SimplexId> SectionSpace::images(int k, SimplexId element) const {
  const std::size_t stride = layout_[static_cast<std::size_t>(k)].stride;
  return {levels_[static_cast<std::size_t>(k)].data.data() + element * stride,
          stride};
}

std::size_t SectionSpace::flat_index(int k, SimplexId a,
                                     const SimplicialOperator& theta) const {
  const int m = theta.source_dim();
  return layout_[static_cast<std::size_t>(k)].offsets[static_cast<std::size_t>(m)] +
         a * operators_between(m, k).size() + operator_index(theta);
}

SimplexId SectionSpace::evaluate(int k, SimplexId element, SimplexId a) const {
  return images(k, element)[flat_index(k, a, SimplicialOperator::identity(k))];
}

SectionSpace::SectionSpace(const SectionProblem& problem)
    : params_(problem.params),
      ambient_(problem.ambient),
      target_(problem.target) {
  const int bound = target_->bound();
  if (params_->bound() != bound || ambient_->bound() != bound) {
    throw BoundMismatch("section space: parameter, domain and target bounds differ");
  }
  const int top = problem.max_level < 0 ? bound : std::min(problem.max_level, bound);
  Deadline deadline("mapping space");
  layout_.resize(static_cast<std::size_t>(top + 1));
  levels_.resize(static_cast<std::size_t>(top + 1));

  for (int k = 0; k <= top; ++k) {
    auto delta = share(standard_simplex(k, bound));
    auto ambient_k = product_data(ambient_, delta);
    const SimplicialSet& dk = *ambient_k.space;
    auto& layout = layout_[static_cast<std::size_t>(k)];
    for (int m = 0; m <= bound; ++m) {
      layout.offsets.push_back(layout.stride);
      layout.stride += dk.size(m);
    }
    auto decode = [&](int m, SimplexId s) {
      const auto& ops = operators_between(m, k);
      return std::pair<SimplexId, const SimplicialOperator&>(
          static_cast<SimplexId>(s / ops.size()), ops[s % ops.size()]);
    };

    for (SimplexId p = 0; p < params_->size(k); ++p) {
      SimplicialSetPtr dom = ambient_k.space;
      std::vector<std::vector<SimplexId>> incl;  // dom simplex -> D_k simplex
      if (problem.in_domain) {
        std::vector<std::vector<bool>> keep(static_cast<std::size_t>(bound + 1));
        for (int m = 0; m <= bound; ++m) {
          auto& lvl = keep[static_cast<std::size_t>(m)];
          lvl.resize(dk.size(m));
          for (SimplexId s = 0; s < dk.size(m); ++s) {
            auto [a, theta] = decode(m, s);
            lvl[s] = problem.in_domain(k, p, m, a, theta);
          }
        }
        auto sub = subcomplex(ambient_k.space, keep);
        dom = sub.space;
        incl = sub.inclusion.images();
      } else {
        for (int m = 0; m <= bound; ++m) {
          std::vector<SimplexId> lvl(dk.size(m));
          for (SimplexId s = 0; s < lvl.size(); ++s) lvl[s] = s;
          incl.push_back(std::move(lvl));
        }
      }

      MapConstraints constraints;
      if (problem.fixed) {
        constraints.fixed.resize(static_cast<std::size_t>(bound + 1));
        for (int m = 0; m <= bound; ++m) {
          for (SimplexId s : incl[static_cast<std::size_t>(m)]) {
            auto [a, theta] = decode(m, s);
            constraints.fixed[static_cast<std::size_t>(m)].push_back(
                problem.fixed(k, p, m, a, theta));
          }
        }
      }
      if (problem.over != nullptr) {
        constraints.over = problem.over;
        constraints.required.resize(static_cast<std::size_t>(bound + 1));
        for (int m = 0; m <= bound; ++m) {
          for (SimplexId s : incl[static_cast<std::size_t>(m)]) {
            auto [a, theta] = decode(m, s);
            constraints.required[static_cast<std::size_t>(m)].push_back(
                problem.required(k, p, m, a, theta));
          }
        }
      }

      enumerate_maps(*dom, *target_, constraints, [&](const ImageTable& img) {
        std::vector<SimplexId> flat(layout.stride, kNoSimplex);
        for (int m = 0; m <= bound; ++m) {
          const auto& lvl_incl = incl[static_cast<std::size_t>(m)];
          const auto& lvl_img = img[static_cast<std::size_t>(m)];
          for (std::size_t s = 0; s < lvl_incl.size(); ++s) {
            flat[layout.offsets[static_cast<std::size_t>(m)] + lvl_incl[s]] =
                lvl_img[s];
          }
        }
        insert(k, p, std::move(flat));
        deadline.check_size(levels_[static_cast<std::size_t>(k)].params.size(),
                            "mapping space level");
        deadline.check();
        return true;
      });
    }
  }

  // Faces and degeneracies by precomposition.
  const auto& ambient = *ambient_;
  std::vector<SimplicialSet::LevelTables> tables(static_cast<std::size_t>(top + 1));
  std::vector<SimplexId> scratch;
  for (int k = 0; k <= top; ++k) {
    const auto& level = levels_[static_cast<std::size_t>(k)];
    const auto& layout = layout_[static_cast<std::size_t>(k)];
    auto& t = tables[static_cast<std::size_t>(k)];
    t.count = level.params.size();
    std::vector<std::vector<std::size_t>> face_maps;
    std::vector<std::vector<std::size_t>> degen_maps;
    for (int i = 0; k > 0 && i <= k; ++i) {
      const auto& below = layout_[static_cast<std::size_t>(k - 1)];
      face_maps.push_back(pullback_index(ambient, k - 1, k,
                                         SimplicialOperator::coface(k, i),
                                         below.offsets, layout.offsets,
                                         below.stride));
    }
    for (int j = 0; k < top && j <= k; ++j) {
      const auto& above = layout_[static_cast<std::size_t>(k + 1)];
      degen_maps.push_back(pullback_index(ambient, k + 1, k,
                                          SimplicialOperator::codegeneracy(k, j),
                                          above.offsets, layout.offsets,
                                          above.stride));
    }
    for (SimplexId e = 0; e < t.count; ++e) {
      const auto src = images(k, e);
      const SimplexId p = level.params[e];
      auto pull = [&](const std::vector<std::size_t>& index, int to_level,
                      SimplexId to_param) {
        scratch.resize(index.size());
        for (std::size_t s = 0; s < index.size(); ++s) scratch[s] = src[index[s]];
        const SimplexId id = find(to_level, to_param, scratch);
        if (id == kNoSimplex) {
          throw InvalidData("mapping space is not closed under faces/degeneracies");
        }
        return id;
      };
      for (int i = 0; k > 0 && i <= k; ++i) {
        t.faces.push_back(pull(face_maps[static_cast<std::size_t>(i)], k - 1,
                               params_->face(k, p, i)));
      }
      for (int j = 0; k < top && j <= k; ++j) {
        t.degeneracies.push_back(pull(degen_maps[static_cast<std::size_t>(j)],
                                      k + 1, params_->degeneracy(k, p, j)));
      }
    }
  }
  auto space = share(SimplicialSet::from_tables(top, std::move(tables)));
  complex_ = BoundedKanComplex::by_construction(space);
  auto params_top =
      top == params_->bound() ? params_ : share(params_->truncated(top));
  std::vector<std::vector<SimplexId>> proj;
  for (int k = 0; k <= top; ++k) proj.push_back(levels_[static_cast<std::size_t>(k)].params);
  projection_ = SimplicialMap(space, params_top, std::move(proj));
}

// ---------------------------------------------------------------------------
// MappingSpace

MappingSpace::MappingSpace(const SimplicialSetPtr& domain,
                           const BoundedKanComplex& target, int max_level)
    : domain_(domain), target_(target.ptr()) {
  if (domain->bound() != target.bound()) {
    throw BoundMismatch("hom complex: domain must be given at the target bound");
  }
  SectionProblem problem;
  problem.params = share(discrete_set(1, target.bound()));
  problem.ambient = domain;
  problem.target = target.ptr();
  problem.max_level = max_level;
  sections_ = std::make_shared<const SectionSpace>(problem);
}

SimplexId MappingSpace::vertex_of(const SimplicialMap& f) const {
  std::vector<SimplexId> flat(sections_->stride(0), kNoSimplex);
  for (int m = 0; m <= domain_->bound(); ++m) {
    for (SimplexId a = 0; a < domain_->size(m); ++a) {
      flat[sections_->flat_index(0, a, operators_between(m, 0).front())] = f(m, a);
    }
  }
  return sections_->find(0, 0, flat);
}

SimplicialMap MappingSpace::map_of(SimplexId vertex) const {
  const auto img = sections_->images(0, vertex);
  std::vector<std::vector<SimplexId>> levels;
  for (int m = 0; m <= domain_->bound(); ++m) {
    std::vector<SimplexId> lvl(domain_->size(m));
    for (SimplexId a = 0; a < lvl.size(); ++a) {
      lvl[a] = img[sections_->flat_index(0, a, operators_between(m, 0).front())];
    }
    levels.push_back(std::move(lvl));
  }
  return {domain_, target_, std::move(levels)};
}

SimplicialMap MappingSpace::evaluation(SimplexId a) const {
  if (sections_->bound() != target_->bound()) {
    throw BoundMismatch("evaluation needs the untruncated mapping space");
  }
  std::vector<std::vector<SimplexId>> levels;
  for (int k = 0; k <= sections_->bound(); ++k) {
    const SimplexId ak = domain_->degenerate_vertex(a, k);
    std::vector<SimplexId> lvl(sections_->space()->size(k));
    for (SimplexId e = 0; e < lvl.size(); ++e) lvl[e] = sections_->evaluate(k, e, ak);
    levels.push_back(std::move(lvl));
  }
  return {sections_->space(), target_, std::move(levels)};
}

SimplicialSetPtr domain_at_bound(const BoundedKanComplex& a, int bound) {
  if (bound == a.bound()) return a.ptr();
  if (bound < a.bound()) return share(a.data().truncated(bound));
  return share(coskeletal_extension(a.data(), bound));
}

SimplicialSetPtr domain_at_bound(const AuxiliaryDomain& a, int bound) {
  return a.at_bound(bound).ptr();
}

BoundedKanComplex hom_complex(const AuxiliaryDomain& a, const BoundedKanComplex& y) {
  return MappingSpace(domain_at_bound(a, y.bound()), y).complex();
}

BoundedKanComplex hom_complex(const BoundedKanComplex& a,
                              const BoundedKanComplex& y) {
  return MappingSpace(domain_at_bound(a, y.bound()), y).complex();
}

}  // namespace tcs
