#include <gtest/gtest.h>

#include "tcs/coskeleton.hpp"
#include "tcs/domains.hpp"
#include "tcs/errors.hpp"
#include "tcs/invariants.hpp"
#include "tcs/limits.hpp"
#include "tcs/mapping.hpp"
#include "tcs/products.hpp"
#include "tcs/spaces.hpp"

using namespace tcs;

namespace {

BoundedKanComplex bg(const FiniteGroup& g) { return classifying_space(g); }

/// Group homomorphisms a -> b counted by brute force over all element maps.
std::size_t homomorphism_count(const FiniteGroup& a, const FiniteGroup& b) {
  std::vector<int> map(static_cast<std::size_t>(a.size()), 0);
  std::size_t count = 0;
  while (true) {
    count += is_homomorphism(a, b, map) ? 1 : 0;
    std::size_t pos = 0;
    while (pos < map.size() && ++map[pos] == b.size()) map[pos++] = 0;
    if (pos == map.size()) break;
  }
  return count;
}

/// The map K(G,1) -> B(G) reading a cocycle off its edges.
SimplicialMap cocycle_to_nerve(const BoundedKanComplex& k, const BoundedKanComplex& b) {
  std::vector<std::vector<SimplexId>> images(3);
  images[0] = {0};
  // a 1-cocycle on Delta[1] is its value on the single edge; ids follow the
  // odometer order, so the level-1 id is the group element
  for (SimplexId e = 0; e < k.data().size(1); ++e) images[1].push_back(e);
  for (SimplexId t = 0; t < k.data().size(2); ++t) {
    const auto first = images[1][k.data().face(2, t, 2)];
    const auto second = images[1][k.data().face(2, t, 0)];
    for (SimplexId s : b.data().with_face(2, 2, first)) {
      if (b.data().face(2, s, 0) == second) images[2].push_back(s);
    }
  }
  return {k.ptr(), b.ptr(), images};
}

}  // namespace

TEST(Pi0, Examples) {
  EXPECT_EQ(pi0(discrete(5)).count(), 5u);
  EXPECT_EQ(pi0(bg(FiniteGroup::symmetric(3))).count(), 1u);
  EXPECT_EQ(pi0(coproduct(bg(FiniteGroup::cyclic(2)), bg(FiniteGroup::cyclic(3)))).count(), 2u);
}

TEST(Pi0, BasepointsAreLeastVertices) {
  auto c = pi0(coproduct(discrete(2), bg(FiniteGroup::cyclic(2))));
  EXPECT_EQ(c.basepoints, (std::vector<SimplexId>{0, 1, 2}));
}

TEST(PiN, Examples) {
  auto s3 = FiniteGroup::symmetric(3);
  EXPECT_TRUE(find_isomorphism(pi_n(bg(s3), 0, 1).group(), s3));
  auto k = eilenberg_maclane(FiniteGroup::cyclic(3), 2);
  EXPECT_TRUE(find_isomorphism(pi_n(k, 0, 2).group(), FiniteGroup::cyclic(3)));
  EXPECT_TRUE(pi_n(bg(FiniteGroup::cyclic(2)), 0, 2).trivial());
}

TEST(PiN, VanishesAtAndAboveBound) {
  for (const auto& x : {bg(FiniteGroup::cyclic(4)), eilenberg_maclane(FiniteGroup::cyclic(2), 2),
                        discrete(3)}) {
    for (int j = x.bound(); j <= x.bound() + 2; ++j) EXPECT_TRUE(pi_n(x, 0, j).trivial());
  }
}

TEST(PiN, DegreeZeroListsComponents) {
  auto g = pi_n(discrete(4), 2, 0);
  EXPECT_EQ(g.order(), 4u);
}

TEST(PiN, RejectsNonVertex) {
  EXPECT_THROW(pi_n(discrete(2), 7, 1), InvalidData);
}

TEST(PiN, ProductOfSpacesGivesProductOfGroups) {
  const std::vector<BoundedKanComplex> spaces{bg(FiniteGroup::cyclic(2)), bg(FiniteGroup::cyclic(3)),
                                              bg(FiniteGroup::symmetric(3)),
                                              eilenberg_maclane(FiniteGroup::cyclic(2), 2)};
  for (const auto& x : spaces) {
    for (const auto& y : spaces) {
      auto p = product(x, y);
      auto [xx, yy] = equalize_bounds(x, y);
      for (int n = 1; n < p.bound(); ++n) {
        auto expected = FiniteGroup::direct_product(pi_n(xx, 0, n).group(), pi_n(yy, 0, n).group());
        EXPECT_TRUE(find_isomorphism(pi_n(p, 0, n).group(), expected)) << n;
      }
    }
  }
}

TEST(PiN, LoopSpaceShiftsDegree) {
  for (const auto& x : {bg(FiniteGroup::symmetric(3)), eilenberg_maclane(FiniteGroup::cyclic(3), 2),
                        product(bg(FiniteGroup::cyclic(2)), eilenberg_maclane(FiniteGroup::cyclic(2), 2))}) {
    auto l = loop_space(x, 0);
    for (int n = 0; n + 1 < x.bound(); ++n) {
      if (n == 0) {
        EXPECT_EQ(pi0(l).count(), pi_n(x, 0, 1).order());
        continue;
      }
      EXPECT_TRUE(find_isomorphism(pi_n(l, 0, n).group(), pi_n(x, 0, n + 1).group())) << n;
    }
  }
}

TEST(Cardinality, Examples) {
  EXPECT_EQ(homotopy_cardinality(discrete(5)).str(), "5");
  // oracle: direct alternating product with |pi_1| = 6
  Rational expected = Rational(1) / 6;
  EXPECT_EQ(homotopy_cardinality(bg(FiniteGroup::symmetric(3))).value, expected);
  EXPECT_EQ(homotopy_cardinality(eilenberg_maclane(FiniteGroup::cyclic(2), 2)).str(), "2");
  EXPECT_TRUE(homotopy_cardinality(discrete(0)).empty_space());
}

TEST(Cardinality, MultiplicativeAndAdditive) {
  const std::vector<BoundedKanComplex> spaces{discrete(2), bg(FiniteGroup::cyclic(2)),
                                              bg(FiniteGroup::symmetric(3)),
                                              eilenberg_maclane(FiniteGroup::cyclic(3), 2)};
  for (const auto& x : spaces) {
    for (const auto& y : spaces) {
      const auto cx = homotopy_cardinality(x).value;
      const auto cy = homotopy_cardinality(y).value;
      EXPECT_EQ(homotopy_cardinality(product(x, y)).value, cx * cy);
      EXPECT_EQ(homotopy_cardinality(coproduct(x, y)).value, cx + cy);
    }
  }
}

TEST(Cardinality, FibrationSequences) {
  // F -> E -> B for a projection and for the path fibration
  auto s3 = FiniteGroup::symmetric(3);
  auto k = eilenberg_maclane(FiniteGroup::cyclic(2), 2);
  auto b = bg(s3);
  auto p = product_with_projections(k, b);
  auto fibre = homotopy_fiber(p.second, 0).space;
  EXPECT_EQ(homotopy_cardinality(p.space).value,
            homotopy_cardinality(fibre).value * homotopy_cardinality(b).value);
  auto path = fibrant_replace(SimplicialMap::constant(point(b.bound()).ptr(), b.ptr(), 0));
  auto loops = homotopy_fiber(path.fibration, 0).space;
  EXPECT_EQ(homotopy_cardinality(path.space).value,
            homotopy_cardinality(loops).value * homotopy_cardinality(b).value);
}

TEST(IsEquivalence, Examples) {
  auto b2 = bg(FiniteGroup::cyclic(2));
  EXPECT_TRUE(is_equivalence(SimplicialMap::identity(b2.ptr())).equivalent);
  auto k = eilenberg_maclane(FiniteGroup::cyclic(2), 1);
  auto f = cocycle_to_nerve(k, b2);
  ASSERT_EQ(f.check(), "");
  EXPECT_TRUE(is_equivalence(f).equivalent);
  auto collapse = SimplicialMap::constant(b2.ptr(), point(2).ptr(), 0);
  auto r = is_equivalence(collapse);
  EXPECT_FALSE(r.equivalent);
  EXPECT_NE(r.diagnostic.find("pi_1"), std::string::npos);
}

TEST(AreEquivalent, Examples) {
  auto x = bg(FiniteGroup::symmetric(3));
  auto self = are_equivalent(x, x);
  EXPECT_EQ(self.verdict, Verdict::yes);
  ASSERT_TRUE(self.witness.has_value());
  EXPECT_TRUE(is_equivalence(*self.witness).equivalent);

  auto z4 = bg(FiniteGroup::cyclic(4));
  auto v4 = product(bg(FiniteGroup::cyclic(2)), bg(FiniteGroup::cyclic(2)));
  EXPECT_EQ(pi_n(z4, 0, 1).order(), pi_n(v4, 0, 1).order());
  EXPECT_EQ(are_equivalent(z4, v4).verdict, Verdict::no);

  auto loops = loop_space(eilenberg_maclane(FiniteGroup::cyclic(2), 2), 0);
  auto d = are_equivalent(loops, bg(FiniteGroup::cyclic(2)));
  EXPECT_EQ(d.verdict, Verdict::yes);
  ASSERT_TRUE(d.witness.has_value());
  EXPECT_EQ(d.witness->check(), "");
}

TEST(AreEquivalent, ExhaustsWhenInvariantsAgree) {
  // same pi_0 and groups, distinguished only by the k-invariant would be the
  // hard case; here the invariants differ at pi_2 and the prefilter decides
  auto a = product(bg(FiniteGroup::cyclic(2)), eilenberg_maclane(FiniteGroup::cyclic(2), 2));
  auto b = bg(FiniteGroup::cyclic(2));
  EXPECT_EQ(are_equivalent(a, b).verdict, Verdict::no);
}

TEST(AreEquivalent, IsAnEquivalenceRelationOnFixtures) {
  const std::vector<BoundedKanComplex> fixtures{
      point(), discrete(2), bg(FiniteGroup::cyclic(2)), eilenberg_maclane(FiniteGroup::cyclic(2), 1),
      homotopy_quotient(GroupAction::on_vertices(FiniteGroup::cyclic(2), discrete(2), {{0, 1}, {1, 0}})),
      bg(FiniteGroup::symmetric(3)), bg(FiniteGroup::dihedral(3))};
  const auto n = fixtures.size();
  std::vector<std::vector<bool>> eq(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      auto d = are_equivalent(fixtures[i], fixtures[j]);
      ASSERT_NE(d.verdict, Verdict::inconclusive);
      eq[i][j] = d.verdict == Verdict::yes;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    EXPECT_TRUE(eq[i][i]);
    for (std::size_t j = 0; j < n; ++j) {
      EXPECT_EQ(eq[i][j], eq[j][i]);
      for (std::size_t k = 0; k < n; ++k) {
        if (eq[i][j] && eq[j][k]) EXPECT_TRUE(eq[i][k]);
      }
    }
  }
  EXPECT_TRUE(eq[0][4]);  // free quotient is contractible
  EXPECT_TRUE(eq[2][3]);
  EXPECT_TRUE(eq[5][6]);  // S_3 = D_3
  EXPECT_FALSE(eq[1][2]);
}

TEST(AreEquivalent, CapMakesItInconclusive) {
  Limits tight;
  tight.simplex_cap = 1;
  auto x = product(bg(FiniteGroup::cyclic(3)), bg(FiniteGroup::cyclic(3)));
  ScopedLimits guard(tight);
  auto d = are_equivalent(x, x);
  EXPECT_EQ(d.verdict, Verdict::inconclusive);
  EXPECT_FALSE(d.witness.has_value());
}

TEST(IsMono, Examples) {
  auto b2 = bg(FiniteGroup::cyclic(2));
  auto b3 = bg(FiniteGroup::cyclic(3));
  auto sum = coproduct_with_inclusions(b2, b3);
  EXPECT_TRUE(is_mono(sum.left));
  EXPECT_FALSE(is_mono(SimplicialMap::constant(b2.ptr(), point(2).ptr(), 0)));
  EXPECT_TRUE(is_mono(SimplicialMap::identity(b2.ptr())));
}

TEST(IsMono, DiffersFromComponentInjectivity) {
  // B(1) -> B(Z/2) is injective on pi_0 but its fibre has two points
  auto b2 = bg(FiniteGroup::cyclic(2));
  auto f = SimplicialMap::constant(point(2).ptr(), b2.ptr(), 0);
  EXPECT_FALSE(is_mono(f));
}

TEST(Subobjects, Examples) {
  EXPECT_EQ(subobjects(discrete(3)).size(), 8u);
  auto s = subobjects(bg(FiniteGroup::symmetric(3)));
  ASSERT_EQ(s.size(), 2u);
  EXPECT_TRUE(subobject(bg(FiniteGroup::symmetric(3)), s[0]).space.data().empty());
}

TEST(Subobjects, ClassificationRoundTrip) {
  auto x = coproduct(coproduct(discrete(1), bg(FiniteGroup::cyclic(2))), bg(FiniteGroup::cyclic(3)));
  for (const auto& s : subobjects(x)) {
    auto sub = subobject(x, s);
    EXPECT_TRUE(is_mono(sub.inclusion));
    auto chi = classify_subobject(x, s);
    EXPECT_EQ(chi.check(), "");
    auto back = pullback_of_true(x, chi);
    EXPECT_EQ(back.components, s);
    auto d = are_equivalent(back.space, sub.space);
    EXPECT_EQ(d.verdict, Verdict::yes);
  }
}

TEST(PointedHom, Examples) {
  auto s3 = FiniteGroup::symmetric(3);
  auto z5 = FiniteGroup::cyclic(5);
  EXPECT_EQ(pi0(pointed_hom(bg(s3), 0, bg(z5), 0)).count(), 1u);
  auto y = bg(FiniteGroup::cyclic(3));
  EXPECT_TRUE(is_contractible(pointed_hom(point(), 0, y, 0)));
  auto z2 = FiniteGroup::cyclic(2);
  EXPECT_EQ(pi0(pointed_hom(bg(z2), 0, bg(z2), 0)).count(), homomorphism_count(z2, z2));
  EXPECT_EQ(pi0(pointed_hom(bg(s3), 0, bg(z2), 0)).count(), homomorphism_count(s3, z2));
}

TEST(Reports, TextAndMachine) {
  auto r = invariant_report(symmetric_universe(2));
  const auto text = to_text(r);
  EXPECT_NE(text.find("5/2"), std::string::npos);
  const auto json = to_json(r);
  EXPECT_NE(json.find("\"pi0\":3"), std::string::npos);
  EXPECT_NE(json.find("\"cardinality\":\"5/2\""), std::string::npos);
  EXPECT_EQ(identify_group(FiniteGroup::dihedral(3)), "S_3");
  EXPECT_EQ(identify_group(pi_n(bg(FiniteGroup::cyclic(4)), 0, 1).group()), "Z/4");
}
