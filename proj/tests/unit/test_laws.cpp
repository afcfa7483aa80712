#include <gtest/gtest.h>

#include <filesystem>
#include <regex>
#include <set>

#include <nlohmann/json.hpp>

#include "tcs/coskeleton.hpp"
#include "tcs/domains.hpp"
#include "tcs/errors.hpp"
#include "tcs/invariants.hpp"
#include "tcs/laws.hpp"
#include "tcs/mapping.hpp"
#include "tcs/products.hpp"

using namespace tcs;

namespace {

std::size_t conjugacy_classes(const FiniteGroup& g) {
  std::size_t classes = 0;
  for (int x = 0; x < g.size(); ++x) {
    // x is the least element of its class
    bool least = true;
    for (int h = 0; h < g.size() && least; ++h) {
      least = g.multiply(g.multiply(h, x), g.inverse(h)) >= x;
    }
    classes += least ? 1 : 0;
  }
  return classes;
}

std::size_t homomorphism_classes(const FiniteGroup& a, const FiniteGroup& b) {
  std::vector<std::vector<int>> homs;
  std::vector<int> map(static_cast<std::size_t>(a.size()), 0);
  while (true) {
    if (is_homomorphism(a, b, map)) homs.push_back(map);
    std::size_t pos = 0;
    while (pos < map.size() && ++map[pos] == b.size()) map[pos++] = 0;
    if (pos == map.size()) break;
  }
  std::set<std::vector<int>> canonical;
  for (const auto& h : homs) {
    std::vector<int> best = h;
    for (int g = 0; g < b.size(); ++g) {
      std::vector<int> conj(h.size());
      for (std::size_t x = 0; x < h.size(); ++x) {
        conj[x] = b.multiply(b.multiply(g, h[x]), b.inverse(g));
      }
      best = std::min(best, conj);
    }
    canonical.insert(best);
  }
  return canonical.size();
}

SimplicialMap vertex_map(const SimplicialSetPtr& source, const SimplicialSetPtr& target,
                         const std::vector<SimplexId>& vertices) {
  std::vector<std::vector<SimplexId>> images(static_cast<std::size_t>(source->bound() + 1));
  for (int k = 0; k <= source->bound(); ++k) {
    for (SimplexId s = 0; s < source->size(k); ++s) {
      images[static_cast<std::size_t>(k)].push_back(
          target->degenerate_vertex(vertices[source->base(k, s)], k));
    }
  }
  return {source, target, std::move(images)};
}

}  // namespace

TEST(SumDescent, FourPointsOverTwo) {
  auto one = point(1);
  auto sum = coproduct(one, one);
  auto z = discrete(4);
  auto h = vertex_map(z.ptr(), sum.ptr(), {0, 1, 0, 1});
  auto r = check_sum_descent(one, one, h);
  EXPECT_EQ(r.verdict, LawVerdict::pass) << r.detail;
  EXPECT_FALSE(r.witness.has_value());
}

TEST(SumDescent, AnyMapIntoClassifyingSpaces) {
  auto x = classifying_space(FiniteGroup::cyclic(2));
  auto y = classifying_space(FiniteGroup::cyclic(3));
  auto sum = coproduct(x, y);
  auto z = coproduct(classifying_space(FiniteGroup::cyclic(2)), discrete(1));
  std::size_t maps = 0;
  enumerate_maps(z.data(), sum.data(), {}, [&](const ImageTable& img) {
    auto r = check_sum_descent(x, y, SimplicialMap(z.ptr(), sum.ptr(), img));
    EXPECT_EQ(r.verdict, LawVerdict::pass) << r.detail;
    return ++maps < 40;
  });
  EXPECT_GT(maps, 4u);
}

TEST(SumDescent, RejectsMapsOutsideTheSum) {
  auto one = point(1);
  auto h = SimplicialMap::constant(discrete(2).ptr(), discrete(3).ptr(), 0);
  EXPECT_THROW(check_sum_descent(one, one, h), InvalidData);
}

TEST(Effectivity, TranslationTrivialAndSwap) {
  for (const auto& g : {FiniteGroup::cyclic(3), FiniteGroup::symmetric(3)}) {
    std::vector<std::vector<SimplexId>> table;
    for (int a = 0; a < g.size(); ++a) {
      std::vector<SimplexId> row;
      for (int b = 0; b < g.size(); ++b) row.push_back(static_cast<SimplexId>(g.multiply(a, b)));
      table.push_back(row);
    }
    auto translation =
        GroupAction::on_vertices(g, discrete(static_cast<std::size_t>(g.size())), table);
    EXPECT_EQ(check_groupoid_effectivity(translation).verdict, LawVerdict::pass);
    EXPECT_EQ(check_groupoid_effectivity(GroupAction::trivial(g, point(1))).verdict,
              LawVerdict::pass);
  }
  auto swap = GroupAction::on_vertices(FiniteGroup::cyclic(2), discrete(2), {{0, 1}, {1, 0}});
  EXPECT_EQ(check_groupoid_effectivity(swap).verdict, LawVerdict::pass);
}

TEST(Lcc, TwoTwoTwo) {
  auto two = discrete(2);
  auto r = check_lcc_adjunction(two, two, two);
  EXPECT_EQ(r.verdict, LawVerdict::pass) << r.detail;
  // function sets: 2^(2*2)
  EXPECT_EQ(pi0(hom_complex(product(two, two), two)).count(), 16u);
  EXPECT_NE(r.detail.find("16 classes"), std::string::npos);
}

TEST(Lcc, PointExponent) {
  auto z = classifying_space(FiniteGroup::cyclic(2));
  auto y = discrete(3);
  auto r = check_lcc_adjunction(z, point(1), y);
  EXPECT_EQ(r.verdict, LawVerdict::pass) << r.detail;
}

TEST(Lcc, ClassifyingSpaces) {
  const auto z2 = FiniteGroup::cyclic(2);
  auto b = classifying_space(z2);
  auto r = check_lcc_adjunction(discrete(2), b, b);
  EXPECT_EQ(r.verdict, LawVerdict::pass) << r.detail;
  const auto per = homomorphism_classes(z2, z2);
  EXPECT_NE(r.detail.find(std::to_string(per * per) + " classes"), std::string::npos) << r.detail;
}

TEST(SubobjectClassifier, Examples) {
  auto r = check_subobject_classifier(discrete(3));
  EXPECT_EQ(r.verdict, LawVerdict::pass);
  EXPECT_NE(r.detail.find("8 subobjects"), std::string::npos);
  r = check_subobject_classifier(classifying_space(FiniteGroup::symmetric(3)));
  EXPECT_EQ(r.verdict, LawVerdict::pass);
  EXPECT_NE(r.detail.find("2 subobjects"), std::string::npos);
  r = check_subobject_classifier(discrete(0));
  EXPECT_EQ(r.verdict, LawVerdict::pass);
  EXPECT_NE(r.detail.find("1 subobjects"), std::string::npos);
}

TEST(FreeLoops, ConjugacyClassesOfSmallGroups) {
  for (const char* name : {"1", "Z/2", "Z/3", "Z/4", "Z/2xZ/2", "Z/5", "Z/6", "S_3", "Z/7", "Z/8",
                           "Z/2xZ/4", "Z/2xZ/2xZ/2", "D_4"}) {
    const auto g = *builtin_group(name);
    ASSERT_LE(g.size(), 8);
    auto bg = classifying_space(g);
    AuxiliaryDomain circle(share(simplicial_circle(bg.bound())));
    EXPECT_EQ(pi0(hom_complex(circle, bg)).count(), conjugacy_classes(g)) << name;
    EXPECT_EQ(check_free_loops(g).verdict, LawVerdict::pass) << name;
  }
}

TEST(Reports, LineFormatAndHash) {
  auto r = check_subobject_classifier(discrete(2));
  EXPECT_TRUE(std::regex_match(r.line(), std::regex("LAW subobject_classifier [0-9a-f]{16} PASS")))
      << r.line();
  LawReport a, b;
  a.instance = "x";
  b.instance = "y";
  EXPECT_NE(a.instance_hash(), b.instance_hash());
  // FNV-1a 64 of the empty string is the offset basis
  EXPECT_EQ(LawReport{}.instance_hash(), "cbf29ce484222325");
}

TEST(Suite, DefaultSeedPassesEverything) {
  auto reports = run_suite({});
  EXPECT_GE(reports.size(), 50u);
  std::set<std::string> laws;
  for (const auto& r : reports) {
    EXPECT_EQ(r.verdict, LawVerdict::pass) << r.instance << ": " << r.detail;
    laws.insert(r.law);
  }
  EXPECT_EQ(laws.size(), 5u);
}

TEST(Suite, ReplayIsIdentical) {
  SuiteOptions o;
  o.seed = 99;
  auto first = run_suite(o);
  auto second = run_suite(o);
  ASSERT_EQ(first.size(), second.size());
  for (std::size_t i = 0; i < first.size(); ++i) {
    EXPECT_EQ(first[i].line(), second[i].line());
    EXPECT_EQ(first[i].detail, second[i].detail);
  }
  o.seed = 100;
  auto other = run_suite(o);
  std::size_t differ = 0;
  for (std::size_t i = 0; i < std::min(first.size(), other.size()); ++i) {
    differ += first[i].instance != other[i].instance;
  }
  EXPECT_GT(differ, 0u);
}

TEST(Suite, TinyCapIsInconclusiveNotFatal) {
  SuiteOptions o;
  o.simplex_cap = 1;
  auto reports = run_suite(o);
  std::size_t inconclusive = 0;
  for (const auto& r : reports) {
    EXPECT_NE(r.verdict, LawVerdict::fail) << r.instance << ": " << r.detail;
    inconclusive += r.verdict == LawVerdict::inconclusive;
  }
  EXPECT_GT(inconclusive, 0u);
}

TEST(Witness, SerializedInstancesReplay) {
  const auto dir = std::filesystem::temp_directory_path() / "tcs_law_witness";
  std::filesystem::remove_all(dir);
  for (const auto& in : generate_instances(5)) {
    LawReport forged;
    forged.law = in.law;
    forged.instance = in.description;
    forged.verdict = LawVerdict::fail;
    forged.witness = instance_to_json(in).dump();
    const auto path = write_witness(forged, dir);
    auto replayed = replay_witness(path);
    auto direct = check_law(in);
    EXPECT_EQ(replayed.line(), direct.line());
  }
}
