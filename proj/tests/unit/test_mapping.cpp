#include <gtest/gtest.h>

#include "tcs/domains.hpp"
#include "tcs/kan.hpp"
#include "tcs/mapping.hpp"

using namespace tcs;

TEST(EnumerateMaps, IntervalIntoSimplexCountsEdges) {
  auto target = standard_simplex(2, 2);
  auto dom = standard_simplex(1, 2);
  const auto n = enumerate_maps(dom, target, {}, [](const ImageTable&) { return true; });
  EXPECT_EQ(n, target.size(1));
}

TEST(EnumerateMaps, AllMapsCommute) {
  auto target = share(standard_simplex(2, 3));
  auto dom = share(standard_simplex(2, 3));
  auto maps = all_maps(dom, target);
  // order-preserving self maps of [2]
  EXPECT_EQ(maps.size(), 10u);
  for (const auto& f : maps) EXPECT_EQ(f.check(), "");
}

TEST(EnumerateMaps, StopsEarly) {
  auto target = standard_simplex(2, 2);
  std::size_t seen = 0;
  enumerate_maps(target, target, {}, [&](const ImageTable&) { return ++seen < 3; });
  EXPECT_EQ(seen, 3u);
}

TEST(HomComplex, FromPointIsTarget) {
  auto y = require_kan(share(discrete_set(3, 2)));
  auto pt = AuxiliaryDomain(share(standard_simplex(0, 2)));
  auto h = hom_complex(pt, y);
  for (int k = 0; k <= 2; ++k) EXPECT_EQ(h.data().size(k), y.data().size(k));
  EXPECT_TRUE(validate_identities(h.data()).valid());
}

TEST(HomComplex, VertexRoundTrip) {
  auto y = require_kan(share(discrete_set(2, 2)));
  auto dom = share(discrete_set(2, 2));
  MappingSpace ms(dom, y);
  EXPECT_EQ(ms.complex().data().size(0), 4u);
  for (SimplexId v = 0; v < 4; ++v) EXPECT_EQ(ms.vertex_of(ms.map_of(v)), v);
  auto ev = ms.evaluation(1);
  EXPECT_EQ(ev.check(), "");
}
