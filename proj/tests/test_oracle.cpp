#include "consets/oracle.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <queue>
#include <random>
#include <sstream>

using namespace consets;
using namespace consets::oracle;

namespace {

std::vector<BigInt> ints(std::initializer_list<long long> xs) { return {xs.begin(), xs.end()}; }

// Plain breadth-first search over adjacency queries; third connectivity route.
bool connected_bfs(const SimpleGraph& g, Mask subset) {
  if (subset == 0) return false;
  std::vector<bool> seen(g.vertex_count(), false);
  std::queue<std::size_t> q;
  std::size_t start = 0;
  while (!((subset >> start) & 1U)) ++start;
  q.push(start);
  seen[start] = true;
  std::size_t reached = 1;
  while (!q.empty()) {
    const std::size_t u = q.front();
    q.pop();
    for (std::size_t w = 0; w < g.vertex_count(); ++w)
      if (!seen[w] && ((subset >> w) & 1U) && g.has_edge(u, w)) {
        seen[w] = true;
        ++reached;
        q.push(w);
      }
  }
  return reached == static_cast<std::size_t>(std::popcount(subset));
}

SimpleGraph random_graph(std::mt19937& rng, std::size_t v, double p) {
  SimpleGraph g(v);
  std::bernoulli_distribution edge(p);
  for (std::size_t a = 0; a < v; ++a)
    for (std::size_t b = a + 1; b < v; ++b)
      if (edge(rng)) g.add_edge(a, b);
  return g;
}

}  // namespace

TEST(BuildKmPn, Shapes) {
  const auto square = build_km_pn(2, 2);
  EXPECT_EQ(square.graph().vertex_count(), 4U);
  EXPECT_EQ(square.graph().edge_count(), 4U);
  for (std::size_t v = 0; v < 4; ++v) EXPECT_EQ(std::popcount(square.graph().neighbors(v)), 2);

  EXPECT_EQ(build_km_pn(3, 2).graph().edge_count(), 9U);
  const auto h = build_km_pn(3, 3);
  EXPECT_EQ(h.graph().vertex_count(), 9U);
  EXPECT_EQ(h.graph().edge_count(), 15U);
  for (std::size_t m = 1; m <= 5; ++m)
    for (std::size_t n = 1; n <= 4; ++n)
      EXPECT_EQ(build_km_pn(m, n).graph().edge_count(), n * m * (m - 1) / 2 + (n - 1) * m);
}

TEST(BuildKmPn, LayerStructure) {
  const auto lg = build_km_pn(3, 4);
  for (std::size_t l = 1; l <= 4; ++l)
    for (std::size_t p = 1; p <= 3; ++p) {
      const std::size_t v = lg.vertex(l, p);
      EXPECT_EQ(lg.layer_of(v), l);
      for (std::size_t q = 1; q <= 3; ++q)
        if (q != p) EXPECT_TRUE(lg.graph().has_edge(v, lg.vertex(l, q)));
      if (l < 4) {
        EXPECT_TRUE(lg.graph().has_edge(v, lg.vertex(l + 1, p)));
        EXPECT_FALSE(lg.graph().has_edge(v, lg.vertex(l + 1, p % 3 + 1)));
      }
    }
}

TEST(BuildKmPn, CapRefusal) {
  EXPECT_THROW(build_km_pn(5, 5), domain_error);  // 25 > 22
  EXPECT_NO_THROW(build_km_pn(5, 5, 26));
  EXPECT_THROW(build_km_pn(5, 5, 27), domain_error);
  EXPECT_THROW(build_km_pn(0, 3), domain_error);
  EXPECT_THROW(census(build_km_pn(4, 4).graph(), 15), domain_error);
}

TEST(ResolveCap, FlagEnvDefault) {
  ::unsetenv("CONSETS_ORACLE_CAP");
  EXPECT_EQ(resolve_cap(), kDefaultCap);
  EXPECT_EQ(resolve_cap(10), 10U);
  ::setenv("CONSETS_ORACLE_CAP", "24", 1);
  EXPECT_EQ(resolve_cap(), 24U);
  EXPECT_EQ(resolve_cap(12), 12U);
  ::setenv("CONSETS_ORACLE_CAP", "99", 1);
  EXPECT_THROW(resolve_cap(), domain_error);
  ::setenv("CONSETS_ORACLE_CAP", "abc", 1);
  EXPECT_THROW(resolve_cap(), domain_error);
  ::unsetenv("CONSETS_ORACLE_CAP");
  EXPECT_THROW(resolve_cap(0), domain_error);
}

TEST(Census, Examples) {
  const auto k2 = census(build_km_pn(2, 1).graph());
  EXPECT_EQ(k2.size_counts, ints({2, 1}));
  EXPECT_EQ(k2.N(), 3);
  EXPECT_EQ(k2.S(), 4);
  EXPECT_EQ(k2.A(), BigRational(BigInt(4), BigInt(3)));

  const auto square = census(build_km_pn(2, 2).graph());
  EXPECT_EQ(square.size_counts, ints({4, 4, 4, 1}));
  EXPECT_EQ(square.N(), 13);
  EXPECT_EQ(square.S(), 28);

  const auto prism = census(build_km_pn(3, 2).graph());
  EXPECT_EQ(prism.size_counts, ints({6, 9, 14, 15, 6, 1}));
  EXPECT_EQ(prism.N(), 51);
  EXPECT_EQ(prism.S(), 162);
}

TEST(Census, DisconnectedGraphHasNoFullSet) {
  SimpleGraph g(4);
  g.add_edge(0, 1);
  g.add_edge(2, 3);
  const auto c = census(g);
  EXPECT_EQ(c.size_counts, ints({4, 2, 0, 0}));
}

TEST(Census, ParallelMatchesSequentialScan) {
  // 16+ vertices takes the threaded path
  std::mt19937 rng(5);
  const auto g = random_graph(rng, 17, 0.25);
  std::vector<std::uint64_t> counts(17, 0);
  for (Mask s = 1; s <= g.all(); ++s)
    if (connected_union_find(g, s)) ++counts[std::popcount(s) - 1];
  const auto c = census(g);
  for (std::size_t t = 0; t < 17; ++t) EXPECT_EQ(c.size_counts[t], counts[t]);
}

TEST(Connectivity, ThreeRoutesAgreeOnRandomSubsets) {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> size(1, 20);
  std::uniform_real_distribution<double> density(0.05, 0.6);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto g = random_graph(rng, size(rng), density(rng));
    std::uniform_int_distribution<Mask> pick(1, g.all());
    const Mask s = pick(rng);
    const bool ff = connected_flood_fill(g, s);
    EXPECT_EQ(ff, connected_union_find(g, s));
    EXPECT_EQ(ff, connected_bfs(g, s));
  }
  EXPECT_FALSE(connected_flood_fill(SimpleGraph(3), 0));
  EXPECT_FALSE(connected_union_find(SimpleGraph(3), 0));
}

TEST(Census, IndependentOfVertexOrder) {
  std::mt19937 rng(99);
  for (auto [m, n] : {std::pair{3, 3}, std::pair{2, 5}, std::pair{4, 3}}) {
    const auto lg = build_km_pn(m, n);
    const auto base = census(lg.graph());
    std::vector<std::size_t> perm(lg.graph().vertex_count());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    for (int r = 0; r < 3; ++r) {
      std::shuffle(perm.begin(), perm.end(), rng);
      EXPECT_EQ(census(lg.graph().relabeled(perm)).size_counts, base.size_counts);
    }
  }
}

TEST(Footprint, Examples) {
  const auto ladder1 = build_km_pn(2, 1);
  EXPECT_EQ(footprint_census(ladder1, 1, Mask{1}).count, 1);

  const auto ladder2 = build_km_pn(2, 2);
  EXPECT_EQ(footprint_census(ladder2, 2, ladder2.layer_mask(2)).count, 3);

  const auto prism = build_km_pn(3, 2);
  for (std::size_t a = 1; a <= 3; ++a)
    for (std::size_t b = a + 1; b <= 3; ++b) {
      const Mask fp = (Mask{1} << prism.vertex(2, a)) | (Mask{1} << prism.vertex(2, b));
      EXPECT_EQ(footprint_census(prism, 2, fp).count, 6);
    }
}

TEST(Footprint, Malformed) {
  const auto lg = build_km_pn(2, 3);
  EXPECT_THROW(footprint_census(lg, 2, 0), domain_error);
  EXPECT_THROW(footprint_census(lg, 2, lg.layer_mask(1)), domain_error);
  EXPECT_THROW(footprint_census(lg, 4, 1), domain_error);
}

TEST(Footprint, CountAndOrderSumDependOnlyOnCardinality) {
  for (std::size_t m = 1; m <= 4; ++m)
    for (std::size_t k = 1; k <= 3; ++k) {
      const auto lg = build_km_pn(m, k);
      std::map<int, FootprintCount> seen;
      for (Mask local = 1; local < (Mask{1} << m); ++local) {
        const auto fc = footprint_census(lg, k, local << ((k - 1) * m));
        auto [it, inserted] = seen.emplace(std::popcount(local), fc);
        if (!inserted) {
          EXPECT_EQ(it->second.count, fc.count);
          EXPECT_EQ(it->second.order_sum, fc.order_sum);
        }
      }
    }
}

// N = sum_k (n+1-k) * (sets spanning exactly k consecutive layers), and the
// count for a span of k layers does not depend on where the span starts.
TEST(SpanCensus, WeightedDecomposition) {
  for (std::size_t m = 1; m <= 4; ++m)
    for (std::size_t n = 1; m * n <= 14; ++n) {
      const auto lg = build_km_pn(m, n);
      const auto spans = span_census(lg);
      const BigInt total = census(lg.graph()).N();
      BigInt weighted = 0;
      for (std::size_t k = 1; k <= n; ++k) {
        for (std::size_t j = 2; j + k - 1 <= n; ++j)
          EXPECT_EQ(spans[j - 1][j + k - 2], spans[0][k - 1]) << m << "," << n << "," << k;
        weighted += (n + 1 - k) * spans[0][k - 1];
      }
      EXPECT_EQ(weighted, total) << "m=" << m << " n=" << n;
    }
}

TEST(EdgeList, Parse) {
  std::istringstream in("# square\n0 1\n1 2\n\n2 3\n3 0\n");
  const auto g = read_edge_list(in);
  EXPECT_EQ(g.vertex_count(), 4U);
  EXPECT_EQ(g.edge_count(), 4U);
  EXPECT_EQ(census(g).N(), 13);
}

TEST(EdgeList, Errors) {
  std::istringstream empty("# nothing\n");
  EXPECT_THROW(read_edge_list(empty), domain_error);
  std::istringstream loop("1 1\n");
  EXPECT_THROW(read_edge_list(loop), domain_error);
  std::istringstream junk("0 x\n");
  EXPECT_THROW(read_edge_list(junk), domain_error);
  std::istringstream three("0 1 2\n");
  EXPECT_THROW(read_edge_list(three), domain_error);
  std::istringstream negative("-1 2\n");
  EXPECT_THROW(read_edge_list(negative), domain_error);
}
