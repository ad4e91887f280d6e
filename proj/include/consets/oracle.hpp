#pragma once

// Brute-force ground truth: enumerate every nonempty vertex subset of a small
// graph and test whether it induces a connected subgraph.

#include "consets/exactmath.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <istream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace consets::oracle {

using Mask = std::uint64_t;

inline constexpr std::size_t kDefaultCap = 22;
inline constexpr std::size_t kMaxCap = 26;

// Explicit value wins, then CONSETS_ORACLE_CAP, then the default.
inline std::size_t resolve_cap(std::optional<std::size_t> requested = std::nullopt) {
  std::size_t cap = kDefaultCap;
  if (requested) {
    cap = *requested;
  } else if (const char* env = std::getenv("CONSETS_ORACLE_CAP"); env != nullptr && *env) {
    char* end = nullptr;
    const unsigned long parsed = std::strtoul(env, &end, 10);
    if (end == env || *end != '\0')
      throw domain_error(std::string("CONSETS_ORACLE_CAP is not an integer: ") + env);
    cap = parsed;
  }
  if (cap == 0 || cap > kMaxCap)
    throw domain_error("oracle cap must be in 1.." + std::to_string(kMaxCap));
  return cap;
}

// Undirected simple graph, one packed adjacency row per vertex.
class SimpleGraph {
 public:
  explicit SimpleGraph(std::size_t vertex_count) : rows_(vertex_count, 0) {
    if (vertex_count == 0 || vertex_count > 64)
      throw domain_error("SimpleGraph: vertex count must be in 1..64");
  }

  std::size_t vertex_count() const { return rows_.size(); }
  Mask neighbors(std::size_t v) const { return rows_.at(v); }
  Mask all() const { return vertex_count() == 64 ? ~Mask{0} : (Mask{1} << vertex_count()) - 1; }

  void add_edge(std::size_t u, std::size_t v) {
    if (u >= vertex_count() || v >= vertex_count())
      throw domain_error("SimpleGraph: edge endpoint out of range");
    if (u == v) throw domain_error("SimpleGraph: loops are not allowed");
    rows_[u] |= Mask{1} << v;
    rows_[v] |= Mask{1} << u;
  }

  bool has_edge(std::size_t u, std::size_t v) const { return (rows_.at(u) >> v) & 1U; }

  std::size_t edge_count() const {
    std::size_t deg = 0;
    for (Mask r : rows_) deg += std::popcount(r);
    return deg / 2;
  }

  // Vertex v of the result is vertex perm[v] of this graph.
  SimpleGraph relabeled(const std::vector<std::size_t>& perm) const {
    if (perm.size() != vertex_count()) throw domain_error("relabeled: permutation size mismatch");
    std::vector<std::size_t> inverse(perm.size());
    for (std::size_t v = 0; v < perm.size(); ++v) inverse.at(perm[v]) = v;
    SimpleGraph g(vertex_count());
    for (std::size_t u = 0; u < vertex_count(); ++u)
      for (std::size_t w = u + 1; w < vertex_count(); ++w)
        if (has_edge(u, w)) g.add_edge(inverse[u], inverse[w]);
    return g;
  }

 private:
  std::vector<Mask> rows_;
};

// Reads "u v" pairs, one per line, 0-based. Blank lines and lines starting
// with '#' are skipped. The vertex count is the largest index plus one.
inline SimpleGraph read_edge_list(std::istream& in) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::size_t max_vertex = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    long long u = -1, v = -1;
    std::string extra;
    if (!(fields >> u >> v) || (fields >> extra) || u < 0 || v < 0)
      throw domain_error("edge list line " + std::to_string(line_no) + ": expected 'u v'");
    edges.emplace_back(u, v);
    max_vertex = std::max<std::size_t>(max_vertex, std::max(u, v));
  }
  if (edges.empty()) throw domain_error("edge list is empty");
  SimpleGraph g(max_vertex + 1);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

// K_m x P_n with vertex (layer l, position p) at index (l-1)*m + (p-1).
class LayeredGraph {
 public:
  LayeredGraph(std::size_t m, std::size_t n) : graph_(m * n), m_(m), n_(n) {
    for (std::size_t l = 0; l < n; ++l)
      for (std::size_t p = 0; p < m; ++p) {
        for (std::size_t q = p + 1; q < m; ++q) graph_.add_edge(l * m + p, l * m + q);
        if (l + 1 < n) graph_.add_edge(l * m + p, (l + 1) * m + p);
      }
  }

  const SimpleGraph& graph() const { return graph_; }
  std::size_t m() const { return m_; }
  std::size_t n() const { return n_; }

  // 1-based layer of vertex v.
  std::size_t layer_of(std::size_t v) const { return v / m_ + 1; }

  Mask layer_mask(std::size_t layer) const {
    if (layer == 0 || layer > n_) throw domain_error("LayeredGraph: layer out of range");
    return ((Mask{1} << m_) - 1) << ((layer - 1) * m_);
  }

  // Vertex at 1-based (layer, position).
  std::size_t vertex(std::size_t layer, std::size_t position) const {
    if (layer == 0 || layer > n_ || position == 0 || position > m_)
      throw domain_error("LayeredGraph: vertex out of range");
    return (layer - 1) * m_ + (position - 1);
  }

 private:
  SimpleGraph graph_;
  std::size_t m_;
  std::size_t n_;
};

inline LayeredGraph build_km_pn(std::size_t m, std::size_t n, std::size_t cap = kDefaultCap) {
  if (m == 0 || n == 0) throw domain_error("build_km_pn: m and n must be >= 1");
  if (cap > kMaxCap) throw domain_error("build_km_pn: cap above " + std::to_string(kMaxCap));
  if (m * n > cap)
    throw domain_error("build_km_pn: K_" + std::to_string(m) + " x P_" + std::to_string(n) +
                       " has " + std::to_string(m * n) + " vertices, above the enumeration cap " +
                       std::to_string(cap));
  return {m, n};
}

// Flood fill over packed rows, starting from the lowest vertex of the subset.
inline bool connected_flood_fill(const SimpleGraph& g, Mask subset) {
  if (subset == 0) return false;
  Mask seen = subset & (~subset + 1);
  Mask frontier = seen;
  while (frontier != 0) {
    Mask next = 0;
    for (Mask f = frontier; f != 0; f &= f - 1) next |= g.neighbors(std::countr_zero(f));
    next &= subset & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == subset;
}

// Union-find over the edges of the induced subgraph. Redundant checker for
// connected_flood_fill.
inline bool connected_union_find(const SimpleGraph& g, Mask subset) {
  if (subset == 0) return false;
  std::vector<std::size_t> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = std::popcount(subset);
  for (Mask s = subset; s != 0; s &= s - 1) {
    const std::size_t u = std::countr_zero(s);
    for (Mask nb = g.neighbors(u) & subset & ~((Mask{2} << u) - 1); nb != 0; nb &= nb - 1) {
      const std::size_t a = find(u);
      const std::size_t b = find(std::countr_zero(nb));
      if (a != b) {
        parent[a] = b;
        --components;
      }
    }
  }
  return components == 1;
}

struct CensusReport {
  // size_counts[t-1] = number of connected sets of order t
  std::vector<BigInt> size_counts;

  BigInt N() const {
    BigInt n = 0;
    for (const auto& c : size_counts) n += c;
    return n;
  }
  BigInt S() const {
    BigInt s = 0;
    for (std::size_t t = 0; t < size_counts.size(); ++t) s += (t + 1) * size_counts[t];
    return s;
  }
  BigRational A() const { return {S(), N()}; }
};

namespace detail {

inline std::size_t worker_count(std::size_t vertex_count) {
  if (vertex_count < 16) return 1;
  return std::max(1U, std::thread::hardware_concurrency());
}

// Counts connected subsets in [lo, hi) by popcount.
inline void census_range(const SimpleGraph& g, Mask lo, Mask hi, std::vector<std::uint64_t>& out) {
  for (Mask s = lo; s < hi; ++s)
    if (connected_flood_fill(g, s)) ++out[std::popcount(s) - 1];
}

}  // namespace detail

inline CensusReport census(const SimpleGraph& g, std::size_t cap = kDefaultCap) {
  const std::size_t v = g.vertex_count();
  if (cap > kMaxCap) throw domain_error("census: cap above " + std::to_string(kMaxCap));
  if (v > cap)
    throw domain_error("census: " + std::to_string(v) + " vertices exceeds the enumeration cap " +
                       std::to_string(cap));
  const Mask end = Mask{1} << v;
  const std::size_t workers = detail::worker_count(v);
  std::vector<std::vector<std::uint64_t>> partial(workers, std::vector<std::uint64_t>(v, 0));
  if (workers == 1) {
    detail::census_range(g, 1, end, partial[0]);
  } else {
    std::vector<std::thread> pool;
    const Mask chunk = (end - 1) / workers + 1;
    for (std::size_t w = 0; w < workers; ++w) {
      const Mask lo = 1 + w * chunk;
      const Mask hi = std::min(end, lo + chunk);
      if (lo >= hi) break;
      pool.emplace_back([&g, lo, hi, &out = partial[w]] { detail::census_range(g, lo, hi, out); });
    }
    for (auto& t : pool) t.join();
  }
  CensusReport report;
  report.size_counts.assign(v, BigInt(0));
  for (const auto& part : partial)
    for (std::size_t t = 0; t < v; ++t) report.size_counts[t] += part[t];
  return report;
}

struct FootprintCount {
  BigInt count;
  BigInt order_sum;
};

// Connected sets that meet every layer 1..k-1, meet layer k in exactly
// `footprint`, and avoid every layer after k.
inline FootprintCount footprint_census(const LayeredGraph& lg, std::size_t k, Mask footprint) {
  const Mask layer_k = lg.layer_mask(k);
  if (footprint == 0 || (footprint & ~layer_k) != 0)
    throw domain_error("footprint_census: footprint must be a nonempty subset of layer k");
  const std::size_t m = lg.m();
  const std::size_t free_bits = (k - 1) * m;
  if (free_bits > kMaxCap) throw domain_error("footprint_census: enumeration too large");
  std::vector<Mask> layers;
  for (std::size_t l = 1; l < k; ++l) layers.push_back(lg.layer_mask(l));

  FootprintCount result{0, 0};
  std::uint64_t count = 0, order_sum = 0;
  for (Mask lower = 0; lower < (Mask{1} << free_bits); ++lower) {
    bool meets_all = true;
    for (Mask lm : layers)
      if ((lower & lm) == 0) {
        meets_all = false;
        break;
      }
    if (!meets_all) continue;
    const Mask subset = lower | footprint;
    if (connected_flood_fill(lg.graph(), subset)) {
      ++count;
      order_sum += std::popcount(subset);
    }
  }
  result.count = count;
  result.order_sum = order_sum;
  return result;
}

// spans[first-1][last-1] = number of connected sets whose lowest layer is
// `first` and highest layer is `last`.
inline std::vector<std::vector<BigInt>> span_census(const LayeredGraph& lg,
                                                    std::size_t cap = kDefaultCap) {
  const auto& g = lg.graph();
  if (g.vertex_count() > cap) throw domain_error("span_census: graph exceeds the enumeration cap");
  const std::size_t n = lg.n();
  std::vector<std::vector<std::uint64_t>> raw(n, std::vector<std::uint64_t>(n, 0));
  for (Mask s = 1; s < (Mask{1} << g.vertex_count()); ++s) {
    if (!connected_flood_fill(g, s)) continue;
    const std::size_t first = lg.layer_of(std::countr_zero(s));
    const std::size_t last = lg.layer_of(63 - std::countl_zero(s));
    ++raw[first - 1][last - 1];
  }
  std::vector<std::vector<BigInt>> spans(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) spans[i][j] = raw[i][j];
  return spans;
}

}  // namespace consets::oracle
