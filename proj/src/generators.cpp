#include "edgepoly/generators.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <stdexcept>

namespace edgepoly {

namespace {

void require_small(int n) {
  if (n < 1 || n > kMaxEnumerationVertices)
    throw std::invalid_argument("enumeration supports 1.." + std::to_string(kMaxEnumerationVertices) +
                                " vertices, got " + std::to_string(n));
}

// Bit position maps for every permutation of n vertices, cached per n.
const std::vector<std::vector<int>>& permutation_tables(int n) {
  static std::vector<std::vector<std::vector<int>>> cache(kMaxEnumerationVertices + 1);
  auto& tables = cache[static_cast<std::size_t>(n)];
  if (tables.empty()) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    do {
      std::vector<int> map(static_cast<std::size_t>(n * n));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          map[static_cast<std::size_t>(i * n + j)] = p[static_cast<std::size_t>(i)] * n + p[static_cast<std::size_t>(j)];
      tables.push_back(std::move(map));
    } while (std::next_permutation(p.begin(), p.end()));
  }
  return tables;
}

AdjacencyCode permute(AdjacencyCode code, const std::vector<int>& map) {
  AdjacencyCode out = 0;
  while (code) {
    int b = std::countr_zero(code);
    code &= code - 1;
    out |= AdjacencyCode{1} << map[static_cast<std::size_t>(b)];
  }
  return out;
}

bool code_is_canonical(int n, AdjacencyCode code) {
  for (const auto& map : permutation_tables(n))
    if (permute(code, map) < code) return false;
  return true;
}

AdjacencyCode code_canonical(int n, AdjacencyCode code) {
  AdjacencyCode best = code;
  for (const auto& map : permutation_tables(n)) best = std::min(best, permute(code, map));
  return best;
}

std::vector<std::uint64_t> out_masks(int n, AdjacencyCode code) {
  std::vector<std::uint64_t> out(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = (code >> (i * n)) & ((std::uint64_t{1} << n) - 1);
  return out;
}

bool code_connected(int n, AdjacencyCode code) {
  auto out = out_masks(n, code);
  std::vector<std::uint64_t> adj(out);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if ((out[static_cast<std::size_t>(i)] >> j) & 1U) adj[static_cast<std::size_t>(j)] |= std::uint64_t{1} << i;
  std::uint64_t seen = 1, frontier = 1;
  while (frontier) {
    std::uint64_t next = 0;
    for (std::uint64_t f = frontier; f; f &= f - 1) next |= adj[static_cast<std::size_t>(std::countr_zero(f))];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == (std::uint64_t{1} << n) - 1;
}

// Every arc (i,j) has a directed path back from j to i.
bool code_fano(int n, AdjacencyCode code) {
  if (code == 0) return false;
  auto out = out_masks(n, code);
  std::vector<std::uint64_t> reach(out);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if ((reach[static_cast<std::size_t>(i)] >> k) & 1U) reach[static_cast<std::size_t>(i)] |= reach[static_cast<std::size_t>(k)];
  for (int i = 0; i < n; ++i)
    for (std::uint64_t o = out[static_cast<std::size_t>(i)]; o; o &= o - 1) {
      int j = std::countr_zero(o);
      if (!((reach[static_cast<std::size_t>(j)] >> i) & 1U)) return false;
    }
  return true;
}

}  // namespace

AdjacencyCode adjacency_code(const DirectedGraph& g) {
  const int n = g.vertex_count();
  require_small(n);
  AdjacencyCode code = 0;
  for (const auto& a : g.arcs()) code |= AdjacencyCode{1} << ((a.tail - 1) * n + (a.head - 1));
  return code;
}

DirectedGraph decode(int n, AdjacencyCode code) {
  require_small(n);
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if ((code >> (i * n + j)) & 1U) arcs.push_back({i + 1, j + 1});
  return DirectedGraph(n, arcs);
}

AdjacencyCode canonical_code(const DirectedGraph& g) {
  return code_canonical(g.vertex_count(), adjacency_code(g));
}

DirectedGraph canonical_form(const DirectedGraph& g) {
  return decode(g.vertex_count(), canonical_code(g));
}

bool is_canonical(const DirectedGraph& g) {
  return code_is_canonical(g.vertex_count(), adjacency_code(g));
}

bool is_connected(const DirectedGraph& g) {
  return connected_components(g).size() == 1;
}

void for_each_canonical_digraph(int n, DigraphFamily family, const GraphVisitor& visit) {
  require_small(n);
  if (n > 5) throw std::invalid_argument("exhaustive digraph enumeration is limited to 5 vertices");
  std::vector<int> positions;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) positions.push_back(i * n + j);
  const std::uint64_t total = std::uint64_t{1} << positions.size();
  for (std::uint64_t m = 0; m < total; ++m) {
    AdjacencyCode code = 0;
    for (std::uint64_t b = m; b; b &= b - 1) code |= AdjacencyCode{1} << positions[static_cast<std::size_t>(std::countr_zero(b))];
    if (family != DigraphFamily::All && !code_fano(n, code)) continue;
    if (family == DigraphFamily::ConnectedFano && !code_connected(n, code)) continue;
    if (code_is_canonical(n, code)) visit(decode(n, code));
  }
}

std::vector<DirectedGraph> canonical_dags(int n) {
  require_small(n);
  std::vector<int> positions;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) positions.push_back(i * n + j);
  std::set<AdjacencyCode> seen;
  const std::uint64_t total = std::uint64_t{1} << positions.size();
  for (std::uint64_t m = 0; m < total; ++m) {
    AdjacencyCode code = 0;
    for (std::uint64_t b = m; b; b &= b - 1) code |= AdjacencyCode{1} << positions[static_cast<std::size_t>(std::countr_zero(b))];
    seen.insert(code_canonical(n, code));
  }
  std::vector<DirectedGraph> out;
  for (auto c : seen) out.push_back(decode(n, c));
  return out;
}

std::vector<UndirectedGraph> canonical_undirected(int n) {
  require_small(n);
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.push_back({i, j});
  std::vector<UndirectedGraph> out;
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  for (std::uint64_t m = 0; m < total; ++m) {
    AdjacencyCode code = 0;
    std::vector<UndirectedEdge> edges;
    for (std::uint64_t b = m; b; b &= b - 1) {
      auto [i, j] = pairs[static_cast<std::size_t>(std::countr_zero(b))];
      code |= AdjacencyCode{1} << (i * n + j);
      code |= AdjacencyCode{1} << (j * n + i);
      edges.push_back({i + 1, j + 1});
    }
    if (code_is_canonical(n, code)) out.emplace_back(n, edges);
  }
  return out;
}

DirectedGraph symmetric_cycle(int m) {
  if (m < 3) throw std::invalid_argument("symmetric_cycle needs at least 3 vertices");
  std::vector<Arc> arcs;
  for (int i = 1; i <= m; ++i) {
    int j = i % m + 1;
    arcs.push_back({i, j});
    arcs.push_back({j, i});
  }
  return DirectedGraph(m, arcs);
}

DirectedGraph directed_cycle(int m) {
  if (m < 2) throw std::invalid_argument("directed_cycle needs at least 2 vertices");
  std::vector<Arc> arcs;
  for (int i = 1; i <= m; ++i) arcs.push_back({i, i % m + 1});
  return DirectedGraph(m, arcs);
}

namespace {

// Split `total` into `parts` positive summands, in every order.
void compositions(int total, int parts, std::vector<int>& cur,
                  const std::function<void(const std::vector<int>&)>& visit) {
  if (parts == 0) {
    if (total == 0) visit(cur);
    return;
  }
  for (int x = 1; x <= total - (parts - 1); ++x) {
    cur.push_back(x);
    compositions(total - x, parts - 1, cur, visit);
    cur.pop_back();
  }
}

}  // namespace

std::vector<DirectedGraph> glued_even_cycles(int max_half, int max_shared) {
  std::set<std::pair<int, AdjacencyCode>> seen;
  std::vector<DirectedGraph> out;
  for (int k = 2; k <= max_half; ++k)
    for (int l = k; l <= max_half; ++l) {
      const int a_len = 2 * k;
      // Shared arcs are a subset S of the first cycle's arcs, |S| <= max_shared.
      for (std::uint64_t s = 1; s < (std::uint64_t{1} << a_len); ++s) {
        const int shared = std::popcount(s);
        if (shared > max_shared || shared >= 2 * l) continue;
        // Maximal runs of consecutive shared arcs, in cyclic order.
        std::vector<std::pair<int, int>> runs;  // start vertex index, end vertex index (0-based)
        int first = 0;
        while ((s >> first) & 1U) ++first;  // an unshared arc exists unless all are shared
        if (first == a_len) continue;
        for (int t = 1; t <= a_len; ++t) {
          int idx = (first + t) % a_len;
          if (!((s >> idx) & 1U)) continue;
          int prev = (idx + a_len - 1) % a_len;
          if (((s >> prev) & 1U) && !runs.empty() && runs.back().second == idx) {
            runs.back().second = (idx + 1) % a_len;
          } else {
            runs.push_back({idx, (idx + 1) % a_len});
          }
        }
        const int gaps = static_cast<int>(runs.size());
        std::vector<int> cur;
        compositions(2 * l - shared, gaps, cur, [&](const std::vector<int>& lengths) {
          int n = a_len;
          std::vector<Arc> arcs;
          for (int i = 0; i < a_len; ++i) arcs.push_back({i + 1, (i + 1) % a_len + 1});
          for (int g = 0; g < gaps; ++g) {
            int from = runs[static_cast<std::size_t>(g)].second + 1;
            int to = runs[static_cast<std::size_t>((g + 1) % gaps)].first + 1;
            int prev = from;
            for (int step = 1; step < lengths[static_cast<std::size_t>(g)]; ++step) {
              ++n;
              arcs.push_back({prev, n});
              prev = n;
            }
            arcs.push_back({prev, to});
          }
          if (n > kMaxEnumerationVertices) return;
          std::set<Arc> unique(arcs.begin(), arcs.end());
          if (unique.size() != arcs.size()) return;
          for (const auto& a : arcs) {
            if (a.tail == a.head || unique.count({a.head, a.tail})) return;
          }
          DirectedGraph g(n, arcs);
          if (seen.insert({n, canonical_code(g)}).second) out.push_back(canonical_form(g));
        });
      }
    }
  return out;
}

DirectedGraph random_connected_fano(int n, std::mt19937_64& rng) {
  require_small(n);
  if (n < 2) throw std::invalid_argument("random_connected_fano needs at least 2 vertices");
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (;;) {
    AdjacencyCode code = 0;
    if (unit(rng) < 0.5) {
      std::uniform_int_distribution<int> cycles(1, n);
      std::uniform_int_distribution<int> length(2, n);
      int count = cycles(rng);
      for (int c = 0; c < count; ++c) {
        std::vector<int> p(static_cast<std::size_t>(n));
        std::iota(p.begin(), p.end(), 0);
        std::shuffle(p.begin(), p.end(), rng);
        int len = length(rng);
        for (int i = 0; i < len; ++i) {
          int u = p[static_cast<std::size_t>(i)];
          int v = p[static_cast<std::size_t>((i + 1) % len)];
          code |= AdjacencyCode{1} << (u * n + v);
        }
      }
    } else {
      double density = 0.15 + 0.55 * unit(rng);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (i != j && unit(rng) < density) code |= AdjacencyCode{1} << (i * n + j);
    }
    if (code_fano(n, code) && code_connected(n, code)) return decode(n, code);
  }
}

std::vector<DirectedGraph> distinct_random_fano(int n, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::set<AdjacencyCode> seen;
  std::vector<DirectedGraph> out;
  std::size_t attempts = 0;
  const std::size_t limit = count * 1000 + 1000;
  while (out.size() < count) {
    if (++attempts > limit)
      throw std::runtime_error("could not find " + std::to_string(count) +
                               " distinct connected Fano digraphs on " + std::to_string(n) + " vertices");
    DirectedGraph g = random_connected_fano(n, rng);
    if (seen.insert(canonical_code(g)).second) out.push_back(g);
  }
  return out;
}

}  // namespace edgepoly
