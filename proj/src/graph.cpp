#include "a2tilde/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>

namespace a2t {

namespace {

// Iterated neighbor-degree refinement; returns per-vertex color classes.
// Side 0 = left, side 1 = right.
struct Colors {
  std::vector<int> left;
  std::vector<int> right;
};

Colors refine(const BipartiteGraph& g) {
  const int nl = static_cast<int>(g.left_adj.size());
  const int nr = g.right_size;
  std::vector<std::vector<int>> right_adj(nr);
  for (int u = 0; u < nl; ++u)
    for (int v : g.left_adj[u]) right_adj[v].push_back(u);

  Colors c;
  c.left.assign(nl, 0);
  c.right.assign(nr, 0);
  for (int iter = 0; iter < nl + nr; ++iter) {
    bool changed = false;
    auto recolor = [&](std::vector<int>& mine, const std::vector<int>& other,
                       const std::vector<std::vector<int>>& adj) {
      std::map<std::pair<int, std::vector<int>>, int> next;
      std::vector<int> result(mine.size());
      for (size_t v = 0; v < mine.size(); ++v) {
        std::vector<int> sig;
        for (int w : adj[v]) sig.push_back(other[w]);
        std::sort(sig.begin(), sig.end());
        auto key = std::make_pair(mine[v], std::move(sig));
        auto it = next.emplace(std::move(key), static_cast<int>(next.size())).first;
        result[v] = it->second;
      }
      if (result != mine) {
        mine = std::move(result);
        changed = true;
      }
    };
    recolor(c.left, c.right, g.left_adj);
    recolor(c.right, c.left, right_adj);
    if (!changed) break;
  }
  return c;
}

std::vector<int> color_histogram(const std::vector<int>& colors) {
  std::vector<int> h;
  for (int c : colors) {
    if (c >= static_cast<int>(h.size())) h.resize(c + 1, 0);
    ++h[c];
  }
  return h;
}

}  // namespace

std::optional<BipartiteIsomorphism> bipartite_isomorphism(const BipartiteGraph& a,
                                                          const BipartiteGraph& b) {
  const int nl = static_cast<int>(a.left_adj.size());
  const int nr = a.right_size;
  if (nl != static_cast<int>(b.left_adj.size()) || nr != b.right_size)
    return std::nullopt;

  Colors ca = refine(a);
  Colors cb = refine(b);
  if (color_histogram(ca.left) != color_histogram(cb.left) ||
      color_histogram(ca.right) != color_histogram(cb.right))
    return std::nullopt;

  std::vector<std::vector<uint8_t>> a_inc(nl, std::vector<uint8_t>(nr, 0));
  std::vector<std::vector<uint8_t>> b_inc(nl, std::vector<uint8_t>(nr, 0));
  for (int u = 0; u < nl; ++u)
    for (int v : a.left_adj[u]) a_inc[u][v] = 1;
  for (int u = 0; u < nl; ++u)
    for (int v : b.left_adj[u]) b_inc[u][v] = 1;

  std::vector<int> lmap(nl, -1), rmap(nr, -1);
  std::vector<uint8_t> lused(nl, 0), rused(nr, 0);

  // Assign left vertices in order; propagate right images through edges.
  std::function<bool(int)> place = [&](int u) -> bool {
    if (u == nl) {
      // Any unmatched right vertices are isolated on both sides by now.
      int next = 0;
      for (int v = 0; v < nr; ++v) {
        if (rmap[v] != -1) continue;
        while (next < nr && rused[next]) ++next;
        rmap[v] = next;
        rused[next] = 1;
      }
      return true;
    }
    for (int cand = 0; cand < nl; ++cand) {
      if (lused[cand] || cb.left[cand] != ca.left[u]) continue;
      // Check consistency with already-mapped right vertices.
      bool ok = true;
      for (int v = 0; v < nr && ok; ++v)
        if (rmap[v] != -1 && a_inc[u][v] != b_inc[cand][rmap[v]]) ok = false;
      if (!ok) continue;

      // Extend the right map greedily along u's edges, backtracking on clash.
      std::vector<int> newly;
      for (int v : a.left_adj[u]) {
        if (rmap[v] != -1) continue;
        int pick = -1;
        for (int w = 0; w < nr; ++w) {
          if (rused[w] || cb.right[w] != ca.right[v] || !b_inc[cand][w]) continue;
          bool consistent = true;
          for (int x = 0; x < nl && consistent; ++x)
            if (lmap[x] != -1 && a_inc[x][v] != b_inc[lmap[x]][w]) consistent = false;
          if (consistent) {
            pick = w;
            break;
          }
        }
        if (pick == -1) {
          ok = false;
          break;
        }
        rmap[v] = pick;
        rused[pick] = 1;
        newly.push_back(v);
      }
      if (ok) {
        lmap[u] = cand;
        lused[cand] = 1;
        if (place(u + 1)) return true;
        lused[cand] = 0;
        lmap[u] = -1;
      }
      for (int v : newly) {
        rused[rmap[v]] = 0;
        rmap[v] = -1;
      }
    }
    return false;
  };

  if (!place(0)) return std::nullopt;
  return BipartiteIsomorphism{std::move(lmap), std::move(rmap)};
}

int bipartite_girth(const BipartiteGraph& g) {
  const int nl = static_cast<int>(g.left_adj.size());
  const int nr = g.right_size;
  const int n = nl + nr;  // right vertices shifted by nl
  std::vector<std::vector<int>> adj(n);
  for (int u = 0; u < nl; ++u)
    for (int v : g.left_adj[u]) {
      adj[u].push_back(nl + v);
      adj[nl + v].push_back(u);
    }
  int best = 0;
  std::vector<int> dist(n), parent(n);
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::deque<int> queue = {s};
    dist[s] = 0;
    parent[s] = -1;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int v : adj[u]) {
        if (v == parent[u]) continue;
        if (dist[v] != -1) {
          int cycle = dist[u] + dist[v] + 1;
          if (best == 0 || cycle < best) best = cycle;
          continue;
        }
        dist[v] = dist[u] + 1;
        parent[v] = u;
        queue.push_back(v);
      }
    }
  }
  return best;
}

}  // namespace a2t
