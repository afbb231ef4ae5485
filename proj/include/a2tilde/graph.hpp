#pragma once

#include <optional>
#include <vector>

namespace a2t {

// Bipartite graph given by adjacency lists of the left side; right-side
// degrees are implied. Vertex counts are the list sizes.
struct BipartiteGraph {
  std::vector<std::vector<int>> left_adj;  // left vertex -> sorted right vertices
  int right_size = 0;
};

// Isomorphism a -> b respecting sides. Returns the left and right vertex
// maps of the first isomorphism in canonical search order, or nullopt.
// Intended for the small graphs that appear as vertex links and incidence
// graphs; uses degree refinement plus backtracking.
struct BipartiteIsomorphism {
  std::vector<int> left_map;   // a-left vertex -> b-left vertex
  std::vector<int> right_map;  // a-right vertex -> b-right vertex
};

std::optional<BipartiteIsomorphism> bipartite_isomorphism(
    const BipartiteGraph& a, const BipartiteGraph& b);

// Length of the shortest cycle, or 0 if the graph is acyclic. Brute force
// BFS per vertex; fine for link-sized graphs.
int bipartite_girth(const BipartiteGraph& g);

}  // namespace a2t
