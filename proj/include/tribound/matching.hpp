#pragma once

#include <vector>

namespace tribound {

// Maximum matching in a simple undirected graph via augmenting paths with
// blossom contraction (O(V^3)). Returns mate[v] = matched partner or -1.
std::vector<int> max_matching_blossom(int n,
                                      const std::vector<std::vector<int>>& adj);

}  // namespace tribound
