#pragma once

#include <vector>

#include "tribound/types.hpp"

namespace tribound {

// Number of triples (with multiplicity) containing both u and v.
int codegree(const Hypergraph3& h, int u, int v);

// Maximum codegree over all pairs; 0 for an edgeless hypergraph.
int max_codegree(const Hypergraph3& h);

struct MatchingOptions {
    long long node_budget = 100'000'000;
};

// Exact maximum number of pairwise disjoint triples. Duplicate triples are
// deduplicated first. Branch and bound; throws ResourceError past the budget.
int matching_number(const Hypergraph3& h, const MatchingOptions& opts = {});

// Leave multigraph: pair {x,y} appears lambda - coverage times.
Multigraph leave(const TripleSystem& ts);

// Link graph of x: edges e \ {x} for each triple e containing x.
Multigraph link_graph(const Hypergraph3& h, int x);

// Maximum matching size of the underlying simple graph.
int graph_matching_number(const Multigraph& g);

// Witness edges of a maximum matching of the underlying simple graph.
std::vector<VertexPair> maximum_matching(const Multigraph& g);

}  // namespace tribound
