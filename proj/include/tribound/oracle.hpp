#pragma once

#include <cstdint>

#include "tribound/types.hpp"

namespace tribound {

struct SearchReport {
    long long optimum = 0;
    Hypergraph3 witness;
    long long nodes = 0;
    double elapsed_seconds = 0.0;
    bool exhausted = false;  // optimum is certified only when true
};

struct OracleOptions {
    long long node_budget = 1'000'000'000;
    bool allow_large = false;  // lift the soft size limits
};

// Exact maximum number of triples (with multiplicity, pair multiplicity
// <= lambda) on nu points whose leave has at least s independent edges.
// Exhaustive multiset DFS; independent of the library constructions.
SearchReport oracle_mpts(int nu, int lambda, int s,
                         const OracleOptions& opts = {});

// Exact maximum e(H) over multiset 3-graphs on n vertices with
// max codegree <= delta2 and matching number <= nu.
SearchReport oracle_extremal(int n, int nu, int delta2,
                             const OracleOptions& opts = {});

// Number of matchings of size exactly k among the distinct triples of h.
// Requires at most 20 distinct triples.
long long enumerate_matchings(const Hypergraph3& h, int k);

}  // namespace tribound
