#pragma once

#include <cstdint>
#include <vector>

#include "tribound/measure.hpp"
#include "tribound/types.hpp"

namespace tribound {

// Degree prescription for edge-disjoint factors of K_m: factor i is
// delta2-regular except at its deficient vertices, which get delta2-1.
struct FactorSpec {
    int m = 0;
    int delta2 = 1;
    std::vector<std::vector<int>> deficient;  // one entry per factor
};

// Pairwise edge-disjoint simple graphs realizing the prescription exactly.
// Deterministic for fixed seed; degree and disjointness are re-verified
// before return.
std::vector<Multigraph> extract_factors(const FactorSpec& spec,
                                        std::uint64_t seed = 0);

// Partition of an extremal candidate by |e intersect V0|.
struct ExtremalPartition {
    std::vector<int> v0;
    std::vector<Triple> e1, e2, e3;
    long long eps1 = 0, eps2 = 0, eps3 = 0;
    long long overflow = 0;  // edges missing V0 entirely
    bool valid = false;      // overflow == 0
    std::vector<int> d;      // d_i: degree of v_i in L = {e cap V0 : e in E2}
    int p = 0, q = 0;        // counts of odd / even d_i
    bool ineq2_ok = false;   // 3*eps3 + eps2 <= C(nu,2)*delta2
    bool ineq3_ok = false;   // 2*eps2 + 2*eps1 <= nu*(n-nu)*delta2
    long long ineq2_slack = 0, ineq3_slack = 0;
};

struct ExtremalResult {
    Hypergraph3 h;
    ExtremalPartition partition;
    bool case1 = false;  // (n - nu) * delta2 even
};

// Smallest n the construction accepts for the given parameters.
long long n_threshold(int nu, int delta2);

// Extremal 3-graph: e(H) == f(n,nu,delta2), codegree <= delta2, matching
// number exactly nu. Verified before return.
ExtremalResult construct_extremal(long long n, int nu, int delta2,
                                  std::uint64_t seed = 0);

Certificate verify_extremal(const Hypergraph3& h, int nu, int delta2,
                            const MatchingOptions& opts = {});

ExtremalPartition partition_diagnostics(const Hypergraph3& h,
                                        const std::vector<int>& v0,
                                        int delta2);

}  // namespace tribound
