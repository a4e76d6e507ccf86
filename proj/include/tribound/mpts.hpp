#pragma once

#include <cstdint>
#include <string>

#include "tribound/types.hpp"

namespace tribound {

enum class MptsCase {
    I, II, III, IV, V, VI, VII, VIII, IX, X, XI, Case2, Small
};

std::string to_string(MptsCase c);

struct MptsResult {
    TripleSystem system;
    Multigraph leave_graph;
    MptsCase case_tag = MptsCase::Small;
};

// Maximum partial triple system whose leave has at least s independent
// edges; size equals compute_g(nu, lambda, s). Every result passes a
// verification gate (size, leave, matching, pair caps) before return.
MptsResult construct_mpts(int nu, int lambda, int s, std::uint64_t seed = 0);

// Remove all triples containing x and relabel the remaining points densely.
TripleSystem delete_point(const TripleSystem& ts, int x);

// Multiset union of two systems plus extra triples, under the given cap.
TripleSystem union_systems(const TripleSystem& a, const TripleSystem& b,
                           const std::vector<Triple>& extra, int lambda);

// Pointwise relabeling by a bijection on {0..nu-1}.
TripleSystem relabel(const TripleSystem& ts, const std::vector<int>& perm);
Multigraph relabel_graph(const Multigraph& g, const std::vector<int>& perm);

// Bijection on {0..n-1} sending sources[i] -> targets[i] and the remaining
// points to the remaining positions in increasing order.
std::vector<int> permutation_sending(const std::vector<int>& sources,
                                     const std::vector<int>& targets, int n);

}  // namespace tribound
