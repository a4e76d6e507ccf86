#include "tribound/types.hpp"

#include <algorithm>

namespace tribound {

Triple make_triple(int a, int b, int c) {
    Triple t{a, b, c};
    std::sort(t.begin(), t.end());
    if (t[0] < 0 || t[0] == t[1] || t[1] == t[2])
        throw ParamError("triple must have 3 distinct nonnegative vertices");
    return t;
}

int Hypergraph3::check_n(int n) {
    if (n < 0) throw ParamError("Hypergraph3: negative vertex count");
    return n;
}

void Hypergraph3::validate_triple(const Triple& t) const {
    if (t[0] < 0 || t[0] >= t[1] || t[1] >= t[2] || t[2] >= n_)
        throw ParamError("triple out of range or not strictly increasing");
}

Hypergraph3::Hypergraph3(int n, std::vector<Triple> triples)
    : n_(check_n(n)), triples_(std::move(triples)) {
    for (auto& t : triples_) t = make_triple(t[0], t[1], t[2]);
    std::sort(triples_.begin(), triples_.end());
    for (const auto& t : triples_) validate_triple(t);
}

void Hypergraph3::add(const Triple& raw) {
    Triple t = make_triple(raw[0], raw[1], raw[2]);
    validate_triple(t);
    triples_.insert(std::upper_bound(triples_.begin(), triples_.end(), t), t);
}

std::map<VertexPair, int> Hypergraph3::pair_counts() const {
    std::map<VertexPair, int> counts;
    for (const auto& t : triples_) {
        ++counts[{t[0], t[1]}];
        ++counts[{t[0], t[2]}];
        ++counts[{t[1], t[2]}];
    }
    return counts;
}

void Multigraph::add_edge(int u, int v, int count) {
    if (u == v) throw ParamError("Multigraph: loops not allowed");
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw ParamError("Multigraph: endpoint out of range");
    if (count == 0) return;
    auto key = make_pair_sorted(u, v);
    int m = mult_[key] + count;
    if (m < 0) throw ParamError("Multigraph: negative multiplicity");
    if (m == 0)
        mult_.erase(key);
    else
        mult_[key] = m;
}

int Multigraph::multiplicity(int u, int v) const {
    auto it = mult_.find(make_pair_sorted(u, v));
    return it == mult_.end() ? 0 : it->second;
}

int Multigraph::degree(int v) const {
    int d = 0;
    for (const auto& [e, m] : mult_)
        if (e.first == v || e.second == v) d += m;
    return d;
}

long long Multigraph::edge_total() const {
    long long total = 0;
    for (const auto& [e, m] : mult_) total += m;
    return total;
}

TripleSystem::TripleSystem(int nu, int lambda) : nu_(nu), lambda_(lambda) {
    if (nu < 0) throw ParamError("TripleSystem: negative point count");
    if (lambda < 1) throw ParamError("TripleSystem: lambda must be positive");
}

TripleSystem::TripleSystem(int nu, int lambda, std::vector<Triple> triples)
    : TripleSystem(nu, lambda) {
    Hypergraph3 h(nu, std::move(triples));  // canonicalize + range checks
    triples_ = h.triples();
    for (const auto& [p, c] : h.pair_counts())
        if (c > lambda_)
            throw ParamError("TripleSystem: pair multiplicity exceeds lambda");
}

void TripleSystem::add(const Triple& raw) {
    Triple t = make_triple(raw[0], raw[1], raw[2]);
    if (t[2] >= nu_) throw ParamError("TripleSystem: vertex out of range");
    auto counts = pair_counts();
    if (counts[{t[0], t[1]}] >= lambda_ || counts[{t[0], t[2]}] >= lambda_ ||
        counts[{t[1], t[2]}] >= lambda_)
        throw ParamError("TripleSystem: pair multiplicity exceeds lambda");
    triples_.insert(std::upper_bound(triples_.begin(), triples_.end(), t), t);
}

std::map<VertexPair, int> TripleSystem::pair_counts() const {
    std::map<VertexPair, int> counts;
    for (const auto& t : triples_) {
        ++counts[{t[0], t[1]}];
        ++counts[{t[0], t[2]}];
        ++counts[{t[1], t[2]}];
    }
    return counts;
}

Certificate make_certificate(long long edge_count, long long bound,
                             int max_codegree, int codegree_cap,
                             int matching_number, int matching_cap,
                             std::string notes) {
    Certificate c;
    c.edge_count = edge_count;
    c.bound = bound;
    c.max_codegree = max_codegree;
    c.codegree_cap = codegree_cap;
    c.matching_number = matching_number;
    c.matching_cap = matching_cap;
    c.notes = std::move(notes);
    c.passed = edge_count == bound && max_codegree <= codegree_cap &&
               matching_number <= matching_cap;
    return c;
}

}  // namespace tribound
