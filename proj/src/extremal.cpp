#include "tribound/extremal.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "tribound/bounds.hpp"
#include "tribound/matching.hpp"
#include "tribound/mpts.hpp"

namespace tribound {

namespace {

using EdgeList = std::vector<VertexPair>;

// Circle-method one-factorization of K_m, m even: m-1 perfect matchings.
std::vector<EdgeList> one_factorization(int m) {
    std::vector<EdgeList> rounds;
    for (int r = 0; r < m - 1; ++r) {
        EdgeList round;
        round.emplace_back(m - 1, r);
        for (int i = 1; i < m / 2; ++i) {
            int a = (r + i) % (m - 1);
            int b = (r - i + m - 1) % (m - 1);
            round.push_back(make_pair_sorted(a, b));
        }
        rounds.push_back(std::move(round));
    }
    return rounds;
}

// Difference class d of Z_m (m odd): the 2-regular graph {i, i+d}.
EdgeList difference_class(int m, int d) {
    EdgeList edges;
    for (int i = 0; i < m; ++i)
        edges.push_back(make_pair_sorted(i, (i + d) % m));
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return edges;
}

// Near-perfect matching missing y, carved from the cycle of a difference
// class d with gcd(m,d) = 1.
EdgeList carve_missing_one(int m, int d, int y) {
    std::vector<int> path;
    for (int t = 1; t < m; ++t) path.push_back((y + static_cast<long long>(d) * t) % m);
    EdgeList edges;
    for (std::size_t i = 0; i + 1 < path.size(); i += 2)
        edges.push_back(make_pair_sorted(path[i], path[i + 1]));
    return edges;
}

// Perfect matching on V minus three prescribed vertices, carved from the
// cycle of class d; the three vertices must split the cycle into arcs of
// even length.
bool carve_missing_three(int m, int d, const std::vector<int>& miss,
                         EdgeList& out) {
    std::vector<int> cycle;
    for (int t = 0; t < m; ++t) cycle.push_back(static_cast<int>(static_cast<long long>(d) * t % m));
    std::vector<int> pos;
    for (int t = 0; t < m; ++t)
        if (std::find(miss.begin(), miss.end(), cycle[t]) != miss.end())
            pos.push_back(t);
    out.clear();
    for (int k = 0; k < 3; ++k) {
        int a = pos[k], b = pos[(k + 1) % 3] + (k == 2 ? m : 0);
        if ((b - a - 1) % 2 != 0) return false;
        for (int t = a + 1; t + 1 < b; t += 2)
            out.push_back(
                make_pair_sorted(cycle[t % m], cycle[(t + 1) % m]));
    }
    return true;
}

void verify_factors(const FactorSpec& spec,
                    const std::vector<Multigraph>& factors) {
    std::set<VertexPair> seen;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const auto& g = factors[i];
        for (int v = 0; v < spec.m; ++v) {
            bool deficient =
                std::find(spec.deficient[i].begin(), spec.deficient[i].end(),
                          v) != spec.deficient[i].end();
            if (g.degree(v) != spec.delta2 - (deficient ? 1 : 0))
                throw VerifyError("extract_factors: degree check failed");
        }
        for (const auto& [e, mult] : g.edges()) {
            if (mult != 1 || !seen.insert(e).second)
                throw VerifyError("extract_factors: factors not edge-disjoint");
        }
    }
}

// Degree-constrained subgraph of a simple edge pool via the vertex-splitting
// reduction to perfect matching. Returns false if no such subgraph exists.
bool degree_subgraph(int m, const EdgeList& pool, const std::vector<int>& want,
                     EdgeList& out) {
    std::vector<std::vector<int>> incident(m);
    for (std::size_t e = 0; e < pool.size(); ++e) {
        incident[pool[e].first].push_back(static_cast<int>(e));
        incident[pool[e].second].push_back(static_cast<int>(e));
    }
    // external node per (vertex, incident edge); internal nodes per vertex
    int total = 0;
    std::vector<std::vector<int>> ext(m);
    std::vector<std::vector<int>> internals(m);
    std::vector<std::vector<int>> pos_of_edge(m);
    for (int v = 0; v < m; ++v) {
        int dv = static_cast<int>(incident[v].size());
        if (want[v] > dv) return false;
        for (int j = 0; j < dv; ++j) ext[v].push_back(total++);
        for (int j = 0; j < dv - want[v]; ++j) internals[v].push_back(total++);
    }
    std::vector<std::vector<int>> adj(total);
    auto link = [&adj](int a, int b) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    };
    for (int v = 0; v < m; ++v)
        for (int x : ext[v])
            for (int in : internals[v]) link(x, in);
    std::vector<std::pair<int, int>> cross(pool.size(), {-1, -1});
    for (int v = 0; v < m; ++v)
        for (std::size_t j = 0; j < incident[v].size(); ++j) {
            int e = incident[v][j];
            if (cross[e].first == -1)
                cross[e].first = ext[v][j];
            else
                cross[e].second = ext[v][j];
        }
    for (const auto& [a, b] : cross) link(a, b);

    auto mate = max_matching_blossom(total, adj);
    for (int v = 0; v < total; ++v)
        if (mate[v] == -1) return false;
    out.clear();
    for (std::size_t e = 0; e < pool.size(); ++e)
        if (mate[cross[e].first] == cross[e].second) out.push_back(pool[e]);
    return true;
}

}  // namespace

std::vector<Multigraph> extract_factors(const FactorSpec& spec,
                                        std::uint64_t /*seed*/) {
    int m = spec.m, d2 = spec.delta2;
    int count = static_cast<int>(spec.deficient.size());
    if (count < 1 || d2 < 1) throw ParamError("extract_factors: bad spec");
    long long mmin = std::max<long long>(
        {2LL * count * d2 + 4, 4LL * d2 + 8, 12});
    if (m < mmin)
        throw ParamError("extract_factors: m below threshold " +
                         std::to_string(mmin));
    bool any_def = false;
    for (const auto& def : spec.deficient) {
        if ((static_cast<long long>(m) * d2 - def.size()) % 2 != 0)
            throw ParamError("extract_factors: odd degree sum in a factor");
        for (int v : def)
            if (v < 0 || v >= m)
                throw ParamError("extract_factors: deficient vertex range");
        any_def = any_def || !def.empty();
    }

    std::vector<Multigraph> factors(count, Multigraph(m));
    auto add_edges = [&factors](int i, const EdgeList& edges) {
        for (const auto& [u, v] : edges) factors[i].add_edge(u, v);
    };

    bool fast = false;
    if (!any_def && m % 2 == 0 && static_cast<long long>(count) * d2 <= m - 1) {
        auto rounds = one_factorization(m);
        for (int i = 0; i < count; ++i)
            for (int j = 0; j < d2; ++j) add_edges(i, rounds[i * d2 + j]);
        fast = true;
    } else if (!any_def && m % 2 == 1 && d2 % 2 == 0 &&
               static_cast<long long>(count) * d2 / 2 <= (m - 1) / 2) {
        for (int i = 0; i < count; ++i)
            for (int j = 0; j < d2 / 2; ++j)
                add_edges(i, difference_class(m, i * (d2 / 2) + j + 1));
        fast = true;
    } else if (m % 2 == 1 && d2 % 2 == 1) {
        // one carved class per factor plus (d2-1)/2 regular classes
        int nclasses = (m - 1) / 2;
        std::vector<char> used(nclasses + 1, 0);
        std::vector<EdgeList> carved(count);
        // 3-deficient factors first: fewer classes split their cycle into
        // even arcs
        std::vector<int> order(count);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&spec](int a, int b) {
            return spec.deficient[a].size() > spec.deficient[b].size();
        });
        bool ok = true;
        for (int oi = 0; oi < count && ok; ++oi) {
            int i = order[oi];
            const auto& def = spec.deficient[i];
            if (def.empty()) {
                ok = false;  // mixed regular/deficient not supported here
                break;
            }
            bool placed = false;
            for (int d = 1; d <= nclasses && !placed; ++d) {
                if (used[d] || std::gcd(m, d) != 1) continue;
                if (def.size() == 1) {
                    carved[i] = carve_missing_one(m, d, def[0]);
                    used[d] = 1;
                    placed = true;
                } else if (def.size() == 3 &&
                           carve_missing_three(m, d, def, carved[i])) {
                    used[d] = 1;
                    placed = true;
                }
            }
            ok = ok && placed;
        }
        if (ok) {
            int next = 1;
            for (int i = 0; i < count && ok; ++i) {
                add_edges(i, carved[i]);
                for (int j = 0; j < (d2 - 1) / 2; ++j) {
                    while (next <= nclasses && used[next]) ++next;
                    if (next > nclasses) {
                        ok = false;
                        break;
                    }
                    used[next] = 1;
                    add_edges(i, difference_class(m, next));
                }
            }
        }
        if (ok) fast = true;
        if (!ok)
            for (auto& g : factors) g = Multigraph(m);
    }

    if (!fast) {
        // general path: sequential degree-constrained subgraphs of the
        // remaining edge pool
        std::set<VertexPair> used_edges;
        for (int i = 0; i < count; ++i) {
            EdgeList pool;
            for (int u = 0; u < m; ++u)
                for (int v = u + 1; v < m; ++v)
                    if (!used_edges.count({u, v})) pool.emplace_back(u, v);
            std::vector<int> want(m, d2);
            for (int v : spec.deficient[i]) --want[v];
            EdgeList chosen;
            if (!degree_subgraph(m, pool, want, chosen))
                throw VerifyError(
                    "extract_factors: no factor found above threshold");
            for (const auto& e : chosen) used_edges.insert(e);
            add_edges(i, chosen);
        }
    }

    verify_factors(spec, factors);
    return factors;
}

long long n_threshold(int nu, int delta2) {
    if (nu < 1 || delta2 < 1)
        throw ParamError("n_threshold: parameters must be positive");
    return nu + std::max<long long>(
                    {2LL * nu * delta2 + 4, 4LL * delta2 + 8, 12});
}

namespace {

// Relabels the triple system on V0 so a maximum matching of its leave lands
// on the pairs {0,1}, {2,3}, ...; the unmatched vertices take the remaining
// positions in order.
TripleSystem align_to_matching(const TripleSystem& e3,
                               const std::vector<VertexPair>& mm) {
    std::vector<int> sources, targets;
    int next = 0;
    for (const auto& [a, b] : mm) {
        sources.push_back(a);
        sources.push_back(b);
        targets.push_back(next++);
        targets.push_back(next++);
    }
    return relabel(e3, permutation_sending(sources, targets, e3.nu()));
}

// Alignment for the K_{1,3} leave: matching pairs first, then the star on
// the last four positions with the centre last.
TripleSystem align_star_leave(const TripleSystem& e3, const Multigraph& lv) {
    int nu = e3.nu();
    int center = -1;
    std::vector<int> star_leaves;
    std::vector<VertexPair> pairs;
    for (int v = 0; v < nu; ++v)
        if (lv.degree(v) == 3) center = v;
    if (center == -1) throw VerifyError("align_star_leave: no star centre");
    for (const auto& [e, mult] : lv.edges()) {
        if (e.first == center)
            star_leaves.push_back(e.second);
        else if (e.second == center)
            star_leaves.push_back(e.first);
        else
            pairs.push_back(e);
    }
    if (star_leaves.size() != 3 ||
        pairs.size() != static_cast<std::size_t>((nu - 4) / 2))
        throw VerifyError("align_star_leave: leave is not K_{1,3} + matching");
    std::vector<int> sources, targets;
    int next = 0;
    for (const auto& [a, b] : pairs) {
        sources.push_back(a);
        sources.push_back(b);
        targets.push_back(next++);
        targets.push_back(next++);
    }
    for (int v : star_leaves) {
        sources.push_back(v);
        targets.push_back(next++);
    }
    sources.push_back(center);
    targets.push_back(nu - 1);
    return relabel(e3, permutation_sending(sources, targets, nu));
}

}  // namespace

ExtremalResult construct_extremal(long long n, int nu, int delta2,
                                  std::uint64_t seed) {
    if (nu < 1 || delta2 < 1)
        throw ParamError("construct_extremal: parameters must be positive");
    long long n0 = n_threshold(nu, delta2);
    if (n < n0)
        throw ParamError("construct_extremal: n below threshold n0 = " +
                         std::to_string(n0));
    int m = static_cast<int>(n - nu);
    bool case1 = static_cast<long long>(m) * delta2 % 2 == 0;

    TripleSystem e3(nu, delta2);
    FactorSpec fspec;
    fspec.m = m;
    fspec.delta2 = delta2;
    fspec.deficient.assign(nu, {});
    std::vector<Triple> e2;  // global vertex ids

    if (case1) {
        e3 = construct_mpts(nu, delta2, 0, seed).system;
    } else if (nu % 2 == 0) {
        // subcase 2.1: leave size trichotomy, measured not assumed
        long long el0 = choose2(nu) * delta2 - 3 * compute_g(nu, delta2, 0);
        int s_star = el0 == nu / 2 + 1 ? nu / 2 - 1 : nu / 2;
        MptsResult mres = construct_mpts(nu, delta2, s_star, seed);
        auto mm = maximum_matching(mres.leave_graph);
        if (static_cast<int>(mm.size()) == nu / 2) {
            e3 = align_to_matching(mres.system, mm);
            for (int j = 0; j < nu; ++j) fspec.deficient[j] = {j / 2};
            for (int i = 1; i <= nu / 2; ++i)
                e2.push_back(make_triple(2 * i - 2, 2 * i - 1, nu + i - 1));
        } else {
            e3 = align_star_leave(mres.system, mres.leave_graph);
            // matched pairs share a deficient vertex; the star leaves pair
            // with the three deficient vertices of the last factor
            for (int j = 0; j + 4 < nu; ++j) fspec.deficient[j] = {j / 2};
            int base = nu / 2 - 2;
            for (int t = 1; t <= 3; ++t)
                fspec.deficient[nu - 1 - t] = {base + t - 1};
            fspec.deficient[nu - 1] = {base, base + 1, base + 2};
            for (int i = 1; i <= nu / 2 - 2; ++i)
                e2.push_back(make_triple(2 * i - 2, 2 * i - 1, nu + i - 1));
            for (int t = 1; t <= 3; ++t)
                e2.push_back(
                    make_triple(nu - 1 - t, nu - 1, nu + base + t - 1));
        }
    } else {
        // subcase 2.2
        MptsResult mres = construct_mpts(nu, delta2, nu / 2, seed);
        auto mm = maximum_matching(mres.leave_graph);
        if (static_cast<int>(mm.size()) < nu / 2)
            throw VerifyError("construct_extremal: leave matching too small");
        mm.resize(nu / 2);
        e3 = align_to_matching(mres.system, mm);
        for (int j = 0; j < nu; ++j) fspec.deficient[j] = {j / 2};
        for (int i = 1; i <= nu / 2; ++i)
            e2.push_back(make_triple(2 * i - 2, 2 * i - 1, nu + i - 1));
    }

    auto factors = extract_factors(fspec, seed);

    Hypergraph3 h(static_cast<int>(n));
    for (const auto& t : e3.triples()) h.add(t);
    for (const auto& t : e2) h.add(t);
    for (int i = 0; i < nu; ++i)
        for (const auto& [e, mult] : factors[i].edges())
            h.add(make_triple(i, nu + e.first, nu + e.second));

    long long f = compute_f(n, nu, delta2);
    if (static_cast<long long>(h.edge_count()) != f)
        throw VerifyError("construct_extremal: size != f(n,nu,delta2)");
    if (max_codegree(h) > delta2)
        throw VerifyError("construct_extremal: codegree cap violated");
    if (matching_number(h) != nu)
        throw VerifyError("construct_extremal: matching number != nu");

    std::vector<int> v0(nu);
    std::iota(v0.begin(), v0.end(), 0);
    ExtremalResult res;
    res.h = std::move(h);
    res.partition = partition_diagnostics(res.h, v0, delta2);
    res.case1 = case1;

    long long half_pool = static_cast<long long>(nu) * m * delta2 / 2;
    if (case1) {
        if (res.partition.eps2 != 0 || res.partition.eps1 != half_pool)
            throw VerifyError("construct_extremal: case-1 accounting failed");
    } else if (res.partition.eps1 + res.partition.eps2 != half_pool) {
        throw VerifyError("construct_extremal: case-2 accounting failed");
    }
    return res;
}

Certificate verify_extremal(const Hypergraph3& h, int nu, int delta2,
                            const MatchingOptions& opts) {
    long long bound = compute_f(h.n(), nu, delta2);
    int codeg = h.n() >= 2 ? max_codegree(h) : 0;
    int match = matching_number(h, opts);
    return make_certificate(static_cast<long long>(h.edge_count()), bound,
                            codeg, delta2, match, nu);
}

ExtremalPartition partition_diagnostics(const Hypergraph3& h,
                                        const std::vector<int>& v0,
                                        int delta2) {
    ExtremalPartition part;
    part.v0 = v0;
    std::vector<char> in0(h.n(), 0);
    for (int v : v0) {
        if (v < 0 || v >= h.n())
            throw ParamError("partition_diagnostics: v0 out of range");
        in0[v] = 1;
    }
    int nu = static_cast<int>(v0.size());
    std::vector<int> index_in_v0(h.n(), -1);
    for (int i = 0; i < nu; ++i) index_in_v0[v0[i]] = i;

    part.d.assign(nu, 0);
    for (const auto& t : h.triples()) {
        int k = in0[t[0]] + in0[t[1]] + in0[t[2]];
        switch (k) {
            case 0: ++part.overflow; break;
            case 1: part.e1.push_back(t); break;
            case 2:
                part.e2.push_back(t);
                for (int v : t)
                    if (in0[v]) ++part.d[index_in_v0[v]];
                break;
            default: part.e3.push_back(t);
        }
    }
    part.eps1 = static_cast<long long>(part.e1.size());
    part.eps2 = static_cast<long long>(part.e2.size());
    part.eps3 = static_cast<long long>(part.e3.size());
    part.valid = part.overflow == 0;
    for (int di : part.d) (di % 2 ? part.p : part.q)++;

    long long m = h.n() - nu;
    part.ineq2_slack = choose2(nu) * delta2 - (3 * part.eps3 + part.eps2);
    part.ineq3_slack =
        static_cast<long long>(nu) * m * delta2 - (2 * part.eps2 + 2 * part.eps1);
    part.ineq2_ok = part.ineq2_slack >= 0;
    part.ineq3_ok = part.ineq3_slack >= 0;
    return part;
}

}  // namespace tribound
