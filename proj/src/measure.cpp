#include "tribound/measure.hpp"

#include <algorithm>
#include <set>

#include "tribound/matching.hpp"

namespace tribound {

int codegree(const Hypergraph3& h, int u, int v) {
    if (u == v) throw ParamError("codegree: vertices must differ");
    if (u < 0 || v < 0 || u >= h.n() || v >= h.n())
        throw ParamError("codegree: vertex out of range");
    int count = 0;
    for (const auto& t : h.triples())
        if (std::find(t.begin(), t.end(), u) != t.end() &&
            std::find(t.begin(), t.end(), v) != t.end())
            ++count;
    return count;
}

int max_codegree(const Hypergraph3& h) {
    if (h.n() < 2) throw ParamError("max_codegree: need at least 2 vertices");
    int best = 0;
    for (const auto& [p, c] : h.pair_counts()) best = std::max(best, c);
    return best;
}

namespace {

struct PackingSearch {
    std::vector<Triple> triples;  // distinct
    long long budget;
    long long nodes = 0;
    int best = 0;

    static bool disjoint(const Triple& a, const Triple& b) {
        for (int x : a)
            for (int y : b)
                if (x == y) return false;
        return true;
    }

    // Greedy hitting set: any vertex cover of the active triples bounds the
    // matching from above.
    int cover_bound(const std::vector<int>& act) const {
        std::vector<char> alive(act.size(), 1);
        int covered = 0, bound = 0;
        while (covered < static_cast<int>(act.size())) {
            std::map<int, int> deg;
            for (std::size_t i = 0; i < act.size(); ++i)
                if (alive[i])
                    for (int v : triples[act[i]]) ++deg[v];
            int bestv = -1, bestd = 0;
            for (const auto& [v, d] : deg)
                if (d > bestd) {
                    bestd = d;
                    bestv = v;
                }
            if (bestv == -1) break;
            ++bound;
            for (std::size_t i = 0; i < act.size(); ++i)
                if (alive[i] &&
                    std::find(triples[act[i]].begin(), triples[act[i]].end(),
                              bestv) != triples[act[i]].end()) {
                    alive[i] = 0;
                    ++covered;
                }
        }
        return bound;
    }

    void search(const std::vector<int>& act, int cnt) {
        if (++nodes > budget)
            throw ResourceError("matching_number: node budget exceeded");
        best = std::max(best, cnt);
        if (act.empty()) return;

        std::set<int> verts;
        for (int i : act)
            for (int v : triples[i]) verts.insert(v);
        int ub = cnt + std::min({static_cast<int>(act.size()),
                                 static_cast<int>(verts.size()) / 3,
                                 cover_bound(act)});
        if (ub <= best) return;

        // branch on the vertex of minimum positive degree
        std::map<int, int> deg;
        for (int i : act)
            for (int v : triples[i]) ++deg[v];
        int bv = -1, bd = 0;
        for (const auto& [v, d] : deg)
            if (bv == -1 || d < bd) {
                bv = v;
                bd = d;
            }

        for (int i : act) {
            if (std::find(triples[i].begin(), triples[i].end(), bv) ==
                triples[i].end())
                continue;
            std::vector<int> next;
            for (int j : act)
                if (disjoint(triples[i], triples[j])) next.push_back(j);
            search(next, cnt + 1);
        }
        // or no matching triple uses bv at all
        std::vector<int> rest;
        for (int j : act)
            if (std::find(triples[j].begin(), triples[j].end(), bv) ==
                triples[j].end())
                rest.push_back(j);
        search(rest, cnt);
    }
};

}  // namespace

int matching_number(const Hypergraph3& h, const MatchingOptions& opts) {
    PackingSearch s;
    s.budget = opts.node_budget;
    s.triples = h.triples();
    s.triples.erase(std::unique(s.triples.begin(), s.triples.end()),
                    s.triples.end());
    if (s.triples.empty()) return 0;

    // greedy lower bound
    std::vector<Triple> chosen;
    for (const auto& t : s.triples) {
        bool ok = true;
        for (const auto& c : chosen)
            if (!PackingSearch::disjoint(t, c)) {
                ok = false;
                break;
            }
        if (ok) chosen.push_back(t);
    }
    s.best = static_cast<int>(chosen.size());

    std::vector<int> act(s.triples.size());
    for (std::size_t i = 0; i < act.size(); ++i) act[i] = static_cast<int>(i);
    s.search(act, 0);
    return s.best;
}

Multigraph leave(const TripleSystem& ts) {
    Multigraph g(ts.nu());
    auto counts = ts.pair_counts();
    for (int u = 0; u < ts.nu(); ++u)
        for (int v = u + 1; v < ts.nu(); ++v) {
            auto it = counts.find({u, v});
            int covered = it == counts.end() ? 0 : it->second;
            if (ts.lambda() - covered > 0) g.add_edge(u, v, ts.lambda() - covered);
        }
    return g;
}

Multigraph link_graph(const Hypergraph3& h, int x) {
    if (x < 0 || x >= h.n()) throw ParamError("link_graph: vertex out of range");
    Multigraph g(h.n());
    for (const auto& t : h.triples()) {
        if (t[0] == x)
            g.add_edge(t[1], t[2]);
        else if (t[1] == x)
            g.add_edge(t[0], t[2]);
        else if (t[2] == x)
            g.add_edge(t[0], t[1]);
    }
    return g;
}

std::vector<VertexPair> maximum_matching(const Multigraph& g) {
    std::vector<std::vector<int>> adj(g.n());
    for (const auto& [e, m] : g.edges()) {
        adj[e.first].push_back(e.second);
        adj[e.second].push_back(e.first);
    }
    auto mate = max_matching_blossom(g.n(), adj);
    std::vector<VertexPair> out;
    for (int v = 0; v < g.n(); ++v)
        if (mate[v] > v) out.emplace_back(v, mate[v]);
    return out;
}

int graph_matching_number(const Multigraph& g) {
    return static_cast<int>(maximum_matching(g).size());
}

}  // namespace tribound
