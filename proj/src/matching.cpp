#include "tribound/matching.hpp"

#include <algorithm>
#include <queue>

namespace tribound {
namespace {

struct Blossom {
    int n;
    const std::vector<std::vector<int>>& adj;
    std::vector<int> match, parent, base;
    std::vector<bool> used, blossom;

    explicit Blossom(int n_, const std::vector<std::vector<int>>& adj_)
        : n(n_), adj(adj_), match(n, -1), parent(n, -1), base(n),
          used(n, false), blossom(n, false) {}

    int lca(int a, int b) {
        std::vector<bool> seen(n, false);
        for (;;) {
            a = base[a];
            seen[a] = true;
            if (match[a] == -1) break;
            a = parent[match[a]];
        }
        for (;;) {
            b = base[b];
            if (seen[b]) return b;
            b = parent[match[b]];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base[v] != b) {
            blossom[base[v]] = true;
            blossom[base[match[v]]] = true;
            parent[v] = child;
            child = match[v];
            v = parent[match[v]];
        }
    }

    int find_path(int root) {
        std::fill(used.begin(), used.end(), false);
        std::fill(parent.begin(), parent.end(), -1);
        for (int i = 0; i < n; ++i) base[i] = i;
        used[root] = true;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int to : adj[v]) {
                if (base[v] == base[to] || match[v] == to) continue;
                if (to == root || (match[to] != -1 && parent[match[to]] != -1)) {
                    int cur = lca(v, to);
                    std::fill(blossom.begin(), blossom.end(), false);
                    mark_path(v, cur, to);
                    mark_path(to, cur, v);
                    for (int i = 0; i < n; ++i)
                        if (blossom[base[i]]) {
                            base[i] = cur;
                            if (!used[i]) {
                                used[i] = true;
                                q.push(i);
                            }
                        }
                } else if (parent[to] == -1) {
                    parent[to] = v;
                    if (match[to] == -1) return to;
                    used[match[to]] = true;
                    q.push(match[to]);
                }
            }
        }
        return -1;
    }

    void augment(int v) {
        while (v != -1) {
            int pv = parent[v], ppv = match[pv];
            match[v] = pv;
            match[pv] = v;
            v = ppv;
        }
    }

    void solve() {
        // greedy seed matching
        for (int v = 0; v < n; ++v)
            if (match[v] == -1)
                for (int to : adj[v])
                    if (match[to] == -1) {
                        match[v] = to;
                        match[to] = v;
                        break;
                    }
        for (int v = 0; v < n; ++v)
            if (match[v] == -1) {
                int u = find_path(v);
                if (u != -1) augment(u);
            }
    }
};

}  // namespace

std::vector<int> max_matching_blossom(int n,
                                      const std::vector<std::vector<int>>& adj) {
    Blossom b(n, adj);
    b.solve();
    return b.match;
}

}  // namespace tribound
