#include "tribound/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <vector>

namespace tribound {

namespace {

struct BruteSearch {
    int n = 0;
    int paircap = 1;
    int s = -1;          // leave matching requirement, -1 disables
    int match_cap = -1;  // matching-number cap, -1 disables
    long long budget = 0;

    std::vector<Triple> cand;            // distinct triples, lex order
    std::vector<int> res;                // pair residual, index u*n+v
    std::vector<std::pair<int, int>> chosen;  // (cand index, multiplicity)
    long long total_res = 0;

    long long nodes = 0;
    bool aborted = false;
    long long best = -1;
    std::vector<Triple> best_triples;

    int pid(int u, int v) const { return u < v ? u * n + v : v * n + u; }

    void init() {
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                for (int c = b + 1; c < n; ++c) cand.push_back({a, b, c});
        res.assign(n * n, 0);
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) res[pid(a, b)] = paircap;
        total_res = choose2(n) * paircap;
    }

    int max_mult(const Triple& t) const {
        return std::min({res[pid(t[0], t[1])], res[pid(t[0], t[2])],
                         res[pid(t[1], t[2])]});
    }

    void apply(const Triple& t, int c) {
        res[pid(t[0], t[1])] -= c;
        res[pid(t[0], t[2])] -= c;
        res[pid(t[1], t[2])] -= c;
        total_res -= 3LL * c;
    }

    // Maximum matching of the residual (leave) graph, early exit at goal.
    int leave_matching(int goal) {
        std::vector<VertexPair> edges;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (res[pid(a, b)] > 0) edges.emplace_back(a, b);
        int found = 0;
        match_rec(edges, 0, 0u, 0, goal, found);
        return found;
    }

    void match_rec(const std::vector<VertexPair>& edges, std::size_t i,
                   unsigned used, int size, int goal, int& found) {
        found = std::max(found, size);
        if (found >= goal || i >= edges.size()) return;
        if (size + static_cast<int>(edges.size() - i) <= found) return;
        const auto& [u, v] = edges[i];
        if (!(used & (1u << u)) && !(used & (1u << v)))
            match_rec(edges, i + 1, used | (1u << u) | (1u << v), size + 1,
                      goal, found);
        match_rec(edges, i + 1, used, size, goal, found);
    }

    // Do the chosen distinct triples contain `need` pairwise disjoint ones?
    bool has_disjoint(std::size_t i, unsigned used, int need) const {
        if (need == 0) return true;
        if (chosen.size() - i < static_cast<std::size_t>(need)) return false;
        const Triple& t = cand[chosen[i].first];
        unsigned m = (1u << t[0]) | (1u << t[1]) | (1u << t[2]);
        if (!(used & m) && has_disjoint(i + 1, used | m, need - 1))
            return true;
        return has_disjoint(i + 1, used, need);
    }

    bool feasible_here() {
        if (s >= 0 && leave_matching(s) < s) return false;
        if (match_cap >= 0 && has_disjoint(0, 0u, match_cap + 1)) return false;
        return true;
    }

    void record(long long cnt) {
        if (cnt <= best) return;
        best = cnt;
        best_triples.clear();
        for (const auto& [idx, mult] : chosen)
            for (int r = 0; r < mult; ++r) best_triples.push_back(cand[idx]);
    }

    // second = true while only {0,1,2} has been chosen; the next distinct
    // triple may then be restricted to orbit representatives under the
    // stabilizer of {0,1,2}
    bool second_rep(const Triple& t) const {
        return t == Triple{0, 1, 3} || t == Triple{0, 3, 4} ||
               t == Triple{3, 4, 5};
    }

    void dfs(std::size_t i, long long cnt, bool second) {
        if (aborted) return;
        if (++nodes > budget) {
            aborted = true;
            return;
        }
        record(cnt);
        if (i >= cand.size()) return;

        long long tri_room = 0;
        for (std::size_t j = i; j < cand.size(); ++j)
            tri_room += max_mult(cand[j]);
        long long unit_room = total_res - (s > 0 ? s : 0);
        long long ub = cnt + std::min(tri_room, unit_room / 3);
        if (ub <= best) return;

        int mc = max_mult(cand[i]);
        bool allowed = !second || second_rep(cand[i]);
        for (int c = allowed ? mc : 0; c >= 0; --c) {
            if (c > 0) {
                apply(cand[i], c);
                chosen.emplace_back(static_cast<int>(i), c);
                bool ok = (s < 0 || leave_matching(s) >= s) &&
                          (match_cap < 0 ||
                           !has_disjoint(0, 0u, match_cap + 1));
                if (ok) dfs(i + 1, cnt + c, false);
                chosen.pop_back();
                apply(cand[i], -c);
            } else {
                dfs(i + 1, cnt, second);
            }
            if (aborted) return;
        }
    }

    SearchReport run() {
        auto t0 = std::chrono::steady_clock::now();
        init();
        best = feasible_here() ? 0 : -1;
        if (!cand.empty()) {
            // nonempty solutions can be relabeled to contain {0,1,2}
            int mc = max_mult(cand[0]);
            for (int c = mc; c >= 1 && !aborted; --c) {
                apply(cand[0], c);
                chosen.emplace_back(0, c);
                if ((s < 0 || leave_matching(s) >= s) &&
                    (match_cap < 0 || match_cap >= 1))
                    dfs(1, c, true);
                chosen.pop_back();
                apply(cand[0], -c);
            }
        }
        SearchReport rep;
        rep.optimum = std::max(best, 0LL);
        rep.witness = Hypergraph3(n, best_triples);
        rep.nodes = nodes;
        rep.exhausted = !aborted;
        rep.elapsed_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                          t0)
                .count();
        return rep;
    }
};

}  // namespace

SearchReport oracle_mpts(int nu, int lambda, int s, const OracleOptions& opts) {
    if (nu < 1 || lambda < 1 || s < 0 || s > nu / 2)
        throw ParamError("oracle_mpts: require nu,lambda >= 1, 0 <= s <= nu/2");
    if (!opts.allow_large && (nu > 8 || lambda > 3))
        throw ParamError(
            "oracle_mpts: nu > 8 or lambda > 3; set allow_large to override");
    BruteSearch bs;
    bs.n = nu;
    bs.paircap = lambda;
    bs.s = s;
    bs.budget = opts.node_budget;
    return bs.run();
}

SearchReport oracle_extremal(int n, int nu, int delta2,
                             const OracleOptions& opts) {
    if (n < 1 || nu < 1 || delta2 < 1)
        throw ParamError("oracle_extremal: parameters must be positive");
    if (!opts.allow_large && n > 9)
        throw ParamError("oracle_extremal: n > 9; set allow_large to override");
    BruteSearch bs;
    bs.n = n;
    bs.paircap = delta2;
    bs.match_cap = nu;
    bs.budget = opts.node_budget;
    return bs.run();
}

long long enumerate_matchings(const Hypergraph3& h, int k) {
    if (k < 0) throw ParamError("enumerate_matchings: k must be nonnegative");
    std::vector<Triple> distinct = h.triples();
    distinct.erase(std::unique(distinct.begin(), distinct.end()),
                   distinct.end());
    if (distinct.size() > 20)
        throw ParamError("enumerate_matchings: more than 20 distinct triples");

    std::vector<unsigned> masks;
    for (const auto& t : distinct)
        masks.push_back((1u << t[0]) | (1u << t[1]) | (1u << t[2]));

    // count k-subsets of pairwise disjoint triples
    auto count = [&](auto&& self, std::size_t i, unsigned used,
                     int need) -> long long {
        if (need == 0) return 1;
        if (masks.size() - i < static_cast<std::size_t>(need)) return 0;
        long long total = self(self, i + 1, used, need);
        if (!(used & masks[i]))
            total += self(self, i + 1, used | masks[i], need - 1);
        return total;
    };
    return count(count, 0, 0u, k);
}

}  // namespace tribound
