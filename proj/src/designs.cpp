#include "tribound/designs.hpp"

#include <algorithm>
#include <random>

#include "tribound/measure.hpp"

namespace tribound {

namespace {

// Bose construction: points Z_q x {0,1,2} with q = 2k+1, nu = 6k+3.
TripleSystem bose(int nu) {
    int q = nu / 3;
    int half = (q + 1) / 2;  // inverse of 2 mod q
    auto pt = [q](int i, int level) { return i + q * level; };
    std::vector<Triple> blocks;
    for (int i = 0; i < q; ++i)
        blocks.push_back(make_triple(pt(i, 0), pt(i, 1), pt(i, 2)));
    for (int i = 0; i < q; ++i)
        for (int j = i + 1; j < q; ++j) {
            int m = static_cast<int>(static_cast<long long>(i + j) * half % q);
            for (int level = 0; level < 3; ++level)
                blocks.push_back(make_triple(pt(i, level), pt(j, level),
                                             pt(m, (level + 1) % 3)));
        }
    return TripleSystem(nu, 1, std::move(blocks));
}

// Skolem construction: points {inf} u Z_{2k} x {1,2,3} with nu = 6k+1,
// built on a half-idempotent commutative quasigroup of order 2k.
TripleSystem skolem(int nu) {
    int k = nu / 6;
    int q = 2 * k;
    auto circ = [k, q](int x, int y) {
        int z = (x + y) % q;
        return z % 2 == 0 ? z / 2 : k + (z - 1) / 2;
    };
    auto pt = [q](int i, int level) { return i + q * level; };
    int inf = nu - 1;
    std::vector<Triple> blocks;
    for (int i = 0; i < k; ++i)
        blocks.push_back(make_triple(pt(i, 0), pt(i, 1), pt(i, 2)));
    for (int i = k; i < q; ++i) {
        blocks.push_back(make_triple(inf, pt(i, 0), pt(i - k, 1)));
        blocks.push_back(make_triple(inf, pt(i, 1), pt(i - k, 2)));
        blocks.push_back(make_triple(inf, pt(i, 2), pt(i - k, 0)));
    }
    for (int i = 0; i < q; ++i)
        for (int j = i + 1; j < q; ++j)
            for (int level = 0; level < 3; ++level)
                blocks.push_back(make_triple(pt(i, level), pt(j, level),
                                             pt(circ(i, j), (level + 1) % 3)));
    return TripleSystem(nu, 1, std::move(blocks));
}

void verify_coverage(const TripleSystem& ts, int lambda) {
    auto counts = ts.pair_counts();
    for (int u = 0; u < ts.nu(); ++u)
        for (int v = u + 1; v < ts.nu(); ++v) {
            auto it = counts.find({u, v});
            int c = it == counts.end() ? 0 : it->second;
            if (c != lambda)
                throw VerifyError("triple system pair coverage check failed");
        }
}

}  // namespace

TripleSystem construct_sts(int nu) {
    if (nu < 3 || (nu % 6 != 1 && nu % 6 != 3))
        throw ParamError(
            "construct_sts: a STS(nu) exists if and only if nu = 1,3 (mod 6)");
    TripleSystem ts = nu % 6 == 3 ? bose(nu) : skolem(nu);
    verify_coverage(ts, 1);
    return ts;
}

TripleSystem construct_ts(int nu, int lambda, std::uint64_t seed) {
    if (lambda < 1) throw ParamError("construct_ts: lambda must be positive");
    if (nu == 2 || lambda % std::gcd(nu - 2, 6) != 0)
        throw ParamError(
            "construct_ts: a TS(nu,lambda) exists if and only if nu != 2 and "
            "lambda = 0 (mod gcd(nu-2,6))");
    if (nu == 1) return TripleSystem(1, lambda);
    int gd = std::gcd(nu - 2, 6);
    TripleSystem base = gd == 1 ? construct_sts(nu)
                                : complete_to_leave(nu, gd, Multigraph(nu), seed);
    std::vector<Triple> blocks;
    for (int rep = 0; rep < lambda / gd; ++rep)
        blocks.insert(blocks.end(), base.triples().begin(),
                      base.triples().end());
    TripleSystem ts(nu, lambda, std::move(blocks));
    verify_coverage(ts, lambda);
    return ts;
}

PBD35 construct_pbd35(int nu, std::uint64_t seed) {
    if (nu < 5 || nu % 6 != 5)
        throw ParamError(
            "construct_pbd35: a PBD(nu,{3,5*},1) exists if and only if "
            "nu = 5 (mod 6)");
    PBD35 d;
    d.nu = nu;
    d.five_block = {0, 1, 2, 3, 4};
    if (nu == 5) return d;  // the 5-block alone covers every pair
    Multigraph k5(nu);
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v) k5.add_edge(u, v);
    d.triples = complete_to_leave(nu, 1, k5, seed).triples();
    return d;
}

namespace {

struct HillClimber {
    int nu, lambda;
    std::vector<int> demand, cover;           // indexed u*nu+v, u<v
    std::vector<Triple> slots;                // alive triples, holes allowed
    std::vector<char> alive;
    std::vector<int> free_slots;
    std::vector<std::vector<int>> on_pair;    // pair -> alive slot ids
    std::mt19937_64 rng;
    long long deficiency = 0;

    int pid(int u, int v) const { return u < v ? u * nu + v : v * nu + u; }

    void add_triple(const Triple& t) {
        int slot;
        if (!free_slots.empty()) {
            slot = free_slots.back();
            free_slots.pop_back();
            slots[slot] = t;
            alive[slot] = 1;
        } else {
            slot = static_cast<int>(slots.size());
            slots.push_back(t);
            alive.push_back(1);
        }
        for (int a = 0; a < 3; ++a)
            for (int b = a + 1; b < 3; ++b) {
                int p = pid(t[a], t[b]);
                if (cover[p] < demand[p]) --deficiency;
                ++cover[p];
                on_pair[p].push_back(slot);
            }
    }

    void remove_triple(int slot) {
        const Triple& t = slots[slot];
        for (int a = 0; a < 3; ++a)
            for (int b = a + 1; b < 3; ++b) {
                int p = pid(t[a], t[b]);
                --cover[p];
                if (cover[p] < demand[p]) ++deficiency;
                auto& lst = on_pair[p];
                lst.erase(std::find(lst.begin(), lst.end(), slot));
            }
        alive[slot] = 0;
        free_slots.push_back(slot);
    }

    bool run(long long stall_limit) {
        std::vector<int> deficient;
        long long stall = 0, best_deficiency = deficiency;
        while (deficiency > 0) {
            deficient.clear();
            for (int u = 0; u < nu; ++u)
                for (int v = u + 1; v < nu; ++v)
                    if (cover[pid(u, v)] < demand[pid(u, v)])
                        deficient.push_back(pid(u, v));
            int p = deficient[rng() % deficient.size()];
            int x = p / nu, y = p % nu;

            // third point minimizing new conflicts; overcovered pairs must
            // have an evictable triple
            int best_conf = 3;
            std::vector<int> best_z;
            for (int z = 0; z < nu; ++z) {
                if (z == x || z == y) continue;
                int conf = 0;
                bool ok = true;
                for (int q : {pid(x, z), pid(y, z)}) {
                    if (cover[q] < demand[q]) continue;
                    if (cover[q] == 0) {
                        ok = false;
                        break;
                    }
                    ++conf;
                }
                if (!ok) continue;
                if (conf < best_conf) {
                    best_conf = conf;
                    best_z.clear();
                }
                if (conf == best_conf) best_z.push_back(z);
            }
            if (best_z.empty()) {
                if (++stall > stall_limit) return false;
                continue;
            }
            int z = best_z[rng() % best_z.size()];
            add_triple(make_triple(x, y, z));
            for (int q : {pid(x, z), pid(y, z)})
                if (cover[q] > demand[q]) {
                    const auto& lst = on_pair[q];
                    // evict a triple other than the one just added
                    int victim = lst[rng() % (lst.size() - 1)];
                    remove_triple(victim);
                }
            if (deficiency < best_deficiency) {
                best_deficiency = deficiency;
                stall = 0;
            } else if (++stall > stall_limit) {
                return false;
            }
        }
        return true;
    }
};

}  // namespace

TripleSystem complete_to_leave(int nu, int lambda, const Multigraph& target,
                               std::uint64_t seed) {
    if (nu < 3) throw ParamError("complete_to_leave: require nu >= 3");
    if (lambda < 1) throw ParamError("complete_to_leave: lambda must be positive");
    if (target.n() > nu)
        throw ParamError("complete_to_leave: target on more than nu vertices");

    HillClimber hc;
    hc.nu = nu;
    hc.lambda = lambda;
    hc.demand.assign(nu * nu, 0);
    hc.cover.assign(nu * nu, 0);
    hc.on_pair.assign(nu * nu, {});
    for (int u = 0; u < nu; ++u)
        for (int v = u + 1; v < nu; ++v) hc.demand[hc.pid(u, v)] = lambda;
    for (const auto& [e, m] : target.edges()) {
        if (m > lambda)
            throw ParamError(
                "complete_to_leave: target multiplicity exceeds lambda");
        hc.demand[hc.pid(e.first, e.second)] -= m;
    }

    long long total = 0;
    std::vector<long long> vdeg(nu, 0);
    for (int u = 0; u < nu; ++u)
        for (int v = u + 1; v < nu; ++v) {
            int d = hc.demand[hc.pid(u, v)];
            total += d;
            vdeg[u] += d;
            vdeg[v] += d;
        }
    if (total % 3 != 0)
        throw ParamError(
            "complete_to_leave: lambda*C(nu,2) - e(target) not divisible by 3");
    for (int v = 0; v < nu; ++v)
        if (vdeg[v] % 2 != 0)
            throw ParamError(
                "complete_to_leave: leave degree parity condition violated");

    const long long stall_limit = 50LL * nu * nu;
    const int max_restarts = 256;
    for (int restart = 0; restart < max_restarts; ++restart) {
        hc.rng.seed(seed + restart);
        hc.slots.clear();
        hc.alive.clear();
        hc.free_slots.clear();
        std::fill(hc.cover.begin(), hc.cover.end(), 0);
        for (auto& lst : hc.on_pair) lst.clear();
        hc.deficiency = total;
        if (!hc.run(stall_limit)) continue;

        std::vector<Triple> blocks;
        for (std::size_t i = 0; i < hc.slots.size(); ++i)
            if (hc.alive[i]) blocks.push_back(hc.slots[i]);
        TripleSystem ts(nu, lambda, std::move(blocks));
        Multigraph got = leave(ts);
        Multigraph want(nu);
        for (const auto& [e, m] : target.edges())
            want.add_edge(e.first, e.second, m);
        if (!(got == want))
            throw VerifyError("complete_to_leave: leave mismatch after search");
        return ts;
    }
    throw ResourceError("complete_to_leave: search budget exhausted");
}

}  // namespace tribound
