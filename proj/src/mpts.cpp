#include "tribound/mpts.hpp"

#include <algorithm>
#include <numeric>

#include "tribound/bounds.hpp"
#include "tribound/designs.hpp"
#include "tribound/measure.hpp"

namespace tribound {

std::string to_string(MptsCase c) {
    switch (c) {
        case MptsCase::I: return "I";
        case MptsCase::II: return "II";
        case MptsCase::III: return "III";
        case MptsCase::IV: return "IV";
        case MptsCase::V: return "V";
        case MptsCase::VI: return "VI";
        case MptsCase::VII: return "VII";
        case MptsCase::VIII: return "VIII";
        case MptsCase::IX: return "IX";
        case MptsCase::X: return "X";
        case MptsCase::XI: return "XI";
        case MptsCase::Case2: return "CASE2";
        case MptsCase::Small: return "SMALL";
    }
    return "?";
}

TripleSystem delete_point(const TripleSystem& ts, int x) {
    if (x < 0 || x >= ts.nu()) throw ParamError("delete_point: point out of range");
    std::vector<Triple> blocks;
    for (const auto& t : ts.triples()) {
        if (std::find(t.begin(), t.end(), x) != t.end()) continue;
        auto shift = [x](int v) { return v > x ? v - 1 : v; };
        blocks.push_back(make_triple(shift(t[0]), shift(t[1]), shift(t[2])));
    }
    return TripleSystem(ts.nu() - 1, ts.lambda(), std::move(blocks));
}

TripleSystem union_systems(const TripleSystem& a, const TripleSystem& b,
                           const std::vector<Triple>& extra, int lambda) {
    if (a.nu() != b.nu())
        throw ParamError("union_systems: point-count mismatch");
    std::vector<Triple> blocks = a.triples();
    blocks.insert(blocks.end(), b.triples().begin(), b.triples().end());
    blocks.insert(blocks.end(), extra.begin(), extra.end());
    return TripleSystem(a.nu(), lambda, std::move(blocks));  // cap checked here
}

std::vector<int> permutation_sending(const std::vector<int>& sources,
                                     const std::vector<int>& targets, int n) {
    if (sources.size() != targets.size())
        throw ParamError("permutation_sending: length mismatch");
    std::vector<int> perm(n, -1);
    std::vector<char> tgt_used(n, 0);
    for (std::size_t i = 0; i < sources.size(); ++i) {
        int s = sources[i], t = targets[i];
        if (s < 0 || s >= n || t < 0 || t >= n || perm[s] != -1 || tgt_used[t])
            throw ParamError("permutation_sending: not a partial bijection");
        perm[s] = t;
        tgt_used[t] = 1;
    }
    int next = 0;
    for (int v = 0; v < n; ++v) {
        if (perm[v] != -1) continue;
        while (tgt_used[next]) ++next;
        perm[v] = next;
        tgt_used[next] = 1;
    }
    return perm;
}

namespace {

void check_bijection(const std::vector<int>& perm, int n) {
    if (static_cast<int>(perm.size()) != n)
        throw ParamError("relabel: permutation size mismatch");
    std::vector<char> seen(n, 0);
    for (int v : perm) {
        if (v < 0 || v >= n || seen[v])
            throw ParamError("relabel: not a bijection");
        seen[v] = 1;
    }
}

}  // namespace

TripleSystem relabel(const TripleSystem& ts, const std::vector<int>& perm) {
    check_bijection(perm, ts.nu());
    std::vector<Triple> blocks;
    blocks.reserve(ts.edge_count());
    for (const auto& t : ts.triples())
        blocks.push_back(make_triple(perm[t[0]], perm[t[1]], perm[t[2]]));
    return TripleSystem(ts.nu(), ts.lambda(), std::move(blocks));
}

Multigraph relabel_graph(const Multigraph& g, const std::vector<int>& perm) {
    check_bijection(perm, g.n());
    Multigraph out(g.n());
    for (const auto& [e, m] : g.edges())
        out.add_edge(perm[e.first], perm[e.second], m);
    return out;
}

namespace {

Multigraph cycle_on(int nu, int len) {
    Multigraph g(nu);
    for (int i = 0; i + 1 < len; ++i) g.add_edge(i, i + 1);
    g.add_edge(0, len - 1);
    return g;
}

// Relabels a system whose leave is a perfect matching so the leave becomes
// {(0,1), (2,3), ...}.
TripleSystem align_matching_leave(const TripleSystem& ts) {
    Multigraph lv = leave(ts);
    std::vector<int> sources, targets;
    int next = 0;
    for (const auto& [e, m] : lv.edges()) {
        sources.push_back(e.first);
        sources.push_back(e.second);
        targets.push_back(next++);
        targets.push_back(next++);
    }
    return relabel(ts, permutation_sending(sources, targets, ts.nu()));
}

// MPTS(nu,1,s) via point deletion from an STS(nu+1); leave is nu/2
// independent edges, aligned to {(0,1),(2,3),...}.
TripleSystem case_one(int nu) {
    TripleSystem sts = construct_sts(nu + 1);
    return align_matching_leave(delete_point(sts, nu));
}

// PTS(nu+1,1) from a PBD(nu+1,{3,5*},1) with the 5-block {u,w,x,y,z} on
// points {0..4} replaced by {u,w,z} and {u,x,y}.
TripleSystem pbd_pts(int nu_plus1, std::uint64_t seed) {
    PBD35 pbd = construct_pbd35(nu_plus1, seed);
    std::vector<Triple> blocks = pbd.triples;
    blocks.push_back(make_triple(0, 1, 4));  // {u,w,z}
    blocks.push_back(make_triple(0, 2, 3));  // {u,x,y}
    return TripleSystem(nu_plus1, 1, std::move(blocks));
}

// MPTS(nu,2,1) with leave a doubled edge on {0,1}; nu = 2 or 5 (mod 6).
TripleSystem doubled_edge_system(int nu, std::uint64_t seed) {
    if (nu % 6 == 2) {
        Multigraph doubled(nu);
        doubled.add_edge(0, 1, 2);
        return complete_to_leave(nu, 2, doubled, seed);
    }
    // nu = 5 (mod 6): two MPTS(nu,1,1) with C4 leaves in the two cyclic
    // orders on {0,1,2,3}, plus the triples {0,1,2} and {0,1,3}
    TripleSystem m = complete_to_leave(nu, 1, cycle_on(nu, 4), seed);
    std::vector<int> swap23(nu);
    std::iota(swap23.begin(), swap23.end(), 0);
    std::swap(swap23[2], swap23[3]);
    TripleSystem u = union_systems(
        m, relabel(m, swap23),
        {make_triple(0, 1, 2), make_triple(0, 1, 3)}, 2);
    return relabel(u, permutation_sending({2, 3}, {0, 1}, nu));
}

MptsResult finish(TripleSystem system, MptsCase tag, int nu, int lambda,
                  int s) {
    MptsResult res;
    res.system = std::move(system);
    res.case_tag = tag;
    res.leave_graph = leave(res.system);
    long long g = compute_g(nu, lambda, s);
    if (static_cast<long long>(res.system.edge_count()) != g)
        throw VerifyError("mpts gate: size != g(nu,lambda,s) [case " +
                          to_string(tag) + "]");
    if (graph_matching_number(res.leave_graph) < s)
        throw VerifyError("mpts gate: leave matching below s [case " +
                          to_string(tag) + "]");
    if (nu >= 3) {
        LeaveProfile prof = leave_profile(nu, lambda);
        for (int v = 0; v < nu; ++v)
            if (res.leave_graph.degree(v) % 2 != prof.degree_parity)
                throw VerifyError("mpts gate: leave degree parity [case " +
                                  to_string(tag) + "]");
        if (res.leave_graph.edge_total() % 3 != prof.size_mod3)
            throw VerifyError("mpts gate: leave size residue [case " +
                              to_string(tag) + "]");
    }
    return res;
}

}  // namespace

MptsResult construct_mpts(int nu, int lambda, int s, std::uint64_t seed) {
    if (nu < 1) throw ParamError("construct_mpts: nu must be positive");
    if (lambda < 1) throw ParamError("construct_mpts: lambda must be positive");
    if (s < 0 || s > nu / 2)
        throw ParamError("construct_mpts: require 0 <= s <= floor(nu/2)");

    if (nu <= 2)
        return finish(TripleSystem(nu, lambda), MptsCase::Small, nu, lambda, s);

    int gd = gcd6(nu);
    if (lambda > gd) {
        int t = (lambda - 1) % gd;
        MptsResult base = construct_mpts(nu, t + 1, s, seed);
        TripleSystem ts = construct_ts(nu, lambda - 1 - t, seed);
        return finish(union_systems(ts, base.system, {}, lambda),
                      MptsCase::Case2, nu, lambda, s);
    }

    int r = nu % 6;
    bool half = 2 * s == nu;

    if ((r == 0 || r == 2) && lambda == 1)
        return finish(case_one(nu), MptsCase::I, nu, lambda, s);

    if (r == 4 && lambda == 1) {
        TripleSystem pts = pbd_pts(nu + 1, seed);
        // deleting x leaves K_{1,3} + matching; deleting u leaves K_4 + matching
        TripleSystem sys = delete_point(pts, half ? 0 : 2);
        return finish(std::move(sys), MptsCase::III, nu, lambda, s);
    }

    if (r == 4 && lambda == 2 && half) {
        TripleSystem m1 = construct_mpts(nu, 1, nu / 2, seed).system;
        Multigraph lv = leave(m1);
        std::vector<int> k4;
        for (int v = 0; v < nu; ++v)
            if (lv.degree(v) == 3) k4.push_back(v);
        if (k4.size() != 4)
            throw VerifyError("case IV: expected a K4 component in the leave");
        std::vector<Triple> extra = {make_triple(k4[0], k4[1], k4[2]),
                                     make_triple(k4[0], k4[1], k4[3])};
        return finish(union_systems(m1, m1, extra, 2), MptsCase::IV, nu,
                      lambda, s);
    }

    if ((r == 2 || r == 5) && lambda == 2 && s <= 1)
        return finish(doubled_edge_system(nu, seed), MptsCase::VI, nu, lambda,
                      s);

    if (r == 5 && lambda == 3 && s == (nu - 1) / 2) {
        TripleSystem m1 =
            complete_to_leave(nu, 1, cycle_on(nu, nu - 1), seed);
        TripleSystem m2 =
            relabel(doubled_edge_system(nu, seed),
                    permutation_sending({0, 1}, {nu - 1, 0}, nu));
        return finish(union_systems(m1, m2, {}, 3), MptsCase::VII, nu, lambda,
                      s);
    }

    if (r == 2 && lambda == 3) {
        TripleSystem m1 = case_one(nu);
        TripleSystem m2 = doubled_edge_system(nu, seed);
        return finish(union_systems(m1, m2, {}, 3), MptsCase::VIII, nu, lambda,
                      s);
    }

    if (r == 2 && lambda == 4 && half) {
        TripleSystem m1 = case_one(nu);
        TripleSystem m8 = construct_mpts(nu, 3, s, seed).system;
        return finish(union_systems(m1, m8, {}, 4), MptsCase::IX, nu, lambda,
                      s);
    }

    if (r == 2 && lambda == 5) {
        TripleSystem m1 = case_one(nu);
        TripleSystem d = doubled_edge_system(nu, seed);
        if (!half) {
            // star K_{1,3} with centre 2 on {0,1,3} plus the leftover matching
            TripleSystem a = relabel(d, permutation_sending({0, 1}, {0, 2}, nu));
            TripleSystem b = relabel(d, permutation_sending({0, 1}, {1, 2}, nu));
            TripleSystem ab = union_systems(a, b, {}, 4);
            return finish(
                union_systems(ab, m1, {make_triple(0, 1, 2)}, 5),
                MptsCase::X, nu, lambda, s);
        }
        TripleSystem a = d;  // doubled edge on (0,1)
        TripleSystem b = relabel(d, permutation_sending({0, 1}, {2, 3}, nu));
        TripleSystem ab = union_systems(a, b, {}, 4);
        return finish(union_systems(ab, m1, {}, 5), MptsCase::X, nu, lambda, s);
    }

    if (r == 2 && lambda == 6 && half) {
        TripleSystem c = construct_mpts(nu, 2, nu / 2, seed).system;  // C_nu
        TripleSystem d = doubled_edge_system(nu, seed);
        TripleSystem a = relabel(d, permutation_sending({0, 1}, {0, 2}, nu));
        TripleSystem b = relabel(d, permutation_sending({0, 1}, {1, 3}, nu));
        TripleSystem ab = union_systems(a, b, {}, 4);
        return finish(union_systems(ab, c, {make_triple(0, 1, 2)}, 6),
                      MptsCase::XI, nu, lambda, s);
    }

    // remaining combinations have even leave degrees: empty leave or a
    // single cycle C_{e} realized by hill climbing
    long long g = compute_g(nu, lambda, s);
    long long e_leave = static_cast<long long>(lambda) * choose2(nu) - 3 * g;
    int residue = static_cast<int>(static_cast<long long>(lambda) *
                                   choose2(nu) % 3);
    MptsCase tag = residue == 0 ? MptsCase::II
                   : residue == 1 ? MptsCase::V
                                  : MptsCase::VI;
    if (e_leave == 0)
        return finish(construct_ts(nu, lambda, seed), tag, nu, lambda, s);
    if (e_leave < 3 || e_leave > nu)
        throw VerifyError("construct_mpts: unexpected cycle-leave size");
    TripleSystem sys = complete_to_leave(
        nu, lambda, cycle_on(nu, static_cast<int>(e_leave)), seed);
    return finish(std::move(sys), tag, nu, lambda, s);
}

}  // namespace tribound
