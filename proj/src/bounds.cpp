#include "tribound/bounds.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace tribound {

int gcd6(int nu) { return std::gcd(nu - 2, 6); }

namespace {

void check_g_args(int nu, int lambda, int s) {
    if (lambda < 1) throw ParamError("g: lambda must be positive");
    if (nu < 0) throw ParamError("g: negative nu");
    if (s < 0 || s > nu / 2) throw ParamError("g: require 0 <= s <= floor(nu/2)");
}

long long floordiv(long long a, long long b) {
    long long q = a / b, r = a % b;
    return r != 0 && ((r < 0) != (b < 0)) ? q - 1 : q;
}

}  // namespace

int g_branch(int nu, int lambda, int s) {
    check_g_args(nu, lambda, s);
    if (nu <= 2) return 0;
    int r = nu % 6, l2 = lambda % 2, l6 = lambda % 6;
    bool half = 2 * s == nu;  // s == nu/2 (nu even)
    if ((r == 0 && l2 == 1) || (r == 2 && (l6 == 1 || l6 == 3)) ||
        (r == 2 && l6 == 5 && !half) || (r == 4 && l2 == 1 && !half))
        return 1;
    if ((r == 2 && l6 == 5 && half) || (r == 4 && l2 == 1 && half)) return 2;
    if ((r == 2 && l6 == 4 && s == 0) || (r == 5 && lambda % 3 == 1 && s == 0))
        return 3;
    return 4;
}

long long compute_g(int nu, int lambda, int s) {
    int branch = g_branch(nu, lambda, s);
    if (branch == 0) return 0;
    long long c = choose2(nu), l = lambda;
    switch (branch) {
        case 1: return floordiv(2 * l * c - nu, 6);
        case 2: return floordiv(2 * l * c - nu, 6) - 1;
        case 3: return floordiv(l * c, 3) - 1;
        default: return floordiv(l * c - 2 * s, 3);
    }
}

long long compute_f(long long n, int nu, int delta2) {
    if (nu < 1) throw ParamError("f: nu must be positive");
    if (delta2 < 1) throw ParamError("f: delta2 must be positive");
    if (n < nu) throw ParamError("f: require n >= nu");
    long long base = nu * (n - nu) * delta2 / 2;
    int s = ((n - nu) * delta2 % 2 == 0 || nu % 2 == 0) ? 0 : nu / 2;
    return base + compute_g(nu, delta2, s);
}

bool existence(DesignKind kind, int nu, int lambda) {
    if (nu < 1) throw ParamError("existence: nu must be positive");
    switch (kind) {
        case DesignKind::TS:
            if (lambda < 1) throw ParamError("existence: lambda must be positive");
            return nu != 2 && lambda % gcd6(nu) == 0;
        case DesignKind::STS:
            return nu % 6 == 1 || nu % 6 == 3;
        case DesignKind::PBD35:
            return nu > 5 && nu % 6 == 5;
    }
    throw ParamError("existence: unknown design kind");
}

LeaveProfile leave_profile(int nu, int lambda) {
    if (nu < 3) throw ParamError("leave_profile: require nu >= 3");
    if (lambda < 1) throw ParamError("leave_profile: lambda must be positive");
    LeaveProfile p;
    p.degree_parity = static_cast<int>(static_cast<long long>(lambda) * (nu - 1) % 2);
    p.size_mod3 = static_cast<int>(static_cast<long long>(lambda) * choose2(nu) % 3);
    p.case1 = lambda <= gcd6(nu);
    return p;
}

namespace {

// Lengths of the cycle components; throws unless every vertex has degree 0
// or 2 and all multiplicities are 1.
std::vector<int> cycle_lengths(const Multigraph& g) {
    std::vector<std::vector<int>> adj(g.n());
    for (const auto& [e, m] : g.edges()) {
        if (m != 1)
            throw ParamError("check_leave_feasible: graph must be simple");
        adj[e.first].push_back(e.second);
        adj[e.second].push_back(e.first);
    }
    std::vector<int> lengths;
    std::vector<char> seen(g.n(), 0);
    for (int v = 0; v < g.n(); ++v) {
        if (adj[v].size() != 0 && adj[v].size() != 2)
            throw ParamError(
                "check_leave_feasible: every degree must be 0 or 2");
        if (seen[v] || adj[v].empty()) continue;
        int len = 0, cur = v, prev = -1;
        while (!seen[cur]) {
            seen[cur] = 1;
            ++len;
            int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
            prev = cur;
            cur = next;
        }
        if (cur != v)
            throw ParamError(
                "check_leave_feasible: not a disjoint union of cycles");
        lengths.push_back(len);
    }
    std::sort(lengths.begin(), lengths.end());
    return lengths;
}

}  // namespace

FeasibilityResult check_leave_feasible(int nu, int lambda, const Multigraph& g) {
    if (nu <= 2) throw ParamError("check_leave_feasible: require nu > 2");
    if (g.n() > nu)
        throw ParamError("check_leave_feasible: graph on more than nu vertices");
    auto lengths = cycle_lengths(g);

    if (lambda % 2 != 0 && nu % 2 == 0)
        return {false, "lambda odd and nu even"};
    if ((lambda * choose2(nu) - g.edge_total()) % 3 != 0)
        return {false, "lambda*C(nu,2) - e(G) not divisible by 3"};
    if (lambda == 1 && nu == 7 && lengths == std::vector<int>{3, 3})
        return {false, "exceptional pair: (lambda,nu)=(1,7) with 2{C3}"};
    if (lambda == 1 && nu == 9 && lengths == std::vector<int>{4, 5})
        return {false, "exceptional pair: (lambda,nu)=(1,9) with C4+C5"};
    if (lambda == 2 && nu == 6 && lengths == std::vector<int>{3, 3})
        return {false, "exceptional pair: (lambda,nu)=(2,6) with 2{C3}"};
    return {true, ""};
}

}  // namespace tribound
