#pragma once

#include <string>

#include "tribound/types.hpp"

namespace tribound {

enum class DesignKind { TS, STS, PBD35 };

// Forced structure of any leave of a PTS(nu, lambda).
struct LeaveProfile {
    int degree_parity = 0;  // lambda*(nu-1) mod 2
    int size_mod3 = 0;      // lambda*C(nu,2) mod 3
    bool case1 = false;     // lambda <= gcd(nu-2, 6)
};

// Size of a maximum partial triple system whose leave has >= s independent
// edges. Extended by g(nu,.,.) = 0 for nu <= 2.
long long compute_g(int nu, int lambda, int s);

// Which of the four piecewise branches fires (1..4); for nu <= 2 returns 0.
int g_branch(int nu, int lambda, int s);

// Extremal size of a 3-graph on n vertices with codegree <= delta2 and
// matching number <= nu.
long long compute_f(long long n, int nu, int delta2);

// Necessary-and-sufficient existence predicates for the base designs.
bool existence(DesignKind kind, int nu, int lambda = 1);

LeaveProfile leave_profile(int nu, int lambda);

struct FeasibilityResult {
    bool ok = false;
    std::string reason;
};

// Can the simple graph g (all degrees 0 or 2) be the leave of a
// PTS(nu, lambda)? Rejects exactly the three exceptional (lambda, nu, G).
FeasibilityResult check_leave_feasible(int nu, int lambda, const Multigraph& g);

int gcd6(int nu);  // gcd(nu - 2, 6)

}  // namespace tribound
