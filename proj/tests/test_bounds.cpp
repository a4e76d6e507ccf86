#include <doctest.h>

#include "tribound/bounds.hpp"

using namespace tribound;

TEST_CASE("compute_g frozen values") {
    CHECK(compute_g(2, 3, 1) == 0);
    CHECK(compute_g(1, 5, 0) == 0);
    CHECK(compute_g(7, 1, 0) == 7);
    CHECK(compute_g(8, 1, 4) == 8);
    CHECK(compute_g(10, 1, 5) == 12);
    CHECK(compute_g(4, 1, 2) == 0);
    CHECK(compute_g(4, 1, 1) == 1);
    CHECK(compute_g(5, 1, 0) == 2);
    CHECK_THROWS_AS(compute_g(7, 1, 4), ParamError);
    CHECK_THROWS_AS(compute_g(7, 0, 0), ParamError);
}

TEST_CASE("compute_f frozen values") {
    CHECK(compute_f(32, 1, 2) == 31);
    CHECK(compute_f(21, 3, 1) == 28);
    CHECK(compute_f(20, 3, 1) == 25);
    CHECK(compute_f(24, 4, 3) == 120 + compute_g(4, 3, 0));
    CHECK_THROWS_AS(compute_f(2, 3, 1), ParamError);
}

TEST_CASE("existence predicates") {
    CHECK(existence(DesignKind::STS, 7));
    CHECK(existence(DesignKind::STS, 9));
    CHECK_FALSE(existence(DesignKind::STS, 5));
    CHECK_FALSE(existence(DesignKind::STS, 8));

    CHECK_FALSE(existence(DesignKind::TS, 8, 3));
    CHECK(existence(DesignKind::TS, 8, 6));
    CHECK(existence(DesignKind::TS, 7, 1));
    CHECK_FALSE(existence(DesignKind::TS, 2, 6));

    CHECK(existence(DesignKind::PBD35, 11));
    CHECK(existence(DesignKind::PBD35, 17));
    CHECK_FALSE(existence(DesignKind::PBD35, 9));
    CHECK_FALSE(existence(DesignKind::PBD35, 5));
}

TEST_CASE("leave_profile") {
    LeaveProfile p = leave_profile(8, 1);
    CHECK(p.degree_parity == 1);
    CHECK(p.size_mod3 == 1);
    CHECK(p.case1);

    p = leave_profile(6, 1);
    CHECK(p.degree_parity == 1);
    CHECK(p.size_mod3 == 0);

    p = leave_profile(8, 5);
    CHECK(p.degree_parity == 1);
    CHECK(p.size_mod3 == 2);
    CHECK(p.case1);

    CHECK_FALSE(leave_profile(8, 7).case1);
    CHECK_THROWS_AS(leave_profile(2, 1), ParamError);
}

namespace {

Multigraph cycles(int nu, const std::vector<int>& lens) {
    Multigraph g(nu);
    int base = 0;
    for (int len : lens) {
        for (int i = 0; i + 1 < len; ++i) g.add_edge(base + i, base + i + 1);
        g.add_edge(base, base + len - 1);
        base += len;
    }
    return g;
}

}  // namespace

TEST_CASE("check_leave_feasible") {
    CHECK_FALSE(check_leave_feasible(7, 1, cycles(7, {3, 3})).ok);
    CHECK_FALSE(check_leave_feasible(9, 1, cycles(9, {4, 5})).ok);
    CHECK_FALSE(check_leave_feasible(6, 2, cycles(6, {3, 3})).ok);
    CHECK(check_leave_feasible(9, 1, cycles(9, {9})).ok);
    CHECK(check_leave_feasible(7, 1, cycles(7, {6})).ok);
    CHECK(check_leave_feasible(7, 1, cycles(7, {3})).ok);
    // lambda odd with nu even fails the parity bullet
    CHECK_FALSE(check_leave_feasible(6, 1, cycles(6, {3})).ok);
    // size residue violation
    CHECK_FALSE(check_leave_feasible(9, 1, cycles(9, {4})).ok);

    Multigraph path(4);
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    CHECK_THROWS_AS(check_leave_feasible(4, 2, path), ParamError);
    Multigraph doubled(4);
    doubled.add_edge(0, 1, 2);
    CHECK_THROWS_AS(check_leave_feasible(4, 2, doubled), ParamError);
}

TEST_CASE("g grid properties and branch exclusivity") {
    for (int nu = 1; nu <= 60; ++nu)
        for (int lambda = 1; lambda <= 12; ++lambda) {
            for (int s = 0; s <= nu / 2; ++s) {
                long long g = compute_g(nu, lambda, s);
                CHECK(3 * g <= static_cast<long long>(lambda) * choose2(nu));
                if (s < nu / 2) CHECK(compute_g(nu, lambda, s + 1) <= g);
                int b = g_branch(nu, lambda, s);
                if (nu <= 2) {
                    CHECK(b == 0);
                    continue;
                }
                // re-derive the branch predicates independently
                int r = nu % 6, l6 = lambda % 6;
                bool half = 2 * s == nu;
                bool b1 = (r == 0 && lambda % 2 == 1) ||
                          (r == 2 && (l6 == 1 || l6 == 3)) ||
                          (r == 2 && l6 == 5 && !half) ||
                          (r == 4 && lambda % 2 == 1 && !half);
                bool b2 = (r == 2 && l6 == 5 && half) ||
                          (r == 4 && lambda % 2 == 1 && half);
                bool b3 = (r == 2 && l6 == 4 && s == 0) ||
                          (r == 5 && lambda % 3 == 1 && s == 0);
                int fired = (b1 ? 1 : 0) + (b2 ? 1 : 0) + (b3 ? 1 : 0);
                CHECK(fired <= 1);
                int expect = b1 ? 1 : b2 ? 2 : b3 ? 3 : 4;
                CHECK(b == expect);
            }
        }
}

TEST_CASE("f nondecreasing in n") {
    for (int nu = 1; nu <= 10; ++nu)
        for (int d2 = 1; d2 <= 4; ++d2)
            for (long long n = nu + 2; n <= nu + 40; ++n)
                CHECK(compute_f(n + 1, nu, d2) >= compute_f(n, nu, d2));
}

TEST_CASE("gcd6") {
    CHECK(gcd6(8) == 6);
    CHECK(gcd6(7) == 1);
    CHECK(gcd6(4) == 2);
    CHECK(gcd6(5) == 3);
}
