#include <doctest.h>

#include <algorithm>

#include "tribound/bounds.hpp"
#include "tribound/designs.hpp"
#include "tribound/measure.hpp"
#include "tribound/mpts.hpp"

using namespace tribound;

namespace {

void check_gate(const MptsResult& r, int nu, int lambda, int s) {
    CHECK(static_cast<long long>(r.system.edge_count()) ==
          compute_g(nu, lambda, s));
    for (const auto& [e, m] : r.system.pair_counts()) CHECK(m <= lambda);
    Multigraph lv = leave(r.system);
    CHECK(lv == r.leave_graph);
    CHECK(graph_matching_number(lv) >= s);
    CHECK(3 * static_cast<long long>(r.system.edge_count()) +
              lv.edge_total() ==
          static_cast<long long>(lambda) * choose2(nu));
}

std::vector<int> degree_multiset(const Multigraph& g) {
    std::vector<int> d;
    for (int v = 0; v < g.n(); ++v) d.push_back(g.degree(v));
    std::sort(d.begin(), d.end(), std::greater<>());
    while (!d.empty() && d.back() == 0) d.pop_back();
    return d;
}

}  // namespace

TEST_CASE("construct_mpts frozen examples") {
    MptsResult r = construct_mpts(8, 1, 4);
    CHECK(r.system.edge_count() == 8);
    CHECK(degree_multiset(r.leave_graph) ==
          std::vector<int>{1, 1, 1, 1, 1, 1, 1, 1});  // perfect matching
    check_gate(r, 8, 1, 4);

    r = construct_mpts(10, 1, 5);
    CHECK(r.system.edge_count() == 12);
    // leave is K4 plus a matching on the other six points
    CHECK(degree_multiset(r.leave_graph) ==
          std::vector<int>{3, 3, 3, 3, 1, 1, 1, 1, 1, 1});
    check_gate(r, 10, 1, 5);

    r = construct_mpts(8, 2, 1);
    CHECK(r.system.edge_count() == 18);
    CHECK(r.leave_graph.edge_total() == 2);
    check_gate(r, 8, 2, 1);

    r = construct_mpts(2, 9, 1);
    CHECK(r.system.edge_count() == 0);
    CHECK(r.leave_graph.edge_total() == 9);

    r = construct_mpts(8, 9, 4);
    CHECK(static_cast<long long>(r.system.edge_count()) ==
          56 + compute_g(8, 3, 4));
    check_gate(r, 8, 9, 4);

    CHECK_THROWS_AS(construct_mpts(7, 1, 4), ParamError);
    CHECK_THROWS_AS(construct_mpts(0, 1, 0), ParamError);
}

TEST_CASE("construct_mpts grid gate") {
    for (int nu = 1; nu <= 12; ++nu)
        for (int lambda = 1; lambda <= gcd6(nu); ++lambda)
            for (int s = 0; s <= nu / 2; ++s)
                check_gate(construct_mpts(nu, lambda, s), nu, lambda, s);
}

TEST_CASE("construct_mpts lambda reduction matches the base leave") {
    // large lambda peels off a full design, so the leave matches the
    // reduced system built with the same seed
    for (int s = 0; s <= 4; ++s) {
        MptsResult big = construct_mpts(9, 4, s, 11);
        MptsResult small = construct_mpts(9, 1, s, 11);
        CHECK(big.leave_graph == small.leave_graph);
    }
    for (int s = 0; s <= 5; ++s) {
        MptsResult big = construct_mpts(11, 7, s, 11);
        MptsResult small = construct_mpts(11, 1, s, 11);
        CHECK(big.leave_graph == small.leave_graph);
    }
    for (int s = 0; s <= 4; ++s) {
        MptsResult big = construct_mpts(8, 9, s, 11);
        MptsResult small = construct_mpts(8, 3, s, 11);
        CHECK(big.leave_graph == small.leave_graph);
    }
}

TEST_CASE("construct_mpts avoids the impossible leaves") {
    // the three leave shapes that cannot occur: two triangles for
    // (7,1) and (6,2), C4 + C5 for (9,1)
    for (int s = 0; s <= 3; ++s) {
        Multigraph lv = construct_mpts(7, 1, s).leave_graph;
        CHECK(check_leave_feasible(7, 1, lv).ok);
    }
    for (int s = 0; s <= 3; ++s) {
        Multigraph lv = construct_mpts(6, 2, s).leave_graph;
        bool two_triangles = true;
        for (int v = 0; v < 6; ++v)
            if (lv.degree(v) != 2) two_triangles = false;
        if (two_triangles) CHECK(check_leave_feasible(6, 2, lv).ok);
    }
    for (int s = 0; s <= 4; ++s) {
        Multigraph lv = construct_mpts(9, 1, s).leave_graph;
        CHECK(check_leave_feasible(9, 1, lv).ok);
    }
}

TEST_CASE("delete_point") {
    TripleSystem s9 = construct_sts(9);
    TripleSystem d = delete_point(s9, 0);
    CHECK(d.nu() == 8);
    CHECK(d.edge_count() == 8);  // 12 minus the 4 triples through the point
    Multigraph lv = leave(d);
    CHECK(lv.edge_total() == 4);
    CHECK(graph_matching_number(lv) == 4);

    TripleSystem s7 = construct_sts(7);
    TripleSystem d7 = delete_point(s7, 3);
    CHECK(d7.nu() == 6);
    CHECK(d7.edge_count() == 4);
    for (const Triple& t : d7.triples())
        for (int v : t) CHECK(v < 6);

    TripleSystem empty(3, 1);
    CHECK(delete_point(empty, 2).nu() == 2);
    CHECK_THROWS_AS(delete_point(s7, 7), ParamError);
}

TEST_CASE("union_systems") {
    TripleSystem s7 = construct_sts(7);
    TripleSystem u = union_systems(s7, s7, {}, 2);
    CHECK(u.edge_count() == 14);
    CHECK(u.lambda() == 2);
    CHECK(leave(u).edge_total() == 0);

    TripleSystem empty(7, 1);
    CHECK(union_systems(s7, empty, {}, 1).triples() == s7.triples());

    CHECK(union_systems(empty, empty, {make_triple(0, 1, 2)}, 1).edge_count() ==
          1);

    // cap violation: twice the same design under lambda = 1
    CHECK_THROWS_AS(union_systems(s7, s7, {}, 1), ParamError);
    TripleSystem s9 = construct_sts(9);
    CHECK_THROWS_AS(union_systems(s7, s9, {}, 2), ParamError);
}

TEST_CASE("relabel") {
    TripleSystem s7 = construct_sts(7);
    std::vector<int> id{0, 1, 2, 3, 4, 5, 6};
    CHECK(relabel(s7, id) == s7);

    std::vector<int> rot{1, 2, 3, 4, 5, 6, 0};
    TripleSystem r = relabel(s7, rot);
    CHECK(r.edge_count() == s7.edge_count());
    CHECK(max_codegree(r.to_hypergraph()) ==
          max_codegree(s7.to_hypergraph()));

    MptsResult m = construct_mpts(8, 1, 4);
    std::vector<int> perm{3, 0, 5, 1, 7, 2, 6, 4};
    CHECK(leave(relabel(m.system, perm)) ==
          relabel_graph(leave(m.system), perm));

    CHECK_THROWS_AS(relabel(s7, {0, 1, 2}), ParamError);
    CHECK_THROWS_AS(relabel(s7, {0, 0, 2, 3, 4, 5, 6}), ParamError);
}

TEST_CASE("permutation_sending") {
    std::vector<int> p = permutation_sending({2, 5}, {0, 1}, 6);
    CHECK(p[2] == 0);
    CHECK(p[5] == 1);
    std::vector<int> sorted = p;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == std::vector<int>{0, 1, 2, 3, 4, 5});
    // remaining points keep their relative order
    CHECK(p[0] < p[1]);
    CHECK(p[1] < p[3]);
    CHECK(p[3] < p[4]);
}
