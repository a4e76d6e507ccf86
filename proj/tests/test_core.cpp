#include <doctest.h>

#include <numeric>
#include <random>

#include "tribound/designs.hpp"
#include "tribound/measure.hpp"
#include "tribound/mpts.hpp"
#include "tribound/types.hpp"

using namespace tribound;

TEST_CASE("make_triple sorts and validates") {
    CHECK(make_triple(2, 0, 1) == Triple{0, 1, 2});
    CHECK(make_triple(5, 3, 9) == Triple{3, 5, 9});
    CHECK_THROWS_AS(make_triple(1, 1, 2), ParamError);
    CHECK_THROWS_AS(make_triple(-1, 0, 2), ParamError);
}

TEST_CASE("hypergraph keeps canonical order") {
    Hypergraph3 h(6);
    h.add(make_triple(3, 4, 5));
    h.add(make_triple(0, 1, 2));
    h.add(make_triple(0, 1, 2));
    CHECK(h.triples() == std::vector<Triple>{{0, 1, 2}, {0, 1, 2}, {3, 4, 5}});
    CHECK(h.edge_count() == 3);
    // canonicalization is idempotent
    Hypergraph3 h2(h.n(), h.triples());
    CHECK(h2 == h);
    CHECK_THROWS_AS(h.add(make_triple(4, 5, 6)), ParamError);
}

TEST_CASE("codegree") {
    Hypergraph3 h(4);
    h.add(make_triple(0, 1, 2));
    h.add(make_triple(0, 1, 3));
    CHECK(codegree(h, 0, 1) == 2);
    CHECK(codegree(h, 1, 0) == 2);
    CHECK(codegree(h, 2, 3) == 0);
    CHECK_THROWS_AS(codegree(h, 1, 1), ParamError);
    CHECK_THROWS_AS(codegree(h, 0, 9), ParamError);

    Hypergraph3 empty(4);
    CHECK(codegree(empty, 0, 1) == 0);

    Hypergraph3 fano = construct_sts(7).to_hypergraph();
    for (int u = 0; u < 7; ++u)
        for (int v = u + 1; v < 7; ++v) CHECK(codegree(fano, u, v) == 1);
}

TEST_CASE("max_codegree") {
    CHECK(max_codegree(construct_sts(7).to_hypergraph()) == 1);
    Hypergraph3 doubled(3);
    doubled.add(make_triple(0, 1, 2));
    doubled.add(make_triple(0, 1, 2));
    CHECK(max_codegree(doubled) == 2);
    CHECK(max_codegree(Hypergraph3(5)) == 0);
    CHECK_THROWS_AS(max_codegree(Hypergraph3(1)), ParamError);
}

TEST_CASE("matching_number") {
    CHECK(matching_number(Hypergraph3(0)) == 0);
    Hypergraph3 h(7);
    h.add(make_triple(0, 1, 2));
    h.add(make_triple(3, 4, 5));
    h.add(make_triple(0, 3, 6));
    CHECK(matching_number(h) == 2);
    CHECK(matching_number(construct_sts(7).to_hypergraph()) == 1);

    Hypergraph3 dup(3);
    dup.add(make_triple(0, 1, 2));
    dup.add(make_triple(0, 1, 2));
    CHECK(matching_number(dup) == 1);
}

TEST_CASE("matching_number structural bounds") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 5 + static_cast<int>(rng() % 5);
        Hypergraph3 h(n);
        int k = 1 + static_cast<int>(rng() % 10);
        for (int i = 0; i < k; ++i) {
            int a = static_cast<int>(rng() % n), b, c;
            do b = static_cast<int>(rng() % n); while (b == a);
            do c = static_cast<int>(rng() % n); while (c == a || c == b);
            h.add(make_triple(a, b, c));
        }
        int m = matching_number(h);
        CHECK(m <= n / 3);
        CHECK(m <= static_cast<int>(h.edge_count()));
        CHECK(m >= 1);
    }
    CHECK(matching_number(Hypergraph3(9)) == 0);
}

TEST_CASE("matching search respects the node budget") {
    Hypergraph3 h(9);
    for (int a = 0; a < 9; ++a)
        for (int b = a + 1; b < 9; ++b)
            for (int c = b + 1; c < 9; ++c) h.add(make_triple(a, b, c));
    MatchingOptions opts;
    opts.node_budget = 0;
    CHECK_THROWS_AS(matching_number(h, opts), ResourceError);
}

TEST_CASE("leave") {
    CHECK(leave(construct_sts(7)).edge_total() == 0);

    TripleSystem one(4, 1, {make_triple(0, 1, 2)});
    Multigraph lv = leave(one);
    CHECK(lv.edge_total() == 3);
    CHECK(lv.multiplicity(0, 3) == 1);
    CHECK(lv.multiplicity(1, 3) == 1);
    CHECK(lv.multiplicity(2, 3) == 1);
    CHECK(lv.multiplicity(0, 1) == 0);

    MptsResult m = construct_mpts(6, 1, 0);
    CHECK(m.system.edge_count() == 4);
    CHECK(leave(m.system).edge_total() == 15 - 12);
}

TEST_CASE("eq (1) identity on assorted systems") {
    for (auto [nu, lambda, s] : {std::array<int, 3>{7, 1, 0},
                                 {8, 1, 4},
                                 {9, 2, 3},
                                 {11, 3, 5},
                                 {12, 2, 6}}) {
        MptsResult m = construct_mpts(nu, lambda, s);
        long long e = static_cast<long long>(m.system.edge_count());
        CHECK(3 * e + leave(m.system).edge_total() ==
              static_cast<long long>(lambda) * choose2(nu));
    }
}

TEST_CASE("link_graph") {
    Hypergraph3 h(5);
    h.add(make_triple(0, 1, 2));
    h.add(make_triple(0, 3, 4));
    Multigraph l0 = link_graph(h, 0);
    CHECK(l0.multiplicity(1, 2) == 1);
    CHECK(l0.multiplicity(3, 4) == 1);
    CHECK(l0.edge_total() == 2);
    CHECK(link_graph(h, 1).edge_total() == 1);

    Hypergraph3 single(4);
    single.add(make_triple(0, 1, 2));
    CHECK(link_graph(single, 3).edge_total() == 0);
    CHECK_THROWS_AS(link_graph(single, 7), ParamError);

    Hypergraph3 fano = construct_sts(7).to_hypergraph();
    for (int x = 0; x < 7; ++x) {
        Multigraph lx = link_graph(fano, x);
        CHECK(lx.edge_total() == 3);
        CHECK(graph_matching_number(lx) == 3);  // perfect matching on 6 points
    }
}

TEST_CASE("codegree and link totals sum to 3e") {
    TripleSystem sts = construct_sts(9);
    Hypergraph3 h = sts.to_hypergraph();
    long long total = 0;
    for (int u = 0; u < h.n(); ++u)
        for (int v = u + 1; v < h.n(); ++v) total += codegree(h, u, v);
    CHECK(total == 3 * static_cast<long long>(h.edge_count()));
    long long link_total = 0;
    for (int x = 0; x < h.n(); ++x) link_total += link_graph(h, x).edge_total();
    CHECK(link_total == 3 * static_cast<long long>(h.edge_count()));
}

TEST_CASE("graph_matching_number") {
    Multigraph m4(8);
    for (int i = 0; i < 8; i += 2) m4.add_edge(i, i + 1);
    CHECK(graph_matching_number(m4) == 4);

    Multigraph star(4);
    star.add_edge(0, 1);
    star.add_edge(0, 2);
    star.add_edge(0, 3);
    CHECK(graph_matching_number(star) == 1);

    Multigraph g(10);
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) g.add_edge(u, v);
    g.add_edge(4, 5);
    g.add_edge(6, 7);
    g.add_edge(8, 9);
    CHECK(graph_matching_number(g) == 5);

    // odd cycle needs a blossom
    Multigraph c5(5);
    for (int i = 0; i < 5; ++i) c5.add_edge(i, (i + 1) % 5);
    CHECK(graph_matching_number(c5) == 2);

    // parallel edges collapse
    Multigraph par(2);
    par.add_edge(0, 1, 3);
    CHECK(graph_matching_number(par) == 1);
}

TEST_CASE("triple system rejects pair-cap violations") {
    CHECK_THROWS_AS(
        TripleSystem(4, 1, {make_triple(0, 1, 2), make_triple(0, 1, 3)}),
        ParamError);
    CHECK_NOTHROW(
        TripleSystem(4, 2, {make_triple(0, 1, 2), make_triple(0, 1, 3)}));
}
