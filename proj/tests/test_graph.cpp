#include <doctest.h>

#include "plap/generators.hpp"
#include "plap/graph.hpp"
#include "support.hpp"

using namespace plap;

TEST_CASE("validate accepts a minimal graph") {
    std::vector<Edge> edges = {{0, 1, 1.0, -1}};
    CHECK_FALSE(validate(2, edges, {}, {}).has_value());
}

TEST_CASE("validate names the offending element") {
    std::vector<Edge> loop = {{0, 0, 1.0, -1}};
    auto issue = validate(2, loop, {}, {});
    REQUIRE(issue.has_value());
    CHECK(issue->code == Errc::self_loop);

    std::vector<Edge> bad_w = {{0, 1, -1.0, -1}};
    issue = validate(2, bad_w, {}, {});
    REQUIRE(issue.has_value());
    CHECK(issue->code == Errc::nonpositive_weight);

    std::vector<Edge> dup = {{0, 1, 1.0, -1}, {1, 0, 2.0, +1}};
    issue = validate(2, dup, {}, {});
    REQUIRE(issue.has_value());
    CHECK(issue->code == Errc::duplicate_edge);

    std::vector<Edge> range = {{0, 2, 1.0, -1}};
    issue = validate(2, range, {}, {});
    REQUIRE(issue.has_value());
    CHECK(issue->code == Errc::bad_label);

    std::vector<Edge> ok = {{0, 1, 1.0, -1}};
    std::vector<double> mu = {1.0, 0.0};
    issue = validate(2, ok, mu, {});
    REQUIRE(issue.has_value());
    CHECK(issue->code == Errc::nonpositive_measure);
}

TEST_CASE("constructor throws on invalid input") {
    CHECK_THROWS_AS(SignedGraph(2, {{0, 0, 1.0, -1}}), Error);
    CHECK_THROWS_AS(SignedGraph(2, {{0, 1, 1.0, 3}}), Error);
}

TEST_CASE("connectivity") {
    CHECK(is_connected(make_cycle(4)));
    CHECK_FALSE(is_connected(SignedGraph(4, {{0, 1, 1.0, -1}, {2, 3, 1.0, -1}})));
    CHECK(is_connected(make_empty(1)));
    CHECK_FALSE(is_connected(make_empty(2)));
}

TEST_CASE("star generator") {
    const SignedGraph s = make_star(3);
    CHECK(s.vertex_count() == 4);
    CHECK(s.edge_count() == 3);
    for (const Edge& e : s.edges()) CHECK(e.i == 0);
    CHECK(s.degree(0) == 3);
}

TEST_CASE("join of K8 and empty(12)") {
    const SignedGraph j = make_join(make_complete(8), make_empty(12));
    CHECK(j.vertex_count() == 20);
    CHECK(j.edge_count() == 28 + 96);
    CHECK(is_connected(j));
}

TEST_CASE("gnm counts and determinism") {
    const SignedGraph a = make_gnm(1000, 250000, 7);
    CHECK(a.vertex_count() == 1000);
    CHECK(a.edge_count() == 250000);
    const SignedGraph b = make_gnm(1000, 250000, 7);
    CHECK(a == b);
    const SignedGraph c = make_gnm(1000, 250000, 8);
    CHECK_FALSE(a == c);
    CHECK_THROWS_AS(make_gnm(4, 7, 1), Error);  // m > n(n-1)/2
}

TEST_CASE("cycle has n edges and all degrees 2") {
    for (int n : {3, 5, 8, 13}) {
        const SignedGraph g = make_cycle(n);
        CHECK(g.edge_count() == n);
        for (int v = 0; v < n; ++v) CHECK(g.degree(v) == 2);
    }
}

TEST_CASE("hypercube Q3 is 3-regular on 8 vertices") {
    const SignedGraph q3 = make_hypercube(3);
    CHECK(q3.vertex_count() == 8);
    CHECK(q3.edge_count() == 12);
    for (int v = 0; v < 8; ++v) CHECK(q3.degree(v) == 3);
}

TEST_CASE("subgraph relation") {
    const SignedGraph c4 = make_cycle(4);
    CHECK(is_subgraph(make_star(2), c4));                   // path of length 2
    CHECK_FALSE(is_subgraph(make_star(4), make_hypercube(3)));  // Q3 is 3-regular
    CHECK_FALSE(is_subgraph(make_complete(3), c4));         // C4 is triangle-free

    // reflexive, and transitive along a chain
    CHECK(is_subgraph(c4, c4));
    const SignedGraph p2 = make_path(2), p3 = make_path(3), p4 = make_path(4);
    CHECK(is_subgraph(p2, p3));
    CHECK(is_subgraph(p3, p4));
    CHECK(is_subgraph(p2, p4));
}

TEST_CASE("subgraph honors weights and vertex data") {
    // same structure, different weight on the candidate edge
    SignedGraph host(3, {{0, 1, 2.0, -1}, {1, 2, 1.0, -1}});
    SignedGraph light(2, {{0, 1, 1.0, -1}});
    SignedGraph heavy(2, {{0, 1, 2.0, -1}});
    CHECK(is_subgraph(light, host));
    CHECK(is_subgraph(heavy, host));
    SignedGraph three(2, {{0, 1, 3.0, -1}});
    CHECK_FALSE(is_subgraph(three, host));

    // mu mismatch blocks the embedding
    SignedGraph mu_host(2, {{0, 1, 1.0, -1}}, {2.0, 1.0}, {});
    SignedGraph mu_sub(2, {{0, 1, 1.0, -1}}, {3.0, 1.0}, {});
    CHECK_FALSE(is_subgraph(mu_sub, mu_host));

    // signature is ignored
    SignedGraph plus(2, {{0, 1, 1.0, +1}});
    CHECK(is_subgraph(plus, host));
}

TEST_CASE("subgraph with explicit mapping") {
    const SignedGraph c4 = make_cycle(4);
    const SignedGraph p3 = make_path(3);
    const std::vector<int> good = {0, 1, 2};
    CHECK(is_subgraph(p3, c4, std::span<const int>(good)));
    const std::vector<int> bad = {0, 2, 1};  // 0-2 is not an edge of C4
    CHECK_FALSE(is_subgraph(p3, c4, std::span<const int>(bad)));
    const std::vector<int> not_injective = {0, 0, 1};
    CHECK_THROWS_AS(is_subgraph(p3, c4, std::span<const int>(not_injective)), Error);
}

TEST_CASE("subgraph search size cap") {
    const SignedGraph big = make_path(13);
    CHECK_THROWS_AS(is_subgraph(make_path(2), big), Error);
    try {
        is_subgraph(make_path(2), big);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::too_large_for_search);
    }
}

TEST_CASE("generator parameter validation") {
    CHECK_THROWS_AS(make_cycle(2), Error);
    CHECK_THROWS_AS(make_star(0), Error);
    CHECK_THROWS_AS(make_gnm(-1, 0, 0), Error);
    CHECK_THROWS_AS(make_path(3, 0), Error);
}

TEST_CASE("connected components and induced subgraphs") {
    const SignedGraph g(5, {{0, 1, 1.0, -1}, {1, 2, 1.0, -1}, {3, 4, 1.0, -1}});
    const auto comps = connected_components(g);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == std::vector<int>{0, 1, 2});
    CHECK(comps[1] == std::vector<int>{3, 4});
    const std::vector<int> edge_idx = {0, 1};
    const SignedGraph sub = subgraph_of(g, comps[0], edge_idx);
    CHECK(sub.vertex_count() == 3);
    CHECK(sub.edge_count() == 2);
}
