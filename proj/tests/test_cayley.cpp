#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "approxlab/cayley.hpp"
#include "approxlab/element_set.hpp"

using namespace approxlab;

namespace {

ElementSet ints(const Group& g, std::initializer_list<std::int64_t> xs) {
    std::vector<GroupElement> v;
    for (auto x : xs) v.push_back(GroupElement{{x}});
    return ElementSet(g, std::move(v));
}

CayleyGraph cycle_graph(std::int64_t n) {
    Group g(GroupDescriptor::cyclic(n));
    return build_cayley(g, ints(g, {1, n - 1}));
}

} // namespace

TEST_CASE("six cycle") {
    auto g = cycle_graph(6);
    CHECK(g.size() == 6);
    CHECK(g.degree() == 2);
    for (const auto& nbrs : g.adjacency) CHECK(nbrs.size() == 2);
}

TEST_CASE("generation failures") {
    Group c6(GroupDescriptor::cyclic(6));
    CHECK_THROWS_AS(build_cayley(c6, ints(c6, {2, 4})), NotGenerating);
    CHECK_THROWS_AS(build_cayley(c6, ints(c6, {1, 2})), NotSymmetric);
    Group z(GroupDescriptor::int_lattice(1));
    CHECK_THROWS_AS(build_cayley(z, ints(z, {-1, 1})), TooLargeForExact);
}

TEST_CASE("sl2(3) unipotent Cayley graph") {
    Group g(GroupDescriptor::sl2(3));
    ElementSet s = symmetrize(
        ElementSet(g, {GroupElement{{1, 1, 0, 1}}, GroupElement{{1, 0, 1, 1}}}));
    auto cg = build_cayley(g, s);
    CHECK(cg.size() == 24);
    CHECK(cg.degree() == 4);
}

TEST_CASE("vertex boundary") {
    auto g = cycle_graph(6);
    std::uint32_t v0 = g.index_of(GroupElement{{0}});
    std::uint32_t v1 = g.index_of(GroupElement{{1}});
    std::uint32_t v2 = g.index_of(GroupElement{{2}});
    auto b = vertex_boundary(g, {v0, v1, v2});
    CHECK(b.size() == 2);
    for (auto v : b) {
        CHECK(v != v0);
        CHECK(v != v1);
        CHECK(v != v2);
    }
    std::vector<std::uint32_t> all;
    for (std::uint32_t v = 0; v < g.size(); ++v) all.push_back(v);
    CHECK(vertex_boundary(g, all).empty());
    CHECK(vertex_boundary(g, {}).empty());
}

TEST_CASE("exact cheeger on the six cycle") {
    auto g = cycle_graph(6);
    auto r = cheeger(g, CheegerMode::Exact);
    CHECK(r.value == make_ratio(2, 3));
    CHECK(r.witness.size() == 3);
    // witness attains the value
    auto b = vertex_boundary(g, r.witness);
    CHECK(make_ratio(b.size(), r.witness.size()) == r.value);
}

TEST_CASE("complete graph on Z/5") {
    Group c5(GroupDescriptor::cyclic(5));
    auto g = build_cayley(c5, ints(c5, {1, 2, 3, 4}));
    auto r = cheeger(g, CheegerMode::Exact);
    CHECK(r.value >= Rational(1));
    CHECK(r.value == make_ratio(3, 2)); // attained at |A| = 2
}

TEST_CASE("two vertex path") {
    Group c2(GroupDescriptor::cyclic(2));
    auto g = build_cayley(c2, ints(c2, {0, 1}));
    auto r = cheeger(g, CheegerMode::Exact);
    CHECK(r.value == Rational(1));
}

TEST_CASE("cheeger scaling on 2n-cycles") {
    for (std::int64_t n = 3; n <= 12; ++n) {
        auto g = cycle_graph(2 * n);
        auto r = cheeger(g, CheegerMode::Exact, 4);
        INFO("2n-cycle with n = ", n);
        CHECK(r.value == make_ratio(2, static_cast<std::uint64_t>(n)));
    }
}

TEST_CASE("exact mode is deterministic across job counts") {
    auto g = cycle_graph(14);
    auto r1 = cheeger(g, CheegerMode::Exact, 1);
    auto r3 = cheeger(g, CheegerMode::Exact, 3);
    auto r8 = cheeger(g, CheegerMode::Exact, 8);
    CHECK(r1.value == r3.value);
    CHECK(r1.witness == r3.witness);
    CHECK(r1.value == r8.value);
    CHECK(r1.witness == r8.witness);
}

TEST_CASE("exact mode size cutoff") {
    Group c30(GroupDescriptor::cyclic(30));
    auto g = build_cayley(c30, ints(c30, {1, 29}));
    CHECK_THROWS_AS(cheeger(g, CheegerMode::Exact), TooLargeForExact);
    // heuristic still runs and upper-bounds the true value 2/15
    auto r = cheeger(g, CheegerMode::Heuristic, 1, 11, 500);
    CHECK(r.value >= make_ratio(2, 15));
    auto b = vertex_boundary(g, r.witness);
    CHECK(make_ratio(b.size(), r.witness.size()) == r.value);
    CHECK(2 * r.witness.size() <= g.size());
}

TEST_CASE("heuristic upper bound brackets the exact value") {
    for (std::int64_t n : {6, 10, 16, 20}) {
        auto g = cycle_graph(n);
        auto ex = cheeger(g, CheegerMode::Exact, 2);
        auto he = cheeger(g, CheegerMode::Heuristic, 1, 42, 500);
        CHECK(he.value >= ex.value);
    }
}

TEST_CASE("sl2 growth probe emits exploratory rows") {
    auto rows = sl2_growth_probe(3, 8, 42, 0.05);
    REQUIRE(rows.size() == 8);
    for (const auto& r : rows) {
        CHECK(r.p == 3);
        CHECK(r.set_size >= 2);
        CHECK(r.cube_size >= r.set_size);
        CHECK(r.exponent >= 1.0);
        CHECK((r.branch == "growth" || r.branch == "large"));
    }
    // deterministic across runs
    auto again = sl2_growth_probe(3, 8, 42, 0.05);
    for (std::size_t i = 0; i < rows.size(); ++i)
        CHECK(probe_csv_row(rows[i]) == probe_csv_row(again[i]));

    CHECK(probe_csv_header() == "trial,seed,p,set_size,cube_size,exponent,density,branch");
    CHECK_THROWS_AS(sl2_growth_probe(4, 1, 1, 0.1), InvalidDescriptor);
    CHECK_THROWS_AS(sl2_growth_probe(11, 1, 1, 0.1), InvalidDescriptor);
}

TEST_CASE("probe on the full group lands in the large branch") {
    Group g(GroupDescriptor::sl2(3));
    ElementSet full(g, g.elements());
    ElementSet cube = power(full, 3);
    CHECK(cube.size() == full.size()); // A = G: no growth possible
}
