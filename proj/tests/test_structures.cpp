#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "approxlab/structures.hpp"

using namespace approxlab;

namespace {

ElementSet ints(const Group& g, std::initializer_list<std::int64_t> xs) {
    std::vector<GroupElement> v;
    for (auto x : xs) v.push_back(GroupElement{{x}});
    return ElementSet(g, std::move(v));
}

} // namespace

TEST_CASE("progression P(9,2;2,1) expands to the 15 known elements") {
    Group z(GroupDescriptor::int_lattice(1));
    auto spec = StructuredSpec::progression(z, {GroupElement{{9}}, GroupElement{{2}}}, {2, 1});
    ElementSet p = expand(spec);
    ElementSet expected = ints(z, {-20, -18, -16, -11, -9, -7, -2, 0, 2, 7, 9, 11, 16, 18, 20});
    CHECK(p == expected);
    CHECK(p.is_symmetric());
    CHECK(p.contains_identity());
}

TEST_CASE("box expansion and doubling bound") {
    ElementSet b = expand(StructuredSpec::box({2, 1}));
    CHECK(b.size() == 15);
    ElementSet bb = product(b, b);
    CHECK(bb.size() == 45);
    CHECK(bb.size() <= 4 * b.size()); // 2^d with d = 2
}

TEST_CASE("box cardinality formula") {
    CHECK(expand(StructuredSpec::box({3})).size() == 7);
    CHECK(expand(StructuredSpec::box({1, 1, 1})).size() == 27);
    CHECK(expand(StructuredSpec::box({0, 0})).size() == 1);
}

TEST_CASE("box corner cover") {
    // d = 1: X = {-3, 3}
    ElementSet x1 = box_corner_cover({3});
    Group z(GroupDescriptor::int_lattice(1));
    CHECK(x1 == ints(z, {-3, 3}));
    ElementSet b1 = expand(StructuredSpec::box({3}));
    ElementSet lhs1 = product(b1, b1);
    ElementSet rhs1 = product(b1, x1);
    for (const auto& e : lhs1.members()) CHECK(rhs1.contains(e));

    // d = 2, L = (2,1): |X| = 4 and B+B ⊆ B+X, checked exhaustively
    ElementSet x2 = box_corner_cover({2, 1});
    CHECK(x2.size() == 4);
    ElementSet b2 = expand(StructuredSpec::box({2, 1}));
    ElementSet lhs2 = product(b2, b2);
    ElementSet rhs2 = product(b2, x2);
    for (const auto& e : lhs2.members()) CHECK(rhs2.contains(e));

    // degenerate L = 0 corner collapses to the origin
    ElementSet x0 = box_corner_cover({0});
    CHECK(x0.size() == 1);
    CHECK(x0.members()[0] == z.identity());
}

TEST_CASE("heisenberg Q cardinalities") {
    Group h(GroupDescriptor::heisenberg_z());
    CHECK(expand(StructuredSpec::heisenberg_q(h, 1, 1)).size() == 27);
    CHECK(expand(StructuredSpec::heisenberg_q(h, 0, 0)).size() == 1);
    // as-printed mode bounds the (2,3) entry by L1, symmetric mode by L2
    CHECK(expand(StructuredSpec::heisenberg_q(h, 2, 1, QL2Mode::AsPrinted)).size() ==
          5 * 5 * 5);
    CHECK(expand(StructuredSpec::heisenberg_q(h, 2, 1, QL2Mode::Symmetric)).size() ==
          5 * 3 * 5);
}

TEST_CASE("nilprogression at minimal bounds") {
    Group h(GroupDescriptor::heisenberg_z());
    GroupElement x1{{0, 1, 0}}, x2{{1, 0, 0}};
    ElementSet n = expand(StructuredSpec::nilprogression(h, {x1, x2}, {1, 1}));
    CHECK(n.contains(h.identity()));
    CHECK(n.contains(x1));
    CHECK(n.contains(h.invert(x1)));
    CHECK(n.contains(x2));
    CHECK(n.contains(h.invert(x2)));
    CHECK(n.contains(h.multiply(x1, x2)));
    CHECK(n.contains(h.multiply(x2, x1)));
    CHECK(n.is_symmetric());
}

TEST_CASE("nilprogression in an abelian context matches the progression") {
    Group z2(GroupDescriptor::int_lattice(2));
    std::vector<GroupElement> gens = {GroupElement{{3, 1}}, GroupElement{{0, 2}}};
    ElementSet a = expand(StructuredSpec::nilprogression(z2, gens, {2, 2}));
    ElementSet b = expand(StructuredSpec::progression(z2, gens, {2, 2}));
    CHECK(a == b);
}

TEST_CASE("coset progression expansion") {
    Group c12(GroupDescriptor::cyclic(12));
    auto spec = StructuredSpec::coset_progression(c12, {GroupElement{{6}}},
                                                  {GroupElement{{1}}}, {1});
    ElementSet s = expand(spec);
    // {0,6} + {-1,0,1}
    CHECK(s == ints(c12, {0, 1, 5, 6, 7, 11}));
}

TEST_CASE("freiman coset detector") {
    Group c10(GroupDescriptor::cyclic(10));
    ElementSet odds = ints(c10, {1, 3, 5, 7, 9});
    ElementSet a2 = product(odds, odds);
    CHECK(2 * a2.size() < 3 * odds.size());
    auto res = freiman_coset_check(odds);
    CHECK(res.is_coset);
    REQUIRE(res.subgroup.has_value());
    CHECK(*res.subgroup == ints(c10, {0, 2, 4, 6, 8}));

    ElementSet sub = ints(c10, {0, 5});
    auto res2 = freiman_coset_check(sub);
    CHECK(res2.is_coset);
    CHECK(*res2.subgroup == sub);

    Group z(GroupDescriptor::int_lattice(1));
    auto res3 = freiman_coset_check(ints(z, {0, 1, 5}));
    CHECK(!res3.is_coset);
}

TEST_CASE("nilprogression sandwich") {
    for (std::int64_t l1 = 0; l1 <= 2; ++l1)
        for (std::int64_t l2 = 0; l2 <= 1; ++l2) {
            auto res = nilprog_sandwich_check(l1, l2);
            INFO("L = (", l1, ",", l2, ")");
            CHECK(res.ok);
        }
}

TEST_CASE("lower central series") {
    Group h5(GroupDescriptor::heisenberg_mod(5));
    ElementSet gens(h5, {GroupElement{{1, 0, 0}}, GroupElement{{0, 1, 0}}});
    auto series = lower_central_series(h5, gens, 5);
    REQUIRE(series.size() >= 3);
    CHECK(series[0].size() == 125);
    CHECK(series[1].size() == 5);  // the center
    CHECK(series[2].size() == 1);  // 2-step nilpotent

    Group m32(GroupDescriptor::mod_lattice(3, 2));
    ElementSet g2(m32, {GroupElement{{1, 0}}, GroupElement{{0, 1}}});
    auto abelian = lower_central_series(m32, g2, 4);
    REQUIRE(abelian.size() >= 2);
    CHECK(abelian[1].size() == 1); // step 1

    Group sl5(GroupDescriptor::sl2(5));
    ElementSet u(sl5, {GroupElement{{1, 1, 0, 1}}, GroupElement{{1, 0, 1, 1}}});
    auto notnil = lower_central_series(sl5, u, 4);
    CHECK(notnil.back().size() > 1); // SL2(5) is not nilpotent
}

TEST_CASE("expansion respects the budget") {
    Group h(GroupDescriptor::heisenberg_z());
    CHECK_THROWS_AS(expand(StructuredSpec::heisenberg_q(h, 4, 4), 10), BudgetExceeded);
    CHECK_THROWS_AS(expand(StructuredSpec::box({100, 100, 100}), 1000), BudgetExceeded);
}
