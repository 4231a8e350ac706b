#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "approxlab/group.hpp"
#include "approxlab/laws.hpp"

using namespace approxlab;

namespace {

std::vector<GroupElement> sample_elements(const Group& g, std::uint64_t seed, int n) {
    // random_symmetric_set gives canonical elements of every family
    std::vector<GroupElement> out;
    for (int i = 0; i < n; ++i) {
        auto s = random_symmetric_set(seed + static_cast<std::uint64_t>(i), g, 2, 20);
        for (const auto& e : s.members()) out.push_back(e);
    }
    return out;
}

} // namespace

TEST_CASE("descriptor construction and orders") {
    Group c10(GroupDescriptor::cyclic(10));
    CHECK(c10.order() == 10);
    CHECK(c10.is_abelian());

    Group sl3(GroupDescriptor::sl2(3));
    CHECK(sl3.order() == 24);
    CHECK(sl3.elements().size() == 24); // exhaustive det-1 enumeration cross-check
    CHECK(!sl3.is_abelian());

    CHECK_THROWS_AS(GroupDescriptor::sl2(4), InvalidDescriptor);
    CHECK_THROWS_AS(GroupDescriptor::int_lattice(5), InvalidDescriptor);
    CHECK_THROWS_AS(GroupDescriptor::int_lattice(0), InvalidDescriptor);
    CHECK_THROWS_AS(GroupDescriptor::heisenberg_mod(6), InvalidDescriptor);

    CHECK(GroupDescriptor::int_lattice(2).name() == "Z^2");
    CHECK(GroupDescriptor::cyclic(10).name() == "Z/10");
    CHECK(GroupDescriptor::mod_lattice(5, 3).name() == "(Z/5)^3");
    CHECK(GroupDescriptor::heisenberg_z().name() == "H(Z)");
    CHECK(GroupDescriptor::heisenberg_mod(7).name() == "H(7)");
    CHECK(GroupDescriptor::sl2(7).name() == "SL2(7)");
    CHECK(GroupDescriptor::free_product(4).name() == "C4*Z");
}

TEST_CASE("heisenberg multiplication oracle") {
    Group h(GroupDescriptor::heisenberg_z());
    GroupElement a{{1, 0, 0}}, b{{0, 1, 0}};
    CHECK(h.multiply(a, b) == GroupElement{{1, 1, 1}});
    CHECK(h.multiply(b, a) == GroupElement{{1, 1, 0}}); // noncommutative
    CHECK(h.invert(GroupElement{{1, 1, 1}}) == GroupElement{{-1, -1, 0}});
    CHECK(h.multiply(GroupElement{{1, 1, 1}}, h.invert(GroupElement{{1, 1, 1}})) == h.identity());
}

TEST_CASE("inverse examples") {
    Group c10(GroupDescriptor::cyclic(10));
    CHECK(c10.invert(GroupElement{{3}}) == GroupElement{{7}});

    Group sl5(GroupDescriptor::sl2(5));
    CHECK(sl5.invert(GroupElement{{1, 1, 0, 1}}) == GroupElement{{1, 4, 0, 1}});
}

TEST_CASE("group laws on seeded random triples, every family") {
    std::vector<GroupDescriptor> descs = {
        GroupDescriptor::int_lattice(3),     GroupDescriptor::mod_lattice(6, 2),
        GroupDescriptor::cyclic(12),         GroupDescriptor::heisenberg_z(),
        GroupDescriptor::heisenberg_mod(5),  GroupDescriptor::sl2(5),
        GroupDescriptor::free_product(4)};
    for (const auto& d : descs) {
        Group g(d);
        auto elems = sample_elements(g, 7, 40);
        REQUIRE(elems.size() >= 3);
        std::mt19937_64 rng(11);
        std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
        for (int t = 0; t < 1000; ++t) {
            const auto& a = elems[pick(rng)];
            const auto& b = elems[pick(rng)];
            const auto& c = elems[pick(rng)];
            CHECK(g.multiply(g.multiply(a, b), c) == g.multiply(a, g.multiply(b, c)));
            CHECK(g.multiply(a, g.identity()) == a);
            CHECK(g.multiply(g.identity(), a) == a);
            CHECK(g.multiply(a, g.invert(a)) == g.identity());
        }
    }
}

TEST_CASE("sl2 determinant preserved") {
    Group g(GroupDescriptor::sl2(7));
    auto det = [&](const GroupElement& e) {
        std::int64_t d = e.data[0] * e.data[3] - e.data[1] * e.data[2];
        return ((d % 7) + 7) % 7;
    };
    auto elems = sample_elements(g, 3, 30);
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
    for (int t = 0; t < 500; ++t) {
        const auto& a = elems[pick(rng)];
        const auto& b = elems[pick(rng)];
        CHECK(det(g.multiply(a, b)) == 1);
        CHECK(det(g.invert(a)) == 1);
    }
}

TEST_CASE("free product reduction is confluent") {
    Group g(GroupDescriptor::free_product(4));
    auto elems = sample_elements(g, 13, 40);
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
    for (int t = 0; t < 500; ++t) {
        const auto& a = elems[pick(rng)];
        const auto& b = elems[pick(rng)];
        const auto& c = elems[pick(rng)];
        const auto& d = elems[pick(rng)];
        auto left = g.multiply(g.multiply(g.multiply(a, b), c), d);
        auto right = g.multiply(a, g.multiply(b, g.multiply(c, d)));
        auto mid = g.multiply(g.multiply(a, b), g.multiply(c, d));
        CHECK(left == right);
        CHECK(left == mid);
    }
    // torsion letter has order 4
    GroupElement h1 = g.parse_element("h^1");
    GroupElement acc = g.identity();
    for (int i = 0; i < 4; ++i) acc = g.multiply(acc, h1);
    CHECK(acc == g.identity());
}

TEST_CASE("homomorphism examples") {
    Group z2(GroupDescriptor::int_lattice(2));
    auto pi = Homomorphism::coordinate_projection(z2, {0, 1}, {9, 2});
    CHECK(pi.apply(GroupElement{{1, 0}}) == GroupElement{{9}});
    CHECK(pi.apply(GroupElement{{0, 1}}) == GroupElement{{2}});
    CHECK(pi.apply(GroupElement{{2, 1}}) == GroupElement{{20}});

    Group h(GroupDescriptor::heisenberg_z());
    auto ab = Homomorphism::heisenberg_abelianization(h);
    CHECK(ab.apply(GroupElement{{1, 2, 5}}) == GroupElement{{1, 2}});

    Group z(GroupDescriptor::int_lattice(1));
    auto par = Homomorphism::mod_reduction(z, 2);
    CHECK(par.apply(GroupElement{{7}}) == GroupElement{{1}});
}

TEST_CASE("homomorphisms respect products on seeded random pairs") {
    struct Case {
        Group src;
        Homomorphism h;
    };
    Group z2(GroupDescriptor::int_lattice(2));
    Group z(GroupDescriptor::int_lattice(1));
    Group hz(GroupDescriptor::heisenberg_z());
    std::vector<Case> cases = {
        {z2, Homomorphism::coordinate_projection(z2, {0})},
        {z2, Homomorphism::coordinate_projection(z2, {0, 1}, {9, 2})},
        {z, Homomorphism::mod_reduction(z, 5)},
        {hz, Homomorphism::heisenberg_abelianization(hz)},
        {hz, Homomorphism::mod_reduction(hz, 7)},
    };
    for (auto& c : cases) {
        CHECK(c.h.apply(c.src.identity()) == c.h.target().identity());
        auto elems = sample_elements(c.src, 23, 40);
        std::mt19937_64 rng(29);
        std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
        for (int t = 0; t < 1000; ++t) {
            const auto& a = elems[pick(rng)];
            const auto& b = elems[pick(rng)];
            CHECK(c.h.apply(c.src.multiply(a, b)) ==
                  c.h.target().multiply(c.h.apply(a), c.h.apply(b)));
        }
    }
}

TEST_CASE("element text round trips") {
    Group z3(GroupDescriptor::int_lattice(3));
    GroupElement e{{4, -2, 0}};
    CHECK(z3.parse_element(z3.format_element(e)) == e);
    CHECK(z3.format_element(e) == "4,-2,0");

    Group fp(GroupDescriptor::free_product(4));
    GroupElement w = fp.parse_element("h^2.t^-3.h^1");
    CHECK(fp.format_element(w) == "h^2.t^-3.h^1");
    CHECK(fp.format_element(fp.identity()) == "e");
    CHECK(fp.parse_element("e") == fp.identity());

    CHECK_THROWS_AS(z3.parse_element("1,2"), InvalidElement);
    CHECK_THROWS_AS(fp.parse_element("x^2"), ParseError);
}

TEST_CASE("canonicalize and validate") {
    Group c10(GroupDescriptor::cyclic(10));
    CHECK(c10.canonicalize(GroupElement{{-3}}) == GroupElement{{7}});
    CHECK_THROWS_AS(c10.validate(GroupElement{{10}}), InvalidElement);
    CHECK_THROWS_AS(c10.validate(GroupElement{{1, 2}}), InvalidElement);

    Group sl(GroupDescriptor::sl2(5));
    CHECK_THROWS_AS(sl.validate(GroupElement{{1, 1, 1, 1}}), InvalidElement); // det 0
}

TEST_CASE("checked arithmetic overflows loudly") {
    const std::int64_t big = std::int64_t{1} << 62;
    CHECK_THROWS_AS(checked_add(big, big), OverflowError);
    CHECK_THROWS_AS(checked_mul(big, 4), OverflowError);
    Group z(GroupDescriptor::int_lattice(1));
    CHECK_THROWS_AS(z.multiply(GroupElement{{big}}, GroupElement{{big}}), OverflowError);
}
