#include <doctest.h>

#include <set>

#include "supergraph/group.hpp"
#include "supergraph/errors.hpp"

using namespace supergraph;

namespace {

// Conjugacy classes as listed for each family, written from the closed
// descriptions rather than computed from the table.
Partition listed_classes(Family f, unsigned n)
{
    const unsigned k = rotation_count(f, n);
    std::vector<ElementSet> blocks;
    std::set<Element> seen;
    auto rotation_pair = [&](unsigned i, unsigned j) {
        ElementSet s{i % k, j % k};
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        if (seen.count(s.front())) return;
        for (Element x : s) seen.insert(x);
        blocks.push_back(s);
    };
    auto reflections = [&](unsigned start, unsigned step) {
        ElementSet s;
        for (unsigned i = start; i < k; i += step) s.push_back(k + i);
        blocks.push_back(s);
    };
    switch (f) {
    case Family::Dihedral:
    case Family::Quaternion:
        for (unsigned i = 0; i < k; ++i) rotation_pair(i, k - i);
        if (f == Family::Dihedral && n % 2 == 1) {
            reflections(0, 1);
        } else {
            reflections(0, 2);
            reflections(1, 2);
        }
        break;
    case Family::Semidihedral:
        for (unsigned i = 0; i < k; ++i) rotation_pair(i, i * (2 * n - 1));
        if (n % 2 == 1) {
            for (unsigned j = 0; j < 4; ++j) reflections(j, 4);
        } else {
            reflections(0, 2);
            reflections(1, 2);
        }
        break;
    case Family::Cyclic:
        for (unsigned i = 0; i < k; ++i) blocks.push_back({i});
        break;
    }
    return Partition(blocks);
}

const std::vector<std::pair<Family, unsigned>> kSmallFamilies = [] {
    std::vector<std::pair<Family, unsigned>> out;
    for (unsigned n = 3; n <= 20; ++n) out.emplace_back(Family::Dihedral, n);
    for (unsigned n = 2; n <= 12; ++n) out.emplace_back(Family::Quaternion, n);
    for (unsigned n = 2; n <= 8; ++n) out.emplace_back(Family::Semidihedral, n);
    for (unsigned n = 1; n <= 12; ++n) out.emplace_back(Family::Cyclic, n);
    return out;
}();

} // namespace

TEST_SUITE("group") {

TEST_CASE("orders and minimum parameters")
{
    CHECK(build_group(Family::Dihedral, 3).order() == 6);
    CHECK(build_group(Family::Quaternion, 2).order() == 8);
    CHECK(build_group(Family::Semidihedral, 2).order() == 16);
    CHECK(build_group(Family::Cyclic, 1).order() == 1);
    CHECK_THROWS_AS(build_group(Family::Dihedral, 2), ParameterOutOfRange);
    CHECK_THROWS_AS(build_group(Family::Quaternion, 1), ParameterOutOfRange);
    CHECK_THROWS_AS(build_group(Family::Semidihedral, 1), ParameterOutOfRange);
    CHECK_THROWS_AS(build_group(Family::Cyclic, 0), ParameterOutOfRange);
    CHECK_THROWS_AS(parse_family("s4"), ParameterOutOfRange);
    CHECK(parse_family("sd8n") == Family::Semidihedral);
}

TEST_CASE("presentation relations")
{
    const GroupTable d6 = build_group(Family::Dihedral, 3);
    const Element a = d6.rotation(1), b = d6.reflection(0);
    CHECK(d6.multiply(d6.multiply(a, a), a) == d6.identity());
    CHECK(d6.multiply(b, a) == d6.multiply(d6.rotation(2), b));

    const GroupTable sd16 = build_group(Family::Semidihedral, 2);
    const Element sa = sd16.rotation(1), sb = sd16.reflection(0);
    CHECK(sd16.multiply(sb, sa) == sd16.multiply(sd16.rotation(3), sb));
    CHECK(sd16.multiply(sb, sb) == sd16.identity());

    const GroupTable q8 = build_group(Family::Quaternion, 2);
    const Element qb = q8.reflection(0);
    CHECK(q8.multiply(qb, qb) == q8.rotation(2));
}

TEST_CASE("labels")
{
    const GroupTable g = build_group(Family::Dihedral, 4);
    CHECK(g.label(0) == "e");
    CHECK(g.label(1) == "a");
    CHECK(g.label(3) == "a^3");
    CHECK(g.label(4) == "b");
    CHECK(g.label(5) == "a*b");
    CHECK(g.label(6) == "a^2*b");
}

TEST_CASE("group axioms hold exhaustively")
{
    for (auto [f, n] : kSmallFamilies) {
        CAPTURE(family_name(f));
        CAPTURE(n);
        CHECK(build_group(f, n).satisfies_axioms());
    }
    // Larger orders, up to N = 400.
    for (auto [f, n] : {std::pair{Family::Dihedral, 200u}, {Family::Quaternion, 100u}, {Family::Semidihedral, 50u}}) {
        CAPTURE(n);
        CHECK(build_group(f, n).satisfies_axioms());
    }
}

TEST_CASE("element orders")
{
    const GroupTable sd16 = build_group(Family::Semidihedral, 2);
    CHECK(element_order(sd16, sd16.reflection(0)) == 2);
    CHECK(element_order(sd16, sd16.identity()) == 1);
    const GroupTable q8 = build_group(Family::Quaternion, 2);
    CHECK(element_order(q8, q8.rotation(1)) == 4);
    for (auto [f, n] : kSmallFamilies) {
        const GroupTable g = build_group(f, n);
        for (Element x = 0; x < g.order(); ++x) CHECK(g.order() % element_order(g, x) == 0);
    }
}

TEST_CASE("centers")
{
    CHECK(center(build_group(Family::Quaternion, 2)) == ElementSet{0, 2});
    CHECK(center(build_group(Family::Semidihedral, 3)) == ElementSet{0, 3, 6, 9});
    CHECK(center(build_group(Family::Cyclic, 5)).size() == 5);
    for (unsigned n = 3; n <= 20; ++n) CHECK(center(build_group(Family::Dihedral, n)).size() == (n % 2 ? 1u : 2u));
    for (unsigned n = 2; n <= 12; ++n) CHECK(center(build_group(Family::Quaternion, n)) == ElementSet{0, n});
    for (unsigned n = 2; n <= 10; ++n)
        CHECK(center(build_group(Family::Semidihedral, n)).size() == (n % 2 ? 4u : 2u));
}

TEST_CASE("conjugacy classes match the listed descriptions")
{
    CHECK(conjugacy_classes(build_group(Family::Dihedral, 3)) == Partition({{0}, {1, 2}, {3, 4, 5}}));
    CHECK(conjugacy_classes(build_group(Family::Quaternion, 2)) ==
          Partition({{0}, {2}, {1, 3}, {5, 7}, {4, 6}}));
    CHECK(conjugacy_classes(build_group(Family::Cyclic, 1)).block_count() == 1);
    for (auto [f, n] : kSmallFamilies) {
        CAPTURE(family_name(f));
        CAPTURE(n);
        const GroupTable g = build_group(f, n);
        const Partition classes = conjugacy_classes(g);
        CHECK(classes == listed_classes(f, n));
        CHECK(classes.block_containing(g.identity()).size() == 1);
        for (const auto& b : classes.blocks()) CHECK(g.order() % b.size() == 0);
        CHECK(classes.refines(order_partition(g)));
    }
}

TEST_CASE("semidihedral reflection classes")
{
    for (unsigned n = 3; n <= 9; n += 2) {
        const GroupTable g = build_group(Family::Semidihedral, n);
        std::size_t reflection_classes = 0;
        const Partition classes = conjugacy_classes(g);
        for (const auto& b : classes.blocks())
            if (!g.is_rotation(b.front())) {
                ++reflection_classes;
                CHECK(b.size() == n);
            }
        CHECK(reflection_classes == 4);
    }
    for (unsigned n = 2; n <= 8; n += 2) {
        const GroupTable g = build_group(Family::Semidihedral, n);
        std::size_t reflection_classes = 0;
        const Partition classes = conjugacy_classes(g);
        for (const auto& b : classes.blocks())
            if (!g.is_rotation(b.front())) {
                ++reflection_classes;
                CHECK(b.size() == 2 * n);
            }
        CHECK(reflection_classes == 2);
    }
}

TEST_CASE("order partition")
{
    CHECK(order_partition(build_group(Family::Dihedral, 3)) == Partition({{0}, {1, 2}, {3, 4, 5}}));
    CHECK(order_partition(build_group(Family::Cyclic, 2)) == Partition({{0}, {1}}));
    CHECK(order_partition(build_group(Family::Quaternion, 2)) == Partition({{0}, {2}, {1, 3, 4, 5, 6, 7}}));
}

TEST_CASE("maximal cyclic subgroups")
{
    const auto d6 = maximal_cyclic_subgroups(build_group(Family::Dihedral, 3));
    CHECK(d6.size() == 4);
    CHECK(std::count(d6.begin(), d6.end(), ElementSet{0, 1, 2}) == 1);

    const auto q8 = maximal_cyclic_subgroups(build_group(Family::Quaternion, 2));
    CHECK(q8.size() == 3);
    for (const auto& m : q8) CHECK(m.size() == 4);

    const auto z4 = maximal_cyclic_subgroups(build_group(Family::Cyclic, 4));
    REQUIRE(z4.size() == 1);
    CHECK(z4.front().size() == 4);

    for (auto [f, n] : kSmallFamilies) {
        const GroupTable g = build_group(f, n);
        const auto maximal = maximal_cyclic_subgroups(g);
        std::set<Element> covered;
        for (const auto& m : maximal) covered.insert(m.begin(), m.end());
        CHECK(covered.size() == g.order());
        for (const auto& m : maximal)
            for (const auto& other : cyclic_subgroups(g))
                if (other != m) CHECK_FALSE(std::includes(other.begin(), other.end(), m.begin(), m.end()));
        if (f == Family::Dihedral || f == Family::Quaternion) CHECK(maximal.size() == 1 + n);
        if (f != Family::Cyclic) {
            ElementSet rotations(rotation_count(f, n));
            for (Element i = 0; i < rotations.size(); ++i) rotations[i] = i;
            CHECK(std::count(maximal.begin(), maximal.end(), rotations) == 1);
        }
    }
}

TEST_CASE("semidihedral decomposition into <a> and reflection subgroups")
{
    for (unsigned n = 2; n <= 8; ++n) {
        const GroupTable g = build_group(Family::Semidihedral, n);
        const auto maximal = maximal_cyclic_subgroups(g);
        // <a> plus subgroups <a^i b>: order 2 for even i, order 4 for odd i.
        std::size_t order2 = 0, order4 = 0;
        for (const auto& m : maximal) {
            if (m.size() == 2) ++order2;
            if (m.size() == 4) ++order4;
        }
        CHECK(order2 == 2 * n);
        CHECK(order4 == n);
        CHECK(maximal.size() == 1 + 3 * n);
    }
}

TEST_CASE("format_set")
{
    const GroupTable q8 = build_group(Family::Quaternion, 2);
    CHECK(format_set(q8, center(q8)) == "{e, a^2}");
}

}
