#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "piclass/errors.hpp"
#include "piclass/parse.hpp"
#include "piclass/structure.hpp"

using namespace piclass;

namespace {

Permutation cycle(int degree, std::initializer_list<int> points) {
    std::vector<int> images(degree);
    for (int i = 0; i < degree; ++i) images[i] = i;
    auto it = points.begin();
    for (std::size_t i = 0; i + 1 < points.size(); ++i) {
        int from = *it++;
        images[from] = *it;
    }
    if (points.size() > 1) images[*it] = *points.begin();
    return Permutation(std::move(images));
}

std::multiset<long long> class_size_multiset(const PermGroup& g) {
    std::multiset<long long> sizes;
    for (const ConjugacyClass& cls : conjugacy_classes(g)) sizes.insert(cls.size);
    return sizes;
}

}  // namespace

TEST_SUITE("group-core") {

TEST_CASE("permutation basics") {
    Permutation id(4);
    CHECK(id.is_identity());
    CHECK(element_order(id) == 1);

    Permutation five_cycle = cycle(5, {0, 1, 2, 3, 4});
    CHECK(element_order(five_cycle) == 5);
    CHECK(five_cycle * five_cycle.inverse() == Permutation(5));

    Permutation mixed = cycle(5, {0, 1}) * cycle(5, {2, 3, 4});
    CHECK(element_order(mixed) == 6);  // lcm of the cycle lengths
    CHECK(mixed.cycle_string() == "(0 1)(2 3 4)");
    CHECK(Permutation(3).cycle_string() == "()");

    CHECK_THROWS_AS(Permutation(std::vector<int>{0, 0, 1}), Error);
    CHECK_THROWS_AS(Permutation(std::vector<int>{0, 3}), Error);
}

TEST_CASE("enumerate stock groups") {
    CHECK(symmetric_group(3).order() == 6);
    CHECK(PermGroup("trivial", 3, {Permutation(3)}).order() == 1);
    CHECK(cyclic_group(12).order() == 12);
    CHECK(dihedral_group(10).order() == 10);
    CHECK(dihedral_group(4).order() == 4);
    CHECK(dihedral_group(2).order() == 2);
    CHECK(alternating_group(4).order() == 12);
    CHECK(alternating_group(5).order() == 60);
    CHECK(symmetric_group(5).order() == 120);
    CHECK(quaternion_group().order() == 8);
}

TEST_CASE("SL(2,3) closure matches the brute-force route") {
    PermGroup sl23 = special_linear_2_3();
    CHECK(sl23.order() == 24);
    CHECK(sl23.elements() == testing::brute_closure(sl23.degree(), sl23.generators()));
}

TEST_CASE("Q8 has a unique involution") {
    // This pins the quaternion construction apart from the dihedral group
    // of order 8, which has five involutions.
    int involutions = 0;
    for (const Permutation& x : quaternion_group().elements()) {
        if (element_order(x) == 2) ++involutions;
    }
    CHECK(involutions == 1);
}

TEST_CASE("enumeration is idempotent and deterministic") {
    PermGroup a = symmetric_group(4);
    PermGroup b = symmetric_group(4);
    CHECK(a.elements() == b.elements());
    CHECK(a.elements() == a.elements());
}

TEST_CASE("enumeration respects the cap") {
    CHECK_THROWS_AS(symmetric_group(5, 10).elements(), CapExceeded);
    try {
        symmetric_group(5, 10).elements();
    } catch (const CapExceeded& e) {
        CHECK(e.cap == 10);
    }
    CHECK(symmetric_group(5, 120).order() == 120);  // cap is inclusive
}

TEST_CASE("direct products") {
    PermGroup g = direct_product(cyclic_group(3), dihedral_group(10));
    CHECK(g.order() == 30);
    CHECK(g.degree() == 8);
    CHECK(g.label() == "C(3)xD(10)");
    REQUIRE(g.left_factor() != nullptr);
    CHECK(g.left_factor()->order() == 3);
    CHECK(g.right_factor()->order() == 10);

    CHECK(direct_product(cyclic_group(5), symmetric_group(3)).order() == 30);

    // The embedded copies act on disjoint points.
    for (const Permutation& x : g.left_factor()->generators()) CHECK(x.degree() == 3);
    for (const Permutation& gen : g.generators()) {
        bool left_moves = false, right_moves = false;
        for (int i = 0; i < 3; ++i) left_moves |= gen[i] != i;
        for (int i = 3; i < 8; ++i) right_moves |= gen[i] != i;
        CHECK_FALSE((left_moves && right_moves));
    }

    PermGroup trivial_times_b = direct_product(cyclic_group(1), symmetric_group(3));
    CHECK(trivial_times_b.order() == 6);
    CHECK(class_size_multiset(trivial_times_b) == class_size_multiset(symmetric_group(3)));

    CHECK_THROWS_AS(direct_product(symmetric_group(5, 300), symmetric_group(5, 300)), CapExceeded);
}

TEST_CASE("named_group parses the stock names") {
    CHECK(named_group("S(3)").order() == 6);
    CHECK(named_group("A(4)").order() == 12);
    CHECK(named_group("Q8").order() == 8);
    CHECK(named_group("D(20)").order() == 20);
    CHECK(named_group("C(1)").order() == 1);

    PermGroup sl23 = named_group("SL(2,3)");
    CHECK(sl23.order() == 24);
    CHECK(centre(sl23).size() == 2);

    PermGroup g = named_group("C(3)xD(10)");
    CHECK(g.order() == 30);
    CHECK(centre(g) == testing::brute_centre(g));
    CHECK(centre(g).size() == 3);

    CHECK(named_group(" C(2) x C(3) x C(5) ").order() == 30);
    CHECK(named_group("C(2)xC(3)").label() == "C(2)xC(3)");
}

TEST_CASE("named_group parses raw generators") {
    PermGroup d10 = named_group("perm[5]((0 1 2 3 4); (1 4)(2 3))");
    CHECK(d10.order() == 10);
    CHECK(class_size_multiset(d10) == class_size_multiset(dihedral_group(10)));

    CHECK(named_group("perm[3](())").order() == 1);
    CHECK(named_group("perm[4]((0,1)(2,3))").order() == 2);
}

TEST_CASE("named_group reports errors") {
    CHECK_THROWS_AS(named_group("B(3)"), UnknownName);
    CHECK_THROWS_AS(named_group("SL(2,5)"), ParseError);
    CHECK_THROWS_AS(named_group("C(3)x"), ParseError);
    CHECK_THROWS_AS(named_group("C(3))"), ParseError);
    CHECK_THROWS_AS(named_group("D(7)"), ParseError);
    CHECK_THROWS_AS(named_group("C()"), ParseError);
    CHECK_THROWS_AS(named_group("perm[3]((5))"), ParseError);
    CHECK_THROWS_AS(named_group("perm[3]((0 1)(1 2))"), ParseError);
    CHECK_THROWS_AS(named_group(""), ParseError);

    bool threw = false;
    try {
        named_group("C(3)!");
    } catch (const ParseError& e) {
        threw = true;
        CHECK(e.position == 4);
    }
    CHECK(threw);
}

TEST_CASE("closure is a group") {
    std::mt19937 rng(99);
    for (const char* spec : {"S(4)", "SL(2,3)", "C(3)xD(10)", "Q8xC(3)"}) {
        PermGroup g = named_group(spec);
        const ElementSet& elements = g.elements();
        std::uniform_int_distribution<std::size_t> pick(0, elements.size() - 1);
        for (int i = 0; i < 200; ++i) {
            const Permutation& x = elements[pick(rng)];
            const Permutation& y = elements[pick(rng)];
            CHECK(set_contains(elements, x * y.inverse()));
        }
        for (const Permutation& gen : g.generators()) CHECK(g.contains(gen));
        CHECK(g.contains(g.identity()));
    }
}

TEST_CASE("order divides the ambient factorial and element orders divide the order") {
    for (const char* spec : {"S(5)", "A(5)", "D(12)", "SL(2,3)", "C(5)xS(3)"}) {
        PermGroup g = named_group(spec);
        long long ambient = 1;
        for (int i = 2; i <= g.degree(); ++i) ambient *= i;
        CHECK(ambient % g.order() == 0);
        for (const Permutation& x : g.elements()) CHECK(g.order() % element_order(x) == 0);
    }
}

TEST_CASE("corpus files") {
    Corpus corpus = parse_corpus("# comment line\ncap=50\n\nS(3)  # trailing comment\nA(4)\n");
    CHECK(corpus.cap == 50);
    CHECK(corpus.cap_from_header);
    REQUIRE(corpus.entries.size() == 2);
    CHECK(corpus.entries[0].line == 4);
    CHECK(corpus.entries[0].spec == "S(3)");
    CHECK(corpus.entries[1].spec == "A(4)");

    Corpus empty = parse_corpus("# nothing here\n");
    CHECK(empty.entries.empty());
    CHECK_FALSE(empty.cap_from_header);
    CHECK(empty.cap == kDefaultEnumerationCap);

    CHECK_THROWS_AS(parse_corpus("cap=abc\n"), ParseError);
}

}  // TEST_SUITE
