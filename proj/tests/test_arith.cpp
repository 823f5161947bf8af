#include <doctest.h>

#include <numeric>
#include <random>

#include "piclass/arith.hpp"
#include "piclass/errors.hpp"

using namespace piclass;

TEST_SUITE("arith") {

TEST_CASE("factorize on small inputs") {
    CHECK(factorize(1).empty());
    CHECK(factorize(24) == std::map<long long, long long>{{2, 3}, {3, 1}});
    CHECK(factorize(18) == std::map<long long, long long>{{2, 1}, {3, 2}});
    CHECK(factorize(97) == std::map<long long, long long>{{97, 1}});
}

TEST_CASE("factorize rejects nonpositive input") {
    CHECK_THROWS_AS(factorize(0), Error);
    CHECK_THROWS_AS(factorize(-6), Error);
}

TEST_CASE("factorize reconstructs its argument") {
    std::mt19937 rng(20240901);
    std::uniform_int_distribution<long long> dist(1, 1000000);
    for (int i = 0; i < 2000; ++i) {
        long long n = dist(rng);
        long long product = 1;
        for (const auto& [p, e] : factorize(n)) {
            CHECK(is_prime(p));
            for (long long k = 0; k < e; ++k) product *= p;
        }
        CHECK(product == n);
    }
}

TEST_CASE("part examples") {
    CHECK(part(18, PrimeSet::single(3)) == 9);
    CHECK(part(123456, PrimeSet::all()) == 123456);
    CHECK(part(24, PrimeSet::finite({2, 3}).complement()) == 1);
    CHECK(part(1, PrimeSet::single(2)) == 1);
}

TEST_CASE("is_p_number examples") {
    CHECK(is_p_number(1, PrimeSet::finite({})));
    CHECK(is_p_number(1, PrimeSet::single(7)));
    CHECK(is_p_number(6, PrimeSet::single(5).complement()));
    CHECK_FALSE(is_p_number(6, PrimeSet::single(3)));
    // Cross-check against the direct factorization route.
    for (long long n = 1; n <= 500; ++n) {
        bool direct = true;
        for (const auto& [p, e] : factorize(n)) {
            if (!PrimeSet::finite({2, 3}).contains(p)) direct = false;
        }
        CHECK(is_p_number(n, PrimeSet::finite({2, 3})) == direct);
    }
}

TEST_CASE("part splits n against the complement") {
    const PrimeSet sets[] = {PrimeSet::single(2), PrimeSet::finite({2, 3}),
                             PrimeSet::single(5).complement(), PrimeSet::finite({3, 7})};
    for (const PrimeSet& p : sets) {
        for (long long n = 1; n <= 20000; ++n) {
            CHECK(part(n, p) * part(n, p.complement()) == n);
        }
    }
    std::mt19937 rng(42);
    std::uniform_int_distribution<long long> dist(20001, 1000000);
    for (const PrimeSet& p : sets) {
        for (int i = 0; i < 3000; ++i) {
            long long n = dist(rng);
            CHECK(part(n, p) * part(n, p.complement()) == n);
        }
    }
}

TEST_CASE("part is multiplicative on coprime arguments") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long long> dist(1, 30000);
    const PrimeSet p = PrimeSet::finite({2, 5});
    int tested = 0;
    while (tested < 2000) {
        long long a = dist(rng), b = dist(rng);
        if (std::gcd(a, b) != 1) continue;
        ++tested;
        CHECK(part(a * b, p) == part(a, p) * part(b, p));
    }
}

TEST_CASE("prime set membership and complement") {
    PrimeSet evens_out = PrimeSet::single(2).complement();
    CHECK_FALSE(evens_out.contains(2));
    CHECK(evens_out.contains(3));
    CHECK(evens_out.contains(97));
    CHECK(evens_out.complement() == PrimeSet::single(2));

    PrimeSet all = PrimeSet::all();
    CHECK(all.contains(2));
    CHECK(all.contains(101));

    CHECK_THROWS_AS(PrimeSet::finite({4}), Error);
    CHECK_THROWS_AS(PrimeSet::finite({1}), Error);
}

TEST_CASE("prime set textual syntax") {
    CHECK(PrimeSet::parse("{2,3}") == PrimeSet::finite({2, 3}));
    CHECK(PrimeSet::parse("{2}'") == PrimeSet::single(2).complement());
    CHECK(PrimeSet::parse("*") == PrimeSet::all());
    CHECK(PrimeSet::parse("{}") == PrimeSet::finite({}));
    CHECK(PrimeSet::parse(" { 2 , 3 } ") == PrimeSet::finite({2, 3}));
    CHECK(PrimeSet::parse("{3,2,2}") == PrimeSet::finite({2, 3}));

    CHECK(PrimeSet::finite({2, 3}).to_string() == "{2,3}");
    CHECK(PrimeSet::single(2).complement().to_string() == "{2}'");
    CHECK(PrimeSet::all().to_string() == "*");
    CHECK(PrimeSet::finite({}).to_string() == "{}");

    const char* bad[] = {"", "{2", "2}", "{4}", "{2,}", "{2}x", "**", "{a}"};
    for (const char* text : bad) CHECK_THROWS_AS(PrimeSet::parse(text), ParseError);

    // to_string/parse round-trip.
    const PrimeSet sets[] = {PrimeSet::finite({}), PrimeSet::single(7), PrimeSet::finite({2, 3, 5}),
                             PrimeSet::all(), PrimeSet::finite({3, 11}).complement()};
    for (const PrimeSet& p : sets) CHECK(PrimeSet::parse(p.to_string()) == p);
}

}  // TEST_SUITE
