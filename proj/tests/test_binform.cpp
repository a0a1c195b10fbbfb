#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"

#include <algorithm>

using namespace humbert;

TEST_CASE("reduce yields a reduced equivalent form")
{
    oracle::Rng rng(21);
    for (int i = 0; i < 1000; ++i) {
        BinaryQF q = rng.positive_binary(60);
        Reduction r = reduce(q);
        CHECK(oracle::binary_reduced(r.reduced));
        CHECK(abs(det(r.transform)) == 1);
        CHECK(transform(q, r.transform) == r.reduced);
    }
    CHECK_THROWS_AS(reduce({1, 0, -1}), Error);
}

TEST_CASE("reduced forms match enumeration and are pairwise inequivalent")
{
    for (long D = -3; D >= -160; --D) {
        if (((D % 4) + 4) % 4 > 1) continue;
        auto all = oracle::reduced_binary(D);
        std::vector<BinaryQF> primitive;
        for (const auto& q : all)
            if (q.content() == 1) primitive.push_back(q);
        auto mine = reduced_forms_of_disc(D, 1);
        std::sort(primitive.begin(), primitive.end());
        CHECK(mine == primitive);
        for (size_t i = 0; i < all.size(); ++i)
            for (size_t j = i + 1; j < all.size(); ++j)
                CHECK(equivalent(all[i], all[j]) == oracle::gl2_equivalent(all[i], all[j], 6));
    }
    CHECK(reduced_forms_of_disc(-23, 1).size() == 3);
    CHECK(reduced_forms_of_disc(-20, 1).size() == 2);
    CHECK(reduced_forms_of_disc(-4, 1).size() == 1);
}

TEST_CASE("equivalent recognises disguised forms")
{
    oracle::Rng rng(22);
    for (int i = 0; i < 300; ++i) {
        BinaryQF q = rng.positive_binary(30);
        BinaryQF h = transform(q, rng.unimodular2());
        CHECK(equivalent(q, h));
    }
    CHECK(!equivalent({1, 0, 5}, {2, 2, 3}));
    CHECK(equivalent({2, 2, 3}, {2, -2, 3}));
}

TEST_CASE("represent_coprime")
{
    oracle::Rng rng(23);
    for (int i = 0; i < 300; ++i) {
        BinaryQF q = rng.positive_binary(40);
        if (q.content() != 1) continue;
        Int n = rng.uniform(1, 5000);
        BinaryValue v = represent_coprime(q, n);
        CHECK(gcd(v.x, v.y) == 1);
        CHECK(gcd(v.value, n) == 1);
        CHECK(q(v.x, v.y) == v.value);
    }
}

TEST_CASE("character values are constant on coprime represented numbers")
{
    oracle::Rng rng(24);
    for (int i = 0; i < 200; ++i) {
        BinaryQF q = rng.positive_binary(25);
        if (q.content() != 1) continue;
        auto vals = character_values(q);
        for (long x = -8; x <= 8; ++x)
            for (long y = -8; y <= 8; ++y) {
                Int n = q(x, y);
                if (n == 0 || gcd(n, 2 * q.disc()) != 1) continue;
                for (const auto& [chi, e] : vals) CHECK(eval_character(chi, n) == e);
            }
    }
}

TEST_CASE("genus characters on known discriminants")
{
    auto names = [](const BinaryQF& q) {
        std::vector<std::string> out;
        for (const auto& c : character_set(q)) out.push_back(c.name());
        return out;
    };
    CHECK(names({1, 0, 30}) == std::vector<std::string>{"chi_3", "chi_5", "chi_8"});
    CHECK(names({1, 0, 5}) == std::vector<std::string>{"chi_5", "chi_-4"});
    CHECK(names({1, 1, 6}) == std::vector<std::string>{"chi_23"});
    CHECK(in_principal_genus({1, 0, 5}));
    CHECK(!in_principal_genus({2, 2, 3}));
    auto v = character_values({2, 2, 3});
    REQUIRE(v.size() == 2);
    CHECK(v[1].first.name() == "chi_-4");
    CHECK(v[1].second == -1);
}

TEST_CASE("form_representing_prime")
{
    CHECK(form_representing_prime(-296, 11) == BinaryQF{11, 12, 10});
    CHECK(form_representing_prime(-11, 3) == BinaryQF{3, 1, 1});
    CHECK(form_representing_prime(-23, 3) == BinaryQF{3, 1, 2});
    CHECK(form_representing_prime(-15, 23) == BinaryQF{23, 13, 2});
    CHECK(form_representing_prime(-3, 13) == BinaryQF{13, 7, 1});
    CHECK(form_representing_prime(-4, 5) == BinaryQF{5, 6, 2});
    for (long p : oracle::sieve_primes(300)) {
        if (p < 3) continue;
        for (long D = -3; D >= -200; --D) {
            if (((D % 4) + 4) % 4 > 1 || D % p == 0 || jacobi(D, p) != 1) continue;
            BinaryQF q = form_representing_prime(D, p);
            CHECK(q.a == p);
            CHECK(q.disc() == D);
            CHECK(q.b > 0);
        }
    }
    CHECK_THROWS_AS(form_representing_prime(-4, 7), Error);
    CHECK_THROWS_AS(form_representing_prime(-5, 7), Error);
    CHECK_THROWS_AS(form_representing_prime(-3, 9), Error);
}

TEST_CASE("primitive_solutions agrees with a box search")
{
    oracle::Rng rng(25);
    for (int i = 0; i < 100; ++i) {
        BinaryQF q = rng.positive_binary(12);
        Int t = rng.uniform(1, 150);
        auto sols = primitive_solutions(q, t);
        std::vector<std::pair<Int, Int>> box;
        long bx = isqrt(4 * q.c * t / -q.disc()).get_si() + 1, by = isqrt(4 * q.a * t / -q.disc()).get_si() + 1;
        for (long x = -bx; x <= bx; ++x)
            for (long y = -by; y <= by; ++y)
                if (gcd(Int(x), Int(y)) == 1 && q(x, y) == t) box.push_back({x, y});
        CHECK(sols.size() == box.size());
        for (const auto& s : sols) CHECK(std::find(box.begin(), box.end(), s) != box.end());
    }
}

TEST_CASE("q_s and type_d_triple")
{
    CHECK(q_s({2, 50, 3, 11}).disc() == -176);
    CHECK(q_s({2, 50, 3, 11}) == BinaryQF{4, 6732, 2832500});
    PolarizationTriple s = type_d_triple({9, 2, 33}, 74);
    CHECK(s == PolarizationTriple{3, 1209, 7, 74});
    CHECK(equivalent(q_s(s), {9, 2, 33}));
    CHECK_THROWS_AS(type_d_triple({1, 0, 5}, 74), Error);
    CHECK_THROWS_AS(q_s({1, 1, 1, 5}), Error);
}

TEST_CASE("prime_represented_binary")
{
    BinaryPrime bp = prime_represented_binary({11, 12, 10}, 1, 1000);
    CHECK(is_prime(bp.p));
    CHECK(BinaryQF{11, 12, 10}(bp.x, bp.y) == bp.p);
    CHECK(bp.p == 11);
    CHECK(prime_represented_binary({1, 0, 1}, 1, 1000).p == 2);
    CHECK(prime_represented_binary({3, 1, 1}, 22, 1000).p == 3);
    CHECK(prime_represented_binary({1, 1, 2}, 14, 1000).p == 11);
    CHECK(prime_represented_binary({2, 2, 6}, 1, 1000).p == 3);
    oracle::Rng rng(26);
    for (int i = 0; i < 200; ++i) {
        BinaryQF q = rng.positive_binary(50);
        if (q.content() != 1) continue;
        Int avoid = rng.uniform(1, 1000);
        BinaryPrime r = prime_represented_binary(q, avoid, 1000000);
        CHECK(is_prime(r.p));
        CHECK(gcd(r.p, avoid) == 1);
        CHECK(q(r.x, r.y) == r.p);
        // nothing smaller qualifies
        for (long x = -12; x <= 12; ++x)
            for (long y = -12; y <= 12; ++y) {
                Int v = q(x, y);
                if (gcd(Int(x), Int(y)) == 1 && v < r.p && is_prime(v)) CHECK(gcd(v, avoid) != 1);
            }
    }
    try {
        prime_represented_binary({1, 0, 1}, 2, 1);
        FAIL("expected exhaustion");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::search_exhausted);
    }
}
