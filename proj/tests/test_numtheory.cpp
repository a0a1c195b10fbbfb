#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"

using namespace humbert;

TEST_CASE("egcd normalizes sign and satisfies Bezout")
{
    oracle::Rng rng(11);
    for (int i = 0; i < 1000; ++i) {
        Int a = rng.uniform(-100000, 100000), b = rng.uniform(-100000, 100000);
        Egcd e = egcd(a, b);
        CHECK(e.g >= 0);
        CHECK(e.g == gcd(a, b));
        CHECK(a * e.x + b * e.y == e.g);
    }
    CHECK(egcd(0, 0).g == 0);
    CHECK(egcd(0, -7).g == 7);
}

TEST_CASE("crt agrees with enumeration")
{
    oracle::Rng rng(12);
    const long mods[][3] = {{3, 5, 7}, {4, 9, 5}, {8, 3, 11}, {2, 13, 9}};
    for (auto& m : mods) {
        for (int i = 0; i < 50; ++i) {
            std::vector<Int> r{rng.uniform(0, m[0] - 1), rng.uniform(0, m[1] - 1), rng.uniform(0, m[2] - 1)};
            Int x = crt(r, {m[0], m[1], m[2]});
            long hits = 0, found = -1;
            for (long y = 0; y < m[0] * m[1] * m[2]; ++y)
                if (y % m[0] == r[0] && y % m[1] == r[1] && y % m[2] == r[2]) {
                    ++hits;
                    found = y;
                }
            CHECK(hits == 1);
            CHECK(x == found);
        }
    }
    CHECK_THROWS_AS(crt({1, 1}, {4, 6}), Error);
}

TEST_CASE("jacobi matches Euler's criterion on primes")
{
    for (long p : oracle::sieve_primes(200)) {
        if (p == 2) continue;
        for (long a = -20; a < 60; ++a) {
            long r = ((a % p) + p) % p;
            int expect = r == 0 ? 0 : (oracle::all_sqrts(a, p).empty() ? -1 : 1);
            CHECK(jacobi(a, p) == expect);
        }
    }
    CHECK_THROWS_AS(jacobi(3, 8), Error);
}

TEST_CASE("sqrt_mod returns the smallest root")
{
    for (long p : oracle::sieve_primes(400)) {
        for (long a = 0; a < p; ++a) {
            auto roots = oracle::all_sqrts(a, p);
            auto r = sqrt_mod(a, p);
            if (roots.empty()) {
                CHECK(!r);
            } else {
                REQUIRE(r);
                CHECK(*r == roots.front());
                auto t = tonelli_shanks(a, p);
                REQUIRE(t);
                CHECK(mod(*t * *t - a, p) == 0);
            }
        }
    }
}

TEST_CASE("is_prime and factor agree with a sieve up to 1e5")
{
    auto primes = oracle::sieve_primes(100000);
    std::vector<char> isp(100001, 0);
    for (long p : primes) isp[p] = 1;
    for (long n = 0; n <= 100000; ++n) REQUIRE(is_prime(n) == static_cast<bool>(isp[n]));
    for (long n = 1; n <= 100000; n += 7) {
        auto f = factor(n);
        auto g = oracle::trial_factor(n);
        REQUIRE(f.size() == g.size());
        size_t i = 0;
        for (auto [p, e] : g) {
            CHECK(f[i].p == p);
            CHECK(f[i].e == static_cast<unsigned>(e));
            ++i;
        }
    }
}

TEST_CASE("large primality cases")
{
    CHECK(is_prime(Int("170141183460469231731687303715884105727")));  // 2^127 - 1
    CHECK(!is_prime(Int("3317044064679887385961981")));
    CHECK(!is_prime(Int("318665857834031151167461")));
    CHECK(is_prime(Int("1000000000000000000000000000057")));
    Int c = Int("1000000007") * Int("998244353") * Int("1000003");
    auto f = factor(c);
    REQUIRE(f.size() == 3);
    CHECK(f[0].p == 1000003);
    CHECK(f[1].p == 998244353);
    CHECK(f[2].p == 1000000007);
}

TEST_CASE("characters")
{
    CHECK(eval_character(Character::minus_four(), 5) == 1);
    CHECK(eval_character(Character::minus_four(), 7) == -1);
    CHECK(eval_character(Character::eight(), 7) == 1);
    CHECK(eval_character(Character::eight(), 3) == -1);
    CHECK(eval_character(Character::minus_four_times_eight(), 3) == 1);
    CHECK(eval_character(Character::odd(5), 4) == 1);
    CHECK_THROWS_AS(eval_character(Character::odd(5), 10), Error);
    CHECK(Character::minus_four_times_eight().name() == "chi_-4*chi_8");
}
