#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"

using namespace humbert;

namespace {

Int big(oracle::Rng& rng, int digits)
{
    std::string s = std::to_string(rng.uniform(1, 9));
    for (int i = 1; i < digits; ++i) s += static_cast<char>('0' + rng.uniform(0, 9));
    return Int(s);
}

}  // namespace

TEST_CASE("binary reduction with large coefficients")
{
    oracle::Rng rng(201);
    for (int i = 0; i < 300; ++i) {
        Int a = big(rng, 25), c = big(rng, 25);
        Int b = mod(big(rng, 25), 2 * a) - a;
        BinaryQF q{a, b, c};
        if (!q.positive_definite()) continue;
        BinaryQF h = transform(q, oracle::Rng(i).unimodular2(10));
        Reduction r = reduce(h);
        CHECK(oracle::binary_reduced(r.reduced));
        CHECK(transform(h, r.transform) == r.reduced);
        CHECK(equivalent(q, h));
    }
}

TEST_CASE("ternary reduction with large coefficients")
{
    oracle::Rng rng(202);
    int tested = 0;
    while (tested < 40) {
        Int a = big(rng, 12), b = big(rng, 12), c = big(rng, 12);
        TernaryQF f{a, b, c, mod(big(rng, 10), b) - b / 2, mod(big(rng, 10), a) - a / 2, mod(big(rng, 10), a) - a / 2};
        if (!f.positive_definite()) continue;
        TernaryQF g = transform(f, rng.unimodular3(8));
        TernaryReduction r = eisenstein_reduction(g);
        CHECK(is_eisenstein_reduced(r.reduced));
        CHECK(transform(g, r.transform) == r.reduced);
        CHECK(r.reduced == eisenstein_reduce(f));
        ++tested;
    }
}

TEST_CASE("egcd and crt on large integers")
{
    oracle::Rng rng(203);
    for (int i = 0; i < 500; ++i) {
        Int a = big(rng, 40), b = big(rng, 35);
        if (rng.uniform(0, 1)) a = -a;
        Egcd e = egcd(a, b);
        CHECK(a * e.x + b * e.y == e.g);
        CHECK(e.g == gcd(a, b));
    }
    Int p1("1000000000000000000000000000057"), p2("170141183460469231731687303715884105727");
    for (int i = 0; i < 100; ++i) {
        Int r1 = mod(big(rng, 30), p1), r2 = mod(big(rng, 38), p2);
        Int x = crt({r1, r2}, {p1, p2});
        CHECK(mod(x, p1) == r1);
        CHECK(mod(x, p2) == r2);
        CHECK(x < p1 * p2);
    }
}

TEST_CASE("sqrt_mod modulo a large prime")
{
    oracle::Rng rng(204);
    Int p("170141183460469231731687303715884105727");
    for (int i = 0; i < 200; ++i) {
        Int x = mod(big(rng, 38), p);
        auto r = sqrt_mod(x * x, p);
        REQUIRE(r);
        CHECK((*r == x || *r == p - x));
        CHECK(*r <= p - *r);
    }
}

TEST_CASE("factor on products of large primes")
{
    const Int ps[] = {Int("1000000007"), Int("998244353"), Int("1000003"), Int("2147483647"), Int("4294967291")};
    oracle::Rng rng(205);
    for (int i = 0; i < 30; ++i) {
        Int n = 1;
        std::vector<Int> used;
        for (int k = 0; k < 3; ++k) {
            Int p = ps[rng.uniform(0, 4)];
            n *= p;
            used.push_back(p);
        }
        Int back = 1;
        for (const auto& pe : factor(n)) {
            CHECK(is_prime(pe.p));
            for (unsigned k = 0; k < pe.e; ++k) back *= pe.p;
        }
        CHECK(back == n);
    }
}

TEST_CASE("q_s and type_d_triple with large d")
{
    oracle::Rng rng(206);
    for (int i = 0; i < 40;) {
        long d = rng.uniform(100, 5000);
        PolarizationTriple s = oracle::random_triple(rng, d);
        if (s.n > 5000) continue;
        ++i;
        BinaryQF q = transform(q_s(s), rng.unimodular2());
        PolarizationTriple t = type_d_triple(q, d);
        CHECK(t.valid());
        CHECK(equivalent(q_s(t), q));
    }
}

TEST_CASE("verification form is type-independent of the disguise")
{
    oracle::Rng rng(207);
    for (int i = 0; i < 20; ++i) {
        BinaryQF q = rng.positive_binary(20);
        TernaryQF f = f_of_binary(q);
        TernaryQF g = transform(f, rng.unimodular3());
        SurfaceDescriptor d = construct(g, Mode::full, 1000000);
        CHECK(verify(d, f).ok);
        CHECK(d.reduced_verification_form == eisenstein_reduce(f));
    }
}
