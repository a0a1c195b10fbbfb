#pragma once

// Brute-force references and random generators shared by the test suites.

#include "humbert/humbert.hpp"

#include <map>
#include <random>
#include <vector>

namespace oracle {

using humbert::BinaryQF;
using humbert::Int;
using humbert::Mat2;
using humbert::Mat3;
using humbert::TernaryQF;
using humbert::Vec3;

inline std::vector<long> sieve_primes(long n)
{
    std::vector<char> comp(n + 1, 0);
    std::vector<long> out;
    for (long i = 2; i <= n; ++i) {
        if (comp[i]) continue;
        out.push_back(i);
        for (long j = i * i; j <= n; j += i) comp[j] = 1;
    }
    return out;
}

inline std::map<long, int> trial_factor(long n)
{
    std::map<long, int> out;
    for (long p = 2; p * p <= n; ++p)
        while (n % p == 0) {
            ++out[p];
            n /= p;
        }
    if (n > 1) ++out[n];
    return out;
}

inline std::vector<long> all_sqrts(long a, long p)
{
    std::vector<long> out;
    long r = ((a % p) + p) % p;
    for (long x = 0; x < p; ++x)
        if ((x * x) % p == r) out.push_back(x);
    return out;
}

// Some M in GL2 with entries in [-bound, bound] and q1 o M = q2.
inline bool gl2_equivalent(const BinaryQF& q1, const BinaryQF& q2, long bound)
{
    if (q1.disc() != q2.disc()) return false;
    std::vector<std::pair<long, long>> c1, c2;
    for (long x = -bound; x <= bound; ++x)
        for (long y = -bound; y <= bound; ++y) {
            Int v = q1(x, y);
            if (v == q2.a) c1.push_back({x, y});
            if (v == q2.c) c2.push_back({x, y});
        }
    for (auto [x1, y1] : c1)
        for (auto [x2, y2] : c2) {
            long d = x1 * y2 - x2 * y1;
            if (d != 1 && d != -1) continue;
            Int mid = 2 * q1.a * x1 * x2 + q1.b * (x1 * y2 + x2 * y1) + 2 * q1.c * y1 * y2;
            if (mid == q2.b) return true;
        }
    return false;
}

// Some U in GL3 with entries in [-bound, bound] and f1 o U = f2, found column by column.
inline bool gl3_equivalent(const TernaryQF& f1, const TernaryQF& f2, long bound)
{
    if (f1.disc() != f2.disc()) return false;
    std::array<std::vector<Vec3>, 3> cols;
    const Int target[3] = {f2.a, f2.b, f2.c};
    for (long x = -bound; x <= bound; ++x)
        for (long y = -bound; y <= bound; ++y)
            for (long z = -bound; z <= bound; ++z) {
                Vec3 v{x, y, z};
                Int val = f1(v);
                for (int i = 0; i < 3; ++i)
                    if (val == target[i]) cols[i].push_back(v);
            }
    auto bil = [&](const Vec3& u, const Vec3& w) -> Int {
        return f1(Vec3{u[0] + w[0], u[1] + w[1], u[2] + w[2]}) - f1(u) - f1(w);
    };
    for (const auto& u : cols[0])
        for (const auto& v : cols[1]) {
            if (bil(u, v) != f2.t) continue;
            for (const auto& w : cols[2]) {
                if (bil(u, w) != f2.s || bil(v, w) != f2.r) continue;
                Mat3 m{{{u[0], v[0], w[0]}, {u[1], v[1], w[1]}, {u[2], v[2], w[2]}}};
                Int d = humbert::det(m);
                if (d == 1 || d == -1) return true;
            }
        }
    return false;
}

// Gauss-reduced binary forms with the given negative discriminant, all contents.
inline std::vector<BinaryQF> reduced_binary(long disc)
{
    std::vector<BinaryQF> out;
    long D = -disc;
    for (long a = 1; 3 * a * a <= D; ++a)
        for (long b = -a + 1; b <= a; ++b) {
            long num = b * b + D;
            if (num % (4 * a)) continue;
            long c = num / (4 * a);
            if (c < a) continue;
            if (a == c && b < 0) continue;
            out.push_back({a, b, c});
        }
    return out;
}

inline bool binary_reduced(const BinaryQF& q)
{
    Int ab = humbert::abs(q.b);
    if (ab > q.a || q.a > q.c) return false;
    if ((ab == q.a || q.a == q.c) && q.b < 0) return false;
    return true;
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : g_(seed) {}
    long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(g_); }

    Mat2 unimodular2(int steps = 6)
    {
        Mat2 m = humbert::identity2();
        for (int i = 0; i < steps; ++i) {
            Mat2 e = humbert::identity2();
            int k = uniform(0, 2);
            if (k == 0) e[0][1] = uniform(-2, 2);
            else if (k == 1) e[1][0] = uniform(-2, 2);
            else e = {{{0, 1}, {1, 0}}};
            m = humbert::mul(m, e);
        }
        return m;
    }

    Mat3 unimodular3(int steps = 6)
    {
        Mat3 m = humbert::identity3();
        for (int i = 0; i < steps; ++i) {
            Mat3 e = humbert::identity3();
            int r = uniform(0, 2), c = uniform(0, 2);
            if (r == c) {
                e[r][r] = -1;
            } else if (uniform(0, 3) == 0) {
                e[r][r] = 0;
                e[c][c] = 0;
                e[r][c] = 1;
                e[c][r] = 1;
            } else {
                e[r][c] = uniform(-2, 2);
            }
            m = humbert::mul(m, e);
        }
        return m;
    }

    BinaryQF positive_binary(long max = 40)
    {
        for (;;) {
            BinaryQF q{uniform(1, max), uniform(-max, max), uniform(1, max)};
            if (q.positive_definite()) return q;
        }
    }

    TernaryQF positive_ternary(long max = 30)
    {
        for (;;) {
            TernaryQF f{uniform(1, max), uniform(1, max), uniform(1, max),
                        uniform(-max, max), uniform(-max, max), uniform(-max, max)};
            if (f.positive_definite()) return f;
        }
    }

    std::mt19937_64& engine() { return g_; }

private:
    std::mt19937_64 g_;
};

// Positive definite Eisenstein-reduced ternary forms with |disc| <= max_disc.
inline std::vector<TernaryQF> reduced_ternary(long max_disc)
{
    std::vector<TernaryQF> out;
    long cap = max_disc / 2;
    for (long a = 1; a * a * a <= cap; ++a)
        for (long b = a; a * b * b <= cap; ++b)
            for (long c = b; a * b * c <= cap; ++c)
                for (long r = -b; r <= b; ++r)
                    for (long s = -a; s <= a; ++s)
                        for (long t = -a; t <= a; ++t) {
                            TernaryQF f{a, b, c, r, s, t};
                            if (!f.positive_definite()) continue;
                            if (-f.disc() > max_disc) continue;
                            if (!humbert::is_eisenstein_reduced(f)) continue;
                            out.push_back(f);
                        }
    return out;
}

// (n, m, k) with n m - k^2 d = 1.
inline humbert::PolarizationTriple random_triple(Rng& rng, long d)
{
    for (;;) {
        long k = rng.uniform(-6, 6);
        long N = 1 + k * k * d;
        std::vector<long> divs;
        for (long x = 1; x <= N; ++x)
            if (N % x == 0) divs.push_back(x);
        long n = divs[rng.uniform(0, static_cast<long>(divs.size()) - 1)];
        humbert::PolarizationTriple s{n, N / n, k, d};
        if (s.valid()) return s;
    }
}

}  // namespace oracle
