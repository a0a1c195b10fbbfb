#include "humbert/numtheory.hpp"

#include <algorithm>
#include <array>

namespace humbert {

Error::Error(ErrorKind kind, std::string tag, const std::string& detail)
    : std::runtime_error(detail.empty() ? tag : tag + ": " + detail), kind_(kind), tag_(std::move(tag)) {}

Character Character::odd(const Int& ell) { return {Kind::odd_prime, ell}; }
Character Character::minus_four() { return {Kind::minus_four, Int(4)}; }
Character Character::eight() { return {Kind::eight, Int(8)}; }
Character Character::minus_four_times_eight() { return {Kind::minus_four_times_eight, Int(8)}; }

std::string Character::name() const
{
    switch (kind) {
    case Kind::odd_prime: return "chi_" + modulus.get_str();
    case Kind::minus_four: return "chi_-4";
    case Kind::eight: return "chi_8";
    case Kind::minus_four_times_eight: return "chi_-4*chi_8";
    }
    return "?";
}

Int gcd(const Int& a, const Int& b)
{
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Int abs(const Int& a) { return a < 0 ? Int(-a) : a; }

Int mod(const Int& a, const Int& m)
{
    Int r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

Int floor_div(const Int& a, const Int& b)
{
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Int isqrt(const Int& n)
{
    if (n < 0) throw Error(ErrorKind::internal, "isqrt-negative");
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

bool is_square(const Int& n, Int* root)
{
    if (n < 0) return false;
    Int r = isqrt(n);
    if (r * r != n) return false;
    if (root) *root = r;
    return true;
}

Int inverse_mod(const Int& a, const Int& m)
{
    Int r;
    if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()))
        throw Error(ErrorKind::invalid_input, "not-invertible", a.get_str() + " mod " + m.get_str());
    return mod(r, m);
}

std::string to_string(const Int& a) { return a.get_str(); }

Egcd egcd(const Int& a, const Int& b)
{
    Int r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (r1 != 0) {
        Int q = floor_div(r0, r1);
        Int t;
        t = r0 - q * r1; r0 = r1; r1 = t;
        t = s0 - q * s1; s0 = s1; s1 = t;
        t = t0 - q * t1; t0 = t1; t1 = t;
    }
    if (r0 < 0) {
        r0 = -r0; s0 = -s0; t0 = -t0;
    }
    if (r0 == 0) return {0, 0, 0};
    return {r0, s0, t0};
}

Int crt(const std::vector<Int>& residues, const std::vector<Int>& moduli)
{
    if (residues.size() != moduli.size())
        throw Error(ErrorKind::invalid_input, "crt-length-mismatch");
    for (const auto& m : moduli)
        if (m <= 0) throw Error(ErrorKind::invalid_input, "crt-moduli-not-positive");
    for (size_t i = 0; i < moduli.size(); ++i)
        for (size_t j = i + 1; j < moduli.size(); ++j)
            if (gcd(moduli[i], moduli[j]) != 1)
                throw Error(ErrorKind::invalid_input, "crt-moduli-not-coprime",
                            moduli[i].get_str() + ", " + moduli[j].get_str());
    Int x = 0, m = 1;
    for (size_t i = 0; i < moduli.size(); ++i) {
        const Int& mi = moduli[i];
        Int t = mod((residues[i] - x) * inverse_mod(m, mi), mi);
        x += m * t;
        m *= mi;
    }
    return mod(x, m);
}

int jacobi(const Int& a, const Int& n)
{
    if (n <= 0 || mpz_even_p(n.get_mpz_t()))
        throw Error(ErrorKind::invalid_input, "jacobi-bad-modulus", n.get_str());
    return mpz_jacobi(a.get_mpz_t(), n.get_mpz_t());
}

int eval_character(const Character& chi, const Int& x)
{
    if (gcd(x, chi.modulus) != 1)
        throw Error(ErrorKind::invalid_input, "character-undefined", chi.name() + " at " + x.get_str());
    auto m4 = [&] { return mod(x, 4) == 1 ? 1 : -1; };
    auto m8 = [&] {
        Int r = mod(x, 8);
        return (r == 1 || r == 7) ? 1 : -1;
    };
    switch (chi.kind) {
    case Character::Kind::odd_prime: return jacobi(x, chi.modulus);
    case Character::Kind::minus_four: return m4();
    case Character::Kind::eight: return m8();
    case Character::Kind::minus_four_times_eight: return m4() * m8();
    }
    return 0;
}

std::optional<Int> tonelli_shanks(const Int& a_in, const Int& p)
{
    if (!is_prime(p)) throw Error(ErrorKind::invalid_input, "sqrt-mod-needs-prime", p.get_str());
    Int a = mod(a_in, p);
    if (a == 0) return Int(0);
    if (p == 2) return a;
    if (jacobi(a, p) != 1) return std::nullopt;

    Int q = p - 1;
    unsigned long s = 0;
    while (mpz_even_p(q.get_mpz_t())) {
        q /= 2;
        ++s;
    }
    Int z = 2;
    while (jacobi(z, p) != -1) ++z;

    auto powm = [&](const Int& b, const Int& e) {
        Int r;
        mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
        return r;
    };
    Int c = powm(z, q);
    Int x = powm(a, (q + 1) / 2);
    Int t = powm(a, q);
    unsigned long m = s;
    while (t != 1) {
        unsigned long i = 0;
        Int tt = t;
        while (tt != 1) {
            tt = mod(tt * tt, p);
            ++i;
        }
        Int b = c;
        for (unsigned long j = 0; j + i + 1 < m; ++j) b = mod(b * b, p);
        x = mod(x * b, p);
        c = mod(b * b, p);
        t = mod(t * c, p);
        m = i;
    }
    return x;
}

std::optional<Int> sqrt_mod(const Int& a, const Int& p)
{
    auto x = tonelli_shanks(a, p);
    if (!x || *x == 0) return x;
    Int other = p - *x;
    return *x < other ? *x : other;
}

namespace {

bool miller_rabin(const Int& n, const Int& base)
{
    Int d = n - 1;
    unsigned long s = 0;
    while (mpz_even_p(d.get_mpz_t())) {
        d /= 2;
        ++s;
    }
    Int x;
    Int b = mod(base, n);
    if (b == 0) return true;
    mpz_powm(x.get_mpz_t(), b.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n - 1) return true;
    for (unsigned long r = 1; r < s; ++r) {
        x = mod(x * x, n);
        if (x == n - 1) return true;
    }
    return false;
}

Int half_mod(const Int& v, const Int& n)
{
    Int w = mod(v, n);
    if (mpz_odd_p(w.get_mpz_t())) w += n;
    return w / 2;
}

// Strong Lucas test with Selfridge parameters.
bool strong_lucas(const Int& n)
{
    if (is_square(n)) return false;
    Int D = 5;
    for (;;) {
        int j = jacobi(D, n);
        if (j == -1) break;
        if (j == 0 && abs(D) != n) return false;
        D = D > 0 ? Int(-D - 2) : Int(-D + 2);
    }
    Int P = 1, Q = (1 - D) / 4;
    Int d = n + 1;
    unsigned long s = 0;
    while (mpz_even_p(d.get_mpz_t())) {
        d /= 2;
        ++s;
    }
    Int U = 1, V = P, Qk = mod(Q, n);
    for (long i = static_cast<long>(mpz_sizeinbase(d.get_mpz_t(), 2)) - 2; i >= 0; --i) {
        U = mod(U * V, n);
        V = mod(V * V - 2 * Qk, n);
        Qk = mod(Qk * Qk, n);
        if (mpz_tstbit(d.get_mpz_t(), static_cast<mp_bitcnt_t>(i))) {
            Int U2 = half_mod(P * U + V, n);
            Int V2 = half_mod(D * U + P * V, n);
            U = U2;
            V = V2;
            Qk = mod(Qk * Q, n);
        }
    }
    if (U == 0 || V == 0) return true;
    for (unsigned long r = 1; r < s; ++r) {
        V = mod(V * V - 2 * Qk, n);
        Qk = mod(Qk * Qk, n);
        if (V == 0) return true;
    }
    return false;
}

const std::array<unsigned, 13> kMrBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

}  // namespace

bool is_prime(const Int& n)
{
    if (n < 2) return false;
    for (unsigned p : kMrBases) {
        if (n == p) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
    }
    static const Int kDeterministicBound("3317044064679887385961981");
    if (n < kDeterministicBound) {
        for (unsigned p : kMrBases)
            if (!miller_rabin(n, Int(p))) return false;
        return true;
    }
    return miller_rabin(n, Int(2)) && strong_lucas(n);
}

namespace {

Int pollard_brent(const Int& n)
{
    if (mpz_even_p(n.get_mpz_t())) return 2;
    for (unsigned long c = 1;; ++c) {
        Int y = 2, x, g = 1, q = 1, ys;
        unsigned long r = 1, m = 128;
        auto f = [&](const Int& v) { return mod(v * v + c, n); };
        while (g == 1) {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = f(y);
            unsigned long k = 0;
            while (k < r && g == 1) {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    q = mod(q * abs(Int(x - y)), n);
                }
                g = gcd(q, n);
                k += m;
            }
            r *= 2;
        }
        if (g == n) {
            do {
                ys = f(ys);
                g = gcd(abs(Int(x - ys)), n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void factor_rec(const Int& n, std::vector<Int>& out)
{
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    Int d = pollard_brent(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

}  // namespace

std::vector<PrimePower> factor(const Int& n_in)
{
    if (n_in < 1) throw Error(ErrorKind::invalid_input, "factor-nonpositive", n_in.get_str());
    Int n = n_in;
    std::vector<Int> primes;
    for (unsigned long p = 2; p <= 1000000UL; p += (p == 2 ? 1 : 2)) {
        if (Int(p) * p > n) break;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            primes.push_back(Int(p));
            n /= p;
        }
    }
    if (n > 1) factor_rec(n, primes);
    std::sort(primes.begin(), primes.end());
    std::vector<PrimePower> out;
    for (const auto& p : primes) {
        if (!out.empty() && out.back().p == p)
            ++out.back().e;
        else
            out.push_back({p, 1});
    }
    return out;
}

}  // namespace humbert
