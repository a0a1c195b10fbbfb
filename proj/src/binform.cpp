#include "humbert/binform.hpp"

#include <algorithm>
#include <cstdlib>
#include <tuple>

namespace humbert {

Int BinaryQF::content() const { return gcd(gcd(a, b), c); }

BinaryQF BinaryQF::primitive_part() const
{
    Int g = content();
    if (g == 0) throw Error(ErrorKind::invalid_input, "zero-form");
    return {a / g, b / g, c / g};
}

std::string BinaryQF::str() const
{
    return "[" + a.get_str() + "," + b.get_str() + "," + c.get_str() + "]";
}

bool operator<(const BinaryQF& l, const BinaryQF& r)
{
    if (l.a != r.a) return l.a < r.a;
    if (l.b != r.b) return l.b < r.b;
    return l.c < r.c;
}

Mat2 identity2() { return {{{Int(1), Int(0)}, {Int(0), Int(1)}}}; }

Mat2 mul(const Mat2& l, const Mat2& r)
{
    Mat2 o;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) o[i][j] = l[i][0] * r[0][j] + l[i][1] * r[1][j];
    return o;
}

Int det(const Mat2& m) { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

BinaryQF transform(const BinaryQF& q, const Mat2& m)
{
    const Int &al = m[0][0], &be = m[0][1], &ga = m[1][0], &de = m[1][1];
    return {q(al, ga), 2 * q.a * al * be + q.b * (al * de + be * ga) + 2 * q.c * ga * de, q(be, de)};
}

namespace {

void require_definite(const BinaryQF& q)
{
    if (!q.positive_definite())
        throw Error(ErrorKind::invalid_input, "not-positive-definite", q.str());
}

}  // namespace

Reduction reduce(const BinaryQF& q)
{
    require_definite(q);
    BinaryQF f = q;
    Mat2 t = identity2();
    const Mat2 swap = {{{Int(0), Int(-1)}, {Int(1), Int(0)}}};
    for (;;) {
        Int k = floor_div(f.a - f.b, 2 * f.a);
        if (k != 0) {
            Mat2 sh = {{{Int(1), k}, {Int(0), Int(1)}}};
            f = transform(f, sh);
            t = mul(t, sh);
        }
        if (f.c < f.a) {
            f = transform(f, swap);
            t = mul(t, swap);
            continue;
        }
        break;
    }
    if (f.b < 0 && f.a == f.c) {
        f = transform(f, swap);
        t = mul(t, swap);
    }
    return {f, t};
}

bool equivalent(const BinaryQF& q1, const BinaryQF& q2)
{
    BinaryQF r1 = reduce(q1).reduced;
    BinaryQF r2 = reduce(q2).reduced;
    if (r1 == r2) return true;
    return r1 == reduce({r2.a, -r2.b, r2.c}).reduced;
}

std::vector<BinaryQF> reduced_forms_of_disc(const Int& disc, const Int& content)
{
    if (content <= 0 || disc >= 0)
        throw Error(ErrorKind::invalid_input, "invalid-discriminant", disc.get_str());
    Int k2 = content * content;
    if (mod(disc, k2) != 0) throw Error(ErrorKind::invalid_input, "invalid-discriminant", disc.get_str());
    Int D = disc / k2;
    Int r4 = mod(D, 4);
    if (r4 != 0 && r4 != 1) throw Error(ErrorKind::invalid_input, "invalid-discriminant", disc.get_str());

    std::vector<BinaryQF> out;
    Int amax = isqrt(-D / 3);
    for (Int a = 1; a <= amax; ++a) {
        for (Int b = -a + 1; b <= a; ++b) {
            if (mod(b - D, 2) != 0) continue;
            Int num = b * b - D;
            if (mod(num, 4 * a) != 0) continue;
            Int c = num / (4 * a);
            if (c < a) continue;
            if (c == a && b < 0) continue;
            if (gcd(gcd(a, b), c) != 1) continue;
            out.push_back(BinaryQF{a, b, c}.scaled(content));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

BinaryValue represent_coprime(const BinaryQF& q, const Int& n)
{
    if (q.content() != 1) throw Error(ErrorKind::invalid_input, "needs-primitive", q.str());
    if (n < 1) throw Error(ErrorKind::invalid_input, "bad-modulus", n.get_str());
    auto fac = factor(n);
    if (fac.empty()) return {1, 0, q.a};
    std::vector<Int> xs, ys, ps;
    for (const auto& pe : fac) {
        const Int& p = pe.p;
        int x, y;
        if (mod(q.a, p) != 0) {
            x = 1; y = 0;
        } else if (mod(q.c, p) != 0) {
            x = 0; y = 1;
        } else {
            x = 1; y = 1;
        }
        xs.push_back(x);
        ys.push_back(y);
        ps.push_back(p);
    }
    Int x = crt(xs, ps), y = crt(ys, ps);
    Int g = gcd(x, y);
    x /= g;
    y /= g;
    return {x, y, q(x, y)};
}

std::vector<Character> character_set(const BinaryQF& q)
{
    if (q.content() != 1) throw Error(ErrorKind::invalid_input, "needs-primitive", q.str());
    Int D = q.disc();
    std::vector<Character> out;
    for (const auto& pe : factor(abs(D)))
        if (pe.p != 2) out.push_back(Character::odd(pe.p));
    if (mod(D, 2) == 1) return out;
    Int n = -D / 4;
    unsigned long r = mod(n, 8).get_ui();
    switch (r) {
    case 1: case 5: case 4:
        out.push_back(Character::minus_four());
        break;
    case 2:
        out.push_back(Character::minus_four_times_eight());
        break;
    case 6:
        out.push_back(Character::eight());
        break;
    case 0:
        out.push_back(Character::minus_four());
        out.push_back(Character::eight());
        break;
    default:
        break;
    }
    return out;
}

std::vector<std::pair<Character, int>> character_values(const BinaryQF& q)
{
    auto set = character_set(q);
    BinaryValue v = represent_coprime(q, 2 * abs(q.disc()));
    std::vector<std::pair<Character, int>> out;
    for (const auto& chi : set) out.emplace_back(chi, eval_character(chi, v.value));
    return out;
}

bool in_principal_genus(const BinaryQF& q)
{
    require_definite(q);
    for (const auto& [chi, val] : character_values(q.primitive_part()))
        if (val != 1) return false;
    return true;
}

BinaryQF form_representing_prime(const Int& d, const Int& p)
{
    Int r4 = mod(d, 4);
    if (d >= 0 || (r4 != 0 && r4 != 1))
        throw Error(ErrorKind::invalid_input, "invalid-discriminant", d.get_str());
    if (p < 3 || !is_prime(p)) throw Error(ErrorKind::invalid_input, "needs-odd-prime", p.get_str());
    if (mod(d, p) == 0) throw Error(ErrorKind::invalid_input, "prime-divides-discriminant", p.get_str());
    auto r = tonelli_shanks(d, p);
    if (!r) throw Error(ErrorKind::invalid_input, "prime-not-represented", p.get_str() + " for " + d.get_str());
    Int b = mod(*r - d, 2) == 0 ? *r : Int(*r + p);
    return {p, b, (b * b - d) / (4 * p)};
}

namespace {

bool shell_less(const std::pair<Int, Int>& l, const std::pair<Int, Int>& r)
{
    Int nl = abs(l.first) + abs(l.second), nr = abs(r.first) + abs(r.second);
    if (nl != nr) return nl < nr;
    return l > r;
}

}  // namespace

std::vector<std::pair<Int, Int>> primitive_solutions(const BinaryQF& q, const Int& t)
{
    require_definite(q);
    std::vector<std::pair<Int, Int>> out;
    if (t <= 0) return out;
    // solve on the reduced form, then map back
    Reduction red = reduce(q);
    const BinaryQF& r = red.reduced;
    const Mat2& T = red.transform;
    Int D = r.disc();
    Int ymax = isqrt(4 * r.a * t / (-D));
    for (Int y = -ymax; y <= ymax; ++y) {
        Int disc = y * y * D + 4 * r.a * t;
        Int s;
        if (!is_square(disc, &s)) continue;
        for (Int num : {Int(-r.b * y + s), Int(-r.b * y - s)}) {
            if (mod(num, 2 * r.a) != 0) continue;
            Int x = num / (2 * r.a);
            if (gcd(x, y) != 1) continue;
            std::pair<Int, Int> v{T[0][0] * x + T[0][1] * y, T[1][0] * x + T[1][1] * y};
            if (q(v.first, v.second) != t) continue;
            if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
        }
    }
    std::sort(out.begin(), out.end(), shell_less);
    return out;
}

std::optional<SquareRep> represented_square(const BinaryQF& q, const Int& coprime_to, const Int& bound)
{
    require_definite(q);
    for (Int N = 1; N <= bound; ++N) {
        if (gcd(N, coprime_to) != 1) continue;
        auto sols = primitive_solutions(q, N * N);
        if (!sols.empty()) return SquareRep{sols.front().first, sols.front().second, N};
    }
    return std::nullopt;
}

BinaryQF q_s(const PolarizationTriple& s)
{
    if (!s.valid())
        throw Error(ErrorKind::invalid_input, "invalid-triple",
                    "(" + s.n.get_str() + "," + s.m.get_str() + "," + s.k.get_str() + "; d=" + s.d.get_str() + ")");
    Int nm = s.n * s.m;
    return {s.n * s.n, 2 * s.k * s.d * (nm + 2), s.m * s.m * s.d * (nm + 3)};
}

PolarizationTriple type_d_triple(const BinaryQF& phi, const Int& d)
{
    require_definite(phi);
    if (d <= 0 || phi.disc() != -16 * d)
        throw Error(ErrorKind::invalid_input, "not-type-d", "disc " + phi.disc().get_str() + " vs d " + d.get_str());
    Int cont = phi.content();
    if ((cont != 1 && cont != 4) || !in_principal_genus(phi))
        throw Error(ErrorKind::invalid_input, "not-type-d", phi.str());

    Int D = abs(phi.disc());
    auto sq = represented_square(phi, d, D * D * D);
    if (!sq) throw Error(ErrorKind::invalid_input, "not-type-d", "no square witness for " + phi.str());
    const Int &x = sq->x, &y = sq->y, &N = sq->N;

    Int w, z;
    if (abs(x) == 1) {
        w = 0; z = x;
    } else if (abs(y) == 1) {
        w = -y; z = 0;
    } else {
        Egcd e = egcd(x, y);
        z = e.x;
        w = -e.y;
    }
    Int mid = 2 * (phi.a * x * w + phi.c * y * z) + phi.b * (x * z + y * w);
    Int c = phi(w, z);
    Int b = mid / 2;
    Int N2 = N * N;

    Int k;
    if (mod(N, 2) == 1) {
        k = mod(inverse_mod(2 * d, N2) * b, N2);
    } else {
        Int dstar = inverse_mod(d, N2);
        Int cbar = mod(c, 4);
        Int num = b + cbar * N;
        if (mod(num, 2) != 0) throw Error(ErrorKind::internal, "type-d-parity", phi.str());
        k = dstar * (num / 2);
    }
    k = abs(k);
    Int top = k * k * d + 1;
    if (mod(top, N) != 0) throw Error(ErrorKind::internal, "type-d-divisibility", phi.str());
    PolarizationTriple s{N, top / N, k, d};
    if (!equivalent(q_s(s), phi)) throw Error(ErrorKind::internal, "type-d-mismatch", phi.str());
    return s;
}

unsigned long default_search_budget()
{
    if (const char* env = std::getenv("HUMBERT_MAX_SEARCH")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 1000000UL;
}

BinaryPrime prime_represented_binary(const BinaryQF& q, const Int& avoid, unsigned long budget)
{
    require_definite(q);
    BinaryQF f = q.primitive_part();
    unsigned long evals = 0;
    // values in increasing order; first admissible prime with a primitive representation
    for (Int n = 2;; ++n) {
        if (evals >= budget)
            throw Error(ErrorKind::search_exhausted, "prime-search-exhausted",
                        "budget " + std::to_string(budget) + " on " + q.str());
        ++evals;
        if (!is_prime(n) || gcd(n, avoid) != 1) continue;
        auto sols = primitive_solutions(f, n);
        if (sols.empty()) continue;
        const auto& s = *std::min_element(sols.begin(), sols.end(), [](const auto& l, const auto& r) {
            Int nl = abs(l.first) + abs(l.second), nr = abs(r.first) + abs(r.second);
            if (nl != nr) return nl < nr;
            return l > r;
        });
        return {s.first, s.second, n};
    }
}

}  // namespace humbert
