#include "humbert/ternform.hpp"

#include <algorithm>

namespace humbert {

Int TernaryQF::content() const { return gcd(gcd(gcd(a, b), gcd(c, r)), gcd(s, t)); }

TernaryQF TernaryQF::divided(const Int& k) const
{
    for (const auto& x : coeffs())
        if (mod(x, k) != 0) throw Error(ErrorKind::internal, "inexact-division", str() + " / " + k.get_str());
    return {a / k, b / k, c / k, r / k, s / k, t / k};
}

bool TernaryQF::positive_definite() const
{
    return a > 0 && 4 * a * b - t * t > 0 && det(coefficient_matrix(*this)) > 0;
}

std::string TernaryQF::str() const
{
    std::string out = "[";
    auto cs = coeffs();
    for (size_t i = 0; i < cs.size(); ++i) out += (i ? "," : "") + cs[i].get_str();
    return out + "]";
}

bool operator<(const TernaryQF& l, const TernaryQF& r) { return l.coeffs() < r.coeffs(); }

TernaryQF f_of_binary(const BinaryQF& q) { return {1, 4 * q.a, 4 * q.c, 4 * q.b, 0, 0}; }

Mat3 coefficient_matrix(const TernaryQF& f)
{
    return {{{2 * f.a, f.t, f.s}, {f.t, 2 * f.b, f.r}, {f.s, f.r, 2 * f.c}}};
}

TernaryQF from_matrix(const Mat3& m)
{
    for (int i = 0; i < 3; ++i)
        if (mod(m[i][i], 2) != 0) throw Error(ErrorKind::internal, "odd-diagonal");
    return {m[0][0] / 2, m[1][1] / 2, m[2][2] / 2, m[1][2], m[0][2], m[0][1]};
}

Mat3 identity3()
{
    Mat3 m;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m[i][j] = (i == j) ? 1 : 0;
    return m;
}

Mat3 mul(const Mat3& l, const Mat3& r)
{
    Mat3 o;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) o[i][j] = l[i][0] * r[0][j] + l[i][1] * r[1][j] + l[i][2] * r[2][j];
    return o;
}

Mat3 transpose(const Mat3& m)
{
    Mat3 o;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) o[i][j] = m[j][i];
    return o;
}

Int det(const Mat3& m)
{
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Mat3 adjugate(const Mat3& m)
{
    Mat3 o;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
            // cyclic indices carry the cofactor sign
            o[i][j] = m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
        }
    return o;
}

TernaryQF transform(const TernaryQF& f, const Mat3& u)
{
    return from_matrix(mul(transpose(u), mul(coefficient_matrix(f), u)));
}

Int disc_ternary(const TernaryQF& f) { return f.disc(); }

TernaryQF adjoint(const TernaryQF& f)
{
    Mat3 adj = adjugate(coefficient_matrix(f));
    Mat3 m;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m[i][j] = -2 * adj[i][j];
    return from_matrix(m);
}

namespace {

void require_definite(const TernaryQF& f)
{
    if (!f.positive_definite()) throw Error(ErrorKind::invalid_input, "not-positive-definite", f.str());
}

bool shell_less(const Vec3& l, const Vec3& r)
{
    Int nl = abs(l[0]) + abs(l[1]) + abs(l[2]);
    Int nr = abs(r[0]) + abs(r[1]) + abs(r[2]);
    if (nl != nr) return nl < nr;
    return l > r;
}

Vec3 cross(const Vec3& u, const Vec3& v)
{
    return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

void set_column(Mat3& m, int j, const Vec3& v)
{
    for (int i = 0; i < 3; ++i) m[i][j] = v[i];
}

}  // namespace

Reciprocal reciprocal(const TernaryQF& f)
{
    require_definite(f);
    if (f.content() != 1) throw Error(ErrorKind::invalid_input, "reciprocal-needs-primitive", f.str());
    TernaryQF adj = adjoint(f);
    Int I1 = -adj.content();
    return {adj.divided(I1), I1};
}

Primitivity primitivity(const TernaryQF& f)
{
    Int g = f.content();
    auto even = [](const Int& x) { return mod(x, 2) == 0; };
    if (g == 1) return (even(f.r) && even(f.s) && even(f.t)) ? Primitivity::properly_primitive : Primitivity::primitive_odd_cross;
    if (g == 2) {
        TernaryQF h = f.divided(2);
        if (!even(h.r) || !even(h.s) || !even(h.t)) return Primitivity::improperly_primitive;
    }
    return Primitivity::other;
}

std::string to_string(Primitivity p)
{
    switch (p) {
    case Primitivity::properly_primitive: return "properly-primitive";
    case Primitivity::primitive_odd_cross: return "primitive-odd-cross";
    case Primitivity::improperly_primitive: return "improperly-primitive";
    case Primitivity::other: return "imprimitive-other";
    }
    return "?";
}

GenusInvariants basic_invariants(const TernaryQF& f)
{
    require_definite(f);
    Primitivity p = primitivity(f);
    if (p == Primitivity::other) throw Error(ErrorKind::invalid_input, "unsupported-primitivity", f.str());
    TernaryQF g = p == Primitivity::improperly_primitive ? f.divided(2) : f;
    Reciprocal rf = reciprocal(g);
    Int I2 = reciprocal(rf.FB).I1;
    GenusInvariants out{rf.I1, I2, 0, 0, p};
    if (p == Primitivity::improperly_primitive) {
        out.omega = -rf.I1;
        if (mod(I2, 8) == 0) out.delta = -I2 / 8;
    } else if (mod(rf.I1, 4) == 0) {
        out.omega = -rf.I1 / 4;
        if (mod(I2, 4) == 0) out.delta = -I2 / 4;
    }
    return out;
}

TernaryValue represent_coprime(const TernaryQF& f, const Int& n)
{
    if (f.content() != 1) throw Error(ErrorKind::invalid_input, "needs-primitive", f.str());
    if (n < 1) throw Error(ErrorKind::invalid_input, "bad-modulus", n.get_str());
    auto fac = factor(n);
    if (fac.empty()) return {{1, 0, 0}, f.a};
    std::array<std::vector<Int>, 3> res;
    std::vector<Int> ps;
    for (const auto& pe : fac) {
        const Int& p = pe.p;
        auto nd = [&](const Int& x) { return mod(x, p) != 0; };
        std::array<int, 3> e;
        if (nd(f.a)) e = {1, 0, 0};
        else if (nd(f.b)) e = {0, 1, 0};
        else if (nd(f.c)) e = {0, 0, 1};
        else if (nd(f.r)) e = {0, 1, 1};
        else if (nd(f.s)) e = {1, 0, 1};
        else e = {1, 1, 0};
        for (int i = 0; i < 3; ++i) res[i].push_back(e[i]);
        ps.push_back(p);
    }
    Vec3 v{crt(res[0], ps), crt(res[1], ps), crt(res[2], ps)};
    Int g = gcd(gcd(v[0], v[1]), v[2]);
    for (auto& x : v) x /= g;
    return {v, f(v)};
}

CharacterSet ternary_character_set(const Int& I1)
{
    CharacterSet out;
    if (I1 == 0) throw Error(ErrorKind::invalid_input, "zero-invariant");
    for (const auto& pe : factor(abs(I1)))
        if (pe.p != 2) out.chars.push_back(Character::odd(pe.p));
    Int m = mod(I1, 32);
    if (m == 0) {
        out.chars.push_back(Character::minus_four());
        out.chars.push_back(Character::eight());
        out.chars.push_back(Character::minus_four_times_eight());
    } else if (m == 16) {
        out.chars.push_back(Character::minus_four());
    } else {
        out.unhandled_residue = true;
    }
    return out;
}

CharacterData character_data(const TernaryQF& f)
{
    Reciprocal rf = reciprocal(f);
    CharacterSet set = ternary_character_set(rf.I1);
    TernaryValue v = represent_coprime(f, 2 * abs(rf.I1));
    CharacterData out;
    out.unhandled_residue = set.unhandled_residue;
    for (const auto& chi : set.chars) out.values.emplace_back(chi, eval_character(chi, v.value));
    return out;
}

int ternary_character_value(const TernaryQF& f, const Character& chi)
{
    TernaryValue v = represent_coprime(f, chi.modulus);
    return eval_character(chi, v.value);
}

bool genus_equal(const TernaryQF& f1, const TernaryQF& f2)
{
    require_definite(f1);
    require_definite(f2);
    if (f1.content() != 1 || f2.content() != 1)
        throw Error(ErrorKind::invalid_input, "unsupported-primitivity", f1.str() + " " + f2.str());
    GenusInvariants g1 = basic_invariants(f1), g2 = basic_invariants(f2);
    if (g1.I1 != g2.I1 || g1.I2 != g2.I2) return false;
    if (character_data(f1).values != character_data(f2).values) return false;
    return character_data(reciprocal(f1).FB).values == character_data(reciprocal(f2).FB).values;
}

bool is_eisenstein_reduced(const TernaryQF& f)
{
    const Int &a = f.a, &b = f.b, &c = f.c, &r = f.r, &s = f.s, &t = f.t;
    if (!(a <= b && b <= c)) return false;
    bool allpos = r > 0 && s > 0 && t > 0;
    bool allnonpos = r <= 0 && s <= 0 && t <= 0;
    if (!allpos && !allnonpos) return false;
    if (a < abs(s) || a < abs(t) || b < abs(r)) return false;
    Int sum = a + b + r + s + t;
    if (sum < 0) return false;
    if (a == t && s > 2 * r) return false;
    if (a == s && t > 2 * r) return false;
    if (b == r && t > 2 * s) return false;
    if (a == -t && s != 0) return false;
    if (a == -s && t != 0) return false;
    if (b == -r && t != 0) return false;
    if (sum == 0 && 2 * a + 2 * s + t > 0) return false;
    if (a == b && abs(r) > abs(s)) return false;
    if (b == c && abs(s) > abs(t)) return false;
    return true;
}

std::vector<Vec3> solutions(const TernaryQF& f, const Int& value, const Int& coord_bound)
{
    require_definite(f);
    std::vector<Vec3> out;
    if (value <= 0) return out;
    Mat3 M = coefficient_matrix(f);
    Mat3 adj = adjugate(M);
    Int dM = det(M);
    auto range = [&](int i) {
        Int b = isqrt(2 * value * adj[i][i] / dM) + 1;
        if (coord_bound > 0 && b > coord_bound) b = coord_bound;
        return b;
    };
    Int yb = range(1), zb = range(2);
    for (Int z = -zb; z <= zb; ++z) {
        for (Int y = -yb; y <= yb; ++y) {
            Int B = f.t * y + f.s * z;
            Int C = f.b * y * y + f.c * z * z + f.r * y * z - value;
            Int d = B * B - 4 * f.a * C;
            Int sq;
            if (!is_square(d, &sq)) continue;
            for (Int num : {Int(-B + sq), Int(-B - sq)}) {
                if (mod(num, 2 * f.a) != 0) continue;
                Int x = num / (2 * f.a);
                if (coord_bound > 0 && abs(x) > coord_bound) continue;
                Vec3 v{x, y, z};
                if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
            }
        }
    }
    std::sort(out.begin(), out.end(), shell_less);
    return out;
}

namespace {

Int norm(const TernaryQF& f, const Vec3& v) { return f(v); }

Vec3 axpy(const Vec3& y, const Int& k, const Vec3& x)
{
    return {y[0] - k * x[0], y[1] - k * x[1], y[2] - k * x[2]};
}

// Greedy (Nguyen-Stehle) reduction; Minkowski reduced in dimension 3.
Mat3 greedy_basis(const TernaryQF& f)
{
    std::array<Vec3, 3> b = {Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}};
    auto by_norm = [&](const Vec3& u, const Vec3& v) { return norm(f, u) < norm(f, v); };
    for (;;) {
        std::stable_sort(b.begin(), b.end(), by_norm);
        // Lagrange on the first two
        for (;;) {
            Int n0 = norm(f, b[0]);
            Int ip = f(Vec3{b[0][0] + b[1][0], b[0][1] + b[1][1], b[0][2] + b[1][2]}) - n0 - norm(f, b[1]);
            Int mu = floor_div(ip + n0, 2 * n0);
            if (mu != 0) b[1] = axpy(b[1], mu, b[0]);
            if (norm(f, b[1]) < n0) {
                std::swap(b[0], b[1]);
                continue;
            }
            break;
        }
        auto bil = [&](const Vec3& u, const Vec3& v) -> Int {
            return f(Vec3{u[0] + v[0], u[1] + v[1], u[2] + v[2]}) - f(u) - f(v);
        };
        Int g00 = 2 * norm(f, b[0]), g11 = 2 * norm(f, b[1]), g01 = bil(b[0], b[1]);
        Int g02 = bil(b[0], b[2]), g12 = bil(b[1], b[2]);
        Int d2 = g00 * g11 - g01 * g01;
        Int f0 = floor_div(g11 * g02 - g01 * g12, d2);
        Int f1 = floor_div(g00 * g12 - g01 * g02, d2);
        Vec3 best = b[2];
        Int bestn = norm(f, best);
        for (Int i = f0 - 1; i <= f0 + 2; ++i)
            for (Int j = f1 - 1; j <= f1 + 2; ++j) {
                Vec3 cand = axpy(axpy(b[2], i, b[0]), j, b[1]);
                Int cn = norm(f, cand);
                if (cn < bestn) {
                    best = cand;
                    bestn = cn;
                }
            }
        b[2] = best;
        if (bestn < norm(f, b[1])) continue;
        break;
    }
    Mat3 u;
    for (int j = 0; j < 3; ++j) set_column(u, j, b[j]);
    if (det(u) < 0) set_column(u, 2, Vec3{-b[2][0], -b[2][1], -b[2][2]});
    return u;
}

}  // namespace

TernaryReduction eisenstein_reduction(const TernaryQF& f)
{
    require_definite(f);
    Mat3 u0 = greedy_basis(f);
    TernaryQF g = transform(f, u0);
    std::array<std::vector<Vec3>, 3> levels;
    std::array<Int, 3> lam = {g.a, g.b, g.c};
    for (int i = 0; i < 3; ++i) levels[i] = (i > 0 && lam[i] == lam[i - 1]) ? levels[i - 1] : solutions(g, lam[i]);

    std::optional<TernaryReduction> best;
    Mat3 v;
    for (const auto& v1 : levels[0])
        for (const auto& v2 : levels[1]) {
            Vec3 c12 = cross(v1, v2);
            if (c12 == Vec3{0, 0, 0}) continue;
            for (const auto& v3 : levels[2]) {
                Int d = c12[0] * v3[0] + c12[1] * v3[1] + c12[2] * v3[2];
                if (d != 1 && d != -1) continue;
                set_column(v, 0, v1);
                set_column(v, 1, v2);
                set_column(v, 2, v3);
                TernaryQF h = transform(g, v);
                if (!is_eisenstein_reduced(h)) continue;
                if (!best || h < best->reduced) best = TernaryReduction{h, mul(u0, v)};
            }
        }
    if (!best) throw Error(ErrorKind::internal, "eisenstein-no-candidate", f.str());
    return *best;
}

TernaryQF eisenstein_reduce(const TernaryQF& f) { return eisenstein_reduction(f).reduced; }

bool equivalent_ternary(const TernaryQF& f1, const TernaryQF& f2)
{
    if (f1.disc() != f2.disc()) {
        require_definite(f1);
        require_definite(f2);
        return false;
    }
    return eisenstein_reduce(f1) == eisenstein_reduce(f2);
}

Int minors_gcd(const Mat32& t)
{
    Vec3 a{t[0][0], t[1][0], t[2][0]}, b{t[0][1], t[1][1], t[2][1]};
    Vec3 c = cross(a, b);
    return gcd(gcd(c[0], c[1]), c[2]);
}

namespace {

PhiResult produce_phi_core(const TernaryQF& f, const Vec3& v)
{
    const Int &x0 = v[0], &y0 = v[1], &z0 = v[2];
    Int g = gcd(z0, x0 + y0);
    Int a1 = z0 / g, a2 = z0 / g, a3 = -(x0 + y0) / g;
    Egcd e1 = egcd(a1, a2);
    Egcd e2 = egcd(e1.g, a3);
    Int l = e2.x * e1.x, m = e2.x * e1.y, n = e2.y;
    Int b1 = a1 - m * z0 + n * y0;
    Int b2 = a2 - n * x0 + l * z0;
    Int b3 = a3 - l * y0 + m * x0;
    Vec3 A{a1, a2, a3}, B{b1, b2, b3};
    Vec3 AB{a1 + b1, a2 + b2, a3 + b3};
    Mat32 T = {{{a1, b1}, {a2, b2}, {a3, b3}}};
    Int fa = f(A), fb = f(B);
    return {T, BinaryQF{fa, f(AB) - fa - fb, fb}};
}

}  // namespace

PhiResult produce_phi(const TernaryQF& f, const Vec3& v)
{
    if (v == Vec3{0, 0, 0}) throw Error(ErrorKind::invalid_input, "zero-vector");
    if (gcd(gcd(v[0], v[1]), v[2]) != 1) throw Error(ErrorKind::invalid_input, "vector-not-primitive");
    if (v[2] != 0) return produce_phi_core(f, v);
    Mat3 P{};
    for (auto& row : P)
        for (auto& x : row) x = 0;
    if (v[1] != 0) {
        P[0][0] = 1; P[1][2] = 1; P[2][1] = 1;
    } else {
        P[0][2] = 1; P[1][1] = 1; P[2][0] = 1;
    }
    TernaryQF fp = transform(f, P);
    Vec3 vp{P[0][0] * v[0] + P[0][1] * v[1] + P[0][2] * v[2], P[1][0] * v[0] + P[1][1] * v[1] + P[1][2] * v[2],
            P[2][0] * v[0] + P[2][1] * v[1] + P[2][2] * v[2]};
    PhiResult core = produce_phi_core(fp, vp);
    Mat32 T;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 2; ++j) T[i][j] = P[i][0] * core.T[0][j] + P[i][1] * core.T[1][j] + P[i][2] * core.T[2][j];
    return {T, core.phi};
}

TernaryPrime prime_represented_ternary(const TernaryQF& f, const Int& avoid, unsigned long budget)
{
    require_definite(f);
    if (f.content() != 1) throw Error(ErrorKind::invalid_input, "needs-primitive", f.str());
    unsigned long evals = 0;
    for (long n = 1;; ++n) {
        for (long x = n; x >= -n; --x) {
            long rem = n - std::labs(x);
            for (long y = rem; y >= -rem; --y) {
                long r = rem - std::labs(y);
                for (long z : {r, -r}) {
                    if (evals >= budget)
                        throw Error(ErrorKind::search_exhausted, "prime-search-exhausted",
                                    "budget " + std::to_string(budget) + " on " + f.str());
                    ++evals;
                    Vec3 v{Int(x), Int(y), Int(z)};
                    Int p = f(v);
                    if (mod(p, 2) == 1 && is_prime(p) && gcd(p, avoid) == 1) return {v, p};
                    if (r == 0) break;
                }
            }
        }
    }
}

Int default_witness_bound(const TernaryQF& f)
{
    Int d = abs(f.disc());
    return d > 32 ? d : Int(32);
}

Classification is_geometric(const TernaryQF& f, const Int& bound_in)
{
    require_definite(f);
    Classification out;
    Int bound = bound_in > 0 ? bound_in : default_witness_bound(f);
    Int D = f.disc();
    Int cont = f.content();
    Int scale;
    if (cont == 1) {
        for (int x = 0; x < 4; ++x)
            for (int y = 0; y < 4; ++y)
                for (int z = 0; z < 4; ++z) {
                    Int m = mod(f(Int(x), Int(y), Int(z)), 4);
                    if (m != 0 && m != 1) {
                        out.reason = "value " + f(Int(x), Int(y), Int(z)).get_str() + " at (" + std::to_string(x) +
                                     "," + std::to_string(y) + "," + std::to_string(z) + ") is not 0,1 mod 4";
                        return out;
                    }
                }
        out.kind = GeometricCase::primitive;
        scale = 1;
    } else {
        if (cont != 4 || primitivity(f.divided(2)) != Primitivity::improperly_primitive) {
            out.reason = "imprimitive and f/2 is not improperly primitive";
            return out;
        }
        out.kind = GeometricCase::imprimitive;
        scale = 2;
    }
    // n^2 coprime to disc forces every genus character to be +1
    TernaryQF h = scale == 1 ? f : f.divided(4);
    for (const auto& [chi, e] : character_data(h).values)
        if (e != 1) {
            out.kind.reset();
            out.reason = chi.name() + " is -1 on values of " + h.str() + ", so no square coprime to disc is represented";
            return out;
        }
    for (Int n = 1; n <= bound; ++n) {
        if (gcd(n, D) != 1) continue;
        Int target = scale * n;
        auto sols = solutions(f, target * target, bound);
        if (!sols.empty()) {
            out.geometric = true;
            out.witness = Witness{sols.front(), n};
            return out;
        }
    }
    out.kind.reset();
    out.reason = "no square witness found within bound " + bound.get_str();
    return out;
}

}  // namespace humbert
