#pragma once

#include "humbert/binform.hpp"
#include "humbert/numtheory.hpp"

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace humbert {

using Vec3 = std::array<Int, 3>;
using Mat3 = std::array<std::array<Int, 3>, 3>;
using Mat32 = std::array<std::array<Int, 2>, 3>;

// a x^2 + b y^2 + c z^2 + r yz + s xz + t xy
struct TernaryQF {
    Int a, b, c, r, s, t;

    Int disc() const { return -4 * a * b * c - r * s * t + a * r * r + b * s * s + c * t * t; }
    Int content() const;
    TernaryQF scaled(const Int& k) const { return {a * k, b * k, c * k, r * k, s * k, t * k}; }
    TernaryQF divided(const Int& k) const;  // exact
    Int operator()(const Int& x, const Int& y, const Int& z) const
    {
        return a * x * x + b * y * y + c * z * z + r * y * z + s * x * z + t * x * y;
    }
    Int operator()(const Vec3& v) const { return (*this)(v[0], v[1], v[2]); }
    bool positive_definite() const;
    bool operator==(const TernaryQF& o) const
    {
        return a == o.a && b == o.b && c == o.c && r == o.r && s == o.s && t == o.t;
    }
    std::array<Int, 6> coeffs() const { return {a, b, c, r, s, t}; }
    std::string str() const;
};

bool operator<(const TernaryQF& l, const TernaryQF& r);

// x^2 + 4q
TernaryQF f_of_binary(const BinaryQF& q);

Mat3 coefficient_matrix(const TernaryQF& f);
TernaryQF from_matrix(const Mat3& m);  // m symmetric with even diagonal
Mat3 identity3();
Mat3 mul(const Mat3& l, const Mat3& r);
Mat3 transpose(const Mat3& m);
Int det(const Mat3& m);
Mat3 adjugate(const Mat3& m);
// (f U)(w) = f(U w)
TernaryQF transform(const TernaryQF& f, const Mat3& u);

Int disc_ternary(const TernaryQF& f);
TernaryQF adjoint(const TernaryQF& f);

struct Reciprocal {
    TernaryQF FB;
    Int I1;
};
Reciprocal reciprocal(const TernaryQF& f);

enum class Primitivity { properly_primitive, primitive_odd_cross, improperly_primitive, other };
Primitivity primitivity(const TernaryQF& f);
std::string to_string(Primitivity p);

struct GenusInvariants {
    Int I1, I2;
    Int omega, delta;  // zero when not defined for the form
    Primitivity primitivity;
};
GenusInvariants basic_invariants(const TernaryQF& f);

struct TernaryValue {
    Vec3 v;
    Int value;
};
// gcd(v) = 1 and gcd(value, n) = 1 for primitive f.
TernaryValue represent_coprime(const TernaryQF& f, const Int& n);

struct CharacterSet {
    std::vector<Character> chars;
    bool unhandled_residue = false;  // 2-adic part not covered by the I1 mod 32 table
};
CharacterSet ternary_character_set(const Int& I1);

struct CharacterData {
    std::vector<std::pair<Character, int>> values;
    bool unhandled_residue = false;
};
CharacterData character_data(const TernaryQF& f);

// Common value on every represented number coprime to the modulus, taken at a coprime value.
int ternary_character_value(const TernaryQF& f, const Character& chi);

bool genus_equal(const TernaryQF& f1, const TernaryQF& f2);

bool is_eisenstein_reduced(const TernaryQF& f);
struct TernaryReduction {
    TernaryQF reduced;
    Mat3 transform;
};
TernaryReduction eisenstein_reduction(const TernaryQF& f);
TernaryQF eisenstein_reduce(const TernaryQF& f);
bool equivalent_ternary(const TernaryQF& f1, const TernaryQF& f2);

// Every v with f(v) = value and |v_i| <= coord_bound (no bound when zero), shell order.
std::vector<Vec3> solutions(const TernaryQF& f, const Int& value, const Int& coord_bound = 0);

struct PhiResult {
    Mat32 T;
    BinaryQF phi;
};
PhiResult produce_phi(const TernaryQF& f, const Vec3& v);
Int minors_gcd(const Mat32& t);

struct TernaryPrime {
    Vec3 v;
    Int p;
};
// Odd prime value coprime to avoid; l1 shells scanned in descending lexicographic order.
TernaryPrime prime_represented_ternary(const TernaryQF& f, const Int& avoid, unsigned long budget);

enum class GeometricCase { primitive, imprimitive };

struct Witness {
    Vec3 v;
    Int n;  // f(v) = n^2 (primitive) or (2n)^2 (imprimitive)
};

struct Classification {
    bool geometric = false;
    std::optional<GeometricCase> kind;
    std::optional<Witness> witness;
    std::string reason;  // empty when geometric
};

Int default_witness_bound(const TernaryQF& f);
Classification is_geometric(const TernaryQF& f, const Int& bound = 0);

}  // namespace humbert
