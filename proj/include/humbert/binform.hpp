#pragma once

#include "humbert/numtheory.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace humbert {

// a x^2 + b xy + c y^2
struct BinaryQF {
    Int a, b, c;

    Int disc() const { return b * b - 4 * a * c; }
    Int content() const;
    BinaryQF primitive_part() const;
    BinaryQF scaled(const Int& k) const { return {a * k, b * k, c * k}; }
    Int operator()(const Int& x, const Int& y) const { return a * x * x + b * x * y + c * y * y; }
    bool positive_definite() const { return a > 0 && disc() < 0; }
    bool operator==(const BinaryQF& o) const { return a == o.a && b == o.b && c == o.c; }
    std::string str() const;
};

bool operator<(const BinaryQF& l, const BinaryQF& r);

// columns are the images of the basis vectors: (x,y) -> (m00 x + m01 y, m10 x + m11 y)
using Mat2 = std::array<std::array<Int, 2>, 2>;

Mat2 identity2();
Mat2 mul(const Mat2& l, const Mat2& r);
Int det(const Mat2& m);
BinaryQF transform(const BinaryQF& q, const Mat2& m);

// n m - k^2 d = 1, n, m > 0
struct PolarizationTriple {
    Int n, m, k, d;
    bool valid() const { return n > 0 && m > 0 && d > 0 && n * m - k * k * d == 1; }
    bool operator==(const PolarizationTriple& o) const
    {
        return n == o.n && m == o.m && k == o.k && d == o.d;
    }
};

struct Reduction {
    BinaryQF reduced;
    Mat2 transform;
};

// Gauss reduction |b| <= a <= c, b >= 0 when |b| = a or a = c; transform(q, t) == reduced.
Reduction reduce(const BinaryQF& q);

// GL2(Z) equivalence.
bool equivalent(const BinaryQF& q1, const BinaryQF& q2);

// Reduced forms of the given disc and content, ascending lexicographic order.
std::vector<BinaryQF> reduced_forms_of_disc(const Int& disc, const Int& content);

struct BinaryValue {
    Int x, y, value;
};

// gcd(x,y) = 1 and gcd(value, n) = 1 for primitive q.
BinaryValue represent_coprime(const BinaryQF& q, const Int& n);

std::vector<Character> character_set(const BinaryQF& q);
std::vector<std::pair<Character, int>> character_values(const BinaryQF& q);
bool in_principal_genus(const BinaryQF& q);

// [p, b, (b^2 - d)/4p] with b the smallest positive admissible value.
BinaryQF form_representing_prime(const Int& d, const Int& p);

struct SquareRep {
    Int x, y, N;
};

// Smallest N <= bound with gcd(N, coprime_to) = 1 and q(x,y) = N^2 primitively.
std::optional<SquareRep> represented_square(const BinaryQF& q, const Int& coprime_to, const Int& bound);

// All primitive (x,y) with q(x,y) = t, ordered as in the shell enumeration.
std::vector<std::pair<Int, Int>> primitive_solutions(const BinaryQF& q, const Int& t);

BinaryQF q_s(const PolarizationTriple& s);

PolarizationTriple type_d_triple(const BinaryQF& phi, const Int& d);

struct BinaryPrime {
    Int x, y, p;
};

// l1 shells n = 1, 2, ...; each shell scanned in descending lexicographic order.
BinaryPrime prime_represented_binary(const BinaryQF& q, const Int& avoid, unsigned long budget);

unsigned long default_search_budget();

}  // namespace humbert
