#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace humbert {

using Int = mpz_class;

enum class ErrorKind { invalid_input, not_geometric, search_exhausted, internal };

// Tagged failure shared by every module; tag() is a stable machine-readable code.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string tag, const std::string& detail = {});
    ErrorKind kind() const noexcept { return kind_; }
    const std::string& tag() const noexcept { return tag_; }

private:
    ErrorKind kind_;
    std::string tag_;
};

struct Egcd {
    Int g, x, y;
};

struct PrimePower {
    Int p;
    unsigned e;
    bool operator==(const PrimePower&) const = default;
};

struct Character {
    enum class Kind { odd_prime, minus_four, eight, minus_four_times_eight };
    Kind kind;
    Int modulus;

    static Character odd(const Int& ell);
    static Character minus_four();
    static Character eight();
    static Character minus_four_times_eight();

    bool operator==(const Character& o) const { return kind == o.kind && modulus == o.modulus; }
    std::string name() const;
};

// Classical iterative extended Euclid; g >= 0 and a*x + b*y = g.
Egcd egcd(const Int& a, const Int& b);

// Smallest nonnegative solution; moduli must be pairwise coprime.
Int crt(const std::vector<Int>& residues, const std::vector<Int>& moduli);

int jacobi(const Int& a, const Int& n);

int eval_character(const Character& chi, const Int& x);

// Smallest nonnegative root, Tonelli-Shanks.
std::optional<Int> sqrt_mod(const Int& a, const Int& p);
// The root Tonelli-Shanks lands on, before normalisation.
std::optional<Int> tonelli_shanks(const Int& a, const Int& p);

// Deterministic Miller-Rabin below 3.3e24, Baillie-PSW above.
bool is_prime(const Int& n);

std::vector<PrimePower> factor(const Int& n);

Int gcd(const Int& a, const Int& b);
Int abs(const Int& a);
Int mod(const Int& a, const Int& m);        // result in [0, |m|)
Int floor_div(const Int& a, const Int& b);
Int isqrt(const Int& n);                    // n >= 0
bool is_square(const Int& n, Int* root = nullptr);
Int inverse_mod(const Int& a, const Int& m);
std::string to_string(const Int& a);

}  // namespace humbert
