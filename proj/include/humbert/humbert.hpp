#pragma once

#include "humbert/binform.hpp"
#include "humbert/numtheory.hpp"
#include "humbert/ternform.hpp"

#include <optional>
#include <string>
#include <vector>

namespace humbert {

enum class Mode { full, simplified };

struct ConstructionTrace {
    std::string flow;                  // "primitive", "imprimitive", "simplified/primitive", ...
    std::optional<BinaryQF> q_f;       // absent in simplified mode
    std::optional<Int> a, b;           // degree-form search parameters (imprimitive, full)
    TernaryQF prime_form;              // F^B on which p was found
    Vec3 v;
    TernaryQF phi_source;              // form handed to produce_phi
    PhiResult phi;
    BinaryQF type_form;                // phi or 2 phi, of disc -16 kappa p
};

struct SurfaceDescriptor {
    Int D, Dprime, kappa, p, bprime;
    BinaryQF degree_form;
    PolarizationTriple triple;
    Int isogeny_degree;
    TernaryQF verification_form;
    TernaryQF reduced_verification_form;
    ConstructionTrace trace;
};

// [n^2, m^2(mn+3)a, b^2k^2+4c, -2bm(mn+1), -2bkn, 2ka(mn+2)] for qtilde = [a,b,c], a = s.d
TernaryQF refined_humbert(const BinaryQF& qtilde, const PolarizationTriple& s);

BinaryQF qf_primitive(const TernaryQF& f);

struct ImprimitiveParams {
    Int I1, I2, a, b;
};
ImprimitiveParams imprimitive_params(const Int& I1, const Int& I2);
BinaryQF q_I1_I2(const ImprimitiveParams& prm);
BinaryQF qf_imprimitive(const TernaryQF& f);

SurfaceDescriptor construct(const TernaryQF& f, Mode mode, unsigned long budget);

struct Verification {
    bool ok = false;
    std::vector<std::string> diagnostics;
};
Verification verify(const SurfaceDescriptor& desc, const TernaryQF& f);

std::vector<Int> subcover_degrees(const TernaryQF& f, const Int& maxN);

bool has_D6(const TernaryQF& f);
bool has_D6(const BinaryQF& q);  // rank-two case [4,4,4]

}  // namespace humbert
