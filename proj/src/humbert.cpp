#include "humbert/humbert.hpp"

namespace humbert {

TernaryQF refined_humbert(const BinaryQF& qt, const PolarizationTriple& s)
{
    if (!s.valid()) throw Error(ErrorKind::invalid_input, "invalid-triple");
    if (qt.a != s.d)
        throw Error(ErrorKind::invalid_input, "degree-mismatch", qt.a.get_str() + " vs " + s.d.get_str());
    const Int &n = s.n, &m = s.m, &k = s.k, &a = qt.a, &b = qt.b, &c = qt.c;
    Int mn = m * n;
    return {n * n, m * m * (mn + 3) * a, b * b * k * k + 4 * c, -2 * b * m * (mn + 1), -2 * b * k * n, 2 * k * a * (mn + 2)};
}

namespace {

std::string char_table(const std::vector<std::pair<Character, int>>& vals)
{
    std::string out;
    for (const auto& [chi, v] : vals) out += (out.empty() ? "" : " ") + chi.name() + "=" + std::to_string(v);
    return out;
}

}  // namespace

BinaryQF qf_primitive(const TernaryQF& f)
{
    if (f.content() != 1) throw Error(ErrorKind::invalid_input, "needs-primitive", f.str());
    Reciprocal rf = reciprocal(f);
    if (mod(rf.I1, 16) != 0) throw Error(ErrorKind::not_geometric, "not-geometric", "16 does not divide I1 of " + f.str());
    Int kappa = abs(rf.I1) / 16;
    Int disc = f.disc();
    if (mod(disc, 16 * kappa * kappa) != 0)
        throw Error(ErrorKind::not_geometric, "not-geometric", "disc mismatch for " + f.str());
    Int dq = disc / (16 * kappa * kappa);
    Int r4 = mod(dq, 4);
    if (r4 != 0 && r4 != 1) throw Error(ErrorKind::not_geometric, "not-geometric", "disc " + dq.get_str());

    TernaryValue fv = represent_coprime(rf.FB, 2 * abs(dq));
    std::optional<BinaryQF> first;
    std::string diag;
    for (const auto& q : reduced_forms_of_disc(dq, 1)) {
        auto qv = character_values(q);
        bool match = true;
        for (const auto& [chi, val] : qv)
            if (eval_character(chi, fv.value) != val) match = false;
        diag += q.str() + ": " + char_table(qv) + (match ? " (match)" : "") + "; ";
        if (!match) continue;
        BinaryQF scaled = q.scaled(kappa);
        if (equivalent_ternary(f_of_binary(scaled), f)) return scaled;
        if (!first) first = scaled;
    }
    if (first) return *first;
    throw Error(ErrorKind::internal, "no-matching-form", "F^B value " + fv.value.get_str() + "; " + diag);
}

ImprimitiveParams imprimitive_params(const Int& I1, const Int& I2)
{
    if (I1 <= 0 || mod(I1, 2) == 0 || I2 <= 0 || mod(I2, 2) != 0)
        throw Error(ErrorKind::invalid_input, "bad-invariants", I1.get_str() + ", " + I2.get_str());
    const Int target = -2 * I2;
    for (Int a = 1; a < 100000000; a += 2) {
        if (mod(a * I1, 4) != 3) continue;
        bool ok = true;
        for (const auto& pe : factor(a))
            if (jacobi(target, pe.p) != 1) {
                ok = false;
                break;
            }
        if (!ok) continue;
        for (Int b = 2; b <= 2 * a; b += 2)
            if (mod(b * b - target, 4 * a) == 0) return {I1, I2, a, b};
    }
    throw Error(ErrorKind::search_exhausted, "degree-form-search-exhausted");
}

BinaryQF q_I1_I2(const ImprimitiveParams& prm)
{
    const Int &a = prm.a, &b = prm.b;
    return {prm.I1 * a, prm.I1 * b, prm.I1 * ((b * b + 2 * prm.I2) / (4 * a))};
}

namespace {

ImprimitiveParams params_of(const TernaryQF& f)
{
    if (f.content() != 4 || primitivity(f.divided(2)) != Primitivity::improperly_primitive)
        throw Error(ErrorKind::not_geometric, "not-geometric", "f/2 is not improperly primitive: " + f.str());
    GenusInvariants g = basic_invariants(f.divided(4));
    return imprimitive_params(abs(g.I1), -g.I2 / 8);
}

}  // namespace

BinaryQF qf_imprimitive(const TernaryQF& f) { return q_I1_I2(params_of(f)); }

namespace {

SurfaceDescriptor assemble(const BinaryQF& qt_prim, const Int& kappa, const Int& p, const PolarizationTriple& s,
                           ConstructionTrace trace)
{
    SurfaceDescriptor d;
    d.degree_form = qt_prim.scaled(kappa);
    d.D = d.degree_form.disc();
    d.Dprime = qt_prim.disc();
    d.kappa = kappa;
    d.p = p;
    d.bprime = qt_prim.b;
    d.triple = s;
    d.isogeny_degree = kappa * p;
    d.verification_form = refined_humbert(d.degree_form, s);
    d.reduced_verification_form = eisenstein_reduce(d.verification_form);
    d.trace = std::move(trace);
    return d;
}

}  // namespace

SurfaceDescriptor construct(const TernaryQF& f, Mode mode, unsigned long budget)
{
    Classification cls = is_geometric(f);
    if (!cls.geometric) throw Error(ErrorKind::not_geometric, "not-geometric", f.str() + ": " + cls.reason);
    bool prim = *cls.kind == GeometricCase::primitive;
    ConstructionTrace tr;

    if (mode == Mode::full) {
        BinaryQF q;
        TernaryQF base = f;
        if (prim) {
            tr.flow = "primitive";
            q = qf_primitive(f);
        } else {
            tr.flow = "imprimitive";
            ImprimitiveParams prm = params_of(f);
            tr.a = prm.a;
            tr.b = prm.b;
            q = q_I1_I2(prm);
            base = f.divided(4);
        }
        tr.q_f = q;
        Int kappa = q.content();
        Int D = q.disc();
        Int Dp = D / (kappa * kappa);
        tr.prime_form = reciprocal(base).FB;
        TernaryPrime pr = prime_represented_ternary(tr.prime_form, abs(D), budget);
        tr.v = pr.v;
        tr.phi_source = prim ? f : f.divided(2);
        tr.phi = produce_phi(tr.phi_source, pr.v);
        tr.type_form = prim ? tr.phi.phi : tr.phi.phi.scaled(2);
        PolarizationTriple s = type_d_triple(tr.type_form, kappa * pr.p);
        return assemble(form_representing_prime(Dp, pr.p), kappa, pr.p, s, std::move(tr));
    }

    Int kf = prim ? Int(1) : Int(4);
    tr.flow = prim ? "simplified/primitive" : "simplified/imprimitive";
    TernaryQF fp = f.divided(kf);
    tr.prime_form = reciprocal(fp).FB;
    TernaryPrime pr = prime_represented_ternary(tr.prime_form, abs(fp.disc()), budget);
    tr.v = pr.v;
    tr.phi_source = prim ? f : f.divided(2);
    tr.phi = produce_phi(tr.phi_source, pr.v);
    tr.type_form = prim ? tr.phi.phi : tr.phi.phi.scaled(2);
    Int d = -tr.type_form.disc() / 16;
    if (mod(d, pr.p) != 0) throw Error(ErrorKind::internal, "degree-not-multiple-of-p", d.get_str());
    Int kappa = d / pr.p;
    Int D = f.disc() / 16;
    if (mod(D, kappa * kappa) != 0) throw Error(ErrorKind::internal, "content-mismatch", kappa.get_str());
    PolarizationTriple s = type_d_triple(tr.type_form, d);
    return assemble(form_representing_prime(D / (kappa * kappa), pr.p), kappa, pr.p, s, std::move(tr));
}

Verification verify(const SurfaceDescriptor& desc, const TernaryQF& f)
{
    Verification v;
    auto& dg = v.diagnostics;
    auto check = [&](bool ok, const std::string& what) {
        if (!ok) dg.push_back(what);
    };
    try {
        const BinaryQF& qt = desc.degree_form;
        check(desc.triple.valid(), "triple violates n m - k^2 d = 1");
        check(desc.triple.d == desc.isogeny_degree, "triple modulus differs from isogeny degree");
        check(desc.kappa * desc.p == desc.isogeny_degree, "isogeny degree differs from kappa p");
        check(qt.a == desc.isogeny_degree, "degree form does not represent the isogeny degree at (1,0)");
        check(qt.disc() == desc.D, "disc of degree form differs from D");
        check(mod(f.disc(), 16) == 0 && f.disc() / 16 == desc.D, "disc(f) differs from 16 D");
        check(desc.Dprime * desc.kappa * desc.kappa == desc.D, "D differs from kappa^2 D'");
        check(qt.content() == desc.kappa, "content of degree form differs from kappa");
        check(is_prime(desc.p) && mod(desc.p, 2) == 1, "p is not an odd prime");
        check(desc.kappa > 0 && qt.b == desc.kappa * desc.bprime, "b' differs from the primitive xy coefficient");
        if (!dg.empty()) return v;
        TernaryQF vf = refined_humbert(qt, desc.triple);
        check(vf == desc.verification_form, "stored verification form differs from recomputation");
        check(vf.disc() == 16 * desc.D, "disc of verification form differs from 16 D");
        TernaryQF red = eisenstein_reduce(vf);
        check(red == desc.reduced_verification_form, "stored reduced form differs from recomputation");
        check(red == eisenstein_reduce(f), "verification form is not equivalent to the input");
    } catch (const Error& e) {
        dg.push_back(e.what());
    }
    v.ok = dg.empty();
    return v;
}

std::vector<Int> subcover_degrees(const TernaryQF& f, const Int& maxN)
{
    std::vector<Int> out;
    for (Int N = 1; N <= maxN; ++N)
        for (const auto& v : solutions(f, N * N))
            if (gcd(gcd(v[0], v[1]), v[2]) == 1) {
                out.push_back(N);
                break;
            }
    return out;
}

bool has_D6(const TernaryQF& f)
{
    Int D = f.disc();
    auto admissible = [](const Int& num, Int& c) {
        if (mod(num, 48) != 0) return false;
        c = num / 48;
        Int r = mod(c, 4);
        return c > 1 && (r == 0 || r == 1);
    };
    Int c;
    if (admissible(64 - D, c) && equivalent_ternary(f, TernaryQF{4, 4, c, 4, 4, 4})) return true;
    if (admissible(-D, c) && equivalent_ternary(f, TernaryQF{4, 4, c, 0, 0, -4})) return true;
    return false;
}

bool has_D6(const BinaryQF& q) { return equivalent(q, BinaryQF{4, 4, 4}); }

}  // namespace humbert
