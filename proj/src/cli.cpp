#include "humbert/cli.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>

namespace humbert::cli {

std::string status_name(Status s)
{
    switch (s) {
    case Status::ok: return "ok";
    case Status::not_geometric: return "not-geometric";
    case Status::search_exhausted: return "search-exhausted";
    case Status::invalid_input: return "invalid-input";
    case Status::verification_failed: return "verification-failed";
    case Status::internal_error: return "internal-error";
    }
    return "?";
}

int exit_code(Status s)
{
    switch (s) {
    case Status::ok: return 0;
    case Status::invalid_input: return 2;
    case Status::not_geometric: return 3;
    case Status::search_exhausted: return 4;
    case Status::verification_failed: return 5;
    case Status::internal_error: return 1;
    }
    return 1;
}

std::vector<Int> parse_integers(const std::string& s)
{
    size_t i = 0;
    auto fail = [&](const std::string& what) {
        throw Error(ErrorKind::invalid_input, "parse-error", "at position " + std::to_string(i) + ": " + what);
    };
    auto ws = [&] {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    };
    std::vector<Int> out;
    ws();
    if (i >= s.size() || s[i] != '[') fail("expected '['");
    ++i;
    for (;;) {
        ws();
        size_t start = i;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
        size_t digits = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == digits) fail("expected an integer");
        std::string tok = s.substr(start, i - start);
        if (tok[0] == '+') tok.erase(0, 1);
        out.emplace_back(tok, 10);
        ws();
        if (i < s.size() && s[i] == ',') {
            ++i;
            continue;
        }
        if (i < s.size() && s[i] == ']') {
            ++i;
            break;
        }
        fail("expected ',' or ']'");
    }
    ws();
    if (i != s.size()) fail("trailing characters");
    return out;
}

BinaryQF parse_binary(const std::string& literal)
{
    auto v = parse_integers(literal);
    if (v.size() != 3) throw Error(ErrorKind::invalid_input, "parse-error", "expected 3 integers, got " + std::to_string(v.size()));
    return {v[0], v[1], v[2]};
}

TernaryQF parse_ternary(const std::string& literal)
{
    auto v = parse_integers(literal);
    if (v.size() != 6) throw Error(ErrorKind::invalid_input, "parse-error", "expected 6 integers, got " + std::to_string(v.size()));
    return {v[0], v[1], v[2], v[3], v[4], v[5]};
}

json to_json(const Int& x) { return x.get_str(); }

json to_json(const BinaryQF& q) { return json::array({to_json(q.a), to_json(q.b), to_json(q.c)}); }

json to_json(const TernaryQF& f)
{
    json a = json::array();
    for (const auto& x : f.coeffs()) a.push_back(to_json(x));
    return a;
}

json to_json(const PolarizationTriple& s)
{
    return {{"n", to_json(s.n)}, {"m", to_json(s.m)}, {"k", to_json(s.k)}, {"d", to_json(s.d)}};
}

namespace {

json vec_json(const Vec3& v) { return json::array({to_json(v[0]), to_json(v[1]), to_json(v[2])}); }

json mat_json(const Mat32& t)
{
    json m = json::array();
    for (const auto& row : t) m.push_back(json::array({to_json(row[0]), to_json(row[1])}));
    return m;
}

Int int_of(const json& j)
{
    if (j.is_string()) return Int(j.get<std::string>(), 10);
    if (j.is_number_integer()) return Int(j.dump(), 10);
    throw Error(ErrorKind::invalid_input, "descriptor-field", j.dump());
}

BinaryQF binary_of(const json& j)
{
    if (!j.is_array() || j.size() != 3) throw Error(ErrorKind::invalid_input, "descriptor-field", j.dump());
    return {int_of(j[0]), int_of(j[1]), int_of(j[2])};
}

TernaryQF ternary_of(const json& j)
{
    if (!j.is_array() || j.size() != 6) throw Error(ErrorKind::invalid_input, "descriptor-field", j.dump());
    return {int_of(j[0]), int_of(j[1]), int_of(j[2]), int_of(j[3]), int_of(j[4]), int_of(j[5])};
}

std::string lattice_generator(const SurfaceDescriptor& d)
{
    return "(" + Int(-d.bprime).get_str() + "+sqrt(" + d.Dprime.get_str() + "))/2";
}

std::string triple_str(const PolarizationTriple& s)
{
    return "(" + s.n.get_str() + "," + s.m.get_str() + "," + s.k.get_str() + ")";
}

std::string vec_str(const Vec3& v)
{
    return "(" + v[0].get_str() + "," + v[1].get_str() + "," + v[2].get_str() + ")";
}

Status status_of(const Error& e)
{
    switch (e.kind()) {
    case ErrorKind::invalid_input: return Status::invalid_input;
    case ErrorKind::not_geometric: return Status::not_geometric;
    case ErrorKind::search_exhausted: return Status::search_exhausted;
    case ErrorKind::internal: return Status::internal_error;
    }
    return Status::internal_error;
}

template <class F>
CommandResult guarded(F&& body)
{
    try {
        return body();
    } catch (const Error& e) {
        CommandResult r;
        r.status = status_of(e);
        r.payload = {{"error", e.tag()}, {"message", e.what()}};
        r.diagnostics.push_back(e.what());
        if (e.kind() == ErrorKind::search_exhausted)
            r.diagnostics.push_back("raise --max-search or HUMBERT_MAX_SEARCH");
        r.text.push_back(std::string("error: ") + e.what());
        return r;
    }
}

}  // namespace

json to_json(const SurfaceDescriptor& d)
{
    json tr = {{"flow", d.trace.flow},
               {"prime_form", to_json(d.trace.prime_form)},
               {"v", vec_json(d.trace.v)},
               {"phi_source", to_json(d.trace.phi_source)},
               {"T", mat_json(d.trace.phi.T)},
               {"phi", to_json(d.trace.phi.phi)},
               {"type_form", to_json(d.trace.type_form)}};
    if (d.trace.q_f) tr["q_f"] = to_json(*d.trace.q_f);
    if (d.trace.a) tr["a"] = to_json(*d.trace.a);
    if (d.trace.b) tr["b"] = to_json(*d.trace.b);
    return {{"D", to_json(d.D)},
            {"Dprime", to_json(d.Dprime)},
            {"kappa", to_json(d.kappa)},
            {"p", to_json(d.p)},
            {"bprime", to_json(d.bprime)},
            {"degree_form", to_json(d.degree_form)},
            {"triple", to_json(d.triple)},
            {"isogeny_degree", to_json(d.isogeny_degree)},
            {"verification_form", to_json(d.verification_form)},
            {"reduced_verification_form", to_json(d.reduced_verification_form)},
            {"lattice_basis", {{"field_discriminant", to_json(d.Dprime)},
                               {"generators", json::array({d.p.get_str(), lattice_generator(d)})}}},
            {"trace", tr}};
}

SurfaceDescriptor descriptor_from_json(const json& j)
{
    if (!j.is_object()) throw Error(ErrorKind::invalid_input, "descriptor-not-object");
    auto need = [&](const char* k) -> const json& {
        if (!j.contains(k)) throw Error(ErrorKind::invalid_input, "descriptor-missing-field", k);
        return j.at(k);
    };
    SurfaceDescriptor d;
    d.D = int_of(need("D"));
    d.Dprime = int_of(need("Dprime"));
    d.kappa = int_of(need("kappa"));
    d.p = int_of(need("p"));
    d.bprime = int_of(need("bprime"));
    d.degree_form = binary_of(need("degree_form"));
    const json& t = need("triple");
    d.triple = {int_of(t.at("n")), int_of(t.at("m")), int_of(t.at("k")), int_of(t.at("d"))};
    d.isogeny_degree = int_of(need("isogeny_degree"));
    d.verification_form = ternary_of(need("verification_form"));
    d.reduced_verification_form = ternary_of(need("reduced_verification_form"));
    return d;
}

CommandResult cmd_classify(const std::string& literal, const Int& bound)
{
    return guarded([&] {
        TernaryQF f = parse_ternary(literal);
        Classification c = is_geometric(f, bound);
        CommandResult r;
        r.payload = {{"form", to_json(f)},
                     {"geometric", c.geometric},
                     {"disc", to_json(f.disc())},
                     {"content", to_json(f.content())}};
        r.payload["case"] = c.kind ? (*c.kind == GeometricCase::primitive ? "primitive" : "imprimitive") : json(nullptr);
        if (c.witness)
            r.payload["witness"] = {{"v", vec_json(c.witness->v)}, {"n", to_json(c.witness->n)}, {"value", to_json(f(c.witness->v))}};
        else
            r.payload["witness"] = nullptr;
        try {
            GenusInvariants g = basic_invariants(f.content() == 4 ? f.divided(2) : f);
            r.payload["I1"] = to_json(g.I1);
            r.payload["I2"] = to_json(g.I2);
            r.payload["primitivity"] = to_string(g.primitivity);
        } catch (const Error& e) {
            r.payload["I1"] = nullptr;
            r.payload["I2"] = nullptr;
            r.diagnostics.push_back(e.what());
        }
        r.text.push_back("form " + f.str() + ", disc " + f.disc().get_str() + ", content " + f.content().get_str());
        if (c.geometric) {
            r.text.push_back(std::string("geometric (") + r.payload["case"].get<std::string>() + "), witness f" +
                             vec_str(c.witness->v) + " = " + f(c.witness->v).get_str());
        } else {
            r.status = Status::not_geometric;
            r.diagnostics.push_back(c.reason);
            r.text.push_back("not geometric: " + c.reason);
        }
        return r;
    });
}

namespace {

void describe(const SurfaceDescriptor& d, const Verification& v, std::vector<std::string>& out)
{
    const auto& t = d.trace;
    out.push_back("flow: " + t.flow);
    if (t.q_f) {
        std::string line = "Step 1. q_f = " + t.q_f->str();
        if (t.a) line += " (a = " + t.a->get_str() + ", b = " + t.b->get_str() + ")";
        out.push_back(line);
    }
    out.push_back("Step 2. F = " + t.prime_form.str() + ", p = " + d.p.get_str() + " at " + vec_str(t.v));
    out.push_back("Step 3. q~ = " + d.degree_form.str() + " (D = " + d.D.get_str() + ", D' = " + d.Dprime.get_str() +
                  ", kappa = " + d.kappa.get_str() + ")");
    out.push_back("Step 4. phi = " + t.phi.phi.str() + " from " + t.phi_source.str() + ", type form " + t.type_form.str());
    out.push_back("Step 5. s = " + triple_str(d.triple) + " in P(" + d.triple.d.get_str() + ")");
    out.push_back("Step 6. A = C/O_D x C/L, L = <" + d.p.get_str() + ", " + lattice_generator(d) +
                  ">, isogeny degree " + d.isogeny_degree.get_str());
    out.push_back("Step 7. q_(A,theta) = " + d.verification_form.str() + " ~ " + d.reduced_verification_form.str() +
                  (v.ok ? ": verified" : ": NOT verified"));
    for (const auto& x : v.diagnostics) out.push_back("  " + x);
}

}  // namespace

CommandResult cmd_construct(const std::string& literal, Mode mode, unsigned long budget)
{
    return guarded([&] {
        TernaryQF f = parse_ternary(literal);
        SurfaceDescriptor d = construct(f, mode, budget);
        Verification v = verify(d, f);
        CommandResult r;
        r.payload = {{"form", to_json(f)},
                     {"mode", mode == Mode::full ? "full" : "simplified"},
                     {"descriptor", to_json(d)},
                     {"verified", v.ok}};
        r.diagnostics = v.diagnostics;
        describe(d, v, r.text);
        if (!v.ok) r.status = Status::verification_failed;
        return r;
    });
}

CommandResult cmd_verify(const std::string& literal, const std::optional<json>& descriptor, Mode mode,
                         unsigned long budget)
{
    return guarded([&] {
        TernaryQF f = parse_ternary(literal);
        SurfaceDescriptor d = descriptor ? descriptor_from_json(*descriptor) : construct(f, mode, budget);
        Verification v = verify(d, f);
        CommandResult r;
        r.payload = {{"form", to_json(f)}, {"verified", v.ok}, {"source", descriptor ? "descriptor" : "constructed"}};
        r.diagnostics = v.diagnostics;
        r.text.push_back(std::string(v.ok ? "verified" : "NOT verified") + " against " + f.str());
        for (const auto& x : v.diagnostics) r.text.push_back("  " + x);
        if (!v.ok) r.status = Status::verification_failed;
        return r;
    });
}

namespace {

struct Check {
    std::string name;
    json expected, computed;
    bool match;
};

json checks_json(const std::vector<Check>& cs)
{
    json a = json::array();
    for (const auto& c : cs) a.push_back({{"name", c.name}, {"expected", c.expected}, {"computed", c.computed}, {"match", c.match}});
    return a;
}

CommandResult reproduce_example(unsigned long budget)
{
    const TernaryQF f{4, 12, 28, 0, 4, 4};
    SurfaceDescriptor d = construct(f, Mode::full, budget);
    Verification v = verify(d, f);
    const auto& t = d.trace;
    std::vector<Check> cs;
    auto add = [&](const std::string& n, const json& e, const json& c) { cs.push_back({n, e, c, e == c}); };
    add("q_f", to_json(BinaryQF{3, 2, 25}), t.q_f ? to_json(*t.q_f) : json(nullptr));
    add("a", "3", t.a ? to_json(*t.a) : json(nullptr));
    add("b", "2", t.b ? to_json(*t.b) : json(nullptr));
    add("F", to_json(TernaryQF{84, 27, 11, 2, -12, -28}), to_json(t.prime_form));
    add("p", "11", to_json(d.p));
    add("v", vec_json({0, 0, 1}), vec_json(t.v));
    add("qtilde", to_json(BinaryQF{11, 12, 10}), to_json(d.degree_form));
    add("phi", to_json(BinaryQF{10, 14, 6}), to_json(t.phi.phi));
    add("s", to_json(PolarizationTriple{2, 50, 3, 11}), to_json(d.triple));
    add("verification_form", to_json(TernaryQF{4, 2832500, 1336, -121200, -144, 6732}), to_json(d.verification_form));
    add("reduced_equals_reduced_input", to_json(eisenstein_reduce(f)), to_json(d.reduced_verification_form));
    CommandResult r;
    bool all = v.ok;
    for (const auto& c : cs) all = all && c.match;
    if (!(t.phi.phi == BinaryQF{10, 14, 6}) && equivalent(t.phi.phi, BinaryQF{10, 14, 6}))
        r.diagnostics.push_back("phi differs from [10,14,6] but is equivalent to it");
    r.diagnostics.push_back("canonical Eisenstein representative of the input class is " + eisenstein_reduce(f).str());
    r.payload = {{"target", "example"}, {"checks", checks_json(cs)}, {"verified", v.ok}, {"all_match", all}};
    for (const auto& c : cs)
        r.text.push_back((c.match ? "match    " : "MISMATCH ") + c.name + ": expected " + c.expected.dump() + ", computed " + c.computed.dump());
    r.text.push_back(std::string("verification: ") + (v.ok ? "passed" : "FAILED"));
    if (!all) r.status = Status::verification_failed;
    return r;
}

struct TableRow {
    TernaryQF f;
    Int D;
    BinaryQF qt;
    Int p;
    PolarizationTriple s;
    bool discrepancy;
};

std::vector<TableRow> table_rows()
{
    return {{{4, 4, 5, 4, 4, 4}, -11, {3, 1, 1}, 3, {2, 122, 9, 3}, false},
            {{4, 4, 9, 4, 4, 4}, -23, {3, 1, 2}, 3, {2, 122, 9, 3}, false},
            {{4, 4, 5, 0, 0, -4}, -15, {23, 13, 2}, 23, {2, 104, 3, 23}, false},
            {{4, 4, 9, 0, 0, -4}, -27, {39, 21, 3}, 13, {2, 7, 1, 39}, true}};
}

CommandResult reproduce_table(unsigned long budget)
{
    CommandResult r;
    json rows = json::array();
    bool all = true;
    for (const auto& row : table_rows()) {
        SurfaceDescriptor d = construct(row.f, Mode::simplified, budget);
        SurfaceDescriptor dfull = construct(row.f, Mode::full, budget);
        Verification v = verify(d, row.f);
        Verification vfull = verify(dfull, row.f);
        auto triple_plain = [](const PolarizationTriple& s) {
            return json::array({to_json(s.n), to_json(s.m), to_json(s.k)});
        };
        std::vector<Check> cs = {
            {"D", to_json(row.D), to_json(d.D), row.D == d.D},
            {"qtilde", to_json(row.qt), to_json(d.degree_form), row.qt == d.degree_form},
            {"p", to_json(row.p), to_json(d.p), row.p == d.p},
            {"s", triple_plain(row.s), triple_plain(d.triple),
             row.s.n == d.triple.n && row.s.m == d.triple.m && row.s.k == d.triple.k},
        };
        bool fields = true;
        for (const auto& c : cs) fields = fields && c.match;
        bool same_as_full = d.degree_form == dfull.degree_form && d.triple == dfull.triple && d.p == dfull.p;
        bool row_ok = v.ok && vfull.ok && (row.discrepancy || fields);
        all = all && row_ok;
        rows.push_back({{"form", to_json(row.f)},
                        {"checks", checks_json(cs)},
                        {"verified", v.ok},
                        {"full_mode_verified", vfull.ok},
                        {"full_mode_coincides", same_as_full},
                        {"expected_discrepancy", row.discrepancy},
                        {"ok", row_ok}});
        std::string line = row.f.str() + ": D " + d.D.get_str() + ", q~ " + d.degree_form.str() + ", p " + d.p.get_str() +
                           ", s " + triple_str(d.triple) + (v.ok ? ", verified" : ", NOT verified");
        if (!fields) line += row.discrepancy ? " (printed row flagged: expected discrepancy)" : " (MISMATCH with printed row)";
        r.text.push_back(line);
        if (row.discrepancy && !fields) {
            bool printed_valid = row.s.valid() && row.s.d == d.isogeny_degree;
            r.diagnostics.push_back(row.f.str() + ": printed triple " + triple_str(row.s) +
                                    (printed_valid ? " lies in P(" : " does not lie in P(") + d.isogeny_degree.get_str() +
                                    "); computed " + triple_str(d.triple));
        }
    }
    r.payload = {{"target", "table"}, {"rows", rows}, {"all_ok", all}};
    if (!all) r.status = Status::verification_failed;
    return r;
}

}  // namespace

CommandResult cmd_reproduce(const std::string& target, unsigned long budget)
{
    return guarded([&] {
        if (target == "example") return reproduce_example(budget);
        if (target == "table") return reproduce_table(budget);
        throw Error(ErrorKind::invalid_input, "unknown-target", target);
    });
}

CommandResult cmd_report(const std::string& literal, const std::optional<Int>& subcovers, bool d6)
{
    return guarded([&] {
        CommandResult r;
        auto ints = parse_integers(literal);
        if (ints.size() == 3) {
            BinaryQF q{ints[0], ints[1], ints[2]};
            if (subcovers) throw Error(ErrorKind::invalid_input, "subcovers-need-ternary");
            bool v = has_D6(q);
            r.payload = {{"form", to_json(q)}, {"d6", v}};
            r.text.push_back("D6 in Aut(C): " + std::string(v ? "yes" : "no"));
            return r;
        }
        TernaryQF f = parse_ternary(literal);
        Classification c = is_geometric(f);
        if (!c.geometric) throw Error(ErrorKind::not_geometric, "not-geometric", f.str() + ": " + c.reason);
        r.payload = {{"form", to_json(f)}};
        if (subcovers) {
            json a = json::array();
            std::string line = "elliptic subcover degrees <= " + subcovers->get_str() + ":";
            for (const auto& n : subcover_degrees(f, *subcovers)) {
                a.push_back(to_json(n));
                line += " " + n.get_str();
            }
            r.payload["subcovers"] = a;
            r.text.push_back(line);
        }
        if (d6) {
            bool v = has_D6(f);
            r.payload["d6"] = v;
            r.text.push_back("D6 in Aut(C): " + std::string(v ? "yes" : "no"));
        }
        return r;
    });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Refined Humbert invariants: classification, construction and verification"};
    app.require_subcommand(1);
    unsigned long budget = default_search_budget();
    bool as_json = false;
    std::string form, mode_name = "full", target, descriptor_path, bound_str = "0", subcovers_str;
    bool d6 = false;

    auto add_json = [&](CLI::App* sc) { sc->add_flag("--json", as_json, "Emit JSON"); };
    auto add_mode = [&](CLI::App* sc) {
        sc->add_option("--mode", mode_name, "full or simplified")->check(CLI::IsMember({"full", "simplified"}));
        sc->add_option("--max-search", budget, "Prime search budget (form evaluations)");
    };

    auto* classify = app.add_subcommand("classify", "Decide whether a ternary form is geometric");
    classify->add_option("form", form, "[a,b,c,r,s,t]")->required();
    classify->add_option("--bound", bound_str, "Square witness bound");
    add_json(classify);

    auto* cons = app.add_subcommand("construct", "Build a surface descriptor for a geometric form");
    cons->add_option("form", form, "[a,b,c,r,s,t]")->required();
    add_mode(cons);
    add_json(cons);

    auto* ver = app.add_subcommand("verify", "Check a descriptor against a form");
    ver->add_option("form", form, "[a,b,c,r,s,t]")->required();
    ver->add_option("--descriptor", descriptor_path, "Descriptor JSON file (- for stdin); constructs one if omitted");
    add_mode(ver);
    add_json(ver);

    auto* rep = app.add_subcommand("reproduce", "Re-run the worked example or the table fixtures");
    rep->add_option("target", target, "example or table")->required()->check(CLI::IsMember({"example", "table"}));
    rep->add_option("--max-search", budget, "Prime search budget (form evaluations)");
    add_json(rep);

    auto* report = app.add_subcommand("report", "Elliptic subcovers and D6 test");
    report->add_option("form", form, "[a,b,c,r,s,t] or [a,b,c]")->required();
    report->add_option("--subcovers", subcovers_str, "Largest subcover degree to search");
    report->add_flag("--d6", d6, "Test for D6 in the automorphism group");
    add_json(report);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    Mode mode = mode_name == "simplified" ? Mode::simplified : Mode::full;
    CommandResult r;
    auto parse_int_opt = [&](const std::string& s, const char* what) -> std::optional<Int> {
        Int v;
        if (v.set_str(s, 10) != 0 || v < 0) return std::nullopt;
        (void)what;
        return v;
    };

    if (*classify) {
        auto b = parse_int_opt(bound_str, "--bound");
        r = b ? cmd_classify(form, *b) : guarded([] () -> CommandResult { throw Error(ErrorKind::invalid_input, "bad-bound"); });
    } else if (*cons) {
        r = cmd_construct(form, mode, budget);
    } else if (*ver) {
        std::optional<json> desc;
        if (!descriptor_path.empty()) {
            r = guarded([&]() -> CommandResult {
                std::stringstream buf;
                if (descriptor_path == "-") {
                    buf << std::cin.rdbuf();
                } else {
                    std::ifstream in(descriptor_path);
                    if (!in) throw Error(ErrorKind::invalid_input, "descriptor-unreadable", descriptor_path);
                    buf << in.rdbuf();
                }
                json j = json::parse(buf.str(), nullptr, false);
                if (j.is_discarded()) throw Error(ErrorKind::invalid_input, "descriptor-not-json", descriptor_path);
                if (j.contains("payload") && j["payload"].contains("descriptor")) j = j["payload"]["descriptor"];
                else if (j.contains("descriptor")) j = j["descriptor"];
                desc = j;
                return {};
            });
            if (r.status != Status::ok) desc.reset();
        }
        if (r.status == Status::ok) r = cmd_verify(form, desc, mode, budget);
    } else if (*rep) {
        r = cmd_reproduce(target, budget);
    } else if (*report) {
        std::optional<Int> sc;
        bool bad = false;
        if (!subcovers_str.empty()) {
            sc = parse_int_opt(subcovers_str, "--subcovers");
            bad = !sc;
        }
        if (bad)
            r = guarded([]() -> CommandResult { throw Error(ErrorKind::invalid_input, "bad-subcovers"); });
        else if (!sc && !d6)
            r = guarded([]() -> CommandResult { throw Error(ErrorKind::invalid_input, "nothing-to-report", "use --subcovers N and/or --d6"); });
        else
            r = cmd_report(form, sc, d6);
    }

    if (as_json) {
        json j = {{"status", status_name(r.status)}, {"payload", r.payload}, {"diagnostics", r.diagnostics}};
        out << j.dump(2) << "\n";
    } else {
        for (const auto& line : r.text) out << line << "\n";
        if (r.status != Status::ok) err << "status: " << status_name(r.status) << "\n";
    }
    return exit_code(r.status);
}

}  // namespace humbert::cli
