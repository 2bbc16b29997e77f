// Command-line front end for the cycubic library. Subcommands map onto the
// library operations; every rational prints as "p/q" (decimals appear only
// for root refinements). Exit codes: 0 success, 1 domain error, 2 bad input.

#include <exception>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "cycubic/cycubic.hpp"

using namespace cycubic;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitParse = 2;

struct PolyArg {
    std::string text;
    bool coeffs = false;

    Poly parse() const { return coeffs ? parse_poly_coeffs(text) : parse_poly(text); }
};

std::string decimal(double v, int digits) {
    std::ostringstream os;
    os << std::setprecision(digits) << std::fixed << v;
    return os.str();
}

void emit(bool as_json, const json& j, const std::string& text) {
    if (as_json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

int run_analyze(const PolyArg& arg, const Rational& precision, bool as_json) {
    Poly p = arg.parse();
    auto cert_result = certify(p);
    if (auto* reason = std::get_if<NotGaloisReason>(&cert_result)) {
        json j{{"input", format_poly(p)}, {"galois", false}, {"reason", to_string(*reason)}};
        std::ostringstream os;
        os << "input: " << format_poly(p) << "\n"
           << "galois: no\n"
           << "reason: " << to_string(*reason) << "\n";
        emit(as_json, j, os.str());
        return kExitDomain;
    }
    const GaloisCert& cert = std::get<GaloisCert>(cert_result);
    Poly monic = cert.poly.to_poly();
    QuadMap plus = perm_poly(cert, +1);
    QuadMap minus = perm_poly(cert, -1);
    Poly c_plus = coupled(monic, plus);
    Poly c_minus = coupled(monic, minus);
    RootTriple roots = real_roots(monic, precision);

    auto rep_result = representative(p);
    const Representative* rep = std::get_if<Representative>(&rep_result);

    auto coupled_info = [](const Poly& c) {
        Rational D = discriminant_cubic(MonicCubic::from_poly(c));
        auto r = representative(c);
        std::string k = std::holds_alternative<Representative>(r)
                            ? std::get<Representative>(r).rep.k.to_string()
                            : std::string("-");
        return std::pair<Rational, std::string>(D, k);
    };
    auto [dp, kp] = coupled_info(c_plus);
    auto [dm, km] = coupled_info(c_minus);

    json j;
    j["input"] = format_poly(p);
    j["monic"] = format_poly(monic);
    j["galois"] = true;
    j["D"] = cert.D.to_string();
    j["d"] = cert.d.to_string();
    j["roots"] = json::array();
    for (const auto& r : roots.roots) j["roots"].push_back(decimal(r.approx, 12));
    j["perm"] = {{"plus", format_poly(plus.to_poly())}, {"minus", format_poly(minus.to_poly())}};
    j["coupled"] = {{"plus", {{"poly", format_poly(c_plus)}, {"D", dp.to_string()}, {"k", kp}}},
                    {"minus", {{"poly", format_poly(c_minus)}, {"D", dm.to_string()}, {"k", km}}}};
    if (rep) {
        j["representative"] = {{"poly", format_poly(rep->rep.poly())},
                               {"a", rep->rep.a.to_string()},
                               {"k", rep->rep.k.to_string()}};
    }

    std::ostringstream os;
    os << "input: " << format_poly(p) << "\n"
       << "monic: " << format_poly(monic) << "\n"
       << "galois: yes\n"
       << "D: " << cert.D << "\n"
       << "d: " << cert.d << "\n"
       << "roots: " << decimal(roots.roots[0].approx, 12) << ", "
       << decimal(roots.roots[1].approx, 12) << ", " << decimal(roots.roots[2].approx, 12) << "\n"
       << "q(+): " << format_poly(plus.to_poly()) << "\n"
       << "q(-): " << format_poly(minus.to_poly()) << "\n"
       << "coupled(+): " << format_poly(c_plus) << "   (D = " << dp << ", k = " << kp << ")\n"
       << "coupled(-): " << format_poly(c_minus) << "   (D = " << dm << ", k = " << km << ")\n";
    if (rep) {
        os << "representative: " << format_poly(rep->rep.poly()) << "\n"
           << "k: " << rep->rep.k << "\n";
    }
    emit(as_json, j, os.str());
    return kExitOk;
}

int run_couple(const PolyArg& arg, const std::string& sign, bool as_json) {
    Poly p = arg.parse();
    GaloisCert cert = certify_or_throw(p);
    json j{{"input", format_poly(p)}};
    std::ostringstream os;
    if (sign.empty() || sign == "+") {
        Poly c = coupled(p, perm_poly(cert, +1));
        j["plus"] = format_poly(c);
        os << "coupled(+): " << format_poly(c) << "\n";
    }
    if (sign.empty() || sign == "-") {
        Poly c = coupled(p, perm_poly(cert, -1));
        j["minus"] = format_poly(c);
        os << "coupled(-): " << format_poly(c) << "\n";
    }
    emit(as_json, j, os.str());
    return kExitOk;
}

int run_rep(const PolyArg& arg, bool as_json) {
    Poly p = arg.parse();
    auto result = representative(p);
    if (auto* reason = std::get_if<NoRepReason>(&result)) {
        json j{{"input", format_poly(p)},
               {"representative", nullptr},
               {"reason", to_string(*reason)}};
        std::ostringstream os;
        os << "no representative: " << to_string(*reason) << "\n";
        emit(as_json, j, os.str());
        return kExitDomain;
    }
    const Representative& rep = std::get<Representative>(result);
    json j{{"input", format_poly(p)},
           {"representative", format_poly(rep.rep.poly())},
           {"a", rep.rep.a.to_string()},
           {"k", rep.rep.k.to_string()},
           {"witness",
            {{"alpha", rep.witness.alpha.to_string()},
             {"beta", rep.witness.beta.to_string()},
             {"scale", rep.witness.scale.to_string()}}}};
    std::ostringstream os;
    os << "representative: " << format_poly(rep.rep.poly()) << "\n"
       << "a: " << rep.rep.a << "\n"
       << "k: " << rep.rep.k << "\n"
       << "witness: alpha = " << rep.witness.alpha << ", beta = " << rep.witness.beta
       << ", scale = " << rep.witness.scale << "\n";
    emit(as_json, j, os.str());
    return kExitOk;
}

int run_char(const std::string& ktext, bool as_json) {
    Rational k = parse_rational(ktext);
    ClassRep rep = rep_from_k(k);
    bool reducible = !is_irreducible_cubic(rep.poly());
    json j{{"k", k.to_string()},
           {"a", rep.a.to_string()},
           {"representative", format_poly(rep.poly())},
           {"reducible", reducible}};
    std::ostringstream os;
    os << "k: " << k << "\n"
       << "a: " << rep.a << "\n"
       << "representative: " << format_poly(rep.poly()) << "\n"
       << "reducible: " << (reducible ? "yes" : "no") << "\n";
    emit(as_json, j, os.str());
    return kExitOk;
}

int run_phi(const std::string& ktext, long long iter, bool as_json) {
    Rational k = parse_rational(ktext);
    Rational value = phi_iter(k, iter);
    json j{{"k", k.to_string()}, {"n", iter}, {"value", value.to_string()}};
    std::ostringstream os;
    if (iter == 1)
        os << "phi(" << k << ") = " << value << "\n";
    else
        os << "phi^" << iter << "(" << k << ") = " << value << "\n";
    emit(as_json, j, os.str());
    return kExitOk;
}

int run_psi(const std::string& ktext, bool as_json) {
    Rational k = parse_rational(ktext);
    std::optional<Rational> value = psi(k);
    if (!value) {
        json j{{"k", k.to_string()}, {"value", nullptr}, {"error", "undefined at the pole"}};
        std::ostringstream os;
        os << "psi(" << k << ") is undefined at the pole 27/2\n";
        emit(as_json, j, os.str());
        return kExitDomain;
    }
    json j{{"k", k.to_string()}, {"value", value->to_string()}};
    std::ostringstream os;
    os << "psi(" << k << ") = " << *value << "\n";
    emit(as_json, j, os.str());
    return kExitOk;
}

int run_generator(const std::string& ktext, bool as_json) {
    Rational k = parse_rational(ktext);
    Rational g = generator(k);
    json j{{"k", k.to_string()}, {"generator", g.to_string()}};
    std::ostringstream os;
    os << "generator: " << g << "\n";
    emit(as_json, j, os.str());
    return kExitOk;
}

int run_superclass(const std::string& ktext, std::size_t max_nodes, bool as_json, bool as_dot) {
    Rational k = parse_rational(ktext);
    SuperclassGraph g = enumerate_superclass(k, max_nodes);
    if (as_dot) {
        std::cout << to_dot(g);
        return kExitOk;
    }
    if (as_json) {
        std::cout << to_json(g).dump(2) << "\n";
        return kExitOk;
    }
    std::ostringstream os;
    os << "generator: " << g.generator << "\n"
       << "exceptional: " << to_string(g.exceptional) << "\n"
       << "nodes (" << g.nodes.size() << "):\n";
    for (const auto& n : g.nodes) {
        os << "  k = " << std::left << std::setw(12) << n.k.to_string()
           << " a = " << std::setw(16) << n.a.to_string() << " depth " << n.depth << "  via "
           << to_string(n.edge_from_parent) << (n.reducible ? "  [reducible]" : "") << "\n";
    }
    os << "edges (" << g.edges.size() << "):\n";
    for (const auto& e : g.edges)
        os << "  " << e.from << " -- " << e.to << "  [" << to_string(e.map) << "]\n";
    std::cout << os.str();
    return kExitOk;
}

int run_samefield(const PolyArg& a, const PolyArg& b, const std::string& max_den, bool as_json) {
    Poly f = a.parse();
    Poly p = b.parse();
    Rational bound_rat = parse_rational(max_den);
    if (!bound_rat.is_integer() || bound_rat.sign() <= 0)
        throw ParseError("denominator bound must be a positive integer", 0);
    SameFieldResult r = same_field(f, p, bound_rat.num());
    json j{{"first", format_poly(f)},
           {"second", format_poly(p)},
           {"same_field", r.same},
           {"status", to_string(r.status)},
           {"bound", r.bound.str()}};
    if (r.expression) j["expression"] = format_poly(*r.expression);
    std::ostringstream os;
    os << "same_field: " << (r.same ? "true" : "false") << "\n"
       << "status: " << to_string(r.status) << (r.same ? "" : " " + r.bound.str()) << "\n";
    if (r.expression) os << "expression: " << format_poly(*r.expression) << "\n";
    emit(as_json, j, os.str());
    return kExitOk;
}

int run_family(const std::string& ytext, bool as_json) {
    Rational y = parse_rational(ytext);
    Rational t = family_t(y);
    Poly member = Poly::from_coeffs_ascending({-t, -t, Rational(0), Rational(1)});
    auto cert = certify(member);
    bool galois = std::holds_alternative<GaloisCert>(cert);
    json j{{"y", y.to_string()},
           {"t", t.to_string()},
           {"polynomial", format_poly(member)},
           {"galois", galois}};
    std::ostringstream os;
    os << "y: " << y << "\n"
       << "t: " << t << "\n"
       << "polynomial: " << format_poly(member) << "\n"
       << "galois: " << (galois ? "yes" : "no") << "\n";
    if (galois) {
        Rational k = char_number(t);
        SameFieldResult r = same_field(parse_poly("x^3-3*x+1"), member);
        j["k"] = k.to_string();
        j["base_field"] = {{"same", r.same}, {"status", to_string(r.status)}};
        os << "k: " << k << "\n"
           << "field of x^3 - 3*x + 1: " << (r.same ? "yes" : "no") << " ("
           << to_string(r.status) << ")\n";
    } else {
        os << "reason: " << to_string(std::get<NotGaloisReason>(cert)) << "\n";
    }
    emit(as_json, j, os.str());
    return galois ? kExitOk : kExitDomain;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact analysis of cubic polynomials with cyclic Galois group"};
    app.require_subcommand(1);

    bool as_json = false;
    app.add_flag("--json", as_json, "emit JSON instead of text");

    PolyArg poly_a, poly_b;
    std::string ktext, ytext, sign, max_den = "1000000000000";
    std::string precision = "1/1000000000000";
    long long iter = 1;
    std::size_t max_nodes = 16;
    bool as_dot = false;

    auto add_poly_flags = [](CLI::App* cmd, PolyArg& arg, const std::string& name) {
        cmd->add_option(name, arg.text, "polynomial, e.g. \"x^3-3*x+1\"")->required();
        cmd->add_flag("--coeffs", arg.coeffs, "read the polynomial as descending coefficients");
    };

    CLI::App* analyze = app.add_subcommand("analyze", "certificate, maps, couplings, class data");
    add_poly_flags(analyze, poly_a, "poly");
    analyze->add_option("--precision", precision, "root bracket width (rational, default 1/10^12)");

    CLI::App* couple = app.add_subcommand("couple", "coupled polynomial(s)");
    add_poly_flags(couple, poly_a, "poly");
    couple->add_option("--sign", sign, "+ or - to select one map")
        ->check(CLI::IsMember({"+", "-"}));

    CLI::App* rep = app.add_subcommand("rep", "class representative and characteristic number");
    add_poly_flags(rep, poly_a, "poly");

    CLI::App* chr = app.add_subcommand("char", "representative from a characteristic number");
    chr->add_option("k", ktext, "characteristic number, e.g. 10/3")->required();

    CLI::App* phi_cmd = app.add_subcommand("phi", "apply phi (optionally iterated)");
    phi_cmd->add_option("k", ktext, "positive rational")->required();
    phi_cmd->add_option("--iter", iter, "number of iterations (default 1)");

    CLI::App* psi_cmd = app.add_subcommand("psi", "apply psi");
    psi_cmd->add_option("k", ktext, "positive rational")->required();

    CLI::App* super = app.add_subcommand("superclass", "enumerate a component of the class graph");
    super->add_option("k", ktext, "positive rational")->required();
    super->add_option("--max-nodes", max_nodes, "node budget (default 16)");
    super->add_flag("--dot", as_dot, "emit Graphviz DOT");

    CLI::App* gen = app.add_subcommand("generator", "canonical generator of the component");
    gen->add_option("k", ktext, "positive rational")->required();

    CLI::App* samefield = app.add_subcommand("samefield", "do two Galois cubics share a field?");
    add_poly_flags(samefield, poly_a, "poly1");
    samefield->add_option("poly2", poly_b.text, "second polynomial")->required();
    samefield->add_flag("--coeffs2", poly_b.coeffs, "read the second polynomial as coefficients");
    samefield->add_option("--max-den", max_den, "denominator bound for the lift (default 10^12)");

    CLI::App* family = app.add_subcommand("family", "parametric family t(y) and its checks");
    family->add_option("y", ytext, "rational parameter")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParse;
    }

    try {
        if (*analyze) return run_analyze(poly_a, parse_rational(precision), as_json);
        if (*couple) return run_couple(poly_a, sign, as_json);
        if (*rep) return run_rep(poly_a, as_json);
        if (*chr) return run_char(ktext, as_json);
        if (*phi_cmd) return run_phi(ktext, iter, as_json);
        if (*psi_cmd) return run_psi(ktext, as_json);
        if (*super) return run_superclass(ktext, max_nodes, as_json, as_dot);
        if (*gen) return run_generator(ktext, as_json);
        if (*samefield) return run_samefield(poly_a, poly_b, max_den, as_json);
        if (*family) return run_family(ytext, as_json);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitParse;
}
