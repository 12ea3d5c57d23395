// wstrass: command-line front end for the Weierstrass point library.
//
// Exit codes: 0 success, 1 domain error (a mathematical precondition
// failed), 2 usage or parse error.

#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wstrass/bounds.hpp"
#include "wstrass/curve.hpp"
#include "wstrass/local.hpp"
#include "wstrass/parse.hpp"
#include "wstrass/qdiff.hpp"
#include "wstrass/quartic.hpp"

using json = nlohmann::ordered_json;
using namespace wstrass;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string frac(const Rational& r) { return to_fraction_string(r); }

Rational rational_arg(const std::string& flag, const std::string& text) {
    try {
        return parse_rational(text);
    } catch (const DomainError&) {
        throw UsageError(flag + ": expected an integer or fraction p/q, got '" + text + "'");
    }
}

std::vector<long> int_list(const std::string& flag, const std::string& text) {
    std::vector<long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stol(item, &used));
            if (used != item.size())
                throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError(flag + ": expected comma-separated integers, got '" + text + "'");
        }
    }
    return out;
}

std::size_t precision_cap() {
    const char* env = std::getenv("WSTRASS_PRECISION_CAP");
    if (!env || !*env)
        return kDefaultPrecisionCap;
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (*end != '\0' || v == 0)
        throw UsageError(std::string("WSTRASS_PRECISION_CAP must be a positive integer, got '") + env + "'");
    return v;
}

json pairs_json(const std::vector<ExponentPair>& v) {
    json arr = json::array();
    for (const auto& e : v)
        arr.push_back({e.a, e.b});
    return arr;
}

json point_json(const ProjectivePoint& p) { return json::array({frac(p[0]), frac(p[1]), frac(p[2])}); }

// Plain-text rendering of a result object.
void render_text(std::ostream& os, const json& j, int indent = 0) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    auto scalar = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
    auto flat = [&](const json& arr) {
        std::string s;
        for (const auto& v : arr) {
            if (!s.empty())
                s += ", ";
            if (v.is_array()) {
                std::string inner;
                for (const auto& w : v)
                    inner += (inner.empty() ? "" : ", ") + scalar(w);
                s += "(" + inner + ")";
            } else {
                s += scalar(v);
            }
        }
        return s;
    };
    for (const auto& [key, v] : j.items()) {
        if (v.is_object()) {
            os << pad << key << ":\n";
            render_text(os, v, indent + 2);
        } else if (v.is_array() && !v.empty() && v.front().is_object()) {
            os << pad << key << ":\n";
            for (const auto& item : v) {
                std::string line;
                for (const auto& [k2, v2] : item.items())
                    line += (line.empty() ? "" : "  ") + k2 + "=" + (v2.is_array() ? "(" + flat(v2) + ")" : scalar(v2));
                os << pad << "  " << line << "\n";
            }
        } else if (v.is_array()) {
            os << pad << key << ": [" << flat(v) << "]\n";
        } else {
            os << pad << key << ": " << scalar(v) << "\n";
        }
    }
}

struct CurveArgs {
    int n = 0;
    std::string f;
};

void add_curve_options(CLI::App* cmd, CurveArgs& a) {
    cmd->add_option("--n", a.n, "cover degree n in y^n = f(x)")->required();
    cmd->add_option("--f", a.f, "polynomial f(x)")->required();
}

SuperellipticCurve make_curve(const CurveArgs& a) { return new_curve(a.n, parse_univariate(a.f, "x")); }

json curve_inputs(const CurveArgs& a) { return {{"n", a.n}, {"f", a.f}}; }

PlaneQuartic make_quartic(const std::string& F) { return PlaneQuartic(parse_poly(F, {"x", "y", "z"})); }

ProjectivePoint point_arg(const std::string& text) {
    std::vector<Rational> c;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto b = item.find_first_not_of(' ');
        const auto e = item.find_last_not_of(' ');
        c.push_back(rational_arg("--point", b == std::string::npos ? "" : item.substr(b, e - b + 1)));
    }
    if (c.size() != 3)
        throw UsageError("--point: expected three coordinates \"a,b,c\", got '" + text + "'");
    return {c[0], c[1], c[2]};
}

DivisorGenerator generator_arg(const std::string& text) {
    if (text == "y")
        return gen::Y{};
    if (text == "dx")
        return gen::Dx{};
    if (text == "dy-form")
        return gen::DxOverYn1{};
    if (text.rfind("x-c:", 0) == 0)
        return gen::XMinusC{rational_arg("--gen", text.substr(4))};
    if (text.rfind("x-alpha:", 0) == 0) {
        const auto v = int_list("--gen", text.substr(8));
        if (v.size() != 1)
            throw UsageError("--gen: x-alpha:I takes one branch index");
        return gen::XMinusRoot{static_cast<int>(v[0])};
    }
    throw UsageError("--gen: expected y, dx, dy-form, x-c:VALUE or x-alpha:I, got '" + text + "'");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Weierstrass points on superelliptic curves and plane quartics"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "text";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));

    std::string command;
    json inputs;
    std::function<json()> run;

    auto bind = [&](CLI::App* cmd, std::string name, std::function<json()> body, std::function<json()> echo) {
        cmd->callback([&, name, body, echo] {
            command = name;
            run = [body, echo, &inputs] {
                inputs = echo();
                return body();
            };
        });
    };

    CurveArgs curve;
    int q = 1, g = 0;
    std::string x0, y0, gen_text;

    {
        auto* cmd = app.add_subcommand("genus", "genus of y^n = f(x)");
        add_curve_options(cmd, curve);
        bind(cmd, "genus",
             [&] {
                 auto C = make_curve(curve);
                 return json{{"n", C.n()}, {"d", C.d()}, {"G", C.G()}, {"genus", C.genus()}};
             },
             [&] { return curve_inputs(curve); });
    }
    {
        auto* cmd = app.add_subcommand("basis", "basis S_{n,d,q} of holomorphic q-differentials");
        add_curve_options(cmd, curve);
        cmd->add_option("--q", q, "differential order q >= 1");
        bind(cmd, "basis",
             [&] {
                 auto C = make_curve(curve);
                 auto S = enumerate_basis(C, q);
                 return json{{"genus", C.genus()}, {"d_q", dimension_dq(C.genus(), q)}, {"pairs", pairs_json(S)}};
             },
             [&] {
                 json j = curve_inputs(curve);
                 j["q"] = q;
                 return j;
             });
    }
    {
        auto* cmd = app.add_subcommand("branch", "q-gap sequence and weight at the affine branch points");
        add_curve_options(cmd, curve);
        cmd->add_option("--q", q, "differential order q >= 1");
        bind(cmd, "branch",
             [&] {
                 auto C = make_curve(curve);
                 auto s = branch_gap_sequence(C, q);
                 json places = json::array();
                 for (const auto& p : C.branch_places())
                     places.push_back(p.name());
                 return json{{"genus", C.genus()},
                             {"gaps", s.gaps},
                             {"weight", s.weight},
                             {"branch_points", places},
                             {"total_branch_weight", s.weight * C.d()},
                             {"total_weight", total_weight(C.genus(), q)}};
             },
             [&] {
                 json j = curve_inputs(curve);
                 j["q"] = q;
                 return j;
             });
    }
    {
        auto* cmd = app.add_subcommand("infinity", "gap sequence at the place over infinity (gcd(n, d) = 1)");
        add_curve_options(cmd, curve);
        bind(cmd, "infinity",
             [&] {
                 auto C = make_curve(curve);
                 auto s = infinite_gap_data(C);
                 return json{{"genus", C.genus()}, {"semigroup", {C.n(), C.d()}}, {"gaps", s.gaps}, {"weight", s.weight}};
             },
             [&] { return curve_inputs(curve); });
    }
    {
        auto* cmd = app.add_subcommand("divisor", "divisor of y, dx, dx/y^(n-1), x - c or x - alpha_i");
        add_curve_options(cmd, curve);
        cmd->add_option("--gen", gen_text, "y | dx | dy-form | x-c:VALUE | x-alpha:I")->required();
        bind(cmd, "divisor",
             [&] {
                 const DivisorGenerator gen = generator_arg(gen_text);
                 auto C = make_curve(curve);
                 Divisor D = principal_divisor(C, gen);
                 json terms = json::array();
                 for (const auto& [p, c] : D.terms())
                     terms.push_back({{"place", p.name()}, {"coefficient", c}});
                 return json{{"genus", C.genus()}, {"terms", terms}, {"degree", divisor_degree(D)}};
             },
             [&] {
                 json j = curve_inputs(curve);
                 j["gen"] = gen_text;
                 return j;
             });
    }
    {
        auto* cmd = app.add_subcommand("point-weight", "q-Weierstrass weight at an affine non-branch point");
        add_curve_options(cmd, curve);
        cmd->add_option("--q", q, "differential order q >= 1");
        cmd->add_option("--x", x0, "x0")->required();
        cmd->add_option("--y", y0, "y0 with y0^n = f(x0)")->required();
        bind(cmd, "point-weight",
             [&] {
                 const AffinePoint P{rational_arg("--x", x0), rational_arg("--y", y0)};
                 const std::size_t cap = precision_cap();
                 auto C = make_curve(curve);
                 return json{{"genus", C.genus()},
                             {"weight", point_weight(C, q, P, cap)},
                             {"total_weight", total_weight(C.genus(), q)}};
             },
             [&] {
                 json j = curve_inputs(curve);
                 j["q"] = q;
                 j["x"] = x0;
                 j["y"] = y0;
                 return j;
             });
    }
    {
        auto* cmd = app.add_subcommand("gapseqs", "all gap sequences of genus g");
        cmd->add_option("--g", g, "genus")->required();
        bind(cmd, "gapseqs",
             [&] {
                 json seqs = json::array();
                 for (const auto& s : enumerate_gap_sequences(g))
                     seqs.push_back({{"gaps", s.gaps}, {"weight", s.weight}});
                 return json{{"count", seqs.size()}, {"sequences", seqs}};
             },
             [&] { return json{{"g", g}}; });
    }
    {
        auto* cmd = app.add_subcommand("total-weight", "total q-Weierstrass weight on a genus-g curve");
        cmd->add_option("--g", g, "genus")->required();
        cmd->add_option("--q", q, "differential order q >= 1");
        bind(cmd, "total-weight",
             [&] { return json{{"d_q", dimension_dq(g, q)}, {"total_weight", total_weight(g, q)}}; },
             [&] { return json{{"g", g}, {"q", q}}; });
    }

    std::string F, point_text;
    std::uint64_t seed = 1;
    {
        auto* quartic = app.add_subcommand("quartic", "smooth plane quartics");
        quartic->require_subcommand(1);
        quartic->fallthrough();
        auto* infl = quartic->add_subcommand("inflections", "inflection points and weights");
        infl->add_option("--F", F, "quartic form in x, y, z")->required();
        infl->add_option("--seed", seed, "shear seed");
        bind(infl, "quartic inflections",
             [&] {
                 const PlaneQuartic Q = make_quartic(F);
                 const auto p = inflection_profile(Q, seed);
                 json weights = json::object();
                 for (const auto& [w, c] : p.weight_counts)
                     weights[std::to_string(w)] = c;
                 json rational = json::array();
                 for (const auto& [P, w] : p.rational_points)
                     rational.push_back({{"point", point_json(P)}, {"weight", w}});
                 json shear = json::array();
                 for (const auto& row : p.shear)
                     shear.push_back({row[0], row[1], row[2]});
                 return json{{"distinct_count", p.distinct_count},
                             {"weights", weights},
                             {"total", p.total},
                             {"rational_points", rational},
                             {"shear", shear}};
             },
             [&] { return json{{"F", F}, {"seed", seed}}; });
        auto* tan = quartic->add_subcommand("tangent-test", "contact of the tangent line at a point, minus 2");
        tan->add_option("--F", F, "quartic form in x, y, z")->required();
        tan->add_option("--point", point_text, "projective point \"a,b,c\"")->required();
        bind(tan, "quartic tangent-test",
             [&] {
                 const ProjectivePoint P = point_arg(point_text);
                 const int v = tangent_line_test(make_quartic(F), P);
                 static const char* kinds[] = {"ordinary", "flex", "hyperflex"};
                 return json{{"value", v}, {"kind", kinds[v]}};
             },
             [&] { return json{{"F", F}, {"point", point_text}}; });
    }

    long deg = 1, gy = 0, order = 2;
    std::string ram;
    bool nonhyperelliptic = false;
    SignatureSearch search;
    {
        auto* bounds = app.add_subcommand("bounds", "ramification and automorphism bounds");
        bounds->require_subcommand(1);
        bounds->fallthrough();
        auto* rh = bounds->add_subcommand("rh", "genus of a branched cover");
        rh->add_option("--deg", deg, "cover degree")->required();
        rh->add_option("--gy", gy, "genus of the target")->required();
        rh->add_option("--ram", ram, "ramification multiplicities \"m1,m2,...\"");
        bind(rh, "bounds rh",
             [&] {
                 RamificationProfile r{deg, gy, ram.empty() ? std::vector<long>{} : int_list("--ram", ram)};
                 return json{{"genus", riemann_hurwitz_genus(r)}};
             },
             [&] { return json{{"deg", deg}, {"gy", gy}, {"ram", ram}}; });
        auto* hw = bounds->add_subcommand("hurwitz", "84(g - 1)");
        hw->add_option("--g", g, "genus")->required();
        bind(hw, "bounds hurwitz", [&] { return json{{"bound", hurwitz_bound(g)}}; },
             [&] { return json{{"g", g}}; });
        auto* mr = bounds->add_subcommand("min-r", "signature with the smallest positive R");
        mr->add_option("--max-order", search.max_order, "largest branch order");
        mr->add_option("--max-s", search.max_s, "largest number of branch values");
        mr->add_option("--max-gy", search.max_gY, "largest quotient genus");
        mr->add_option("--min-gy", search.min_gY, "smallest quotient genus");
        bind(mr, "bounds min-r",
             [&] {
                 const Signature s = min_positive_R(search);
                 return json{{"gY", s.gY}, {"orders", s.orders}, {"R", frac(s.R)}};
             },
             [&] {
                 return json{{"max_order", search.max_order},
                             {"max_s", search.max_s},
                             {"max_gy", search.max_gY},
                             {"min_gy", search.min_gY}};
             });
        auto* fx = bounds->add_subcommand("fix", "bound on fixed points of an automorphism");
        fx->add_option("--g", g, "genus")->required();
        fx->add_option("--order", order, "automorphism order")->required();
        fx->add_flag("--nonhyperelliptic", nonhyperelliptic, "curve is not hyperelliptic");
        bind(fx, "bounds fix", [&] { return json{{"bound", fixed_point_bound(g, order, nonhyperelliptic)}}; },
             [&] { return json{{"g", g}, {"order", order}, {"nonhyperelliptic", nonhyperelliptic}}; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    auto fail = [&](int code, const std::string& kind, const std::string& msg) {
        std::cerr << "error: " << msg << "\n";
        if (format == "json")
            std::cout << json{{"command", command}, {"inputs", inputs}, {"error", {{"kind", kind}, {"message", msg}}}}.dump(2)
                      << "\n";
        return code;
    };

    try {
        json result = run();
        if (format == "json") {
            std::cout << json{{"command", command}, {"inputs", inputs}, {"result", result}}.dump(2) << "\n";
        } else {
            render_text(std::cout, result);
        }
        return 0;
    } catch (const UsageError& e) {
        return fail(2, "usage", e.what());
    } catch (const ParseError& e) {
        return fail(2, "parse", e.what());
    } catch (const PrecisionExhausted& e) {
        return fail(1, "precision", e.what());
    } catch (const DomainError& e) {
        return fail(1, "domain", e.what());
    }
}
