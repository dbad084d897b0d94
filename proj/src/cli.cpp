#include "quatroots/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "quatroots/format.hpp"
#include "quatroots/numeric.hpp"
#include "quatroots/parse.hpp"
#include "quatroots/roots.hpp"

namespace quatroots {

namespace {

struct RunConfig {
    std::string algebra_text = "-1,-1";
    bool numeric = false;
    double eps = NumericSettings{}.eps_zero;
    std::string format = "text";
    std::uint64_t seed = ClassifySettings{}.seed;
    std::optional<std::size_t> k;
    std::optional<std::string> at;
    std::optional<std::string> subfield;
    std::vector<std::string> operands;
};

struct Output {
    Json result = Json::object();
    std::string text;
    std::vector<std::string> diagnostics;
};

struct Context {
    std::string command;
    RunConfig cfg;
    AlgebraQ alg = AlgebraQ::hamilton();
    NumericSettings numeric;
    ClassifySettings exact;
    Json input = Json::object();

    QPolyQ operand(std::size_t n, const char* name) {
        const std::string& s = cfg.operands.at(n);
        QPolyQ p = parse_poly(s, alg);
        input[name] = s;
        return p;
    }
    QuatQ quaternion_flag(const std::optional<std::string>& v, const char* flag) {
        if (!v) throw UsageError(command + " requires " + flag);
        QuatQ q = parse_quaternion(*v, alg);
        input[flag + 2] = to_json(q);
        return q;
    }
    void arity(std::size_t n) const {
        if (cfg.operands.size() != n)
            throw UsageError(command + " expects " + std::to_string(n) + " polynomial argument" + (n == 1 ? "" : "s") +
                             ", got " + std::to_string(cfg.operands.size()));
    }
    void exact_only() const {
        if (cfg.numeric) throw UsageError(command + " has no floating-point backend");
    }
};

AlgebraQ parse_algebra(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) throw UsageError("--algebra expects a,b");
    auto trim = [](std::string s) {
        s.erase(0, s.find_first_not_of(' '));
        s.erase(s.find_last_not_of(' ') + 1);
        return s;
    };
    const Rational a = parse_rational(trim(text.substr(0, comma)));
    const Rational b = parse_rational(trim(text.substr(comma + 1)));
    if (a == -1 && b == -1) return AlgebraQ::hamilton();
    return AlgebraQ(a, b);
}

QuatF to_double(const QuatQ& q, const Algebra<double>& alg) {
    return QuatF(alg, q.w().get_d(), q.x().get_d(), q.y().get_d(), q.z().get_d());
}

std::string join_lines(const std::vector<std::string>& lines) {
    std::string s;
    for (const auto& l : lines) s += l + '\n';
    return s;
}

// ---------------------------------------------------------------------------

Output cmd_eval(Context& ctx) {
    ctx.arity(1);
    const QPolyQ p = ctx.operand(0, "poly");
    const QuatQ q = ctx.quaternion_flag(ctx.cfg.at, "--at");
    Output o;
    if (ctx.cfg.numeric) {
        const QPolyF pf = to_double(p);
        const QuatF v = eval_right(pf, to_double(q, pf.algebra()));
        o.result["value"] = to_json(v);
        o.text = "P(q) = " + to_text(v) + '\n';
    } else {
        const QuatQ v = eval_right(p, q);
        o.result["value"] = to_json(v);
        o.result["is_root"] = v.is_zero();
        o.text = "P(q) = " + to_text(v) + '\n';
    }
    return o;
}

Output cmd_divrem(Context& ctx) {
    ctx.exact_only();
    ctx.arity(2);
    const QPolyQ p = ctx.operand(0, "dividend");
    const QPolyQ d = ctx.operand(1, "divisor");
    const DivRem<Rational> qr = right_divrem(p, d);
    if (qr.quotient * d + qr.remainder != p) throw InvariantViolation("division does not recompose");
    Output o;
    o.result["quotient"] = to_json(qr.quotient);
    o.result["remainder"] = to_json(qr.remainder);
    o.text = "quotient:  " + to_text(qr.quotient) + "\nremainder: " + to_text(qr.remainder) + '\n';
    return o;
}

Output cmd_gcrd(Context& ctx) {
    ctx.exact_only();
    ctx.arity(2);
    const QPolyQ a = ctx.operand(0, "left");
    const QPolyQ b = ctx.operand(1, "right");
    const QPolyQ g = gcrd(a, b);
    Output o;
    o.result["gcrd"] = to_json(g);
    o.text = "gcrd: " + to_text(g) + '\n';
    return o;
}

Output cmd_mul(Context& ctx) {
    ctx.exact_only();
    ctx.arity(2);
    const QPolyQ a = ctx.operand(0, "left");
    const QPolyQ b = ctx.operand(1, "right");
    const QPolyQ prod = a * b;
    Output o;
    o.result["product"] = to_json(prod);
    o.text = "product: " + to_text(prod) + '\n';
    return o;
}

Output cmd_decompose(Context& ctx) {
    ctx.exact_only();
    ctx.arity(1);
    const QPolyQ p = ctx.operand(0, "poly");
    const BeckFactorization f = beck_decompose(p);
    const QPolyQ h = QPolyQ::from_central(p.algebra(), f.h);
    if (QPolyQ::constant(f.c) * f.g * h != p) throw InvariantViolation("c G H does not recompose P");

    Output o;
    o.result["c"] = to_json(f.c);
    o.result["G"] = to_json(f.g);
    o.result["H"] = to_json(f.h);
    o.result["coordinate_gcd_G"] = to_json(coordinate_gcd(f.g));
    o.result["recomposes"] = true;
    std::ostringstream os;
    os << "c = " << to_text(f.c) << "\nG = " << to_text(f.g) << "\nH = " << to_text(f.h) << '\n';

    const std::size_t deg_h = f.h.degree().value();
    Json divisors = Json::array();
    for (const Rational& r : roots_in_center(p)) {
        const CPolyQ lin = CPolyQ::x() - CPolyQ::constant(r);
        const bool divides = right_divides(QPolyQ::from_central(p.algebra(), lin), p);
        Json d;
        d["divisor"] = to_json(lin);
        d["right_divides"] = divides;
        d["degree"] = 1;
        d["of_greatest_degree"] = deg_h == 1;
        divisors.push_back(d);
        os << "central divisor " << to_text(lin) << (divides ? " right-divides P" : " does not right-divide P");
        if (divides && deg_h > 1)
            os << ", but degree 1 < deg H = " << deg_h << ": not the central divisor of greatest degree";
        os << '\n';
    }
    o.result["linear_central_divisors"] = divisors;
    o.text = os.str();
    return o;
}

Output cmd_coords(Context& ctx) {
    ctx.exact_only();
    ctx.arity(1);
    const QPolyQ p = ctx.operand(0, "poly");
    Output o;
    std::ostringstream os;
    if (ctx.cfg.subfield) {
        const QuatQ s = ctx.quaternion_flag(ctx.cfg.subfield, "--subfield");
        const QuatQ u = default_subfield_complement(s);
        const SubfieldCoords c = coords_subfield(p, s, u);
        const QPolyQ g = subfield_gcd(c);
        o.result["s"] = to_json(c.s);
        o.result["u"] = to_json(c.u);
        o.result["b1"] = to_json(c.b1);
        o.result["b2"] = to_json(c.b2);
        o.result["gcd"] = to_json(g);
        os << "P = b1 + u b2 with u = " << to_text(u) << "\nb1 = " << to_text(c.b1) << "\nb2 = " << to_text(c.b2)
           << "\ngcd = " << to_text(g) << '\n';
    } else {
        const CenterCoords c = coords_center(p);
        const CPolyQ g = coordinate_gcd(p);
        o.result["b1"] = to_json(c.b1);
        o.result["bi"] = to_json(c.bi);
        o.result["bj"] = to_json(c.bj);
        o.result["bk"] = to_json(c.bk);
        o.result["gcd"] = to_json(g);
        os << "b1 = " << to_text(c.b1) << "\nbi = " << to_text(c.bi) << "\nbj = " << to_text(c.bj)
           << "\nbk = " << to_text(c.bk) << "\ngcd = " << to_text(g) << '\n';
    }
    o.text = os.str();
    return o;
}

Output cmd_classify(Context& ctx) {
    ctx.arity(1);
    const QPolyQ p = ctx.operand(0, "poly");
    Output o;
    if (ctx.cfg.numeric) {
        const RootReport<double> r = classify_f64(to_double(p), ctx.numeric);
        o.result = to_json(r);
        o.text = to_text(r);
        o.diagnostics = r.diagnostics;
    } else {
        const RootReport<Rational> r = classify(p, ctx.exact);
        o.result = to_json(r);
        o.text = to_text(r);
        o.diagnostics = r.diagnostics;
    }
    return o;
}

Output cmd_spherical(Context& ctx) {
    ctx.exact_only();
    ctx.arity(1);
    const QPolyQ p = ctx.operand(0, "poly");
    const RootReport<Rational> r = classify(p, ctx.exact);
    Output o;
    Json classes = Json::array();
    std::ostringstream os;
    for (const auto& e : r.entries) {
        if (!e.is_spherical()) continue;
        Json c;
        c["t"] = to_string(e.cls.t);
        c["n"] = to_string(e.cls.n);
        c["min_poly"] = to_text(min_poly<Rational>(e.cls));
        classes.push_back(c);
        os << "spherical class " << to_text(min_poly<Rational>(e.cls)) << '\n';
    }
    o.result["spherical_classes"] = classes;
    o.result["count"] = r.spherical_count();
    o.result["bound"] = p.degree().value() / 2;
    os << "count: " << r.spherical_count() << " (at most " << p.degree().value() / 2 << ")\n";
    o.text = os.str();
    o.diagnostics = r.diagnostics;
    return o;
}

std::string equality_name(SphericalBoundReport::Equality e) {
    switch (e) {
        case SphericalBoundReport::Equality::even: return "even";
        case SphericalBoundReport::Equality::odd: return "odd";
        default: return "none";
    }
}

Output cmd_analyze(Context& ctx) {
    ctx.exact_only();
    ctx.arity(1);
    const QPolyQ p = ctx.operand(0, "poly");
    const SphericalBoundReport b = thm33_report(p, ctx.exact);
    Output o;
    Json bound;
    bound["degree"] = b.degree;
    bound["spherical"] = b.spherical;
    bound["bound"] = b.bound;
    bound["equality"] = equality_name(b.equality);
    bound["coefficients_central"] = b.coefficients_central;
    bound["coefficients_commute"] = b.coefficients_commute;
    bound["holds"] = b.holds;
    o.result["spherical_bound"] = bound;
    std::ostringstream os;
    os << "spherical classes: " << b.spherical << " of at most " << b.bound;
    if (b.equality != SphericalBoundReport::Equality::none)
        os << " (equality, " << equality_name(b.equality) << " degree; coefficients "
           << (b.equality == SphericalBoundReport::Equality::even ? (b.coefficients_central ? "central" : "NOT central")
                                                                  : (b.coefficients_commute ? "commute pairwise"
                                                                                            : "do NOT commute"))
           << ")";
    os << '\n';

    if (p.algebra().is_definite() && p.is_monic()) {
        const SparseReport s = analyze_sparse(p, ctx.exact);
        Json sj;
        sj["case"] = to_string(s.kind);
        if (s.k) sj["k"] = *s.k;
        if (s.m) sj["m"] = *s.m;
        sj["bound"] = s.bound;
        if (s.candidate_factor) sj["candidate_factor"] = to_json(*s.candidate_factor);
        sj["observed_spherical"] = s.observed_spherical;
        sj["consistent"] = s.consistent;
        o.result["sparse"] = sj;
        os << "coefficient pattern: " << to_string(s.kind);
        if (s.kind != SparseReport::Kind::not_applicable) {
            os << ", spherical bound " << s.bound;
            if (s.candidate_factor) os << ", spherical classes among those of " << to_text(*s.candidate_factor);
            os << (s.consistent ? ", consistent" : ", VIOLATED");
        }
        os << '\n';
    } else {
        o.diagnostics.push_back("coefficient-pattern analysis needs a monic polynomial over a definite algebra");
    }
    o.text = os.str();
    return o;
}

Output cmd_cubic(Context& ctx) {
    ctx.exact_only();
    ctx.arity(1);
    const QPolyQ p = ctx.operand(0, "poly");
    const CubicCase c = classify_cubic(p, ctx.exact);
    Output o;
    o.result["case"] = to_string(c.kind);
    o.result["spherical_bound"] = c.spherical_bound;
    o.result["observed_spherical"] = c.observed_spherical;
    o.result["consistent"] = c.consistent;
    std::ostringstream os;
    os << "case " << to_string(c.kind) << ": at most " << c.spherical_bound << " spherical class"
       << (c.spherical_bound == 1 ? "" : "es") << ", observed " << c.observed_spherical
       << (c.consistent ? "" : " (VIOLATED)") << '\n';
    o.text = os.str();
    return o;
}

Output cmd_nonroots(Context& ctx) {
    ctx.exact_only();
    ctx.arity(1);
    const QPolyQ p = ctx.operand(0, "poly");
    const QuatQ c = ctx.quaternion_flag(ctx.cfg.at, "--at");
    if (!ctx.cfg.k) throw UsageError("nonroots requires -k");
    ctx.input["k"] = *ctx.cfg.k;
    const std::vector<QuatQ> ys = nonroot_conjugates(p, c, *ctx.cfg.k);
    Output o;
    o.result["kernel_dimension"] = conjugator_kernel(p, c).size();
    Json arr = Json::array();
    std::string text;
    for (const QuatQ& y : ys) {
        arr.push_back(to_json(y));
        text += to_text(y) + '\n';
    }
    o.result["conjugates"] = arr;
    o.text = text;
    return o;
}

Output cmd_subfield_roots(Context& ctx) {
    ctx.arity(1);
    const QPolyQ p = ctx.operand(0, "poly");
    const QuatQ s = ctx.quaternion_flag(ctx.cfg.subfield, "--subfield");
    Output o;
    Json arr = Json::array();
    std::string text;
    if (ctx.cfg.numeric) {
        const QPolyF pf = to_double(p);
        for (const QuatF& r : roots_in_subfield_f64(pf, to_double(s, pf.algebra()), ctx.numeric)) {
            arr.push_back(to_json(r));
            text += to_text(r) + '\n';
        }
    } else {
        for (const QuatQ& r : roots_in_subfield(p, s, ctx.exact)) {
            arr.push_back(to_json(r));
            text += to_text(r) + '\n';
        }
    }
    o.result["roots"] = arr;
    o.text = text.empty() ? "no roots in the subfield\n" : text;
    return o;
}

const std::map<std::string, std::pair<std::string, std::function<Output(Context&)>>>& commands() {
    static const std::map<std::string, std::pair<std::string, std::function<Output(Context&)>>> table{
        {"eval", {"Evaluate P at --at, powers on the right", cmd_eval}},
        {"divrem", {"Right division P = Q D + R", cmd_divrem}},
        {"gcrd", {"Greatest common right divisor (monic)", cmd_gcrd}},
        {"mul", {"Product of two polynomials, in order", cmd_mul}},
        {"decompose", {"Factor P = c G H with H central", cmd_decompose}},
        {"coords", {"Coordinates over the center, or over --subfield", cmd_coords}},
        {"classify", {"Central, isolated and spherical roots", cmd_classify}},
        {"spherical", {"Spherical root classes only", cmd_spherical}},
        {"analyze", {"Spherical bound and coefficient-pattern analysis", cmd_analyze}},
        {"cubic", {"Coefficient case of a monic cubic", cmd_cubic}},
        {"nonroots", {"-k conjugates of --at that are not roots", cmd_nonroots}},
        {"subfield-roots", {"Roots lying in the subfield generated by --subfield", cmd_subfield_roots}},
    };
    return table;
}

int run(Context& ctx, std::ostream& out) {
    ctx.alg = parse_algebra(ctx.cfg.algebra_text);
    ctx.numeric.eps_zero = ctx.cfg.eps;
    ctx.numeric.validate();
    ctx.exact.seed = ctx.cfg.seed;
    if (ctx.cfg.format != "text" && ctx.cfg.format != "json") throw UsageError("--format must be text or json");

    Output o = commands().at(ctx.command).second(ctx);

    if (ctx.cfg.format == "json") {
        Json doc;
        doc["command"] = ctx.command;
        doc["algebra"] = {{"a", to_string(ctx.alg.a())}, {"b", to_string(ctx.alg.b())}};
        doc["backend"] = ctx.cfg.numeric ? "numeric" : "exact";
        doc["input"] = ctx.input;
        doc["result"] = o.result;
        doc["diagnostics"] = o.diagnostics;
        out << doc.dump(2) << '\n';
    } else {
        out << o.text;
        if (!o.diagnostics.empty()) out << "diagnostics:\n" << join_lines(o.diagnostics);
    }
    return exit_ok;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Polynomials over quaternion algebras", "quatroots"};
    app.require_subcommand(1);
    app.fallthrough();

    Context ctx;
    RunConfig& cfg = ctx.cfg;
    app.add_option("--algebra", cfg.algebra_text, "Algebra parameters a,b (i^2 = a, j^2 = b)")
        ->capture_default_str();
    app.add_flag("--numeric", cfg.numeric, "Floating-point backend (Hamilton quaternions)");
    app.add_option("--eps", cfg.eps, "Zero tolerance of the floating-point backend")->capture_default_str();
    app.add_option("--format", cfg.format, "Output format: text or json")->capture_default_str();
    app.add_option("--seed", cfg.seed, "Seed for randomized self-checks")->capture_default_str();
    app.add_option("-k", cfg.k, "Number of elements requested");
    app.add_option("--at", cfg.at, "Quaternion point, e.g. \"1 - 2i + 3/2k\"");
    app.add_option("--subfield", cfg.subfield, "Generator s of the subfield F(s)");

    for (const auto& [name, entry] : commands()) {
        CLI::App* sub = app.add_subcommand(name, entry.first);
        sub->add_option("polys", cfg.operands, "Polynomial expressions in x")->required();
        sub->callback([&ctx, name = name] { ctx.command = name; });
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return exit_precondition;
    }

    try {
        return run(ctx, out);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return exit_parse;
    } catch (const ZeroDivisorError& e) {
        err << "algebra error: " << e.what() << '\n';
        return exit_algebra;
    } catch (const DivisionByZero& e) {
        err << "algebra error: " << e.what() << '\n';
        return exit_algebra;
    } catch (const NumericFailure& e) {
        err << "numeric failure: " << e.what() << '\n';
        return exit_numeric;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return exit_precondition;
    } catch (const PreconditionError& e) {
        err << "precondition violated: " << e.what() << '\n';
        return exit_precondition;
    } catch (const InvariantViolation& e) {
        err << "internal error: " << e.what() << '\n';
        return exit_internal;
    }
}

}  // namespace quatroots
