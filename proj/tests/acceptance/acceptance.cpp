// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <iostream>
#include <set>
#include <sstream>

#include "quatroots/cli.hpp"
#include "quatroots/format.hpp"
#include "quatroots/numeric.hpp"
#include "quatroots/parse.hpp"
#include "quatroots/roots.hpp"
#include "../support.hpp"

using namespace quatroots;
using testing_support::Gen;

namespace {

const AlgebraQ& H() { return AlgebraQ::hamilton(); }
QPolyQ P(const char* s) { return parse_poly(s, H()); }
QuatQ Q(const char* s) { return parse_quaternion(s, H()); }

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<Sphere<Rational>> spherical_of(const RootReport<Rational>& r) {
    std::vector<Sphere<Rational>> out;
    for (const auto& e : r.entries)
        if (e.is_spherical()) out.push_back(e.cls);
    return out;
}

// 1
Outcome worked_cubics() {
    Outcome o;
    const auto t0 = Clock::now();
    const Sphere<Rational> unit{0, 1, true}, cube_root{-1, 1, true};
    struct Case {
        const char* poly;
        std::vector<Sphere<Rational>> spherical;
    };
    const std::vector<Case> cases{
        {"x(x^2 - 1)", {}},
        {"x(x^2 + 1)", {unit}},
        {"x^3 - i x^2 - x + i", {}},
        {"x^3 - i x^2 + x - i", {unit}},
        {"x^3 + (2 - i)x^2 + (1 - 2i)x - i", {}},
        {"x^3 + (1 - i)x^2 + (1 - i)x - i", {cube_root}},
    };
    for (const auto& c : cases) {
        const RootReport<Rational> r = classify(P(c.poly));
        o.require(spherical_of(r) == c.spherical, std::string("wrong spherical classes for ") + c.poly);
        for (const auto& e : r.entries) o.require(e.cls.validated, std::string("unvalidated class for ") + c.poly);
    }
    // the spherical class of i, and i itself being a root
    o.require(eval_right(P("x(x^2 + 1)"), Q("i")).is_zero(), "i is not a root of x(x^2 + 1)");
    o.require(eval_right(P("x^3 - i x^2 + x - i"), Q("j")).is_zero(), "j is not a root of (x - i)(x^2 + 1)");
    const double dt = seconds_since(t0);
    o.require(dt < 1.0, "runtime " + std::to_string(dt) + " s");
    if (o.ok) o.detail = "6 polynomials, " + std::to_string(dt) + " s";
    return o;
}

// 2
Outcome non_maximal_central_divisor() {
    Outcome o;
    const QPolyQ p = P("(x^2 + 1) x");
    const BeckFactorization f = beck_decompose(p);
    o.require(f.h == CPolyQ({0, 1, 0, 1}), "H is not x^3 + x");
    o.require(f.g == P("1") && f.c == Q("1"), "c, G are not 1");
    const QPolyQ h = P("x");
    o.require(right_divides(h, p), "x does not right-divide P");
    o.require(h.degree() < f.h.degree(), "deg x is not below deg H");

    std::ostringstream out, err;
    o.require(run_cli({"decompose", "(x^2 + 1) x"}, out, err) == exit_ok, "decompose command failed");
    o.require(out.str().find("not the central divisor of greatest degree") != std::string::npos,
              "report does not flag the non-maximal divisor");
    if (o.ok) o.detail = "H = x^3 + x; x right-divides P with 1 < 3";
    return o;
}

// 3
Outcome division_and_gcrd() {
    Outcome o;
    const auto t0 = Clock::now();
    Gen gen(3003);
    for (int n = 0; n < 1000; ++n) {
        const QPolyQ p = gen.poly(H(), gen.integer(0, 6));
        const QPolyQ d = gen.monic_poly(H(), gen.integer(1, 6));
        const auto qr = right_divrem(p, d);
        o.require(qr.quotient * d + qr.remainder == p, "P != Q D + R");
        o.require(qr.remainder.degree() < d.degree(), "deg R >= deg D");
    }
    for (int n = 0; n < 500; ++n) {
        const QPolyQ a = gen.poly(H(), gen.integer(0, 3));
        const QPolyQ b = gen.poly(H(), gen.integer(0, 3));
        const QPolyQ w = gen.monic_poly(H(), gen.integer(1, 3));
        o.require(right_divides(w, gcrd(a * w, b * w)), "W does not right-divide gcrd(A W, B W)");
    }
    const double dt = seconds_since(t0);
    o.require(dt < 30.0, "runtime " + std::to_string(dt) + " s");
    if (o.ok) o.detail = "1000 divisions, 500 gcrds, " + std::to_string(dt) + " s";
    return o;
}

// 4
Outcome factorization_round_trip() {
    Outcome o;
    Gen gen(4004);
    std::size_t nontrivial = 0;
    for (int n = 0; n < 500; ++n) {
        QPolyQ p = gen.poly(H(), gen.integer(0, 4));
        if (gen.coin()) p = p * QPolyQ::from_central(H(), gen.central_poly(gen.integer(1, 3), 5));
        const BeckFactorization f = beck_decompose(p);
        o.require(QPolyQ::constant(f.c) * f.g * QPolyQ::from_central(H(), f.h) == p, "c G H != P");
        o.require(f.h.is_monic(), "H not monic");
        o.require(coordinate_gcd(f.g) == CPolyQ({1}), "coordinate gcd of G is not 1");
        nontrivial += f.h.degree() > Degree(0);
    }
    if (o.ok) o.detail = "500 polynomials, " + std::to_string(nontrivial) + " with deg H > 0";
    return o;
}

// 5
Outcome root_count_bounds() {
    Outcome o;
    Gen gen(5005);
    std::size_t even_eq = 0, odd_eq = 0;
    for (int n = 0; n < 500; ++n) {
        const std::size_t deg = static_cast<std::size_t>(gen.integer(1, 6));
        QPolyQ p = gen.coin(0.7) ? gen.structured_poly(H(), deg) : gen.poly(H(), deg, 5);
        if (n % 5 == 0 && deg >= 2) {
            // products of central quadratics, possibly times one linear factor
            p = QPolyQ::constant(QuatQ(H(), 1));
            for (std::size_t d = 0; d + 1 < deg; d += 2) {
                const Rational t = gen.integer(-3, 3), m = t * t / 4 + gen.integer(1, 3);
                p = p * QPolyQ::from_central(H(), CPolyQ({m, -t, 1}));
            }
            if (deg % 2) p = p * QPolyQ::linear(gen.quaternion(H(), 2));
        }
        try {
            const RootReport<Rational> r = classify(p);
            o.require(r.classes_with_roots() <= deg, "more root classes than the degree");
            o.require(r.spherical_count() <= deg / 2, "more spherical classes than deg/2");
            const SphericalBoundReport b = thm33_report(p);
            o.require(b.holds, "spherical bound report fails");
            even_eq += b.equality == SphericalBoundReport::Equality::even;
            odd_eq += b.equality == SphericalBoundReport::Equality::odd;
        } catch (const InvariantViolation& e) {
            o.require(false, std::string("invariant violated: ") + e.what());
        }
    }
    o.require(even_eq > 0 && odd_eq > 0, "equality cases not exercised");
    if (o.ok)
        o.detail = "500 polynomials, " + std::to_string(even_eq) + " even and " + std::to_string(odd_eq) +
                   " odd equality cases";
    return o;
}

// 6
Outcome equality_witnesses() {
    Outcome o;
    SphericalBoundReport b = thm33_report(P("(x^2 + 1)(x^2 + x + 1)"));
    o.require(b.spherical == 2, "expected 2 spherical classes");
    o.require(b.equality == SphericalBoundReport::Equality::even && b.coefficients_central, "coefficients not central");
    b = thm33_report(P("(x - i)(x^2 + 1)"));
    o.require(b.spherical == 1, "expected 1 spherical class");
    o.require(b.equality == SphericalBoundReport::Equality::odd && b.coefficients_commute,
              "coefficients do not commute pairwise");
    o.require(common_subfield(P("(x - i)(x^2 + 1)")).kind == CommonSubfield::Kind::generator,
              "no common subfield found");
    if (o.ok) o.detail = "2 = 4/2 central; 1 = (3-1)/2 in one subfield";
    return o;
}

// 7
Outcome nonroot_generator() {
    Outcome o;
    const QPolyQ p = P("x^2 + x + 1");
    const auto ys = nonroot_conjugates(p, Q("i"), 10);
    std::set<std::string> seen;
    for (const auto& y : ys) {
        o.require(class_of(y) == ConjClass<Rational>(Sphere<Rational>{0, 1, true}), "element left Sphere(0, 1)");
        o.require(!testing_support::oracle_eval(p, y).is_zero(), "element is a root");
        seen.insert(to_text(y));
    }
    o.require(ys.size() == 10 && seen.size() == 10, "not 10 distinct elements");

    Gen gen(7007);
    std::size_t nontrivial = 0;
    for (int n = 0; n < 200; ++n) {
        const QPolyQ f = gen.structured_poly(H(), gen.integer(1, 4));
        QuatQ c = gen.noncentral(H(), 3);
        if (gen.coin()) {
            // aim c at a class holding a root
            const RootReport<Rational> r = classify(f);
            for (const auto& e : r.entries)
                if (const auto* iso = std::get_if<IsolatedRoot<Rational>>(&e.status)) c = Q("j") * iso->representative * Q("-j");
        }
        const std::size_t dim = conjugator_kernel(f, c).size();
        o.require(dim == 0 || dim == 2 || dim == 4, "kernel dimension " + std::to_string(dim));
        nontrivial += dim > 0;
        if (!eval_right(f, c).is_zero() && !c.is_central()) {
            const auto zs = nonroot_conjugates(f, c, 3);
            for (const auto& z : zs) o.require(!eval_right(f, z).is_zero(), "generated a root");
        }
    }
    if (o.ok) o.detail = "10 distinct non-roots; 200 kernels, " + std::to_string(nontrivial) + " nontrivial";
    return o;
}

// 8
Outcome structural_analyzers() {
    Outcome o;
    Gen gen(8008);
    auto real = [&] { return QuatQ(H(), gen.rational(5)); };
    auto pure = [&](const QuatQ& dir) { return dir * QuatQ(H(), Rational(gen.integer(1, 5))) + real(); };
    const QuatQ i = Q("i"), j = Q("j");

    auto sparse = [&](std::size_t deg, std::size_t k, std::size_t m, const QuatQ& ak, const QuatQ& am) {
        std::vector<QuatQ> c;
        for (std::size_t d = 0; d < deg; ++d) c.push_back(real());
        c.push_back(QuatQ(H(), 1));
        c[k] = ak;
        c[m] = am;
        return QPolyQ(H(), std::move(c));
    };

    std::size_t case1_spherical = 0, case3_spherical = 0, case2_count = 0;
    for (int n = 0; n < 200; ++n) {
        const std::size_t deg = static_cast<std::size_t>(gen.integer(2, 6));
        const std::size_t k = static_cast<std::size_t>(gen.integer(1, deg - 1));
        const std::size_t m = static_cast<std::size_t>(gen.integer(0, k - 1));
        const QuatQ dir = gen.coin() ? i : Q("i + j - 2k");

        // one of a_k, a_m real
        QPolyQ p = gen.coin() ? sparse(deg, k, m, real(), pure(dir)) : sparse(deg, k, m, pure(dir), real());
        SparseReport s = analyze_sparse(p);
        o.require(s.kind == SparseReport::Kind::one_noncentral || s.kind == SparseReport::Kind::all_central,
                  "case-1 family misdetected: " + to_string(s.kind));
        o.require(s.consistent, "case-1 bound violated");
        case1_spherical += s.observed_spherical;

        // different subfields
        p = sparse(deg, k, m, pure(i), pure(j));
        s = analyze_sparse(p);
        o.require(s.kind == SparseReport::Kind::different_subfields, "case-3 family misdetected");
        o.require(s.consistent, "case-3 bound violated");
        case3_spherical += s.observed_spherical;

        // same subfield: a_k = u + v a_m
        const QuatQ am = pure(dir);
        const Rational v = gen.integer(1, 3) * (gen.coin() ? 1 : -1);
        const QuatQ ak = real() + QuatQ(H(), v) * am;
        p = sparse(deg, k, m, ak, am);
        s = analyze_sparse(p);
        o.require(s.kind == SparseReport::Kind::same_subfield, "case-2 family misdetected");
        o.require(s.consistent, "case-2 bound violated");
        case2_count += s.observed_spherical;
    }
    // same-subfield members that reach the bound
    for (const char* s : {"x^4 + i x^3 + i x", "x^3 + i x^2 + x + i", "x^4 + i x^3 + x^2 + i x",
                          "x^5 + 2i x^4 + 1/2 x^3 + i x^2"}) {
        const SparseReport r = analyze_sparse(P(s));
        o.require(r.consistent, std::string("bound violated for ") + s);
        case2_count += r.observed_spherical;
    }
    o.require(case1_spherical == 0, "case-1 family has spherical classes");
    o.require(case3_spherical == 0, "case-3 family has spherical classes");

    // cubic cases
    std::map<CubicCase::Kind, std::size_t> seen;
    for (int n = 0; n < 300; ++n) {
        const QuatQ dir = gen.coin() ? i : Q("2i - j + k");
        auto coef = [&](int kind) {
            switch (kind) {
                case 0: return real();
                case 1: return pure(dir);
                case 2: return pure(j);
                default: return pure(Q("k"));
            }
        };
        const QPolyQ p(H(), {coef(static_cast<int>(gen.integer(0, 3))), coef(static_cast<int>(gen.integer(0, 3))),
                             coef(static_cast<int>(gen.integer(0, 3))), QuatQ(H(), 1)});
        const CubicCase c = classify_cubic(p);
        o.require(c.consistent, "cubic bound violated for " + to_text(p));
        ++seen[c.kind];
    }
    for (const char* s : {"x^3 - x", "x^3 - i x^2 + x - i", "x^3 + i x^2 + 2 x + (1 + i)", "x^3 + i x^2 + j x + 1"}) {
        const CubicCase c = classify_cubic(P(s));
        o.require(c.consistent, std::string("cubic bound violated for ") + s);
        ++seen[c.kind];
    }
    o.require(seen.size() == 7, "only " + std::to_string(seen.size()) + " of 7 cubic cases exercised");
    if (o.ok)
        o.detail = "600 sparse + 4 structured, 307 cubics over 7 cases; " + std::to_string(case2_count) +
                   " spherical class(es) in case 2";
    return o;
}

// 9
Outcome backend_agreement() {
    Outcome o;
    Gen gen(9009);
    std::size_t irrational = 0, uncertain = 0, matched = 0;
    for (int n = 0; n < 200; ++n) {
        const std::size_t deg = static_cast<std::size_t>(gen.integer(1, 5));
        const QPolyQ p = gen.coin() ? gen.structured_poly(H(), deg) : gen.poly(H(), deg);
        const AgreementReport a = agree_with_exact(p);
        std::string why;
        for (const auto& d : a.diagnostics) why += d + "; ";
        o.require(a.agree, "disagreement on " + to_text(p) + ": " + why);
        irrational += a.irrational_classes;
        uncertain += a.uncertain;
        matched += a.matched_classes;
    }
    if (o.ok)
        o.detail = "200 polynomials, " + std::to_string(matched) + " classes matched, " + std::to_string(irrational) +
                   " irrational, " + std::to_string(uncertain) + " uncertain";
    return o;
}

// 10
Outcome product_evaluation() {
    Outcome o;
    Gen gen(1010);
    std::size_t naive_fails = 0;
    for (int n = 0; n < 200; ++n) {
        const QPolyQ g = gen.poly(H(), gen.integer(0, 3), 5), h = gen.poly(H(), gen.integer(0, 3), 5);
        const QuatQ at = gen.quaternion(H(), 5);
        const QuatQ whole = eval_right(g * h, at);
        o.require(eval_product(g, h, at) == whole, "eval_product differs from evaluating G H");
        naive_fails += eval_right(g, at) * eval_right(h, at) != whole;
    }
    o.require(naive_fails > 0, "G(q) H(q) always matched (G H)(q)");
    if (o.ok) o.detail = "200 triples exact; G(q) H(q) != (G H)(q) in " + std::to_string(naive_fails);
    return o;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

// 11
Outcome parser_round_trip() {
    Outcome o;
    Gen gen(1111);
    for (int n = 0; n < 500; ++n) {
        const QPolyQ p = gen.poly(H(), gen.integer(0, 6));
        o.require(parse_poly(to_text(p), H()) == p, "text round trip fails for " + to_text(p));
        o.require(poly_from_json(Json::parse(to_json(p).dump()), H()) == p, "json round trip fails");
    }
    const std::vector<std::pair<std::string, std::string>> golden{
        {"ex1", "x(x^2 - 1)"},
        {"ex2", "x(x^2 + 1)"},
        {"ex3", "x^3 - i x^2 - x + i"},
        {"ex4", "x^3 - i x^2 + x - i"},
        {"ex5", "x^3 + (2 - i)x^2 + (1 - 2i)x - i"},
        {"ex6", "x^3 + (1 - i)x^2 + (1 - i)x - i"},
    };
    for (const auto& [name, poly] : golden) {
        for (const std::string fmt : {"text", "json"}) {
            std::ostringstream out, err;
            run_cli({"--format", fmt, "classify", poly}, out, err);
            const std::string path =
                std::string(QUATROOTS_GOLDEN_DIR) + "/" + name + (fmt == "text" ? ".txt" : ".json");
            o.require(out.str() == slurp(path), "golden mismatch: " + path);
        }
    }
    if (o.ok) o.detail = "500 polynomials in both formats; 12 golden files identical";
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"worked cubic examples classify as stated", worked_cubics},
        {"central divisor x is not of greatest degree", non_maximal_central_divisor},
        {"division and gcrd properties", division_and_gcrd},
        {"c G H round trip", factorization_round_trip},
        {"root class and spherical bounds", root_count_bounds},
        {"spherical bound equality witnesses", equality_witnesses},
        {"non-root conjugates and kernel parity", nonroot_generator},
        {"sparse and cubic analyzers", structural_analyzers},
        {"exact and floating-point backends agree", backend_agreement},
        {"product evaluation rule", product_evaluation},
        {"parser round trip and golden files", parser_round_trip},
    };
    int failures = 0;
    for (std::size_t n = 0; n < criteria.size(); ++n) {
        const auto t0 = Clock::now();
        Outcome o;
        try {
            o = criteria[n].second();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        std::printf("%s %2zu  %-46s %s (%.2f s)\n", o.ok ? "PASS" : "FAIL", n + 1, criteria[n].first.c_str(),
                    o.detail.c_str(), seconds_since(t0));
        failures += !o.ok;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
