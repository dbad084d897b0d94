#include "quatroots/roots.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "quatroots/linalg.hpp"
#include "quatroots/polyroots.hpp"

namespace quatroots {

ClassStatus<Rational> class_status(const QPolyQ& p, const ConjClass<Rational>& c) {
    const auto [alpha, beta] = class_remainder(p, c);
    if (alpha.is_zero()) {
        if (beta.is_zero()) return SphericalClass{};
        return NoRoot<Rational>{alpha, beta};
    }
    QuatQ q = -(inverse(alpha) * beta);
    if (class_of(q) == c) return IsolatedRoot<Rational>{std::move(q)};
    return NoRoot<Rational>{alpha, beta};
}

std::optional<QuatQ> find_class_witness(const AlgebraQ& alg, const Rational& t, const Rational& n) {
    const Rational half_t = t / 2;
    const Rational pure_norm = n - half_t * half_t;
    if (is_zero(pure_norm)) return std::nullopt;
    for (int x = 0; x <= 2; ++x) {
        for (int y = -2; y <= 2; ++y) {
            for (int z = -2; z <= 2; ++z) {
                // One representative per line through the origin.
                if (x == 0 && (y < 0 || (y == 0 && z <= 0))) continue;
                const QuatQ dir(alg, 0, x, y, z);
                const Rational nd = norm(dir);
                if (is_zero(nd)) continue;
                if (const auto beta = exact_sqrt(pure_norm / nd)) return QuatQ(alg, half_t) + dir * *beta;
            }
        }
    }
    return std::nullopt;
}

std::vector<QuatQ> sample_conjugates(const QuatQ& q, std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coord(-4, 4);
    std::vector<QuatQ> out;
    while (out.size() < count) {
        const QuatQ g(q.algebra(), coord(rng), coord(rng), coord(rng), coord(rng));
        if (g.is_zero() || is_zero(norm(g))) continue;
        out.push_back(g * q * inverse(g));
    }
    return out;
}

namespace {

// x^2 - t x + n from approximate invariants, if it rationalizes to an
// irreducible factor of the companion polynomial.
std::optional<Sphere<Rational>> rational_sphere(double t, double n, const CPolyQ& comp, const AlgebraQ& alg,
                                                const ClassifySettings& settings) {
    const auto rt = rationalize(t, settings.max_denominator, settings.rational_tol);
    const auto rn = rationalize(n, settings.max_denominator, settings.rational_tol);
    if (!rt || !rn) return std::nullopt;
    const Rational disc = (*rt) * (*rt) - 4 * (*rn);
    if (is_square(disc)) return std::nullopt;
    if (alg.is_definite() && sgn(disc) > 0) return std::nullopt;
    Sphere<Rational> s{*rt, *rn, false};
    if (!divides(min_poly<Rational>(s), comp)) return std::nullopt;
    return s;
}

void add_unique(std::vector<Sphere<Rational>>& v, const Sphere<Rational>& s) {
    if (std::find(v.begin(), v.end(), s) == v.end()) v.push_back(s);
}

}  // namespace

CandidateSet find_candidates(const QPolyQ& p, const ClassifySettings& settings) {
    if (p.is_zero()) throw UsageError("candidate classes of the zero polynomial");
    const AlgebraQ& alg = p.algebra();
    const CPolyQ comp = companion(p);
    CandidateSet out;
    if (comp.degree() < Degree(1)) {
        out.unresolved = CPolyQ::constant(1);
        return out;
    }

    std::vector<double> dc;
    for (const Rational& v : comp.coeffs()) dc.push_back(v.get_d());
    const auto clusters = root_clusters(CentralPoly<double>(dc));

    std::vector<double> reals;
    for (const RootCluster& rc : clusters) {
        const double mag = std::max(1.0, std::abs(rc.z));
        if (std::abs(rc.z.imag()) <= settings.rational_tol * mag) {
            reals.push_back(rc.z.real());
        } else if (rc.z.imag() > 0) {
            if (auto s = rational_sphere(2 * rc.z.real(), std::norm(rc.z), comp, alg, settings))
                add_unique(out.spheres, *s);
        }
    }
    // Over indefinite algebras a class can also split into two real roots of
    // the companion polynomial.
    if (!alg.is_definite()) {
        for (std::size_t m = 0; m < reals.size(); ++m)
            for (std::size_t n = m + 1; n < reals.size(); ++n)
                if (auto s = rational_sphere(reals[m] + reals[n], reals[m] * reals[n], comp, alg, settings))
                    add_unique(out.spheres, *s);
    }

    CPolyQ rest = squarefree_part(comp);
    for (const auto& s : out.spheres) rest = divrem(rest, min_poly<Rational>(s)).first;
    for (const Rational& r : rational_roots(rest)) rest = divrem(rest, CPolyQ({-r, Rational(1)})).first;
    if (rest.degree() == Degree(2)) {
        // A leftover quadratic is itself the minimal polynomial of a class
        // that rationalization missed.
        Sphere<Rational> s{-rest.coeff(1), rest.coeff(0), false};
        const Rational disc = s.t * s.t - 4 * s.n;
        if (!is_square(disc) && !(alg.is_definite() && sgn(disc) > 0)) {
            add_unique(out.spheres, s);
            rest = CPolyQ::constant(1);
        }
    }
    out.unresolved = rest;

    for (auto& s : out.spheres) s.validated = find_class_witness(alg, s.t, s.n).has_value();
    return out;
}

std::vector<ConjClass<Rational>> candidate_classes(const QPolyQ& p, const ClassifySettings& settings) {
    std::vector<ConjClass<Rational>> out;
    for (const Rational& r : roots_in_center(p)) out.push_back(Central<Rational>{r});
    for (const auto& s : find_candidates(p, settings).spheres) out.push_back(s);
    return out;
}

RootReport<Rational> classify(const QPolyQ& p, const ClassifySettings& settings) {
    if (p.degree() < Degree(1)) throw UsageError("classification needs a polynomial of degree at least 1");
    const AlgebraQ& alg = p.algebra();
    RootReport<Rational> report;
    report.provenance = Provenance::exact;
    report.central_roots = roots_in_center(p);

    CandidateSet cands = find_candidates(p, settings);
    report.unresolved = cands.unresolved;
    for (const auto& s : cands.spheres) {
        ClassEntry<Rational> e{s, class_status(p, s), false, {}};
        if (const auto* iso = std::get_if<IsolatedRoot<Rational>>(&e.status)) {
            e.cls.validated = true;
            if (!eval_right(p, iso->representative).is_zero())
                throw InvariantViolation("isolated representative is not a root");
        } else if (e.is_spherical()) {
            if (const auto w = find_class_witness(alg, s.t, s.n)) {
                std::vector<QuatQ> checks{*w};
                auto more = sample_conjugates(*w, settings.spot_checks, settings.seed);
                checks.insert(checks.end(), more.begin(), more.end());
                for (const auto& q : checks)
                    if (!eval_right(p, q).is_zero()) throw InvariantViolation("element of a spherical class is not a root");
            } else {
                e.note = "class not known to be realized over the rational algebra";
            }
        }
        report.entries.push_back(std::move(e));
    }
    if (!report.unresolved.is_zero() && report.unresolved.degree() > Degree(0))
        report.diagnostics.push_back("companion factor of degree " +
                                     std::to_string(report.unresolved.degree().value()) +
                                     " has no rational class invariants");

    const std::size_t deg = p.degree().value();
    if (report.classes_with_roots() > deg) throw InvariantViolation("more root classes than the degree");
    if (report.spherical_count() > deg / 2) throw InvariantViolation("more spherical classes than half the degree");
    CPolyQ prod = CPolyQ::constant(1);
    for (const auto& e : report.entries)
        if (e.is_spherical()) prod = prod * min_poly<Rational>(e.cls);
    if (!right_divides(QPolyQ::from_central(alg, prod), p))
        throw InvariantViolation("product of spherical minimal polynomials does not divide P");
    return report;
}

std::vector<ConjClass<Rational>> spherical_classes(const QPolyQ& p, const ClassifySettings& settings) {
    std::vector<ConjClass<Rational>> out;
    for (const auto& e : classify(p, settings).entries)
        if (e.is_spherical()) out.push_back(e.cls);
    return out;
}

namespace {

bool pairwise_commute(const std::vector<QuatQ>& qs) {
    for (std::size_t m = 0; m < qs.size(); ++m)
        for (std::size_t n = m + 1; n < qs.size(); ++n)
            if (!commutes(qs[m], qs[n])) return false;
    return true;
}

}  // namespace

SphericalBoundReport thm33_report(const QPolyQ& p, const ClassifySettings& settings) {
    if (p.degree() < Degree(1)) throw UsageError("spherical bound needs a polynomial of degree at least 1");
    const QPolyQ pm = monic(p);
    SphericalBoundReport r;
    r.degree = pm.degree().value();
    r.spherical = spherical_classes(pm, settings).size();
    r.bound = r.degree / 2;
    r.coefficients_central = pm.is_central();
    r.coefficients_commute = pairwise_commute(pm.coeffs());
    bool cond = true;
    if (r.degree % 2 == 0 && r.spherical == r.degree / 2) {
        r.equality = SphericalBoundReport::Equality::even;
        cond = r.coefficients_central;
    } else if (r.degree % 2 == 1 && r.spherical == (r.degree - 1) / 2) {
        r.equality = SphericalBoundReport::Equality::odd;
        cond = r.coefficients_commute;
    }
    r.holds = r.spherical <= r.bound && cond;
    return r;
}

CommonSubfield common_subfield(const QPolyQ& p) {
    std::vector<QuatQ> noncentral;
    for (const auto& q : p.coeffs())
        if (!q.is_central()) noncentral.push_back(q);
    if (noncentral.empty()) return {CommonSubfield::Kind::central, std::nullopt};
    if (!pairwise_commute(noncentral)) return {CommonSubfield::Kind::none, std::nullopt};
    return {CommonSubfield::Kind::generator, noncentral.back()};
}

std::string to_string(CubicCase::Kind k) {
    switch (k) {
        case CubicCase::Kind::c1a: return "1a";
        case CubicCase::Kind::c1b: return "1b";
        case CubicCase::Kind::c1c: return "1c";
        case CubicCase::Kind::c2a: return "2a";
        case CubicCase::Kind::c2b: return "2b";
        case CubicCase::Kind::c2c: return "2c";
        case CubicCase::Kind::c2d: return "2d";
    }
    return "?";
}

CubicCase classify_cubic(const QPolyQ& p, const ClassifySettings& settings) {
    if (p.degree() != Degree(3)) throw UsageError("cubic classification needs a degree-3 polynomial");
    if (!p.is_monic()) throw PreconditionError("cubic classification needs a monic polynomial");
    if (!p.algebra().is_definite()) throw PreconditionError("cubic classification needs a definite algebra");
    const QuatQ& a = p.coeffs()[2];
    const QuatQ& b = p.coeffs()[1];
    const QuatQ& c = p.coeffs()[0];
    const bool ra = a.is_central(), rb = b.is_central(), rc = c.is_central();
    using K = CubicCase::Kind;
    CubicCase out;
    const int noncentral = !ra + !rb + !rc;
    if (noncentral == 0) {
        out.kind = K::c1a;
    } else if (noncentral == 1) {
        out.kind = K::c2a;
    } else if (noncentral == 2) {
        if (rb) out.kind = commutes(a, c) ? K::c1b : K::c2d;
        else if (ra) out.kind = commutes(b, c) ? K::c2b : K::c2d;
        else out.kind = commutes(a, b) ? K::c2c : K::c2d;
    } else {
        out.kind = in_subfield(a, b) && in_subfield(c, b) ? K::c1c : K::c2d;
    }
    out.spherical_bound = (out.kind == K::c1a || out.kind == K::c1b || out.kind == K::c1c) ? 1 : 0;
    out.observed_spherical = spherical_classes(p, settings).size();
    out.consistent = out.observed_spherical <= out.spherical_bound;
    return out;
}

std::string to_string(SparseReport::Kind k) {
    switch (k) {
        case SparseReport::Kind::all_central: return "all-central";
        case SparseReport::Kind::one_noncentral: return "case-1";
        case SparseReport::Kind::same_subfield: return "case-2";
        case SparseReport::Kind::different_subfields: return "case-3";
        case SparseReport::Kind::not_applicable: return "not-applicable";
    }
    return "?";
}

SparseReport analyze_sparse(const QPolyQ& p, const ClassifySettings& settings) {
    if (p.degree() < Degree(1)) throw UsageError("sparse analysis needs a polynomial of degree at least 1");
    if (!p.is_monic()) throw PreconditionError("sparse analysis needs a monic polynomial");
    if (!p.algebra().is_definite()) throw PreconditionError("sparse analysis needs a definite algebra");
    using K = SparseReport::Kind;
    std::vector<std::size_t> pos;
    for (std::size_t n = 0; n < p.coeffs().size(); ++n)
        if (!p.coeffs()[n].is_central()) pos.push_back(n);

    SparseReport r;
    const std::size_t deg = p.degree().value();
    if (pos.size() > 2) {
        r.kind = K::not_applicable;
        return r;
    }
    std::vector<ConjClass<Rational>> sph = spherical_classes(p, settings);
    r.observed_spherical = sph.size();
    if (pos.empty()) {
        r.kind = K::all_central;
        r.bound = deg / 2;
    } else if (pos.size() == 1) {
        r.kind = K::one_noncentral;
        r.k = pos[0];
        r.bound = 0;
    } else {
        r.m = pos[0];
        r.k = pos[1];
        const QuatQ& ak = p.coeffs()[*r.k];
        const QuatQ& am = p.coeffs()[*r.m];
        if (commutes(ak, am)) {
            r.kind = K::same_subfield;
            r.bound = (*r.k - *r.m) / 2;
            // a_k = u + v a_m: compare pure parts coordinate-wise.
            Rational v;
            for (std::size_t n = 1; n < 4; ++n)
                if (!is_zero(am[n])) {
                    v = ak[n] / am[n];
                    break;
                }
            r.candidate_factor = CPolyQ::monomial(1, *r.k - *r.m) + CPolyQ::constant(1 / v);
        } else {
            r.kind = K::different_subfields;
            r.bound = 0;
        }
    }
    r.consistent = r.observed_spherical <= r.bound;
    if (r.candidate_factor) {
        for (const auto& c : sph)
            r.consistent = r.consistent && divides(min_poly<Rational>(c), *r.candidate_factor);
    }
    return r;
}

std::vector<QuatQ> roots_in_subfield(const QPolyQ& p, const QuatQ& s, const ClassifySettings& settings) {
    if (s.is_central()) throw UsageError("subfield generator must be non-central");
    const AlgebraQ& alg = p.algebra();
    const RootReport<Rational> rep = classify(p, settings);
    std::vector<QuatQ> out;
    for (const Rational& r : rep.central_roots) out.emplace_back(alg, r);
    const QuatQ s0 = s.pure_part();
    const Rational ns0 = norm(s0);
    for (const auto& e : rep.entries) {
        if (const auto* iso = std::get_if<IsolatedRoot<Rational>>(&e.status)) {
            if (commutes(iso->representative, s)) out.push_back(iso->representative);
        } else if (e.is_spherical() && !is_zero(ns0)) {
            const Rational half_t = e.cls.t / 2;
            if (const auto beta = exact_sqrt((e.cls.n - half_t * half_t) / ns0)) {
                out.push_back(QuatQ(alg, half_t) + s0 * *beta);
                out.push_back(QuatQ(alg, half_t) - s0 * *beta);
            }
        }
    }
    for (const auto& q : out)
        if (!eval_right(p, q).is_zero()) throw InvariantViolation("subfield root does not evaluate to zero");
    return out;
}

std::vector<QuatQ> conjugator_kernel(const QPolyQ& p, const QuatQ& c) {
    const AlgebraQ& alg = p.algebra();
    std::vector<QuatQ> powers{QuatQ(alg, 1)};
    for (std::size_t n = 1; n < p.coeffs().size(); ++n) powers.push_back(powers.back() * c);
    const std::array<QuatQ, 4> basis{QuatQ(alg, 1), QuatQ::unit_i(alg), QuatQ::unit_j(alg), QuatQ::unit_k(alg)};
    Mat4<Rational> m;
    for (std::size_t col = 0; col < 4; ++col) {
        QuatQ img(alg);
        for (std::size_t n = 0; n < p.coeffs().size(); ++n) img += p.coeffs()[n] * basis[col] * powers[n];
        for (std::size_t row = 0; row < 4; ++row) m[row][col] = img[row];
    }
    std::vector<QuatQ> out;
    for (const auto& v : nullspace(m)) out.push_back(QuatQ::from_coords(alg, v));
    return out;
}

std::vector<QuatQ> nonroot_conjugates(const QPolyQ& p, const QuatQ& c, std::size_t k) {
    if (k == 0) throw UsageError("requested zero conjugates");
    if (c.is_central()) throw PreconditionError("element must be non-central");
    if (eval_right(p, c).is_zero()) throw PreconditionError("element is a root of the polynomial");

    const std::vector<QuatQ> kernel = conjugator_kernel(p, c);
    std::vector<QuatQ> out;
    if (kernel.empty()) {
        // No element of the class is a root.
        out = distinct_conjugates(c, k);
    } else {
        const QuatQ one(p.algebra(), 1);
        const long budget = 64 * static_cast<long>(k) + 1024;
        for (long m = 1; out.size() < k; ++m) {
            if (m > budget) throw InvariantViolation("too few distinct non-root conjugates");
            const QuatQ g = one + kernel.front() * Rational(m);
            QuatQ g_inv(p.algebra());
            try {
                g_inv = inverse(g);
            } catch (const ZeroDivisorError&) {
                continue;
            }
            QuatQ d = g * c * g_inv;
            if (std::find(out.begin(), out.end(), d) == out.end()) out.push_back(std::move(d));
        }
    }
    for (const auto& d : out) {
        if (!same_class(d, c)) throw InvariantViolation("conjugate left the class");
        if (eval_right(p, d).is_zero()) throw InvariantViolation("conjugate is a root");
    }
    return out;
}

}  // namespace quatroots
