#include "quatroots/numeric.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace quatroots {

void NumericSettings::validate() const {
    if (!(eps_zero > 0) || !(eps_class > 0) || !(max_condition > 0))
        throw UsageError("numeric tolerances must be strictly positive");
}

std::complex<double> eval(const CentralPoly<double>& c, std::complex<double> z) {
    std::complex<double> acc = 0;
    const auto& k = c.coeffs();
    for (auto it = k.rbegin(); it != k.rend(); ++it) acc = acc * z + *it;
    return acc;
}

double residual_scale(const CentralPoly<double>& c, std::complex<double> z) {
    const double r = std::abs(z);
    double acc = 0;
    const auto& k = c.coeffs();
    for (auto it = k.rbegin(); it != k.rend(); ++it) acc = acc * r + std::abs(*it);
    return acc;
}

namespace {

constexpr double kMergeRadius = 1e-2;
constexpr double kDerivativeTol = 1e-7;

bool small_residual(const CentralPoly<double>& c, std::complex<double> z, double tol) {
    const double s = residual_scale(c, z);
    return std::abs(eval(c, z)) <= tol * (s > 0 ? s : 1.0);
}

std::complex<double> newton(const CentralPoly<double>& f, std::complex<double> z) {
    const CentralPoly<double> df = derivative(f);
    std::complex<double> best = z;
    double best_res = std::abs(eval(f, z));
    for (int it = 0; it < 60 && best_res > 0; ++it) {
        const std::complex<double> d = eval(df, z);
        if (d == 0.0) break;
        const std::complex<double> step = eval(f, z) / d;
        z -= step;
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) break;
        const double res = std::abs(eval(f, z));
        if (res < best_res) {
            best_res = res;
            best = z;
        }
        if (std::abs(step) <= 1e-17 * std::max(1.0, std::abs(z))) break;
    }
    return best;
}

std::vector<std::complex<double>> eigen_roots(const std::vector<double>& monic_coeffs) {
    const std::size_t n = monic_coeffs.size() - 1;
    if (n == 1) return {-monic_coeffs[0]};
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t r = 1; r < n; ++r) m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(r - 1)) = 1.0;
    for (std::size_t r = 0; r < n; ++r) m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(n - 1)) = -monic_coeffs[r];
    Eigen::EigenSolver<Eigen::MatrixXd> es(m, false);
    if (es.info() != Eigen::Success) throw NumericFailure("companion eigenvalue iteration did not converge");
    std::vector<std::complex<double>> out;
    for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) out.push_back(es.eigenvalues()(k));
    return out;
}

}  // namespace

std::vector<RootCluster> root_clusters(const CentralPoly<double>& c, const NumericSettings& settings) {
    std::vector<RootCluster> out;
    if (c.degree() < Degree(1)) return out;
    std::vector<double> k = c.coeffs();
    std::size_t zeros = 0;
    while (k[zeros] == 0.0) ++zeros;
    if (zeros) out.push_back({0.0, zeros});
    k.erase(k.begin(), k.begin() + static_cast<std::ptrdiff_t>(zeros));
    if (k.size() < 2) return out;
    const double lead = k.back();
    for (double& v : k) v /= lead;
    const CentralPoly<double> f(k);
    const std::vector<std::complex<double>> eig = eigen_roots(k);

    // Single-linkage grouping of eigenvalues that scatter around one root.
    const std::size_t n = eig.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            const double mag = std::max({1.0, std::abs(eig[a]), std::abs(eig[b])});
            if (std::abs(eig[a] - eig[b]) <= kMergeRadius * mag) parent[find(a)] = find(b);
        }
    std::vector<std::vector<std::complex<double>>> groups(n);
    for (std::size_t a = 0; a < n; ++a) groups[find(a)].push_back(eig[a]);

    for (const auto& g : groups) {
        if (g.empty()) continue;
        if (g.size() == 1) {
            out.push_back({newton(f, g[0]), 1});
            continue;
        }
        std::complex<double> centroid = 0;
        for (const auto& z : g) centroid += z;
        centroid /= static_cast<double>(g.size());
        std::vector<CentralPoly<double>> ders{f};
        for (std::size_t m = 1; m < g.size(); ++m) ders.push_back(derivative(ders.back()));
        const std::complex<double> z = newton(ders.back(), centroid);
        bool ok = small_residual(f, z, settings.eps_zero);
        for (std::size_t m = 1; ok && m + 1 < g.size(); ++m) ok = small_residual(ders[m], z, kDerivativeTol);
        if (ok) {
            out.push_back({z, g.size()});
        } else {
            for (const auto& z0 : g) out.push_back({newton(f, z0), 1});
        }
    }
    return out;
}

namespace {

std::vector<RootCluster> checked_clusters(const QPolyF& p, const NumericSettings& settings) {
    settings.validate();
    if (p.degree() < Degree(1)) throw UsageError("numeric roots need a polynomial of degree at least 1");
    const CentralPoly<double> comp = companion(p);
    double scale = 0;
    for (double v : comp.coeffs()) scale = std::max(scale, std::abs(v));
    if (scale / std::abs(comp.lead()) > settings.max_condition)
        throw NumericFailure("leading coefficient too small relative to the coefficient scale");
    const auto clusters = root_clusters(comp, settings);
    std::vector<std::complex<double>> partial;
    for (const auto& rc : clusters) {
        if (!small_residual(comp, rc.z, settings.eps_zero))
            throw NumericFailure("companion root failed the residual test", partial);
        partial.insert(partial.end(), rc.multiplicity, rc.z);
    }
    return clusters;
}

bool in_band(double v, double tol) { return v > tol / 10 && v <= tol * 10; }

double coefficient_scale(const QPolyF& p, double rho) {
    double acc = 0;
    const auto& c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * rho + magnitude(*it);
    return acc > 0 ? acc : 1.0;
}

}  // namespace

std::vector<std::complex<double>> companion_roots_f64(const QPolyF& p, const NumericSettings& settings) {
    std::vector<std::complex<double>> out;
    for (const auto& rc : checked_clusters(p, settings)) out.insert(out.end(), rc.multiplicity, rc.z);
    return out;
}

RootReport<double> classify_f64(const QPolyF& p, const NumericSettings& settings) {
    if (p.degree() < Degree(1)) throw UsageError("classification needs a polynomial of degree at least 1");
    if (!(p.algebra() == Algebra<double>::hamilton()))
        throw UsageError("the numeric backend works over Hamilton's quaternions (-1, -1)");
    RootReport<double> report;
    report.provenance = Provenance::numeric;
    report.unresolved = CentralPoly<double>::constant(1.0);

    for (const RootCluster& rc : checked_clusters(p, settings)) {
        const double mag = std::max(1.0, std::abs(rc.z));
        const double im = std::abs(rc.z.imag());
        const double im_tol = settings.eps_class * mag;
        if (im <= im_tol) {
            const double r = rc.z.real();
            bool dup = false;
            for (double e : report.central_roots) dup = dup || std::abs(e - r) <= im_tol;
            if (dup) continue;
            const QuatF val = eval_right(p, QuatF(p.algebra(), r));
            if (magnitude(val) > settings.eps_zero * coefficient_scale(p, std::abs(r)))
                report.diagnostics.push_back("central candidate " + to_string(r) + " does not evaluate to zero");
            report.central_roots.push_back(r);
            if (in_band(im, im_tol))
                report.diagnostics.push_back("central root " + to_string(r) + " is close to a spherical class");
            continue;
        }
        if (rc.z.imag() < 0) continue;

        ClassEntry<double> e{Sphere<double>{2 * rc.z.real(), std::norm(rc.z), true}, SphericalClass{}, false, {}};
        const double rho = std::sqrt(e.cls.n);
        const auto [alpha, beta] = class_remainder(p, e.cls);
        const double scale = coefficient_scale(p, rho);
        const double ea = magnitude(alpha) * rho / scale;
        const double eb = magnitude(beta) / scale;
        std::vector<std::string> notes;
        if (ea <= settings.eps_zero) {
            if (eb > settings.eps_zero) e.status = NoRoot<double>{alpha, beta};
            if (in_band(ea, settings.eps_zero) || in_band(eb, settings.eps_zero)) notes.push_back("remainder near tolerance");
        } else {
            QuatF q = -(inverse(alpha) * beta);
            const double dev = std::max(std::abs(trace(q) - e.cls.t) / std::max(1.0, std::abs(e.cls.t)),
                                        std::abs(norm(q) - e.cls.n) / std::max(1.0, e.cls.n));
            if (dev <= settings.eps_class) e.status = IsolatedRoot<double>{std::move(q)};
            else e.status = NoRoot<double>{alpha, beta};
            if (in_band(ea, settings.eps_zero)) notes.push_back("remainder near tolerance");
            if (in_band(dev, settings.eps_class)) notes.push_back("candidate root near the class boundary");
        }
        if (in_band(im, im_tol)) notes.push_back("class close to the center");
        const double t_abs = std::abs(e.cls.t);
        if (t_abs > 1e-13 * mag && t_abs <= settings.eps_class * mag)
            notes.push_back("trace indistinguishable from 0");
        e.uncertain = !notes.empty();
        for (const auto& s : notes) e.note += (e.note.empty() ? "" : "; ") + s;
        report.entries.push_back(std::move(e));
    }

    const std::size_t deg = p.degree().value();
    if (report.classes_with_roots() > deg) throw NumericFailure("more root classes than the degree");
    if (report.spherical_count() > deg / 2) throw NumericFailure("more spherical classes than half the degree");
    return report;
}

std::vector<QuatF> roots_in_subfield_f64(const QPolyF& p, const QuatF& s, const NumericSettings& settings) {
    if (s.is_central()) throw UsageError("subfield generator must be non-central");
    const RootReport<double> rep = classify_f64(p, settings);
    std::vector<QuatF> out;
    for (double r : rep.central_roots) out.emplace_back(p.algebra(), r);
    const QuatF s0 = s.pure_part();
    const double ns0 = norm(s0);
    for (const auto& e : rep.entries) {
        if (const auto* iso = std::get_if<IsolatedRoot<double>>(&e.status)) {
            const QuatF& q = iso->representative;
            const QuatF comm = q * s - s * q;
            if (magnitude(comm) <= settings.eps_class * std::max(1.0, magnitude(q) * magnitude(s)))
                out.push_back(q);
        } else if (e.is_spherical()) {
            const double beta = std::sqrt(std::max(0.0, e.cls.n - e.cls.t * e.cls.t / 4) / ns0);
            out.push_back(QuatF(p.algebra(), e.cls.t / 2) + s0 * beta);
            out.push_back(QuatF(p.algebra(), e.cls.t / 2) - s0 * beta);
        }
    }
    return out;
}

namespace {

bool close(double a, double b, double tol) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(a)); }

const char* category(std::size_t index) {
    static const char* names[] = {"spherical", "isolated", "no-root"};
    return names[index];
}

}  // namespace

AgreementReport agree_with_exact(const QPolyQ& p, const NumericSettings& settings,
                                 const ClassifySettings& exact_settings) {
    if (!(p.algebra() == AlgebraQ::hamilton()))
        throw UsageError("backend agreement is defined over (-1, -1)");
    const RootReport<Rational> ex = classify(p, exact_settings);
    const RootReport<double> nu = classify_f64(to_double(p), settings);

    AgreementReport r;
    r.uncertain = nu.uncertain_count();
    std::vector<double> left;
    for (const Rational& v : ex.unresolved.coeffs()) left.push_back(v.get_d());
    const CentralPoly<double> leftover(left);
    auto accounted = [&](std::complex<double> z) {
        if (leftover.degree() < Degree(1)) return false;
        return small_residual(leftover, z, settings.eps_class);
    };

    const double tol = settings.eps_class;
    std::vector<bool> used_c(nu.central_roots.size(), false);
    for (const Rational& er : ex.central_roots) {
        bool found = false;
        for (std::size_t n = 0; n < nu.central_roots.size() && !found; ++n)
            if (!used_c[n] && close(er.get_d(), nu.central_roots[n], tol)) found = used_c[n] = true;
        if (!found) r.diagnostics.push_back("central root " + to_string(er) + " missing numerically");
    }
    for (std::size_t n = 0; n < nu.central_roots.size(); ++n) {
        if (used_c[n]) continue;
        if (!accounted(nu.central_roots[n]))
            r.diagnostics.push_back("numeric central root " + to_string(nu.central_roots[n]) + " unmatched");
    }

    std::vector<bool> used(nu.entries.size(), false);
    for (const auto& ee : ex.entries) {
        const double t = ee.cls.t.get_d(), n = ee.cls.n.get_d();
        std::size_t match = nu.entries.size();
        for (std::size_t m = 0; m < nu.entries.size(); ++m)
            if (!used[m] && close(t, nu.entries[m].cls.t, tol) && close(n, nu.entries[m].cls.n, tol)) {
                match = m;
                break;
            }
        const std::string label = "class (t=" + to_string(ee.cls.t) + ", n=" + to_string(ee.cls.n) + ")";
        if (match == nu.entries.size()) {
            r.diagnostics.push_back(label + " missing numerically");
            continue;
        }
        used[match] = true;
        const auto& ne = nu.entries[match];
        if (ee.status.index() != ne.status.index()) {
            r.diagnostics.push_back(label + ": exact " + category(ee.status.index()) + " vs numeric " +
                                    category(ne.status.index()));
            continue;
        }
        if (const auto* ei = std::get_if<IsolatedRoot<Rational>>(&ee.status)) {
            const auto& nq = std::get<IsolatedRoot<double>>(ne.status).representative;
            for (std::size_t c = 0; c < 4; ++c)
                if (!close(ei->representative[c].get_d(), nq[c], 1e-6))
                    r.diagnostics.push_back(label + ": isolated representatives differ");
        }
        ++r.matched_classes;
    }
    for (std::size_t m = 0; m < nu.entries.size(); ++m) {
        if (used[m]) continue;
        const auto& c = nu.entries[m].cls;
        const std::complex<double> z(c.t / 2, std::sqrt(std::max(0.0, c.n - c.t * c.t / 4)));
        if (accounted(z)) ++r.irrational_classes;
        else r.diagnostics.push_back("numeric class (t=" + to_string(c.t) + ", n=" + to_string(c.n) + ") unmatched");
    }
    r.agree = r.diagnostics.empty();
    return r;
}

}  // namespace quatroots
