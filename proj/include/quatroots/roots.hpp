#ifndef QUATROOTS_ROOTS_HPP
#define QUATROOTS_ROOTS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "quatroots/conjugacy.hpp"
#include "quatroots/decompose.hpp"
#include "quatroots/qpoly.hpp"

namespace quatroots {

/// Every element of the class is a root.
struct SphericalClass {
    friend bool operator==(const SphericalClass&, const SphericalClass&) = default;
};

/// Exactly one root in the class.
template <class T>
struct IsolatedRoot {
    Quaternion<T> representative;
};

/// No root in the class; P(q) = alpha q + beta on the class.
template <class T>
struct NoRoot {
    Quaternion<T> alpha;
    Quaternion<T> beta;
};

template <class T>
using ClassStatus = std::variant<SphericalClass, IsolatedRoot<T>, NoRoot<T>>;

template <class T>
struct ClassEntry {
    Sphere<T> cls;
    ClassStatus<T> status;
    /// Floating-point backend only: the decision was within a factor 10 of a
    /// tolerance, or an invariant is indistinguishable from a degenerate value.
    bool uncertain = false;
    std::string note;

    bool has_root() const { return !std::holds_alternative<NoRoot<T>>(status); }
    bool is_spherical() const { return std::holds_alternative<SphericalClass>(status); }
};

enum class Provenance { exact, numeric };

template <class T>
struct RootReport {
    Provenance provenance = Provenance::exact;
    std::vector<T> central_roots;
    std::vector<ClassEntry<T>> entries;
    /// Square-free factor of the companion polynomial not attributed to any
    /// rational class or rational central root (exact backend; 1 when
    /// everything is accounted for).
    CentralPoly<T> unresolved = CentralPoly<T>::constant(T(1));
    std::vector<std::string> diagnostics;

    std::size_t spherical_count() const {
        std::size_t n = 0;
        for (const auto& e : entries) n += e.is_spherical();
        return n;
    }
    /// Conjugacy classes (central singletons included) containing a root.
    std::size_t classes_with_roots() const {
        std::size_t n = central_roots.size();
        for (const auto& e : entries) n += e.has_root();
        return n;
    }
    std::size_t uncertain_count() const {
        std::size_t n = 0;
        for (const auto& e : entries) n += e.uncertain;
        return n;
    }
};

/// Remainder alpha x + beta of P modulo the class's minimal polynomial. For
/// every q in the class, P(q) = alpha q + beta.
template <class T>
std::pair<Quaternion<T>, Quaternion<T>> class_remainder(const QPoly<T>& p, const Sphere<T>& c) {
    const QPoly<T> lambda = QPoly<T>::from_central(p.algebra(), min_poly<T>(c));
    const QPoly<T> r = right_divrem(p, lambda).remainder;
    return {r.coeff(1), r.coeff(0)};
}

template <class T>
std::pair<Quaternion<T>, Quaternion<T>> class_remainder(const QPoly<T>& p, const ConjClass<T>& c) {
    const auto* s = std::get_if<Sphere<T>>(&c);
    if (!s) throw UsageError("class remainder needs a non-central class");
    return class_remainder(p, *s);
}

// ---------------------------------------------------------------------------
// Exact backend

struct ClassifySettings {
    /// Continued-fraction rationalization of numerically located invariants.
    unsigned long max_denominator = 1000000;
    double rational_tol = 1e-8;
    /// Seeds the random conjugators of the post-classification spot check.
    std::uint64_t seed = 0x5eed;
    std::size_t spot_checks = 3;
};

ClassStatus<Rational> class_status(const QPolyQ& p, const ConjClass<Rational>& c);

/// Some element of the class x^2 - t x + n, found by a small search over
/// pure directions; nullopt when none was found (not a proof of emptiness).
std::optional<QuatQ> find_class_witness(const AlgebraQ& alg, const Rational& t, const Rational& n);

/// Elements g q g^-1 for random small-integer conjugators g drawn from seed.
std::vector<QuatQ> sample_conjugates(const QuatQ& q, std::size_t count, std::uint64_t seed);

struct CandidateSet {
    std::vector<Sphere<Rational>> spheres;
    CPolyQ unresolved;
};

/// Non-central classes that may contain roots of P: located numerically from
/// the companion polynomial, rationalized, and kept only if the minimal
/// polynomial divides the companion exactly.
CandidateSet find_candidates(const QPolyQ& p, const ClassifySettings& settings = {});
std::vector<ConjClass<Rational>> candidate_classes(const QPolyQ& p, const ClassifySettings& settings = {});

/// Complete root classification with every bound re-checked on the result.
RootReport<Rational> classify(const QPolyQ& p, const ClassifySettings& settings = {});

std::vector<ConjClass<Rational>> spherical_classes(const QPolyQ& p, const ClassifySettings& settings = {});

/// Bound on spherical classes of a monic polynomial and its equality cases.
struct SphericalBoundReport {
    std::size_t degree = 0;
    std::size_t spherical = 0;
    std::size_t bound = 0;
    enum class Equality { none, even, odd } equality = Equality::none;
    bool coefficients_central = false;
    bool coefficients_commute = false;
    /// Bound respected and the equality case's coefficient condition holds.
    bool holds = false;
};

/// Non-monic input is normalized by the inverse leading coefficient first.
SphericalBoundReport thm33_report(const QPolyQ& p, const ClassifySettings& settings = {});

struct CommonSubfield {
    enum class Kind { central, generator, none } kind = Kind::none;
    std::optional<QuatQ> generator;
};

/// Whether all coefficients lie in one maximal subfield.
CommonSubfield common_subfield(const QPolyQ& p);

/// Coefficient pattern of a monic cubic x^3 + a x^2 + b x + c.
struct CubicCase {
    enum class Kind { c1a, c1b, c1c, c2a, c2b, c2c, c2d } kind = Kind::c1a;
    std::size_t spherical_bound = 0;
    std::size_t observed_spherical = 0;
    bool consistent = false;
};

std::string to_string(CubicCase::Kind k);

/// Requires a monic cubic over a definite algebra.
CubicCase classify_cubic(const QPolyQ& p, const ClassifySettings& settings = {});

/// Monic polynomials whose coefficients are central except at most two,
/// a_k and a_m with k > m.
struct SparseReport {
    enum class Kind { all_central, one_noncentral, same_subfield, different_subfields, not_applicable } kind =
        Kind::not_applicable;
    std::optional<std::size_t> k;
    std::optional<std::size_t> m;
    std::size_t bound = 0;
    /// same_subfield: a_k = u + v a_m and the spherical classes are among the
    /// classes of x^{k-m} + 1/v.
    std::optional<CPolyQ> candidate_factor;
    std::size_t observed_spherical = 0;
    bool consistent = false;
};

std::string to_string(SparseReport::Kind k);

/// Requires monic P over a definite algebra.
SparseReport analyze_sparse(const QPolyQ& p, const ClassifySettings& settings = {});

/// Roots of P lying in the maximal subfield F(s).
std::vector<QuatQ> roots_in_subfield(const QPolyQ& p, const QuatQ& s, const ClassifySettings& settings = {});

/// F-basis of {y : sum a_n y c^n = 0} together with 0; y c y^-1 is a root of P
/// exactly when y is a nonzero element of this space.
std::vector<QuatQ> conjugator_kernel(const QPolyQ& p, const QuatQ& c);

/// k distinct elements of the class of c that are not roots of P.
std::vector<QuatQ> nonroot_conjugates(const QPolyQ& p, const QuatQ& c, std::size_t k);

}  // namespace quatroots

#endif  // QUATROOTS_ROOTS_HPP
