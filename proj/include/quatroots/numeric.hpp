#ifndef QUATROOTS_NUMERIC_HPP
#define QUATROOTS_NUMERIC_HPP

#include <complex>
#include <string>
#include <vector>

#include "quatroots/polyroots.hpp"
#include "quatroots/qpoly.hpp"
#include "quatroots/roots.hpp"

namespace quatroots {

/// The 2 deg P roots, with multiplicity, of the companion polynomial
/// P conj(P). Throws NumericFailure (with the roots found so far) if a root
/// fails the relative residual test.
std::vector<std::complex<double>> companion_roots_f64(const QPolyF& p, const NumericSettings& settings = {});

/// Floating-point counterpart of classify over Hamilton's quaternions.
/// Decisions that land within a factor 10 of a tolerance are marked
/// uncertain instead of being settled silently.
RootReport<double> classify_f64(const QPolyF& p, const NumericSettings& settings = {});

/// Roots in the maximal subfield R(s); every spherical class meets it.
std::vector<QuatF> roots_in_subfield_f64(const QPolyF& p, const QuatF& s, const NumericSettings& settings = {});

struct AgreementReport {
    bool agree = false;
    std::size_t matched_classes = 0;
    /// Numeric classes whose invariants are irrational, accounted for by the
    /// exact backend's unresolved companion factor.
    std::size_t irrational_classes = 0;
    std::size_t uncertain = 0;
    std::vector<std::string> diagnostics;
};

/// Runs both backends on a rational polynomial over (-1, -1) and compares
/// them class by class.
AgreementReport agree_with_exact(const QPolyQ& p, const NumericSettings& settings = {},
                                 const ClassifySettings& exact_settings = {});

}  // namespace quatroots

#endif  // QUATROOTS_NUMERIC_HPP
