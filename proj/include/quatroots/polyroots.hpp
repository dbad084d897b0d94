#ifndef QUATROOTS_POLYROOTS_HPP
#define QUATROOTS_POLYROOTS_HPP

#include <complex>
#include <vector>

#include "quatroots/central_poly.hpp"

namespace quatroots {

/// Tolerances of the floating-point backend. Zero tests are relative to a
/// coefficient scale, never absolute.
struct NumericSettings {
    double eps_zero = 1e-9;
    double eps_class = 1e-8;
    /// Largest accepted ratio between the coefficient scale and the leading
    /// coefficient.
    double max_condition = 1e14;

    void validate() const;
};

/// A distinct complex root with its multiplicity.
struct RootCluster {
    std::complex<double> z;
    std::size_t multiplicity = 1;
};

/// Roots of a real polynomial from the eigenvalues of its companion matrix.
/// Eigenvalues that scatter around a multiple root are merged and the merged
/// root is polished by Newton's method on the matching derivative; merges
/// that do not survive the residual test are split again.
std::vector<RootCluster> root_clusters(const CentralPoly<double>& c, const NumericSettings& settings = {});

/// sum |c_n| |z|^n: the scale for relative residuals of c at z.
double residual_scale(const CentralPoly<double>& c, std::complex<double> z);

std::complex<double> eval(const CentralPoly<double>& c, std::complex<double> z);

}  // namespace quatroots

#endif  // QUATROOTS_POLYROOTS_HPP
