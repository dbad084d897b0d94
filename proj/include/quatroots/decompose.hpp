#ifndef QUATROOTS_DECOMPOSE_HPP
#define QUATROOTS_DECOMPOSE_HPP

#include <vector>

#include "quatroots/central_poly.hpp"
#include "quatroots/qpoly.hpp"
#include "quatroots/rational.hpp"

namespace quatroots {

using QuatQ = Quaternion<Rational>;
using QPolyQ = QPoly<Rational>;
using CPolyQ = CentralPoly<Rational>;
using AlgebraQ = Algebra<Rational>;

/// P = b1 + i bi + j bj + k bk with central coordinate polynomials.
struct CenterCoords {
    CPolyQ b1, bi, bj, bk;
};

CenterCoords coords_center(const QPolyQ& p);
QPolyQ recombine(const AlgebraQ& alg, const CenterCoords& c);

/// Monic gcd in F[x] of the four center coordinates of P (P nonzero).
CPolyQ coordinate_gcd(const QPolyQ& p);

/// P = c G H: c the leading coefficient, H monic central, G monic with no
/// non-constant right divisor in F[x].
struct BeckFactorization {
    QuatQ c;
    QPolyQ g;
    CPolyQ h;
};

BeckFactorization beck_decompose(const QPolyQ& p);

/// H of beck_decompose: the right divisor of greatest degree lying in F[x].
CPolyQ max_central_right_divisor(const QPolyQ& p);

/// Distinct rational roots of a nonzero polynomial, ascending, by the
/// rational-root theorem on its primitive integer form.
std::vector<Rational> rational_roots(const CPolyQ& p);

/// Roots of P in the center, each verified by evaluation.
std::vector<Rational> roots_in_center(const QPolyQ& p);

/// P = b1 + u b2 with b1, b2 having coefficients in the maximal subfield F(s),
/// for an F(s)-basis {1, u} of the algebra.
struct SubfieldCoords {
    QuatQ s;
    QuatQ u;
    QPolyQ b1;
    QPolyQ b2;
};

/// Throws UsageError unless s is non-central and {1, s, u, u s} is an F-basis.
SubfieldCoords coords_subfield(const QPolyQ& p, const QuatQ& s, const QuatQ& u);
QPolyQ recombine(const SubfieldCoords& c);

/// First of i, j, k completing {1, s} to an F(s)-basis {1, u}.
QuatQ default_subfield_complement(const QuatQ& s);

/// Monic gcd of b1 and b2 over the field F(s).
QPolyQ subfield_gcd(const SubfieldCoords& c);

}  // namespace quatroots

#endif  // QUATROOTS_DECOMPOSE_HPP
