#include "quatroots/decompose.hpp"

#include <algorithm>
#include <map>

#include "quatroots/linalg.hpp"

namespace quatroots {

CenterCoords coords_center(const QPolyQ& p) {
    std::array<std::vector<Rational>, 4> parts;
    for (const QuatQ& q : p.coeffs())
        for (std::size_t n = 0; n < 4; ++n) parts[n].push_back(q[n]);
    return {CPolyQ(parts[0]), CPolyQ(parts[1]), CPolyQ(parts[2]), CPolyQ(parts[3])};
}

QPolyQ recombine(const AlgebraQ& alg, const CenterCoords& c) {
    return QPolyQ::from_central(alg, c.b1) + QuatQ::unit_i(alg) * QPolyQ::from_central(alg, c.bi) +
           QuatQ::unit_j(alg) * QPolyQ::from_central(alg, c.bj) +
           QuatQ::unit_k(alg) * QPolyQ::from_central(alg, c.bk);
}

CPolyQ coordinate_gcd(const QPolyQ& p) {
    if (p.is_zero()) throw UsageError("coordinate gcd of the zero polynomial");
    const CenterCoords c = coords_center(p);
    CPolyQ g;
    for (const CPolyQ* part : {&c.b1, &c.bi, &c.bj, &c.bk}) {
        if (part->is_zero()) continue;
        g = g.is_zero() ? monic(*part) : central_gcd(g, *part);
    }
    return g;
}

BeckFactorization beck_decompose(const QPolyQ& p) {
    if (p.is_zero()) throw UsageError("cannot decompose the zero polynomial");
    const QuatQ c = p.lead();
    const CPolyQ h = coordinate_gcd(p);
    auto [g, rem] = right_divrem(inverse(c) * p, QPolyQ::from_central(p.algebra(), h));
    if (!rem.is_zero()) throw InvariantViolation("coordinate gcd does not right-divide the polynomial");
    if (coordinate_gcd(g) != CPolyQ::constant(1))
        throw InvariantViolation("G retains a central right divisor");
    return {c, std::move(g), h};
}

CPolyQ max_central_right_divisor(const QPolyQ& p) { return beck_decompose(p).h; }

namespace {

// Positive divisors of |n| (n != 0) by trial division.
std::vector<Integer> divisors(Integer n) {
    n = abs(n);
    std::map<Integer, unsigned> factors;
    for (Integer d = 2; d * d <= n; ++d) {
        if (d > 1000000) {
            if (mpz_probab_prime_p(n.get_mpz_t(), 30) == 0)
                throw UsageError("coefficients too large for the rational-root search");
            break;
        }
        while (n % d == 0) {
            ++factors[d];
            n /= d;
        }
    }
    if (n > 1) ++factors[n];
    std::vector<Integer> out{1};
    for (const auto& [prime, mult] : factors) {
        const std::size_t base = out.size();
        Integer pw = 1;
        for (unsigned e = 0; e < mult; ++e) {
            pw *= prime;
            for (std::size_t m = 0; m < base; ++m) out.push_back(out[m] * pw);
        }
    }
    return out;
}

}  // namespace

std::vector<Rational> rational_roots(const CPolyQ& p) {
    if (p.is_zero()) throw UsageError("roots of the zero polynomial");
    std::vector<Rational> roots;
    CPolyQ f = p.degree() > Degree(0) ? squarefree_part(p) : p;
    if (f.degree() < Degree(1)) return roots;
    if (is_zero(f.coeff(0))) {
        roots.push_back(0);
        f = divrem(f, CPolyQ::x()).first;
    }
    if (f.degree() < Degree(1)) return roots;

    Integer lcm_den = 1;
    for (const Rational& v : f.coeffs()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), v.get_den_mpz_t());
    std::vector<Integer> ints;
    for (const Rational& v : f.coeffs()) {
        Rational s = v * Rational(lcm_den);
        ints.push_back(s.get_num());
    }
    // Cauchy bound on root magnitude.
    Rational bound = 0;
    for (std::size_t n = 0; n + 1 < ints.size(); ++n) {
        Rational r(abs(ints[n]), abs(ints.back()));
        r.canonicalize();
        if (r > bound) bound = r;
    }
    bound += 1;

    const auto num_divs = divisors(ints.front());
    const auto den_divs = divisors(ints.back());
    for (const Integer& q : den_divs) {
        for (const Integer& pn : num_divs) {
            Rational cand(pn, q);
            cand.canonicalize();
            if (cand > bound) continue;
            for (const Rational& r : {cand, Rational(-cand)}) {
                if (std::find(roots.begin(), roots.end(), r) != roots.end()) continue;
                if (is_zero(f(r))) roots.push_back(r);
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::vector<Rational> roots_in_center(const QPolyQ& p) {
    std::vector<Rational> out;
    for (const Rational& r : rational_roots(max_central_right_divisor(p))) {
        if (!eval_right(p, QuatQ(p.algebra(), r)).is_zero())
            throw InvariantViolation("rational root of H is not a root of P");
        out.push_back(r);
    }
    return out;
}

namespace {

Mat4<Rational> basis_matrix(const QuatQ& s, const QuatQ& u) {
    const QuatQ one(s.algebra(), 1);
    const std::array<QuatQ, 4> cols{one, s, u, u * s};
    Mat4<Rational> m;
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) m[r][c] = cols[c][r];
    return m;
}

}  // namespace

SubfieldCoords coords_subfield(const QPolyQ& p, const QuatQ& s, const QuatQ& u) {
    if (s.is_central()) throw UsageError("subfield generator must be non-central");
    if (!(s.algebra() == p.algebra()) || !(u.algebra() == p.algebra()))
        throw UsageError("subfield basis from a different algebra");
    const Mat4<Rational> m = basis_matrix(s, u);
    if (rank(m) != 4) throw UsageError("{1, s, u, u s} is not a basis of the algebra");
    const AlgebraQ& alg = p.algebra();
    std::vector<QuatQ> alpha, beta;
    for (const QuatQ& a : p.coeffs()) {
        const auto sol = solve(m, a.coords());
        // a = x0 + x1 s + u (x2 + x3 s)
        alpha.push_back(QuatQ(alg, (*sol)[0]) + s * (*sol)[1]);
        beta.push_back(QuatQ(alg, (*sol)[2]) + s * (*sol)[3]);
    }
    return {s, u, QPolyQ(alg, std::move(alpha)), QPolyQ(alg, std::move(beta))};
}

QPolyQ recombine(const SubfieldCoords& c) { return c.b1 + c.u * c.b2; }

QuatQ default_subfield_complement(const QuatQ& s) {
    if (s.is_central()) throw UsageError("subfield generator must be non-central");
    const AlgebraQ& alg = s.algebra();
    for (const QuatQ& u : {QuatQ::unit_i(alg), QuatQ::unit_j(alg), QuatQ::unit_k(alg)})
        if (rank(basis_matrix(s, u)) == 4) return u;
    throw InvariantViolation("no unit completes the subfield basis");
}

QPolyQ subfield_gcd(const SubfieldCoords& c) {
    if (c.b1.is_zero() && c.b2.is_zero()) throw UsageError("gcd of two zero polynomials");
    return gcrd(c.b1, c.b2);
}

}  // namespace quatroots
