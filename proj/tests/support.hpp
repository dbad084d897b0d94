// Shared helpers for the test suites: seeded generators and reference
// implementations that do not go through the library's arithmetic.
#ifndef QUATROOTS_TESTS_SUPPORT_HPP
#define QUATROOTS_TESTS_SUPPORT_HPP

#include <array>
#include <random>
#include <vector>

#include "quatroots/decompose.hpp"

namespace testing_support {

using namespace quatroots;

// Products of basis units e_m e_n = coef * e_{m xor n}, written out from
// i^2 = a, j^2 = b, ij = -ji = k.
inline Rational unit_coef(const AlgebraQ& alg, int m, int n) {
    const Rational a = alg.a(), b = alg.b();
    static const int sign[4][4] = {{1, 1, 1, 1}, {1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, 1, -1}};
    // magnitudes: row i: 1, a, 1, a; row j: 1, 1, b, b; row k: 1, a, b, ab
    Rational mag = 1;
    if (m == 1 && (n == 1 || n == 3)) mag = a;
    if (m == 2 && (n == 2 || n == 3)) mag = b;
    if (m == 3 && n == 1) mag = a;
    if (m == 3 && n == 2) mag = b;
    if (m == 3 && n == 3) mag = a * b;
    return sign[m][n] * mag;
}

inline QuatQ oracle_mul(const QuatQ& p, const QuatQ& q) {
    std::array<Rational, 4> out{0, 0, 0, 0};
    for (int m = 0; m < 4; ++m)
        for (int n = 0; n < 4; ++n) out[m ^ n] += p[m] * q[n] * unit_coef(p.algebra(), m, n);
    return QuatQ::from_coords(p.algebra(), out);
}

inline Rational oracle_norm(const QuatQ& q) {
    const Rational a = q.algebra().a(), b = q.algebra().b();
    return q.w() * q.w() - a * q.x() * q.x() - b * q.y() * q.y() + a * b * q.z() * q.z();
}

// Sum a_n q^n with explicit powers, no Horner scheme.
inline QuatQ oracle_eval(const QPolyQ& p, const QuatQ& q) {
    QuatQ acc(p.algebra());
    QuatQ pw(p.algebra(), 1);
    for (const QuatQ& c : p.coeffs()) {
        acc = acc + oracle_mul(c, pw);
        pw = oracle_mul(pw, q);
    }
    return acc;
}

inline QPolyQ oracle_poly_mul(const QPolyQ& f, const QPolyQ& g) {
    if (f.is_zero() || g.is_zero()) return QPolyQ(f.algebra(), {});
    std::vector<QuatQ> c(f.coeffs().size() + g.coeffs().size() - 1, QuatQ(f.algebra()));
    for (std::size_t m = 0; m < f.coeffs().size(); ++m)
        for (std::size_t n = 0; n < g.coeffs().size(); ++n)
            c[m + n] = c[m + n] + oracle_mul(f.coeffs()[m], g.coeffs()[n]);
    return QPolyQ(f.algebra(), std::move(c));
}

class Gen {
  public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
    bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }
    std::mt19937_64& engine() { return rng_; }

    /// Numerator and denominator bounded by height; integers two times out of three.
    Rational rational(long height = 10) {
        Rational r(integer(-height, height), coin(1.0 / 3) ? integer(1, height) : 1);
        r.canonicalize();
        return r;
    }

    QuatQ quaternion(const AlgebraQ& alg, long height = 10) {
        return QuatQ(alg, rational(height), rational(height), rational(height), rational(height));
    }

    QuatQ nonzero_quaternion(const AlgebraQ& alg, long height = 10) {
        QuatQ q = quaternion(alg, height);
        while (q.is_zero()) q = quaternion(alg, height);
        return q;
    }

    QuatQ noncentral(const AlgebraQ& alg, long height = 10) {
        QuatQ q = quaternion(alg, height);
        while (q.is_central()) q = quaternion(alg, height);
        return q;
    }

    /// Exact degree deg, nonzero leading coefficient.
    QPolyQ poly(const AlgebraQ& alg, std::size_t deg, long height = 10) {
        std::vector<QuatQ> c;
        for (std::size_t n = 0; n < deg; ++n) c.push_back(coin(0.2) ? QuatQ(alg) : quaternion(alg, height));
        c.push_back(nonzero_quaternion(alg, height));
        return QPolyQ(alg, std::move(c));
    }

    QPolyQ monic_poly(const AlgebraQ& alg, std::size_t deg, long height = 10) {
        QPolyQ p = poly(alg, deg, height);
        std::vector<QuatQ> c = p.coeffs();
        c.back() = QuatQ(alg, 1);
        return QPolyQ(alg, std::move(c));
    }

    CPolyQ central_poly(std::size_t deg, long height = 10) {
        std::vector<Rational> c;
        for (std::size_t n = 0; n < deg; ++n) c.push_back(rational(height));
        c.push_back(1);
        return CPolyQ(std::move(c));
    }

    /// Product of small linear and central quadratic factors, so that the
    /// result has rational root classes of every kind.
    QPolyQ structured_poly(const AlgebraQ& alg, std::size_t deg) {
        QPolyQ p = QPolyQ::constant(QuatQ(alg, 1));
        std::size_t d = 0;
        while (d < deg) {
            const long pick = integer(0, 3);
            if (pick == 0 || d + 1 == deg) {
                const QuatQ q = coin(0.25) ? QuatQ(alg, integer(-3, 3)) : quaternion(alg, 2);
                p = p * QPolyQ::linear(q);
                d += 1;
            } else if (pick == 1) {
                // central x^2 - t x + n with negative discriminant
                const Rational t = integer(-2, 2);
                const Rational n = t * t / 4 + integer(1, 4);
                p = p * QPolyQ::from_central(alg, CPolyQ({n, -t, 1}));
                d += 2;
            } else {
                p = p * QPolyQ::linear(quaternion(alg, 3));
                d += 1;
            }
        }
        if (coin(0.3)) p = QPolyQ::constant(nonzero_quaternion(alg, 3)) * p;
        return p;
    }

  private:
    std::mt19937_64 rng_;
};

}  // namespace testing_support

#endif  // QUATROOTS_TESTS_SUPPORT_HPP
