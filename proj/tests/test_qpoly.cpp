#include <doctest.h>

#include "quatroots/parse.hpp"
#include "support.hpp"

using namespace quatroots;
using testing_support::Gen;

namespace {

const AlgebraQ& H() { return AlgebraQ::hamilton(); }
QPolyQ P(const char* s) { return parse_poly(s, H()); }
QuatQ q(const char* s) { return parse_quaternion(s, H()); }
CPolyQ C(std::initializer_list<Rational> c) { return CPolyQ(c); }

}  // namespace

TEST_CASE("degree of the zero polynomial") {
    CHECK(QPolyQ(H()).degree() == Degree::minus_infinity());
    CHECK(QPolyQ(H()).degree() < Degree(0));
    CHECK((QPolyQ(H()).degree() + Degree(3)) == Degree::minus_infinity());
    CHECK_THROWS(QPolyQ(H()).degree().value());
}

TEST_CASE("products respect the order of factors") {
    CHECK(P("(x - i)(x - j)") == P("x^2 - (i + j) x + k"));
    CHECK(P("(x - j)(x - i)") == P("x^2 - (i + j) x - k"));
    const QPolyQ p = P("x^3 - i x^2 + x - i");
    CHECK(p * QPolyQ::constant(QuatQ(H(), 1)) == p);
}

TEST_CASE("right division") {
    auto qr = right_divrem(P("x^2"), P("x - j"));
    CHECK(qr.quotient == P("x + j"));
    CHECK(qr.remainder == P("-1"));
    qr = right_divrem(P("x^2 + 1"), P("x - i"));
    CHECK(qr.quotient == P("x + i"));
    CHECK(qr.remainder.is_zero());
    qr = right_divrem(P("2 - k"), P("x^2 + i"));
    CHECK(qr.quotient.is_zero());
    CHECK(qr.remainder == P("2 - k"));
    CHECK_THROWS_AS(right_divrem(P("x"), QPolyQ(H())), UsageError);
}

TEST_CASE("gcrd") {
    CHECK(gcrd(P("x^2 + 1"), P("x - i")) == P("x - i"));
    CHECK(gcrd(P("2j x^2 + x"), QPolyQ(H())) == monic(P("2j x^2 + x")));
    CHECK(gcrd(P("(x - i)(x - j)"), P("(x + k)(x - j)")) == P("x - j"));
    CHECK_THROWS_AS(gcrd(QPolyQ(H()), QPolyQ(H())), UsageError);
}

TEST_CASE("right evaluation") {
    CHECK(eval_right(P("(x - i)(x - j)"), q("j")).is_zero());
    CHECK(eval_right(P("(x - i)(x - j)"), q("i")) == q("2k"));
    CHECK(eval_right(P("3 - 2j"), q("1 + i")) == q("3 - 2j"));
}

TEST_CASE("product evaluation") {
    const QPolyQ g = P("x - i"), h = P("x - j");
    CHECK(eval_product(g, h, q("j")).is_zero());
    CHECK(eval_product(g, h, q("i")) == q("2k"));
    CHECK((eval_right(g, q("i")) * eval_right(h, q("i"))).is_zero());
    const QPolyQ central = P("x^2 + 1");
    const QuatQ at = q("1 + 2j - k");
    CHECK(eval_product(g, central, at) == eval_right(g, at) * eval_right(central, at));
}

TEST_CASE("companion polynomial") {
    CHECK(companion(P("x - i")) == C({1, 0, 1}));
    const CPolyQ c = C({2, -3, 1});
    CHECK(companion(QPolyQ::from_central(H(), c)) == c * c);
    const CPolyQ l = C({1, 0, 1});
    CHECK(companion(P("(x - i)(x^2 + 1)")) == l * l * l);
}

TEST_CASE("central gcd") {
    CHECK(central_gcd(C({0, 1, 0, 1}), C({0, 0, 1})) == C({0, 1}));
    CHECK(central_gcd(C({4, 2}), CPolyQ()) == C({2, 1}));
    CHECK(central_gcd(C({1, 0, 1}), C({1, 0, 1})) == C({1, 0, 1}));
    CHECK_THROWS_AS(central_gcd(CPolyQ(), CPolyQ()), UsageError);
}

TEST_CASE("products agree with convolution over the unit table") {
    Gen gen(5);
    for (int n = 0; n < 150; ++n) {
        const Rational a = gen.integer(-3, -1), b = gen.integer(-3, -1);
        const AlgebraQ alg(a, b);
        const QPolyQ f = gen.poly(alg, gen.integer(0, 4), 5), g = gen.poly(alg, gen.integer(0, 4), 5);
        CHECK(f * g == testing_support::oracle_poly_mul(f, g));
        CHECK((f * g).degree() == f.degree() + g.degree());
        const QuatQ at = gen.quaternion(alg, 4);
        CHECK(eval_right(f, at) == testing_support::oracle_eval(f, at));
    }
}

TEST_CASE("division and gcrd properties") {
    Gen gen(99);
    for (int n = 0; n < 200; ++n) {
        const QPolyQ p = gen.poly(H(), gen.integer(0, 6));
        const QPolyQ d = gen.monic_poly(H(), gen.integer(1, 4));
        const auto qr = right_divrem(p, d);
        CHECK(qr.quotient * d + qr.remainder == p);
        CHECK(qr.remainder.degree() < d.degree());

        const QuatQ at = gen.quaternion(H());
        const auto lin = right_divrem(p, QPolyQ::linear(at));
        CHECK(lin.remainder.degree() <= Degree(0));
        CHECK((lin.remainder.is_zero() ? QuatQ(H()) : lin.remainder.coeff(0)) == eval_right(p, at));

        CHECK(companion(p).degree() == Degree(2 * p.degree().value()));
        const QPolyQ prod = p * conj_poly(p);
        for (const auto& c : prod.coeffs()) CHECK(c.is_central());
    }
    for (int n = 0; n < 60; ++n) {
        const QPolyQ a = gen.poly(H(), gen.integer(0, 3), 5), b = gen.poly(H(), gen.integer(0, 3), 5);
        const QPolyQ w = gen.monic_poly(H(), gen.integer(1, 3), 5);
        const QPolyQ g = gcrd(a * w, b * w);
        CHECK(g.is_monic());
        CHECK(right_divides(w, g));
        CHECK(right_divides(g, a * w));
        CHECK(right_divides(g, b * w));
    }
}

TEST_CASE("product evaluation over random triples") {
    Gen gen(31);
    for (int n = 0; n < 150; ++n) {
        const QPolyQ g = gen.poly(H(), gen.integer(0, 3), 5), h = gen.poly(H(), gen.integer(0, 3), 5);
        QuatQ at = gen.quaternion(H(), 5);
        if (gen.coin(0.2) && h.degree() >= Degree(1)) {
            // force the H(q) = 0 branch
            at = gen.quaternion(H(), 5);
            const QPolyQ h0 = h * QPolyQ::linear(at);
            CHECK(eval_product(g, h0, at) == eval_right(g * h0, at));
            continue;
        }
        CHECK(eval_product(g, h, at) == eval_right(g * h, at));
    }
}
