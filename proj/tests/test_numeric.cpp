#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "quatroots/numeric.hpp"
#include "quatroots/parse.hpp"
#include "support.hpp"

using namespace quatroots;
using testing_support::Gen;

namespace {

const AlgebraQ& H() { return AlgebraQ::hamilton(); }
QPolyF PF(const char* s) { return to_double(parse_poly(s, H())); }

std::vector<std::complex<double>> sorted(std::vector<std::complex<double>> v) {
    std::sort(v.begin(), v.end(), [](auto l, auto r) {
        return std::make_pair(std::round(l.real() * 1e6), l.imag()) < std::make_pair(std::round(r.real() * 1e6), r.imag());
    });
    return v;
}

}  // namespace

TEST_CASE("settings must be positive") {
    NumericSettings s;
    s.eps_zero = 0;
    CHECK_THROWS_AS(s.validate(), UsageError);
    CHECK_THROWS_AS(QuatF(Algebra<double>::hamilton(), std::nan("")), UsageError);
}

TEST_CASE("companion roots") {
    auto r = sorted(companion_roots_f64(PF("x - i")));
    REQUIRE(r.size() == 2);
    CHECK(std::abs(r[0] - std::complex<double>(0, -1)) < 1e-12);
    CHECK(std::abs(r[1] - std::complex<double>(0, 1)) < 1e-12);

    r = sorted(companion_roots_f64(PF("x^2 + 1")));
    REQUIRE(r.size() == 4);
    CHECK(std::abs(r[0] - std::complex<double>(0, -1)) < 1e-7);
    CHECK(std::abs(r[3] - std::complex<double>(0, 1)) < 1e-7);

    r = companion_roots_f64(PF("x - 2"));
    REQUIRE(r.size() == 2);
    for (const auto& z : r) CHECK(std::abs(z - 2.0) < 1e-7);
}

TEST_CASE("floating-point classification") {
    RootReport<double> r = classify_f64(PF("x^3 - i x^2 + x - i"));
    REQUIRE(r.entries.size() == 1);
    CHECK(r.entries[0].is_spherical());
    CHECK(std::abs(r.entries[0].cls.t) < 1e-8);
    CHECK(std::abs(r.entries[0].cls.n - 1) < 1e-8);

    r = classify_f64(PF("x^2 + x + 1"));
    REQUIRE(r.entries.size() == 1);
    CHECK(r.entries[0].is_spherical());
    CHECK(std::abs(r.entries[0].cls.t + 1) < 1e-8);

    r = classify_f64(PF("x^5 + x"));
    REQUIRE(r.central_roots.size() == 1);
    CHECK(std::abs(r.central_roots[0]) < 1e-12);
    CHECK(r.spherical_count() == 2);
    std::vector<double> ts;
    for (const auto& e : r.entries) ts.push_back(e.cls.t);
    std::sort(ts.begin(), ts.end());
    REQUIRE(ts.size() == 2);
    CHECK(std::abs(ts[0] + std::sqrt(2.0)) < 1e-8);
    CHECK(std::abs(ts[1] - std::sqrt(2.0)) < 1e-8);
    for (const auto& e : r.entries) CHECK(std::abs(e.cls.n - 1) < 1e-8);

    CHECK_THROWS_AS(classify_f64(to_double(parse_poly("x^2 + 1", AlgebraQ(-1, -2)))), UsageError);
}

TEST_CASE("near-degenerate input is flagged") {
    const RootReport<double> r = classify_f64(to_double(parse_poly("x^2 + 1/1000000000000 x + 1", H())));
    REQUIRE(r.entries.size() == 1);
    CHECK(r.entries[0].is_spherical());
    CHECK(r.entries[0].uncertain);
    CHECK(r.uncertain_count() == 1);
}

TEST_CASE("subfield roots over the reals") {
    const QPolyF p = PF("(x - i)(x^2 + 1)");
    const QuatF s(p.algebra(), 0.5, 0.3, -1.0, 2.0);
    const auto rs = roots_in_subfield_f64(p, s);
    REQUIRE(rs.size() >= 2);
    for (const auto& r : rs) {
        CHECK(magnitude(eval_right(p, r)) < 1e-9);
        CHECK(magnitude(r * s - s * r) < 1e-9);
    }
}

TEST_CASE("agreement with the exact backend on the worked cubics") {
    for (const char* s : {"x(x^2 - 1)", "x(x^2 + 1)", "x^3 - i x^2 - x + i", "x^3 - i x^2 + x - i",
                          "x^3 + (2 - i)x^2 + (1 - 2i)x - i", "x^3 + (1 - i)x^2 + (1 - i)x - i"}) {
        const AgreementReport a = agree_with_exact(parse_poly(s, H()));
        CHECK_MESSAGE(a.agree, s);
        CHECK(a.uncertain == 0);
    }
}

TEST_CASE("root residuals and pairing") {
    Gen gen(3);
    for (int n = 0; n < 40; ++n) {
        const QPolyQ p = gen.poly(H(), gen.integer(1, 5));
        const QPolyF pf = to_double(p);
        const auto roots = companion_roots_f64(pf);
        CHECK(roots.size() == 2 * p.degree().value());
        std::size_t upper = 0, lower = 0;
        for (const auto& z : roots) {
            if (z.imag() > 1e-8) ++upper;
            if (z.imag() < -1e-8) ++lower;
        }
        CHECK(upper == lower);
    }
}
