#include "quatroots/rational.hpp"

#include <cmath>
#include <cstdio>

#include "quatroots/errors.hpp"

namespace quatroots {

namespace {

bool valid_integer(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

Integer to_integer(std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    const std::string_view den =
        slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!valid_integer(num) || !valid_integer(den) || den.front() == '-' || den.front() == '+')
        throw UsageError("malformed rational '" + std::string(text) + "'");
    Integer d = to_integer(den);
    if (d == 0) throw UsageError("zero denominator in '" + std::string(text) + "'");
    Rational r(to_integer(num), d);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) { return r.get_str(10); }

std::string to_string(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

bool is_square(const Rational& r) { return exact_sqrt(r).has_value(); }

std::optional<Rational> exact_sqrt(const Rational& r) {
    if (sgn(r) < 0) return std::nullopt;
    const Integer& n = r.get_num();
    const Integer& d = r.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
        return std::nullopt;
    Integer sn = sqrt(n);
    Integer sd = sqrt(d);
    Rational s(sn, sd);
    s.canonicalize();
    return s;
}

std::optional<Rational> rationalize(double v, unsigned long max_den, double tol) {
    if (!std::isfinite(v)) return std::nullopt;
    const Rational exact(v);

    // Convergents p/q of the continued fraction of v; stop before q exceeds
    // max_den, then compare against the best semiconvergent.
    Integer p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    Integer n = exact.get_num(), d = exact.get_den();
    const Integer bound(max_den);
    while (true) {
        Integer a;
        mpz_fdiv_q(a.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
        Integer q2 = q0 + a * q1;
        if (q2 > bound) break;
        Integer p2 = p0 + a * p1;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        Integer rem = n - a * d;
        n = d;
        d = rem;
        if (d == 0) break;
    }
    Rational best(p1, q1);
    best.canonicalize();
    if (d != 0) {
        Integer k = (bound - q0) / q1;
        Rational semi(p0 + k * p1, q0 + k * q1);
        semi.canonicalize();
        if (abs(semi - exact) < abs(best - exact)) best = semi;
    }
    const double err = std::fabs(Rational(best - exact).get_d());
    if (err > tol * std::max(1.0, std::fabs(v))) return std::nullopt;
    return best;
}

}  // namespace quatroots
