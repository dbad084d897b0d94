#ifndef QUATROOTS_RATIONAL_HPP
#define QUATROOTS_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace quatroots {

/// Exact rational backed by GMP. mpq_class keeps results of arithmetic in
/// lowest terms with a positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "n" or "n/d" (optional leading sign). Throws UsageError on junk or
/// a zero denominator.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& r);

/// True iff r = s^2 for some rational s.
bool is_square(const Rational& r);

/// Exact square root of a rational square, nullopt otherwise.
std::optional<Rational> exact_sqrt(const Rational& r);

/// Best rational approximation with denominator <= max_den (continued
/// fractions on the exact binary value of v). Returns nullopt when the best
/// candidate misses v by more than tol * max(1, |v|).
std::optional<Rational> rationalize(double v, unsigned long max_den, double tol);

/// Scalar hooks shared by the exact and floating-point instantiations.
inline bool is_zero(const Rational& r) { return sgn(r) == 0; }
inline bool is_zero(double v) { return v == 0.0; }
inline double to_double(const Rational& r) { return r.get_d(); }
inline double to_double(double v) { return v; }
std::string to_string(double v);

}  // namespace quatroots

#endif  // QUATROOTS_RATIONAL_HPP
