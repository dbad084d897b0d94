#ifndef QUATROOTS_PARSE_HPP
#define QUATROOTS_PARSE_HPP

#include <string>
#include <string_view>
#include <vector>

#include "quatroots/decompose.hpp"

namespace quatroots {

/// Parse tree of a polynomial expression.
///
///   poly    := [sign] term (sign term)*
///   term    := factor (['*'] factor)*        ordered product
///   factor  := literal | 'x' ['^' nat] | '(' poly ')' ['^' nat]
///   literal := rational [unit] | unit        rational = n | n/d
///   unit    := 'i' | 'j' | 'k'
///
/// A '-' directly after '*' negates the following literal.
struct PolyExpr {
    enum class Kind { sum, difference, negate, product, power, variable, literal };
    Kind kind = Kind::literal;
    std::vector<PolyExpr> children;
    unsigned exponent = 0;
    Rational value = 1;
    char unit = '1';
};

/// Throws ParseError carrying line, column and the offending token.
PolyExpr parse(std::string_view input);

/// Evaluates the tree in the given algebra, keeping multiplication order.
QPolyQ lower(const PolyExpr& expr, const AlgebraQ& alg);

QPolyQ parse_poly(std::string_view input, const AlgebraQ& alg);

/// A constant expression such as "1 - 2i + 3/2k" or "(1 + i)(2 - j)".
/// Throws ParseError if the expression involves x.
QuatQ parse_quaternion(std::string_view input, const AlgebraQ& alg);

/// Text forms accepted back by parse_poly / parse_quaternion.
std::string to_text(const QuatQ& q);
std::string to_text(const QPolyQ& p);
std::string to_text(const CPolyQ& p);

}  // namespace quatroots

#endif  // QUATROOTS_PARSE_HPP
