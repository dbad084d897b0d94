#ifndef QUATROOTS_FORMAT_HPP
#define QUATROOTS_FORMAT_HPP

#include <json.hpp>

#include "quatroots/decompose.hpp"
#include "quatroots/roots.hpp"

namespace quatroots {

using Json = nlohmann::ordered_json;

// Structured forms. Rationals are strings ("-3/2"), quaternions are
// [w, x, y, z] arrays of rationals, polynomials are coefficient arrays,
// constant term first.
Json to_json(const Rational& r);
Json to_json(const QuatQ& q);
Json to_json(const QuatF& q);
Json to_json(const QPolyQ& p);
Json to_json(const CPolyQ& p);
Json to_json(const RootReport<Rational>& r);
Json to_json(const RootReport<double>& r);

QuatQ quaternion_from_json(const Json& j, const AlgebraQ& alg);
/// Inverse of to_json(QPolyQ); throws UsageError on malformed input.
QPolyQ poly_from_json(const Json& j, const AlgebraQ& alg);

std::string to_text(const QuatF& q);
std::string to_text(const RootReport<Rational>& r);
std::string to_text(const RootReport<double>& r);

}  // namespace quatroots

#endif  // QUATROOTS_FORMAT_HPP
