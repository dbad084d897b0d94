#ifndef QUATROOTS_CONJUGACY_HPP
#define QUATROOTS_CONJUGACY_HPP

#include <optional>
#include <variant>
#include <vector>

#include "quatroots/central_poly.hpp"
#include "quatroots/quaternion.hpp"

namespace quatroots {

/// Class of a central element: the singleton {value}.
template <class T>
struct Central {
    T value;
    friend bool operator==(const Central&, const Central&) = default;
};

/// Class of non-central elements with trace t and norm n, i.e. the roots of
/// x^2 - t x + n. `validated` records that some element of the algebra is
/// known to lie in it; it does not take part in comparisons.
template <class T>
struct Sphere {
    T t;
    T n;
    bool validated = false;
    friend bool operator==(const Sphere& l, const Sphere& r) { return l.t == r.t && l.n == r.n; }
};

template <class T>
using ConjClass = std::variant<Central<T>, Sphere<T>>;

template <class T>
bool is_sphere(const ConjClass<T>& c) {
    return std::holds_alternative<Sphere<T>>(c);
}

template <class T>
ConjClass<T> class_of(const Quaternion<T>& q) {
    if (q.is_central()) return Central<T>{q.w()};
    return Sphere<T>{trace(q), norm(q), true};
}

/// Conjugacy is decided by (trace, norm) for non-central elements.
template <class T>
bool same_class(const Quaternion<T>& p, const Quaternion<T>& q) {
    return class_of(p) == class_of(q);
}

/// x - v, or x^2 - t x + n.
template <class T>
CentralPoly<T> min_poly(const ConjClass<T>& c) {
    if (const auto* ctr = std::get_if<Central<T>>(&c)) return CentralPoly<T>({-ctr->value, T(1)});
    const auto& s = std::get<Sphere<T>>(c);
    return CentralPoly<T>({s.n, -s.t, T(1)});
}

/// q lies in the maximal subfield F(s) iff it commutes with s.
template <class T>
bool in_subfield(const Quaternion<T>& q, const Quaternion<T>& s) {
    if (s.is_central()) throw UsageError("subfield generator must be non-central");
    return commutes(q, s);
}

/// k pairwise distinct conjugates g c g^-1 with g = 1 + m u, m = 1, 2, ...,
/// where u is the first of i, j, k that does not commute with c.
template <class T>
std::vector<Quaternion<T>> distinct_conjugates(const Quaternion<T>& c, std::size_t k) {
    using Quat = Quaternion<T>;
    if (c.is_central()) throw UsageError("the class of a central element is a singleton");
    if (k == 0) throw UsageError("requested zero conjugates");
    const Algebra<T>& alg = c.algebra();
    std::optional<Quat> u;
    for (const Quat& cand : {Quat::unit_i(alg), Quat::unit_j(alg), Quat::unit_k(alg)}) {
        if (!commutes(cand, c)) {
            u = cand;
            break;
        }
    }
    std::vector<Quat> out;
    const Quat one(alg, T(1));
    const long budget = 64 * static_cast<long>(k) + 1024;
    for (long m = 1; out.size() < k; ++m) {
        if (m > budget) throw InvariantViolation("conjugator family produced too few distinct conjugates");
        const Quat g = one + (*u) * T(m);
        Quat g_inv(alg);
        try {
            g_inv = inverse(g);
        } catch (const ZeroDivisorError&) {
            continue;  // isotropic conjugator in a split algebra
        }
        Quat d = g * c * g_inv;
        bool fresh = true;
        for (const Quat& e : out) fresh = fresh && !(e == d);
        if (fresh) out.push_back(std::move(d));
    }
    return out;
}

}  // namespace quatroots

#endif  // QUATROOTS_CONJUGACY_HPP
