#ifndef QUATROOTS_QPOLY_HPP
#define QUATROOTS_QPOLY_HPP

#include <utility>
#include <vector>

#include "quatroots/central_poly.hpp"
#include "quatroots/degree.hpp"
#include "quatroots/quaternion.hpp"

namespace quatroots {

/// Polynomial a_n x^n + ... + a_0 with quaternion coefficients on the left of
/// a central indeterminate x. Coefficients are stored constant term first and
/// trimmed so the leading coefficient is nonzero.
template <class T>
class QPoly {
  public:
    using Quat = Quaternion<T>;

    QPoly() : alg_(Algebra<T>::hamilton()) {}
    explicit QPoly(Algebra<T> alg) : alg_(std::move(alg)) {}
    QPoly(Algebra<T> alg, std::vector<Quat> coeffs) : alg_(std::move(alg)), c_(std::move(coeffs)) {
        for (const Quat& q : c_)
            if (!(q.algebra() == alg_)) throw UsageError("coefficient from a different algebra");
        trim();
    }

    static QPoly constant(const Quat& q) { return QPoly(q.algebra(), {q}); }
    static QPoly x(const Algebra<T>& alg) { return QPoly(alg, {Quat(alg), Quat(alg, T(1))}); }
    /// q x^d
    static QPoly monomial(const Quat& q, std::size_t d) {
        std::vector<Quat> c(d + 1, Quat(q.algebra()));
        c[d] = q;
        return QPoly(q.algebra(), std::move(c));
    }
    /// x - q
    static QPoly linear(const Quat& q) { return QPoly(q.algebra(), {-q, Quat(q.algebra(), T(1))}); }
    static QPoly from_central(const Algebra<T>& alg, const CentralPoly<T>& p) {
        std::vector<Quat> c;
        c.reserve(p.coeffs().size());
        for (const T& v : p.coeffs()) c.emplace_back(alg, v);
        return QPoly(alg, std::move(c));
    }

    const Algebra<T>& algebra() const { return alg_; }
    Degree degree() const { return c_.empty() ? Degree::minus_infinity() : Degree(c_.size() - 1); }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Quat>& coeffs() const { return c_; }
    Quat coeff(std::size_t n) const { return n < c_.size() ? c_[n] : Quat(alg_); }
    const Quat& lead() const {
        if (c_.empty()) throw UsageError("leading coefficient of the zero polynomial");
        return c_.back();
    }
    bool is_monic() const { return !c_.empty() && c_.back() == Quat(alg_, T(1)); }
    bool is_central() const {
        for (const Quat& q : c_)
            if (!q.is_central()) return false;
        return true;
    }

    QPoly& operator+=(const QPoly& o) {
        check_same(o);
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Quat(alg_));
        for (std::size_t n = 0; n < o.c_.size(); ++n) c_[n] += o.c_[n];
        trim();
        return *this;
    }
    QPoly& operator-=(const QPoly& o) {
        check_same(o);
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Quat(alg_));
        for (std::size_t n = 0; n < o.c_.size(); ++n) c_[n] -= o.c_[n];
        trim();
        return *this;
    }

    friend QPoly operator+(QPoly l, const QPoly& r) { return l += r; }
    friend QPoly operator-(QPoly l, const QPoly& r) { return l -= r; }
    friend QPoly operator-(QPoly p) {
        for (Quat& q : p.c_) q = -q;
        return p;
    }
    /// (p x^m)(s x^n) = (p s) x^{m+n}: x is central.
    friend QPoly operator*(const QPoly& l, const QPoly& r) {
        l.check_same(r);
        if (l.is_zero() || r.is_zero()) return QPoly(l.alg_);
        std::vector<Quat> c(l.c_.size() + r.c_.size() - 1, Quat(l.alg_));
        for (std::size_t m = 0; m < l.c_.size(); ++m)
            for (std::size_t n = 0; n < r.c_.size(); ++n) c[m + n] += l.c_[m] * r.c_[n];
        return QPoly(l.alg_, std::move(c));
    }
    friend QPoly operator*(const Quat& q, const QPoly& p) {
        std::vector<Quat> c;
        c.reserve(p.c_.size());
        for (const Quat& v : p.c_) c.push_back(q * v);
        return QPoly(p.alg_, std::move(c));
    }
    friend QPoly operator*(const QPoly& p, const Quat& q) {
        std::vector<Quat> c;
        c.reserve(p.c_.size());
        for (const Quat& v : p.c_) c.push_back(v * q);
        return QPoly(p.alg_, std::move(c));
    }
    friend bool operator==(const QPoly& l, const QPoly& r) { return l.alg_ == r.alg_ && l.c_ == r.c_; }

  private:
    void check_same(const QPoly& o) const {
        if (!(alg_ == o.alg_)) throw UsageError("polynomials over different algebras");
    }
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    Algebra<T> alg_;
    std::vector<Quat> c_;
};

using QPolyF = QPoly<double>;

template <class T>
struct DivRem {
    QPoly<T> quotient;
    QPoly<T> remainder;
};

/// P = quotient * D + remainder with deg remainder < deg D.
template <class T>
DivRem<T> right_divrem(const QPoly<T>& p, const QPoly<T>& d) {
    if (d.is_zero()) throw UsageError("right division by the zero polynomial");
    if (!(p.algebra() == d.algebra())) throw UsageError("polynomials over different algebras");
    using Quat = Quaternion<T>;
    const std::size_t dd = d.degree().value();
    if (p.degree() < Degree(dd)) return {QPoly<T>(p.algebra()), p};
    const Quat lead_inv = inverse(d.lead());
    std::vector<Quat> r = p.coeffs();
    std::vector<Quat> q(r.size() - dd, Quat(p.algebra()));
    for (std::size_t n = r.size(); n-- > dd;) {
        if (r[n].is_zero()) continue;
        Quat t = r[n] * lead_inv;
        for (std::size_t m = 0; m <= dd; ++m) r[n - dd + m] -= t * d.coeffs()[m];
        q[n - dd] = std::move(t);
    }
    r.resize(dd);
    return {QPoly<T>(p.algebra(), std::move(q)), QPoly<T>(p.algebra(), std::move(r))};
}

template <class T>
bool right_divides(const QPoly<T>& d, const QPoly<T>& p) {
    return right_divrem(p, d).remainder.is_zero();
}

/// Left-multiplies by the inverse of the leading coefficient.
template <class T>
QPoly<T> monic(const QPoly<T>& p) {
    if (p.is_zero()) throw UsageError("cannot normalize the zero polynomial");
    return inverse(p.lead()) * p;
}

/// Greatest common right divisor by the right Euclidean algorithm, monic.
template <class T>
QPoly<T> gcrd(QPoly<T> p, QPoly<T> s) {
    if (p.is_zero() && s.is_zero()) throw UsageError("gcrd of two zero polynomials");
    while (!s.is_zero()) {
        QPoly<T> r = right_divrem(p, s).remainder;
        p = std::move(s);
        s = r.is_zero() ? std::move(r) : monic(r);
    }
    return monic(p);
}

/// P(q) = sum a_n q^n, powers of q on the right of the coefficients.
template <class T>
Quaternion<T> eval_right(const QPoly<T>& p, const Quaternion<T>& q) {
    Quaternion<T> acc(q.algebra());
    const auto& c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * q + *it;
    return acc;
}

/// (G H)(q) without forming G H: zero if H(q) = 0, otherwise
/// G(h q h^-1) h with h = H(q).
template <class T>
Quaternion<T> eval_product(const QPoly<T>& g, const QPoly<T>& h, const Quaternion<T>& q) {
    const Quaternion<T> hq = eval_right(h, q);
    if (hq.is_zero()) return hq;
    return eval_right(g, hq * q * inverse(hq)) * hq;
}

template <class T>
QPoly<T> conj_poly(const QPoly<T>& p) {
    std::vector<Quaternion<T>> c;
    c.reserve(p.coeffs().size());
    for (const auto& q : p.coeffs()) c.push_back(conj(q));
    return QPoly<T>(p.algebra(), std::move(c));
}

/// P * conj_poly(P). Its coefficients are self-conjugate, hence central.
/// Exact backends throw InvariantViolation if a pure part survives; the
/// floating-point backend discards the rounding residue.
template <class T>
CentralPoly<T> companion(const QPoly<T>& p) {
    const QPoly<T> prod = p * conj_poly(p);
    std::vector<T> c;
    c.reserve(prod.coeffs().size());
    for (const auto& q : prod.coeffs()) {
        if constexpr (!std::is_floating_point_v<T>) {
            if (!q.is_central()) throw InvariantViolation("companion polynomial has a non-central coefficient");
        }
        c.push_back(q.w());
    }
    return CentralPoly<T>(std::move(c));
}

/// Coefficient-wise conversion of an exact polynomial to the double backend.
/// The algebra parameters are converted as well.
inline QPolyF to_double(const QPoly<Rational>& p) {
    const Algebra<double> alg = (p.algebra() == Algebra<Rational>::hamilton())
                                    ? Algebra<double>::hamilton()
                                    : Algebra<double>(p.algebra().a().get_d(), p.algebra().b().get_d());
    std::vector<QuatF> c;
    for (const auto& q : p.coeffs()) c.emplace_back(alg, q.w().get_d(), q.x().get_d(), q.y().get_d(), q.z().get_d());
    return QPolyF(alg, std::move(c));
}

}  // namespace quatroots

#endif  // QUATROOTS_QPOLY_HPP
