#ifndef QUATROOTS_CENTRAL_POLY_HPP
#define QUATROOTS_CENTRAL_POLY_HPP

#include <initializer_list>
#include <utility>
#include <vector>

#include "quatroots/degree.hpp"
#include "quatroots/errors.hpp"
#include "quatroots/rational.hpp"

namespace quatroots {

/// Commutative polynomial over the center F, constant term first.
template <class T>
class CentralPoly {
  public:
    CentralPoly() = default;
    explicit CentralPoly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
    CentralPoly(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }

    static CentralPoly constant(T v) { return CentralPoly(std::vector<T>{std::move(v)}); }
    static CentralPoly x() { return CentralPoly({T(0), T(1)}); }
    /// v x^d
    static CentralPoly monomial(T v, std::size_t d) {
        std::vector<T> c(d + 1, T(0));
        c[d] = std::move(v);
        return CentralPoly(std::move(c));
    }

    Degree degree() const { return c_.empty() ? Degree::minus_infinity() : Degree(c_.size() - 1); }
    bool is_zero() const { return c_.empty(); }
    const std::vector<T>& coeffs() const { return c_; }
    T coeff(std::size_t n) const { return n < c_.size() ? c_[n] : T(0); }
    const T& lead() const {
        if (c_.empty()) throw UsageError("leading coefficient of the zero polynomial");
        return c_.back();
    }
    bool is_monic() const { return !c_.empty() && c_.back() == T(1); }

    CentralPoly& operator+=(const CentralPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
        for (std::size_t n = 0; n < o.c_.size(); ++n) c_[n] += o.c_[n];
        trim();
        return *this;
    }
    CentralPoly& operator-=(const CentralPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
        for (std::size_t n = 0; n < o.c_.size(); ++n) c_[n] -= o.c_[n];
        trim();
        return *this;
    }
    CentralPoly& operator*=(const T& s) {
        for (T& v : c_) v *= s;
        trim();
        return *this;
    }

    friend CentralPoly operator+(CentralPoly l, const CentralPoly& r) { return l += r; }
    friend CentralPoly operator-(CentralPoly l, const CentralPoly& r) { return l -= r; }
    friend CentralPoly operator-(CentralPoly p) {
        for (T& v : p.c_) v = -v;
        return p;
    }
    friend CentralPoly operator*(CentralPoly p, const T& s) { return p *= s; }
    friend CentralPoly operator*(const T& s, CentralPoly p) { return p *= s; }
    friend CentralPoly operator*(const CentralPoly& l, const CentralPoly& r) {
        if (l.is_zero() || r.is_zero()) return {};
        std::vector<T> c(l.c_.size() + r.c_.size() - 1, T(0));
        for (std::size_t m = 0; m < l.c_.size(); ++m)
            for (std::size_t n = 0; n < r.c_.size(); ++n) c[m + n] += l.c_[m] * r.c_[n];
        return CentralPoly(std::move(c));
    }
    friend bool operator==(const CentralPoly&, const CentralPoly&) = default;

    T operator()(const T& v) const {
        T acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * v + *it;
        return acc;
    }

  private:
    void trim() {
        while (!c_.empty() && quatroots::is_zero(c_.back())) c_.pop_back();
    }
    std::vector<T> c_;
};

template <class T>
CentralPoly<T> monic(const CentralPoly<T>& p) {
    if (p.is_zero()) throw UsageError("cannot normalize the zero polynomial");
    T inv = T(1) / p.lead();
    return p * inv;
}

/// Division with remainder in F[x].
template <class T>
std::pair<CentralPoly<T>, CentralPoly<T>> divrem(const CentralPoly<T>& num, const CentralPoly<T>& den) {
    if (den.is_zero()) throw UsageError("division by the zero polynomial");
    const std::size_t dd = den.degree().value();
    std::vector<T> r = num.coeffs();
    if (r.size() <= dd) return {CentralPoly<T>(), num};
    std::vector<T> q(r.size() - dd, T(0));
    const T& lead = den.lead();
    for (std::size_t n = r.size(); n-- > dd;) {
        if (is_zero(r[n])) continue;
        T t = r[n] / lead;
        for (std::size_t m = 0; m <= dd; ++m) r[n - dd + m] -= t * den.coeffs()[m];
        q[n - dd] = std::move(t);
    }
    r.resize(dd);
    return {CentralPoly<T>(std::move(q)), CentralPoly<T>(std::move(r))};
}

template <class T>
bool divides(const CentralPoly<T>& d, const CentralPoly<T>& p) {
    return divrem(p, d).second.is_zero();
}

/// Monic gcd in F[x]; gcd(f, 0) = monic(f).
template <class T>
CentralPoly<T> central_gcd(CentralPoly<T> f, CentralPoly<T> g) {
    if (f.is_zero() && g.is_zero()) throw UsageError("gcd of two zero polynomials");
    while (!g.is_zero()) {
        CentralPoly<T> r = divrem(f, g).second;
        // Normalizing every remainder keeps exact coefficients small.
        f = std::move(g);
        g = r.is_zero() ? std::move(r) : monic(r);
    }
    return monic(f);
}

template <class T>
CentralPoly<T> derivative(const CentralPoly<T>& p) {
    if (p.degree() <= Degree(0)) return {};
    std::vector<T> c(p.coeffs().size() - 1);
    for (std::size_t n = 1; n < p.coeffs().size(); ++n) c[n - 1] = p.coeffs()[n] * T(static_cast<long>(n));
    return CentralPoly<T>(std::move(c));
}

/// p / gcd(p, p'), monic. Exact backends only.
template <class T>
CentralPoly<T> squarefree_part(const CentralPoly<T>& p) {
    if (p.degree() <= Degree(0)) return p.is_zero() ? p : CentralPoly<T>::constant(T(1));
    CentralPoly<T> g = central_gcd(p, derivative(p));
    return monic(divrem(p, g).first);
}

}  // namespace quatroots

#endif  // QUATROOTS_CENTRAL_POLY_HPP
