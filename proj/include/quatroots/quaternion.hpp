#ifndef QUATROOTS_QUATERNION_HPP
#define QUATROOTS_QUATERNION_HPP

#include <array>
#include <cmath>
#include <memory>
#include <ostream>
#include <type_traits>

#include "quatroots/errors.hpp"
#include "quatroots/rational.hpp"

namespace quatroots {

/// Structure constants of the generalized quaternion algebra (a, b / F):
/// i^2 = a, j^2 = b, ij = -ji = k.
///
/// Cheap to copy; quaternions share the parameter block of their algebra.
template <class T>
class Algebra {
  public:
    Algebra(T a, T b) : params_(std::make_shared<const Params>(Params{std::move(a), std::move(b)})) {
        if (is_zero(params_->a) || is_zero(params_->b))
            throw UsageError("algebra parameters must be nonzero");
    }

    /// (-1, -1): Hamilton's quaternions over F.
    static const Algebra& hamilton() {
        static const Algebra h(T(-1), T(-1));
        return h;
    }

    const T& a() const { return params_->a; }
    const T& b() const { return params_->b; }

    /// a < 0 and b < 0: the norm form is positive definite, so every nonzero
    /// element is invertible. Other parameters are used on a best-effort basis.
    bool is_definite() const { return a() < 0 && b() < 0; }

    friend bool operator==(const Algebra& l, const Algebra& r) {
        return l.params_ == r.params_ || (l.a() == r.a() && l.b() == r.b());
    }

  private:
    struct Params {
        T a;
        T b;
    };
    std::shared_ptr<const Params> params_;
};

/// Element w + x i + y j + z k of an Algebra<T>.
template <class T>
class Quaternion {
  public:
    Quaternion() : Quaternion(Algebra<T>::hamilton()) {}
    explicit Quaternion(Algebra<T> alg, T w = T(0), T x = T(0), T y = T(0), T z = T(0))
        : alg_(std::move(alg)), c_{std::move(w), std::move(x), std::move(y), std::move(z)} {
        if constexpr (std::is_floating_point_v<T>) {
            for (const T& v : c_)
                if (!std::isfinite(v)) throw UsageError("quaternion component is not finite");
        }
    }

    static Quaternion unit_i(const Algebra<T>& alg) { return Quaternion(alg, T(0), T(1)); }
    static Quaternion unit_j(const Algebra<T>& alg) { return Quaternion(alg, T(0), T(0), T(1)); }
    static Quaternion unit_k(const Algebra<T>& alg) { return Quaternion(alg, T(0), T(0), T(0), T(1)); }
    static Quaternion from_coords(const Algebra<T>& alg, const std::array<T, 4>& c) {
        return Quaternion(alg, c[0], c[1], c[2], c[3]);
    }

    const Algebra<T>& algebra() const { return alg_; }
    const T& w() const { return c_[0]; }
    const T& x() const { return c_[1]; }
    const T& y() const { return c_[2]; }
    const T& z() const { return c_[3]; }
    const std::array<T, 4>& coords() const { return c_; }
    const T& operator[](std::size_t n) const { return c_[n]; }

    bool is_zero() const {
        return quatroots::is_zero(c_[0]) && is_central();
    }
    bool is_central() const {
        return quatroots::is_zero(c_[1]) && quatroots::is_zero(c_[2]) && quatroots::is_zero(c_[3]);
    }

    Quaternion real_part() const { return Quaternion(alg_, c_[0]); }
    Quaternion pure_part() const { return Quaternion(alg_, T(0), c_[1], c_[2], c_[3]); }

    Quaternion& operator+=(const Quaternion& o) {
        check_same(o);
        for (std::size_t n = 0; n < 4; ++n) c_[n] += o.c_[n];
        return *this;
    }
    Quaternion& operator-=(const Quaternion& o) {
        check_same(o);
        for (std::size_t n = 0; n < 4; ++n) c_[n] -= o.c_[n];
        return *this;
    }
    Quaternion& operator*=(const T& s) {
        for (T& v : c_) v *= s;
        return *this;
    }
    Quaternion& operator/=(const T& s) {
        if (quatroots::is_zero(s)) throw DivisionByZero("division of a quaternion by zero");
        for (T& v : c_) v /= s;
        return *this;
    }

    friend Quaternion operator+(Quaternion l, const Quaternion& r) { return l += r; }
    friend Quaternion operator-(Quaternion l, const Quaternion& r) { return l -= r; }
    friend Quaternion operator-(Quaternion q) {
        for (T& v : q.c_) v = -v;
        return q;
    }
    friend Quaternion operator*(Quaternion q, const T& s) { return q *= s; }
    friend Quaternion operator*(const T& s, Quaternion q) { return q *= s; }
    friend Quaternion operator/(Quaternion q, const T& s) { return q /= s; }

    /// Product under i^2 = a, j^2 = b, ij = -ji = k (so k^2 = -ab, jk = -b i,
    /// kj = b i, ki = -a j, ik = a j).
    friend Quaternion operator*(const Quaternion& p, const Quaternion& q) {
        p.check_same(q);
        const T& a = p.alg_.a();
        const T& b = p.alg_.b();
        const auto& [w1, x1, y1, z1] = p.c_;
        const auto& [w2, x2, y2, z2] = q.c_;
        T ab = a * b;
        T w = w1 * w2 + a * (x1 * x2) + b * (y1 * y2) - ab * (z1 * z2);
        T x = w1 * x2 + x1 * w2 + b * (z1 * y2 - y1 * z2);
        T y = w1 * y2 + y1 * w2 + a * (x1 * z2 - z1 * x2);
        T z = w1 * z2 + z1 * w2 + x1 * y2 - y1 * x2;
        return Quaternion(p.alg_, std::move(w), std::move(x), std::move(y), std::move(z));
    }

    friend bool operator==(const Quaternion& l, const Quaternion& r) {
        return l.c_ == r.c_ && l.alg_ == r.alg_;
    }

    friend std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
        return os << '(' << q.c_[0] << ", " << q.c_[1] << ", " << q.c_[2] << ", " << q.c_[3] << ')';
    }

  private:
    void check_same(const Quaternion& o) const {
        if (!(alg_ == o.alg_)) throw UsageError("quaternions from different algebras");
    }

    Algebra<T> alg_;
    std::array<T, 4> c_;
};

using QuatF = Quaternion<double>;

template <class T>
Quaternion<T> conj(const Quaternion<T>& q) {
    return Quaternion<T>(q.algebra(), q.w(), -q.x(), -q.y(), -q.z());
}

/// N(q) = w^2 - a x^2 - b y^2 + ab z^2, so that conj(q) q = N(q).
template <class T>
T norm(const Quaternion<T>& q) {
    const T& a = q.algebra().a();
    const T& b = q.algebra().b();
    T n = q.w() * q.w() - a * (q.x() * q.x()) - b * (q.y() * q.y()) + (a * b) * (q.z() * q.z());
    return n;
}

template <class T>
T trace(const Quaternion<T>& q) {
    T t = q.w() + q.w();
    return t;
}

/// conj(q) / N(q).
template <class T>
Quaternion<T> inverse(const Quaternion<T>& q) {
    if (q.is_zero()) throw DivisionByZero("inverse of the zero quaternion");
    T n = norm(q);
    if (is_zero(n))
        throw ZeroDivisorError("nonzero quaternion with zero norm: the algebra is split");
    return conj(q) / n;
}

template <class T>
Quaternion<T> power(const Quaternion<T>& q, std::size_t e) {
    Quaternion<T> r(q.algebra(), T(1));
    for (std::size_t n = 0; n < e; ++n) r = r * q;
    return r;
}

template <class T>
bool commutes(const Quaternion<T>& p, const Quaternion<T>& q) {
    return (p * q - q * p).is_zero();
}

/// Euclidean length of the coordinate vector; only meaningful for Hamilton.
inline double magnitude(const QuatF& q) {
    return std::sqrt(q.w() * q.w() + q.x() * q.x() + q.y() * q.y() + q.z() * q.z());
}

}  // namespace quatroots

#endif  // QUATROOTS_QUATERNION_HPP
