#ifndef QUATROOTS_DEGREE_HPP
#define QUATROOTS_DEGREE_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <ostream>

#include "quatroots/errors.hpp"

namespace quatroots {

/// Polynomial degree with a distinguished minus-infinity for the zero
/// polynomial. Ordered so that minus-infinity is below every finite degree.
class Degree {
  public:
    constexpr Degree() = default;
    constexpr explicit Degree(std::size_t d) : d_(d) {}
    static constexpr Degree minus_infinity() { return Degree(); }

    constexpr bool is_minus_infinity() const { return !d_.has_value(); }
    std::size_t value() const {
        if (!d_) throw UsageError("degree of the zero polynomial is minus infinity");
        return *d_;
    }

    friend constexpr Degree operator+(Degree l, Degree r) {
        if (!l.d_ || !r.d_) return Degree();
        return Degree(*l.d_ + *r.d_);
    }

    friend constexpr bool operator==(const Degree&, const Degree&) = default;
    friend constexpr std::strong_ordering operator<=>(const Degree& l, const Degree& r) {
        if (!l.d_ || !r.d_) return l.d_.has_value() <=> r.d_.has_value();
        return *l.d_ <=> *r.d_;
    }
    friend constexpr bool operator==(const Degree& l, std::size_t r) { return l.d_ == r; }
    friend constexpr std::strong_ordering operator<=>(const Degree& l, std::size_t r) {
        return l <=> Degree(r);
    }

    friend std::ostream& operator<<(std::ostream& os, const Degree& d) {
        if (!d.d_) return os << "-inf";
        return os << *d.d_;
    }

  private:
    std::optional<std::size_t> d_;
};

}  // namespace quatroots

#endif  // QUATROOTS_DEGREE_HPP
