#ifndef STRANDALG_FRACTION_HPP
#define STRANDALG_FRACTION_HPP

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>

#include "strandalg/error.hpp"

namespace strandalg {

/// Exact rational number with a fixed denominator. The value is
/// `scaled() / Den`. Used for half-integral Maslov components and
/// quarter-integral Euler and point measures.
template <std::int64_t Den>
class FixedFraction {
    static_assert(Den > 0);

public:
    constexpr FixedFraction() = default;
    constexpr FixedFraction(std::int64_t integer) : scaled_(integer * Den) {}  // NOLINT: implicit

    template <std::int64_t OtherDen>
        requires(Den % OtherDen == 0 && OtherDen != Den)
    constexpr FixedFraction(FixedFraction<OtherDen> other)  // NOLINT: widening is exact
        : scaled_(other.scaled() * (Den / OtherDen)) {}

    static constexpr FixedFraction from_scaled(std::int64_t scaled) {
        FixedFraction f;
        f.scaled_ = scaled;
        return f;
    }

    constexpr std::int64_t scaled() const { return scaled_; }
    constexpr bool is_integer() const { return scaled_ % Den == 0; }

    std::int64_t to_integer() const {
        if (!is_integer()) throw Error(ErrorCode::NonIntegral, "value " + to_string() + " is not an integer");
        return scaled_ / Den;
    }

    /// Representative of the value modulo 1, in [0, 1).
    constexpr FixedFraction mod1() const {
        return from_scaled(((scaled_ % Den) + Den) % Den);
    }

    std::string to_string() const {
        const std::int64_t g = std::gcd(scaled_ < 0 ? -scaled_ : scaled_, Den);
        const std::int64_t num = scaled_ / (g == 0 ? 1 : g);
        const std::int64_t den = Den / (g == 0 ? 1 : g);
        if (den == 1 || scaled_ == 0) return std::to_string(scaled_ / Den);
        return std::to_string(num) + "/" + std::to_string(den);
    }

    constexpr FixedFraction operator-() const { return from_scaled(-scaled_); }
    constexpr FixedFraction& operator+=(FixedFraction o) { scaled_ += o.scaled_; return *this; }
    constexpr FixedFraction& operator-=(FixedFraction o) { scaled_ -= o.scaled_; return *this; }
    constexpr FixedFraction& operator*=(std::int64_t k) { scaled_ *= k; return *this; }

    friend constexpr FixedFraction operator+(FixedFraction a, FixedFraction b) { return a += b; }
    friend constexpr FixedFraction operator-(FixedFraction a, FixedFraction b) { return a -= b; }
    friend constexpr FixedFraction operator*(FixedFraction a, std::int64_t k) { return a *= k; }
    friend constexpr FixedFraction operator*(std::int64_t k, FixedFraction a) { return a *= k; }

    friend constexpr bool operator==(FixedFraction, FixedFraction) = default;
    friend constexpr auto operator<=>(FixedFraction, FixedFraction) = default;

    friend std::ostream& operator<<(std::ostream& os, FixedFraction f) { return os << f.to_string(); }

private:
    std::int64_t scaled_ = 0;
};

using HalfInteger = FixedFraction<2>;
using QuarterInteger = FixedFraction<4>;

inline constexpr HalfInteger kHalf = HalfInteger::from_scaled(1);

}  // namespace strandalg

#endif
