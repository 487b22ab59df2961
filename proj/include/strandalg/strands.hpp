#ifndef STRANDALG_STRANDS_HPP
#define STRANDALG_STRANDS_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "strandalg/pmc.hpp"

namespace strandalg {

struct Strand {
    int source = 0;
    int target = 0;

    friend bool operator==(const Strand&, const Strand&) = default;
    friend auto operator<=>(const Strand&, const Strand&) = default;
};

/// A basis element (S, T, phi) of the unmatched strand algebra on `ambient`
/// points: a partial bijection with phi(i) >= i.
class StrandDiagram {
public:
    StrandDiagram() = default;

    /// Validates the strands (distinct sources, distinct targets, endpoints in
    /// range, non-decreasing). Throws Error(InvalidDiagram) otherwise.
    static StrandDiagram create(int ambient, std::span<const Strand> strands);

    /// The horizontal diagram I(S) on the points of `points`.
    static StrandDiagram idempotent(PointMask points, int ambient);

    int ambient() const { return ambient_; }
    PointMask sources() const { return sources_; }
    PointMask targets() const { return targets_; }
    int size() const;

    /// Target of point i, or 0 if i is not a source.
    int target_of(int i) const { return target_[i - 1]; }

    /// Strands ordered by source.
    std::vector<Strand> strands() const;

    /// Pairs i < j in S with phi(i) > phi(j).
    int inversions() const;

    bool is_idempotent() const { return sources_ == targets_ && moving_mask() == 0; }
    /// Sources of the non-horizontal strands.
    PointMask moving_mask() const;

    friend bool operator==(const StrandDiagram&, const StrandDiagram&) = default;
    friend auto operator<=>(const StrandDiagram&, const StrandDiagram&) = default;

private:
    int ambient_ = 0;
    PointMask sources_ = 0;
    PointMask targets_ = 0;
    std::array<std::uint8_t, kMaxPoints> target_{};
};

/// A Z/2 linear combination of strand diagrams, kept as a sorted set.
/// Addition is symmetric difference.
class AlgebraElement {
public:
    AlgebraElement() = default;
    explicit AlgebraElement(int ambient) : ambient_(ambient) {}
    AlgebraElement(int ambient, std::vector<StrandDiagram> terms);  // reduces mod 2
    explicit AlgebraElement(const StrandDiagram& d) : ambient_(d.ambient()), terms_{d} {}

    int ambient() const { return ambient_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const std::vector<StrandDiagram>& terms() const { return terms_; }
    bool contains(const StrandDiagram& d) const;

    AlgebraElement& operator+=(const AlgebraElement& other);
    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }

    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
        return a.terms_ == b.terms_ && (a.terms_.empty() || a.ambient_ == b.ambient_);
    }

private:
    int ambient_ = 0;
    std::vector<StrandDiagram> terms_;
};

/// Product of two diagrams: the composite if T(d1) = S(d2) and inversions
/// add, otherwise nullopt. Throws Error(AmbientMismatch).
std::optional<StrandDiagram> multiply_diagrams(const StrandDiagram& d1, const StrandDiagram& d2);

AlgebraElement multiply(const StrandDiagram& d1, const StrandDiagram& d2);
AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b);

/// Sum over crossings whose smoothing lowers the inversion count by exactly one.
AlgebraElement differential(const StrandDiagram& d);
AlgebraElement differential(const AlgebraElement& a);

/// Every strand diagram on `ambient` points (for exhaustive checks).
std::vector<StrandDiagram> all_strand_diagrams(int ambient);

}  // namespace strandalg

#endif
