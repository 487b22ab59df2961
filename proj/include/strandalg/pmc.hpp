#ifndef STRANDALG_PMC_HPP
#define STRANDALG_PMC_HPP

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace strandalg {

/// Upper bound on the number of marked points (genus 8). Point and handle
/// sets are stored as 32-bit masks.
inline constexpr int kMaxPoints = 32;

/// Bit `p - 1` set for point `p`.
using PointMask = std::uint32_t;
/// Bit `h - 1` set for handle label `h`.
using HandleSet = std::uint32_t;

constexpr PointMask point_bit(int p) { return PointMask{1} << (p - 1); }
constexpr HandleSet handle_bit(int h) { return HandleSet{1} << (h - 1); }

/// Number of boundary circles after 0-surgery on the circle at every matched
/// pair. Only the sizes are checked: the matching must have one entry per
/// point and every label must occur exactly twice (throws otherwise).
int surgery_circle_count(std::span<const int> matching);

/// A circle with 4k ordered points (1..4k, read from the basepoint along the
/// orientation) and a two-to-one matching onto handle labels 1..2k whose
/// surgery is connected.
class PointedMatchedCircle {
public:
    /// Validates and constructs. Throws Error with BadSize, NotTwoToOne or
    /// SurgeryDisconnected.
    static PointedMatchedCircle create(int num_points, std::vector<int> matching);

    int num_points() const { return static_cast<int>(matching_.size()); }
    int num_handles() const { return num_points() / 2; }
    int genus() const { return num_points() / 4; }

    /// Handle label of point p (1-based).
    int handle(int p) const { return matching_[p - 1]; }
    /// The two points over handle h, in increasing order.
    const std::array<int, 2>& points_of(int h) const { return pairs_[h - 1]; }
    /// The other point matched with p.
    int partner(int p) const;

    HandleSet handles_of(PointMask points) const;
    PointMask all_points() const;
    HandleSet all_handles() const;

    const std::vector<int>& matching() const { return matching_; }

    friend bool operator==(const PointedMatchedCircle& a, const PointedMatchedCircle& b) {
        return a.matching_ == b.matching_;
    }

private:
    PointedMatchedCircle() = default;

    std::vector<int> matching_;
    std::vector<std::array<int, 2>> pairs_;
};

}  // namespace strandalg

#endif
