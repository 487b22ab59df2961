#include "strandalg/pmc.hpp"

#include <string>

#include "strandalg/error.hpp"

namespace strandalg {

namespace {

// Size checks shared by the surgery count and the constructor. Returns the
// number of points.
int check_two_to_one(std::span<const int> matching) {
    const int n = static_cast<int>(matching.size());
    if (n % 4 != 0 || n > kMaxPoints)
        throw Error(ErrorCode::BadSize, "number of points must be a multiple of 4 and at most " +
                                            std::to_string(kMaxPoints) + ", got " + std::to_string(n));
    std::vector<int> count(n / 2 + 1, 0);
    for (int label : matching) {
        if (label < 1 || label > n / 2)
            throw Error(ErrorCode::NotTwoToOne, "handle label " + std::to_string(label) + " outside 1.." +
                                                    std::to_string(n / 2));
        ++count[label];
    }
    for (int h = 1; h <= n / 2; ++h)
        if (count[h] != 2)
            throw Error(ErrorCode::NotTwoToOne, "handle " + std::to_string(h) + " has " +
                                                    std::to_string(count[h]) + " points");
    return n;
}

}  // namespace

int surgery_circle_count(std::span<const int> matching) {
    const int n = check_two_to_one(matching);
    if (n == 0) return 1;

    // Segment i runs from point i to point i+1 (segment n passes through the
    // basepoint back to point 1). Surgery at a pair {a, b} sends the end
    // arriving at a onto the segment leaving b, and vice versa.
    std::vector<int> partner(n + 1);
    for (int p = 1; p <= n; ++p)
        for (int q = 1; q <= n; ++q)
            if (q != p && matching[q - 1] == matching[p - 1]) partner[p] = q;

    std::vector<bool> seen(n + 1, false);
    int circles = 0;
    for (int start = 1; start <= n; ++start) {
        if (seen[start]) continue;
        ++circles;
        for (int seg = start; !seen[seg];) {
            seen[seg] = true;
            const int arrival = seg == n ? 1 : seg + 1;
            seg = partner[arrival];
        }
    }
    return circles;
}

PointedMatchedCircle PointedMatchedCircle::create(int num_points, std::vector<int> matching) {
    if (num_points < 0 || num_points % 4 != 0 || num_points > kMaxPoints)
        throw Error(ErrorCode::BadSize, "number of points must be 4k with 4k <= " +
                                            std::to_string(kMaxPoints) + ", got " + std::to_string(num_points));
    if (static_cast<int>(matching.size()) != num_points)
        throw Error(ErrorCode::BadSize, "matching has " + std::to_string(matching.size()) +
                                            " entries for " + std::to_string(num_points) + " points");
    const int circles = surgery_circle_count(matching);
    if (circles != 1)
        throw Error(ErrorCode::SurgeryDisconnected,
                    "surgery along the matching yields " + std::to_string(circles) + " circles");

    PointedMatchedCircle pmc;
    pmc.matching_ = std::move(matching);
    pmc.pairs_.assign(num_points / 2, {0, 0});
    for (int p = 1; p <= num_points; ++p) {
        auto& pair = pmc.pairs_[pmc.matching_[p - 1] - 1];
        (pair[0] == 0 ? pair[0] : pair[1]) = p;
    }
    return pmc;
}

int PointedMatchedCircle::partner(int p) const {
    const auto& pair = points_of(handle(p));
    return pair[0] == p ? pair[1] : pair[0];
}

HandleSet PointedMatchedCircle::handles_of(PointMask points) const {
    HandleSet out = 0;
    for (int p = 1; p <= num_points(); ++p)
        if (points & point_bit(p)) out |= handle_bit(handle(p));
    return out;
}

PointMask PointedMatchedCircle::all_points() const {
    return num_points() == kMaxPoints ? ~PointMask{0} : (point_bit(num_points() + 1) - 1);
}

HandleSet PointedMatchedCircle::all_handles() const {
    return num_handles() == 0 ? 0 : (handle_bit(num_handles() + 1) - 1);
}

}  // namespace strandalg
