#include "strandalg/pontryagin.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "strandalg/error.hpp"

namespace strandalg {

namespace {

// Boundary points are placed at x = 4p; the pushoff shift is x + 1, which is
// below the spacing of the marked points and so behaves as an infinitesimal.
constexpr std::int64_t kScale = 4;
constexpr std::int64_t kShift = 1;

struct Semicircle {
    std::int64_t left;
    std::int64_t right;
};

// Two upper semicircles with centers on the axis meet (once) iff the full
// circles meet in two points: |r1 - r2| < |c1 - c2| < r1 + r2. Doubled
// centers and radii keep everything integral.
bool semicircles_cross(const Semicircle& a, const Semicircle& b) {
    const std::int64_t center_gap = std::llabs((a.left + a.right) - (b.left + b.right));
    const std::int64_t ra = a.right - a.left;
    const std::int64_t rb = b.right - b.left;
    return std::llabs(ra - rb) < center_gap && center_gap < ra + rb;
}

StrandDiagram as_diagram(const std::vector<ReebChord>& chords, int extra_horizontal = 0) {
    int ambient = extra_horizontal;
    std::vector<Strand> strands;
    for (const auto& c : chords) {
        strands.push_back({c.minus, c.plus});
        ambient = std::max(ambient, c.plus);
    }
    if (extra_horizontal) strands.push_back({extra_horizontal, extra_horizontal});
    return StrandDiagram::create(ambient, strands);
}

}  // namespace

int crossing_count(const ReebChord& arc, const ReebChord& pushoff_of) {
    const Semicircle a{kScale * arc.minus, kScale * arc.plus};
    const Semicircle b{kScale * pushoff_of.minus + kShift, kScale * pushoff_of.plus + kShift};
    return semicircles_cross(a, b) ? -1 : 0;
}

HalfInteger maslov_component(const ChordSet& rho) {
    std::int64_t total = 0;
    for (const auto& a : rho.chords())
        for (const auto& b : rho.chords()) total += crossing_count(a, b);
    return HalfInteger::from_scaled(total);
}

HomologyClass spin_c_component(int num_points, const ChordSet& rho) {
    HomologyClass sum(num_points);
    for (const auto& c : rho.chords()) sum += homology_class(num_points, c);
    return sum;
}

GradingElement compose_layers(const ChordArcDiagram& d) {
    HalfInteger maslov;
    HomologyClass spin_c(d.num_points);
    for (std::size_t i = 0; i < d.layers.size(); ++i) {
        maslov += maslov_component(d.layers[i]);
        spin_c += spin_c_component(d.num_points, d.layers[i]);
        for (std::size_t j = i + 1; j < d.layers.size(); ++j)
            for (const auto& a : d.layers[i].chords())
                for (const auto& b : d.layers[j].chords())
                    maslov += pairing_L(homology_class(d.num_points, a), homology_class(d.num_points, b));
    }
    return {maslov, spin_c};
}

int resolve_crossing_framing(const ChordSet& before, const ChordSet& after) {
    std::vector<ReebChord> removed, added;
    std::set_difference(before.chords().begin(), before.chords().end(), after.chords().begin(),
                        after.chords().end(), std::back_inserter(removed));
    std::set_difference(after.chords().begin(), after.chords().end(), before.chords().begin(),
                        before.chords().end(), std::back_inserter(added));
    const auto fail = [&](const std::string& why) {
        return Error(ErrorCode::NotAResolution, to_string(after) + " from " + to_string(before) + ": " + why);
    };

    int horizontal = 0;
    if (removed.size() == 2 && added.size() == 2) {
        // Swapping the plus ends of a nested pair.
        const ReebChord& outer = removed[0];
        const ReebChord& inner = removed[1];
        if (classify_pair(outer, inner) != ChordRelation::Nested || outer.minus > inner.minus)
            throw fail("replaced chords are not a nested pair");
        const std::vector<ReebChord> expected{{outer.minus, inner.plus}, {inner.minus, outer.plus}};
        if (added != expected) throw fail("new chords do not swap the plus ends");
    } else if (removed.size() == 1 && added.size() == 2) {
        // Splitting a chord at a horizontal strand.
        const ReebChord& c = removed[0];
        const int p = added[0].plus;
        if (added[0] != ReebChord{c.minus, p} || added[1] != ReebChord{p, c.plus})
            throw fail("new chords do not split the removed chord");
        if ((before.minus_points() | before.plus_points()) & point_bit(p))
            throw fail("split point is a chord endpoint");
        horizontal = p;
    } else {
        throw fail("not a single crossing change");
    }

    const int drop = as_diagram(before.chords(), horizontal).inversions() - as_diagram(after.chords()).inversions();
    if (drop != 1) throw fail("inversion count drops by " + std::to_string(drop));
    return static_cast<int>((maslov_component(after) - maslov_component(before)).to_integer());
}

HalfInteger NormalizationResult::predicted_iota() const {
    return HalfInteger::from_scaled(-static_cast<std::int64_t>(segments.size())) -
           HalfInteger(abutting_negative) + HalfInteger(interleaved_positive) - HalfInteger(interleaved_negative);
}

namespace {

bool needs_rewrite(const ReebChord& a, const ReebChord& b) {
    switch (classify_pair(a, b)) {
        case ChordRelation::AbutsForward:
        case ChordRelation::AbutsBackward:
        case ChordRelation::Interleaved: return true;
        default: return false;
    }
}

// Rewrites the consecutive pair (i, i+1), which needs_rewrite.
void rewrite_consecutive(std::vector<ReebChord>& b, std::size_t i, NormalizationResult& r) {
    const ReebChord first = b[i];
    const ReebChord second = b[i + 1];
    switch (classify_pair(first, second)) {
        case ChordRelation::AbutsForward:
            b[i] = {first.minus, second.plus};
            b.erase(b.begin() + static_cast<std::ptrdiff_t>(i) + 1);
            ++r.abutting_positive;
            return;
        case ChordRelation::AbutsBackward:
            b[i] = {second.minus, first.plus};
            b.erase(b.begin() + static_cast<std::ptrdiff_t>(i) + 1);
            ++r.abutting_negative;
            return;
        case ChordRelation::Interleaved:
            if (first.minus < second.minus) ++r.interleaved_positive;
            else ++r.interleaved_negative;
            b[i] = {std::min(first.minus, second.minus), std::max(first.plus, second.plus)};
            b[i + 1] = {std::max(first.minus, second.minus), std::min(first.plus, second.plus)};
            return;
        default: throw std::logic_error("rewrite_consecutive on a pair that needs no rewrite");
    }
}

// Pairs (i, j), j > i + 1, that need a rewrite and enclose no other such pair.
std::vector<std::pair<std::size_t, std::size_t>> innermost_distant_pairs(const std::vector<ReebChord>& b) {
    std::vector<std::pair<std::size_t, std::size_t>> bad;
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = i + 1; j < b.size(); ++j)
            if (needs_rewrite(b[i], b[j])) bad.emplace_back(i, j);
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (const auto& [i, j] : bad) {
        if (j == i + 1) continue;
        bool innermost = true;
        for (const auto& [k, l] : bad)
            if ((k != i || l != j) && i <= k && l <= j) innermost = false;
        if (innermost) out.emplace_back(i, j);
    }
    return out;
}

}  // namespace

NormalizationResult normalize_segments(std::span<const ReebChord> segments, NormalizeOrder order,
                                       std::mt19937_64* rng) {
    if (order == NormalizeOrder::Random && rng == nullptr)
        throw std::invalid_argument("random normalization order needs a generator");
    NormalizationResult r;
    std::vector<ReebChord> b(segments.begin(), segments.end());
    const auto pick = [&](std::size_t count) -> std::size_t {
        if (order == NormalizeOrder::Leftmost || count == 1) return 0;
        return std::uniform_int_distribution<std::size_t>(0, count - 1)(*rng);
    };

    // Each rewrite either shortens the sequence or turns a non-inverted pair
    // of plus ends into an inverted one, so this bound is never reached on
    // valid input.
    const std::size_t step_limit = 64 * (b.size() + 1) * (b.size() + 1) * (b.size() + 1);
    for (std::size_t step = 0;; ++step) {
        if (step > step_limit) throw std::logic_error("segment normalization did not terminate");
        std::vector<std::size_t> consecutive;
        for (std::size_t i = 0; i + 1 < b.size(); ++i)
            if (needs_rewrite(b[i], b[i + 1])) consecutive.push_back(i);
        if (!consecutive.empty()) {
            rewrite_consecutive(b, consecutive[pick(consecutive.size())], r);
            continue;
        }
        const auto distant = innermost_distant_pairs(b);
        if (distant.empty()) break;
        const auto [i, j] = distant[pick(distant.size())];
        std::swap(b[i + 1], b[j]);
        ++r.swaps;
        rewrite_consecutive(b, i, r);
    }

    // Outer segment first in every nested pair.
    std::stable_sort(b.begin(), b.end(), [](const ReebChord& x, const ReebChord& y) { return x.minus < y.minus; });
    r.segments = std::move(b);
    return r;
}

HalfInteger iota_of_segments(int num_points, std::span<const ReebChord> segments) {
    std::vector<ChordSet> singletons;
    for (const auto& c : segments) singletons.push_back(ChordSet::create({c}));
    return iota_sequence(num_points, singletons);
}

}  // namespace strandalg
