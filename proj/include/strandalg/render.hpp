#ifndef STRANDALG_RENDER_HPP
#define STRANDALG_RENDER_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "strandalg/algebra.hpp"
#include "strandalg/pontryagin.hpp"
#include "strandalg/strands.hpp"

namespace strandalg {

/// A straight segment in integer canvas coordinates (y grows downwards).
struct DrawnSegment {
    std::int64_t x1 = 0, y1 = 0, x2 = 0, y2 = 0;
    bool dotted = false;  // horizontal pair of an unoccupied matched handle
};

/// Strand picture: point p sits at height level_y(p) on the left and right
/// edges; every strand is the straight segment between its endpoints, which
/// realizes each inversion as exactly one crossing.
struct StrandDrawing {
    int num_points = 0;
    std::vector<DrawnSegment> segments;

    static constexpr std::int64_t kLeft = 40;
    static constexpr std::int64_t kRight = 200;
    static constexpr std::int64_t kStep = 40;
    static constexpr std::int64_t kMargin = 30;
    std::int64_t level_y(int p) const { return kMargin + kStep * (num_points - p); }
    std::int64_t width() const { return kRight + kLeft; }
    std::int64_t height() const { return 2 * kMargin + kStep * (num_points > 0 ? num_points - 1 : 0); }
};

StrandDrawing draw(const StrandDiagram& d);
/// Solid strands for the chords of g, dotted horizontal pairs at both points
/// of every handle in s \ M(rho-).
StrandDrawing draw(const PointedMatchedCircle& pmc, const MatchedGenerator& g);

/// Proper intersections between solid segments of the drawing (shared
/// endpoints do not count).
int count_crossings(const StrandDrawing& drawing);

std::string to_svg(const StrandDrawing& drawing);
/// Chord arcs as upper semicircles over the boundary line, one panel per layer.
std::string to_svg(const ChordArcDiagram& d);

}  // namespace strandalg

#endif
