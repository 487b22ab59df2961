#include "strandalg/render.hpp"

#include <algorithm>
#include <sstream>

namespace strandalg {

namespace {

DrawnSegment strand_segment(const StrandDrawing& d, int source, int target, bool dotted) {
    return {StrandDrawing::kLeft, d.level_y(source), StrandDrawing::kRight, d.level_y(target), dotted};
}

std::int64_t orient(std::int64_t ax, std::int64_t ay, std::int64_t bx, std::int64_t by, std::int64_t cx,
                    std::int64_t cy) {
    const std::int64_t v = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax);
    return (v > 0) - (v < 0);
}

bool properly_cross(const DrawnSegment& s, const DrawnSegment& t) {
    const auto o1 = orient(s.x1, s.y1, s.x2, s.y2, t.x1, t.y1);
    const auto o2 = orient(s.x1, s.y1, s.x2, s.y2, t.x2, t.y2);
    const auto o3 = orient(t.x1, t.y1, t.x2, t.y2, s.x1, s.y1);
    const auto o4 = orient(t.x1, t.y1, t.x2, t.y2, s.x2, s.y2);
    return o1 * o2 < 0 && o3 * o4 < 0;
}

void svg_header(std::ostringstream& out, std::int64_t w, std::int64_t h) {
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\" viewBox=\"0 0 "
        << w << ' ' << h << "\">\n";
    out << "<rect width=\"" << w << "\" height=\"" << h << "\" fill=\"white\"/>\n";
}

}  // namespace

StrandDrawing draw(const StrandDiagram& d) {
    StrandDrawing out;
    out.num_points = d.ambient();
    for (const auto& s : d.strands()) out.segments.push_back(strand_segment(out, s.source, s.target, false));
    return out;
}

StrandDrawing draw(const PointedMatchedCircle& pmc, const MatchedGenerator& g) {
    StrandDrawing out;
    out.num_points = pmc.num_points();
    HandleSet used = 0;
    for (const auto& c : g.chords.chords()) {
        out.segments.push_back(strand_segment(out, c.minus, c.plus, false));
        used |= handle_bit(pmc.handle(c.minus));
    }
    for (int h = 1; h <= pmc.num_handles(); ++h) {
        if (!(g.idempotent & handle_bit(h)) || (used & handle_bit(h))) continue;
        for (int p : pmc.points_of(h)) out.segments.push_back(strand_segment(out, p, p, true));
    }
    return out;
}

int count_crossings(const StrandDrawing& drawing) {
    int count = 0;
    const auto& segs = drawing.segments;
    for (std::size_t i = 0; i < segs.size(); ++i)
        for (std::size_t j = i + 1; j < segs.size(); ++j)
            if (!segs[i].dotted && !segs[j].dotted && properly_cross(segs[i], segs[j])) ++count;
    return count;
}

std::string to_svg(const StrandDrawing& drawing) {
    std::ostringstream out;
    svg_header(out, drawing.width(), drawing.height());
    for (int p = 1; p <= drawing.num_points; ++p) {
        const auto y = drawing.level_y(p);
        out << "<line class=\"level\" x1=\"" << StrandDrawing::kLeft << "\" y1=\"" << y << "\" x2=\""
            << StrandDrawing::kRight << "\" y2=\"" << y << "\" stroke=\"#bbbbbb\" stroke-dasharray=\"1,4\"/>\n";
        out << "<text x=\"" << StrandDrawing::kLeft - 20 << "\" y=\"" << y + 4 << "\" font-size=\"12\">" << p
            << "</text>\n";
    }
    for (const auto& s : drawing.segments) {
        out << "<line class=\"" << (s.dotted ? "horizontal" : "strand") << "\" x1=\"" << s.x1 << "\" y1=\"" << s.y1
            << "\" x2=\"" << s.x2 << "\" y2=\"" << s.y2 << "\" stroke=\"black\" stroke-width=\"2\"";
        if (s.dotted) out << " stroke-dasharray=\"4,4\"";
        out << "/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

std::string to_svg(const ChordArcDiagram& d) {
    constexpr std::int64_t step = 40, margin = 30;
    const std::int64_t panel = step * std::max(1, d.num_points) / 2 + margin;
    const std::int64_t w = 2 * margin + step * std::max(0, d.num_points - 1);
    const std::int64_t h = panel * static_cast<std::int64_t>(std::max<std::size_t>(1, d.layers.size())) + margin;
    const auto x_of = [&](int p) { return margin + step * (p - 1); };
    std::ostringstream out;
    svg_header(out, w, h);
    for (std::size_t l = 0; l < std::max<std::size_t>(1, d.layers.size()); ++l) {
        // Layer 0 is drawn at the bottom.
        const std::int64_t base = h - margin - panel * static_cast<std::int64_t>(l);
        out << "<line class=\"boundary\" x1=\"" << margin / 2 << "\" y1=\"" << base << "\" x2=\"" << w - margin / 2
            << "\" y2=\"" << base << "\" stroke=\"#888888\"/>\n";
        for (int p = 1; p <= d.num_points; ++p)
            out << "<circle cx=\"" << x_of(p) << "\" cy=\"" << base << "\" r=\"3\" fill=\"black\"/>\n";
        if (l >= d.layers.size()) continue;
        for (const auto& c : d.layers[l].chords()) {
            const std::int64_t r = (x_of(c.plus) - x_of(c.minus)) / 2;
            out << "<path class=\"chord\" d=\"M " << x_of(c.minus) << ' ' << base << " A " << r << ' ' << r
                << " 0 0 1 " << x_of(c.plus) << ' ' << base << "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n";
        }
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace strandalg
