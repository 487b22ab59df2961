#include "strandalg/diagrams.hpp"

#include <algorithm>
#include <string>

#include "strandalg/error.hpp"

namespace strandalg {

BorderedDiagram::BorderedDiagram(PointedMatchedCircle pmc, int genus, std::vector<IntersectionPoint> points,
                                 std::vector<RegionData> regions)
    : pmc_(std::move(pmc)), genus_(genus), points_(std::move(points)), regions_(std::move(regions)) {
    const auto bad = [](const std::string& why) { return Error(ErrorCode::InvalidDiagram, why); };
    if (genus_ < pmc_.genus()) throw bad("diagram genus below the boundary genus");
    for (std::size_t i = 0; i < points_.size(); ++i) {
        const auto& p = points_[i];
        if (!index_of_point_.emplace(p.id, i).second) throw bad("duplicate point id " + std::to_string(p.id));
        const int alpha_count = p.on_arc ? num_alpha_arcs() : num_alpha_circles();
        if (p.alpha < 1 || p.alpha > alpha_count)
            throw bad("point " + std::to_string(p.id) + " has alpha index " + std::to_string(p.alpha));
        if (p.beta < 1 || p.beta > num_beta())
            throw bad("point " + std::to_string(p.id) + " has beta index " + std::to_string(p.beta));
    }
    const std::size_t segs = static_cast<std::size_t>(pmc_.num_points() - 1);
    for (std::size_t r = 0; r < regions_.size(); ++r) {
        auto& region = regions_[r];
        if (region.boundary_segments.empty()) region.boundary_segments.assign(segs, 0);
        if (region.boundary_segments.size() != segs)
            throw bad("region " + std::to_string(r) + " has " + std::to_string(region.boundary_segments.size()) +
                      " boundary segments, expected " + std::to_string(segs));
        if (region.convex_corners < 0 || region.concave_corners < 0)
            throw bad("region " + std::to_string(r) + " has a negative corner count");
        for (const auto& [id, quads] : region.quadrants) {
            if (!index_of_point_.count(id))
                throw bad("region " + std::to_string(r) + " refers to unknown point " + std::to_string(id));
            if (quads.size() > 4) throw bad("more than four quadrants at point " + std::to_string(id));
        }
    }
}

const IntersectionPoint& BorderedDiagram::point(int id) const {
    const auto it = index_of_point_.find(id);
    if (it == index_of_point_.end()) throw Error(ErrorCode::InvalidDiagram, "unknown point " + std::to_string(id));
    return points_[it->second];
}

std::optional<Generator> make_generator(const BorderedDiagram& d, std::vector<int> point_ids) {
    std::sort(point_ids.begin(), point_ids.end());
    if (std::adjacent_find(point_ids.begin(), point_ids.end()) != point_ids.end()) return std::nullopt;
    std::vector<int> beta_hits(d.num_beta() + 1, 0), circle_hits(d.num_alpha_circles() + 1, 0);
    HandleSet arcs = 0;
    for (int id : point_ids) {
        const auto& p = d.point(id);
        ++beta_hits[p.beta];
        if (p.on_arc) {
            if (arcs & handle_bit(p.alpha)) return std::nullopt;
            arcs |= handle_bit(p.alpha);
        } else {
            ++circle_hits[p.alpha];
        }
    }
    for (int b = 1; b <= d.num_beta(); ++b)
        if (beta_hits[b] != 1) return std::nullopt;
    for (int a = 1; a <= d.num_alpha_circles(); ++a)
        if (circle_hits[a] != 1) return std::nullopt;
    return Generator{std::move(point_ids), arcs};
}

std::vector<Generator> enumerate_gens(const BorderedDiagram& d) {
    std::vector<std::vector<int>> on_beta(d.num_beta() + 1);
    for (const auto& p : d.points()) on_beta[p.beta].push_back(p.id);

    std::vector<Generator> out;
    std::vector<int> chosen;
    std::vector<bool> circle_used(d.num_alpha_circles() + 1, false);
    HandleSet arcs = 0;
    auto recurse = [&](auto&& self, int beta) -> void {
        if (beta > d.num_beta()) {
            // g points, one per alpha circle used at most once, so all circles are hit.
            auto g = make_generator(d, chosen);
            if (g) out.push_back(std::move(*g));
            return;
        }
        for (int id : on_beta[beta]) {
            const auto& p = d.point(id);
            if (p.on_arc ? (arcs & handle_bit(p.alpha)) != 0 : circle_used[p.alpha]) continue;
            if (p.on_arc) arcs |= handle_bit(p.alpha);
            else circle_used[p.alpha] = true;
            chosen.push_back(id);
            self(self, beta + 1);
            chosen.pop_back();
            if (p.on_arc) arcs &= ~handle_bit(p.alpha);
            else circle_used[p.alpha] = false;
        }
    };
    recurse(recurse, 1);
    std::sort(out.begin(), out.end(), [](const Generator& a, const Generator& b) { return a.points < b.points; });
    return out;
}

namespace {

void check_domain(const BorderedDiagram& d, const BorderedDomain& b) {
    if (b.multiplicities.size() != d.regions().size())
        throw Error(ErrorCode::InvalidDomain, "domain has " + std::to_string(b.multiplicities.size()) +
                                                  " multiplicities for " + std::to_string(d.regions().size()) +
                                                  " regions");
}

}  // namespace

QuarterInteger euler_measure(const BorderedDiagram& d, const BorderedDomain& b) {
    check_domain(d, b);
    QuarterInteger total;
    for (std::size_t r = 0; r < d.regions().size(); ++r) {
        const auto& region = d.regions()[r];
        const QuarterInteger e = QuarterInteger(region.euler_char) +
                                 QuarterInteger::from_scaled(region.concave_corners - region.convex_corners);
        total += b.multiplicities[r] * e;
    }
    return total;
}

QuarterInteger point_measure(const BorderedDiagram& d, const BorderedDomain& b, const Generator& x) {
    check_domain(d, b);
    std::int64_t quadrants = 0;
    for (std::size_t r = 0; r < d.regions().size(); ++r) {
        for (int id : x.points) {
            const auto it = d.regions()[r].quadrants.find(id);
            if (it != d.regions()[r].quadrants.end())
                quadrants += b.multiplicities[r] * static_cast<std::int64_t>(it->second.size());
        }
    }
    return QuarterInteger::from_scaled(quadrants);
}

HomologyClass boundary_reeb(const BorderedDiagram& d, const BorderedDomain& b) {
    check_domain(d, b);
    const int n = d.pmc().num_points();
    HomologyClass total(n);
    for (std::size_t r = 0; r < d.regions().size(); ++r)
        total += b.multiplicities[r] * HomologyClass(n, d.regions()[r].boundary_segments);
    return total;
}

int corner_defect(const BorderedDiagram& d, const BorderedDomain& b, int id) {
    check_domain(d, b);
    int defect = 0;
    for (std::size_t r = 0; r < d.regions().size(); ++r) {
        const auto it = d.regions()[r].quadrants.find(id);
        if (it == d.regions()[r].quadrants.end()) continue;
        for (Quadrant q : it->second) {
            const int sign = (q == Quadrant::NE || q == Quadrant::SW) ? 1 : -1;
            defect += sign * b.multiplicities[r];
        }
    }
    return defect;
}

bool validate_domain(const BorderedDiagram& d, const BorderedDomain& b, const Generator& x, const Generator& y) {
    const auto in = [](const Generator& g, int id) { return std::binary_search(g.points.begin(), g.points.end(), id); };
    for (const auto& p : d.points()) {
        const int expected = (in(y, p.id) ? 1 : 0) - (in(x, p.id) ? 1 : 0);
        if (corner_defect(d, b, p.id) != expected) return false;
    }
    return true;
}

std::int64_t index(const BorderedDiagram& d, const BorderedDomain& b, const Generator& x, const Generator& y,
                   std::span<const ChordSet> rho) {
    const int n = d.pmc().num_points();
    HomologyClass chords_total(n);
    for (const auto& r : rho) chords_total += homology_class(n, r);
    const HomologyClass bdy = boundary_reeb(d, b);
    if (bdy != chords_total)
        throw Error(ErrorCode::BoundaryMismatch, "domain boundary " + to_string(bdy) + " differs from chord class " +
                                                     to_string(chords_total));
    const QuarterInteger value = euler_measure(d, b) + point_measure(d, b, x) + point_measure(d, b, y) +
                                 QuarterInteger(iota_sequence(n, rho)) +
                                 QuarterInteger(static_cast<std::int64_t>(rho.size()));
    if (!value.is_integer())
        throw Error(ErrorCode::NonIntegralIndex, "index evaluates to " + value.to_string());
    return value.to_integer();
}

std::int64_t closed_index(const BorderedDiagram& d, const BorderedDomain& b, const Generator& x,
                          const Generator& y) {
    if (!boundary_reeb(d, b).is_zero())
        throw Error(ErrorCode::BoundaryNonzero, "domain has boundary on the pointed matched circle");
    const QuarterInteger value = euler_measure(d, b) + point_measure(d, b, x) + point_measure(d, b, y);
    if (!value.is_integer())
        throw Error(ErrorCode::NonIntegralIndex, "index evaluates to " + value.to_string());
    return value.to_integer();
}

}  // namespace strandalg
