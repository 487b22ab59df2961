#ifndef STRANDALG_DIAGRAMS_HPP
#define STRANDALG_DIAGRAMS_HPP

#include <array>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "strandalg/algebra.hpp"
#include "strandalg/fraction.hpp"
#include "strandalg/grading.hpp"
#include "strandalg/pmc.hpp"

namespace strandalg {

/// Quadrants around an intersection point, counterclockwise from the sector
/// between the positive alpha and positive beta directions.
enum class Quadrant : int { NE = 0, NW = 1, SW = 2, SE = 3 };

struct IntersectionPoint {
    int id = 0;
    int alpha = 0;            // arc index 1..2k if on_arc, else circle index 1..g-k
    int beta = 0;             // beta circle 1..g
    bool on_arc = false;
};

/// One elementary region of the diagram (the basepoint region is not listed).
struct RegionData {
    int euler_char = 1;
    int convex_corners = 0;
    int concave_corners = 0;
    /// Point id -> quadrants of that point occupied by this region.
    std::map<int, std::vector<Quadrant>> quadrants;
    /// Multiplicity on each of the 4k-1 boundary segments; empty or all zero
    /// for interior regions.
    std::vector<int> boundary_segments;
};

/// The combinatorial data of a bordered Heegaard diagram.
class BorderedDiagram {
public:
    /// Validates references and counts; throws Error(InvalidDiagram).
    BorderedDiagram(PointedMatchedCircle pmc, int genus, std::vector<IntersectionPoint> points,
                    std::vector<RegionData> regions);

    const PointedMatchedCircle& pmc() const { return pmc_; }
    int genus() const { return genus_; }
    int num_alpha_arcs() const { return pmc_.num_handles(); }
    int num_alpha_circles() const { return genus_ - pmc_.genus(); }
    int num_beta() const { return genus_; }
    const std::vector<IntersectionPoint>& points() const { return points_; }
    const std::vector<RegionData>& regions() const { return regions_; }
    const IntersectionPoint& point(int id) const;

private:
    PointedMatchedCircle pmc_;
    int genus_;
    std::vector<IntersectionPoint> points_;
    std::vector<RegionData> regions_;
    std::map<int, std::size_t> index_of_point_;
};

/// Integer multiplicities, one per listed region.
struct BorderedDomain {
    std::vector<int> multiplicities;

    friend bool operator==(const BorderedDomain&, const BorderedDomain&) = default;
};

/// A set of intersection points (sorted ids), with the occupied alpha arcs.
struct Generator {
    std::vector<int> points;
    HandleSet occupied_arcs = 0;

    friend bool operator==(const Generator&, const Generator&) = default;
};

/// Validates a point set as a generator (one point per beta circle and per
/// alpha circle, at most one per alpha arc) and fills in occupied arcs.
std::optional<Generator> make_generator(const BorderedDiagram& d, std::vector<int> point_ids);

std::vector<Generator> enumerate_gens(const BorderedDiagram& d);

QuarterInteger euler_measure(const BorderedDiagram& d, const BorderedDomain& b);
/// n_x(B): a quarter of the quadrants at points of x covered by B.
QuarterInteger point_measure(const BorderedDiagram& d, const BorderedDomain& b, const Generator& x);
HomologyClass boundary_reeb(const BorderedDiagram& d, const BorderedDomain& b);

/// Corner defect (n_NE + n_SW) - (n_NW + n_SE) of B at point `id`.
int corner_defect(const BorderedDiagram& d, const BorderedDomain& b, int id);

/// B connects x to y: the corner defect is +1 on y \ x, -1 on x \ y, 0 elsewhere.
bool validate_domain(const BorderedDiagram& d, const BorderedDomain& b, const Generator& x, const Generator& y);

/// e(B) + n_x(B) + n_y(B) + iota(rho) + l. Throws Error(BoundaryMismatch) if
/// the boundary of B is not the total class of rho, Error(NonIntegralIndex)
/// if the result is not an integer.
std::int64_t index(const BorderedDiagram& d, const BorderedDomain& b, const Generator& x, const Generator& y,
                   std::span<const ChordSet> rho);

/// e(B) + n_x(B) + n_y(B) for a domain with no boundary segments; throws
/// Error(BoundaryNonzero) or Error(NonIntegralIndex).
std::int64_t closed_index(const BorderedDiagram& d, const BorderedDomain& b, const Generator& x,
                          const Generator& y);

}  // namespace strandalg

#endif
