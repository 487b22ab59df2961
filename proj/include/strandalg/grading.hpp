#ifndef STRANDALG_GRADING_HPP
#define STRANDALG_GRADING_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "strandalg/algebra.hpp"
#include "strandalg/fraction.hpp"
#include "strandalg/pmc.hpp"
#include "strandalg/strands.hpp"

namespace strandalg {

/// A class in H_1(Z \ z, a): multiplicities on the 4k-1 segments between
/// consecutive points. Segment i lies between points i and i+1.
class HomologyClass {
public:
    HomologyClass() = default;
    explicit HomologyClass(int num_points);
    /// Throws Error(BadSize) if the vector length is not num_points - 1.
    HomologyClass(int num_points, std::vector<int> segments);

    int num_points() const { return num_points_; }
    const std::vector<int>& segments() const { return segments_; }
    bool is_zero() const;

    /// Multiplicity on segment i; 0 for the two segments touching the basepoint
    /// (i = 0 and i = num_points).
    int segment(int i) const;

    HomologyClass& operator+=(const HomologyClass& o);
    HomologyClass& operator-=(const HomologyClass& o);
    HomologyClass operator-() const;
    friend HomologyClass operator+(HomologyClass a, const HomologyClass& b) { return a += b; }
    friend HomologyClass operator-(HomologyClass a, const HomologyClass& b) { return a -= b; }
    friend HomologyClass operator*(int k, HomologyClass a);

    friend bool operator==(const HomologyClass&, const HomologyClass&) = default;

private:
    int num_points_ = 0;
    std::vector<int> segments_;
};

std::string to_string(const HomologyClass& a);

HomologyClass homology_class(const StrandDiagram& d);
HomologyClass homology_class(int num_points, const ReebChord& c);
HomologyClass homology_class(int num_points, const ChordSet& rho);

/// Boundary map into H_0(a): entry p-1 is the coefficient of point p, so the
/// class of [a, b] has boundary b - a.
std::vector<int> boundary(const HomologyClass& alpha);

/// m(p, alpha): average of the multiplicities on the two sides of p.
HalfInteger point_multiplicity(int p, const HomologyClass& alpha);
HalfInteger point_multiplicity(PointMask points, const HomologyClass& alpha);

/// L(alpha1, alpha2) = m(boundary alpha1, alpha2).
HalfInteger pairing_L(const HomologyClass& alpha1, const HomologyClass& alpha2);

/// A quarter of the number of points where the parity of alpha changes,
/// reduced mod 1 (so either 0 or 1/2).
HalfInteger epsilon(const HomologyClass& alpha);

/// inv(a) - m(S, [a]).
HalfInteger iota_strands(const StrandDiagram& d);
/// -|rho|/2 - |abutting pairs|/2 - |interleaved pairs|.
HalfInteger iota_chordset(const ChordSet& rho);
/// Sum of iota over the entries plus L over every ordered pair of chords
/// taken from earlier and later entries.
HalfInteger iota_sequence(int num_points, std::span<const ChordSet> sequence);

/// An element (j, alpha) of G'(4k). Construction enforces epsilon(alpha) = j mod 1.
class GradingElement {
public:
    /// Throws Error(EpsilonViolation).
    GradingElement(HalfInteger maslov, HomologyClass spin_c);
    static GradingElement identity(int num_points) { return {0, HomologyClass(num_points)}; }
    static GradingElement lambda(int num_points, int n = 1) { return {n, HomologyClass(num_points)}; }

    HalfInteger maslov() const { return maslov_; }
    const HomologyClass& spin_c() const { return spin_c_; }
    int num_points() const { return spin_c_.num_points(); }

    /// (j1 + j2 + L(alpha1, alpha2), alpha1 + alpha2).
    friend GradingElement compose(const GradingElement& g1, const GradingElement& g2);
    friend GradingElement operator*(const GradingElement& g1, const GradingElement& g2) { return compose(g1, g2); }
    friend bool operator==(const GradingElement&, const GradingElement&) = default;

private:
    HalfInteger maslov_;
    HomologyClass spin_c_;
};

GradingElement compose(const GradingElement& g1, const GradingElement& g2);
GradingElement inverse(const GradingElement& g);
/// lambda^n * g.
GradingElement lambda_pow(int n, const GradingElement& g);

std::string to_string(const GradingElement& g);

/// gr'(d) = (iota(d), [d]).
GradingElement grade(const StrandDiagram& d);
/// Grades every expansion term and checks they agree. Throws
/// Error(ZeroGenerator) if the generator expands to zero.
GradingElement grade(const PointedMatchedCircle& pmc, const MatchedGenerator& g);

/// Minimal idempotent pair (s, t) with M_*(boundary alpha) = t - s. Any
/// other solution adds the same set of handles, disjoint from both, to s and t.
struct RefinedMembership {
    HandleSet source = 0;
    HandleSet target = 0;
    bool diagonal = false;  // M_*(boundary alpha) = 0: every (s, s) is admissible

    /// Whether (s, t) solves M_*(boundary alpha) = t - s.
    bool admits(HandleSet s, HandleSet t) const;
};

std::optional<RefinedMembership> refined_membership(const GradingElement& g, const PointedMatchedCircle& pmc);

}  // namespace strandalg

#endif
