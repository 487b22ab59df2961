#ifndef STRANDALG_ALGEBRA_HPP
#define STRANDALG_ALGEBRA_HPP

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "strandalg/pmc.hpp"
#include "strandalg/strands.hpp"

namespace strandalg {

/// Oriented arc [minus, plus] on the circle minus the basepoint.
struct ReebChord {
    int minus = 0;
    int plus = 0;

    /// Throws Error(InvalidChord) unless 1 <= minus < plus <= num_points.
    static ReebChord create(int minus, int plus, int num_points);

    friend bool operator==(const ReebChord&, const ReebChord&) = default;
    friend auto operator<=>(const ReebChord&, const ReebChord&) = default;
};

std::string to_string(const ReebChord& c);

enum class ChordRelation {
    Nested,
    Interleaved,
    AbutsForward,   // first.plus == second.minus
    AbutsBackward,  // second.plus == first.minus
    Disjoint,
    SharedEndpoint,  // common minus or common plus endpoint (or equal chords)
};

std::string_view to_string(ChordRelation r);

ChordRelation classify_pair(const ReebChord& first, const ReebChord& second);

/// A consistent set of Reeb chords: minus endpoints pairwise distinct and
/// plus endpoints pairwise distinct. Chords are kept sorted.
class ChordSet {
public:
    ChordSet() = default;

    /// Throws Error(InconsistentChords) if endpoints repeat.
    static ChordSet create(std::vector<ReebChord> chords);
    static bool is_consistent(std::span<const ReebChord> chords);

    const std::vector<ReebChord>& chords() const { return chords_; }
    std::size_t size() const { return chords_.size(); }
    bool empty() const { return chords_.empty(); }
    PointMask minus_points() const;
    PointMask plus_points() const;

    friend bool operator==(const ChordSet&, const ChordSet&) = default;
    friend auto operator<=>(const ChordSet&, const ChordSet&) = default;

private:
    std::vector<ReebChord> chords_;
};

std::string to_string(const ChordSet& rho);

/// Union of the two sets with every abutting pair (r in rho, s in sigma,
/// r.plus == s.minus) replaced by [r.minus, s.plus]. Throws
/// Error(InconsistentResult) if the result is not consistent.
ChordSet join_sets(const ChordSet& rho, const ChordSet& sigma);

/// The algebra element I(s) a(rho) in matched form; interpreted relative to
/// a pointed matched circle supplied alongside.
struct MatchedGenerator {
    HandleSet idempotent = 0;
    ChordSet chords;

    friend bool operator==(const MatchedGenerator&, const MatchedGenerator&) = default;
    friend auto operator<=>(const MatchedGenerator&, const MatchedGenerator&) = default;
};

std::string to_string(const MatchedGenerator& g);

/// M injective on rho- and rho+, M(rho-) in s, (s \ M(rho-)) disjoint from M(rho+).
bool satisfies_nonzero_criterion(const PointedMatchedCircle& pmc, const MatchedGenerator& g);

/// t = M(rho+) u (s \ M(rho-)).
HandleSet target_idempotent(const PointedMatchedCircle& pmc, const MatchedGenerator& g);

/// The sum of strand diagrams represented by I(s) a(rho). Zero exactly when
/// the nonzero criterion fails.
AlgebraElement expand_generator(const PointedMatchedCircle& pmc, const MatchedGenerator& g);

/// Product computed on expansions.
AlgebraElement mul(const PointedMatchedCircle& pmc, const MatchedGenerator& g1, const MatchedGenerator& g2);

/// The generator I(s1) a(rho u+ sigma) predicted by the join rule, when the
/// idempotents match and the join is consistent.
std::optional<MatchedGenerator> joined_generator(const PointedMatchedCircle& pmc, const MatchedGenerator& g1,
                                                 const MatchedGenerator& g2);

AlgebraElement diff(const PointedMatchedCircle& pmc, const MatchedGenerator& g);

/// Rewrites an element of the matched algebra as a sum of generators.
/// Returns nullopt if the element is not a sum of complete expansions.
std::optional<std::vector<MatchedGenerator>> decompose(const PointedMatchedCircle& pmc, const AlgebraElement& a);

/// Every consistent chord set on `num_points` points with at most
/// `max_chords` chords, in sorted order.
std::vector<ChordSet> all_consistent_chord_sets(int num_points, int max_chords);

struct GeneratorFilter {
    std::optional<int> idempotent_size;
    std::optional<int> chord_count;
};

/// All (s, rho) with nonzero expansion, sorted by idempotent then chord set.
std::vector<MatchedGenerator> enumerate_generators(const PointedMatchedCircle& pmc,
                                                   const GeneratorFilter& filter = {});

}  // namespace strandalg

#endif
