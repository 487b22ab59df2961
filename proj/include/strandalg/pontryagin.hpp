#ifndef STRANDALG_PONTRYAGIN_HPP
#define STRANDALG_PONTRYAGIN_HPP

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "strandalg/algebra.hpp"
#include "strandalg/grading.hpp"

namespace strandalg {

// Diagrammatic model of the Maslov component. Each chord is drawn as an
// upper semicircle over its span on the boundary line; its framing pushoff is
// the same semicircle shifted right by an infinitesimal delta. Crossings
// between an arc and a pushoff are counted with sign -1.

/// Signed crossings between the semicircle over `arc` and the delta-shifted
/// pushoff of `pushoff_of`. Either 0 or -1.
int crossing_count(const ReebChord& arc, const ReebChord& pushoff_of);

/// Half the total signed crossing count over all ordered pairs of chords,
/// including each chord with its own pushoff.
HalfInteger maslov_component(const ChordSet& rho);

HomologyClass spin_c_component(int num_points, const ChordSet& rho);

/// Chord arcs stacked in ordered layers; layer 0 is the bottom.
struct ChordArcDiagram {
    int num_points = 0;
    std::vector<ChordSet> layers;
};

/// Grading of the stacked diagram: same-layer terms from crossing counts,
/// cross-layer terms from the L pairing.
GradingElement compose_layers(const ChordArcDiagram& d);

/// Change of framing when `after` resolves one crossing of `before`, i.e.
/// maslov_component(after) - maslov_component(before). A resolution either
/// swaps the plus ends of a nested pair or splits one chord at a point that
/// is not an endpoint of any chord (a crossing with a horizontal strand); in
/// both cases the inversion count must drop by exactly one. Throws
/// Error(NotAResolution) otherwise.
int resolve_crossing_framing(const ChordSet& before, const ChordSet& after);

enum class NormalizeOrder {
    Leftmost,  // always act on the leftmost eligible pair
    Random,    // pick uniformly among eligible pairs
};

struct NormalizationResult {
    std::vector<ReebChord> segments;  // final segments b_1..b_m
    int abutting_negative = 0;        // A-: negatively abutting pairs concatenated
    int abutting_positive = 0;
    int interleaved_positive = 0;  // I+
    int interleaved_negative = 0;  // I-
    int swaps = 0;

    /// -m/2 - A- + I+ - I-.
    HalfInteger predicted_iota() const;
};

/// Rewrites a sequence of segments until no abutting or interleaved pairs
/// remain, then orders them so no nested pair is negative. `rng` is only
/// used with NormalizeOrder::Random.
NormalizationResult normalize_segments(std::span<const ReebChord> segments,
                                       NormalizeOrder order = NormalizeOrder::Leftmost,
                                       std::mt19937_64* rng = nullptr);

/// iota of the sequence of singleton chord sets.
HalfInteger iota_of_segments(int num_points, std::span<const ReebChord> segments);

}  // namespace strandalg

#endif
