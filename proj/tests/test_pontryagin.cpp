#include <doctest.h>

#include <random>
#include <set>

#include "strandalg/error.hpp"
#include "strandalg/pontryagin.hpp"

using namespace strandalg;

namespace {

ReebChord chord(int a, int b, int n = 4) { return ReebChord::create(a, b, n); }

ChordSet chords(std::vector<std::pair<int, int>> cs, int n = 4) {
    std::vector<ReebChord> out;
    for (auto [a, b] : cs) out.push_back(chord(a, b, n));
    return ChordSet::create(out);
}

HalfInteger half(int twice) { return HalfInteger::from_scaled(twice); }

HomologyClass cls(std::vector<int> v) {
    const int n = static_cast<int>(v.size()) + 1;
    return HomologyClass(n, std::move(v));
}

// Interval form of the crossing test: the shifted endpoint c + delta lies in
// (a, b) exactly when a <= c < b; the arcs cross when exactly one endpoint of
// the shifted arc lies inside the other span.
int crossing_by_intervals(const ReebChord& arc, const ReebChord& shifted) {
    const auto inside = [&](int c) { return arc.minus <= c && c < arc.plus; };
    return inside(shifted.minus) != inside(shifted.plus) ? -1 : 0;
}

std::vector<ReebChord> random_consistent_sequence(std::mt19937_64& rng, int n, int length) {
    for (;;) {
        std::vector<int> pts(n);
        for (int i = 0; i < n; ++i) pts[i] = i + 1;
        std::shuffle(pts.begin(), pts.end(), rng);
        std::vector<int> minus(pts.begin(), pts.begin() + length);
        std::shuffle(pts.begin(), pts.end(), rng);
        std::vector<int> plus(pts.begin(), pts.begin() + length);
        std::vector<ReebChord> out;
        for (int i = 0; i < length; ++i) {
            if (minus[i] >= plus[i]) break;
            out.push_back(ReebChord::create(minus[i], plus[i], n));
        }
        if (static_cast<int>(out.size()) == length) return out;
    }
}

bool has_bad_pair(const std::vector<ReebChord>& b) {
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = i + 1; j < b.size(); ++j) {
            const auto r = classify_pair(b[i], b[j]);
            if (r == ChordRelation::Interleaved || r == ChordRelation::AbutsForward || r == ChordRelation::AbutsBackward)
                return true;
            // Nested with the inner segment first.
            if (r == ChordRelation::Nested && b[j].minus < b[i].minus) return true;
        }
    return false;
}

}  // namespace

TEST_CASE("crossing counts") {
    CHECK(crossing_count(chord(1, 2), chord(1, 2)) == -1);
    CHECK(crossing_count(chord(1, 3), chord(2, 4)) == -1);
    CHECK(crossing_count(chord(2, 4), chord(1, 3)) == -1);
    CHECK(crossing_count(chord(1, 2), chord(2, 3)) == 0);
    CHECK(crossing_count(chord(2, 3), chord(1, 2)) == -1);
    CHECK(crossing_count(chord(1, 4), chord(2, 3)) == 0);
    CHECK(crossing_count(chord(1, 2), chord(3, 4)) == 0);
    for (int a = 1; a <= 8; ++a)
        for (int b = a + 1; b <= 8; ++b)
            for (int c = 1; c <= 8; ++c)
                for (int d = c + 1; d <= 8; ++d)
                    CHECK(crossing_count(chord(a, b, 8), chord(c, d, 8)) ==
                          crossing_by_intervals(chord(a, b, 8), chord(c, d, 8)));
}

TEST_CASE("maslov and spin-c components") {
    CHECK(maslov_component(chords({{1, 2}})) == half(-1));
    CHECK(maslov_component(chords({{1, 3}, {2, 4}})) == -2);
    CHECK(maslov_component(chords({{1, 2}, {2, 3}})) == half(-3));
    CHECK(maslov_component(chords({})) == 0);
    CHECK(spin_c_component(4, chords({{1, 3}})) == cls({1, 1, 0}));
    CHECK(spin_c_component(4, chords({})) == cls({0, 0, 0}));
    CHECK(spin_c_component(4, chords({{1, 2}, {3, 4}})) == cls({1, 0, 1}));
    for (int n : {4, 8})
        for (const auto& rho : all_consistent_chord_sets(n, n)) {
            CHECK(maslov_component(rho) == iota_chordset(rho));
            CHECK(spin_c_component(n, rho) == homology_class(n, rho));
        }
}

TEST_CASE("layer composition") {
    const ChordArcDiagram d1{4, {chords({{1, 3}}), chords({{2, 4}})}};
    CHECK(compose_layers(d1) == GradingElement(0, cls({1, 2, 1})));
    const ChordArcDiagram d2{4, {chords({{1, 3}, {2, 4}})}};
    CHECK(compose_layers(d2) == GradingElement(-2, cls({1, 2, 1})));
    const ChordArcDiagram d3{4, {chords({{1, 2}}), chords({{2, 3}})}};
    CHECK(compose_layers(d3) == GradingElement(half(-1), cls({1, 1, 0})));
    const auto torus = PointedMatchedCircle::create(4, {1, 2, 1, 2});
    CHECK(compose_layers(d3) == grade(torus, MatchedGenerator{handle_bit(1), chords({{1, 3}})}));
    CHECK(compose_layers(ChordArcDiagram{4, {}}) == GradingElement::identity(4));
}

TEST_CASE("layer composition is a homomorphism (genus 1 composable pairs)") {
    const auto torus = PointedMatchedCircle::create(4, {1, 2, 1, 2});
    const auto gens = enumerate_generators(torus);
    int composable = 0;
    for (const auto& a : gens)
        for (const auto& b : gens) {
            if (target_idempotent(torus, a) != b.idempotent) continue;
            ++composable;
            const ChordArcDiagram stacked{4, {a.chords, b.chords}};
            CHECK(compose_layers(stacked) == grade(torus, a) * grade(torus, b));
            const auto p = mul(torus, a, b);
            if (!p.is_zero()) CHECK(compose_layers(stacked) == grade(p.terms().front()));
        }
    CHECK(composable > 0);
}

TEST_CASE("crossing resolution") {
    CHECK(resolve_crossing_framing(chords({{1, 4}, {2, 3}}), chords({{1, 3}, {2, 4}})) == -1);
    CHECK(resolve_crossing_framing(chords({{1, 3}}), chords({{1, 2}, {2, 3}})) == -1);
    CHECK_THROWS_AS(resolve_crossing_framing(chords({{1, 4}, {2, 3}}), chords({{1, 4}, {2, 3}})), Error);
    // Swapping the plus ends of the outer pair [1,8], [3,6] removes all three
    // crossings; swapping [1,8], [2,7] removes one.
    CHECK_THROWS_AS(
        resolve_crossing_framing(chords({{1, 8}, {2, 7}, {3, 6}}, 8), chords({{1, 6}, {2, 7}, {3, 8}}, 8)), Error);
    CHECK(resolve_crossing_framing(chords({{1, 8}, {2, 7}, {3, 6}}, 8), chords({{1, 7}, {2, 8}, {3, 6}}, 8)) == -1);
    CHECK_THROWS_AS(resolve_crossing_framing(chords({{1, 3}}), chords({{2, 4}})), Error);

    // Every valid resolution of a genus-2 chord set changes the framing by -1.
    int resolutions = 0;
    for (const auto& rho : all_consistent_chord_sets(8, 8)) {
        const auto& cs = rho.chords();
        for (std::size_t i = 0; i < cs.size(); ++i)
            for (std::size_t j = 0; j < cs.size(); ++j) {
                if (!(cs[i].minus < cs[j].minus && cs[j].plus < cs[i].plus)) continue;
                auto swapped = cs;
                std::swap(swapped[i].plus, swapped[j].plus);
                const auto after = ChordSet::create(swapped);
                std::vector<Strand> before_strands, after_strands;
                for (const auto& c : cs) before_strands.push_back({c.minus, c.plus});
                for (const auto& c : swapped) after_strands.push_back({c.minus, c.plus});
                const int drop = StrandDiagram::create(8, before_strands).inversions() -
                                 StrandDiagram::create(8, after_strands).inversions();
                if (drop == 1) {
                    CHECK(resolve_crossing_framing(rho, after) == -1);
                    ++resolutions;
                } else {
                    CHECK_THROWS_AS(resolve_crossing_framing(rho, after), Error);
                }
            }
    }
    CHECK(resolutions > 100);
}

TEST_CASE("normalization examples") {
    const std::vector<ReebChord> s1{chord(2, 3), chord(1, 2)};
    const auto r1 = normalize_segments(s1);
    CHECK(r1.segments == std::vector<ReebChord>{chord(1, 3)});
    CHECK(r1.abutting_negative == 1);
    CHECK(r1.interleaved_positive == 0);
    CHECK(r1.interleaved_negative == 0);
    CHECK(r1.predicted_iota() == half(-3));
    CHECK(iota_of_segments(4, s1) == half(-3));

    const std::vector<ReebChord> s2{chord(1, 3), chord(2, 4)};
    const auto r2 = normalize_segments(s2);
    CHECK(r2.segments == std::vector<ReebChord>{chord(1, 4), chord(2, 3)});
    CHECK(r2.interleaved_positive == 1);
    CHECK(r2.predicted_iota() == 0);
    CHECK(iota_of_segments(4, s2) == 0);

    const std::vector<ReebChord> s3{chord(1, 2)};
    const auto r3 = normalize_segments(s3);
    CHECK(r3.segments == s3);
    CHECK(r3.abutting_negative + r3.interleaved_positive + r3.interleaved_negative == 0);
    CHECK(r3.predicted_iota() == half(-1));
}

TEST_CASE("normalization identity under both orders (randomized)") {
    std::mt19937_64 rng(1);
    int cases = 0;
    for (int trial = 0; trial < 3000; ++trial) {
        const int n = trial % 2 == 0 ? 4 : 8;
        const int length = 1 + static_cast<int>(rng() % std::min(5, n - 1));
        const auto seq = random_consistent_sequence(rng, n, length);
        const HalfInteger expected = iota_of_segments(n, seq);
        for (auto order : {NormalizeOrder::Leftmost, NormalizeOrder::Random}) {
            const auto r = normalize_segments(seq, order, &rng);
            CHECK(r.predicted_iota() == expected);
            CHECK_FALSE(has_bad_pair(r.segments));
            CHECK(homology_class(n, ChordSet::create(r.segments)) == homology_class(n, ChordSet::create(seq)));
        }
        ++cases;
    }
    CHECK(cases >= 1000);
}

TEST_CASE("normalization terminates on arbitrary sequences") {
    std::mt19937_64 rng(2);
    std::uniform_int_distribution<int> pt(1, 8);
    for (int trial = 0; trial < 2000; ++trial) {
        std::vector<ReebChord> seq;
        const int length = 1 + trial % 5;
        while (static_cast<int>(seq.size()) < length) {
            const int a = pt(rng), b = pt(rng);
            if (a < b) seq.push_back(chord(a, b, 8));
        }
        for (auto order : {NormalizeOrder::Leftmost, NormalizeOrder::Random})
            CHECK_NOTHROW(normalize_segments(seq, order, &rng));
    }
}
