#include "strandalg/algebra.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "strandalg/error.hpp"

namespace strandalg {

ReebChord ReebChord::create(int minus, int plus, int num_points) {
    if (minus < 1 || plus <= minus || plus > num_points)
        throw Error(ErrorCode::InvalidChord, "[" + std::to_string(minus) + "," + std::to_string(plus) +
                                                 "] is not a chord on " + std::to_string(num_points) + " points");
    return {minus, plus};
}

std::string to_string(const ReebChord& c) {
    return "[" + std::to_string(c.minus) + "," + std::to_string(c.plus) + "]";
}

std::string_view to_string(ChordRelation r) {
    switch (r) {
        case ChordRelation::Nested: return "nested";
        case ChordRelation::Interleaved: return "interleaved";
        case ChordRelation::AbutsForward: return "abutting(first->second)";
        case ChordRelation::AbutsBackward: return "abutting(second->first)";
        case ChordRelation::Disjoint: return "disjoint";
        case ChordRelation::SharedEndpoint: return "shares-other-endpoint";
    }
    return "unknown";
}

ChordRelation classify_pair(const ReebChord& a, const ReebChord& b) {
    if (a.plus == b.minus) return ChordRelation::AbutsForward;
    if (b.plus == a.minus) return ChordRelation::AbutsBackward;
    if (a.minus == b.minus || a.plus == b.plus) return ChordRelation::SharedEndpoint;
    const auto& [lo, hi] = a.minus < b.minus ? std::pair{a, b} : std::pair{b, a};
    if (hi.minus > lo.plus) return ChordRelation::Disjoint;
    return hi.plus < lo.plus ? ChordRelation::Nested : ChordRelation::Interleaved;
}

ChordSet ChordSet::create(std::vector<ReebChord> chords) {
    if (!is_consistent(chords)) {
        std::string listing;
        for (const auto& c : chords) listing += to_string(c);
        throw Error(ErrorCode::InconsistentChords, "chord endpoints repeat in {" + listing + "}");
    }
    for (const auto& c : chords)
        if (c.minus < 1 || c.plus <= c.minus || c.plus > kMaxPoints)
            throw Error(ErrorCode::InvalidChord, to_string(c) + " is not a chord");
    ChordSet s;
    s.chords_ = std::move(chords);
    std::sort(s.chords_.begin(), s.chords_.end());
    return s;
}

bool ChordSet::is_consistent(std::span<const ReebChord> chords) {
    PointMask minus = 0, plus = 0;
    for (const auto& c : chords) {
        if (c.minus < 1 || c.minus > kMaxPoints || c.plus < 1 || c.plus > kMaxPoints) return false;
        if ((minus & point_bit(c.minus)) || (plus & point_bit(c.plus))) return false;
        minus |= point_bit(c.minus);
        plus |= point_bit(c.plus);
    }
    return true;
}

PointMask ChordSet::minus_points() const {
    PointMask m = 0;
    for (const auto& c : chords_) m |= point_bit(c.minus);
    return m;
}

PointMask ChordSet::plus_points() const {
    PointMask m = 0;
    for (const auto& c : chords_) m |= point_bit(c.plus);
    return m;
}

std::string to_string(const ChordSet& rho) {
    std::string out = "{";
    for (std::size_t i = 0; i < rho.size(); ++i) out += (i ? "," : "") + to_string(rho.chords()[i]);
    return out + "}";
}

ChordSet join_sets(const ChordSet& rho, const ChordSet& sigma) {
    std::vector<ReebChord> out;
    std::vector<bool> used(sigma.size(), false);
    for (const auto& r : rho.chords()) {
        ReebChord joined = r;
        for (std::size_t j = 0; j < sigma.size(); ++j) {
            if (sigma.chords()[j].minus == r.plus) {
                joined.plus = sigma.chords()[j].plus;
                used[j] = true;
                break;
            }
        }
        out.push_back(joined);
    }
    for (std::size_t j = 0; j < sigma.size(); ++j)
        if (!used[j]) out.push_back(sigma.chords()[j]);
    if (!ChordSet::is_consistent(out))
        throw Error(ErrorCode::InconsistentResult,
                    "join of " + to_string(rho) + " and " + to_string(sigma) + " is not consistent");
    return ChordSet::create(std::move(out));
}

std::string to_string(const MatchedGenerator& g) {
    std::string s = "I({";
    bool first = true;
    for (int h = 1; h <= kMaxPoints; ++h) {
        if (g.idempotent & handle_bit(h)) {
            s += (first ? "" : ",") + std::to_string(h);
            first = false;
        }
    }
    return s + "})a(" + to_string(g.chords) + ")";
}

namespace {

// Image of `points` under the matching if it is injective there.
std::optional<HandleSet> injective_image(const PointedMatchedCircle& pmc, PointMask points) {
    const HandleSet image = pmc.handles_of(points);
    if (std::popcount(image) != std::popcount(points)) return std::nullopt;
    return image;
}

bool chords_fit(const PointedMatchedCircle& pmc, const ChordSet& rho) {
    for (const auto& c : rho.chords())
        if (c.plus > pmc.num_points()) return false;
    return true;
}

}  // namespace

bool satisfies_nonzero_criterion(const PointedMatchedCircle& pmc, const MatchedGenerator& g) {
    if (!chords_fit(pmc, g.chords) || (g.idempotent & ~pmc.all_handles())) return false;
    const auto minus = injective_image(pmc, g.chords.minus_points());
    const auto plus = injective_image(pmc, g.chords.plus_points());
    if (!minus || !plus) return false;
    if ((*minus & ~g.idempotent) != 0) return false;
    return ((g.idempotent & ~*minus) & *plus) == 0;
}

HandleSet target_idempotent(const PointedMatchedCircle& pmc, const MatchedGenerator& g) {
    return pmc.handles_of(g.chords.plus_points()) | (g.idempotent & ~pmc.handles_of(g.chords.minus_points()));
}

AlgebraElement expand_generator(const PointedMatchedCircle& pmc, const MatchedGenerator& g) {
    const int n = pmc.num_points();
    if (!satisfies_nonzero_criterion(pmc, g)) return AlgebraElement(n);

    std::vector<Strand> base;
    for (const auto& c : g.chords.chords()) base.push_back({c.minus, c.plus});
    std::vector<int> free_handles;
    const HandleSet horizontal = g.idempotent & ~pmc.handles_of(g.chords.minus_points());
    for (int h = 1; h <= pmc.num_handles(); ++h)
        if (horizontal & handle_bit(h)) free_handles.push_back(h);

    // One horizontal strand per free handle, at either of its two points.
    std::vector<StrandDiagram> terms;
    const std::uint32_t choices = std::uint32_t{1} << free_handles.size();
    for (std::uint32_t choice = 0; choice < choices; ++choice) {
        auto strands = base;
        for (std::size_t i = 0; i < free_handles.size(); ++i) {
            const int p = pmc.points_of(free_handles[i])[(choice >> i) & 1];
            strands.push_back({p, p});
        }
        terms.push_back(StrandDiagram::create(n, strands));
    }
    return AlgebraElement(n, std::move(terms));
}

AlgebraElement mul(const PointedMatchedCircle& pmc, const MatchedGenerator& g1, const MatchedGenerator& g2) {
    return multiply(expand_generator(pmc, g1), expand_generator(pmc, g2));
}

std::optional<MatchedGenerator> joined_generator(const PointedMatchedCircle& pmc, const MatchedGenerator& g1,
                                                 const MatchedGenerator& g2) {
    if (target_idempotent(pmc, g1) != g2.idempotent) return std::nullopt;
    try {
        return MatchedGenerator{g1.idempotent, join_sets(g1.chords, g2.chords)};
    } catch (const Error&) {
        return std::nullopt;
    }
}

AlgebraElement diff(const PointedMatchedCircle& pmc, const MatchedGenerator& g) {
    return differential(expand_generator(pmc, g));
}

std::optional<std::vector<MatchedGenerator>> decompose(const PointedMatchedCircle& pmc, const AlgebraElement& a) {
    std::map<MatchedGenerator, std::vector<StrandDiagram>> groups;
    for (const auto& d : a.terms()) {
        if (d.ambient() != pmc.num_points()) return std::nullopt;
        std::vector<ReebChord> chords;
        for (const auto& s : d.strands())
            if (s.target != s.source) chords.push_back({s.source, s.target});
        const auto image = injective_image(pmc, d.sources());
        if (!image) return std::nullopt;
        groups[{*image, ChordSet::create(std::move(chords))}].push_back(d);
    }
    std::vector<MatchedGenerator> out;
    for (auto& [g, terms] : groups) {
        if (expand_generator(pmc, g) != AlgebraElement(pmc.num_points(), terms)) return std::nullopt;
        out.push_back(g);
    }
    return out;
}

std::vector<ChordSet> all_consistent_chord_sets(int num_points, int max_chords) {
    std::vector<ChordSet> out;
    std::vector<ReebChord> current;
    PointMask used_plus = 0;
    auto recurse = [&](auto&& self, int minus) -> void {
        if (minus > num_points) {
            out.push_back(ChordSet::create(current));
            return;
        }
        self(self, minus + 1);
        if (static_cast<int>(current.size()) >= max_chords) return;
        for (int plus = minus + 1; plus <= num_points; ++plus) {
            if (used_plus & point_bit(plus)) continue;
            used_plus |= point_bit(plus);
            current.push_back({minus, plus});
            self(self, minus + 1);
            current.pop_back();
            used_plus &= ~point_bit(plus);
        }
    };
    recurse(recurse, 1);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<MatchedGenerator> enumerate_generators(const PointedMatchedCircle& pmc, const GeneratorFilter& filter) {
    std::vector<MatchedGenerator> out;
    // Matching injectivity on rho- caps the chord count at 2k.
    for (const auto& rho : all_consistent_chord_sets(pmc.num_points(), pmc.num_handles())) {
        if (filter.chord_count && static_cast<int>(rho.size()) != *filter.chord_count) continue;
        const auto minus = injective_image(pmc, rho.minus_points());
        const auto plus = injective_image(pmc, rho.plus_points());
        if (!minus || !plus) continue;
        // s = M(rho-) u C with C avoiding M(rho-) and M(rho+).
        const HandleSet free = pmc.all_handles() & ~(*minus | *plus);
        for (HandleSet extra = free;; extra = (extra - 1) & free) {
            const HandleSet s = *minus | extra;
            if (!filter.idempotent_size || std::popcount(s) == *filter.idempotent_size)
                out.push_back({s, rho});
            if (extra == 0) break;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace strandalg
