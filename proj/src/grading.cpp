#include "strandalg/grading.hpp"

#include <bit>
#include <cstdlib>

#include "strandalg/error.hpp"

namespace strandalg {

HomologyClass::HomologyClass(int num_points)
    : num_points_(num_points), segments_(num_points > 0 ? num_points - 1 : 0, 0) {}

HomologyClass::HomologyClass(int num_points, std::vector<int> segments)
    : num_points_(num_points), segments_(std::move(segments)) {
    if (num_points < 1 || static_cast<int>(segments_.size()) != num_points - 1)
        throw Error(ErrorCode::BadSize, "homology class on " + std::to_string(num_points) + " points needs " +
                                            std::to_string(num_points - 1) + " segments, got " +
                                            std::to_string(segments_.size()));
}

bool HomologyClass::is_zero() const {
    for (int v : segments_)
        if (v != 0) return false;
    return true;
}

int HomologyClass::segment(int i) const {
    if (i <= 0 || i >= num_points_) return 0;
    return segments_[i - 1];
}

HomologyClass& HomologyClass::operator+=(const HomologyClass& o) {
    if (o.num_points_ != num_points_)
        throw Error(ErrorCode::AmbientMismatch, "homology classes on different circles");
    for (std::size_t i = 0; i < segments_.size(); ++i) segments_[i] += o.segments_[i];
    return *this;
}

HomologyClass& HomologyClass::operator-=(const HomologyClass& o) { return *this += -o; }

HomologyClass HomologyClass::operator-() const {
    HomologyClass r = *this;
    for (int& v : r.segments_) v = -v;
    return r;
}

HomologyClass operator*(int k, HomologyClass a) {
    for (int& v : a.segments_) v *= k;
    return a;
}

std::string to_string(const HomologyClass& a) {
    std::string s = "(";
    for (std::size_t i = 0; i < a.segments().size(); ++i) s += (i ? "," : "") + std::to_string(a.segments()[i]);
    return s + ")";
}

HomologyClass homology_class(int num_points, const ReebChord& c) {
    std::vector<int> seg(num_points - 1, 0);
    for (int i = c.minus; i < c.plus; ++i) seg[i - 1] = 1;
    return HomologyClass(num_points, std::move(seg));
}

HomologyClass homology_class(int num_points, const ChordSet& rho) {
    HomologyClass a(num_points);
    for (const auto& c : rho.chords()) a += homology_class(num_points, c);
    return a;
}

HomologyClass homology_class(const StrandDiagram& d) {
    HomologyClass a(d.ambient());
    for (const auto& s : d.strands())
        if (s.target > s.source) a += homology_class(d.ambient(), ReebChord{s.source, s.target});
    return a;
}

std::vector<int> boundary(const HomologyClass& alpha) {
    std::vector<int> out(alpha.num_points(), 0);
    for (int p = 1; p <= alpha.num_points(); ++p) out[p - 1] = alpha.segment(p - 1) - alpha.segment(p);
    return out;
}

HalfInteger point_multiplicity(int p, const HomologyClass& alpha) {
    return HalfInteger::from_scaled(alpha.segment(p - 1) + alpha.segment(p));
}

HalfInteger point_multiplicity(PointMask points, const HomologyClass& alpha) {
    HalfInteger total;
    for (int p = 1; p <= alpha.num_points(); ++p)
        if (points & point_bit(p)) total += point_multiplicity(p, alpha);
    return total;
}

HalfInteger pairing_L(const HomologyClass& alpha1, const HomologyClass& alpha2) {
    if (alpha1.num_points() != alpha2.num_points())
        throw Error(ErrorCode::AmbientMismatch, "pairing classes on different circles");
    const auto d = boundary(alpha1);
    HalfInteger total;
    for (int p = 1; p <= alpha1.num_points(); ++p)
        if (d[p - 1] != 0) total += d[p - 1] * point_multiplicity(p, alpha2);
    return total;
}

HalfInteger epsilon(const HomologyClass& alpha) {
    int changes = 0;
    for (int p = 1; p <= alpha.num_points(); ++p)
        if ((alpha.segment(p - 1) - alpha.segment(p)) % 2 != 0) ++changes;
    // changes is always even, so changes/4 is a half-integer.
    return HalfInteger::from_scaled(changes / 2).mod1();
}

HalfInteger iota_strands(const StrandDiagram& d) {
    return HalfInteger(d.inversions()) - point_multiplicity(d.sources(), homology_class(d));
}

HalfInteger iota_chordset(const ChordSet& rho) {
    int abutting = 0, interleaved = 0;
    const auto& c = rho.chords();
    for (std::size_t i = 0; i < c.size(); ++i) {
        for (std::size_t j = i + 1; j < c.size(); ++j) {
            switch (classify_pair(c[i], c[j])) {
                case ChordRelation::AbutsForward:
                case ChordRelation::AbutsBackward: ++abutting; break;
                case ChordRelation::Interleaved: ++interleaved; break;
                default: break;
            }
        }
    }
    return HalfInteger::from_scaled(-static_cast<std::int64_t>(c.size()) - abutting) - HalfInteger(interleaved);
}

HalfInteger iota_sequence(int num_points, std::span<const ChordSet> sequence) {
    HalfInteger total;
    for (const auto& rho : sequence) total += iota_chordset(rho);
    for (std::size_t i = 0; i < sequence.size(); ++i)
        for (std::size_t j = i + 1; j < sequence.size(); ++j)
            for (const auto& a : sequence[i].chords())
                for (const auto& b : sequence[j].chords())
                    total += pairing_L(homology_class(num_points, a), homology_class(num_points, b));
    return total;
}

GradingElement::GradingElement(HalfInteger maslov, HomologyClass spin_c)
    : maslov_(maslov), spin_c_(std::move(spin_c)) {
    if (epsilon(spin_c_) != maslov_.mod1())
        throw Error(ErrorCode::EpsilonViolation, "maslov component " + maslov_.to_string() +
                                                     " incompatible with class " + to_string(spin_c_));
}

GradingElement compose(const GradingElement& g1, const GradingElement& g2) {
    return {g1.maslov_ + g2.maslov_ + pairing_L(g1.spin_c_, g2.spin_c_), g1.spin_c_ + g2.spin_c_};
}

GradingElement inverse(const GradingElement& g) {
    return {-g.maslov() + pairing_L(g.spin_c(), g.spin_c()), -g.spin_c()};
}

GradingElement lambda_pow(int n, const GradingElement& g) {
    return compose(GradingElement::lambda(g.num_points(), n), g);
}

std::string to_string(const GradingElement& g) {
    return "(" + g.maslov().to_string() + ", " + to_string(g.spin_c()) + ")";
}

GradingElement grade(const StrandDiagram& d) { return {iota_strands(d), homology_class(d)}; }

GradingElement grade(const PointedMatchedCircle& pmc, const MatchedGenerator& g) {
    const AlgebraElement e = expand_generator(pmc, g);
    if (e.is_zero()) throw Error(ErrorCode::ZeroGenerator, to_string(g) + " is zero");
    const GradingElement first = grade(e.terms().front());
    for (const auto& d : e.terms())
        if (grade(d) != first)
            throw std::logic_error("expansion terms of " + to_string(g) + " have different gradings");
    return first;
}

bool RefinedMembership::admits(HandleSet s, HandleSet t) const {
    if (std::popcount(s) != std::popcount(t)) return false;
    if ((s & source) != source || (t & target) != target) return false;
    return (s & ~source) == (t & ~target) && ((s & ~source) & (source | target)) == 0;
}

std::optional<RefinedMembership> refined_membership(const GradingElement& g, const PointedMatchedCircle& pmc) {
    if (g.num_points() != pmc.num_points()) return std::nullopt;
    const auto d = boundary(g.spin_c());
    std::vector<int> pushed(pmc.num_handles() + 1, 0);
    for (int p = 1; p <= pmc.num_points(); ++p) pushed[pmc.handle(p)] += d[p - 1];
    RefinedMembership m;
    for (int h = 1; h <= pmc.num_handles(); ++h) {
        if (pushed[h] == 1) m.target |= handle_bit(h);
        else if (pushed[h] == -1) m.source |= handle_bit(h);
        else if (pushed[h] != 0) return std::nullopt;
    }
    if (std::popcount(m.source) != std::popcount(m.target)) return std::nullopt;
    m.diagonal = m.source == 0 && m.target == 0;
    return m;
}

}  // namespace strandalg
