#include "strandalg/strands.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "strandalg/error.hpp"

namespace strandalg {

StrandDiagram StrandDiagram::create(int ambient, std::span<const Strand> strands) {
    if (ambient < 0 || ambient > kMaxPoints)
        throw Error(ErrorCode::InvalidDiagram, "ambient size " + std::to_string(ambient) + " out of range");
    StrandDiagram d;
    d.ambient_ = ambient;
    for (const Strand& s : strands) {
        if (s.source < 1 || s.target > ambient || s.target < s.source)
            throw Error(ErrorCode::InvalidDiagram, "strand " + std::to_string(s.source) + "->" +
                                                       std::to_string(s.target) + " is not a valid strand");
        if (d.sources_ & point_bit(s.source))
            throw Error(ErrorCode::InvalidDiagram, "repeated source " + std::to_string(s.source));
        if (d.targets_ & point_bit(s.target))
            throw Error(ErrorCode::InvalidDiagram, "repeated target " + std::to_string(s.target));
        d.sources_ |= point_bit(s.source);
        d.targets_ |= point_bit(s.target);
        d.target_[s.source - 1] = static_cast<std::uint8_t>(s.target);
    }
    return d;
}

StrandDiagram StrandDiagram::idempotent(PointMask points, int ambient) {
    std::vector<Strand> strands;
    for (int p = 1; p <= ambient; ++p)
        if (points & point_bit(p)) strands.push_back({p, p});
    if (ambient < kMaxPoints && (points >> ambient) != 0)
        throw Error(ErrorCode::InvalidDiagram, "idempotent point outside the ambient range");
    return create(ambient, strands);
}

int StrandDiagram::size() const { return std::popcount(sources_); }

std::vector<Strand> StrandDiagram::strands() const {
    std::vector<Strand> out;
    for (int i = 1; i <= ambient_; ++i)
        if (target_[i - 1]) out.push_back({i, target_[i - 1]});
    return out;
}

int StrandDiagram::inversions() const {
    int count = 0;
    for (int i = 1; i <= ambient_; ++i) {
        if (!target_[i - 1]) continue;
        for (int j = i + 1; j <= ambient_; ++j)
            if (target_[j - 1] && target_[i - 1] > target_[j - 1]) ++count;
    }
    return count;
}

PointMask StrandDiagram::moving_mask() const {
    PointMask m = 0;
    for (int i = 1; i <= ambient_; ++i)
        if (target_[i - 1] && target_[i - 1] != i) m |= point_bit(i);
    return m;
}

AlgebraElement::AlgebraElement(int ambient, std::vector<StrandDiagram> terms) : ambient_(ambient) {
    std::sort(terms.begin(), terms.end());
    // Keep a term iff it occurs an odd number of times.
    for (std::size_t i = 0; i < terms.size();) {
        std::size_t j = i;
        while (j < terms.size() && terms[j] == terms[i]) ++j;
        if ((j - i) % 2 == 1) terms_.push_back(terms[i]);
        i = j;
    }
}

bool AlgebraElement::contains(const StrandDiagram& d) const {
    return std::binary_search(terms_.begin(), terms_.end(), d);
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& other) {
    if (other.terms_.empty()) return *this;
    if (!terms_.empty() && ambient_ != other.ambient_)
        throw Error(ErrorCode::AmbientMismatch, "adding elements of different ambient size");
    ambient_ = other.ambient_;
    std::vector<StrandDiagram> merged;
    merged.reserve(terms_.size() + other.terms_.size());
    std::set_symmetric_difference(terms_.begin(), terms_.end(), other.terms_.begin(), other.terms_.end(),
                                  std::back_inserter(merged));
    terms_ = std::move(merged);
    return *this;
}

std::optional<StrandDiagram> multiply_diagrams(const StrandDiagram& d1, const StrandDiagram& d2) {
    if (d1.ambient() != d2.ambient())
        throw Error(ErrorCode::AmbientMismatch, "ambient sizes " + std::to_string(d1.ambient()) + " and " +
                                                    std::to_string(d2.ambient()));
    if (d1.targets() != d2.sources()) return std::nullopt;
    std::vector<Strand> composite;
    for (const Strand& s : d1.strands()) composite.push_back({s.source, d2.target_of(s.target)});
    StrandDiagram product = StrandDiagram::create(d1.ambient(), composite);
    if (product.inversions() != d1.inversions() + d2.inversions()) return std::nullopt;
    return product;
}

AlgebraElement multiply(const StrandDiagram& d1, const StrandDiagram& d2) {
    auto product = multiply_diagrams(d1, d2);
    return product ? AlgebraElement(*product) : AlgebraElement(d1.ambient());
}

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) {
    if (!a.is_zero() && !b.is_zero() && a.ambient() != b.ambient())
        throw Error(ErrorCode::AmbientMismatch, "ambient sizes " + std::to_string(a.ambient()) + " and " +
                                                    std::to_string(b.ambient()));
    std::vector<StrandDiagram> terms;
    for (const auto& x : a.terms())
        for (const auto& y : b.terms())
            if (auto p = multiply_diagrams(x, y)) terms.push_back(*p);
    return AlgebraElement(a.is_zero() ? b.ambient() : a.ambient(), std::move(terms));
}

AlgebraElement differential(const StrandDiagram& d) {
    const int inv = d.inversions();
    std::vector<StrandDiagram> terms;
    const auto strands = d.strands();
    for (std::size_t a = 0; a < strands.size(); ++a) {
        for (std::size_t b = a + 1; b < strands.size(); ++b) {
            if (strands[a].target <= strands[b].target) continue;
            auto smoothed = strands;
            std::swap(smoothed[a].target, smoothed[b].target);
            StrandDiagram r = StrandDiagram::create(d.ambient(), smoothed);
            if (r.inversions() == inv - 1) terms.push_back(r);
        }
    }
    return AlgebraElement(d.ambient(), std::move(terms));
}

AlgebraElement differential(const AlgebraElement& a) {
    AlgebraElement out(a.ambient());
    for (const auto& d : a.terms()) out += differential(d);
    return out;
}

std::vector<StrandDiagram> all_strand_diagrams(int ambient) {
    std::vector<StrandDiagram> out;
    std::vector<Strand> current;
    PointMask used_targets = 0;
    auto recurse = [&](auto&& self, int i) -> void {
        if (i > ambient) {
            out.push_back(StrandDiagram::create(ambient, current));
            return;
        }
        self(self, i + 1);
        for (int t = i; t <= ambient; ++t) {
            if (used_targets & point_bit(t)) continue;
            used_targets |= point_bit(t);
            current.push_back({i, t});
            self(self, i + 1);
            current.pop_back();
            used_targets &= ~point_bit(t);
        }
    };
    recurse(recurse, 1);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace strandalg
