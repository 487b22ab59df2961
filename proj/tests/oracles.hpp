// Independent reference implementations used only by the tests. They work on
// plain vectors and avoid the library's bitmask machinery on purpose.
#ifndef STRANDALG_TESTS_ORACLES_HPP
#define STRANDALG_TESTS_ORACLES_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "strandalg/algebra.hpp"
#include "strandalg/pmc.hpp"
#include "strandalg/strands.hpp"

namespace oracle {

using Pairs = std::vector<std::pair<int, int>>;  // (source, target), any order

// Union-find over the 2n ends of the marked points: end 2p is where the circle
// arrives at p, end 2p+1 where it leaves. Circle arcs join the leaving end of p
// to the arriving end of p+1 (wrapping through the basepoint); surgery at a
// pair {a, b} joins the arriving end of a to the leaving end of b and back.
inline int surgery_components(const std::vector<int>& matching) {
    const int n = static_cast<int>(matching.size());
    if (n == 0) return 1;
    std::vector<int> parent(2 * n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
    for (int p = 0; p < n; ++p) unite(2 * p + 1, 2 * ((p + 1) % n));
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (matching[a] == matching[b]) {
                unite(2 * a, 2 * b + 1);
                unite(2 * b, 2 * a + 1);
            }
    std::set<int> roots;
    for (int e = 0; e < 2 * n; ++e) roots.insert(find(e));
    return static_cast<int>(roots.size());
}

inline Pairs pairs_of(const strandalg::StrandDiagram& d) {
    Pairs out;
    for (const auto& s : d.strands()) out.emplace_back(s.source, s.target);
    return out;
}

inline int inversions(const Pairs& p) {
    int count = 0;
    for (const auto& a : p)
        for (const auto& b : p)
            if (a.first < b.first && a.second > b.second) ++count;
    return count;
}

inline strandalg::StrandDiagram make(int ambient, const Pairs& p) {
    std::vector<strandalg::Strand> s;
    for (const auto& [a, b] : p) s.push_back({a, b});
    return strandalg::StrandDiagram::create(ambient, s);
}

inline std::set<int> sources(const Pairs& p) {
    std::set<int> out;
    for (const auto& e : p) out.insert(e.first);
    return out;
}

inline std::set<int> targets(const Pairs& p) {
    std::set<int> out;
    for (const auto& e : p) out.insert(e.second);
    return out;
}

// Composite of two diagrams as strand lists; empty optional when zero.
inline std::optional<Pairs> multiply(const Pairs& a, const Pairs& b) {
    if (targets(a) != sources(b)) return std::nullopt;
    Pairs out;
    for (const auto& [s, t] : a)
        for (const auto& [s2, t2] : b)
            if (s2 == t) out.emplace_back(s, t2);
    if (inversions(out) != inversions(a) + inversions(b)) return std::nullopt;
    return out;
}

// Mod-2 accumulator keyed by the sorted strand list.
struct Sum {
    std::map<Pairs, int> terms;
    void add(Pairs p) {
        std::sort(p.begin(), p.end());
        if (++terms[p] % 2 == 0) terms.erase(p);
    }
    std::set<Pairs> support() const {
        std::set<Pairs> out;
        for (const auto& [p, c] : terms) out.insert(p);
        return out;
    }
};

inline std::set<Pairs> support_of(const strandalg::AlgebraElement& a) {
    std::set<Pairs> out;
    for (const auto& d : a.terms()) {
        auto p = pairs_of(d);
        std::sort(p.begin(), p.end());
        out.insert(p);
    }
    return out;
}

inline std::set<Pairs> differential(const Pairs& p) {
    Sum sum;
    const int inv = inversions(p);
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < p.size(); ++j) {
            if (!(p[i].first < p[j].first && p[i].second > p[j].second)) continue;
            Pairs q = p;
            std::swap(q[i].second, q[j].second);
            if (inversions(q) == inv - 1) sum.add(q);
        }
    return sum.support();
}

// Expansion of I(s) a(rho): all diagrams made of the chord strands plus
// horizontal strands on a set U of points avoiding chord endpoints, such that
// the matching maps the sources bijectively onto s and is injective on the
// targets.
inline std::set<Pairs> expansion(const strandalg::PointedMatchedCircle& pmc, strandalg::HandleSet s,
                                 const strandalg::ChordSet& rho) {
    const int n = pmc.num_points();
    std::set<int> used;
    Pairs chords;
    for (const auto& c : rho.chords()) {
        used.insert(c.minus);
        used.insert(c.plus);
        chords.emplace_back(c.minus, c.plus);
    }
    std::vector<int> free;
    for (int p = 1; p <= n; ++p)
        if (!used.count(p)) free.push_back(p);
    std::set<Pairs> out;
    for (unsigned mask = 0; mask < (1u << free.size()); ++mask) {
        Pairs d = chords;
        for (std::size_t i = 0; i < free.size(); ++i)
            if (mask & (1u << i)) d.emplace_back(free[i], free[i]);
        std::set<int> src_handles, tgt_handles;
        bool injective = true;
        for (const auto& [a, b] : d) {
            injective &= src_handles.insert(pmc.handle(a)).second;
            injective &= tgt_handles.insert(pmc.handle(b)).second;
        }
        if (!injective) continue;
        std::set<int> want;
        for (int h = 1; h <= pmc.num_handles(); ++h)
            if (s & strandalg::handle_bit(h)) want.insert(h);
        if (src_handles != want) continue;
        std::sort(d.begin(), d.end());
        out.insert(d);
    }
    return out;
}

}  // namespace oracle

#endif
