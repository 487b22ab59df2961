#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "strandalg/algebra.hpp"
#include "strandalg/error.hpp"

using namespace strandalg;
using oracle::make;

namespace {

const PointedMatchedCircle& torus() {
    static const auto z = PointedMatchedCircle::create(4, {1, 2, 1, 2});
    return z;
}

const std::vector<PointedMatchedCircle>& genus_two() {
    static const std::vector<PointedMatchedCircle> zs = {
        PointedMatchedCircle::create(8, {1, 2, 1, 2, 3, 4, 3, 4}),
        PointedMatchedCircle::create(8, {1, 2, 3, 4, 1, 2, 3, 4}),
    };
    return zs;
}

ChordSet chords(std::vector<std::pair<int, int>> cs, int n = 4) {
    std::vector<ReebChord> out;
    for (auto [a, b] : cs) out.push_back(ReebChord::create(a, b, n));
    return ChordSet::create(out);
}

MatchedGenerator gen(std::vector<int> s, std::vector<std::pair<int, int>> cs, int n = 4) {
    HandleSet mask = 0;
    for (int h : s) mask |= handle_bit(h);
    return {mask, chords(std::move(cs), n)};
}

int popcount(std::uint32_t x) { return __builtin_popcount(x); }

}  // namespace

TEST_CASE("chords and consistency") {
    CHECK_THROWS_AS(ReebChord::create(2, 2, 4), Error);
    CHECK_THROWS_AS(ReebChord::create(3, 2, 4), Error);
    CHECK_THROWS_AS(ReebChord::create(1, 5, 4), Error);
    CHECK_THROWS_AS(chords({{1, 3}, {1, 4}}), Error);
    CHECK_THROWS_AS(chords({{1, 3}, {2, 3}}), Error);
    CHECK(chords({{1, 2}, {2, 3}}).size() == 2);
}

TEST_CASE("classify pairs") {
    const auto c = [](int a, int b) { return ReebChord::create(a, b, 8); };
    CHECK(classify_pair(c(1, 4), c(2, 3)) == ChordRelation::Nested);
    CHECK(classify_pair(c(2, 3), c(1, 4)) == ChordRelation::Nested);
    CHECK(classify_pair(c(1, 3), c(2, 4)) == ChordRelation::Interleaved);
    CHECK(classify_pair(c(2, 4), c(1, 3)) == ChordRelation::Interleaved);
    CHECK(classify_pair(c(1, 2), c(2, 3)) == ChordRelation::AbutsForward);
    CHECK(classify_pair(c(2, 3), c(1, 2)) == ChordRelation::AbutsBackward);
    CHECK(classify_pair(c(1, 2), c(3, 4)) == ChordRelation::Disjoint);
    CHECK(classify_pair(c(1, 3), c(1, 4)) == ChordRelation::SharedEndpoint);
    CHECK(classify_pair(c(1, 4), c(2, 4)) == ChordRelation::SharedEndpoint);
}

TEST_CASE("join sets") {
    CHECK(join_sets(chords({{1, 2}}), chords({{2, 3}})) == chords({{1, 3}}));
    CHECK(join_sets(chords({{1, 3}}), chords({{2, 4}})) == chords({{1, 3}, {2, 4}}));
    CHECK(join_sets(chords({}), chords({{2, 3}})) == chords({{2, 3}}));
    CHECK_THROWS_AS(join_sets(chords({{1, 3}}), chords({{1, 2}})), Error);
}

TEST_CASE("expansion examples") {
    CHECK(expand_generator(torus(), gen({1}, {{1, 2}})) == AlgebraElement(make(4, {{1, 2}})));
    CHECK(expand_generator(torus(), gen({1, 2}, {{1, 3}})) ==
          AlgebraElement(4, {make(4, {{1, 3}, {2, 2}}), make(4, {{1, 3}, {4, 4}})}));
    CHECK(expand_generator(torus(), gen({1, 2}, {{1, 2}})).is_zero());
    CHECK_FALSE(satisfies_nonzero_criterion(torus(), gen({1, 2}, {{1, 2}})));
    CHECK(target_idempotent(torus(), gen({1}, {{1, 2}})) == handle_bit(2));
    CHECK(target_idempotent(torus(), gen({1, 2}, {{1, 3}})) == (handle_bit(1) | handle_bit(2)));
}

TEST_CASE("expansion agrees with the subset oracle and the nonzero criterion") {
    std::vector<PointedMatchedCircle> zs{torus()};
    zs.insert(zs.end(), genus_two().begin(), genus_two().end());
    for (const auto& z : zs) {
        for (const auto& rho : all_consistent_chord_sets(z.num_points(), z.num_points())) {
            for (HandleSet s = 0; s <= z.all_handles(); ++s) {
                const MatchedGenerator g{s, rho};
                const auto e = expand_generator(z, g);
                const auto expected = oracle::expansion(z, s, rho);
                CHECK(oracle::support_of(e) == expected);
                CHECK(e.is_zero() == !satisfies_nonzero_criterion(z, g));
            }
        }
    }
}

TEST_CASE("multiplication examples") {
    const auto p = mul(torus(), gen({1}, {{1, 2}}), gen({2}, {{2, 3}}));
    CHECK(p == expand_generator(torus(), gen({1}, {{1, 3}})));
    CHECK(decompose(torus(), p) == std::vector<MatchedGenerator>{gen({1}, {{1, 3}})});
    CHECK(mul(torus(), gen({1}, {{1, 2}}), gen({1}, {{1, 3}})).is_zero());
    CHECK(mul(torus(), gen({1, 2}, {{1, 3}}), gen({1, 2}, {{2, 4}})).is_zero());
}

TEST_CASE("differential examples") {
    CHECK(diff(torus(), gen({1, 2}, {{1, 4}, {2, 3}})) == expand_generator(torus(), gen({1, 2}, {{1, 3}, {2, 4}})));
    CHECK(diff(torus(), gen({1}, {{1, 2}})).is_zero());
    // Only the completion with the horizontal strand at 2 has a crossing.
    const auto d = diff(torus(), gen({1, 2}, {{1, 3}}));
    CHECK(d == AlgebraElement(make(4, {{1, 2}, {2, 3}})));
    CHECK(decompose(torus(), d) == std::vector<MatchedGenerator>{gen({1, 2}, {{1, 2}, {2, 3}})});
}

TEST_CASE("generator enumeration") {
    const auto all = enumerate_generators(torus());
    // Brute force over every (s, rho), keeping nonzero expansions.
    std::size_t brute = 0;
    for (const auto& rho : all_consistent_chord_sets(4, 4))
        for (HandleSet s = 0; s <= torus().all_handles(); ++s) brute += !oracle::expansion(torus(), s, rho).empty();
    CHECK(all.size() == brute);
    CHECK(all.size() == 16);
    CHECK(std::is_sorted(all.begin(), all.end()));

    const auto small = enumerate_generators(torus(), {1, 1});
    CHECK(std::find(small.begin(), small.end(), gen({1}, {{1, 2}})) != small.end());
    CHECK(std::find(small.begin(), small.end(), gen({1}, {{1, 3}})) != small.end());
    CHECK(std::find(small.begin(), small.end(), gen({2}, {{1, 2}})) == small.end());
    for (const auto& g : small) {
        CHECK(popcount(g.idempotent) == 1);
        CHECK(g.chords.size() == 1);
        CHECK(satisfies_nonzero_criterion(torus(), g));
    }

    for (const auto& z : genus_two()) {
        const auto idem = enumerate_generators(z, {std::nullopt, 0});
        CHECK(idem.size() == 16);
        for (const auto& g : enumerate_generators(z)) CHECK(static_cast<int>(g.chords.size()) <= 2 * z.genus());
    }
}

TEST_CASE("join rule matches products (exhaustive genus 1, sampled genus 2)") {
    auto check_pair = [](const PointedMatchedCircle& z, const MatchedGenerator& a, const MatchedGenerator& b) {
        const auto product = mul(z, a, b);
        if (product.is_zero()) return false;
        const auto joined = joined_generator(z, a, b);
        REQUIRE(joined.has_value());
        CHECK(product == expand_generator(z, *joined));
        return true;
    };
    const auto gens = enumerate_generators(torus());
    int nonzero = 0;
    for (const auto& a : gens)
        for (const auto& b : gens) nonzero += check_pair(torus(), a, b);
    CHECK(nonzero > 10);

    std::mt19937_64 rng(7);
    for (const auto& z : genus_two()) {
        const auto g2 = enumerate_generators(z);
        std::map<HandleSet, std::vector<MatchedGenerator>> by_source;
        for (const auto& g : g2) by_source[g.idempotent].push_back(g);
        int hits = 0;
        for (int trial = 0; trial < 2000; ++trial) {
            const auto& a = g2[std::uniform_int_distribution<std::size_t>(0, g2.size() - 1)(rng)];
            const auto& bucket = by_source[target_idempotent(z, a)];
            const auto& b = bucket[std::uniform_int_distribution<std::size_t>(0, bucket.size() - 1)(rng)];
            hits += check_pair(z, a, b);
        }
        CHECK(hits > 100);
    }
}

TEST_CASE("d squared and Leibniz on generators (genus 1 exhaustive)") {
    const auto gens = enumerate_generators(torus());
    for (const auto& a : gens) {
        CHECK(differential(diff(torus(), a)).is_zero());
        CHECK(decompose(torus(), diff(torus(), a)).has_value());
        for (const auto& b : gens) {
            const auto ea = expand_generator(torus(), a);
            const auto eb = expand_generator(torus(), b);
            CHECK(differential(multiply(ea, eb)) == multiply(differential(ea), eb) + multiply(ea, differential(eb)));
        }
    }
}
