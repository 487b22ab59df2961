#include "strandalg/verify.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <random>

#include "strandalg/algebra.hpp"
#include "strandalg/error.hpp"
#include "strandalg/grading.hpp"
#include "strandalg/json_io.hpp"
#include "strandalg/pontryagin.hpp"

namespace strandalg {

namespace {

constexpr std::size_t kMaxWitnesses = 20;
// Random sequences drawn by the normalization suite in exhaustive mode.
constexpr std::size_t kNormalizationDefault = 2000;

class Recorder {
public:
    explicit Recorder(VerificationReport& r) : report_(r) {}

    void check(bool ok, const std::function<VerificationFailure()>& witness) {
        ++report_.cases;
        if (ok) return;
        ++report_.failure_count;
        if (report_.failures.size() < kMaxWitnesses) report_.failures.push_back(witness());
    }

private:
    VerificationReport& report_;
};

// Generators with their expansions and gradings, grouped by source idempotent.
struct GeneratorTable {
    const PointedMatchedCircle& pmc;
    std::vector<MatchedGenerator> gens;
    std::vector<AlgebraElement> expansions;
    std::vector<GradingElement> grades;
    std::vector<HandleSet> targets;
    std::map<HandleSet, std::vector<std::size_t>> by_source;

    explicit GeneratorTable(const PointedMatchedCircle& z) : pmc(z), gens(enumerate_generators(z)) {
        for (std::size_t i = 0; i < gens.size(); ++i) {
            expansions.push_back(expand_generator(pmc, gens[i]));
            grades.push_back(grade(pmc, gens[i]));
            targets.push_back(target_idempotent(pmc, gens[i]));
            by_source[gens[i].idempotent].push_back(i);
        }
    }

    // Every composable pair (i, j), or `samples` uniformly random ones.
    template <class F>
    void for_each_pair(VerifyLevel level, std::mt19937_64& rng, F&& f) const {
        if (level.exhaustive) {
            for (std::size_t i = 0; i < gens.size(); ++i)
                for (std::size_t j : by_source.at(targets[i])) f(i, j);
            return;
        }
        std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
        for (std::size_t n = 0; n < level.samples; ++n) {
            const std::size_t i = pick(rng);
            const auto& bucket = by_source.at(targets[i]);
            f(i, bucket[std::uniform_int_distribution<std::size_t>(0, bucket.size() - 1)(rng)]);
        }
    }

    template <class F>
    void for_each_generator(VerifyLevel level, std::mt19937_64& rng, F&& f) const {
        if (level.exhaustive) {
            for (std::size_t i = 0; i < gens.size(); ++i) f(i);
            return;
        }
        std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
        for (std::size_t n = 0; n < level.samples; ++n) f(pick(rng));
    }
};

nlohmann::json pair_witness(const GeneratorTable& t, std::size_t i, std::size_t j) {
    return {{"pmc", io::to_json(t.pmc)}, {"a", io::to_json(t.gens[i])}, {"b", io::to_json(t.gens[j])}};
}

void suite_multiplicativity(const GeneratorTable& t, VerifyLevel level, std::mt19937_64& rng, Recorder& rec) {
    t.for_each_pair(level, rng, [&](std::size_t i, std::size_t j) {
        const auto product = multiply(t.expansions[i], t.expansions[j]);
        if (product.is_zero()) return;
        const auto joined = joined_generator(t.pmc, t.gens[i], t.gens[j]);
        rec.check(joined && expand_generator(t.pmc, *joined) == product, [&] {
            return VerificationFailure{"product differs from the joined generator", pair_witness(t, i, j)};
        });
        const auto expected = t.grades[i] * t.grades[j];
        for (const auto& term : product.terms()) {
            const auto got = grade(term);
            rec.check(got == expected, [&] {
                auto w = pair_witness(t, i, j);
                w["expected"] = io::to_json(expected);
                w["got"] = io::to_json(got);
                return VerificationFailure{"grading of the product is not the product of gradings", w};
            });
        }
    });
}

void suite_differential(const GeneratorTable& t, VerifyLevel level, std::mt19937_64& rng, Recorder& rec) {
    t.for_each_generator(level, rng, [&](std::size_t i) {
        const auto d = differential(t.expansions[i]);
        const auto expected = lambda_pow(-1, t.grades[i]);
        const auto witness = [&](const std::string& what) {
            return VerificationFailure{what, {{"pmc", io::to_json(t.pmc)}, {"generator", io::to_json(t.gens[i])}}};
        };
        rec.check(decompose(t.pmc, d).has_value(), [&] { return witness("differential leaves the matched algebra"); });
        for (const auto& term : d.terms())
            rec.check(grade(term) == expected, [&] { return witness("differential term is not one Maslov step lower"); });
    });
}

void suite_d2_leibniz(const GeneratorTable& t, VerifyLevel level, std::mt19937_64& rng, Recorder& rec) {
    std::vector<AlgebraElement> diffs;
    for (const auto& e : t.expansions) diffs.push_back(differential(e));
    t.for_each_generator(level, rng, [&](std::size_t i) {
        rec.check(differential(diffs[i]).is_zero(), [&] {
            return VerificationFailure{"d squared is nonzero",
                                       {{"pmc", io::to_json(t.pmc)}, {"generator", io::to_json(t.gens[i])}}};
        });
    });
    t.for_each_pair(level, rng, [&](std::size_t i, std::size_t j) {
        const auto lhs = differential(multiply(t.expansions[i], t.expansions[j]));
        const auto rhs = multiply(diffs[i], t.expansions[j]) + multiply(t.expansions[i], diffs[j]);
        rec.check(lhs == rhs, [&] { return VerificationFailure{"Leibniz rule fails", pair_witness(t, i, j)}; });
    });
}

void suite_iota(const GeneratorTable& t, VerifyLevel level, std::mt19937_64& rng, Recorder& rec) {
    const int n = t.pmc.num_points();
    auto all = all_consistent_chord_sets(n, n);
    if (!level.exhaustive) {
        std::vector<ChordSet> picked;
        std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
        for (std::size_t k = 0; k < level.samples; ++k) picked.push_back(all[pick(rng)]);
        all = std::move(picked);
    }
    for (const auto& rho : all) {
        std::vector<Strand> strands;
        for (const auto& c : rho.chords()) strands.push_back({c.minus, c.plus});
        const auto by_pairs = iota_chordset(rho);
        const auto by_strands = iota_strands(StrandDiagram::create(n, strands));
        const auto by_crossings = maslov_component(rho);
        rec.check(by_pairs == by_strands && by_pairs == by_crossings, [&] {
            return VerificationFailure{"iota formulas disagree",
                                       {{"chords", io::to_json(rho)},
                                        {"pairs", by_pairs.to_string()},
                                        {"strands", by_strands.to_string()},
                                        {"crossings", by_crossings.to_string()}}};
        });
    }
    // Horizontal strands must not change iota.
    t.for_each_generator(level, rng, [&](std::size_t i) {
        const auto expected = iota_chordset(t.gens[i].chords);
        for (const auto& term : t.expansions[i].terms())
            rec.check(iota_strands(term) == expected, [&] {
                return VerificationFailure{"iota of a completion differs from iota of its chords",
                                           {{"pmc", io::to_json(t.pmc)}, {"generator", io::to_json(t.gens[i])}}};
            });
    });
}

void suite_epsilon(const GeneratorTable& t, VerifyLevel level, std::mt19937_64& rng, Recorder& rec) {
    t.for_each_generator(level, rng, [&](std::size_t i) {
        const auto& g = t.grades[i];
        const auto membership = refined_membership(g, t.pmc);
        const bool ok = epsilon(g.spin_c()) == g.maslov().mod1() && membership &&
                        membership->admits(t.gens[i].idempotent, t.targets[i]);
        rec.check(ok, [&] {
            return VerificationFailure{"epsilon or refined membership fails",
                                       {{"pmc", io::to_json(t.pmc)},
                                        {"generator", io::to_json(t.gens[i])},
                                        {"grading", io::to_json(g)}}};
        });
    });
}

std::vector<ReebChord> random_sequence(std::mt19937_64& rng, int n) {
    std::uniform_int_distribution<int> len(1, std::min(5, n - 1));
    const int length = len(rng);
    for (;;) {
        std::vector<int> pts(n);
        for (int i = 0; i < n; ++i) pts[i] = i + 1;
        std::shuffle(pts.begin(), pts.end(), rng);
        const std::vector<int> minus(pts.begin(), pts.begin() + length);
        std::shuffle(pts.begin(), pts.end(), rng);
        const std::vector<int> plus(pts.begin(), pts.begin() + length);
        std::vector<ReebChord> out;
        for (int i = 0; i < length && minus[i] < plus[i]; ++i) out.push_back(ReebChord::create(minus[i], plus[i], n));
        if (static_cast<int>(out.size()) == length) return out;
    }
}

void suite_normalization(const GeneratorTable& t, VerifyLevel level, std::mt19937_64& rng, Recorder& rec) {
    const int n = t.pmc.num_points();
    const std::size_t count = level.exhaustive ? kNormalizationDefault : level.samples;
    for (std::size_t k = 0; k < count; ++k) {
        const auto seq = random_sequence(rng, n);
        const auto expected = iota_of_segments(n, seq);
        for (auto order : {NormalizeOrder::Leftmost, NormalizeOrder::Random}) {
            const auto r = normalize_segments(seq, order, &rng);
            rec.check(r.predicted_iota() == expected, [&] {
                auto w = io::segments_to_json(seq);
                w["order"] = order == NormalizeOrder::Leftmost ? "leftmost" : "random";
                w["iota"] = expected.to_string();
                w["predicted"] = r.predicted_iota().to_string();
                return VerificationFailure{"normalization identity fails", w};
            });
        }
    }
}

using SuiteFn = void (*)(const GeneratorTable&, VerifyLevel, std::mt19937_64&, Recorder&);

const std::vector<std::pair<std::string, SuiteFn>>& suite_table() {
    static const std::vector<std::pair<std::string, SuiteFn>> table = {
        {"multiplicativity", suite_multiplicativity},
        {"differential", suite_differential},
        {"d2-leibniz", suite_d2_leibniz},
        {"iota", suite_iota},
        {"epsilon", suite_epsilon},
        {"normalization", suite_normalization},
    };
    return table;
}

VerificationReport run_with_table(std::size_t index, const GeneratorTable& t, VerifyLevel level,
                                  std::uint64_t seed) {
    const auto& [name, fn] = suite_table()[index];
    VerificationReport report;
    report.suite = name;
    // Each suite has its own stream so suites can be run alone.
    std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ULL * (index + 1));
    const auto start = std::chrono::steady_clock::now();
    Recorder rec(report);
    fn(t, level, rng, rec);
    report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace

VerifyLevel VerifyLevel::parse(std::string_view text) {
    if (text == "exhaustive") return {true, 0};
    constexpr std::string_view prefix = "sample:";
    if (text.substr(0, prefix.size()) == prefix) {
        const std::string digits(text.substr(prefix.size()));
        if (!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos && digits.size() < 12)
            return {false, static_cast<std::size_t>(std::stoull(digits))};
    }
    throw Error(ErrorCode::Parse, "level must be \"exhaustive\" or \"sample:<N>\", got \"" + std::string(text) + "\"");
}

nlohmann::json VerificationReport::to_json() const {
    nlohmann::json fs = nlohmann::json::array();
    for (const auto& f : failures) fs.push_back({{"message", f.message}, {"witness", f.witness}});
    return {{"suite", suite},
            {"cases", cases},
            {"failure_count", failure_count},
            {"failures", fs},
            {"wall_seconds", wall_seconds}};
}

const std::vector<std::string>& verify_suites() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : suite_table()) out.push_back(name);
        return out;
    }();
    return names;
}

VerificationReport run_suite(std::string_view suite, const PointedMatchedCircle& pmc, VerifyLevel level,
                             std::uint64_t seed) {
    const auto& table = suite_table();
    for (std::size_t i = 0; i < table.size(); ++i) {
        if (table[i].first != suite) continue;
        const auto start = std::chrono::steady_clock::now();
        const GeneratorTable t(pmc);
        auto report = run_with_table(i, t, level, seed);
        report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return report;
    }
    throw Error(ErrorCode::Parse, "unknown suite \"" + std::string(suite) + "\"");
}

std::vector<VerificationReport> run_verify(const PointedMatchedCircle& pmc, VerifyLevel level, std::uint64_t seed) {
    const GeneratorTable t(pmc);
    std::vector<VerificationReport> out;
    for (std::size_t i = 0; i < suite_table().size(); ++i) out.push_back(run_with_table(i, t, level, seed));
    return out;
}

}  // namespace strandalg
