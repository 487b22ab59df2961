// strandalg command-line front end. JSON in on stdin (or a file argument),
// JSON or text out on stdout (or --out). Exit codes: 0 success, 1 input or
// validation error, 2 property violation found by `verify`.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "strandalg/algebra.hpp"
#include "strandalg/diagrams.hpp"
#include "strandalg/error.hpp"
#include "strandalg/grading.hpp"
#include "strandalg/json_io.hpp"
#include "strandalg/pmc.hpp"
#include "strandalg/pontryagin.hpp"
#include "strandalg/render.hpp"
#include "strandalg/verify.hpp"

using namespace strandalg;
using io::Json;

namespace {

constexpr int kExitInput = 1;
constexpr int kExitViolation = 2;

struct Options {
    std::string pmc_file;
    std::string input;
    std::string input2;
    std::string out;
    std::string format = "json";
    std::string level = "exhaustive";
    std::uint64_t seed = 0;
    std::string diagram_file;
    std::vector<std::string> suites;
    int idempotent_size = -1;
    int chord_count = -1;
};

Json read_json(const std::string& path) {
    if (path.empty() || path == "-") {
        const std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
        return io::parse(text, "<stdin>");
    }
    return io::parse_file(path);
}

PointedMatchedCircle load_pmc(const Options& o) {
    if (o.pmc_file.empty()) throw Error(ErrorCode::Parse, "--pmc <file> is required");
    return io::pmc_from_json(io::parse_file(o.pmc_file));
}

void write(const Options& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw Error(ErrorCode::Parse, o.out + ": cannot open for writing");
    f << text;
}

void emit(const Options& o, const Json& j, const std::string& text) {
    write(o, o.format == "text" ? text : j.dump() + "\n");
}

std::string handles_text(HandleSet s) {
    std::string out = "{";
    for (int h = 1; h <= 32; ++h)
        if (s & handle_bit(h)) out += (out.size() > 1 ? "," : "") + std::to_string(h);
    return out + "}";
}

Json handles_json(HandleSet s) {
    Json arr = Json::array();
    for (int h = 1; h <= 32; ++h)
        if (s & handle_bit(h)) arr.push_back(h);
    return arr;
}

// Product or differential as diagrams plus, when possible, generator form.
Json element_json(const PointedMatchedCircle& pmc, const AlgebraElement& a, std::string& text) {
    Json j = io::to_json(a);
    j["ambient"] = pmc.num_points();
    const auto parts = decompose(pmc, a);
    if (parts) {
        Json gens = Json::array();
        for (const auto& g : *parts) {
            gens.push_back(io::to_json(g));
            text += to_string(g) + "\n";
        }
        j["generators"] = gens;
    } else {
        j["generators"] = nullptr;
    }
    if (a.is_zero()) text = "0\n";
    return j;
}

int cmd_pmc_validate(const Options& o) {
    const Json j = read_json(o.input.empty() ? o.pmc_file : o.input);
    try {
        const auto pmc = io::pmc_from_json(j);
        emit(o, {{"valid", true}, {"genus", pmc.genus()}, {"circles", 1}},
             "valid pointed matched circle of genus " + std::to_string(pmc.genus()) + "\n");
        return 0;
    } catch (const Error& e) {
        Json out = {{"valid", false}, {"error", std::string(to_string(e.code()))}, {"message", e.what()}};
        if (e.code() == ErrorCode::SurgeryDisconnected)
            out["circles"] = surgery_circle_count(j["matching"].get<std::vector<int>>());
        emit(o, out, std::string("invalid: ") + e.what() + "\n");
        return kExitInput;
    }
}

int cmd_gens(const Options& o) {
    const auto pmc = load_pmc(o);
    GeneratorFilter filter;
    if (o.idempotent_size >= 0) filter.idempotent_size = o.idempotent_size;
    if (o.chord_count >= 0) filter.chord_count = o.chord_count;
    Json arr = Json::array();
    std::string text;
    for (const auto& g : enumerate_generators(pmc, filter)) {
        arr.push_back(io::to_json(g));
        text += to_string(g) + "\n";
    }
    emit(o, {{"count", arr.size()}, {"generators", arr}}, text);
    return 0;
}

int cmd_mul(const Options& o) {
    const auto pmc = load_pmc(o);
    MatchedGenerator a, b;
    if (!o.input2.empty()) {
        a = io::generator_from_json(read_json(o.input), pmc);
        b = io::generator_from_json(io::parse_file(o.input2), pmc);
    } else {
        const Json j = read_json(o.input);
        if (!j.is_object() || !j.contains("a") || !j.contains("b"))
            throw Error(ErrorCode::Parse, "expected {\"a\": generator, \"b\": generator} or two files");
        a = io::generator_from_json(j["a"], pmc);
        b = io::generator_from_json(j["b"], pmc);
    }
    std::string text;
    const Json j = element_json(pmc, mul(pmc, a, b), text);
    emit(o, j, text);
    return 0;
}

int cmd_diff(const Options& o) {
    const auto pmc = load_pmc(o);
    const auto g = io::generator_from_json(read_json(o.input), pmc);
    std::string text;
    const Json j = element_json(pmc, diff(pmc, g), text);
    emit(o, j, text);
    return 0;
}

int cmd_grade(const Options& o) {
    const Json in = read_json(o.input);
    if (in.is_object() && in.contains("ambient")) {
        const auto d = io::strand_diagram_from_json(in);
        const auto g = grade(d);
        emit(o, {{"grading", io::to_json(g)}}, to_string(g) + "\n");
        return 0;
    }
    const auto pmc = load_pmc(o);
    const auto gen = io::generator_from_json(in, pmc);
    const auto g = grade(pmc, gen);
    Json out = {{"grading", io::to_json(g)}};
    std::string text = to_string(g) + "\n";
    if (const auto m = refined_membership(g, pmc)) {
        out["membership"] = {{"s", handles_json(m->source)}, {"t", handles_json(m->target)}, {"diagonal", m->diagonal}};
        text += "membership s=" + handles_text(m->source) + " t=" + handles_text(m->target) +
                (m->diagonal ? " (diagonal)" : "") + "\n";
    }
    emit(o, out, text);
    return 0;
}

int cmd_index(const Options& o) {
    if (o.diagram_file.empty()) throw Error(ErrorCode::Parse, "--diagram <file> is required");
    const auto d = io::bordered_diagram_from_json(io::parse_file(o.diagram_file));
    const Json q = read_json(o.input);
    if (!q.is_object() || !q.contains("domain") || !q.contains("x") || !q.contains("y"))
        throw Error(ErrorCode::Parse, "expected {\"domain\": {\"mult\": [...]}, \"x\": [...], \"y\": [...], \"rho\": [...]}");
    const auto b = io::domain_from_json(q["domain"]);
    const auto x = io::diagram_generator_from_json({{"points", q["x"]}}, d);
    const auto y = io::diagram_generator_from_json({{"points", q["y"]}}, d);
    std::vector<ChordSet> rho;
    if (q.contains("rho")) {
        if (!q["rho"].is_array()) throw Error(ErrorCode::Parse, "at /rho: expected an array of chord sets");
        for (const auto& entry : q["rho"]) rho.push_back(io::chord_set_from_json(entry, d.pmc().num_points()));
    }
    if (!validate_domain(d, b, x, y)) throw Error(ErrorCode::InvalidDomain, "domain does not connect x to y");
    const auto value = index(d, b, x, y, rho);
    Json out = {{"index", value},
                {"euler", euler_measure(d, b).to_string()},
                {"n_x", point_measure(d, b, x).to_string()},
                {"n_y", point_measure(d, b, y).to_string()},
                {"iota", iota_sequence(d.pmc().num_points(), rho).to_string()},
                {"l", rho.size()}};
    emit(o, out, "index " + std::to_string(value) + "\n");
    return 0;
}

int cmd_normalize(const Options& o) {
    const auto pmc = load_pmc(o);
    const auto segs = io::segments_from_json(read_json(o.input), pmc.num_points());
    const auto r = normalize_segments(segs);
    Json out = io::segments_to_json(r.segments);
    out["abutting_negative"] = r.abutting_negative;
    out["interleaved_positive"] = r.interleaved_positive;
    out["interleaved_negative"] = r.interleaved_negative;
    out["predicted_iota"] = r.predicted_iota().to_string();
    out["iota"] = iota_of_segments(pmc.num_points(), segs).to_string();
    emit(o, out, "predicted " + r.predicted_iota().to_string() + ", iota " + out["iota"].get<std::string>() + "\n");
    return 0;
}

int cmd_verify(const Options& o) {
    const auto pmc = load_pmc(o);
    const auto level = VerifyLevel::parse(o.level);
    std::vector<VerificationReport> reports;
    if (o.suites.empty()) {
        reports = run_verify(pmc, level, o.seed);
    } else {
        for (const auto& s : o.suites) reports.push_back(run_suite(s, pmc, level, o.seed));
    }
    Json arr = Json::array();
    std::string text;
    bool ok = true;
    for (const auto& r : reports) {
        arr.push_back(r.to_json());
        ok &= r.passed();
        std::ostringstream line;
        line << (r.passed() ? "PASS " : "FAIL ") << r.suite << ": " << r.cases << " cases, " << r.failure_count
             << " failures, " << r.wall_seconds << " s\n";
        for (const auto& f : r.failures) line << "  " << f.message << ": " << f.witness.dump() << "\n";
        text += line.str();
    }
    emit(o, {{"reports", arr}, {"passed", ok}}, text);
    return ok ? 0 : kExitViolation;
}

int cmd_render(const Options& o) {
    const Json in = read_json(o.input);
    std::string svg;
    int crossings = 0;
    if (in.is_object() && in.contains("layers")) {
        const auto pmc = load_pmc(o);
        const auto d = io::chord_arc_diagram_from_json(in, pmc.num_points());
        svg = to_svg(d);
        for (const auto& layer : d.layers)
            for (const auto& a : layer.chords())
                for (const auto& b : layer.chords())
                    if (a < b) crossings += classify_pair(a, b) == ChordRelation::Interleaved;
    } else if (in.is_object() && in.contains("ambient")) {
        const auto drawing = draw(io::strand_diagram_from_json(in));
        svg = to_svg(drawing);
        crossings = count_crossings(drawing);
    } else {
        const auto pmc = load_pmc(o);
        const auto drawing = draw(pmc, io::generator_from_json(in, pmc));
        svg = to_svg(drawing);
        crossings = count_crossings(drawing);
    }
    if (o.out.empty()) {
        std::cout << svg;
    } else {
        write(o, svg);
        const Json summary = {{"out", o.out}, {"crossings", crossings}};
        std::cout << (o.format == "text" ? "wrote " + o.out + " (" + std::to_string(crossings) + " crossings)\n"
                                         : summary.dump() + "\n");
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Strand algebras of pointed matched circles and their gradings"};
    app.require_subcommand(1);
    Options o;
    int (*action)(const Options&) = nullptr;

    const auto common = [&](CLI::App* sub, bool needs_pmc) {
        auto* opt = sub->add_option("--pmc", o.pmc_file, "pointed matched circle JSON file");
        if (needs_pmc) opt->required();
        sub->add_option("--out", o.out, "output path (default stdout)");
        sub->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    };

    auto* pmc_cmd = app.add_subcommand("pmc", "pointed matched circles");
    pmc_cmd->require_subcommand(1);
    auto* validate = pmc_cmd->add_subcommand("validate", "validate a PMC file");
    common(validate, false);
    validate->add_option("input", o.input, "PMC JSON (default: --pmc or stdin)");
    validate->callback([&] { action = cmd_pmc_validate; });

    auto* algebra = app.add_subcommand("algebra", "the matched strand algebra");
    algebra->require_subcommand(1);
    auto* gens = algebra->add_subcommand("gens", "enumerate generators");
    common(gens, true);
    gens->add_option("--idempotent-size", o.idempotent_size, "restrict |s|");
    gens->add_option("--chords", o.chord_count, "restrict |rho|");
    gens->callback([&] { action = cmd_gens; });
    auto* mul_cmd = algebra->add_subcommand("mul", "multiply two generators");
    common(mul_cmd, true);
    mul_cmd->add_option("input", o.input, "generator a, or {\"a\":..,\"b\":..} (default stdin)");
    mul_cmd->add_option("input2", o.input2, "generator b");
    mul_cmd->callback([&] { action = cmd_mul; });
    auto* diff_cmd = algebra->add_subcommand("diff", "differential of a generator");
    common(diff_cmd, true);
    diff_cmd->add_option("input", o.input, "generator JSON (default stdin)");
    diff_cmd->callback([&] { action = cmd_diff; });

    auto* grade_cmd = app.add_subcommand("grade", "grading of a generator or strand diagram");
    common(grade_cmd, false);
    grade_cmd->add_option("input", o.input, "generator or strand diagram JSON (default stdin)");
    grade_cmd->callback([&] { action = cmd_grade; });

    auto* index_cmd = app.add_subcommand("index", "index of a domain in a bordered diagram");
    common(index_cmd, false);
    index_cmd->add_option("--diagram", o.diagram_file, "bordered diagram JSON file")->required();
    index_cmd->add_option("input", o.input, "{domain, x, y, rho} JSON (default stdin)");
    index_cmd->callback([&] { action = cmd_index; });

    auto* normalize_cmd = app.add_subcommand("normalize", "normalize a segment sequence");
    common(normalize_cmd, true);
    normalize_cmd->add_option("input", o.input, "{\"segments\": ...} JSON (default stdin)");
    normalize_cmd->callback([&] { action = cmd_normalize; });

    auto* verify_cmd = app.add_subcommand("verify", "run the property suites");
    common(verify_cmd, true);
    verify_cmd->add_option("--level", o.level, "exhaustive or sample:<N>");
    verify_cmd->add_option("--seed", o.seed, "random seed");
    verify_cmd->add_option("--suite", o.suites, "run only these suites");
    verify_cmd->callback([&] { action = cmd_verify; });

    auto* render_cmd = app.add_subcommand("render", "SVG of a generator, strand diagram or chord arcs");
    common(render_cmd, false);
    render_cmd->add_option("input", o.input, "JSON (default stdin)");
    render_cmd->callback([&] { action = cmd_render; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    }
    try {
        return action(o);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
}
