#include "strandalg/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "strandalg/error.hpp"

namespace strandalg::io {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw Error(ErrorCode::Parse, "at " + (where.empty() ? std::string("/") : where) + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& where) {
    if (!j.is_object()) fail(where, "expected an object");
    const auto it = j.find(key);
    if (it == j.end()) fail(where, std::string("missing key \"") + key + "\"");
    return *it;
}

int as_int(const Json& j, const std::string& where) {
    if (!j.is_number_integer()) fail(where, "expected an integer");
    const auto v = j.get<std::int64_t>();
    if (v < -(1LL << 30) || v > (1LL << 30)) fail(where, "integer out of range");
    return static_cast<int>(v);
}

std::vector<int> as_int_array(const Json& j, const std::string& where) {
    if (!j.is_array()) fail(where, "expected an array");
    std::vector<int> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_int(j[i], where + "/" + std::to_string(i)));
    return out;
}

std::pair<int, int> as_pair(const Json& j, const std::string& where) {
    const auto v = as_int_array(j, where);
    if (v.size() != 2) fail(where, "expected a pair of integers");
    return {v[0], v[1]};
}

ChordSet chord_set_at(const Json& j, int num_points, const std::string& where) {
    if (!j.is_array()) fail(where, "expected an array of chords");
    std::vector<ReebChord> chords;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const auto [a, b] = as_pair(j[i], where + "/" + std::to_string(i));
        chords.push_back(ReebChord::create(a, b, num_points));
    }
    return ChordSet::create(std::move(chords));
}

Json strands_json(const StrandDiagram& d) {
    Json arr = Json::array();
    for (const auto& s : d.strands()) arr.push_back({s.source, s.target});
    return arr;
}

StrandDiagram strands_at(const Json& j, int ambient, const std::string& where) {
    if (!j.is_array()) fail(where, "expected an array of strands");
    std::vector<Strand> strands;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const auto [a, b] = as_pair(j[i], where + "/" + std::to_string(i));
        strands.push_back({a, b});
    }
    return StrandDiagram::create(ambient, strands);
}

int ambient_at(const Json& j, const std::string& where) {
    const int n = as_int(field(j, "ambient", where), where + "/ambient");
    if (n < 0 || n > kMaxPoints) fail(where + "/ambient", "ambient size out of range");
    return n;
}

constexpr const char* kQuadrantNames[] = {"NE", "NW", "SW", "SE"};

}  // namespace

Json parse(std::string_view text, std::string_view source) {
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        // byte is 1-based and points just past the offending character.
        const std::size_t offset = e.byte == 0 ? 0 : std::min<std::size_t>(e.byte - 1, text.size());
        int line = 1, column = 1;
        for (std::size_t i = 0; i < offset; ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        // Drop the library's own "[json.exception...] parse error at line L, column C: " prefix.
        std::string what = e.what();
        if (const auto pos = what.find(": ", what.find("parse error")); pos != std::string::npos)
            what = what.substr(pos + 2);
        throw Error(ErrorCode::Parse, std::string(source) + ":" + std::to_string(line) + ":" +
                                          std::to_string(column) + ": " + what);
    }
}

Json parse_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::Parse, path + ": cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str(), path);
}

std::string canonical(const Json& j) { return j.dump(); }

Json to_json(const PointedMatchedCircle& pmc) {
    return {{"points", pmc.num_points()}, {"matching", pmc.matching()}};
}

PointedMatchedCircle pmc_from_json(const Json& j) {
    const int n = as_int(field(j, "points", ""), "/points");
    auto matching = as_int_array(field(j, "matching", ""), "/matching");
    if (static_cast<int>(matching.size()) != n)
        throw Error(ErrorCode::BadSize, "matching has " + std::to_string(matching.size()) + " entries for " +
                                            std::to_string(n) + " points");
    return PointedMatchedCircle::create(n, std::move(matching));
}

Json to_json(const StrandDiagram& d) { return {{"ambient", d.ambient()}, {"strands", strands_json(d)}}; }

StrandDiagram strand_diagram_from_json(const Json& j) {
    return strands_at(field(j, "strands", ""), ambient_at(j, ""), "/strands");
}

Json to_json(const AlgebraElement& a) {
    Json terms = Json::array();
    for (const auto& d : a.terms()) terms.push_back(strands_json(d));
    return {{"ambient", a.ambient()}, {"terms", terms}};
}

AlgebraElement algebra_element_from_json(const Json& j) {
    const int n = ambient_at(j, "");
    const Json& terms = field(j, "terms", "");
    if (!terms.is_array()) fail("/terms", "expected an array");
    std::vector<StrandDiagram> out;
    for (std::size_t i = 0; i < terms.size(); ++i) out.push_back(strands_at(terms[i], n, "/terms/" + std::to_string(i)));
    return AlgebraElement(n, std::move(out));
}

Json to_json(const ReebChord& c) { return {c.minus, c.plus}; }

Json to_json(const ChordSet& rho) {
    Json arr = Json::array();
    for (const auto& c : rho.chords()) arr.push_back(to_json(c));
    return arr;
}

ChordSet chord_set_from_json(const Json& j, int num_points) { return chord_set_at(j, num_points, ""); }

Json to_json(const MatchedGenerator& g) {
    Json s = Json::array();
    for (int h = 1; h <= 32; ++h)
        if (g.idempotent & handle_bit(h)) s.push_back(h);
    return {{"s", s}, {"chords", to_json(g.chords)}};
}

MatchedGenerator generator_from_json(const Json& j, const PointedMatchedCircle& pmc) {
    MatchedGenerator g;
    const auto s = as_int_array(field(j, "s", ""), "/s");
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 1 || s[i] > pmc.num_handles())
            fail("/s/" + std::to_string(i), "handle label outside 1.." + std::to_string(pmc.num_handles()));
        if (g.idempotent & handle_bit(s[i])) fail("/s/" + std::to_string(i), "repeated handle label");
        g.idempotent |= handle_bit(s[i]);
    }
    g.chords = chord_set_at(field(j, "chords", ""), pmc.num_points(), "/chords");
    return g;
}

Json to_json(const GradingElement& g) {
    return {{"maslov2", g.maslov().scaled()}, {"alpha", g.spin_c().segments()}};
}

GradingElement grading_from_json(const Json& j, int num_points) {
    const int m2 = as_int(field(j, "maslov2", ""), "/maslov2");
    auto alpha = as_int_array(field(j, "alpha", ""), "/alpha");
    return GradingElement(HalfInteger::from_scaled(m2), HomologyClass(num_points, std::move(alpha)));
}

Json to_json(const ChordArcDiagram& d) {
    Json layers = Json::array();
    for (const auto& l : d.layers) layers.push_back(to_json(l));
    return {{"layers", layers}};
}

ChordArcDiagram chord_arc_diagram_from_json(const Json& j, int num_points) {
    const Json& layers = field(j, "layers", "");
    if (!layers.is_array()) fail("/layers", "expected an array");
    ChordArcDiagram d{num_points, {}};
    for (std::size_t i = 0; i < layers.size(); ++i)
        d.layers.push_back(chord_set_at(layers[i], num_points, "/layers/" + std::to_string(i)));
    return d;
}

Json segments_to_json(const std::vector<ReebChord>& segments) {
    Json arr = Json::array();
    for (const auto& c : segments) arr.push_back(to_json(c));
    return {{"segments", arr}};
}

std::vector<ReebChord> segments_from_json(const Json& j, int num_points) {
    const Json& segs = field(j, "segments", "");
    if (!segs.is_array()) fail("/segments", "expected an array");
    std::vector<ReebChord> out;
    for (std::size_t i = 0; i < segs.size(); ++i) {
        const auto [a, b] = as_pair(segs[i], "/segments/" + std::to_string(i));
        out.push_back(ReebChord::create(a, b, num_points));
    }
    return out;
}

Json to_json(const BorderedDiagram& d) {
    Json points = Json::array();
    for (const auto& p : d.points())
        points.push_back({{"id", p.id}, {"alpha", p.alpha}, {"beta", p.beta}, {"arc", p.on_arc}});
    Json regions = Json::array();
    for (const auto& r : d.regions()) {
        Json quads = Json::object();
        for (const auto& [id, qs] : r.quadrants) {
            Json names = Json::array();
            for (Quadrant q : qs) names.push_back(kQuadrantNames[static_cast<int>(q)]);
            quads[std::to_string(id)] = names;
        }
        regions.push_back({{"chi", r.euler_char},
                           {"convex", r.convex_corners},
                           {"concave", r.concave_corners},
                           {"quadrants", quads},
                           {"bseg", r.boundary_segments}});
    }
    return {{"pmc", to_json(d.pmc())}, {"genus", d.genus()}, {"points", points}, {"regions", regions}};
}

BorderedDiagram bordered_diagram_from_json(const Json& j) {
    const Json& pmc_json = field(j, "pmc", "");
    PointedMatchedCircle pmc = [&] {
        try {
            return pmc_from_json(pmc_json);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::Parse) throw;
            fail("/pmc", e.what());
        }
    }();
    const int genus = as_int(field(j, "genus", ""), "/genus");

    const Json& pts = field(j, "points", "");
    if (!pts.is_array()) fail("/points", "expected an array");
    std::vector<IntersectionPoint> points;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const std::string w = "/points/" + std::to_string(i);
        IntersectionPoint p;
        p.id = as_int(field(pts[i], "id", w), w + "/id");
        p.alpha = as_int(field(pts[i], "alpha", w), w + "/alpha");
        p.beta = as_int(field(pts[i], "beta", w), w + "/beta");
        const Json& arc = field(pts[i], "arc", w);
        if (!arc.is_boolean()) fail(w + "/arc", "expected a boolean");
        p.on_arc = arc.get<bool>();
        points.push_back(p);
    }

    const Json& regs = field(j, "regions", "");
    if (!regs.is_array()) fail("/regions", "expected an array");
    std::vector<RegionData> regions;
    for (std::size_t i = 0; i < regs.size(); ++i) {
        const std::string w = "/regions/" + std::to_string(i);
        RegionData r;
        r.euler_char = as_int(field(regs[i], "chi", w), w + "/chi");
        r.convex_corners = as_int(field(regs[i], "convex", w), w + "/convex");
        r.concave_corners = as_int(field(regs[i], "concave", w), w + "/concave");
        const Json& quads = field(regs[i], "quadrants", w);
        if (!quads.is_object()) fail(w + "/quadrants", "expected an object keyed by point id");
        for (const auto& [key, names] : quads.items()) {
            const std::string wq = w + "/quadrants/" + key;
            int id = 0;
            try {
                std::size_t used = 0;
                id = std::stoi(key, &used);
                if (used != key.size()) throw std::invalid_argument(key);
            } catch (const std::exception&) {
                fail(wq, "point id key is not an integer");
            }
            if (!names.is_array()) fail(wq, "expected an array of quadrant names");
            std::vector<Quadrant> qs;
            for (std::size_t k = 0; k < names.size(); ++k) {
                const auto* begin = std::begin(kQuadrantNames);
                const auto* end = std::end(kQuadrantNames);
                const auto* hit = names[k].is_string()
                                      ? std::find(begin, end, names[k].get<std::string>())
                                      : end;
                if (hit == end) fail(wq + "/" + std::to_string(k), "expected one of NE, NW, SW, SE");
                qs.push_back(static_cast<Quadrant>(hit - begin));
            }
            r.quadrants[id] = std::move(qs);
        }
        if (regs[i].contains("bseg")) r.boundary_segments = as_int_array(regs[i]["bseg"], w + "/bseg");
        regions.push_back(std::move(r));
    }
    return BorderedDiagram(std::move(pmc), genus, std::move(points), std::move(regions));
}

Json to_json(const BorderedDomain& b) { return {{"mult", b.multiplicities}}; }

BorderedDomain domain_from_json(const Json& j) { return {as_int_array(field(j, "mult", ""), "/mult")}; }

Json to_json(const Generator& x) { return {{"points", x.points}}; }

Generator diagram_generator_from_json(const Json& j, const BorderedDiagram& d) {
    auto ids = as_int_array(field(j, "points", ""), "/points");
    for (std::size_t i = 0; i < ids.size(); ++i) (void)d.point(ids[i]);
    auto g = make_generator(d, ids);
    if (!g) throw Error(ErrorCode::InvalidDomain, "point set is not a generator of the diagram");
    return *g;
}

}  // namespace strandalg::io
