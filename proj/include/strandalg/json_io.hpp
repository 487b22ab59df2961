#ifndef STRANDALG_JSON_IO_HPP
#define STRANDALG_JSON_IO_HPP

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "strandalg/algebra.hpp"
#include "strandalg/diagrams.hpp"
#include "strandalg/grading.hpp"
#include "strandalg/pmc.hpp"
#include "strandalg/pontryagin.hpp"
#include "strandalg/strands.hpp"

namespace strandalg::io {

using Json = nlohmann::json;

/// Parses text, reporting syntax errors as Error(Parse) with the source name,
/// line and column.
Json parse(std::string_view text, std::string_view source = "<input>");
Json parse_file(const std::string& path);
/// Canonical form: sorted keys, no whitespace.
std::string canonical(const Json& j);

// Every reader validates structure (throwing Error(Parse) with a JSON pointer
// to the offending value) and then the domain invariants (throwing the
// corresponding domain error).

Json to_json(const PointedMatchedCircle& pmc);
PointedMatchedCircle pmc_from_json(const Json& j);

Json to_json(const StrandDiagram& d);
StrandDiagram strand_diagram_from_json(const Json& j);

/// `{"ambient": n, "terms": [[[i, j], ...], ...]}`.
Json to_json(const AlgebraElement& a);
AlgebraElement algebra_element_from_json(const Json& j);

Json to_json(const ReebChord& c);
Json to_json(const ChordSet& rho);
ChordSet chord_set_from_json(const Json& j, int num_points);

Json to_json(const MatchedGenerator& g);
MatchedGenerator generator_from_json(const Json& j, const PointedMatchedCircle& pmc);

Json to_json(const GradingElement& g);
GradingElement grading_from_json(const Json& j, int num_points);

Json to_json(const ChordArcDiagram& d);
ChordArcDiagram chord_arc_diagram_from_json(const Json& j, int num_points);

Json segments_to_json(const std::vector<ReebChord>& segments);
std::vector<ReebChord> segments_from_json(const Json& j, int num_points);

Json to_json(const BorderedDiagram& d);
BorderedDiagram bordered_diagram_from_json(const Json& j);

Json to_json(const BorderedDomain& b);
BorderedDomain domain_from_json(const Json& j);

Json to_json(const Generator& x);
Generator diagram_generator_from_json(const Json& j, const BorderedDiagram& d);

}  // namespace strandalg::io

#endif
