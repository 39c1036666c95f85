#ifndef WEIGHTGEOM_RENDER_HPP
#define WEIGHTGEOM_RENDER_HPP

#include <map>
#include <string>

#include <json.hpp>

#include "weightgeom/duality.hpp"
#include "weightgeom/triality.hpp"

namespace wg {

using Json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

Json weight_json(const Weight& w);
Json support_json(const Support& s);
Json root_system_json(const RootSystem& rs);
Json character_json(const FormalCharacter& chi);
Json decomposition_json(const DecompositionResult& d);

// Optional per-node annotations, e.g. "lambda3".
using NodeNotes = std::map<Weight, std::string>;
// Lowest weights of the standard delta-spaces, as "lambda<i>".
NodeNotes lowest_weight_notes(const GeometrySpec& g);

std::string hasse_dot(const HasseDiagram& h, const NodeNotes& notes = {});
std::string hasse_ascii(const HasseDiagram& h, const NodeNotes& notes = {});
Json hasse_json(const HasseDiagram& h, const NodeNotes& notes = {});

// Dynkin diagram with beta on the left, each node showing its label on top
// and a<i> underneath; a branch node sits above the node it hangs from.
// Double and triple bonds are drawn "=<=" / "#<#", the arrow pointing at the
// short root.
std::string dynkin_ascii(const RootSystem& rs, int beta, const std::map<int, std::string>& labels);
std::string dims_ascii(const GeometrySpec& g, const std::map<int, long long>& dims);
Json dims_json(const GeometrySpec& g, const std::map<int, long long>& dims);

std::string triality_ascii(const TrialityTable& t);
Json triality_json(const TrialityTable& t);

}  // namespace wg

#endif
