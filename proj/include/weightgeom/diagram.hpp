#ifndef WEIGHTGEOM_DIAGRAM_HPP
#define WEIGHTGEOM_DIAGRAM_HPP

#include <optional>
#include <string>
#include <vector>

#include "weightgeom/rootsystem.hpp"

namespace wg {

// Connected components of the Dynkin subgraph on `nodes`, each sorted.
std::vector<std::vector<int>> subdiagram_components(const RootSystem& rs, const std::vector<int>& nodes);

// Type of a connected, non-empty subdiagram.
RootSystemSpec classify_subdiagram(const RootSystem& rs, const std::vector<int>& nodes);

// "D5", "A1xA4", or "-" for the empty diagram.
std::string subdiagram_label(const RootSystem& rs, const std::vector<int>& nodes);

// Lexicographically first map f with f[t-1] in `nodes` and
// source.cartan(f[s-1], f[t-1]) == target.cartan(s, t).
std::optional<std::vector<int>> find_embedding(const RootSystem& source, const std::vector<int>& nodes,
                                               const RootSystem& target);

// Nodes joined to at most one other node of the subdiagram.
bool is_terminal(const RootSystem& rs, const std::vector<int>& nodes, int node);

}  // namespace wg

#endif
