#ifndef WEIGHTGEOM_BRANCHING_HPP
#define WEIGHTGEOM_BRANCHING_HPP

#include <optional>
#include <string>
#include <vector>

#include "weightgeom/character.hpp"

namespace wg {

struct BranchingRule {
    enum class Kind { LeviRestriction, FoldingE6toF4 };

    Kind kind = Kind::LeviRestriction;
    std::string name;
    RootSystemSpec source;
    RootSystemSpec target;
    std::vector<int> removed;                 // Levi: the deleted source nodes
    std::vector<std::vector<int>> matrix;     // target_rank x source_rank, on fw coordinates

    Weight apply(const Weight& w) const;
};

// Restriction to the derived Levi subgroup obtained by deleting `removed`.
// The remaining diagram must be connected. node_map[t-1] names the source
// node playing the role of target node t; if omitted the first
// Cartan-compatible labelling is used.
BranchingRule levi_rule(const RootSystemSpec& source, const std::vector<int>& removed,
                        std::optional<std::vector<int>> node_map = std::nullopt);

// E6 -> D5 at alpha_6: keeps (c1,c3,c4,c5) and moves c2 to the end.
BranchingRule e6_to_d5_rule();
// E6 -> F4 folding: (c2, c4, c3+c5, c1+c6).
BranchingRule e6_to_f4_rule();
// E7 -> E6 at alpha_7.
BranchingRule e7_to_e6_rule();

BranchingRule named_rule(const std::string& name);  // "e6-d5", "e6-f4", "e7-e6"
std::vector<std::string> named_rules();

struct BranchResult {
    FormalCharacter restricted;
    DecompositionResult decomposition;
};

BranchResult branch(const FormalCharacter& a, const BranchingRule& rule);

}  // namespace wg

#endif
