#include "weightgeom/branching.hpp"

#include <algorithm>

#include "weightgeom/diagram.hpp"
#include "weightgeom/errors.hpp"

namespace wg {

Weight BranchingRule::apply(const Weight& w) const {
    if (w.rank() != source.rank) throw InvalidArgument("branching rule " + name + ": weight of wrong rank");
    Weight out(target.rank);
    for (int t = 0; t < target.rank; ++t) {
        int s = 0;
        for (int j = 0; j < source.rank; ++j) s += matrix[t][j] * w[j];
        out[t] = s;
    }
    return out;
}

BranchingRule levi_rule(const RootSystemSpec& source, const std::vector<int>& removed,
                        std::optional<std::vector<int>> node_map) {
    auto rs = root_system(source);
    std::vector<int> keep;
    for (int i = 1; i <= rs->rank(); ++i) {
        if (std::find(removed.begin(), removed.end(), i) == removed.end()) keep.push_back(i);
    }
    if (keep.empty() || subdiagram_components(*rs, keep).size() != 1) {
        throw InvalidArgument("levi_rule: the remaining diagram must be connected and non-empty");
    }
    const RootSystemSpec target = classify_subdiagram(*rs, keep);
    auto trs = root_system(target);
    std::vector<int> f;
    if (node_map) {
        f = *node_map;
        if (static_cast<int>(f.size()) != target.rank) throw InvalidArgument("levi_rule: node map has wrong length");
        for (int s = 1; s <= target.rank; ++s) {
            for (int t = 1; t <= target.rank; ++t) {
                if (rs->cartan(f[s - 1], f[t - 1]) != trs->cartan(s, t)) {
                    throw InvalidArgument("levi_rule: node map does not preserve the Cartan matrix");
                }
            }
        }
    } else {
        f = *find_embedding(*rs, keep, *trs);
    }
    BranchingRule rule;
    rule.kind = BranchingRule::Kind::LeviRestriction;
    rule.source = source;
    rule.target = target;
    rule.removed = removed;
    std::sort(rule.removed.begin(), rule.removed.end());
    rule.name = source.name() + "->" + target.name();
    rule.matrix.assign(target.rank, std::vector<int>(source.rank, 0));
    // Restricting a weight to the Levi torus keeps its pairings with the
    // surviving coroots.
    for (int t = 0; t < target.rank; ++t) rule.matrix[t][f[t] - 1] = 1;
    return rule;
}

BranchingRule e6_to_d5_rule() {
    BranchingRule r = levi_rule({Family::E, 6}, {6}, std::vector<int>{1, 3, 4, 5, 2});
    r.name = "e6-d5";
    return r;
}

BranchingRule e6_to_f4_rule() {
    BranchingRule r;
    r.kind = BranchingRule::Kind::FoldingE6toF4;
    r.name = "e6-f4";
    r.source = {Family::E, 6};
    r.target = {Family::F, 4};
    r.matrix = {
        {0, 1, 0, 0, 0, 0},
        {0, 0, 0, 1, 0, 0},
        {0, 0, 1, 0, 1, 0},
        {1, 0, 0, 0, 0, 1},
    };
    return r;
}

BranchingRule e7_to_e6_rule() {
    BranchingRule r = levi_rule({Family::E, 7}, {7});
    r.name = "e7-e6";
    return r;
}

std::vector<std::string> named_rules() {
    return {"e6-d5", "e6-f4", "e7-e6"};
}

BranchingRule named_rule(const std::string& name) {
    if (name == "e6-d5") return e6_to_d5_rule();
    if (name == "e6-f4") return e6_to_f4_rule();
    if (name == "e7-e6") return e7_to_e6_rule();
    throw InvalidArgument("unknown branching rule '" + name + "' (known: e6-d5, e6-f4, e7-e6)");
}

BranchResult branch(const FormalCharacter& a, const BranchingRule& rule) {
    if (!(a.system().spec() == rule.source)) {
        throw InvalidArgument("branching rule " + rule.name + " expects " + rule.source.name() + ", got " +
                              a.system().name());
    }
    auto target = root_system(rule.target);
    FormalCharacter out(target);
    for (const auto& [w, m] : a.terms()) out.add(rule.apply(w), m);
    DecompositionResult dec = decompose(out);
    if (dec.dimension() != a.dimension()) {
        throw ConsistencyError("branching " + rule.name + " changed the dimension");
    }
    return {std::move(out), std::move(dec)};
}

}  // namespace wg
