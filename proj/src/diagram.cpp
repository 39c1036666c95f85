#include "weightgeom/diagram.hpp"

#include <algorithm>
#include <functional>

#include "weightgeom/errors.hpp"

namespace wg {

namespace {

bool contains(const std::vector<int>& v, int x) {
    return std::find(v.begin(), v.end(), x) != v.end();
}

std::vector<int> sub_neighbours(const RootSystem& rs, const std::vector<int>& nodes, int i) {
    std::vector<int> out;
    for (int j : rs.neighbours(i)) {
        if (contains(nodes, j)) out.push_back(j);
    }
    return out;
}

}  // namespace

std::vector<std::vector<int>> subdiagram_components(const RootSystem& rs, const std::vector<int>& nodes) {
    std::vector<std::vector<int>> out;
    std::vector<int> done;
    std::vector<int> sorted = nodes;
    std::sort(sorted.begin(), sorted.end());
    for (int start : sorted) {
        if (contains(done, start)) continue;
        std::vector<int> comp{start};
        done.push_back(start);
        for (std::size_t k = 0; k < comp.size(); ++k) {
            for (int j : sub_neighbours(rs, sorted, comp[k])) {
                if (!contains(done, j)) {
                    done.push_back(j);
                    comp.push_back(j);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(comp);
    }
    return out;
}

bool is_terminal(const RootSystem& rs, const std::vector<int>& nodes, int node) {
    return sub_neighbours(rs, nodes, node).size() <= 1;
}

RootSystemSpec classify_subdiagram(const RootSystem& rs, const std::vector<int>& nodes) {
    if (nodes.empty() || subdiagram_components(rs, nodes).size() != 1) {
        throw InvalidArgument("classify_subdiagram needs a connected, non-empty node set");
    }
    const int n = static_cast<int>(nodes.size());
    RootSystemSpec spec{Family::A, n};
    int max_bond = 1;
    for (int i : nodes) {
        for (int j : sub_neighbours(rs, nodes, i)) max_bond = std::max(max_bond, -rs.cartan(i, j));
    }
    if (max_bond == 3) {
        spec = {Family::G, 2};
    } else if (max_bond == 2) {
        int lo = 1 << 20, hi = 0;
        for (int i : nodes) {
            lo = std::min(lo, rs.half_length(i));
            hi = std::max(hi, rs.half_length(i));
        }
        int n_short = 0, n_long = 0;
        for (int i : nodes) (rs.half_length(i) == lo ? n_short : n_long) += 1;
        if (n == 4 && n_short == 2 && n_long == 2) {
            spec = {Family::F, 4};
        } else if (n_short == 1) {
            spec = {Family::B, n};
        } else if (n_long == 1) {
            spec = {Family::C, n};
        }
    } else {
        int branch = 0;
        for (int i : nodes) {
            if (sub_neighbours(rs, nodes, i).size() >= 3) branch = i;
        }
        if (branch) {
            std::vector<int> arms;
            for (int j : sub_neighbours(rs, nodes, branch)) {
                int len = 1, prev = branch, cur = j;
                for (;;) {
                    std::vector<int> nx;
                    for (int k : sub_neighbours(rs, nodes, cur)) {
                        if (k != prev) nx.push_back(k);
                    }
                    if (nx.empty()) break;
                    prev = cur;
                    cur = nx.front();
                    ++len;
                }
                arms.push_back(len);
            }
            std::sort(arms.begin(), arms.end());
            if (arms.size() == 3 && arms[0] == 1 && arms[1] == 1) {
                spec = {Family::D, n};
            } else if (arms.size() == 3 && arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) {
                spec = {Family::E, n};
            }
        }
    }
    if (!spec.valid()) throw ConsistencyError("could not classify a subdiagram of " + rs.name());
    if (!find_embedding(rs, nodes, *root_system(spec))) {
        throw ConsistencyError("subdiagram of " + rs.name() + " is not of type " + spec.name());
    }
    return spec;
}

std::string subdiagram_label(const RootSystem& rs, const std::vector<int>& nodes) {
    if (nodes.empty()) return "-";
    std::string out;
    for (const auto& comp : subdiagram_components(rs, nodes)) {
        if (!out.empty()) out += "x";
        out += classify_subdiagram(rs, comp).name();
    }
    return out;
}

std::optional<std::vector<int>> find_embedding(const RootSystem& source, const std::vector<int>& nodes,
                                               const RootSystem& target) {
    const int n = target.rank();
    if (static_cast<int>(nodes.size()) != n) return std::nullopt;
    std::vector<int> pool = nodes;
    std::sort(pool.begin(), pool.end());
    std::vector<int> f(n, 0);
    std::vector<bool> used(pool.size(), false);
    std::function<bool(int)> place = [&](int t) -> bool {
        if (t == n) return true;
        for (std::size_t k = 0; k < pool.size(); ++k) {
            if (used[k]) continue;
            f[t] = pool[k];
            bool ok = source.cartan(f[t], f[t]) == 2;
            for (int s = 0; s < t && ok; ++s) {
                ok = source.cartan(f[s], f[t]) == target.cartan(s + 1, t + 1) &&
                     source.cartan(f[t], f[s]) == target.cartan(t + 1, s + 1);
            }
            if (!ok) continue;
            used[k] = true;
            if (place(t + 1)) return true;
            used[k] = false;
        }
        return false;
    };
    if (!place(0)) return std::nullopt;
    return f;
}

}  // namespace wg
