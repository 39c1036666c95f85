#include "weightgeom/geometry.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "weightgeom/diagram.hpp"
#include "weightgeom/errors.hpp"

namespace wg {

namespace {

bool subset(const Support& a, const Support& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::size_t intersection_size(const Support& a, const Support& b) {
    std::size_t n = 0;
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i < *j) {
            ++i;
        } else if (*j < *i) {
            ++j;
        } else {
            ++n;
            ++i;
            ++j;
        }
    }
    return n;
}

Support reflect_support(const RootSystem& rs, const Support& s, int i) {
    Support out;
    for (const Weight& w : s) out.insert(rs.reflect(w, i));
    return out;
}

}  // namespace

GeometrySpec::GeometrySpec(std::shared_ptr<const RootSystem> rs, int b) : system(std::move(rs)), beta(b) {
    system->check_node(beta);
}

std::string GeometrySpec::name() const {
    return system->name() + "/" + std::to_string(beta);
}

int standard_beta(const RootSystemSpec& spec) {
    switch (spec.family) {
        case Family::E: return spec.rank == 6 ? 1 : spec.rank;
        case Family::F: return 4;
        default: return 1;
    }
}

GeometrySpec standard_geometry(const std::string& name) {
    auto rs = root_system(name);
    return GeometrySpec(rs, standard_beta(rs->spec()));
}

// ------------------------------------------------------------- delta spaces

BigInt levi_dimension(const GeometrySpec& g, int delta) {
    const RootSystem& rs = g.rs();
    const std::vector<int> comp = rs.delta_component(delta, g.beta);
    Weight shifted = g.omega();
    for (int j : comp) shifted[j - 1] += 1;
    Weight rho_l(rs.rank());
    for (int j : comp) rho_l[j - 1] = 1;
    BigInt num = 1, den = 1;
    for (const Root& a : rs.positive_roots()) {
        bool inside = true;
        for (int j = 1; j <= rs.rank() && inside; ++j) {
            if (a.simple[j - 1] != 0 && !std::binary_search(comp.begin(), comp.end(), j)) inside = false;
        }
        if (!inside) continue;
        num *= rs.pairing(shifted, a.simple);
        den *= rs.pairing(rho_l, a.simple);
    }
    return num / den;
}

DeltaSpace delta_space(const GeometrySpec& g, int delta) {
    const RootSystem& rs = g.rs();
    rs.check_node(delta);
    DeltaSpace out;
    out.delta = delta;
    out.component = rs.delta_component(delta, g.beta);
    out.levi_type = subdiagram_label(rs, out.component);

    const Weight omega = g.omega();
    const auto& comp = out.component;
    const FormalCharacter chi = irrep_character(g.system, omega);
    for (const auto& [mu, m] : chi.terms()) {
        auto diff = rs.simple_coords(omega - mu);
        if (!diff) throw ConsistencyError("weight outside the root lattice coset of omega");
        bool ok = true;
        for (int j = 1; j <= rs.rank() && ok; ++j) {
            if ((*diff)[j - 1] != 0 && !std::binary_search(comp.begin(), comp.end(), j)) ok = false;
        }
        if (!ok) continue;
        out.support.insert(mu);
        out.multiplicity.emplace(mu, m);
        out.dimension += static_cast<long long>(m);
    }

    // Lowest weight: push omega down with the reflections of the component.
    Weight low = omega;
    for (bool moved = true; moved;) {
        moved = false;
        for (int j : comp) {
            if (low[j - 1] > 0) {
                low = rs.reflect(low, j);
                moved = true;
            }
        }
    }
    out.lowest_weight = low;
    if (!out.support.count(low)) throw ConsistencyError("lowest weight of V_delta missing from its support");

    const BigInt levi = levi_dimension(g, delta);
    if (levi != out.dimension) {
        throw ConsistencyError(g.name() + " delta=" + std::to_string(delta) + ": support gives dimension " +
                               std::to_string(out.dimension) + " but the Levi representation has dimension " +
                               levi.str());
    }
    return out;
}

std::map<int, long long> dimension_diagram(const GeometrySpec& g) {
    std::map<int, long long> out;
    for (int d = 1; d <= g.rs().rank(); ++d) out[d] = delta_space(g, d).dimension;
    return out;
}

std::map<int, long long> halfspin_dimensions(int n) {
    if (n < 4) throw InvalidArgument("half-spin geometry needs D_n with n >= 4");
    return dimension_diagram(GeometrySpec(root_system(RootSystemSpec{Family::D, n}), n));
}

// ------------------------------------------------------------------- Hasse

std::vector<std::vector<Weight>> HasseDiagram::levels() const {
    std::vector<std::vector<Weight>> out;
    long long last = 0;
    for (const Weight& w : nodes) {
        long long h = system->scaled_height(w);
        if (out.empty() || h != last) {
            out.emplace_back();
            last = h;
        }
        out.back().push_back(w);
    }
    return out;
}

std::vector<HasseEdge> HasseDiagram::edges_from(const Weight& upper) const {
    std::vector<HasseEdge> out;
    for (const HasseEdge& e : edges) {
        if (e.upper == upper) out.push_back(e);
    }
    return out;
}

HasseDiagram hasse_diagram(const FormalCharacter& chi) {
    HasseDiagram h;
    h.system = chi.system_ptr();
    const RootSystem& rs = chi.system();
    h.multiplicity = chi.terms();
    h.nodes = chi.weights();
    std::sort(h.nodes.begin(), h.nodes.end(), [&](const Weight& a, const Weight& b) {
        long long ha = rs.scaled_height(a), hb = rs.scaled_height(b);
        return ha != hb ? ha > hb : a > b;
    });
    for (const Weight& w : h.nodes) {
        for (int i = 1; i <= rs.rank(); ++i) {
            Weight lower = w - rs.simple_root(i);
            if (h.multiplicity.count(lower)) h.edges.push_back({w, lower, i});
        }
    }
    return h;
}

// --------------------------------------------------------------- apartment

std::vector<ApartmentObject> apartment_objects(const GeometrySpec& g, int delta) {
    const RootSystem& rs = g.rs();
    if (!minuscule_check(rs, g.omega())) {
        throw ComputationRefused("apartment objects for " + g.name() +
                                 ": omega is not minuscule, so weight supports do not determine subspaces");
    }
    const DeltaSpace v = delta_space(g, delta);
    std::map<Support, std::size_t> index{{v.support, 0}};
    std::vector<ApartmentObject> out{{delta, WeylElement(), v.support}};
    for (std::size_t k = 0; k < out.size(); ++k) {
        for (int i = 1; i <= rs.rank(); ++i) {
            Support s = reflect_support(rs, out[k].support, i);
            if (index.count(s)) continue;
            index.emplace(s, out.size());
            out.push_back({delta, WeylElement({i}) * out[k].translate, std::move(s)});
        }
    }
    return out;
}

IncidenceRule incidence_rule(const GeometrySpec& g, int delta1, int delta2) {
    const RootSystem& rs = g.rs();
    rs.check_node(delta1);
    rs.check_node(delta2);
    using K = IncidenceRule::Kind;
    if (delta1 == delta2) return {K::Equality, 0, "same type: equal"};
    const int i = std::min(delta1, delta2), j = std::max(delta1, delta2);
    const Family fam = rs.spec().family;
    const int n = rs.rank();
    const int beta = g.beta;

    if (fam == Family::A && beta == 1) return {K::Containment, 0, "type A: inclusion"};
    if (fam == Family::D && beta == 1) {
        if (i == n - 1 && j == n) return {K::Intersection, n - 1, "D fork: intersection of size n-1"};
        return {K::Containment, 0, "type D: inclusion"};
    }
    if (fam == Family::E && n == 6 && beta == 1) {
        if (i == 2 && j == 5) return {K::Intersection, 4, "E6 (2,5): intersection of size 4"};
        if (i == 2 && j == 6) return {K::Intersection, 5, "E6 (2,6): intersection of size 5"};
        return {K::Containment, 0, "E6: inclusion"};
    }
    if ((fam == Family::F && beta == 4) || (fam == Family::G && beta == 1)) {
        return {K::Containment, 0, rs.name() + ": inclusion"};
    }
    if (fam == Family::D && beta >= n - 1) {
        const int other = beta == n ? n - 1 : n;
        if (i == other || j == other) {
            throw NoRuleError("no incidence rule for the other fork node in the half-spin geometry " + g.name());
        }
    }
    // Otherwise only the general criterion: if one component contains the
    // other, the larger is of type A and beta is terminal in it, incidence is
    // inclusion.
    const auto c1 = rs.delta_component(delta1, beta);
    const auto c2 = rs.delta_component(delta2, beta);
    auto covers = [&](int big, const std::vector<int>& cb, const std::vector<int>& cs) {
        if (big == beta || cb.empty()) return false;
        if (!std::includes(cb.begin(), cb.end(), cs.begin(), cs.end())) return false;
        if (classify_subdiagram(rs, cb).family != Family::A) return false;
        return is_terminal(rs, cb, beta);
    };
    if (covers(delta1, c1, c2) || covers(delta2, c2, c1)) {
        return {K::Containment, 0, "type-A component with beta terminal: inclusion"};
    }
    throw NoRuleError("no incidence rule for types (" + std::to_string(i) + "," + std::to_string(j) + ") in " +
                      g.name());
}

bool incident(const GeometrySpec& g, int delta1, const Support& s1, int delta2, const Support& s2) {
    const IncidenceRule r = incidence_rule(g, delta1, delta2);
    switch (r.kind) {
        case IncidenceRule::Kind::Equality: return s1 == s2;
        case IncidenceRule::Kind::Containment: return subset(s1, s2) || subset(s2, s1);
        case IncidenceRule::Kind::Intersection:
            return intersection_size(s1, s2) == static_cast<std::size_t>(r.intersection_size);
    }
    return false;
}

bool incidence(const GeometrySpec& g, const ApartmentObject& x, const ApartmentObject& y) {
    if (!minuscule_check(g.rs(), g.omega())) {
        throw ComputationRefused("incidence in " + g.name() + " is only computed for minuscule omega");
    }
    return incident(g, x.delta, x.support, y.delta, y.support);
}

ChamberPairReport standard_chamber_pairs(const GeometrySpec& g) {
    ChamberPairReport rep;
    std::vector<DeltaSpace> spaces;
    for (int d = 1; d <= g.rs().rank(); ++d) spaces.push_back(delta_space(g, d));
    for (int a = 1; a <= g.rs().rank(); ++a) {
        for (int b = a + 1; b <= g.rs().rank(); ++b) {
            try {
                ++rep.checked;
                if (incident(g, a, spaces[a - 1].support, b, spaces[b - 1].support)) ++rep.incident;
            } catch (const NoRuleError&) {
                --rep.checked;
                rep.no_rule.emplace_back(a, b);
            }
        }
    }
    return rep;
}

std::vector<DeltaSpace> standard_chamber(const GeometrySpec& g) {
    std::vector<DeltaSpace> out;
    for (int d = 1; d <= g.rs().rank(); ++d) out.push_back(delta_space(g, d));
    const ChamberPairReport rep = standard_chamber_pairs(g);
    if (rep.incident != rep.checked) {
        throw ConsistencyError("standard chamber of " + g.name() + " is not pairwise incident");
    }
    return out;
}

// -------------------------------------------------------------------- flags

bool is_flag(const GeometrySpec& g, const Flag& flag) {
    for (std::size_t a = 0; a < flag.size(); ++a) {
        for (std::size_t b = a + 1; b < flag.size(); ++b) {
            if (flag[a].delta == flag[b].delta) return false;
            if (!incidence(g, flag[a], flag[b])) return false;
        }
    }
    return true;
}

long long count_chamber_extensions(const GeometrySpec& g, const Flag& flag) {
    if (!is_flag(g, flag)) return 0;
    const int n = g.rs().rank();
    std::vector<const ApartmentObject*> chosen(n + 1, nullptr);
    for (const auto& x : flag) chosen[x.delta] = &x;
    std::vector<std::vector<ApartmentObject>> pool(n + 1);
    for (int d = 1; d <= n; ++d) {
        if (!chosen[d]) pool[d] = apartment_objects(g, d);
    }
    std::function<long long(int)> go = [&](int d) -> long long {
        if (d > n) return 1;
        if (chosen[d]) return go(d + 1);
        long long total = 0;
        for (const auto& cand : pool[d]) {
            bool ok = true;
            for (int e = 1; e <= n && ok; ++e) {
                if (e != d && chosen[e]) ok = incident(g, d, cand.support, e, chosen[e]->support);
            }
            if (!ok) continue;
            chosen[d] = &cand;
            total += go(d + 1);
            chosen[d] = nullptr;
        }
        return total;
    };
    return go(1);
}

IncidenceAudit audit_incidence(const GeometrySpec& g, long long max_chambers) {
    const RootSystem& rs = g.rs();
    const int n = rs.rank();
    IncidenceAudit audit;

    std::vector<ApartmentObject> objs;
    std::map<std::pair<int, Support>, int> id;
    std::vector<int> type_start(n + 2, 0);
    for (int d = 1; d <= n; ++d) {
        type_start[d] = static_cast<int>(objs.size());
        for (auto& x : apartment_objects(g, d)) {
            id.emplace(std::make_pair(d, x.support), static_cast<int>(objs.size()));
            objs.push_back(std::move(x));
        }
    }
    type_start[n + 1] = static_cast<int>(objs.size());
    audit.objects = static_cast<long long>(objs.size());

    // act[k][i-1]: index of s_i applied to object k
    std::vector<std::vector<int>> act(objs.size(), std::vector<int>(n));
    for (std::size_t k = 0; k < objs.size(); ++k) {
        for (int i = 1; i <= n; ++i) {
            act[k][i - 1] = id.at({objs[k].delta, reflect_support(rs, objs[k].support, i)});
        }
    }

    // Orbit of the standard chamber; each chamber marks its pairs incident.
    std::vector<int> start;
    for (int d = 1; d <= n; ++d) start.push_back(type_start[d]);
    std::set<std::vector<int>> seen{start};
    std::vector<std::vector<int>> queue{start};
    std::set<std::pair<int, int>> truth;
    for (std::size_t q = 0; q < queue.size(); ++q) {
        const std::vector<int> ch = queue[q];
        for (int a = 0; a < n; ++a) {
            for (int b = a + 1; b < n; ++b) truth.emplace(std::min(ch[a], ch[b]), std::max(ch[a], ch[b]));
        }
        for (int i = 1; i <= n; ++i) {
            std::vector<int> nx(n);
            for (int a = 0; a < n; ++a) nx[a] = act[ch[a]][i - 1];
            if (seen.insert(nx).second) {
                queue.push_back(nx);
                if (static_cast<long long>(queue.size()) > max_chambers) {
                    throw ComputationRefused("apartment of " + g.name() + " has more than " +
                                             std::to_string(max_chambers) + " chambers");
                }
            }
        }
    }
    audit.chambers = static_cast<long long>(queue.size());

    for (int d1 = 1; d1 <= n; ++d1) {
        for (int d2 = d1 + 1; d2 <= n; ++d2) {
            try {
                incidence_rule(g, d1, d2);
            } catch (const NoRuleError&) {
                audit.no_rule.emplace_back(d1, d2);
                continue;
            }
            for (int x = type_start[d1]; x < type_start[d1 + 1]; ++x) {
                for (int y = type_start[d2]; y < type_start[d2 + 1]; ++y) {
                    ++audit.pairs;
                    const bool t = truth.count({x, y}) > 0;
                    const bool r = incident(g, d1, objs[x].support, d2, objs[y].support);
                    audit.truly_incident += t;
                    audit.rule_incident += r;
                    if (r && !t) ++audit.false_positives;
                    if (t && !r) ++audit.false_negatives;
                }
            }
        }
    }
    return audit;
}

}  // namespace wg
