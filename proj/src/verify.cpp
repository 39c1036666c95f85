#include "weightgeom/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "weightgeom/branching.hpp"
#include "weightgeom/errors.hpp"
#include "weightgeom/triality.hpp"

namespace wg {

namespace {

struct Recorder {
    CheckResult res;
    Recorder(std::string id, std::string name) {
        res.id = std::move(id);
        res.name = std::move(name);
    }
    bool expect(bool ok, const std::string& what) {
        if (!ok) res.failures.push_back(what);
        return ok;
    }
    void note(const std::string& s) { res.notes.push_back(s); }
    CheckResult done() {
        res.pass = res.failures.empty();
        return res;
    }
    // Runs f, turning a thrown exception into a failure.
    template <class F>
    void guard(const std::string& what, F&& f) {
        try {
            f();
        } catch (const std::exception& e) {
            res.failures.push_back(what + ": " + e.what());
        }
    }
};

std::string show(const std::map<int, long long>& m) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (const auto& [k, v] : m) {
        os << (first ? "" : ",") << k << ':' << v;
        first = false;
    }
    os << '}';
    return os.str();
}

std::vector<long long> constituent_dims(const DecompositionResult& d) {
    std::vector<long long> out;
    for (const auto& [hw, m] : d.constituents) {
        for (BigInt k = 0; k < m; ++k) out.push_back(static_cast<long long>(weyl_dimension(*d.system, hw)));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string show(const std::vector<long long>& v) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ']';
    return os.str();
}

GeometrySpec geom(const std::string& name, int beta) { return GeometrySpec(root_system(name), beta); }

// --------------------------------------------------------------------- 1

CheckResult check_dims() {
    Recorder r("1", "dims");
    auto want = [&](const GeometrySpec& g, const std::map<int, long long>& expect) {
        r.guard(g.name(), [&] {
            const auto got = dimension_diagram(g);
            r.expect(got == expect, g.name() + ": got " + show(got) + ", expected " + show(expect));
        });
    };
    for (int n = 1; n <= 8; ++n) {
        std::map<int, long long> e;
        for (int i = 1; i <= n; ++i) e[i] = i;
        want(geom("A" + std::to_string(n), 1), e);
    }
    for (int n = 4; n <= 8; ++n) {
        std::map<int, long long> e;
        for (int i = 1; i <= n - 2; ++i) e[i] = i;
        e[n - 1] = n;
        e[n] = n;
        want(geom("D" + std::to_string(n), 1), e);
    }
    want(geom("E6", 1), {{1, 1}, {2, 6}, {3, 2}, {4, 3}, {5, 5}, {6, 10}});
    want(geom("E7", 7), {{7, 1}, {6, 2}, {5, 3}, {4, 4}, {3, 6}, {1, 12}, {2, 7}});
    want(geom("F4", 4), {{4, 1}, {3, 2}, {2, 3}, {1, 6}});
    want(geom("G2", 1), {{1, 1}, {2, 2}});
    return r.done();
}

// --------------------------------------------------------------------- 2

CheckResult check_standard_dims() {
    Recorder r("2", "standard-dims");
    auto want = [&](const std::string& name, int node, long long expect) {
        r.guard(name, [&] {
            auto rs = root_system(name);
            const BigInt d = weyl_dimension(*rs, rs->fundamental(node));
            r.expect(d == expect, name + " omega" + std::to_string(node) + ": got " + d.str() + ", expected " +
                                      std::to_string(expect));
        });
    };
    for (int n = 1; n <= 8; ++n) want("A" + std::to_string(n), 1, n + 1);
    for (int n = 2; n <= 8; ++n) want("B" + std::to_string(n), 1, 2 * n + 1);
    for (int n = 2; n <= 8; ++n) want("C" + std::to_string(n), 1, 2 * n);
    for (int n = 4; n <= 8; ++n) want("D" + std::to_string(n), 1, 2 * n);
    want("E6", 1, 27);
    want("E7", 7, 56);
    want("F4", 4, 26);
    want("G2", 1, 7);
    want("E8", 8, 248);
    want("E8", 1, 3875);
    return r.done();
}

// --------------------------------------------------------------------- 3

CheckResult check_e6_hasse() {
    Recorder r("3", "e6-hasse");
    r.guard("E6 Hasse diagram", [&] {
        auto rs = root_system("E6");
        const HasseDiagram h = hasse_diagram(irrep_character(rs, rs->fundamental(1)));
        r.expect(h.nodes.size() == 27, "expected 27 nodes, got " + std::to_string(h.nodes.size()));

        // Top of the diagram: a chain 1, 3, 4, then a fork {2, 5}.
        Weight cur = rs->fundamental(1);
        for (int label : {1, 3, 4}) {
            const auto out = h.edges_from(cur);
            if (!r.expect(out.size() == 1 && out[0].label == label,
                          "edge below " + cur.str() + " should be the single label " + std::to_string(label))) {
                return;
            }
            cur = out[0].lower;
        }
        std::set<int> fork;
        for (const auto& e : h.edges_from(cur)) fork.insert(e.label);
        r.expect(fork == std::set<int>{2, 5}, "fork below " + cur.str() + " should carry labels {2,5}");

        // Recount every edge from scratch.
        std::set<std::tuple<Weight, Weight, int>> brute, got;
        for (const Weight& a : h.nodes) {
            for (const Weight& b : h.nodes) {
                for (int i = 1; i <= 6; ++i) {
                    if (a - b == rs->simple_root(i)) brute.emplace(a, b, i);
                }
            }
        }
        for (const auto& e : h.edges) got.emplace(e.upper, e.lower, e.label);
        r.expect(brute == got, "edge set differs from brute-force recount");
        r.note(std::to_string(got.size()) + " edges");

        // -phi turns the diagram upside down.
        const DiagramAutomorphism phi = e6_phi();
        auto flip = [&](const Weight& w) { return -phi.apply(w); };
        std::set<Weight> nodes(h.nodes.begin(), h.nodes.end());
        bool ok = true;
        for (const Weight& w : h.nodes) ok = ok && nodes.count(flip(w));
        for (const auto& e : h.edges) ok = ok && got.count({flip(e.lower), flip(e.upper), phi(e.label)});
        r.expect(ok, "-phi is not an anti-automorphism of the weight poset");
    });
    return r.done();
}

// --------------------------------------------------------------------- 4

CheckResult check_invariants() {
    Recorder r("4", "invariants");
    r.guard("E6", [&] {
        auto rs = root_system("E6");
        const FormalCharacter v = irrep_character(rs, rs->fundamental(6));
        const long long expect[] = {0, 0, 1};
        for (int d = 1; d <= 3; ++d) {
            const BigInt m = trivial_multiplicity(symmetric_power(v, d));
            r.expect(m == expect[d - 1], "E6 S^" + std::to_string(d) + "(V(omega6)) trivial multiplicity " + m.str());
        }
    });
    r.guard("E7", [&] {
        auto rs = root_system("E7");
        const FormalCharacter v = irrep_character(rs, rs->fundamental(7));
        const BigInt l2 = trivial_multiplicity(exterior_power(v, 2));
        r.expect(l2 == 1, "E7 L^2 trivial multiplicity " + l2.str());
        const BigInt s4 = trivial_multiplicity(symmetric_power(v, 4));
        r.expect(s4 == 1, "E7 S^4 trivial multiplicity " + s4.str());
    });
    r.guard("D4", [&] {
        auto rs = root_system("D4");
        const FormalCharacter t = tensor_product(
            tensor_product(irrep_character(rs, rs->fundamental(1)), irrep_character(rs, rs->fundamental(3))),
            irrep_character(rs, rs->fundamental(4)));
        const BigInt m = trivial_multiplicity(t);
        r.expect(m == 1, "D4 rho0 x rho1 x rho2 trivial multiplicity " + m.str());
    });
    r.guard("bilinear types", [&] {
        for (int n = 4; n <= 6; ++n) {
            auto rs = root_system("D" + std::to_string(n));
            r.expect(invariant_bilinear_type(rs, rs->fundamental(1)) == BilinearType::Symmetric,
                     rs->name() + " omega1 should be symmetric");
        }
        auto e7 = root_system("E7");
        r.expect(invariant_bilinear_type(e7, e7->fundamental(7)) == BilinearType::Skew, "E7 omega7 should be skew");
        auto e6 = root_system("E6");
        r.expect(invariant_bilinear_type(e6, e6->fundamental(1)) == BilinearType::None, "E6 omega1 should have none");
    });
    return r.done();
}

// --------------------------------------------------------------------- 5

CheckResult check_branching() {
    Recorder r("5", "branching");
    r.guard("e6-d5", [&] {
        auto rs = root_system("E6");
        const auto b = branch(irrep_character(rs, rs->fundamental(1)), e6_to_d5_rule());
        const auto d = constituent_dims(b.decomposition);
        r.expect(d == std::vector<long long>{1, 10, 16}, "E6 -> D5: " + show(d));
    });
    r.guard("e6-f4", [&] {
        auto rs = root_system("E6");
        const auto b = branch(irrep_character(rs, rs->fundamental(1)), e6_to_f4_rule());
        const auto d = constituent_dims(b.decomposition);
        r.expect(d == std::vector<long long>{1, 26}, "E6 -> F4: " + show(d));
    });
    r.guard("e7-e6", [&] {
        auto rs = root_system("E7");
        const auto b = branch(irrep_character(rs, rs->fundamental(7)), e7_to_e6_rule());
        const auto d = constituent_dims(b.decomposition);
        r.expect(d == std::vector<long long>{1, 1, 27, 27}, "E7 -> E6: " + show(d));
        std::vector<Weight> big;
        for (const auto& [hw, m] : b.decomposition.constituents) {
            for (BigInt k = 0; k < m; ++k) {
                if (weyl_dimension(*b.decomposition.system, hw) == 27) big.push_back(hw);
            }
        }
        r.expect(big.size() == 2 && dual_highest_weight(*b.decomposition.system, big[0]) == big[1],
                 "the two 27-dimensional constituents are not dual");
    });
    return r.done();
}

// --------------------------------------------------------------------- 6

CheckResult check_orbits() {
    Recorder r("6", "orbits");
    r.guard("E6 W' orbits", [&] {
        auto rs = root_system("E6");
        std::vector<long long> sizes;
        for (const auto& o : wprime_orbits(*rs, {6}, irrep_character(rs, rs->fundamental(1)))) {
            sizes.push_back(static_cast<long long>(o.size()));
        }
        std::sort(sizes.begin(), sizes.end());
        r.expect(sizes == std::vector<long long>{1, 10, 16}, "E6 orbit sizes " + show(sizes));
    });
    r.guard("E6 triples", [&] {
        auto rs = root_system("E6");
        const auto rep = zero_sum_triple_orbits({irrep_character(rs, rs->fundamental(1))});
        r.expect(rep.orbits == 1, "E6 zero-sum triples form " + std::to_string(rep.orbits) + " orbits");
        r.note("E6: " + std::to_string(rep.ordered_triples) + " ordered triples, " +
               std::to_string(rep.unordered_triples) + " unordered");
    });
    r.guard("D4 triples", [&] {
        auto rs = root_system("D4");
        const auto rep = zero_sum_triple_orbits({irrep_character(rs, rs->fundamental(1)),
                                                 irrep_character(rs, rs->fundamental(3)),
                                                 irrep_character(rs, rs->fundamental(4))});
        r.expect(rep.orbits == 1, "D4 zero-sum triples form " + std::to_string(rep.orbits) + " orbits");
        r.note("D4: " + std::to_string(rep.ordered_triples) + " triples");
    });
    return r.done();
}

// --------------------------------------------------------------------- 7

CheckResult check_triality() {
    Recorder r("7", "triality");
    r.guard("table", [&] {
        const D4Triality& t = d4_triality();
        const TrialityTable gen = t.table();
        const auto bad = gen.mismatches(reference_triality_table());
        std::set<std::string> cols;
        for (const auto& [row, col] : bad) cols.insert(col);
        std::string c;
        for (const auto& s : cols) c += (c.empty() ? "" : ",") + s;
        r.expect(bad.empty(), "table matches the reference in " + std::to_string(64 - bad.size()) +
                                  "/64 cells; mismatches confined to columns {" + c + "}");
        for (int row = 0; row < 8; ++row) {
            r.expect(gen.nonzero_in_row(row) == 4, "row " + gen.labels[row] + " does not have 4 nonzero cells");
        }
        bool sym = true;
        for (int a = 0; a < 8; ++a) {
            for (int b = 0; b < 8; ++b) sym = sym && (gen.cells[a][b].has_value() == gen.cells[7 - a][7 - b].has_value());
        }
        r.expect(sym, "zero pattern not symmetric under e_k <-> f_k");
        r.expect(t.nonzero_rule_check(), "nonzero cells do not follow the weight rule");
        r.expect(t.cyclic_shift_check(), "zero-sum triples not closed under the cyclic shift");
    });
    r.guard("psi", [&] {
        const D4Triality& t = d4_triality();
        const ChamberCheck c = chamber_automorphism_check(t.geometry(), t.phi(), [&](int, const Support& s) { return t.psi(s); });
        r.expect(c.chamber_ok, "psi of the standard chamber is not a chamber: " + c.detail);
        r.expect(c.types_follow_phi, "psi does not permute types by phi");
        r.expect(c.equivariant, "psi is not phi-equivariant: " + c.detail);
        bool fixed = true, cube = true;
        for (int d = 1; d <= 4; ++d) {
            const Support& s = t.standard(d);
            fixed = fixed && t.standard_type(t.psi(s)) != 0;
            cube = cube && t.psi(t.psi(t.psi(s))) == s;
        }
        r.expect(fixed, "psi does not fix the standard chamber setwise");
        r.expect(cube, "psi^3 is not the identity on the standard chamber");
        std::string m;
        for (const auto& [a, b] : c.type_map) m += std::to_string(a) + "->" + std::to_string(b) + " ";
        r.note("types " + m);
    });
    return r.done();
}

// --------------------------------------------------------------------- 8

CheckResult check_e6_duality() {
    Recorder r("8", "e6-duality");
    r.guard("psi_standard", [&] {
        const E6Duality& e = e6_duality();
        for (int d = 1; d <= 6; ++d) {
            const auto p = e.psi_standard(d);
            r.expect(p.psi_delta == e.phi()(d), "psi(V_" + std::to_string(d) + ") has type " + std::to_string(p.psi_delta));
            r.expect(e.psi_standard(p.psi_delta).support == e.standard(d), "psi is not an involution on V_" + std::to_string(d));
        }
    });
    r.guard("psi_extra", [&] {
        const auto x = e6_duality().psi_extra();
        r.expect(x.psi_x_type == 3, "psi(X) is not V_3");
        r.expect(x.psi_y_type == 1, "psi(Y) is not V_1");
        r.expect(x.psi_psi_x_type == 5, "psi(psi(X)) is not V_5");
        r.expect(x.psi_psi_x.size() > x.x.size() &&
                     std::includes(x.psi_psi_x.begin(), x.psi_psi_x.end(), x.x.begin(), x.x.end()),
                 "X is not properly contained in psi(psi(X))");
    });
    r.guard("dim_brace_vplus", [&] {
        const E6Duality& e = e6_duality();
        using C = E6Duality::OrbitClass;
        const auto h = e.dim_brace_vplus(C::Hyperline);
        const auto l = e.dim_brace_vplus(C::Lambda2);
        const auto m = e.dim_brace_vplus(C::MinusOmega6);
        r.expect(h.dimension == 0, "hyperline class gives " + std::to_string(h.dimension));
        r.expect(l.dimension == 6 && l.support == e.standard(2), "lambda2 class gives " + std::to_string(l.dimension));
        r.expect(m.dimension == 17, "-omega6 gives " + std::to_string(m.dimension));
    });
    r.guard("verify_ln", [&] {
        for (int d = 1; d <= 6; ++d) {
            const auto rep = e6_duality().verify_ln(d);
            r.expect(rep.ok(), "LN check fails for delta=" + std::to_string(d));
        }
        const auto ctl = e6_duality().verify_ln_with(1, e6_duality().weights());
        r.expect(!ctl.pairing_ok, "perturbation control: full weight set should break the pairing check");
    });
    r.guard("chamber", [&] {
        const E6Duality& e = e6_duality();
        const ChamberCheck c =
            chamber_automorphism_check(e.geometry(), e.phi(), [&](int d, const Support& s) { return e.psi(d, s); });
        r.expect(c.ok(), "chamber automorphism check failed: " + c.detail);
    });
    return r.done();
}

// --------------------------------------------------------------------- 9

CheckResult check_incidence() {
    Recorder r("9", "incidence");
    r.guard("A3", [&] {
        const GeometrySpec g = geom("A3", 1);
        std::vector<ApartmentObject> all;
        for (int d = 1; d <= 3; ++d) {
            for (auto& o : apartment_objects(g, d)) all.push_back(std::move(o));
        }
        long long bad = 0;
        for (const auto& x : all) {
            for (const auto& y : all) {
                const bool sub = std::includes(x.support.begin(), x.support.end(), y.support.begin(), y.support.end()) ||
                                 std::includes(y.support.begin(), y.support.end(), x.support.begin(), x.support.end());
                const bool oracle = x.delta == y.delta ? x.support == y.support : sub;
                bad += incidence(g, x, y) != oracle;
            }
        }
        r.expect(bad == 0, "A3: " + std::to_string(bad) + " pairs disagree with support inclusion");
    });
    r.guard("rules", [&] {
        const auto d4 = incidence_rule(geom("D4", 1), 3, 4);
        r.expect(d4.kind == IncidenceRule::Kind::Intersection && d4.intersection_size == 3, "D4 fork rule is not |cap| = 3");
        const GeometrySpec e6 = geom("E6", 1);
        const auto r25 = incidence_rule(e6, 2, 5), r26 = incidence_rule(e6, 2, 6);
        r.expect(r25.kind == IncidenceRule::Kind::Intersection && r25.intersection_size == 4, "E6 (2,5) rule is not |cap| = 4");
        r.expect(r26.kind == IncidenceRule::Kind::Intersection && r26.intersection_size == 5, "E6 (2,6) rule is not |cap| = 5");
    });
    for (const char* name : {"A3", "D4", "E6"}) {
        r.guard(std::string("audit ") + name, [&] {
            const auto a = audit_incidence(standard_geometry(name));
            r.expect(a.agrees(), std::string(name) + ": rules disagree with the apartment (" +
                                     std::to_string(a.false_positives) + " false positives, " +
                                     std::to_string(a.false_negatives) + " false negatives)");
            r.note(std::string(name) + ": " + std::to_string(a.chambers) + " chambers, " + std::to_string(a.pairs) +
                   " pairs audited");
        });
    }
    std::vector<std::string> names;
    for (int n = 1; n <= 8; ++n) names.push_back("A" + std::to_string(n));
    for (int n = 2; n <= 8; ++n) names.push_back("B" + std::to_string(n));
    for (int n = 2; n <= 8; ++n) names.push_back("C" + std::to_string(n));
    for (int n = 4; n <= 8; ++n) names.push_back("D" + std::to_string(n));
    for (const char* s : {"E6", "E7", "F4", "G2"}) names.push_back(s);
    for (const auto& name : names) {
        r.guard("standard chamber " + name, [&] {
            const GeometrySpec g = standard_geometry(name);
            const auto rep = standard_chamber_pairs(g);
            r.expect(rep.incident == rep.checked, g.name() + ": standard chamber not pairwise incident");
            if (!rep.no_rule.empty()) {
                std::string p;
                for (const auto& [a, b] : rep.no_rule) p += "(" + std::to_string(a) + "," + std::to_string(b) + ")";
                r.note(g.name() + ": no stated rule for " + p + ", left unchecked");
            }
        });
    }
    return r.done();
}

// -------------------------------------------------------------------- 10

CheckResult check_properties() {
    Recorder r("10", "properties");
    r.guard("Freudenthal vs Weyl", [&] {
        const std::vector<std::pair<std::string, std::vector<int>>> cases = {
            {"A1", {3}},          {"A2", {1, 1}},          {"A2", {2, 1}},          {"A3", {1, 0, 1}},
            {"A4", {0, 1, 1, 0}}, {"B2", {1, 1}},          {"B3", {0, 0, 1}},       {"B3", {1, 0, 1}},
            {"C3", {0, 1, 0}},    {"C3", {1, 0, 1}},       {"D4", {0, 1, 0, 0}},    {"D4", {1, 0, 1, 1}},
            {"D5", {0, 0, 0, 1, 0}}, {"G2", {1, 1}},       {"G2", {2, 0}},          {"F4", {1, 0, 0, 0}},
            {"F4", {0, 0, 0, 1}}, {"F4", {0, 0, 0, 2}},    {"E6", {1, 0, 0, 0, 0, 0}}, {"E6", {0, 1, 0, 0, 0, 0}},
            {"E6", {1, 0, 0, 0, 0, 1}}, {"E7", {0, 0, 0, 0, 0, 0, 1}}, {"E7", {1, 0, 0, 0, 0, 0, 0}},
            {"E8", {0, 0, 0, 0, 0, 0, 0, 1}},
        };
        for (const auto& [name, coords] : cases) {
            auto rs = root_system(name);
            const Weight hw{std::span<const int>(coords)};
            const BigInt a = expand_dominant(rs, dominant_multiplicities(*rs, hw)).dimension();
            const BigInt b = weyl_dimension(*rs, hw);
            r.expect(a == b, name + " " + hw.str() + ": Freudenthal " + a.str() + " vs Weyl " + b.str());
        }
    });
    const std::vector<std::string> systems = {"A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4", "C2", "C3", "C4",
                                              "D4", "D5", "D6", "E6", "E7", "E8", "F4", "G2"};
    r.guard("dual involution", [&] {
        for (const auto& name : systems) {
            auto rs = root_system(name);
            for (int i = 1; i <= rs->rank(); ++i) {
                const Weight w = rs->fundamental(i);
                const Weight d = dual_highest_weight(*rs, w);
                r.expect(dual_highest_weight(*rs, d) == w, name + ": dual is not an involution at omega" + std::to_string(i));
                r.expect(-rs->antidominant(w) == d, name + ": -w0 disagrees with dual at omega" + std::to_string(i));
            }
        }
    });
    r.guard("S2 + L2 = tensor square", [&] {
        for (const auto& [name, node] : std::vector<std::pair<std::string, int>>{
                 {"A2", 1}, {"B2", 1}, {"C3", 1}, {"D4", 1}, {"G2", 1}, {"F4", 4}, {"E6", 1}}) {
            auto rs = root_system(name);
            const FormalCharacter v = irrep_character(rs, rs->fundamental(node));
            FormalCharacter s = symmetric_power(v, 2);
            s += exterior_power(v, 2);
            r.expect(s == tensor_product(v, v), name + ": S2 + L2 != V x V");
        }
    });
    r.guard("minuscule implies multiplicity-free", [&] {
        for (const auto& name : systems) {
            if (name == "E8") continue;  // no minuscule weights, and the orbit walk is large
            auto rs = root_system(name);
            for (int i = 1; i <= rs->rank(); ++i) {
                const Weight w = rs->fundamental(i);
                if (weyl_dimension(*rs, w) > 100000) continue;
                if (minuscule_check(*rs, w)) {
                    r.expect(irrep_character(rs, w).is_multiplicity_free(),
                             name + " omega" + std::to_string(i) + " minuscule but not multiplicity-free");
                }
            }
        }
    });
    r.guard("half-spin dimensions", [&] {
        for (int n = 4; n <= 6; ++n) {
            const auto d = halfspin_dimensions(n);
            for (int i = 1; i <= n - 2; ++i) {
                r.expect(d.at(i) == (1LL << (n - i - 1)),
                         "D" + std::to_string(n) + " half-spin a" + std::to_string(i) + ": " + std::to_string(d.at(i)));
            }
            r.expect(d.at(n) == 1, "D" + std::to_string(n) + " half-spin a_n is not 1-dimensional");
        }
    });
    return r.done();
}

}  // namespace

const std::vector<Check>& checks() {
    static const std::vector<Check> all = {
        {"1", "dims", "dimension diagrams", check_dims},
        {"2", "standard-dims", "standard representation dimensions", check_standard_dims},
        {"3", "e6-hasse", "E6 Hasse diagram", check_e6_hasse},
        {"4", "invariants", "invariant forms via plethysm", check_invariants},
        {"5", "branching", "Levi and folding branchings", check_branching},
        {"6", "orbits", "W' orbits and zero-sum triples", check_orbits},
        {"7", "triality", "D4 triality table and psi", check_triality},
        {"8", "e6-duality", "E6 duality psi", check_e6_duality},
        {"9", "incidence", "incidence rules", check_incidence},
        {"10", "properties", "property suites", check_properties},
    };
    return all;
}

std::vector<CheckResult> run_checks(const std::string& selector) {
    std::vector<CheckResult> out;
    for (const Check& c : checks()) {
        if (selector == "all" || selector == c.id || selector == c.name) out.push_back(c.run());
    }
    if (out.empty()) {
        std::string names;
        for (const Check& c : checks()) names += (names.empty() ? "" : ", ") + c.name;
        throw InvalidArgument("unknown check '" + selector + "' (known: all, " + names + ")");
    }
    return out;
}

}  // namespace wg
