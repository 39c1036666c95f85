#include "weightgeom/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include <CLI11.hpp>

#include "weightgeom/branching.hpp"
#include "weightgeom/cache.hpp"
#include "weightgeom/errors.hpp"
#include "weightgeom/render.hpp"
#include "weightgeom/verify.hpp"

namespace wg {

namespace {

struct Options {
    std::string format;
    int max_degree = 5;
    std::string cache_dir;

    std::string system;
    std::string weight;
    std::string action;
    std::string rule;
    std::string selector = "all";
    int beta = 0;
    int degree = 3;
    bool audit = false;
};

void require_format(const std::string& f, std::initializer_list<const char*> allowed) {
    for (const char* a : allowed) {
        if (f == a) return;
    }
    std::string list;
    for (const char* a : allowed) list += (list.empty() ? "" : ", ") + std::string(a);
    throw InvalidArgument("--format " + f + " is not available here (choose from " + list + ")");
}

// A node index ("1") or an explicit weight ("0,1,0,0").
Weight parse_highest_weight(const RootSystem& rs, const std::string& text) {
    Weight hw;
    if (text.find_first_of(",(") == std::string::npos) {
        int i = 0;
        try {
            std::size_t used = 0;
            i = std::stoi(text, &used);
            if (used != text.size()) throw std::invalid_argument(text);
        } catch (const std::exception&) {
            throw InvalidArgument("expected a node index or a weight, got '" + text + "'");
        }
        rs.check_node(i);
        hw = rs.fundamental(i);
    } else {
        hw = parse_weight(text);
        if (hw.rank() != rs.rank()) throw InvalidArgument("weight " + hw.str() + " has the wrong length for " + rs.name());
    }
    check_dominant(rs, hw);
    return hw;
}

std::string support_labels(const D4Triality& t, const Support& s) {
    std::vector<std::string> labels;
    for (const Weight& w : s) labels.push_back(t.label(w));
    const auto& order = t.labels();
    std::sort(labels.begin(), labels.end(), [&](const std::string& a, const std::string& b) {
        return std::find(order.begin(), order.end(), a) < std::find(order.begin(), order.end(), b);
    });
    std::string out = "{";
    for (std::size_t i = 0; i < labels.size(); ++i) out += (i ? "," : "") + labels[i];
    return out + "}";
}

std::string support_str(const Support& s) {
    std::string out = "{";
    bool first = true;
    for (const Weight& w : s) {
        out += (first ? "" : " ") + w.str();
        first = false;
    }
    return out + "}";
}

std::string type_name(int t) { return t == 0 ? std::string("none") : "V_" + std::to_string(t); }

// ---------------------------------------------------------------- commands

int cmd_dims(const Options& o, std::ostream& out) {
    auto rs = root_system(o.system);
    const GeometrySpec g(rs, o.beta ? o.beta : standard_beta(rs->spec()));
    const auto dims = dimension_diagram(g);
    const std::string f = o.format.empty() ? "ascii" : o.format;
    require_format(f, {"ascii", "json"});
    if (f == "json") {
        out << dims_json(g, dims).dump(2) << "\n";
    } else {
        out << dims_ascii(g, dims);
    }
    return kExitOk;
}

int cmd_hasse(const Options& o, std::ostream& out) {
    auto rs = root_system(o.system);
    const Weight hw = parse_highest_weight(*rs, o.weight);
    const std::string f = o.format.empty() ? "ascii" : o.format;
    require_format(f, {"ascii", "dot", "json"});
    const HasseDiagram h = hasse_diagram(irrep_character(rs, hw));
    NodeNotes notes;
    // Label the lowest weights lambda_i when hw is a fundamental weight.
    for (int i = 1; i <= rs->rank(); ++i) {
        if (hw == rs->fundamental(i)) notes = lowest_weight_notes(GeometrySpec(rs, i));
    }
    if (f == "dot") {
        out << hasse_dot(h, notes);
    } else if (f == "json") {
        out << hasse_json(h, notes).dump(2) << "\n";
    } else {
        out << hasse_ascii(h, notes);
    }
    return kExitOk;
}

int cmd_orbit(const Options& o, std::ostream& out) {
    auto rs = root_system(o.system);
    const Weight w = parse_weight(o.weight);
    if (w.rank() != rs->rank()) throw InvalidArgument("weight " + w.str() + " has the wrong length for " + rs->name());
    const auto orb = rs->orbit(w);
    const std::string f = o.format.empty() ? "ascii" : o.format;
    require_format(f, {"ascii", "json"});
    if (f == "json") {
        Json j;
        j["format_version"] = kFormatVersion;
        j["system"] = rs->name();
        j["weight"] = weight_json(w);
        j["size"] = orb.size();
        j["orbit"] = support_json(Support(orb.begin(), orb.end()));
        out << j.dump(2) << "\n";
    } else {
        out << rs->name() << " orbit of " << w.str() << ": " << orb.size() << " weights\n";
        for (const Weight& x : orb) out << x.str() << "\n";
    }
    return kExitOk;
}

int cmd_invariants(const Options& o, std::ostream& out) {
    auto rs = root_system(o.system);
    const Weight hw = parse_highest_weight(*rs, o.weight);
    const PlethysmOptions opts{o.max_degree, false};
    if (o.degree < 1) throw InvalidArgument("--degree must be >= 1");
    const FormalCharacter v = irrep_character(rs, hw);
    const BilinearType bt = invariant_bilinear_type(rs, hw, opts);
    std::vector<std::pair<std::string, BigInt>> rows;
    for (int d = 1; d <= o.degree; ++d) {
        rows.emplace_back("S^" + std::to_string(d), trivial_multiplicity(symmetric_power(v, d, opts)));
        rows.emplace_back("L^" + std::to_string(d), trivial_multiplicity(exterior_power(v, d, opts)));
    }
    const std::string f = o.format.empty() ? "ascii" : o.format;
    require_format(f, {"ascii", "json"});
    if (f == "json") {
        Json j;
        j["format_version"] = kFormatVersion;
        j["system"] = rs->name();
        j["highest_weight"] = weight_json(hw);
        j["dimension"] = v.dimension().str();
        j["dual"] = weight_json(dual_highest_weight(*rs, hw));
        j["minuscule"] = minuscule_check(*rs, hw);
        j["bilinear_form"] = to_string(bt);
        Json t = Json::object();
        for (const auto& [k, m] : rows) t[k] = m.str();
        j["trivial_multiplicity"] = t;
        out << j.dump(2) << "\n";
    } else {
        out << rs->name() << " V" << hw.str() << "\n";
        out << "dimension: " << v.dimension() << "\n";
        out << "dual: V" << dual_highest_weight(*rs, hw).str() << "\n";
        out << "minuscule: " << (minuscule_check(*rs, hw) ? "yes" : "no") << "\n";
        out << "invariant bilinear form: " << to_string(bt) << "\n";
        for (const auto& [k, m] : rows) out << "trivial in " << k << ": " << m << "\n";
    }
    return kExitOk;
}

int cmd_branch(const Options& o, std::ostream& out) {
    const BranchingRule rule = named_rule(o.rule);
    auto rs = root_system(rule.source);
    const Weight hw = parse_highest_weight(*rs, o.weight);
    const BranchResult b = branch(irrep_character(rs, hw), rule);
    const std::string f = o.format.empty() ? "ascii" : o.format;
    require_format(f, {"ascii", "json"});
    if (f == "json") {
        Json j = decomposition_json(b.decomposition);
        j["rule"] = rule.name;
        j["source"] = rule.source.name();
        j["highest_weight"] = weight_json(hw);
        out << j.dump(2) << "\n";
    } else {
        out << rule.name << ": " << rule.source.name() << " V" << hw.str() << " -> " << rule.target.name() << "\n";
        const Json j = decomposition_json(b.decomposition);
        for (const auto& c : j["constituents"]) {
            std::string w = "(";
            for (std::size_t i = 0; i < c["highest_weight"].size(); ++i) {
                w += (i ? "," : "") + std::to_string(c["highest_weight"][i].get<int>());
            }
            w += ")";
            out << "  V" << w << "  dim " << c["dimension"].get<std::string>() << "  x"
                << c["multiplicity"].get<std::string>() << "\n";
        }
        out << "total dimension " << b.decomposition.dimension() << "\n";
    }
    return kExitOk;
}

int cmd_incidence(const Options& o, std::ostream& out) {
    auto rs = root_system(o.system);
    const GeometrySpec g(rs, o.beta ? o.beta : standard_beta(rs->spec()));
    const std::string f = o.format.empty() ? "ascii" : o.format;
    require_format(f, {"ascii", "json"});
    Json rules = Json::array();
    std::ostringstream text;
    text << g.name() << " incidence rules\n";
    for (int a = 1; a <= rs->rank(); ++a) {
        for (int b = a + 1; b <= rs->rank(); ++b) {
            std::string desc;
            try {
                desc = incidence_rule(g, a, b).description;
            } catch (const NoRuleError&) {
                desc = "no rule";
            }
            text << "  (" << a << "," << b << ") " << desc << "\n";
            rules.push_back({{"pair", {a, b}}, {"rule", desc}});
        }
    }
    const ChamberPairReport rep = standard_chamber_pairs(g);
    text << "standard chamber: " << rep.incident << "/" << rep.checked << " checked pairs incident";
    if (!rep.no_rule.empty()) text << ", " << rep.no_rule.size() << " pairs without a rule";
    text << "\n";
    Json j;
    j["format_version"] = kFormatVersion;
    j["geometry"] = g.name();
    j["rules"] = rules;
    j["standard_chamber"] = {{"checked", rep.checked}, {"incident", rep.incident}, {"no_rule", rep.no_rule.size()}};
    bool ok = rep.incident == rep.checked;
    if (o.audit) {
        const IncidenceAudit a = audit_incidence(g);
        text << "audit: " << a.objects << " objects, " << a.chambers << " chambers, " << a.pairs << " pairs, "
             << a.truly_incident << " incident, " << a.false_positives << " false positives, " << a.false_negatives
             << " false negatives, " << a.no_rule.size() << " type pairs without a rule\n";
        j["audit"] = {{"objects", a.objects},          {"chambers", a.chambers},
                      {"pairs", a.pairs},              {"truly_incident", a.truly_incident},
                      {"rule_incident", a.rule_incident}, {"false_positives", a.false_positives},
                      {"false_negatives", a.false_negatives}, {"no_rule", a.no_rule.size()}};
        ok = ok && a.false_positives == 0 && a.false_negatives == 0;
    }
    if (f == "json") {
        out << j.dump(2) << "\n";
    } else {
        out << text.str();
    }
    return ok ? kExitOk : kExitInconsistent;
}

int cmd_triality(const Options& o, std::ostream& out) {
    const D4Triality& t = d4_triality();
    const std::string f = o.format.empty() ? "ascii" : o.format;
    require_format(f, {"ascii", "json"});
    if (o.action == "table") {
        const TrialityTable tab = t.table();
        if (f == "json") {
            out << triality_json(tab).dump(2) << "\n";
        } else {
            out << triality_ascii(tab);
        }
        return kExitOk;
    }
    if (o.action == "compare") {
        const auto bad = t.table().mismatches(reference_triality_table());
        if (f == "json") {
            Json j;
            j["format_version"] = kFormatVersion;
            j["matching_cells"] = 64 - bad.size();
            Json m = Json::array();
            for (const auto& [r, c] : bad) m.push_back({r, c});
            j["mismatches"] = m;
            out << j.dump(2) << "\n";
        } else {
            out << (64 - bad.size()) << "/64 cells agree with the reference table\n";
            const TrialityTable gen = t.table(), reft = reference_triality_table();
            for (const auto& [r, c] : bad) {
                const auto& g = gen.at(r, c);
                const auto& ref = reft.at(r, c);
                out << "  (" << r << "," << c << ") generated " << (g ? *g : ".") << ", reference " << (ref ? *ref : ".") << "\n";
            }
        }
        return bad.empty() ? kExitOk : kExitInconsistent;
    }
    if (o.action == "psi") {
        const ChamberCheck c = chamber_automorphism_check(t.geometry(), t.phi(), [&](int, const Support& s) { return t.psi(s); });
        Json rows = Json::array();
        std::ostringstream text;
        for (int d = 1; d <= 4; ++d) {
            const Support img = t.psi(t.standard(d));
            const bool cube = t.psi(t.psi(img)) == t.standard(d);
            text << "psi(V_" << d << ") = psi" << support_labels(t, t.standard(d)) << " = " << support_labels(t, img)
                 << " = " << type_name(t.standard_type(img)) << (cube ? "" : "  [psi^3 != id]") << "\n";
            rows.push_back({{"delta", d}, {"psi_delta", t.standard_type(img)}, {"support", support_json(img)}, {"psi_cubed_identity", cube}});
        }
        text << "phi = " << t.phi().cycles() << "; chamber " << (c.chamber_ok ? "ok" : "FAILED") << ", types follow phi "
             << (c.types_follow_phi ? "yes" : "no") << ", equivariant " << (c.equivariant ? "yes" : "no") << "\n";
        if (f == "json") {
            Json j;
            j["format_version"] = kFormatVersion;
            j["phi"] = t.phi().cycles();
            j["psi"] = rows;
            j["chamber_ok"] = c.ok();
            out << j.dump(2) << "\n";
        } else {
            out << text.str();
        }
        return c.ok() ? kExitOk : kExitInconsistent;
    }
    throw InvalidArgument("unknown triality action '" + o.action + "' (table, psi, compare)");
}

int cmd_duality(const Options& o, std::ostream& out) {
    const std::string f = o.format.empty() ? "ascii" : o.format;
    require_format(f, {"ascii", "json"});
    auto emit = [&](const Json& j, const std::string& text) {
        if (f == "json") {
            out << j.dump(2) << "\n";
        } else {
            out << text;
        }
    };
    if (o.action == "automorphisms") {
        auto rs = root_system(o.system.empty() ? "E6" : o.system);
        const auto all = diagram_automorphisms(*rs);
        Json j;
        j["system"] = rs->name();
        j["order"] = all.size();
        Json list = Json::array();
        std::ostringstream text;
        text << rs->name() << ": " << all.size() << " diagram automorphisms\n";
        for (const auto& a : all) {
            list.push_back(a.cycles());
            text << "  " << a.cycles() << "\n";
        }
        j["automorphisms"] = list;
        emit(j, text.str());
        return kExitOk;
    }
    if (o.action == "dn-swap") {
        auto rs = root_system(o.system.empty() ? "D5" : o.system);
        if (rs->spec().family != Family::D) throw InvalidArgument("dn-swap needs a D_n system");
        const GeometrySpec g(rs, 1);
        const DiagramAutomorphism phi = dn_swap(rs->rank());
        const ChamberCheck c = chamber_automorphism_check(g, phi, [&](int, const Support& s) { return phi.apply(s); });
        std::ostringstream text;
        for (const auto& [d, t] : c.type_map) text << "psi(V_" << d << ") = " << type_name(t) << "\n";
        text << "phi = " << phi.cycles() << "; " << (c.ok() ? "chamber automorphism" : "check FAILED: " + c.detail) << "\n";
        Json j;
        j["geometry"] = g.name();
        j["phi"] = phi.cycles();
        j["ok"] = c.ok();
        emit(j, text.str());
        return c.ok() ? kExitOk : kExitInconsistent;
    }

    const E6Duality& e = e6_duality();
    if (o.action == "e6-chamber") {
        Json rows = Json::array();
        std::ostringstream text;
        for (int d = 1; d <= 6; ++d) {
            const auto p = e.psi_standard(d);
            rows.push_back({{"delta", d}, {"psi_delta", p.psi_delta}, {"support", support_json(p.support)}});
            text << "psi(V_" << d << ") = V_" << p.psi_delta << "  " << support_str(p.support) << "\n";
        }
        const ChamberCheck c = chamber_automorphism_check(e.geometry(), e.phi(), [&](int d, const Support& s) { return e.psi(d, s); });
        text << "phi = " << e.phi().cycles() << "; " << (c.ok() ? "psi(V_i) = V_phi(i) for all i" : "check FAILED: " + c.detail) << "\n";
        emit(rows, text.str());
        return c.ok() ? kExitOk : kExitInconsistent;
    }
    if (o.action == "e6-extra") {
        const auto x = e.psi_extra();
        std::ostringstream text;
        text << "X = V_2 cap V_5 = " << support_str(x.x) << "\n";
        text << "psi(X) = " << type_name(x.psi_x_type) << ", psi(psi(X)) = " << type_name(x.psi_psi_x_type) << " ("
             << x.psi_psi_x.size() << " weights)\n";
        text << "Y = X + (0,1,0,0,-1,1)\n";
        text << "psi(Y) = " << type_name(x.psi_y_type) << ", psi(psi(Y)) = " << type_name(x.psi_psi_y_type) << " ("
             << x.psi_psi_y.size() << " weights)\n";
        Json j{{"x", support_json(x.x)},           {"psi_x", support_json(x.psi_x)},
               {"psi_x_type", x.psi_x_type},       {"psi_psi_x_type", x.psi_psi_x_type},
               {"y", support_json(x.y)},           {"psi_y", support_json(x.psi_y)},
               {"psi_y_type", x.psi_y_type},       {"psi_psi_y_type", x.psi_psi_y_type}};
        emit(j, text.str());
        return kExitOk;
    }
    if (o.action == "e6-brace") {
        Json rows = Json::array();
        std::ostringstream text;
        for (auto c : {E6Duality::OrbitClass::Hyperline, E6Duality::OrbitClass::Lambda2, E6Duality::OrbitClass::MinusOmega6}) {
            const auto b = e.dim_brace_vplus(c);
            text << to_string(c) << " y=" << b.y.str() << ": dim " << b.dimension
                 << (b.by_identity ? " (by identity)" : "") << ", upper bound " << b.upper_bound.size() << "\n";
            rows.push_back({{"class", to_string(c)}, {"y", weight_json(b.y)}, {"dimension", b.dimension},
                            {"by_identity", b.by_identity}, {"support", support_json(b.support)},
                            {"upper_bound", b.upper_bound.size()}});
        }
        emit(rows, text.str());
        return kExitOk;
    }
    if (o.action == "e6-ln") {
        Json rows = Json::array();
        std::ostringstream text;
        bool ok = true;
        for (int d = 1; d <= 6; ++d) {
            const auto r = e.verify_ln(d);
            ok = ok && r.ok();
            text << "delta=" << d << ": pairing " << (r.pairing_ok ? "ok" : "FAILED") << " (" << r.pairs_checked
                 << " pairs), brace " << (r.brace_ok ? "ok" : "FAILED") << " (" << r.triples_checked << " triples)\n";
            rows.push_back({{"delta", d}, {"pairing_ok", r.pairing_ok}, {"brace_ok", r.brace_ok}});
        }
        emit(rows, text.str());
        return ok ? kExitOk : kExitInconsistent;
    }
    throw InvalidArgument("unknown duality action '" + o.action +
                          "' (e6-chamber, e6-extra, e6-brace, e6-ln, automorphisms, dn-swap)");
}

int cmd_verify(const Options& o, std::ostream& out) {
    const auto results = run_checks(o.selector);
    bool ok = true;
    Json rows = Json::array();
    for (const auto& r : results) {
        ok = ok && r.pass;
        rows.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"failures", r.failures}, {"notes", r.notes}});
    }
    const std::string f = o.format.empty() ? "ascii" : o.format;
    require_format(f, {"ascii", "json"});
    if (f == "json") {
        out << rows.dump(2) << "\n";
    } else {
        for (const auto& r : results) {
            out << (r.pass ? "PASS " : "FAIL ") << r.id << " " << r.name << "\n";
            for (const auto& s : r.failures) out << "    failed: " << s << "\n";
            for (const auto& s : r.notes) out << "    note: " << s << "\n";
        }
    }
    return ok ? kExitOk : kExitInconsistent;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"weightgeom: weight-level incidence geometries of split simple groups", "weightgeom"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", o.format, "output format: ascii, json or dot (depends on the command)");
    app.add_option("--max-degree", o.max_degree, "largest symmetric/exterior power computed")->check(CLI::Range(1, 12));
    app.add_option("--cache-dir", o.cache_dir, "directory for cached multiplicity tables (or WEIGHTGEOM_CACHE_DIR)");

    auto* dims = app.add_subcommand("dims", "dimension-labelled Dynkin diagram");
    dims->add_option("system", o.system, "e.g. E6")->required();
    dims->add_option("--beta", o.beta, "node of the standard representation");

    auto* hasse = app.add_subcommand("hasse", "Hasse diagram of the weights of an irreducible");
    hasse->add_option("system", o.system)->required();
    hasse->add_option("weight", o.weight, "node index or highest weight such as 1,0,0,0,0,0")->required();

    auto* orbit = app.add_subcommand("orbit", "Weyl orbit of a weight");
    orbit->add_option("system", o.system)->required();
    orbit->add_option("weight", o.weight)->required();

    auto* inv = app.add_subcommand("invariants", "invariant forms via symmetric and exterior powers");
    inv->add_option("system", o.system)->required();
    inv->add_option("weight", o.weight)->required();
    inv->add_option("--degree", o.degree, "report powers 1..degree (default 3)");

    auto* br = app.add_subcommand("branch", "restrict an irreducible along a named rule");
    br->add_option("rule", o.rule, "e6-d5, e6-f4 or e7-e6")->required();
    br->add_option("weight", o.weight)->required();

    auto* inc = app.add_subcommand("incidence", "incidence rules and standard chamber");
    inc->add_option("system", o.system)->required();
    inc->add_option("--beta", o.beta);
    inc->add_flag("--audit", o.audit, "compare the rules against the apartment exhaustively");

    auto* tri = app.add_subcommand("triality", "D4 triality");
    tri->add_option("action", o.action, "table, psi or compare")->required();

    auto* dual = app.add_subcommand("duality", "diagram automorphisms and the E6 duality");
    dual->add_option("action", o.action, "e6-chamber, e6-extra, e6-brace, e6-ln, automorphisms, dn-swap")->required();
    dual->add_option("system", o.system, "system for automorphisms / dn-swap");

    auto* ver = app.add_subcommand("verify", "run the acceptance checks");
    ver->add_option("selector", o.selector, "all, a check id or a check name");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        if (e.get_exit_code() != 0) err << app.help();
        return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (!o.cache_dir.empty()) {
            set_cache_dir(std::filesystem::path(o.cache_dir));
        } else if (const char* env = std::getenv("WEIGHTGEOM_CACHE_DIR"); env && *env) {
            set_cache_dir(std::filesystem::path(env));
        }
        if (o.format != "" && o.format != "ascii" && o.format != "json" && o.format != "dot") {
            throw InvalidArgument("unknown format '" + o.format + "'");
        }
        if (*dims) return cmd_dims(o, out);
        if (*hasse) return cmd_hasse(o, out);
        if (*orbit) return cmd_orbit(o, out);
        if (*inv) return cmd_invariants(o, out);
        if (*br) return cmd_branch(o, out);
        if (*inc) return cmd_incidence(o, out);
        if (*tri) return cmd_triality(o, out);
        if (*dual) return cmd_duality(o, out);
        if (*ver) return cmd_verify(o, out);
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ComputationRefused& e) {
        err << "refused: " << e.what() << "\n";
        return kExitRefused;
    } catch (const ConsistencyError& e) {
        err << "consistency failure: " << e.what() << "\n";
        return kExitInconsistent;
    } catch (const NotACharacter& e) {
        err << "consistency failure: " << e.what() << "\n";
        return kExitInconsistent;
    }
    return kExitUsage;
}

}  // namespace wg
