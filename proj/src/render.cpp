#include "weightgeom/render.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "weightgeom/errors.hpp"

namespace wg {

Json weight_json(const Weight& w) { return Json(w.to_vector()); }

Json support_json(const Support& s) {
    Json a = Json::array();
    for (const Weight& w : s) a.push_back(weight_json(w));
    return a;
}

Json root_system_json(const RootSystem& rs) {
    Json j;
    j["format_version"] = kFormatVersion;
    j["family"] = std::string(1, family_letter(rs.spec().family));
    j["rank"] = rs.rank();
    j["cartan"] = rs.cartan_matrix();
    Json roots = Json::array();
    for (const Root& r : rs.positive_roots()) roots.push_back(weight_json(r.simple));
    j["positive_roots"] = roots;
    j["highest_root"] = weight_json(rs.highest_root().simple);
    return j;
}

Json character_json(const FormalCharacter& chi) {
    Json j;
    j["format_version"] = kFormatVersion;
    j["system"] = chi.system().name();
    j["dimension"] = chi.dimension().str();
    Json terms = Json::array();
    for (const auto& [w, m] : chi.terms()) terms.push_back({{"weight", weight_json(w)}, {"multiplicity", m.str()}});
    j["terms"] = terms;
    return j;
}

Json decomposition_json(const DecompositionResult& d) {
    Json j;
    j["format_version"] = kFormatVersion;
    j["system"] = d.system->name();
    Json parts = Json::array();
    // Highest first, like the peeling order.
    std::vector<Weight> hws;
    for (const auto& [hw, m] : d.constituents) hws.push_back(hw);
    std::sort(hws.begin(), hws.end(), [&](const Weight& a, const Weight& b) {
        const auto ha = d.system->scaled_height(a), hb = d.system->scaled_height(b);
        return ha != hb ? ha > hb : b < a;
    });
    for (const Weight& hw : hws) {
        parts.push_back({{"highest_weight", weight_json(hw)},
                         {"multiplicity", d.constituents.at(hw).str()},
                         {"dimension", weyl_dimension(*d.system, hw).str()}});
    }
    j["constituents"] = parts;
    j["dimension"] = d.dimension().str();
    return j;
}

NodeNotes lowest_weight_notes(const GeometrySpec& g) {
    NodeNotes notes;
    for (int d = 1; d <= g.rs().rank(); ++d) {
        const Weight low = delta_space(g, d).lowest_weight;
        std::string& s = notes[low];
        s += (s.empty() ? "lambda" : ",lambda") + std::to_string(d);
    }
    return notes;
}

// ------------------------------------------------------------------- Hasse

namespace {

std::string csv(const Weight& w) {
    std::string s = w.str();
    return s.substr(1, s.size() - 2);
}

std::string node_label(const HasseDiagram& h, const Weight& w, const NodeNotes& notes) {
    std::string s = w.str();
    const BigInt m = h.multiplicity.at(w);
    if (m != 1) s += " x" + m.str();
    auto it = notes.find(w);
    if (it != notes.end()) s += " " + it->second;
    return s;
}

}  // namespace

std::string hasse_dot(const HasseDiagram& h, const NodeNotes& notes) {
    std::ostringstream os;
    os << "digraph hasse {\n";
    os << "  rankdir=TB;\n";
    os << "  node [shape=box, fontname=\"monospace\"];\n";
    for (const Weight& w : h.nodes) os << "  \"" << csv(w) << "\" [label=\"" << node_label(h, w, notes) << "\"];\n";
    for (const HasseEdge& e : h.edges) {
        os << "  \"" << csv(e.upper) << "\" -> \"" << csv(e.lower) << "\" [label=" << e.label << "];\n";
    }
    os << "}\n";
    return os.str();
}

std::string hasse_ascii(const HasseDiagram& h, const NodeNotes& notes) {
    std::ostringstream os;
    os << h.system->name() << ": " << h.nodes.size() << " weights, " << h.edges.size() << " edges\n";
    const auto levels = h.levels();
    for (std::size_t k = 0; k < levels.size(); ++k) {
        os << "level " << k << ":";
        for (const Weight& w : levels[k]) os << "  " << node_label(h, w, notes);
        os << "\n";
    }
    os << "edges:\n";
    for (const HasseEdge& e : h.edges) os << "  " << e.upper.str() << " -" << e.label << "-> " << e.lower.str() << "\n";
    return os.str();
}

Json hasse_json(const HasseDiagram& h, const NodeNotes& notes) {
    Json j;
    j["format_version"] = kFormatVersion;
    j["system"] = h.system->name();
    Json nodes = Json::array();
    for (const Weight& w : h.nodes) {
        Json n{{"weight", weight_json(w)}, {"multiplicity", h.multiplicity.at(w).str()}};
        auto it = notes.find(w);
        if (it != notes.end()) n["note"] = it->second;
        nodes.push_back(n);
    }
    j["nodes"] = nodes;
    Json edges = Json::array();
    for (const HasseEdge& e : h.edges) {
        edges.push_back({{"upper", weight_json(e.upper)}, {"lower", weight_json(e.lower)}, {"label", e.label}});
    }
    j["edges"] = edges;
    Json levels = Json::array();
    for (const auto& lvl : h.levels()) {
        Json l = Json::array();
        for (const Weight& w : lvl) l.push_back(weight_json(w));
        levels.push_back(l);
    }
    j["levels"] = levels;
    return j;
}

// ------------------------------------------------------------------ Dynkin

namespace {

struct Layout {
    std::vector<int> chain;
    std::map<int, int> hanging;  // chain node -> node drawn above it
};

// The main row is a path through the diagram; every node off it has to be a
// leaf hanging from a distinct path node. Prefer paths starting at beta,
// then longer ones, then the lexicographically smaller.
Layout dynkin_layout(const RootSystem& rs, int beta) {
    const int n = rs.rank();
    std::vector<std::vector<int>> paths;
    std::function<void(std::vector<int>&)> extend = [&](std::vector<int>& p) {
        paths.push_back(p);
        for (int nb : rs.neighbours(p.back())) {
            if (std::find(p.begin(), p.end(), nb) != p.end()) continue;
            p.push_back(nb);
            extend(p);
            p.pop_back();
        }
    };
    for (int s = 1; s <= n; ++s) {
        std::vector<int> p{s};
        extend(p);
    }
    std::optional<Layout> best;
    auto better = [&](const std::vector<int>& a, const std::vector<int>& b) {
        const bool ba = a.front() == beta, bb = b.front() == beta;
        if (ba != bb) return ba;
        if (a.size() != b.size()) return a.size() > b.size();
        return a < b;
    };
    for (const auto& p : paths) {
        Layout l{p, {}};
        bool ok = true;
        for (int v = 1; v <= n && ok; ++v) {
            if (std::find(p.begin(), p.end(), v) != p.end()) continue;
            const auto nb = rs.neighbours(v);
            if (nb.size() != 1 || std::find(p.begin(), p.end(), nb[0]) == p.end() || l.hanging.count(nb[0])) {
                ok = false;
            } else {
                l.hanging[nb[0]] = v;
            }
        }
        if (ok && (!best || better(p, best->chain))) best = l;
    }
    if (!best) throw InvalidArgument("cannot lay out the diagram of " + rs.name());
    return *best;
}

std::string bond(const RootSystem& rs, int a, int b) {
    const int k = rs.cartan(a, b) * rs.cartan(b, a);
    if (k <= 1) return " --- ";
    const char arrow = rs.half_length(a) < rs.half_length(b) ? '<' : '>';
    const char line = k == 2 ? '=' : '#';
    return std::string{' ', line, arrow, line, ' '};
}

std::string rtrim(std::string s) {
    while (!s.empty() && s.back() == ' ') s.pop_back();
    return s;
}

}  // namespace

std::string dynkin_ascii(const RootSystem& rs, int beta, const std::map<int, std::string>& labels) {
    rs.check_node(beta);
    const Layout l = dynkin_layout(rs, beta);
    auto top = [&](int v) {
        auto it = labels.find(v);
        return it == labels.end() ? std::string("?") : it->second;
    };
    auto name = [](int v) { return "a" + std::to_string(v); };
    std::size_t cw = 0;
    for (int v = 1; v <= rs.rank(); ++v) cw = std::max({cw, top(v).size(), name(v).size()});
    auto cell = [&](const std::string& s) { return s + std::string(cw - s.size(), ' '); };
    const std::string gap(5, ' ');

    std::string up1, up2, up3, row, names;
    for (std::size_t k = 0; k < l.chain.size(); ++k) {
        const int v = l.chain[k];
        if (k > 0) {
            up1 += gap;
            up2 += gap;
            up3 += gap;
            row += bond(rs, l.chain[k - 1], v);
            names += gap;
        }
        auto h = l.hanging.find(v);
        up1 += cell(h == l.hanging.end() ? "" : top(h->second));
        up2 += cell(h == l.hanging.end() ? "" : name(h->second));
        up3 += cell(h == l.hanging.end() ? "" : "|");
        row += cell(top(v));
        names += cell(name(v));
    }
    std::string out;
    if (!l.hanging.empty()) out += rtrim(up1) + "\n" + rtrim(up2) + "\n" + rtrim(up3) + "\n";
    out += rtrim(row) + "\n" + rtrim(names) + "\n";
    return out;
}

std::string dims_ascii(const GeometrySpec& g, const std::map<int, long long>& dims) {
    std::map<int, std::string> labels;
    for (const auto& [d, v] : dims) labels[d] = std::to_string(v);
    return g.name() + " (beta = a" + std::to_string(g.beta) + ")\n" + dynkin_ascii(g.rs(), g.beta, labels);
}

Json dims_json(const GeometrySpec& g, const std::map<int, long long>& dims) {
    Json j;
    j["format_version"] = kFormatVersion;
    j["system"] = g.rs().name();
    j["beta"] = g.beta;
    Json d = Json::object();
    for (const auto& [k, v] : dims) d[std::to_string(k)] = v;
    j["dimensions"] = d;
    return j;
}

// ---------------------------------------------------------------- triality

std::string triality_ascii(const TrialityTable& t) {
    std::ostringstream os;
    os << "  *  ";
    for (const auto& l : t.labels) os << ' ' << l;
    os << "\n";
    for (int r = 0; r < 8; ++r) {
        os << "  " << t.labels[r] << " ";
        for (int c = 0; c < 8; ++c) os << ' ' << (t.cells[r][c] ? *t.cells[r][c] : std::string(" ."));
        os << "\n";
    }
    return os.str();
}

Json triality_json(const TrialityTable& t) {
    Json j;
    j["format_version"] = kFormatVersion;
    j["labels"] = t.labels;
    Json rows = Json::array();
    for (int r = 0; r < 8; ++r) {
        Json row = Json::array();
        for (int c = 0; c < 8; ++c) row.push_back(t.cells[r][c] ? Json(*t.cells[r][c]) : Json(nullptr));
        rows.push_back(row);
    }
    j["rows"] = rows;
    return j;
}

}  // namespace wg
