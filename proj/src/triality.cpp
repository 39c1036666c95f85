#include "weightgeom/triality.hpp"

#include <algorithm>
#include <sstream>

#include "weightgeom/errors.hpp"

namespace wg {

namespace {

int label_index(const std::vector<std::string>& labels, const std::string& l) {
    auto it = std::find(labels.begin(), labels.end(), l);
    if (it == labels.end()) throw InvalidArgument("unknown basis label '" + l + "'");
    return static_cast<int>(it - labels.begin());
}

}  // namespace

const std::optional<std::string>& TrialityTable::at(const std::string& row, const std::string& col) const {
    return cells[label_index(labels, row)][label_index(labels, col)];
}

int TrialityTable::nonzero_in_row(int r) const {
    int n = 0;
    for (const auto& c : cells[r]) n += c.has_value();
    return n;
}

int TrialityTable::nonzero() const {
    int n = 0;
    for (int r = 0; r < 8; ++r) n += nonzero_in_row(r);
    return n;
}

std::vector<std::pair<std::string, std::string>> TrialityTable::mismatches(const TrialityTable& o) const {
    std::vector<std::pair<std::string, std::string>> out;
    for (int r = 0; r < 8; ++r) {
        for (int c = 0; c < 8; ++c) {
            if (cells[r][c] != o.cells[r][c]) out.emplace_back(labels[r], labels[c]);
        }
    }
    return out;
}

D4Triality::D4Triality() : g_(root_system("D4"), 1), phi_(d4_phi()), labels_(dn_basis_labels(4)) {
    for (const auto& l : labels_) weights_.insert(dn_basis_weight(4, l));
    const auto orb = g_.rs().orbit(g_.omega());
    if (Support(orb.begin(), orb.end()) != weights_) throw ConsistencyError("D4: e/f basis does not match the weights of V");
    for (int d = 1; d <= 4; ++d) standard_.push_back(delta_space(g_, d).support);
}

Weight D4Triality::weight(const std::string& l) const { return dn_basis_weight(4, l); }
std::string D4Triality::label(const Weight& w) const { return dn_basis_label(4, w); }

int D4Triality::standard_type(const Support& s) const {
    for (int d = 1; d <= 4; ++d) {
        if (standard_[d - 1] == s) return d;
    }
    return 0;
}

std::optional<Weight> D4Triality::product(const Weight& row, const Weight& col) const {
    const Weight w = phi_.apply(row) + phi_.apply(phi_.apply(col));
    if (!weights_.count(w)) return std::nullopt;
    return w;
}

Support D4Triality::star(const Support& rows, const Support& cols) const {
    Support out;
    for (const Weight& a : rows) {
        for (const Weight& b : cols) {
            if (auto w = product(a, b)) out.insert(*w);
        }
    }
    return out;
}

TrialityTable D4Triality::table() const {
    TrialityTable t;
    t.labels = labels_;
    for (int r = 0; r < 8; ++r) {
        for (int c = 0; c < 8; ++c) {
            if (auto w = product(weight(labels_[r]), weight(labels_[c]))) t.cells[r][c] = label(*w);
        }
    }
    return t;
}

Support D4Triality::psi(const Support& x) const {
    switch (x.size()) {
        case 1: return star(x, weights_);
        case 2: return star(x, star(weights_, x));
        case 4:
            for (const Weight& a : weights_) {
                if (star({a}, weights_) == x) return star(weights_, {a});
            }
            for (const Weight& a : weights_) {
                if (star(weights_, {a}) == x) return {a};
            }
            break;
        default: break;
    }
    throw InvalidArgument("triality psi: support is not an apartment object");
}

bool D4Triality::cyclic_shift_check() const {
    const RootSystem& rs = g_.rs();
    Support w1, w2;
    for (const Weight& w : rs.orbit(rs.fundamental(3))) w1.insert(w);
    for (const Weight& w : rs.orbit(rs.fundamental(4))) w2.insert(w);
    if (phi_.apply(weights_) != w1 || phi_.apply(w1) != w2) return false;
    for (const Weight& m0 : weights_) {
        for (const Weight& m1 : w1) {
            const Weight m2 = -(m0 + m1);
            if (!w2.count(m2)) continue;
            const Weight s0 = phi_.apply(m2), s1 = phi_.apply(m0), s2 = phi_.apply(m1);
            if (!weights_.count(s0) || !w1.count(s1) || !w2.count(s2) || !(s0 + s1 + s2).is_zero()) return false;
        }
    }
    return true;
}

bool D4Triality::nonzero_rule_check() const {
    const TrialityTable t = table();
    for (int r = 0; r < 8; ++r) {
        for (int c = 0; c < 8; ++c) {
            const Weight s = phi_.apply(weight(labels_[r])) + phi_.apply(phi_.apply(weight(labels_[c])));
            const bool nz = weights_.count(s) > 0;
            if (nz != t.cells[r][c].has_value()) return false;
            if (nz && weight(*t.cells[r][c]) != s) return false;
        }
    }
    return true;
}

const D4Triality& d4_triality() {
    static const D4Triality t;
    return t;
}

TrialityTable reference_triality_table() {
    static const char* rows[8] = {
        ". . . e1 . e2 e3 f4",
        ". . e1 . e2 . e4 f3",
        ". e1 . . e3 e4 . f2",
        "e1 . . . f4 f3 f2 .",
        ". e2 e3 e4 . . . f1",
        "e2 . f4 f3 . . f1 .",
        "e3 f4 . f2 . f1 . .",
        "e4 f3 f2 . f1 . . .",
    };
    TrialityTable t;
    t.labels = dn_basis_labels(4);
    for (int r = 0; r < 8; ++r) {
        std::istringstream is(rows[r]);
        std::string tok;
        for (int c = 0; c < 8 && is >> tok; ++c) {
            if (tok != ".") t.cells[r][c] = tok;
        }
    }
    return t;
}

}  // namespace wg
