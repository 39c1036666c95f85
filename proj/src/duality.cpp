#include "weightgeom/duality.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>

#include "weightgeom/errors.hpp"

namespace wg {

// ------------------------------------------------------ diagram automorphisms

DiagramAutomorphism::DiagramAutomorphism(std::vector<int> perm) : perm_(std::move(perm)) {
    std::vector<int> sorted = perm_;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] != static_cast<int>(i) + 1) throw InvalidArgument("not a permutation of the nodes");
    }
}

int DiagramAutomorphism::order() const {
    int k = 1;
    DiagramAutomorphism p = *this;
    while (!p.is_identity()) {
        p = p.then(*this);
        ++k;
    }
    return k;
}

bool DiagramAutomorphism::is_identity() const {
    for (std::size_t i = 0; i < perm_.size(); ++i) {
        if (perm_[i] != static_cast<int>(i) + 1) return false;
    }
    return true;
}

Weight DiagramAutomorphism::apply(const Weight& w) const {
    if (w.rank() != static_cast<int>(perm_.size())) throw InvalidArgument("automorphism applied to weight of wrong rank");
    Weight out(w.rank());
    for (int i = 0; i < w.rank(); ++i) out[perm_[i] - 1] = w[i];
    return out;
}

Support DiagramAutomorphism::apply(const Support& s) const {
    Support out;
    for (const Weight& w : s) out.insert(apply(w));
    return out;
}

WeylElement DiagramAutomorphism::apply(const WeylElement& w) const {
    std::vector<int> word = w.word();
    for (int& l : word) l = perm_[l - 1];
    return WeylElement(std::move(word));
}

DiagramAutomorphism DiagramAutomorphism::inverse() const {
    std::vector<int> inv(perm_.size());
    for (std::size_t i = 0; i < perm_.size(); ++i) inv[perm_[i] - 1] = static_cast<int>(i) + 1;
    return DiagramAutomorphism(std::move(inv));
}

DiagramAutomorphism DiagramAutomorphism::then(const DiagramAutomorphism& after) const {
    std::vector<int> c(perm_.size());
    for (std::size_t i = 0; i < perm_.size(); ++i) c[i] = after(perm_[i]);
    return DiagramAutomorphism(std::move(c));
}

std::string DiagramAutomorphism::cycles() const {
    std::ostringstream os;
    std::vector<bool> seen(perm_.size() + 1, false);
    for (int i = 1; i <= static_cast<int>(perm_.size()); ++i) {
        if (seen[i] || (*this)(i) == i) continue;
        os << '(';
        for (int j = i; !seen[j]; j = (*this)(j)) {
            if (j != i) os << ' ';
            os << j;
            seen[j] = true;
        }
        os << ')';
    }
    const std::string s = os.str();
    return s.empty() ? "()" : s;
}

bool DiagramAutomorphism::preserves(const RootSystem& rs) const {
    if (static_cast<int>(perm_.size()) != rs.rank()) return false;
    for (int i = 1; i <= rs.rank(); ++i) {
        for (int j = 1; j <= rs.rank(); ++j) {
            if (rs.cartan((*this)(i), (*this)(j)) != rs.cartan(i, j)) return false;
        }
    }
    return true;
}

std::vector<DiagramAutomorphism> diagram_automorphisms(const RootSystem& rs) {
    std::vector<int> p(rs.rank());
    std::iota(p.begin(), p.end(), 1);
    std::vector<DiagramAutomorphism> out;
    do {
        DiagramAutomorphism a(p);
        if (a.preserves(rs)) out.push_back(std::move(a));
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

DiagramAutomorphism e6_phi() { return DiagramAutomorphism({6, 2, 5, 4, 3, 1}); }
DiagramAutomorphism d4_phi() { return DiagramAutomorphism({3, 2, 4, 1}); }

DiagramAutomorphism dn_swap(int n) {
    if (n < 4) throw InvalidArgument("dn_swap needs n >= 4");
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 1);
    std::swap(p[n - 2], p[n - 1]);
    return DiagramAutomorphism(std::move(p));
}

// ------------------------------------------------------------ D_n basis

namespace {

std::vector<Weight> dn_e_weights(int n) {
    auto rs = root_system(RootSystemSpec{Family::D, n});
    std::vector<Weight> e{rs->fundamental(1)};
    for (int i = 1; i < n; ++i) e.push_back(e.back() - rs->simple_root(i));
    return e;
}

}  // namespace

Weight dn_basis_weight(int n, const std::string& label) {
    if (label.size() < 2 || (label[0] != 'e' && label[0] != 'f')) throw InvalidArgument("bad basis label '" + label + "'");
    int i = 0;
    try {
        i = std::stoi(label.substr(1));
    } catch (const std::exception&) {
        throw InvalidArgument("bad basis label '" + label + "'");
    }
    if (i < 1 || i > n) throw InvalidArgument("basis label '" + label + "' out of range");
    const Weight e = dn_e_weights(n)[i - 1];
    return label[0] == 'e' ? e : -e;
}

std::string dn_basis_label(int n, const Weight& w) {
    const auto e = dn_e_weights(n);
    for (int i = 0; i < n; ++i) {
        if (e[i] == w) return "e" + std::to_string(i + 1);
        if (-e[i] == w) return "f" + std::to_string(i + 1);
    }
    throw InvalidArgument(w.str() + " is not a weight of the D" + std::to_string(n) + " vector representation");
}

std::vector<std::string> dn_basis_labels(int n) {
    std::vector<std::string> out;
    for (int i = 1; i <= n; ++i) out.push_back("e" + std::to_string(i));
    for (int i = n; i >= 1; --i) out.push_back("f" + std::to_string(i));
    return out;
}

// ------------------------------------------------------------------ orbits

std::vector<Support> wprime_orbits(const RootSystem& rs, const std::vector<int>& removed, const FormalCharacter& chi) {
    if (!chi.is_multiplicity_free()) throw InvalidArgument("wprime_orbits needs a multiplicity-free character");
    for (int r : removed) rs.check_node(r);
    std::vector<int> gens;
    for (int i = 1; i <= rs.rank(); ++i) {
        if (std::find(removed.begin(), removed.end(), i) == removed.end()) gens.push_back(i);
    }
    Support left;
    for (const auto& [w, m] : chi.terms()) left.insert(w);
    std::vector<Support> out;
    while (!left.empty()) {
        Support orb{*left.begin()};
        std::vector<Weight> todo{*left.begin()};
        while (!todo.empty()) {
            Weight w = todo.back();
            todo.pop_back();
            for (int i : gens) {
                Weight r = rs.reflect(w, i);
                if (orb.insert(r).second) todo.push_back(r);
            }
        }
        for (const Weight& w : orb) left.erase(w);
        out.push_back(std::move(orb));
    }
    std::stable_sort(out.begin(), out.end(), [](const Support& a, const Support& b) { return a.size() > b.size(); });
    return out;
}

TripleOrbitReport zero_sum_triple_orbits(const std::vector<FormalCharacter>& reps) {
    if (reps.size() != 1 && reps.size() != 3) throw InvalidArgument("zero_sum_triple_orbits takes one or three characters");
    for (const auto& r : reps) {
        if (!r.is_multiplicity_free()) throw InvalidArgument("zero_sum_triple_orbits needs multiplicity-free characters");
        if (!(r.system().spec() == reps[0].system().spec())) throw InvalidArgument("characters over different systems");
    }
    const RootSystem& rs = reps[0].system();
    auto slot = [&](int k) -> const FormalCharacter& { return reps.size() == 1 ? reps[0] : reps[k]; };
    Support last;
    for (const auto& [w, m] : slot(2).terms()) last.insert(w);

    using Triple = std::array<Weight, 3>;
    std::set<Triple> all;
    std::set<std::array<Weight, 3>> unordered;
    for (const auto& [a, ma] : slot(0).terms()) {
        for (const auto& [b, mb] : slot(1).terms()) {
            const Weight c = -(a + b);
            if (!last.count(c)) continue;
            all.insert({a, b, c});
            Triple s{a, b, c};
            std::sort(s.begin(), s.end());
            unordered.insert(s);
        }
    }
    TripleOrbitReport rep;
    rep.ordered_triples = static_cast<long long>(all.size());
    rep.unordered_triples = reps.size() == 1 ? static_cast<long long>(unordered.size()) : 0;

    std::set<Triple> left = all;
    while (!left.empty()) {
        std::set<Triple> orb{*left.begin()};
        std::vector<Triple> todo{*left.begin()};
        while (!todo.empty()) {
            Triple t = todo.back();
            todo.pop_back();
            for (int i = 1; i <= rs.rank(); ++i) {
                Triple r{rs.reflect(t[0], i), rs.reflect(t[1], i), rs.reflect(t[2], i)};
                if (orb.insert(r).second) todo.push_back(r);
            }
        }
        for (const Triple& t : orb) left.erase(t);
        rep.orbit_sizes.push_back(static_cast<long long>(orb.size()));
    }
    rep.orbits = static_cast<long long>(rep.orbit_sizes.size());
    return rep;
}

// --------------------------------------------------------------------- E6

const char* to_string(E6Duality::OrbitClass c) {
    switch (c) {
        case E6Duality::OrbitClass::Hyperline: return "hyperline";
        case E6Duality::OrbitClass::Lambda2: return "lambda2";
        case E6Duality::OrbitClass::MinusOmega6: return "minus-omega6";
    }
    return "?";
}

E6Duality::E6Duality() : g_(root_system("E6"), 1), phi_(e6_phi()) {
    const RootSystem& r = rs();
    for (const Weight& w : r.orbit(g_.omega())) weights_.insert(w);
    if (weights_.size() != 27) throw ConsistencyError("E6: expected 27 weights");
    for (int d = 1; d <= 6; ++d) {
        DeltaSpace v = delta_space(g_, d);
        standard_.push_back(v.support);
        lambda_.push_back(v.lowest_weight);
    }
    // The stabiliser of omega_6 acting on y; phi carries it to the stabiliser of v+.
    FormalCharacter chi(g_.system);
    for (const Weight& w : weights_) chi.add(w, 1);
    for (const Support& orb : wprime_orbits(r, {6}, chi)) {
        if (orb.count(lambda(6))) hyperline_class_ = orb;
    }
    if (hyperline_class_ != standard(6)) throw ConsistencyError("E6: W'-orbit of lambda_6 is not the hyperline of omega_1");
}

int E6Duality::standard_type(const Support& s) const {
    for (int d = 1; d <= 6; ++d) {
        if (standard_[d - 1] == s) return d;
    }
    return 0;
}

Support E6Duality::sharp(const Support& s1, const Support& s2) const {
    Support out;
    for (const Weight& a : s1) {
        for (const Weight& b : s2) {
            Weight w = phi_.apply(a + b);
            if (is_weight(w)) out.insert(w);
        }
    }
    return out;
}

Support E6Duality::hyperline(const Weight& mu) const {
    if (!is_weight(mu)) throw InvalidArgument(mu.str() + " is not a weight of the 27-dimensional representation");
    Support h = sharp({mu}, weights_);
    if (h.size() != 10) throw ConsistencyError("hyperline of " + mu.str() + " has " + std::to_string(h.size()) + " weights");
    return h;
}

Weight E6Duality::brace_weight(const Weight& x, const Weight& y, const Weight& z) const {
    return x + z + phi_.apply(y);
}

bool E6Duality::b_nonzero(const Weight& mu1, const Weight& mu2) const {
    return (mu1 + phi_.apply(mu2)).is_zero();
}

Support E6Duality::psi_intersection(const Support& x) const {
    Support out = weights_;
    for (const Weight& mu : x) {
        const Support h = hyperline(mu);
        Support keep;
        std::set_intersection(out.begin(), out.end(), h.begin(), h.end(), std::inserter(keep, keep.end()));
        out = std::move(keep);
    }
    return out;
}

Support E6Duality::psi_weight_bound(const Support& x) const {
    Support out;
    for (const Weight& y : weights_) {
        bool ok = true;
        for (const Weight& mx : x) {
            for (const Weight& nu : weights_) {
                const Weight w = brace_weight(mx, y, nu);
                if (is_weight(w) && !x.count(w)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) break;
        }
        if (ok) out.insert(y);
    }
    return out;
}

Support E6Duality::psi(int delta, const Support& x) const {
    rs().check_node(delta);
    if (x.size() != standard(delta).size()) throw InvalidArgument("support size does not match type " + std::to_string(delta));
    // The intersection formula is only valid away from dimension 6.
    return delta == 2 ? psi_weight_bound(x) : psi_intersection(x);
}

E6Duality::PsiResult E6Duality::psi_standard(int delta) const {
    PsiResult r;
    r.delta = delta;
    r.support = psi(delta, standard(delta));
    r.psi_delta = standard_type(r.support);
    if (r.psi_delta != phi_(delta)) {
        throw ConsistencyError("psi(V_" + std::to_string(delta) + ") is not V_" + std::to_string(phi_(delta)));
    }
    return r;
}

E6Duality::ExtraResult E6Duality::psi_extra() const {
    ExtraResult r;
    const Support& s2 = standard(2);
    const Support& s5 = standard(5);
    std::set_intersection(s2.begin(), s2.end(), s5.begin(), s5.end(), std::inserter(r.x, r.x.end()));
    if (r.x.size() != 4) throw ConsistencyError("V_2 and V_5 should meet in 4 weights");
    const Weight extra{0, 1, 0, 0, -1, 1};
    if (!is_weight(extra) || r.x.count(extra)) throw ConsistencyError("bad extra weight for Y");
    r.y = r.x;
    r.y.insert(extra);
    r.psi_x = psi_intersection(r.x);
    r.psi_psi_x = psi_intersection(r.psi_x);
    r.psi_y = psi_intersection(r.y);
    r.psi_psi_y = psi_intersection(r.psi_y);
    r.psi_x_type = standard_type(r.psi_x);
    r.psi_psi_x_type = standard_type(r.psi_psi_x);
    r.psi_y_type = standard_type(r.psi_y);
    r.psi_psi_y_type = standard_type(r.psi_psi_y);
    return r;
}

E6Duality::OrbitClass E6Duality::classify(const Weight& y) const {
    if (!is_weight(y)) throw InvalidArgument(y.str() + " is not a weight of the 27-dimensional representation");
    if (hyperline_class_.count(y)) return OrbitClass::Hyperline;
    if (y == -rs().fundamental(6)) return OrbitClass::MinusOmega6;
    return OrbitClass::Lambda2;
}

Weight E6Duality::representative(OrbitClass c) const {
    switch (c) {
        case OrbitClass::Hyperline: return lambda(6);
        case OrbitClass::Lambda2: return lambda(2);
        case OrbitClass::MinusOmega6: return -rs().fundamental(6);
    }
    return lambda(6);
}

// {v+, y, z} = b(v+,y)z + b(z,y)v+ - (v+ # z) # y, one z per weight. Every
// nonzero term carries the brace weight, and distinct z give distinct weights,
// so a weight is certain to occur when exactly one term survives (or the two
// b-terms coincide because z = v+).
E6Duality::BraceResult E6Duality::brace_vplus(const Weight& y) const {
    BraceResult r;
    r.y = y;
    r.orbit_class = classify(y);
    const Weight x = g_.omega();
    for (const Weight& nu : weights_) {
        const bool t1 = b_nonzero(x, y);
        const bool t2 = b_nonzero(nu, y);
        const Weight xz = phi_.apply(x + nu);
        const bool t3 = is_weight(xz) && is_weight(phi_.apply(xz + y));
        const Weight w = brace_weight(x, y, nu);
        if (!(t1 || t2 || t3)) continue;
        if (!is_weight(w)) throw ConsistencyError("nonzero brace term with weight " + w.str() + " outside V");
        r.upper_bound.insert(w);
        const int n = int(t1) + int(t2) + int(t3);
        if (n == 1 || (n == 2 && t1 && t2 && nu == x)) r.support.insert(w);
    }
    if (r.orbit_class == OrbitClass::Hyperline) {
        // {X, psi(X), V} = 0 for the point X = <v+>; the terms cancel.
        r.by_identity = true;
        r.support.clear();
    }
    r.dimension = static_cast<long long>(r.support.size());
    return r;
}

E6Duality::BraceResult E6Duality::dim_brace_vplus(OrbitClass c) const {
    return brace_vplus(representative(c));
}

E6Duality::LnReport E6Duality::verify_ln_with(int delta, const Support& p) const {
    LnReport rep;
    rep.delta = delta;
    const Support& s = standard(delta);
    rep.pairing_ok = true;
    for (const Weight& mu : s) {
        for (const Weight& mup : p) {
            ++rep.pairs_checked;
            if (b_nonzero(mu, mup)) rep.pairing_ok = false;
        }
    }
    rep.brace_ok = true;
    for (const Weight& a : p) {
        for (const Weight& b : p) {
            for (const Weight& mx : s) {
                ++rep.triples_checked;
                if (is_weight(brace_weight(a, mx, b))) rep.brace_ok = false;
            }
        }
    }
    return rep;
}

E6Duality::LnReport E6Duality::verify_ln(int delta) const {
    return verify_ln_with(delta, psi_standard(delta).support);
}

const E6Duality& e6_duality() {
    static const E6Duality d;
    return d;
}

// ------------------------------------------------------- chamber checks

namespace {

Support reflect_all(const RootSystem& rs, const Support& s, int i) {
    Support out;
    for (const Weight& w : s) out.insert(rs.reflect(w, i));
    return out;
}

// Type of an apartment object with this support, or 0.
int find_type(const GeometrySpec& g, const std::vector<Support>& std_supports, const Support& s) {
    for (std::size_t d = 0; d < std_supports.size(); ++d) {
        if (std_supports[d] == s) return static_cast<int>(d) + 1;
    }
    for (std::size_t d = 0; d < std_supports.size(); ++d) {
        if (std_supports[d].size() != s.size()) continue;
        for (const auto& obj : apartment_objects(g, static_cast<int>(d) + 1)) {
            if (obj.support == s) return static_cast<int>(d) + 1;
        }
    }
    return 0;
}

}  // namespace

ChamberCheck chamber_automorphism_check(const GeometrySpec& g, const DiagramAutomorphism& phi, const SupportMap& psi) {
    const RootSystem& rs = g.rs();
    const int n = rs.rank();
    if (!phi.preserves(rs)) throw InvalidArgument("phi is not a diagram automorphism of " + rs.name());
    ChamberCheck out;
    std::ostringstream detail;

    std::vector<Support> std_supports;
    for (int d = 1; d <= n; ++d) std_supports.push_back(delta_space(g, d).support);

    std::vector<Support> images(n + 1);
    std::vector<int> types(n + 1, 0);
    for (int d = 1; d <= n; ++d) {
        images[d] = psi(d, std_supports[d - 1]);
        types[d] = find_type(g, std_supports, images[d]);
        out.type_map[d] = types[d];
        if (types[d] == 0) detail << "image of V_" << d << " is not an apartment object; ";
    }

    std::vector<int> sorted(types.begin() + 1, types.end());
    std::sort(sorted.begin(), sorted.end());
    bool one_per_type = sorted.front() != 0 && std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    bool pairwise = one_per_type;
    for (int a = 1; a <= n && pairwise; ++a) {
        for (int b = a + 1; b <= n && pairwise; ++b) {
            try {
                if (!incident(g, types[a], images[a], types[b], images[b])) {
                    pairwise = false;
                    detail << "images of V_" << a << " and V_" << b << " are not incident; ";
                }
            } catch (const NoRuleError&) {
                detail << "no rule for (" << types[a] << "," << types[b] << "); ";
            }
        }
    }
    out.chamber_ok = one_per_type && pairwise;

    out.types_follow_phi = true;
    for (int d = 1; d <= n; ++d) {
        if (types[d] != phi(d)) out.types_follow_phi = false;
    }

    // psi(s_i X) = s_phi(i) psi(X) over every translate of each standard space.
    out.equivariant = true;
    long long checked = 0;
    for (int d = 1; d <= n && out.equivariant; ++d) {
        std::map<Support, Support> seen{{std_supports[d - 1], images[d]}};
        std::vector<Support> todo{std_supports[d - 1]};
        while (!todo.empty() && out.equivariant) {
            Support x = todo.back();
            todo.pop_back();
            const Support px = seen.at(x);
            for (int i = 1; i <= n; ++i) {
                Support sx = reflect_all(rs, x, i);
                const Support expect = reflect_all(rs, px, phi(i));
                auto it = seen.find(sx);
                const Support got = it != seen.end() ? it->second : psi(d, sx);
                ++checked;
                if (got != expect) {
                    out.equivariant = false;
                    detail << "psi(s_" << i << " X) != s_" << phi(i) << " psi(X) for a type-" << d << " object; ";
                    break;
                }
                if (it == seen.end()) {
                    seen.emplace(sx, got);
                    todo.push_back(std::move(sx));
                }
            }
        }
    }
    detail << checked << " equivariance checks";
    out.detail = detail.str();
    return out;
}

// --------------------------------------------------------------------- E7

namespace {

Support e7_weights() {
    auto rs = root_system("E7");
    const auto orb = rs->orbit(rs->fundamental(7));
    return Support(orb.begin(), orb.end());
}

}  // namespace

bool e7_rank_one_check() {
    auto rs = root_system("E7");
    const Support w = e7_weights();
    const Weight top = rs->fundamental(7);
    for (const Weight& nu : w) {
        if (w.count(2 * top + nu) && nu != -top) return false;
    }
    return true;
}

bool e7_inner_ideal_check(int delta) {
    const GeometrySpec g(root_system("E7"), 7);
    const Support s = delta_space(g, delta).support;
    const Support w = e7_weights();
    for (const Weight& a : s) {
        for (const Weight& b : s) {
            for (const Weight& nu : w) {
                const Weight t = a + b + nu;
                if (w.count(t) && !s.count(t)) return false;
            }
        }
    }
    return true;
}

}  // namespace wg
