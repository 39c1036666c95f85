#ifndef WEIGHTGEOM_DUALITY_HPP
#define WEIGHTGEOM_DUALITY_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "weightgeom/geometry.hpp"

namespace wg {

// Permutation of the Dynkin nodes preserving the Cartan matrix. On weights it
// moves coordinate i to position perm(i).
class DiagramAutomorphism {
public:
    DiagramAutomorphism() = default;
    explicit DiagramAutomorphism(std::vector<int> perm);  // perm[i-1] = image of node i

    int operator()(int i) const { return perm_[i - 1]; }
    const std::vector<int>& perm() const { return perm_; }
    int order() const;
    bool is_identity() const;

    Weight apply(const Weight& w) const;
    Support apply(const Support& s) const;
    WeylElement apply(const WeylElement& w) const;  // s_i -> s_perm(i)
    DiagramAutomorphism inverse() const;
    DiagramAutomorphism then(const DiagramAutomorphism& after) const;

    std::string cycles() const;  // "(1 6)(3 5)", "()" for the identity
    bool preserves(const RootSystem& rs) const;

    friend bool operator==(const DiagramAutomorphism&, const DiagramAutomorphism&) = default;

private:
    std::vector<int> perm_;
};

std::vector<DiagramAutomorphism> diagram_automorphisms(const RootSystem& rs);
DiagramAutomorphism e6_phi();  // (1 6)(3 5)
DiagramAutomorphism d4_phi();  // 1 -> 3 -> 4 -> 1
DiagramAutomorphism dn_swap(int n);  // (n-1 n)

// Weights of the e/f basis of the vector representation of D_n:
// e_1 = omega_1, e_{i+1} = e_i - alpha_i, f_i = -e_i.
Weight dn_basis_weight(int n, const std::string& label);
std::string dn_basis_label(int n, const Weight& w);  // throws if w is not a basis weight
std::vector<std::string> dn_basis_labels(int n);     // e1..en, fn..f1

// Orbits on the weights of chi under the parabolic subgroup generated by the
// simple reflections not in `removed`, largest first.
std::vector<Support> wprime_orbits(const RootSystem& rs, const std::vector<int>& removed, const FormalCharacter& chi);

struct TripleOrbitReport {
    long long ordered_triples = 0;
    long long unordered_triples = 0;  // only meaningful for a single representation
    long long orbits = 0;
    std::vector<long long> orbit_sizes;
};
// Zero-sum triples (mu0, mu1, mu2), mu_i a weight of reps[i] (or of reps[0]
// for all slots when one character is given), up to the diagonal Weyl action.
TripleOrbitReport zero_sum_triple_orbits(const std::vector<FormalCharacter>& reps);

// Weight calculus for the 27-dimensional E6 representation with beta = 1.
class E6Duality {
public:
    enum class OrbitClass { Hyperline, Lambda2, MinusOmega6 };

    struct PsiResult {
        int delta = 0;
        int psi_delta = 0;  // the type whose standard support came out
        Support support;
    };
    struct ExtraResult {
        Support x, psi_x, psi_psi_x;
        Support y, psi_y, psi_psi_y;
        int psi_x_type = 0, psi_psi_x_type = 0, psi_y_type = 0, psi_psi_y_type = 0;
    };
    struct BraceResult {
        OrbitClass orbit_class = OrbitClass::Hyperline;
        Weight y;
        long long dimension = 0;
        Support support;      // weights certified to occur
        Support upper_bound;  // weights some term could produce
        bool by_identity = false;  // value from a polynomial identity, not support arithmetic
    };
    struct LnReport {
        int delta = 0;
        bool pairing_ok = false;  // no mu in V_delta, mu' in psi with mu + phi(mu') = 0
        bool brace_ok = false;    // no {psi, V_delta, psi} weight is a weight of V
        long long pairs_checked = 0;
        long long triples_checked = 0;
        bool ok() const { return pairing_ok && brace_ok; }
    };

    E6Duality();

    const GeometrySpec& geometry() const { return g_; }
    const RootSystem& rs() const { return g_.rs(); }
    const DiagramAutomorphism& phi() const { return phi_; }
    const Support& weights() const { return weights_; }
    bool is_weight(const Weight& w) const { return weights_.count(w) > 0; }
    const Support& standard(int delta) const { return standard_.at(delta - 1); }
    Weight lambda(int delta) const { return lambda_.at(delta - 1); }
    // Type of the standard delta-space with this support, or 0.
    int standard_type(const Support& s) const;

    Support sharp(const Support& s1, const Support& s2) const;
    Support hyperline(const Weight& mu) const;
    Weight brace_weight(const Weight& x, const Weight& y, const Weight& z) const;
    bool b_nonzero(const Weight& mu1, const Weight& mu2) const;

    // Intersection of the hyperlines through a weight basis.
    Support psi_intersection(const Support& x) const;
    // Weights y such that every weight of {X, y, V} that is a weight of V lies in X.
    Support psi_weight_bound(const Support& x) const;
    // psi on an object of the given type: the intersection formula away from
    // dimension 6, the weight bound on alpha_2-type objects.
    Support psi(int delta, const Support& x) const;

    PsiResult psi_standard(int delta) const;
    ExtraResult psi_extra() const;

    OrbitClass classify(const Weight& y) const;
    Weight representative(OrbitClass c) const;
    BraceResult brace_vplus(const Weight& y) const;
    BraceResult dim_brace_vplus(OrbitClass c) const;

    LnReport verify_ln(int delta) const;
    LnReport verify_ln_with(int delta, const Support& psi_support) const;

private:
    GeometrySpec g_;
    DiagramAutomorphism phi_;
    Support weights_;
    std::vector<Support> standard_;
    std::vector<Weight> lambda_;
    Support hyperline_class_;  // W'-orbit of lambda_6
};

const E6Duality& e6_duality();
const char* to_string(E6Duality::OrbitClass c);

// Checks that a support-level map sends the standard chamber to a chamber,
// one object per type, with types permuted by phi, and that it commutes with
// the simple reflections up to phi: psi(s_i X) = s_phi(i) psi(X).
struct ChamberCheck {
    bool chamber_ok = false;
    bool types_follow_phi = false;
    bool equivariant = false;
    std::map<int, int> type_map;
    std::string detail;
    bool ok() const { return chamber_ok && types_follow_phi && equivariant; }
};
using SupportMap = std::function<Support(int delta, const Support&)>;
ChamberCheck chamber_automorphism_check(const GeometrySpec& g, const DiagramAutomorphism& phi, const SupportMap& psi);

// E7 (beta = 7) weight-level checks: t(v+, v+, V) has support in {omega_7},
// and each V_delta is closed under the triple-product weight bound.
bool e7_rank_one_check();
bool e7_inner_ideal_check(int delta);

}  // namespace wg

#endif
