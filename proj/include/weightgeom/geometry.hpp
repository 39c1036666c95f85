#ifndef WEIGHTGEOM_GEOMETRY_HPP
#define WEIGHTGEOM_GEOMETRY_HPP

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "weightgeom/character.hpp"

namespace wg {

using Support = std::set<Weight>;

struct GeometrySpec {
    std::shared_ptr<const RootSystem> system;
    int beta = 1;

    GeometrySpec(std::shared_ptr<const RootSystem> rs, int beta);
    const RootSystem& rs() const { return *system; }
    Weight omega() const { return system->fundamental(beta); }
    std::string name() const;  // "E6/1"
};

// The node whose fundamental representation is the standard one: 1 for the
// classical families, E6 and G2; 7 for E7; 8 for E8 (adjoint); 4 for F4.
int standard_beta(const RootSystemSpec& spec);
GeometrySpec standard_geometry(const std::string& name);

struct DeltaSpace {
    int delta = 0;
    std::vector<int> component;  // delta-component of beta
    Support support;
    std::map<Weight, BigInt> multiplicity;  // restricted to the support
    long long dimension = 0;
    Weight lowest_weight;
    std::string levi_type;
};

// Weights of V(omega_beta) that differ from omega by a combination of simple
// roots inside the delta-component. The dimension is checked against the
// Weyl dimension of the corresponding fundamental representation of the Levi.
DeltaSpace delta_space(const GeometrySpec& g, int delta);
BigInt levi_dimension(const GeometrySpec& g, int delta);
std::map<int, long long> dimension_diagram(const GeometrySpec& g);
std::map<int, long long> halfspin_dimensions(int n);

struct HasseEdge {
    Weight upper;
    Weight lower;
    int label = 0;  // lower = upper - alpha_label
};

struct HasseDiagram {
    std::shared_ptr<const RootSystem> system;
    std::vector<Weight> nodes;  // top to bottom: height descending, then lex descending
    std::map<Weight, BigInt> multiplicity;
    std::vector<HasseEdge> edges;  // in node order, then by label

    std::vector<std::vector<Weight>> levels() const;
    std::vector<HasseEdge> edges_from(const Weight& upper) const;
};

HasseDiagram hasse_diagram(const FormalCharacter& chi);

struct ApartmentObject {
    int delta = 0;
    WeylElement translate;
    Support support;
};

// All distinct Weyl translates of the standard delta-support. Refused for
// non-minuscule beta.
std::vector<ApartmentObject> apartment_objects(const GeometrySpec& g, int delta);

struct IncidenceRule {
    enum class Kind { Equality, Containment, Intersection };
    Kind kind = Kind::Containment;
    int intersection_size = 0;
    std::string description;
};

// Throws NoRuleError for pairs of types with no stated rule.
IncidenceRule incidence_rule(const GeometrySpec& g, int delta1, int delta2);
bool incident(const GeometrySpec& g, int delta1, const Support& s1, int delta2, const Support& s2);
bool incidence(const GeometrySpec& g, const ApartmentObject& x, const ApartmentObject& y);

// Standard delta-spaces by node index; every pair with a rule is checked for
// incidence (ConsistencyError otherwise).
std::vector<DeltaSpace> standard_chamber(const GeometrySpec& g);

struct ChamberPairReport {
    int checked = 0;
    int incident = 0;
    std::vector<std::pair<int, int>> no_rule;
};
ChamberPairReport standard_chamber_pairs(const GeometrySpec& g);

using Flag = std::vector<ApartmentObject>;
bool is_flag(const GeometrySpec& g, const Flag& flag);
// Number of apartment chambers (one object per type, pairwise incident)
// containing the flag, by exhaustive search.
long long count_chamber_extensions(const GeometrySpec& g, const Flag& flag);

// Exhaustive comparison of the rule table against incidence in the thin
// geometry (two objects are incident iff some Weyl translate of the standard
// chamber contains both).
struct IncidenceAudit {
    long long objects = 0;
    long long chambers = 0;
    long long pairs = 0;             // unordered pairs of distinct types
    long long truly_incident = 0;
    long long rule_incident = 0;
    long long false_positives = 0;   // rule says incident, no common chamber
    long long false_negatives = 0;   // common chamber, rule says not incident
    std::vector<std::pair<int, int>> no_rule;
    bool agrees() const { return false_positives == 0 && false_negatives == 0 && no_rule.empty(); }
};
IncidenceAudit audit_incidence(const GeometrySpec& g, long long max_chambers = 2'000'000);

}  // namespace wg

#endif
