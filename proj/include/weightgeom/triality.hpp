#ifndef WEIGHTGEOM_TRIALITY_HPP
#define WEIGHTGEOM_TRIALITY_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "weightgeom/duality.hpp"

namespace wg {

// 8x8 zero/nonzero pattern of the D4 product, rows and columns in the order
// e1 e2 e3 e4 f4 f3 f2 f1. A cell holds the label of the product's weight,
// or nothing when the product vanishes. Scalars are not tracked.
struct TrialityTable {
    std::vector<std::string> labels;
    std::array<std::array<std::optional<std::string>, 8>, 8> cells{};

    const std::optional<std::string>& at(const std::string& row, const std::string& col) const;
    int nonzero_in_row(int r) const;
    int nonzero() const;
    // Cells that differ, as (row label, column label).
    std::vector<std::pair<std::string, std::string>> mismatches(const TrialityTable& o) const;
};

// Weight calculus for D4 with beta = 1 and phi = (1 3 4). A vector of rho_0
// weight mu has rho_i weight phi^i(mu); the product pairs a row vector read
// in rho_1 with a column vector read in rho_2 and lands in rho_0.
class D4Triality {
public:
    D4Triality();

    const GeometrySpec& geometry() const { return g_; }
    const DiagramAutomorphism& phi() const { return phi_; }
    const Support& weights() const { return weights_; }  // rho_0
    const std::vector<std::string>& labels() const { return labels_; }
    Weight weight(const std::string& label) const;
    std::string label(const Weight& w) const;
    const Support& standard(int delta) const { return standard_.at(delta - 1); }
    int standard_type(const Support& s) const;

    // Weight of row * column if nonzero.
    std::optional<Weight> product(const Weight& row, const Weight& col) const;
    Support star(const Support& rows, const Support& cols) const;
    TrialityTable table() const;

    // psi on an apartment object, by the size of its support:
    // <a> -> a*V, a line X -> X*(V*X), a*V -> V*a, V*a -> <a>.
    Support psi(const Support& x) const;

    // Zero-sum triples (mu0, mu1, mu2) of rho_0, rho_1, rho_2 weights are
    // closed under (mu0, mu1, mu2) -> (phi mu2, phi mu0, phi mu1).
    bool cyclic_shift_check() const;
    // Nonzero cells of the table are exactly the pairs whose twisted weights
    // sum to a rho_0 weight.
    bool nonzero_rule_check() const;

private:
    GeometrySpec g_;
    DiagramAutomorphism phi_;
    Support weights_;
    std::vector<std::string> labels_;
    std::vector<Support> standard_;
};

const D4Triality& d4_triality();

// Reference multiplication table, transcribed cell by cell. Only used for
// comparison against table().
TrialityTable reference_triality_table();

}  // namespace wg

#endif
