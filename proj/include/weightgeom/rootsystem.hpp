#ifndef WEIGHTGEOM_ROOTSYSTEM_HPP
#define WEIGHTGEOM_ROOTSYSTEM_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "weightgeom/weight.hpp"

namespace wg {

enum class Family { A, B, C, D, E, F, G };

char family_letter(Family f);
Family parse_family(char c);

struct RootSystemSpec {
    Family family = Family::A;
    int rank = 1;

    std::string name() const;  // "E6"
    bool valid() const;
    void validate() const;      // throws InvalidArgument
    static RootSystemSpec parse(const std::string& name);

    friend bool operator==(const RootSystemSpec&, const RootSystemSpec&) = default;
};

struct Root {
    Weight simple;  // coefficients over the simple roots
    Weight fw;      // = simple · cartan, i.e. pairings with the simple coroots
    int height() const { return simple.sum(); }
};

class RootSystem;

// Product s_{w[0]} s_{w[1]} ... of simple reflections; the last letter acts
// first. Letters are 1-based node indices.
class WeylElement {
public:
    WeylElement() = default;
    explicit WeylElement(std::vector<int> word) : word_(std::move(word)) {}

    const std::vector<int>& word() const { return word_; }
    std::size_t length() const { return word_.size(); }

    Weight act(const RootSystem& rs, const Weight& w) const;
    WeylElement operator*(const WeylElement& o) const;
    WeylElement inverse() const;
    // Same group element iff both send rho to the same weight.
    bool equals(const RootSystem& rs, const WeylElement& o) const;

private:
    std::vector<int> word_;
};

// One simple type in Bourbaki numbering. Convention used throughout: the
// fundamental-weight coordinates of alpha_i are row i of cartan(), so
// cartan(i, j) = <alpha_i, alpha_j^vee>. All node indices are 1-based.
class RootSystem {
public:
    explicit RootSystem(RootSystemSpec spec);

    const RootSystemSpec& spec() const { return spec_; }
    int rank() const { return spec_.rank; }
    std::string name() const { return spec_.name(); }

    int cartan(int i, int j) const { return cartan_[i - 1][j - 1]; }
    const std::vector<std::vector<int>>& cartan_matrix() const { return cartan_; }
    // (alpha_i, alpha_i)/2 with the short roots normalised to 1.
    int half_length(int i) const { return half_len_[i - 1]; }
    std::vector<int> neighbours(int i) const;

    const std::vector<Root>& positive_roots() const { return positive_; }
    const Root& highest_root() const { return positive_.back(); }
    bool is_root(const Weight& simple) const;

    Weight zero() const { return Weight(rank()); }
    Weight rho() const;
    Weight fundamental(int i) const;
    Weight simple_root(int i) const;  // fw coordinates

    Weight reflect(const Weight& w, int i) const;
    // Dominant element of the orbit of w. If word is given it receives the
    // reflections applied, first to last, so WeylElement(*word).act(result)
    // gives back w.
    Weight to_dominant(const Weight& w, std::vector<int>* word = nullptr) const;
    // w0 applied to a dominant weight: the unique orbit element with all
    // coordinates <= 0.
    Weight antidominant(const Weight& dominant) const;
    // -w0 as a permutation of the nodes: entry i-1 holds j with -w0(omega_i) = omega_j.
    std::vector<int> minus_w0_permutation() const;
    // Sorted lexicographically.
    std::vector<Weight> orbit(const Weight& w) const;

    // Coordinates over the simple roots of a root-lattice element given in
    // fw coordinates; nullopt if it is not in the root lattice.
    std::optional<Weight> simple_coords(const Weight& fw) const;
    Weight fw_from_simple(const Weight& simple) const;
    // det(cartan) * (sum of simple-root coordinates). Integral for every
    // weight and strictly increasing along the dominance order.
    long long scaled_height(const Weight& fw) const;
    long long cartan_det() const { return det_; }

    // (mu, alpha) for alpha given by simple coords, short roots of length^2 2.
    long long pairing(const Weight& mu, const Weight& alpha_simple) const;
    // (alpha, alpha)/2 for alpha given by simple coords.
    long long half_norm(const Weight& alpha_simple) const;

    std::vector<int> delta_component(int delta, int beta) const;
    int delta_height(const Root& r, int delta, int beta) const;

    void check_node(int i) const;

private:
    void build_cartan();
    void build_half_lengths();
    void build_positive_roots();
    void build_inverse();

    RootSystemSpec spec_;
    std::vector<std::vector<int>> cartan_;
    std::vector<int> half_len_;
    std::vector<Root> positive_;
    std::vector<std::vector<long long>> adj_;  // det * cartan^{-1}
    std::vector<long long> adj_row_sum_;
    long long det_ = 1;
};

// Shared, lazily built instances; safe to call from several threads.
std::shared_ptr<const RootSystem> root_system(const RootSystemSpec& spec);
std::shared_ptr<const RootSystem> root_system(const std::string& name);

}  // namespace wg

#endif
