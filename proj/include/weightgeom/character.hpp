#ifndef WEIGHTGEOM_CHARACTER_HPP
#define WEIGHTGEOM_CHARACTER_HPP

#include <map>
#include <memory>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "weightgeom/rootsystem.hpp"

namespace wg {

using BigInt = boost::multiprecision::cpp_int;

// Finite map weight -> multiplicity over one root system. Zero entries are
// never stored. Negative entries only show up in intermediate virtual
// characters.
class FormalCharacter {
public:
    using Terms = std::map<Weight, BigInt>;

    explicit FormalCharacter(std::shared_ptr<const RootSystem> rs);
    FormalCharacter(std::shared_ptr<const RootSystem> rs, Terms terms);

    const RootSystem& system() const { return *rs_; }
    const std::shared_ptr<const RootSystem>& system_ptr() const { return rs_; }
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    BigInt multiplicity(const Weight& w) const;
    void add(const Weight& w, const BigInt& m);
    BigInt dimension() const;
    std::vector<Weight> weights() const;

    bool is_nonnegative() const;
    bool is_weyl_invariant() const;
    bool is_multiplicity_free() const;
    Terms dominant_part() const;

    FormalCharacter& operator+=(const FormalCharacter& o);
    FormalCharacter& operator-=(const FormalCharacter& o);
    FormalCharacter scaled(const BigInt& k) const;
    friend bool operator==(const FormalCharacter& a, const FormalCharacter& b);

private:
    void check_same(const FormalCharacter& o) const;

    std::shared_ptr<const RootSystem> rs_;
    Terms terms_;
};

struct DecompositionResult {
    std::shared_ptr<const RootSystem> system;
    std::map<Weight, BigInt> constituents;  // dominant highest weight -> multiplicity

    BigInt multiplicity(const Weight& hw) const;
    BigInt dimension() const;  // sum of mult * weyl_dimension
};

enum class BilinearType { None, Symmetric, Skew };
const char* to_string(BilinearType t);

struct PlethysmOptions {
    int max_degree = 5;
    bool allow_e8 = false;
};

FormalCharacter trivial_character(std::shared_ptr<const RootSystem> rs);

// Multiplicities of the dominant weights of V(hw), by Freudenthal's formula.
// Memoised per (system, hw), and mirrored to the on-disk cache if one is set.
const std::map<Weight, BigInt>& dominant_multiplicities(const RootSystem& rs, const Weight& hw);

// Expands a dominant-weight table over the Weyl orbits.
FormalCharacter expand_dominant(std::shared_ptr<const RootSystem> rs, const std::map<Weight, BigInt>& dom);

FormalCharacter irrep_character(std::shared_ptr<const RootSystem> rs, const Weight& hw);
BigInt weyl_dimension(const RootSystem& rs, const Weight& hw);
Weight dual_highest_weight(const RootSystem& rs, const Weight& hw);

FormalCharacter tensor_product(const FormalCharacter& a, const FormalCharacter& b);
FormalCharacter adams_operation(const FormalCharacter& a, int k);
FormalCharacter symmetric_power(const FormalCharacter& a, int d, const PlethysmOptions& opts = {});
FormalCharacter exterior_power(const FormalCharacter& a, int d, const PlethysmOptions& opts = {});

// Peels off irreducibles, highest first. Throws NotACharacter on input that
// is not a nonnegative Weyl-invariant combination of irreducibles.
DecompositionResult decompose(const FormalCharacter& a);
BigInt trivial_multiplicity(const FormalCharacter& a);

BilinearType invariant_bilinear_type(std::shared_ptr<const RootSystem> rs, const Weight& hw,
                                     const PlethysmOptions& opts = {});
bool minuscule_check(const RootSystem& rs, const Weight& hw);

void check_dominant(const RootSystem& rs, const Weight& hw);

}  // namespace wg

#endif
