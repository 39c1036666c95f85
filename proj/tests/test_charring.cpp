#include <doctest.h>

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "weightgeom/branching.hpp"
#include "weightgeom/character.hpp"
#include "weightgeom/errors.hpp"

using namespace wg;

namespace {

FormalCharacter irrep(const std::string& sys, const Weight& hw) { return irrep_character(root_system(sys), hw); }

FormalCharacter fund(const std::string& sys, int i) {
    auto rs = root_system(sys);
    return irrep_character(rs, rs->fundamental(i));
}

std::multiset<long long> constituent_dims(const DecompositionResult& d) {
    std::multiset<long long> out;
    for (const auto& [hw, m] : d.constituents)
        for (long long k = 0; k < static_cast<long long>(m); ++k)
            out.insert(static_cast<long long>(weyl_dimension(*d.system, hw)));
    return out;
}

// Plain convolution over weight listings.
FormalCharacter convolve(const FormalCharacter& a, const FormalCharacter& b) {
    FormalCharacter out(a.system_ptr());
    for (const Weight& x : oracle::listing(a))
        for (const Weight& y : oracle::listing(b)) out.add(x + y, 1);
    return out;
}

}  // namespace

TEST_CASE("irreducible characters") {
    auto e6 = fund("E6", 1);
    CHECK(e6.size() == 27);
    for (const auto& [w, m] : e6.terms()) CHECK(m == 1);

    auto f4 = fund("F4", 4);
    CHECK(f4.dimension() == 26);
    CHECK(f4.multiplicity(Weight(4)) == 2);
    int ones = 0;
    for (const auto& [w, m] : f4.terms()) ones += m == 1;
    CHECK(ones == 24);

    auto e8 = fund("E8", 8);
    CHECK(e8.dimension() == 248);
    CHECK(e8.multiplicity(Weight(8)) == 8);
    CHECK(e8.is_weyl_invariant());
}

TEST_CASE("Weyl dimensions") {
    CHECK(weyl_dimension(*root_system("E7"), root_system("E7")->fundamental(7)) == 56);
    CHECK(weyl_dimension(*root_system("G2"), root_system("G2")->fundamental(1)) == 7);
    CHECK(weyl_dimension(*root_system("E8"), root_system("E8")->fundamental(1)) == 3875);
    CHECK(weyl_dimension(*root_system("E8"), root_system("E8")->fundamental(8)) == 248);
    for (int n = 1; n <= 8; ++n) {
        auto a = root_system("A" + std::to_string(n));
        CHECK(weyl_dimension(*a, a->fundamental(1)) == n + 1);
        if (n >= 2) {
            auto b = root_system("B" + std::to_string(n));
            auto c = root_system("C" + std::to_string(n));
            CHECK(weyl_dimension(*b, b->fundamental(1)) == 2 * n + 1);
            CHECK(weyl_dimension(*c, c->fundamental(1)) == 2 * n);
        }
        if (n >= 4) {
            auto d = root_system("D" + std::to_string(n));
            CHECK(weyl_dimension(*d, d->fundamental(1)) == 2 * n);
        }
    }
}

TEST_CASE("Freudenthal agrees with the Weyl dimension formula") {
    const std::vector<std::string> systems = {"A3", "A5", "B3", "B4", "C3", "C4", "D4", "D5", "D6", "G2", "F4", "E6"};
    for (const auto& name : systems) {
        auto rs = root_system(name);
        for (int i = 1; i <= rs->rank(); ++i) {
            CAPTURE(name);
            CAPTURE(i);
            auto chi = irrep_character(rs, rs->fundamental(i));
            CHECK(chi.dimension() == weyl_dimension(*rs, rs->fundamental(i)));
            CHECK(chi.is_weyl_invariant());
        }
        auto chi = irrep_character(rs, rs->rho());
        CHECK(chi.dimension() == weyl_dimension(*rs, rs->rho()));
    }
    auto e7 = root_system("E7");
    for (int i : {1, 2, 6, 7}) CHECK(fund("E7", i).dimension() == weyl_dimension(*e7, e7->fundamental(i)));
}

TEST_CASE("duals") {
    auto e6 = root_system("E6");
    CHECK(dual_highest_weight(*e6, e6->fundamental(1)) == e6->fundamental(6));
    auto d4 = root_system("D4");
    CHECK(dual_highest_weight(*d4, d4->fundamental(1)) == d4->fundamental(1));
    for (const char* name : {"A4", "D5", "E6", "E7", "G2"}) {
        auto rs = root_system(name);
        CHECK(dual_highest_weight(*rs, rs->zero()) == rs->zero());
        for (int i = 1; i <= rs->rank(); ++i) {
            Weight hw = rs->fundamental(i) + rs->fundamental(1);
            CHECK(dual_highest_weight(*rs, dual_highest_weight(*rs, hw)) == hw);
            // character of the dual is the negated character
            auto chi = irrep_character(rs, rs->fundamental(i));
            auto dual = irrep_character(rs, dual_highest_weight(*rs, rs->fundamental(i)));
            for (const auto& [w, m] : chi.terms()) CHECK(dual.multiplicity(-w) == m);
        }
    }
}

TEST_CASE("tensor products") {
    auto chi = fund("F4", 4);
    CHECK(tensor_product(chi, trivial_character(chi.system_ptr())) == chi);
    CHECK(tensor_product(chi, chi) == convolve(chi, chi));

    auto a1 = fund("A1", 1);
    auto d = decompose(tensor_product(a1, a1));
    CHECK(d.constituents == std::map<Weight, BigInt>{{Weight{0}, 1}, {Weight{2}, 1}});

    auto g2 = fund("G2", 1);
    auto dg = decompose(tensor_product(g2, g2));
    CHECK(constituent_dims(dg) == std::multiset<long long>{1, 7, 14, 27});
    CHECK(dg.dimension() == 49);
}

TEST_CASE("plethysm against brute-force pair and triple listings") {
    for (auto chi : {fund("E6", 1), fund("F4", 4), fund("G2", 1), fund("B3", 3)}) {
        auto w = oracle::listing(chi);
        FormalCharacter s2(chi.system_ptr()), l2(chi.system_ptr()), l3(chi.system_ptr());
        for (std::size_t i = 0; i < w.size(); ++i)
            for (std::size_t j = i; j < w.size(); ++j) {
                s2.add(w[i] + w[j], 1);
                if (j > i) l2.add(w[i] + w[j], 1);
            }
        for (std::size_t i = 0; i < w.size(); ++i)
            for (std::size_t j = i + 1; j < w.size(); ++j)
                for (std::size_t k = j + 1; k < w.size(); ++k) l3.add(w[i] + w[j] + w[k], 1);
        CHECK(symmetric_power(chi, 1) == chi);
        CHECK(symmetric_power(chi, 2) == s2);
        CHECK(exterior_power(chi, 2) == l2);
        CHECK(exterior_power(chi, 3) == l3);
        auto sum = symmetric_power(chi, 2);
        sum += exterior_power(chi, 2);
        CHECK(sum == tensor_product(chi, chi));
    }
}

TEST_CASE("invariant forms") {
    auto e6 = fund("E6", 6);
    CHECK(trivial_multiplicity(symmetric_power(e6, 1)) == 0);
    CHECK(trivial_multiplicity(symmetric_power(e6, 2)) == 0);
    CHECK(trivial_multiplicity(symmetric_power(e6, 3)) == 1);

    auto e7 = fund("E7", 7);
    CHECK(trivial_multiplicity(exterior_power(e7, 2)) == 1);
    CHECK(trivial_multiplicity(symmetric_power(e7, 4)) == 1);

    auto d4 = root_system("D4");
    auto triple = tensor_product(tensor_product(fund("D4", 1), fund("D4", 3)), fund("D4", 4));
    CHECK(trivial_multiplicity(triple) == 1);
    CHECK(decompose(triple).multiplicity(d4->zero()) == 1);
}

TEST_CASE("bilinear types") {
    for (int n = 4; n <= 7; ++n) {
        auto d = root_system("D" + std::to_string(n));
        CHECK(invariant_bilinear_type(d, d->fundamental(1)) == BilinearType::Symmetric);
    }
    auto e7 = root_system("E7");
    CHECK(invariant_bilinear_type(e7, e7->fundamental(7)) == BilinearType::Skew);
    auto e6 = root_system("E6");
    CHECK(invariant_bilinear_type(e6, e6->fundamental(1)) == BilinearType::None);
    auto c3 = root_system("C3");
    CHECK(invariant_bilinear_type(c3, c3->fundamental(1)) == BilinearType::Skew);
    auto b3 = root_system("B3");
    CHECK(invariant_bilinear_type(b3, b3->fundamental(1)) == BilinearType::Symmetric);
}

TEST_CASE("decompose") {
    for (const char* name : {"A3", "B2", "G2", "D4"}) {
        auto rs = root_system(name);
        Weight hw = rs->rho();
        CHECK(decompose(irrep_character(rs, hw)).constituents == std::map<Weight, BigInt>{{hw, 1}});
    }
    // (1,0) is lex-greater than the highest weight (0,2); peeling by plain
    // lex order would start from the wrong end
    auto a2 = root_system("A2");
    auto v02 = irrep_character(a2, Weight{0, 2});
    CHECK(v02.multiplicity(Weight{1, 0}) == 1);
    CHECK(Weight{1, 0} > Weight{0, 2});
    CHECK(decompose(v02).constituents == std::map<Weight, BigInt>{{Weight{0, 2}, 1}});

    auto a1 = root_system("A1");
    auto bad = irrep_character(a1, Weight{2});
    bad -= trivial_character(a1).scaled(2);
    CHECK_THROWS_AS(decompose(bad), NotACharacter);
    CHECK_THROWS_AS(irrep_character(a2, Weight{1, -1}), InvalidArgument);
}

TEST_CASE("refusals") {
    CHECK_THROWS_AS(symmetric_power(fund("E8", 8), 2), ComputationRefused);
    CHECK_THROWS_AS(symmetric_power(fund("A2", 1), 6), ComputationRefused);
    PlethysmOptions big;
    big.max_degree = 6;
    CHECK(symmetric_power(fund("A1", 1), 6, big).dimension() == 7);
}

TEST_CASE("minuscule weights") {
    CHECK(minuscule_check(*root_system("E6"), root_system("E6")->fundamental(1)));
    CHECK(minuscule_check(*root_system("E7"), root_system("E7")->fundamental(7)));
    for (int n = 2; n <= 6; ++n) {
        auto c = root_system("C" + std::to_string(n));
        CHECK(minuscule_check(*c, c->fundamental(1)));
    }
    for (int n = 4; n <= 6; ++n) {
        auto d = root_system("D" + std::to_string(n));
        CHECK(minuscule_check(*d, d->fundamental(1)));
    }
    CHECK_FALSE(minuscule_check(*root_system("F4"), root_system("F4")->fundamental(4)));
    CHECK_FALSE(minuscule_check(*root_system("G2"), root_system("G2")->fundamental(1)));

    // minuscule => one orbit, multiplicity free
    for (const char* name : {"A4", "B3", "C3", "D5", "E6", "E7", "F4", "G2"}) {
        auto rs = root_system(name);
        for (int i = 1; i <= rs->rank(); ++i) {
            if (!minuscule_check(*rs, rs->fundamental(i))) continue;
            auto chi = irrep_character(rs, rs->fundamental(i));
            CHECK(chi.is_multiplicity_free());
            CHECK(chi.size() == rs->orbit(rs->fundamental(i)).size());
        }
    }
}

TEST_CASE("branching") {
    auto v = fund("E6", 1);
    auto d5 = branch(v, e6_to_d5_rule());
    CHECK(constituent_dims(d5.decomposition) == std::multiset<long long>{1, 10, 16});
    CHECK(d5.restricted.dimension() == 27);

    auto f4 = branch(v, e6_to_f4_rule());
    CHECK(constituent_dims(f4.decomposition) == std::multiset<long long>{1, 26});

    auto e7 = branch(fund("E7", 7), e7_to_e6_rule());
    CHECK(constituent_dims(e7.decomposition) == std::multiset<long long>{1, 1, 27, 27});
    auto e6 = root_system("E6");
    std::vector<Weight> big;
    for (const auto& [hw, m] : e7.decomposition.constituents)
        if (!hw.is_zero()) big.push_back(hw);
    REQUIRE(big.size() == 2);
    CHECK(dual_highest_weight(*e6, big[0]) == big[1]);

    CHECK(named_rules().size() == 3);
    CHECK_THROWS_AS(named_rule("e8-e7x"), InvalidArgument);
}
