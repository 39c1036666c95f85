#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "weightgeom/character.hpp"
#include "weightgeom/duality.hpp"
#include "weightgeom/geometry.hpp"

using namespace wg;

namespace {

Support reflect_all(const RootSystem& rs, const Support& s, int i) {
    Support out;
    for (const Weight& w : s) out.insert(rs.reflect(w, i));
    return out;
}

std::vector<std::size_t> sizes(const std::vector<Support>& orbits) {
    std::vector<std::size_t> out;
    for (const auto& o : orbits) out.push_back(o.size());
    return out;
}

}  // namespace

TEST_CASE("diagram automorphisms") {
    CHECK(diagram_automorphisms(*root_system("D4")).size() == 6);
    auto e6 = diagram_automorphisms(*root_system("E6"));
    CHECK(e6.size() == 2);
    CHECK(std::count(e6.begin(), e6.end(), e6_phi()) == 1);
    CHECK(e6_phi().cycles() == "(1 6)(3 5)");
    CHECK(diagram_automorphisms(*root_system("E7")).size() == 1);
    CHECK(diagram_automorphisms(*root_system("E8")).size() == 1);
    CHECK(diagram_automorphisms(*root_system("A3")).size() == 2);
    CHECK(diagram_automorphisms(*root_system("F4")).size() == 1);

    auto phi = d4_phi();
    CHECK(phi.order() == 3);
    CHECK(phi(1) == 3);
    CHECK(phi(3) == 4);
    CHECK(phi(4) == 1);
    CHECK(phi.then(phi).then(phi).is_identity());
    CHECK(phi.then(phi.inverse()).is_identity());
    CHECK(phi.preserves(*root_system("D4")));
    for (int n = 4; n <= 7; ++n) CHECK(dn_swap(n).preserves(*root_system("D" + std::to_string(n))));

    // phi on weights commutes with reflections up to relabelling
    auto rs = root_system("E6");
    Weight w{1, -1, 2, 0, -3, 1};
    for (int i = 1; i <= 6; ++i) CHECK(e6_phi().apply(rs->reflect(w, i)) == rs->reflect(e6_phi().apply(w), e6_phi()(i)));
}

TEST_CASE("D_n basis labels") {
    for (int n = 4; n <= 6; ++n) {
        auto labels = dn_basis_labels(n);
        CHECK(labels.size() == static_cast<std::size_t>(2 * n));
        auto rs = root_system("D" + std::to_string(n));
        auto chi = irrep_character(rs, rs->fundamental(1));
        Support seen;
        for (const auto& l : labels) {
            Weight w = dn_basis_weight(n, l);
            CHECK(chi.multiplicity(w) == 1);
            CHECK(dn_basis_label(n, w) == l);
            seen.insert(w);
        }
        CHECK(seen.size() == labels.size());
        CHECK(dn_basis_weight(n, "f1") == -dn_basis_weight(n, "e1"));
    }
}

TEST_CASE("sharp") {
    const auto& e = e6_duality();
    const auto& rs = e.rs();
    Weight w1 = rs.fundamental(1);
    CHECK(e.sharp({w1}, {w1}).empty());
    CHECK(e.sharp({w1}, e.weights()) == e.standard(6));
    CHECK(e.sharp({e.lambda(2)}, {e.lambda(5)}) == Support{e.lambda(3)});

    // symmetric, and twisted-equivariant under simple reflections
    std::vector<Support> samples;
    for (int d = 1; d <= 6; ++d) samples.push_back(e.standard(d));
    samples.push_back({Weight{0, 0, -1, 1, 0, 0}});
    for (const auto& a : samples)
        for (const auto& b : samples) {
            CHECK(e.sharp(a, b) == e.sharp(b, a));
            for (int i = 1; i <= 6; ++i)
                CHECK(e.sharp(reflect_all(rs, a, i), reflect_all(rs, b, i)) ==
                      reflect_all(rs, e.sharp(a, b), e.phi()(i)));
        }
}

TEST_CASE("hyperlines") {
    const auto& e = e6_duality();
    const auto& rs = e.rs();
    const auto& c = rs.cartan_matrix();
    CHECK(e.hyperline(rs.fundamental(1)) == e.standard(6));

    // the weights >= lambda6
    Support up;
    for (const Weight& nu : e.weights())
        if (oracle::dominated(c, e.lambda(6), nu)) up.insert(nu);
    CHECK(e.hyperline(rs.fundamental(1)) == up);

    auto a2 = apartment_objects(e.geometry(), 2);
    auto six = apartment_objects(e.geometry(), 6);
    for (const Weight& mu : e.weights()) {
        Support h = e.hyperline(mu);
        CHECK(h.size() == 10);
        // a Weyl translate of the standard one
        CHECK(std::any_of(six.begin(), six.end(), [&](const ApartmentObject& o) { return o.support == h; }));
        bool holds_a2 = std::any_of(a2.begin(), a2.end(), [&](const ApartmentObject& o) {
            return std::includes(h.begin(), h.end(), o.support.begin(), o.support.end());
        });
        CHECK_FALSE(holds_a2);
    }
    // g(omega1) = -omega6 moves the hyperline by phi(g), which acts like w0 here
    Weight m6 = -rs.fundamental(6);
    std::vector<int> word;
    rs.to_dominant(m6, &word);
    WeylElement g(word);
    REQUIRE(g.act(rs, rs.fundamental(1)) == m6);
    Support img, w0img;
    for (const Weight& w : e.hyperline(rs.fundamental(1))) {
        img.insert(e.phi().apply(g).act(rs, w));
        w0img.insert(-e.phi().apply(w));  // w0 = -phi on E6 weights
    }
    CHECK(e.hyperline(m6) == img);
    CHECK(e.hyperline(m6) == w0img);
}

TEST_CASE("brace weights and the b-pairing") {
    const auto& e = e6_duality();
    const auto& rs = e.rs();
    for (const Weight& mu : e.weights()) CHECK(e.brace_weight(rs.fundamental(1), -rs.fundamental(6), mu) == mu);
    for (const Weight& a : e.weights())
        for (const Weight& b : e.weights()) CHECK(e.b_nonzero(a, b) == (a + e.phi().apply(b)).is_zero());
}

TEST_CASE("psi on the standard chamber") {
    const auto& e = e6_duality();
    for (int d = 1; d <= 6; ++d) {
        auto r = e.psi_standard(d);
        CHECK(r.psi_delta == e.phi()(d));
        CHECK(r.support == e.standard(e.phi()(d)));
        // applied again it comes back
        CHECK(e.psi(r.psi_delta, r.support) == e.standard(d));
    }
    CHECK(e.psi_standard(1).support == e.hyperline(e.rs().fundamental(1)));
    CHECK(e.psi_standard(3).psi_delta == 5);
    CHECK(e.psi_standard(6).psi_delta == 1);
}

TEST_CASE("non-standard objects") {
    const auto& e = e6_duality();
    auto x = e.psi_extra();
    CHECK(x.x.size() == 4);
    CHECK(x.x.count(Weight{0, 1, 0, -1, 1, 0}));
    CHECK(x.psi_x == e.standard(3));
    CHECK(x.psi_x_type == 3);
    CHECK(x.psi_psi_x == e.standard(5));
    CHECK(x.psi_psi_x_type == 5);
    CHECK(std::includes(x.psi_psi_x.begin(), x.psi_psi_x.end(), x.x.begin(), x.x.end()));
    CHECK(x.psi_psi_x.size() > x.x.size());
    CHECK(x.y.size() == 5);
    CHECK(x.y.count(Weight{0, 1, 0, 0, -1, 1}));
    CHECK(x.psi_y == e.standard(1));
    CHECK(x.psi_y_type == 1);
    CHECK(x.psi_psi_y_type == 6);
}

TEST_CASE("brace dimensions on the three orbits") {
    const auto& e = e6_duality();
    using C = E6Duality::OrbitClass;
    CHECK(e.dim_brace_vplus(C::Hyperline).dimension == 0);
    auto l2 = e.dim_brace_vplus(C::Lambda2);
    CHECK(l2.dimension == 6);
    CHECK(l2.support == e.standard(2));
    auto m6 = e.dim_brace_vplus(C::MinusOmega6);
    CHECK(m6.dimension == 17);
    Support want;
    for (const Weight& mu : e.weights())
        if (!e.is_weight(e.phi().apply(e.rs().fundamental(1) + mu))) want.insert(mu);
    CHECK(m6.support == want);

    std::map<C, int> count;
    for (const Weight& y : e.weights()) ++count[e.classify(y)];
    CHECK(count[C::Hyperline] == 10);
    CHECK(count[C::Lambda2] == 16);
    CHECK(count[C::MinusOmega6] == 1);
    CHECK(e.classify(e.lambda(2)) == C::Lambda2);
    CHECK(e.classify(-e.rs().fundamental(6)) == C::MinusOmega6);
    // every y of the lambda2 orbit gives a 6-dimensional alpha2-type answer
    auto a2 = apartment_objects(e.geometry(), 2);
    for (const Weight& y : e.weights()) {
        if (e.classify(y) != C::Lambda2) continue;
        auto r = e.brace_vplus(y);
        CHECK(r.dimension == 6);
        CHECK(std::any_of(a2.begin(), a2.end(), [&](const ApartmentObject& o) { return o.support == r.support; }));
    }
}

TEST_CASE("LN holds for every type") {
    const auto& e = e6_duality();
    for (int d = 1; d <= 6; ++d) {
        auto r = e.verify_ln(d);
        CHECK(r.pairing_ok);
        CHECK(r.brace_ok);
        CHECK(r.pairs_checked > 0);
    }
    // control: the full weight set in place of psi breaks the pairing
    auto bad = e.verify_ln_with(1, e.weights());
    CHECK_FALSE(bad.pairing_ok);
}

TEST_CASE("parabolic orbits") {
    auto e6 = root_system("E6");
    auto v = irrep_character(e6, e6->fundamental(1));
    CHECK(sizes(wprime_orbits(*e6, {6}, v)) == std::vector<std::size_t>{16, 10, 1});
    CHECK(wprime_orbits(*e6, {}, v).size() == 1);
    auto d4 = root_system("D4");
    auto rho1 = irrep_character(d4, d4->fundamental(3));
    CHECK(wprime_orbits(*d4, {4}, rho1).size() == 2);
}

TEST_CASE("zero-sum triples") {
    auto e6 = root_system("E6");
    auto v = irrep_character(e6, e6->fundamental(1));
    auto ws = v.weights();
    long long ordered = 0;
    for (const Weight& a : ws)
        for (const Weight& b : ws)
            for (const Weight& c : ws) ordered += (a + b + c).is_zero();
    auto rep = zero_sum_triple_orbits({v});
    CHECK(rep.ordered_triples == ordered);
    CHECK(ordered == 270);
    CHECK(rep.unordered_triples == 45);
    CHECK(rep.orbits == 1);

    auto d4 = root_system("D4");
    auto r0 = irrep_character(d4, d4->fundamental(1));
    auto r1 = irrep_character(d4, d4->fundamental(3));
    auto r2 = irrep_character(d4, d4->fundamental(4));
    long long d4count = 0;
    for (const Weight& a : r0.weights())
        for (const Weight& b : r1.weights())
            for (const Weight& c : r2.weights()) d4count += (a + b + c).is_zero();
    auto rd = zero_sum_triple_orbits({r0, r1, r2});
    CHECK(rd.ordered_triples == d4count);
    CHECK(rd.orbits == 1);
}

TEST_CASE("chamber automorphisms") {
    const auto& e = e6_duality();
    auto ce = chamber_automorphism_check(e.geometry(), e.phi(),
                                         [&](int d, const Support& s) { return e.psi(d, s); });
    CHECK(ce.ok());
    CHECK(ce.type_map == std::map<int, int>{{1, 6}, {2, 2}, {3, 5}, {4, 4}, {5, 3}, {6, 1}});

    for (int n = 4; n <= 6; ++n) {
        GeometrySpec g(root_system("D" + std::to_string(n)), 1);
        auto swap = dn_swap(n);
        Weight en = dn_basis_weight(n, "e" + std::to_string(n));
        Weight fn = dn_basis_weight(n, "f" + std::to_string(n));
        auto relabel = [&](int, const Support& s) {
            Support out;
            for (const Weight& w : s) out.insert(w == en ? fn : w == fn ? en : w);
            return out;
        };
        auto r = chamber_automorphism_check(g, swap, relabel);
        CHECK(r.ok());
    }

    // the identity map is not twisted by phi
    auto wrong = chamber_automorphism_check(e.geometry(), e.phi(), [](int, const Support& s) { return s; });
    CHECK_FALSE(wrong.ok());
}

TEST_CASE("E7 weight-level checks") {
    CHECK(e7_rank_one_check());
    for (int d = 1; d <= 7; ++d) CHECK(e7_inner_ideal_check(d));
}
