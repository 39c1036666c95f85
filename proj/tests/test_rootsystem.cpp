#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "weightgeom/errors.hpp"
#include "weightgeom/rootsystem.hpp"

using namespace wg;

namespace {

const std::vector<std::string> kSmall = {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "F4", "G2"};
const std::vector<std::string> kAll = {"A1", "A2", "A5", "A8", "B2", "B3", "B6", "C2", "C3", "C5", "D4", "D5",
                                       "D8", "E6", "E7", "E8", "F4", "G2"};

long long expected_positive(const RootSystemSpec& s) {
    long long n = s.rank;
    switch (s.family) {
        case Family::A: return n * (n + 1) / 2;
        case Family::B:
        case Family::C: return n * n;
        case Family::D: return n * (n - 1);
        case Family::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
        case Family::F: return 24;
        case Family::G: return 6;
    }
    return -1;
}

}  // namespace

TEST_CASE("cartan matrices against hand tables") {
    // row i = fw coordinates of alpha_i
    CHECK(root_system("B2")->cartan_matrix() == oracle::Cartan{{2, -2}, {-1, 2}});
    CHECK(root_system("C2")->cartan_matrix() == oracle::Cartan{{2, -1}, {-2, 2}});
    CHECK(root_system("G2")->cartan_matrix() == oracle::Cartan{{2, -1}, {-3, 2}});
    CHECK(root_system("F4")->cartan_matrix() ==
          oracle::Cartan{{2, -1, 0, 0}, {-1, 2, -2, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}});
    auto e6 = root_system("E6");
    // branch node 4 joins 2, 3, 5
    CHECK(e6->neighbours(4) == std::vector<int>{2, 3, 5});
    CHECK(e6->neighbours(2) == std::vector<int>{4});
    for (const auto& name : kAll) {
        auto rs = root_system(name);
        for (int i = 1; i <= rs->rank(); ++i)
            for (int j = 1; j <= rs->rank(); ++j) {
                if (i == j) CHECK(rs->cartan(i, j) == 2);
                else {
                    CHECK(rs->cartan(i, j) <= 0);
                    CHECK((rs->cartan(i, j) == 0) == (rs->cartan(j, i) == 0));
                }
            }
    }
}

TEST_CASE("positive roots match the reflection closure") {
    for (const auto& name : kAll) {
        CAPTURE(name);
        auto rs = root_system(name);
        std::set<Weight> lib;
        for (const Root& r : rs->positive_roots()) {
            lib.insert(r.simple);
            CHECK(r.fw == rs->fw_from_simple(r.simple));
            for (int i = 0; i < rs->rank(); ++i) CHECK(r.simple[i] >= 0);
        }
        CHECK(lib == oracle::positive_roots(rs->cartan_matrix()));
        CHECK(static_cast<long long>(lib.size()) == expected_positive(rs->spec()));
    }
    CHECK(root_system("A1")->positive_roots().size() == 1);
    CHECK(root_system("E6")->positive_roots().size() == 36);
}

TEST_CASE("highest root dominates coefficientwise") {
    for (const auto& name : kAll) {
        auto rs = root_system(name);
        const Weight& h = rs->highest_root().simple;
        for (const Root& r : rs->positive_roots())
            for (int i = 0; i < rs->rank(); ++i) CHECK(r.simple[i] <= h[i]);
    }
    CHECK(root_system("E6")->highest_root().simple == Weight{1, 2, 2, 3, 2, 1});
    CHECK(root_system("E8")->highest_root().simple == Weight{2, 3, 4, 6, 5, 4, 3, 2});
}

TEST_CASE("simple reflections") {
    auto e6 = root_system("E6");
    CHECK(e6->reflect(e6->fundamental(1), 1) == Weight{-1, 0, 1, 0, 0, 0});
    for (const auto& name : kAll) {
        auto rs = root_system(name);
        Weight w(rs->rank());
        for (int i = 0; i < rs->rank(); ++i) w[i] = (i * 7 + 3) % 5 - 2;
        for (int i = 1; i <= rs->rank(); ++i) {
            CHECK(rs->reflect(rs->reflect(w, i), i) == w);
            CHECK(rs->reflect(w, i) == oracle::reflect(rs->cartan_matrix(), w, i));
            for (int j = 1; j <= rs->rank(); ++j)
                if (i != j) CHECK(rs->reflect(rs->fundamental(j), i) == rs->fundamental(j));
        }
    }
}

TEST_CASE("orbits") {
    auto e6 = root_system("E6");
    CHECK(e6->orbit(e6->fundamental(1)).size() == 27);
    CHECK(e6->orbit(e6->zero()) == std::vector<Weight>{e6->zero()});
    CHECK(root_system("D4")->orbit(Weight{1, 0, 0, 0}).size() == 8);
    CHECK(root_system("E7")->orbit(root_system("E7")->fundamental(7)).size() == 56);

    auto rs = root_system("F4");
    for (int i = 1; i <= 4; ++i) {
        auto lib = rs->orbit(rs->fundamental(i));
        CHECK(std::is_sorted(lib.begin(), lib.end()));
        auto ref = oracle::orbit(rs->cartan_matrix(), rs->fundamental(i));
        CHECK(std::set<Weight>(lib.begin(), lib.end()) == ref);
    }
}

TEST_CASE("orbit sizes divide the Weyl group order") {
    const std::map<std::string, long long> order = {{"A1", 2},    {"A2", 6},   {"A3", 24}, {"A4", 120},
                                                    {"B2", 8},    {"B3", 48},  {"B4", 384}, {"C3", 48},
                                                    {"C4", 384},  {"D4", 192}, {"F4", 1152}, {"G2", 12}};
    for (const auto& name : kSmall) {
        CAPTURE(name);
        auto rs = root_system(name);
        long long w = oracle::weyl_order(rs->cartan_matrix());
        CHECK(w == order.at(name));
        for (int mask = 1; mask < (1 << rs->rank()); ++mask) {
            Weight hw(rs->rank());
            for (int i = 0; i < rs->rank(); ++i) hw[i] = (mask >> i) & 1;
            CHECK(w % static_cast<long long>(rs->orbit(hw).size()) == 0);
        }
    }
}

TEST_CASE("w0 and the duality permutation") {
    auto e6 = root_system("E6");
    CHECK(-e6->antidominant(e6->fundamental(1)) == e6->fundamental(6));
    CHECK(e6->minus_w0_permutation() == std::vector<int>{6, 2, 5, 4, 3, 1});
    auto d4 = root_system("D4");
    CHECK(d4->antidominant(d4->fundamental(1)) == -d4->fundamental(1));

    // oracle: the all-nonpositive element of the orbit
    for (const auto& name : kSmall) {
        auto rs = root_system(name);
        for (int i = 1; i <= rs->rank(); ++i) {
            Weight low;
            for (const Weight& w : oracle::orbit(rs->cartan_matrix(), rs->fundamental(i)))
                if (w.is_antidominant()) low = w;
            CHECK(rs->antidominant(rs->fundamental(i)) == low);
        }
    }
    auto a2 = root_system("A2");
    CHECK(-a2->antidominant(a2->fundamental(1)) == a2->fundamental(2));
}

TEST_CASE("to_dominant records a word that undoes it") {
    auto rs = root_system("E7");
    Weight w{1, -2, 0, 1, 0, -1, 1};
    std::vector<int> word;
    Weight d = rs->to_dominant(w, &word);
    CHECK(d.is_dominant());
    CHECK(WeylElement(word).act(*rs, d) == w);
    WeylElement g({1, 3, 4, 2, 7});
    CHECK(g.inverse().act(*rs, g.act(*rs, w)) == w);
    CHECK((g * g.inverse()).equals(*rs, WeylElement{}));
}

TEST_CASE("delta components and heights") {
    auto e6 = root_system("E6");
    CHECK(e6->delta_component(6, 1) == std::vector<int>{1, 2, 3, 4, 5});
    CHECK(e6->delta_component(1, 1).empty());
    for (int n = 1; n <= 8; ++n) {
        auto an = root_system("A" + std::to_string(n));
        for (int i = 1; i <= n; ++i) {
            std::vector<int> want;
            for (int j = 1; j < i; ++j) want.push_back(j);
            CHECK(an->delta_component(i, 1) == want);
        }
    }
    for (const Root& r : e6->positive_roots()) CHECK(e6->delta_height(r, 1, 1) == r.height());
    for (const Root& r : e6->positive_roots())
        if (r.height() == 1) {
            int j = 0;
            while (r.simple[j] == 0) ++j;
            if (j + 1 != 6) CHECK(e6->delta_height(r, 6, 1) == 0);
        }
    CHECK(e6->delta_height(e6->highest_root(), 6, 1) == 1);
}

TEST_CASE("scaled height strictly increases along roots") {
    for (const auto& name : kAll) {
        auto rs = root_system(name);
        Weight mu = rs->rho();
        for (const Root& r : rs->positive_roots()) {
            CHECK(rs->scaled_height(mu + r.fw) > rs->scaled_height(mu));
            CHECK(rs->simple_coords(r.fw) == r.simple);
            CHECK(oracle::simple_coords(rs->cartan_matrix(), r.fw) == r.simple);
        }
    }
}

TEST_CASE("bad specs are rejected") {
    for (const char* bad : {"E9", "E5", "G3", "F5", "A0", "X2", "", "D"})
        CHECK_THROWS_AS(RootSystemSpec::parse(bad), InvalidArgument);
    CHECK(RootSystemSpec::parse("e6").name() == "E6");
    CHECK_THROWS_AS(root_system("A2")->fundamental(3), InvalidArgument);
}
