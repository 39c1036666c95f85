// Independent brute-force oracles for the tests. They only read the Cartan
// matrix (checked separately against hand-written tables) and otherwise redo
// everything the slow way.
#ifndef WEIGHTGEOM_TESTS_ORACLES_HPP
#define WEIGHTGEOM_TESTS_ORACLES_HPP

#include <cmath>
#include <cstdlib>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "weightgeom/weight.hpp"

namespace oracle {

using Cartan = std::vector<std::vector<int>>;
using wg::Weight;

// s_i on fw coordinates: subtract w_i times row i.
inline Weight reflect(const Cartan& c, const Weight& w, int i) {
    Weight r = w;
    int k = w[i - 1];
    for (std::size_t j = 0; j < c.size(); ++j) r[static_cast<int>(j)] -= k * c[i - 1][j];
    return r;
}

inline std::set<Weight> orbit(const Cartan& c, const Weight& w) {
    std::set<Weight> seen{w};
    std::deque<Weight> todo{w};
    while (!todo.empty()) {
        Weight x = todo.front();
        todo.pop_front();
        for (int i = 1; i <= static_cast<int>(c.size()); ++i) {
            Weight y = reflect(c, x, i);
            if (seen.insert(y).second) todo.push_back(y);
        }
    }
    return seen;
}

// rho is regular, so its orbit is a copy of W.
inline long long weyl_order(const Cartan& c) {
    Weight rho(static_cast<int>(c.size()));
    for (int i = 0; i < rho.rank(); ++i) rho[i] = 1;
    return static_cast<long long>(orbit(c, rho).size());
}

// All roots, in simple coordinates, by closing the simple roots under the
// simple reflections.
inline std::set<Weight> roots_by_closure(const Cartan& c) {
    int n = static_cast<int>(c.size());
    std::set<Weight> seen;
    std::deque<Weight> todo;
    for (int i = 0; i < n; ++i) {
        Weight a(n);
        a[i] = 1;
        seen.insert(a);
        todo.push_back(a);
    }
    while (!todo.empty()) {
        Weight b = todo.front();
        todo.pop_front();
        for (int i = 0; i < n; ++i) {
            int pair = 0;  // <b, alpha_i^vee>
            for (int j = 0; j < n; ++j) pair += b[j] * c[j][i];
            Weight r = b;
            r[i] -= pair;
            if (seen.insert(r).second) todo.push_back(r);
        }
    }
    return seen;
}

inline std::set<Weight> positive_roots(const Cartan& c) {
    std::set<Weight> out;
    for (const Weight& r : roots_by_closure(c))
        if (r.sum() > 0) out.insert(r);
    return out;
}

// Simple coordinates x with x * C = fw, by floating elimination and an exact
// check of the rounded answer. nullopt off the root lattice.
inline std::optional<Weight> simple_coords(const Cartan& c, const Weight& fw) {
    int n = static_cast<int>(c.size());
    std::vector<std::vector<double>> m(n, std::vector<double>(n + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m[i][j] = c[j][i];  // transpose
        m[i][n] = fw[i];
    }
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
        std::swap(m[col], m[piv]);
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            double f = m[r][col] / m[col][col];
            for (int k = col; k <= n; ++k) m[r][k] -= f * m[col][k];
        }
    }
    Weight x(n);
    for (int i = 0; i < n; ++i) {
        double v = m[i][n] / m[i][i];
        if (std::abs(v - std::round(v)) > 1e-6) return std::nullopt;
        x[i] = static_cast<int>(std::lround(v));
    }
    for (int j = 0; j < n; ++j) {
        int s = 0;
        for (int i = 0; i < n; ++i) s += x[i] * c[i][j];
        if (s != fw[j]) return std::nullopt;
    }
    return x;
}

// nu <= mu in the dominance order.
inline bool dominated(const Cartan& c, const Weight& nu, const Weight& mu) {
    auto d = simple_coords(c, mu - nu);
    if (!d) return false;
    for (int i = 0; i < d->rank(); ++i)
        if ((*d)[i] < 0) return false;
    return true;
}

// Orbit of a set of weights under the simple reflections.
inline std::set<std::set<Weight>> support_orbit(const Cartan& c, const std::set<Weight>& s) {
    std::set<std::set<Weight>> seen{s};
    std::deque<std::set<Weight>> todo{s};
    while (!todo.empty()) {
        auto x = todo.front();
        todo.pop_front();
        for (int i = 1; i <= static_cast<int>(c.size()); ++i) {
            std::set<Weight> y;
            for (const Weight& w : x) y.insert(reflect(c, w, i));
            if (seen.insert(y).second) todo.push_back(y);
        }
    }
    return seen;
}

// Multiset of weights, each repeated by multiplicity.
template <class Char>
std::vector<Weight> listing(const Char& chi) {
    std::vector<Weight> out;
    for (const auto& [w, m] : chi.terms())
        for (long long k = 0; k < static_cast<long long>(m); ++k) out.push_back(w);
    return out;
}

}  // namespace oracle

#endif
