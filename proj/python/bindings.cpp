#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "weightgeom/branching.hpp"
#include "weightgeom/character.hpp"
#include "weightgeom/cli.hpp"
#include "weightgeom/duality.hpp"
#include "weightgeom/errors.hpp"
#include "weightgeom/geometry.hpp"
#include "weightgeom/triality.hpp"
#include "weightgeom/verify.hpp"

namespace py = pybind11;
using namespace wg;

namespace {

using Coords = std::vector<int>;

Weight to_weight(const Coords& c) { return Weight(std::span<const int>(c)); }

py::tuple to_tuple(const Weight& w) {
    py::tuple t(w.rank());
    for (int i = 0; i < w.rank(); ++i) t[i] = w[i];
    return t;
}

py::int_ to_int(const BigInt& b) { return py::int_(py::str(b.str())); }

// weight tuple -> multiplicity
py::dict terms_dict(const std::map<Weight, BigInt>& terms) {
    py::dict d;
    for (const auto& [w, m] : terms) d[to_tuple(w)] = to_int(m);
    return d;
}

py::list support_list(const Support& s) {
    py::list out;
    for (const Weight& w : s) out.append(to_tuple(w));
    return out;
}

// beta = 0 picks the standard representation
GeometrySpec geometry(const std::string& sys, int beta) {
    auto rs = root_system(sys);
    return GeometrySpec(rs, beta ? beta : standard_beta(rs->spec()));
}

FormalCharacter irrep(const std::string& sys, const Coords& hw) { return irrep_character(root_system(sys), to_weight(hw)); }

}  // namespace

PYBIND11_MODULE(_weightgeom, m) {
    m.doc() = "Weight combinatorics of minuscule incidence geometries";

    py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
    py::register_exception<ComputationRefused>(m, "ComputationRefused", PyExc_RuntimeError);
    py::register_exception<ConsistencyError>(m, "ConsistencyError", PyExc_RuntimeError);
    py::register_exception<NotACharacter>(m, "NotACharacter", PyExc_ValueError);

    m.def("cartan_matrix", [](const std::string& sys) { return root_system(sys)->cartan_matrix(); });
    m.def("positive_roots", [](const std::string& sys) {
        py::list out;
        for (const Root& r : root_system(sys)->positive_roots()) out.append(to_tuple(r.simple));
        return out;
    }, "Positive roots as coefficient tuples over the simple roots.");
    m.def("weyl_orbit", [](const std::string& sys, const Coords& w) {
        py::list out;
        for (const Weight& x : root_system(sys)->orbit(to_weight(w))) out.append(to_tuple(x));
        return out;
    });

    m.def("character", [](const std::string& sys, const Coords& hw) { return terms_dict(irrep(sys, hw).terms()); },
          py::arg("system"), py::arg("highest_weight"));
    m.def("weyl_dimension", [](const std::string& sys, const Coords& hw) {
        return to_int(weyl_dimension(*root_system(sys), to_weight(hw)));
    });
    m.def("dual", [](const std::string& sys, const Coords& hw) {
        return to_tuple(dual_highest_weight(*root_system(sys), to_weight(hw)));
    });
    m.def("decompose_tensor", [](const std::string& sys, const Coords& a, const Coords& b) {
        return terms_dict(decompose(tensor_product(irrep(sys, a), irrep(sys, b))).constituents);
    }, "Constituents of V(a) x V(b), highest weight -> multiplicity.");
    m.def("invariant_count", [](const std::string& sys, const Coords& hw, int degree, bool exterior, int max_degree) {
        PlethysmOptions opts;
        opts.max_degree = max_degree;
        auto chi = irrep(sys, hw);
        auto p = exterior ? exterior_power(chi, degree, opts) : symmetric_power(chi, degree, opts);
        return to_int(trivial_multiplicity(p));
    }, py::arg("system"), py::arg("highest_weight"), py::arg("degree"), py::arg("exterior") = false,
       py::arg("max_degree") = 5);
    m.def("bilinear_type", [](const std::string& sys, const Coords& hw) {
        return std::string(to_string(invariant_bilinear_type(root_system(sys), to_weight(hw))));
    });
    m.def("branch", [](const std::string& rule, const Coords& hw) {
        auto r = named_rule(rule);
        auto res = branch(irrep_character(root_system(r.source), to_weight(hw)), r);
        return terms_dict(res.decomposition.constituents);
    }, "Restrict V(hw) along a named rule (e6-d5, e6-f4, e7-e6).");

    m.def("dimension_diagram", [](const std::string& sys, int beta) {
        return dimension_diagram(geometry(sys, beta));
    }, py::arg("system"), py::arg("beta") = 0);
    m.def("delta_space", [](const std::string& sys, int delta, int beta) {
        auto v = delta_space(geometry(sys, beta), delta);
        py::dict d;
        d["delta"] = v.delta;
        d["dimension"] = v.dimension;
        d["lowest_weight"] = to_tuple(v.lowest_weight);
        d["levi_type"] = v.levi_type;
        d["support"] = support_list(v.support);
        return d;
    }, py::arg("system"), py::arg("delta"), py::arg("beta") = 0);
    m.def("hasse_edges", [](const std::string& sys, const Coords& hw) {
        auto h = hasse_diagram(irrep(sys, hw));
        py::list out;
        for (const auto& e : h.edges) out.append(py::make_tuple(to_tuple(e.upper), to_tuple(e.lower), e.label));
        return out;
    });

    m.def("triality_table", []() {
        auto t = d4_triality().table();
        py::list rows;
        for (const auto& row : t.cells) {
            py::list r;
            for (const auto& c : row) r.append(c ? py::object(py::str(*c)) : py::object(py::none()));
            rows.append(r);
        }
        return py::make_tuple(t.labels, rows);
    }, "(labels, 8x8 cells); None marks a zero product.");
    m.def("e6_psi_types", []() {
        std::map<int, int> out;
        for (int d = 1; d <= 6; ++d) out[d] = e6_duality().psi_standard(d).psi_delta;
        return out;
    });
    m.def("e6_brace_dimensions", []() {
        using C = E6Duality::OrbitClass;
        std::map<std::string, long long> out;
        for (C c : {C::Hyperline, C::Lambda2, C::MinusOmega6})
            out[to_string(c)] = e6_duality().dim_brace_vplus(c).dimension;
        return out;
    });

    m.def("verify", [](const std::string& selector) {
        std::vector<std::tuple<std::string, std::string, bool>> out;
        py::gil_scoped_release release;
        for (const auto& r : run_checks(selector)) out.emplace_back(r.id, r.name, r.pass);
        return out;
    }, py::arg("selector") = "all");
    m.def("run", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = wg::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    }, "Run the command-line tool in-process: (exit_code, stdout, stderr).");
}
