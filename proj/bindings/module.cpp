#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

#include "suzuki/eo.hpp"
#include "suzuki/gf2n.hpp"
#include "suzuki/matrix_cache.hpp"
#include "suzuki/params.hpp"
#include "suzuki/structured.hpp"

namespace py = pybind11;
using namespace suzuki;

namespace {

CartierPath parse_path(const std::string& path) {
    if (path == "structured") return CartierPath::structured;
    if (path == "oracle") return CartierPath::oracle;
    throw std::invalid_argument("path must be 'structured' or 'oracle'");
}

} // namespace

PYBIND11_MODULE(_core, mod) {
    mod.doc() = "Cartier-operator computations on the Suzuki curves S_m over GF(2^{2m+1})";

    py::class_<SuzukiParams>(mod, "SuzukiParams")
        .def_readonly("m", &SuzukiParams::m)
        .def_readonly("q0", &SuzukiParams::q0)
        .def_readonly("q", &SuzukiParams::q)
        .def_readonly("g", &SuzukiParams::g)
        .def_readonly("vy", &SuzukiParams::vy)
        .def_readonly("vz", &SuzukiParams::vz)
        .def_readonly("vh1", &SuzukiParams::vh1)
        .def_readonly("vh2", &SuzukiParams::vh2)
        .def_readonly("sg_generators", &SuzukiParams::sg_generators)
        .def("__repr__", [](const SuzukiParams& p) {
            std::ostringstream os;
            os << "SuzukiParams(m=" << p.m << ", q0=" << p.q0 << ", q=" << p.q << ", g=" << p.g
               << ")";
            return os.str();
        });

    py::class_<BitMatrix>(mod, "BitMatrix")
        .def_property_readonly("rows", &BitMatrix::rows)
        .def_property_readonly("cols", &BitMatrix::cols)
        .def("get", &BitMatrix::get, py::arg("row"), py::arg("col"))
        .def("__eq__", [](const BitMatrix& a, const BitMatrix& b) { return a == b; })
        .def("__repr__", [](const BitMatrix& m) {
            std::ostringstream os;
            os << "BitMatrix(" << m.rows() << "x" << m.cols() << ")";
            return os.str();
        });

    mod.def("make_params", &make_params, py::arg("m"));
    mod.def("a_number", &a_number_formula, py::arg("m"),
            "Closed formula q0(q0+1)(2q0+1)/6 for the a-number of S_m.");
    mod.def("nu_g", &nu_g_formula, py::arg("m"));
    mod.def("lattice_count", &lattice_count, py::arg("m"));
    mod.def("semigroup_count", &semigroup_count, py::arg("m"));
    mod.def("point_count", &point_count_zeta, py::arg("m"), py::arg("k"),
            "#S_m(F_{q^k}) from the zeta-function recurrence.");
    mod.def("point_count_naive", &point_count_naive, py::arg("m"), py::arg("k"),
            "Brute-force point count over GF(q^k), k in {1,2,4}, q^k <= 2^24.");
    mod.def("is_maximal_over", &is_maximal_over, py::arg("m"), py::arg("k"));

    mod.def(
        "basis_monomials",
        [](int m) {
            const SuzukiParams p = make_params(m);
            const Basis basis = enumerate_basis(p);
            std::vector<std::tuple<int64_t, int64_t, int64_t, int64_t, int64_t>> out;
            out.reserve(basis.size());
            for (size_t i = 0; i < basis.size(); ++i) {
                const auto& mon = basis.elements[i];
                out.emplace_back(mon.a, mon.b, mon.c, mon.d, basis.poles[i]);
            }
            return out;
        },
        py::arg("m"),
        "Basis of the regular 1-forms as (a, b, c, d, pole_order) tuples, "
        "ascending by pole order.");

    mod.def(
        "cartier_matrix",
        [](int m, const std::string& path, int jobs) {
            const SuzukiParams p = make_params(m);
            const Basis basis = enumerate_basis(p);
            return build_cartier_matrix(p, basis, parse_path(path), jobs);
        },
        py::arg("m"), py::arg("path") = "structured", py::arg("jobs") = 1,
        "g x g GF(2) Cartier matrix; column j holds the basis coordinates of "
        "C(basis[j] dy).");

    mod.def("rank", [](const BitMatrix& m) { return rank(m); }, py::arg("matrix"));
    mod.def("a_number_from_matrix", &a_number_from_matrix, py::arg("matrix"));
    mod.def("rank_profile",
            [](const BitMatrix& m) { return RankProfile::from_matrix(m).ranks; },
            py::arg("matrix"), "Ranks of M, M^2, ... down to 0.");
    mod.def(
        "derive_constraints",
        [](int64_t g, const std::vector<int64_t>& ranks) {
            return derive_constraints(RankProfile::from_ranks(g, ranks)).fixed;
        },
        py::arg("g"), py::arg("ranks"),
        "Fixed Ekedahl-Oort final-type values {i: nu_i} forced by a rank profile.");
    mod.def(
        "final_types",
        [](int64_t g, const std::vector<int64_t>& ranks, uint64_t cap) {
            return enumerate_compatible_final_types(
                derive_constraints(RankProfile::from_ranks(g, ranks)), cap);
        },
        py::arg("g"), py::arg("ranks"), py::arg("cap") = uint64_t{1'000'000});
    mod.def("decomposition_bound", &decomposition_bound, py::arg("a_number"));
    mod.def("superspecial", &superspecial_check, py::arg("m"));

    mod.def(
        "save_matrix",
        [](const std::filesystem::path& path, int m, const BitMatrix& matrix) {
            save_matrix_cache(path, m, matrix);
        },
        py::arg("path"), py::arg("m"), py::arg("matrix"),
        "Write a matrix in the SZCM cache format.");
    mod.def(
        "load_matrix",
        [](const std::filesystem::path& path) {
            CachedMatrix cached = load_matrix_cache(path);
            return py::make_tuple(cached.m, std::move(cached.matrix));
        },
        py::arg("path"));
}
