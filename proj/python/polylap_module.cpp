#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "polylap/bounds.hpp"
#include "polylap/eigen.hpp"
#include "polylap/experiments.hpp"
#include "polylap/fourier.hpp"
#include "polylap/operator.hpp"
#include "polylap/report.hpp"

namespace py = pybind11;
using namespace polylap;

namespace {

// std::variant would be consumed by the stl.h value caster; a named holder
// keeps Domain an opaque handle on the python side.
struct PyDomain {
    DomainSpec spec;
};

py::array_t<double> matrix_to_array(const Matrix& m) {
    py::array_t<double> out({m.n(), m.n()});
    auto buf = out.mutable_unchecked<2>();
    for (int i = 0; i < m.n(); ++i)
        for (int j = 0; j < m.n(); ++j) buf(i, j) = m.at(i, j);
    return out;
}

Matrix array_to_matrix(const py::array_t<double, py::array::c_style | py::array::forcecast>& a) {
    if (a.ndim() != 2 || a.shape(0) != a.shape(1))
        throw std::invalid_argument("expected a square 2-d array");
    const int n = static_cast<int>(a.shape(0));
    Matrix m(n);
    auto buf = a.unchecked<2>();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = buf(i, j);
    return m;
}

py::array_t<double> values_to_array(const std::vector<double>& v) {
    py::array_t<double> out(static_cast<py::ssize_t>(v.size()));
    auto buf = out.mutable_unchecked<1>();
    for (std::size_t i = 0; i < v.size(); ++i) buf(static_cast<py::ssize_t>(i)) = v[i];
    return out;
}

ExhaustionShape parse_shape(const std::string& s) {
    if (s == "box") return ExhaustionShape::Box;
    if (s == "ball") return ExhaustionShape::Ball;
    throw std::invalid_argument("shape must be 'box' or 'ball'");
}

}  // namespace

PYBIND11_MODULE(_polylap, m) {
    m.doc() = "Dirichlet poly-Laplace operators, spectra and eigenvalue bounds on lattice subgraphs";

    py::class_<PyDomain>(m, "Domain")
        .def_property_readonly("size",
                               [](const PyDomain& h) { return domain_size(domain_ref(h.spec)); })
        .def_property_readonly("dim",
                               [](const PyDomain& h) { return lattice_dim(domain_ref(h.spec)); })
        .def_property_readonly("is_lattice", [](const PyDomain& h) {
            return std::holds_alternative<LatticeDomain>(h.spec);
        })
        .def("__repr__", [](const PyDomain& h) {
            const int n = domain_size(domain_ref(h.spec));
            return std::holds_alternative<LatticeDomain>(h.spec)
                       ? "<polylap.Domain lattice d=" + std::to_string(lattice_dim(domain_ref(h.spec))) +
                             " |Omega|=" + std::to_string(n) + ">"
                       : "<polylap.Domain ambient |Omega|=" + std::to_string(n) + ">";
        });

    m.def("box", [](int d, const Vertex& lo, const Vertex& hi) {
        return PyDomain{DomainSpec{make_box(d, lo, hi)}};
    }, py::arg("d"), py::arg("lo"), py::arg("hi"));
    m.def("ball", [](int d, const Vertex& center, int r) {
        return PyDomain{DomainSpec{make_ball(d, center, r)}};
    }, py::arg("d"), py::arg("center"), py::arg("r"));
    m.def("explicit_domain", [](int d, const std::vector<Vertex>& verts) {
        return PyDomain{DomainSpec{LatticeDomain(d, verts)}};
    }, py::arg("d"), py::arg("vertices"));
    m.def("ambient", [](int n, const std::vector<std::pair<int, int>>& edges,
                        const std::vector<int>& omega) {
        return PyDomain{DomainSpec{AmbientGraph(n, edges, omega)}};
    }, py::arg("n"), py::arg("edges"), py::arg("omega"));
    m.def("domain_from_json", [](const std::string& text) { return PyDomain{parse_domain(text)}; },
          py::arg("text"));

    m.def("assemble", [](const PyDomain& h, int l) {
        return matrix_to_array(assemble(domain_ref(h.spec), l).matrix);
    }, py::arg("domain"), py::arg("order") = 1,
       "Dense matrix of (-1)^l Delta_Omega^{l,D} in domain index order");

    m.def("eigenvalues", [](const PyDomain& h, int l) {
        return values_to_array(eigen_sym(assemble(domain_ref(h.spec), l).matrix, false).eigenvalues);
    }, py::arg("domain"), py::arg("order") = 1);

    m.def("eigen_sym", [](const py::array_t<double, py::array::c_style | py::array::forcecast>& a,
                          bool want_vectors) {
        const Spectrum s = eigen_sym(array_to_matrix(a), want_vectors);
        py::object vectors = py::none(), residual = py::none();
        if (s.eigenvectors) vectors = matrix_to_array(*s.eigenvectors);
        if (s.residuals) residual = py::float_(s.max_residual());
        return py::make_tuple(values_to_array(s.eigenvalues), vectors, residual);
    }, py::arg("matrix"), py::arg("want_vectors") = false,
       "Ascending eigenvalues of a symmetric matrix, optionally with vectors");

    m.def("boundary_measure", [](const PyDomain& h, int l) {
        const BoundaryMeasure bm = boundary_measure(domain_ref(h.spec), l);
        return py::make_tuple(bm.exact, bm.crude);
    }, py::arg("domain"), py::arg("order") = 1);

    m.def("unit_ball_volume", &unit_ball_volume, py::arg("d"));
    m.def("clamped_beam_constant", &clamped_beam_constant, py::arg("k"));

    m.def("bounds_json", [](const PyDomain& h, int l, int kmax) {
        if (!std::holds_alternative<LatticeDomain>(h.spec))
            throw std::invalid_argument("bounds require a lattice domain");
        return bounds_to_json(verify_bounds(std::get<LatticeDomain>(h.spec), l, kmax));
    }, py::arg("domain"), py::arg("order") = 1, py::arg("kmax") = 10);

    m.def("compare_orders_json", [](const PyDomain& h, int l, int kmax) {
        return comparison_to_json(compare_orders(domain_ref(h.spec), l, kmax));
    }, py::arg("domain"), py::arg("order") = 1, py::arg("kmax") = 10);

    m.def("exhaustion_json", [](const std::string& shape, int d, int l, int k,
                                const std::vector<int>& sizes) {
        return exhaustion_to_json(run_exhaustion(parse_shape(shape), d, l, k, sizes));
    }, py::arg("shape"), py::arg("d"), py::arg("order"), py::arg("k"), py::arg("sizes"));

    m.def("fig1_json", [](int k, const std::vector<int>& sizes) {
        return ratio_series_to_json(run_ratio_series(k, sizes));
    }, py::arg("k") = 1, py::arg("sizes") = std::vector<int>{25, 50, 100, 200, 400});

    m.def("fig1_svg", [](int k, const std::vector<int>& sizes) {
        return ratio_series_to_svg(run_ratio_series(k, sizes));
    }, py::arg("k") = 1, py::arg("sizes") = std::vector<int>{25, 50, 100, 200, 400});

    m.def("no_l2_residuals_json", [](int d, int l, double lam, const std::vector<int>& sizes) {
        return residual_table_to_json(no_l2_eigenfunction_demo(d, l, lam, sizes));
    }, py::arg("d"), py::arg("order"), py::arg("lam"), py::arg("sizes"),
       "Distance from lam to the Dirichlet order-l spectrum on growing boxes");

    m.def("plancherel_check", [](const PyDomain& h, const std::vector<double>& f) {
        if (!std::holds_alternative<LatticeDomain>(h.spec))
            throw std::invalid_argument("fourier checks require a lattice domain");
        const LatticeDomain& dom = std::get<LatticeDomain>(h.spec);
        const FourierCheck c = plancherel_check(dom, f, make_grid(dom, 0));
        return py::make_tuple(c.lhs, c.rhs, c.rel_err);
    }, py::arg("domain"), py::arg("f"));

    m.def("polylaplace_fourier_check", [](const PyDomain& h, const std::vector<double>& f, int l) {
        if (!std::holds_alternative<LatticeDomain>(h.spec))
            throw std::invalid_argument("fourier checks require a lattice domain");
        const LatticeDomain& dom = std::get<LatticeDomain>(h.spec);
        const FourierCheck c = polylaplace_fourier_check(dom, f, l, make_grid(dom, l));
        return py::make_tuple(c.lhs, c.rhs, c.rel_err);
    }, py::arg("domain"), py::arg("f"), py::arg("order") = 1);
}
