#include <optional>

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qm/factor.hpp"
#include "qm/gauss_sum.hpp"
#include "qm/lfunc.hpp"
#include "qm/moment.hpp"
#include "qm/quartic.hpp"
#include "qm/verify.hpp"

namespace py = pybind11;
using namespace qm;

namespace {

py::dict lvalue_dict(const LValue& v) {
    py::dict d;
    d["value"] = v.value;
    d["first_sum"] = v.first_sum;
    d["second_sum"] = v.second_sum;
    d["conductor_norm"] = v.conductor_norm;
    d["x"] = v.x_used;
    d["terms"] = v.truncation_terms;
    d["est_error"] = v.est_error;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Quartic Hecke L-functions over Z[i]";

    py::class_<Gaussian64>(m, "Gaussian")
        .def(py::init([](std::int64_t re, std::int64_t im) { return Gaussian64{re, im}; }), py::arg("re"),
             py::arg("im") = 0)
        .def(py::init([](const std::string& s) { return to_g64(parse_gaussian(s)); }))
        .def_readonly("re", &Gaussian64::re)
        .def_readonly("im", &Gaussian64::im)
        .def("norm", &Gaussian64::norm)
        .def("conj", &Gaussian64::conj)
        .def("is_primary", [](const Gaussian64& z) { return is_primary(z); })
        .def("__mul__", [](const Gaussian64& a, const Gaussian64& b) { return a * b; })
        .def("__add__", [](const Gaussian64& a, const Gaussian64& b) { return a + b; })
        .def("__sub__", [](const Gaussian64& a, const Gaussian64& b) { return a - b; })
        .def("__eq__", [](const Gaussian64& a, const Gaussian64& b) { return a == b; })
        .def("__hash__", [](const Gaussian64& a) { return py::hash(py::make_tuple(a.re, a.im)); })
        .def("__complex__", &Gaussian64::to_complex)
        .def("__str__", [](const Gaussian64& z) { return to_string(z); })
        .def("__repr__", [](const Gaussian64& z) { return "Gaussian('" + to_string(z) + "')"; });
    py::implicitly_convertible<py::int_, Gaussian64>();
    py::implicitly_convertible<py::str, Gaussian64>();

    m.def("primary_associate", [](const Gaussian64& z) {
        const auto a = primary_associate(z);
        return py::make_tuple(a.unit_exp, a.primary);
    });
    m.def("factor", [](const Gaussian64& z) {
        const auto f = factor(z);
        return py::make_tuple(f.unit_exp, f.r, f.factors);
    }, "returns (unit exponent, power of 1+i, [(primary prime, exponent)])");
    m.def("moebius", [](const Gaussian64& z) { return moebius(z); });

    m.def("quartic_symbol", [](const Gaussian64& a, const Gaussian64& n) { return quartic_symbol(a, n).to_string(); },
          py::arg("a"), py::arg("n"));
    m.def("gauss_sum", [](const Gaussian64& r, const Gaussian64& n, const std::string& method) {
        if (method == "direct") return gauss_sum(r, n).value;
        if (method == "fast") return gauss_sum_fast(r, n).value;
        throw py::value_error("method must be 'fast' or 'direct'");
    }, py::arg("r"), py::arg("n"), py::arg("method") = "fast");
    m.def("root_number", &root_number, py::arg("c"));

    m.def("L_half", [](const Gaussian64& c, std::optional<double> x, double tol, bool conjugate) {
        return lvalue_dict(L_half(c, x ? *x : std::max(default_afe_x(c), 2.0), tol, conjugate));
    }, py::arg("c"), py::arg("x") = py::none(), py::arg("tol") = 1e-10, py::arg("conjugate") = false);
    m.def("zeta_K", &zeta_K);
    m.def("incomplete_gamma_half", &incomplete_gamma_half);

    m.def("first_moment", [](double y, std::optional<double> x, double tol, double cut, bool include_c1, unsigned threads) {
        MomentReport r;
        {
            py::gil_scoped_release release;
            r = first_moment(y, x ? *x : std::sqrt(4.0 * y), tol, cut, include_c1, threads);
        }
        py::dict d;
        d["total"] = r.total;
        d["sigma1"] = r.sigma1;
        d["sigma2"] = r.sigma2;
        d["A"] = r.A;
        d["main_term"] = r.main_term;
        d["ratio"] = r.ratio;
        d["imag_leak"] = r.imag_leak;
        py::list rows;
        for (const auto& row : r.per_c) {
            py::dict e = lvalue_dict(row.L);
            e["c"] = row.c;
            e["weight"] = row.weight;
            rows.append(e);
        }
        d["rows"] = rows;
        return d;
    }, py::arg("y"), py::arg("x") = py::none(), py::arg("tol") = 1e-8, py::arg("cut") = 1e-12,
       py::arg("include_c1") = true, py::arg("threads") = 1);

    m.def("constant_A", [](double tol) {
        const auto b = constant_A(tol);
        py::dict d;
        d["geometric"] = b.geometric;
        d["residue"] = b.residue;
        d["class_number"] = b.class_number;
        d["zeta2"] = b.zeta2;
        d["ideal_sum"] = b.ideal_sum;
        d["A"] = b.A;
        return d;
    }, py::arg("tol") = 1e-10);

    m.def("suite_names", &suite_names);
    m.def("run_suite", [](const std::string& name, std::uint64_t seed, unsigned threads) {
        SuiteOptions opt;
        opt.seed = seed;
        opt.threads = threads;
        SuiteResult r;
        {
            py::gil_scoped_release release;
            r = run_suite(name, opt);
        }
        py::list laws;
        for (const auto& law : r.laws) {
            py::dict d;
            d["law"] = law.law;
            d["passed"] = law.passed;
            d["total"] = law.total;
            d["worst"] = law.worst;
            d["ok"] = law.ok();
            laws.append(d);
        }
        return laws;
    }, py::arg("name"), py::arg("seed") = SuiteOptions{}.seed, py::arg("threads") = 1);
}
