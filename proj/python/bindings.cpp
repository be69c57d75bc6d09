// Copyright 2026 The tbtgrc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <sstream>

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "tbt/cost.hpp"
#include "tbt/fast.hpp"
#include "tbt/grc.hpp"
#include "tbt/harness.hpp"
#include "tbt/io.hpp"
#include "tbt/wwr.hpp"

namespace py = pybind11;
using namespace tbt;

namespace {

Eigen::VectorXcd dense_vector(const BandVector& v)
{
    const auto d = v.dense();
    return Eigen::Map<const Eigen::VectorXcd>(d.data(), static_cast<Eigen::Index>(d.size()));
}

Eigen::MatrixXcd factor_columns(const InverseFactor& f)
{
    const auto n = static_cast<Eigen::Index>(f.size());
    Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        p.col(k) = dense_vector(f.columns()[static_cast<Index>(k)]);
    }
    return p;
}

InverseFactor oracle_factorization(const Eigen::MatrixXcd& r, OpCounter* counter)
{
    const DenseHermitian dense(r);
    return build_factorization(grc_full(dense, counter), dense);
}

py::dict cost_row(const CostReport& r)
{
    py::dict d;
    d["n1"] = r.n1;
    d["n2"] = r.n2;
    d["opc_eq15"] = r.opc15;
    d["opc_eq12_c1_3"] = r.opc_sum12;
    d["opcwwr_eq14"] = r.opcwwr14;
    d["ratio"] = r.ratio;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Toeplitz-block-Toeplitz inversion by generalized reflection coefficients";

    auto base = py::register_exception<Error>(m, "TbtError", PyExc_RuntimeError);
    py::register_exception<NotPositiveDefinite>(m, "NotPositiveDefinite", base.ptr());
    py::register_exception<NumericalBreakdown>(m, "NumericalBreakdown", base.ptr());
    py::register_exception<InternalIndexError>(m, "InternalIndexError", base.ptr());
    py::register_exception<FactorizationMismatch>(m, "FactorizationMismatch", base.ptr());
    py::register_exception<SingularP>(m, "SingularP", base.ptr());
    py::register_exception<DomainError>(m, "DomainError", base.ptr());
    py::register_exception<FormatError>(m, "FormatError", base.ptr());

    py::class_<OpCounter>(m, "OpCounter")
        .def(py::init<>())
        .def_readonly("mul", &OpCounter::mul)
        .def_readonly("add", &OpCounter::add)
        .def_readonly("div", &OpCounter::div)
        .def("__repr__", [](const OpCounter& c) { return summary_line(c); });

    m.def("mod_op", &mod_op, py::arg("a"), py::arg("b"));
    m.def("sec_op", &sec_op, py::arg("a"), py::arg("b"));
    m.def(
        "index_exchange",
        [](Index k, Index l, Index n1) {
            const IndexPair p = index_exchange(k, l, n1);
            return py::make_tuple(p.k, p.l);
        },
        py::arg("k"), py::arg("l"), py::arg("n1"));

    py::class_<TbtGenerator>(m, "TbtGenerator")
        .def(py::init([](Index n1, Index n2, const std::vector<Complex>& values) {
                 return TbtGenerator(n1, n2, values);
             }),
             py::arg("n1"), py::arg("n2"), py::arg("values"))
        .def_static("identity", &TbtGenerator::identity, py::arg("n1"), py::arg("n2"))
        .def_property_readonly("n1", &TbtGenerator::n1)
        .def_property_readonly("n2", &TbtGenerator::n2)
        .def_property_readonly("size", &TbtGenerator::size)
        .def("c", &TbtGenerator::c, py::arg("d"), py::arg("s"))
        .def("entry", &TbtGenerator::entry, py::arg("i"), py::arg("j"))
        .def("dense", [](const TbtGenerator& g) { return assemble_dense(g).matrix(); })
        .def("to_text",
             [](const TbtGenerator& g) {
                 std::ostringstream out;
                 write_generator(out, g);
                 return out.str();
             })
        .def_static("from_text",
                    [](const std::string& text) {
                        std::istringstream in(text);
                        return read_generator(in);
                    })
        .def(py::self == py::self);

    m.def("generate_pd_tbt", &generate_pd_tbt, py::arg("n1"), py::arg("n2"), py::arg("seed"),
          py::arg("ridge") = kDefaultRidge);
    m.def("load_generator", &load_generator, py::arg("path"));
    m.def("save_generator", &save_generator, py::arg("path"), py::arg("generator"));

    py::class_<CoeffEntry>(m, "CoeffEntry")
        .def_readonly("a", &CoeffEntry::a)
        .def_readonly("a_prime", &CoeffEntry::a_prime)
        .def_readonly("v", &CoeffEntry::v)
        .def_readonly("v_prime", &CoeffEntry::v_prime)
        .def_property_readonly("p", [](const CoeffEntry& e) { return dense_vector(e.p); })
        .def_property_readonly("q", [](const CoeffEntry& e) { return dense_vector(e.q); });

    py::class_<CoeffTables>(m, "CoeffTables")
        .def_property_readonly("size", &CoeffTables::size)
        .def("at", &CoeffTables::at, py::arg("k"), py::arg("l"), py::return_value_policy::copy);

    py::class_<CanonicalTables>(m, "CanonicalTables")
        .def_property_readonly("size", &CanonicalTables::size)
        .def_property_readonly("stored_count", &CanonicalTables::stored_count)
        .def("fetch", [](const CanonicalTables& t, Index k, Index l) { return fetch(t, k, l); }, py::arg("k"),
             py::arg("l"));

    m.def(
        "grc_full",
        [](const Eigen::MatrixXcd& r) { return grc_full(DenseHermitian(r)); }, py::arg("matrix"),
        "Dense reference recursion on a Hermitian positive definite matrix");
    m.def(
        "tbt_grc", [](const TbtGenerator& g, OpCounter* counter) { return tbt_grc(g, counter); },
        py::arg("generator"), py::arg("counter") = nullptr);

    py::class_<InverseFactor>(m, "InverseFactor")
        .def_property_readonly("size", &InverseFactor::size)
        .def_property_readonly("columns", &factor_columns)
        .def_property_readonly("diag", &InverseFactor::diag)
        .def("apply",
             [](const InverseFactor& f, const Eigen::VectorXcd& b) {
                 const auto x = apply_inverse(f, std::span<const Complex>(b.data(), static_cast<Index>(b.size())));
                 return Eigen::VectorXcd(Eigen::Map<const Eigen::VectorXcd>(x.data(), b.size()));
             },
             py::arg("b"))
        .def("inverse", [](const InverseFactor& f) { return inverse_dense(f).matrix(); });

    m.def("tbt_factorization", &tbt_factorization, py::arg("generator"), py::arg("counter") = nullptr);
    m.def("oracle_factorization", &oracle_factorization, py::arg("matrix"), py::arg("counter") = nullptr);

    m.def(
        "wwr_coefficients",
        [](const TbtGenerator& g) { return wwr_recurse(g).back().A; }, py::arg("generator"),
        "Final-order WWR coefficient blocks A_1 .. A_{n2-1}");
    m.def(
        "wwr_relative_residual",
        [](const TbtGenerator& g) {
            const double scale = wwr_rhs_norm(g);
            const double r = wwr_residual(g, wwr_recurse(g).back());
            return scale > 0.0 ? r / scale : r;
        },
        py::arg("generator"));

    m.def("opc_triple_sum", &opc_triple_sum, py::arg("n1"), py::arg("n2"), py::arg("c1") = 3.0);
    m.def("opc_closed_form", &opc_closed_form, py::arg("n1"), py::arg("n2"));
    m.def("opcwwr", &opcwwr, py::arg("n1"), py::arg("n2"));
    m.def(
        "comparison_table",
        [](std::int64_t lo, std::int64_t hi) {
            py::list rows;
            for (const CostReport& r : comparison_table(lo, hi)) {
                rows.append(cost_row(r));
            }
            return rows;
        },
        py::arg("n_min"), py::arg("n_max"));

    m.def(
        "run_verify",
        [](const TbtGenerator& g, double tolerance) {
            const VerifyReport r = run_verify(g, tolerance);
            py::dict d;
            d["table_deviation"] = r.table_deviation;
            d["inverse_residual"] = r.inverse_residual;
            d["wwr_residual"] = r.wwr_residual ? py::cast(*r.wwr_residual) : py::none();
            d["passed"] = r.passed;
            return d;
        },
        py::arg("generator"), py::arg("tolerance") = kDefaultTolerance);
}
