#include "grcone/bundle.hpp"
#include "grcone/certificate.hpp"
#include "grcone/cone.hpp"
#include "grcone/errors.hpp"
#include "grcone/io.hpp"
#include "grcone/numeric.hpp"
#include "grcone/oracle.hpp"

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <exception>
#include <string>
#include <utility>
#include <vector>

namespace py = pybind11;

namespace pybind11::detail {

// Arbitrary-precision integers cross the boundary as python ints, via their
// decimal form; no magnitude limit on either side.
template <>
struct type_caster<grcone::Int> {
    PYBIND11_TYPE_CASTER(grcone::Int, const_name("int"));

    bool load(handle src, bool) {
        if (!PyLong_Check(src.ptr()) || PyBool_Check(src.ptr()))
            return false;
        value = grcone::Int(py::str(src).cast<std::string>());
        return true;
    }

    static handle cast(const grcone::Int& src, return_value_policy, handle) {
        return PyLong_FromString(src.str().c_str(), nullptr, 10);
    }
};

// Exact rationals map to fractions.Fraction; plain ints load as well.
template <>
struct type_caster<grcone::Rational> {
    PYBIND11_TYPE_CASTER(grcone::Rational, const_name("Fraction"));

    bool load(handle src, bool) {
        if (PyBool_Check(src.ptr()))
            return false;
        if (PyLong_Check(src.ptr())) {
            value = grcone::Rational(grcone::Int(py::str(src).cast<std::string>()));
            return true;
        }
        if (!py::hasattr(src, "numerator") || !py::hasattr(src, "denominator"))
            return false;
        py::object num = src.attr("numerator");
        py::object den = src.attr("denominator");
        if (!PyLong_Check(num.ptr()) || !PyLong_Check(den.ptr()))
            return false;
        value = grcone::make_rational(grcone::Int(py::str(num).cast<std::string>()),
                                      grcone::Int(py::str(den).cast<std::string>()));
        return true;
    }

    static handle cast(const grcone::Rational& src, return_value_policy, handle) {
        py::object fraction = py::module_::import("fractions").attr("Fraction");
        return fraction(grcone::format_rational(src)).release();
    }
};

} // namespace pybind11::detail

namespace {

using namespace grcone;

std::string block_repr(const HNBlock& b) {
    return "HNBlock(rank=" + std::to_string(b.rank) + ", degree=" + b.degree.str() + ")";
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact cone computations for Grassmann bundles over curves";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p)
                std::rethrow_exception(p);
        } catch (const ValidationError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        } catch (const RangeError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        } catch (const ParseError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        } catch (const Error& e) {
            PyErr_SetString(PyExc_RuntimeError, e.what());
        }
    });

    py::class_<HNBlock>(m, "HNBlock")
        .def(py::init([](int rank, Int degree) {
                 return HNBlock{rank, std::move(degree)};
             }),
             py::arg("rank"), py::arg("degree"))
        .def_readwrite("rank", &HNBlock::rank)
        .def_readwrite("degree", &HNBlock::degree)
        .def(py::self == py::self)
        .def("__repr__", &block_repr);

    m.def("slope", &slope, py::arg("block"));

    py::class_<HNType>(m, "HNType")
        .def(py::init<std::vector<HNBlock>>(), py::arg("blocks"))
        .def_property_readonly("blocks", &HNType::blocks)
        .def_property_readonly("total_rank", &HNType::total_rank)
        .def_property_readonly("total_degree", &HNType::total_degree)
        .def(py::self == py::self);

    py::class_<SplitBundle>(m, "SplitBundle")
        .def(py::init<std::vector<Int>>(), py::arg("exponents"))
        .def_property_readonly("exponents", &SplitBundle::exponents)
        .def_property_readonly("sorted_exponents", &SplitBundle::sorted_exponents)
        .def_property_readonly("rank", &SplitBundle::rank)
        .def_property_readonly("total_degree", &SplitBundle::total_degree)
        .def(py::self == py::self);

    py::class_<StrongHNData>(m, "StrongHNData")
        .def(py::init<Int, int, HNType>(), py::arg("characteristic"), py::arg("delta"),
             py::arg("hn"))
        .def_property_readonly("characteristic", &StrongHNData::characteristic)
        .def_property_readonly("delta", &StrongHNData::delta)
        .def_property_readonly("hn", &StrongHNData::hn)
        .def(py::self == py::self);

    py::class_<BundleDescriptor>(m, "BundleDescriptor")
        .def_static("char_zero", &BundleDescriptor::char_zero, py::arg("hn"))
        .def_static("split", &BundleDescriptor::split, py::arg("bundle"),
                    py::arg("characteristic"))
        .def_static("strong", &BundleDescriptor::strong, py::arg("data"))
        .def_property_readonly("total_rank", &BundleDescriptor::total_rank)
        .def_property_readonly("characteristic", &BundleDescriptor::characteristic)
        .def("lambda_", &BundleDescriptor::lambda, py::arg("r"))
        .def(py::self == py::self);

    m.def("hn_of_split", &hn_of_split, py::arg("bundle"));
    m.def("lambda_char0", &lambda_char0, py::arg("hn"), py::arg("r"));
    m.def("lambda_strong", &lambda_strong, py::arg("data"), py::arg("r"));
    m.def("frobenius_split", &frobenius_split, py::arg("bundle"), py::arg("characteristic"),
          py::arg("j"));
    m.def("shift_strong", &shift_strong, py::arg("data"), py::arg("j"));
    m.def("dual_split", &dual_split, py::arg("bundle"));
    m.def("exterior_power_split", &exterior_power_split, py::arg("bundle"), py::arg("r"));

    py::class_<OracleReport>(m, "OracleReport")
        .def_readonly("r", &OracleReport::r)
        .def_readonly("lambda_formula", &OracleReport::lambda_formula)
        .def_readonly("lambda_oracle", &OracleReport::lambda_oracle)
        .def_readonly("h0_at_boundary", &OracleReport::h0_at_boundary)
        .def_readonly("h0_beyond_boundary", &OracleReport::h0_beyond_boundary)
        .def_readonly("verdict", &OracleReport::verdict)
        .def(py::self == py::self);

    m.def("max_subset_sum",
          py::overload_cast<const SplitBundle&, int>(&max_subset_sum), py::arg("bundle"),
          py::arg("r"));
    m.def("h0_line_genus0", &h0_line_genus0, py::arg("degree"));
    m.def("h0_taut_twist", &h0_taut_twist, py::arg("bundle"), py::arg("r"), py::arg("twist"));
    m.def("verify_theorem_split", &verify_theorem_split, py::arg("bundle"), py::arg("r"));

    py::class_<NSClass>(m, "NSClass")
        .def(py::init([](Rational eta, Rational fiber) {
                 return NSClass{std::move(eta), std::move(fiber)};
             }),
             py::arg("eta"), py::arg("fiber"))
        .def_readwrite("eta", &NSClass::eta)
        .def_readwrite("fiber", &NSClass::fiber)
        .def(py::self == py::self)
        .def(py::self + py::self)
        .def("__rmul__",
             [](const NSClass& x, const Rational& scale) { return scale * x; });

    py::class_<Ray>(m, "Ray")
        .def(py::init<Int, Int>(), py::arg("eta"), py::arg("fiber"))
        .def_static("from_class", &Ray::from_class, py::arg("direction"))
        .def_property_readonly("eta", &Ray::eta)
        .def_property_readonly("fiber", &Ray::fiber)
        .def("as_class", &Ray::as_class)
        .def(py::self == py::self)
        .def("__repr__", [](const Ray& r) {
            return "Ray(" + r.eta().str() + ", " + r.fiber().str() + ")";
        });

    py::class_<Cone2D>(m, "Cone2D")
        .def(py::init<Ray, Ray>(), py::arg("a"), py::arg("b"))
        .def_property_readonly("ray_a", &Cone2D::ray_a)
        .def_property_readonly("ray_b", &Cone2D::ray_b)
        .def(py::self == py::self);

    m.def("pseff_cone", &pseff_cone, py::arg("bundle"), py::arg("r"));
    m.def("contains", &contains, py::arg("cone"), py::arg("x"));
    m.def("on_boundary", &on_boundary, py::arg("cone"), py::arg("x"));
    m.def("pullback_class", &pullback_class, py::arg("x"), py::arg("total_degree"));

    py::class_<CoverModel>(m, "CoverModel")
        .def(py::init<Int, Int, SplitBundle>(), py::arg("cover_degree"), py::arg("l_degree"),
             py::arg("exponents"))
        .def_property_readonly("cover_degree", &CoverModel::cover_degree)
        .def_property_readonly("l_degree", &CoverModel::l_degree)
        .def_property_readonly("exponents", &CoverModel::exponents)
        .def(py::self == py::self);

    py::class_<CertificateChecks>(m, "CertificateChecks")
        .def(py::init<>())
        .def_readwrite("summand_ok", &CertificateChecks::summand_ok)
        .def_readwrite("degree_identity_ok", &CertificateChecks::degree_identity_ok)
        .def_readwrite("pullback_identity_ok", &CertificateChecks::pullback_identity_ok)
        .def("all", &CertificateChecks::all)
        .def(py::self == py::self);

    py::class_<EffectivityCertificate>(m, "EffectivityCertificate")
        .def(py::init<>())
        .def_readwrite("r", &EffectivityCertificate::r)
        .def_readwrite("ell", &EffectivityCertificate::ell)
        .def_readwrite("n", &EffectivityCertificate::n)
        .def_readwrite("selected_exponents", &EffectivityCertificate::selected_exponents)
        .def_readwrite("tilde_l_degree", &EffectivityCertificate::tilde_l_degree)
        .def_readwrite("total_map_degree", &EffectivityCertificate::total_map_degree)
        .def_readwrite("checks", &EffectivityCertificate::checks)
        .def(py::self == py::self);

    m.def("check_cover_consistency", &check_cover_consistency, py::arg("data"),
          py::arg("cover"));
    m.def("build_certificate", &build_certificate, py::arg("data"), py::arg("cover"),
          py::arg("r"));
    m.def("verify_certificate", &verify_certificate, py::arg("certificate"), py::arg("data"),
          py::arg("cover"));

    m.def(
        "certificate_to_json",
        [](const EffectivityCertificate& cert) {
            return io::dump_document(io::to_json(cert));
        },
        py::arg("certificate"));
    m.def(
        "parse_certificate",
        [](const std::string& text) { return io::parse_certificate(text); },
        py::arg("text"));
}
