#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lopp/config.hpp"
#include "lopp/io.hpp"
#include "lopp/lemmas.hpp"
#include "lopp/pipeline.hpp"

namespace py = pybind11;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Isotropic-line charts, Schottky limit sets and proper-action "
            "audits for affine Lorentzian groups";

  auto err = py::register_exception<lopp::Error>(m, "Error");
  py::register_exception<lopp::NotIsotropic>(m, "NotIsotropic", err.ptr());
  py::register_exception<lopp::NotOpposite>(m, "NotOpposite", err.ptr());
  py::register_exception<lopp::NotRegular>(m, "NotRegular", err.ptr());
  py::register_exception<lopp::EmptySample>(m, "EmptySample", err.ptr());
  py::register_exception<lopp::AmbiguousIncidence>(m, "AmbiguousIncidence",
                                                   err.ptr());
  py::register_exception<lopp::PingPongFailure>(m, "PingPongFailure",
                                                err.ptr());
  py::register_exception<lopp::SearchFailed>(m, "SearchFailed", err.ptr());

  py::class_<lopp::Tolerances>(m, "Tolerances")
      .def(py::init<>())
      .def_readwrite("null_vector", &lopp::Tolerances::null_vector)
      .def_readwrite("incidence", &lopp::Tolerances::incidence)
      .def_readwrite("parallel", &lopp::Tolerances::parallel)
      .def_readwrite("orthogonality", &lopp::Tolerances::orthogonality)
      .def_readwrite("spectral_gap", &lopp::Tolerances::spectral_gap)
      .def_readwrite("dedup", &lopp::Tolerances::dedup)
      .def_readwrite("guard_factor", &lopp::Tolerances::guard_factor);

  py::class_<lopp::QuadraticSpace>(m, "QuadraticSpace")
      .def(py::init<int>(), py::arg("n"))
      .def_property_readonly("n", &lopp::QuadraticSpace::n)
      .def_property_readonly("dim", &lopp::QuadraticSpace::dim)
      .def_property_readonly("gram", &lopp::QuadraticSpace::gram)
      .def("bilinear", &lopp::QuadraticSpace::bilinear)
      .def("quadratic", &lopp::QuadraticSpace::quadratic);

  py::class_<lopp::IsotropicLine>(m, "IsotropicLine")
      .def_static("from_vector", &lopp::IsotropicLine::from_vector,
                  py::arg("space"), py::arg("v"),
                  py::arg("tol") = lopp::Tolerances())
      .def_property_readonly("rep", &lopp::IsotropicLine::rep)
      .def_property_readonly("dim", &lopp::IsotropicLine::dim);

  py::enum_<lopp::PairClass>(m, "PairClass")
      .value("Equal", lopp::PairClass::Equal)
      .value("Incident", lopp::PairClass::Incident)
      .value("Opposite", lopp::PairClass::Opposite);

  m.def("chordal_distance", &lopp::chordal_distance);
  m.def("quadric_margin", &lopp::quadric_margin);
  m.def("classify_pair", &lopp::classify_pair, py::arg("space"), py::arg("l1"),
        py::arg("l2"), py::arg("tol") = lopp::Tolerances());
  m.def("ellipsoid_sample", &lopp::ellipsoid_sample, py::arg("space"),
        py::arg("l"), py::arg("lhat"), py::arg("k"),
        py::arg("tol") = lopp::Tolerances());

  py::class_<lopp::Frame>(m, "Frame")
      .def_static("standard", &lopp::Frame::standard, py::arg("space"),
                  py::arg("label") = std::string())
      .def(py::init<const lopp::QuadraticSpace&, const Eigen::VectorXd&,
                    const Eigen::VectorXd&, const Eigen::MatrixXd&,
                    std::string, const lopp::Tolerances&>(),
           py::arg("space"), py::arg("e"), py::arg("f"), py::arg("basis"),
           py::arg("label") = std::string(),
           py::arg("tol") = lopp::Tolerances())
      .def_property_readonly("n", &lopp::Frame::n)
      .def_property_readonly("e", &lopp::Frame::e)
      .def_property_readonly("f", &lopp::Frame::f)
      .def_property_readonly("basis", &lopp::Frame::basis)
      .def_property_readonly("gram_prime", &lopp::Frame::gram_prime)
      .def_property_readonly("lorentz_basis", &lopp::Frame::lorentz_basis)
      .def_property_readonly("label", &lopp::Frame::label)
      .def("qprime", &lopp::Frame::qprime)
      .def("bprime", &lopp::Frame::bprime)
      .def("line", &lopp::Frame::line)
      .def("line_hat", &lopp::Frame::line_hat);

  py::class_<lopp::GroupElement>(m, "GroupElement")
      .def(py::init<Eigen::MatrixXd>())
      .def_readwrite("mat", &lopp::GroupElement::mat);

  m.def("shear", &lopp::shear);
  m.def("shear_compose_check", &lopp::shear_compose_check);
  m.def("chart_to_flag", &lopp::chart_to_flag, py::arg("frame"),
        py::arg("vprime"), py::arg("tol") = lopp::Tolerances());
  m.def("flag_to_chart", &lopp::flag_to_chart);
  m.def("embed_affine", &lopp::embed_affine, py::arg("frame"), py::arg("a"),
        py::arg("b"), py::arg("tol") = lopp::Tolerances());
  m.def("transvection", &lopp::transvection);
  m.def("linear_part", &lopp::linear_part, py::arg("frame"), py::arg("g"),
        py::arg("tol") = lopp::Tolerances());
  m.def("element_from_matrix", &lopp::element_from_matrix, py::arg("space"),
        py::arg("mat"), py::arg("tol") = lopp::Tolerances());
  m.def("apply", &lopp::apply, py::arg("space"), py::arg("g"), py::arg("l"),
        py::arg("tol") = lopp::Tolerances());

  py::class_<lopp::AffineIsometry>(m, "AffineIsometry")
      .def(py::init<Eigen::MatrixXd, Eigen::VectorXd>())
      .def_readwrite("linear", &lopp::AffineIsometry::linear)
      .def_readwrite("translation", &lopp::AffineIsometry::translation);

  m.def("affine_identity", &lopp::affine_identity);
  m.def("affine_compose", &lopp::affine_compose);
  m.def("affine_inverse", &lopp::affine_inverse);
  m.def("boost", &lopp::boost, py::arg("frame"), py::arg("attracting"),
        py::arg("repelling"), py::arg("rapidity"),
        py::arg("tol") = lopp::Tolerances());
  m.def("boundary_direction", &lopp::boundary_direction);
  m.def("boundary_apply", &lopp::boundary_apply);
  m.def("boundary_angle", &lopp::boundary_angle);

  py::class_<lopp::BoundaryBall>(m, "BoundaryBall")
      .def_readonly("center", &lopp::BoundaryBall::center)
      .def_readonly("radius", &lopp::BoundaryBall::radius);

  py::class_<lopp::PingPongCertificate>(m, "PingPongCertificate")
      .def_readonly("balls", &lopp::PingPongCertificate::balls)
      .def_readonly("disjointness_margin",
                    &lopp::PingPongCertificate::disjointness_margin)
      .def_readonly("contraction_margin",
                    &lopp::PingPongCertificate::contraction_margin)
      .def_readonly("boundary_samples",
                    &lopp::PingPongCertificate::boundary_samples)
      .def("margin", &lopp::PingPongCertificate::margin);

  py::class_<lopp::GeneratorSpec>(m, "GeneratorSpec")
      .def(py::init<>())
      .def_readwrite("attracting", &lopp::GeneratorSpec::attracting)
      .def_readwrite("repelling", &lopp::GeneratorSpec::repelling)
      .def_readwrite("rapidity", &lopp::GeneratorSpec::rapidity)
      .def_readwrite("translation", &lopp::GeneratorSpec::translation)
      .def_readwrite("ball_radius", &lopp::GeneratorSpec::ball_radius);

  py::class_<lopp::SchottkyGroup>(m, "SchottkyGroup")
      .def_readonly("n", &lopp::SchottkyGroup::n)
      .def_readonly("generators", &lopp::SchottkyGroup::generators)
      .def_readonly("certificate", &lopp::SchottkyGroup::certificate);

  m.def("schottky", &lopp::schottky, py::arg("frame"), py::arg("specs"),
        py::arg("boundary_samples") = 10000,
        py::arg("tol") = lopp::Tolerances());
  m.def("scale_group", &lopp::scale_group);

  py::class_<lopp::Word>(m, "Word")
      .def(py::init<>())
      .def(py::init([](std::vector<int> letters) {
             lopp::Word w;
             w.letters = std::move(letters);
             return w;
           }),
           py::arg("letters"))
      .def_readwrite("letters", &lopp::Word::letters)
      .def_property_readonly("length", &lopp::Word::length);

  m.def("is_reduced", &lopp::is_reduced);
  m.def("is_cyclically_reduced", &lopp::is_cyclically_reduced);
  m.def("word_inverse", &lopp::word_inverse);
  m.def("words", &lopp::words);
  m.def("word_count", &lopp::word_count);
  m.def("evaluate", &lopp::evaluate);

  m.def("attracting_line", &lopp::attracting_line, py::arg("space"),
        py::arg("g"), py::arg("tol") = lopp::Tolerances());

  py::class_<lopp::LimitSample>(m, "LimitSample")
      .def_readonly("points", &lopp::LimitSample::points)
      .def_readonly("word_length", &lopp::LimitSample::word_length)
      .def_readonly("group_id", &lopp::LimitSample::group_id)
      .def_readonly("words_considered", &lopp::LimitSample::words_considered)
      .def_readonly("skipped_irregular", &lopp::LimitSample::skipped_irregular);

  m.def("limit_sample", &lopp::limit_sample, py::arg("frame"),
        py::arg("group"), py::arg("depth"), py::arg("tol") = lopp::Tolerances());

  py::class_<lopp::ContainmentReport>(m, "ContainmentReport")
      .def_readonly("max_quadric_margin",
                    &lopp::ContainmentReport::max_quadric_margin)
      .def_readonly("min_distance", &lopp::ContainmentReport::min_distance)
      .def_readonly("count", &lopp::ContainmentReport::count);

  m.def("containment_report", &lopp::containment_report);
  m.def("hausdorff_chordal", &lopp::hausdorff_chordal);
  m.def("scaling_check", &lopp::scaling_check, py::arg("frame"),
        py::arg("group"), py::arg("t"), py::arg("depth"),
        py::arg("tol") = lopp::Tolerances());

  py::class_<lopp::HyperplaneItem>(m, "HyperplaneItem")
      .def_readonly("direction", &lopp::HyperplaneItem::direction)
      .def_readonly("offset", &lopp::HyperplaneItem::offset);

  py::class_<lopp::NullHyperplaneSet>(m, "NullHyperplaneSet")
      .def_readonly("items", &lopp::NullHyperplaneSet::items)
      .def_readonly("n", &lopp::NullHyperplaneSet::n);

  m.def("thickening_in_chart", &lopp::thickening_in_chart, py::arg("frame"),
        py::arg("sample"), py::arg("tol") = lopp::Tolerances());
  m.def("domain_margin", &lopp::domain_margin);

  py::class_<lopp::DomainPoint>(m, "DomainPoint")
      .def_readonly("vprime", &lopp::DomainPoint::vprime)
      .def_readonly("margin", &lopp::DomainPoint::margin);

  m.def("find_domain_point", &lopp::find_domain_point);

  py::class_<lopp::AuditReport>(m, "AuditReport")
      .def_readonly("center", &lopp::AuditReport::center)
      .def_readonly("radius", &lopp::AuditReport::radius)
      .def_readonly("depth", &lopp::AuditReport::depth)
      .def_readonly("returners_by_length",
                    &lopp::AuditReport::returners_by_length)
      .def_readonly("cumulative", &lopp::AuditReport::cumulative)
      .def_readonly("stabilized", &lopp::AuditReport::stabilized);

  m.def("properness_audit", &lopp::properness_audit);
  m.def("equivariance_audit", &lopp::equivariance_audit, py::arg("frame"),
        py::arg("group"), py::arg("samples"),
        py::arg("tol") = lopp::Tolerances());

  py::class_<lopp::LemmaResult>(m, "LemmaResult")
      .def_readonly("name", &lopp::LemmaResult::name)
      .def_readonly("max_error", &lopp::LemmaResult::max_error)
      .def_readonly("tolerance", &lopp::LemmaResult::tolerance)
      .def_readonly("samples", &lopp::LemmaResult::samples)
      .def("passed", &lopp::LemmaResult::pass);

  py::class_<lopp::LemmaReport>(m, "LemmaReport")
      .def_readonly("n", &lopp::LemmaReport::n)
      .def_readonly("seed", &lopp::LemmaReport::seed)
      .def_readonly("results", &lopp::LemmaReport::results)
      .def("passed", &lopp::LemmaReport::pass);

  m.def("lemma_suite", &lopp::lemma_suite, py::arg("n"), py::arg("samples"),
        py::arg("seed"),
        py::arg("gram_override") = std::optional<Eigen::MatrixXd>());
}
