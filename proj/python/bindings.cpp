#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gpq/builtins.hpp"
#include "gpq/classify.hpp"
#include "gpq/error.hpp"
#include "gpq/io.hpp"
#include "gpq/quotcov.hpp"
#include "gpq/textutil.hpp"
#include "gpq/verify.hpp"

namespace py = pybind11;
using namespace gpq;

namespace {

Vec to_vec(const Ring& r, const std::vector<std::string>& xs) {
  Vec v;
  for (const auto& s : xs) v.push_back(parse_scalar(r, s));
  return v;
}

Basis to_basis(const Ring& r, const std::vector<std::vector<std::string>>& rows) {
  Basis b;
  for (const auto& row : rows) b.push_back(to_vec(r, row));
  return b;
}

std::vector<Scalar> to_scalars(const Ring& r, const std::vector<std::string>& xs) { return to_vec(r, xs); }

Vec checked(const GenPseudoQuadraticForm& q, const std::vector<std::string>& xs) {
  Vec v = to_vec(q.ring(), xs);
  if (v.size() != q.dim()) fail("dimension-mismatch", "vector of length " + std::to_string(v.size()));
  return v;
}

std::string cover_report(const CoverSpec& spec, const std::string& op) {
  Json basis = Json::array(), s = Json::array(), t = Json::array();
  for (const Vec& v : spec.basis()) basis.push_back(vec_to_json(v));
  for (const Scalar& x : spec.s_gens()) s.push_back(x.str());
  for (const Scalar& x : spec.t_gens()) t.push_back(x.str());
  return dump(Json{{"form", form_to_json(cover_form(spec))},
                   {"provenance", {{"op", op}, {"S", s}, {"T", t}, {"basis", basis}}}});
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Generalized pseudo-quadratic forms (C++ core)";

  static py::exception<Error> error(m, "GpqError");
  static py::exception<ParseError> parse_error(m, "GpqParseError", error.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      PyErr_SetObject(parse_error.ptr(), py::make_tuple(e.code(), e.what(), e.line(), e.column()).ptr());
    } catch (const Error& e) {
      PyErr_SetObject(error.ptr(), py::make_tuple(e.code(), e.what()).ptr());
    }
  });

  py::class_<GenPseudoQuadraticForm>(m, "Form")
      .def_static("parse", &parse_form, py::arg("text"))
      .def_static("from_file", &read_form_file, py::arg("path"))
      .def_static("builtin", &builtin_by_name, py::arg("name"))
      .def_property_readonly("dim", &GenPseudoQuadraticForm::dim)
      .def_property_readonly("ring", [](const GenPseudoQuadraticForm& q) { return q.ring().spec(); })
      .def_property_readonly("pair", [](const GenPseudoQuadraticForm& q) { return q.pair().str(); })
      .def_property_readonly("codefect", [](const GenPseudoQuadraticForm& q) { return q.codefect().str(); })
      .def("to_json", [](const GenPseudoQuadraticForm& q) { return dump(form_to_json(q)); })
      .def("to_text", &form_to_text)
      .def("eval", [](const GenPseudoQuadraticForm& q, const std::vector<std::string>& x) {
        return eval_q(q, checked(q, x)).rep().str();
      })
      .def("f", [](const GenPseudoQuadraticForm& q, const std::vector<std::string>& x, const std::vector<std::string>& y) {
        return q.f().eval(checked(q, x), checked(q, y)).str();
      })
      .def("is_singular", [](const GenPseudoQuadraticForm& q, const std::vector<std::string>& x) {
        return is_singular(q, checked(q, x));
      })
      .def("is_trivial", &is_trivial)
      .def("same_as", &same_form)
      .def(
          "enumerate",
          [](const GenPseudoQuadraticForm& q, const std::string& source) {
            bool use_f = source == "f" || (source == "auto" && q.codefect().is_full());
            if (source != "f" && source != "q" && source != "auto") fail("invalid-argument", "source must be q, f or auto");
            PolarSpace s;
            {
              py::gil_scoped_release nogil;
              s = use_f ? polar_space(q.f()) : polar_space(q);
            }
            return dump(polar_to_json(s));
          },
          py::arg("source") = "auto")
      .def(
          "geometry",
          [](const GenPseudoQuadraticForm& q, const std::string& source) {
            bool use_f = source == "f" || (source == "auto" && q.codefect().is_full());
            return geometry_to_text(geometry_of(use_f ? polar_space(q.f()) : polar_space(q), q.ring()));
          },
          py::arg("source") = "auto")
      .def("quotient",
           [](const GenPseudoQuadraticForm& q, const std::vector<std::vector<std::string>>& u) {
             return quotient_form(q, to_basis(q.ring(), u)).form;
           })
      .def(
          "cover",
          [](const GenPseudoQuadraticForm& q, const std::vector<std::string>& s, const std::vector<std::string>& t,
             std::optional<std::vector<std::vector<std::string>>> basis) {
            if (is_trivial(q)) fail("trivial-form", "covers of trivial forms are not constructed");
            Basis e = basis ? to_basis(q.ring(), *basis) : find_singular_basis(q);
            return cover_report(CoverSpec(q, to_scalars(q.ring(), s), to_scalars(q.ring(), t), e), "cover");
          },
          py::arg("S"), py::arg("T") = std::vector<std::string>{}, py::arg("basis") = py::none())
      .def(
          "dominant_cover",
          [](const GenPseudoQuadraticForm& q, std::optional<std::vector<std::vector<std::string>>> basis) {
            std::optional<Basis> e;
            if (basis) e = to_basis(q.ring(), *basis);
            return cover_report(dominant_spec(q, e), "dominant-cover");
          },
          py::arg("basis") = py::none())
      .def("scale", [](const GenPseudoQuadraticForm& q, const std::string& k) {
        return scale_form(parse_scalar(q.ring(), k), q);
      })
      .def("__repr__", [](const GenPseudoQuadraticForm& q) {
        return "<Form " + q.ring().spec() + " dim " + std::to_string(q.dim()) + " " + q.pair().str() + ">";
      });

  m.def("builtin_names", &builtin_names);
  m.def(
      "pair_info",
      [](const std::string& ring, const std::string& sigma, const std::string& eps) {
        const Ring& r = parse_ring(ring);
        auto p = AdmissiblePair::validate(r, parse_antiauto(r, sigma), parse_scalar(r, eps));
        Json low = Json::array(), up = Json::array();
        for (const Vec& b : p.lower().basis()) low.push_back(from_base_coords(r, b).str());
        for (const Vec& b : p.upper().basis()) up.push_back(from_base_coords(r, b).str());
        return dump(Json{{"ring", r.spec()}, {"pair", p.str()}, {"trace_type", p.trace_type()}, {"lower", low}, {"upper", up}});
      },
      py::arg("ring"), py::arg("sigma") = "id", py::arg("eps") = "1");
  m.def("classify", [](const std::string& geometry) { return dump(classification_to_json(classify(parse_geometry(geometry)))); });
  m.def("hull", [](const std::string& geometry) {
    auto g = parse_geometry(geometry);
    auto c = classify(g);
    auto h = hull(c, g);
    Json lifted = Json::array();
    for (const Vec& v : h.lifted) lifted.push_back(vec_to_json(v));
    return dump(Json{{"branch", h.branch}, {"form", form_to_json(h.form)}, {"dim", h.form.dim()}, {"lifted", lifted}});
  });
  m.def(
      "verify",
      [](int suite, std::uint64_t seed) {
        SuiteResult r;
        {
          py::gil_scoped_release nogil;
          r = run_suite(suite, seed);
        }
        py::dict d;
        d["id"] = r.id;
        d["name"] = r.name;
        d["checks"] = r.checks;
        d["failures"] = r.failures;
        d["seconds"] = r.seconds;
        d["passed"] = r.passed();
        d["first_failure"] = r.detail;
        return d;
      },
      py::arg("suite"), py::arg("seed") = kDefaultSeed);
  m.attr("SUITE_COUNT") = kSuiteCount;
}
