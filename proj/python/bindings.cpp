#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include <sstream>

#include "polycrystal/cli.hpp"
#include "polycrystal/io.hpp"
#include "polycrystal/oracle.hpp"
#include "polycrystal/realization.hpp"
#include "polycrystal/special.hpp"

namespace py = pybind11;
using namespace polycrystal;

namespace {

CartanData cartan_of(const std::string& family) { return build_cartan(FamilySpec::parse(family)); }

IotaSequence iota_of(const std::string& family, const std::optional<std::string>& iota) {
  auto c = cartan_of(family);
  return iota ? IotaSequence::parse(c, *iota) : IotaSequence::standard(c);
}

std::map<Int, Int> sparse_dict(const SparseVec& v) {
  std::map<Int, Int> out;
  for (const auto& [k, c] : v.terms()) out[k] = c;
  return out;
}

py::dict positivity_dict(const PositivityReport& r) {
  py::dict d;
  d["pass"] = r.pass;
  d["conclusive"] = r.conclusive;
  py::list v;
  for (const auto& x : r.violations) v.append(py::make_tuple(x.form.to_string(), x.position));
  d["violations"] = v;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Polyhedral realizations of crystal bases";

  auto base = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<NotAmple>(m, "NotAmple", base.ptr());
  py::register_exception<NotFiniteType>(m, "NotFiniteType", base.ptr());
  py::register_exception<IncompleteEnumeration>(m, "IncompleteEnumeration", base.ptr());
  py::register_exception<StrictPositivityViolated>(m, "StrictPositivityViolated", base.ptr());

  py::class_<CartanData>(m, "Cartan")
      .def(py::init(&cartan_of), py::arg("family"))
      .def_static("from_json", &cartan_from_json)
      .def_property_readonly("rank", &CartanData::rank)
      .def_property_readonly("matrix", &CartanData::matrix)
      .def_property_readonly("symmetrizer", &CartanData::symmetrizers)
      .def("pairing", &CartanData::pairing)
      .def("to_json", &cartan_to_json);

  py::class_<IotaSequence>(m, "Iota")
      .def(py::init(&iota_of), py::arg("family"), py::arg("iota") = std::nullopt)
      .def_property_readonly("period", &IotaSequence::period)
      .def("at", &IotaSequence::at)
      .def("k_plus", &IotaSequence::k_plus)
      .def("k_minus", &IotaSequence::k_minus)
      .def("first", &IotaSequence::first)
      .def("__str__", &IotaSequence::display);

  py::class_<LinForm>(m, "LinForm")
      .def_readonly("constant", &LinForm::constant)
      .def_property_readonly("coeffs", [](const LinForm& f) { return sparse_dict(f.x); })
      .def_property_readonly("lambda_coeffs", [](const LinForm& f) { return sparse_dict(f.lambda); })
      .def("evaluate",
           [](const LinForm& f, const std::vector<Int>& x, const std::vector<Int>& lam) {
             return lam.empty() ? f.evaluate(x) : f.evaluate(x, Weight(lam));
           },
           py::arg("x"), py::arg("lam") = std::vector<Int>{})
      .def("inequality", &LinForm::inequality)
      .def("__str__", &LinForm::to_string)
      .def("__repr__", [](const LinForm& f) { return "LinForm(" + f.to_string() + ")"; })
      .def(py::self == py::self);

  py::class_<FormSet>(m, "FormSet")
      .def_readonly("forms", &FormSet::forms)
      .def_readonly("truncated", &FormSet::truncated)
      .def_readonly("support_bound", &FormSet::support_bound)
      .def_readonly("zero_beyond", &FormSet::zero_beyond)
      .def("__len__", &FormSet::size)
      .def("to_json", &formset_to_json)
      .def_static("from_json", &formset_from_json);

  py::class_<RealizationResult>(m, "Realization")
      .def_property_readonly("elements",
                             [](const RealizationResult& r) {
                               std::vector<std::vector<Int>> out;
                               for (const auto& x : r.elements) out.push_back(x.entries());
                               return out;
                             })
      .def_readonly("complete", &RealizationResult::complete)
      .def_readonly("depth_used", &RealizationResult::depth_used)
      .def_readonly("by_weight", &RealizationResult::by_weight)
      .def("__len__", &RealizationResult::size)
      .def("multiplicity", &weight_multiplicity, py::arg("m"))
      .def("to_json", &realization_to_json)
      .def_static("from_json", &realization_from_json);

  m.def("rank2_system", &rank2_system, py::arg("c1"), py::arg("c2"), py::arg("window") = std::nullopt);
  m.def("an_system", &an_system, py::arg("n"));
  m.def(
      "affine_a_system",
      [](int n, int rows, Int k_bound) {
        AffineSystemOptions o;
        o.row_bound = rows;
        o.middle_rows = rows;
        o.k_bound = k_bound;
        return affine_a_system(n, o);
      },
      py::arg("n"), py::arg("rows") = 4, py::arg("k_bound") = 8);
  m.def(
      "xi_lambda_set",
      [](const IotaSequence& s, Int window, Int support) {
        ClosureBounds b;
        b.support_bound = support;
        return xi_lambda_set(s, window, b);
      },
      py::arg("iota"), py::arg("window") = 10, py::arg("support") = 24);

  m.def("s_plain", &s_plain, py::arg("iota"), py::arg("form"), py::arg("k"));
  m.def("s_hat", &s_hat, py::arg("iota"), py::arg("form"), py::arg("k"));
  m.def("xi_form", &xi_form, py::arg("iota"), py::arg("i"));
  m.def("var", [](Int k) { return LinForm::var(k); }, py::arg("k"));

  m.def(
      "enumerate",
      [](const IotaSequence& s, const std::vector<Int>& lam, Int depth, int threads) {
        EnumerateOptions o;
        o.depth_cap = depth;
        o.threads = threads;
        py::gil_scoped_release release;
        return enumerate_blambda(s, Weight(lam), nullptr, o);
      },
      py::arg("iota"), py::arg("lam"), py::arg("depth") = 64, py::arg("threads") = 1);

  m.def(
      "lr_coefficient",
      [](const IotaSequence& s, const std::vector<Int>& lam, const std::vector<Int>& mu, const std::vector<Int>& nu) {
        EnumerateOptions o;
        return lr_coefficient(s, Weight(lam), Weight(mu), Weight(nu), o);
      },
      py::arg("iota"), py::arg("lam"), py::arg("mu"), py::arg("nu"));

  m.def(
      "epsilon_star",
      [](const IotaSequence& s, const std::vector<Int>& x, int i, Int support) {
        ClosureBounds b;
        b.support_bound = support;
        return epsilon_star(s, LatticePoint(x), i, b);
      },
      py::arg("iota"), py::arg("x"), py::arg("i"), py::arg("support") = 24);

  m.def(
      "check_strict_positivity",
      [](const IotaSequence& s, Int window, Int support) {
        ClosureBounds b;
        b.support_bound = support;
        return positivity_dict(check_strict_positivity(s, window, b));
      },
      py::arg("iota"), py::arg("window") = 10, py::arg("support") = 24);

  m.def(
      "check_ample",
      [](const IotaSequence& s, const std::vector<Int>& lam, Int window, Int support) {
        ClosureBounds b;
        b.support_bound = support;
        auto r = check_ample(s, Weight(lam), window, b);
        py::dict d;
        d["ample"] = r.ample;
        d["conclusive"] = r.conclusive;
        d["witness"] = r.witness ? py::cast(r.witness->to_string()) : py::none();
        return d;
      },
      py::arg("iota"), py::arg("lam"), py::arg("window") = 10, py::arg("support") = 24);

  m.def(
      "weyl_dim",
      [](const CartanData& c, const std::vector<Int>& lam) { return oracle::weyl_dim(oracle::RootSystem(c), Weight(lam)); },
      py::arg("cartan"), py::arg("lam"));
  m.def(
      "freudenthal",
      [](const CartanData& c, const std::vector<Int>& lam, const std::vector<Int>& m) {
        return oracle::freudenthal(oracle::RootSystem(c), Weight(lam), m);
      },
      py::arg("cartan"), py::arg("lam"), py::arg("m"));
  m.def(
      "char_product_lr",
      [](const CartanData& c, const std::vector<Int>& lam, const std::vector<Int>& mu, const std::vector<Int>& nu) {
        return oracle::char_product_lr(oracle::RootSystem(c), Weight(lam), Weight(mu), Weight(nu));
      },
      py::arg("cartan"), py::arg("lam"), py::arg("mu"), py::arg("nu"));

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
