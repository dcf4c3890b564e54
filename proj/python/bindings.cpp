#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "svlie/bialgebra.hpp"
#include "svlie/classify.hpp"
#include "svlie/error.hpp"
#include "svlie/expr.hpp"
#include "svlie/linalg.hpp"
#include "svlie/table_io.hpp"

namespace py = pybind11;
using namespace svlie;

namespace {

// Accepts int, fractions.Fraction or a "p/q" string.
Rational to_rational(const py::handle& obj) {
  if (py::isinstance<py::str>(obj)) return parse_rational(obj.cast<std::string>());
  if (py::isinstance<py::int_>(obj)) return Rational(mpz_class(py::str(obj).cast<std::string>()));
  if (py::hasattr(obj, "numerator") && py::hasattr(obj, "denominator")) {
    Rational q(mpz_class(py::str(obj.attr("numerator")).cast<std::string>()),
               mpz_class(py::str(obj.attr("denominator")).cast<std::string>()));
    q.canonicalize();
    return q;
  }
  throw py::type_error("expected int, Fraction or str");
}

py::object to_fraction(const Rational& q) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(py::int_(py::str(q.get_num().get_str())), py::int_(py::str(q.get_den().get_str())));
}

HalfInt to_half(const py::handle& obj) {
  const Rational q = to_rational(obj);
  const Rational twice = 2 * q;
  if (twice.get_den() != 1 || !twice.get_num().fits_slong_p()) {
    throw py::value_error("expected an integer or half-integer");
  }
  return HalfInt::from_twice(twice.get_num().get_si());
}

py::object half_to_py(HalfInt h) { return to_fraction(h.to_rational()); }

template <class T, class ParseFn>
void bind_comb(py::module_& m, const char* name, ParseFn parse) {
  py::class_<T>(m, name)
      .def(py::init<>())
      .def(py::init([parse](const std::string& text) { return parse(text); }), py::arg("text"))
      .def("__str__", [](const T& x) { return format(x); })
      .def("__repr__", [name](const T& x) { return std::string(name) + "('" + format(x) + "')"; })
      .def("__eq__", [](const T& a, const T& b) { return a == b; })
      .def("__add__", [](const T& a, const T& b) { return a + b; })
      .def("__sub__", [](const T& a, const T& b) { return a - b; })
      .def("__neg__", [](const T& a) { return -a; })
      .def("__mul__", [](const T& a, const py::object& s) { return a * to_rational(s); })
      .def("__rmul__", [](const T& a, const py::object& s) { return a * to_rational(s); })
      .def("is_zero", &T::is_zero)
      .def("__len__", &T::size)
      .def("coefficients", [](const T& x) {
        py::dict d;
        for (const auto& [k, c] : x) d[py::str(format(T(k)))] = to_fraction(c);
        return d;
      });
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact computations on the Schrodinger-Virasoro Lie algebra";

  py::register_exception<Error>(m, "SvError", PyExc_ValueError);

  bind_comb<Element>(m, "Element", [](const std::string& s) { return parse_element(s); });
  bind_comb<Tensor2>(m, "Tensor2", [](const std::string& s) { return parse_tensor2(s); });
  bind_comb<Tensor3>(m, "Tensor3", [](const std::string& s) { return parse_tensor3(s); });

  m.def("bracket", py::overload_cast<const Element&, const Element&>(&bracket));
  m.def("act", [](const Element& x, const Tensor2& t) { return act(x, t); });
  m.def("act", [](const Element& x, const Tensor3& t) { return act(x, t); });
  m.def("twist", &twist);
  m.def("cyclic", &cyclic);
  m.def("is_skew", &is_skew);
  m.def("skew_part", &skew_part);
  m.def("yang_baxter_c", &yang_baxter_c);
  m.def("check_cybe", &check_cybe);
  m.def("check_mybe", &check_mybe);
  m.def("is_central", &is_central);
  m.def("degree_decompose", [](const Element& x) {
    py::dict d;
    for (const auto& [deg, part] : degree_decompose(x)) d[half_to_py(deg)] = part;
    return d;
  });

  py::class_<SpecialDerivation>(m, "SpecialDerivation")
      .def(py::init([](const py::object& a, const py::object& ad, const py::object& b,
                       const py::object& bd, const py::object& g, const py::object& gd) {
             return SpecialDerivation{to_rational(a), to_rational(ad), to_rational(b),
                                      to_rational(bd), to_rational(g), to_rational(gd)};
           }),
           py::arg("alpha") = 0, py::arg("alpha_dag") = 0, py::arg("beta") = 0,
           py::arg("beta_dag") = 0, py::arg("gamma") = 0, py::arg("gamma_dag") = 0)
      .def("is_d1", &SpecialDerivation::is_d1)
      .def("apply", [](const SpecialDerivation& d, const Element& x) { return special_apply(d, x); });

  py::class_<AxiomReport>(m, "AxiomReport")
      .def_readonly("image_skew", &AxiomReport::image_skew)
      .def_readonly("co_jacobi", &AxiomReport::co_jacobi)
      .def_readonly("compatibility", &AxiomReport::compatibility)
      .def("ok", &AxiomReport::ok)
      .def_property_readonly("counterexample", [](const AxiomReport& r) -> py::object {
        if (!r.counterexample) return py::none();
        py::list inputs;
        for (const auto& b : r.counterexample->inputs) inputs.append(format(b));
        const std::string defect =
            std::visit([](const auto& t) { return format(t); }, r.counterexample->defect);
        return py::make_tuple(to_string(r.counterexample->axiom), inputs, defect);
      });

  m.def(
      "check_axioms",
      [](const Tensor2& r, const SpecialDerivation& d, const py::object& window) {
        return check_axioms(CocommutatorSpec{r, d}, to_half(window));
      },
      py::arg("r") = Tensor2{}, py::arg("d") = SpecialDerivation{}, py::arg("window") = 6);

  m.def(
      "certify",
      [](const Tensor2& r, const SpecialDerivation& d, const py::object& window) {
        const Certificate c = certify(CocommutatorSpec{r, d}, to_half(window));
        return py::make_tuple(to_string(c.verdict), c.reason);
      },
      py::arg("r") = Tensor2{}, py::arg("d") = SpecialDerivation{}, py::arg("window") = 6);

  m.def("coboundary_identity_check", &coboundary_identity_check);

  m.def("invariant_tensors", [](int rank, const py::object& window) {
    py::list out;
    for (const auto& v : invariant_tensors(rank, to_half(window)))
      std::visit([&](const auto& t) { out.append(py::cast(t)); }, v);
    return out;
  });
  m.def("skew_action_space", [](const py::object& window) { return skew_action_space(to_half(window)); });

  m.def("highest_component", [](const Tensor2& r) {
    auto [p, top] = highest_component(r);
    return py::make_tuple(half_to_py(p), top);
  });
  m.def("classify", [](const Tensor2& r) {
    auto [p, top] = highest_component(r);
    py::list labels;
    for (const auto& l : classify_highest(top, p)) labels.append(l.str());
    return labels;
  });
  m.def(
      "search_cybe",
      [](const py::object& window, const std::vector<py::object>& coeffs, int max_terms, int jobs) {
        SearchConfig cfg{to_half(window), {}, max_terms, jobs};
        for (const auto& c : coeffs) cfg.coeffs.push_back(to_rational(c));
        py::gil_scoped_release release;
        return search_cybe(cfg);
      },
      py::arg("window"), py::arg("coeffs"), py::arg("max_terms") = 1, py::arg("jobs") = 1);
}
