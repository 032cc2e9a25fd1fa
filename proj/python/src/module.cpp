#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "natbdd/bdd.hpp"
#include "natbdd/bdd_format.hpp"
#include "natbdd/error.hpp"
#include "natbdd/natbits.hpp"
#include "natbdd/pairing.hpp"
#include "natbdd/ranking.hpp"
#include "natbdd/truthtab.hpp"

namespace py = pybind11;

// Python int <-> Nat through base-16 text.
namespace pybind11::detail {
template <>
struct type_caster<mpz_class> {
  PYBIND11_TYPE_CASTER(mpz_class, const_name("int"));

  bool load(handle src, bool) {
    if (!PyLong_Check(src.ptr())) return false;
    const int sign = PyObject_RichCompareBool(src.ptr(), py::int_(0).ptr(), Py_LT);
    if (sign < 0) throw error_already_set();
    if (sign == 1) throw py::value_error("expected a natural number, got a negative int");
    object hex = reinterpret_steal<object>(PyNumber_ToBase(src.ptr(), 16));
    if (!hex) throw error_already_set();
    const std::string text = hex.cast<std::string>();
    value.set_str(text.substr(2), 16);
    return true;
  }

  static handle cast(const mpz_class& n, return_value_policy, handle) {
    const std::string text = n.get_str(16);
    return PyLong_FromString(text.c_str(), nullptr, 16);
  }
};
}  // namespace pybind11::detail

namespace {

using namespace natbdd;

py::tuple as_tuple(const NatPair& p) { return py::make_tuple(p.first, p.second); }

BddKind kind_of(bool plain) { return plain ? BddKind::plain : BddKind::reduced; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Truth tables as naturals, pairing functions, BDD encoding and ranking";

  static py::exception<Error> natbdd_error(m, "NatBddError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetString(natbdd_error.ptr(),
                      (std::string(to_string(e.code())) + ": " + e.what()).c_str());
    }
  });

  m.attr("DEFAULT_MAX_VARS") = default_max_vars;

  py::class_<BddNode>(m, "BddNode")
      .def_static("leaf", &BddNode::leaf, py::arg("bit"))
      .def_static("ite", &BddNode::ite, py::arg("var"), py::arg("then_branch"),
                  py::arg("else_branch"))
      .def_property_readonly("is_leaf", &BddNode::is_leaf)
      .def_property_readonly("bit", [](const BddNode& n) -> py::object {
        return n.is_leaf() ? py::int_(n.bit() ? 1 : 0) : py::object(py::none());
      })
      .def_property_readonly("var", [](const BddNode& n) -> py::object {
        return n.is_leaf() ? py::object(py::none()) : py::int_(n.var());
      })
      .def_property_readonly("then_branch", [](const BddNode& n) -> py::object {
        return n.is_leaf() ? py::object(py::none()) : py::cast(n.then_branch());
      })
      .def_property_readonly("else_branch", [](const BddNode& n) -> py::object {
        return n.is_leaf() ? py::object(py::none()) : py::cast(n.else_branch());
      })
      .def("size", &BddNode::size)
      .def("__eq__", [](const BddNode& a, const BddNode& b) { return a == b; });

  py::class_<Bdd>(m, "Bdd")
      .def(py::init<VarCount, BddNode>(), py::arg("vars"), py::arg("root"))
      .def_property_readonly("vars", &Bdd::vars)
      .def_property_readonly("root", &Bdd::root)
      .def("to_sexp", &to_sexp)
      .def("to_json", &to_json)
      .def_static("parse", &parse_bdd, py::arg("text"))
      .def("__eq__", [](const Bdd& a, const Bdd& b) { return a == b; })
      .def("__str__", &to_sexp)
      .def("__repr__", [](const Bdd& b) { return "Bdd('" + to_sexp(b) + "')"; });

  m.def("to_rbits", [](const Nat& n) {
    const BitList bits = to_rbits(n);
    return std::vector<int>(bits.begin(), bits.end());
  });
  m.def("from_rbits", [](const std::vector<int>& bits) {
    BitList list;
    list.reserve(bits.size());
    for (int b : bits) {
      if (b != 0 && b != 1) throw Error(Errc::invalid_bit, "bits must be 0 or 1");
      list.push_back(static_cast<std::uint8_t>(b));
    }
    return from_rbits(list);
  });
  m.def("two_adic_valuation", &two_adic_valuation);
  m.def("odd_part", &odd_part);

  m.def("cantor_pair", &cantor_pair);
  m.def("cantor_unpair", [](const Nat& z) { return as_tuple(cantor_unpair(z)); });
  m.def("pepis_pair", &pepis_pair);
  m.def("pepis_unpair", [](const Nat& z) { return as_tuple(pepis_unpair(z)); });
  m.def("bitmerge_pair", &bitmerge_pair);
  m.def("bitmerge_unpair", [](const Nat& z) { return as_tuple(bitmerge_unpair(z)); });
  m.def(
      "pair",
      [](const std::string& scheme, const Nat& x, const Nat& y) {
        auto s = parse_pair_scheme(scheme);
        if (!s) throw py::value_error("unknown pairing scheme '" + scheme + "'");
        return pair(*s, x, y);
      },
      py::arg("scheme"), py::arg("x"), py::arg("y"));
  m.def(
      "unpair",
      [](const std::string& scheme, const Nat& z) {
        auto s = parse_pair_scheme(scheme);
        if (!s) throw py::value_error("unknown pairing scheme '" + scheme + "'");
        return as_tuple(unpair(*s, z));
      },
      py::arg("scheme"), py::arg("z"));

  m.def("all_ones_mask", &all_ones_mask, py::arg("nv"), py::arg("max_vars") = default_max_vars);
  m.def("var_tt", &var_tt, py::arg("nv"), py::arg("k"), py::arg("max_vars") = default_max_vars);
  m.def("ite_tt", &ite_tt);
  m.def(
      "shannon_split",
      [](VarCount nv, const Nat& x, VarCount max_vars) {
        return as_tuple(shannon_split(nv, x, max_vars));
      },
      py::arg("nv"), py::arg("x"), py::arg("max_vars") = default_max_vars);
  m.def("shannon_fuse", &shannon_fuse, py::arg("nv"), py::arg("hi"), py::arg("lo"),
        py::arg("max_vars") = default_max_vars);
  m.def("semantic_eval", [](const Bdd& b, const std::vector<int>& values) {
    Assignment a;
    for (int v : values) {
      if (v != 0 && v != 1) throw Error(Errc::invalid_bit, "assignment values must be 0 or 1");
      a.push_back(static_cast<std::uint8_t>(v));
    }
    return semantic_eval(b, a) ? 1 : 0;
  });
  m.def("truth_table_of", &truth_table_of, py::arg("bdd"),
        py::arg("max_vars") = default_max_vars);

  m.def("plain_bdd", &plain_bdd, py::arg("nv"), py::arg("tt"),
        py::arg("max_vars") = default_max_vars);
  m.def("reduce", &reduce);
  m.def("reduced_bdd", &reduced_bdd, py::arg("nv"), py::arg("tt"),
        py::arg("max_vars") = default_max_vars);
  m.def("plain_inverse_bdd", &plain_inverse_bdd);
  m.def("ev", &ev, py::arg("bdd"), py::arg("max_vars") = default_max_vars);
  m.def("is_reduced", &is_reduced);

  m.def("bsum", &bsum, py::arg("n"), py::arg("max_vars") = default_max_vars);
  m.def("to_bsum", [](const Nat& n) {
    const RankPair rp = to_bsum(n);
    return py::make_tuple(rp.vars, rp.index);
  });
  m.def("nat2plain_bdd", &nat2plain_bdd, py::arg("n"), py::arg("max_vars") = default_max_vars);
  m.def("nat2bdd", &nat2bdd, py::arg("n"), py::arg("max_vars") = default_max_vars);
  m.def("plain_bdd2nat", &plain_bdd2nat, py::arg("bdd"),
        py::arg("max_vars") = default_max_vars);
  m.def("bdd2nat", &bdd2nat, py::arg("bdd"), py::arg("max_vars") = default_max_vars);
  m.def(
      "enumerate",
      [](const Nat& start, const Nat& count, bool plain, VarCount max_vars) {
        std::vector<Bdd> out;
        for (const Bdd& b : natbdd::enumerate(kind_of(plain), start, count, max_vars)) {
          out.push_back(b);
        }
        return out;
      },
      py::arg("start"), py::arg("count"), py::arg("plain") = false,
      py::arg("max_vars") = default_max_vars);
}
