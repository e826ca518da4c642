#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "toricmf/error.hpp"
#include "toricmf/fan.hpp"
#include "toricmf/ideal_gens.hpp"
#include "toricmf/macaulayfication.hpp"
#include "toricmf/oracle.hpp"
#include "toricmf/report.hpp"

namespace py = pybind11;

// Python int <-> Int through the decimal representation.
namespace pybind11::detail {
template <>
struct type_caster<toricmf::Int> {
  PYBIND11_TYPE_CASTER(toricmf::Int, const_name("int"));

  bool load(handle src, bool convert) {
    if (!src) return false;
    if (!PyLong_Check(src.ptr())) {
      if (!convert || !PyIndex_Check(src.ptr())) return false;
    }
    object idx = reinterpret_steal<object>(PyNumber_Index(src.ptr()));
    if (!idx) {
      PyErr_Clear();
      return false;
    }
    value = toricmf::Int(py::str(idx).cast<std::string>());
    return true;
  }

  static handle cast(const toricmf::Int& v, return_value_policy, handle) {
    return PyLong_FromString(v.str().c_str(), nullptr, 10);
  }
};
}  // namespace pybind11::detail

namespace {

using namespace toricmf;

py::tuple pair(const IntPair& v) { return py::make_tuple(v.s, v.p); }

py::tuple basis(const Basis2& b) { return py::make_tuple(pair(b.e_minus1), pair(b.e_0)); }

py::dict monomial(const Monomial& m) {
  py::dict d;
  d["z"] = m.e_z;
  d["y"] = m.e_y;
  d["x"] = m.e_x;
  return d;
}

py::dict element(const SemigroupElement& e) {
  py::dict d;
  d["coords"] = e.coords;
  if (e.tors) d["tors"] = *e.tors;
  return d;
}

std::string analyze(const std::string& spec_text, bool verify, const Int& max_degree,
                    const std::vector<std::string>& orders) {
  AnalyzeOptions opt;
  opt.verify = verify;
  opt.verify_options.bound = max_degree;
  if (!orders.empty()) {
    opt.verify_options.orders.clear();
    for (const auto& o : orders) opt.verify_options.orders.push_back(parse_tie_break(o));
  }
  return render_structured(run_analyze(parse_input(spec_text), opt));
}

py::list generators(const std::string& spec_text) {
  const auto spec = parse_input(spec_text);
  const auto rep = emit_generators(build_fan(spec, lattice_ltilde(spec)), spec);
  py::list out;
  for (std::size_t k = 0; k < rep.generators.size(); ++k) {
    const auto& g = rep.generators[k];
    py::dict d;
    d["text"] = render(g);
    d["form"] = to_string(g.form);
    d["lhs"] = monomial(g.lhs);
    d["rhs"] = monomial(g.rhs);
    d["lattice_vector"] = pair(rep.lattice_vectors[k]);
    out.append(d);
  }
  return out;
}

py::dict fan(const std::string& spec_text) {
  const auto spec = parse_input(spec_text);
  const auto f = build_fan(spec, lattice_ltilde(spec));
  py::dict d;
  d["m"] = f.m;
  d["q"] = f.q;
  d["s"] = f.s_seq;
  d["p"] = f.p_seq;
  py::list eps;
  for (const auto& e : f.eps) eps.append(pair(e));
  d["eps"] = eps;
  d["r"] = f.r;
  d["nu"] = f.nu;
  d["mu_neg"] = f.mu_neg;
  d["invariants_ok"] = fan_invariants(f, spec).ok;
  return d;
}

std::optional<py::tuple> member(const std::string& spec_text, const std::vector<Int>& coords,
                                const std::optional<std::vector<Int>>& tors) {
  const auto spec = parse_input(spec_text);
  const auto r = semigroup_member({coords, tors}, spec);
  if (!r) return std::nullopt;
  return py::make_tuple(r->e_z, r->e_y, r->m);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Defining binomials and Macaulayfication of simplicial codimension-two semigroup rings";

  py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
  py::register_exception<ResourceLimit>(m, "ResourceLimit", PyExc_RuntimeError);

  m.def("analyze", &analyze, py::arg("spec"), py::arg("verify") = false, py::arg("max_degree") = Int(12),
        py::arg("orders") = std::vector<std::string>{}, "Full report as a JSON document.");
  m.def(
      "ext_gcd",
      [](const Int& a, const Int& b) {
        const auto r = ext_gcd(a, b);
        return py::make_tuple(r.g, r.u, r.v);
      },
      py::arg("a"), py::arg("b"));
  m.def(
      "normalize_basis",
      [](std::pair<Int, Int> v1, std::pair<Int, Int> v2) {
        return basis(normalize_basis({v1.first, v1.second}, {v2.first, v2.second}));
      },
      py::arg("v1"), py::arg("v2"));
  m.def(
      "kernel_of_pair_map",
      [](const std::vector<Int>& col_s, const std::vector<Int>& col_p, const std::vector<Int>& moduli) {
        return basis(kernel_of_pair_map(col_s, col_p, FiniteAbelianGroup{moduli}));
      },
      py::arg("col_s"), py::arg("col_p"), py::arg("moduli"));
  m.def(
      "hj_expand",
      [](const Int& s_minus1, const Int& s0) {
        const auto h = hj_expand(s_minus1, s0);
        return py::make_tuple(h.q, h.s);
      },
      py::arg("s_minus1"), py::arg("s0"));
  m.def(
      "parse_input",
      [](const std::string& text) {
        const auto spec = parse_input(text);
        py::dict d;
        d["a"] = spec.a;
        d["b"] = spec.b;
        d["c"] = spec.c;
        return d;
      },
      py::arg("text"), "Validates a problem document and echoes a, b, c.");
  m.def(
      "lattice_ltilde", [](const std::string& spec) { return basis(lattice_ltilde(parse_input(spec))); },
      py::arg("spec"));
  m.def("build_fan", &fan, py::arg("spec"));
  m.def("generators", &generators, py::arg("spec"));
  m.def("semigroup_member", &member, py::arg("spec"), py::arg("coords"), py::arg("tors") = py::none());
  m.def(
      "in_lattice",
      [](const std::string& spec, const std::vector<Int>& w) { return in_lattice(w, parse_input(spec)); },
      py::arg("spec"), py::arg("w"), "w is laid out as (x_1..x_n, z, y).");
  m.def(
      "new_semigroup_generators",
      [](const std::string& spec_text) {
        const auto spec = parse_input(spec_text);
        py::list out;
        for (const auto& e : new_semigroup_generators(build_fan(spec, lattice_ltilde(spec)), spec)) {
          out.append(element(e));
        }
        return out;
      },
      py::arg("spec"));
}
