#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "akdefect/abacus.hpp"
#include "akdefect/errors.hpp"
#include "akdefect/extensions.hpp"
#include "akdefect/scan.hpp"
#include "akdefect/schur.hpp"
#include "akdefect/weight.hpp"

namespace py = pybind11;
using namespace akdefect;

namespace {

Multipartition mp_of(const std::string& text) { return parse_multipartition(text); }

int window_for(const Multipartition& mp, const Multicharge& s, std::optional<int> window) {
  return window ? *window : default_window(mp, s);
}

}  // namespace

PYBIND11_MODULE(_akdefect, m) {
  m.doc() = "Schur elements, defects, weights and cores of Ariki-Koike algebras";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<InvalidArgument>(m, "InvalidArgument", base.ptr());
  py::register_exception<BadSpecialisation>(m, "BadSpecialisation", base.ptr());
  py::register_exception<InexactDivision>(m, "InexactDivision", base.ptr());
  py::register_exception<InvariantViolation>(m, "InvariantViolation", base.ptr());

  m.def("normalize", [](const std::string& mp) { return format_multipartition(mp_of(mp)); }, py::arg("mp"));
  m.def("multipartitions", [](int l, int n) {
    std::vector<std::string> out;
    for (const auto& mp : enumerate_multipartitions(l, n)) out.push_back(format_multipartition(mp));
    return out;
  }, py::arg("l"), py::arg("n"));

  m.def("beta_numbers", [](const std::vector<int>& parts, int charge, int window) {
    return beta_numbers(Partition(parts), charge, window);
  }, py::arg("parts"), py::arg("charge"), py::arg("window"));

  m.def("charged_hooks", [](const std::string& mp, const Multicharge& s, bool diagonal, std::optional<int> window) {
    Multipartition x = mp_of(mp);
    return charged_hooks_abacus(multi_beta(x, s, window_for(x, s, window)), diagonal).values.values();
  }, py::arg("mp"), py::arg("charge"), py::arg("diagonal") = true, py::arg("window") = py::none());

  m.def("residue_vector", [](const std::string& mp, const Multicharge& s, int e) {
    return residue_vector(mp_of(mp), s, e).counts;
  }, py::arg("mp"), py::arg("charge"), py::arg("e"));

  m.def("fayers_weight", [](const std::string& mp, const Multicharge& s, int e) {
    return fayers_weight(mp_of(mp), s, e);
  }, py::arg("mp"), py::arg("charge"), py::arg("e"));

  m.def("uglov_weight", [](const std::string& mp, const Multicharge& s, int e, std::optional<int> window) {
    Multipartition x = mp_of(mp);
    return uglov_weight(x, s, window_for(x, s, window), e);
  }, py::arg("mp"), py::arg("charge"), py::arg("e"), py::arg("window") = py::none());

  m.def("core", [](const std::string& mp, const Multicharge& s, int e, std::optional<int> window) {
    Multipartition x = mp_of(mp);
    CoreResult c = core(x, s, window_for(x, s, window), e);
    py::dict d;
    d["core"] = format_multipartition(c.core);
    d["charges"] = c.charges;
    d["weight"] = c.weight;
    return d;
  }, py::arg("mp"), py::arg("charge"), py::arg("e"), py::arg("window") = py::none());

  m.def("defect_integer", [](const std::string& mp, const Multicharge& s, int e) {
    return defect_integer(mp_of(mp), s, e);
  }, py::arg("mp"), py::arg("charge"), py::arg("e"));

  m.def("defect_general", [](const std::string& mp, const std::vector<int>& rcharges, int order, int t, int qexp,
                             bool twist) {
    Multipartition x = mp_of(mp);
    CycloSpec spec;
    spec.level = x.level();
    spec.charges = rcharges;
    spec.q_exponent = qexp;
    spec.eta = RootOfUnity(order, t);
    spec.root_twist = twist;
    return defect_general(x, spec);
  }, py::arg("mp"), py::arg("rcharges"), py::arg("order"), py::arg("t"), py::arg("qexp") = 1,
        py::arg("twist") = true);

  m.def("schur_factors", [](const std::string& mp) { return schur_factors(mp_of(mp)).to_json(); }, py::arg("mp"));
  m.def("schur_string", [](const std::string& mp) { return schur_factors(mp_of(mp)).to_string(); }, py::arg("mp"));
  m.def("specialize_integer", [](const std::string& mp, const Multicharge& s) {
    return specialize_integer(mp_of(mp), s).to_string();
  }, py::arg("mp"), py::arg("charge"));

  m.def("dm_classes", [](int order, const std::vector<int>& params, int u, int n) {
    std::vector<RootOfUnity> xi;
    for (int t : params) xi.emplace_back(order, t);
    return dipper_mathas_classes(xi, RootOfUnity(order, u), n);
  }, py::arg("order"), py::arg("params"), py::arg("u"), py::arg("n"));

  m.def("sigma", [](const std::string& mp, int d) { return format_multipartition(sigma(mp_of(mp), d)); },
        py::arg("mp"), py::arg("d"));
  m.def("yokonuma_defect", [](const std::string& mp, int d, int l, const Multicharge& s, int e) {
    return yokonuma_defect(mp_of(mp), d, l, s, e);
  }, py::arg("mp"), py::arg("d"), py::arg("l"), py::arg("charge"), py::arg("e"));

  m.def("scan", [](int l, int n, int e, const Multicharge& s, int jobs, std::optional<int> p) {
    ScanOptions o;
    o.level = l;
    o.rank = n;
    o.e = e;
    o.charge = s;
    o.jobs = jobs;
    o.p = p;
    ScanReport r;
    {
      py::gil_scoped_release release;
      r = run_scan(o);
    }
    return r.to_json();
  }, py::arg("l"), py::arg("n"), py::arg("e"), py::arg("charge"), py::arg("jobs") = 1, py::arg("p") = py::none());
}
