#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ucnrot/airy.hpp"
#include "ucnrot/budget.hpp"
#include "ucnrot/constants.hpp"
#include "ucnrot/error.hpp"
#include "ucnrot/oracle.hpp"
#include "ucnrot/rotation.hpp"
#include "ucnrot/spectrum.hpp"
#include "ucnrot/wkb.hpp"

namespace py = pybind11;
using namespace ucnrot;

namespace {

ProfileSettings settings_for(const std::string& profile, std::optional<double> cos_alpha) {
  ProfileSettings p = load_profile(parse_profile(profile));
  if (cos_alpha) apply_overrides(p, {{"cos_alpha", *cos_alpha}});
  return p;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Gravitational UCN bouncer levels and their Earth-rotation shift.";

  py::register_exception<NumericalError>(m, "NumericalError", PyExc_RuntimeError);

  py::class_<PhysicalConstants>(m, "PhysicalConstants")
      .def_readwrite("hbar", &PhysicalConstants::hbar)
      .def_readwrite("m_neutron", &PhysicalConstants::m_neutron)
      .def_readwrite("c", &PhysicalConstants::c)
      .def_readwrite("g", &PhysicalConstants::g)
      .def_readwrite("omega_earth", &PhysicalConstants::omega_earth)
      .def_readwrite("earth_radius", &PhysicalConstants::earth_radius);

  py::class_<ReducedScales>(m, "ReducedScales")
      .def_readonly("l", &ReducedScales::l)
      .def_readonly("e", &ReducedScales::e);

  m.def("constants", [](const std::string& profile) {
    return default_constants(parse_profile(profile));
  }, py::arg("profile") = "codata");
  m.def("reduced_scales", &reduced_scales, py::arg("constants"));
  m.def("joules_to_peV", &joules_to_peV);
  m.def("peV_to_joules", &peV_to_joules);

  m.def("airy", [](double x) {
    const auto p = airy(x);
    return py::make_tuple(p.ai, p.ai_prime);
  }, py::arg("x"), "(Ai(x), Ai'(x))");
  m.def("airy_zero", [](long n) { return airy_zero(n).lambda; }, py::arg("n"),
        "lambda_n = -a_n, the n-th zero of Ai with the sign flipped");

  py::class_<BouncerLevel>(m, "BouncerLevel")
      .def_readonly("n", &BouncerLevel::n)
      .def_readonly("lambda_", &BouncerLevel::lambda)
      .def_readonly("E", &BouncerLevel::E)
      .def_readonly("H", &BouncerLevel::H)
      .def_readonly("z_avg", &BouncerLevel::z_avg)
      .def("__repr__", [](const BouncerLevel& b) {
        return "BouncerLevel(n=" + std::to_string(b.n) + ", E_peV=" +
               std::to_string(joules_to_peV(b.E)) + ")";
      });

  m.def("level", [](long n, const std::string& profile) {
    const auto k = default_constants(parse_profile(profile));
    return level(n, reduced_scales(k), k);
  }, py::arg("n"), py::arg("profile") = "codata");

  m.def("spectrum", [](long n_max, const std::string& profile) {
    const auto k = default_constants(parse_profile(profile));
    const auto s = reduced_scales(k);
    std::vector<BouncerLevel> out;
    for (long n = 1; n <= n_max; ++n) out.push_back(level(n, s, k));
    return out;
  }, py::arg("n_max"), py::arg("profile") = "codata");

  m.def("mean_height_quadrature", [](const BouncerLevel& b) {
    return mean_height_quadrature(b);
  }, py::arg("level"));

  m.def("fd_eigenvalues", [](int count, double xi_max, long points) {
    return fd_eigenvalues(GridSpec{xi_max, points}, count);
  }, py::arg("count"), py::arg("xi_max") = 30.0, py::arg("points") = 20000);

  m.def("relative_shift", [](double u1, const std::string& profile,
                             std::optional<double> cos_alpha) {
    const auto p = settings_for(profile, cos_alpha);
    return relative_shift(u1, make_lab_frame(p.cos_alpha, p.constants), p.constants);
  }, py::arg("u1"), py::arg("profile") = "codata", py::arg("cos_alpha") = py::none());

  m.def("rotation_shift", [](long n, double u1, const std::string& profile,
                             std::optional<double> cos_alpha) {
    const auto p = settings_for(profile, cos_alpha);
    const auto& k = p.constants;
    const auto r = rotation_shift(level(n, reduced_scales(k), k), u1,
                                  make_lab_frame(p.cos_alpha, k), k);
    return py::dict(py::arg("dE") = r.dE, py::arg("relative") = r.relative,
                    py::arg("state_independent_offset") = r.state_independent_offset);
  }, py::arg("n"), py::arg("u1"), py::arg("profile") = "codata",
     py::arg("cos_alpha") = py::none());

  m.def("crossover", [](bool paper_anchors, double u1, const std::string& profile,
                        std::optional<double> cos_alpha) -> py::object {
    WkbFit fit;
    if (paper_anchors) {
      fit = anchor_fit();
    } else {
      const auto p = settings_for(profile, cos_alpha);
      const auto& k = p.constants;
      fit = spectrum_fit(reduced_scales(k), k, make_lab_frame(p.cos_alpha, k), u1);
    }
    const auto c = crossover(fit);
    py::dict d(py::arg("A") = fit.A, py::arg("B") = fit.B);
    if (!c) return std::move(d);
    d["x_star"] = c->x_star;
    d["n_star"] = c->n_star;
    d["E_star"] = c->E_star;
    d["H_star"] = c->H_star;
    return std::move(d);
  }, py::arg("paper_anchors") = false, py::arg("u1") = 10.0, py::arg("profile") = "codata",
     py::arg("cos_alpha") = py::none());

  m.def("budget", [](long n, double u1, const std::string& profile) {
    const auto p = settings_for(profile, std::nullopt);
    const auto& k = p.constants;
    const auto lv = level(n, reduced_scales(k), k);
    const auto b = budget(lv, ansatz_from_velocity(lv, u1, 0.0, k),
                          make_lab_frame(p.cos_alpha, k), k);
    py::list rows;
    for (const auto& r : negligibility_report(b)) {
      rows.append(py::dict(py::arg("term") = r.term, py::arg("value") = r.value,
                           py::arg("ratio_to_ground") = r.ratio_to_ground,
                           py::arg("correction") = r.correction,
                           py::arg("flagged") = r.flagged));
    }
    return rows;
  }, py::arg("n") = 1, py::arg("u1") = 10.0, py::arg("profile") = "codata");
}
