#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "daanneal/exact.hpp"
#include "daanneal/harness.hpp"
#include "daanneal/io.hpp"
#include "daanneal/landscape.hpp"
#include "daanneal/report.hpp"
#include "daanneal/schedules.hpp"
#include "daanneal/verify.hpp"

namespace py = pybind11;
using namespace daanneal;

namespace {

// Reports are produced as JSON by the library; hand them to Python as dicts.
py::object to_python(const nlohmann::json& doc) {
  return py::module_::import("json").attr("loads")(doc.dump());
}

py::array_t<double> to_array(const std::vector<double>& v) {
  py::array_t<double> out(std::vector<py::ssize_t>{static_cast<py::ssize_t>(v.size())});
  std::copy(v.begin(), v.end(), out.mutable_data());
  return out;
}

SpinConfiguration to_configuration(const std::vector<int>& spins) { return SpinConfiguration::from_spins(spins); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Parallel-trial (Digital Annealer) Markov chain analysis for Ising instances";

  py::register_exception<InstanceFormatError>(m, "InstanceFormatError", PyExc_ValueError);

  py::class_<IsingInstance>(m, "IsingInstance")
      .def(py::init([](std::size_t n, const std::vector<std::tuple<Vertex, Vertex, double>>& couplings,
                       const std::vector<double>& fields) {
             std::vector<Coupling> c;
             for (const auto& [x, y, v] : couplings) c.push_back({x, y, v});
             return IsingInstance(n, std::move(c), fields);
           }),
           py::arg("n"), py::arg("couplings") = std::vector<std::tuple<Vertex, Vertex, double>>{},
           py::arg("fields") = std::vector<double>{})
      .def_property_readonly("n", &IsingInstance::size)
      .def_property_readonly("fields", [](const IsingInstance& i) {
        return std::vector<double>(i.fields().begin(), i.fields().end());
      })
      .def_property_readonly("couplings",
                             [](const IsingInstance& i) {
                               std::vector<std::tuple<Vertex, Vertex, double>> out;
                               for (const auto& c : i.couplings()) out.emplace_back(c.x, c.y, c.value);
                               return out;
                             })
      .def("is_integral", &IsingInstance::is_integral)
      .def("energy", [](const IsingInstance& i, const std::vector<int>& s) { return energy(i, to_configuration(s)); })
      .def("energy_cost",
           [](const IsingInstance& i, const std::vector<int>& s, Vertex x) { return energy_cost(i, to_configuration(s), x); })
      .def("to_text", &format_instance)
      .def("__eq__", [](const IsingInstance& a, const IsingInstance& b) { return a == b; })
      .def("__repr__", [](const IsingInstance& i) {
        return "<IsingInstance n=" + std::to_string(i.size()) + " couplings=" + std::to_string(i.couplings().size()) + ">";
      });

  m.def("parse_instance", &parse_instance, py::arg("path"));
  m.def("parse_instance_text", [](const std::string& text) { return parse_instance_text(text); }, py::arg("text"));

  m.def(
      "transition_matrix",
      [](const IsingInstance& inst, double beta, const std::string& kernel) {
        const auto chain = build_chain(inst, beta, parse_kernel(kernel));
        const auto states = static_cast<py::ssize_t>(chain.states());
        py::array_t<double> out({states, states});
        std::copy(chain.matrix.begin(), chain.matrix.end(), out.mutable_data());
        return out;
      },
      py::arg("instance"), py::arg("beta"), py::arg("kernel") = "da",
      "Dense transition matrix indexed by configuration rank (bit i set iff spin i is +1).");
  m.def(
      "stationary",
      [](const IsingInstance& inst, double beta, const std::string& kernel) {
        return to_array(stationary(build_chain(inst, beta, parse_kernel(kernel))).pi);
      },
      py::arg("instance"), py::arg("beta"), py::arg("kernel") = "da");
  m.def(
      "gibbs", [](const IsingInstance& inst, double beta) { return to_array(gibbs(inst, beta)); }, py::arg("instance"),
      py::arg("beta"));
  m.def(
      "r_factor",
      [](const IsingInstance& inst, const std::vector<int>& s, Vertex x, double beta) {
        return r_factor(inst, to_configuration(s), x, beta);
      },
      py::arg("instance"), py::arg("spins"), py::arg("x"), py::arg("beta"));
  m.def(
      "stationary_report",
      [](const IsingInstance& inst, double beta, const std::string& kernel) {
        return to_python(stationary_report(inst, beta, parse_kernel(kernel)));
      },
      py::arg("instance"), py::arg("beta"), py::arg("kernel") = "da");

  m.def(
      "landscape", [](const IsingInstance& inst) { return to_python(to_json(minima_depths(inst))); },
      py::arg("instance"));

  m.def(
      "classify",
      [](const std::string& spec, double gamma_star) {
        return to_python(classify_report(parse_schedule(spec), gamma_star, {10, 100, 1000, 10000, 100000, 1000000}));
      },
      py::arg("schedule"), py::arg("gamma_star"));

  m.def(
      "anneal",
      [](const IsingInstance& inst, const std::string& schedule, std::uint64_t steps, std::uint64_t replicas,
         std::uint64_t seed, const std::string& kernel, std::uint64_t record_stride, const std::string& init,
         const std::string& initial_state, bool occupation, unsigned threads) {
        RunConfig config{.instance = inst, .schedule = parse_schedule(schedule)};
        config.kernel = parse_kernel(kernel);
        config.steps = steps;
        config.replicas = replicas;
        config.seed = seed;
        config.record_stride = record_stride;
        config.initial = parse_initial_state(init);
        if (!initial_state.empty()) config.given_state = parse_spins(initial_state);
        config.track_success = inst.size() <= kMaxLandscapeVertices;
        config.track_occupation = occupation;
        config.threads = threads;
        RunTrace trace;
        {
          py::gil_scoped_release release;
          trace = run_annealing(config);
        }
        return to_python(to_json(config, trace));
      },
      py::arg("instance"), py::arg("schedule"), py::arg("steps"), py::arg("replicas"), py::arg("seed"),
      py::arg("kernel") = "da", py::arg("record_stride") = 1, py::arg("init") = "uniform-random",
      py::arg("initial_state") = "", py::arg("occupation") = false, py::arg("threads") = 0);

  m.def(
      "verify",
      [](const IsingInstance& inst, double beta) {
        const auto report = verify_instance(inst, beta);
        py::list checks;
        for (const auto& c : report.checks) {
          py::dict d;
          d["name"] = c.name;
          d["passed"] = c.passed;
          d["skipped"] = c.skipped;
          d["max_error"] = c.max_error;
          d["detail"] = c.detail;
          checks.append(d);
        }
        py::dict out;
        out["passed"] = report.passed();
        out["checks"] = checks;
        return out;
      },
      py::arg("instance"), py::arg("beta"));
}
