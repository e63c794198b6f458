#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "scsk/cli.hpp"
#include "scsk/instance.hpp"
#include "scsk/oracle.hpp"
#include "scsk/solver.hpp"

namespace py = pybind11;

namespace {

scsk::Instance make_instance(const std::vector<std::string>& strings, long long k) {
  std::vector<scsk::Sequence> seqs;
  seqs.reserve(strings.size());
  for (const auto& s : strings) seqs.push_back(scsk::decode_utf8(s));
  return scsk::Instance(std::move(seqs), k);
}

std::vector<std::string> instance_strings(const scsk::Instance& inst) {
  std::vector<std::string> out;
  for (const auto& s : inst.strings()) out.push_back(scsk::encode_utf8(s));
  return out;
}

const char* kind_name(scsk::ViolationKind kind) {
  switch (kind) {
    case scsk::ViolationKind::substring: return "substring";
    case scsk::ViolationKind::duplicate: return "duplicate";
    case scsk::ViolationKind::empty: return "empty";
  }
  return "unknown";
}

}  // namespace

PYBIND11_MODULE(_scsk, m) {
  m.doc() = "Exact shortest common superstring with one mismatch-tolerant string";

  auto base = py::register_exception<scsk::Error>(m, "Error", PyExc_ValueError);
  py::register_exception<scsk::ValidationError>(m, "ValidationError", base.ptr());
  py::register_exception<scsk::InputError>(m, "InputError", base.ptr());
  py::register_exception<scsk::OracleLimitError>(m, "OracleLimitError", base.ptr());
  py::register_exception<scsk::GenerationError>(m, "GenerationError", base.ptr());

  py::class_<scsk::Instance>(m, "Instance")
      .def(py::init(&make_instance), py::arg("strings"), py::arg("k") = 0)
      .def_property_readonly("strings", &instance_strings)
      .def_property_readonly("k", &scsk::Instance::k)
      .def_property_readonly("n", &scsk::Instance::n)
      .def_property_readonly("c", &scsk::Instance::c)
      .def_property_readonly("total_len", &scsk::Instance::total_len)
      .def("with_budget", &scsk::Instance::with_budget, py::arg("k"))
      .def("serialize", [](const scsk::Instance& inst) { return scsk::serialize(inst); })
      .def("__repr__", [](const scsk::Instance& inst) {
        return "Instance(n=" + std::to_string(inst.n()) + ", k=" + std::to_string(inst.k()) + ")";
      });

  py::class_<scsk::Solution>(m, "Solution")
      .def_readonly("length", &scsk::Solution::length)
      .def_readonly("m_index", &scsk::Solution::m_index)
      .def_property_readonly("arrangement",
                             [](const scsk::Solution& s) { return scsk::to_string(s.arrangement.kind); })
      .def_property_readonly("witness",
                             [](const scsk::Solution& s) -> py::object {
                               if (!s.witness) return py::none();
                               return py::str(scsk::encode_utf8(s.witness->text));
                             })
      .def_property_readonly("offsets",
                             [](const scsk::Solution& s) {
                               return s.witness ? s.witness->offsets : std::vector<int>{};
                             })
      .def_property_readonly("mismatch_positions", [](const scsk::Solution& s) {
        return s.witness ? s.witness->mismatch_positions : std::vector<int>{};
      });

  m.def("parse_instance", [](const std::string& text, long long k) { return scsk::parse_instance(text, k); },
        py::arg("text"), py::arg("k") = 0);

  m.def(
      "validate",
      [](const scsk::Instance& inst) {
        std::vector<py::tuple> out;
        for (const auto& v : scsk::validate(inst).violations) out.push_back(py::make_tuple(kind_name(v.kind), v.a, v.b));
        return out;
      },
      py::arg("instance"));

  m.def(
      "solve",
      [](const scsk::Instance& inst, bool reconstruct, unsigned threads, bool engulf_pass) {
        scsk::SolverOptions opts;
        opts.reconstruct = reconstruct;
        opts.threads = threads;
        opts.engulf_pass = engulf_pass;
        py::gil_scoped_release release;
        return scsk::solve(inst, opts);
      },
      py::arg("instance"), py::arg("reconstruct") = false, py::arg("threads") = 0, py::arg("engulf_pass") = true);

  m.def(
      "solve_json",
      [](const scsk::Instance& inst, bool reconstruct, bool counters, unsigned threads) {
        scsk::SolverOptions opts;
        opts.reconstruct = reconstruct;
        opts.threads = threads;
        scsk::PhaseCounters pc;
        const auto sol = scsk::solve(inst, opts, counters ? &pc : nullptr);
        return scsk::cli::solution_json(inst, sol, counters ? &pc : nullptr).dump(2);
      },
      py::arg("instance"), py::arg("reconstruct") = false, py::arg("counters") = false, py::arg("threads") = 0);

  m.def("verify_solution", [](const scsk::Instance& inst, const scsk::Solution& sol) {
    return scsk::verify_solution(inst, sol).violations;
  });

  m.def(
      "brute_force_scsk",
      [](const scsk::Instance& inst) {
        const auto r = scsk::oracle::brute_force_scsk(inst);
        return py::make_tuple(r.length, r.m_index);
      },
      py::arg("instance"));
  m.def("brute_force_scs", [](const scsk::Instance& inst) { return scsk::oracle::brute_force_scs(inst); },
        py::arg("instance"));

  m.def(
      "generate_instance",
      [](std::size_t n, int min_len, int max_len, int alphabet, std::uint64_t seed, long long k) {
        return scsk::cli::generate_instance({n, min_len, max_len, alphabet}, seed, k);
      },
      py::arg("n"), py::arg("min_len"), py::arg("max_len"), py::arg("alphabet"), py::arg("seed"), py::arg("k") = 0);
}
