#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "spechtkit/abacus.hpp"
#include "spechtkit/classify.hpp"
#include "spechtkit/errors.hpp"
#include "spechtkit/ladders.hpp"
#include "spechtkit/lr.hpp"
#include "spechtkit/serialize.hpp"

namespace py = pybind11;
namespace sk = spechtkit;

namespace {

using Parts = std::vector<int>;

sk::Partition to_partition(const Parts& parts) { return sk::Partition(parts); }
Parts to_parts(const sk::Partition& p) { return p.vec(); }

std::vector<Parts> to_parts(const std::vector<sk::Partition>& ps) {
  std::vector<Parts> out;
  out.reserve(ps.size());
  for (const auto& p : ps) out.push_back(p.vec());
  return out;
}

sk::ClassifyOptions options(std::uint64_t max_dim, std::uint64_t seed) { return {max_dim, seed}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Partitions, abacus combinatorics and Specht modules over prime fields";

  auto base = py::register_exception<sk::Error>(m, "SpechtkitError");
  py::register_exception<sk::ShapeError>(m, "ShapeError", base.ptr());
  py::register_exception<sk::ConfigError>(m, "ConfigError", base.ptr());
  py::register_exception<sk::SizeMismatch>(m, "SizeMismatch", base.ptr());
  py::register_exception<sk::DomainError>(m, "DomainError", base.ptr());
  py::register_exception<sk::Inconclusive>(m, "Inconclusive", base.ptr());
  py::register_exception<sk::InternalError>(m, "InternalError", base.ptr());

  m.def("parse", [](const std::string& text) { return to_parts(sk::Partition::parse(text)); }, py::arg("text"));
  m.def("conjugate", [](const Parts& l) { return to_parts(sk::conjugate(to_partition(l))); }, py::arg("partition"));
  m.def("dominates", [](const Parts& a, const Parts& b) { return sk::dominates(to_partition(a), to_partition(b)); }, py::arg("a"), py::arg("b"));
  m.def("is_p_regular", [](const Parts& l, int p) { return sk::is_p_regular(to_partition(l), p); }, py::arg("partition"), py::arg("p"));
  m.def("is_p_restricted", [](const Parts& l, int p) { return sk::is_p_restricted(to_partition(l), p); }, py::arg("partition"), py::arg("p"));
  m.def("specht_dimension", [](const Parts& l) { return sk::specht_dimension(to_partition(l)); }, py::arg("partition"));
  m.def("mullineux", [](const Parts& l, int p) { return to_parts(sk::mullineux(to_partition(l), p)); }, py::arg("partition"), py::arg("p"));

  m.def("p_core", [](const Parts& l, int p) { return to_parts(sk::p_core(to_partition(l), p)); }, py::arg("partition"), py::arg("p"));
  m.def("p_weight", [](const Parts& l, int p) { return sk::p_weight(to_partition(l), p); }, py::arg("partition"), py::arg("p"));
  m.def("p_quotient", [](const Parts& l, int p) { return to_parts(sk::p_quotient(to_partition(l), p)); }, py::arg("partition"), py::arg("p"));
  m.def("abacus_positions", [](const Parts& l, int p, int b) { return sk::from_partition(to_partition(l), p, b).positions; },
        py::arg("partition"), py::arg("p"), py::arg("beads"));
  m.def("is_rouquier", [](const Parts& core, int weight, int p) { return sk::is_rouquier(sk::BlockId::make(to_partition(core), weight, p)); },
        py::arg("core"), py::arg("weight"), py::arg("p"));
  m.def("block_members", [](const Parts& core, int weight, int p) { return to_parts(sk::block_members(sk::BlockId::make(to_partition(core), weight, p))); },
        py::arg("core"), py::arg("weight"), py::arg("p"));

  m.def("regularize", [](const Parts& l, int p) { return to_parts(sk::regularize(to_partition(l), p)); }, py::arg("partition"), py::arg("p"));
  m.def("ladder_numbers", [](const Parts& l, int p) { return sk::ladder_numbers(to_partition(l), p).counts; }, py::arg("partition"), py::arg("p"));

  m.def("lr_coefficient", [](const Parts& e, const Parts& r, const Parts& n) { return sk::lr_coefficient(to_partition(e), to_partition(r), to_partition(n)); },
        py::arg("epsilon"), py::arg("rho"), py::arg("nu"));
  m.def("pipeline_json", [](const Parts& l, int p) { return sk::to_json(sk::pipeline_filtration(sk::rouquier_decompose(to_partition(l), p))).dump(); },
        py::arg("partition"), py::arg("p"));

  m.def("classify_rouquier_block", [](const Parts& core, int weight, int p) { return to_parts(sk::classify_rouquier_block(sk::BlockId::make(to_partition(core), weight, p))); },
        py::arg("core"), py::arg("weight"), py::arg("p"));
  m.def("irreducible_specht_json",
        [](const Parts& l, int p, std::uint64_t max_dim, std::uint64_t seed) {
          sk::IrredVerdict v;
          {
            py::gil_scoped_release release;
            v = sk::irreducible_specht(to_partition(l), p, options(max_dim, seed));
          }
          return sk::to_json(v).dump();
        },
        py::arg("partition"), py::arg("p"), py::arg("max_dim") = 1500, py::arg("seed") = 0);
  m.def("verify_json",
        [](const Parts& l, int p, std::uint64_t max_dim, std::uint64_t seed) {
          sk::VerificationReport r;
          {
            py::gil_scoped_release release;
            r = sk::verify_main_theorem(to_partition(l), p, options(max_dim, seed));
          }
          return sk::to_json(r).dump();
        },
        py::arg("partition"), py::arg("p"), py::arg("max_dim") = 1500, py::arg("seed") = 0);
}
