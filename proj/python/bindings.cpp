// Python bindings for the main operations of the partition-category
// kernel.  Scalars cross the boundary as exact decimal strings, diagrams
// and partitions in their text formats.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "parcat/algebra.hpp"
#include "parcat/blocks.hpp"
#include "parcat/diagram.hpp"
#include "parcat/schurweyl.hpp"
#include "parcat/stdmod.hpp"
#include "parcat/symfun.hpp"

namespace py = pybind11;
using namespace parcat;

namespace {

Rational rat(const std::string& s) { return Rational::parse(s); }

std::pair<std::string, int> compose_text(const std::string& f, const std::string& g) {
  ComposeResult r = compose(PartitionDiagram::parse(f), PartitionDiagram::parse(g));
  return {r.diagram.str(), r.loops};
}

std::vector<std::string> basis_text(int m, int n) {
  std::vector<std::string> out;
  for (const auto& d : enumerate_diagrams(m, n)) out.push_back(d.str());
  return out;
}

std::string jm_json(int n, int j, const std::string& kind) {
  if (kind == "left") return to_json_string(jm_left(n, j));
  if (kind == "right") return to_json_string(jm_right(n, j));
  if (kind == "cross-left") return to_json_string(cross_left(n, j));
  if (kind == "cross-right") return to_json_string(cross_right(n, j));
  throw precondition_error("unknown jm kind: " + kind);
}

std::string central_json(int n, int r, const std::string& kind) {
  if (kind == "z") return to_json_string(central_z(n, r));
  if (kind == "c") return to_json_string(central_c(n, r));
  throw precondition_error("unknown central kind: " + kind);
}

long kron_py(const std::string& l, const std::string& m, const std::string& n, bool reduced) {
  Partition lam = Partition::parse(l), mu = Partition::parse(m), nu = Partition::parse(n);
  return reduced ? reduced_kronecker(lam, mu, nu) : kronecker(lam, mu, nu);
}

py::dict gram_py(const std::string& l, int m, const std::string& t) {
  Partition lam = Partition::parse(l);
  GramMatrix g = gram_matrix(lam, m, rat(t));
  py::dict out;
  out["lambda"] = lam.str();
  out["m"] = m;
  out["t"] = t;
  out["dim"] = delta_dim(lam, m);
  out["rank"] = g.rank;
  return out;
}

py::dict block_info(const std::string& l, const std::string& t) {
  Partition lam = Partition::parse(l);
  Rational tv = rat(t);
  py::dict out;
  out["typical"] = is_typical(lam, tv);
  if (tv.is_integer() && tv >= Rational(0)) {
    auto rec = recover_kappa(lam, tv.to_long());
    if (rec) {
      out["kappa"] = rec->first.str();
      out["n"] = rec->second;
    }
  }
  return out;
}

bool verify_block_structure_py(const std::string& kappa, int m_max, int j_max) {
  return verify_block_structure(Partition::parse(kappa), m_max, j_max).all_ok;
}

}  // namespace

PYBIND11_MODULE(_parcat, m) {
  m.doc() = "exact computations in the partition category";
  m.def("bell", [](int k) { return bell(k).get_str(); }, py::arg("k"));
  m.def("compose", &compose_text, py::arg("f"), py::arg("g"),
        "compose two diagrams (f on top of g); returns (diagram, loops)");
  m.def("basis", &basis_text, py::arg("m"), py::arg("n"));
  m.def("jm", &jm_json, py::arg("n"), py::arg("j"), py::arg("kind"),
        "JSON of x_j^L/x_j^R/s_k^L/s_k^R; kind in left/right/cross-left/cross-right");
  m.def("central", &central_json, py::arg("n"), py::arg("r"), py::arg("kind"));
  m.def("hom_rank", &hom_rank, py::arg("m"), py::arg("n"), py::arg("t"));
  m.def("kronecker", &kron_py, py::arg("lam"), py::arg("mu"), py::arg("nu"),
        py::arg("reduced") = false);
  m.def("deformed_schur",
        [](const std::string& l) { return deformed_schur(Partition::parse(l)).str(); },
        py::arg("lam"));
  m.def("same_block",
        [](const std::string& a, const std::string& b, const std::string& t) {
          return same_block(Partition::parse(a), Partition::parse(b), rat(t));
        },
        py::arg("a"), py::arg("b"), py::arg("t"));
  m.def("block_info", &block_info, py::arg("lam"), py::arg("t"));
  m.def("gram", &gram_py, py::arg("lam"), py::arg("m"), py::arg("t"));
  m.def("delta_dim",
        [](const std::string& l, int mm) { return delta_dim(Partition::parse(l), mm); },
        py::arg("lam"), py::arg("m"));
  m.def("verify_block_structure", &verify_block_structure_py, py::arg("kappa"),
        py::arg("m_max") = 3, py::arg("j_max") = 2);
}
