// Python module: thin wrappers returning JSON text, decoded on the Python side.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dsb/branching.hpp"
#include "dsb/catalog.hpp"
#include "dsb/io.hpp"
#include "dsb/oracle.hpp"
#include "json.hpp"

namespace py = pybind11;
using namespace dsb;
using ojson = nlohmann::ordered_json;

namespace {

ojson weights(const std::vector<Weight>& v) {
  ojson a = ojson::array();
  for (const auto& w : v) a.push_back(format_weight(w));
  return a;
}

SymmetricPair pair_of(const std::string& sel) { return build_pair(Catalog::builtin().find(sel)); }

std::string admissible(const std::string& sel, const std::string& psi_name) {
  SymmetricPair p = pair_of(sel);
  PositiveSystem psi = named_system(p.rs, psi_name);
  std::string why = admissibility_witness(p, psi);
  ojson o;
  o["pair"] = p.name;
  o["psi"] = psi_name;
  o["admissible"] = why.empty();
  o["witness"] = why;
  o["z1_dim"] = k1_subalgebra(p, psi).z1_dim;
  o["k1_roots"] = weights(k1_subalgebra(p, psi).k1_roots);
  return o.dump();
}

std::string systems(const std::string& sel, const std::string& lam) {
  SymmetricPair p = pair_of(sel);
  InducedSystems ind = induced_systems(p, positive_system_from_vector(p.rs, parse_weight(lam)));
  ojson o;
  o["direction"] = format_weight(ind.direction);
  o["delta0"] = weights(ind.delta0);
  o["psi_h"] = weights(ind.psi_h);
  o["psi_h0"] = weights(ind.psi_h0);
  return o.dump();
}

std::string branch(const std::string& sel, const std::string& lam, const std::string& cutoff,
                   const std::string& method) {
  Setup s = make_setup(pair_of(sel), parse_weight(lam));
  BranchingTable t = run_method(s, method, s.window(parse_rational(cutoff)));
  t.target = s.pair.h_label;
  return table_json(t);
}

std::string compare(const std::string& sel, const std::string& lam, const std::string& m1,
                    const std::string& m2, const std::string& cutoff) {
  Setup s = make_setup(pair_of(sel), parse_weight(lam));
  Comparison c = compare_methods(s, m1, m2, parse_rational(cutoff));
  ojson o;
  o["equal"] = c.equal;
  o["entries"] = c.a.entries.size();
  o["diffs"] = c.diffs;
  return o.dump();
}

std::string tensor(const std::string& family, const std::vector<int>& ranks, const std::string& lam,
                   const std::string& phi, const std::string& cutoff, bool check) {
  Weight l = parse_weight(lam), f = parse_weight(phi);
  BranchingTable t = theorem3_tensor(family, ranks, l, f, parse_rational(cutoff));
  if (check && tensor_ladder_oracle(family, ranks, l, f, t.window).entries != t.entries)
    throw ConsistencyError("tensor product disagrees with the ladder oracle");
  return table_json(t);
}

}  // namespace

PYBIND11_MODULE(_dsb, m) {
  m.doc() = "discrete series branching core";
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<ConsistencyError>(m, "ConsistencyError", PyExc_RuntimeError);
  m.def("list_pairs", [](const std::string& table, const std::string& g) {
    return rows_json(Catalog::builtin().list_pairs({table, g}));
  }, py::arg("table") = "", py::arg("g") = "");
  m.def("admissible", &admissible, py::arg("pair"), py::arg("psi"));
  m.def("systems", &systems, py::arg("pair"), py::arg("lam"));
  m.def("branch", &branch, py::arg("pair"), py::arg("lam"), py::arg("cutoff") = "20",
        py::arg("method") = "theorem1");
  m.def("compare", &compare, py::arg("pair"), py::arg("lam"), py::arg("m1") = "rh",
        py::arg("m2") = "theorem1", py::arg("cutoff") = "20");
  m.def("tensor", &tensor, py::arg("family"), py::arg("ranks"), py::arg("lam"), py::arg("phi"),
        py::arg("cutoff") = "20", py::arg("check") = false);
}
