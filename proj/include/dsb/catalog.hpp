#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dsb/linalg.hpp"
#include "dsb/rootsys.hpp"

namespace dsb {

// A symmetric pair (G,H) together with its associated (G,H0), realized on a
// fundamental Cartan t. sigma acts on t* as a signed permutation; a sigma-fixed
// root a lies in h iff fixed_sign(color) * (-1)^{(a, grading)} = +1.
struct SymmetricPair {
  std::string name;
  std::string h_label, h0_label;
  RootSystem rs;
  InvolutionSpec sigma;
  Weight grading;
  int sign_compact = 1;
  int sign_noncompact = 1;
  std::optional<Weight> k1_center;  // overrides Z1 (tensor product pairs)

  bool u_is_t() const { return sigma.is_identity(); }
  bool fixed_in_h(const Weight& alpha) const;

  // Restricted root multisets, each in ambient coordinates.
  std::vector<Weight> phi_h() const;
  std::vector<Weight> phi_h0() const;
  std::vector<Weight> phi_l() const;
  std::vector<Weight> phi_qk() const;  // restricted roots of q cap k
  std::vector<Weight> phi_h_noncompact() const;
  std::vector<Weight> phi_h0_noncompact() const;

  Subspace t_span() const;  // span of the roots
  Subspace u_span() const;  // span of the restricted roots

  // (G,H0) viewed as the primary pair
  SymmetricPair swapped() const;
  void validate() const;
};

struct K1Split {
  std::vector<Weight> k1_roots, k2_roots;  // both signs
  Subspace t1, t2;
  int z1_dim = 0;
};

K1Split k1_subalgebra(const SymmetricPair& pair, const PositiveSystem& psi);
bool sigma_invariant(const SymmetricPair& pair, const PositiveSystem& psi);
// empty when admissible, otherwise the failing witness
std::string admissibility_witness(const SymmetricPair& pair, const PositiveSystem& psi);
inline bool is_admissible(const SymmetricPair& pair, const PositiveSystem& psi) {
  return admissibility_witness(pair, psi).empty();
}

struct InducedSystems {
  Weight direction;  // Psi-dominant regular, sigma-fixed
  std::vector<Weight> delta0, psi_h, psi_h0;
  std::vector<Weight> psi_h_n, psi_h0_n;  // noncompact parts
};

InducedSystems induced_systems(const SymmetricPair& pair, const PositiveSystem& psi);

struct ParameterSplit {
  Weight center_part, semisimple_part;
};
// Orthogonal split of mu into z_h* and (u cap h_ss)*.
ParameterSplit decompose_parameter(const Weight& mu, const SymmetricPair& pair);

// Parse "e1-e2", "2e1", "e1+d2-e3" in the coordinates of rs.
Weight parse_root_expr(const RootSystem& rs, const std::string& s);
// Named systems: a=K, b=K, holo, holo-, plus, minus, S+a, S-a, 11, 1-1,
// w11, w1-1 (prefix w swaps the e and d blocks), or a raw order word.
std::string order_word_for(const RootSystem& rs, const std::string& psi);
PositiveSystem named_system(const RootSystem& rs, const std::string& psi);

struct SystemSpec {
  std::string psi;  // name or order word
  std::string k1;   // "center" or comma-separated simple roots
  bool admissible = true;
};

struct PairInstance {
  std::string family;
  std::vector<int> ranks;
  std::vector<std::pair<std::string, std::string>> sigma;  // label -> signed label
  std::vector<std::pair<std::string, std::string>> grading;
  int sign_compact = 1, sign_noncompact = 1;
  std::vector<SystemSpec> systems;
};

struct PairTableRow {
  std::string id;     // e.g. "I-3"
  std::string table;  // I, II, III
  std::string g, h, h0, psi_spec, k1_label;
  std::vector<std::string> aliases;
  std::optional<PairInstance> instance;  // absent for exceptional rows
  std::optional<bool> admissible;        // table lookup for data-only rows
};

struct PairFilter {
  std::string table, g;
};

class Catalog {
 public:
  static const Catalog& builtin();  // DSB_CATALOG_PATH or $DSB_CATALOG
  static Catalog from_json_text(const std::string& text);
  std::string to_json_text() const;

  const std::string& version() const { return version_; }
  const std::vector<PairTableRow>& rows() const { return rows_; }
  std::vector<PairTableRow> list_pairs(const PairFilter& f) const;
  // by id or alias
  const PairTableRow& find(const std::string& selector) const;

 private:
  std::string version_;
  std::vector<PairTableRow> rows_;
};

SymmetricPair build_pair(const PairTableRow& row);
// k1 roots expected by a SystemSpec (closure of the listed simple roots)
std::vector<Weight> expected_k1_roots(const RootSystem& rs, const std::string& k1);
std::vector<Weight> root_closure(const std::vector<Weight>& simple);

}  // namespace dsb
