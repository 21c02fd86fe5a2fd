#pragma once

#include <map>
#include <string>
#include <vector>

#include "dsb/catalog.hpp"
#include "dsb/measures.hpp"

namespace dsb {

// Everything derived from (pair, lambda) that the formulas share.
struct Setup {
  SymmetricPair pair;
  Weight lambda;
  PositiveSystem psi;
  K1Split split;
  InducedSystems ind;
  Weight lambda1, lambda2;
  std::vector<Weight> s0;        // noncompact part of Psi_{H0,lambda}
  Weight rho0;                   // half-sum of s0
  std::vector<Weight> k1_pos, k2_pos;
  std::vector<Weight> lk2_pos;   // Delta(l cap k2, u)
  std::vector<Weight> k2_over;   // Delta(k2 / l cap k2, u)
  Weight rho_k2, rho_lk2;
  std::vector<WeylElement> w_k1, w_k2;

  Q height(const Weight& x) const { return dot(x, ind.direction); }
  // window of height base + cutoff above the lowest expected parameter
  Window window(const Q& cutoff) const;
};

Setup make_setup(const SymmetricPair& pair, const Weight& lambda);

struct BranchingTable {
  std::string method;
  std::string target;
  Weight source;
  Window window;
  std::map<Weight, Z> entries;
  std::vector<std::string> log;

  // ordered by height, then coordinates
  std::vector<std::pair<Weight, Z>> sorted() const;
  Z at(const Weight& x) const;
};

Z max_multiplicity(const BranchingTable& t);

// S_w multisets and their W_K1 x W_K2 form.
std::vector<Weight> compute_S_w(const Setup& s, const WeylElement& w);
std::vector<Weight> lemma1_rhs(const Setup& s, const WeylElement& t);

// Compact restriction K ⊃ L, K roots in t-coordinates, L roots restricted.
struct CompactRestriction {
  std::size_t n = 0;
  InvolutionSpec sigma;
  std::vector<Weight> k_pos;
  std::vector<Weight> l_pos;
  Weight direction;  // sigma-fixed, positive on k_pos and l_pos

  std::vector<Weight> quotient() const;  // q(k_pos) \ l_pos
};

// Multiplicities of L-parameters in the K-representation with parameter lam.
BranchingTable compact_branching(const CompactRestriction& c, const Weight& lam);
// Candidate L-parameters: restricted weights of the K-type lam, shifted.
std::vector<Weight> compact_candidates(const CompactRestriction& c, const Weight& lam);
CompactRestriction k2_restriction(const Setup& s);

// m^{H0,L}(mu, .) on L-parameters within w.
BranchingTable dhv_restriction(const Setup& s, const Weight& mu, const Window& w);
// (rh) evaluated at explicit points (no sign normalization)
std::map<Weight, Z> rh_values(const Setup& s, const std::vector<Weight>& points);
std::vector<Weight> rh_candidates(const Setup& s, const Window& w);
BranchingTable direct_restriction_rh(const Setup& s, const Window& w,
                                     const std::vector<Weight>& extra = {});
BranchingTable theorem1_restriction(const Setup& s, const Window& w);
BranchingTable theorem2_spec(const Setup& s, const Window& w);

struct Certificate {
  bool found = false;
  std::vector<std::pair<Weight, Z>> terms;  // root, coefficient
};
Certificate corollary1_decompose(const Setup& s, const Weight& mu);

// Tensor product of two holomorphic discrete series of G0 restricted to the
// diagonal. Parameters and output in G0 coordinates.
SymmetricPair tensor_pair(const std::string& family, const std::vector<int>& ranks);
BranchingTable theorem3_tensor(const std::string& family, const std::vector<int>& ranks,
                               const Weight& lambda, const Weight& phi, const Q& cutoff);

struct Comparison {
  bool equal = true;
  BranchingTable a, b;
  std::vector<std::string> diffs;
};
Comparison compare_methods(const Setup& s, const std::string& m1, const std::string& m2,
                           const Q& cutoff);
BranchingTable run_method(const Setup& s, const std::string& method, const Window& w);

bool dominant_regular(const Weight& x, const std::vector<Weight>& positives);

}  // namespace dsb
