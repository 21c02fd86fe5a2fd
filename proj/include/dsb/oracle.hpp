#pragma once

#include <map>

#include "dsb/branching.hpp"

namespace dsb {

struct CharacterTable {
  Weight highest;
  std::map<Weight, Z> mult;
  Z total() const;
};

// Kostant multiplicity formula. Roots may be given in any coordinates: the
// Weyl group is generated as rational reflection matrices.
CharacterTable weight_multiplicities(const Weight& highest, const std::vector<Weight>& positive_roots);
Z weyl_dimension(const Weight& highest, const std::vector<Weight>& positive_roots);
// number of ways to write v as a nonnegative combination of gens (positive on dir)
Z partition_count(const Weight& v, const std::vector<Weight>& gens);

// K-type with highest weight `highest` restricted to L, peeled by L-highest
// weights. Output keyed by L-parameters (highest weight + rho_L).
BranchingTable brute_branching(const Weight& highest, const CompactRestriction& c);

// Holomorphic case: S(p+) (x) lowest K-type, restricted and peeled into
// holomorphic H-constituents.
BranchingTable holomorphic_ktype_oracle(const Setup& s, const Window& w);

// G0 with abelian K0: joint K-types of the tensor product peeled into ladders.
// Parameters and window in G0 coordinates.
BranchingTable tensor_ladder_oracle(const std::string& family, const std::vector<int>& ranks,
                                    const Weight& lambda, const Weight& phi, const Window& w);

}  // namespace dsb
