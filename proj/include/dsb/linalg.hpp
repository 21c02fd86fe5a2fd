#pragma once

#include "dsb/rootsys.hpp"

namespace dsb {

// Subspace of t* held by an orthogonal (Gram-Schmidt) basis, exact.
struct Subspace {
  std::size_t n = 0;
  std::vector<Weight> basis;

  static Subspace span(const std::vector<Weight>& vs, std::size_t n);
  std::size_t dim() const { return basis.size(); }
  Weight project(const Weight& x) const;
  bool contains(const Weight& x) const { return project(x) == x; }
  // ambient intersected with the orthogonal complement of this
  Subspace complement_in(const Subspace& ambient) const;
};

}  // namespace dsb
