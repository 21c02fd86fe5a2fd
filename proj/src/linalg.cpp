#include "dsb/linalg.hpp"

namespace dsb {

Subspace Subspace::span(const std::vector<Weight>& vs, std::size_t n) {
  Subspace s;
  s.n = n;
  for (const auto& v : vs) {
    Weight r = v - s.project(v);
    if (!r.is_zero()) s.basis.push_back(r);
  }
  return s;
}

Weight Subspace::project(const Weight& x) const {
  Weight r(n);
  for (const auto& b : basis) r += (dot(x, b) / dot(b, b)) * b;
  return r;
}

Subspace Subspace::complement_in(const Subspace& ambient) const {
  std::vector<Weight> vs;
  for (const auto& b : ambient.basis) vs.push_back(b - project(b));
  return span(vs, n);
}

}  // namespace dsb
