#pragma once

#include <map>

#include "dsb/rootsys.hpp"

namespace dsb {

// Half-space {x : (x, direction) <= bound}.
struct Window {
  Weight direction;
  Q bound;

  Q height(const Weight& x) const { return dot(x, direction); }
  bool contains(const Weight& x) const { return height(x) <= bound; }
};

// Integer-valued measure, exact on every weight of its window. `floor` is a
// lower bound for the heights of the full (untruncated) support.
struct DiscreteMeasure {
  Window window;
  Q floor;
  std::map<Weight, Z> entries;

  explicit DiscreteMeasure(Window w, Q fl = 0) : window(std::move(w)), floor(std::move(fl)) {}

  Z at(const Weight& x) const;
  void add(const Weight& x, const Z& c);
  std::size_t size() const { return entries.size(); }
  // entries ordered by height, then coordinates
  std::vector<std::pair<Weight, Z>> sorted() const;
};

DiscreteMeasure dirac(const Weight& nu, const Window& w);
DiscreteMeasure heaviside(const Weight& nu, const Window& w);
// Result is complete up to min(a.bound + b.floor, b.bound + a.floor).
DiscreteMeasure convolve(const DiscreteMeasure& a, const DiscreteMeasure& b);
DiscreteMeasure multiset_heaviside(const std::vector<Weight>& S, const Window& w);
// a * y_s without materializing y_s
DiscreteMeasure convolve_heaviside(const DiscreteMeasure& a, const Weight& s);
DiscreteMeasure skew_symmetrize(const DiscreteMeasure& m, const std::vector<WeylElement>& W);

}  // namespace dsb
