#include "dsb/measures.hpp"

#include <algorithm>

namespace dsb {

Z DiscreteMeasure::at(const Weight& x) const {
  auto it = entries.find(x);
  return it == entries.end() ? Z(0) : it->second;
}

void DiscreteMeasure::add(const Weight& x, const Z& c) {
  if (c == 0 || !window.contains(x)) return;
  auto [it, fresh] = entries.emplace(x, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) entries.erase(it);
  }
}

std::vector<std::pair<Weight, Z>> DiscreteMeasure::sorted() const {
  std::vector<std::pair<Weight, Z>> v(entries.begin(), entries.end());
  std::stable_sort(v.begin(), v.end(), [&](const auto& a, const auto& b) {
    return window.height(a.first) < window.height(b.first);
  });
  return v;
}

DiscreteMeasure dirac(const Weight& nu, const Window& w) {
  DiscreteMeasure m(w, w.height(nu));
  m.add(nu, 1);
  return m;
}

DiscreteMeasure heaviside(const Weight& nu, const Window& w) {
  Q h = w.height(nu);
  if (h <= 0)
    throw PreconditionError("unbounded support in window: heaviside generator " +
                            format_weight(nu) + " has non-positive height");
  DiscreteMeasure m(w, h / 2);
  for (Weight x = Q(1, 2) * nu; w.contains(x); x += nu) m.add(x, 1);
  return m;
}

DiscreteMeasure convolve(const DiscreteMeasure& a, const DiscreteMeasure& b) {
  if (a.window.direction != b.window.direction)
    throw PreconditionError("convolution of measures with different window directions");
  Q bound = std::min(a.window.bound + b.floor, b.window.bound + a.floor);
  DiscreteMeasure r({a.window.direction, bound}, a.floor + b.floor);
  std::vector<std::pair<Q, const std::pair<const Weight, Z>*>> bs;
  for (const auto& e : b.entries) bs.push_back({b.window.height(e.first), &e});
  std::sort(bs.begin(), bs.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  for (const auto& ea : a.entries) {
    Q ha = a.window.height(ea.first);
    for (const auto& [hb, eb] : bs) {
      if (ha + hb > bound) break;
      r.add(ea.first + eb->first, ea.second * eb->second);
    }
  }
  return r;
}

DiscreteMeasure convolve_heaviside(const DiscreteMeasure& a, const Weight& s) {
  Q hs = a.window.height(s);
  if (hs <= 0)
    throw PreconditionError("unbounded support in window: heaviside generator " + format_weight(s) +
                            " has non-positive height");
  // y_s is complete everywhere it is generated, so only a's bound limits us
  Q bound = a.window.bound + hs / 2;
  DiscreteMeasure r({a.window.direction, bound}, a.floor + hs / 2);
  Weight half = Q(1, 2) * s;
  for (const auto& [p, c] : a.entries)
    for (Weight x = p + half; r.window.contains(x); x += s) r.add(x, c);
  return r;
}

DiscreteMeasure multiset_heaviside(const std::vector<Weight>& S, const Window& w) {
  DiscreteMeasure acc = dirac(Weight(w.direction.dim()), w);
  acc.floor = 0;
  for (const auto& s : S) acc = convolve_heaviside(acc, s);
  // acc is complete beyond w.bound; trim to the requested window
  DiscreteMeasure out(w, acc.floor);
  for (const auto& [x, c] : acc.entries) out.add(x, c);
  return out;
}

DiscreteMeasure skew_symmetrize(const DiscreteMeasure& m, const std::vector<WeylElement>& W) {
  for (const auto& w : W)
    if (w.apply(m.window.direction) != m.window.direction)
      throw PreconditionError("skew_symmetrize needs a Weyl-invariant window direction");
  DiscreteMeasure r(m.window, m.floor);
  for (const auto& [x, c] : m.entries)
    for (const auto& w : W) r.add(w.apply(x), w.sign > 0 ? c : Z(-c));
  return r;
}

}  // namespace dsb
