#include "dsb/oracle.hpp"

#include <functional>
#include <set>

namespace dsb {

namespace {

constexpr std::size_t kMaxPositiveRoots = 16;

// row-major n x n rational matrix
struct Mat {
  std::size_t n = 0;
  std::vector<Q> a;

  static Mat id(std::size_t n) {
    Mat m{n, std::vector<Q>(n * n)};
    for (std::size_t i = 0; i < n; ++i) m.a[i * n + i] = 1;
    return m;
  }
  Mat operator*(const Mat& o) const {
    Mat r{n, std::vector<Q>(n * n)};
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        if (a[i * n + k] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) r.a[i * n + j] += a[i * n + k] * o.a[k * n + j];
      }
    return r;
  }
  Weight apply(const Weight& x) const {
    Weight y(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) y.c[i] += a[i * n + j] * x.c[j];
    return y;
  }
  bool operator<(const Mat& o) const { return a < o.a; }
};

Mat reflect(const Weight& r) {
  std::size_t n = r.dim();
  Mat m = Mat::id(n);
  Q rr = dot(r, r);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.a[i * n + j] -= 2 * r.c[i] * r.c[j] / rr;
  return m;
}

// (element, det) pairs; det from word-length parity
std::vector<std::pair<Mat, int>> matrix_group(const std::vector<Weight>& roots, std::size_t n) {
  std::vector<Mat> gens;
  for (const auto& r : roots) gens.push_back(reflect(r));
  std::map<Mat, int> seen{{Mat::id(n), 1}};
  std::vector<std::pair<Mat, int>> frontier{{Mat::id(n), 1}};
  while (!frontier.empty()) {
    std::vector<std::pair<Mat, int>> next;
    for (const auto& [m, s] : frontier)
      for (const auto& g : gens) {
        Mat x = g * m;
        if (seen.emplace(x, -s).second) next.push_back({x, -s});
      }
    frontier.swap(next);
    if (seen.size() > 100000) throw PreconditionError("oracle Weyl group too large");
  }
  return {seen.begin(), seen.end()};
}

Weight direction_for(const std::vector<Weight>& pos, std::size_t n) { return half_sum(pos, n); }

}  // namespace

Z CharacterTable::total() const {
  Z t = 0;
  for (const auto& [w, m] : mult) t += m;
  return t;
}

Z partition_count(const Weight& v, const std::vector<Weight>& gens) {
  std::size_t n = v.dim();
  if (gens.empty()) return v.is_zero() ? 1 : 0;
  // a functional positive on every generator
  Weight dir = half_sum(gens, n);
  for (const auto& g : gens)
    if (dot(g, dir) <= 0) throw PreconditionError("partition generators are not pointed");
  std::map<std::pair<std::size_t, Weight>, Z> memo;
  std::function<Z(std::size_t, const Weight&)> rec = [&](std::size_t i, const Weight& x) -> Z {
    if (x.is_zero()) return 1;
    if (i == gens.size() || dot(x, dir) < 0) return 0;
    auto key = std::make_pair(i, x);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    Z total = 0;
    Weight cur = x;
    while (dot(cur, dir) >= 0) {
      total += rec(i + 1, cur);
      cur -= gens[i];
    }
    memo[key] = total;
    return total;
  };
  return rec(0, v);
}

CharacterTable weight_multiplicities(const Weight& highest, const std::vector<Weight>& pos) {
  if (pos.size() > kMaxPositiveRoots) throw PreconditionError("oracle rank guard exceeded");
  std::size_t n = highest.dim();
  for (const auto& a : pos) {
    Q c = 2 * dot(highest, a) / dot(a, a);
    if (c < 0 || c.get_den() != 1)
      throw PreconditionError("highest weight " + format_weight(highest) + " is not dominant integral");
  }
  Weight rho = direction_for(pos, n);
  auto W = matrix_group(pos, n);
  CharacterTable t;
  t.highest = highest;
  // candidates: highest - N(pos) down to the lowest height -(highest, rho)
  Q lo = -dot(highest, rho);
  std::set<Weight> seen{highest};
  std::vector<Weight> todo{highest};
  while (!todo.empty()) {
    Weight x = todo.back();
    todo.pop_back();
    Z m = 0;
    for (const auto& [w, s] : W) m += s * partition_count(w.apply(highest + rho) - (x + rho), pos);
    if (m != 0) t.mult[x] = m;
    for (const auto& a : pos) {
      Weight y = x - a;
      if (dot(y, rho) >= lo && seen.insert(y).second) todo.push_back(y);
    }
  }
  return t;
}

Z weyl_dimension(const Weight& highest, const std::vector<Weight>& pos) {
  Weight rho = half_sum(pos, highest.dim());
  Q d = 1;
  for (const auto& a : pos) d *= dot(highest + rho, a) / dot(rho, a);
  if (d.get_den() != 1) throw ConsistencyError("non-integral Weyl dimension");
  return d.get_num();
}

BranchingTable brute_branching(const Weight& highest, const CompactRestriction& c) {
  CharacterTable ch = weight_multiplicities(highest, c.k_pos);
  std::map<Weight, Z> rem;
  for (const auto& [w, m] : ch.mult) rem[c.sigma.project(w)] += m;
  Weight rl = half_sum(c.l_pos, c.n);
  BranchingTable t;
  t.method = "brute";
  t.source = highest;
  t.window = {c.direction, 0};
  while (true) {
    const Weight* top = nullptr;
    for (const auto& [w, m] : rem)
      if (m != 0 && (!top || dot(w, c.direction) > dot(*top, c.direction))) top = &w;
    if (!top) break;
    Weight nu = *top;
    Z a = rem[nu];
    if (a < 0) throw ConsistencyError("negative remainder while peeling at " + format_weight(nu));
    CharacterTable sub = weight_multiplicities(nu, c.l_pos);
    for (const auto& [w, m] : sub.mult) rem[w] -= a * m;
    t.entries[nu + rl] += a;
    t.window.bound = std::max(t.window.bound, dot(nu + rl, c.direction));
  }
  return t;
}

namespace {

// multiset weights of S(span of gens) up to height bound
std::map<Weight, Z> symmetric_algebra(const std::vector<Weight>& gens, const Weight& dir,
                                      const Q& bound, std::size_t n) {
  std::map<Weight, Z> acc{{Weight(n), 1}};
  for (const auto& g : gens) {
    Q hg = dot(g, dir);
    if (hg <= 0) throw PreconditionError("symmetric algebra generator not positive");
    std::map<Weight, Z> next;
    for (const auto& [w, m] : acc)
      for (Weight x = w; dot(x, dir) <= bound; x += g) next[x] += m;
    acc.swap(next);
  }
  return acc;
}

// peel lowest weights into constituents; lowest -> parameter via to_param,
// constituent character via char_of
template <class ToParam, class CharOf>
std::map<Weight, Z> peel_lowest(std::map<Weight, Z> rem, const Weight& dir, const Q& bound,
                                ToParam to_param, CharOf char_of) {
  std::map<Weight, Z> out;
  while (true) {
    const Weight* low = nullptr;
    for (const auto& [w, m] : rem)
      if (m != 0 && dot(w, dir) <= bound && (!low || dot(w, dir) < dot(*low, dir))) low = &w;
    if (!low) break;
    Weight l = *low;
    Z a = rem[l];
    if (a < 0) throw ConsistencyError("negative remainder while peeling at " + format_weight(l));
    Weight p = to_param(l);
    out[p] += a;
    for (const auto& [w, m] : char_of(p)) rem[w] -= a * m;
  }
  return out;
}

}  // namespace

BranchingTable holomorphic_ktype_oracle(const Setup& s, const Window& w) {
  if (!s.psi.is_holomorphic()) throw PreconditionError("non-holomorphic input");
  std::size_t n = s.pair.rs.dim();
  const Weight& dir = w.direction;
  Weight rn = half_sum(s.psi.noncompact(), n), rc = half_sum(s.psi.compact(), n);
  Weight rnh = half_sum(s.ind.psi_h_n, n), rl = half_sum(s.ind.delta0, n);
  Q big = w.bound + dot(rnh, dir);

  CharacterTable lowest = weight_multiplicities(s.lambda + rn - rc, s.psi.compact());
  Q hmin = 0;
  bool first = true;
  for (const auto& [x, m] : lowest.mult)
    if (first || dot(x, dir) < hmin) {
      hmin = dot(x, dir);
      first = false;
    }
  auto sym = symmetric_algebra(s.psi.noncompact(), dir, big - hmin, n);
  std::map<Weight, Z> weights;
  for (const auto& [x, a] : lowest.mult)
    for (const auto& [y, b] : sym) {
      Weight z = x + y;
      if (dot(z, dir) <= big) weights[s.pair.sigma.project(z)] += a * b;
    }

  // the longest element of W_L sends rho_L to -rho_L
  auto WL = matrix_group(s.ind.delta0, n);
  const Mat* w0 = nullptr;
  for (const auto& [m, sg] : WL)
    if (m.apply(rl) == -rl) w0 = &m;
  if (!w0) throw ConsistencyError("no longest element in W_L");
  auto to_param = [&](const Weight& low) { return w0->apply(low) + rl - rnh; };
  auto char_of = [&](const Weight& mu) {
    CharacterTable lt = weight_multiplicities(mu + rnh - rl, s.ind.delta0);
    Q lo = 0;
    for (const auto& [x, a] : lt.mult) lo = std::min(lo, dot(x, dir));
    auto hsym = symmetric_algebra(s.ind.psi_h_n, dir, big - lo, n);
    std::map<Weight, Z> out;
    for (const auto& [x, a] : lt.mult)
      for (const auto& [y, b] : hsym)
        if (dot(x + y, dir) <= big) out[x + y] += a * b;
    return out;
  };
  auto params = peel_lowest(weights, dir, big, to_param, char_of);

  BranchingTable t;
  t.method = "holomorphic-oracle";
  t.source = s.lambda;
  t.window = w;
  for (const auto& [p, a] : params)
    if (w.contains(p) && a != 0) t.entries[p] = a;
  return t;
}

BranchingTable tensor_ladder_oracle(const std::string& family, const std::vector<int>& ranks,
                                    const Weight& lambda, const Weight& phi, const Window& w) {
  RootSystem rs = build_root_system(family, ranks);
  if (!rs.compact().empty()) throw PreconditionError("tensor oracle needs an abelian K0");
  std::size_t n = rs.dim();
  auto psi = positive_system_from_vector(rs, lambda);
  auto nc = psi.noncompact();
  Weight rn = half_sum(nc, n);
  const Weight& dir = w.direction;
  Q big = w.bound + dot(rn, dir);
  // K-types of each factor: parameter + rho_n + N(Psi_n)
  auto sym = symmetric_algebra(nc, dir, big, n);
  std::map<Weight, Z> joint;
  for (const auto& [x, a] : sym)
    for (const auto& [y, b] : sym) {
      Weight z = lambda + rn + x + phi + rn + y;
      if (dot(z, dir) <= big) joint[z] += a * b;
    }
  auto to_param = [&](const Weight& low) { return low - rn; };
  auto char_of = [&](const Weight& mu) {
    std::map<Weight, Z> out;
    for (const auto& [x, a] : sym)
      if (dot(mu + rn + x, dir) <= big) out[mu + rn + x] += a;
    return out;
  };
  auto params = peel_lowest(joint, dir, big, to_param, char_of);
  BranchingTable t;
  t.method = "tensor-oracle";
  t.target = "diagonal " + family;
  t.source = lambda;
  t.window = w;
  for (const auto& [p, a] : params)
    if (w.contains(p) && a != 0) t.entries[p] = a;
  return t;
}

}  // namespace dsb
