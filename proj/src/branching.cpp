#include "dsb/branching.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <set>

namespace dsb {

namespace {

bool contains_multiset(const std::vector<Weight>& big, const std::vector<Weight>& small) {
  return multiset_minus(big, small).size() + small.size() == big.size();
}

std::vector<Weight> apply_all(const WeylElement& w, const std::vector<Weight>& v) {
  std::vector<Weight> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(w.apply(x));
  return out;
}

// Weyl group of a restricted root system as rational matrices; the restricted
// roots need not be signed-permutation reflections (e.g. su(n,n) over so*(2n)).
struct LinearElement {
  std::size_t n = 0;
  std::vector<Q> a;  // row major
  int sign = 1;
  Weight apply(const Weight& x) const {
    Weight y(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (a[i * n + j] != 0) y.c[i] += a[i * n + j] * x.c[j];
    return y;
  }
  LinearElement operator*(const LinearElement& o) const {
    LinearElement r{n, std::vector<Q>(n * n), sign * o.sign};
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        if (a[i * n + k] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) r.a[i * n + j] += a[i * n + k] * o.a[k * n + j];
      }
    return r;
  }
  LinearElement transpose() const {
    LinearElement r{n, std::vector<Q>(n * n), sign};
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) r.a[j * n + i] = a[i * n + j];
    return r;
  }
};

std::vector<LinearElement> linear_weyl_group(const std::vector<Weight>& pos, std::size_t n) {
  LinearElement id{n, std::vector<Q>(n * n), 1};
  for (std::size_t i = 0; i < n; ++i) id.a[i * n + i] = 1;
  std::vector<LinearElement> gens;
  for (const auto& r : dedupe(simple_roots(pos))) {
    LinearElement g = id;
    g.sign = -1;
    Q nr = dot(r, r);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) g.a[i * n + j] -= Q(2) * r.c[i] * r.c[j] / nr;
    gens.push_back(std::move(g));
  }
  std::map<std::vector<Q>, LinearElement> seen{{id.a, id}};
  std::vector<LinearElement> frontier{id};
  while (!frontier.empty()) {
    std::vector<LinearElement> next;
    for (const auto& w : frontier)
      for (const auto& g : gens) {
        LinearElement x = g * w;
        if (seen.emplace(x.a, x).second) {
          if (seen.size() > kWeylLimit) throw PreconditionError("Weyl group exceeds enumeration bound");
          next.push_back(x);
        }
      }
    frontier = std::move(next);
  }
  std::vector<LinearElement> out;
  for (auto& [k, v] : seen) out.push_back(std::move(v));
  return out;
}

// base + N gens within {height <= bound}; gens must have positive height
void cone_points(const Weight& base, const std::vector<Weight>& gens, const Weight& dir,
                 const Q& bound, std::set<Weight>& out) {
  for (const auto& g : gens)
    if (dot(g, dir) <= 0) throw ConsistencyError("cone generator " + format_weight(g) + " not positive");
  if (dot(base, dir) > bound) return;
  std::deque<Weight> todo{base};
  std::set<Weight> seen{base};
  while (!todo.empty()) {
    Weight x = todo.front();
    todo.pop_front();
    out.insert(x);
    for (const auto& g : gens) {
      Weight y = x + g;
      if (dot(y, dir) <= bound && seen.insert(y).second) todo.push_back(y);
    }
  }
}

// flip the global sign so the lowest nonzero entry is positive
void normalize_sign(std::vector<std::pair<Weight, Z>>& rows, const Weight& dir) {
  std::stable_sort(rows.begin(), rows.end(), [&](const auto& a, const auto& b) {
    Q ha = dot(a.first, dir), hb = dot(b.first, dir);
    return ha != hb ? ha < hb : a.first < b.first;
  });
  for (const auto& r : rows)
    if (r.second != 0) {
      if (r.second < 0)
        for (auto& x : rows) x.second = -x.second;
      return;
    }
}

}  // namespace

bool dominant_regular(const Weight& x, const std::vector<Weight>& positives) {
  for (const auto& a : positives)
    if (dot(x, a) <= 0) return false;
  return true;
}

// ------------------------------------------------------------------ setup

Setup make_setup(const SymmetricPair& pair, const Weight& lambda) {
  std::size_t n = pair.rs.dim();
  if (lambda.dim() != n)
    throw PreconditionError("parameter has " + std::to_string(lambda.dim()) +
                            " coordinates, expected " + std::to_string(n));
  if (!pair.t_span().contains(lambda))
    throw PreconditionError("parameter " + format_weight(lambda) + " is not in the span of the roots");
  Setup s;
  s.pair = pair;
  s.lambda = lambda;
  s.psi = positive_system_from_vector(pair.rs, lambda);
  std::string why = admissibility_witness(pair, s.psi);
  if (!why.empty()) throw PreconditionError("restriction is not admissible: " + why);
  s.split = k1_subalgebra(pair, s.psi);
  s.ind = induced_systems(pair, s.psi);
  s.lambda1 = s.split.t1.project(lambda);
  s.lambda2 = lambda - s.lambda1;
  s.s0 = s.ind.psi_h0_n;
  s.rho0 = half_sum(s.s0, n);

  std::set<Weight> k1(s.split.k1_roots.begin(), s.split.k1_roots.end());
  for (const auto& a : s.psi.compact()) (k1.count(a) ? s.k1_pos : s.k2_pos).push_back(a);
  if (!contains_multiset(s.ind.delta0, s.k1_pos))
    throw ConsistencyError("positive k1 roots are not in Delta0");
  s.lk2_pos = multiset_minus(s.ind.delta0, s.k1_pos);
  auto qk2 = restrict(pair.sigma, s.k2_pos);
  if (!contains_multiset(qk2, s.lk2_pos))
    throw ConsistencyError("Delta(l cap k2) is not inside q(Delta(k2))");
  s.k2_over = multiset_minus(qk2, s.lk2_pos);
  s.rho_k2 = half_sum(s.k2_pos, n);
  s.rho_lk2 = half_sum(s.lk2_pos, n);
  s.w_k1 = weyl_group(simple_roots(s.k1_pos), n);
  s.w_k2 = weyl_group(simple_roots(s.k2_pos), n);
  return s;
}

Window Setup::window(const Q& cutoff) const {
  std::optional<Q> lo;
  for (const auto& w : w_k2) {
    Q h = height(lambda1 + pair.sigma.project(w.apply(lambda2)));
    if (!lo || h < *lo) lo = h;
  }
  return {ind.direction, *lo + height(rho0) + cutoff};
}

// ------------------------------------------------------------------ tables

std::vector<std::pair<Weight, Z>> BranchingTable::sorted() const {
  std::vector<std::pair<Weight, Z>> out(entries.begin(), entries.end());
  std::stable_sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    Q ha = window.height(a.first), hb = window.height(b.first);
    return ha != hb ? ha < hb : a.first < b.first;
  });
  return out;
}

Z BranchingTable::at(const Weight& x) const {
  auto it = entries.find(x);
  return it == entries.end() ? Z(0) : it->second;
}

Z max_multiplicity(const BranchingTable& t) {
  Z m = 0;
  for (const auto& [w, c] : t.entries)
    if (c > m) m = c;
  return m;
}

// ------------------------------------------------------------------ S_w multisets

std::vector<Weight> compute_S_w(const Setup& s, const WeylElement& w) {
  auto a = restrict(s.pair.sigma, apply_all(w, s.psi.noncompact()));
  auto b = restrict(s.pair.sigma, s.psi.compact());
  a.insert(a.end(), b.begin(), b.end());
  return multiset_minus(a, s.pair.phi_h());
}

std::vector<Weight> lemma1_rhs(const Setup& s, const WeylElement& t) {
  auto out = apply_all(t, s.s0);
  out.insert(out.end(), s.k2_over.begin(), s.k2_over.end());
  std::sort(out.begin(), out.end());
  return out;
}

// ------------------------------------------------------------------ compact

std::vector<Weight> CompactRestriction::quotient() const {
  auto qk = restrict(sigma, k_pos);
  if (!contains_multiset(qk, l_pos)) throw PreconditionError("L roots are not restricted K roots");
  return multiset_minus(qk, l_pos);
}

CompactRestriction k2_restriction(const Setup& s) {
  return {s.pair.rs.dim(), s.pair.sigma, s.k2_pos, s.lk2_pos, s.ind.direction};
}

std::vector<Weight> compact_candidates(const CompactRestriction& c, const Weight& lam) {
  auto D = c.quotient();
  Weight rk = half_sum(c.k_pos, c.n), rl = half_sum(c.l_pos, c.n);
  Weight top = c.sigma.project(lam) - half_sum(D, c.n);
  auto W = weyl_group(simple_roots(c.k_pos), c.n);
  std::optional<Q> lo;
  for (const auto& w : W) {
    Q h = dot(c.sigma.project(w.apply(lam - rk)), c.direction);
    if (!lo || h < *lo) lo = h;
  }
  Q lower = *lo + dot(rl, c.direction);
  auto gens = dedupe(restrict(c.sigma, c.k_pos));
  for (const auto& g : gens)
    if (dot(g, c.direction) <= 0) throw ConsistencyError("direction not positive on K roots");
  std::vector<Weight> out;
  std::set<Weight> seen{top};
  std::deque<Weight> todo{top};
  while (!todo.empty()) {
    Weight x = todo.front();
    todo.pop_front();
    if (dominant_regular(x, c.l_pos)) out.push_back(x);
    for (const auto& g : gens) {
      Weight y = x - g;
      if (dot(y, c.direction) >= lower && seen.insert(y).second) todo.push_back(y);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

BranchingTable compact_branching(const CompactRestriction& c, const Weight& lam) {
  if (!dominant_regular(lam, c.k_pos))
    throw PreconditionError("compact parameter " + format_weight(lam) + " is singular or not dominant");
  if (c.sigma.apply(c.direction) != c.direction)
    throw PreconditionError("compact direction is not sigma-fixed");
  auto D = c.quotient();
  auto W = weyl_group(simple_roots(c.k_pos), c.n);
  auto cands = compact_candidates(c, lam);

  BranchingTable t;
  t.method = "compact";
  t.source = lam;
  t.window = {c.direction, 0};
  for (const auto& x : cands) t.window.bound = std::max(t.window.bound, dot(x, c.direction));
  if (cands.empty()) return t;

  std::vector<Weight> shifts;
  Q need = 0;
  bool first = true;
  for (const auto& w : W) {
    shifts.push_back(c.sigma.project(w.apply(lam)));
    for (const auto& x : cands) {
      Q h = dot(x - shifts.back(), c.direction);
      if (first || h > need) need = h;
      first = false;
    }
  }
  DiscreteMeasure y = multiset_heaviside(D, {c.direction, need});
  std::vector<std::pair<Weight, Z>> rows;
  for (const auto& x : cands) {
    Z v = 0;
    for (std::size_t i = 0; i < W.size(); ++i) v += W[i].sign * y.at(x - shifts[i]);
    rows.push_back({x, v});
  }
  normalize_sign(rows, c.direction);
  for (const auto& [x, v] : rows) {
    if (v < 0) throw ConsistencyError("negative compact multiplicity at " + format_weight(x));
    if (v != 0) t.entries[x] = v;
  }
  return t;
}

// ------------------------------------------------------------------ (dhv)

namespace {

// y_S by sorted S; a stored measure is reused when its window reaches far enough
using HeavisideCache = std::map<std::vector<Weight>, DiscreteMeasure>;

const DiscreteMeasure& cached_heaviside(HeavisideCache* cache, std::vector<Weight> S, const Window& w,
                                        std::optional<DiscreteMeasure>& scratch) {
  if (!cache) return scratch.emplace(multiset_heaviside(S, w));
  std::sort(S.begin(), S.end());
  auto it = cache->find(S);
  if (it != cache->end() && it->second.window.bound >= w.bound) return it->second;
  DiscreteMeasure y = multiset_heaviside(S, w);
  cache->erase(S);
  return cache->emplace(S, std::move(y)).first->second;
}

BranchingTable dhv_impl(const Setup& s, const Weight& mu, const Window& w, HeavisideCache* cache) {
  std::size_t n = s.pair.rs.dim();
  for (const auto& a : s.pair.phi_l())
    if (dot(mu, a) == 0) throw PreconditionError("singular H0 parameter " + format_weight(mu));
  std::vector<Weight> S = positives_against(s.pair.phi_h0_noncompact(), mu);
  for (const auto& x : S)
    if (dot(x, w.direction) <= 0) throw PreconditionError("unbounded support in window");
  auto WL = linear_weyl_group(s.ind.delta0, n);

  BranchingTable t;
  t.method = "dhv";
  t.source = mu;
  t.window = w;
  std::set<Weight> pts;
  cone_points(mu + half_sum(S, n), dedupe(S), w.direction, w.bound, pts);
  std::vector<Weight> targets;
  for (const auto& p : pts)
    if (dominant_regular(p, s.ind.delta0)) targets.push_back(p);
  if (targets.empty()) return t;

  Q need = 0;
  bool first = true;
  // orthogonal, so inverse = transpose
  std::vector<LinearElement> inv;
  for (const auto& e : WL) inv.push_back(e.transpose());
  for (const auto& e : inv)
    for (const auto& p : targets) {
      Q h = dot(e.apply(p) - mu, w.direction);
      if (first || h > need) need = h;
      first = false;
    }
  std::optional<DiscreteMeasure> scratch;
  const DiscreteMeasure& y = cached_heaviside(cache, S, {w.direction, need}, scratch);
  for (const auto& p : targets) {
    Z v = 0;
    for (std::size_t i = 0; i < WL.size(); ++i) v += WL[i].sign * y.at(inv[i].apply(p) - mu);
    if (v < 0) throw ConsistencyError("negative H0 multiplicity at " + format_weight(p));
    if (v != 0) t.entries[p] = v;
  }
  return t;
}

}  // namespace

BranchingTable dhv_restriction(const Setup& s, const Weight& mu, const Window& w) {
  return dhv_impl(s, mu, w, nullptr);
}

// ------------------------------------------------------------------ (rh)

std::map<Weight, Z> rh_values(const Setup& s, const std::vector<Weight>& points) {
  std::map<Weight, Z> out;
  for (const auto& p : points) out[p] = 0;
  if (points.empty()) return out;
  std::map<std::pair<std::vector<Weight>, Weight>, DiscreteMeasure> cache;
  for (const auto& t : s.w_k1) {
    Weight dir = t.apply(s.ind.direction);
    for (const auto& k : s.w_k2) {
      WeylElement w = t * k;
      auto S = compute_S_w(s, w);
      std::sort(S.begin(), S.end());
      for (const auto& x : S)
        if (dot(x, dir) <= 0)
          throw ConsistencyError("S_w element " + format_weight(x) + " is not positive on t(rho)");
      Weight shift = s.pair.sigma.project(w.apply(s.lambda));
      Q need = 0;
      bool first = true;
      for (const auto& p : points) {
        Q h = dot(p - shift, dir);
        if (first || h > need) need = h;
        first = false;
      }
      auto key = std::make_pair(S, dir);
      auto it = cache.find(key);
      if (it == cache.end() || it->second.window.bound < need) {
        cache.erase(key);
        it = cache.emplace(key, multiset_heaviside(S, {dir, need})).first;
      }
      for (const auto& p : points) out[p] += w.sign * it->second.at(p - shift);
    }
  }
  return out;
}

std::vector<Weight> rh_candidates(const Setup& s, const Window& w) {
  std::set<Weight> pts;
  auto gens = dedupe(s.s0);
  for (const auto& nu2 : compact_candidates(k2_restriction(s), s.lambda2))
    cone_points(s.lambda1 + nu2 + s.rho0, gens, w.direction, w.bound, pts);
  std::vector<Weight> out;
  for (const auto& p : pts) {
    bool dom = true;
    for (const auto& a : s.ind.psi_h)
      if (dot(p, a) < 0) dom = false;
    if (dom) out.push_back(p);
  }
  return out;
}

BranchingTable direct_restriction_rh(const Setup& s, const Window& w,
                                     const std::vector<Weight>& extra) {
  auto pts = rh_candidates(s, w);
  for (const auto& e : extra)
    if (w.contains(e)) pts.push_back(e);
  pts = dedupe(pts);
  auto vals = rh_values(s, pts);

  std::vector<std::pair<Weight, Z>> rows;
  for (const auto& [p, v] : vals)
    if (dominant_regular(p, s.ind.psi_h)) rows.push_back({p, v});
  normalize_sign(rows, w.direction);
  Z flip = 1;
  for (const auto& [p, v] : rows)
    if (v != 0) {
      flip = v == vals.at(p) ? 1 : -1;
      break;
    }

  BranchingTable t;
  t.method = "rh";
  t.source = s.lambda;
  t.window = w;
  for (const auto& [p, v] : rows) {
    if (v < 0) throw ConsistencyError("negative multiplicity " + v.get_str() + " at " + format_weight(p));
    if (v != 0) t.entries[p] = v;
  }
  for (const auto& [p, v] : vals)
    if (v != 0 && !dominant_regular(p, s.ind.psi_h)) {
      bool wall = true;
      for (const auto& a : s.ind.psi_h)
        if (dot(p, a) < 0) wall = false;
      if (wall)
        throw ConsistencyError("nonzero entry " + Z(flip * v).get_str() + " on a wall at " +
                               format_weight(p));
    }
  return t;
}

// ------------------------------------------------------------ assembled tables

BranchingTable theorem1_restriction(const Setup& s, const Window& w) {
  BranchingTable ct = compact_branching(k2_restriction(s), s.lambda2);
  auto phi_h0 = s.pair.phi_h0();
  std::map<Weight, Z> acc;
  std::vector<std::string> log;
  HeavisideCache cache;
  for (const auto& [nu2, m2] : ct.entries) {
    Weight mu = s.lambda1 + nu2;
    bool singular = false;
    for (const auto& a : phi_h0)
      if (dot(mu, a) == 0) singular = true;
    if (singular) {
      log.push_back("singular H0 parameter " + format_weight(mu) + " contributes 0");
      continue;
    }
    BranchingTable d = dhv_impl(s, mu, w, &cache);
    for (const auto& [p, v] : d.entries) acc[p] += m2 * v;
  }
  BranchingTable t;
  t.method = "theorem1";
  t.source = s.lambda;
  t.window = w;
  t.log = log;
  std::size_t outside = 0;
  for (const auto& [p, v] : acc) {
    if (v == 0) continue;
    if (dominant_regular(p, s.ind.psi_h)) {
      t.entries[p] = v;
      continue;
    }
    bool wall = true;
    for (const auto& a : s.ind.psi_h)
      if (dot(p, a) < 0) wall = false;
    if (wall) throw ConsistencyError("nonzero entry on a wall at " + format_weight(p));
    ++outside;
  }
  if (outside) t.log.push_back(std::to_string(outside) + " entries outside the Psi_H chamber dropped");
  return t;
}

BranchingTable theorem2_spec(const Setup& s, const Window& w) {
  if (s.lambda2 != s.rho_k2)
    throw PreconditionError("theorem2 needs lambda2 = rho_K2: lambda2 = " + format_weight(s.lambda2) +
                            " differs from rho_K2 = " + format_weight(s.rho_k2));
  BranchingTable d = dhv_restriction(s, s.lambda1 + s.rho_lk2, w);
  BranchingTable t;
  t.method = "theorem2";
  t.source = s.lambda;
  t.window = w;
  for (const auto& [p, v] : d.entries)
    if (dominant_regular(p, s.ind.psi_h)) t.entries[p] = v;
  return t;
}

Certificate corollary1_decompose(const Setup& s, const Weight& mu) {
  Weight target = mu - s.lambda1 - s.rho_lk2 - s.rho0;
  auto gens = dedupe(s.s0);
  const Weight& dir = s.ind.direction;
  Certificate c;
  std::vector<Z> coef(gens.size(), 0);
  // depth first over generators, pruning by height
  auto dfs = [&](auto&& self, std::size_t i, const Weight& rest) -> bool {
    if (rest.is_zero()) return true;
    if (i == gens.size()) return false;
    Q h = dot(rest, dir);
    if (h < 0) return false;
    Q hg = dot(gens[i], dir);
    Weight cur = rest;
    for (Z k = 0;; ++k) {
      coef[i] = k;
      if (self(self, i + 1, cur)) return true;
      cur -= gens[i];
      if (dot(cur, dir) < 0) break;
    }
    coef[i] = 0;
    return false;
  };
  if (dfs(dfs, 0, target)) {
    c.found = true;
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (coef[i] != 0) c.terms.push_back({gens[i], coef[i]});
  }
  return c;
}

// ------------------------------------------------------------------ tensor products

SymmetricPair tensor_pair(const std::string& family, const std::vector<int>& ranks) {
  RootSystem rs0 = build_root_system(family, ranks);
  std::size_t n = rs0.dim();
  Subspace center =
      Subspace::span(rs0.compact(), n).complement_in(Subspace::span(rs0.all(), n));
  if (center.dim() != 1) throw PreconditionError("G0 = " + family + " is not of Hermitian type");
  SymmetricPair p;
  p.name = "tensor:" + family;
  p.h_label = "diagonal";
  p.h0_label = "diagonal";
  p.rs = build_root_system("prod:" + family, ranks);
  WeylElement s = WeylElement::identity(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    s.perm[i] = static_cast<int>(i + n);
    s.perm[i + n] = static_cast<int>(i);
  }
  p.sigma.sigma = s;
  p.grading = Weight(2 * n);
  Weight z(2 * n);
  for (std::size_t i = 0; i < n; ++i) z.c[i] = z.c[i + n] = center.basis[0].c[i];
  p.k1_center = z;
  p.validate();
  return p;
}

BranchingTable theorem3_tensor(const std::string& family, const std::vector<int>& ranks,
                               const Weight& lambda, const Weight& phi, const Q& cutoff) {
  RootSystem rs0 = build_root_system(family, ranks);
  std::size_t n = rs0.dim();
  auto a = positive_system_from_vector(rs0, lambda);
  auto b = positive_system_from_vector(rs0, phi);
  if (!multiset_equal(a.all(), b.all()))
    throw PreconditionError("non-holomorphic inputs: parameters lie in different chambers");
  if (!a.is_holomorphic()) throw PreconditionError("non-holomorphic inputs");
  Weight joint(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    joint.c[i] = lambda.c[i];
    joint.c[i + n] = phi.c[i];
  }
  Setup s = make_setup(tensor_pair(family, ranks), joint);
  Window w = s.window(cutoff);
  BranchingTable t1 = theorem1_restriction(s, w);

  // the diagonal (x, x) of u* pairs like 2x on t0
  BranchingTable t;
  t.method = "theorem3";
  t.target = "diagonal " + family;
  t.source = joint;
  t.window.direction = Weight(n);
  for (std::size_t i = 0; i < n; ++i) t.window.direction.c[i] = w.direction.c[i];
  t.window.bound = w.bound;
  t.log = t1.log;
  for (const auto& [p, v] : t1.entries) {
    Weight mu(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (p.c[i] != p.c[i + n]) throw ConsistencyError("tensor parameter off the diagonal");
      mu.c[i] = 2 * p.c[i];
    }
    t.entries[mu] = v;
  }
  return t;
}

// ------------------------------------------------------------------ compare

BranchingTable run_method(const Setup& s, const std::string& method, const Window& w) {
  if (method == "rh") return direct_restriction_rh(s, w);
  if (method == "theorem1") return theorem1_restriction(s, w);
  if (method == "theorem2") return theorem2_spec(s, w);
  throw PreconditionError("unknown method '" + method + "'");
}

Comparison compare_methods(const Setup& s, const std::string& m1, const std::string& m2,
                           const Q& cutoff) {
  Window w = s.window(cutoff);
  Comparison c;
  c.a = run_method(s, m1, w);
  c.b = run_method(s, m2, w);
  // rh is pointwise: evaluate it on the other method's support as well
  auto keys = [](const BranchingTable& t) {
    std::vector<Weight> k;
    for (const auto& e : t.entries) k.push_back(e.first);
    return k;
  };
  if (m1 == "rh") c.a = direct_restriction_rh(s, w, keys(c.b));
  if (m2 == "rh") c.b = direct_restriction_rh(s, w, keys(c.a));
  std::set<Weight> all;
  for (const auto& e : c.a.entries) all.insert(e.first);
  for (const auto& e : c.b.entries) all.insert(e.first);
  for (const auto& p : all) {
    Z x = c.a.at(p), y = c.b.at(p);
    if (x != y) {
      c.equal = false;
      c.diffs.push_back(format_weight(p) + ": " + m1 + "=" + x.get_str() + " " + m2 + "=" +
                        y.get_str());
    }
  }
  return c;
}

}  // namespace dsb
