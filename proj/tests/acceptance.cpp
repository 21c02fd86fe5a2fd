// Acceptance run: one PASS/FAIL line per criterion with wall time.
#include <chrono>
#include <cstdlib>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "dsb/branching.hpp"
#include "dsb/oracle.hpp"

using namespace dsb;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Verdict {
  bool ok = true;
  std::ostringstream note;
  void fail(const std::string& why) {
    if (ok) note.str("");
    ok = false;
    note << why << "; ";
  }
};

SymmetricPair pair(const std::string& sel) { return build_pair(Catalog::builtin().find(sel)); }

// tables reused by the truncation check
struct Computed {
  std::string label;
  Setup setup;
  std::string method;
  Q cutoff;
  BranchingTable table;
  double seconds;
};
std::vector<Computed> g_tables;

BranchingTable timed(const std::string& label, const Setup& s, const std::string& method, const Q& cutoff,
                     double* secs = nullptr) {
  auto t0 = Clock::now();
  BranchingTable t = run_method(s, method, s.window(cutoff));
  double d = since(t0);
  if (secs) *secs = d;
  g_tables.push_back({label, s, method, cutoff, t, d});
  return t;
}

// ---------------------------------------------------------------- 1
void c1(Verdict& v) {
  struct Case {
    const char* sel;
    const char* lam;
  };
  std::vector<Case> cases{{"su21:u11", "3,1,-4"},      {"su22:sp11", "3,-3,1/2,-1/2"},
                          {"su22:sp11", "4,-3,1/2,-3/2"}, {"sp2r:u11", "3,2"},
                          {"I-1", "5,-5,2,1,-3"},       {"II-5", "4,3,2,1"}};
  for (auto [sel, lam] : cases) {
    Setup s = make_setup(pair(sel), parse_weight(lam));
    auto t0 = Clock::now();
    Q cutoff = 20;
    Comparison c = compare_methods(s, "rh", "theorem1", cutoff);
    double d = since(t0);
    // c8 compares against theorem1 alone
    auto t1 = Clock::now();
    run_method(s, "theorem1", s.window(cutoff));
    g_tables.push_back({std::string(sel) + " " + lam, s, "theorem1", cutoff, c.b, since(t1)});
    v.note << sel << "(" << lam << ") cutoff " << format_rational(cutoff) << ": " << c.a.entries.size()
           << " entries " << (c.equal ? "equal" : "DIFFER") << " " << d << "s; ";
    if (!c.equal) v.fail(std::string(sel) + " differs: " + (c.diffs.empty() ? "" : c.diffs[0]));
    if (c.a.entries.empty()) v.fail(std::string(sel) + " produced no entries");
    if (d > 60) v.fail(std::string(sel) + " took over 60 s");
  }
}

// scalar holomorphic parameter: lowest K-type a character of K
std::optional<Weight> scalar_parameter(const SymmetricPair& p, const PositiveSystem& holo) {
  std::size_t n = p.rs.dim();
  Subspace roots = Subspace::span(p.rs.all(), n);
  Subspace center = Subspace::span(p.rs.compact(), n).complement_in(roots);
  if (center.dim() != 1) return std::nullopt;
  Weight rn = half_sum(holo.noncompact(), n), rc = half_sum(holo.compact(), n);
  Weight z = center.project(rn);
  Z den = 1;
  for (const auto& x : z.c) den = lcm(den, Z(x.get_den()));
  z = Q(den) * z;
  for (int t = 1; t < 50; ++t) {
    Weight lam = Q(t) * z + rc - rn;
    bool regular = true;
    for (const auto& a : p.rs.all())
      if (dot(lam, a) == 0) regular = false;
    if (!regular) continue;
    if (multiset_equal(positive_system_from_vector(p.rs, lam).all(), holo.all())) return lam;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- 2
void c2(Verdict& v) {
  int tested = 0;
  for (const auto& row : Catalog::builtin().list_pairs({"III", ""})) {
    if (!row.instance) continue;
    SymmetricPair p = build_pair(row);
    for (const auto& spec : row.instance->systems) {
      auto holo = named_system(p.rs, spec.psi);
      auto lam = scalar_parameter(p, holo);
      if (!lam) {
        v.fail(row.id + ": no scalar parameter found");
        continue;
      }
      try {
        Setup s = make_setup(p, *lam);
        double d = 0;
        Q cutoff = p.rs.dim() > 3 ? 12 : 20;
        BranchingTable t = timed(row.id + " scalar", s, "theorem1", cutoff, &d);
        BranchingTable o = holomorphic_ktype_oracle(s, s.window(cutoff));
        ++tested;
        v.note << row.id << " " << spec.psi << " " << format_weight(*lam) << ": " << t.entries.size()
               << " entries max " << max_multiplicity(t).get_str() << " " << d << "s; ";
        if (t.entries.empty()) v.fail(row.id + " empty table");
        if (max_multiplicity(t) != 1) v.fail(row.id + " multiplicity above 1");
        if (o.entries != t.entries) v.fail(row.id + " differs from the K-type oracle");
        if (d > 60) v.fail(row.id + " took over 60 s");
      } catch (const std::exception& e) {
        v.fail(row.id + " " + spec.psi + ": " + e.what());
      }
    }
  }
  if (tested < 3) v.fail("fewer than three pairs tested");
}

// ---------------------------------------------------------------- 3
void c3(Verdict& v) {
  CompactRestriction diag;
  diag.n = 4;
  diag.sigma = InvolutionSpec::identity(4);
  diag.sigma.sigma.perm = {2, 3, 0, 1};
  diag.k_pos = {Weight{1, -1, 0, 0}, Weight{0, 0, 1, -1}};
  diag.l_pos = {Q(1, 2) * Weight{1, -1, 1, -1}};
  diag.direction = Weight{1, -1, 1, -1};
  CompactRestriction su3{3, InvolutionSpec::identity(3),
                         {Weight{1, -1, 0}, Weight{1, 0, -1}, Weight{0, 1, -1}}, {Weight{1, -1, 0}},
                         Weight{2, 1, -3}};
  for (auto* c : {&diag, &su3}) {
    int checked = 0;
    Weight rk = half_sum(c->k_pos, c->n), rl = half_sum(c->l_pos, c->n);
    for (int a = 0; a <= 3; ++a)
      for (int b = 0; b <= 3; ++b) {
        Weight h = c->n == 4 ? Weight{a, 0, b, 0} : Weight{a + b, b, 0};
        BranchingTable x = compact_branching(*c, h + rk), y = brute_branching(h, *c);
        Z total = 0;
        for (const auto& [nu, m] : x.entries) total += m * weyl_dimension(nu - rl, c->l_pos);
        if (x.entries != y.entries) v.fail("mismatch at " + format_weight(h));
        if (total != weyl_dimension(h, c->k_pos)) v.fail("dimension total off at " + format_weight(h));
        ++checked;
      }
    v.note << (c->n == 4 ? "diagonal SU(2)" : "SU(3)") << ": " << checked << " parameters; ";
  }
}

// ---------------------------------------------------------------- 4
void c4(Verdict& v) {
  int rows = 0, systems = 0, perturbed = 0, lookups = 0;
  for (const auto& row : Catalog::builtin().rows()) {
    ++rows;
    if (!row.instance) {
      if (!row.admissible.value_or(false)) v.fail(row.id + " data row not admissible");
      ++lookups;
      continue;
    }
    SymmetricPair p = build_pair(row);
    for (const auto& spec : row.instance->systems) {
      auto psi = named_system(p.rs, spec.psi);
      bool adm = is_admissible(p, psi);
      if (!spec.admissible) {
        ++perturbed;
        if (adm) v.fail(row.id + " " + spec.psi + " should not be admissible");
        continue;
      }
      ++systems;
      if (!adm) {
        v.fail(row.id + " " + spec.psi + ": " + admissibility_witness(p, psi));
        continue;
      }
      auto k = k1_subalgebra(p, psi);
      std::set<Weight> got(k.k1_roots.begin(), k.k1_roots.end());
      auto want_v = expected_k1_roots(p.rs, spec.k1);
      std::set<Weight> want(want_v.begin(), want_v.end());
      if (got != want) v.fail(row.id + " " + spec.psi + " k1 differs from " + row.k1_label);
    }
  }
  v.note << rows << " rows, " << systems << " table systems, " << lookups << " data-only rows, " << perturbed
         << " perturbed systems";
  if (perturbed < 5) v.fail("fewer than five perturbed systems");
}

Weight reflect(const Weight& r, const Weight& x) { return x - (2 * dot(x, r) / dot(r, r)) * r; }

// ---------------------------------------------------------------- 5
void c5(Verdict& v) {
  int configs = 0;
  std::size_t elements = 0;
  for (const auto& row : Catalog::builtin().rows()) {
    if (!row.instance) continue;
    SymmetricPair p = build_pair(row);
    for (const auto& spec : row.instance->systems) {
      if (!spec.admissible) continue;
      auto psi = named_system(p.rs, spec.psi);
      Weight lam = p.t_span().project(psi.regular);
      Setup s;
      try {
        s = make_setup(p, lam);
      } catch (const std::exception& e) {
        v.fail(row.id + " " + spec.psi + ": " + e.what());
        continue;
      }
      if (s.w_k1.size() * s.w_k2.size() > 10000) continue;
      ++configs;
      for (const auto& t : s.w_k1) {
        auto rhs = lemma1_rhs(s, t);
        for (const auto& k : s.w_k2) {
          auto S = compute_S_w(s, t * k);
          std::sort(S.begin(), S.end());
          ++elements;
          if (S != rhs) {
            v.fail(row.id + " " + spec.psi + ": S_w differs for a W_K element");
            break;
          }
        }
      }
      // W_{L cap K2} is generated by its reflections; set invariance under each generator suffices
      auto s0 = dedupe(s.s0);
      std::set<Weight> base(s0.begin(), s0.end());
      for (const auto& r : s.lk2_pos) {
        std::set<Weight> img;
        for (const auto& x : s0) img.insert(reflect(r, x));
        if (img != base) v.fail(row.id + " " + spec.psi + ": S0 not stable under reflection in " + format_weight(r));
      }
    }
  }
  v.note << configs << " configurations, " << elements << " Weyl elements";
}

// ---------------------------------------------------------------- 6
void c6(Verdict& v) {
  int mus = 0;
  for (const char* a : {"3/2", "2", "5/2", "3", "4"}) {
    std::string lam = std::string(a) + ",-" + a + ",1/2,-1/2";
    Setup s = make_setup(pair("su22:sp11"), parse_weight(lam));
    double d = 0;
    BranchingTable t = timed("su22:sp11 " + lam, s, "theorem2", 20, &d);
    BranchingTable r = direct_restriction_rh(s, s.window(20));
    if (t.entries != r.entries) v.fail(lam + ": differs from rh");
    if (t.entries.empty()) v.fail(lam + ": empty");
    for (const auto& [mu, m] : t.entries) {
      ++mus;
      Certificate c = corollary1_decompose(s, mu);
      if (!c.found) {
        v.fail(lam + ": no certificate for " + format_weight(mu));
        continue;
      }
      Weight sum = s.lambda1 + s.rho_lk2 + s.rho0;
      for (const auto& [g, k] : c.terms) {
        if (k < 0) v.fail("negative coefficient");
        sum += Q(k) * g;
      }
      if (sum != mu) v.fail(lam + ": certificate does not sum to " + format_weight(mu));
    }
  }
  v.note << mus << " parameters certified over 5 values of a";
}

// ---------------------------------------------------------------- 7
void c7(Verdict& v) {
  std::vector<std::pair<const char*, const char*>> cases{
      {"1/2,-1/2", "1/2,-1/2"}, {"3/2,-3/2", "5/2,-5/2"}, {"2,-2", "7/2,-7/2"}, {"-3/2,3/2", "-1,1"}};
  for (auto [l, f] : cases) {
    Weight lam = parse_weight(l), phi = parse_weight(f);
    auto t0 = Clock::now();
    BranchingTable t = theorem3_tensor("su", {1, 1}, lam, phi, 30);
    BranchingTable o = tensor_ladder_oracle("su", {1, 1}, lam, phi, t.window);
    double d = since(t0);
    v.note << "(" << l << ")x(" << f << "): " << t.entries.size() << " entries " << d << "s; ";
    if (t.entries != o.entries) v.fail(std::string(l) + " x " + f + ": differs from the ladder oracle");
    if (max_multiplicity(t) != 1) v.fail(std::string(l) + " x " + f + ": multiplicity above 1");
    if (t.entries.size() < 10) v.fail("window too small");
    if (d > 10) v.fail("over 10 s");
  }
}

// ---------------------------------------------------------------- 8
void c8(Verdict& v) {
  double base = 0, ext = 0;
  std::size_t n = 0;
  std::vector<Computed> done = g_tables;
  for (const auto& c : done) {
    auto t0 = Clock::now();
    Window w = c.setup.window(c.cutoff + 10);
    BranchingTable big = run_method(c.setup, c.method, w);
    double e = since(t0);
    ext += e;
    base += c.seconds;
    if (std::getenv("DSB_VERBOSE")) std::fprintf(stderr, "%s base %.4f ext %.4f\n", c.label.c_str(), c.seconds, e);
    ++n;
    for (const auto& [p, m] : c.table.entries)
      if (big.at(p) != m) v.fail(c.label + ": entry changed at " + format_weight(p));
    for (const auto& [p, m] : big.entries)
      if (c.table.window.contains(p) && c.table.at(p) != m) v.fail(c.label + ": new entry inside old window");
  }
  std::ostringstream sum;
  sum << n << " tables; base " << base << "s, extended " << ext << "s, ratio " << ext / base;
  if (ext >= 2 * base) v.fail("entries stable but extended recomputation above 2x base runtime (" + sum.str() + ")");
  else v.note << sum.str();
}

// ---------------------------------------------------------------- 9
void c9(Verdict& v) {
  std::vector<std::pair<const char*, const char*>> cases{
      {"su21:u11", "3,1,-4"}, {"su21:u11", "4,1,-5"}, {"sp2r:u11", "3,2"}, {"sp2r:u11", "4,1"}, {"III-3", "5,2,1"}};
  for (auto [sel, lam] : cases) {
    Setup s = make_setup(pair(sel), parse_weight(lam));
    if (!s.psi.is_holomorphic()) {
      v.fail(std::string(sel) + " not holomorphic");
      continue;
    }
    std::vector<Z> mx;
    for (int c : {15, 25, 35}) mx.push_back(max_multiplicity(theorem1_restriction(s, s.window(c))));
    v.note << sel << "(" << lam << ") max " << mx[0].get_str() << "," << mx[1].get_str() << ","
           << mx[2].get_str() << "; ";
    if (mx[0] != mx[1] || mx[1] != mx[2]) v.fail(std::string(sel) + " maximum grows with the window");
  }
}

}  // namespace

int main() {
  std::vector<std::pair<std::string, std::function<void(Verdict&)>>> all{
      {"theorem1 equals rh on admissible configurations", c1},
      {"scalar holomorphic multiplicities are one", c2},
      {"compact branching matches the character oracle", c3},
      {"catalog admissibility and k1", c4},
      {"S_w multiset identity and S0 invariance", c5},
      {"theorem2 output has root-sum certificates", c6},
      {"tensor products of su(1,1) holomorphic series", c7},
      {"truncation stability at cutoff + 10", c8},
      {"max multiplicity stable under window growth", c9},
  };
  int failed = 0;
  for (std::size_t i = 0; i < all.size(); ++i) {
    Verdict v;
    auto t0 = Clock::now();
    try {
      all[i].second(v);
    } catch (const std::exception& e) {
      v.fail(std::string("exception: ") + e.what());
    }
    double d = since(t0);
    if (!v.ok) ++failed;
    std::printf("%s criterion %zu [%.2fs] %s -- %s\n", v.ok ? "PASS" : "FAIL", i + 1, d, all[i].first.c_str(),
                v.note.str().c_str());
    std::fflush(stdout);
  }
  return failed ? 1 : 0;
}
