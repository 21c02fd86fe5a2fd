#include <doctest.h>

#include <set>

#include "dsb/catalog.hpp"

using namespace dsb;

namespace {

std::set<Weight> as_set(const std::vector<Weight>& v) { return {v.begin(), v.end()}; }

std::vector<Weight> positive_half(const std::vector<Weight>& roots, const PositiveSystem& psi) {
  std::vector<Weight> out;
  for (const auto& r : roots)
    if (psi.contains(r)) out.push_back(r);
  return out;
}

}  // namespace

TEST_SUITE("catalog") {

TEST_CASE("row counts and filters") {
  const Catalog& c = Catalog::builtin();
  CHECK(c.list_pairs({"I", ""}).size() == 16);
  auto t2 = c.list_pairs({"II", ""});
  CHECK(t2.size() == 6);
  bool e6 = false;
  for (const auto& r : t2)
    if (r.g == "e6(2)" && r.h == "f4(4)" && r.h0 == "sp(3,1)" && r.k1_label == "su2(alpha_m)") e6 = true;
  CHECK(e6);
  auto sp = c.list_pairs({"", "sp(m,n)"});
  REQUIRE(sp.size() == 1);
  CHECK(sp[0].k1_label == "sp(m)");
  auto snn = c.list_pairs({"III", "su(n,n)"});
  bool so_star = false;
  for (const auto& r : snn)
    if (r.h == "so*(2n)" && r.h0 == "sp(n,R)") so_star = true;
  CHECK(so_star);
  CHECK(c.rows().size() == 36);
}

TEST_CASE("serialization round trip") {
  const Catalog& c = Catalog::builtin();
  std::string text = c.to_json_text();
  Catalog d = Catalog::from_json_text(text);
  CHECK(d.to_json_text() == text);
  CHECK(d.version() == c.version());
  CHECK(d.rows().size() == c.rows().size());
  CHECK_THROWS_AS(Catalog::from_json_text("{\"rows\": 3}"), PreconditionError);
}

TEST_CASE("selectors") {
  const Catalog& c = Catalog::builtin();
  CHECK(c.find("su21:u11").id == "III-1");
  CHECK(c.find("su-m-n:k").id == "I-1");
  CHECK_THROWS_AS(c.find("nope"), PreconditionError);
  CHECK_THROWS_WITH_AS(build_pair(c.find("II-6")), doctest::Contains("catalog-only"), PreconditionError);
}

TEST_CASE("k1 examples") {
  const Catalog& c = Catalog::builtin();
  {
    auto p = build_pair(c.find("I-1"));
    auto k = k1_subalgebra(p, named_system(p.rs, "a=1"));
    CHECK(as_set(k.k1_roots) == std::set<Weight>{Weight{1, -1, 0, 0, 0}, Weight{-1, 1, 0, 0, 0}});
    CHECK(k.z1_dim == 0);
  }
  {
    auto p = build_pair(c.find("III-1"));
    auto k = k1_subalgebra(p, named_system(p.rs, "holo"));
    CHECK(k.k1_roots.empty());
    CHECK(k.z1_dim == 1);
  }
  {
    auto p = build_pair(c.find("II-5"));
    for (const char* s : {"S+3", "S-3"}) {
      auto k = k1_subalgebra(p, named_system(p.rs, s));
      CHECK(k.k1_roots.size() == 12);  // so(6)
      CHECK(as_set(k.k1_roots) == as_set(p.rs.compact()));
    }
  }
}

TEST_CASE("admissibility examples") {
  const Catalog& c = Catalog::builtin();
  auto p2 = build_pair(c.find("II-1"));
  CHECK(is_admissible(p2, named_system(p2.rs, "a=1")));
  auto p1 = build_pair(c.find("I-1"));
  auto bad = named_system(p1.rs, "e1>d1>e2>d2>d3");
  CHECK_FALSE(is_admissible(p1, bad));
  CHECK(admissibility_witness(p1, bad).find("not in l") != std::string::npos);
  auto p5 = build_pair(c.find("II-5"));
  for (const char* s : {"S+1", "S+2", "S-1", "S-2"}) CHECK_FALSE(is_admissible(p5, named_system(p5.rs, s)));
  // sigma does not preserve a holomorphic system of su(2,2) for sp(1,1)
  auto p3 = build_pair(c.find("II-2"));
  CHECK(admissibility_witness(p3, named_system(p3.rs, "holo")) == "non-invariant positive system");
}

TEST_CASE("every catalog system matches its recorded verdict and k1") {
  for (const auto& row : Catalog::builtin().rows()) {
    if (!row.instance) {
      CHECK(row.admissible.value_or(false));
      continue;
    }
    CAPTURE(row.id);
    auto p = build_pair(row);
    p.validate();
    for (const auto& spec : row.instance->systems) {
      CAPTURE(spec.psi);
      auto psi = named_system(p.rs, spec.psi);
      CHECK(is_admissible(p, psi) == spec.admissible);
      if (!spec.admissible) continue;
      auto k = k1_subalgebra(p, psi);
      CHECK(as_set(k.k1_roots) == as_set(expected_k1_roots(p.rs, spec.k1)));
      CHECK(k.z1_dim == (psi.is_holomorphic() ? 1 : 0));
    }
  }
}

TEST_CASE("k1 root counts follow the row labels") {
  // positive root counts of su(m), so(2m), sp(m), su2, center
  for (const auto& row : Catalog::builtin().rows()) {
    if (!row.instance) continue;
    CAPTURE(row.id);
    auto p = build_pair(row);
    int m = p.rs.ranks[0], n = p.rs.ranks.size() > 1 ? p.rs.ranks[1] : 0;
    std::size_t want = 0;
    const std::string& l = row.k1_label;
    if (l == "su(m)") want = m * (m - 1) / 2;
    else if (l == "su(n)") want = n * (n - 1) / 2;
    else if (l == "so(2m)") want = m * (m - 1);
    else if (l == "sp(m)") want = m * m;
    else if (l == "su2(alpha_m)") want = 1;
    else if (l == "Z_K") want = 0;
    else FAIL("unexpected label " << l);
    for (const auto& spec : row.instance->systems) {
      if (!spec.admissible) continue;
      auto psi = named_system(p.rs, spec.psi);
      CHECK(positive_half(k1_subalgebra(p, psi).k1_roots, psi).size() == want);
    }
  }
}

TEST_CASE("z1 is trivial for the admissible nonholomorphic systems") {
  for (const auto& row : Catalog::builtin().rows()) {
    if (!row.instance) continue;
    auto p = build_pair(row);
    for (const auto& spec : row.instance->systems) {
      auto psi = named_system(p.rs, spec.psi);
      if (spec.admissible && !psi.is_holomorphic()) CHECK(k1_subalgebra(p, psi).z1_dim == 0);
    }
  }
}

TEST_CASE("restricted root multisets") {
  for (const auto& row : Catalog::builtin().rows()) {
    if (!row.instance) continue;
    CAPTURE(row.id);
    auto p = build_pair(row);
    // h + h0 + (q cap k) counts l twice
    auto all = restrict(p.sigma, p.rs.all());
    auto l = p.phi_l();
    all.insert(all.end(), l.begin(), l.end());
    auto sum = p.phi_h();
    auto h0 = p.phi_h0(), qk = p.phi_qk();
    sum.insert(sum.end(), h0.begin(), h0.end());
    sum.insert(sum.end(), qk.begin(), qk.end());
    CHECK(multiset_equal(all, sum));
    auto nc = restrict(p.sigma, p.rs.noncompact());
    auto hn = p.phi_h_noncompact(), h0n = p.phi_h0_noncompact();
    hn.insert(hn.end(), h0n.begin(), h0n.end());
    CHECK(multiset_equal(nc, hn));
    // compact parts of h and h0 agree: both are Phi(l)
    auto lc = p.phi_l();
    CHECK(multiset_equal(multiset_minus(p.phi_h(), p.phi_h_noncompact()), lc));
    CHECK(multiset_equal(multiset_minus(p.phi_h0(), p.phi_h0_noncompact()), lc));
  }
}

TEST_CASE("swapping h and h0 keeps admissibility and k1") {
  for (const auto& row : Catalog::builtin().rows()) {
    if (!row.instance) continue;
    CAPTURE(row.id);
    auto p = build_pair(row), q = p.swapped();
    CHECK(multiset_equal(q.phi_h(), p.phi_h0()));
    for (const auto& spec : row.instance->systems) {
      if (!spec.admissible) continue;
      auto psi = named_system(p.rs, spec.psi);
      CHECK(is_admissible(q, psi));
      CHECK(as_set(k1_subalgebra(q, psi).k1_roots) == as_set(k1_subalgebra(p, psi).k1_roots));
    }
  }
}

TEST_CASE("induced systems") {
  const Catalog& c = Catalog::builtin();
  {
    // su(2,3), Psi_1, h = s(u(2,1)+u(2)): order e1 > d1 > e2 on h
    auto p = build_pair(c.find("I-1"));
    auto ind = induced_systems(p, named_system(p.rs, "a=1"));
    auto ref = positive_system_from_order(p.rs, "e1>d1>e2>d2>d3");
    CHECK(as_set(ind.psi_h) == as_set(positive_half(p.phi_h(), ref)));
    CHECK(as_set(ind.delta0) == as_set(positive_half(p.phi_l(), ref)));
  }
  {
    auto p = build_pair(c.find("II-5"));
    auto sp = induced_systems(p, named_system(p.rs, "S+3"));
    CHECK(as_set(simple_roots(sp.psi_h)) ==
          std::set<Weight>{Weight{1, -1, 0, 0}, Weight{0, 1, -1, 0}, Weight{0, 0, 1, 0}});
    auto sm = induced_systems(p, named_system(p.rs, "S-3"));
    CHECK(as_set(simple_roots(sm.psi_h)) ==
          std::set<Weight>{Weight{1, -1, 0, 0}, Weight{0, 1, 1, 0}, Weight{0, 0, -1, 0}});
  }
  {
    auto p = build_pair(c.find("II-2"));
    CHECK_THROWS_WITH_AS(induced_systems(p, named_system(p.rs, "holo")),
                         doctest::Contains("non-invariant"), PreconditionError);
  }
}

TEST_CASE("parameter decomposition for su(2,1) and t + sl2(beta)") {
  auto p = build_pair(Catalog::builtin().find("su21:u11"));
  Weight alpha{1, -1, 0}, beta{0, 1, -1};
  for (auto [a, b] : std::vector<std::pair<Q, Q>>{{2, 1}, {Q(1, 2), 3}, {-1, Q(5, 2)}}) {
    Weight mu = a * (2 * beta + alpha) + b * alpha;
    auto d = decompose_parameter(mu, p);
    CHECK(d.center_part == Q((a + b) / 2) * (2 * alpha + beta));
    CHECK(d.semisimple_part == Q((3 * a - b) / 2) * beta);
    CHECK(d.center_part + d.semisimple_part == mu);
  }
  auto z = decompose_parameter(Weight(3), p);
  CHECK(z.center_part.is_zero());
  CHECK(z.semisimple_part.is_zero());
  CHECK_THROWS_AS(decompose_parameter(Weight{1, 0, 0}, p), PreconditionError);
}

}  // TEST_SUITE
