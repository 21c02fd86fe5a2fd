#include <doctest.h>

#include <set>

#include "dsb/catalog.hpp"
#include "dsb/rootsys.hpp"

using namespace dsb;

namespace {

std::set<Weight> as_set(const std::vector<Weight>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_SUITE("rootsys") {

TEST_CASE("rationals and weights parse and print") {
  CHECK(parse_rational("3/6") == Q(1, 2));
  CHECK(format_rational(parse_rational("-4/2")) == "-2");
  Weight w = parse_weight("1/2,-3,0");
  CHECK(w == Weight(std::vector<Q>{Q(1, 2), -3, 0}));
  CHECK(parse_weight(" 1 , 2 ") == Weight{1, 2});
  CHECK_THROWS_AS(parse_weight("1,x"), PreconditionError);
  CHECK_THROWS_AS(parse_rational("1/0"), PreconditionError);
}

TEST_CASE("su(2,1) roots and colors") {
  RootSystem rs = build_root_system("su", {2, 1});
  CHECK(rs.all().size() == 6);
  Weight alpha{1, -1, 0}, beta{0, 1, -1};
  CHECK(rs.color_of(alpha) == Color::compact);
  CHECK(rs.color_of(beta) == Color::noncompact);
  CHECK(rs.color_of(alpha + beta) == Color::noncompact);
  CHECK(rs.color_of(-beta) == Color::noncompact);
  CHECK_FALSE(rs.is_root(alpha + alpha));
}

TEST_CASE("so(4,2) compact and noncompact split") {
  RootSystem rs = build_root_system("so", {2, 1});
  CHECK(as_set(rs.compact()) == std::set<Weight>{Weight{1, -1, 0}, Weight{1, 1, 0}, Weight{-1, 1, 0},
                                                  Weight{-1, -1, 0}});
  CHECK(rs.noncompact().size() == 8);
  for (const auto& r : rs.noncompact()) CHECK(r.c[2] != 0);
}

TEST_CASE("su(1,1) has no compact roots") {
  RootSystem rs = build_root_system("su", {1, 1});
  CHECK(rs.compact().empty());
  CHECK(rs.noncompact().size() == 2);
}

TEST_CASE("root system is closed under negation and reflections") {
  for (auto [f, r] : std::vector<std::pair<std::string, std::vector<int>>>{
           {"su", {2, 2}}, {"so", {2, 2}}, {"so_odd", {2, 1}}, {"sp", {1, 2}}, {"sp_r", {3}}, {"so_star", {3}}}) {
    RootSystem rs = build_root_system(f, r);
    for (const auto& a : rs.all()) {
      CHECK(rs.color_of(-a) == rs.color_of(a));
      for (const auto& b : rs.all()) {
        Weight s = b - (2 * dot(a, b) / dot(a, a)) * a;
        CHECK(rs.is_root(s));
      }
    }
  }
}

TEST_CASE("exceptional families are catalog only") {
  CHECK_THROWS_WITH_AS(build_root_system("e6(2)", {}), doctest::Contains("catalog-only"), PreconditionError);
}

TEST_CASE("psi_from_parameter chambers for su(2,1)") {
  RootSystem rs = build_root_system("su", {2, 1});
  PositiveSystem delta = positive_system_from_order(rs, "e1>e2>d1");
  Weight alpha{1, -1, 0}, beta{0, 1, -1};
  auto p = psi_from_parameter(Weight{3, 1, -4}, rs, delta);
  CHECK(as_set(p.all()) == std::set<Weight>{alpha, beta, alpha + beta});
  // (l,a)>0, (l,a+b)>0, (l,b)<0
  auto q = psi_from_parameter(Weight{2, -2, 0}, rs, delta);
  CHECK(as_set(q.all()) == std::set<Weight>{alpha, -beta, alpha + beta});
  CHECK_THROWS_WITH_AS(psi_from_parameter(Weight{1, 1, -2}, rs, delta), doctest::Contains("non-regular"),
                       PreconditionError);
}

TEST_CASE("positive systems are closed and contain one of each pair") {
  RootSystem rs = build_root_system("so", {2, 2});
  for (const char* word : {"e1>e2>d1>d2", "e1>d1>e2>-d2", "d2>e1>-d1>e2"}) {
    auto p = positive_system_from_order(rs, word);
    CHECK(p.all().size() * 2 == rs.all().size());
    auto s = as_set(p.all());
    for (const auto& a : rs.all()) CHECK((s.count(a) + s.count(-a)) == 1);
    CHECK(closed_under_addition(p.all(), rs.all()));
  }
}

TEST_CASE("Weyl group sizes and signs") {
  auto a1 = weyl_group({Weight{1, -1}}, 2);
  CHECK(a1.size() == 2);
  auto a2 = weyl_group({Weight{1, -1, 0}, Weight{0, 1, -1}}, 3);
  CHECK(a2.size() == 6);
  int plus = 0;
  for (const auto& w : a2) plus += w.sign == 1;
  CHECK(plus == 3);
  auto b2 = weyl_group({Weight{1, -1}, Weight{0, 1}}, 2);
  CHECK(b2.size() == 8);
  auto c2 = weyl_group({Weight{1, -1}, Weight{0, 2}}, 2);
  CHECK(c2.size() == 8);
  CHECK_THROWS(weyl_group({Weight{1, -1, 0}, Weight{0, 1, -1}}, 3, 5));
}

TEST_CASE("Weyl action is orthogonal") {
  RootSystem rs = build_root_system("sp", {1, 2});
  auto W = weyl_group(rs, positive_system_from_order(rs, "e1>d1>d2"));
  auto roots = rs.all();
  for (const auto& w : W)
    for (const auto& a : roots)
      for (const auto& b : roots) CHECK(dot(w.apply(a), w.apply(b)) == dot(a, b));
}

TEST_CASE("restrict keeps multiplicity") {
  // so(2m,2), sigma(d1) = -d1
  InvolutionSpec s = InvolutionSpec::identity(3);
  s.sigma.sgn = {1, 1, -1};
  auto r = restrict(s, {Weight{0, 1, -1}, Weight{0, 1, 1}});
  CHECK(r == std::vector<Weight>{Weight{0, 1, 0}, Weight{0, 1, 0}});
  InvolutionSpec id = InvolutionSpec::identity(3);
  std::vector<Weight> S{Weight{1, 0, 0}, Weight{1, 0, 0}, Weight{0, 1, -1}};
  CHECK(restrict(id, S) == S);
}

TEST_CASE("su(2,2n) involution fixed basis") {
  SymmetricPair p = build_pair(Catalog::builtin().find("II-1"));
  auto basis = p.sigma.fixed_basis();
  CHECK(basis.size() == 4);  // e1-e2 and d_r - d_{7-r}, r = 1..3
  CHECK(p.sigma.project(Weight{1, 0, 0, 0, 0, 0, 0, 0}) == Q(1, 2) * Weight{1, -1, 0, 0, 0, 0, 0, 0});
  CHECK(p.sigma.project(Weight{0, 0, 1, 0, 0, 0, 0, 0}) == Q(1, 2) * Weight{0, 0, 1, 0, 0, 0, 0, -1});
}

TEST_CASE("half sums") {
  CHECK(half_sum({}, 3).is_zero());
  Weight alpha{1, -1, 0}, beta{0, 1, -1};
  CHECK(half_sum({beta, alpha + beta}, 3) == Q(1, 2) * (alpha + beta + beta));
  // rho_n is orthogonal to compact simple roots
  RootSystem rs = build_root_system("su", {2, 3});
  auto psi = positive_system_from_order(rs, "e1>d1>d2>d3>e2");
  Weight rn = half_sum(psi.noncompact(), rs.dim());
  for (const auto& a : simple_roots(psi.all()))
    if (rs.color_of(a) == Color::compact) CHECK(dot(rn, a) == 0);
}

TEST_CASE("W_K2 preserves the noncompact positives") {
  SymmetricPair p = build_pair(Catalog::builtin().find("I-1"));
  auto psi = named_system(p.rs, "a=1");
  K1Split k = k1_subalgebra(p, psi);
  std::vector<Weight> k2pos;
  for (const auto& r : k.k2_roots)
    if (psi.contains(r)) k2pos.push_back(r);
  auto nc = as_set(psi.noncompact());
  for (const auto& w : weyl_group(simple_roots(k2pos), p.rs.dim())) {
    std::set<Weight> img;
    for (const auto& x : nc) img.insert(w.apply(x));
    CHECK(img == nc);
  }
}

TEST_CASE("reflection compatibility for restricted roots") {
  // so(6,2) with sigma(d1) = -d1: a = e3 - d1 has q(a) = e3 in Phi(h,u), a + sigma a = 2 e3 not a root
  SymmetricPair p = build_pair(Catalog::builtin().find("II-5"));
  Weight a{0, 0, 1, -1};
  Weight sa = p.sigma.apply(a);
  REQUIRE_FALSE(p.rs.is_root(a + sa));
  Weight qa = p.sigma.project(a);
  auto refl = [](const Weight& r, const Weight& x) { return x - (2 * dot(x, r) / dot(r, r)) * r; };
  for (int x = -2; x <= 2; ++x)
    for (int y = -2; y <= 2; ++y)
      for (int z = -2; z <= 2; ++z)
        for (int t = -1; t <= 1; ++t) {
          Weight g{x, y, z, t};
          CHECK(refl(qa, p.sigma.project(g)) == p.sigma.project(refl(a, refl(sa, g))));
        }
  // sigma-fixed root: the two reflections commute with q
  Weight b{0, 1, -1, 0};
  for (int x = -2; x <= 2; ++x)
    for (int t = -2; t <= 2; ++t) {
      Weight g{x, 1, t, t};
      CHECK(refl(b, p.sigma.project(g)) == p.sigma.project(refl(b, g)));
    }
}

}  // TEST_SUITE
