#include "dsb/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <regex>
#include <set>
#include <sstream>

#include "json.hpp"

#ifndef DSB_CATALOG_PATH
#define DSB_CATALOG_PATH "data/catalog.json"
#endif

namespace dsb {

using ojson = nlohmann::ordered_json;

// ------------------------------------------------------------ SymmetricPair

bool SymmetricPair::fixed_in_h(const Weight& alpha) const {
  auto col = rs.color_of(alpha);
  if (!col) throw ConsistencyError("not a root: " + format_weight(alpha));
  Q p = dot(alpha, grading);
  if (p.get_den() != 1)
    throw ConsistencyError("grading pairs non-integrally with " + format_weight(alpha));
  bool odd = mpz_odd_p(p.get_num().get_mpz_t()) != 0;
  int s = (*col == Color::compact ? sign_compact : sign_noncompact) * (odd ? -1 : 1);
  return s == 1;
}

namespace {

struct Parts {
  std::vector<Weight> h_c, h_n, q_c, q_n;
};

Parts split_roots(const SymmetricPair& p) {
  Parts out;
  for (const auto& r : p.rs.roots) {
    Weight s = p.sigma.apply(r.w);
    bool compact = r.color == Color::compact;
    if (s == r.w) {
      bool in_h = p.fixed_in_h(r.w);
      auto& dst = in_h ? (compact ? out.h_c : out.h_n) : (compact ? out.q_c : out.q_n);
      dst.push_back(r.w);
    } else if (r.w < s) {
      // the pair {a, sigma a} restricts to one copy in h and one in q
      Weight x = p.sigma.project(r.w);
      if (x.is_zero()) throw ConsistencyError("restricted root vanishes: " + format_weight(r.w));
      (compact ? out.h_c : out.h_n).push_back(x);
      (compact ? out.q_c : out.q_n).push_back(x);
    }
  }
  return out;
}

std::vector<Weight> cat(std::vector<Weight> a, const std::vector<Weight>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

std::vector<Weight> SymmetricPair::phi_h() const {
  auto p = split_roots(*this);
  return cat(p.h_c, p.h_n);
}
std::vector<Weight> SymmetricPair::phi_h0() const {
  auto p = split_roots(*this);
  return cat(p.h_c, p.q_n);
}
std::vector<Weight> SymmetricPair::phi_l() const { return split_roots(*this).h_c; }
std::vector<Weight> SymmetricPair::phi_qk() const { return split_roots(*this).q_c; }
std::vector<Weight> SymmetricPair::phi_h_noncompact() const { return split_roots(*this).h_n; }
std::vector<Weight> SymmetricPair::phi_h0_noncompact() const { return split_roots(*this).q_n; }

Subspace SymmetricPair::t_span() const { return Subspace::span(rs.all(), rs.dim()); }
Subspace SymmetricPair::u_span() const {
  return Subspace::span(restrict(sigma, rs.all()), rs.dim());
}

SymmetricPair SymmetricPair::swapped() const {
  SymmetricPair s = *this;
  s.sign_noncompact = -sign_noncompact;
  std::swap(s.h_label, s.h0_label);
  s.name = name + "~";
  return s;
}

void SymmetricPair::validate() const {
  std::size_t n = rs.dim();
  if (sigma.sigma.perm.size() != n || grading.dim() != n)
    throw PreconditionError("pair '" + name + "': dimension mismatch");
  if (!(sigma.sigma * sigma.sigma == WeylElement::identity(n)))
    throw PreconditionError("pair '" + name + "': sigma is not an involution");
  for (const auto& r : rs.roots) {
    auto c = rs.color_of(sigma.apply(r.w));
    if (!c || *c != r.color)
      throw PreconditionError("pair '" + name + "': sigma does not preserve roots and colors at " +
                              format_weight(r.w));
    if (sigma.apply(r.w) == r.w) fixed_in_h(r.w);  // integrality check
  }
}

// ------------------------------------------------------------------ K1

K1Split k1_subalgebra(const SymmetricPair& pair, const PositiveSystem& psi) {
  const RootSystem& rs = pair.rs;
  std::size_t n = rs.dim();
  auto comp = rs.compact();

  // simple ideals of k: connected components of the compact roots
  std::vector<int> cid(comp.size(), -1);
  int ncomp = 0;
  for (std::size_t i = 0; i < comp.size(); ++i) {
    if (cid[i] >= 0) continue;
    std::vector<std::size_t> stack{i};
    cid[i] = ncomp;
    while (!stack.empty()) {
      std::size_t a = stack.back();
      stack.pop_back();
      for (std::size_t b = 0; b < comp.size(); ++b)
        if (cid[b] < 0 && dot(comp[a], comp[b]) != 0) {
          cid[b] = ncomp;
          stack.push_back(b);
        }
    }
    ++ncomp;
  }

  // brackets [g_a, g_b] with a, b positive noncompact
  std::set<int> chosen;
  auto nc = psi.noncompact();
  for (const auto& a : nc)
    for (const auto& b : nc) {
      Weight s = a + b;
      auto c = rs.color_of(s);
      if (c && *c == Color::compact)
        for (std::size_t i = 0; i < comp.size(); ++i)
          if (comp[i] == s) chosen.insert(cid[i]);
    }

  K1Split out;
  for (std::size_t i = 0; i < comp.size(); ++i)
    (chosen.count(cid[i]) ? out.k1_roots : out.k2_roots).push_back(comp[i]);

  Subspace t = pair.t_span();
  if (pair.k1_center) {
    out.z1_dim = 1;
    out.t1 = Subspace::span({*pair.k1_center}, n);
  } else if (chosen.empty()) {
    if (!psi.is_holomorphic())
      throw ConsistencyError("no bracket seeds for a nonholomorphic system");
    out.z1_dim = 1;
    out.t1 = Subspace::span(comp, n).complement_in(t);
  } else {
    out.t1 = Subspace::span(out.k1_roots, n);
  }
  out.t2 = out.t1.complement_in(t);
  return out;
}

bool sigma_invariant(const SymmetricPair& pair, const PositiveSystem& psi) {
  for (const auto& r : psi.positives)
    if (!psi.contains(pair.sigma.apply(r.w))) return false;
  return true;
}

std::string admissibility_witness(const SymmetricPair& pair, const PositiveSystem& psi) {
  if (!sigma_invariant(pair, psi)) return "non-invariant positive system";
  K1Split k = k1_subalgebra(pair, psi);
  for (const auto& a : k.k1_roots) {
    if (pair.sigma.apply(a) != a) return "k1 root " + format_weight(a) + " is not sigma-fixed";
    if (!pair.fixed_in_h(a)) return "k1 root " + format_weight(a) + " is not in l";
  }
  if (k.z1_dim == 1)
    for (const auto& b : k.t1.basis)
      if (pair.sigma.apply(b) != b) return "center direction " + format_weight(b) + " is not in u";
  return "";
}

// ------------------------------------------------------------ induced systems

InducedSystems induced_systems(const SymmetricPair& pair, const PositiveSystem& psi) {
  if (!sigma_invariant(pair, psi)) throw PreconditionError("non-invariant positive system");
  InducedSystems out;
  // rho of an invariant system is sigma-fixed, so already regular in u
  out.direction = half_sum(psi.all(), pair.rs.dim());
  if (pair.sigma.apply(out.direction) != out.direction)
    throw ConsistencyError("rho of an invariant system is not sigma-fixed");
  Parts p = split_roots(pair);
  out.delta0 = positives_against(p.h_c, out.direction);
  out.psi_h_n = positives_against(p.h_n, out.direction);
  out.psi_h0_n = positives_against(p.q_n, out.direction);
  out.psi_h = cat(out.delta0, out.psi_h_n);
  out.psi_h0 = cat(out.delta0, out.psi_h0_n);
  return out;
}

ParameterSplit decompose_parameter(const Weight& mu, const SymmetricPair& pair) {
  Subspace u = pair.u_span();
  if (!u.contains(mu)) throw PreconditionError("parameter " + format_weight(mu) + " is not in u*");
  Subspace hs = Subspace::span(pair.phi_h(), pair.rs.dim());
  Subspace z = hs.complement_in(u);
  ParameterSplit out;
  out.center_part = z.project(mu);
  out.semisimple_part = hs.project(mu);
  if (out.center_part + out.semisimple_part != mu)
    throw ConsistencyError("parameter split does not reassemble");
  return out;
}

// ---------------------------------------------------------- named systems

Weight parse_root_expr(const RootSystem& rs, const std::string& s) {
  static const std::regex term(R"(([+-]?)\s*(\d*)\s*([a-z][a-z.]*\d+))");
  Weight w(rs.dim());
  std::string rest;
  for (char c : s)
    if (!isspace(static_cast<unsigned char>(c))) rest += c;
  if (rest.empty()) throw PreconditionError("empty root expression");
  auto it = std::sregex_iterator(rest.begin(), rest.end(), term);
  std::size_t consumed = 0;
  for (; it != std::sregex_iterator(); ++it) {
    const auto& m = *it;
    if (static_cast<std::size_t>(m.position()) != consumed)
      throw PreconditionError("cannot parse root expression '" + s + "'");
    consumed += m.length();
    Q coef = m[2].length() ? Q(std::stol(m[2].str())) : Q(1);
    if (m[1] == "-") coef = -coef;
    w.c[rs.coordinate(m[3].str())] += coef;
  }
  if (consumed != rest.size()) throw PreconditionError("cannot parse root expression '" + s + "'");
  return w;
}

namespace {

std::string join(const std::vector<std::string>& v) {
  std::string out;
  for (const auto& x : v) out += (out.empty() ? "" : ">") + x;
  return out;
}

std::vector<std::string> block(const char* p, int from, int to) {
  std::vector<std::string> out;
  for (int i = from; i <= to; ++i) out.push_back(p + std::to_string(i));
  return out;
}

std::vector<std::string> operator+(std::vector<std::string> a, const std::vector<std::string>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::string neg(const std::string& s) { return "-" + s; }

}  // namespace

std::string order_word_for(const RootSystem& rs, const std::string& psi) {
  if (psi.find('>') != std::string::npos) return psi;
  if (rs.family.rfind("prod:", 0) == 0) throw PreconditionError("named systems need an order word");
  int m = 0, n = 0;
  for (const auto& l : rs.labels) (l[0] == 'e' ? m : n)++;
  auto E = [&](int a, int b) { return block("e", a, b); };
  auto D = [&](int a, int b) { return block("d", a, b); };

  if (!psi.empty() && psi[0] == 'w') {
    if (m != n) throw PreconditionError("w-swapped system needs equal blocks");
    std::string w = order_word_for(rs, psi.substr(1));
    for (auto& ch : w) ch = ch == 'e' ? 'd' : ch == 'd' ? 'e' : ch;
    return w;
  }
  if (psi == "holo" || psi == "plus" || psi == "+" || psi == "11") return join(E(1, m) + D(1, n));
  if (psi == "holo-") return join(D(1, n) + E(1, m));
  if (psi == "minus" || psi == "-" || psi == "1-1") {
    if (m < 1) throw PreconditionError("system '" + psi + "' needs an e block");
    auto v = E(1, m - 1) + std::vector<std::string>{neg("e" + std::to_string(m))};
    if (n > 0) v = v + D(1, n - 1) + std::vector<std::string>{neg("d" + std::to_string(n))};
    return join(v);
  }
  std::smatch mt;
  static const std::regex ab(R"(([ab])=(\d+))"), S(R"(S([+-])(\d+))");
  if (std::regex_match(psi, mt, ab)) {
    int k = std::stoi(mt[2].str());
    if (mt[1] == "a") {
      if (k < 0 || k > m) throw PreconditionError("a out of range in '" + psi + "'");
      return join(E(1, k) + D(1, n) + E(k + 1, m));
    }
    if (k < 0 || k > n) throw PreconditionError("b out of range in '" + psi + "'");
    return join(D(1, k) + E(1, m) + D(k + 1, n));
  }
  if (std::regex_match(psi, mt, S)) {
    int a = std::stoi(mt[2].str());
    if (n < 1 || m < 1 || a < 0 || a > m) throw PreconditionError("bad S order '" + psi + "'");
    bool minus = mt[1] == "-";
    std::string em = "e" + std::to_string(m), d1 = "d1";
    if (minus) {
      em = neg(em);
      if (a < m) d1 = neg(d1);
    }
    if (a == m) return join(E(1, m - 1) + std::vector<std::string>{em, d1} + D(2, n));
    return join(E(1, a) + std::vector<std::string>{d1} + E(a + 1, m - 1) +
                std::vector<std::string>{em} + D(2, n));
  }
  throw PreconditionError("unknown positive system '" + psi + "'");
}

PositiveSystem named_system(const RootSystem& rs, const std::string& psi) {
  return positive_system_from_order(rs, order_word_for(rs, psi));
}

std::vector<Weight> root_closure(const std::vector<Weight>& simple) {
  std::set<Weight> s;
  for (const auto& a : simple) {
    s.insert(a);
    s.insert(-a);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Weight> cur(s.begin(), s.end());
    for (const auto& a : cur)
      for (const auto& b : cur) {
        Weight r = b - (Q(2) * dot(a, b) / dot(a, a)) * a;
        if (s.insert(r).second) grew = true;
      }
  }
  return {s.begin(), s.end()};
}

std::vector<Weight> expected_k1_roots(const RootSystem& rs, const std::string& k1) {
  if (k1 == "center" || k1.empty()) return {};
  std::vector<Weight> simple;
  std::stringstream ss(k1);
  std::string tok;
  while (std::getline(ss, tok, ',')) simple.push_back(parse_root_expr(rs, tok));
  return root_closure(simple);
}

// ------------------------------------------------------------------ catalog

namespace {

std::pair<int, int> signed_label(const RootSystem& rs, std::string s) {
  int sg = 1;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    sg = s[0] == '-' ? -1 : 1;
    s = s.substr(1);
  }
  return {rs.coordinate(s), sg};
}

std::vector<std::pair<std::string, std::string>> read_map(const ojson& j) {
  std::vector<std::pair<std::string, std::string>> out;
  if (j.is_null()) return out;
  for (auto it = j.begin(); it != j.end(); ++it)
    out.push_back({it.key(), it->is_string() ? it->get<std::string>() : it->dump()});
  return out;
}

ojson write_map(const std::vector<std::pair<std::string, std::string>>& m) {
  ojson j = ojson::object();
  for (const auto& [k, v] : m) j[k] = v;
  return j;
}

PairTableRow row_from_json(const ojson& j) {
  PairTableRow r;
  r.id = j.at("id").get<std::string>();
  r.table = j.at("table").get<std::string>();
  r.g = j.at("g").get<std::string>();
  r.h = j.at("h").get<std::string>();
  r.h0 = j.at("h0").get<std::string>();
  r.psi_spec = j.at("psi").get<std::string>();
  r.k1_label = j.at("k1").get<std::string>();
  if (j.contains("aliases")) r.aliases = j["aliases"].get<std::vector<std::string>>();
  if (j.contains("admissible")) r.admissible = j["admissible"].get<bool>();
  if (j.contains("instance") && !j["instance"].is_null()) {
    const auto& in = j["instance"];
    PairInstance p;
    p.family = in.at("family").get<std::string>();
    p.ranks = in.at("ranks").get<std::vector<int>>();
    if (in.contains("sigma")) p.sigma = read_map(in["sigma"]);
    if (in.contains("grading")) p.grading = read_map(in["grading"]);
    p.sign_compact = in.value("sign_compact", 1);
    p.sign_noncompact = in.value("sign_noncompact", 1);
    for (const auto& s : in.at("systems")) {
      SystemSpec sp;
      sp.psi = s.at("psi").get<std::string>();
      sp.k1 = s.value("k1", std::string());
      sp.admissible = s.value("admissible", true);
      p.systems.push_back(sp);
    }
    r.instance = p;
  }
  return r;
}

ojson row_to_json(const PairTableRow& r) {
  ojson j;
  j["id"] = r.id;
  j["table"] = r.table;
  j["g"] = r.g;
  j["h"] = r.h;
  j["h0"] = r.h0;
  j["psi"] = r.psi_spec;
  j["k1"] = r.k1_label;
  if (!r.aliases.empty()) j["aliases"] = r.aliases;
  if (r.admissible) j["admissible"] = *r.admissible;
  if (r.instance) {
    const auto& p = *r.instance;
    ojson in;
    in["family"] = p.family;
    in["ranks"] = p.ranks;
    if (!p.sigma.empty()) in["sigma"] = write_map(p.sigma);
    if (!p.grading.empty()) in["grading"] = write_map(p.grading);
    if (p.sign_compact != 1) in["sign_compact"] = p.sign_compact;
    if (p.sign_noncompact != 1) in["sign_noncompact"] = p.sign_noncompact;
    ojson sys = ojson::array();
    for (const auto& s : p.systems) {
      ojson e;
      e["psi"] = s.psi;
      if (!s.k1.empty()) e["k1"] = s.k1;
      if (!s.admissible) e["admissible"] = false;
      sys.push_back(e);
    }
    in["systems"] = sys;
    j["instance"] = in;
  } else {
    j["instance"] = nullptr;
  }
  return j;
}

}  // namespace

Catalog Catalog::from_json_text(const std::string& text) {
  Catalog c;
  ojson j;
  try {
    j = ojson::parse(text);
    c.version_ = j.at("version").get<std::string>();
    for (const auto& r : j.at("rows")) c.rows_.push_back(row_from_json(r));
  } catch (const nlohmann::json::exception& e) {
    throw PreconditionError(std::string("malformed catalog: ") + e.what());
  }
  return c;
}

std::string Catalog::to_json_text() const {
  ojson j;
  j["version"] = version_;
  j["rows"] = ojson::array();
  for (const auto& r : rows_) j["rows"].push_back(row_to_json(r));
  return j.dump(2) + "\n";
}

const Catalog& Catalog::builtin() {
  static const Catalog c = [] {
    const char* env = std::getenv("DSB_CATALOG");
    std::string path = env && *env ? env : DSB_CATALOG_PATH;
    std::ifstream in(path);
    if (!in) throw PreconditionError("cannot open catalog file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return from_json_text(ss.str());
  }();
  return c;
}

std::vector<PairTableRow> Catalog::list_pairs(const PairFilter& f) const {
  std::vector<PairTableRow> out;
  for (const auto& r : rows_)
    if ((f.table.empty() || r.table == f.table) && (f.g.empty() || r.g == f.g)) out.push_back(r);
  return out;
}

const PairTableRow& Catalog::find(const std::string& selector) const {
  for (const auto& r : rows_) {
    if (r.id == selector) return r;
    for (const auto& a : r.aliases)
      if (a == selector) return r;
  }
  throw PreconditionError("unknown pair selector '" + selector + "'");
}

SymmetricPair build_pair(const PairTableRow& row) {
  if (!row.instance) throw PreconditionError("catalog-only row '" + row.id + "' has no instance");
  const auto& in = *row.instance;
  SymmetricPair p;
  p.name = row.id;
  p.h_label = row.h;
  p.h0_label = row.h0;
  p.rs = build_root_system(in.family, in.ranks);
  std::size_t n = p.rs.dim();
  WeylElement s = WeylElement::identity(n);
  for (const auto& [from, to] : in.sigma) {
    int i = p.rs.coordinate(from);
    auto [j, sg] = signed_label(p.rs, to);
    s.perm[i] = j;
    s.sgn[i] = sg;
  }
  std::vector<int> check = s.perm;
  std::sort(check.begin(), check.end());
  for (std::size_t i = 0; i < n; ++i)
    if (check[i] != static_cast<int>(i))
      throw PreconditionError("pair '" + row.id + "': sigma is not a permutation");
  p.sigma.sigma = s;
  p.grading = Weight(n);
  for (const auto& [lbl, v] : in.grading) p.grading.c[p.rs.coordinate(lbl)] = parse_rational(v);
  p.sign_compact = in.sign_compact;
  p.sign_noncompact = in.sign_noncompact;
  p.validate();
  return p;
}

}  // namespace dsb
