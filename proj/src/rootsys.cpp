#include "dsb/rootsys.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace dsb {

Q parse_rational(const std::string& raw) {
  std::string s;
  for (char ch : raw)
    if (!isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw PreconditionError("empty rational");
  auto valid = [](const std::string& t) {
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
      if (!isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (num[0] == '+') num = num.substr(1);
  if (!valid(num) || !valid(den)) throw PreconditionError("malformed rational '" + raw + "'");
  Q q;
  q.get_num() = Z(num);
  q.get_den() = Z(den);
  if (q.get_den() == 0) throw PreconditionError("zero denominator in '" + raw + "'");
  q.canonicalize();
  return q;
}

std::string format_rational(const Q& q) { return q.get_str(); }

Weight::Weight(std::initializer_list<long> v) {
  for (long x : v) c.emplace_back(x);
}

bool Weight::is_zero() const {
  return std::all_of(c.begin(), c.end(), [](const Q& x) { return x == 0; });
}

Weight& Weight::operator+=(const Weight& o) {
  if (o.dim() != dim()) throw std::invalid_argument("weight dimension mismatch");
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  if (o.dim() != dim()) throw std::invalid_argument("weight dimension mismatch");
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.c[i];
  return *this;
}

Weight Weight::operator-() const {
  Weight r(*this);
  for (auto& x : r.c) x = -x;
  return r;
}

Weight operator*(const Q& s, const Weight& a) {
  Weight r(a);
  for (auto& x : r.c) x *= s;
  return r;
}

bool operator<(const Weight& a, const Weight& b) {
  return std::lexicographical_compare(a.c.begin(), a.c.end(), b.c.begin(), b.c.end(),
                                      [](const Q& x, const Q& y) { return cmp(x, y) < 0; });
}

Q dot(const Weight& a, const Weight& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("weight dimension mismatch");
  Q s = 0;
  for (std::size_t i = 0; i < a.c.size(); ++i) s += a.c[i] * b.c[i];
  return s;
}

std::string format_weight(const Weight& w) {
  std::string s = "[";
  for (std::size_t i = 0; i < w.c.size(); ++i) {
    if (i) s += ", ";
    s += format_rational(w.c[i]);
  }
  return s + "]";
}

Weight parse_weight(const std::string& csv) {
  Weight w;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) w.c.push_back(parse_rational(tok));
  if (w.c.empty()) throw PreconditionError("empty weight");
  return w;
}

Weight half_sum(const std::vector<Weight>& S, std::size_t n) {
  Weight r(n);
  for (const auto& s : S) r += s;
  return Q(1, 2) * r;
}

// ---------------------------------------------------------------- root systems

namespace {

Weight unit(std::size_t n, std::size_t i, long s = 1) {
  Weight w(n);
  w.c[i] = s;
  return w;
}

void add_pm(std::vector<Root>& out, const Weight& w, Color c) {
  out.push_back({w, c});
  out.push_back({-w, c});
}

struct BaseSystem {
  std::vector<std::string> labels;
  std::vector<Root> roots;
};

BaseSystem base_system(const std::string& family, const std::vector<int>& ranks) {
  static const std::set<std::string> exceptional = {"e6", "e7", "e8", "f4", "g2"};
  for (const auto& e : exceptional)
    if (family.rfind(e, 0) == 0)
      throw PreconditionError("catalog-only family '" + family + "': no root-system computation");

  BaseSystem b;
  auto two = [&](const char* what) {
    if (ranks.size() != 2 || ranks[0] < 0 || ranks[1] < 0)
      throw PreconditionError(std::string(what) + " needs two nonnegative ranks");
  };
  if (family == "su" || family == "so" || family == "so_odd" || family == "sp") {
    two(family.c_str());
    int m = ranks[0], n = ranks[1];
    if (m + n > 12) throw PreconditionError("rank above supported bound");
    if (family == "su" && (m < 1 || n < 1)) throw PreconditionError("su(m,n) needs m,n >= 1");
    for (int i = 1; i <= m; ++i) b.labels.push_back("e" + std::to_string(i));
    for (int j = 1; j <= n; ++j) b.labels.push_back("d" + std::to_string(j));
    std::size_t N = m + n;
    auto e = [&](int i) { return unit(N, i - 1); };
    auto d = [&](int j) { return unit(N, m + j - 1); };
    if (family == "su") {
      for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j) add_pm(b.roots, e(i) - e(j), Color::compact);
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) add_pm(b.roots, d(i) - d(j), Color::compact);
      for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j) add_pm(b.roots, e(i) - d(j), Color::noncompact);
      return b;
    }
    for (int i = 1; i <= m; ++i)
      for (int j = i + 1; j <= m; ++j) {
        add_pm(b.roots, e(i) - e(j), Color::compact);
        add_pm(b.roots, e(i) + e(j), Color::compact);
      }
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        add_pm(b.roots, d(i) - d(j), Color::compact);
        add_pm(b.roots, d(i) + d(j), Color::compact);
      }
    for (int i = 1; i <= m; ++i)
      for (int j = 1; j <= n; ++j) {
        add_pm(b.roots, e(i) - d(j), Color::noncompact);
        add_pm(b.roots, e(i) + d(j), Color::noncompact);
      }
    if (family == "so_odd") {
      for (int j = 1; j <= n; ++j) add_pm(b.roots, d(j), Color::compact);
      for (int i = 1; i <= m; ++i) add_pm(b.roots, e(i), Color::noncompact);
    }
    if (family == "sp") {
      for (int i = 1; i <= m; ++i) add_pm(b.roots, Q(2) * e(i), Color::compact);
      for (int j = 1; j <= n; ++j) add_pm(b.roots, Q(2) * d(j), Color::compact);
    }
    return b;
  }
  if (family == "sp_r" || family == "so_star") {
    if (ranks.size() != 1 || ranks[0] < 1) throw PreconditionError(family + " needs one rank >= 1");
    int n = ranks[0];
    if (n > 12) throw PreconditionError("rank above supported bound");
    for (int i = 1; i <= n; ++i) b.labels.push_back("e" + std::to_string(i));
    auto e = [&](int i) { return unit(n, i - 1); };
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        add_pm(b.roots, e(i) - e(j), Color::compact);
        add_pm(b.roots, e(i) + e(j), Color::noncompact);
      }
    if (family == "sp_r")
      for (int i = 1; i <= n; ++i) add_pm(b.roots, Q(2) * e(i), Color::noncompact);
    return b;
  }
  throw PreconditionError("unknown family '" + family + "'");
}

}  // namespace

RootSystem build_root_system(const std::string& family, const std::vector<int>& ranks) {
  RootSystem rs;
  rs.family = family;
  rs.ranks = ranks;
  if (family.rfind("prod:", 0) == 0) {
    BaseSystem b = base_system(family.substr(5), ranks);
    std::size_t n = b.labels.size();
    for (const auto& l : b.labels) rs.labels.push_back("a." + l);
    for (const auto& l : b.labels) rs.labels.push_back("b." + l);
    for (int copy = 0; copy < 2; ++copy)
      for (const auto& r : b.roots) {
        Weight w(2 * n);
        for (std::size_t i = 0; i < n; ++i) w.c[copy * n + i] = r.w.c[i];
        rs.roots.push_back({w, r.color});
      }
    return rs;
  }
  BaseSystem b = base_system(family, ranks);
  rs.labels = std::move(b.labels);
  rs.roots = std::move(b.roots);
  return rs;
}

std::optional<Color> RootSystem::color_of(const Weight& w) const {
  for (const auto& r : roots)
    if (r.w == w) return r.color;
  return std::nullopt;
}

std::vector<Weight> RootSystem::compact() const {
  std::vector<Weight> out;
  for (const auto& r : roots)
    if (r.color == Color::compact) out.push_back(r.w);
  return out;
}

std::vector<Weight> RootSystem::noncompact() const {
  std::vector<Weight> out;
  for (const auto& r : roots)
    if (r.color == Color::noncompact) out.push_back(r.w);
  return out;
}

std::vector<Weight> RootSystem::all() const {
  std::vector<Weight> out;
  for (const auto& r : roots) out.push_back(r.w);
  return out;
}

int RootSystem::coordinate(const std::string& label) const {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == label) return static_cast<int>(i);
  throw PreconditionError("unknown coordinate label '" + label + "'");
}

// ------------------------------------------------------------ positive systems

bool PositiveSystem::contains(const Weight& w) const {
  return std::any_of(positives.begin(), positives.end(), [&](const Root& r) { return r.w == w; });
}

std::vector<Weight> PositiveSystem::compact() const {
  std::vector<Weight> out;
  for (const auto& r : positives)
    if (r.color == Color::compact) out.push_back(r.w);
  return out;
}

std::vector<Weight> PositiveSystem::noncompact() const {
  std::vector<Weight> out;
  for (const auto& r : positives)
    if (r.color == Color::noncompact) out.push_back(r.w);
  return out;
}

std::vector<Weight> PositiveSystem::all() const {
  std::vector<Weight> out;
  for (const auto& r : positives) out.push_back(r.w);
  return out;
}

bool PositiveSystem::is_holomorphic() const {
  auto n = noncompact();
  std::set<Weight> roots;
  for (const auto& r : positives) {
    roots.insert(r.w);
    roots.insert(-r.w);
  }
  for (const auto& a : n)
    for (const auto& b : n)
      if (roots.count(a + b)) return false;
  return true;
}

PositiveSystem positive_system_from_vector(const RootSystem& rs, const Weight& v,
                                           const std::string& word) {
  if (v.dim() != rs.dim())
    throw PreconditionError("parameter has " + std::to_string(v.dim()) + " coordinates, expected " +
                            std::to_string(rs.dim()));
  PositiveSystem ps;
  ps.order_word = word;
  ps.regular = v;
  for (const auto& r : rs.roots) {
    Q h = dot(v, r.w);
    if (h == 0)
      throw PreconditionError("non-regular parameter: vanishes on root " + format_weight(r.w));
    if (h > 0) ps.positives.push_back(r);
  }
  return ps;
}

PositiveSystem positive_system_from_order(const RootSystem& rs, const std::string& word) {
  std::vector<std::pair<int, int>> order;  // (coordinate, sign)
  std::stringstream ss(word);
  std::string tok;
  std::set<int> seen;
  while (std::getline(ss, tok, '>')) {
    std::string t;
    for (char ch : tok)
      if (!isspace(static_cast<unsigned char>(ch))) t += ch;
    if (t.empty()) throw PreconditionError("empty token in order word '" + word + "'");
    int s = 1;
    if (t[0] == '-') {
      s = -1;
      t = t.substr(1);
    }
    int idx = rs.coordinate(t);
    if (!seen.insert(idx).second) throw PreconditionError("repeated coordinate in order word");
    order.push_back({idx, s});
  }
  for (int i = 0; i < static_cast<int>(rs.dim()); ++i)
    if (!seen.count(i)) order.push_back({i, 1});
  // Root coefficients are bounded by 2, so base 8 realizes the lexicographic order.
  Weight v(rs.dim());
  Q scale = 1;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    v.c[it->first] = scale * it->second;
    scale *= 8;
  }
  return positive_system_from_vector(rs, v, word);
}

PositiveSystem psi_from_parameter(const Weight& lambda, const RootSystem& rs,
                                  const PositiveSystem& delta) {
  for (const auto& a : delta.compact())
    if (dot(lambda, a) < 0)
      throw PreconditionError("parameter is not dominant for Delta at " + format_weight(a));
  return positive_system_from_vector(rs, lambda);
}

std::vector<Weight> positives_against(const std::vector<Weight>& roots, const Weight& v) {
  std::vector<Weight> out;
  for (const auto& r : roots) {
    Q h = dot(r, v);
    if (h == 0) throw PreconditionError("vector is singular for root " + format_weight(r));
    if (h > 0) out.push_back(r);
  }
  return out;
}

std::vector<Weight> simple_roots(const std::vector<Weight>& positives) {
  std::vector<Weight> d = dedupe(positives);
  std::set<Weight> pos(d.begin(), d.end());
  std::vector<Weight> out;
  for (const auto& a : d) {
    bool decomposable = false;
    for (const auto& b : d)
      if (b != a && pos.count(a - b)) {
        decomposable = true;
        break;
      }
    // non-reduced case: 2b with b positive
    if (!decomposable && pos.count(Q(1, 2) * a)) decomposable = true;
    if (!decomposable) out.push_back(a);
  }
  return out;
}

bool closed_under_addition(const std::vector<Weight>& positives, const std::vector<Weight>& all) {
  std::set<Weight> roots(all.begin(), all.end());
  std::set<Weight> pos(positives.begin(), positives.end());
  for (const auto& a : positives)
    for (const auto& b : positives)
      if (roots.count(a + b) && !pos.count(a + b)) return false;
  return true;
}

// ------------------------------------------------------------------ Weyl group

namespace {
int perm_parity(const std::vector<int>& p) {
  std::vector<bool> seen(p.size(), false);
  int parity = 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) parity = -parity;
  }
  return parity;
}

int signed_perm_det(const std::vector<int>& perm, const std::vector<int>& sgn) {
  int s = perm_parity(perm);
  for (int x : sgn) s *= x;
  return s;
}
}  // namespace

WeylElement WeylElement::identity(std::size_t n) {
  WeylElement w;
  w.perm.resize(n);
  w.sgn.assign(n, 1);
  for (std::size_t i = 0; i < n; ++i) w.perm[i] = static_cast<int>(i);
  return w;
}

Weight WeylElement::apply(const Weight& x) const {
  if (x.dim() != perm.size()) throw std::invalid_argument("Weyl element dimension mismatch");
  Weight y(x.dim());
  for (std::size_t i = 0; i < perm.size(); ++i) y.c[perm[i]] = sgn[i] > 0 ? x.c[i] : Q(-x.c[i]);
  return y;
}

WeylElement WeylElement::operator*(const WeylElement& o) const {
  // (this o other) e_i = this(sgn_o[i] e_{perm_o[i]})
  WeylElement r;
  std::size_t n = perm.size();
  r.perm.resize(n);
  r.sgn.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    int j = o.perm[i];
    r.perm[i] = perm[j];
    r.sgn[i] = o.sgn[i] * sgn[j];
  }
  r.sign = sign * o.sign;
  return r;
}

WeylElement WeylElement::inverse() const {
  WeylElement r;
  std::size_t n = perm.size();
  r.perm.resize(n);
  r.sgn.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    r.perm[perm[i]] = static_cast<int>(i);
    r.sgn[perm[i]] = sgn[i];
  }
  r.sign = sign;
  return r;
}

WeylElement reflection(const Weight& alpha) {
  std::size_t n = alpha.dim();
  Q norm = dot(alpha, alpha);
  if (norm == 0) throw std::invalid_argument("reflection in zero vector");
  WeylElement w;
  w.perm.assign(n, -1);
  w.sgn.assign(n, 1);
  for (std::size_t i = 0; i < n; ++i) {
    Weight img = unit(n, i) - (Q(2) * alpha.c[i] / norm) * alpha;
    int hit = -1;
    for (std::size_t j = 0; j < n; ++j) {
      if (img.c[j] == 0) continue;
      if (hit >= 0 || (img.c[j] != 1 && img.c[j] != -1))
        throw PreconditionError("reflection in " + format_weight(alpha) +
                                " is not a signed permutation");
      hit = static_cast<int>(j);
    }
    if (hit < 0) throw PreconditionError("degenerate reflection");
    w.perm[i] = hit;
    w.sgn[i] = img.c[hit] > 0 ? 1 : -1;
  }
  w.sign = signed_perm_det(w.perm, w.sgn);
  if (w.sign != -1) throw ConsistencyError("reflection with determinant +1");
  return w;
}

std::vector<WeylElement> weyl_group(const std::vector<Weight>& generators, std::size_t n,
                                    std::size_t limit) {
  std::vector<WeylElement> gens;
  for (const auto& g : dedupe(generators)) gens.push_back(reflection(g));
  std::set<WeylElement> seen;
  std::vector<WeylElement> frontier{WeylElement::identity(n)};
  seen.insert(frontier[0]);
  while (!frontier.empty()) {
    std::vector<WeylElement> next;
    for (const auto& w : frontier)
      for (const auto& s : gens) {
        WeylElement x = s * w;
        if (seen.insert(x).second) {
          if (seen.size() > limit)
            throw PreconditionError("Weyl group exceeds enumeration bound " + std::to_string(limit));
          next.push_back(x);
        }
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

std::vector<WeylElement> weyl_group(const RootSystem& rs, const PositiveSystem& generators_from,
                                    std::size_t limit) {
  return weyl_group(simple_roots(generators_from.all()), rs.dim(), limit);
}

// ------------------------------------------------------------------ involution

InvolutionSpec InvolutionSpec::identity(std::size_t n) { return {WeylElement::identity(n)}; }

Weight InvolutionSpec::project(const Weight& x) const { return Q(1, 2) * (x + sigma.apply(x)); }

bool InvolutionSpec::is_identity() const { return sigma == WeylElement::identity(sigma.perm.size()); }

std::vector<Weight> InvolutionSpec::fixed_basis() const {
  std::vector<Weight> out;
  std::set<Weight> seen;
  std::size_t n = sigma.perm.size();
  for (std::size_t i = 0; i < n; ++i) {
    Weight v = project(unit(n, i));
    if (v.is_zero()) continue;
    // normalize sign so the first nonzero coordinate is positive
    for (const auto& x : v.c)
      if (x != 0) {
        if (x < 0) v = -v;
        break;
      }
    if (seen.insert(v).second) out.push_back(v);
  }
  return out;
}

std::vector<Weight> restrict(const InvolutionSpec& q, const std::vector<Weight>& S) {
  std::vector<Weight> out;
  out.reserve(S.size());
  for (const auto& s : S) out.push_back(q.project(s));
  return out;
}

std::vector<Weight> multiset_minus(std::vector<Weight> a, const std::vector<Weight>& b) {
  std::sort(a.begin(), a.end());
  for (const auto& x : b) {
    auto it = std::lower_bound(a.begin(), a.end(), x);
    if (it != a.end() && *it == x) a.erase(it);
  }
  return a;
}

bool multiset_equal(std::vector<Weight> a, std::vector<Weight> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

std::vector<Weight> dedupe(std::vector<Weight> a) {
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

}  // namespace dsb
