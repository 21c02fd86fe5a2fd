#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dsb {

using Q = mpq_class;
using Z = mpz_class;

// Raised when an operation's precondition fails (maps to CLI exit code 2).
struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// Raised when an internal invariant is breached (CLI exit code 3).
struct ConsistencyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Q parse_rational(const std::string& s);
std::string format_rational(const Q& q);

// Exact coordinate vector in the family's orthonormal e/d basis.
struct Weight {
  std::vector<Q> c;

  Weight() = default;
  explicit Weight(std::size_t n) : c(n) {}
  Weight(std::vector<Q> v) : c(std::move(v)) {}
  Weight(std::initializer_list<long> v);

  std::size_t dim() const { return c.size(); }
  bool is_zero() const;

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  Weight operator-() const;
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(const Q& s, const Weight& a);

  friend bool operator==(const Weight& a, const Weight& b) { return a.c == b.c; }
  friend bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }
  friend bool operator<(const Weight& a, const Weight& b);
};

Q dot(const Weight& a, const Weight& b);
std::string format_weight(const Weight& w);
Weight parse_weight(const std::string& csv);
Weight half_sum(const std::vector<Weight>& S, std::size_t n);

enum class Color { compact, noncompact };

struct Root {
  Weight w;
  Color color;
};

struct RootSystem {
  std::string family;  // su, so, so_odd, sp, sp_r, so_star, prod:<base>
  std::vector<int> ranks;
  std::vector<std::string> labels;  // coordinate names, e.g. e1 e2 d1
  std::vector<Root> roots;

  std::size_t dim() const { return labels.size(); }
  std::optional<Color> color_of(const Weight& w) const;
  bool is_root(const Weight& w) const { return color_of(w).has_value(); }
  std::vector<Weight> compact() const;
  std::vector<Weight> noncompact() const;
  std::vector<Weight> all() const;
  int coordinate(const std::string& label) const;
};

// Families: su(m,n), so(2m,2n) as "so" with ranks {m,n}, so(2m,2n+1) as
// "so_odd" with {m,n}, sp(m,n), sp(n,R) as "sp_r", so*(2n) as "so_star",
// and "prod:<family>" for two copies of a base family.
RootSystem build_root_system(const std::string& family, const std::vector<int>& ranks);

struct PositiveSystem {
  std::vector<Root> positives;
  std::string order_word;
  Weight regular;  // a vector strictly positive on every positive root

  bool contains(const Weight& w) const;
  std::vector<Weight> compact() const;
  std::vector<Weight> noncompact() const;
  std::vector<Weight> all() const;
  bool is_holomorphic() const;
};

PositiveSystem positive_system_from_vector(const RootSystem& rs, const Weight& v,
                                           const std::string& word = "");
// Order word like "e1>-e2>d1>d2"; coordinates not mentioned rank last.
PositiveSystem positive_system_from_order(const RootSystem& rs, const std::string& word);
PositiveSystem psi_from_parameter(const Weight& lambda, const RootSystem& rs,
                                  const PositiveSystem& delta);

// Positive elements of a multiset of (restricted) roots against v.
std::vector<Weight> positives_against(const std::vector<Weight>& roots, const Weight& v);
// Indecomposable elements of a positive multiset.
std::vector<Weight> simple_roots(const std::vector<Weight>& positives);
bool closed_under_addition(const std::vector<Weight>& positives, const std::vector<Weight>& all);

// Signed permutation: (w x)[perm[i]] = sgn[i] * x[i].
struct WeylElement {
  std::vector<int> perm;
  std::vector<int> sgn;
  int sign = 1;

  static WeylElement identity(std::size_t n);
  Weight apply(const Weight& x) const;
  WeylElement operator*(const WeylElement& o) const;  // (this o other)
  WeylElement inverse() const;
  friend bool operator<(const WeylElement& a, const WeylElement& b) {
    return a.perm != b.perm ? a.perm < b.perm : a.sgn < b.sgn;
  }
  friend bool operator==(const WeylElement& a, const WeylElement& b) {
    return a.perm == b.perm && a.sgn == b.sgn;
  }
};

constexpr std::size_t kWeylLimit = 10'000'000;

WeylElement reflection(const Weight& alpha);
std::vector<WeylElement> weyl_group(const std::vector<Weight>& generators, std::size_t n,
                                    std::size_t limit = kWeylLimit);
std::vector<WeylElement> weyl_group(const RootSystem& rs, const PositiveSystem& generators_from,
                                    std::size_t limit = kWeylLimit);

// The involution sigma acting on t* as a signed permutation.
struct InvolutionSpec {
  WeylElement sigma;

  static InvolutionSpec identity(std::size_t n);
  Weight apply(const Weight& x) const { return sigma.apply(x); }
  Weight project(const Weight& x) const;  // q_u
  bool is_identity() const;
  std::vector<Weight> fixed_basis() const;
};

std::vector<Weight> restrict(const InvolutionSpec& q, const std::vector<Weight>& S);

// Multiset helpers (multiplicity aware).
std::vector<Weight> multiset_minus(std::vector<Weight> a, const std::vector<Weight>& b);
bool multiset_equal(std::vector<Weight> a, std::vector<Weight> b);
std::vector<Weight> dedupe(std::vector<Weight> a);

}  // namespace dsb
