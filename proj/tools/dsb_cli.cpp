// dsb: branching of discrete series to symmetric subgroups, batch interface.
#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "dsb/branching.hpp"
#include "dsb/catalog.hpp"
#include "dsb/io.hpp"
#include "dsb/oracle.hpp"
#include "json.hpp"

using namespace dsb;
using ojson = nlohmann::ordered_json;

namespace {

struct Job {
  std::string pair, psi, lambda, phi, method = "theorem1", format = "json", out;
  std::string table, g, g0 = "su", ranks = "1,1", kind = "compact", compact_case = "diag-su2";
  std::string highest;
  std::string cutoff = "20";
  bool check_oracle = false;
  unsigned seed = 1;
  int random = 0;
};

std::vector<int> parse_ints(const std::string& s) {
  std::vector<int> v;
  std::stringstream ss(s);
  std::string t;
  while (std::getline(ss, t, ',')) v.push_back(std::stoi(t));
  return v;
}

Weight need_weight(const std::string& s, const char* field) {
  if (s.empty()) throw PreconditionError(std::string("missing --") + field);
  try {
    return parse_weight(s);
  } catch (const PreconditionError& e) {
    throw PreconditionError(std::string("--") + field + ": " + e.what());
  }
}

SymmetricPair need_pair(const Job& j) {
  if (j.pair.empty()) throw PreconditionError("missing --pair");
  return build_pair(Catalog::builtin().find(j.pair));
}

void emit(const Job& j, const std::string& text) {
  if (j.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(j.out);
  if (!f) throw PreconditionError("--out: cannot write '" + j.out + "'");
  f << text;
}

std::string render(const Job& j, const BranchingTable& t) {
  return j.format == "csv" ? table_csv(t) : table_json(t);
}

std::string weights_json(const std::vector<Weight>& v) {
  ojson a = ojson::array();
  for (const auto& w : v) a.push_back(format_weight(w));
  return a.dump();
}

int cmd_pairs(const Job& j) {
  auto rows = Catalog::builtin().list_pairs({j.table, j.g});
  emit(j, j.format == "csv" ? rows_csv(rows) : rows_json(rows));
  return 0;
}

int cmd_admissible(const Job& j) {
  SymmetricPair p = need_pair(j);
  if (j.psi.empty()) throw PreconditionError("missing --psi");
  PositiveSystem psi = named_system(p.rs, j.psi);
  K1Split k = k1_subalgebra(p, psi);
  std::string why = admissibility_witness(p, psi);
  ojson o;
  o["pair"] = p.name;
  o["psi"] = j.psi;
  o["order_word"] = psi.order_word;
  o["admissible"] = why.empty();
  o["witness"] = why;
  o["z1_dim"] = k.z1_dim;
  o["k1_roots"] = ojson::parse(weights_json(k.k1_roots));
  emit(j, o.dump(2) + "\n");
  return 0;
}

int cmd_systems(const Job& j) {
  SymmetricPair p = need_pair(j);
  PositiveSystem psi = !j.psi.empty() ? named_system(p.rs, j.psi)
                                      : positive_system_from_vector(p.rs, need_weight(j.lambda, "lambda"));
  InducedSystems ind = induced_systems(p, psi);
  ojson o;
  o["pair"] = p.name;
  o["direction"] = format_weight(ind.direction);
  o["delta0"] = ojson::parse(weights_json(ind.delta0));
  o["psi_h"] = ojson::parse(weights_json(ind.psi_h));
  o["psi_h0"] = ojson::parse(weights_json(ind.psi_h0));
  o["psi_h_simple"] = ojson::parse(weights_json(simple_roots(ind.psi_h)));
  o["psi_h0_simple"] = ojson::parse(weights_json(simple_roots(ind.psi_h0)));
  emit(j, o.dump(2) + "\n");
  return 0;
}

std::string cache_key(const Job& j) {
  std::string k = j.pair + "|" + j.lambda + "|" + j.phi + "|" + j.method + "|" + j.cutoff + "|" +
                  j.g0 + "|" + j.ranks + "|" + j.format;
  return std::to_string(std::hash<std::string>{}(k));
}

int cmd_branch(const Job& j) {
  namespace fs = std::filesystem;
  const char* cache = std::getenv("DSB_CACHE_DIR");
  fs::path cached;
  if (cache && *cache && !j.check_oracle) {
    cached = fs::path(cache) / ("branch-" + cache_key(j) + "." + j.format);
    if (fs::exists(cached)) {
      std::ifstream f(cached);
      std::stringstream ss;
      ss << f.rdbuf();
      emit(j, ss.str());
      return 0;
    }
  }
  Q cutoff = parse_rational(j.cutoff);
  BranchingTable t;
  std::string verdict;
  if (j.method == "theorem3") {
    auto ranks = parse_ints(j.ranks);
    Weight lam = need_weight(j.lambda, "lambda"), phi = need_weight(j.phi, "phi");
    t = theorem3_tensor(j.g0, ranks, lam, phi, cutoff);
    if (j.check_oracle) {
      auto o = tensor_ladder_oracle(j.g0, ranks, lam, phi, t.window);
      verdict = o.entries == t.entries ? "EQUAL" : "DIFFERENT";
    }
  } else {
    Setup s = make_setup(need_pair(j), need_weight(j.lambda, "lambda"));
    Window w = s.window(cutoff);
    t = run_method(s, j.method, w);
    t.target = s.pair.h_label;
    if (j.check_oracle) {
      std::string other = j.method == "rh" ? "theorem1" : "rh";
      Comparison c = compare_methods(s, j.method, other, cutoff);
      bool ok = c.equal;
      if (s.psi.is_holomorphic()) ok = ok && holomorphic_ktype_oracle(s, w).entries == t.entries;
      verdict = ok ? "EQUAL" : "DIFFERENT";
    }
  }
  for (const auto& l : t.log) std::cerr << "note: " << l << "\n";
  std::string text = render(j, t);
  if (!cached.empty()) {
    std::error_code ec;
    fs::create_directories(cached.parent_path(), ec);
    std::ofstream(cached) << text;
  }
  emit(j, text);
  if (!verdict.empty()) {
    std::cout << verdict << "\n";
    if (verdict != "EQUAL") return 3;
  }
  return 0;
}

int cmd_compare(const Job& j) {
  Setup s = make_setup(need_pair(j), need_weight(j.lambda, "lambda"));
  auto comma = j.method.find(',');
  if (comma == std::string::npos) throw PreconditionError("--method: expected two methods like rh,theorem1");
  std::string m1 = j.method.substr(0, comma), m2 = j.method.substr(comma + 1);
  Comparison c = compare_methods(s, m1, m2, parse_rational(j.cutoff));
  ojson o;
  o["pair"] = s.pair.name;
  o["lambda"] = format_weight(s.lambda);
  o["methods"] = {m1, m2};
  o["cutoff"] = j.cutoff;
  o["entries"] = c.a.entries.size();
  o["equal"] = c.equal;
  o["diffs"] = c.diffs;
  emit(j, o.dump(2) + "\n");
  std::cout << (c.equal ? "EQUAL" : "DIFFERENT") << "\n";
  return c.equal ? 0 : 3;
}

CompactRestriction compact_case(const std::string& name) {
  if (name == "diag-su2") {
    // SU(2) x SU(2) on coordinates a1 a2 b1 b2, L the diagonal
    CompactRestriction c;
    c.n = 4;
    c.sigma.sigma = WeylElement::identity(4);
    c.sigma.sigma.perm = {2, 3, 0, 1};
    c.k_pos = {Weight{1, -1, 0, 0}, Weight{0, 0, 1, -1}};
    c.l_pos = {Q(1, 2) * Weight{1, -1, 1, -1}};
    c.direction = Weight{1, -1, 1, -1};
    return c;
  }
  if (name == "su3-u2") {
    CompactRestriction c;
    c.n = 3;
    c.sigma = InvolutionSpec::identity(3);
    c.k_pos = {Weight{1, -1, 0}, Weight{1, 0, -1}, Weight{0, 1, -1}};
    c.l_pos = {Weight{1, -1, 0}};
    c.direction = Weight{2, 1, -3};
    return c;
  }
  throw PreconditionError("--case: unknown compact case '" + name + "'");
}

int cmd_oracle(const Job& j) {
  ojson o;
  bool ok = true;
  if (j.kind == "compact") {
    CompactRestriction c = compact_case(j.compact_case);
    std::vector<Weight> params;
    if (!j.highest.empty()) params.push_back(need_weight(j.highest, "highest"));
    std::mt19937 rng(j.seed);
    std::uniform_int_distribution<int> d(0, 4);
    for (int i = 0; i < j.random; ++i) {
      Weight h(c.n);
      if (c.n == 4) {
        int a = d(rng), b = d(rng);
        h = Weight{a, 0, b, 0};
      } else {
        int a = d(rng), b = d(rng);
        h = Weight{a + b, b, 0};
      }
      params.push_back(h);
    }
    if (params.empty()) throw PreconditionError("missing --highest or --random");
    o["case"] = j.compact_case;
    o["checks"] = ojson::array();
    Weight rk = half_sum(c.k_pos, c.n);
    for (const auto& h : params) {
      BranchingTable a = compact_branching(c, h + rk);
      BranchingTable b = brute_branching(h, c);
      Z dim = weyl_dimension(h, c.k_pos), total = 0;
      Weight rl = half_sum(c.l_pos, c.n);
      for (const auto& [nu, m] : a.entries) total += m * weyl_dimension(nu - rl, c.l_pos);
      bool same = a.entries == b.entries && dim == total;
      ok = ok && same;
      ojson e;
      e["highest"] = format_weight(h);
      e["constituents"] = a.entries.size();
      e["dimension"] = dim.get_str();
      e["equal"] = same;
      o["checks"].push_back(e);
    }
  } else if (j.kind == "holomorphic") {
    Setup s = make_setup(need_pair(j), need_weight(j.lambda, "lambda"));
    Window w = s.window(parse_rational(j.cutoff));
    BranchingTable a = holomorphic_ktype_oracle(s, w), b = direct_restriction_rh(s, w);
    ok = a.entries == b.entries;
    o["pair"] = s.pair.name;
    o["entries"] = a.entries.size();
  } else if (j.kind == "tensor") {
    auto ranks = parse_ints(j.ranks);
    Weight lam = need_weight(j.lambda, "lambda"), phi = need_weight(j.phi, "phi");
    BranchingTable t = theorem3_tensor(j.g0, ranks, lam, phi, parse_rational(j.cutoff));
    BranchingTable a = tensor_ladder_oracle(j.g0, ranks, lam, phi, t.window);
    ok = a.entries == t.entries;
    o["entries"] = t.entries.size();
  } else {
    throw PreconditionError("--kind: expected compact, holomorphic or tensor");
  }
  o["equal"] = ok;
  emit(j, o.dump(2) + "\n");
  std::cout << (ok ? "EQUAL" : "DIFFERENT") << "\n";
  return ok ? 0 : 3;
}

void error_json(const char* kind, const std::string& msg) {
  ojson e;
  e["error"] = kind;
  e["message"] = msg;
  std::cerr << e.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Discrete series branching to symmetric subgroups"};
  app.require_subcommand(1);
  Job j;

  auto* pairs = app.add_subcommand("pairs", "List catalog rows");
  pairs->add_option("--table", j.table, "I, II or III");
  pairs->add_option("--g", j.g, "ambient algebra label, e.g. sp(m,n)");

  auto* adm = app.add_subcommand("admissible", "Check the admissibility criterion");
  auto* sys = app.add_subcommand("systems", "Induced positive systems");
  auto* br = app.add_subcommand("branch", "Branching table");
  auto* cmp = app.add_subcommand("compare", "Cross-method comparison");
  auto* orc = app.add_subcommand("oracle", "Independent oracle checks");

  for (auto* c : {adm, sys, br, cmp, orc}) c->add_option("--pair", j.pair, "catalog id or alias");
  for (auto* c : {adm, sys}) c->add_option("--psi", j.psi, "named system or order word");
  for (auto* c : {sys, br, cmp, orc})
    c->add_option("--lambda", j.lambda, "parameter, comma separated rationals");
  for (auto* c : {br, cmp, orc}) c->add_option("--cutoff", j.cutoff, "window height above the lowest parameter");
  for (auto* c : {br, orc}) {
    c->add_option("--phi", j.phi, "second parameter for tensor products");
    c->add_option("--g0", j.g0, "G0 family for tensor products");
    c->add_option("--ranks", j.ranks, "G0 ranks for tensor products");
  }
  br->add_option("--method", j.method, "rh, theorem1, theorem2 or theorem3");
  br->add_flag("--check-oracle", j.check_oracle, "compare against an independent method");
  cmp->add_option("--method", j.method, "two methods, e.g. rh,theorem1");
  orc->add_option("--kind", j.kind, "compact, holomorphic or tensor");
  orc->add_option("--case", j.compact_case, "diag-su2 or su3-u2");
  orc->add_option("--highest", j.highest, "highest weight for compact checks");
  orc->add_option("--random", j.random, "number of random compact parameters");
  orc->add_option("--seed", j.seed, "seed for random parameters");
  for (auto* c : {pairs, adm, sys, br, cmp, orc}) {
    c->add_option("--format", j.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    c->add_option("--out", j.out, "write the artifact to a file");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    error_json("precondition", e.what());
    return 2;
  }

  try {
    if (*pairs) return cmd_pairs(j);
    if (*adm) return cmd_admissible(j);
    if (*sys) return cmd_systems(j);
    if (*br) return cmd_branch(j);
    if (*cmp) return cmd_compare(j);
    if (*orc) return cmd_oracle(j);
  } catch (const PreconditionError& e) {
    error_json("precondition", e.what());
    return 2;
  } catch (const ConsistencyError& e) {
    error_json("consistency", e.what());
    return 3;
  } catch (const std::exception& e) {
    error_json("precondition", e.what());
    return 2;
  }
  return 0;
}
