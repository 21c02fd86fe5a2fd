#include "dsb/io.hpp"

#include "json.hpp"

namespace dsb {

using ojson = nlohmann::ordered_json;

namespace {

ojson weight_json(const Weight& w) {
  ojson a = ojson::array();
  for (const auto& x : w.c) a.push_back(format_rational(x));
  return a;
}

Weight weight_from(const ojson& a) {
  Weight w(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) w.c[i] = parse_rational(a[i].get<std::string>());
  return w;
}

ojson z_json(const Z& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

Z z_from(const ojson& j) {
  if (j.is_string()) return Z(j.get<std::string>());
  return Z(j.get<long>());
}

ojson window_json(const Window& w) {
  ojson j;
  j["direction"] = weight_json(w.direction);
  j["bound"] = format_rational(w.bound);
  return j;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

}  // namespace

std::string root_system_json(const RootSystem& rs, const PositiveSystem* psi) {
  ojson j;
  j["family"] = rs.family;
  j["ranks"] = rs.ranks;
  j["order_word"] = psi ? psi->order_word : "";
  j["roots"] = ojson::array();
  const auto& roots = psi ? psi->positives : rs.roots;
  for (const auto& r : roots) {
    ojson e;
    e["coords"] = weight_json(r.w);
    e["color"] = r.color == Color::compact ? "compact" : "noncompact";
    j["roots"].push_back(e);
  }
  return j.dump(2) + "\n";
}

RootSystem root_system_from_json(const std::string& text, std::string* order_word) {
  try {
    ojson j = ojson::parse(text);
    RootSystem rs = build_root_system(j.at("family").get<std::string>(),
                                      j.at("ranks").get<std::vector<int>>());
    if (order_word) *order_word = j.value("order_word", std::string());
    rs.roots.clear();
    for (const auto& e : j.at("roots")) {
      std::string c = e.at("color").get<std::string>();
      if (c != "compact" && c != "noncompact") throw PreconditionError("bad color '" + c + "'");
      rs.roots.push_back({weight_from(e.at("coords")), c == "compact" ? Color::compact : Color::noncompact});
    }
    return rs;
  } catch (const nlohmann::json::exception& e) {
    throw PreconditionError(std::string("malformed root system: ") + e.what());
  }
}

std::string measure_json(const DiscreteMeasure& m) {
  ojson a = ojson::array();
  for (const auto& [w, c] : m.sorted()) {
    ojson e;
    e["weight"] = weight_json(w);
    e["coeff"] = z_json(c);
    a.push_back(e);
  }
  return a.dump(2) + "\n";
}

std::string table_json(const BranchingTable& t) {
  ojson j;
  j["method"] = t.method;
  j["source"] = weight_json(t.source);
  j["target"] = t.target;
  j["window"] = window_json(t.window);
  j["entries"] = ojson::array();
  for (const auto& [w, c] : t.sorted()) {
    ojson e;
    e["param"] = weight_json(w);
    e["mult"] = z_json(c);
    j["entries"].push_back(e);
  }
  return j.dump(2) + "\n";
}

std::string table_csv(const BranchingTable& t) {
  std::string out = "height,param,mult\n";
  for (const auto& [w, c] : t.sorted()) {
    std::string p;
    for (std::size_t i = 0; i < w.c.size(); ++i) p += (i ? " " : "") + format_rational(w.c[i]);
    out += format_rational(t.window.height(w)) + "," + p + "," + c.get_str() + "\n";
  }
  return out;
}

BranchingTable table_from_json(const std::string& text) {
  try {
    ojson j = ojson::parse(text);
    BranchingTable t;
    t.method = j.at("method").get<std::string>();
    t.source = weight_from(j.at("source"));
    t.target = j.at("target").get<std::string>();
    t.window.direction = weight_from(j.at("window").at("direction"));
    t.window.bound = parse_rational(j.at("window").at("bound").get<std::string>());
    for (const auto& e : j.at("entries")) t.entries[weight_from(e.at("param"))] = z_from(e.at("mult"));
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw PreconditionError(std::string("malformed table: ") + e.what());
  }
}

std::string rows_json(const std::vector<PairTableRow>& rows) {
  ojson arr = ojson::array();
  for (const auto& r : rows) {
    ojson e;
    e["id"] = r.id;
    e["table"] = r.table;
    e["g"] = r.g;
    e["h"] = r.h;
    e["h0"] = r.h0;
    e["psi"] = r.psi_spec;
    e["k1"] = r.k1_label;
    e["computable"] = r.instance.has_value();
    arr.push_back(e);
  }
  return arr.dump(2) + "\n";
}

std::string rows_csv(const std::vector<PairTableRow>& rows) {
  std::string out = "id,table,g,h,h0,psi,k1\n";
  for (const auto& r : rows)
    out += csv_field(r.id) + "," + r.table + "," + csv_field(r.g) + "," + csv_field(r.h) + "," +
           csv_field(r.h0) + "," + csv_field(r.psi_spec) + "," + csv_field(r.k1_label) + "\n";
  return out;
}

}  // namespace dsb
