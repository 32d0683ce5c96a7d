#include "cellred/uniptables.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "cellred/error.hpp"
#include "cellred/heckechar.hpp"
#include "json.hpp"

#ifndef CELLRED_DEFAULT_DATA_DIR
#define CELLRED_DEFAULT_DATA_DIR "data"
#endif

namespace cellred {

using nlohmann::json;

Weight WeightTemplate::instantiate(std::int64_t p) const {
  Weight w;
  w.coords.reserve(coords.size());
  for (auto [c0, c1] : coords) w.coords.push_back(c0 + c1 * p);
  return w;
}

bool WeightTemplate::dominant_from(std::int64_t min_prime) const {
  // Affine in p with c1 >= 0: the minimum over p >= min_prime is at min_prime.
  for (auto [c0, c1] : coords) {
    if (c1 < 0) return false;
    if (c0 + c1 * min_prime < 0) return false;
  }
  return true;
}

std::string WeightTemplate::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords.size(); ++i) {
    auto [c0, c1] = coords[i];
    if (i) os << ',';
    if (c1 == 0) {
      os << c0;
      continue;
    }
    if (c1 == 1)
      os << 'p';
    else
      os << c1 << 'p';
    if (c0 > 0) os << '+' << c0;
    if (c0 < 0) os << c0;
  }
  os << ')';
  return os.str();
}

const UnipotentChar& TypeTables::unipotent_char(const std::string& label) const {
  for (const auto& u : unipotent)
    if (u.label == label) return u;
  throw Error(Errc::UnknownLabel, type.name() + ": no unipotent character '" + label + "'");
}

std::string TypeTables::ref(const std::string& key) const {
  auto it = refs.find(key);
  return it == refs.end() ? std::string() : it->second;
}

std::filesystem::path default_data_dir() {
  if (const char* env = std::getenv("CELLRED_DATA_DIR"); env && *env) return env;
  return CELLRED_DEFAULT_DATA_DIR;
}

namespace {

class Loader {
 public:
  Loader(const WeylGroup& g, std::string file) : g_(g), file_(std::move(file)) {}

  [[noreturn]] void fail(const std::string& table, const std::string& what) const {
    std::string where = file_ + " " + table;
    if (auto it = refs_.find(table.substr(0, table.find('['))); it != refs_.end())
      where += " (" + it->second + ")";
    throw Error(Errc::DataIntegrityFailure, where + ": " + what);
  }

  ElemId word(const std::string& table, const std::string& text) const {
    try {
      return g_.parse(text);
    } catch (const Error& e) {
      fail(table, "bad word '" + text + "': " + e.what());
    }
  }

  std::int64_t integer(const std::string& table, const json& j) const {
    if (!j.is_number_integer()) fail(table, "expected an integer, got " + j.dump());
    return j.get<std::int64_t>();
  }

  const json& object(const std::string& table, const json& j) const {
    if (!j.is_object()) fail(table, "expected an object");
    return j;
  }

  TypeTables load(const json& root) {
    TypeTables t(g_.type());
    if (!root.is_object()) fail("root", "expected an object");
    if (root.value("type", "") != g_.type().name())
      fail("type", "file declares type '" + root.value("type", "") + "'");
    if (root.contains("refs") && root["refs"].is_object())
      for (auto& [k, v] : root["refs"].items()) refs_[k] = v.get<std::string>();
    t.refs = refs_;
    t.min_prime = root.value("min_prime", std::int64_t{2});
    t.proximity_bound = root.value("proximity_bound", std::int64_t{4});

    const json null_json;
    auto slot = [&](const char* key) -> const json& {
      auto it = root.find(key);
      return it == root.end() ? null_json : *it;
    };

    load_unipotent(t, slot("unipotent"));
    load_near_involutions(t, slot("near_involutions"));
    load_r_alpha(t, slot("r_alpha"));
    load_m_w(t, slot("m_w"));
    load_delta(t, slot("delta"));
    load_decomp(t, slot("decomp"));
    load_duality(t, slot("duality"));
    return t;
  }

 private:
  void load_unipotent(TypeTables& t, const json& j) {
    if (j.is_null()) return;
    if (!j.is_array() || j.empty()) fail("unipotent", "expected a nonempty array");
    std::set<std::string> seen;
    for (const auto& e : j) {
      UnipotentChar u;
      u.label = e.value("label", "");
      const std::string table = "unipotent[" + u.label + "]";
      if (u.label.empty() || !seen.insert(u.label).second) fail(table, "missing or duplicate label");
      try {
        u.degree = IntPoly::parse(e.value("degree", ""));
      } catch (const Error& err) {
        fail(table, err.what());
      }
      if (u.degree.is_zero() || u.degree.leading_coeff() <= 0)
        fail(table, "degree must have positive leading coefficient");
      u.ref = e.value("ref", "");
      u.w_char = e.value("w_char", "");
      t.unipotent.push_back(std::move(u));
    }
    auto require = [&](const std::string& label, const IntPoly& expected) {
      if (!seen.count(label)) fail("unipotent", "missing character '" + label + "'");
      if (t.unipotent_char(label).degree != expected)
        fail("unipotent[" + label + "]", "degree must be " + expected.str());
    };
    require("1", IntPoly(1));
    require("S", IntPoly::t().pow(g_.nu()));
  }

  void load_near_involutions(TypeTables& t, const json& j) {
    if (j.is_null()) return;
    if (!j.is_array() || j.empty()) fail("near_involutions", "expected a nonempty array");
    std::vector<ElemId> out;
    for (const auto& e : j) out.push_back(word("near_involutions", e.get<std::string>()));
    std::sort(out.begin(), out.end());
    if (std::adjacent_find(out.begin(), out.end()) != out.end())
      fail("near_involutions", "duplicate element");
    jset_ = std::set<ElemId>(out.begin(), out.end());
    t.near_involutions = std::move(out);
  }

  // Keys must be exactly the near-involution list when that list is present.
  void check_keys(const std::string& table, const std::set<ElemId>& keys) const {
    if (jset_.empty()) return;
    for (ElemId w : keys)
      if (!jset_.count(w)) fail(table, "row for " + g_.str(w) + ", which is not a near involution");
    for (ElemId w : jset_)
      if (!keys.count(w)) fail(table, "no row for near involution " + g_.str(w));
  }

  void check_label(const std::string& table, const TypeTables& t, const std::string& label) const {
    for (const auto& u : t.unipotent)
      if (u.label == label) return;
    fail(table, "unknown unipotent label '" + label + "'");
  }

  void load_r_alpha(TypeTables& t, const json& j) {
    if (j.is_null()) return;
    object("r_alpha", j);
    std::map<ElemId, std::map<std::string, std::int64_t>> rows;
    std::set<ElemId> keys;
    std::set<std::string> used;
    for (auto& [ws, row] : j.items()) {
      const std::string table = "r_alpha[" + ws + "]";
      ElemId w = word(table, ws);
      object(table, row);
      if (row.empty()) fail(table, "empty row");
      keys.insert(w);
      for (auto& [label, m] : row.items()) {
        check_label(table, t, label);
        const std::int64_t k = integer(table, m);
        if (k <= 0) fail(table, "multiplicity must be positive");
        rows[w][label] = k;
        used.insert(label);
      }
    }
    check_keys("r_alpha", keys);
    for (const auto& u : t.unipotent)
      if (!used.count(u.label)) fail("r_alpha", "character '" + u.label + "' occurs in no row");
    t.r_alpha = std::move(rows);
  }

  void load_m_w(TypeTables& t, const json& j) {
    if (j.is_null()) return;
    object("m_w", j);
    MwDef def;
    std::set<ElemId> keys;
    for (auto& [ws, terms] : j.items()) {
      const std::string table = "m_w[" + ws + "]";
      ElemId w = word(table, ws);
      if (!terms.is_array() || terms.empty()) fail(table, "expected a nonempty array");
      keys.insert(w);
      for (const auto& term : terms) {
        TemplateTerm tt;
        tt.coef = integer(table, term.value("coef", json()));
        if (tt.coef != 1 && tt.coef != -1) fail(table, "coefficient must be +1 or -1");
        const json& coords = term.value("template", json());
        if (!coords.is_array() || static_cast<int>(coords.size()) != g_.rank())
          fail(table, "template must have one entry per simple root");
        for (const auto& c : coords) {
          if (!c.is_array() || c.size() != 2) fail(table, "coordinate must be [c0, c1]");
          const std::int64_t c0 = integer(table, c[0]), c1 = integer(table, c[1]);
          if (c1 != 0 && c1 != 1) fail(table, "p-coefficient must be 0 or 1");
          tt.tmpl.coords.emplace_back(c0, c1);
        }
        if (!tt.tmpl.dominant_from(t.min_prime) ||
            !tt.tmpl.instantiate(t.min_prime).is_restricted(t.min_prime))
          fail(table, tt.tmpl.str() + " is not dominant and restricted at p = " +
                          std::to_string(t.min_prime));
        def[w].push_back(std::move(tt));
      }
    }
    check_keys("m_w", keys);
    t.m_w = std::move(def);
  }

  void load_delta(TypeTables& t, const json& j) {
    if (j.is_null()) return;
    object("delta", j);
    std::map<ElemId, IntPoly> out;
    std::set<ElemId> keys;
    for (auto& [ws, text] : j.items()) {
      const std::string table = "delta[" + ws + "]";
      ElemId w = word(table, ws);
      try {
        out[w] = IntPoly::parse(text.get<std::string>());
      } catch (const Error& err) {
        fail(table, err.what());
      }
      if (out[w].is_zero() || out[w].leading_coeff() <= 0)
        fail(table, "leading coefficient must be positive");
      keys.insert(w);
    }
    check_keys("delta", keys);
    t.delta = std::move(out);
  }

  void load_decomp(TypeTables& t, const json& j) {
    if (j.is_null()) return;
    object("decomp", j);
    std::map<std::string, std::map<ElemId, std::int64_t>> out;
    for (auto& [label, row] : j.items()) {
      const std::string table = "decomp[" + label + "]";
      check_label(table, t, label);
      object(table, row);
      for (auto& [ws, m] : row.items()) {
        ElemId w = word(table, ws);
        if (!jset_.empty() && !jset_.count(w)) fail(table, ws + " is not a near involution");
        const std::int64_t k = integer(table, m);
        if (k <= 0) fail(table, "multiplicity must be positive");
        out[label][w] = k;
      }
    }
    for (const auto& u : t.unipotent)
      if (!out.count(u.label)) fail("decomp", "no row for '" + u.label + "'");
    t.decomp = std::move(out);
  }

  void load_duality(TypeTables& t, const json& j) {
    if (j.is_null()) return;
    object("duality", j);
    std::map<ElemId, ElemId> inv;
    auto put = [&](ElemId a, ElemId b) {
      auto [it, fresh] = inv.emplace(a, b);
      if (!fresh && it->second != b) fail("duality", g_.str(a) + " has two partners");
    };
    for (auto& [a, b] : j.items()) {
      const ElemId x = word("duality", a), y = word("duality", b.get<std::string>());
      put(x, y);
      put(y, x);
    }
    std::set<ElemId> keys;
    for (auto [a, b] : inv) keys.insert(a);
    check_keys("duality", keys);
    t.duality = std::move(inv);
  }

  const WeylGroup& g_;
  std::string file_;
  std::map<std::string, std::string> refs_;
  std::set<ElemId> jset_;
};

}  // namespace

TypeTables load_tables(const WeylGroup& g, const std::filesystem::path& dir) {
  const auto path = dir / (g.type().name() + ".json");
  const std::string file = path.filename().string();
  std::ifstream in(path);
  if (!in)
    throw Error(Errc::DataIntegrityFailure, file + ": cannot open " + path.string());
  json root;
  try {
    root = json::parse(in);
  } catch (const json::exception& e) {
    throw Error(Errc::DataIntegrityFailure, file + ": " + e.what());
  }
  try {
    return Loader(g, file).load(root);
  } catch (const json::exception& e) {
    throw Error(Errc::DataIntegrityFailure, file + ": " + e.what());
  }
}

std::int64_t r_alpha_multiplicity(const TypeTables& t, const std::string& label, ElemId w) {
  t.unipotent_char(label);
  if (!t.r_alpha) return 0;
  auto row = t.r_alpha->find(w);
  if (row == t.r_alpha->end()) return 0;
  auto it = row->second.find(label);
  return it == row->second.end() ? 0 : it->second;
}

std::vector<int> parse_partition(const std::string& label) {
  std::vector<int> parts;
  if (label.size() < 2 || label.front() != '(' || label.back() != ')')
    throw Error(Errc::ParseError, "partition '" + label + "'");
  std::stringstream ss(label.substr(1, label.size() - 2));
  std::string piece;
  while (std::getline(ss, piece, ',')) {
    try {
      std::size_t used = 0;
      const int k = std::stoi(piece, &used);
      if (used != piece.size() || k <= 0) throw std::invalid_argument(piece);
      parts.push_back(k);
    } catch (const std::exception&) {
      throw Error(Errc::ParseError, "partition '" + label + "'");
    }
  }
  if (parts.empty() || !std::is_sorted(parts.rbegin(), parts.rend()))
    throw Error(Errc::ParseError, "partition '" + label + "'");
  return parts;
}

IntPoly hook_degree(const std::vector<int>& partition) {
  // q^{n(lambda)} prod_{i<=n} (q^i - 1) / prod_hooks (q^h - 1)
  int n = 0, n_lambda = 0;
  for (std::size_t i = 0; i < partition.size(); ++i) {
    n += partition[i];
    n_lambda += static_cast<int>(i) * partition[i];
  }
  std::vector<int> conj(partition.empty() ? 0 : partition[0], 0);
  for (int part : partition)
    for (int j = 0; j < part; ++j) ++conj[j];

  const IntPoly t = IntPoly::t();
  IntPoly num = t.pow(n_lambda), den(1);
  for (int i = 1; i <= n; ++i) num *= t.pow(i) - IntPoly(1);
  for (std::size_t i = 0; i < partition.size(); ++i)
    for (int j = 0; j < partition[i]; ++j) {
      const int hook = (partition[i] - j - 1) + (conj[j] - static_cast<int>(i) - 1) + 1;
      den *= t.pow(hook) - IntPoly(1);
    }
  return num.divide_exact(den);
}

void derive_type_a_tables(TypeTables& t, const WCharTable& table, const LeadingData& leading) {
  if (!t.type.is_type_a()) return;
  bool derived = false;
  if (t.unipotent.empty()) {
    for (int e = 0; e < table.num_irreducibles(); ++e) {
      const std::string& label = table.labels[e];
      t.unipotent.push_back({label, hook_degree(parse_partition(label)), "", label});
    }
    derived = true;
  }
  if (!t.r_alpha) {
    std::map<ElemId, std::map<std::string, std::int64_t>> rows;
    for (std::size_t w = 0; w < leading.c.size(); ++w)
      for (int e = 0; e < table.num_irreducibles(); ++e)
        if (const std::int64_t c = leading.c[w][e]; c != 0) {
          // rho is matched to E through the w_char column.
          std::string label = table.labels[e];
          for (const auto& u : t.unipotent)
            if (u.w_char == table.labels[e]) label = u.label;
          rows[static_cast<ElemId>(w)][label] = c;
        }
    t.r_alpha = std::move(rows);
    derived = true;
  }
  t.derived = t.derived || derived;
}

}  // namespace cellred
