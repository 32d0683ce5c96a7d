#include "cellred/audit.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "cellred/error.hpp"

namespace cellred {

using nlohmann::ordered_json;

const char* status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
  }
  return "?";
}

Status parse_status(const std::string& s) {
  if (s == "pass") return Status::Pass;
  if (s == "fail") return Status::Fail;
  if (s == "skipped") return Status::Skipped;
  throw Error(Errc::ParseError, "status '" + s + "'");
}

bool AuditReport::any_failed() const {
  return std::any_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.status == Status::Fail; });
}

const CheckResult* AuditReport::find(const std::string& id) const {
  for (const auto& c : checks)
    if (c.id == id) return &c;
  return nullptr;
}

ordered_json AuditReport::to_json() const {
  ordered_json j;
  j["type"] = type.name();
  j["checks"] = ordered_json::array();
  for (const auto& c : checks) {
    ordered_json e;
    e["id"] = c.id;
    e["paper_ref"] = c.paper_ref;
    e["status"] = status_name(c.status);
    e["details"] = c.details;
    if (!c.artifacts.is_null()) e["artifacts"] = c.artifacts;
    j["checks"].push_back(std::move(e));
  }
  return j;
}

AuditReport AuditReport::from_json(const ordered_json& j) {
  AuditReport r{CartanType::parse(j.at("type").get<std::string>()), {}};
  for (const auto& e : j.at("checks")) {
    CheckResult c;
    c.id = e.at("id").get<std::string>();
    c.paper_ref = e.at("paper_ref").get<std::string>();
    c.status = parse_status(e.at("status").get<std::string>());
    c.details = e.at("details").get<std::string>();
    if (e.contains("artifacts")) c.artifacts = e.at("artifacts");
    r.checks.push_back(std::move(c));
  }
  return r;
}

std::string AuditReport::to_markdown() const {
  std::ostringstream os;
  os << "## " << type.name() << "\n\n";
  os << "| check | ref | status | details |\n";
  os << "|---|---|---|---|\n";
  for (const auto& c : checks) {
    std::string details = c.details;
    std::replace(details.begin(), details.end(), '|', '/');
    os << "| " << c.id << " | " << c.paper_ref << " | " << status_name(c.status) << " | "
       << details << " |\n";
  }
  return os.str();
}

TypeContext TypeContext::build(const CartanType& type, const std::filesystem::path& data_dir,
                               Exec exec) {
  auto group = std::make_shared<const WeylGroup>(WeylGroup::generate(type));
  KLData kl = compute_kl(group, 120, exec);
  std::vector<int> a = a_function(kl);
  CellPartition cells = compute_cells(kl, a);
  NearInvolutionSet near_inv = near_involutions(*group, cells);
  JRing jring = j_ring(kl, a, exec);
  WCharTable table = w_character_table(*group);
  std::vector<HModule> modules = build_hecke_modules(*group, kl, cells, table);
  LeadingData leading = leading_data(*group, modules);
  TypeTables tables = load_tables(*group, data_dir);
  derive_type_a_tables(tables, table, leading);

  TypeContext ctx{group,          std::move(kl),      std::move(a),
                  std::move(cells), std::move(near_inv), std::move(jring),
                  std::move(table), std::move(modules), std::move(leading),
                  std::move(tables), std::nullopt,      "",
                  data_dir};
  if (ctx.tables.m_w) {
    try {
      ctx.deltas = delta_table(*ctx.group, ctx.tables);
    } catch (const std::exception& e) {
      ctx.deltas_error = e.what();
    }
  }
  return ctx;
}

namespace {

const std::vector<std::int64_t> kSamplePrimes = {5, 7, 11, 13};

CheckResult make(const std::string& id) {
  CheckResult c;
  c.id = id;
  return c;
}

CheckResult skipped(CheckResult c, const std::string& reason) {
  c.status = Status::Skipped;
  c.details = reason;
  return c;
}

// Shared guard for checks that need the M_w data and the delta polynomials.
std::optional<CheckResult> need_deltas(const TypeContext& ctx, CheckResult c) {
  if (!ctx.tables.m_w)
    return skipped(std::move(c), "no M_w data for " + ctx.g().type().name());
  if (!ctx.deltas) {
    c.status = Status::Fail;
    c.details = "delta table unavailable: " + ctx.deltas_error;
    return c;
  }
  return std::nullopt;
}

std::string words(const WeylGroup& g, const std::vector<ElemId>& ws) {
  std::string out = "{";
  for (std::size_t i = 0; i < ws.size(); ++i) out += (i ? "," : "") + g.str(ws[i]);
  return out + "}";
}

std::string poly_or_zero(const IntPoly& f) { return f.is_zero() ? "0" : f.str(); }

// f(p) > 0 for every integer p >= m: f(m) > 0 and f(t + m) - f(m) has
// nonnegative coefficients.
bool positive_from(const IntPoly& f, std::int64_t m) {
  if (f.eval(m) <= 0) return false;
  IntPoly shifted;
  const IntPoly x = IntPoly::linear(Integer(m), Integer(1));
  for (int k = f.degree(); k >= 0; --k) shifted = shifted * x + IntPoly(f.coeff(k));
  for (const auto& c : shifted.coeffs())
    if (c < 0) return false;
  return true;
}

Integer template_dim_at(const TypeContext& ctx, const std::vector<TemplateTerm>& terms,
                        std::int64_t p) {
  Integer total = 0;
  for (const auto& term : terms)
    total += term.coef * weyl_dim(ctx.g().root_system(), term.tmpl.instantiate(p));
  return total;
}

}  // namespace

CheckResult check_bookkeeping(const TypeContext& ctx) {
  CheckResult c = make("bookkeeping");
  if (auto early = need_deltas(ctx, c)) return *early;
  ordered_json art = ordered_json::object();
  int ok = 0;
  std::vector<std::string> bad;
  for (const auto& u : ctx.tables.unipotent) {
    IntPoly rhs;
    std::int64_t sample_mismatch = 0;
    for (const auto& [w, d] : *ctx.deltas) {
      const std::int64_t m = r_alpha_multiplicity(ctx.tables, u.label, w);
      if (m) rhs += d.pi * Rational(m);
    }
    for (std::int64_t p : kSamplePrimes) {
      if (p < ctx.tables.min_prime) continue;
      Integer total = 0;
      for (const auto& [w, terms] : *ctx.tables.m_w)
        total += r_alpha_multiplicity(ctx.tables, u.label, w) * template_dim_at(ctx, terms, p);
      if (Rational(total) != u.degree.eval(p)) sample_mismatch = p;
    }
    const bool pass = rhs == u.degree && sample_mismatch == 0;
    art[u.label] = {{"degree", u.degree.str()}, {"sum", poly_or_zero(rhs)}, {"pass", pass}};
    if (pass)
      ++ok;
    else
      bad.push_back(u.label + (sample_mismatch ? " (differs at p=" + std::to_string(sample_mismatch) + ")"
                                               : ""));
  }
  c.status = bad.empty() ? Status::Pass : Status::Fail;
  c.details = std::to_string(ok) + "/" + std::to_string(ctx.tables.unipotent.size()) +
              " unipotent characters";
  for (const auto& b : bad) c.details += "; mismatch " + b;
  c.artifacts = std::move(art);
  return c;
}

CheckResult check_decomposition(const TypeContext& ctx) {
  CheckResult c = make("decomposition");
  if (!ctx.tables.decomp || !ctx.tables.r_alpha)
    return skipped(c, "no decomposition data for " + ctx.g().type().name());
  const auto& g = ctx.g();
  std::vector<std::string> bad;
  for (const auto& u : ctx.tables.unipotent) {
    std::map<ElemId, std::int64_t> from_r;
    for (const auto& [w, row] : *ctx.tables.r_alpha)
      if (auto it = row.find(u.label); it != row.end()) from_r[w] = it->second;
    const auto it = ctx.tables.decomp->find(u.label);
    const std::map<ElemId, std::int64_t> stored =
        it == ctx.tables.decomp->end() ? std::map<ElemId, std::int64_t>{} : it->second;
    if (stored != from_r) {
      std::vector<ElemId> diff;
      std::set<ElemId> keys;
      for (auto [w, m] : stored) keys.insert(w);
      for (auto [w, m] : from_r) keys.insert(w);
      for (ElemId w : keys) {
        const auto a = stored.find(w);
        const auto b = from_r.find(w);
        if (a == stored.end() || b == from_r.end() || a->second != b->second) diff.push_back(w);
      }
      bad.push_back(u.label + " at " + words(g, diff));
    }
  }
  c.status = bad.empty() ? Status::Pass : Status::Fail;
  c.details = std::to_string(ctx.tables.unipotent.size() - bad.size()) + "/" +
              std::to_string(ctx.tables.unipotent.size()) +
              " rows equal the transposed R_alpha table";
  for (const auto& b : bad) c.details += "; mismatch " + b;
  return c;
}

CheckResult check_delta_table(const TypeContext& ctx) {
  CheckResult c = make("delta_table");
  if (auto early = need_deltas(ctx, c)) return *early;
  const auto& g = ctx.g();
  ordered_json art = ordered_json::object();
  std::vector<std::string> bad;
  for (const auto& [w, d] : *ctx.deltas) {
    const IntPoly* stored = nullptr;
    if (ctx.tables.delta)
      if (auto it = ctx.tables.delta->find(w); it != ctx.tables.delta->end()) stored = &it->second;
    std::vector<std::string> why;
    if (!stored || *stored != d.pi) why.push_back("closed form");
    if (!d.pi.is_integer_valued()) why.push_back("not integer valued");
    if (!positive_from(d.pi, ctx.tables.min_prime)) why.push_back("not positive");
    for (std::int64_t p : kSamplePrimes) {
      if (p < ctx.tables.min_prime) continue;
      if (Rational(template_dim_at(ctx, ctx.tables.m_w->at(w), p)) != d.pi.eval(p))
        why.push_back("sample p=" + std::to_string(p));
    }
    art[g.str(w)] = {{"pi", d.pi.str()}, {"c", d.c}, {"stored", stored ? stored->str() : ""}};
    if (!why.empty()) {
      std::string s = g.str(w) + ":";
      for (const auto& y : why) s += " " + y;
      bad.push_back(s);
    }
  }
  c.status = bad.empty() ? Status::Pass : Status::Fail;
  c.details = std::to_string(ctx.deltas->size() - bad.size()) + "/" +
              std::to_string(ctx.deltas->size()) + " delta polynomials";
  for (const auto& b : bad) c.details += "; " + b;
  c.artifacts = std::move(art);
  return c;
}

CheckResult check_proximity(const TypeContext& ctx) {
  CheckResult c = make("proximity");
  if (!ctx.tables.m_w) return skipped(c, "no M_w data for " + ctx.g().type().name());
  const auto& g = ctx.g();
  int templates = 0;
  std::int64_t worst = 0;
  std::vector<std::string> bad;
  for (const auto& [w, terms] : *ctx.tables.m_w) {
    const GenSet cl = g.left_descent_set(w);
    for (const auto& term : terms) {
      ++templates;
      for (int i = 0; i < g.rank(); ++i) {
        const bool in_cl = (cl >> i) & 1u;
        auto [c0, c1] = term.tmpl.coords[i];
        // (p-1) lambda_cl has coordinate p - 1 on cl and 0 elsewhere.
        const std::int64_t diff = c0 - (in_cl ? -1 : 0);
        worst = std::max(worst, diff < 0 ? -diff : diff);
        if (c1 != (in_cl ? 1 : 0) || diff > ctx.tables.proximity_bound ||
            -diff > ctx.tables.proximity_bound) {
          bad.push_back(g.str(w) + " " + term.tmpl.str() + " vs cl=" + genset_str(cl));
          break;
        }
      }
    }
  }
  c.status = bad.empty() ? Status::Pass : Status::Fail;
  c.details = std::to_string(templates) + " templates, largest correction " +
              std::to_string(worst) + " (bound " + std::to_string(ctx.tables.proximity_bound) + ")";
  for (const auto& b : bad) c.details += "; " + b;
  return c;
}

CheckResult check_duality(const TypeContext& ctx) {
  CheckResult c = make("duality");
  if (auto early = need_deltas(ctx, c)) return *early;
  if (!ctx.tables.duality) return skipped(c, "no duality table for " + ctx.g().type().name());
  const auto& g = ctx.g();
  const DualityResult res = find_duality(g, *ctx.deltas);
  const GenSet all = (GenSet{1} << g.rank()) - 1;
  std::vector<std::string> bad = res.findings;
  ordered_json art = ordered_json::array();
  int minus = 0;
  for (const auto& m : res.matches) {
    const ElemId x = res.partner(m.w);
    auto it = ctx.tables.duality->find(m.w);
    const ElemId expected = it == ctx.tables.duality->end() ? -1 : it->second;
    if (x != expected)
      bad.push_back(g.str(m.w) + " -> " + (x >= 0 ? g.str(x) : "?") + ", table has " +
                    (expected >= 0 ? g.str(expected) : "none"));
    if (expected >= 0 && g.left_descent_set(expected) != (all & ~g.left_descent_set(m.w)))
      bad.push_back("cl(" + g.str(expected) + ") is not the complement of cl(" + g.str(m.w) + ")");
    if (m.sign < 0) ++minus;
    art.push_back({{"w", g.str(m.w)}, {"partner", x >= 0 ? g.str(x) : ""}, {"sign", m.sign}});
  }
  c.status = bad.empty() ? Status::Pass : Status::Fail;
  c.details = std::to_string(res.matches.size()) + " elements matched; signs: " +
              (minus ? std::to_string(minus) + " negative" : std::string("all +"));
  for (const auto& b : bad) c.details += "; " + b;
  c.artifacts = std::move(art);
  return c;
}

CheckResult check_a_values(const TypeContext& ctx) {
  CheckResult c = make("a_values");
  if (auto early = need_deltas(ctx, c)) return *early;
  const auto& g = ctx.g();
  std::vector<std::string> bad;
  std::map<int, int> c_of_cell;
  ordered_json art = ordered_json::object();
  for (const auto& [w, d] : *ctx.deltas) {
    const int cell = ctx.cells.two_sided_of[w];
    const int a = ctx.cells.a_value[cell];
    art[g.str(w)] = {{"c", d.c}, {"a", a}};
    if (d.c != a) bad.push_back("c(" + g.str(w) + ")=" + std::to_string(d.c) + " but a=" + std::to_string(a));
    auto [it, fresh] = c_of_cell.emplace(cell, d.c);
    if (!fresh && it->second != d.c) bad.push_back("c not constant on the cell of " + g.str(w));
  }
  c.status = bad.empty() ? Status::Pass : Status::Fail;
  std::string values;
  for (const auto& [w, d] : *ctx.deltas) values += (values.empty() ? "" : ",") + std::to_string(d.c);
  c.details = "c(w) = " + values;
  for (const auto& b : bad) c.details += "; " + b;
  c.artifacts = std::move(art);
  return c;
}

CheckResult check_centrality(const TypeContext& ctx) {
  CheckResult c = make("centrality");
  if (!ctx.tables.r_alpha) return skipped(c, "no R_alpha data for " + ctx.g().type().name());
  const int n = ctx.jring.size();
  int ok = 0;
  std::vector<std::string> bad;
  for (const auto& u : ctx.tables.unipotent) {
    JElement z(n, 0);
    for (const auto& [w, row] : *ctx.tables.r_alpha)
      if (auto it = row.find(u.label); it != row.end()) z[w] += it->second;
    if (ctx.jring.is_central(z))
      ++ok;
    else
      bad.push_back(u.label);
  }
  c.status = bad.empty() ? Status::Pass : Status::Fail;
  c.details = std::to_string(ok) + "/" + std::to_string(ctx.tables.unipotent.size()) +
              " elements central" + (ctx.tables.derived ? " (rows derived from c_{w,E})" : "");
  for (const auto& b : bad) c.details += "; not central: " + b;
  return c;
}

CheckResult check_j_criterion(const TypeContext& ctx) {
  CheckResult c = make("j_criterion");
  const auto& g = ctx.g();
  std::vector<ElemId> from_alpha;
  for (ElemId w = 0; w < g.size(); ++w)
    if (ctx.leading.alpha_nonzero(w)) from_alpha.push_back(w);
  std::vector<std::string> bad;
  if (from_alpha != ctx.near_inv.members)
    bad.push_back("alpha_w != 0 gives " + words(g, from_alpha));
  if (ctx.tables.near_involutions && *ctx.tables.near_involutions != ctx.near_inv.members)
    bad.push_back("listed " + words(g, *ctx.tables.near_involutions));
  c.status = bad.empty() ? Status::Pass : Status::Fail;
  c.details = std::to_string(ctx.near_inv.size()) + " near involutions " +
              words(g, ctx.near_inv.members) +
              (ctx.tables.near_involutions ? ", equal to the listed set" : ", no listed set");
  for (const auto& b : bad) c.details += "; " + b;
  ordered_json art = ordered_json::array();
  for (ElemId w : ctx.near_inv.members) art.push_back(g.str(w));
  c.artifacts = std::move(art);
  return c;
}

CheckResult check_hecke_consistency(const TypeContext& ctx) {
  CheckResult c = make("hecke_consistency");
  const auto& g = ctx.g();
  std::vector<std::string> bad;
  for (const auto& m : ctx.modules)
    if (auto msg = verify_relations(g, m); !msg.empty()) bad.push_back(m.label + ": " + msg);
  std::size_t entries = 0;
  for (ElemId w = 0; w < g.size(); ++w)
    for (int e = 0; e < ctx.table.num_irreducibles(); ++e) {
      ++entries;
      if (ctx.leading.traces[w][e].at_one() != ctx.table.value(e, w)) {
        bad.push_back("trace of " + g.str(w) + " on " + ctx.table.labels[e]);
        if (bad.size() > 8) break;
      }
    }
  const int a_triv = ctx.leading.a_E[0], a_sign = ctx.leading.a_E[ctx.table.sign_row];
  if (a_triv != 0) bad.push_back("a(trivial) = " + std::to_string(a_triv));
  if (a_sign != g.nu()) bad.push_back("a(sign) = " + std::to_string(a_sign));
  c.status = bad.empty() ? Status::Pass : Status::Fail;
  c.details = std::to_string(entries) + " traces specialize to the character table; a(trivial)=" +
              std::to_string(a_triv) + ", a(sign)=" + std::to_string(a_sign);
  for (const auto& b : bad) c.details += "; " + b;
  ordered_json art = ordered_json::object();
  for (int e = 0; e < ctx.table.num_irreducibles(); ++e) art[ctx.table.labels[e]] = ctx.leading.a_E[e];
  c.artifacts = {{"a_E", std::move(art)}};
  return c;
}

CheckResult check_type_a_correspondence(const TypeContext& ctx) {
  CheckResult c = make("type_a_correspondence");
  const auto& g = ctx.g();
  if (!g.type().is_type_a()) return skipped(c, "defined for type A only");
  if (!ctx.tables.r_alpha) return skipped(c, "no R_alpha data");
  std::vector<std::string> bad;
  for (const auto& u : ctx.tables.unipotent) {
    int e = -1;
    try {
      e = ctx.table.index_of(u.w_char);
    } catch (const Error&) {
      bad.push_back(u.label + " has no W-character '" + u.w_char + "'");
      continue;
    }
    if (hook_degree(parse_partition(u.w_char)) != u.degree)
      bad.push_back("degree of " + u.label + " differs from the hook formula for " + u.w_char);
    for (ElemId w = 0; w < g.size(); ++w)
      if (r_alpha_multiplicity(ctx.tables, u.label, w) != ctx.leading.c[w][e])
        bad.push_back("(" + u.label + ":R_alpha_" + g.str(w) + ") != c_{w," + u.w_char + "}");
  }
  c.status = bad.empty() ? Status::Pass : Status::Fail;
  c.details = std::to_string(ctx.tables.unipotent.size()) + " characters matched to partitions" +
              (ctx.tables.derived ? " (table derived from c_{w,E})" : "");
  for (const auto& b : bad) c.details += "; " + b;
  return c;
}

CheckResult check_kl_properties(const TypeContext& ctx) {
  CheckResult c = make("kl_properties");
  const auto& g = ctx.g();
  const auto& kl = ctx.kl;
  std::vector<std::string> bad;
  std::size_t pairs = 0;
  auto note = [&](const std::string& s) {
    if (bad.size() < 8) bad.push_back(s);
  };
  for (ElemId w = 0; w < g.size(); ++w)
    for (ElemId y = 0; y < g.size(); ++y) {
      const LaurentPoly& p = kl.P(y, w);
      const std::string tag = "P(" + g.str(y) + "," + g.str(w) + ")";
      if (!kl.bruhat_le(y, w)) {
        if (!p.is_zero()) note(tag + " nonzero off the Bruhat interval");
        continue;
      }
      ++pairs;
      if (p.is_zero() || p.valuation() < 0 || p.coeff(0) != 1) {
        note(tag + " constant term");
        continue;
      }
      const int gap = g.length(w) - g.length(y);
      if (y == w ? p != LaurentPoly(1) : 2 * p.degree() > gap - 1) note(tag + " degree bound");
      for (const auto& [e, k] : p.terms())
        if (k < 0) note(tag + " negative coefficient");
      if (w == g.longest() && p != LaurentPoly(1)) note(tag + " should be 1");
    }
  c.status = bad.empty() ? Status::Pass : Status::Fail;
  c.details = std::to_string(pairs) + " Bruhat pairs: P(y,y)=1, P(y,w)(0)=1, deg <= (l(w)-l(y)-1)/2";
  for (const auto& b : bad) c.details += "; " + b;
  return c;
}

CheckResult check_cells(const TypeContext& ctx) {
  CheckResult c = make("cells");
  const auto& g = ctx.g();
  const auto& cells = ctx.cells;
  std::vector<std::string> bad;
  for (ElemId w = 0; w < g.size(); ++w) {
    bool inverse_ok = true;
    // x ~R w iff x^{-1} ~L w^{-1}
    for (ElemId x = 0; x < g.size(); ++x)
      if ((cells.right_of[x] == cells.right_of[w]) !=
          (cells.left_of[g.inverse(x)] == cells.left_of[g.inverse(w)]))
        inverse_ok = false;
    if (!inverse_ok) bad.push_back("right cells are not inverse left cells at " + g.str(w));
  }
  for (const auto& cell : cells.left_cells)
    for (ElemId x : cell)
      if (cells.two_sided_of[x] != cells.two_sided_of[cell.front()])
        bad.push_back("left cell of " + g.str(cell.front()) + " meets two two-sided cells");
  for (ElemId w = 0; w < g.size(); ++w)
    if (ctx.a[w] != cells.a_value[cells.two_sided_of[w]])
      bad.push_back("a not constant on the cell of " + g.str(w));
  if (cells.a_value[cells.two_sided_of[g.identity()]] != 0) bad.push_back("a(e) != 0");
  if (cells.a_value[cells.two_sided_of[g.longest()]] != g.nu()) bad.push_back("a(w0) != nu");
  if (cells.left_cells[cells.left_of[g.identity()]].size() != 1) bad.push_back("{e} is not a left cell");
  // Every left cell holds exactly one distinguished involution.
  for (const auto& cell : cells.left_cells) {
    int invols = 0;
    for (ElemId x : cell)
      if (ctx.near_inv.contains(x) && g.is_involution(x)) ++invols;
    if (g.type().is_type_a() && invols != 1) bad.push_back("left cell of " + g.str(cell.front()) + " has " + std::to_string(invols) + " involutions");
  }
  c.status = bad.empty() ? Status::Pass : Status::Fail;
  c.details = std::to_string(cells.left_cells.size()) + " left, " +
              std::to_string(cells.right_cells.size()) + " right, " +
              std::to_string(cells.two_sided_cells.size()) + " two-sided cells";
  for (const auto& b : bad) c.details += "; " + b;
  ordered_json art = ordered_json::array();
  for (std::size_t k = 0; k < cells.two_sided_cells.size(); ++k)
    art.push_back({{"size", cells.two_sided_cells[k].size()}, {"a", cells.a_value[k]}});
  c.artifacts = {{"two_sided", std::move(art)}};
  return c;
}

CheckResult check_j_associativity(const TypeContext& ctx) {
  CheckResult c = make("j_ring_associativity");
  const auto& g = ctx.g();
  const auto bad = find_associativity_violation(ctx.jring.gamma(), Exec::Serial);
  const std::size_t n = static_cast<std::size_t>(g.size());
  c.status = bad ? Status::Fail : Status::Pass;
  c.details = std::to_string(n * n * n) + " basis triples";
  if (bad)
    c.details += "; (t_" + g.str((*bad)[0]) + " t_" + g.str((*bad)[1]) + ") t_" + g.str((*bad)[2]) +
                 " differs";
  return c;
}

namespace {

using CheckFn = CheckResult (*)(const TypeContext&);

struct NamedCheck {
  const char* id;
  CheckFn fn;
};

const std::vector<NamedCheck>& registry() {
  static const std::vector<NamedCheck> checks = {
      {"bookkeeping", check_bookkeeping},
      {"decomposition", check_decomposition},
      {"delta_table", check_delta_table},
      {"proximity", check_proximity},
      {"duality", check_duality},
      {"a_values", check_a_values},
      {"centrality", check_centrality},
      {"j_criterion", check_j_criterion},
      {"hecke_consistency", check_hecke_consistency},
      {"type_a_correspondence", check_type_a_correspondence},
      {"kl_properties", check_kl_properties},
      {"cells", check_cells},
      {"j_ring_associativity", check_j_associativity},
  };
  return checks;
}

std::map<std::string, std::string> load_check_refs(const std::filesystem::path& dir) {
  std::map<std::string, std::string> refs;
  std::ifstream in(dir / "check_refs.json");
  if (!in) return refs;
  try {
    const nlohmann::json j = nlohmann::json::parse(in);
    for (auto& [k, v] : j.items()) refs[k] = v.get<std::string>();
  } catch (const nlohmann::json::exception&) {
    refs.clear();
  }
  return refs;
}

}  // namespace

AuditReport audit_type(const TypeContext& ctx) {
  const auto refs = load_check_refs(ctx.data_dir);
  AuditReport report{ctx.g().type(), {}};
  for (const auto& [id, fn] : registry()) {
    CheckResult c;
    try {
      c = fn(ctx);
    } catch (const std::exception& e) {
      c = make(id);
      c.status = Status::Fail;
      c.details = std::string("exception: ") + e.what();
    }
    if (auto it = refs.find(id); it != refs.end()) c.paper_ref = it->second;
    report.checks.push_back(std::move(c));
  }
  return report;
}

std::vector<AuditReport> run_all(const std::vector<CartanType>& types, const AuditOptions& opts) {
  std::vector<AuditReport> reports;
  for (const auto& type : types) {
    try {
      reports.push_back(audit_type(TypeContext::build(type, opts.data_dir, opts.exec)));
    } catch (const std::exception& e) {
      // Nothing could be computed: every check fails with the same cause.
      const auto refs = load_check_refs(opts.data_dir);
      AuditReport report{type, {}};
      for (const auto& [id, fn] : registry()) {
        CheckResult c = make(id);
        c.status = Status::Fail;
        c.details = std::string("setup failed: ") + e.what();
        if (auto it = refs.find(id); it != refs.end()) c.paper_ref = it->second;
        report.checks.push_back(std::move(c));
      }
      reports.push_back(std::move(report));
    }
  }
  return reports;
}

}  // namespace cellred
