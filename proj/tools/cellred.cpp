// cellred: audit reports, the SL3 lab and table dumps.

#include <omp.h>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cellred/audit.hpp"
#include "cellred/error.hpp"
#include "cellred/sl3lab.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;
using namespace cellred;

namespace {

struct Common {
  std::string format = "json";
  std::string output;
  std::string data_dir;
  int jobs = 0;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--format", c.format, "json or md")
      ->check(CLI::IsMember({"json", "md"}))
      ->capture_default_str();
  cmd->add_option("--output,-o", c.output, "Write here instead of stdout (atomic replace)");
  cmd->add_option("--data-dir", c.data_dir, "Table directory (default: CELLRED_DATA_DIR or built-in)");
  cmd->add_option("--jobs,-j", c.jobs, "OpenMP threads (default: all cores)")->check(CLI::PositiveNumber);
}

const CLI::Validator kCartanType(
    [](std::string& s) -> std::string {
      try {
        CartanType::parse(s);
        return {};
      } catch (const Error&) {
        return "unsupported type '" + s + "' (expected A1, A2, A3, A4, B2 or G2)";
      }
    },
    "TYPE");

// Writes through a temporary sibling and renames it over the target.
void emit(const Common& c, const std::string& text) {
  if (c.output.empty()) {
    std::cout << text;
    return;
  }
  const fs::path target(c.output);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << text;
    if (!out.flush()) throw std::runtime_error("cannot write " + tmp.string());
  }
  fs::rename(tmp, target);
}

fs::path data_dir(const Common& c) { return c.data_dir.empty() ? default_data_dir() : fs::path(c.data_dir); }

void apply_jobs(const Common& c) {
  if (c.jobs > 0) omp_set_num_threads(c.jobs);
}

int run_audit(const Common& c, const std::vector<std::string>& names, bool all) {
  std::vector<CartanType> types;
  if (all)
    types = CartanType::all();
  else
    for (const auto& n : names) types.push_back(CartanType::parse(n));
  const auto reports = run_all(types, {data_dir(c), Exec::Parallel});

  std::string text;
  if (c.format == "md") {
    for (const auto& r : reports) text += r.to_markdown() + "\n";
  } else if (reports.size() == 1) {
    text = reports[0].to_json().dump(2) + "\n";
  } else {
    ordered_json arr = ordered_json::array();
    for (const auto& r : reports) arr.push_back(r.to_json());
    text = arr.dump(2) + "\n";
  }
  emit(c, text);
  for (const auto& r : reports)
    if (r.any_failed()) return 1;
  return 0;
}

int run_sl3(const Common& c, const std::vector<std::uint32_t>& primes, bool orbits) {
  ordered_json out = ordered_json::array();
  bool ok = true;
  std::ostringstream md;
  md << "| p | lines | dim F1 | dim ker tau | dim ker tau' | ker tau = im tau' | ker tau' = im tau | orbits |\n";
  md << "|---|---|---|---|---|---|---|---|\n";
  for (std::uint32_t p : primes) {
    const auto sp = sl3::build_incidence(p);
    const auto maps = sl3::tau_maps(sp);
    const auto k = sl3::kernel_analysis(maps);
    const std::size_t half = static_cast<std::size_t>(p) * (p + 1) / 2;
    bool pass = k.dim_ker_tau == half && k.dim_ker_tau_prime == half && k.ker_tau_is_im_tau_prime &&
                k.ker_tau_prime_is_im_tau;
    ordered_json e;
    e["p"] = p;
    e["lines"] = sp.size();
    e["planes"] = sp.planes.size();
    e["dim_f1"] = maps.dim_f1;
    e["dim_f2"] = maps.dim_f2;
    e["dim_ker_tau"] = k.dim_ker_tau;
    e["dim_ker_tau_prime"] = k.dim_ker_tau_prime;
    e["ker_tau_is_im_tau_prime"] = k.ker_tau_is_im_tau_prime;
    e["ker_tau_prime_is_im_tau"] = k.ker_tau_prime_is_im_tau;
    std::string orbit_summary = "-";
    if (orbits && p >= 5) {
      const auto ps = sl3::principal_series_check(p);
      ordered_json po;
      po["classes"] = ps.classes;
      po["regular_classes"] = ps.regular_classes;
      po["expected_sum"] = to_string(Integer(p + 1) * (Integer(p) * p + p + 1));
      ordered_json list = ordered_json::array();
      for (const auto& o : ps.orbits) {
        ordered_json lifts = ordered_json::array(), dims = ordered_json::array();
        for (const auto& l : o.lifts) lifts.push_back(l.str());
        for (const auto& d : o.dims) dims.push_back(to_string(d));
        list.push_back({{"lifts", lifts}, {"dims", dims}, {"sum", to_string(o.sum)}, {"pass", o.pass}});
      }
      po["orbits"] = std::move(list);
      po["pass"] = ps.all_pass;
      e["principal_series"] = std::move(po);
      pass = pass && ps.all_pass;
      orbit_summary = std::to_string(ps.orbits.size()) + (ps.all_pass ? " pass" : " FAIL");
    }
    e["pass"] = pass;
    ok = ok && pass;
    md << "| " << p << " | " << sp.size() << " | " << maps.dim_f1 << " | " << k.dim_ker_tau << " | "
       << k.dim_ker_tau_prime << " | " << (k.ker_tau_is_im_tau_prime ? "yes" : "no") << " | "
       << (k.ker_tau_prime_is_im_tau ? "yes" : "no") << " | " << orbit_summary << " |\n";
    out.push_back(std::move(e));
  }
  emit(c, c.format == "md" ? md.str() : out.dump(2) + "\n");
  return ok ? 0 : 1;
}

ordered_json coeff_map(const LaurentPoly& p) {
  ordered_json m = ordered_json::object();
  for (const auto& [e, k] : p.terms()) m[std::to_string(e)] = to_string(k);
  return m;
}

ordered_json word_list(const WeylGroup& g, const std::vector<ElemId>& ws) {
  ordered_json a = ordered_json::array();
  for (ElemId w : ws) a.push_back(g.str(w));
  return a;
}

int run_dump(const Common& c, const std::string& what, const std::string& type_name) {
  const TypeContext ctx = TypeContext::build(CartanType::parse(type_name), data_dir(c), Exec::Parallel);
  const WeylGroup& g = ctx.g();
  ordered_json out = ordered_json::object();
  if (what == "klpoly") {
    for (ElemId w = 0; w < g.size(); ++w) {
      ordered_json row = ordered_json::object();
      for (ElemId y = 0; y < g.size(); ++y)
        if (ctx.kl.bruhat_le(y, w)) row[g.str(y)] = coeff_map(ctx.kl.P(y, w));
      out[g.str(w)] = std::move(row);
    }
  } else if (what == "cells") {
    ordered_json left = ordered_json::array(), right = ordered_json::array(), two = ordered_json::array();
    for (const auto& cell : ctx.cells.left_cells) left.push_back(word_list(g, cell));
    for (const auto& cell : ctx.cells.right_cells) right.push_back(word_list(g, cell));
    for (std::size_t k = 0; k < ctx.cells.two_sided_cells.size(); ++k)
      two.push_back({{"elements", word_list(g, ctx.cells.two_sided_cells[k])}, {"a", ctx.cells.a_value[k]}});
    out["left"] = std::move(left);
    out["right"] = std::move(right);
    out["two_sided"] = std::move(two);
    out["near_involutions"] = word_list(g, ctx.near_inv.members);
  } else if (what == "gamma") {
    const auto& gt = ctx.jring.gamma();
    for (ElemId x = 0; x < g.size(); ++x)
      for (ElemId y = 0; y < g.size(); ++y) {
        const auto& row = gt.rows[static_cast<std::size_t>(x) * gt.n + y];
        if (row.empty()) continue;
        ordered_json terms = ordered_json::object();
        for (auto [z, v] : row) terms[g.str(z)] = v;
        out[g.str(x)][g.str(y)] = std::move(terms);
      }
  } else if (what == "cwe") {
    out["labels"] = ctx.table.labels;
    out["a_E"] = ctx.leading.a_E;
    ordered_json rows = ordered_json::object();
    for (ElemId w = 0; w < g.size(); ++w) rows[g.str(w)] = ctx.leading.c[w];
    out["c"] = std::move(rows);
  } else {
    if (!ctx.deltas)
      throw Error(Errc::MissingMwData, g.type().name() + " has no M_w data" +
                                           (ctx.deltas_error.empty() ? "" : ": " + ctx.deltas_error));
    const auto dual = find_duality(g, *ctx.deltas);
    for (const auto& m : dual.matches) {
      const ElemId x = dual.partner(m.w);
      const DeltaPoly& d = ctx.deltas->at(m.w);
      out[g.str(m.w)] = {{"pi", d.pi.str()},
                         {"c", d.c},
                         {"partner", x >= 0 ? g.str(x) : ""},
                         {"sign", m.sign}};
    }
  }
  emit(c, out.dump(2) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weyl group, Hecke algebra and Weyl module checks for the reduction-mod-p conjecture"};
  app.require_subcommand(1);

  Common audit_opts;
  std::vector<std::string> audit_types;
  bool audit_all = false;
  auto* audit = app.add_subcommand("audit", "Run every check and emit reports");
  add_common(audit, audit_opts);
  auto* type_opt = audit->add_option("--type,-t", audit_types, "Cartan type(s)")->check(kCartanType);
  audit->add_flag("--all", audit_all, "All six types")->excludes(type_opt);

  Common sl3_opts;
  std::vector<std::uint32_t> primes = {2, 3, 5, 7, 11};
  bool orbits = false;
  auto* sl3 = app.add_subcommand("sl3", "Incidence modules and principal series for SL3");
  add_common(sl3, sl3_opts);
  sl3->add_option("--p,-p", primes, "Primes")
      ->check(CLI::Validator(
          [](std::string& s) -> std::string {
            try {
              const unsigned long v = std::stoul(s);
              return sl3::is_prime(static_cast<std::uint32_t>(v)) && v <= 97 ? "" : s + " is not a prime <= 97";
            } catch (const std::exception&) {
              return s + " is not a number";
            }
          },
          "PRIME"))
      ->capture_default_str();
  sl3->add_flag("--orbits", orbits, "Principal-series orbit check (primes >= 5)");

  Common dump_opts;
  std::string what, dump_type;
  auto* tables = app.add_subcommand("tables", "Inspect computed tables");
  tables->require_subcommand(1);
  auto* dump = tables->add_subcommand("dump", "Dump one table as JSON");
  add_common(dump, dump_opts);
  dump->add_option("--what", what, "klpoly, cells, gamma, cwe or delta")
      ->required()
      ->check(CLI::IsMember({"klpoly", "cells", "gamma", "cwe", "delta"}));
  dump->add_option("--type,-t", dump_type, "Cartan type")->required()->check(kCartanType);

  CLI11_PARSE(app, argc, argv);

  try {
    if (audit->parsed()) {
      if (!audit_all && audit_types.empty()) {
        std::cerr << "audit: give --type or --all\n";
        return 2;
      }
      apply_jobs(audit_opts);
      return run_audit(audit_opts, audit_types, audit_all);
    }
    if (sl3->parsed()) {
      apply_jobs(sl3_opts);
      return run_sl3(sl3_opts, primes, orbits);
    }
    apply_jobs(dump_opts);
    return run_dump(dump_opts, what, dump_type);
  } catch (const std::exception& e) {
    std::cerr << "cellred: " << e.what() << "\n";
    return 3;
  }
}
