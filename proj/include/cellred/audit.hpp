#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "cellred/coxeter.hpp"
#include "cellred/heckechar.hpp"
#include "cellred/kernels.hpp"
#include "cellred/klcells.hpp"
#include "cellred/uniptables.hpp"
#include "cellred/weylmod.hpp"

namespace cellred {

enum class Status { Pass, Fail, Skipped };

const char* status_name(Status s);
Status parse_status(const std::string& s);

struct CheckResult {
  std::string id;
  std::string paper_ref;
  Status status = Status::Skipped;
  std::string details;
  nlohmann::ordered_json artifacts;  // null when absent
};

struct AuditReport {
  CartanType type;
  std::vector<CheckResult> checks;

  bool any_failed() const;
  const CheckResult* find(const std::string& id) const;
  nlohmann::ordered_json to_json() const;
  static AuditReport from_json(const nlohmann::ordered_json& j);
  std::string to_markdown() const;
};

/// Everything computed for one type, shared by the checks.
struct TypeContext {
  std::shared_ptr<const WeylGroup> group;
  KLData kl;
  std::vector<int> a;
  CellPartition cells;
  NearInvolutionSet near_inv;
  JRing jring;
  WCharTable table;
  std::vector<HModule> modules;
  LeadingData leading;
  TypeTables tables;
  std::optional<std::map<ElemId, DeltaPoly>> deltas;
  std::string deltas_error;  // why deltas is empty when the type has M_w data
  std::filesystem::path data_dir;

  const WeylGroup& g() const { return *group; }
  static TypeContext build(const CartanType& type, const std::filesystem::path& data_dir, Exec exec);
};

CheckResult check_bookkeeping(const TypeContext& ctx);
CheckResult check_decomposition(const TypeContext& ctx);
CheckResult check_delta_table(const TypeContext& ctx);
CheckResult check_proximity(const TypeContext& ctx);
CheckResult check_duality(const TypeContext& ctx);
CheckResult check_a_values(const TypeContext& ctx);
CheckResult check_centrality(const TypeContext& ctx);
CheckResult check_j_criterion(const TypeContext& ctx);
CheckResult check_hecke_consistency(const TypeContext& ctx);
CheckResult check_type_a_correspondence(const TypeContext& ctx);
CheckResult check_kl_properties(const TypeContext& ctx);
CheckResult check_cells(const TypeContext& ctx);
CheckResult check_j_associativity(const TypeContext& ctx);

/// Runs every check; failures (including exceptions inside a check) become
/// report entries.
AuditReport audit_type(const TypeContext& ctx);

struct AuditOptions {
  std::filesystem::path data_dir = default_data_dir();
  Exec exec = Exec::Parallel;
};

std::vector<AuditReport> run_all(const std::vector<CartanType>& types, const AuditOptions& opts = {});

}  // namespace cellred
